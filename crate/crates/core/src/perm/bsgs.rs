//! Base and strong generating set via Schreier–Sims.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Perm, Point};
use crate::error::{Error, Result};

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;
const STALL_LIMIT: usize = 400;

#[derive(Clone, Debug)]
struct Level {
    base: Point,
    /// Indices into `Chain::strong` of generators fixing all earlier base points.
    gens: Vec<usize>,
    orbit: Vec<Point>,
    /// For `p` in the orbit: `ROOT`, or the index `j` of a strong generator with
    /// `p = r^(s_j)` for a point `r` nearer the root.
    schreier: Vec<u32>,
}

/// A stabilizer chain `G = G^(0) ≥ G^(1) ≥ … ≥ 1` with `G^(i)` the pointwise
/// stabilizer of the first `i` base points.
#[derive(Clone, Debug)]
pub struct Chain {
    degree: usize,
    levels: Vec<Level>,
    strong: Vec<Perm>,
    strong_inv: Vec<Perm>,
}

impl Chain {
    fn empty(degree: usize, base: &[Point]) -> Chain {
        let mut c = Chain {
            degree,
            levels: Vec::new(),
            strong: Vec::new(),
            strong_inv: Vec::new(),
        };
        for &b in base {
            c.push_level(b);
        }
        c
    }

    fn push_level(&mut self, b: Point) {
        let mut schreier = vec![NOT_IN_ORBIT; self.degree];
        schreier[b as usize] = ROOT;
        self.levels.push(Level {
            base: b,
            gens: Vec::new(),
            orbit: vec![b],
            schreier,
        });
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<Point> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn orbit_size(&self, level: usize) -> usize {
        self.levels[level].orbit.len()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Generators of the pointwise stabilizer of the first `level` base points.
    pub fn stabilizer_gens(&self, level: usize) -> Vec<Perm> {
        if level >= self.levels.len() {
            return Vec::new();
        }
        self.levels[level]
            .gens
            .iter()
            .map(|&j| self.strong[j].clone())
            .collect()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (res, _) = self.sift(g.clone(), 0);
        res.is_identity()
    }

    /// Strips `g` through levels `from..`; returns the residue and the level it stopped at.
    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (i, lvl) in self.levels.iter().enumerate().skip(from) {
            let mut p = g.image(lvl.base);
            if lvl.schreier[p as usize] == NOT_IN_ORBIT {
                return (g, i);
            }
            while lvl.schreier[p as usize] != ROOT {
                let j = lvl.schreier[p as usize] as usize;
                g = g.compose(&self.strong_inv[j]);
                p = self.strong_inv[j].image(p);
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    /// Transversal element `u` with `base^u = p`.
    fn transversal(&self, level: usize, mut p: Point) -> Perm {
        let lvl = &self.levels[level];
        let mut word = Vec::new();
        while lvl.schreier[p as usize] != ROOT {
            let j = lvl.schreier[p as usize] as usize;
            word.push(j);
            p = self.strong_inv[j].image(p);
        }
        let mut u = Perm::identity(self.degree);
        for &j in word.iter().rev() {
            u = u.compose(&self.strong[j]);
        }
        u
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let lvl = &mut self.levels[level];
        for &p in &lvl.orbit {
            lvl.schreier[p as usize] = NOT_IN_ORBIT;
        }
        lvl.schreier[lvl.base as usize] = ROOT;
        lvl.orbit.clear();
        lvl.orbit.push(lvl.base);
        let mut head = 0;
        while head < lvl.orbit.len() {
            let p = lvl.orbit[head];
            head += 1;
            for &j in &lvl.gens {
                let r = self.strong[j].image(p);
                if lvl.schreier[r as usize] == NOT_IN_ORBIT {
                    lvl.schreier[r as usize] = j as u32;
                    lvl.orbit.push(r);
                }
            }
        }
    }

    /// Adds a nontrivial residue fixing the first `drop` base points.
    fn add_strong(&mut self, h: Perm, drop: usize) {
        if drop == self.levels.len() {
            let b = h.first_moved().expect("nontrivial residue");
            self.push_level(b);
        }
        let j = self.strong.len();
        self.strong_inv.push(h.inverse());
        self.strong.push(h);
        for i in 0..=drop {
            self.levels[i].gens.push(j);
            self.rebuild_orbit(i);
        }
    }

    fn absorb(&mut self, g: &Perm) -> bool {
        let (res, drop) = self.sift(g.clone(), 0);
        if res.is_identity() {
            return false;
        }
        self.add_strong(res, drop);
        true
    }

    /// Closes the chain under Schreier generators, making it a complete BSGS.
    fn complete(&mut self) {
        'outer: loop {
            for i in (0..self.levels.len()).rev() {
                let orbit = self.levels[i].orbit.clone();
                let gens = self.levels[i].gens.clone();
                for &p in &orbit {
                    let up = self.transversal(i, p);
                    for &j in &gens {
                        let s = &self.strong[j];
                        let ps = s.image(p);
                        let back = self.transversal(i, ps).inverse();
                        let sg = up.compose(s).compose(&back);
                        if sg.is_identity() {
                            continue;
                        }
                        let (res, drop) = self.sift(sg, i + 1);
                        if !res.is_identity() {
                            self.add_strong(res, drop);
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
    }

    /// Deterministic Schreier–Sims with the given base prefix.
    pub fn deterministic(degree: usize, gens: &[Perm], base_prefix: &[Point]) -> Chain {
        let mut c = Chain::empty(degree, base_prefix);
        for g in gens {
            c.absorb(g);
        }
        c.complete();
        c
    }

    /// Random Schreier–Sims for a group of known order. The chain begins with
    /// `base_prefix`; sifting stops once the orbit lengths multiply to `order`.
    pub fn random(
        degree: usize,
        gens: &[Perm],
        base_prefix: &[Point],
        order: u128,
        seed: u64,
    ) -> Result<Chain> {
        let mut c = Chain::empty(degree, base_prefix);
        for g in gens {
            c.absorb(g);
        }
        let live: Vec<&Perm> = gens.iter().filter(|g| !g.is_identity()).collect();
        if live.is_empty() || c.order() == order {
            return c.checked(order);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pool: Vec<Perm> = (0..live.len().max(10))
            .map(|i| live[i % live.len()].clone())
            .collect();
        let mut acc = Perm::identity(degree);
        let step = |rng: &mut ChaCha8Rng, pool: &mut Vec<Perm>, acc: &mut Perm| {
            let k = pool.len();
            let i = rng.gen_range(0..k);
            let mut j = rng.gen_range(0..k - 1);
            if j >= i {
                j += 1;
            }
            pool[i] = if rng.gen_bool(0.5) {
                pool[i].compose(&pool[j])
            } else {
                pool[i].compose(&pool[j].inverse())
            };
            *acc = acc.compose(&pool[i]);
        };
        for _ in 0..50 {
            step(&mut rng, &mut pool, &mut acc);
        }
        let mut stall = 0;
        while c.order() < order {
            step(&mut rng, &mut pool, &mut acc);
            if c.absorb(&acc) {
                stall = 0;
            } else {
                stall += 1;
                if stall > STALL_LIMIT {
                    c.complete();
                    break;
                }
            }
        }
        c.checked(order)
    }

    fn checked(self, order: u128) -> Result<Chain> {
        if self.order() != order {
            return Err(Error::Hypothesis(format!(
                "group order {} differs from the expected {}",
                self.order(),
                order
            )));
        }
        Ok(self)
    }
}
