//! Pointwise stabilizers with caching, and lex-least canonical images of point sets.

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use parking_lot::RwLock;

use crate::error::Result;
use crate::perm::{Chain, Partition, Perm, PermGroup, Point};

/// Generators and order of a pointwise stabilizer.
#[derive(Debug)]
pub(crate) struct Stab {
    pub gens: Vec<Perm>,
    pub order: u128,
}

impl Stab {
    pub fn partition(&self, degree: usize) -> Partition {
        Partition::of(degree, &self.gens)
    }

    pub fn fixes(&self, p: Point) -> bool {
        self.gens.iter().all(|g| g.fixes(p))
    }
}

/// Orbit-minimum labels of a stabilizer plus a forest leading each point to its label.
struct Forest {
    stab: Arc<Stab>,
    inverses: Vec<Perm>,
    label: Vec<Point>,
    /// Generator moving the point one step closer to its label; unused at roots.
    step: Vec<u32>,
}

impl Forest {
    fn new(degree: usize, stab: Arc<Stab>) -> Forest {
        let inverses: Vec<Perm> = stab.gens.iter().map(Perm::inverse).collect();
        let mut label = vec![Point::MAX; degree];
        let mut step = vec![u32::MAX; degree];
        let mut queue = Vec::new();
        for root in 0..degree {
            if label[root] != Point::MAX {
                continue;
            }
            label[root] = root as Point;
            queue.clear();
            queue.push(root as Point);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for (j, inv) in inverses.iter().enumerate() {
                    let p = inv.image(u);
                    if label[p as usize] == Point::MAX {
                        label[p as usize] = root as Point;
                        step[p as usize] = j as u32;
                        queue.push(p);
                    }
                }
            }
        }
        Forest {
            stab,
            inverses,
            label,
            step,
        }
    }

    /// Generator indices whose product sends `p` to its label.
    fn word(&self, mut p: Point) -> Vec<usize> {
        let mut w = Vec::new();
        while self.label[p as usize] != p {
            let j = self.step[p as usize] as usize;
            w.push(j);
            p = self.stab.gens[j].image(p);
        }
        w
    }
}

/// Thread-safe cache of pointwise stabilizers keyed by sorted point lists.
pub(crate) struct Oracle {
    degree: usize,
    root: Arc<Stab>,
    stabs: RwLock<HashMap<Vec<Point>, Arc<Stab>>>,
    forests: RwLock<HashMap<Vec<Point>, Arc<Forest>>>,
    cells: AtomicUsize,
    max_cells: usize,
}

fn seed_of(key: &[Point]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &p in key {
        h ^= p as u64 + 1;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

impl Oracle {
    pub fn new(group: &PermGroup, max_cells: usize) -> Oracle {
        let gens: Vec<Perm> = group
            .gens()
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        Oracle {
            degree: group.degree(),
            root: Arc::new(Stab {
                gens,
                order: group.order(),
            }),
            stabs: RwLock::new(HashMap::new()),
            forests: RwLock::new(HashMap::new()),
            cells: AtomicUsize::new(0),
            max_cells,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn root(&self) -> Arc<Stab> {
        self.root.clone()
    }

    /// Pointwise stabilizer of the points in `key` (which must be sorted).
    pub fn stabilizer(&self, key: &[Point]) -> Result<Arc<Stab>> {
        if key.is_empty() {
            return Ok(self.root.clone());
        }
        if let Some(s) = self.stabs.read().get(key) {
            return Ok(s.clone());
        }
        let parent = self.stabilizer(&key[..key.len() - 1])?;
        self.extend(&parent, key)
    }

    /// Stabilizer of the last point of `key` inside `parent`, the stabilizer of the rest.
    pub fn extend(&self, parent: &Arc<Stab>, key: &[Point]) -> Result<Arc<Stab>> {
        if let Some(s) = self.stabs.read().get(key) {
            return Ok(s.clone());
        }
        let x = *key.last().expect("nonempty key");
        let stab = if parent.fixes(x) {
            parent.clone()
        } else {
            let chain = Chain::random(self.degree, &parent.gens, &[x], parent.order, seed_of(key))?;
            let mut gens = chain.stabilizer_gens(1);
            gens.dedup();
            let order = parent.order / chain.orbit_size(0) as u128;
            Arc::new(Stab { gens, order })
        };
        self.account(stab.gens.len());
        Ok(self
            .stabs
            .write()
            .entry(key.to_vec())
            .or_insert(stab)
            .clone())
    }

    fn account(&self, perms: usize) {
        let added = perms * self.degree + key_overhead();
        let total = self.cells.fetch_add(added, Ordering::Relaxed) + added;
        if total > self.max_cells {
            self.evict();
        }
    }

    /// Drops everything except single-point entries.
    fn evict(&self) {
        let mut stabs = self.stabs.write();
        stabs.retain(|k, _| k.len() <= 1);
        let mut forests = self.forests.write();
        forests.retain(|k, _| k.len() <= 1);
        let kept: usize = stabs
            .values()
            .map(|s| s.gens.len() * self.degree + key_overhead())
            .sum();
        self.cells.store(kept, Ordering::Relaxed);
    }

    fn forest(&self, key: &[Point]) -> Result<Arc<Forest>> {
        if let Some(f) = self.forests.read().get(key) {
            return Ok(f.clone());
        }
        let stab = self.stabilizer(key)?;
        let forest = Arc::new(Forest::new(self.degree, stab));
        self.account(forest.inverses.len() + 2);
        Ok(self
            .forests
            .write()
            .entry(key.to_vec())
            .or_insert(forest)
            .clone())
    }

    /// The lexicographically least sorted image of `set` under the group.
    pub fn canonical_set(&self, set: &[Point]) -> Result<Vec<Point>> {
        let mut states: BTreeSet<Vec<Point>> = BTreeSet::new();
        let mut start = set.to_vec();
        start.sort_unstable();
        start.dedup();
        let size = start.len();
        states.insert(start);
        let mut prefix: Vec<Point> = Vec::with_capacity(size);
        for _ in 0..size {
            let forest = self.forest(&prefix)?;
            let c = states
                .iter()
                .flat_map(|r| r.iter().map(|&p| forest.label[p as usize]))
                .min()
                .expect("nonempty states");
            let mut next: BTreeSet<Vec<Point>> = BTreeSet::new();
            for r in &states {
                for (idx, &p) in r.iter().enumerate() {
                    if forest.label[p as usize] != c {
                        continue;
                    }
                    let word = forest.word(p);
                    let mut img: Vec<Point> = r
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != idx)
                        .map(|(_, &z)| {
                            word.iter()
                                .fold(z, |acc, &j| forest.stab.gens[j].image(acc))
                        })
                        .collect();
                    img.sort_unstable();
                    next.insert(img);
                }
            }
            prefix.push(c);
            states = next;
        }
        Ok(prefix)
    }
}

fn key_overhead() -> usize {
    16
}
