//! Relational complexity straight from the definition, for tiny actions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// Largest number of k-tuples the oracle will enumerate.
pub const TUPLE_LIMIT: u64 = 2_000_000;

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let p = self.0[x as usize];
            self.0[x as usize] = self.0[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi as usize] = lo;
        }
    }
}

/// Orbit label of every k-tuple, tuples encoded base `degree` with the first entry most significant.
fn tuple_orbits(group: &PermGroup, k: usize) -> Vec<u32> {
    let d = group.degree();
    let total = d.pow(k as u32);
    let mut uf = UnionFind((0..total as u32).collect());
    let mut digits = vec![0usize; k];
    for g in group.gens() {
        for t in 0..total {
            let mut r = t;
            for i in (0..k).rev() {
                digits[i] = r % d;
                r /= d;
            }
            let img = digits
                .iter()
                .fold(0usize, |acc, &p| acc * d + g.image(p as u16) as usize);
            uf.union(t as u32, img as u32);
        }
    }
    (0..total as u32).map(|t| uf.find(t)).collect()
}

fn subsets(k: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    if r > k {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < k - r + i {
                cur[i] += 1;
                for j in i + 1..r {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Smallest `r` such that, for every `k ≤ k_max`, r-equivalent k-tuples are equivalent.
pub fn rc_bruteforce_perm(group: &PermGroup, k_max: usize) -> Result<usize> {
    let d = group.degree() as u64;
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be positive".into()));
    }
    if d.checked_pow(k_max as u32).is_none_or(|t| t > TUPLE_LIMIT) {
        return Err(Error::ResourceBound(format!(
            "{d}^{k_max} tuples exceed the oracle limit"
        )));
    }
    let orbits: Vec<Vec<u32>> = (0..=k_max)
        .map(|k| {
            if k == 0 {
                vec![0]
            } else {
                tuple_orbits(group, k)
            }
        })
        .collect();
    // fails[r] = some pair of k-tuples, r < k ≤ k_max, is r-equivalent but not equivalent
    let mut fails = vec![false; k_max + 1];
    let du = d as usize;
    for k in 2..=k_max {
        let total = du.pow(k as u32);
        for r in 1..k {
            if fails[r] {
                continue;
            }
            let subs = subsets(k, r);
            let mut classes: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut digits = vec![0usize; k];
            for t in 0..total {
                let mut rem = t;
                for i in (0..k).rev() {
                    digits[i] = rem % du;
                    rem /= du;
                }
                let sig: Vec<u32> = subs
                    .iter()
                    .map(|idx| orbits[r][idx.iter().fold(0usize, |acc, &i| acc * du + digits[i])])
                    .collect();
                let mine = orbits[k][t];
                match classes.get(&sig) {
                    None => {
                        classes.insert(sig, mine);
                    }
                    Some(&o) if o != mine => {
                        fails[r] = true;
                        break;
                    }
                    _ => {}
                }
            }
        }
    }
    Ok((1..k_max).find(|&r| !fails[r]).unwrap_or(k_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn p(v: &[u16]) -> Perm {
        Perm::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn small_groups() {
        let s3 = PermGroup::new(3, vec![p(&[1, 2, 0]), p(&[1, 0, 2])]).unwrap();
        assert_eq!(rc_bruteforce_perm(&s3, 4).unwrap(), 2);
        let trivial = PermGroup::new(2, vec![]).unwrap();
        assert_eq!(rc_bruteforce_perm(&trivial, 3).unwrap(), 1);
        let a4 = PermGroup::new(4, vec![p(&[1, 2, 0, 3]), p(&[0, 2, 3, 1])]).unwrap();
        assert_eq!(rc_bruteforce_perm(&a4, 4).unwrap(), 3);
        let c4 = PermGroup::new(4, vec![p(&[1, 2, 3, 0])]).unwrap();
        assert_eq!(rc_bruteforce_perm(&c4, 4).unwrap(), 2);
    }

    #[test]
    fn subset_lists() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
    }
}
