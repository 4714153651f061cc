//! Level-wise search over independent point sets up to conjugacy.
//!
//! A set `S` is independent when every `s ∈ S` is moved by the pointwise
//! stabilizer of `S ∖ s`. Independent sets are closed under taking subsets, so
//! every class of size `j+1` arises by adding one point to a canonical set of
//! size `j`. The largest size reached is the height.
//!
//! A witness pair of length `k` may be taken as `(S, x)`, `(S, y)` with `S`
//! independent of size `k−1`: the pair is `(k−1)`-equivalent iff `y` lies in
//! `x^{G_(S∖s)}` for every `s`, and inequivalent iff `y ∉ x^{G_(S)}`.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use rayon::prelude::*;

use super::canon::Oracle;
use crate::error::{Error, Result};
use crate::perm::Point;

#[derive(Clone, Debug, Default)]
pub(crate) struct SearchOutcome {
    /// Largest independent set size reached.
    pub height: usize,
    /// Largest witness length found (0 when none).
    pub witness_len: usize,
    pub witness: Option<(Vec<Point>, Point, Point)>,
    /// False when the search stopped early.
    pub complete: bool,
    pub level_sizes: Vec<usize>,
}

struct NodeResult {
    witness: Option<(Point, Point)>,
    children: Vec<Vec<Point>>,
}

fn examine(oracle: &Oracle, set: &[Point]) -> Result<NodeResult> {
    let degree = oracle.degree();
    let stab = oracle.stabilizer(set)?;
    let part = stab.partition(degree);
    let mut drops = Vec::with_capacity(set.len());
    for i in 0..set.len() {
        let key: Vec<Point> = set
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &p)| p)
            .collect();
        let s = oracle.stabilizer(&key)?;
        let pt = s.partition(degree);
        drops.push((s, pt));
    }

    let mut witness = None;
    let mut classes: HashMap<Vec<Point>, (Point, Point)> = HashMap::new();
    for p in 0..degree as Point {
        let sig: Vec<Point> = drops.iter().map(|(_, pt)| pt.label(p)).collect();
        match classes.get(&sig) {
            None => {
                classes.insert(sig, (p, part.label(p)));
            }
            Some(&(x, lx)) => {
                if lx != part.label(p) {
                    witness = Some((x, p));
                    break;
                }
            }
        }
    }

    let mut children = BTreeSet::new();
    for x in part.representatives() {
        let here = part.orbit_size(x) as u128;
        if here <= 1 {
            continue;
        }
        let base = stab.order / here;
        let independent = drops
            .iter()
            .all(|(s, pt)| s.order / pt.orbit_size(x) as u128 > base);
        if independent {
            let mut child = set.to_vec();
            child.push(x);
            children.insert(oracle.canonical_set(&child)?);
        }
    }
    Ok(NodeResult {
        witness,
        children: children.into_iter().collect(),
    })
}

/// Runs the search. `max_level` caps the set size explored; `deadline`
/// stops the search between levels.
pub(crate) fn run(
    oracle: &Oracle,
    max_level: Option<usize>,
    deadline: Option<Instant>,
) -> Result<SearchOutcome> {
    let mut out = SearchOutcome {
        complete: true,
        ..Default::default()
    };
    let mut level: Vec<Vec<Point>> = vec![Vec::new()];
    let mut j = 0usize;
    loop {
        out.level_sizes.push(level.len());
        out.height = j;
        let results: Vec<Result<NodeResult>> =
            level.par_iter().map(|s| examine(oracle, s)).collect();
        let mut next: BTreeSet<Vec<Point>> = BTreeSet::new();
        let mut found: Option<(Vec<Point>, Point, Point)> = None;
        for (s, r) in level.iter().zip(results) {
            let r = r?;
            if found.is_none() {
                if let Some((x, y)) = r.witness {
                    found = Some((s.clone(), x, y));
                }
            }
            next.extend(r.children);
        }
        if let Some(w) = found {
            out.witness_len = j + 1;
            out.witness = Some(w);
        }
        if next.is_empty() {
            break;
        }
        if max_level.is_some_and(|m| j + 1 > m) || deadline.is_some_and(|d| Instant::now() > d) {
            out.complete = false;
            break;
        }
        level = next.into_iter().collect();
        j += 1;
    }
    Ok(out)
}

/// Irredundant base size: the longest chain of closed sets `cl(S) = fix(G_(S))`
/// from the fixed points of `G` to the whole domain.
pub(crate) fn ibase(oracle: &Oracle, deadline: Option<Instant>) -> Result<usize> {
    let degree = oracle.degree();
    let root = oracle.root();
    let start: Vec<Point> = (0..degree as Point).filter(|&p| root.fixes(p)).collect();
    let mut level = vec![start];
    let mut depth = 0;
    loop {
        let results: Vec<Result<Vec<Vec<Point>>>> = level
            .par_iter()
            .map(|closed| {
                let stab = oracle.stabilizer(closed)?;
                if stab.order == 1 {
                    return Ok(Vec::new());
                }
                let part = stab.partition(degree);
                let mut kids = BTreeSet::new();
                for x in part.representatives() {
                    if part.orbit_size(x) <= 1 {
                        continue;
                    }
                    let mut key = closed.clone();
                    key.push(x);
                    let inner = oracle.extend(&stab, &key)?;
                    let grown: Vec<Point> =
                        (0..degree as Point).filter(|&p| inner.fixes(p)).collect();
                    kids.insert(oracle.canonical_set(&grown)?);
                }
                Ok(kids.into_iter().collect())
            })
            .collect();
        let mut next: BTreeSet<Vec<Point>> = BTreeSet::new();
        for r in results {
            next.extend(r?);
        }
        if next.is_empty() {
            return Ok(depth);
        }
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::ResourceBound(format!(
                "irredundant base search stopped at depth {depth}"
            )));
        }
        level = next.into_iter().collect();
        depth += 1;
    }
}
