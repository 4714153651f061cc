//! Relational complexity, height and irredundant base size of a group acting
//! on `Ω_m`, plus closed-form bounds.

mod bounds;
mod bruteforce;
mod canon;
mod search;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupaction::{tuple_equivalent, GroupSpec};
use crate::linalg::Matrix;
use crate::perm::{Perm, PermGroup, Point};
use crate::projective::{enumerate_omega, gaussian_binomial, Subspace, SubspaceTuple};

pub use bounds::{omega_primes, theorem_bounds, BoundSources, Bounds};
pub use bruteforce::{rc_bruteforce_perm, TUPLE_LIMIT};

/// Limits on materializing `Ω_m`.
#[derive(Clone, Copy, Debug)]
pub struct ActionLimits {
    pub max_points: usize,
    /// Bound on generators × points in the image table.
    pub max_table_cells: usize,
    /// Rough cap on cached permutation cells before the stabilizer cache is trimmed.
    pub max_cache_cells: usize,
}

impl Default for ActionLimits {
    fn default() -> Self {
        ActionLimits {
            max_points: 20_000,
            max_table_cells: 10_000_000,
            max_cache_cells: 200_000_000,
        }
    }
}

/// A group acting on a finite set by permutations, optionally realised as
/// `H` acting on the m-subspaces of `F_q^n`.
pub struct ActionHandle {
    group: Option<GroupSpec>,
    m: usize,
    points: Vec<Subspace>,
    index: HashMap<Subspace, Point>,
    perms: PermGroup,
    oracle: canon::Oracle,
}

impl std::fmt::Debug for ActionHandle {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.debug_struct("ActionHandle")
            .field("group", &self.group)
            .field("m", &self.m)
            .field("degree", &self.perms.degree())
            .finish()
    }
}

impl ActionHandle {
    pub fn new(group: &GroupSpec, m: usize) -> Result<ActionHandle> {
        ActionHandle::with_limits(group, m, ActionLimits::default())
    }

    pub fn with_limits(group: &GroupSpec, m: usize, limits: ActionLimits) -> Result<ActionHandle> {
        let n = group.n();
        let f = group.field();
        if m == 0 || m >= n {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= m < n, got m = {m}, n = {n}"
            )));
        }
        let count = gaussian_binomial(n, m, f.q() as u64);
        if count > limits.max_points as u128 {
            return Err(Error::ResourceBound(format!(
                "|Omega_{m}| = {count} exceeds {}",
                limits.max_points
            )));
        }
        let gens = group.compact_generators();
        if gens.len() as u128 * count > limits.max_table_cells as u128 {
            return Err(Error::ResourceBound(
                "generator image table too large".into(),
            ));
        }
        let order = u128::try_from(&group.projective_order())
            .map_err(|_| Error::ResourceBound("group order exceeds 128 bits".into()))?;
        let points = enumerate_omega(f, n, m, limits.max_points)?;
        let index: HashMap<Subspace, Point> = points
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as Point))
            .collect();
        let mut perms = Vec::with_capacity(gens.len());
        for x in &gens {
            let images = points
                .iter()
                .map(|s| x.apply(s, f).map(|t| index[&t]))
                .collect::<Result<Vec<Point>>>()?;
            let p = Perm::from_images(images)?;
            if !p.is_identity() && !perms.contains(&p) {
                perms.push(p);
            }
        }
        let perms = PermGroup::with_order(points.len(), perms, order)?;
        let oracle = canon::Oracle::new(&perms, limits.max_cache_cells);
        Ok(ActionHandle {
            group: Some(group.clone()),
            m,
            points,
            index,
            perms,
            oracle,
        })
    }

    /// A bare permutation action; the order is computed deterministically.
    pub fn from_permutations(degree: usize, gens: Vec<Perm>) -> Result<ActionHandle> {
        let perms = PermGroup::new(degree, gens)?;
        let oracle = canon::Oracle::new(&perms, ActionLimits::default().max_cache_cells);
        Ok(ActionHandle {
            group: None,
            m: 0,
            points: Vec::new(),
            index: HashMap::new(),
            perms,
            oracle,
        })
    }

    pub fn group(&self) -> Option<&GroupSpec> {
        self.group.as_ref()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.perms.degree()
    }

    pub fn perm_group(&self) -> &PermGroup {
        &self.perms
    }

    /// Points of `Ω_m` in canonical order (empty for bare permutation actions).
    pub fn points(&self) -> &[Subspace] {
        &self.points
    }

    pub fn index_of(&self, s: &Subspace) -> Option<Point> {
        self.index.get(s).copied()
    }
}

/// Whether all `r`-subtuples of `x` and `y` are `H`-equivalent; for `r ≥ k`
/// this is plain equivalence.
pub fn r_equivalent(
    group: &GroupSpec,
    x: &SubspaceTuple,
    y: &SubspaceTuple,
    r: usize,
) -> Result<bool> {
    let k = x.len();
    if y.len() != k {
        return Err(Error::DimensionMismatch(
            "tuples of different lengths".into(),
        ));
    }
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    if r >= k {
        return Ok(tuple_equivalent(group, x, y)?.is_some());
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if tuple_equivalent(group, &x.subtuple(&idx)?, &y.subtuple(&idx)?)?.is_none() {
            return Ok(false);
        }
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            if idx[i] < k - r + i {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RcOptions {
    /// Largest independent-set size explored; stops the search early when reached.
    pub max_level: Option<usize>,
    pub budget: Option<Duration>,
    pub ibase: bool,
    /// Record wall-clock time in the report. Off gives byte-reproducible output.
    pub timings: bool,
}

/// A witness pair `X ~_{k−1} Y`, `Y ∉ X^H`, as point indices and subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub k: usize,
    pub points_x: Vec<Point>,
    pub points_y: Vec<Point>,
    #[serde(rename = "X")]
    pub x: Vec<Matrix>,
    #[serde(rename = "Y")]
    pub y: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RcReport {
    pub group: String,
    pub n: usize,
    pub p: u32,
    pub f: u32,
    pub m: usize,
    pub degree: usize,
    pub order: String,
    /// Exact value, when the search finished.
    pub rc: Option<usize>,
    /// Best lower bound from witnesses found.
    pub rc_lower: usize,
    pub witness: Option<WitnessPair>,
    pub height: Option<usize>,
    pub ibase: Option<usize>,
    pub bounds: Bounds,
    pub ceiling_used: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl RcReport {
    /// `[lower, upper]` combining witnesses with the closed-form upper bound.
    pub fn interval(&self) -> (usize, Option<usize>) {
        match self.rc {
            Some(v) => (v, Some(v)),
            None => (self.rc_lower.max(self.bounds.lower), self.bounds.upper),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Relational complexity by the independent-set search. Stops early when the
/// budget or level cap is hit; the report then carries only an interval.
pub fn rc_compute(handle: &ActionHandle, opts: &RcOptions) -> Result<RcReport> {
    let start = Instant::now();
    let deadline = opts.budget.map(|b| start + b);
    let outcome = search::run(&handle.oracle, opts.max_level, deadline)?;
    let rc_lower = outcome.witness_len.max(1);
    let bounds = match &handle.group {
        Some(g) => theorem_bounds(g, handle.m),
        None => Bounds {
            lower: 1,
            upper: None,
            sources: BoundSources {
                lower: "definition".into(),
                upper: None,
            },
            diagnostic: Some("bare permutation action".into()),
        },
    };
    let witness = outcome.witness.as_ref().map(|(set, x, y)| {
        let mut px = set.clone();
        px.push(*x);
        let mut py = set.clone();
        py.push(*y);
        let mats = |pts: &[Point]| -> Vec<Matrix> {
            if handle.points.is_empty() {
                Vec::new()
            } else {
                pts.iter()
                    .map(|&p| handle.points[p as usize].basis().clone())
                    .collect()
            }
        };
        WitnessPair {
            k: px.len(),
            x: mats(&px),
            y: mats(&py),
            points_x: px,
            points_y: py,
        }
    });
    let ceiling_used = if outcome.complete {
        outcome.height + 1
    } else {
        let cap = opts.max_level.map_or(usize::MAX, |m| m + 1);
        bounds
            .upper
            .map_or(cap, |u| u.min(cap))
            .max(outcome.height + 1)
    };
    let ibase = if opts.ibase {
        match search::ibase(&handle.oracle, deadline) {
            Err(Error::ResourceBound(_)) => None,
            r => Some(r?),
        }
    } else {
        None
    };
    let (name, n, p, f) = match &handle.group {
        Some(g) => (
            g.mode().to_string(),
            g.n(),
            g.field().p(),
            g.field().degree(),
        ),
        None => ("permutation".to_string(), 0, 0, 0),
    };
    Ok(RcReport {
        group: name,
        n,
        p,
        f,
        m: handle.m,
        degree: handle.degree(),
        order: handle.perms.order().to_string(),
        rc: outcome.complete.then_some(rc_lower),
        rc_lower,
        witness,
        height: outcome.complete.then_some(outcome.height),
        ibase,
        bounds,
        ceiling_used,
        elapsed_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Largest set each of whose points strictly shrinks the pointwise stabilizer.
pub fn height_compute(handle: &ActionHandle) -> Result<usize> {
    Ok(search::run(&handle.oracle, None, None)?.height)
}

/// Longest strictly decreasing chain of pointwise stabilizers ending at 1.
pub fn ibase_compute(handle: &ActionHandle) -> Result<usize> {
    ibase_with_budget(handle, None)
}

pub fn ibase_with_budget(handle: &ActionHandle, budget: Option<Duration>) -> Result<usize> {
    // Permutation groups act faithfully by construction; `Ω_m` actions are
    // built from the projective group, which is faithful for 1 ≤ m < n.
    if handle
        .group
        .as_ref()
        .is_some_and(|g| handle.m == 0 || handle.m >= g.n())
    {
        return Err(Error::NotFaithful);
    }
    search::ibase(&handle.oracle, budget.map(|b| Instant::now() + b))
}

/// The definition applied literally to all tuples of length at most `k_max`.
pub fn rc_bruteforce(handle: &ActionHandle, k_max: usize) -> Result<usize> {
    rc_bruteforce_perm(&handle.perms, k_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn pgl23() {
        let f = Field::new(3, 1).unwrap();
        let h = ActionHandle::new(&GroupSpec::gl(2, &f), 1).unwrap();
        assert_eq!(h.degree(), 4);
        assert_eq!(h.perm_group().order(), 24);
        let r = rc_compute(
            &h,
            &RcOptions {
                ibase: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.rc, Some(2));
        assert_eq!(r.height, Some(3));
        assert_eq!(r.ibase, Some(3));
        assert_eq!(rc_bruteforce(&h, 4).unwrap(), 2);
    }

    #[test]
    fn pgl25_height() {
        let f = Field::new(5, 1).unwrap();
        let h = ActionHandle::new(&GroupSpec::gl(2, &f), 1).unwrap();
        let r = rc_compute(
            &h,
            &RcOptions {
                ibase: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!((r.rc, r.height, r.ibase), (Some(4), Some(3), Some(3)));
    }

    #[test]
    fn trivial_and_symmetric() {
        let h = ActionHandle::from_permutations(2, vec![]).unwrap();
        assert_eq!(rc_compute(&h, &RcOptions::default()).unwrap().rc, Some(1));
        assert_eq!(height_compute(&h).unwrap(), 0);
        let s3 = ActionHandle::from_permutations(
            3,
            vec![
                Perm::from_images(vec![1, 2, 0]).unwrap(),
                Perm::from_images(vec![1, 0, 2]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(rc_compute(&s3, &RcOptions::default()).unwrap().rc, Some(2));
    }

    #[test]
    fn r_equivalence_of_frame_tuples() {
        let f = Field::new(3, 1).unwrap();
        let n = 3;
        let h = GroupSpec::gamma_l(n, &f);
        let line = |v: [u32; 3]| {
            Subspace::span(&f, &[v.iter().map(|&c| f.elem(c).unwrap()).collect()]).unwrap()
        };
        let x =
            SubspaceTuple::new(vec![line([1, 0, 0]), line([0, 1, 0]), line([1, 1, 1])]).unwrap();
        let y =
            SubspaceTuple::new(vec![line([1, 0, 0]), line([0, 1, 0]), line([1, 1, 0])]).unwrap();
        assert!(r_equivalent(&h, &x, &y, n - 1).unwrap());
        assert!(!r_equivalent(&h, &x, &y, n).unwrap());
        assert!(r_equivalent(&h, &x, &x, 1).unwrap());
    }
}
