//! Explicit lower-bound witness pairs `X ~_{k−1} Y`, `Y ∉ X^H`, and a verifier.

mod constructions;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, Fq};
use crate::groupaction::{tuple_equivalent, GroupDescriptor, GroupMode, GroupSpec, SemilinearElem};
use crate::linalg::Matrix;
use crate::projective::{Subspace, SubspaceTuple};

pub use constructions::{
    alpha_admissible, case_b_square_count, find_case_b_params, w_gammal, w_general_n,
    w_general_np2, w_gl_lower, w_mspaces, w_n2_case_a, w_n2_case_b, w_psl3, w_psl_lower,
};

/// Construction parameters; field elements use the integer encoding.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub p: u32,
    pub f: u32,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<Fq>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tau: Option<Fq>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<Fq>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub psi: Option<u32>,
}

/// A claimed witness pair. `witnesses[j]` maps `X ∖ x_j` onto `Y ∖ y_j`;
/// `None` leaves the element to the solver.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessPackage {
    pub tag: String,
    pub params: Params,
    pub group: GroupSpec,
    pub x: SubspaceTuple,
    pub y: SubspaceTuple,
    pub witnesses: Vec<Option<SemilinearElem>>,
}

#[derive(Serialize, Deserialize)]
struct WitnessWire {
    matrix: Matrix,
    aut: u32,
}

#[derive(Serialize, Deserialize)]
struct PackageWire {
    tag: String,
    params: Params,
    group: GroupDescriptor,
    #[serde(rename = "X")]
    x: Vec<Matrix>,
    #[serde(rename = "Y")]
    y: Vec<Matrix>,
    witnesses: Vec<Option<WitnessWire>>,
    claim_k: usize,
}

fn checked_matrix(m: &Matrix, f: &Field) -> Result<()> {
    if m.entries().iter().any(|a| a.encoding() >= f.q()) {
        return Err(Error::Parse(
            "matrix entry out of range for the field".into(),
        ));
    }
    Ok(())
}

impl WitnessPackage {
    /// `RC(H, Ω_m) ≥ k` with `k = |X|`.
    pub fn claim_k(&self) -> usize {
        self.x.len()
    }

    pub fn m(&self) -> usize {
        self.x.entry_dim()
    }

    pub fn to_json(&self) -> String {
        let wire = PackageWire {
            tag: self.tag.clone(),
            params: self.params.clone(),
            group: self.group.descriptor(),
            x: self.x.iter().map(|s| s.basis().clone()).collect(),
            y: self.y.iter().map(|s| s.basis().clone()).collect(),
            witnesses: self
                .witnesses
                .iter()
                .map(|w| {
                    w.as_ref().map(|e| WitnessWire {
                        matrix: e.g.clone(),
                        aut: e.aut,
                    })
                })
                .collect(),
            claim_k: self.claim_k(),
        };
        serde_json::to_string(&wire).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<WitnessPackage> {
        let wire: PackageWire =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let group = wire.group.build()?;
        let f = group.field().clone();
        let n = group.n();
        let subspaces = |ms: &[Matrix]| -> Result<SubspaceTuple> {
            let mut out = Vec::with_capacity(ms.len());
            for m in ms {
                checked_matrix(m, &f)?;
                if m.cols() != n {
                    return Err(Error::Parse(format!(
                        "subspace basis has {} columns, expected {n}",
                        m.cols()
                    )));
                }
                out.push(Subspace::from_basis(&f, m)?);
            }
            SubspaceTuple::new(out)
        };
        let x = subspaces(&wire.x)?;
        let y = subspaces(&wire.y)?;
        if wire.claim_k != x.len() {
            return Err(Error::Parse(format!(
                "claim_k = {} but |X| = {}",
                wire.claim_k,
                x.len()
            )));
        }
        let mut witnesses = Vec::with_capacity(wire.witnesses.len());
        for w in wire.witnesses {
            witnesses.push(match w {
                None => None,
                Some(w) => {
                    checked_matrix(&w.matrix, &f)?;
                    if w.matrix.rows() != n {
                        return Err(Error::Parse("witness matrix has the wrong size".into()));
                    }
                    Some(SemilinearElem::new(&f, w.matrix, w.aut as i64)?)
                }
            });
        }
        Ok(WitnessPackage {
            tag: wire.tag,
            params: wire.params,
            group,
            x,
            y,
            witnesses,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub index: usize,
    /// No element was supplied; the solver searched for one.
    pub solver_found: bool,
    pub member: bool,
    pub maps: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub tag: String,
    pub group: String,
    pub n: usize,
    pub q: u32,
    pub m: usize,
    pub k: usize,
    pub witnesses: Vec<WitnessCheck>,
    pub membership: bool,
    pub mapping: bool,
    pub nonequivalent: bool,
    pub passed: bool,
    pub statement: String,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        write!(
            fm,
            "{} {}_{}({}) m={} k={}: membership {}, mapping {}, non-equivalence {} => {}",
            self.tag,
            self.group,
            self.n,
            self.q,
            self.m,
            self.k,
            mark(self.membership),
            mark(self.mapping),
            mark(self.nonequivalent),
            if self.passed {
                self.statement.as_str()
            } else {
                "FAILED"
            }
        )
    }
}

fn check_one(pkg: &WitnessPackage, j: usize) -> WitnessCheck {
    let h = &pkg.group;
    let f = h.field();
    let (Ok(xs), Ok(ys)) = (pkg.x.delete_entry(j), pkg.y.delete_entry(j)) else {
        return WitnessCheck {
            index: j,
            solver_found: false,
            member: false,
            maps: false,
        };
    };
    match &pkg.witnesses[j] {
        Some(w) => {
            let member = h.contains(w).unwrap_or(false);
            let maps = w.apply_tuple(&xs, f).is_ok_and(|img| img == ys);
            WitnessCheck {
                index: j,
                solver_found: false,
                member,
                maps,
            }
        }
        None => match tuple_equivalent(h, &xs, &ys) {
            Ok(Some(w)) => {
                let member = h.contains(&w).unwrap_or(false);
                let maps = w.apply_tuple(&xs, f).is_ok_and(|img| img == ys);
                WitnessCheck {
                    index: j,
                    solver_found: true,
                    member,
                    maps,
                }
            }
            _ => WitnessCheck {
                index: j,
                solver_found: true,
                member: false,
                maps: false,
            },
        },
    }
}

/// Checks membership and the subtuple mapping of every element, and that the
/// full tuples are inequivalent. Failures are report content, not errors.
pub fn verify(pkg: &WitnessPackage) -> VerifyReport {
    let k = pkg.x.len();
    let shaped = pkg.y.len() == k
        && pkg.witnesses.len() == k
        && k >= 2
        && pkg.x.ambient_dim() == pkg.group.n()
        && pkg.y.ambient_dim() == pkg.group.n()
        && pkg.x.entry_dim() == pkg.y.entry_dim();
    let checks: Vec<WitnessCheck> = if shaped {
        (0..k).map(|j| check_one(pkg, j)).collect()
    } else {
        Vec::new()
    };
    let membership = shaped && checks.iter().all(|c| c.member);
    let mapping = shaped && checks.iter().all(|c| c.maps);
    let nonequivalent = shaped && matches!(tuple_equivalent(&pkg.group, &pkg.x, &pkg.y), Ok(None));
    let passed = membership && mapping && nonequivalent;
    let f = pkg.group.field();
    let group = pkg.group.mode().to_string();
    let statement = format!(
        "RC({}_{}({}), Omega_{}) >= {}",
        group,
        pkg.group.n(),
        f.q(),
        pkg.x.entry_dim(),
        k
    );
    VerifyReport {
        tag: pkg.tag.clone(),
        group,
        n: pkg.group.n(),
        q: f.q(),
        m: pkg.x.entry_dim(),
        k,
        witnesses: checks,
        membership,
        mapping,
        nonequivalent,
        passed,
        statement,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    GeneralN,
    N2CaseA,
    N2CaseB,
    Psl3,
    GlLower,
    GammaL,
    GeneralNp2,
    PslLower,
    MSpaces,
}

impl Construction {
    pub const ALL: [Construction; 9] = [
        Construction::GeneralN,
        Construction::N2CaseA,
        Construction::N2CaseB,
        Construction::Psl3,
        Construction::GlLower,
        Construction::GammaL,
        Construction::GeneralNp2,
        Construction::PslLower,
        Construction::MSpaces,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Construction::GeneralN => "general-n",
            Construction::N2CaseA => "n2-a",
            Construction::N2CaseB => "n2-b",
            Construction::Psl3 => "psl3",
            Construction::GlLower => "gl-lower",
            Construction::GammaL => "gammal",
            Construction::GeneralNp2 => "general-np2",
            Construction::PslLower => "psl-lower",
            Construction::MSpaces => "mspaces",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Construction> {
        Construction::ALL.into_iter().find(|c| c.tag() == tag)
    }
}

/// Inputs to a construction. `m` is only read by m-space pairs; `psi` and
/// `lambda` only by the semilinear ones.
#[derive(Clone, Debug)]
pub struct Request {
    pub group: GroupSpec,
    pub m: usize,
    pub psi: Option<u32>,
    pub lambda: Option<Fq>,
}

impl Request {
    pub fn new(group: GroupSpec) -> Request {
        Request {
            group,
            m: 1,
            psi: None,
            lambda: None,
        }
    }
}

pub fn construct(c: Construction, req: &Request) -> Result<WitnessPackage> {
    let h = &req.group;
    match c {
        Construction::GeneralN => w_general_n(h),
        Construction::N2CaseA => w_n2_case_a(h),
        Construction::N2CaseB => w_n2_case_b(h),
        Construction::Psl3 => w_psl3(h),
        Construction::GlLower => {
            if *h != GroupSpec::gl(h.n(), h.field()) {
                return Err(Error::Hypothesis("the group must be GL_n(q)".into()));
            }
            w_gl_lower(h.n(), h.field())
        }
        Construction::GammaL => w_gammal(h, req.psi, req.lambda),
        Construction::GeneralNp2 => w_general_np2(h, req.psi, req.lambda),
        Construction::PslLower => w_psl_lower(h),
        Construction::MSpaces => w_mspaces(h, req.m),
    }
}

/// Whether `(c, group, m)` satisfies the construction's hypotheses, decided
/// from group invariants independently of the constructors.
pub fn in_hypothesis(c: Construction, group: &GroupSpec, m: usize) -> bool {
    let f = group.field();
    let (n, q) = (group.n(), f.q());
    let odd = f.p() != 2;
    let all_squares = group.quotient().iter().all(|(d, _)| f.is_square(d));
    let gl = group.quotient().dets_for(0).len() == (q - 1) as usize;
    let semilinear = group.aut_index() > 1;
    match c {
        Construction::GeneralN => n >= 2 && m == 1,
        Construction::N2CaseA => n == 2 && m == 1 && q >= 8 && (!odd || !all_squares),
        Construction::N2CaseB => n == 2 && m == 1 && odd && q > 9 && all_squares,
        Construction::Psl3 => n == 3 && m == 1 && q >= 7 && (q - 1) % 3 == 0,
        Construction::GlLower => n >= 3 && m == 1 && q >= 4 && gl && !semilinear,
        Construction::GammaL => n >= 3 && m == 1 && gl && semilinear,
        Construction::GeneralNp2 => n >= 4 && m == 1 && semilinear,
        Construction::PslLower => n >= 4 && m == 1 && q >= 3 && group.det_coset_gap().is_some(),
        Construction::MSpaces => m >= 2 && n >= 2 * m,
    }
}

/// Preset groups used by the grid, with duplicates (e.g. over prime fields) removed.
pub fn preset_groups(n: usize, f: &Field) -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = Vec::new();
    for mode in [
        GroupMode::SL,
        GroupMode::GL,
        GroupMode::SigmaL,
        GroupMode::GammaL,
    ] {
        let g = GroupSpec::new(mode, n, f).expect("preset");
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// Every in-hypothesis `(construction, request)` for the given `n` and `q = p^f` values.
pub fn grid(ns: &[usize], fields: &[Field]) -> Vec<(Construction, Request)> {
    let mut out = Vec::new();
    for f in fields {
        for &n in ns {
            for g in preset_groups(n, f) {
                for c in Construction::ALL {
                    let ms: Vec<usize> = if c == Construction::MSpaces {
                        (2..=n / 2).collect()
                    } else {
                        vec![1]
                    };
                    for m in ms {
                        if in_hypothesis(c, &g, m) {
                            out.push((
                                c,
                                Request {
                                    group: g.clone(),
                                    m,
                                    psi: None,
                                    lambda: None,
                                },
                            ));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Builds and verifies every grid point in parallel; results keep grid order.
pub fn run_grid(points: &[(Construction, Request)]) -> Vec<Result<VerifyReport>> {
    points
        .par_iter()
        .map(|(c, req)| construct(*c, req).map(|p| verify(&p)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_n_small() {
        let f = Field::new(3, 1).unwrap();
        let p = w_general_n(&GroupSpec::sl(3, &f)).unwrap();
        let r = verify(&p);
        assert!(r.passed, "{r}");
        assert_eq!(r.k, 3);
    }

    #[test]
    fn tampered_first_element() {
        let f = Field::new(3, 1).unwrap();
        let mut p = w_general_n(&GroupSpec::sl(3, &f)).unwrap();
        p.witnesses[0] = Some(SemilinearElem::identity(3));
        let r = verify(&p);
        assert!(!r.passed);
        assert!(!r.witnesses[0].maps);
        assert!(r.witnesses[1..].iter().all(|c| c.maps));
    }

    #[test]
    fn json_round_trip() {
        let f = Field::new(2, 2).unwrap();
        let p = w_gammal(&GroupSpec::gamma_l(3, &f), None, None).unwrap();
        let back = WitnessPackage::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert!(verify(&back).passed);
    }
}
