//! Semilinear group elements and groups `SL_n(q) ⊴ H ≤ ΓL_n(q)`.
//!
//! An element `(g, i)` acts on row vectors by `v ↦ (v·g)^(φ^i)`, where `φ`
//! is the Frobenius map applied entrywise. Composition (first `x`, then `y`)
//! is `(g, i)·(h, j) = (g·h^(φ^-i), i + j)`.
//!
//! Because `SL_n(q)` is normal in `H`, membership of `(g, i)` depends only
//! on the pair `(det g, i)`. The set of such pairs realised by `H` is a
//! subgroup of `F* ⋊ Z_f` and is stored as [`Quotient`].

mod equiv;
mod genfile;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, Fq};
use crate::linalg::{Matrix, Vector};
use crate::projective::{Subspace, SubspaceTuple};

pub use equiv::{diagonal_mapping_space, tuple_equivalent, DiagonalSpace, SEARCH_LIMIT};
pub use genfile::{format_generators, parse_generators};

/// An element `g·φ^aut` of `ΓL_n(q)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SemilinearElem {
    pub g: Matrix,
    pub aut: u32,
}

impl SemilinearElem {
    pub fn new(f: &Field, g: Matrix, aut: i64) -> Result<SemilinearElem> {
        if !g.is_square() {
            return Err(Error::DimensionMismatch(
                "semilinear element needs a square matrix".into(),
            ));
        }
        if g.det(f)?.is_zero() {
            return Err(Error::Singular);
        }
        Ok(SemilinearElem {
            g,
            aut: aut.rem_euclid(f.degree() as i64) as u32,
        })
    }

    pub fn linear(f: &Field, g: Matrix) -> Result<SemilinearElem> {
        SemilinearElem::new(f, g, 0)
    }

    pub fn identity(n: usize) -> SemilinearElem {
        SemilinearElem {
            g: Matrix::identity(n),
            aut: 0,
        }
    }

    /// The pure field automorphism `φ^i`.
    pub fn frobenius(f: &Field, n: usize, i: i64) -> SemilinearElem {
        SemilinearElem {
            g: Matrix::identity(n),
            aut: i.rem_euclid(f.degree() as i64) as u32,
        }
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn det(&self, f: &Field) -> Fq {
        self.g.det(f).expect("square")
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &SemilinearElem, f: &Field) -> Result<SemilinearElem> {
        let twisted = other.g.frobenius(-(self.aut as i64), f);
        let g = self.g.mul(&twisted, f)?;
        Ok(SemilinearElem {
            g,
            aut: (self.aut + other.aut) % f.degree(),
        })
    }

    pub fn inverse(&self, f: &Field) -> SemilinearElem {
        let ginv = self.g.inverse(f).expect("invertible");
        let aut = (f.degree() - self.aut) % f.degree();
        SemilinearElem {
            g: ginv.frobenius(self.aut as i64, f),
            aut,
        }
    }

    pub fn apply_vec(&self, v: &[Fq], f: &Field) -> Result<Vector> {
        let w = self.g.vec_mul(v, f)?;
        Ok(w.into_iter()
            .map(|a| f.frobenius(a, self.aut as i64))
            .collect())
    }

    pub fn apply(&self, s: &Subspace, f: &Field) -> Result<Subspace> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "element of degree {} on a subspace of F^{}",
                self.dim(),
                s.ambient_dim()
            )));
        }
        let img = s.basis().mul(&self.g, f)?.frobenius(self.aut as i64, f);
        Subspace::from_basis(f, &img)
    }

    pub fn apply_tuple(&self, x: &SubspaceTuple, f: &Field) -> Result<SubspaceTuple> {
        SubspaceTuple::new(x.iter().map(|s| self.apply(s, f)).collect::<Result<_>>()?)
    }

    /// Representative of `self` modulo scalars: the first nonzero entry of the
    /// first row is 1.
    pub fn projective_normal(&self, f: &Field) -> SemilinearElem {
        let lead = self
            .g
            .row(0)
            .iter()
            .copied()
            .find(|a| !a.is_zero())
            .expect("invertible");
        let c = f.inv(lead).expect("nonzero");
        SemilinearElem {
            g: self.g.scale(c, f),
            aut: self.aut,
        }
    }
}

/// Whether `x` and `y` agree modulo scalar matrices.
pub fn projective_equal(x: &SemilinearElem, y: &SemilinearElem, f: &Field) -> bool {
    x.aut == y.aut && x.projective_normal(f) == y.projective_normal(f)
}

/// `|SL_n(q)| = q^(n(n-1)/2) · Π_{i=2..n} (q^i - 1)`.
pub fn sl_order(n: usize, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let mut out = q.pow((n * (n - 1) / 2) as u32);
    for i in 2..=n {
        out *= q.pow(i as u32) - 1u32;
    }
    out
}

/// Subgroup of `F* ⋊ Z_f` holding the pairs `(det g, i)` of elements of `H`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quotient {
    elements: BTreeSet<(Fq, u32)>,
}

impl Quotient {
    fn mul(f: &Field, a: (Fq, u32), b: (Fq, u32)) -> (Fq, u32) {
        let twisted = f.frobenius(b.0, -(a.1 as i64));
        (f.mul(a.0, twisted), (a.1 + b.1) % f.degree())
    }

    pub fn closure(f: &Field, gens: &[(Fq, u32)]) -> Quotient {
        let id = (Fq::ONE, 0);
        let mut elements = BTreeSet::from([id]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = Quotient::mul(f, x, (g.0, g.1 % f.degree()));
                if elements.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Quotient { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, det: Fq, aut: u32) -> bool {
        self.elements.contains(&(det, aut))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Fq, u32)> + '_ {
        self.elements.iter().copied()
    }

    /// Field-automorphism exponents occurring in `H`, ascending.
    pub fn aut_exponents(&self) -> Vec<u32> {
        let s: BTreeSet<u32> = self.elements.iter().map(|&(_, i)| i).collect();
        s.into_iter().collect()
    }

    /// Determinants `a` with `(a, i)` in the quotient, ascending.
    pub fn dets_for(&self, aut: u32) -> Vec<Fq> {
        self.elements
            .iter()
            .filter(|&&(_, i)| i == aut)
            .map(|&(a, _)| a)
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupMode {
    SL,
    GL,
    SigmaL,
    GammaL,
    /// `⟨SL, diag(ω^d, 1, …, 1), φ^(f/e)⟩`.
    Parametric {
        d: u32,
        e: u32,
    },
    /// `⟨SL, generators⟩`.
    Explicit(Vec<SemilinearElem>),
}

impl fmt::Display for GroupMode {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupMode::SL => write!(fm, "SL"),
            GroupMode::GL => write!(fm, "GL"),
            GroupMode::SigmaL => write!(fm, "SigmaL"),
            GroupMode::GammaL => write!(fm, "GammaL"),
            GroupMode::Parametric { d, e } => write!(fm, "param:{d},{e}"),
            GroupMode::Explicit(g) => write!(fm, "explicit[{}]", g.len()),
        }
    }
}

/// A group `H` with `SL_n(q) ⊴ H ≤ ΓL_n(q)`.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    n: usize,
    field: Field,
    mode: GroupMode,
    quotient: Quotient,
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.field == other.field && self.quotient == other.quotient
    }
}

impl GroupSpec {
    pub fn new(mode: GroupMode, n: usize, field: &Field) -> Result<GroupSpec> {
        if n < 1 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        let f = field;
        let deg = f.degree();
        let gens: Vec<(Fq, u32)> = match &mode {
            GroupMode::SL => vec![],
            GroupMode::GL => vec![(f.omega(), 0)],
            GroupMode::SigmaL => vec![(Fq::ONE, 1 % deg)],
            GroupMode::GammaL => vec![(f.omega(), 0), (Fq::ONE, 1 % deg)],
            GroupMode::Parametric { d, e } => {
                let qm1 = f.q() - 1;
                if *d == 0 || !qm1.is_multiple_of(*d) {
                    return Err(Error::InvalidArgument(format!(
                        "d = {d} does not divide q - 1 = {qm1}"
                    )));
                }
                if *e == 0 || !deg.is_multiple_of(*e) {
                    return Err(Error::InvalidArgument(format!(
                        "e = {e} does not divide f = {deg}"
                    )));
                }
                vec![(f.omega_pow(*d as i64), 0), (Fq::ONE, (deg / e) % deg)]
            }
            GroupMode::Explicit(elems) => {
                let mut out = Vec::with_capacity(elems.len());
                for x in elems {
                    if x.dim() != n {
                        return Err(Error::DimensionMismatch(format!(
                            "generator of degree {} for n = {n}",
                            x.dim()
                        )));
                    }
                    let det = x.g.det(f)?;
                    if det.is_zero() {
                        return Err(Error::Singular);
                    }
                    out.push((det, x.aut % deg));
                }
                out
            }
        };
        let quotient = Quotient::closure(f, &gens);
        Ok(GroupSpec {
            n,
            field: f.clone(),
            mode,
            quotient,
        })
    }

    pub fn sl(n: usize, f: &Field) -> GroupSpec {
        GroupSpec::new(GroupMode::SL, n, f).expect("valid")
    }

    pub fn gl(n: usize, f: &Field) -> GroupSpec {
        GroupSpec::new(GroupMode::GL, n, f).expect("valid")
    }

    pub fn sigma_l(n: usize, f: &Field) -> GroupSpec {
        GroupSpec::new(GroupMode::SigmaL, n, f).expect("valid")
    }

    pub fn gamma_l(n: usize, f: &Field) -> GroupSpec {
        GroupSpec::new(GroupMode::GammaL, n, f).expect("valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn mode(&self) -> &GroupMode {
        &self.mode
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn contains(&self, x: &SemilinearElem) -> Result<bool> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "element of degree {} for n = {}",
                x.dim(),
                self.n
            )));
        }
        let det = x.g.det(&self.field)?;
        if det.is_zero() {
            return Ok(false);
        }
        Ok(self.quotient.contains(det, x.aut % self.field.degree()))
    }

    pub fn order(&self) -> BigUint {
        sl_order(self.n, self.field.q() as u64) * BigUint::from(self.quotient.len())
    }

    /// Number of scalar matrices in `H`.
    pub fn scalar_count(&self) -> usize {
        let f = &self.field;
        f.units()
            .filter(|&l| {
                self.quotient
                    .contains(f.pow(l, self.n as i64).expect("unit"), 0)
            })
            .count()
    }

    /// `|H / (H ∩ Z)|`.
    pub fn projective_order(&self) -> BigUint {
        self.order() / BigUint::from(self.scalar_count())
    }

    /// `e = |H : H ∩ GL_n(q)|`.
    pub fn aut_index(&self) -> u32 {
        self.quotient.aut_exponents().len() as u32
    }

    /// Whether `H·Z ⊇ GL_n(q)`, i.e. the projective image contains `PGL_n(q)`.
    pub fn contains_pgl(&self) -> bool {
        let f = &self.field;
        let n = self.n as i64;
        let mut reach: BTreeSet<Fq> = BTreeSet::new();
        for a in self.quotient.dets_for(0) {
            for l in f.units() {
                reach.insert(f.mul(a, f.pow(l, n).expect("unit")));
            }
        }
        reach.len() == (f.q() - 1) as usize
    }

    /// Whether every element is a scalar times an element of `ΣL_n(q)`.
    pub fn within_sigma_l(&self) -> bool {
        let f = &self.field;
        self.quotient
            .iter()
            .all(|(a, _)| f.is_kth_power(a, self.n as u64).expect("unit"))
    }

    /// Smallest `α ∈ F*` outside `{det(g z)^ψ : gψ ∈ H, z ∈ Z}`, if any.
    pub fn det_coset_gap(&self) -> Option<Fq> {
        let f = &self.field;
        let n = self.n as i64;
        let mut reach: BTreeSet<Fq> = BTreeSet::new();
        for (a, i) in self.quotient.iter() {
            for l in f.units() {
                let d = f.mul(a, f.pow(l, n).expect("unit"));
                reach.insert(f.frobenius(d, i as i64));
            }
        }
        f.units().find(|a| !reach.contains(a))
    }

    /// Generators of `H`: transvections `id + ω^k E_ij` for `SL`, plus lifts of
    /// the quotient generators (or the explicit generators).
    pub fn generators(&self) -> Vec<SemilinearElem> {
        self.generators_with(false)
    }

    /// A smaller generating set: only transvections `id + ω^k E_ij` with
    /// `|i − j| = 1`, which already generate `SL_n(q)`.
    pub fn compact_generators(&self) -> Vec<SemilinearElem> {
        self.generators_with(true)
    }

    fn generators_with(&self, adjacent: bool) -> Vec<SemilinearElem> {
        let f = &self.field;
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || (adjacent && i.abs_diff(j) != 1) {
                    continue;
                }
                for k in 0..f.degree() {
                    let mut g = Matrix::identity(n);
                    g.set(i, j, f.omega_pow(k as i64));
                    out.push(SemilinearElem { g, aut: 0 });
                }
            }
        }
        let lift = |det: Fq, aut: u32| {
            let mut d = vec![Fq::ONE; n];
            d[0] = det;
            SemilinearElem {
                g: Matrix::diag(&d),
                aut,
            }
        };
        match &self.mode {
            GroupMode::SL => {}
            GroupMode::GL => out.push(lift(f.omega(), 0)),
            GroupMode::SigmaL => out.push(lift(Fq::ONE, 1 % f.degree())),
            GroupMode::GammaL => {
                out.push(lift(f.omega(), 0));
                out.push(lift(Fq::ONE, 1 % f.degree()));
            }
            GroupMode::Parametric { d, e } => {
                out.push(lift(f.omega_pow(*d as i64), 0));
                out.push(lift(Fq::ONE, (f.degree() / e) % f.degree()));
            }
            GroupMode::Explicit(gens) => out.extend(gens.iter().cloned()),
        }
        out.retain(|x| x.g != Matrix::identity(n) || x.aut != 0);
        out
    }

    /// Serializable description.
    pub fn descriptor(&self) -> GroupDescriptor {
        let spec = self.field.spec();
        let (d, e, generators) = match &self.mode {
            GroupMode::Parametric { d, e } => (Some(*d), Some(*e), None),
            GroupMode::Explicit(g) => (None, None, Some(g.clone())),
            _ => (None, None, None),
        };
        GroupDescriptor {
            mode: match &self.mode {
                GroupMode::Explicit(_) => "explicit".to_string(),
                GroupMode::Parametric { .. } => "param".to_string(),
                m => m.to_string(),
            },
            n: self.n,
            p: spec.p,
            f: spec.f,
            d,
            e,
            generators,
        }
    }
}

/// Wire form of a [`GroupSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub mode: String,
    pub n: usize,
    pub p: u32,
    pub f: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub e: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generators: Option<Vec<SemilinearElem>>,
}

impl GroupDescriptor {
    pub fn build(&self) -> Result<GroupSpec> {
        let field = Field::new(self.p as u64, self.f)?;
        let mode = match self.mode.as_str() {
            "SL" => GroupMode::SL,
            "GL" => GroupMode::GL,
            "SigmaL" => GroupMode::SigmaL,
            "GammaL" => GroupMode::GammaL,
            "param" => GroupMode::Parametric {
                d: self
                    .d
                    .ok_or_else(|| Error::Parse("param group needs d".into()))?,
                e: self
                    .e
                    .ok_or_else(|| Error::Parse("param group needs e".into()))?,
            },
            "explicit" => {
                let gens = self
                    .generators
                    .clone()
                    .ok_or_else(|| Error::Parse("explicit group needs generators".into()))?;
                for x in &gens {
                    if x.g.entries().iter().any(|a| a.encoding() >= field.q()) {
                        return Err(Error::Parse("generator entry out of range".into()));
                    }
                }
                GroupMode::Explicit(gens)
            }
            other => return Err(Error::Parse(format!("unknown group mode {other}"))),
        };
        GroupSpec::new(mode, self.n, &field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn quotient_presets() {
        let f3 = Field::new(3, 1).unwrap();
        let gl = GroupSpec::gl(2, &f3);
        assert_eq!(gl.quotient().len(), 2);
        let f9 = Field::new(3, 2).unwrap();
        let sigma = GroupSpec::sigma_l(2, &f9);
        let elems: Vec<_> = sigma.quotient().iter().collect();
        assert_eq!(elems, vec![(Fq::ONE, 0), (Fq::ONE, 1)]);
    }

    #[test]
    fn explicit_generator_closure() {
        let f9 = Field::new(3, 2).unwrap();
        let w = f9.omega();
        let x = SemilinearElem::new(&f9, Matrix::diag(&[w, Fq::ONE]), 1).unwrap();
        let h = GroupSpec::new(GroupMode::Explicit(vec![x.clone()]), 2, &f9).unwrap();
        // (ω,1)^2 = (ω·ω^3, 0) = (ω^4, 0), so the quotient has order 2·|⟨ω^4⟩| = 4
        assert_eq!(h.quotient().len(), 4);
        assert!(h.contains(&x).unwrap());
        assert!(!h.contains(&SemilinearElem::frobenius(&f9, 2, 1)).unwrap());
        assert!(!h.within_sigma_l());
    }

    #[test]
    fn orders() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(GroupSpec::sl(2, &f3).order(), u(24));
        assert_eq!(GroupSpec::gl(2, &f3).order(), u(48));
        assert_eq!(GroupSpec::gl(2, &f3).projective_order(), u(24));
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(GroupSpec::sigma_l(2, &f9).order(), u(1440));
        assert_eq!(GroupSpec::sl(2, &f9).projective_order(), u(360));
    }

    #[test]
    fn membership() {
        let f3 = Field::new(3, 1).unwrap();
        let sl = GroupSpec::sl(2, &f3);
        let h = Matrix::identity(2)
            .sub(&Matrix::elem_unit(2, 0, 1).unwrap(), &f3)
            .unwrap();
        assert!(sl
            .contains(&SemilinearElem::linear(&f3, h).unwrap())
            .unwrap());
        let d = SemilinearElem::linear(&f3, Matrix::diag(&[f3.omega(), Fq::ONE])).unwrap();
        assert!(!sl.contains(&d).unwrap());
        let f4 = Field::new(2, 2).unwrap();
        assert!(GroupSpec::sigma_l(3, &f4)
            .contains(&SemilinearElem::frobenius(&f4, 3, 1))
            .unwrap());
    }

    #[test]
    fn parametric_validation() {
        let f9 = Field::new(3, 2).unwrap();
        assert!(GroupSpec::new(GroupMode::Parametric { d: 3, e: 1 }, 2, &f9).is_err());
        assert!(GroupSpec::new(GroupMode::Parametric { d: 2, e: 3 }, 2, &f9).is_err());
        let h = GroupSpec::new(GroupMode::Parametric { d: 2, e: 2 }, 2, &f9).unwrap();
        assert_eq!(h.aut_index(), 2);
    }

    #[test]
    fn frobenius_action_gf4() {
        let f4 = Field::new(2, 2).unwrap();
        let w = f4.omega();
        let s = Subspace::span(&f4, &[vec![Fq::ONE, w]]).unwrap();
        let img = SemilinearElem::frobenius(&f4, 2, 1).apply(&s, &f4).unwrap();
        assert_eq!(
            img,
            Subspace::span(&f4, &[vec![Fq::ONE, f4.mul(w, w)]]).unwrap()
        );
        assert_eq!(SemilinearElem::identity(2).apply(&s, &f4).unwrap(), s);
    }

    #[test]
    fn twisted_diagonal_fixes_line() {
        // diag(1, 1, λ^{-1} λ^{ψ^{-1}}) ψ fixes ⟨e1 + e2 + λ e3⟩ over GF(9), ψ = φ, λ = ω.
        let f = Field::new(3, 2).unwrap();
        let l = f.omega();
        let c = f.mul(f.inv(l).unwrap(), f.frobenius(l, -1));
        let x = SemilinearElem::new(&f, Matrix::diag(&[Fq::ONE, Fq::ONE, c]), 1).unwrap();
        let s = Subspace::span(&f, &[vec![Fq::ONE, Fq::ONE, l]]).unwrap();
        assert_eq!(x.apply(&s, &f).unwrap(), s);
    }

    #[test]
    fn inverse_and_projective_equality() {
        let f = Field::new(2, 2).unwrap();
        let w = f.omega();
        let mut g = Matrix::identity(2);
        g.set(0, 1, w);
        let x = SemilinearElem::new(&f, g.clone(), 1).unwrap();
        let id = x.compose(&x.inverse(&f), &f).unwrap();
        assert_eq!(id, SemilinearElem::identity(2));
        let y = SemilinearElem::new(&f, g.scale(w, &f), 1).unwrap();
        assert!(projective_equal(&x, &y, &f));
        assert!(!projective_equal(
            &x,
            &SemilinearElem::new(&f, g, 0).unwrap(),
            &f
        ));
    }
}
