//! Deciding whether two subspace tuples lie in the same `H`-orbit.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroupSpec, SemilinearElem};
use crate::error::{Error, Result};
use crate::gf::{Field, Fq};
use crate::linalg::{Matrix, Vector};
use crate::projective::{Subspace, SubspaceTuple};

/// Largest number of candidates an exhaustive search may visit.
pub const SEARCH_LIMIT: u64 = 1 << 16;

const UNIT_SAMPLES: usize = 96;
const MAX_TRIES: usize = 20_000;

/// Diagonal matrices `d` with `a_j·d ∈ b_j` for every `j`.
#[derive(Clone, Debug)]
pub struct DiagonalSpace {
    /// Diagonals of a basis in reduced echelon form.
    pub kernel_basis: Vec<Vector>,
    pub dimension: usize,
    /// An invertible member, if one exists.
    pub sample: Option<Matrix>,
}

impl DiagonalSpace {
    /// Dimension of the space after restricting every diagonal to `coords`.
    pub fn restricted_dimension(&self, coords: &[usize], f: &Field) -> usize {
        if self.kernel_basis.is_empty() || coords.is_empty() {
            return 0;
        }
        let rows: Vec<Vector> = self
            .kernel_basis
            .iter()
            .map(|d| coords.iter().map(|&c| d[c]).collect())
            .collect();
        Matrix::from_rows(&rows).map(|m| m.rank(f)).unwrap_or(0)
    }
}

pub fn diagonal_mapping_space(
    f: &Field,
    n: usize,
    a: &[Subspace],
    b: &[Subspace],
) -> Result<DiagonalSpace> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(
            "tuples of different lengths".into(),
        ));
    }
    for s in a.iter().chain(b) {
        if s.dim() != 1 || s.ambient_dim() != n {
            return Err(Error::DimensionMismatch(
                "entries must be 1-spaces of F^n".into(),
            ));
        }
    }
    // Unknowns: d_0..d_{n-1}, then one scale μ_j per entry.
    let k = a.len();
    let vars = n + k;
    let mut eqs = Matrix::zeros(n * k, vars);
    for j in 0..k {
        let (av, bv) = (a[j].basis().row(0), b[j].basis().row(0));
        for c in 0..n {
            eqs.set(j * n + c, c, av[c]);
            eqs.set(j * n + c, n + j, f.neg(bv[c]));
        }
    }
    // Projection to the d-coordinates is injective on solutions since b_j ≠ 0.
    let proj: Vec<Vector> = eqs
        .right_kernel(f)
        .into_iter()
        .map(|v| v[..n].to_vec())
        .collect();
    let kernel_basis = if proj.is_empty() {
        vec![]
    } else {
        Matrix::from_rows(&proj)?.rref(f).0.row_vectors()
    };
    let dimension = kernel_basis.len();
    let sample = invertible_combination(f, &kernel_basis).map(|d| Matrix::diag(&d));
    Ok(DiagonalSpace {
        kernel_basis,
        dimension,
        sample,
    })
}

fn invertible_combination(f: &Field, basis: &[Vector]) -> Option<Vector> {
    if basis.is_empty() {
        return None;
    }
    let n = basis[0].len();
    if (0..n).any(|c| basis.iter().all(|v| v[c].is_zero())) {
        return None;
    }
    let ones = vec![Fq::ONE; basis.len()];
    let sum = crate::linalg::lin_comb(&ones, basis, f);
    if sum.iter().all(|x| !x.is_zero()) {
        return Some(sum);
    }
    let mut found = None;
    for_each_projective(f, basis.len(), SEARCH_LIMIT, |coeffs| {
        let v = crate::linalg::lin_comb(coeffs, basis, f);
        if v.iter().all(|x| !x.is_zero()) {
            found = Some(v);
            true
        } else {
            false
        }
    });
    found
}

/// Visits normalized coefficient vectors (first nonzero entry 1) in lexicographic
/// order of leading position then encodings. Stops when `visit` returns true or
/// after `limit` vectors. Returns whether the enumeration was complete or stopped early.
fn for_each_projective(
    f: &Field,
    k: usize,
    limit: u64,
    mut visit: impl FnMut(&[Fq]) -> bool,
) -> bool {
    let q = f.q();
    let mut seen = 0u64;
    for lead in 0..k {
        let free = k - lead - 1;
        let mut digits = vec![0u32; free];
        loop {
            if seen >= limit {
                return false;
            }
            seen += 1;
            let mut c = vec![Fq::ZERO; k];
            c[lead] = Fq::ONE;
            for (t, &d) in digits.iter().enumerate() {
                c[lead + 1 + t] = Fq::from_encoding_unchecked(d);
            }
            if visit(&c) {
                return true;
            }
            let mut pos = free;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || free == 0 {
                break;
            }
        }
    }
    true
}

/// Some `h ∈ H` with `X^h = Y`, or `None`.
///
/// Tuples of 1-spaces are decided exactly by reducing to scalings of an
/// independent subfamily. Higher-dimensional entries go through the linear
/// space `L = {g : X_t·g ⊆ Y_t}`: exhaustively when `L` has at most
/// [`SEARCH_LIMIT`] projective points, otherwise by seeded sampling of its
/// invertible members (a negative answer then holds with error below 2^-90).
pub fn tuple_equivalent(
    h: &GroupSpec,
    x: &SubspaceTuple,
    y: &SubspaceTuple,
) -> Result<Option<SemilinearElem>> {
    let f = h.field();
    let n = h.n();
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(
            "tuples of different lengths".into(),
        ));
    }
    if x.ambient_dim() != n || y.ambient_dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "tuples must live in F^{n}"
        )));
    }
    if x.iter().zip(y.iter()).any(|(a, b)| a.dim() != b.dim()) {
        return Ok(None);
    }
    for aut in h.quotient().aut_exponents() {
        let dets = h.quotient().dets_for(aut);
        let twisted: Vec<Subspace> = y
            .iter()
            .map(|s| Subspace::from_basis(f, &s.basis().frobenius(-(aut as i64), f)))
            .collect::<Result<_>>()?;
        let found = if x.iter().all(|s| s.dim() == 1) {
            lines_solve(f, n, x, &twisted, &dets)?
        } else {
            general_solve(f, n, x, &twisted, &dets, aut)?
        };
        if let Some(g) = found {
            let elem = SemilinearElem::new(f, g, aut as i64)?;
            if !h.contains(&elem)? || elem.apply_tuple(x, f)? != *y {
                return Err(Error::Hypothesis(
                    "equivalence witness failed re-verification".into(),
                ));
            }
            return Ok(Some(elem));
        }
    }
    Ok(None)
}

/// Multiplicative union-find: `w[x] = c_x / c_parent(x)`.
struct RatioForest {
    parent: Vec<usize>,
    w: Vec<Fq>,
}

impl RatioForest {
    fn new(k: usize) -> RatioForest {
        RatioForest {
            parent: (0..k).collect(),
            w: vec![Fq::ONE; k],
        }
    }

    fn find(&mut self, x: usize, f: &Field) -> (usize, Fq) {
        let p = self.parent[x];
        if p == x {
            return (x, Fq::ONE);
        }
        let (root, wp) = self.find(p, f);
        self.parent[x] = root;
        self.w[x] = f.mul(self.w[x], wp);
        (root, self.w[x])
    }

    /// Records `c_x / c_y = r`; false on contradiction.
    fn union(&mut self, x: usize, y: usize, r: Fq, f: &Field) -> bool {
        let (rx, wx) = self.find(x, f);
        let (ry, wy) = self.find(y, f);
        if rx == ry {
            return f.mul(r, wy) == wx;
        }
        self.parent[rx] = ry;
        self.w[rx] = f.div(f.mul(r, wy), wx).expect("nonzero");
        true
    }
}

/// Standard basis vectors completing the independent rows `rows` to a basis.
fn complete_basis(f: &Field, n: usize, rows: &[Vector]) -> Vec<Vector> {
    let mut acc = rows.to_vec();
    let mut extra = Vec::new();
    for c in 0..n {
        if acc.len() == n {
            break;
        }
        let mut e = vec![Fq::ZERO; n];
        e[c] = Fq::ONE;
        acc.push(e.clone());
        if Matrix::from_rows(&acc).expect("rows").rank(f) == acc.len() {
            extra.push(e);
        } else {
            acc.pop();
        }
    }
    extra
}

fn lines_solve(
    f: &Field,
    n: usize,
    x: &SubspaceTuple,
    y: &[Subspace],
    dets: &[Fq],
) -> Result<Option<Matrix>> {
    let xs: Vec<Vector> = x.iter().map(|s| s.basis().row(0).to_vec()).collect();
    let ys: Vec<Vector> = y.iter().map(|s| s.basis().row(0).to_vec()).collect();
    let mut chosen: Vec<usize> = Vec::new();
    for t in 0..xs.len() {
        let mut rows: Vec<Vector> = chosen.iter().map(|&b| xs[b].clone()).collect();
        rows.push(xs[t].clone());
        if Matrix::from_rows(&rows)?.rank(f) == rows.len() {
            chosen.push(t);
        }
    }
    let a = chosen.len();
    let xb = Matrix::from_rows(&chosen.iter().map(|&b| xs[b].clone()).collect::<Vec<_>>())?;
    let yb = Matrix::from_rows(&chosen.iter().map(|&b| ys[b].clone()).collect::<Vec<_>>())?;
    if yb.rank(f) != a {
        return Ok(None);
    }
    let mut forest = RatioForest::new(a);
    for t in 0..xs.len() {
        if chosen.contains(&t) {
            continue;
        }
        let alpha = xb.coordinates(&xs[t], f).expect("in span");
        let Some(beta) = yb.coordinates(&ys[t], f) else {
            return Ok(None);
        };
        let mut first: Option<(usize, Fq)> = None;
        for b in 0..a {
            if alpha[b].is_zero() != beta[b].is_zero() {
                return Ok(None);
            }
            if alpha[b].is_zero() {
                continue;
            }
            let ratio = f.div(beta[b], alpha[b])?;
            match first {
                None => first = Some((b, ratio)),
                Some((b0, r0)) => {
                    if !forest.union(b, b0, f.div(ratio, r0)?, f) {
                        return Ok(None);
                    }
                }
            }
        }
    }
    // x_b·g = c_b·y_b with c_b = κ_root · w_b.
    let mut roots: Vec<usize> = Vec::new();
    let mut scaled: Vec<Vector> = Vec::with_capacity(n);
    let mut comp_of = Vec::with_capacity(a);
    for b in 0..a {
        let (r, w) = forest.find(b, f);
        if !roots.contains(&r) {
            roots.push(r);
        }
        comp_of.push(roots.iter().position(|&z| z == r).expect("present"));
        scaled.push(ys[chosen[b]].iter().map(|&v| f.mul(w, v)).collect());
    }
    let xrows: Vec<Vector> = chosen.iter().map(|&b| xs[b].clone()).collect();
    let mut p_rows = xrows.clone();
    p_rows.extend(complete_basis(f, n, &xrows));
    let yrows: Vec<Vector> = chosen.iter().map(|&b| ys[b].clone()).collect();
    scaled.extend(complete_basis(f, n, &yrows));
    let p_inv = Matrix::from_rows(&p_rows)?.inverse(f)?;
    let g0 = p_inv.mul(&Matrix::from_rows(&scaled)?, f)?;
    let det0 = g0.det(f)?;

    if a < n {
        let Some(&d) = dets.first() else {
            return Ok(None);
        };
        let s = f.div(d, det0)?;
        let last = scaled.len() - 1;
        scaled[last] = scaled[last].iter().map(|&v| f.mul(s, v)).collect();
        return Ok(Some(p_inv.mul(&Matrix::from_rows(&scaled)?, f)?));
    }
    let modulus = (f.q() - 1) as u64;
    let sizes: Vec<u64> = (0..roots.len())
        .map(|j| comp_of.iter().filter(|&&c| c == j).count() as u64)
        .collect();
    for &d in dets {
        let target = f.log(f.div(d, det0)?)? as u64;
        if let Some(u) = solve_exponents(&sizes, target, modulus) {
            for b in 0..a {
                let k = f.omega_pow(u[comp_of[b]] as i64);
                scaled[b] = scaled[b].iter().map(|&v| f.mul(k, v)).collect();
            }
            return Ok(Some(p_inv.mul(&Matrix::from_rows(&scaled)?, f)?));
        }
    }
    Ok(None)
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - (a.div_euclid(b)) * t)
    }
}

/// Exponents `u` with `Σ u_k·values_k ≡ target (mod modulus)`.
pub(crate) fn solve_exponents(values: &[u64], target: u64, modulus: u64) -> Option<Vec<u64>> {
    let m = modulus as i128;
    let mut g = m;
    let mut coefs = vec![0i128; values.len()];
    for (k, &v) in values.iter().enumerate() {
        let (ng, s, t) = ext_gcd(g, (v as i128).rem_euclid(m));
        for c in coefs.iter_mut() {
            *c = (*c * s).rem_euclid(m);
        }
        coefs[k] = (coefs[k] + t).rem_euclid(m);
        g = ng;
    }
    let target = (target as i128).rem_euclid(m);
    if target % g != 0 {
        return None;
    }
    let mult = target / g;
    Some(
        coefs
            .into_iter()
            .map(|c| (c * mult).rem_euclid(m) as u64)
            .collect(),
    )
}

/// Basis of `{g ∈ M_n : X_t·g ⊆ Y_t for all t}`.
fn linear_maps(f: &Field, n: usize, x: &SubspaceTuple, y: &[Subspace]) -> Result<Vec<Matrix>> {
    let mut rows: Vec<Vector> = Vec::new();
    for (xs, ys) in x.iter().zip(y) {
        let ann = ys.annihilator(f);
        for b in xs.basis().row_vectors() {
            for a in &ann {
                let mut row = vec![Fq::ZERO; n * n];
                for r in 0..n {
                    if b[r].is_zero() {
                        continue;
                    }
                    for c in 0..n {
                        row[r * n + c] = f.mul(b[r], a[c]);
                    }
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..n * n)
            .map(|i| {
                let mut v = vec![Fq::ZERO; n * n];
                v[i] = Fq::ONE;
                v
            })
            .collect()
    } else {
        Matrix::from_rows(&rows)?.right_kernel(f)
    };
    kernel.into_iter().map(|v| Matrix::new(n, n, v)).collect()
}

fn combine(f: &Field, coeffs: &[Fq], basis: &[Matrix]) -> Matrix {
    let n = basis[0].rows();
    let mut out = Matrix::zeros(n, n);
    for (c, m) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            out = out.add(&m.scale(*c, f), f).expect("square");
        }
    }
    out
}

fn mat_pow(f: &Field, a: &Matrix, mut e: u64) -> Matrix {
    let mut base = a.clone();
    let mut acc = Matrix::identity(a.rows());
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base, f).expect("square");
        }
        base = base.mul(&base, f).expect("square");
        e >>= 1;
    }
    acc
}

/// Pairwise meets and joins must have matching dimensions.
fn lattice_compatible(f: &Field, x: &SubspaceTuple, y: &[Subspace]) -> bool {
    let k = x.len();
    for s in 0..k {
        for t in s + 1..k {
            let (xa, xb, ya, yb) = (x.get(s), x.get(t), &y[s], &y[t]);
            if xa.join(xb, f).dim() != ya.join(yb, f).dim() {
                return false;
            }
        }
    }
    true
}

fn general_solve(
    f: &Field,
    n: usize,
    x: &SubspaceTuple,
    y: &[Subspace],
    dets: &[Fq],
    aut: u32,
) -> Result<Option<Matrix>> {
    if dets.is_empty() || !lattice_compatible(f, x, y) {
        return Ok(None);
    }
    let basis = linear_maps(f, n, x, y)?;
    if basis.is_empty() {
        return Ok(None);
    }
    // det values x for which some scalar λ puts λ^n·x into `dets`.
    let mut fix: HashMap<Fq, Fq> = HashMap::new();
    for &d in dets {
        for l in f.units() {
            let x = f.mul(d, f.inv(f.pow(l, n as i64)?)?);
            fix.entry(x).or_insert(l);
        }
    }
    let q = f.q() as u64;
    let k = basis.len() as u32;
    let points = q.checked_pow(k).map(|v| (v - 1) / (q - 1));
    if points.is_some_and(|p| p <= SEARCH_LIMIT) {
        let mut found = None;
        for_each_projective(f, basis.len(), SEARCH_LIMIT, |c| {
            let g = combine(f, c, &basis);
            let det = g.det(f).expect("square");
            if let Some(&l) = (!det.is_zero()).then(|| fix.get(&det)).flatten() {
                found = Some(g.scale(l, f));
                return true;
            }
            false
        });
        return Ok(found);
    }

    let mut rng =
        ChaCha8Rng::seed_from_u64(0x7e9a_11c0 ^ ((aut as u64) << 32) ^ basis.len() as u64);
    let modulus = q - 1;
    let mut g0: Option<(Matrix, Matrix, Fq)> = None;
    let mut units: Vec<(u64, Matrix)> = Vec::new();
    let mut current_gcd = modulus;
    let mut tries = 0;
    while tries < MAX_TRIES && units.len() < UNIT_SAMPLES {
        tries += 1;
        let coeffs: Vec<Fq> = (0..basis.len())
            .map(|_| Fq::from_encoding_unchecked(rng.gen_range(0..f.q())))
            .collect();
        let g = combine(f, &coeffs, &basis);
        let det = g.det(f)?;
        if det.is_zero() {
            continue;
        }
        match &g0 {
            None => {
                if let Some(&l) = fix.get(&det) {
                    return Ok(Some(g.scale(l, f)));
                }
                let inv = g.inverse(f)?;
                g0 = Some((g, inv, det));
                current_gcd = crate::gf::gcd(n as u64, modulus);
            }
            Some((_, inv, det0)) => {
                let a = g.mul(inv, f)?;
                let e = f.log(f.div(det, *det0)?)? as u64;
                let ng = crate::gf::gcd(current_gcd, e);
                units.push((e, a));
                if ng < current_gcd {
                    current_gcd = ng;
                    let (g0m, _, det0) = g0.as_ref().expect("set");
                    if let Some(m) = assemble(f, n, g0m, *det0, &units, dets, modulus)? {
                        return Ok(Some(m));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `λ·Π a_k^{u_k}·g0` with determinant in `dets`, if the exponent equation is solvable.
fn assemble(
    f: &Field,
    n: usize,
    g0: &Matrix,
    det0: Fq,
    units: &[(u64, Matrix)],
    dets: &[Fq],
    modulus: u64,
) -> Result<Option<Matrix>> {
    let mut values = vec![n as u64];
    values.extend(units.iter().map(|(e, _)| *e));
    for &d in dets {
        let target = f.log(f.div(d, det0)?)? as u64;
        if let Some(u) = solve_exponents(&values, target, modulus) {
            let mut m = g0.scale(f.omega_pow(u[0] as i64), f);
            for (k, (_, a)) in units.iter().enumerate() {
                if u[k + 1] != 0 {
                    m = mat_pow(f, a, u[k + 1]).mul(&m, f)?;
                }
            }
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupaction::GroupMode;

    fn line(f: &Field, v: &[u32]) -> Subspace {
        Subspace::span(f, &[v.iter().map(|&c| f.elem(c).unwrap()).collect()]).unwrap()
    }

    fn tuple(f: &Field, vs: &[&[u32]]) -> SubspaceTuple {
        SubspaceTuple::new(vs.iter().map(|v| line(f, v)).collect()).unwrap()
    }

    #[test]
    fn diagonal_space_dimensions() {
        let f = Field::new(3, 1).unwrap();
        let a = vec![line(&f, &[1, 1, 0])];
        let sp = diagonal_mapping_space(&f, 3, &a, &a).unwrap();
        assert_eq!(sp.dimension, 2);
        assert!(sp.sample.is_some());
        assert_eq!(
            diagonal_mapping_space(&f, 3, &[], &[]).unwrap().dimension,
            3
        );
        let a4 = vec![line(&f, &[1, 1, 0, 0])];
        let sp4 = diagonal_mapping_space(&f, 4, &a4, &a4).unwrap();
        assert_eq!(sp4.restricted_dimension(&[2, 3], &f), 2);
    }

    #[test]
    fn swap_basis_lines() {
        let f = Field::new(3, 1).unwrap();
        let h = GroupSpec::gl(2, &f);
        let x = tuple(&f, &[&[1, 0], &[0, 1]]);
        let y = tuple(&f, &[&[0, 1], &[1, 0]]);
        let w = tuple_equivalent(&h, &x, &y).unwrap().expect("equivalent");
        assert_eq!(w.apply_tuple(&x, &f).unwrap(), y);
        assert_eq!(
            tuple_equivalent(&h, &x, &x)
                .unwrap()
                .unwrap()
                .apply_tuple(&x, &f)
                .unwrap(),
            x
        );
    }

    #[test]
    fn frame_versus_degenerate() {
        for (p, e) in [(2u64, 2u32), (3, 2), (5, 1)] {
            let f = Field::new(p, e).unwrap();
            let n = 3;
            let h = GroupSpec::gamma_l(n, &f);
            let x = tuple(&f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
            let y = tuple(&f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]);
            assert!(tuple_equivalent(&h, &x, &y).unwrap().is_none());
        }
    }

    #[test]
    fn determinant_obstruction_in_sl() {
        // diag(c, 2c) has determinant 2c^2, never 1 over GF(5); diag(c, 4c) can be.
        let f = Field::new(5, 1).unwrap();
        let x = tuple(&f, &[&[1, 0], &[0, 1], &[1, 1]]);
        let y = tuple(&f, &[&[1, 0], &[0, 1], &[1, 2]]);
        assert!(tuple_equivalent(&GroupSpec::gl(2, &f), &x, &y)
            .unwrap()
            .is_some());
        assert!(tuple_equivalent(&GroupSpec::sl(2, &f), &x, &y)
            .unwrap()
            .is_none());
        let y4 = tuple(&f, &[&[1, 0], &[0, 1], &[1, 4]]);
        assert!(tuple_equivalent(&GroupSpec::sl(2, &f), &x, &y4)
            .unwrap()
            .is_some());
    }

    #[test]
    fn frobenius_needed() {
        let f = Field::new(2, 2).unwrap();
        let w = f.omega().encoding();
        let w2 = f.mul(f.omega(), f.omega()).encoding();
        let x = tuple(&f, &[&[1, 0], &[0, 1], &[1, 1], &[1, w]]);
        let y = tuple(&f, &[&[1, 0], &[0, 1], &[1, 1], &[1, w2]]);
        assert!(tuple_equivalent(&GroupSpec::gl(2, &f), &x, &y)
            .unwrap()
            .is_none());
        let s = tuple_equivalent(&GroupSpec::sigma_l(2, &f), &x, &y)
            .unwrap()
            .unwrap();
        assert_eq!(s.aut, 1);
        let h = GroupSpec::new(GroupMode::Parametric { d: 1, e: 1 }, 2, &f).unwrap();
        assert!(tuple_equivalent(&h, &x, &y).unwrap().is_none());
    }

    #[test]
    fn planes_in_four_space() {
        let f = Field::new(3, 1).unwrap();
        let h = GroupSpec::sl(4, &f);
        let p = |rows: &[&[u32]]| {
            Subspace::span(
                &f,
                &rows
                    .iter()
                    .map(|v| v.iter().map(|&c| f.elem(c).unwrap()).collect())
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        };
        let x = SubspaceTuple::new(vec![
            p(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
            p(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]),
        ])
        .unwrap();
        let y = SubspaceTuple::new(vec![
            p(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]),
            p(&[&[0, 1, 0, 0], &[0, 0, 0, 1]]),
        ])
        .unwrap();
        assert!(tuple_equivalent(&h, &x, &y).unwrap().is_some());
        let z = SubspaceTuple::new(vec![
            p(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
            p(&[&[0, 1, 0, 0], &[0, 0, 1, 0]]),
        ])
        .unwrap();
        assert!(tuple_equivalent(&h, &x, &z).unwrap().is_none());
    }

    #[test]
    fn exponent_solver() {
        assert_eq!(
            solve_exponents(&[2, 3], 1, 8).map(|u| (2 * u[0] + 3 * u[1]) % 8),
            Some(1)
        );
        assert!(solve_exponents(&[2, 4], 1, 8).is_none());
        assert_eq!(solve_exponents(&[], 0, 1), Some(vec![]));
    }
}
