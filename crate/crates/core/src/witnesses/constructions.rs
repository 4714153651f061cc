//! The explicit tuple pairs and the elements mapping each deleted subtuple.

use crate::error::{Error, Result};
use crate::gf::{Field, Fq};
use crate::groupaction::{GroupSpec, SemilinearElem};
use crate::linalg::{Matrix, Vector};
use crate::projective::{Subspace, SubspaceTuple};

use super::{Params, WitnessPackage};

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Fq::ZERO; n];
    v[i] = Fq::ONE;
    v
}

fn vector(n: usize, terms: &[(usize, Fq)], f: &Field) -> Vector {
    let mut v = vec![Fq::ZERO; n];
    for &(i, c) in terms {
        v[i] = f.add(v[i], c);
    }
    v
}

fn span(f: &Field, rows: Vec<Vector>) -> Result<Subspace> {
    Subspace::span(f, &rows)
}

fn line(f: &Field, v: Vector) -> Result<Subspace> {
    Subspace::span(f, &[v])
}

fn matrix(rows: Vec<Vec<Fq>>) -> Result<Matrix> {
    Matrix::from_rows(&rows)
}

fn hyp(msg: impl Into<String>) -> Error {
    Error::Hypothesis(msg.into())
}

fn inv(f: &Field, a: Fq) -> Fq {
    f.inv(a).expect("nonzero by construction")
}

fn tuples(x: Vec<Subspace>, y: Vec<Subspace>) -> Result<(SubspaceTuple, SubspaceTuple)> {
    Ok((SubspaceTuple::new(x)?, SubspaceTuple::new(y)?))
}

fn params(group: &GroupSpec, m: usize) -> Params {
    let f = group.field();
    Params {
        n: group.n(),
        p: f.p(),
        f: f.degree(),
        m,
        ..Default::default()
    }
}

/// `c·g·φ^i ∈ H` for the least aut exponent `i` and then the least scalar `c`.
fn realize(group: &GroupSpec, g: &Matrix) -> Result<SemilinearElem> {
    let f = group.field();
    let det = g.det(f)?;
    let n = group.n() as i64;
    for aut in group.quotient().aut_exponents() {
        for c in f.units() {
            let d = f.mul(det, f.pow(c, n)?);
            if group.quotient().contains(d, aut) {
                return SemilinearElem::new(f, g.scale(c, f), aut as i64);
            }
        }
    }
    Err(hyp(
        "no scalar multiple of the mapping matrix times a field automorphism lies in the group",
    ))
}

/// Matrix with `block` in the top-left corner and `fill` on the remaining diagonal.
fn padded(block: &Matrix, n: usize, fill: Fq) -> Matrix {
    let k = block.rows();
    let rest = Matrix::diag(&vec![fill; n - k]);
    if n == k {
        block.clone()
    } else {
        Matrix::block_diag(block, &rest)
    }
}

/// Length-`n` pair: frame vectors with the all-ones vector against the
/// sum of the first `n−1` basis vectors.
pub fn w_general_n(group: &GroupSpec) -> Result<WitnessPackage> {
    let f = group.field();
    let n = group.n();
    if n < 2 {
        return Err(hyp("n >= 2 required"));
    }
    let mut x: Vec<Subspace> = (0..n - 1)
        .map(|i| line(f, unit(n, i)))
        .collect::<Result<_>>()?;
    let mut y = x.clone();
    x.push(line(f, vec![Fq::ONE; n])?);
    y.push(line(
        f,
        vector(n, &(0..n - 1).map(|i| (i, Fq::ONE)).collect::<Vec<_>>(), f),
    )?);
    let mut witnesses = Vec::with_capacity(n);
    for l in 0..n - 1 {
        let mut g = Matrix::identity(n);
        g.set(l, n - 1, f.neg(Fq::ONE));
        witnesses.push(Some(SemilinearElem::linear(f, g)?));
    }
    witnesses.push(Some(SemilinearElem::identity(n)));
    let (x, y) = tuples(x, y)?;
    Ok(WitnessPackage {
        tag: "general-n".into(),
        params: params(group, 1),
        group: group.clone(),
        x,
        y,
        witnesses,
    })
}

fn n2_prefix(f: &Field) -> Result<Vec<Subspace>> {
    Ok(vec![
        line(f, unit(2, 0))?,
        line(f, unit(2, 1))?,
        line(f, vec![Fq::ONE, Fq::ONE])?,
    ])
}

/// Whether `H ≤ ⟨Z, ΣL_2(q)⟩`, i.e. every determinant is a square.
fn within_scalar_sigma(group: &GroupSpec) -> bool {
    group.within_sigma_l()
}

/// `n = 2`, with `q` even or `H` not inside `⟨Z, ΣL_2(q)⟩`.
pub fn w_n2_case_a(group: &GroupSpec) -> Result<WitnessPackage> {
    let f = group.field();
    let q = f.q();
    if group.n() != 2 {
        return Err(hyp("n = 2 required"));
    }
    if q < 8 {
        return Err(hyp(format!("q >= 8 required, got q = {q}")));
    }
    let even = f.p() == 2;
    if !even && within_scalar_sigma(group) {
        return Err(hyp("for odd q the group must not lie in <Z, SigmaL_2(q)>"));
    }
    let w = f.omega();
    // over a prime field the least non-identity element of F_p may be ω itself
    let orbit: Vec<Fq> = (0..f.degree()).map(|i| f.frobenius(w, i as i64)).collect();
    let alpha = if even {
        f.pow(w, 3)?
    } else {
        (2..f.p() as i64)
            .map(|a| f.from_int(a))
            .find(|a| !orbit.contains(a))
            .ok_or_else(|| hyp("no alpha in F_p outside the orbit of omega"))?
    };
    let one = Fq::ONE;
    let mut x = n2_prefix(f)?;
    let mut y = x.clone();
    x.push(line(f, vec![one, w])?);
    y.push(line(f, vec![one, alpha])?);

    let c = f.mul(f.sub(alpha, w), inv(f, f.sub(one, w)));
    let g1 = matrix(vec![vec![one, c], vec![Fq::ZERO, f.sub(one, c)]])?;
    let d = f.mul(f.sub(f.mul(w, inv(f, alpha)), one), inv(f, f.sub(w, one)));
    let g2 = matrix(vec![vec![f.sub(one, d), Fq::ZERO], vec![d, one]])?;
    let g3 = Matrix::diag(&[one, f.mul(alpha, inv(f, w))]);
    let g4 = Matrix::identity(2);
    let witnesses = [g1, g2, g3, g4]
        .iter()
        .map(|g| realize(group, g).map(Some))
        .collect::<Result<Vec<_>>>()?;
    let (x, y) = tuples(x, y)?;
    let mut p = params(group, 1);
    p.alpha = Some(alpha);
    Ok(WitnessPackage {
        tag: "n2-a".into(),
        params: p,
        group: group.clone(),
        x,
        y,
        witnesses,
    })
}

fn theta(f: &Field, lambda: Fq, mu: Fq) -> Fq {
    let l2 = f.mul(lambda, lambda);
    f.mul(f.sub(Fq::ONE, f.mul(l2, mu)), inv(f, f.sub(Fq::ONE, mu)))
}

fn condition_i(f: &Field, lambda: Fq, tau: Fq) -> bool {
    let t = theta(f, lambda, tau);
    !t.is_zero() && f.is_square(t)
}

fn condition_ii(f: &Field, lambda: Fq, tau: Fq) -> bool {
    let target = f.mul(f.mul(lambda, lambda), tau);
    (0..f.degree()).all(|k| f.frobenius(tau, k as i64) != target)
}

fn case_b_lambdas(f: &Field) -> impl Iterator<Item = Fq> + '_ {
    let minus_one = f.neg(Fq::ONE);
    f.units().filter(move |&l| l != Fq::ONE && l != minus_one)
}

fn case_b_taus(f: &Field) -> impl Iterator<Item = Fq> + '_ {
    f.elements().filter(|&t| !t.is_zero() && t != Fq::ONE)
}

/// Number of `τ` with `θ_λ(τ)` a nonzero square.
pub fn case_b_square_count(f: &Field, lambda: Fq) -> usize {
    case_b_taus(f)
        .filter(|&t| condition_i(f, lambda, t))
        .count()
}

/// Least `(λ, τ)` in encoding order with `θ_λ(τ)` a nonzero square and no
/// field automorphism taking `τ` to `λ²τ`.
pub fn find_case_b_params(f: &Field) -> Result<(Fq, Fq)> {
    if f.p() == 2 {
        return Err(hyp("odd q required"));
    }
    for l in case_b_lambdas(f) {
        for t in case_b_taus(f) {
            if condition_i(f, l, t) && condition_ii(f, l, t) {
                return Ok((l, t));
            }
        }
    }
    Err(hyp(format!(
        "no admissible (lambda, tau) over GF({})",
        f.q()
    )))
}

/// `n = 2`, `q > 9` odd, `H ≤ ⟨Z, ΣL_2(q)⟩`. The mapping elements are left to the solver.
pub fn w_n2_case_b(group: &GroupSpec) -> Result<WitnessPackage> {
    let f = group.field();
    let q = f.q();
    if group.n() != 2 {
        return Err(hyp("n = 2 required"));
    }
    if f.p() == 2 || q <= 9 {
        return Err(hyp(format!("odd q > 9 required, got q = {q}")));
    }
    if !within_scalar_sigma(group) {
        return Err(hyp("the group must lie in <Z, SigmaL_2(q)>"));
    }
    let (lambda, tau) = find_case_b_params(f)?;
    let mut x = n2_prefix(f)?;
    let mut y = x.clone();
    x.push(line(f, vec![Fq::ONE, tau])?);
    y.push(line(f, vec![Fq::ONE, f.mul(f.mul(lambda, lambda), tau)])?);
    let (x, y) = tuples(x, y)?;
    let mut p = params(group, 1);
    p.lambda = Some(lambda);
    p.tau = Some(tau);
    Ok(WitnessPackage {
        tag: "n2-b".into(),
        params: p,
        group: group.clone(),
        x,
        y,
        witnesses: vec![None; 4],
    })
}

/// `n = 3`, `|F| ≥ 7` and `3 | q − 1`; length 5.
pub fn w_psl3(group: &GroupSpec) -> Result<WitnessPackage> {
    let f = group.field();
    let q = f.q();
    if group.n() != 3 {
        return Err(hyp("n = 3 required"));
    }
    if q < 7 {
        return Err(hyp(format!("|F| >= 7 required, got {q}")));
    }
    if !(q - 1).is_multiple_of(3) {
        return Err(hyp(format!(
            "3 does not divide q - 1 = {}, so PSL_3(q) = PGL_3(q)",
            q - 1
        )));
    }
    let l = f.omega();
    let li = inv(f, l);
    let (one, zero) = (Fq::ONE, Fq::ZERO);
    let neg = |a: Fq| f.neg(a);
    let sq = |a: Fq| f.mul(a, a);
    let mut x: Vec<Subspace> = (0..3).map(|i| line(f, unit(3, i))).collect::<Result<_>>()?;
    x.push(line(f, vec![one; 3])?);
    let mut y = x.clone();
    x.push(line(f, vec![one, l, sq(l)])?);
    y.push(line(f, vec![one, li, sq(li)])?);

    let g1 = matrix(vec![
        vec![l, f.add(l, one), f.add(l, li)],
        vec![zero, neg(one), zero],
        vec![zero, zero, neg(li)],
    ])?;
    let g2 = matrix(vec![
        vec![neg(l), zero, zero],
        vec![f.add(l, one), one, f.add(one, li)],
        vec![zero, zero, neg(li)],
    ])?;
    let g3 = matrix(vec![
        vec![neg(l), zero, zero],
        vec![zero, neg(one), zero],
        vec![f.add(l, li), f.add(one, li), li],
    ])?;
    let g4 = Matrix::diag(&[sq(l), one, sq(li)]);
    let g5 = Matrix::identity(3);
    let witnesses = [g1, g2, g3, g4, g5]
        .into_iter()
        .map(|g| SemilinearElem::linear(f, g).map(Some))
        .collect::<Result<Vec<_>>>()?;
    let (x, y) = tuples(x, y)?;
    let mut p = params(group, 1);
    p.lambda = Some(l);
    Ok(WitnessPackage {
        tag: "psl3".into(),
        params: p,
        group: group.clone(),
        x,
        y,
        witnesses,
    })
}

/// `GL_n(F)`, `n ≥ 3`, `|F| ≥ 4`; length `n + 2`.
pub fn w_gl_lower(n: usize, f: &Field) -> Result<WitnessPackage> {
    if n < 3 {
        return Err(hyp("n >= 3 required"));
    }
    if f.q() < 4 {
        return Err(hyp("|F| >= 4 required"));
    }
    let group = GroupSpec::gl(n, f);
    let l = f
        .units()
        .find(|&a| f.mul(a, a) != Fq::ONE)
        .ok_or_else(|| hyp("|F| >= 4 required"))?;
    let li = inv(f, l);
    let (one, zero) = (Fq::ONE, Fq::ZERO);
    let mut x: Vec<Subspace> = (0..n).map(|i| line(f, unit(n, i))).collect::<Result<_>>()?;
    x.push(line(f, vec![one; n])?);
    let mut y = x.clone();
    x.push(line(f, vector(n, &[(0, one), (1, l)], f))?);
    y.push(line(f, vector(n, &[(0, one), (1, li)], f))?);

    let g1 = padded(
        &matrix(vec![vec![l, f.add(one, l)], vec![zero, f.neg(one)]])?,
        n,
        l,
    );
    let g2 = padded(
        &matrix(vec![vec![f.neg(one), zero], vec![f.add(one, li), li]])?,
        n,
        li,
    );
    let mut d = vec![l; n];
    d[1] = li;
    let diag = Matrix::diag(&d);
    let mut mats = vec![g1, g2];
    for j in 2..n {
        let mut g = diag.clone();
        g.set(j, 1, f.sub(l, li));
        mats.push(g);
    }
    mats.push(diag);
    mats.push(Matrix::identity(n));
    let witnesses = mats
        .into_iter()
        .map(|g| SemilinearElem::linear(f, g).map(Some))
        .collect::<Result<Vec<_>>>()?;
    let (x, y) = tuples(x, y)?;
    let mut p = params(&group, 1);
    p.lambda = Some(l);
    Ok(WitnessPackage {
        tag: "gl-lower".into(),
        params: p,
        group,
        x,
        y,
        witnesses,
    })
}

/// The `(k+3)`-tuples in dimension `k` and their mapping elements `(matrix, aut)`.
fn semilinear_core(
    f: &Field,
    k: usize,
    l: Fq,
    psi: u32,
) -> Result<(Vec<Vector>, Vec<Vector>, Vec<(Matrix, u32)>)> {
    let (one, zero) = (Fq::ONE, Fq::ZERO);
    let s = psi as i64;
    let li = inv(f, l);
    let tau = inv(f, f.sub(l, one));
    let l_psi = f.frobenius(l, s);

    let mut xs: Vec<Vector> = (0..k).map(|i| unit(k, i)).collect();
    xs.push(vec![one; k]);
    xs.push(vector(k, &[(0, one), (1, one), (2, l)], f));
    let mut ys = xs.clone();
    xs.push(vector(k, &[(0, one), (1, l)], f));
    ys.push(vector(k, &[(0, one), (1, l_psi)], f));

    let a = f.mul(tau, f.sub(l_psi, l));
    let h1 = padded(
        &matrix(vec![vec![one, f.neg(a)], vec![zero, f.add(one, a)]])?,
        k,
        one,
    );
    let b = f.mul(tau, f.sub(f.mul(l, f.frobenius(li, s)), one));
    let h2 = padded(
        &matrix(vec![vec![f.sub(one, b), zero], vec![b, one]])?,
        k,
        one,
    );
    let t = f.mul(tau, f.sub(f.mul(l, f.frobenius(li, -s)), one));
    let h3 = padded(
        &matrix(vec![
            vec![f.sub(one, t), zero, zero],
            vec![zero, f.sub(one, t), zero],
            vec![t, t, one],
        ])?,
        k,
        one,
    );
    let c = f.mul(li, f.frobenius(l, -s));
    let mut d = vec![one; k];
    d[2] = c;
    let diag = Matrix::diag(&d);

    let mut out = vec![(h1, 0), (h2, 0), (h3, psi)];
    for j in 3..k {
        let mut g = diag.clone();
        g.set(j, 2, f.sub(one, c));
        out.push((g, psi));
    }
    out.push((diag, psi));
    out.push((Matrix::identity(k), psi));
    out.push((Matrix::identity(k), 0));
    Ok((xs, ys, out))
}

fn pick_psi(group: &GroupSpec, psi: Option<u32>) -> Result<u32> {
    let deg = group.field().degree();
    let auts = group.quotient().aut_exponents();
    match psi {
        Some(s) => {
            let s = s % deg;
            if s == 0 {
                return Err(hyp("psi must be a nontrivial field automorphism"));
            }
            if !auts.contains(&s) {
                return Err(hyp(format!("no element of the group induces phi^{s}")));
            }
            Ok(s)
        }
        None => auts
            .into_iter()
            .find(|&a| a != 0)
            .ok_or_else(|| hyp("the group lies in GL_n(q)")),
    }
}

fn pick_lambda(f: &Field, psi: u32, lambda: Option<Fq>) -> Result<Fq> {
    match lambda {
        Some(l) => {
            if l.is_zero() || l == Fq::ONE {
                return Err(hyp(
                    "lambda must differ from 0 and 1, since tau = (lambda - 1)^-1",
                ));
            }
            if f.frobenius(l, psi as i64) == l {
                return Err(hyp("psi must move lambda"));
            }
            Ok(l)
        }
        None => f
            .units()
            .find(|&l| f.frobenius(l, psi as i64) != l)
            .ok_or_else(|| hyp("no lambda moved by psi (prime field)")),
    }
}

/// `GL_n ⊴ H`, `H ≠ GL_n`, `n ≥ 3`; length `n + 3`.
pub fn w_gammal(group: &GroupSpec, psi: Option<u32>, lambda: Option<Fq>) -> Result<WitnessPackage> {
    let f = group.field();
    let n = group.n();
    if n < 3 {
        return Err(hyp("n >= 3 required"));
    }
    if group.quotient().dets_for(0).len() != (f.q() - 1) as usize {
        return Err(hyp("the group must contain GL_n(q)"));
    }
    let psi = pick_psi(group, psi)?;
    let l = pick_lambda(f, psi, lambda)?;
    let (xs, ys, hs) = semilinear_core(f, n, l, psi)?;
    let x = xs
        .into_iter()
        .map(|v| line(f, v))
        .collect::<Result<Vec<_>>>()?;
    let y = ys
        .into_iter()
        .map(|v| line(f, v))
        .collect::<Result<Vec<_>>>()?;
    let witnesses = hs
        .into_iter()
        .map(|(g, a)| SemilinearElem::new(f, g, a as i64).map(Some))
        .collect::<Result<Vec<_>>>()?;
    let (x, y) = tuples(x, y)?;
    let mut p = params(group, 1);
    p.lambda = Some(l);
    p.psi = Some(psi);
    Ok(WitnessPackage {
        tag: "gammal".into(),
        params: p,
        group: group.clone(),
        x,
        y,
        witnesses,
    })
}

/// `H ⊄ GL_n`, `n ≥ 4`; the semilinear pair on the first `n − 1` coordinates,
/// length `n + 2`. The free last coordinate absorbs the determinant.
pub fn w_general_np2(
    group: &GroupSpec,
    psi: Option<u32>,
    lambda: Option<Fq>,
) -> Result<WitnessPackage> {
    let f = group.field();
    let n = group.n();
    if n < 4 {
        return Err(hyp("n >= 4 required"));
    }
    let psi = pick_psi(group, psi)?;
    let l = pick_lambda(f, psi, lambda)?;
    let (xs, ys, hs) = semilinear_core(f, n - 1, l, psi)?;
    let lift = |mut v: Vector| {
        v.push(Fq::ZERO);
        line(f, v)
    };
    let x = xs.into_iter().map(lift).collect::<Result<Vec<_>>>()?;
    let y = ys.into_iter().map(lift).collect::<Result<Vec<_>>>()?;
    let mut witnesses = Vec::with_capacity(hs.len());
    for (g, a) in hs {
        let target = *group
            .quotient()
            .dets_for(a)
            .first()
            .ok_or_else(|| hyp(format!("no element induces phi^{a}")))?;
        let corner = f.div(target, g.det(f)?)?;
        let full = Matrix::block_diag(&g, &Matrix::diag(&[corner]));
        witnesses.push(Some(SemilinearElem::new(f, full, a as i64)?));
    }
    let (x, y) = tuples(x, y)?;
    let mut p = params(group, 1);
    p.lambda = Some(l);
    p.psi = Some(psi);
    Ok(WitnessPackage {
        tag: "general-np2".into(),
        params: p,
        group: group.clone(),
        x,
        y,
        witnesses,
    })
}

/// Whether `α` avoids every coset `det(g)^ψ·F^{×n}` for `gψ ∈ H`.
pub fn alpha_admissible(group: &GroupSpec, alpha: Fq) -> bool {
    let f = group.field();
    let n = group.n() as u64;
    group.quotient().iter().all(|(d, i)| {
        // α = (d c^n)^(φ^i) iff α^(φ^-i)/d is an n-th power
        let pulled = f.frobenius(alpha, -(i as i64));
        let ratio = f.div(pulled, d).expect("determinants are units");
        !f.is_kth_power(ratio, n).expect("unit")
    })
}

/// `n ≥ 4`, `|F| ≥ 3`, with some `α` outside all achievable determinant cosets; length `2n − 2`.
pub fn w_psl_lower(group: &GroupSpec) -> Result<WitnessPackage> {
    let f = group.field();
    let n = group.n();
    if n < 4 {
        return Err(hyp("n >= 4 required"));
    }
    if f.q() < 3 {
        return Err(hyp("|F| >= 3 required"));
    }
    let alpha = f
        .units()
        .find(|&a| alpha_admissible(group, a))
        .ok_or_else(|| hyp("no admissible alpha: determinant cosets cover F*/F^(xn)"))?;
    let ai = inv(f, alpha);
    let one = Fq::ONE;
    let mut x: Vec<Subspace> = (1..n).map(|i| line(f, unit(n, i))).collect::<Result<_>>()?;
    let mut y = x.clone();
    for i in 1..n {
        x.push(line(f, vector(n, &[(0, one), (i, one)], f))?);
        y.push(line(f, vector(n, &[(0, alpha), (i, one)], f))?);
    }
    let h = |k: usize| {
        let mut d = vec![one; n];
        d[0] = alpha;
        d[k] = ai;
        Matrix::diag(&d)
    };
    let mut witnesses = Vec::with_capacity(2 * n - 2);
    for k in 1..n {
        let mut g = h(k);
        g.set(k, 0, f.sub(one, alpha));
        witnesses.push(Some(SemilinearElem::linear(f, g)?));
    }
    for k in 1..n {
        witnesses.push(Some(SemilinearElem::linear(f, h(k))?));
    }
    let (x, y) = tuples(x, y)?;
    let mut p = params(group, 1);
    p.alpha = Some(alpha);
    Ok(WitnessPackage {
        tag: "psl-lower".into(),
        params: p,
        group: group.clone(),
        x,
        y,
        witnesses,
    })
}

/// m-spaces, `n ≥ 2m ≥ 4`; length `mn − m² + 1`, all elements lower unitriangular.
pub fn w_mspaces(group: &GroupSpec, m: usize) -> Result<WitnessPackage> {
    let f = group.field();
    let n = group.n();
    if m < 2 || n < 2 * m {
        return Err(hyp(format!("n >= 2m >= 4 required, got n = {n}, m = {m}")));
    }
    let one = Fq::ONE;
    let last = n - 1;
    let others = |i: usize| (0..m).filter(move |&t| t != i).map(move |t| unit(n, t));
    let mut x = Vec::new();
    for i in 0..m {
        for j in m..last {
            x.push(span(f, others(i).chain([unit(n, j)]).collect())?);
        }
    }
    let mut y = x.clone();
    for i in 0..m {
        x.push(span(
            f,
            others(i)
                .chain([vector(n, &[(i, one), (last, one)], f)])
                .collect(),
        )?);
        y.push(span(f, others(i).chain([unit(n, last)]).collect())?);
    }
    let pairs: Vec<Vector> = (1..m)
        .map(|i| vector(n, &[(0, one), (i, one)], f))
        .collect();
    let mut xl = pairs.clone();
    xl.push(vec![one; n]);
    let mut yl = pairs;
    let mut tail: Vec<(usize, Fq)> = (m..n).map(|i| (i, one)).collect();
    tail.push((0, f.neg(one)));
    yl.push(vector(n, &tail, f));
    x.push(span(f, xl)?);
    y.push(span(f, yl)?);

    let coef = |r: usize| if r == 0 { f.neg(one) } else { one };
    let minus_z = |row: &mut Vec<Fq>| {
        for v in row.iter_mut().take(m) {
            *v = f.sub(*v, one);
        }
    };
    let mut witnesses = Vec::new();
    for r in 0..m {
        for s in m..last {
            let mut g = Matrix::identity(n);
            g.set(s, r, coef(r));
            let mut row = unit(n, last);
            minus_z(&mut row);
            for (c, v) in row.into_iter().enumerate() {
                g.set(last, c, v);
            }
            witnesses.push(Some(SemilinearElem::linear(f, g)?));
        }
    }
    for r in 0..=m {
        let mut g = Matrix::identity(n);
        let mut row = unit(n, last);
        if r < m {
            row[r] = coef(r);
        }
        minus_z(&mut row);
        for (c, v) in row.into_iter().enumerate() {
            g.set(last, c, v);
        }
        witnesses.push(Some(SemilinearElem::linear(f, g)?));
    }
    let (x, y) = tuples(x, y)?;
    Ok(WitnessPackage {
        tag: "mspaces".into(),
        params: params(group, m),
        group: group.clone(),
        x,
        y,
        witnesses,
    })
}
