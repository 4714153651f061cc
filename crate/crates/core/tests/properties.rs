use proptest::prelude::*;

use relcomp::cli::prime_power;
use relcomp::gf::{Field, Fq};
use relcomp::groupaction::{GroupSpec, SemilinearElem};
use relcomp::linalg::Matrix;
use relcomp::projective::{enumerate_omega, gaussian_binomial, Subspace};

const ORDERS: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 243];

fn field(q: u64) -> Field {
    let (p, f) = prime_power(q).unwrap();
    Field::new(p, f).unwrap()
}

fn elem(f: &Field, code: u32) -> Fq {
    f.elem(code % f.q()).unwrap()
}

fn unit(f: &Field, code: u32) -> Fq {
    f.elem(1 + code % (f.q() - 1)).unwrap()
}

fn matrix(f: &Field, n: usize, codes: &[u32]) -> Matrix {
    Matrix::new(
        n,
        n,
        codes.iter().take(n * n).map(|&c| elem(f, c)).collect(),
    )
    .unwrap()
}

/// An invertible matrix: random until nonsingular, falling back to the identity.
fn invertible(f: &Field, n: usize, codes: &[u32]) -> Matrix {
    for shift in 0..8 {
        let m = matrix(f, n, &codes[shift..]);
        if !m.det(f).unwrap().is_zero() {
            return m;
        }
    }
    Matrix::identity(n)
}

fn order_index() -> impl Strategy<Value = u64> {
    (0..ORDERS.len()).prop_map(|i| ORDERS[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(q in order_index(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = field(q);
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Fq::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fq::ONE);
            prop_assert_eq!(f.pow(a, (f.q() - 1) as i64).unwrap(), Fq::ONE);
        } else {
            prop_assert!(f.inv(a).is_err());
        }
    }

    #[test]
    fn frobenius_is_an_automorphism(q in order_index(), a in any::<u32>(), b in any::<u32>(), i in 0i64..12) {
        let f = field(q);
        let (a, b) = (elem(&f, a), elem(&f, b));
        prop_assert_eq!(f.frobenius(f.add(a, b), i), f.add(f.frobenius(a, i), f.frobenius(b, i)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), i), f.mul(f.frobenius(a, i), f.frobenius(b, i)));
        prop_assert_eq!(f.frobenius(f.frobenius(a, i), -i), a);
        prop_assert_eq!(f.frobenius(a, f.degree() as i64), a);
        prop_assert_eq!(f.frobenius(a, 1), f.pow(a, f.p() as i64).unwrap_or(Fq::ZERO));
    }

    #[test]
    fn omega_generates_units(q in order_index(), k in any::<u32>()) {
        let f = field(q);
        let a = unit(&f, k);
        let log = f.log(a).unwrap();
        prop_assert_eq!(f.omega_pow(log as i64), a);
        prop_assert_eq!(f.multiplicative_order(f.omega()).unwrap(), (f.q() - 1) as u64);
        prop_assert_eq!(f.is_square(a), f.kth_root(a, 2).is_some());
    }

    #[test]
    fn det_is_multiplicative(q in order_index(), n in 1usize..5, xs in prop::collection::vec(any::<u32>(), 32), ys in prop::collection::vec(any::<u32>(), 32)) {
        let f = field(q);
        let (a, b) = (matrix(&f, n, &xs), matrix(&f, n, &ys));
        let ab = a.mul(&b, &f).unwrap();
        prop_assert_eq!(ab.det(&f).unwrap(), f.mul(a.det(&f).unwrap(), b.det(&f).unwrap()));
        prop_assert_eq!(a.transpose().det(&f).unwrap(), a.det(&f).unwrap());
    }

    #[test]
    fn inverse_and_rank(q in order_index(), n in 1usize..5, xs in prop::collection::vec(any::<u32>(), 32)) {
        let f = field(q);
        let a = matrix(&f, n, &xs);
        let rank = a.rank(&f);
        prop_assert_eq!(rank + a.right_kernel(&f).len(), n);
        prop_assert_eq!(a.det(&f).unwrap().is_zero(), rank < n);
        match a.inverse(&f) {
            Ok(inv) => prop_assert_eq!(a.mul(&inv, &f).unwrap(), Matrix::identity(n)),
            Err(_) => prop_assert!(rank < n),
        }
        let (r, rk) = a.rref(&f);
        prop_assert_eq!(rk, rank);
        prop_assert_eq!(r.rref(&f).0, r);
        for v in a.right_kernel(&f) {
            let image: Vec<Fq> = (0..n).map(|i| a.row(i).iter().zip(&v).fold(Fq::ZERO, |s, (&x, &y)| f.add(s, f.mul(x, y)))).collect();
            prop_assert!(image.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn subspace_key_ignores_basis_choice(q in order_index(), n in 2usize..5, m in 1usize..4, xs in prop::collection::vec(any::<u32>(), 40), ys in prop::collection::vec(any::<u32>(), 40)) {
        prop_assume!(m < n);
        let f = field(q);
        let rows = Matrix::new(m, n, xs.iter().take(m * n).map(|&c| elem(&f, c)).collect()).unwrap();
        prop_assume!(rows.rank(&f) == m);
        let change = invertible(&f, m, &ys);
        let s = Subspace::from_basis(&f, &rows).unwrap();
        let t = Subspace::from_basis(&f, &change.mul(&rows, &f).unwrap()).unwrap();
        prop_assert_eq!(&s, &t);
        prop_assert_eq!(s.dim(), m);
        for v in rows.row_vectors() {
            prop_assert!(s.contains_vector(&v, &f));
        }
    }

    #[test]
    fn right_action_law(q in order_index(), n in 2usize..5, i in 0i64..8, j in 0i64..8, xs in prop::collection::vec(any::<u32>(), 48), ys in prop::collection::vec(any::<u32>(), 48), vs in prop::collection::vec(any::<u32>(), 8)) {
        let f = field(q);
        let g = SemilinearElem::new(&f, invertible(&f, n, &xs), i).unwrap();
        let h = SemilinearElem::new(&f, invertible(&f, n, &ys), j).unwrap();
        let v: Vec<Fq> = vs.iter().take(n).map(|&c| elem(&f, c)).collect();
        let gh = g.compose(&h, &f).unwrap();
        let stepwise = h.apply_vec(&g.apply_vec(&v, &f).unwrap(), &f).unwrap();
        prop_assert_eq!(gh.apply_vec(&v, &f).unwrap(), stepwise);
        let back = g.inverse(&f).apply_vec(&g.apply_vec(&v, &f).unwrap(), &f).unwrap();
        prop_assert_eq!(back, v.clone());
        prop_assert_eq!(gh.det(&f), f.mul(g.det(&f), f.frobenius(h.det(&f), -i)));
        if v.iter().any(|x| !x.is_zero()) {
            let s = Subspace::span(&f, &[v]).unwrap();
            prop_assert_eq!(gh.apply(&s, &f).unwrap(), h.apply(&g.apply(&s, &f).unwrap(), &f).unwrap());
        }
    }

    #[test]
    fn membership_is_closed(q in order_index(), n in 2usize..4, i in 0i64..8, j in 0i64..8, xs in prop::collection::vec(any::<u32>(), 48), ys in prop::collection::vec(any::<u32>(), 48)) {
        let f = field(q);
        let g = SemilinearElem::new(&f, invertible(&f, n, &xs), i).unwrap();
        let h = SemilinearElem::new(&f, invertible(&f, n, &ys), j).unwrap();
        for group in [GroupSpec::sl(n, &f), GroupSpec::gl(n, &f), GroupSpec::sigma_l(n, &f), GroupSpec::gamma_l(n, &f)] {
            let (a, b) = (group.contains(&g).unwrap(), group.contains(&h).unwrap());
            let ab = group.contains(&g.compose(&h, &f).unwrap()).unwrap();
            if a && b {
                prop_assert!(ab);
            }
            if a {
                prop_assert!(group.contains(&g.inverse(&f)).unwrap());
                prop_assert_eq!(ab, b);
            }
        }
        prop_assert!(GroupSpec::gamma_l(n, &f).contains(&g).unwrap());
    }
}

#[test]
fn omega_sizes_match_gaussian_binomials() {
    for (n, q) in [(2, 2), (3, 3), (4, 2), (4, 3), (3, 4), (5, 2)] {
        let f = field(q);
        for m in 1..=n {
            let all = enumerate_omega(&f, n, m, 100_000).unwrap();
            assert_eq!(all.len() as u128, gaussian_binomial(n, m, q));
            assert!(all.windows(2).all(|w| w[0] < w[1]), "canonical order");
            assert!(all.iter().all(|s| s.dim() == m));
        }
    }
    assert!(enumerate_omega(&field(2), 3, 0, 100).is_err());
    assert!(enumerate_omega(&field(9), 6, 3, 1000).is_err());
}
