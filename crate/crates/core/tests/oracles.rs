//! Library results against independent brute-force computations.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use relcomp::cli::prime_power;
use relcomp::gf::{Field, Fq};
use relcomp::groupaction::{tuple_equivalent, GroupMode, GroupSpec, SemilinearElem};
use relcomp::linalg::Matrix;
use relcomp::perm::Perm;
use relcomp::projective::SubspaceTuple;
use relcomp::relcomp::{omega_primes, rc_bruteforce, theorem_bounds, ActionHandle};
use relcomp::witnesses::{alpha_admissible, case_b_square_count, find_case_b_params};

fn field(q: u64) -> Field {
    let (p, f) = prime_power(q).unwrap();
    Field::new(p, f).unwrap()
}

/// Every group between SL and ΓL reachable from presets and `(d, e)` parameters, deduplicated.
fn all_groups(n: usize, f: &Field) -> Vec<GroupSpec> {
    let q = f.q();
    let mut modes = vec![
        GroupMode::SL,
        GroupMode::GL,
        GroupMode::SigmaL,
        GroupMode::GammaL,
    ];
    for d in (1..q).filter(|d| (q - 1).is_multiple_of(*d)) {
        for e in (1..=f.degree()).filter(|e| f.degree().is_multiple_of(*e)) {
            modes.push(GroupMode::Parametric { d, e });
        }
    }
    let mut out: Vec<GroupSpec> = Vec::new();
    for mode in modes {
        let g = GroupSpec::new(mode, n, f).unwrap();
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

fn all_matrices(n: usize, f: &Field) -> impl Iterator<Item = Matrix> + '_ {
    let q = f.q() as u64;
    let cells = (n * n) as u32;
    (0..q.pow(cells)).map(move |mut code| {
        let data = (0..n * n)
            .map(|_| {
                let e = f.elem((code % q) as u32).unwrap();
                code /= q;
                e
            })
            .collect();
        Matrix::new(n, n, data).unwrap()
    })
}

/// `{det(g)^(φ^i) : g φ^i ∈ H Z}` by running over every matrix and scalar.
fn achievable_dets(h: &GroupSpec) -> BTreeSet<Fq> {
    let f = h.field();
    let n = h.n();
    let mut out = BTreeSet::new();
    for g in all_matrices(n, f) {
        let det = g.det(f).unwrap();
        if det.is_zero() {
            continue;
        }
        for i in 0..f.degree() {
            let in_hz = f.units().any(|c| {
                let x = SemilinearElem::new(f, g.scale(c, f), i as i64).unwrap();
                h.contains(&x).unwrap()
            });
            if in_hz {
                out.insert(f.frobenius(det, i as i64));
            }
        }
    }
    out
}

#[test]
fn alpha_admissibility_matches_enumeration() {
    let cases: &[(usize, &[u64])] = &[(2, &[3, 4, 5, 7, 8, 9]), (3, &[2, 3, 4])];
    for &(n, qs) in cases {
        for &q in qs {
            let f = field(q);
            for h in all_groups(n, &f) {
                let reach = achievable_dets(&h);
                for a in f.units() {
                    assert_eq!(
                        alpha_admissible(&h, a),
                        !reach.contains(&a),
                        "{}_{n}({q}), alpha {a:?}",
                        h.mode()
                    );
                }
                assert_eq!(
                    h.det_coset_gap(),
                    f.units().find(|a| !reach.contains(a)),
                    "{}_{n}({q})",
                    h.mode()
                );
            }
        }
    }
}

fn squares(f: &Field) -> HashSet<Fq> {
    f.units().map(|x| f.mul(x, x)).collect()
}

fn theta(f: &Field, lambda: Fq, mu: Fq) -> Fq {
    let num = f.sub(Fq::ONE, f.mul(f.mul(lambda, lambda), mu));
    f.div(num, f.sub(Fq::ONE, mu)).unwrap()
}

#[test]
fn case_b_counts() {
    for q in [11u64, 13, 17, 19, 23, 25, 27, 29, 31, 49, 81, 125, 243] {
        let f = field(q);
        let sq = squares(&f);
        let minus_one = f.neg(Fq::ONE);
        for lambda in f.units().filter(|&l| l != Fq::ONE && l != minus_one) {
            let naive = f
                .elements()
                .filter(|&t| !t.is_zero() && t != Fq::ONE)
                .filter(|&t| sq.contains(&theta(&f, lambda, t)))
                .count();
            assert_eq!(case_b_square_count(&f, lambda), naive, "q = {q}");
            assert_eq!(
                naive,
                (q as usize - 1) / 2 - 2,
                "q = {q}, lambda {lambda:?}"
            );
        }
    }
}

#[test]
fn case_b_parameters_exist() {
    for q in [11u64, 13, 25, 27, 49, 243] {
        let f = field(q);
        let (lambda, tau) = find_case_b_params(&f).unwrap();
        assert!(squares(&f).contains(&theta(&f, lambda, tau)), "q = {q}");
        let target = f.mul(f.mul(lambda, lambda), tau);
        let mut image = tau;
        for _ in 0..f.degree() {
            assert_ne!(image, target, "q = {q}");
            image = f.pow(image, f.p() as i64).unwrap();
        }
    }
    assert!(find_case_b_params(&field(8)).is_err());
}

#[test]
fn omega_matches_trial_division() {
    assert_eq!(omega_primes(1).unwrap(), 0);
    assert_eq!(omega_primes(6).unwrap(), 2);
    assert_eq!(omega_primes(8).unwrap(), 1);
    assert!(omega_primes(0).is_err());
    for k in 1u64..3000 {
        let naive = (2..=k)
            .filter(|&d| k % d == 0 && (2..d).all(|e| d % e != 0))
            .count() as u32;
        assert_eq!(omega_primes(k).unwrap(), naive, "k = {k}");
    }
}

/// Orbit of a point tuple under the generators, by breadth-first search.
fn tuple_orbit(gens: &[Perm], start: Vec<u16>) -> HashSet<Vec<u16>> {
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for g in gens {
            let img: Vec<u16> = t.iter().map(|&p| g.image(p)).collect();
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    seen
}

#[test]
fn tuple_equivalence_matches_orbits() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cases = [
        ("GL", 2, 5u64, 1usize),
        ("SL", 2, 7, 1),
        ("SigmaL", 2, 9, 1),
        ("SL", 3, 3, 1),
        ("GL", 4, 2, 2),
        ("GammaL", 3, 4, 1),
    ];
    for (mode, n, q, m) in cases {
        let f = field(q);
        let mode = match mode {
            "SL" => GroupMode::SL,
            "GL" => GroupMode::GL,
            "SigmaL" => GroupMode::SigmaL,
            _ => GroupMode::GammaL,
        };
        let h = GroupSpec::new(mode, n, &f).unwrap();
        let action = ActionHandle::new(&h, m).unwrap();
        let d = action.degree() as u16;
        let gens = action.perm_group().gens().to_vec();
        for _ in 0..12 {
            let k = rng.gen_range(1..=3);
            let xs: Vec<u16> = (0..k).map(|_| rng.gen_range(0..d)).collect();
            let orbit = tuple_orbit(&gens, xs.clone());
            let ys: Vec<u16> = if rng.gen_bool(0.5) {
                let mut v: Vec<&Vec<u16>> = orbit.iter().collect();
                v.sort();
                v[rng.gen_range(0..v.len())].clone()
            } else {
                (0..k).map(|_| rng.gen_range(0..d)).collect()
            };
            let tuple = |pts: &[u16]| {
                SubspaceTuple::new(
                    pts.iter()
                        .map(|&p| action.points()[p as usize].clone())
                        .collect(),
                )
                .unwrap()
            };
            let (x, y) = (tuple(&xs), tuple(&ys));
            let found = tuple_equivalent(&h, &x, &y).unwrap();
            assert_eq!(
                found.is_some(),
                orbit.contains(&ys),
                "{} {xs:?} -> {ys:?}",
                h.mode()
            );
            if let Some(g) = found {
                assert!(h.contains(&g).unwrap());
                assert_eq!(g.apply_tuple(&x, &f).unwrap(), y);
            }
        }
    }
}

#[test]
fn bruteforce_reference_values() {
    let f3 = field(3);
    let pgl23 = ActionHandle::new(&GroupSpec::gl(2, &f3), 1).unwrap();
    assert_eq!(rc_bruteforce(&pgl23, 4).unwrap(), 2);
    // (a, b) and (b, a) are not 1-equivalent under the trivial group: the
    // entries themselves would have to match
    let trivial = ActionHandle::from_permutations(2, vec![]).unwrap();
    assert_eq!(rc_bruteforce(&trivial, 3).unwrap(), 1);
    let s3 = ActionHandle::from_permutations(
        3,
        vec![
            Perm::from_images(vec![1, 2, 0]).unwrap(),
            Perm::from_images(vec![1, 0, 2]).unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(rc_bruteforce(&s3, 4).unwrap(), 2);
    let a4 = ActionHandle::from_permutations(
        4,
        vec![
            Perm::from_images(vec![1, 2, 0, 3]).unwrap(),
            Perm::from_images(vec![0, 2, 3, 1]).unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(rc_bruteforce(&a4, 4).unwrap(), 3);
    assert!(rc_bruteforce(&pgl23, 0).is_err());
}

#[test]
fn bounds_reference_values() {
    let b = theorem_bounds(&GroupSpec::gl(3, &field(4)), 1);
    assert_eq!((b.lower, b.upper), (5, Some(5)));
    let b = theorem_bounds(&GroupSpec::gamma_l(2, &field(243)), 1);
    assert_eq!((b.lower, b.upper), (4, Some(5)));
    for q in [3, 5, 7, 9] {
        let b = theorem_bounds(&GroupSpec::sl(4, &field(q)), 1);
        assert_eq!((b.lower, b.upper), (6, Some(6)), "q = {q}");
    }
    for q in [2, 3, 5, 7] {
        for h in [GroupSpec::sl(4, &field(q)), GroupSpec::gl(4, &field(q))] {
            let b = theorem_bounds(&h, 2);
            assert_eq!((b.lower, b.upper), (5, Some(10)), "q = {q}");
        }
    }
}
