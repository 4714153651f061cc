//! Closed-form intervals for the relational complexity on `Ω_m`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::prime_divisors;
use crate::groupaction::GroupSpec;

/// Number of distinct prime divisors, with `ω(1) = 0`.
pub fn omega_primes(k: u64) -> Result<u32> {
    if k < 1 {
        return Err(Error::InvalidArgument(
            "omega is defined for positive integers".into(),
        ));
    }
    Ok(prime_divisors(k).len() as u32)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSources {
    pub lower: String,
    pub upper: Option<String>,
}

/// `lower ≤ RC ≤ upper`; `upper` is absent when no closed form applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: Option<usize>,
    pub sources: BoundSources,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagnostic: Option<String>,
}

impl Bounds {
    fn exact(v: usize, src: &str) -> Bounds {
        Bounds {
            lower: v,
            upper: Some(v),
            sources: BoundSources {
                lower: src.into(),
                upper: Some(src.into()),
            },
            diagnostic: None,
        }
    }

    fn interval(lo: usize, lo_src: &str, hi: usize, hi_src: &str) -> Bounds {
        Bounds {
            lower: lo,
            upper: Some(hi),
            sources: BoundSources {
                lower: lo_src.into(),
                upper: Some(hi_src.into()),
            },
            diagnostic: None,
        }
    }

    fn open(lo: usize, lo_src: &str, why: String) -> Bounds {
        Bounds {
            lower: lo,
            upper: None,
            sources: BoundSources {
                lower: lo_src.into(),
                upper: None,
            },
            diagnostic: Some(why),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= self.lower && self.upper.is_none_or(|u| v <= u)
    }

    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }
}

/// The tightest published interval for the image of `group` acting on `Ω_m`.
///
/// `Ω_m` and `Ω_{n−m}` are isomorphic permutation domains (via orthogonal
/// complements), so `m > n/2` is folded onto `n − m`.
pub fn theorem_bounds(group: &GroupSpec, m: usize) -> Bounds {
    let n = group.n();
    if m == 0 || m >= n {
        return Bounds::open(
            1,
            "trivial action",
            format!("m = {m} gives at most one point for n = {n}"),
        );
    }
    let m = m.min(n - m);
    let q = group.field().q() as usize;
    let e = group.aut_index() as u64;
    let we = omega_primes(e).expect("e >= 1") as usize;
    let full = group.contains_pgl();
    if m >= 2 {
        let lo = m * n - m * m + 1;
        let hi = (m + 1) * n - 2 * m + 2 + we;
        return Bounds::interval(
            lo,
            "m-space tuple construction",
            hi,
            "m-space height bound with omega(e)",
        );
    }
    let general_lo = n.max(2);
    if n == 2 {
        if e == 1 {
            if q == 2 {
                return Bounds::exact(2, "PGL_n(2) equals n");
            }
            if q == 3 && full {
                return Bounds::exact(2, "PGL_2(3) equals n");
            }
            if q >= 4 && (full || q >= 7) {
                return Bounds::exact(4, "n = 2, q >= 4: equals n + 2");
            }
            return Bounds::open(
                general_lo,
                "general lower bound n",
                format!("no closed form for this subgroup of PGL_2({q})"),
            );
        }
        if q >= 8 {
            if q == 9 && group.within_sigma_l() && !full && e == 2 {
                return Bounds::exact(3, "PSigmaL_2(9) exception");
            }
            return Bounds::interval(
                4,
                "n = 2 semilinear lower bound",
                4 + we,
                "n = 2 height plus omega(e)",
            );
        }
        return Bounds::open(
            general_lo,
            "general lower bound n",
            format!("n = 2 with e > 1 needs q >= 8, got q = {q}"),
        );
    }
    if e == 1 {
        if full {
            return if q <= 3 {
                Bounds::exact(n, "PGL_n(q), q <= 3: equals n")
            } else {
                Bounds::exact(n + 2, "PGL_n(q), q >= 4: equals n + 2")
            };
        }
        return if n == 3 {
            Bounds::exact(5, "below PGL_3(q): equals 2n - 1")
        } else {
            Bounds::exact(2 * n - 2, "below PGL_n(q), n >= 4: equals 2n - 2")
        };
    }
    let mut lo = n + 2;
    let mut src = "semilinear lower bound n + 2";
    if full && n + 3 > lo {
        lo = n + 3;
        src = "above PGL_n(q): lower bound n + 3";
    }
    if n >= 4 && group.det_coset_gap().is_some() && 2 * n - 2 > lo {
        lo = 2 * n - 2;
        src = "missing determinant coset: lower bound 2n - 2";
    }
    Bounds::interval(lo, src, 2 * n - 1 + we, "height 2n - 2 plus omega(e)")
}
