//! Exact arithmetic in GF(p^f).
//!
//! Elements are stored by their integer encoding `Σ c_i p^i`, where `c_i` is
//! the coefficient of `x^i` in the polynomial representative modulo the
//! field's modulus. The encoding is canonical, so equality of [`Fq`] values
//! is equality of field elements.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field element, stored as its integer encoding in `[0, q)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fq(u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    /// Wraps an encoding without range checking. Use [`Field::elem`] for
    /// untrusted input.
    #[inline]
    pub const fn from_encoding_unchecked(code: u32) -> Self {
        Fq(code)
    }

    #[inline]
    pub const fn encoding(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Limits applied when constructing a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldConfig {
    /// Largest field order accepted.
    pub max_q: u64,
    /// Fields up to this order use exp/log tables; larger ones use
    /// polynomial multiplication and extended-Euclid inversion.
    pub table_limit: u64,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig {
            max_q: 1024,
            table_limit: 1024,
        }
    }
}

struct Tables {
    /// `exp[k] = ω^k` for `k < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
    /// Full addition table, only for odd characteristic.
    add: Option<Vec<u32>>,
}

struct FieldInner {
    p: u32,
    f: u32,
    q: u32,
    /// Monic modulus, low degree first, length `f + 1`.
    modulus: Vec<u32>,
    omega: Fq,
    tables: Option<Tables>,
}

/// A finite field GF(p^f) with a fixed modulus and primitive element.
///
/// Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.f, self.0.modulus)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// Dense polynomial helpers over Z_p, low degree first.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &mi) in m.iter().enumerate() {
            let t = (c as u64 * mi as u64) % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - t) % p as u64) as u32;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut v: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    poly_trim(&mut v);
    v
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut v: Vec<u32> = (0..n)
        .map(|i| {
            let x = *a.get(i).unwrap_or(&0);
            let y = *b.get(i).unwrap_or(&0);
            (x + p - y) % p
        })
        .collect();
    poly_trim(&mut v);
    v
}

/// Quotient and remainder of `a / b` over Z_p.
fn poly_divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    let mut quo = vec![0u32; r.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        quo[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            let t = (c as u64 * bi as u64) % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - t) % p as u64) as u32;
        }
        poly_trim(&mut r);
    }
    poly_trim(&mut quo);
    (quo, r)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, a != 0 mod p
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    if deg <= 1 {
        return true;
    }
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut cand = vec![0u32; d + 1];
            let mut t = idx;
            for c in cand.iter_mut().take(d) {
                *c = (t % p as u64) as u32;
                t /= p as u64;
            }
            cand[d] = 1;
            if poly_rem(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// GF(p^f) with the lexicographically smallest monic irreducible modulus
    /// (coefficients compared from the constant term up) and the smallest
    /// primitive element in encoding order.
    pub fn new(p: u64, f: u32) -> Result<Field> {
        Self::with_config(p, f, FieldConfig::default())
    }

    pub fn with_config(p: u64, f: u32, config: FieldConfig) -> Result<Field> {
        let q = Self::check_params(p, f, config)?;
        let p32 = p as u32;
        let fz = f as usize;
        // Enumerate lower coefficient vectors with c_0 most significant.
        for idx in 0..q {
            let mut coeffs = vec![0u32; fz + 1];
            let mut t = idx;
            for k in (0..fz).rev() {
                coeffs[k] = (t % p) as u32;
                t /= p;
            }
            coeffs[fz] = 1;
            if is_irreducible(&coeffs, p32) {
                return Self::build(p32, f, coeffs, config);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    /// GF(p^f) with a caller-supplied monic irreducible modulus (low degree first).
    pub fn with_modulus(p: u64, modulus: &[u32]) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        let f = (modulus.len() - 1) as u32;
        let config = FieldConfig::default();
        Self::check_params(p, f, config)?;
        let p32 = p as u32;
        if modulus[f as usize] != 1 || modulus.iter().any(|&c| c >= p32) {
            return Err(Error::InvalidArgument(
                "modulus must be monic with coefficients in [0, p)".into(),
            ));
        }
        if !is_irreducible(modulus, p32) {
            return Err(Error::InvalidArgument("modulus is reducible".into()));
        }
        Self::build(p32, f, modulus.to_vec(), config)
    }

    fn check_params(p: u64, f: u32, config: FieldConfig) -> Result<u64> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f < 1 {
            return Err(Error::ZeroDegree);
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q <= u32::MAX as u64 / 2)
            .ok_or(Error::FieldTooLarge {
                q: u64::MAX,
                bound: config.max_q,
            })?;
        if q > config.max_q {
            return Err(Error::FieldTooLarge {
                q,
                bound: config.max_q,
            });
        }
        Ok(q)
    }

    fn build(p: u32, f: u32, modulus: Vec<u32>, config: FieldConfig) -> Result<Field> {
        let q = p.pow(f);
        let mut inner = FieldInner {
            p,
            f,
            q,
            modulus,
            omega: Fq::ONE,
            tables: None,
        };
        let field = Field(Arc::new(FieldInner {
            p,
            f,
            q,
            modulus: inner.modulus.clone(),
            omega: Fq::ONE,
            tables: None,
        }));
        let omega = (1..q)
            .map(Fq)
            .find(|&a| field.is_primitive(a))
            .expect("the multiplicative group is cyclic");
        inner.omega = omega;
        if (q as u64) <= config.table_limit {
            let n = (q - 1) as usize;
            let mut exp = vec![0u32; 2 * n.max(1)];
            let mut log = vec![0u32; q as usize];
            let mut x = Fq::ONE;
            for k in 0..n {
                exp[k] = x.0;
                log[x.0 as usize] = k as u32;
                x = field.mul_poly(x, omega);
            }
            for k in n..2 * n {
                exp[k] = exp[k - n];
            }
            let add = if p != 2 {
                let qs = q as usize;
                let mut t = vec![0u32; qs * qs];
                for a in 0..q {
                    for b in 0..q {
                        t[a as usize * qs + b as usize] = field.add_digits(Fq(a), Fq(b)).0;
                    }
                }
                Some(t)
            } else {
                None
            };
            inner.tables = Some(Tables { exp, log, add });
        }
        Ok(Field(Arc::new(inner)))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.f
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Monic modulus, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The fixed primitive element ω.
    #[inline]
    pub fn omega(&self) -> Fq {
        self.0.omega
    }

    pub fn elem(&self, code: u32) -> Result<Fq> {
        if code < self.0.q {
            Ok(Fq(code))
        } else {
            Err(Error::InvalidArgument(format!(
                "encoding {code} out of range for q = {}",
                self.0.q
            )))
        }
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.0.q).map(Fq)
    }

    /// Nonzero elements in encoding order.
    pub fn units(&self) -> impl Iterator<Item = Fq> {
        (1..self.0.q).map(Fq)
    }

    pub fn coeffs(&self, a: Fq) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.f as usize);
        let mut t = a.0;
        for _ in 0..self.0.f {
            out.push(t % self.0.p);
            t /= self.0.p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Fq {
        let mut code = 0u32;
        for k in (0..self.0.f as usize).rev() {
            code = code * self.0.p + coeffs.get(k).copied().unwrap_or(0) % self.0.p;
        }
        Fq(code)
    }

    fn add_digits(&self, a: Fq, b: Fq) -> Fq {
        let p = self.0.p;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.0.f {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Fq(out)
    }

    fn mul_poly(&self, a: Fq, b: Fq) -> Fq {
        let prod = poly_mul(&self.coeffs(a), &self.coeffs(b), self.0.p);
        self.from_coeffs(&poly_rem(&prod, &self.0.modulus, self.0.p))
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.0.p == 2 {
            return Fq(a.0 ^ b.0);
        }
        if self.0.f == 1 {
            let s = a.0 + b.0;
            return Fq(if s >= self.0.p { s - self.0.p } else { s });
        }
        match &self.0.tables {
            Some(Tables { add: Some(t), .. }) => {
                Fq(t[a.0 as usize * self.0.q as usize + b.0 as usize])
            }
            _ => self.add_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        if self.0.p == 2 || a.0 == 0 {
            return a;
        }
        if self.0.f == 1 {
            return Fq(self.0.p - a.0);
        }
        let p = self.0.p;
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.0.f {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Fq(out)
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        match &self.0.tables {
            Some(t) => Fq(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_poly(a, b),
        }
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        match &self.0.tables {
            Some(t) => {
                let n = self.0.q - 1;
                let l = t.log[a.0 as usize];
                Ok(Fq(t.exp[((n - l) % n) as usize]))
            }
            None => Ok(self.inv_euclid(a)),
        }
    }

    /// Inverse by the extended Euclidean algorithm on polynomial representatives.
    fn inv_euclid(&self, a: Fq) -> Fq {
        let p = self.0.p;
        let (mut r0, mut r1) = (self.0.modulus.clone(), self.coeffs(a));
        poly_trim(&mut r1);
        let (mut s0, mut s1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (quo, rem) = poly_divrem(&r0, &r1, p);
            let s2 = poly_sub(&s0, &poly_mul(&quo, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant
        let c = inv_mod(r0[0], p);
        let s: Vec<u32> = s0
            .iter()
            .map(|&x| (x as u64 * c as u64 % p as u64) as u32)
            .collect();
        self.from_coeffs(&poly_rem(&s, &self.0.modulus, p))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` for any integer `k`; negative exponents need `a != 0`.
    pub fn pow(&self, a: Fq, k: i64) -> Result<Fq> {
        if a.0 == 0 {
            return match k.signum() {
                0 => Ok(Fq::ONE),
                1 => Ok(Fq::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = (self.0.q - 1) as i64;
        let e = k.rem_euclid(n) as u64;
        if let Some(t) = &self.0.tables {
            let l = t.log[a.0 as usize] as u64;
            return Ok(Fq(t.exp[(l * e % n as u64) as usize]));
        }
        let mut result = Fq::ONE;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Ok(result)
    }

    /// `ω^k`.
    pub fn omega_pow(&self, k: i64) -> Fq {
        self.pow(self.omega(), k).expect("ω is nonzero")
    }

    /// Discrete logarithm to base ω.
    pub fn log(&self, a: Fq) -> Result<u32> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.0.tables {
            return Ok(t.log[a.0 as usize]);
        }
        let mut x = Fq::ONE;
        for k in 0..self.0.q - 1 {
            if x == a {
                return Ok(k);
            }
            x = self.mul(x, self.omega());
        }
        unreachable!("ω is primitive")
    }

    /// The automorphism `a ↦ a^(p^i)`; `i` is reduced modulo `f`.
    pub fn frobenius(&self, a: Fq, i: i64) -> Fq {
        let i = i.rem_euclid(self.0.f as i64) as u32;
        if i == 0 || a.0 == 0 {
            return a;
        }
        let e = (self.0.p as i64).pow(i);
        self.pow(a, e).expect("nonzero")
    }

    pub fn multiplicative_order(&self, a: Fq) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = (self.0.q - 1) as u64;
        let mut ord = n;
        for r in prime_divisors(n) {
            while ord.is_multiple_of(r) && self.pow_u(a, ord / r) == Fq::ONE {
                ord /= r;
            }
        }
        Ok(ord)
    }

    fn pow_u(&self, a: Fq, mut e: u64) -> Fq {
        let mut result = Fq::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_any(result, base);
            }
            base = self.mul_any(base, base);
            e >>= 1;
        }
        result
    }

    // Multiplication usable before tables exist.
    fn mul_any(&self, a: Fq, b: Fq) -> Fq {
        if self.0.tables.is_some() {
            self.mul(a, b)
        } else {
            self.mul_poly(a, b)
        }
    }

    fn is_primitive(&self, a: Fq) -> bool {
        if a.0 == 0 {
            return false;
        }
        let n = (self.0.q - 1) as u64;
        if n == 1 {
            return a == Fq::ONE;
        }
        prime_divisors(n)
            .into_iter()
            .all(|r| self.pow_u(a, n / r) != Fq::ONE)
    }

    /// Whether `a` is a `k`-th power in F*, i.e. `a^((q-1)/gcd(k, q-1)) = 1`.
    pub fn is_kth_power(&self, a: Fq, k: u64) -> Result<bool> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if k == 0 {
            return Err(Error::InvalidArgument("k must be positive".into()));
        }
        let n = (self.0.q - 1) as u64;
        Ok(self.pow_u(a, n / gcd(k, n)) == Fq::ONE)
    }

    pub fn is_square(&self, a: Fq) -> bool {
        a.0 != 0 && self.is_kth_power(a, 2).unwrap_or(false)
    }

    /// Some `b` with `b^k = a`, if one exists (smallest in encoding order).
    pub fn kth_root(&self, a: Fq, k: u64) -> Option<Fq> {
        self.units().find(|&b| self.pow_u(b, k) == a)
    }

    /// Serializable description `(p, f, modulus)`.
    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.0.p,
            f: self.0.f,
            modulus: self.0.modulus.clone(),
        }
    }
}

/// Wire form of a field: characteristic, degree and modulus coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub f: u32,
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field> {
        let field = Field::with_modulus(self.p as u64, &self.modulus)?;
        if field.degree() != self.f {
            return Err(Error::InvalidArgument(
                "modulus degree does not match f".into(),
            ));
        }
        Ok(field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(field: &Field, coeffs: &[u32]) -> Fq {
        field.from_coeffs(coeffs)
    }

    #[test]
    fn gf4_modulus_and_omega() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.omega(), el(&f, &[0, 1]));
        // x · x = x + 1
        let x = el(&f, &[0, 1]);
        assert_eq!(f.mul(x, x), el(&f, &[1, 1]));
        assert_eq!(f.frobenius(x, 1), el(&f, &[1, 1]));
    }

    #[test]
    fn gf3_prime_field() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.omega(), Fq(2));
    }

    #[test]
    fn gf9_modulus_omega_frobenius() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let xp1 = el(&f, &[1, 1]);
        assert_eq!(f.omega(), xp1);
        assert_eq!(f.pow(xp1, 8).unwrap(), Fq::ONE);
        assert_eq!(f.pow(xp1, 2).unwrap(), el(&f, &[0, 2]));
        assert_eq!(f.pow(xp1, 4).unwrap(), el(&f, &[2, 0]));
        assert_eq!(f.frobenius(xp1, 1), el(&f, &[1, 2]));
        assert_eq!(f.frobenius(xp1, 0), xp1);
    }

    #[test]
    fn power_subgroup() {
        let f = Field::new(3, 2).unwrap();
        let w = f.omega();
        assert!(f.is_kth_power(f.mul(w, w), 2).unwrap());
        assert!(!f.is_kth_power(w, 2).unwrap());
        for k in 1..10 {
            assert!(f.is_kth_power(Fq::ONE, k).unwrap());
        }
        assert_eq!(f.is_kth_power(Fq::ZERO, 2), Err(Error::DivisionByZero));
    }

    #[test]
    fn errors() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(2, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(
            Field::new(2, 11),
            Err(Error::FieldTooLarge { .. })
        ));
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.inv(Fq::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.inv(Fq::ONE).unwrap(), Fq::ONE);
    }

    #[test]
    fn euclid_inverse_matches_tables() {
        let cfg = FieldConfig {
            max_q: 1 << 14,
            table_limit: 0,
        };
        let slow = Field::with_config(3, 3, cfg).unwrap();
        let fast = Field::new(3, 3).unwrap();
        assert_eq!(slow.omega(), fast.omega());
        for a in fast.units() {
            assert_eq!(slow.inv(a).unwrap(), fast.inv(a).unwrap());
            assert_eq!(slow.mul(a, slow.omega()), fast.mul(a, fast.omega()));
            assert_eq!(slow.frobenius(a, 1), fast.frobenius(a, 1));
        }
    }

    #[test]
    fn large_untabled_field() {
        let cfg = FieldConfig {
            max_q: 1 << 13,
            table_limit: 1024,
        };
        let f = Field::with_config(2, 12, cfg).unwrap();
        let w = f.omega();
        assert_eq!(f.multiplicative_order(w).unwrap(), 4095);
        assert_eq!(f.mul(w, f.inv(w).unwrap()), Fq::ONE);
    }

    #[test]
    fn spec_round_trip() {
        let f = Field::new(5, 2).unwrap();
        let g = f.spec().build().unwrap();
        assert_eq!(f, g);
        assert_eq!(f.omega(), g.omega());
    }
}
