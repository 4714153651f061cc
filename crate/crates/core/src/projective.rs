//! Subspaces of `F_q^n` in canonical form, and tuples of them.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf::{Field, Fq};
use crate::linalg::{Matrix, Vector};

/// A nonzero subspace of `F_q^n`, stored by its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    basis: Matrix,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}

impl Subspace {
    /// Span of the rows of `m`. Errors if the span is zero.
    pub fn from_basis(f: &Field, m: &Matrix) -> Result<Subspace> {
        let (basis, rank) = m.rref(f);
        if rank == 0 {
            return Err(Error::InvalidArgument("zero subspace".into()));
        }
        Ok(Subspace { basis })
    }

    pub fn span(f: &Field, vectors: &[Vector]) -> Result<Subspace> {
        Subspace::from_basis(f, &Matrix::from_rows(vectors)?)
    }

    /// `⟨e_i⟩` (0-based) in `F^n`.
    pub fn coordinate(n: usize, i: usize) -> Subspace {
        let mut v = vec![Fq::ZERO; n];
        v[i] = Fq::ONE;
        Subspace {
            basis: Matrix::from_rows(&[v]).expect("one row"),
        }
    }

    pub fn whole(n: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(n),
        }
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    #[inline]
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Canonical entry list, usable as a hash key.
    #[inline]
    pub fn key(&self) -> &[Fq] {
        self.basis.entries()
    }

    /// Coordinate indices (0-based) carrying a nonzero entry in some vector of the subspace.
    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.ambient_dim())
            .filter(|&j| (0..self.dim()).any(|i| !self.basis.get(i, j).is_zero()))
            .collect()
    }

    pub fn contains_vector(&self, v: &[Fq], f: &Field) -> bool {
        self.basis.coordinates(v, f).is_some()
    }

    pub fn contains(&self, other: &Subspace, f: &Field) -> bool {
        (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i), f))
    }

    /// `self + other`.
    pub fn join(&self, other: &Subspace, f: &Field) -> Subspace {
        let stacked = self.basis.vstack(&other.basis).expect("same ambient space");
        Subspace::from_basis(f, &stacked).expect("nonzero")
    }

    /// `self ∩ other`, or `None` when the intersection is zero.
    pub fn meet(&self, other: &Subspace, f: &Field) -> Option<Subspace> {
        let stacked = self.basis.vstack(&other.basis).expect("same ambient space");
        let k = self.dim();
        let vecs: Vec<Vector> = stacked
            .left_kernel(f)
            .into_iter()
            .map(|c| self.basis.vec_mul(&c[..k], f).expect("dims"))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        if vecs.is_empty() {
            None
        } else {
            Subspace::span(f, &vecs).ok()
        }
    }

    /// Basis of `{z : b·z = 0 for all b in self}`.
    pub fn annihilator(&self, f: &Field) -> Vec<Vector> {
        self.basis.right_kernel(f)
    }
}

/// Number of m-dimensional subspaces of `F_q^n` by the product formula.
pub fn gaussian_binomial(n: usize, m: usize, q: u64) -> u128 {
    if m > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..m {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All m-subspaces of `F^n` in canonical order (lexicographic on the RREF entries).
pub fn enumerate_omega(f: &Field, n: usize, m: usize, bound: usize) -> Result<Vec<Subspace>> {
    if m < 1 || m > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    let q = f.q() as u64;
    let count = gaussian_binomial(n, m, q);
    if count > bound as u128 {
        return Err(Error::ResourceBound(format!(
            "|Ω_{m}| = {count} exceeds bound {bound}"
        )));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut pivots: Vec<usize> = (0..m).collect();
    loop {
        // free positions: (row i, col j) with j > pivots[i] and j not a pivot
        let free: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| {
                let pivots = &pivots;
                (pivots[i] + 1..n)
                    .filter(move |j| !pivots.contains(j))
                    .map(move |j| (i, j))
            })
            .collect();
        let total = q.pow(free.len() as u32);
        for idx in 0..total {
            let mut b = Matrix::zeros(m, n);
            for (i, &p) in pivots.iter().enumerate() {
                b.set(i, p, Fq::ONE);
            }
            let mut t = idx;
            for &(i, j) in free.iter().rev() {
                b.set(i, j, Fq::from_encoding_unchecked((t % q) as u32));
                t /= q;
            }
            out.push(Subspace { basis: b });
        }
        // next combination
        let mut i = m;
        loop {
            if i == 0 {
                out.sort();
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < n - m + i {
                pivots[i] += 1;
                for k in i + 1..m {
                    pivots[k] = pivots[k - 1] + 1;
                }
                break;
            }
        }
    }
}

/// An ordered, nonempty tuple of subspaces of equal dimension in a common ambient space.
/// Repeated entries are allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct SubspaceTuple {
    entries: Vec<Subspace>,
}

impl SubspaceTuple {
    pub fn new(entries: Vec<Subspace>) -> Result<SubspaceTuple> {
        let first = entries
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty tuple".into()))?;
        let (n, m) = (first.ambient_dim(), first.dim());
        if entries.iter().any(|s| s.ambient_dim() != n || s.dim() != m) {
            return Err(Error::DimensionMismatch(
                "tuple entries differ in shape".into(),
            ));
        }
        Ok(SubspaceTuple { entries })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ambient_dim(&self) -> usize {
        self.entries[0].ambient_dim()
    }

    /// Dimension of every entry.
    pub fn entry_dim(&self) -> usize {
        self.entries[0].dim()
    }

    pub fn entries(&self) -> &[Subspace] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Subspace {
        &self.entries[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subspace> {
        self.entries.iter()
    }

    /// `⟨X⟩`.
    pub fn span(&self, f: &Field) -> Subspace {
        let mut rows = Vec::new();
        for s in &self.entries {
            rows.extend(s.basis().row_vectors());
        }
        Subspace::span(f, &rows).expect("entries are nonzero")
    }

    pub fn span_dim(&self, f: &Field) -> usize {
        self.span(f).dim()
    }

    /// Union of the supports of all entries.
    pub fn support(&self) -> BTreeSet<usize> {
        self.entries.iter().flat_map(|s| s.support()).collect()
    }

    /// The tuple with entry `i` (0-based) removed.
    pub fn delete_entry(&self, i: usize) -> Result<SubspaceTuple> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange(format!(
                "entry {i} of {}",
                self.len()
            )));
        }
        let mut entries = self.entries.clone();
        entries.remove(i);
        SubspaceTuple::new(entries)
    }

    /// Order-preserving selection of the given 0-based indices.
    pub fn subtuple(&self, indices: &[usize]) -> Result<SubspaceTuple> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.len()) {
            return Err(Error::IndexOutOfRange(format!(
                "entry {bad} of {}",
                self.len()
            )));
        }
        SubspaceTuple::new(idx.into_iter().map(|i| self.entries[i].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: &Field, c: &[u32]) -> Vector {
        c.iter().map(|&x| f.elem(x).unwrap()).collect()
    }

    #[test]
    fn omega_counts() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(enumerate_omega(&f2, 3, 1, 1000).unwrap().len(), 7);
        assert_eq!(enumerate_omega(&f2, 4, 2, 1000).unwrap().len(), 35);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(
            enumerate_omega(&f3, 3, 3, 10).unwrap(),
            vec![Subspace::whole(3)]
        );
        assert!(matches!(
            enumerate_omega(&f3, 4, 2, 100),
            Err(Error::ResourceBound(_))
        ));
        assert!(enumerate_omega(&f3, 3, 0, 100).is_err());
    }

    #[test]
    fn omega_is_sorted_and_distinct() {
        let f = Field::new(3, 1).unwrap();
        let pts = enumerate_omega(&f, 4, 2, 1000).unwrap();
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn supports() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(Subspace::coordinate(3, 1).support(), BTreeSet::from([1]));
        let f4 = Field::new(2, 2).unwrap();
        let s = Subspace::span(&f4, &[vec![Fq::ONE, f4.omega(), Fq::ZERO]]).unwrap();
        assert_eq!(s.support(), BTreeSet::from([0, 1]));
        let s = Subspace::span(&f3, &[v(&f3, &[1, 1, 0]), v(&f3, &[0, 0, 1])]).unwrap();
        assert_eq!(s.support(), BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn spans_and_subtuples() {
        let f = Field::new(3, 1).unwrap();
        let n = 4;
        let basis: Vec<Subspace> = (0..n).map(|i| Subspace::coordinate(n, i)).collect();
        let x = SubspaceTuple::new(basis.clone()).unwrap();
        assert_eq!(x.span_dim(&f), n);
        let mut ys = basis[..n - 1].to_vec();
        ys.push(Subspace::span(&f, &[v(&f, &[1, 1, 1, 0])]).unwrap());
        assert_eq!(SubspaceTuple::new(ys).unwrap().span_dim(&f), n - 1);
        assert_eq!(
            SubspaceTuple::new(vec![basis[0].clone()])
                .unwrap()
                .span_dim(&f),
            1
        );

        let t = SubspaceTuple::new(basis[..3].to_vec()).unwrap();
        assert_eq!(
            t.delete_entry(1).unwrap().entries(),
            &[basis[0].clone(), basis[2].clone()]
        );
        assert_eq!(t.subtuple(&[0, 1, 2]).unwrap(), t);
        assert_eq!(
            t.subtuple(&[0, 2]).unwrap().entries(),
            &[basis[0].clone(), basis[2].clone()]
        );
        assert!(SubspaceTuple::new(vec![basis[0].clone()])
            .unwrap()
            .delete_entry(0)
            .is_err());
    }

    #[test]
    fn meet_and_join() {
        let f = Field::new(2, 1).unwrap();
        let a = Subspace::span(&f, &[v(&f, &[1, 0, 0]), v(&f, &[0, 1, 0])]).unwrap();
        let b = Subspace::span(&f, &[v(&f, &[0, 1, 0]), v(&f, &[0, 0, 1])]).unwrap();
        assert_eq!(a.meet(&b, &f).unwrap(), Subspace::coordinate(3, 1));
        assert_eq!(a.join(&b, &f), Subspace::whole(3));
        assert!(Subspace::coordinate(3, 0)
            .meet(&Subspace::coordinate(3, 2), &f)
            .is_none());
    }
}
