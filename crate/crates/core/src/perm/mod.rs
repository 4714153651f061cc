//! Permutations of `{0, …, N-1}` and groups given by generators.

mod bsgs;

pub use bsgs::Chain;

use crate::error::{Error, Result};

pub type Point = u16;

/// A permutation stored by its image list. Acts on the right: `p^(xy) = (p^x)^y`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(Box<[Point]>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as Point).collect())
    }

    pub fn from_images(images: Vec<Point>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            let i = p as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument(
                    "image list is not a permutation".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_boxed_slice()))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, p: Point) -> Point {
        self.0[p as usize]
    }

    pub fn images(&self) -> &[Point] {
        &self.0
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&p| other.0[p as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0 as Point; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as Point;
        }
        Perm(inv.into_boxed_slice())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    #[inline]
    pub fn fixes(&self, p: Point) -> bool {
        self.0[p as usize] == p
    }

    pub fn first_moved(&self) -> Option<Point> {
        self.0
            .iter()
            .enumerate()
            .find(|&(i, &p)| i != p as usize)
            .map(|(i, _)| i as Point)
    }
}

/// Orbits of a group on its points. Each orbit is labelled by its smallest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    label: Vec<Point>,
    size: Vec<u32>,
}

impl Partition {
    pub fn of(degree: usize, gens: &[Perm]) -> Partition {
        const UNSEEN: Point = Point::MAX;
        let mut label = vec![UNSEEN; degree];
        let mut size = vec![0u32; degree];
        let mut stack = Vec::new();
        for start in 0..degree {
            if label[start] != UNSEEN {
                continue;
            }
            let root = start as Point;
            label[start] = root;
            stack.push(root);
            let mut count = 0u32;
            while let Some(p) = stack.pop() {
                count += 1;
                for g in gens {
                    let r = g.image(p);
                    if label[r as usize] == UNSEEN {
                        label[r as usize] = root;
                        stack.push(r);
                    }
                }
            }
            size[start] = count;
        }
        Partition { label, size }
    }

    /// Smallest point of the orbit containing `p`.
    #[inline]
    pub fn label(&self, p: Point) -> Point {
        self.label[p as usize]
    }

    #[inline]
    pub fn orbit_size(&self, p: Point) -> u32 {
        self.size[self.label[p as usize] as usize]
    }

    pub fn degree(&self) -> usize {
        self.label.len()
    }

    /// Orbit representatives (smallest points), ascending.
    pub fn representatives(&self) -> Vec<Point> {
        (0..self.label.len())
            .filter(|&p| self.label[p] as usize == p)
            .map(|p| p as Point)
            .collect()
    }

    pub fn count(&self) -> usize {
        self.representatives().len()
    }
}

/// A permutation group with its order.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    order: u128,
}

impl PermGroup {
    /// Computes the order with a deterministic Schreier–Sims run.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        check_gens(degree, &gens)?;
        let order = Chain::deterministic(degree, &gens, &[]).order();
        Ok(PermGroup {
            degree,
            gens,
            order,
        })
    }

    /// Trusts the supplied order.
    pub fn with_order(degree: usize, gens: Vec<Perm>, order: u128) -> Result<PermGroup> {
        check_gens(degree, &gens)?;
        Ok(PermGroup {
            degree,
            gens,
            order,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn orbits(&self) -> Partition {
        Partition::of(self.degree, &self.gens)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Perm::is_identity)
    }
}

fn check_gens(degree: usize, gens: &[Perm]) -> Result<()> {
    if degree > Point::MAX as usize {
        return Err(Error::ResourceBound(format!(
            "degree {degree} exceeds the point type"
        )));
    }
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::DimensionMismatch(
            "generator degree differs from the group degree".into(),
        ));
    }
    Ok(())
}
