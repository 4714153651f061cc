//! Relational complexity, height and irredundant base size of groups
//! `SL_n(q) ⊴ H ≤ ΓL_n(q)` acting on the m-dimensional subspaces of `F_q^n`,
//! together with explicit lower-bound witness constructions and a verifier.

pub mod cli;
pub mod error;
pub mod gf;
pub mod groupaction;
pub mod linalg;
pub mod perm;
pub mod projective;
pub mod relcomp;
pub mod witnesses;

pub use error::{Error, Result};
