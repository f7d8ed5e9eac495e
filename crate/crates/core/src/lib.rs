//! Exact Drazin inverses of complex matrices.
//!
//! Everything here runs over Gaussian rationals (complex numbers with
//! rational real and imaginary parts), so every zero-product hypothesis is
//! decidable and every formula can be compared entry-for-entry with the
//! core-nilpotent oracle in [`drazin`].
//!
//! * [`scalar`] / [`matrix`]: exact arithmetic, rank, inverse, subspace bases.
//! * [`drazin`]: index, Drazin inverse and eigenprojection by core-nilpotent
//!   similarity. This is the ground truth.
//! * [`additive`]: closed forms for `(P + Q)^D` under zero-product
//!   conditions, the anti-triangular `[[E, I], [F, 0]]` representation and
//!   Cline's formula.
//! * [`block`]: representations of `[[A, B], [C, D]]^D` obtained by
//!   splitting the block matrix and reducing to [`additive`].
//! * [`gen`]: seeded generators of instances satisfying each hypothesis set.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod additive;
pub mod block;
pub mod drazin;
mod error;
pub mod gen;
pub mod hypothesis;
pub mod matrix;
pub mod scalar;



pub use block::{BlockApplicability, BlockInstance};
pub use drazin::{drazin_index, drazin_oracle, eigenprojection, DrazinResult};
pub use additive::{AntiTriangularParts, ClineSplit, SeqQuad};
pub use error::{Error, Result};
pub use hypothesis::{Condition, FormulaId, HypothesisReport};

pub use matrix::Matrix;
pub use scalar::Scalar;
