//! Drazin inverse, index and eigenprojection by core-nilpotent similarity.
//!
//! With `k = ind(A)`, the columns of `A^k` span the core part and its kernel
//! the nilpotent part. Stacking bases of both gives an invertible `S` with
//! `S⁻¹AS = diag(C, N)`, and `A^D = S·diag(C⁻¹, 0)·S⁻¹`. Nothing here depends
//! on any of the closed-form representations in [`crate::additive`] or
//! [`crate::block`]; they are all checked against this.

use crate::error::{Error, Result};
use crate::matrix::{prod, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrazinResult {
    /// `A^D`.
    pub drazin: Matrix,
    /// Smallest `k` with `rank(A^k) = rank(A^{k+1})`.
    pub index: usize,
    /// `A^π = I - A·A^D`.
    pub eigenprojection: Matrix,
}

fn require_square(a: &Matrix, op: &'static str) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            op,
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(a.rows())
}

/// Index together with `A^k`, which the oracle needs anyway.
fn index_and_power(a: &Matrix) -> Result<(usize, Matrix)> {
    let n = require_square(a, "drazin_index")?;
    let mut power = Matrix::identity(n);
    let mut rank = n;
    for k in 0..=n {
        let next = power.mul(a)?;
        let next_rank = next.rank();
        if next_rank == rank {
            return Ok((k, power));
        }
        power = next;
        rank = next_rank;
    }
    // rank strictly decreased n+1 times starting from n: impossible
    Err(Error::InvariantViolation("rank sequence failed to stabilise"))
}

pub fn drazin_index(a: &Matrix) -> Result<usize> {
    index_and_power(a).map(|(k, _)| k)
}

pub fn drazin_oracle(a: &Matrix) -> Result<DrazinResult> {
    let n = require_square(a, "drazin_oracle")?;
    let (index, ak) = index_and_power(a)?;
    let drazin = if index == 0 {
        a.inverse()?
    } else {
        let core = ak.column_space_basis();
        let r = core.cols();
        let s = core.hstack(&ak.null_space_basis())?;
        let s_inv = s
            .inverse()
            .map_err(|_| Error::InvariantViolation("core-nilpotent basis is singular"))?;
        let t = prod(&[&s_inv, a, &s])?;
        if !t.submatrix(0, r, r, n - r).is_zero() || !t.submatrix(r, 0, n - r, r).is_zero() {
            return Err(Error::InvariantViolation("core-nilpotent split is not block diagonal"));
        }
        let c_inv = t
            .submatrix(0, 0, r, r)
            .inverse()
            .map_err(|_| Error::InvariantViolation("core block is singular"))?;
        let mid = Matrix::block_diag(&c_inv, &Matrix::zeros(n - r, n - r));
        prod(&[&s, &mid, &s_inv])?
    };
    let eigenprojection = Matrix::identity(n).sub(&a.mul(&drazin)?)?;
    Ok(DrazinResult {
        drazin,
        index,
        eigenprojection,
    })
}

/// `A^π = I - A·A^D`.
pub fn eigenprojection(a: &Matrix) -> Result<Matrix> {
    drazin_oracle(a).map(|r| r.eigenprojection)
}

/// Checks `AX = XA`, `XAX = X` and `A^{k+1}X = A^k` with `k = ind(A)`.
///
/// By uniqueness, passing all three means `x` is the Drazin inverse of `a`.
/// Only ranks of powers of `a` are computed, never an inverse.
pub fn satisfies_drazin_axioms(a: &Matrix, x: &Matrix) -> Result<bool> {
    require_square(a, "satisfies_drazin_axioms")?;
    if a.shape() != x.shape() {
        return Ok(false);
    }
    let ax = a.mul(x)?;
    if ax != x.mul(a)? {
        return Ok(false);
    }
    if x.mul(&ax)? != *x {
        return Ok(false);
    }
    let (_, ak) = index_and_power(a)?;
    Ok(ak.mul(a)?.mul(x)? == ak)
}
