#![allow(dead_code)]

use drazin_core::{Matrix, Scalar};
use proptest::prelude::*;

/// Sparse Gaussian integer with `|re|, |im| <= bound`.
pub fn gaussian(bound: i64) -> impl Strategy<Value = Scalar> {
    prop_oneof![
        2 => Just(Scalar::zero()),
        4 => (-bound..=bound).prop_map(|re| Scalar::gaussian(re, 0)),
        1 => (-bound..=bound, -bound..=bound).prop_map(|(re, im)| Scalar::gaussian(re, im)),
    ]
}

pub fn matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(gaussian(bound), rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v).unwrap())
}

pub fn square(max_n: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(move |n| matrix(n, n, bound))
}

/// `S·diag(C, N)·S⁻¹` with `N` strictly upper triangular, so the index is
/// usually positive and the core part usually nontrivial.
pub fn core_nilpotent(max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(core_nilpotent_n)
}

pub fn core_nilpotent_n(n: usize) -> impl Strategy<Value = Matrix> {
    (Just(n), 0..=n)
        .prop_flat_map(|(n, r)| {
            (
                matrix(r, r, 2),
                matrix(n - r, n - r, 2),
                unimodular(n),
            )
        })
        .prop_map(|(c, u, s)| {
            let k = u.rows();
            let nil = Matrix::from_fn(k, k, |i, j| {
                if j > i {
                    u[(i, j)].clone()
                } else {
                    Scalar::zero()
                }
            });
            let x = Matrix::block_diag(&c, &nil);
            let si = s.inverse().unwrap();
            s.mul(&x).unwrap().mul(&si).unwrap()
        })
}

/// Unit upper triangular times unit lower triangular.
pub fn unimodular(n: usize) -> impl Strategy<Value = Matrix> {
    (matrix(n, n, 1), matrix(n, n, 1)).prop_map(move |(u, l)| {
        let up = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => Scalar::one(),
            std::cmp::Ordering::Less => u[(i, j)].clone(),
            _ => Scalar::zero(),
        });
        let lo = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => Scalar::one(),
            std::cmp::Ordering::Greater => l[(i, j)].clone(),
            _ => Scalar::zero(),
        });
        up.mul(&lo).unwrap()
    })
}

pub fn any_square(max_n: usize) -> impl Strategy<Value = Matrix> {
    prop_oneof![square(max_n, 3), core_nilpotent(max_n)]
}

pub fn any_square_n(n: usize) -> impl Strategy<Value = Matrix> {
    prop_oneof![matrix(n, n, 3), core_nilpotent_n(n)]
}
