mod common;

use drazin_core::additive::seq_quad;
use drazin_core::{drazin_oracle, Matrix};
use proptest::prelude::*;

fn t_matrix(e: &Matrix, f: &Matrix) -> Matrix {
    let fd = drazin_oracle(f).unwrap().drazin;
    let ffd = f.mul(&fd).unwrap();
    let corner = ffd.mul(e).unwrap().mul(&fd).unwrap().neg();
    Matrix::block2(&Matrix::zeros(f.rows(), f.rows()), &fd, &ffd, &corner).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quads_are_odd_powers_of_t(
        (e, f) in (1usize..=4).prop_flat_map(|n| (common::matrix(n, n, 2), common::any_square_n(n)))
    ) {
        let t = t_matrix(&e, &f);
        for i in 1..=4usize {
            let q = seq_quad(&e, &f, i).unwrap();
            prop_assert_eq!(q.i, i);
            let blocks = Matrix::block2(&q.a, &q.b, &q.c, &q.d).unwrap();
            prop_assert_eq!(blocks, t.pow(2 * i as u32 + 1).unwrap());
        }
    }
}

#[test]
fn index_zero_is_rejected() {
    let e = Matrix::identity(2);
    assert!(seq_quad(&e, &e, 0).is_err());
}
