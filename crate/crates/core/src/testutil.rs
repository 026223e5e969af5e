use proptest::prelude::*;

use crate::arith::{GaussianRational, QMatrix, QVector};

pub fn g(a: i64, b: i64) -> GaussianRational {
    GaussianRational::int(a, b)
}

pub fn m(rows: &[&[(i64, i64)]]) -> QMatrix {
    QMatrix::from_int_pairs(rows)
}

pub fn v(entries: &[(i64, i64)]) -> QVector {
    entries.iter().map(|&(a, b)| g(a, b)).collect()
}

pub fn arb_scalar() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(a, b, q)| GaussianRational::frac(a, q, b, q))
}

pub fn arb_vector(n: usize) -> impl Strategy<Value = QVector> {
    proptest::collection::vec(arb_scalar(), n).prop_map(QVector::new)
}

pub fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = QMatrix> {
    proptest::collection::vec(arb_scalar(), r * c)
        .prop_map(move |xs| QMatrix::from_fn(r, c, |i, j| xs[i * c + j].clone()))
}
