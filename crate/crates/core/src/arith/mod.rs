//! Exact field arithmetic over ℚ(i) and the linear algebra built on it.

mod linalg;
mod matrix;
mod scalar;
mod vector;

pub use linalg::{gram, kernel_basis, project_onto_span, psd_check, rank, rref, solve};
pub use matrix::QMatrix;
pub use scalar::GaussianRational;
pub use vector::{inner_product, QVector};

pub use malachite_q::Rational;
