use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use super::GaussianRational;
use crate::error::{Error, Result};

/// A vector in ℚ(i)ⁿ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QVector(Vec<GaussianRational>);

impl QVector {
    pub fn new(entries: Vec<GaussianRational>) -> Self {
        QVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        QVector(vec![GaussianRational::ZERO; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = GaussianRational::ONE;
        v
    }

    pub fn scalar(x: GaussianRational) -> Self {
        QVector(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GaussianRational::is_zero)
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<GaussianRational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GaussianRational> {
        self.0.iter()
    }

    pub fn scale(&self, a: &GaussianRational) -> QVector {
        QVector(self.0.iter().map(|x| a * x).collect())
    }

    pub fn conj(&self) -> QVector {
        QVector(self.0.iter().map(GaussianRational::conj).collect())
    }

    /// `self += a * x`, lengths must agree.
    pub fn axpy(&mut self, a: &GaussianRational, x: &QVector) {
        debug_assert_eq!(self.len(), x.len());
        if a.is_zero() {
            return;
        }
        for (s, xi) in self.0.iter_mut().zip(&x.0) {
            *s += a * xi;
        }
    }

    pub fn concat(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// ⟨self, y⟩ = Σ conj(selfᵢ)·yᵢ, conjugate-linear in the first slot.
    pub fn inner(&self, y: &QVector) -> Result<GaussianRational> {
        if self.len() != y.len() {
            return Err(Error::LengthMismatch(self.len(), y.len()));
        }
        Ok(self.inner_unchecked(y))
    }

    pub(crate) fn inner_unchecked(&self, y: &QVector) -> GaussianRational {
        let mut acc = GaussianRational::ZERO;
        for (a, b) in self.0.iter().zip(&y.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a.conj() * b;
            }
        }
        acc
    }
}

/// ⟨x, y⟩ with the conjugate-linear-in-first convention.
pub fn inner_product(x: &QVector, y: &QVector) -> Result<GaussianRational> {
    x.inner(y)
}

impl Index<usize> for QVector {
    type Output = GaussianRational;
    fn index(&self, i: usize) -> &GaussianRational {
        &self.0[i]
    }
}

impl IndexMut<usize> for QVector {
    fn index_mut(&mut self, i: usize) -> &mut GaussianRational {
        &mut self.0[i]
    }
}

impl Add for &QVector {
    type Output = QVector;
    fn add(self, rhs: &QVector) -> QVector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVector {
    type Output = QVector;
    fn sub(self, rhs: &QVector) -> QVector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|a| -a).collect())
    }
}

impl FromIterator<GaussianRational> for QVector {
    fn from_iter<I: IntoIterator<Item = GaussianRational>>(iter: I) -> Self {
        QVector(iter.into_iter().collect())
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
