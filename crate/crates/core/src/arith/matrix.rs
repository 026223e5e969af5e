use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussianRational, QVector};
use crate::error::{Error, Result};

/// A dense matrix over ℚ(i), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![GaussianRational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar_identity(n, GaussianRational::ONE)
    }

    /// `a·Iₙ`
    pub fn scalar_identity(n: usize, a: GaussianRational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = a.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer-pair literal helper: `int_rows(&[&[(1,0),(0,1)]])` is [[1, i]].
    pub fn from_int_pairs(rows: &[&[(i64, i64)]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| GaussianRational::int(a, b)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn diagonal(entries: &[GaussianRational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { GaussianRational::ZERO })
    }

    /// Matrix unit e_{jk} (0-based).
    pub fn unit(n: usize, j: usize, k: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[j * n + k] = GaussianRational::ONE;
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(GaussianRational::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(GaussianRational::is_real)
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, a: &GaussianRational) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| a * x).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &QVector) -> QVector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::ZERO;
                for (a, b) in self.row(i).iter().zip(v.iter()) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &QMatrix) -> QMatrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                GaussianRational::ZERO
            }
        })
    }

    pub fn columns(&self) -> Vec<QVector> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn from_columns(n: usize, cols: &[QVector]) -> QMatrix {
        QMatrix::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Flattened row-major entries, used as a coordinate vector.
    pub fn to_vector(&self) -> QVector {
        QVector::new(self.data.clone())
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        self.scale(&GaussianRational::int(-1, 0))
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.checked_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
