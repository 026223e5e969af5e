//! Exact elimination over ℚ(i): kernels, linear solves, rank, PSD tests and
//! orthogonal projections. Everything here is tolerance-free.

use super::{GaussianRational, QMatrix, QVector};
use crate::error::{Error, Result};

/// Reduced row echelon form. Returns the reduced rows and the pivot columns.
pub fn rref(m: &QMatrix) -> (Vec<Vec<GaussianRational>>, Vec<usize>) {
    let mut rows = m.to_rows();
    let ncols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut().skip(c) {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

pub fn rank(m: &QMatrix) -> usize {
    rref(m).1.len()
}

/// Exact basis of `{v : M v = 0}`; empty iff `M` is injective.
pub fn kernel_basis(m: &QMatrix) -> Vec<QVector> {
    let n = m.cols();
    let (rows, pivots) = rref(m);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = QVector::zeros(n);
            v[f] = GaussianRational::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[i][f];
            }
            v
        })
        .collect()
}

/// One solution of `A x = b` (free variables set to zero), or `None` if the
/// system is inconsistent.
pub fn solve(a: &QMatrix, b: &QVector) -> Result<Option<QVector>> {
    if a.rows() != b.len() {
        return Err(Error::LengthMismatch(a.rows(), b.len()));
    }
    let n = a.cols();
    let aug = QMatrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let (rows, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = QVector::zeros(n);
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = rows[i][n].clone();
    }
    Ok(Some(x))
}

/// Exact positive-semidefiniteness test by in-place Hermitian elimination:
/// a zero pivot forces its whole row to vanish, a nonzero pivot must be
/// positive, and its Schur complement is formed in the trailing block.
pub fn psd_check(m: &QMatrix) -> Result<bool> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let mut a = m.to_rows();
    let n = a.len();
    for k in 0..n {
        let p = a[k][k].clone();
        if p.is_zero() {
            if a[k][k + 1..].iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
            continue;
        }
        if !p.is_positive_real() {
            return Ok(false);
        }
        let inv = p.inv().expect("pivot is nonzero");
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let f = &row[k] * &inv;
            for j in k + 1..n {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
    }
    Ok(true)
}

/// Gram matrix `G_{jk} = ⟨v_j, v_k⟩`.
pub fn gram(vectors: &[QVector]) -> Result<QMatrix> {
    if let Some(first) = vectors.first() {
        if let Some(bad) = vectors.iter().find(|v| v.len() != first.len()) {
            return Err(Error::LengthMismatch(first.len(), bad.len()));
        }
    }
    Ok(QMatrix::from_fn(vectors.len(), vectors.len(), |j, k| {
        vectors[j].inner_unchecked(&vectors[k])
    }))
}

/// Orthogonal projection of `x` onto `span(vectors)`, solved through the Gram
/// system so the result stays inside ℚ(i).
pub fn project_onto_span(vectors: &[QVector], x: &QVector) -> Result<QVector> {
    if let Some(bad) = vectors.iter().find(|v| v.len() != x.len()) {
        return Err(Error::LengthMismatch(bad.len(), x.len()));
    }
    if vectors.is_empty() {
        return Ok(QVector::zeros(x.len()));
    }
    let g = gram(vectors)?;
    let rhs: QVector = vectors.iter().map(|v| v.inner_unchecked(x)).collect();
    // The Gram system is always consistent: rhs lies in the range of G.
    let coeffs = solve(&g, &rhs)?.expect("Gram system is consistent");
    let mut out = QVector::zeros(x.len());
    for (c, v) in coeffs.iter().zip(vectors) {
        out.axpy(c, v);
    }
    Ok(out)
}
