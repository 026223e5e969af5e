use super::{admits_gf, Functional};
use crate::arith::{project_onto_span, QMatrix, QVector};
use crate::cocycle::Cocycle;
use crate::error::Result;
use crate::representation::Representation;

/// Outcome of splitting η = η_G + η_N along the maximal Gaussian subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LkReport {
    pub gaussian_dim: usize,
    /// `P_G η` on `ε·id` (same carrier).
    pub eta_g: Cocycle,
    /// `(I − P_G)η` on ρ.
    pub eta_n: Cocycle,
    pub gf_exists_g: bool,
    pub gf_exists_n: bool,
    pub decomposable: bool,
}

/// Orthogonal projection onto `span(basis)` as an `n×n` matrix.
pub fn projection_matrix(basis: &[QVector], n: usize) -> Result<QMatrix> {
    let cols = (0..n)
        .map(|i| project_onto_span(basis, &QVector::unit(n, i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(QMatrix::from_columns(n, &cols))
}

pub fn lk_decomposition(psi: &Functional) -> Result<LkReport> {
    let eta = psi.cocycle();
    let rep = eta.rep();
    let n = rep.n();
    let basis = rep.gaussian_subspace();
    let p = projection_matrix(&basis, n)?;
    let eta_g = eta.map_values(&Representation::counit(eta.presentation(), n), &p)?;
    let eta_n = eta.map_values(rep, &(&QMatrix::identity(n) - &p))?;
    let gf_exists_g = admits_gf(&eta_g)?;
    let gf_exists_n = admits_gf(&eta_n)?;
    Ok(LkReport {
        gaussian_dim: basis.len(),
        eta_g,
        eta_n,
        gf_exists_g,
        gf_exists_n,
        decomposable: gf_exists_g && gf_exists_n,
    })
}
