//! The concrete matrices behind the non-generic counterexamples, the
//! SU_q(3) obstruction and the non-real O₄⁺ cocycle.

use malachite_q::Rational;

use crate::algebra::Presentation;
use crate::arith::{GaussianRational, QMatrix, QVector};
use crate::cocycle::{scalar_grid, Cocycle, VectorGrid};
use crate::error::Result;
use crate::representation::{GeneratorSubstitution, Representation};

fn m(rows: &[&[(i64, i64)]]) -> QMatrix {
    QMatrix::from_int_pairs(rows)
}

/// `[[1, i], [0, 1]]`, not normal.
pub fn u2_gaussian_v() -> QMatrix {
    m(&[&[(1, 0), (0, 1)], &[(0, 0), (1, 0)]])
}

/// `[[1, 0], [i, 1]]`, used with `R = −I₂`.
pub fn u2_gamma_v() -> QMatrix {
    m(&[&[(1, 0), (0, 0)], &[(0, 1), (1, 0)]])
}

/// The character γ with `R = −I`.
pub fn gamma(pres: &Presentation) -> Representation {
    Representation::scaled_counit(pres, 1, GaussianRational::int(-1, 0)).expect("−ε is a character")
}

/// `(η_G, η_N)` on U_2⁺: Gaussian with [`u2_gaussian_v`], and γ-cocycle with
/// [`u2_gamma_v`].
pub fn u2_pair() -> Result<(Cocycle, Cocycle)> {
    let p = Presentation::u_plus(2)?;
    let g = Cocycle::unitary_from_v(&Representation::counit(&p, 1), scalar_grid(&u2_gaussian_v()))?;
    let n = Cocycle::unitary_from_v(&gamma(&p), scalar_grid(&u2_gamma_v()))?;
    Ok((g, n))
}

/// U_Q⁺ with `Q = diag(1, 1, 2)`.
pub fn uq_112() -> Result<Presentation> {
    Presentation::u_q([1, 1, 2].map(Rational::from).to_vec())
}

/// The U_2⁺ pair pulled back along the corner embedding into U_Q⁺, Q=diag(1,1,2).
pub fn uq_lifted_pair() -> Result<(Cocycle, Cocycle)> {
    let (g, n) = u2_pair()?;
    let uq = uq_112()?;
    let pi = GeneratorSubstitution::corner(&uq, g.presentation(), &[0, 1])?;
    Ok((g.pullback(&pi, &uq)?, n.pullback(&pi, &uq)?))
}

pub fn o3_v1() -> QMatrix {
    m(&[&[(0, 0), (1, 0), (1, 0)], &[(-1, 0), (0, 0), (0, 1)], &[(-1, 0), (0, -1), (0, 0)]])
}

pub fn o3_v1_prime() -> QMatrix {
    m(&[&[(0, 1), (1, 0), (-1, 0)], &[(1, 0), (0, 0), (0, 0)], &[(-1, 0), (0, 0), (0, 0)]])
}

/// The character of O_3⁺ with `R = [[−1,0,0],[0,0,1],[0,1,0]]`.
pub fn o3_r() -> QMatrix {
    m(&[&[(-1, 0), (0, 0), (0, 0)], &[(0, 0), (0, 0), (1, 0)], &[(0, 0), (1, 0), (0, 0)]])
}

/// `(η_G, η_N)` on O_3⁺.
pub fn o3_pair() -> Result<(Cocycle, Cocycle)> {
    let p = Presentation::o_plus(3)?;
    let g = Cocycle::orthogonal_from_v(&Representation::counit(&p, 1), scalar_grid(&o3_v1()))?;
    let rho = Representation::one_dimensional(&p, &o3_r())?;
    let n = Cocycle::orthogonal_from_v(&rho, scalar_grid(&o3_v1_prime()))?;
    Ok((g, n))
}

/// The ℂ²-valued antisymmetric V on O₄⁺ with `B = 2I₄`.
pub fn o4_v() -> VectorGrid {
    let c = |a: (i64, i64), b: (i64, i64)| QVector::new(vec![GaussianRational::int(a.0, a.1), GaussianRational::int(b.0, b.1)]);
    let z = (0, 0);
    vec![
        vec![c(z, z), c(z, z), c((1, 0), z), c(z, (1, 0))],
        vec![c(z, z), c(z, z), c((0, 1), z), c(z, (0, -1))],
        vec![c((-1, 0), z), c((0, -1), z), c(z, z), c(z, z)],
        vec![c(z, (-1, 0)), c(z, (0, 1)), c(z, z), c(z, z)],
    ]
}

pub fn o4_cocycle() -> Result<Cocycle> {
    let p = Presentation::o_plus(4)?;
    Cocycle::orthogonal_from_v(&Representation::counit(&p, 2), o4_v())
}

/// `η(u_jj) = (−1−i, 1, i)`, zero off the diagonal.
pub fn suq3_diag() -> QMatrix {
    QMatrix::diagonal(&[GaussianRational::int(-1, -1), GaussianRational::int(1, 0), GaussianRational::int(0, 1)])
}

pub fn suq3() -> Result<Presentation> {
    Presentation::su_q(3, Rational::from_signeds(1, 2))
}

pub fn suq3_cocycle() -> Result<Cocycle> {
    Cocycle::gaussian_scalar(&suq3()?, &suq3_diag())
}

/// `F = [[0, 1/2], [2, 0]]`, generic with `FF̄ = I`.
pub fn of_f() -> QMatrix {
    QMatrix::from_rows(vec![
        vec![GaussianRational::ZERO, GaussianRational::frac(1, 2, 0, 1)],
        vec![GaussianRational::int(2, 0), GaussianRational::ZERO],
    ])
    .expect("2×2")
}

/// Anti-Gaussian d=2 orthogonal pair: `Z₁ = diag(1,−1)`, `Z₂ = [[0,1],[1,0]]` for `ρ = −ε`.
pub fn o2_z_pair() -> Result<(Cocycle, Cocycle)> {
    let p = Presentation::o_plus(2)?;
    let rho = gamma(&p);
    let z1 = m(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]);
    let z2 = m(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]);
    Ok((
        Cocycle::orthogonal_from_v(&rho, scalar_grid(&z1))?,
        Cocycle::orthogonal_from_v(&rho, scalar_grid(&z2))?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_validate() {
        u2_pair().unwrap();
        uq_lifted_pair().unwrap();
        o3_pair().unwrap();
        o4_cocycle().unwrap();
        suq3_cocycle().unwrap();
        o2_z_pair().unwrap();
        assert!(Presentation::o_f(of_f()).unwrap().is_generic());
    }
}
