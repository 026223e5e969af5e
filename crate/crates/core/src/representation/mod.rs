//! Finite-dimensional unital *-representations of presented algebras.

mod substitution;

use crate::algebra::{Element, Letter, Presentation, Word};
use crate::arith::{kernel_basis, GaussianRational, QMatrix, QVector};
use crate::error::{Error, Result, Violation, ViolationValue};
use crate::par;

pub use substitution::GeneratorSubstitution;

/// ρ given by `R_jk = ρ(u_jk)`; `ρ(u*_jk)` is the adjoint. Only validated
/// representations can be constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pres: Presentation,
    n: usize,
    /// Indexed by letter code: `ρ(u_jk)` then `ρ(u*_jk)`.
    images: Vec<QMatrix>,
}

impl Representation {
    /// Validates shapes and every relation of `pres`.
    pub fn new(pres: &Presentation, n: usize, r: Vec<Vec<QMatrix>>) -> Result<Self> {
        let d = pres.d();
        if r.len() != d || r.iter().any(|row| row.len() != d) {
            return Err(Error::DimensionMismatch(format!("R must be a {d}×{d} grid")));
        }
        if r.iter().flatten().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch(format!("every R_jk must be {n}×{n}")));
        }
        let rep = Self::unchecked(pres, n, r.into_iter().flatten().collect());
        let v = rep.violations();
        if v.is_empty() {
            Ok(rep)
        } else {
            Err(Error::InvalidRepresentation(v))
        }
    }

    /// `r` holds `R_jk` in row-major order; no relation check.
    pub(crate) fn unchecked(pres: &Presentation, n: usize, r: Vec<QMatrix>) -> Self {
        let images = r.into_iter().flat_map(|m| {
            let a = m.adjoint();
            [m, a]
        });
        Representation {
            pres: pres.clone(),
            n,
            images: images.collect(),
        }
    }

    /// `ρ(u_jk) = c·δ_jk·Iₙ`; `c = 1` is `ε·id`, `c = −1` is the
    /// anti-Gaussian character.
    pub fn scaled_counit(pres: &Presentation, n: usize, c: GaussianRational) -> Result<Self> {
        let d = pres.d();
        let r = (0..d)
            .map(|j| {
                (0..d)
                    .map(|k| if j == k { QMatrix::scalar_identity(n, c.clone()) } else { QMatrix::zeros(n, n) })
                    .collect()
            })
            .collect();
        Self::new(pres, n, r)
    }

    /// A character: `ρ(u_jk) = R_jk` as 1×1 matrices.
    pub fn one_dimensional(pres: &Presentation, r: &QMatrix) -> Result<Self> {
        let d = pres.d();
        if r.rows() != d || r.cols() != d {
            return Err(Error::DimensionMismatch(format!("R must be {d}×{d}")));
        }
        let grid = (0..d)
            .map(|j| (0..d).map(|k| QMatrix::scalar_identity(1, r.get(j, k).clone())).collect())
            .collect();
        Self::new(pres, 1, grid)
    }

    /// `ε·Iₙ`
    pub fn counit(pres: &Presentation, n: usize) -> Self {
        Self::scaled_counit(pres, n, GaussianRational::ONE).expect("ε kills every relation")
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn d(&self) -> usize {
        self.pres.d()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letter(&self, l: Letter) -> &QMatrix {
        &self.images[l.code(self.d())]
    }

    /// `R_jk`, 0-based.
    pub fn r(&self, j: usize, k: usize) -> &QMatrix {
        self.letter(Letter::u(j, k))
    }

    pub fn r_grid(&self) -> Vec<Vec<QMatrix>> {
        let d = self.d();
        (0..d).map(|j| (0..d).map(|k| self.r(j, k).clone()).collect()).collect()
    }

    /// True when ρ = ε·id.
    pub fn is_counit_type(&self) -> bool {
        let id = QMatrix::identity(self.n);
        let d = self.d();
        (0..d).all(|j| (0..d).all(|k| if j == k { *self.r(j, k) == id } else { self.r(j, k).is_zero() }))
    }

    pub fn evaluate_word(&self, w: &Word) -> QMatrix {
        let mut out = QMatrix::identity(self.n);
        for l in w.letters() {
            out = &out * self.letter(*l);
        }
        out
    }

    pub fn evaluate(&self, a: &Element) -> Result<QMatrix> {
        if a.d() != self.d() {
            return Err(Error::DimensionMismatch(format!("element over d = {}, representation over d = {}", a.d(), self.d())));
        }
        let mut out = QMatrix::zeros(self.n, self.n);
        for (w, c) in a.terms() {
            out = &out + &self.evaluate_word(w).scale(c);
        }
        Ok(out)
    }

    /// Relations on which ρ does not vanish.
    pub fn violations(&self) -> Vec<Violation> {
        par::map(self.pres.relations(), |r| {
            let m = self.evaluate(&r.element).expect("same d");
            (!m.is_zero()).then(|| Violation {
                relation: r.name.clone(),
                value: ViolationValue::Matrix(m),
            })
        })
        .into_iter()
        .flatten()
        .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.pres != other.pres {
            return Err(Error::DimensionMismatch(format!(
                "presentations {} and {} differ",
                self.pres, other.pres
            )));
        }
        let d = self.d();
        let r = (0..d * d)
            .map(|i| self.r(i / d, i % d).direct_sum(other.r(i / d, i % d)))
            .collect();
        Ok(Self::unchecked(&self.pres, self.n + other.n, r))
    }

    /// ρ∘π on the source presentation, validated against the source relations.
    pub fn pullback(&self, sub: &GeneratorSubstitution, source: &Presentation) -> Result<Representation> {
        sub.check_target(&self.pres, source)?;
        let d = source.d();
        let r = (0..d * d)
            .map(|i| self.evaluate(sub.image(i / d, i % d)))
            .collect::<Result<Vec<_>>>()?;
        let rep = Self::unchecked(source, self.n, r);
        let v = rep.violations();
        if v.is_empty() {
            Ok(rep)
        } else {
            Err(Error::InvalidRepresentation(v))
        }
    }

    /// Basis of `{ξ : ρ(a)ξ = ε(a)ξ for all a}`.
    pub fn gaussian_subspace(&self) -> Vec<QVector> {
        let n = self.n;
        let mut rows = Vec::new();
        for l in Letter::all(self.d()) {
            let shift = if l.counit() { GaussianRational::ONE } else { GaussianRational::ZERO };
            let m = self.letter(l) - &QMatrix::scalar_identity(n, shift);
            rows.extend(m.to_rows());
        }
        if rows.is_empty() || n == 0 {
            return (0..n).map(|i| QVector::unit(n, i)).collect();
        }
        kernel_basis(&QMatrix::from_rows(rows).expect("rectangular"))
    }

    /// The `dn × dn` block matrix `(R_jk)`.
    pub fn block_matrix(&self) -> QMatrix {
        let (d, n) = (self.d(), self.n);
        QMatrix::from_fn(d * n, d * n, |a, b| self.r(a / n, b / n).get(a % n, b % n).clone())
    }
}
