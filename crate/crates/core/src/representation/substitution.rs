use crate::algebra::{Element, Presentation};
use crate::error::{Error, Result};

/// Generator images `π(u_jk)` in a target algebra; `π(u*_jk) = π(u_jk)*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSubstitution {
    source_d: usize,
    target: Presentation,
    images: Vec<Element>,
}

impl GeneratorSubstitution {
    /// `images[j][k] = π(u_jk)`; each must have counit `δ_jk`.
    pub fn new(source_d: usize, target: &Presentation, images: Vec<Vec<Element>>) -> Result<Self> {
        if images.len() != source_d || images.iter().any(|r| r.len() != source_d) {
            return Err(Error::DimensionMismatch(format!("images must form a {source_d}×{source_d} grid")));
        }
        for (j, row) in images.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                if e.d() != target.d() {
                    return Err(Error::DimensionMismatch(format!("image of u_{},{} lives over d = {}", j + 1, k + 1, e.d())));
                }
                let want = if j == k { 1 } else { 0 };
                if e.counit() != want.into() {
                    return Err(Error::SubstitutionCounit(j + 1, k + 1));
                }
            }
        }
        Ok(GeneratorSubstitution {
            source_d,
            target: target.clone(),
            images: images.into_iter().flatten().collect(),
        })
    }

    pub fn identity(p: &Presentation) -> Self {
        let d = p.d();
        let images = (0..d).map(|j| (0..d).map(|k| Element::u(d, j, k)).collect()).collect();
        Self::new(d, p, images).expect("identity preserves ε")
    }

    /// `π(u_{idx[a], idx[b]}) = v_ab`, and `π(u_jk) = δ_jk·1` off the corner.
    pub fn corner(source: &Presentation, target: &Presentation, indices: &[usize]) -> Result<Self> {
        let (d, m) = (source.d(), target.d());
        if indices.len() != m || indices.iter().any(|&i| i >= d) {
            return Err(Error::DimensionMismatch(format!("corner indices {indices:?} do not fit {d} → {m}")));
        }
        let pos = |j: usize| indices.iter().position(|&i| i == j);
        let images = (0..d)
            .map(|j| {
                (0..d)
                    .map(|k| match (pos(j), pos(k)) {
                        (Some(a), Some(b)) => Element::u(m, a, b),
                        _ if j == k => Element::one(m),
                        _ => Element::zero(m),
                    })
                    .collect()
            })
            .collect();
        Self::new(d, target, images)
    }

    pub fn source_d(&self) -> usize {
        self.source_d
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn image(&self, j: usize, k: usize) -> &Element {
        &self.images[j * self.source_d + k]
    }

    pub(crate) fn check_target(&self, target: &Presentation, source: &Presentation) -> Result<()> {
        if *target != self.target {
            return Err(Error::DimensionMismatch(format!(
                "substitution targets {}, object lives on {target}",
                self.target
            )));
        }
        if source.d() != self.source_d {
            return Err(Error::DimensionMismatch(format!(
                "substitution source has d = {}, presentation has d = {}",
                self.source_d,
                source.d()
            )));
        }
        Ok(())
    }
}
