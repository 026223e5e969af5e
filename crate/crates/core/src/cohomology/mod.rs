//! Degree-2 Hochschild cohomology with trivial coefficients: evaluable
//! 2-cocycles, the coboundary maps, normalization, defect maps, basis
//! families, primitives and class coordinates.

mod defect;
mod primitive;
mod table;

use std::fmt;

use rand::Rng;

use crate::algebra::{Element, Letter, Presentation, Word};
use crate::arith::GaussianRational;
use crate::cocycle::Cocycle;
use crate::error::{Error, Result};
use crate::functional::Functional;
use crate::par;
use crate::sampling;

pub use defect::{
    basis, basis_orthogonal, basis_unitary, class_coordinates, defect, defect_orthogonal, defect_unitary, eq_z1,
    eq_z2, eq_z_orth, BasisElement, ClassCoordinates, DefectMatrix, Flavor,
};
pub use primitive::{check_primitive_exhaustive, primitive, Primitive};

/// A 1-cochain `A → ℂ` that can be evaluated on words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cochain {
    Counit(Presentation),
    Functional(Functional),
    Primitive(Primitive),
}

impl Cochain {
    pub fn presentation(&self) -> &Presentation {
        match self {
            Cochain::Counit(p) => p,
            Cochain::Functional(psi) => psi.cocycle().presentation(),
            Cochain::Primitive(phi) => phi.presentation(),
        }
    }

    pub fn evaluate_word(&self, w: &Word) -> GaussianRational {
        match self {
            Cochain::Counit(_) => eps(w),
            Cochain::Functional(psi) => psi.evaluate_word(w),
            Cochain::Primitive(phi) => phi.evaluate_word(w),
        }
    }

    pub fn evaluate(&self, a: &Element) -> Result<GaussianRational> {
        same_d(self.presentation(), a)?;
        Ok(a.terms().map(|(w, c)| c * &self.evaluate_word(w)).sum())
    }
}

/// An evaluable bilinear form `c: A ⊗ A → ℂ` satisfying `∂²c = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoCocycle {
    /// `K(η₁,η₂)(a⊗b) = ⟨η₁(a*), η₂(b)⟩`.
    KPair(Box<Cocycle>, Box<Cocycle>),
    Coboundary(Box<Cochain>),
    Combination(Presentation, Vec<(GaussianRational, TwoCocycle)>),
}

fn eps(w: &Word) -> GaussianRational {
    if w.counit() {
        GaussianRational::ONE
    } else {
        GaussianRational::ZERO
    }
}

fn same_d(p: &Presentation, a: &Element) -> Result<()> {
    if a.d() != p.d() {
        return Err(Error::DimensionMismatch(format!("element over d = {}, expected {}", a.d(), p.d())));
    }
    Ok(())
}

impl TwoCocycle {
    /// `K(η₁,η₂)`, spot-checked for `∂²c = 0`.
    pub fn k_pair(eta1: &Cocycle, eta2: &Cocycle) -> Result<Self> {
        if eta1.rep() != eta2.rep() {
            return Err(Error::DimensionMismatch("K(η₁,η₂) needs a common representation".into()));
        }
        let c = TwoCocycle::KPair(Box::new(eta1.clone()), Box::new(eta2.clone()));
        if let Some((a, b, x)) = c.first_failure(&default_triples(c.presentation().d())) {
            return Err(Error::NotTwoCocycle(format!("∂²c({a} ⊗ {b} ⊗ {x}) ≠ 0")));
        }
        Ok(c)
    }

    pub fn coboundary(phi: Cochain) -> Self {
        TwoCocycle::Coboundary(Box::new(phi))
    }

    pub fn combination(pres: &Presentation, terms: Vec<(GaussianRational, TwoCocycle)>) -> Result<Self> {
        if let Some((_, c)) = terms.iter().find(|(_, c)| c.presentation() != pres) {
            return Err(Error::DimensionMismatch(format!("combination over {pres} contains a term over {}", c.presentation())));
        }
        Ok(TwoCocycle::Combination(pres.clone(), terms))
    }

    pub fn zero(pres: &Presentation) -> Self {
        TwoCocycle::Combination(pres.clone(), Vec::new())
    }

    pub fn presentation(&self) -> &Presentation {
        match self {
            TwoCocycle::KPair(e, _) => e.presentation(),
            TwoCocycle::Coboundary(phi) => phi.presentation(),
            TwoCocycle::Combination(p, _) => p,
        }
    }

    pub fn scale(&self, a: GaussianRational) -> TwoCocycle {
        TwoCocycle::Combination(self.presentation().clone(), vec![(a, self.clone())])
    }

    pub fn evaluate_words(&self, a: &Word, b: &Word) -> GaussianRational {
        match self {
            TwoCocycle::KPair(e1, e2) => {
                if a.is_empty() || b.is_empty() {
                    return GaussianRational::ZERO;
                }
                e1.evaluate_word(&a.star()).inner_unchecked(&e2.evaluate_word(b))
            }
            TwoCocycle::Coboundary(phi) => {
                let mut x = -phi.evaluate_word(&a.concat(b));
                if a.counit() {
                    x += phi.evaluate_word(b);
                }
                if b.counit() {
                    x += phi.evaluate_word(a);
                }
                x
            }
            TwoCocycle::Combination(_, terms) => terms.iter().map(|(s, c)| s * &c.evaluate_words(a, b)).sum(),
        }
    }

    pub fn evaluate(&self, a: &Element, b: &Element) -> Result<GaussianRational> {
        same_d(self.presentation(), a)?;
        same_d(self.presentation(), b)?;
        let mut acc = GaussianRational::ZERO;
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                acc += ca * cb * self.evaluate_words(wa, wb);
            }
        }
        Ok(acc)
    }

    /// `c(1⊗1)`
    pub fn unit_value(&self) -> GaussianRational {
        self.evaluate_words(&Word::unit(), &Word::unit())
    }

    /// `c − c(1⊗1)∂ε`; unchanged when already normalized.
    pub fn normalize(&self) -> TwoCocycle {
        let u = self.unit_value();
        if u.is_zero() {
            return self.clone();
        }
        let pres = self.presentation().clone();
        let d_eps = TwoCocycle::coboundary(Cochain::Counit(pres.clone()));
        TwoCocycle::Combination(pres, vec![(GaussianRational::ONE, self.clone()), (-u, d_eps)])
    }

    /// `∂²c = 0` on every sampled triple.
    pub fn check(&self, triples: &[(Word, Word, Word)]) -> bool {
        self.first_failure(triples).is_none()
    }

    pub fn first_failure(&self, triples: &[(Word, Word, Word)]) -> Option<(Word, Word, Word)> {
        first_failure_of(&|a: &Word, b: &Word| self.evaluate_words(a, b), triples)
    }
}

/// `(∂²c)(a⊗b⊗x) = ε(a)c(b⊗x) − c(ab⊗x) + c(a⊗bx) − c(a⊗b)ε(x)`.
pub fn coboundary2<F>(c: &F, a: &Word, b: &Word, x: &Word) -> GaussianRational
where
    F: Fn(&Word, &Word) -> GaussianRational,
{
    let mut v = c(a, &b.concat(x)) - c(&a.concat(b), x);
    if a.counit() {
        v += c(b, x);
    }
    if x.counit() {
        v -= c(a, b);
    }
    v
}

/// Checks `∂²c = 0` for an arbitrary bilinear form given on words.
pub fn check_2cocycle<F>(c: &F, triples: &[(Word, Word, Word)]) -> bool
where
    F: Fn(&Word, &Word) -> GaussianRational + Sync,
{
    first_failure_of(c, triples).is_none()
}

fn first_failure_of<F>(c: &F, triples: &[(Word, Word, Word)]) -> Option<(Word, Word, Word)>
where
    F: Fn(&Word, &Word) -> GaussianRational + Sync,
{
    par::find_map_first(triples, |(a, b, x)| (!coboundary2(c, a, b, x).is_zero()).then(|| (a.clone(), b.clone(), x.clone())))
}

/// All letter triples.
pub fn letter_triples(d: usize) -> Vec<(Word, Word, Word)> {
    let ls: Vec<Word> = Letter::all(d).map(Word::letter).collect();
    let mut out = Vec::with_capacity(ls.len().pow(3));
    for a in &ls {
        for b in &ls {
            for x in &ls {
                out.push((a.clone(), b.clone(), x.clone()));
            }
        }
    }
    out
}

/// All letter triples plus 20 seeded triples of length-2 words.
pub fn default_triples(d: usize) -> Vec<(Word, Word, Word)> {
    let mut out = letter_triples(d);
    out.extend(random_triples(&mut sampling::rng(0x2c0c), d, 2, 20));
    out
}

pub fn random_triples(rng: &mut impl Rng, d: usize, len: usize, count: usize) -> Vec<(Word, Word, Word)> {
    (0..count)
        .map(|_| {
            let a = sampling::random_word(rng, d, len);
            let b = sampling::random_word(rng, d, len);
            (a, b, sampling::random_word(rng, d, len))
        })
        .collect()
}

/// `∂ψ(a⊗b) = ε(a)ψ(b) − ψ(ab) + ψ(a)ε(b)`.
pub fn coboundary1(psi: &Functional) -> TwoCocycle {
    TwoCocycle::coboundary(Cochain::Functional(psi.clone()))
}

impl fmt::Display for TwoCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoCocycle::KPair(..) => write!(f, "K(η₁,η₂)"),
            TwoCocycle::Coboundary(phi) => match **phi {
                Cochain::Counit(_) => write!(f, "∂ε"),
                Cochain::Functional(_) => write!(f, "∂ψ"),
                Cochain::Primitive(_) => write!(f, "∂φ"),
            },
            TwoCocycle::Combination(_, terms) if terms.is_empty() => write!(f, "0"),
            TwoCocycle::Combination(_, terms) => {
                for (i, (s, c)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({s})·{c}")?;
                }
                Ok(())
            }
        }
    }
}
