use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Letter, Word};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};

/// A finitely supported ℚ(i)-combination of words over the letters of
/// dimension `d`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    d: usize,
    terms: BTreeMap<Word, GaussianRational>,
}

impl Element {
    pub fn zero(d: usize) -> Self {
        Element {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(d: usize) -> Self {
        Self::scalar(d, GaussianRational::ONE)
    }

    pub fn scalar(d: usize, c: GaussianRational) -> Self {
        Self::monomial(d, c, Word::unit())
    }

    pub fn monomial(d: usize, c: GaussianRational, w: Word) -> Self {
        let mut e = Self::zero(d);
        e.add_term(w, c);
        e
    }

    pub fn word(d: usize, w: Word) -> Self {
        Self::monomial(d, GaussianRational::ONE, w)
    }

    pub fn letter(d: usize, l: Letter) -> Self {
        Self::word(d, Word::letter(l))
    }

    /// `u_jk`, 0-based.
    pub fn u(d: usize, j: usize, k: usize) -> Self {
        Self::letter(d, Letter::u(j, k))
    }

    /// `u*_jk`, 0-based.
    pub fn u_star(d: usize, j: usize, k: usize) -> Self {
        Self::letter(d, Letter::u_star(j, k))
    }

    /// Builds an element from `(coefficient, word)` pairs; duplicates are summed.
    pub fn from_terms(d: usize, terms: impl IntoIterator<Item = (GaussianRational, Word)>) -> Result<Self> {
        let mut e = Self::zero(d);
        for (c, w) in terms {
            if let Some(m) = w.max_index() {
                if m >= d {
                    return Err(Error::DimensionMismatch(format!("letter index {} exceeds d = {d}", m + 1)));
                }
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> GaussianRational {
        self.terms.get(w).cloned().unwrap_or(GaussianRational::ZERO)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Element {
        if c.is_zero() {
            return Element::zero(self.d);
        }
        Element {
            d: self.d,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), c * x)).collect(),
        }
    }

    fn check_same_d(&self, other: &Element) -> Result<()> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch(format!(
                "elements over d = {} and d = {}",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.check_same_d(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.check_same_d(other)?;
        let mut out = Element::zero(self.d);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// The involution: anti-multiplicative, conjugate-linear.
    pub fn star(&self) -> Element {
        Element {
            d: self.d,
            terms: self.terms.iter().map(|(w, c)| (w.star(), c.conj())).collect(),
        }
    }

    /// ε, with ε(u_jk) = ε(u*_jk) = δ_jk.
    pub fn counit(&self) -> GaussianRational {
        self.terms
            .iter()
            .filter(|(w, _)| w.counit())
            .map(|(_, c)| c)
            .sum()
    }

    /// `a − ε(a)·1`
    pub fn kernel_part(&self) -> Element {
        let mut out = self.clone();
        out.add_term(Word::unit(), -self.counit());
        out
    }

    /// The Kac-type antipode S(u_jk) = u*_kj, S(u*_jk) = u_kj, extended
    /// anti-multiplicatively. Callers are responsible for the Kac hypothesis.
    pub(crate) fn antipode_kac(&self) -> Element {
        Element {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let s = w
                        .letters()
                        .iter()
                        .rev()
                        .map(|l| Letter::new(l.col, l.row, !l.starred))
                        .collect::<Vec<_>>();
                    (Word::new(s), c.clone())
                })
                .collect(),
        }
    }

    /// `Some(λ)` with `other = λ·self`, when the two are proportional and nonzero.
    pub fn ratio_to(&self, other: &Element) -> Option<GaussianRational> {
        if self.d != other.d || self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let (w0, c0) = self.terms.iter().next()?;
        let lambda = other.terms.get(w0)? / c0;
        self.terms
            .iter()
            .all(|(w, c)| other.terms.get(w).is_some_and(|o| *o == c * &lambda))
            .then_some(lambda)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("element dimension mismatch")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_add(&-rhs).expect("element dimension mismatch")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            d: self.d,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("element dimension mismatch")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c.is_negative_real() { (true, -c) } else { (false, c.clone()) };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag == GaussianRational::ONE;
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if unit {
                write!(f, "{w}")?;
            } else if mag.is_real() || mag.conj() == -&mag {
                write!(f, "{mag}·{w}")?;
            } else {
                write!(f, "({mag})·{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
