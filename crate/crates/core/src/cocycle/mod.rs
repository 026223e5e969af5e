//! ρ-ε-cocycles: construction, evaluation, the B/B̃ matrices, reality and the
//! exact cocycle-space solver.

mod solve;

use crate::algebra::{Element, Kind, Letter, Presentation, Word};
use crate::arith::{GaussianRational, QMatrix, QVector};
use crate::error::{Error, Result, Violation, ViolationValue};
use crate::par;
use crate::representation::{GeneratorSubstitution, Representation};

pub use solve::{solve_cocycles, solve_cocycles_with};

/// A d×d grid of carrier vectors, e.g. `V = (η(u_jk))`.
pub type VectorGrid = Vec<Vec<QVector>>;

/// η with `η(u_jk) = V_jk`, `η(u*_jk) = W_jk`, validated on every relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    rep: Representation,
    /// Indexed by letter code.
    values: Vec<QVector>,
}

/// `B_jk = Σ_p ⟨V_jp, V_kp⟩` and `B̃_jk = Σ_p ⟨W_jp, W_kp⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BMatrix {
    pub b: QMatrix,
    pub b_tilde: QMatrix,
}

fn interleave(d: usize, v: VectorGrid, w: VectorGrid) -> Vec<QVector> {
    let mut out = vec![QVector::default(); 2 * d * d];
    for (j, row) in v.into_iter().enumerate() {
        for (k, x) in row.into_iter().enumerate() {
            out[Letter::u(j, k).code(d)] = x;
        }
    }
    for (j, row) in w.into_iter().enumerate() {
        for (k, x) in row.into_iter().enumerate() {
            out[Letter::u_star(j, k).code(d)] = x;
        }
    }
    out
}

fn check_grid(name: &str, g: &VectorGrid, d: usize, n: usize) -> Result<()> {
    if g.len() != d || g.iter().any(|r| r.len() != d) {
        return Err(Error::DimensionMismatch(format!("{name} must be a {d}×{d} grid")));
    }
    if let Some(x) = g.iter().flatten().find(|x| x.len() != n) {
        return Err(Error::LengthMismatch(x.len(), n));
    }
    Ok(())
}

/// `Σ_p adjoint(A_jp)·x_kp` style block actions share this accumulator.
fn block_sum<'a>(n: usize, terms: impl Iterator<Item = (&'a QMatrix, &'a QVector)>) -> QVector {
    let mut acc = QVector::zeros(n);
    for (m, x) in terms {
        acc = &acc + &m.mul_vec(x);
    }
    acc
}

impl Cocycle {
    /// Validates η on every relation of ρ's presentation.
    pub fn new(rep: &Representation, v: VectorGrid, w: VectorGrid) -> Result<Self> {
        let (d, n) = (rep.d(), rep.n());
        check_grid("V", &v, d, n)?;
        check_grid("W", &w, d, n)?;
        let eta = Cocycle {
            rep: rep.clone(),
            values: interleave(d, v, w),
        };
        let bad = eta.violations();
        if bad.is_empty() {
            Ok(eta)
        } else {
            Err(Error::InvalidCocycle(bad))
        }
    }

    pub(crate) fn from_values_unchecked(rep: &Representation, values: Vec<QVector>) -> Self {
        Cocycle {
            rep: rep.clone(),
            values,
        }
    }

    pub fn zero(rep: &Representation) -> Self {
        let n = rep.n();
        Cocycle::from_values_unchecked(rep, vec![QVector::zeros(n); 2 * rep.d() * rep.d()])
    }

    /// Gaussian cocycle for `ρ = ε·id` with `W = −Vᵗ`, forced by `uu* = I`.
    pub fn gaussian(pres: &Presentation, v: VectorGrid) -> Result<Self> {
        let n = v.first().and_then(|r| r.first()).map_or(0, QVector::len);
        let d = pres.d();
        check_grid("V", &v, d, n)?;
        let w = (0..d).map(|j| (0..d).map(|k| -&v[k][j]).collect()).collect();
        Self::new(&Representation::counit(pres, n), v, w)
    }

    /// Gaussian ℂ-valued cocycle from a scalar matrix V.
    pub fn gaussian_scalar(pres: &Presentation, v: &QMatrix) -> Result<Self> {
        Self::gaussian(pres, scalar_grid(v))
    }

    /// U_d⁺ fast path: requires `(R*V)ᵗ = R̄Vᵗ`, then `W = −R̄Vᵗ`.
    pub fn unitary_from_v(rep: &Representation, v: VectorGrid) -> Result<Self> {
        rep.presentation().ensure_kind(&[Kind::UPlus])?;
        let (d, n) = (rep.d(), rep.n());
        check_grid("V", &v, d, n)?;
        let (rsv_t, rbar_vt) = fast_path_sides(rep, &v);
        if rsv_t != rbar_vt {
            return Err(Error::CocycleCondition("(R*V)ᵗ ≠ R̄Vᵗ".into()));
        }
        let w = rbar_vt.iter().map(|row| row.iter().map(|x| -x).collect()).collect();
        Self::new(rep, v, w)
    }

    /// O_d⁺ fast path: requires `(R*V)ᵗ = R̄Vᵗ = −V`, then `W = V`.
    pub fn orthogonal_from_v(rep: &Representation, v: VectorGrid) -> Result<Self> {
        rep.presentation().ensure_kind(&[Kind::OPlus])?;
        let (d, n) = (rep.d(), rep.n());
        check_grid("V", &v, d, n)?;
        let (rsv_t, rbar_vt) = fast_path_sides(rep, &v);
        if rsv_t != rbar_vt {
            return Err(Error::CocycleCondition("(R*V)ᵗ ≠ R̄Vᵗ".into()));
        }
        let minus_v: VectorGrid = v.iter().map(|row| row.iter().map(|x| -x).collect()).collect();
        if rbar_vt != minus_v {
            return Err(Error::CocycleCondition("R̄Vᵗ ≠ −V".into()));
        }
        let w = v.clone();
        Self::new(rep, v, w)
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn presentation(&self) -> &Presentation {
        self.rep.presentation()
    }

    pub fn d(&self) -> usize {
        self.rep.d()
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    pub fn letter(&self, l: Letter) -> &QVector {
        &self.values[l.code(self.d())]
    }

    /// `V_jk = η(u_jk)`, 0-based.
    pub fn v(&self, j: usize, k: usize) -> &QVector {
        self.letter(Letter::u(j, k))
    }

    /// `W_jk = η(u*_jk)`, 0-based.
    pub fn w(&self, j: usize, k: usize) -> &QVector {
        self.letter(Letter::u_star(j, k))
    }

    pub fn v_grid(&self) -> VectorGrid {
        let d = self.d();
        (0..d).map(|j| (0..d).map(|k| self.v(j, k).clone()).collect()).collect()
    }

    pub fn w_grid(&self) -> VectorGrid {
        let d = self.d();
        (0..d).map(|j| (0..d).map(|k| self.w(j, k).clone()).collect()).collect()
    }

    pub fn is_gaussian(&self) -> bool {
        self.rep.is_counit_type()
    }

    /// η on a word, peeling letters from the right:
    /// `η(l·w) = ρ(l)η(w) + η(l)ε(w)`.
    pub fn evaluate_word(&self, w: &Word) -> QVector {
        let mut acc = QVector::zeros(self.n());
        let mut eps = true;
        for &l in w.letters().iter().rev() {
            let mut next = self.rep.letter(l).mul_vec(&acc);
            if eps {
                next = &next + self.letter(l);
            }
            acc = next;
            eps &= l.counit();
        }
        acc
    }

    pub fn evaluate(&self, a: &Element) -> Result<QVector> {
        if a.d() != self.d() {
            return Err(Error::DimensionMismatch(format!("element over d = {}", a.d())));
        }
        let mut out = QVector::zeros(self.n());
        for (w, c) in a.terms() {
            out.axpy(c, &self.evaluate_word(w));
        }
        Ok(out)
    }

    pub fn violations(&self) -> Vec<Violation> {
        par::map(self.presentation().relations(), |r| {
            let x = self.evaluate(&r.element).expect("same d");
            (!x.is_zero()).then(|| Violation {
                relation: r.name.clone(),
                value: ViolationValue::Vector(x),
            })
        })
        .into_iter()
        .flatten()
        .collect()
    }

    pub fn b_matrices(&self) -> BMatrix {
        let d = self.d();
        let b = QMatrix::from_fn(d, d, |j, k| (0..d).map(|p| self.v(j, p).inner_unchecked(self.v(k, p))).sum());
        let b_tilde = QMatrix::from_fn(d, d, |j, k| (0..d).map(|p| self.w(j, p).inner_unchecked(self.w(k, p))).sum());
        BMatrix { b, b_tilde }
    }

    /// `(VV*)_jk = Σ_p ⟨V_kp, V_jp⟩`.
    pub fn vv_star(&self) -> QMatrix {
        gram_vvstar(&self.v_grid())
    }

    /// Reality test on all pairs from `sample ∪ letters`; the first violating
    /// pair in that order is returned as witness.
    pub fn reality(&self, sample: &[Word]) -> Result<RealityReport> {
        let pres = self.presentation();
        if !pres.is_kac() {
            return Err(Error::NotKac(pres.to_string()));
        }
        let d = self.d();
        let mut pool: Vec<Word> = Letter::all(d).map(Word::letter).collect();
        pool.extend(sample.iter().filter(|w| !w.is_empty() && w.len() > 1).cloned());
        let pairs: Vec<(usize, usize)> = (0..pool.len()).flat_map(|i| (0..pool.len()).map(move |j| (i, j))).collect();
        let witness = par::find_map_first(&pairs, |&(i, j)| {
            let (a, b) = (&pool[i], &pool[j]);
            let (lhs, rhs) = self.reality_pair(&Element::word(d, a.clone()), &Element::word(d, b.clone())).expect("Kac");
            (lhs != rhs).then(|| RealityWitness {
                a: a.clone(),
                b: b.clone(),
                lhs,
                rhs,
            })
        });
        Ok(RealityReport {
            real: witness.is_none(),
            pairs_checked: pairs.len(),
            witness,
        })
    }

    /// `(⟨η(a),η(b)⟩, ⟨η(S(b)*), η(S(a*))⟩)`
    pub fn reality_pair(&self, a: &Element, b: &Element) -> Result<(GaussianRational, GaussianRational)> {
        let pres = self.presentation();
        let lhs = self.evaluate(a)?.inner_unchecked(&self.evaluate(b)?);
        let sb = pres.antipode(b)?.star();
        let sa = pres.antipode(&a.star())?;
        let rhs = self.evaluate(&sb)?.inner_unchecked(&self.evaluate(&sa)?);
        Ok((lhs, rhs))
    }

    pub fn direct_sum(&self, other: &Cocycle) -> Result<Cocycle> {
        let rep = self.rep.direct_sum(&other.rep)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.concat(b)).collect();
        Cocycle::from_values_unchecked(&rep, values).validated()
    }

    /// η∘π on the source presentation.
    pub fn pullback(&self, sub: &GeneratorSubstitution, source: &Presentation) -> Result<Cocycle> {
        let rep = self.rep.pullback(sub, source)?;
        let d = source.d();
        let values = Letter::all(d)
            .map(|l| {
                let img = sub.image(l.row, l.col);
                if l.starred {
                    self.evaluate(&img.star())
                } else {
                    self.evaluate(img)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Cocycle::from_values_unchecked(&rep, values).validated()
    }

    /// `Σ cᵢ·ηᵢ` for cocycles sharing one representation.
    pub fn linear_combination(rep: &Representation, terms: &[(GaussianRational, &Cocycle)]) -> Result<Cocycle> {
        let mut out = Cocycle::zero(rep);
        for (c, eta) in terms {
            if eta.rep != *rep {
                return Err(Error::DimensionMismatch("cocycles over different representations".into()));
            }
            for (acc, x) in out.values.iter_mut().zip(&eta.values) {
                acc.axpy(c, x);
            }
        }
        Ok(out)
    }

    /// `M·η` on a new representation, e.g. a Gaussian or non-Gaussian part.
    pub fn map_values(&self, rep: &Representation, m: &QMatrix) -> Result<Cocycle> {
        let values = self.values.iter().map(|x| m.mul_vec(x)).collect();
        Cocycle::from_values_unchecked(rep, values).validated()
    }

    fn validated(self) -> Result<Cocycle> {
        let bad = self.violations();
        if bad.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvalidCocycle(bad))
        }
    }
}

/// The two sides of the fast-path identity, `(R*V)ᵗ` and `R̄Vᵗ`.
fn fast_path_sides(rep: &Representation, v: &VectorGrid) -> (VectorGrid, VectorGrid) {
    let (d, n) = (rep.d(), rep.n());
    let rs = |j: usize, k: usize| rep.letter(Letter::u_star(j, k));
    let rsv_t = (0..d)
        .map(|j| (0..d).map(|k| block_sum(n, (0..d).map(|p| (rs(p, k), &v[p][j])))).collect())
        .collect();
    let rbar_vt = (0..d)
        .map(|j| (0..d).map(|k| block_sum(n, (0..d).map(|p| (rs(j, p), &v[k][p])))).collect())
        .collect();
    (rsv_t, rbar_vt)
}

/// A scalar matrix as a grid of 1-vectors.
pub fn scalar_grid(v: &QMatrix) -> VectorGrid {
    (0..v.rows())
        .map(|j| (0..v.cols()).map(|k| QVector::scalar(v.get(j, k).clone())).collect())
        .collect()
}

/// Stack grids entrywise: `(V₁ ⊕ V₂)_jk = V₁_jk ⊕ V₂_jk`.
pub fn concat_grids(a: &VectorGrid, b: &VectorGrid) -> VectorGrid {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.concat(y)).collect())
        .collect()
}

/// `(VV*)_jk = Σ_p ⟨V_kp, V_jp⟩`, which is `Σ_p V_jp·conj(V_kp)` for scalar V.
pub fn gram_vvstar(v: &VectorGrid) -> QMatrix {
    let d = v.len();
    QMatrix::from_fn(d, d, |j, k| (0..d).map(|p| v[k][p].inner_unchecked(&v[j][p])).sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealityWitness {
    pub a: Word,
    pub b: Word,
    pub lhs: GaussianRational,
    pub rhs: GaussianRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealityReport {
    pub real: bool,
    pub pairs_checked: usize,
    pub witness: Option<RealityWitness>,
}

#[cfg(test)]
mod tests;
