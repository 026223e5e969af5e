//! Generating functionals: Schürmann's formula, evaluation, existence
//! criteria, conditional positivity and the Lévy–Khintchine split.

mod lk;

use crate::algebra::{Element, Kind, Letter, Permutation, Word};
use crate::arith::{psd_check, solve, GaussianRational, QMatrix, QVector};
use crate::cocycle::Cocycle;
use crate::error::{Error, Result, Violation, ViolationValue};
use crate::par;

pub use lk::{lk_decomposition, LkReport};

/// ψ with letter values `ψ(u_jk)`, `ψ(u*_jk)` and its cocycle η; validated on
/// every relation and hermitian on letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    eta: Cocycle,
    /// Indexed by letter code.
    values: Vec<GaussianRational>,
}

pub type ScalarGrid = Vec<Vec<GaussianRational>>;

fn interleave(d: usize, v: &ScalarGrid, s: &ScalarGrid) -> Vec<GaussianRational> {
    Letter::all(d)
        .map(|l| if l.starred { s[l.row][l.col].clone() } else { v[l.row][l.col].clone() })
        .collect()
}

fn check_grid(g: &ScalarGrid, d: usize) -> Result<()> {
    if g.len() != d || g.iter().any(|r| r.len() != d) {
        return Err(Error::DimensionMismatch(format!("functional values must form a {d}×{d} grid")));
    }
    Ok(())
}

impl Functional {
    /// General constructor: hermitian letter values, validated on relations.
    pub fn new(eta: &Cocycle, values: ScalarGrid, star_values: ScalarGrid) -> Result<Self> {
        let d = eta.d();
        check_grid(&values, d)?;
        check_grid(&star_values, d)?;
        for j in 0..d {
            for k in 0..d {
                if star_values[j][k] != values[j][k].conj() {
                    return Err(Error::NotHermitianFunctional);
                }
            }
        }
        Self::unchecked(eta, interleave(d, &values, &star_values)).validated()
    }

    pub(crate) fn unchecked(eta: &Cocycle, values: Vec<GaussianRational>) -> Self {
        Functional {
            eta: eta.clone(),
            values,
        }
    }

    /// `ψ(u_jk) = −½B̃_jk + iH_jk`, `ψ(u*_jk) = conj(ψ(u_jk))`, then validated.
    pub fn schurmann(eta: &Cocycle, h: Option<&QMatrix>) -> Result<Self> {
        let d = eta.d();
        if let Some(h) = h {
            if h.rows() != d || !h.is_hermitian() {
                return Err(Error::NotHermitian);
            }
        }
        let bt = eta.b_matrices().b_tilde;
        let values: ScalarGrid = (0..d)
            .map(|j| {
                (0..d)
                    .map(|k| {
                        let mut x = -bt.get(j, k).half();
                        if let Some(h) = h {
                            x += h.get(j, k).times_i();
                        }
                        x
                    })
                    .collect()
            })
            .collect();
        let star = values.iter().map(|r| r.iter().map(GaussianRational::conj).collect()).collect();
        Self::new(eta, values, star)
    }

    /// Exact existence test for any presentation: ψ is fixed by its letter
    /// values up to the η-dependent part, so vanishing on relations is a
    /// linear system. A solution is hermitianized and returned.
    pub fn solve_for(eta: &Cocycle) -> Result<Option<Functional>> {
        let d = eta.d();
        let letters = 2 * d * d;
        let base = Self::unchecked(eta, vec![GaussianRational::ZERO; letters]);
        let rels = eta.presentation().relations();
        let rows: Vec<(Vec<GaussianRational>, GaussianRational)> = par::map(rels, |r| {
            let mut row = vec![GaussianRational::ZERO; letters];
            for (w, c) in r.element.terms() {
                let ls = w.letters();
                for (i, l) in ls.iter().enumerate() {
                    let others = ls.iter().enumerate().all(|(j, x)| j == i || x.counit());
                    if others {
                        row[l.code(d)] += c;
                    }
                }
            }
            (row, -base.evaluate(&r.element).expect("same d"))
        });
        let (a, b): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        let x = if a.is_empty() {
            Some(QVector::zeros(letters))
        } else {
            solve(&QMatrix::from_rows(a).expect("rectangular"), &QVector::new(b))?
        };
        let Some(x) = x else { return Ok(None) };
        let raw = Self::unchecked(eta, x.into_entries());
        let (v, s) = hermitianize(&raw.values_grid(), &raw.star_values_grid());
        Ok(Some(Self::new(eta, v, s)?))
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.eta
    }

    pub fn d(&self) -> usize {
        self.eta.d()
    }

    pub fn letter(&self, l: Letter) -> &GaussianRational {
        &self.values[l.code(self.d())]
    }

    pub fn values_grid(&self) -> ScalarGrid {
        let d = self.d();
        (0..d).map(|j| (0..d).map(|k| self.letter(Letter::u(j, k)).clone()).collect()).collect()
    }

    pub fn star_values_grid(&self) -> ScalarGrid {
        let d = self.d();
        (0..d).map(|j| (0..d).map(|k| self.letter(Letter::u_star(j, k)).clone()).collect()).collect()
    }

    /// ψ on a word, peeling from the right:
    /// `ψ(l·w) = ψ(l)ε(w) + ε(l)ψ(w) + ⟨η(l*), η(w)⟩`.
    pub fn evaluate_word(&self, w: &Word) -> GaussianRational {
        let n = self.eta.n();
        let rep = self.eta.rep();
        let mut psi = GaussianRational::ZERO;
        let mut eta = QVector::zeros(n);
        let mut eps = true;
        for &l in w.letters().iter().rev() {
            let mut next_psi = self.eta.letter(l.toggled()).inner_unchecked(&eta);
            if eps {
                next_psi += self.letter(l);
            }
            if l.counit() {
                next_psi += &psi;
            }
            let mut next_eta = rep.letter(l).mul_vec(&eta);
            if eps {
                next_eta = &next_eta + self.eta.letter(l);
            }
            psi = next_psi;
            eta = next_eta;
            eps &= l.counit();
        }
        psi
    }

    pub fn evaluate(&self, a: &Element) -> Result<GaussianRational> {
        if a.d() != self.d() {
            return Err(Error::DimensionMismatch(format!("element over d = {}", a.d())));
        }
        Ok(a.terms().map(|(w, c)| c * &self.evaluate_word(w)).sum())
    }

    pub fn violations(&self) -> Vec<Violation> {
        par::map(self.eta.presentation().relations(), |r| {
            let x = self.evaluate(&r.element).expect("same d");
            (!x.is_zero()).then(|| Violation {
                relation: r.name.clone(),
                value: ViolationValue::Scalar(x),
            })
        })
        .into_iter()
        .flatten()
        .collect()
    }

    fn validated(self) -> Result<Self> {
        let bad = self.violations();
        if bad.is_empty() {
            Ok(self)
        } else {
            Err(Error::FunctionalRejected(bad))
        }
    }

    /// `(ψ(aᵢ*aⱼ))` with `aᵢ = wᵢ − ε(wᵢ)1`, tested for positive semidefiniteness.
    pub fn gram_psd_check(&self, words: &[Word]) -> Result<bool> {
        psd_check(&self.gram_matrix(words))
    }

    pub fn gram_matrix(&self, words: &[Word]) -> QMatrix {
        let eps: Vec<bool> = words.iter().map(Word::counit).collect();
        let stars: Vec<Word> = words.iter().map(Word::star).collect();
        let n = words.len();
        let rows = par::map_range_with(par::Execution::default(), n, |i| {
            (0..n)
                .map(|j| {
                    // ψ(aᵢ*aⱼ) = ψ(wᵢ*wⱼ) − ε(wⱼ)ψ(wᵢ*) − ε(wᵢ)ψ(wⱼ), as ψ(1) = 0
                    let mut x = self.evaluate_word(&stars[i].concat(&words[j]));
                    if eps[j] {
                        x -= self.evaluate_word(&stars[i]);
                    }
                    if eps[i] {
                        x -= self.evaluate_word(&words[j]);
                    }
                    x
                })
                .collect()
        });
        QMatrix::from_rows(rows).expect("square")
    }
}

/// Default Gram pool: unstarred words of length ≤ `max_len` (nonempty) and
/// their adjoints, without repeats.
pub fn default_word_pool(d: usize, max_len: usize) -> Vec<Word> {
    let mut pool: Vec<Word> = Vec::new();
    for len in 1..=max_len {
        let unstarred = (0..len).fold(vec![Vec::new()], |acc, _| {
            acc.into_iter()
                .flat_map(|w: Vec<Letter>| {
                    (0..d * d).map(move |rc| {
                        let mut v = w.clone();
                        v.push(Letter::u(rc / d, rc % d));
                        v
                    })
                })
                .collect()
        });
        for w in unstarred {
            let w = Word::new(w);
            pool.push(w.star());
            pool.push(w);
        }
    }
    pool.sort();
    pool.dedup();
    pool
}

/// `½(ψ + ψ̄)` letterwise, with `ψ̄(a) = conj(ψ(a*))`.
pub fn hermitianize(values: &ScalarGrid, star_values: &ScalarGrid) -> (ScalarGrid, ScalarGrid) {
    let v: ScalarGrid = values
        .iter()
        .zip(star_values)
        .map(|(rv, rs)| rv.iter().zip(rs).map(|(a, b)| (a + &b.conj()).half()).collect())
        .collect();
    let s = v.iter().map(|r| r.iter().map(GaussianRational::conj).collect()).collect();
    (v, s)
}

/// `B̃ = Bᵗ` on U_d⁺.
pub fn admits_gf_unitary(eta: &Cocycle) -> Result<bool> {
    eta.presentation().ensure_kind(&[Kind::UPlus])?;
    let b = eta.b_matrices();
    Ok(b.b_tilde == b.b.transpose())
}

/// `B` symmetric (equivalently real) on O_d⁺.
pub fn admits_gf_orth(eta: &Cocycle) -> Result<bool> {
    eta.presentation().ensure_kind(&[Kind::OPlus])?;
    Ok(eta.b_matrices().b.is_symmetric())
}

/// The matching criterion on U_d⁺ / O_d⁺, the exact solver elsewhere.
pub fn admits_gf(eta: &Cocycle) -> Result<bool> {
    match eta.presentation().kind() {
        Kind::UPlus => admits_gf_unitary(eta),
        Kind::OPlus => admits_gf_orth(eta),
        _ => Ok(Functional::solve_for(eta)?.is_some()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    /// `(τ, C_τ)` over S₃ in lexicographic order.
    pub values: Vec<(Permutation, GaussianRational)>,
    pub constant: bool,
}

/// `C_τ = ⟨η_{τ1},η_{τ2}⟩ + ⟨η_{τ2},η_{τ3}⟩ + ⟨η_{τ1},η_{τ3}⟩` with `η_j = η(u_jj)`.
pub fn su_q3_obstruction(eta: &Cocycle) -> Result<Obstruction> {
    let pres = eta.presentation();
    pres.ensure_kind(&[Kind::SUq])?;
    if pres.d() != 3 {
        return Err(Error::InvalidParams("the obstruction is defined for d = 3".into()));
    }
    if !eta.is_gaussian() {
        return Err(Error::Unsupported("obstruction needs a Gaussian cocycle".into()));
    }
    let e = |j: usize| eta.v(j, j);
    let values: Vec<_> = Permutation::all(3)
        .into_iter()
        .map(|t| {
            let (a, b, c) = (t.apply(0), t.apply(1), t.apply(2));
            let x = e(a).inner_unchecked(e(b)) + e(b).inner_unchecked(e(c)) + e(a).inner_unchecked(e(c));
            (t, x)
        })
        .collect();
    let constant = values.iter().all(|(_, x)| *x == values[0].1);
    Ok(Obstruction { values, constant })
}
