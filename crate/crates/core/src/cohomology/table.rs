//! Memoized values on every word up to a fixed length. The word `l₁…l_k`
//! sits at index `Σ code(lᵢ)·A^{k−i}` of level `k`, with `A = 2d²`.

use super::{Cochain, TwoCocycle};
use crate::algebra::{Letter, Word};
use crate::arith::{GaussianRational, QVector};
use crate::cocycle::Cocycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Key {
    pub len: usize,
    pub idx: usize,
}

pub(crate) struct Levels<T> {
    d: usize,
    alphabet: usize,
    levels: Vec<Vec<T>>,
}

impl<T> Levels<T> {
    /// Fills level `k` from level `k−1` by prefixing each letter.
    fn build(d: usize, max_len: usize, unit: T, mut step: impl FnMut(&[Vec<T>], Letter, Key) -> T) -> Self {
        let alphabet = 2 * d * d;
        let mut levels = vec![vec![unit]];
        for k in 1..=max_len {
            let prev = alphabet.pow(k as u32 - 1);
            let mut level = Vec::with_capacity(alphabet * prev);
            for code in 0..alphabet {
                let l = Letter::from_code(code, d);
                for idx in 0..prev {
                    level.push(step(&levels, l, Key { len: k - 1, idx }));
                }
            }
            levels.push(level);
        }
        Levels { d, alphabet, levels }
    }

    pub fn at(&self, k: Key) -> &T {
        &self.levels[k.len][k.idx]
    }

    pub fn key(&self, w: &Word) -> Key {
        Key {
            len: w.len(),
            idx: w.letters().iter().fold(0, |acc, l| acc * self.alphabet + l.code(self.d)),
        }
    }

    pub fn concat(&self, a: Key, b: Key) -> Key {
        Key {
            len: a.len + b.len,
            idx: a.idx * self.alphabet.pow(b.len as u32) + b.idx,
        }
    }

    /// Reversal with every letter toggled; `code ^ 1` toggles the star.
    pub fn star(&self, k: Key) -> Key {
        let (mut x, mut out) = (k.idx, 0);
        for _ in 0..k.len {
            out = out * self.alphabet + ((x % self.alphabet) ^ 1);
            x /= self.alphabet;
        }
        Key { len: k.len, idx: out }
    }

    pub fn letter(&self, l: Letter) -> Key {
        Key {
            len: 1,
            idx: l.code(self.d),
        }
    }
}

pub(crate) fn counit_table(d: usize, max_len: usize) -> Levels<bool> {
    Levels::build(d, max_len, true, |lv, l, w| l.counit() && lv[w.len][w.idx])
}

/// `η(l·w) = ρ(l)η(w) + η(l)ε(w)`.
pub(crate) fn cocycle_table(eta: &Cocycle, eps: &Levels<bool>, max_len: usize) -> Levels<QVector> {
    let rep = eta.rep();
    Levels::build(eta.d(), max_len, QVector::zeros(eta.n()), |lv, l, w| {
        let mut x = rep.letter(l).mul_vec(&lv[w.len][w.idx]);
        if *eps.at(w) {
            x = &x + eta.letter(l);
        }
        x
    })
}

pub(crate) enum PairTable {
    K { eta1: Levels<QVector>, eta2: Levels<QVector> },
    Cob { phi: Levels<GaussianRational>, eps: Levels<bool> },
    Comb(Vec<(GaussianRational, PairTable)>),
}

impl PairTable {
    /// Covers every pair with `|a| + |b| ≤ total`.
    pub fn build(c: &TwoCocycle, total: usize) -> Self {
        let d = c.presentation().d();
        match c {
            TwoCocycle::KPair(e1, e2) => {
                let len = total.saturating_sub(1);
                let eps = counit_table(d, len);
                PairTable::K {
                    eta1: cocycle_table(e1, &eps, len),
                    eta2: cocycle_table(e2, &eps, len),
                }
            }
            TwoCocycle::Coboundary(phi) => {
                let eps = counit_table(d, total);
                PairTable::Cob {
                    phi: cochain_table(phi, &eps, total),
                    eps,
                }
            }
            TwoCocycle::Combination(_, terms) => {
                PairTable::Comb(terms.iter().map(|(s, c)| (s.clone(), PairTable::build(c, total))).collect())
            }
        }
    }

    pub fn value(&self, a: Key, b: Key) -> GaussianRational {
        match self {
            PairTable::K { eta1, eta2 } => {
                if a.len == 0 || b.len == 0 {
                    return GaussianRational::ZERO;
                }
                eta1.at(eta1.star(a)).inner_unchecked(eta2.at(b))
            }
            PairTable::Cob { phi, eps } => {
                let mut x = -phi.at(phi.concat(a, b));
                if *eps.at(a) {
                    x += phi.at(b);
                }
                if *eps.at(b) {
                    x += phi.at(a);
                }
                x
            }
            PairTable::Comb(terms) => terms.iter().map(|(s, t)| s * &t.value(a, b)).sum(),
        }
    }
}

fn one_if(b: bool) -> GaussianRational {
    if b {
        GaussianRational::ONE
    } else {
        GaussianRational::ZERO
    }
}

pub(crate) fn cochain_table(phi: &Cochain, eps: &Levels<bool>, max_len: usize) -> Levels<GaussianRational> {
    let d = phi.presentation().d();
    match phi {
        Cochain::Counit(_) => Levels::build(d, max_len, GaussianRational::ONE, |_, l, w| one_if(l.counit() && *eps.at(w))),
        Cochain::Functional(psi) => {
            let eta = psi.cocycle();
            let et = cocycle_table(eta, eps, max_len.saturating_sub(1));
            // ψ(l·w) = ψ(l)ε(w) + ε(l)ψ(w) + ⟨η(l*), η(w)⟩
            Levels::build(d, max_len, GaussianRational::ZERO, |lv, l, w| {
                let mut x = eta.letter(l.toggled()).inner_unchecked(et.at(w));
                if *eps.at(w) {
                    x += psi.letter(l);
                }
                if l.counit() {
                    x += &lv[w.len][w.idx];
                }
                x
            })
        }
        Cochain::Primitive(p) => {
            let ct = PairTable::build(p.two_cocycle(), max_len);
            // φ(l·w) = ε(l)φ(w) + φ(l)ε(w) − c(l⊗w)
            Levels::build(d, max_len, p.unit().clone(), |lv, l, w| {
                let mut x = -ct.value(eps.letter(l), w);
                if l.counit() {
                    x += &lv[w.len][w.idx];
                }
                if *eps.at(w) {
                    x += p.letter(l);
                }
                x
            })
        }
    }
}
