use super::table::{counit_table, cochain_table, PairTable};
use super::{defect_orthogonal, defect_unitary, Cochain, TwoCocycle};
use crate::algebra::{Kind, Letter, Presentation, Word};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::par;
use crate::sampling;

/// φ with `∂φ = c`, fixed by its letter values and `φ(1) = c(1⊗1)`:
/// `φ(l·w) = ε(l)φ(w) + φ(l)ε(w) − c(l⊗w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Primitive {
    c: Box<TwoCocycle>,
    /// Indexed by letter code.
    values: Vec<GaussianRational>,
    unit: GaussianRational,
}

impl Primitive {
    /// Re-attaches stored letter values to their 2-cocycle.
    pub fn from_values(c: &TwoCocycle, values: Vec<Vec<GaussianRational>>, star_values: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let d = c.presentation().d();
        for g in [&values, &star_values] {
            if g.len() != d || g.iter().any(|r| r.len() != d) {
                return Err(Error::DimensionMismatch(format!("primitive values must form a {d}×{d} grid")));
            }
        }
        let vals = Letter::all(d)
            .map(|l| if l.starred { star_values[l.row][l.col].clone() } else { values[l.row][l.col].clone() })
            .collect();
        Ok(Primitive {
            c: Box::new(c.clone()),
            values: vals,
            unit: c.unit_value(),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        self.c.presentation()
    }

    pub fn two_cocycle(&self) -> &TwoCocycle {
        &self.c
    }

    pub fn letter(&self, l: Letter) -> &GaussianRational {
        &self.values[l.code(self.presentation().d())]
    }

    pub fn unit(&self) -> &GaussianRational {
        &self.unit
    }

    pub fn values_grid(&self) -> Vec<Vec<GaussianRational>> {
        self.grid(false)
    }

    pub fn star_values_grid(&self) -> Vec<Vec<GaussianRational>> {
        self.grid(true)
    }

    fn grid(&self, starred: bool) -> Vec<Vec<GaussianRational>> {
        let d = self.presentation().d();
        (0..d)
            .map(|j| (0..d).map(|k| self.letter(Letter { row: j, col: k, starred }).clone()).collect())
            .collect()
    }

    pub fn evaluate_word(&self, w: &Word) -> GaussianRational {
        let ls = w.letters();
        let mut phi = self.unit.clone();
        let mut eps = true;
        for i in (0..ls.len()).rev() {
            let l = ls[i];
            let rest = Word::new(ls[i + 1..].to_vec());
            let mut x = -self.c.evaluate_words(&Word::letter(l), &rest);
            if l.counit() {
                x += &phi;
            }
            if eps {
                x += self.letter(l);
            }
            phi = x;
            eps &= l.counit();
        }
        phi
    }
}

/// A primitive of `c`: on U_d⁺ and K⟨d⟩ `φ(u_jk) = φ(u*_kj) = ½Σ_p c(u*_pj ⊗ u_pk)`,
/// on O_d⁺ `φ(u_jk) = φ(u*_jk) = ½Σ_p c(u_pj ⊗ u_pk)`, each for normalized c.
pub fn primitive(c: &TwoCocycle) -> Result<Primitive> {
    let pres = c.presentation();
    let d = pres.d();
    match pres.kind() {
        Kind::UPlus => {
            let delta = defect_unitary(c)?;
            if !delta.entries.is_zero() {
                return Err(Error::NonzeroDefect(delta.entries));
            }
        }
        Kind::OPlus => {
            let delta = defect_orthogonal(c)?;
            if !delta.entries.is_zero() {
                return Err(Error::NonzeroDefect(delta.entries));
            }
        }
        Kind::KD => {}
        k => return Err(Error::Unsupported(format!("primitives on {} presentations", k.json_name()))),
    }
    let cn = c.normalize();
    let unit = c.unit_value();
    let u = |j, k| Word::letter(Letter::u(j, k));
    let us = |j, k| Word::letter(Letter::u_star(j, k));
    let mut values = vec![GaussianRational::ZERO; 2 * d * d];
    for j in 0..d {
        for k in 0..d {
            let s: GaussianRational = if pres.kind() == Kind::OPlus {
                (0..d).map(|p| cn.evaluate_words(&u(p, j), &u(p, k))).sum()
            } else {
                (0..d).map(|p| cn.evaluate_words(&us(p, j), &u(p, k))).sum()
            };
            let mut x = s.half();
            if j == k {
                x += &unit;
            }
            let partner = if pres.kind() == Kind::OPlus { Letter::u_star(j, k) } else { Letter::u_star(k, j) };
            values[Letter::u(j, k).code(d)] = x.clone();
            values[partner.code(d)] = x;
        }
    }
    let phi = Primitive {
        c: Box::new(c.clone()),
        values,
        unit,
    };
    verify(&phi)?;
    Ok(phi)
}

/// φ vanishes on every relation and `∂φ = c` on all pairs of total length ≤ 2
/// plus 20 seeded pairs of length-2 words.
fn verify(phi: &Primitive) -> Result<()> {
    let pres = phi.presentation();
    let cochain = Cochain::Primitive(phi.clone());
    for r in pres.relations() {
        let x = cochain.evaluate(&r.element)?;
        if !x.is_zero() {
            return Err(Error::PrimitiveCheck(format!("φ{} = {x}", r.name)));
        }
    }
    if let Some((a, b)) = check_primitive_exhaustive(phi, 1)? {
        return Err(Error::PrimitiveCheck(format!("∂φ ≠ c at ({a}, {b})")));
    }
    let d = pres.d();
    let mut rng = sampling::rng(0x9417);
    for _ in 0..20 {
        let (a, b) = (sampling::random_word(&mut rng, d, 2), sampling::random_word(&mut rng, d, 2));
        if TwoCocycle::coboundary(cochain.clone()).evaluate_words(&a, &b) != phi.c.evaluate_words(&a, &b) {
            return Err(Error::PrimitiveCheck(format!("∂φ ≠ c at ({a}, {b})")));
        }
    }
    Ok(())
}

/// Compares `∂φ` with `c` on every pair of words of length ≤ `max_len`
/// through memoized tables; returns the first mismatch.
pub fn check_primitive_exhaustive(phi: &Primitive, max_len: usize) -> Result<Option<(Word, Word)>> {
    let d = phi.presentation().d();
    let total = 2 * max_len;
    let cochain = Cochain::Primitive(phi.clone());
    let eps = counit_table(d, total);
    let pt = cochain_table(&cochain, &eps, total);
    let ct = PairTable::build(&phi.c, total);
    let words = Word::all_up_to(d, max_len);
    let keys: Vec<_> = words.iter().map(|w| pt.key(w)).collect();
    let hit = par::find_map_first(&keys, |&a| {
        keys.iter().find_map(|&b| {
            let mut lhs = -pt.at(pt.concat(a, b));
            if *eps.at(a) {
                lhs += pt.at(b);
            }
            if *eps.at(b) {
                lhs += pt.at(a);
            }
            (lhs != ct.value(a, b)).then_some((a, b))
        })
    });
    Ok(hit.map(|(a, b)| {
        let find = |k| words[keys.iter().position(|x| *x == k).expect("key of a listed word")].clone();
        (find(a), find(b))
    }))
}
