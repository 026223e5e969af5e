//! Seeded sampling of scalars, cocycles and word pools. Every routine is a
//! pure function of the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Letter, Word};
use crate::arith::{GaussianRational, QMatrix, QVector};
use crate::cocycle::Cocycle;
use crate::error::Result;
use crate::representation::Representation;

/// Sampling and execution settings shared by the CLI and the scenario suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_word_len: usize,
    pub seed: u64,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_word_len: 3,
            seed: 0x5eed,
            threads: 0,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a/q + (b/q)i` with small numerators.
pub fn random_scalar(rng: &mut impl Rng, bound: i64) -> GaussianRational {
    let q = rng.random_range(1..=2);
    GaussianRational::frac(rng.random_range(-bound..=bound), q, rng.random_range(-bound..=bound), q)
}

pub fn random_vector(rng: &mut impl Rng, n: usize, bound: i64) -> QVector {
    (0..n).map(|_| random_scalar(rng, bound)).collect()
}

pub fn random_matrix(rng: &mut impl Rng, r: usize, c: usize, bound: i64) -> QMatrix {
    QMatrix::from_fn(r, c, |_, _| random_scalar(rng, bound))
}

pub fn random_selfadjoint(rng: &mut impl Rng, d: usize, bound: i64) -> QMatrix {
    let m = random_matrix(rng, d, d, bound);
    &m + &m.adjoint()
}

/// Antisymmetric grid `V_jk = −V_kj` with entries in ℂⁿ.
pub fn random_antisymmetric(rng: &mut impl Rng, d: usize, n: usize, bound: i64) -> Vec<Vec<QVector>> {
    let mut v = vec![vec![QVector::zeros(n); d]; d];
    for j in 0..d {
        for k in j + 1..d {
            let x = random_vector(rng, n, bound);
            v[k][j] = -&x;
            v[j][k] = x;
        }
    }
    v
}

/// A random element of the span of `basis`, all over `rep`.
pub fn random_cocycle(rng: &mut impl Rng, rep: &Representation, basis: &[Cocycle], bound: i64) -> Result<Cocycle> {
    let coeffs: Vec<_> = basis.iter().map(|_| random_scalar(rng, bound)).collect();
    let terms: Vec<_> = coeffs.into_iter().zip(basis).collect();
    Cocycle::linear_combination(rep, &terms)
}

pub fn random_word(rng: &mut impl Rng, d: usize, len: usize) -> Word {
    Word::new((0..len).map(|_| Letter::from_code(rng.random_range(0..2 * d * d), d)).collect())
}
