use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A bijection of `{0, …, d−1}` stored by its images (one-line notation).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParams(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    /// From 1-based one-line notation, e.g. `[3, 2, 1]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidParams("permutation images are 1-based".into()));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn identity(d: usize) -> Self {
        Permutation((0..d).collect())
    }

    /// All of S_d in lexicographic order of their images.
    pub fn all(d: usize) -> Vec<Permutation> {
        (0..d).permutations(d).map(Permutation).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Number of pairs `j < k` with `τ(j) > τ(k)`.
    pub fn inversion_count(&self) -> usize {
        self.0.iter().tuple_combinations().filter(|(a, b)| a > b).count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().map(|i| i + 1).join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
