use std::cmp::Ordering;
use std::fmt;

/// A generator `u_jk` or `u*_jk`. Indices are 0-based here and 1-based in
/// every textual form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub row: usize,
    pub col: usize,
    pub starred: bool,
}

impl Letter {
    pub const fn new(row: usize, col: usize, starred: bool) -> Self {
        Letter { row, col, starred }
    }

    pub const fn u(row: usize, col: usize) -> Self {
        Letter::new(row, col, false)
    }

    pub const fn u_star(row: usize, col: usize) -> Self {
        Letter::new(row, col, true)
    }

    /// Same indices, star toggled.
    pub const fn toggled(self) -> Self {
        Letter::new(self.row, self.col, !self.starred)
    }

    pub fn counit(self) -> bool {
        self.row == self.col
    }

    /// Dense code in `0..2d²`, compatible with the letter order.
    pub fn code(self, d: usize) -> usize {
        (self.row * d + self.col) * 2 + usize::from(self.starred)
    }

    pub fn from_code(code: usize, d: usize) -> Self {
        let rc = code / 2;
        Letter::new(rc / d, rc % d, code % 2 == 1)
    }

    /// All `2d²` letters in canonical order.
    pub fn all(d: usize) -> impl Iterator<Item = Letter> {
        (0..2 * d * d).map(move |c| Letter::from_code(c, d))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = if self.starred { "*" } else { "" };
        if self.row < 9 && self.col < 9 {
            write!(f, "u{star}_{}{}", self.row + 1, self.col + 1)
        } else {
            write!(f, "u{star}_{{{},{}}}", self.row + 1, self.col + 1)
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial; the empty word is the unit. Ordered length-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `(l₁⋯lₙ)* = lₙ*⋯l₁*`
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.toggled()).collect())
    }

    pub fn counit(&self) -> bool {
        self.0.iter().all(|l| l.counit())
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().map(|l| l.row.max(l.col)).max()
    }

    /// Every word of length exactly `len` over `2d²` letters, in canonical order.
    pub fn all_of_length(d: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::unit()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    Letter::all(d).map(move |l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    /// Every word of length at most `max_len`, shortest first.
    pub fn all_up_to(d: usize, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|n| Word::all_of_length(d, n)).collect()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
