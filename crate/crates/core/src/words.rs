//! Free-group words over the generators `B[i,j]` and `r[k,l]` of a surface
//! pure braid group.
//!
//! Words are plain letter sequences. Free reduction is the only
//! simplification performed; the word problem of the braid group itself is
//! never attempted.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid alphabet: n = {n}, g = {g} (need n >= 1, g >= 1)")]
    InvalidAlphabet { n: usize, g: usize },
    #[error("generator index out of range: {0}")]
    OutOfRange(String),
    #[error("alphabet mismatch: ({0}) vs ({1})")]
    AlphabetMismatch(Alphabet, Alphabet),
    #[error("cannot parse `{0}` as a letter")]
    Parse(String),
}

/// The ambient `(n, g)`: number of strands and non-orientable genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    n: usize,
    g: usize,
}

impl Alphabet {
    pub fn new(n: usize, g: usize) -> Result<Self, WordError> {
        if n < 1 || g < 1 {
            return Err(WordError::InvalidAlphabet { n, g });
        }
        Ok(Self { n, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// Number of generators: `n(n-1)/2 + n*g`.
    pub fn generator_count(&self) -> usize {
        self.n * (self.n - 1) / 2 + self.n * self.g
    }

    /// All generators in the canonical total order.
    pub fn generators(&self) -> Vec<GeneratorId> {
        let mut out = Vec::with_capacity(self.generator_count());
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                out.push(GeneratorId {
                    alphabet: *self,
                    kind: GenKind::B(i, j),
                });
            }
        }
        for k in 1..=self.n {
            for l in 1..=self.g {
                out.push(GeneratorId {
                    alphabet: *self,
                    kind: GenKind::Rho(k, l),
                });
            }
        }
        out
    }

    /// Position of `gen` in [`Alphabet::generators`].
    pub fn index_of(&self, gen: &GeneratorId) -> usize {
        let pairs = self.n * (self.n - 1) / 2;
        match gen.kind {
            GenKind::B(i, j) => {
                // pairs (i', j') with i' < i come first
                let before: usize = (1..i).map(|a| self.n - a).sum();
                before + (j - i - 1)
            }
            GenKind::Rho(k, l) => pairs + (k - 1) * self.g + (l - 1),
        }
    }

    pub fn b(&self, i: usize, j: usize) -> Result<GeneratorId, WordError> {
        GeneratorId::new(*self, GenKind::B(i, j))
    }

    pub fn rho(&self, k: usize, l: usize) -> Result<GeneratorId, WordError> {
        GeneratorId::new(*self, GenKind::Rho(k, l))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, g={}", self.n, self.g)
    }
}

/// `B(i, j)` with `1 <= i < j <= n`, or `Rho(k, l)` with `1 <= k <= n`, `1 <= l <= g`.
///
/// The derived order puts every `B` before every `Rho`, each lexicographic
/// in its indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GenKind {
    B(usize, usize),
    Rho(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId {
    alphabet: Alphabet,
    kind: GenKind,
}

impl GeneratorId {
    pub fn new(alphabet: Alphabet, kind: GenKind) -> Result<Self, WordError> {
        let (n, g) = (alphabet.n, alphabet.g);
        let ok = match kind {
            GenKind::B(i, j) => 1 <= i && i < j && j <= n,
            GenKind::Rho(k, l) => 1 <= k && k <= n && 1 <= l && l <= g,
        };
        if !ok {
            return Err(WordError::OutOfRange(format!(
                "{} over ({alphabet})",
                Self::render(kind)
            )));
        }
        Ok(Self { alphabet, kind })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn kind(&self) -> GenKind {
        self.kind
    }

    pub fn pos(self) -> Letter {
        Letter {
            gen: self,
            inverse: false,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Letter {
        Letter {
            gen: self,
            inverse: true,
        }
    }

    fn render(kind: GenKind) -> String {
        match kind {
            GenKind::B(i, j) => format!("B[{i},{j}]"),
            GenKind::Rho(k, l) => format!("r[{k},{l}]"),
        }
    }

    pub fn parse(alphabet: Alphabet, s: &str) -> Result<Self, WordError> {
        let err = || WordError::Parse(s.to_string());
        let s = s.trim();
        let (head, rest) = if let Some(r) = s.strip_prefix("B[") {
            (true, r)
        } else if let Some(r) = s.strip_prefix("r[") {
            (false, r)
        } else {
            return Err(err());
        };
        let body = rest.strip_suffix(']').ok_or_else(err)?;
        let (a, b) = body.split_once(',').ok_or_else(err)?;
        let a: usize = a.trim().parse().map_err(|_| err())?;
        let b: usize = b.trim().parse().map_err(|_| err())?;
        let kind = if head {
            GenKind::B(a, b)
        } else {
            GenKind::Rho(a, b)
        };
        Self::new(alphabet, kind)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Self::render(self.kind))
    }
}

/// A generator raised to `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    gen: GeneratorId,
    inverse: bool,
}

impl Letter {
    pub fn gen(&self) -> GeneratorId {
        self.gen
    }

    /// `+1` or `-1`.
    pub fn exponent(&self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn inverted(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }

    pub fn parse(alphabet: Alphabet, s: &str) -> Result<Self, WordError> {
        let s = s.trim();
        match s.strip_suffix("^-1") {
            Some(base) => Ok(GeneratorId::parse(alphabet, base)?.neg()),
            None => Ok(GeneratorId::parse(alphabet, s)?.pos()),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A finite letter sequence over one alphabet.
///
/// Equality compares freely reduced forms, so `[a, a^-1] == []`.
#[derive(Debug, Clone)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.reduce().letters == other.reduce().letters
    }
}

impl Eq for Word {}

impl Word {
    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Builds a word without reducing it.
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self, WordError> {
        if let Some(bad) = letters.iter().find(|l| l.gen.alphabet != alphabet) {
            return Err(WordError::AlphabetMismatch(alphabet, bad.gen.alphabet));
        }
        Ok(Self { alphabet, letters })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(&w[1]))
    }

    /// Free reduction with a single left-to-right stack pass.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(top) if top.cancels(&l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word {
            alphabet: self.alphabet,
            letters: out,
        }
    }

    pub fn invert(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverted()).collect();
        Word {
            alphabet: self.alphabet,
            letters,
        }
    }

    /// `reduce(self . other)`.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.alphabet != other.alphabet {
            return Err(WordError::AlphabetMismatch(self.alphabet, other.alphabet));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            alphabet: self.alphabet,
            letters,
        }
        .reduce())
    }

    /// Exponent sum of every generator, indexed as in [`Alphabet::generators`].
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.alphabet.generator_count()];
        for l in &self.letters {
            sums[self.alphabet.index_of(&l.gen)] += i64::from(l.exponent());
        }
        sums
    }

    /// Parses whitespace-separated letters; `1` or an empty string is the empty word.
    pub fn parse(alphabet: Alphabet, s: &str) -> Result<Word, WordError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty(alphabet));
        }
        let letters = s
            .split_whitespace()
            .map(|tok| Letter::parse(alphabet, tok))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word { alphabet, letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
