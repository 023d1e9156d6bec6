//! Parameters, words and their text encodings.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Deref, DerefMut};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single alphabet symbol in `0..k`.
pub type Symbol = usize;

/// The pair `(n, k)`: word length and alphabet size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    n: usize,
    k: usize,
}

impl Params {
    /// `n = 1` is accepted; `k = 1` is not.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k < 2 {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(Params { n, k })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// The largest symbol, `k - 1`.
    #[inline]
    pub fn max_symbol(&self) -> Symbol {
        self.k - 1
    }

    /// `k^n` if it does not exceed `cap`.
    pub fn period_capped(&self, cap: usize) -> Option<usize> {
        let n = u32::try_from(self.n).ok()?;
        self.k.checked_pow(n).filter(|&len| len <= cap)
    }

    pub fn check_symbols(&self, w: &[Symbol]) -> Result<()> {
        match w.iter().find(|&&s| s >= self.k) {
            Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, k: self.k }),
            None => Ok(()),
        }
    }

    /// Checks that `w` is an n-word over the alphabet.
    pub fn check_word(&self, w: &[Symbol]) -> Result<()> {
        if w.len() != self.n {
            return Err(Error::WrongLength {
                expected: self.n,
                actual: w.len(),
            });
        }
        self.check_symbols(w)
    }
}

/// A finite sequence of symbols. Derefs to `[Symbol]`, so every slice
/// operation (and the lexicographic `Ord` of slices) is available.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn with_capacity(cap: usize) -> Self {
        Word(Vec::with_capacity(cap))
    }

    /// `s^len`.
    pub fn repeat_symbol(s: Symbol, len: usize) -> Self {
        Word(vec![s; len])
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn as_vec_mut(&mut self) -> &mut Vec<Symbol> {
        &mut self.0
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl DerefMut for Word {
    fn deref_mut(&mut self) -> &mut [Symbol] {
        &mut self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl<const N: usize> From<[Symbol; N]> for Word {
    fn from(v: [Symbol; N]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Extend<Symbol> for Word {
    fn extend<I: IntoIterator<Item = Symbol>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> Extend<&'a Symbol> for Word {
    fn extend<I: IntoIterator<Item = &'a Symbol>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

impl PartialEq<[Symbol]> for Word {
    fn eq(&self, other: &[Symbol]) -> bool {
        self.0 == other
    }
}

impl PartialEq<&[Symbol]> for Word {
    fn eq(&self, other: &&[Symbol]) -> bool {
        self.0 == *other
    }
}

/// Lexicographic order; a proper prefix is smaller.
pub fn compare_lex(a: &[Symbol], b: &[Symbol]) -> Ordering {
    a.cmp(b)
}

/// Returns `yx` where `w = xy` and `|x| = t mod |w|`.
pub fn rotate_left(w: &[Symbol], t: usize) -> Result<Word> {
    if w.is_empty() {
        return if t == 0 {
            Ok(Word::new())
        } else {
            Err(Error::EmptyWord)
        };
    }
    let t = t % w.len();
    let mut out = Word::with_capacity(w.len());
    out.extend(&w[t..]);
    out.extend(&w[..t]);
    Ok(out)
}

/// Maps every symbol `m` to `k - 1 - m`.
pub fn complement(w: &[Symbol], p: &Params) -> Word {
    let top = p.max_symbol();
    w.iter().map(|&s| top - s).collect()
}

/// Text encoding of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// One decimal digit per symbol, no separators (`k ≤ 10`).
    Digits,
    /// Comma-separated decimal integers.
    Csv,
}

impl Format {
    /// Digits for `k ≤ 10`, otherwise csv.
    pub fn default_for(p: &Params) -> Self {
        if p.k() <= 10 {
            Format::Digits
        } else {
            Format::Csv
        }
    }

    /// The string written between two consecutive symbols.
    pub fn separator(&self) -> &'static str {
        match self {
            Format::Digits => "",
            Format::Csv => ",",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "digits" => Ok(Format::Digits),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected digits or csv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Digits => "digits",
            Format::Csv => "csv",
        })
    }
}

pub fn parse_word(text: &str, p: &Params, format: Format) -> Result<Word> {
    let word: Word = match format {
        Format::Digits => {
            if p.k() > 10 {
                return Err(Error::DigitsUnsupported { k: p.k() });
            }
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as Symbol)
                        .ok_or_else(|| Error::MalformedToken(c.to_string()))
                })
                .collect::<Result<_>>()?
        }
        Format::Csv => {
            if text.is_empty() {
                return Ok(Word::new());
            }
            text.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<Symbol>()
                        .map_err(|_| Error::MalformedToken(tok.to_string()))
                })
                .collect::<Result<_>>()?
        }
    };
    p.check_symbols(&word)?;
    Ok(word)
}

pub fn format_word(w: &[Symbol], p: &Params, format: Format) -> Result<String> {
    if format == Format::Digits && p.k() > 10 {
        return Err(Error::DigitsUnsupported { k: p.k() });
    }
    let mut out = String::with_capacity(w.len() * 2);
    for (i, &s) in w.iter().enumerate() {
        if i > 0 {
            out.push_str(format.separator());
        }
        out.push_str(&s.to_string());
    }
    Ok(out)
}
