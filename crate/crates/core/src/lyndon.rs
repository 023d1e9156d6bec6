//! Successors in the lexicographic list of Lyndon words.
//!
//! [`duval_next`] steps through *all* Lyndon words of length at most `n`;
//! [`lnext`] steps through only those whose length divides `n`, which are
//! exactly the blocks of the prefer-min De Bruijn sequence.

use crate::error::{Error, Result};
use crate::stringology::is_lyndon_unchecked;
use crate::words::{Params, Symbol, Word};

fn validate_lyndon(l: &[Symbol], p: &Params) -> Result<()> {
    if l.is_empty() {
        return Err(Error::EmptyWord);
    }
    p.check_symbols(l)?;
    if l.len() > p.n() {
        return Err(Error::Precondition("Lyndon word longer than n"));
    }
    if !is_lyndon_unchecked(l) {
        return Err(Error::NotLyndon);
    }
    Ok(())
}

/// Drops the trailing run of `top` and increments the new last symbol.
/// `x` must contain a symbol other than `top`.
#[inline]
fn strip_and_increment(x: &mut Vec<Symbol>, top: Symbol) {
    while x.last() == Some(&top) {
        x.pop();
    }
    *x.last_mut().expect("word consists only of k-1") += 1;
}

/// Duval's step, unvalidated.
pub(crate) fn duval_next_unchecked(l: &[Symbol], p: &Params) -> Word {
    let n = p.n();
    let mut x: Vec<Symbol> = Vec::with_capacity(n);
    while x.len() < n {
        let take = l.len().min(n - x.len());
        x.extend_from_slice(&l[..take]);
    }
    strip_and_increment(&mut x, p.max_symbol());
    Word::from(x)
}

/// The next Lyndon word of length at most `n`.
///
/// Extends `L` periodically to length `n`, removes the trailing run of
/// `k-1` and increments the last remaining symbol.
pub fn duval_next(l: &[Symbol], p: &Params) -> Result<Word> {
    validate_lyndon(l, p)?;
    if l == [p.max_symbol()] {
        return Err(Error::Precondition(
            "duval_next is undefined on the word k-1",
        ));
    }
    Ok(duval_next_unchecked(l, p))
}

/// Fast-mode [`lnext`]: skips the Lyndon validation of the input.
///
/// Runs in O(n). Before the loop `|x| > n/2`, and each pass appends as many
/// copies of the successor seed `u'` as fit, which at least halves the gap
/// `n - |x|`.
pub fn lnext_fast(l: &[Symbol], p: &Params) -> Word {
    let n = p.n();
    let top = p.max_symbol();
    if l == [top] {
        return Word::from([0]);
    }
    let mut x = duval_next_unchecked(l, p);
    if n.is_multiple_of(x.len()) {
        return x;
    }
    if 2 * x.len() < n {
        x = duval_next_unchecked(&x, p);
    }
    let mut x = x.into_vec();
    while !n.is_multiple_of(x.len()) {
        let m = n - x.len();
        let mut seed = x[..m].to_vec();
        strip_and_increment(&mut seed, top);
        let copies = m / seed.len();
        x.reserve(copies * seed.len());
        for _ in 0..copies {
            x.extend_from_slice(&seed);
        }
    }
    Word::from(x)
}

/// The smallest Lyndon word greater than `L` whose length divides `n`,
/// wrapping from `k-1` back to `0`.
pub fn lnext(l: &[Symbol], p: &Params) -> Result<Word> {
    validate_lyndon(l, p)?;
    Ok(lnext_fast(l, p))
}

/// Iterates the blocks `L_1, L_2, …` of the prefer-min sequence starting at
/// `start` (inclusive), wrapping forever.
#[derive(Debug, Clone)]
pub struct Blocks {
    params: Params,
    next: Word,
}

impl Blocks {
    pub fn from_first(p: &Params) -> Self {
        Blocks {
            params: *p,
            next: Word::from([0]),
        }
    }

    pub fn starting_at(start: Word, p: &Params) -> Result<Self> {
        validate_lyndon(&start, p)?;
        if !p.n().is_multiple_of(start.len()) {
            return Err(Error::Precondition("block length must divide n"));
        }
        Ok(Blocks {
            params: *p,
            next: start,
        })
    }
}

impl Iterator for Blocks {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let following = lnext_fast(&self.next, &self.params);
        Some(std::mem::replace(&mut self.next, following))
    }
}
