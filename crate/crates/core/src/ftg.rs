//! Filling the gap: for an n-word `w`, find the block `L_i` and the
//! shortest fill `x` such that `wx` is a suffix of `L_1 ⋯ L_i` (block
//! indices taken cyclically).
//!
//! The computation first finds the *cover* of `w` (the shortest fill that
//! reaches the end of `L_1 ⋯ L_{i-1} L_i^{n/|L_i|}`) and then converts it.
//! Three shapes of `w` are distinguished:
//!
//! * `w = L^r` is an expanded Lyndon word; its cover is `(L, ε)`.
//! * `w` is almost-Lyndon; the first CFL factor of `w` that is not `k-1`
//!   lies in `(L_i, L_{i+1}]`, and the number of leading `k-1` factors is
//!   the length of the fill.
//! * otherwise `w` is a rotation of some `L_i^{r_i}`, and the fill is found
//!   by locating `w` inside `L_i L_{i+1}^{r_{i+1}}`.

use crate::error::{Error, Result};
use crate::lyndon::lnext_fast;
use crate::stringology::{
    cfl_ends, is_almost_lyndon_unchecked, is_lyndon_unchecked, last_occurrence,
    min_rotation_offset, root_len,
};
use crate::words::{Params, Symbol, Word};

/// A block `L_i` together with a fill word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapResult {
    pub lyndon: Word,
    pub fill: Word,
}

impl GapResult {
    pub fn new(lyndon: impl Into<Word>, fill: impl Into<Word>) -> Self {
        GapResult {
            lyndon: lyndon.into(),
            fill: fill.into(),
        }
    }
}

/// Converts `cover(w)` into `FTG(w)`.
///
/// Also accepts `(0, 0^p)` for `w = (k-1)^p 0^{n-p}`. Only the divisibility
/// of `|L|` is validated; other inputs are outside the contract.
pub fn cover_to_ftg(cover: GapResult, p: &Params) -> Result<GapResult> {
    let n = p.n();
    let len = cover.lyndon.len();
    if len == 0 || !n.is_multiple_of(len) {
        return Err(Error::Precondition("|L| must divide n"));
    }
    p.check_symbols(&cover.lyndon)?;
    p.check_symbols(&cover.fill)?;
    Ok(cover_to_ftg_unchecked(cover, p))
}

fn cover_to_ftg_unchecked(cover: GapResult, p: &Params) -> GapResult {
    let GapResult { lyndon, mut fill } = cover;
    let tail = p.n() - lyndon.len();
    if fill.len() >= tail {
        let keep = fill.len() - tail;
        fill.as_vec_mut().truncate(keep);
        return GapResult { lyndon, fill };
    }
    let next = lnext_fast(&lyndon, p);
    fill.extend(&next[next.len() - lyndon.len()..]);
    GapResult { lyndon: next, fill }
}

/// `FTG(w)` in O(n).
pub fn filling_the_gap(w: &[Symbol], p: &Params) -> Result<GapResult> {
    p.check_word(w)?;
    Ok(filling_the_gap_unchecked(w, p))
}

pub(crate) fn filling_the_gap_unchecked(w: &[Symbol], p: &Params) -> GapResult {
    let n = p.n();
    let top = p.max_symbol();

    if w.iter().all(|&s| s == top) {
        return GapResult::new([top], Word::new());
    }

    let root = &w[..root_len(w)];
    if is_lyndon_unchecked(root) {
        return cover_to_ftg_unchecked(GapResult::new(root, Word::new()), p);
    }

    let cover = if is_almost_lyndon_unchecked(w, p) {
        let ends = cfl_ends(w);
        let mut start = 0;
        let mut lead = 0;
        while ends[lead] - start == 1 && w[start] == top {
            start = ends[lead];
            lead += 1;
        }
        let mut block = Word::from(&w[start..ends[lead]]);
        if !n.is_multiple_of(block.len()) {
            block = lnext_fast(&block, p);
        }
        // (t-1)-suffix of block^r, with t - 1 = lead.
        let len = block.len();
        let fill: Word = (n - lead..n).map(|i| block[i % len]).collect();
        GapResult {
            lyndon: block,
            fill,
        }
    } else {
        let offset = min_rotation_offset(w);
        let rotated: Vec<Symbol> = w[offset..].iter().chain(&w[..offset]).copied().collect();
        let current = &rotated[..root_len(&rotated)];
        let next = lnext_fast(current, p);
        let reps = n / next.len();
        let mut text = Vec::with_capacity(current.len() + n);
        text.extend_from_slice(current);
        for _ in 0..reps {
            text.extend_from_slice(&next);
        }
        let start = last_occurrence(w, &text).expect("w occurs in L_i L_{i+1}^{r_{i+1}}");
        GapResult::new(next, &text[start + n..])
    };
    cover_to_ftg_unchecked(cover, p)
}
