//! The generalized shift rule and whole-sequence streaming.

use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::ftg::filling_the_gap_unchecked;
use crate::lyndon::lnext_fast;
use crate::words::{complement, Params, Symbol, Word};

/// Which of the two greedy De Bruijn sequences to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    #[default]
    Min,
    Max,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "min" => Ok(Variant::Min),
            "max" => Ok(Variant::Max),
            other => Err(format!("unknown variant {other:?} (expected min or max)")),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Min => "min",
            Variant::Max => "max",
        })
    }
}

/// The `c` symbols that follow the n-word `w` in the cyclic prefer-min
/// sequence, in O(n + c).
pub fn generalized_shift_rule(w: &[Symbol], c: usize, p: &Params) -> Result<Word> {
    p.check_word(w)?;
    Ok(gsr_unchecked(w, c, p))
}

fn gsr_unchecked(w: &[Symbol], c: usize, p: &Params) -> Word {
    if c == 0 {
        return Word::new();
    }
    let gap = filling_the_gap_unchecked(w, p);
    let mut block = gap.lyndon;
    let mut out = gap.fill.into_vec();
    out.reserve(c.saturating_sub(out.len()));
    let n = p.n();
    let top = p.max_symbol();
    let mut prev_short = false;
    while out.len() < c {
        let next = lnext_fast(&block, p);
        // Two consecutive short blocks only occur across the k-1 → 0 wrap.
        let short = next.len() < n;
        debug_assert!(
            !(prev_short && short) || (block[..] == [top] && next[..] == [0]),
            "consecutive short blocks {block:?} {next:?}"
        );
        prev_short = short;
        let take = next.len().min(c - out.len());
        out.extend_from_slice(&next[..take]);
        block = next;
    }
    out.truncate(c);
    Word::from(out)
}

/// The symbol following `w` in the prefer-min sequence.
pub fn shift_rule(w: &[Symbol], p: &Params) -> Result<Symbol> {
    Ok(generalized_shift_rule(w, 1, p)?[0])
}

/// The `c` symbols following `w` in the prefer-max sequence.
pub fn prefer_max_gsr(w: &[Symbol], c: usize, p: &Params) -> Result<Word> {
    p.check_word(w)?;
    let mirrored = complement(w, p);
    Ok(complement(&gsr_unchecked(&mirrored, c, p), p))
}

/// Dispatches on the variant.
pub fn gsr_variant(w: &[Symbol], c: usize, p: &Params, variant: Variant) -> Result<Word> {
    match variant {
        Variant::Min => generalized_shift_rule(w, c, p),
        Variant::Max => prefer_max_gsr(w, c, p),
    }
}

/// Streams the prefer-min or prefer-max sequence block by block, holding
/// only the current block in memory.
///
/// Without a limit the stream ends after one full period, detected when
/// the block successor wraps from `k-1` back to `0`. With a limit the
/// stream yields exactly that many symbols, wrapping around the cyclic
/// sequence as often as needed.
#[derive(Debug, Clone)]
pub struct SequenceStream {
    params: Params,
    variant: Variant,
    block: Word,
    pos: usize,
    remaining: Option<u64>,
    done: bool,
}

impl SequenceStream {
    pub fn new(p: &Params, variant: Variant, limit: Option<u64>) -> Self {
        SequenceStream {
            params: *p,
            variant,
            block: Word::from([0]),
            pos: 0,
            remaining: limit,
            done: limit == Some(0),
        }
    }

    /// The block currently being emitted, in prefer-min form.
    pub fn current_block(&self) -> &[Symbol] {
        &self.block
    }

    #[inline]
    fn emit(&self, s: Symbol) -> Symbol {
        match self.variant {
            Variant::Min => s,
            Variant::Max => self.params.max_symbol() - s,
        }
    }

    fn advance_block(&mut self) {
        let wraps = self.block[..] == [self.params.max_symbol()];
        self.block = lnext_fast(&self.block, &self.params);
        self.pos = 0;
        if wraps && self.remaining.is_none() {
            self.done = true;
        }
    }

    /// Appends up to `max` symbols to `buf`; returns how many were written.
    pub fn fill_chunk(&mut self, buf: &mut Vec<Symbol>, max: usize) -> usize {
        let mut written = 0;
        while written < max && !self.done {
            let mut avail = (self.block.len() - self.pos).min(max - written);
            if let Some(rem) = self.remaining {
                avail = avail.min(usize::try_from(rem).unwrap_or(usize::MAX));
            }
            let slice = &self.block[self.pos..self.pos + avail];
            match self.variant {
                Variant::Min => buf.extend_from_slice(slice),
                Variant::Max => {
                    let top = self.params.max_symbol();
                    buf.extend(slice.iter().map(|&s| top - s));
                }
            }
            self.pos += avail;
            written += avail;
            if let Some(rem) = self.remaining.as_mut() {
                *rem -= avail as u64;
                if *rem == 0 {
                    self.done = true;
                }
            }
            if self.pos == self.block.len() {
                self.advance_block();
            }
        }
        written
    }
}

impl Iterator for SequenceStream {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        if self.done {
            return None;
        }
        let s = self.emit(self.block[self.pos]);
        self.pos += 1;
        if let Some(rem) = self.remaining.as_mut() {
            *rem -= 1;
            if *rem == 0 {
                self.done = true;
            }
        }
        if self.pos == self.block.len() {
            self.advance_block();
        }
        Some(s)
    }
}

/// Streams the sequence; `limit = None` yields exactly one period.
pub fn generate_sequence(p: &Params, variant: Variant, limit: Option<u64>) -> SequenceStream {
    SequenceStream::new(p, variant, limit)
}
