//! Slow, definition-level reference implementations.
//!
//! Everything here materializes whole sequences of length `k^n` and is
//! guarded by a cap. These oracles exist to check the fast paths and are
//! shipped so that `dbgsr verify` can run them; nothing in the fast paths
//! calls into this module.

use crate::error::{Error, Result};
use crate::ftg::GapResult;
use crate::lyndon::duval_next;
use crate::stringology::is_lyndon_unchecked;
use crate::words::{complement, Params, Symbol, Word};

/// Largest `k^n` any oracle will materialize by default.
pub const DEFAULT_CAP: usize = 1 << 22;

fn period(p: &Params, cap: usize) -> Result<usize> {
    p.period_capped(cap).ok_or(Error::CapExceeded {
        n: p.n(),
        k: p.k(),
        cap,
    })
}

/// Base-`k` code of an n-word.
fn code(w: &[Symbol], k: usize) -> usize {
    w.iter().fold(0, |acc, &s| acc * k + s)
}

/// The word with base-`k` code `idx`.
pub fn word_from_index(mut idx: usize, p: &Params) -> Word {
    let mut v = vec![0; p.n()];
    for slot in v.iter_mut().rev() {
        *slot = idx % p.k();
        idx /= p.k();
    }
    Word::from(v)
}

fn greedy(p: &Params, cap: usize, prefer_max: bool) -> Result<Word> {
    let total = period(p, cap)?;
    let (n, k) = (p.n(), p.k());
    let modulus = total;
    let start = if prefer_max { 0 } else { k - 1 };
    let mut seq = vec![start; n];
    let mut seen = vec![false; total];
    let mut cur = code(&seq, k);
    seen[cur] = true;
    let shift = |cur: usize| (cur * k) % modulus;
    while seq.len() < total {
        let base = shift(cur);
        let pick = if prefer_max {
            (0..k).rev().find(|&s| !seen[base + s])
        } else {
            (0..k).find(|&s| !seen[base + s])
        };
        let s = pick.ok_or(Error::Precondition("greedy construction got stuck"))?;
        cur = base + s;
        seen[cur] = true;
        seq.push(s);
    }
    seq.rotate_left(n);
    Ok(Word::from(seq))
}

/// Greedy prefer-min sequence: start at `(k-1)^n`, append the smallest
/// symbol that creates no repeated n-word, stop at length `k^n`, rotate
/// left by `n`.
pub fn greedy_prefer_min(p: &Params) -> Result<Word> {
    greedy(p, DEFAULT_CAP, false)
}

/// Greedy prefer-max sequence, starting from `0^n`.
pub fn greedy_prefer_max(p: &Params) -> Result<Word> {
    greedy(p, DEFAULT_CAP, true)
}

pub fn greedy_prefer_min_capped(p: &Params, cap: usize) -> Result<Word> {
    greedy(p, cap, false)
}

pub fn greedy_prefer_max_capped(p: &Params, cap: usize) -> Result<Word> {
    greedy(p, cap, true)
}

/// Lyndon test by comparing against every non-trivial rotation.
fn is_lyndon_by_rotations(v: &[Symbol]) -> bool {
    let len = v.len();
    (1..len).all(|t| {
        let rotated = v[t..].iter().chain(&v[..t]);
        v.iter().lt(rotated)
    })
}

/// All Lyndon words whose length divides `n`, sorted, found by enumerating
/// every word of each admissible length.
pub fn lyndon_blocks(p: &Params) -> Result<Vec<Word>> {
    period(p, DEFAULT_CAP)?;
    let (n, k) = (p.n(), p.k());
    let mut blocks = Vec::new();
    for d in (1..=n).filter(|d| n % d == 0) {
        let count = k.pow(d as u32);
        let mut v = vec![0; d];
        for idx in 0..count {
            let mut x = idx;
            for slot in v.iter_mut().rev() {
                *slot = x % k;
                x /= k;
            }
            if is_lyndon_by_rotations(&v) {
                blocks.push(Word::from(v.clone()));
            }
        }
    }
    blocks.sort();
    Ok(blocks)
}

/// `L_1 L_2 ⋯ L_N`: the concatenation of [`lyndon_blocks`].
pub fn block_sequence(p: &Params) -> Result<Word> {
    Ok(lyndon_blocks(p)?
        .into_iter()
        .flat_map(Word::into_vec)
        .collect())
}

/// Successor by repeated Duval steps until the length divides `n`; O(n²).
pub fn naive_lnext(l: &[Symbol], p: &Params) -> Result<Word> {
    let n = p.n();
    if l == [p.max_symbol()] {
        return Ok(Word::from([0]));
    }
    let mut x = duval_next(l, p)?;
    if n.is_multiple_of(x.len()) {
        return Ok(x);
    }
    if 2 * x.len() < n {
        x = duval_next(&x, p)?;
    }
    while !n.is_multiple_of(x.len()) {
        x = duval_next(&x, p)?;
    }
    Ok(x)
}

/// The words `v_1 … v_m` and counters `k_1 … k_{m+1}` that extend
/// `L^{r-1}` into the next expanded block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSequence {
    pub words: Vec<Word>,
    pub counters: Vec<usize>,
}

/// Starting from `k_1 = |L|`: take the `k_j`-prefix of `L`, drop its
/// trailing `k-1` run, increment the last symbol to get `v_j`, and set
/// `k_{j+1} = k_j - |v_j|` until the counter reaches zero.
pub fn v_sequence(l: &[Symbol], p: &Params) -> Result<VSequence> {
    if l.is_empty() {
        return Err(Error::EmptyWord);
    }
    p.check_symbols(l)?;
    if !is_lyndon_unchecked(l) {
        return Err(Error::NotLyndon);
    }
    if l == [p.max_symbol()] {
        return Err(Error::Precondition(
            "v_sequence is undefined on the word k-1",
        ));
    }
    if !p.n().is_multiple_of(l.len()) {
        return Err(Error::Precondition("|L| must divide n"));
    }
    let top = p.max_symbol();
    let mut counters = vec![l.len()];
    let mut words = Vec::new();
    let mut left = l.len();
    while left > 0 {
        let mut v = l[..left].to_vec();
        while v.last() == Some(&top) {
            v.pop();
        }
        *v.last_mut().expect("L starts below k-1") += 1;
        left -= v.len();
        counters.push(left);
        words.push(Word::from(v));
    }
    Ok(VSequence { words, counters })
}

/// True iff every n-word occurs exactly once in `s`, read cyclically.
pub fn is_de_bruijn(s: &[Symbol], p: &Params) -> Result<bool> {
    let total = period(p, DEFAULT_CAP)?;
    if s.len() != total {
        return Err(Error::WrongLength {
            expected: total,
            actual: s.len(),
        });
    }
    if s.iter().any(|&x| x >= p.k()) {
        return Ok(false);
    }
    let (n, k) = (p.n(), p.k());
    let mut seen = vec![false; total];
    let mut cur = 0;
    for i in 0..n - 1 {
        cur = cur * k + s[i % total];
    }
    for i in 0..total {
        cur = (cur * k) % total + s[(i + n - 1) % total];
        if std::mem::replace(&mut seen[cur], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Position lookup for a cyclic De Bruijn sequence.
#[derive(Debug, Clone)]
pub struct CyclicIndex {
    params: Params,
    seq: Vec<Symbol>,
    position: Vec<usize>,
}

impl CyclicIndex {
    /// Fails unless `seq` is De Bruijn for `p`.
    pub fn new(seq: &[Symbol], p: &Params) -> Result<Self> {
        let total = period(p, DEFAULT_CAP)?;
        if seq.len() != total {
            return Err(Error::WrongLength {
                expected: total,
                actual: seq.len(),
            });
        }
        p.check_symbols(seq)?;
        let (n, k) = (p.n(), p.k());
        let mut position = vec![usize::MAX; total];
        for start in 0..total {
            let c = (0..n).fold(0, |acc, i| acc * k + seq[(start + i) % total]);
            if position[c] != usize::MAX {
                return Err(Error::Precondition("sequence is not De Bruijn"));
            }
            position[c] = start;
        }
        Ok(CyclicIndex {
            params: *p,
            seq: seq.to_vec(),
            position,
        })
    }

    pub fn locate(&self, w: &[Symbol]) -> Result<usize> {
        self.params.check_word(w)?;
        Ok(self.position[code(w, self.params.k())])
    }

    /// The `c` symbols after `w`, wrapping around.
    pub fn window(&self, w: &[Symbol], c: usize) -> Result<Word> {
        let total = self.seq.len();
        let start = self.locate(w)? + self.params.n();
        Ok((0..c).map(|i| self.seq[(start + i) % total]).collect())
    }
}

/// Precomputed block sequence with a cyclic extension, used to answer
/// `FTG`, `cover` and window queries by direct search.
#[derive(Debug, Clone)]
pub struct Reference {
    params: Params,
    blocks: Vec<Word>,
    /// `L_1 ⋯ L_N` followed by `L_1 L_2 ⋯` until at least `3n` extra symbols.
    extended: Vec<Symbol>,
    /// `(end, block index mod N)` for every block in `extended`.
    ends: Vec<(usize, usize)>,
    period: usize,
    /// Start of every n-word in the period, by code.
    position: Vec<usize>,
}

impl Reference {
    pub fn new(p: &Params) -> Result<Self> {
        Self::with_cap(p, DEFAULT_CAP)
    }

    pub fn with_cap(p: &Params, cap: usize) -> Result<Self> {
        let total = period(p, cap)?;
        let blocks = lyndon_blocks(p)?;
        let n = p.n();
        let mut extended = Vec::with_capacity(total + 4 * n);
        let mut ends = Vec::with_capacity(blocks.len() + 4 * n);
        let mut idx = 0;
        while extended.len() < total + 3 * n {
            extended.extend_from_slice(&blocks[idx % blocks.len()]);
            ends.push((extended.len(), idx % blocks.len()));
            idx += 1;
        }
        let k = p.k();
        let mut position = vec![usize::MAX; total];
        for start in 0..total {
            let c = code(&extended[start..start + n], k);
            if position[c] != usize::MAX {
                return Err(Error::Precondition("block sequence is not De Bruijn"));
            }
            position[c] = start;
        }
        Ok(Reference {
            params: *p,
            blocks,
            extended,
            ends,
            period: total,
            position,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    /// One period of the block sequence.
    pub fn sequence(&self) -> &[Symbol] {
        &self.extended[..self.period]
    }

    /// Start position of `w` within one period.
    pub fn locate(&self, w: &[Symbol]) -> Result<usize> {
        self.params.check_word(w)?;
        Ok(self.position[code(w, self.params.k())])
    }

    /// The `c` symbols after `w`, read off the cyclic sequence.
    pub fn window(&self, w: &[Symbol], c: usize) -> Result<Word> {
        let start = self.locate(w)? + self.params.n();
        Ok((0..c)
            .map(|i| self.extended[(start + i) % self.period])
            .collect())
    }

    /// `FTG(w)`: the nearest block end at or after the end of `w`.
    pub fn ftg(&self, w: &[Symbol]) -> Result<GapResult> {
        let end = self.locate(w)? + self.params.n();
        let slot = self.ends.partition_point(|&(e, _)| e < end);
        let (block_end, block) = self.ends[slot];
        Ok(GapResult::new(
            self.blocks[block].clone(),
            &self.extended[end..block_end],
        ))
    }

    /// `cover(w)` by minimizing the fill over every `L_1 ⋯ L_{i-1} L_i^{r_i}`.
    pub fn cover(&self, w: &[Symbol]) -> Result<GapResult> {
        self.params.check_word(w)?;
        let n = self.params.n();
        let top = self.params.max_symbol();
        let lead = w.iter().take_while(|&&s| s == top).count();
        if w[lead..].iter().all(|&s| s == 0) {
            return Err(Error::Precondition("cover is undefined on (k-1)^p 0^(n-p)"));
        }
        let mut best: Option<GapResult> = None;
        let mut ambiguous = false;
        let mut prefix_end = 0;
        for block in &self.blocks {
            let keep = prefix_end.min(n - 1);
            let mut window = self.extended[prefix_end - keep..prefix_end].to_vec();
            for _ in 0..n / block.len() {
                window.extend_from_slice(block);
            }
            // last occurrence of w ending inside the expanded tail
            let found = (keep + 1..=window.len())
                .rev()
                .filter(|&e| e >= n)
                .find(|&e| window[e - n..e] == *w);
            if let Some(e) = found {
                let cand = GapResult::new(block.clone(), &window[e..]);
                match &best {
                    Some(b) if b.fill.len() < cand.fill.len() => {}
                    Some(b) if b.fill.len() == cand.fill.len() => ambiguous |= *b != cand,
                    _ => {
                        ambiguous = false;
                        best = Some(cand);
                    }
                }
            }
            prefix_end += block.len();
        }
        if ambiguous {
            return Err(Error::Ambiguous);
        }
        best.ok_or(Error::NotFound)
    }
}

/// `FTG(w)` by exhaustive search over the block sequence.
pub fn brute_ftg(w: &[Symbol], p: &Params) -> Result<GapResult> {
    p.check_word(w)?;
    Reference::new(p)?.ftg(w)
}

/// `cover(w)` by exhaustive search; undefined on `(k-1)^p 0^{n-p}`.
pub fn brute_cover(w: &[Symbol], p: &Params) -> Result<GapResult> {
    p.check_word(w)?;
    Reference::new(p)?.cover(w)
}

/// Complement-based check used by suites: prefer-max equals the complement
/// of prefer-min.
pub fn greedy_duality_holds(p: &Params) -> Result<bool> {
    Ok(greedy_prefer_max(p)? == complement(&greedy_prefer_min(p)?, p))
}

/// Every word of the form `(k-1)^p 0^{n-p}`, for `p = 0..=n`.
pub fn edge_words(p: &Params) -> Vec<Word> {
    (0..=p.n())
        .map(|q| {
            let mut v = vec![p.max_symbol(); q];
            v.resize(p.n(), 0);
            Word::from(v)
        })
        .collect()
}

/// Naive FTG directly from the definition, without the position table:
/// scans every occurrence of `w` in the extended block sequence.
pub fn brute_ftg_by_scan(w: &[Symbol], p: &Params) -> Result<GapResult> {
    let r = Reference::new(p)?;
    p.check_word(w)?;
    let n = p.n();
    let mut best: Option<GapResult> = None;
    let mut start: usize = 0;
    for &(end, block) in &r.ends {
        // occurrences of w whose last symbol falls inside this block
        for s in start.saturating_sub(n - 1)..=end.saturating_sub(n) {
            if s + n > start && s + n <= end && r.extended[s..s + n] == *w {
                let fill = &r.extended[s + n..end];
                if best.as_ref().is_none_or(|b| fill.len() < b.fill.len()) {
                    best = Some(GapResult::new(r.blocks[block].clone(), fill));
                }
            }
        }
        start = end;
    }
    best.ok_or(Error::NotFound)
}
