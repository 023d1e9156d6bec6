//! Linear-time word primitives: roots, last occurrences, least rotations,
//! Lyndon tests and the Chen–Fox–Lyndon factorization.

use crate::error::{Error, Result};
use crate::words::{Params, Symbol, Word};

/// KMP failure function: `border[i]` is the length of the longest proper
/// border of `w[..=i]`.
pub(crate) fn failure_function(w: &[Symbol]) -> Vec<usize> {
    let mut border = vec![0; w.len()];
    let mut b = 0;
    for i in 1..w.len() {
        while b > 0 && w[i] != w[b] {
            b = border[b - 1];
        }
        if w[i] == w[b] {
            b += 1;
        }
        border[i] = b;
    }
    border
}

/// Length of the root of a non-empty word.
pub(crate) fn root_len(v: &[Symbol]) -> usize {
    let n = v.len();
    let period = n - failure_function(v)[n - 1];
    if n.is_multiple_of(period) {
        period
    } else {
        n
    }
}

/// The shortest non-empty prefix `x` with `v = x^t`.
pub fn find_root(v: &[Symbol]) -> Result<Word> {
    if v.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(Word::from(&v[..root_len(v)]))
}

/// Start of the last occurrence of `pattern` in `text`.
pub(crate) fn last_occurrence(pattern: &[Symbol], text: &[Symbol]) -> Option<usize> {
    let m = pattern.len();
    if m == 0 {
        return Some(text.len());
    }
    let border = failure_function(pattern);
    let mut last = None;
    let mut q = 0;
    for (i, &c) in text.iter().enumerate() {
        while q > 0 && pattern[q] != c {
            q = border[q - 1];
        }
        if pattern[q] == c {
            q += 1;
        }
        if q == m {
            last = Some(i + 1 - m);
            q = border[q - 1];
        }
    }
    last
}

/// The shortest `x` such that `ux` is a suffix of `v`.
pub fn find_suffix(u: &[Symbol], v: &[Symbol]) -> Result<Word> {
    let start = last_occurrence(u, v).ok_or(Error::NotFound)?;
    Ok(Word::from(&v[start + u.len()..]))
}

/// Offset of the lexicographically least rotation (the smallest such offset).
pub(crate) fn min_rotation_offset(w: &[Symbol]) -> usize {
    let n = w.len();
    let at = |x: usize| if x < n { w[x] } else { w[x - n] };
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        let a = at(i + k);
        let b = at(j + k);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// The lexicographically least rotation of `w`, at full length `|w|`.
pub fn find_min_rot(w: &[Symbol]) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let t = min_rotation_offset(w);
    let mut out = Word::with_capacity(w.len());
    out.extend(&w[t..]);
    out.extend(&w[..t]);
    Ok(out)
}

/// True iff `w` is its own root and its own least rotation.
pub(crate) fn is_lyndon_unchecked(w: &[Symbol]) -> bool {
    root_len(w) == w.len() && min_rotation_offset(w) == 0
}

pub fn is_lyndon(w: &[Symbol]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_lyndon_unchecked(w))
}

/// The Chen–Fox–Lyndon factorization `x_1 ≥ x_2 ≥ … ≥ x_l` of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<Word>,
}

impl Factorization {
    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Word> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Concatenation of the factors.
    pub fn concat(&self) -> Word {
        self.factors
            .iter()
            .flat_map(|f| f.iter().copied())
            .collect()
    }
}

/// Factor end positions of the CFL factorization (Duval's algorithm).
pub(crate) fn cfl_ends(w: &[Symbol]) -> Vec<usize> {
    let n = w.len();
    let mut ends = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            i += period;
            ends.push(i);
        }
    }
    ends
}

pub fn cfl(w: &[Symbol]) -> Result<Factorization> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut start = 0;
    let factors = cfl_ends(w)
        .into_iter()
        .map(|end| {
            let f = Word::from(&w[start..end]);
            start = end;
            f
        })
        .collect();
    Ok(Factorization { factors })
}

/// If the n-word `w` equals `L^r` for a Lyndon word `L`, returns `L`.
pub fn is_expanded_lyndon(w: &[Symbol], p: &Params) -> Result<Option<Word>> {
    p.check_word(w)?;
    let root = &w[..root_len(w)];
    Ok(is_lyndon_unchecked(root).then(|| Word::from(root)))
}

/// Leading run of `k-1` symbols.
pub(crate) fn leading_max_run(w: &[Symbol], top: Symbol) -> usize {
    w.iter().take_while(|&&s| s == top).count()
}

/// Writes `w = (k-1)^l u` with `l` maximal and tests whether `u (k-1)^l`
/// is an expanded Lyndon word.
pub fn is_almost_lyndon(w: &[Symbol], p: &Params) -> Result<bool> {
    p.check_word(w)?;
    Ok(is_almost_lyndon_unchecked(w, p))
}

pub(crate) fn is_almost_lyndon_unchecked(w: &[Symbol], p: &Params) -> bool {
    let l = leading_max_run(w, p.max_symbol());
    let mut shifted = Vec::with_capacity(w.len());
    shifted.extend_from_slice(&w[l..]);
    shifted.extend_from_slice(&w[..l]);
    is_lyndon_unchecked(&shifted[..root_len(&shifted)])
}
