#![allow(dead_code)]

use debruijn_gsr::reference::{v_sequence, Reference};
use debruijn_gsr::{
    cfl, duval_next, is_almost_lyndon, is_expanded_lyndon, lnext, Params, Symbol, Word,
};

pub fn params(n: usize, k: usize) -> Params {
    Params::new(n, k).unwrap()
}

pub fn w(s: &str) -> Word {
    s.bytes().map(|b| (b - b'0') as Symbol).collect()
}

/// Every `(n, k)` with `k` in `ks` and `k^n <= cap`.
pub fn grid(ks: &[usize], cap: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for &k in ks {
        let mut n = 1;
        while k.checked_pow(n as u32).is_some_and(|t| t <= cap) {
            out.push(params(n, k));
            n += 1;
        }
    }
    out
}

/// All Lyndon words of length at most n, in increasing order.
pub fn lyndon_words_up_to(p: &Params) -> Vec<Word> {
    let top = p.max_symbol();
    let mut all = vec![Word::from([0])];
    while all.last().unwrap()[..] != [top] {
        let next = duval_next(all.last().unwrap(), p).unwrap();
        all.push(next);
    }
    all
}

/// The blocks `L_1 … L_N` obtained by chaining `lnext` from `0`.
pub fn lnext_chain(p: &Params) -> Vec<Word> {
    let mut chain = vec![Word::from([0])];
    loop {
        let next = lnext(chain.last().unwrap(), p).unwrap();
        if next[..] == [0] {
            return chain;
        }
        chain.push(next);
    }
}

pub fn is_edge_word(v: &[Symbol], p: &Params) -> bool {
    let lead = v.iter().take_while(|&&s| s == p.max_symbol()).count();
    v[lead..].iter().all(|&s| s == 0)
}

pub fn all_words(p: &Params) -> impl Iterator<Item = Word> + '_ {
    let total = p.k().pow(p.n() as u32);
    (0..total).map(move |i| debruijn_gsr::reference::word_from_index(i, p))
}

/// Violation counters for the structural lemma suite.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct StructureReport {
    pub checked: u64,
    pub short_pairs: u64,
    pub v_sequence: u64,
    pub successor_shape: u64,
    pub almost_lyndon_routing: u64,
    pub cfl_routing: u64,
    pub missing_decomposition: u64,
}

impl StructureReport {
    pub fn violations(&self) -> u64 {
        self.short_pairs
            + self.v_sequence
            + self.successor_shape
            + self.almost_lyndon_routing
            + self.cfl_routing
            + self.missing_decomposition
    }
}

/// Every decomposition `w = y L^{r-1} v_1 ⋯ v_j z` with `y` a proper
/// non-empty suffix of `L` and `z` a proper prefix of `v_{j+1}`, as
/// `(|y|, j)` pairs.
pub fn decompositions(v: &[Symbol], l: &[Symbol], vs: &[Word], p: &Params) -> Vec<(usize, usize)> {
    let n = p.n();
    let r = n / l.len();
    let mut out = Vec::new();
    for ylen in 1..l.len() {
        let mut expected: Vec<Symbol> = l[l.len() - ylen..].to_vec();
        for _ in 1..r {
            expected.extend_from_slice(l);
        }
        for j in 0..vs.len() {
            if j > 0 {
                expected.extend_from_slice(&vs[j - 1]);
            }
            if expected.len() > n || v[..expected.len()] != expected[..] {
                break;
            }
            let z = &v[expected.len()..];
            let next = &vs[j];
            if z.len() < next.len() && next[..z.len()] == *z {
                out.push((ylen, j));
            }
        }
    }
    out
}

/// Runs the lemma checks for one `(n, k)`.
pub fn structure_suite(p: &Params) -> StructureReport {
    let mut rep = StructureReport::default();
    let n = p.n();
    let top = p.max_symbol();
    let blocks = lnext_chain(p);

    for pair in blocks.windows(2) {
        rep.checked += 1;
        if pair[0].len() < n && pair[1].len() < n {
            rep.short_pairs += 1;
        }
    }

    for (i, l) in blocks.iter().enumerate() {
        if l[..] == [top] {
            continue;
        }
        let next = &blocks[i + 1];
        let vs = v_sequence(l, p).unwrap();
        let mut lhs: Vec<Symbol> = l.repeat(n / l.len() - 1);
        for v in &vs.words {
            lhs.extend_from_slice(v);
        }
        let rhs = next.repeat(n / next.len());
        rep.checked += 1;
        if lhs != rhs {
            rep.v_sequence += 1;
        }
        if l.len() < n {
            rep.checked += 1;
            let head = l.repeat(n / l.len() - 1);
            if next.len() != n
                || next[..head.len()] != head[..]
                || next.len() - head.len() != l.len()
            {
                rep.successor_shape += 1;
            }
        }
    }

    let reference = Reference::new(p).unwrap();
    for v in all_words(p) {
        if is_edge_word(&v, p) || is_expanded_lyndon(&v, p).unwrap().is_some() {
            continue;
        }
        rep.checked += 1;
        let cover = reference.cover(&v).unwrap();
        let idx = reference
            .blocks()
            .iter()
            .position(|b| *b == cover.lyndon)
            .unwrap();
        assert!(idx > 0, "cover by L_1 for {v:?}");
        let prev = &reference.blocks()[idx - 1];
        let vs = v_sequence(prev, p).unwrap();
        let decs = decompositions(&v, prev, &vs.words, p);
        if decs.is_empty() {
            rep.missing_decomposition += 1;
            continue;
        }
        let almost = is_almost_lyndon(&v, p).unwrap();
        if decs.iter().any(|&(_, j)| (j > 0) != almost) {
            rep.almost_lyndon_routing += 1;
        }
        if almost {
            let f = cfl(&v).unwrap();
            let t = f.factors().iter().position(|x| x[..] != [top]).unwrap();
            let x_t = &f.factors()[t];
            let in_range = prev < x_t && *x_t <= cover.lyndon;
            let ylen_ok = decs.iter().all(|&(ylen, _)| ylen == t);
            if !(in_range && ylen_ok) {
                rep.cfl_routing += 1;
            }
        }
    }
    rep
}
