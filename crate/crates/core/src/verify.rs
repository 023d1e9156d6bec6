//! Oracle-equivalence suites run by `dbgsr verify`.

use std::fmt;

use crate::error::Result;
use crate::ftg::filling_the_gap;
use crate::gsr::{generalized_shift_rule, generate_sequence, prefer_max_gsr, Variant};
use crate::lyndon::{duval_next, lnext};
use crate::reference::{
    block_sequence, edge_words, greedy_prefer_max, greedy_prefer_min, is_de_bruijn, naive_lnext,
    word_from_index, CyclicIndex, Reference,
};
use crate::words::{complement, Params, Word};

/// Words checked per suite when not exhaustive.
pub const SAMPLE_SIZE: usize = 512;

/// Windows of length `k^n` are only requested up to this period.
pub const FULL_WINDOW_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: u64,
    pub mismatches: u64,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checked: 0,
            mismatches: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatches += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={}\tchecked={}\tmismatches={}\tstatus={}",
            self.name,
            self.checked,
            self.mismatches,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        if let Some(first) = &self.first_failure {
            write!(f, "\tfirst={first}")?;
        }
        Ok(())
    }
}

/// The n-words a suite checks: all of them, or an evenly spaced sample
/// plus every `(k-1)^p 0^{n-p}`.
pub fn words_under_test(p: &Params, total: usize, exhaustive: bool) -> Vec<Word> {
    if exhaustive || total <= SAMPLE_SIZE {
        return (0..total).map(|i| word_from_index(i, p)).collect();
    }
    let step = total / SAMPLE_SIZE;
    let mut words: Vec<Word> = (0..SAMPLE_SIZE)
        .map(|i| word_from_index(i * step + i % step.max(1), p))
        .collect();
    words.extend(edge_words(p));
    words
}

/// Window lengths checked for each word.
pub fn window_counts(p: &Params, total: usize) -> Vec<usize> {
    let mut counts = vec![1, 2, p.n(), p.n() + 1];
    if total <= FULL_WINDOW_LIMIT {
        counts.push(total);
    }
    counts.sort_unstable();
    counts.dedup();
    counts
}

/// Block sequence, greedy sequences and the streaming generator agree and
/// are De Bruijn.
pub fn block_suite(p: &Params) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("block-equals-greedy");
    let blocks = block_sequence(p)?;
    let greedy_min = greedy_prefer_min(p)?;
    let greedy_max = greedy_prefer_max(p)?;
    report.record(blocks == greedy_min, || {
        "block_sequence != greedy_prefer_min".into()
    });
    report.record(is_de_bruijn(&blocks, p)?, || {
        "block_sequence not De Bruijn".into()
    });
    report.record(is_de_bruijn(&greedy_min, p)?, || {
        "greedy min not De Bruijn".into()
    });
    report.record(greedy_max == complement(&greedy_min, p), || {
        "greedy max != complement(min)".into()
    });
    let streamed: Word = generate_sequence(p, Variant::Min, None).collect();
    report.record(streamed == greedy_min, || {
        "generate(min) != greedy min".into()
    });
    let streamed: Word = generate_sequence(p, Variant::Max, None).collect();
    report.record(streamed == greedy_max, || {
        "generate(max) != greedy max".into()
    });
    Ok(report)
}

/// Fast shift-rule windows against windows read off the greedy sequences.
pub fn window_suite(p: &Params, exhaustive: bool) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("gsr-windows");
    let min_index = CyclicIndex::new(&greedy_prefer_min(p)?, p)?;
    let max_index = CyclicIndex::new(&greedy_prefer_max(p)?, p)?;
    let total = p.period_capped(usize::MAX).expect("capped by oracle");
    let counts = window_counts(p, total);
    for w in words_under_test(p, total, exhaustive) {
        for &c in &counts {
            let got = generalized_shift_rule(&w, c, p)?;
            let want = min_index.window(&w, c)?;
            report.record(got == want, || format!("min w={w:?} c={c}"));
            let got = prefer_max_gsr(&w, c, p)?;
            let want = max_index.window(&w, c)?;
            report.record(got == want, || format!("max w={w:?} c={c}"));
        }
    }
    Ok(report)
}

/// Linear-time successor against the repeated-Duval successor, plus the
/// cyclic chain through all blocks.
pub fn lnext_suite(p: &Params, exhaustive: bool) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lnext-vs-naive");
    let top = p.max_symbol();
    let mut all = vec![Word::from([0])];
    while all.last().map(|l| l[..] != [top]).unwrap_or(false) {
        let next = duval_next(all.last().expect("non-empty"), p)?;
        all.push(next);
    }
    let step = if exhaustive {
        1
    } else {
        (all.len() / SAMPLE_SIZE).max(1)
    };
    for l in all.iter().step_by(step) {
        let fast = lnext(l, p)?;
        let slow = naive_lnext(l, p)?;
        report.record(fast == slow, || format!("L={l:?}"));
    }

    let expected = Reference::new(p)?.blocks().to_vec();
    let mut chain = vec![Word::from([0])];
    loop {
        let next = lnext(chain.last().expect("non-empty"), p)?;
        if next[..] == [0] || chain.len() > expected.len() {
            break;
        }
        chain.push(next);
    }
    report.record(chain == expected, || {
        "lnext chain from 0 does not match the sorted blocks".into()
    });
    Ok(report)
}

/// Linear-time FTG against the exhaustive search.
pub fn ftg_suite(p: &Params, exhaustive: bool) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("ftg-vs-brute");
    let reference = Reference::new(p)?;
    let total = reference.sequence().len();
    let mut words = words_under_test(p, total, exhaustive);
    words.extend(edge_words(p));
    for w in words {
        let got = filling_the_gap(&w, p)?;
        let want = reference.ftg(&w)?;
        report.record(got == want, || format!("w={w:?} got={got:?} want={want:?}"));
    }
    Ok(report)
}

/// Runs every suite; fails early only on parameter or cap errors.
pub fn run_suites(p: &Params, exhaustive: bool) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        block_suite(p)?,
        window_suite(p, exhaustive)?,
        lnext_suite(p, exhaustive)?,
        ftg_suite(p, exhaustive)?,
    ])
}
