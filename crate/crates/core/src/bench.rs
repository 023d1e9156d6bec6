//! Wall-clock timing helpers for the scaling checks and `dbgsr bench`.

use std::hint::black_box;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::gsr::generalized_shift_rule;
use crate::words::{Params, Symbol, Word};

/// Median of `reps` timed runs of `f`, after `warmup` untimed runs.
pub fn median_time<T>(reps: usize, warmup: usize, mut f: impl FnMut() -> T) -> Duration {
    for _ in 0..warmup {
        black_box(f());
    }
    let mut samples: Vec<Duration> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            black_box(f());
            start.elapsed()
        })
        .collect();
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Per-job medians, timing the jobs round-robin so that a slow stretch of
/// the machine lands on every job rather than on one input size.
pub fn interleaved_medians(
    reps: usize,
    warmup: usize,
    jobs: &mut [&mut dyn FnMut()],
) -> Vec<Duration> {
    for _ in 0..warmup {
        for job in jobs.iter_mut() {
            job();
        }
    }
    let mut samples = vec![Vec::with_capacity(reps.max(1)); jobs.len()];
    for _ in 0..reps.max(1) {
        for (job, s) in jobs.iter_mut().zip(samples.iter_mut()) {
            let start = Instant::now();
            job();
            s.push(start.elapsed());
        }
    }
    samples
        .into_iter()
        .map(|mut s| {
            s.sort_unstable();
            s[s.len() / 2]
        })
        .collect()
}

/// One row of the `bench` table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub c: usize,
    pub nanos: u128,
    pub symbols_per_sec: f64,
}

impl BenchRow {
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{:.0}",
            self.n, self.c, self.nanos, self.symbols_per_sec
        )
    }
}

pub const TSV_HEADER: &str = "n\tc\tnanoseconds\tsymbols_per_second";

fn row(p: &Params, c: usize, elapsed: Duration) -> BenchRow {
    let nanos = elapsed.as_nanos().max(1);
    BenchRow {
        n: p.n(),
        c,
        nanos,
        symbols_per_sec: c as f64 * 1e9 / nanos as f64,
    }
}

/// Times `generalized_shift_rule(w, c)` and reports the median.
pub fn bench_gsr(
    w: &[Symbol],
    c: usize,
    p: &Params,
    reps: usize,
    warmup: usize,
) -> Result<BenchRow> {
    p.check_word(w)?;
    let elapsed = median_time(reps, warmup, || generalized_shift_rule(w, c, p));
    Ok(row(p, c, elapsed))
}

/// One `(word, c, params)` case of a benchmark table.
pub type BenchCase = (Word, usize, Params);

/// Times every case, interleaved, and returns one row per case in order.
pub fn bench_table(cases: &[BenchCase], reps: usize, warmup: usize) -> Result<Vec<BenchRow>> {
    for (w, _, p) in cases {
        p.check_word(w)?;
    }
    let mut jobs: Vec<Box<dyn FnMut() + '_>> = cases
        .iter()
        .map(|(w, c, p)| {
            Box::new(move || {
                black_box(generalized_shift_rule(w, *c, p).ok());
            }) as Box<dyn FnMut()>
        })
        .collect();
    let mut refs: Vec<&mut dyn FnMut()> = jobs
        .iter_mut()
        .map(|j| &mut **j as &mut dyn FnMut())
        .collect();
    let times = interleaved_medians(reps, warmup, &mut refs);
    Ok(cases
        .iter()
        .zip(times)
        .map(|((_, c, p), t)| row(p, *c, t))
        .collect())
}
