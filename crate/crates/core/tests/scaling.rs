//! Doubling checks: each primitive's median time should roughly double
//! when its input doubles. Sizes are timed round-robin so machine noise
//! spreads evenly across them.

mod common;

use std::hint::black_box;
use std::sync::Mutex;
use std::time::Duration;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::params;
use debruijn_gsr::bench::interleaved_medians;
use debruijn_gsr::{cfl, filling_the_gap, find_min_rot, find_root, lnext, Symbol, Word};

const REPS: usize = 31;
const MAX_RATIO: f64 = 3.0;

// Timing tests share the machine; run them one at a time.
static SERIAL: Mutex<()> = Mutex::new(());

fn random_word(rng: &mut StdRng, len: usize, k: usize) -> Word {
    (0..len).map(|_| rng.random_range(0..k)).collect()
}

/// Times `f` on inputs of each length and checks consecutive ratios.
fn assert_doubling(
    name: &str,
    sizes: &[usize],
    mut input: impl FnMut(usize) -> Word,
    f: impl Fn(&[Symbol]),
) {
    let words: Vec<Word> = sizes.iter().map(|&len| input(len)).collect();
    let mut jobs: Vec<Box<dyn FnMut() + '_>> = words
        .iter()
        .map(|w| Box::new(|| f(black_box(w))) as Box<dyn FnMut()>)
        .collect();
    let mut refs: Vec<&mut dyn FnMut()> = jobs
        .iter_mut()
        .map(|j| &mut **j as &mut dyn FnMut())
        .collect();
    let times: Vec<Duration> = interleaved_medians(REPS, 2, &mut refs);
    for (pair, sizes) in times.windows(2).zip(sizes.windows(2)) {
        let ratio = pair[1].as_secs_f64() / pair[0].as_secs_f64().max(1e-9);
        let expected = sizes[1] as f64 / sizes[0] as f64;
        assert!(
            ratio <= MAX_RATIO * expected / 2.0,
            "{name}: {} -> {} took {:?} -> {:?} (ratio {ratio:.2})",
            sizes[0],
            sizes[1],
            pair[0],
            pair[1]
        );
    }
}

const SIZES: [usize; 3] = [1 << 16, 1 << 17, 1 << 18];

#[test]
fn stringology_is_linear() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let mut rng = StdRng::seed_from_u64(7);
    assert_doubling(
        "cfl random",
        &SIZES,
        |n| random_word(&mut rng, n, 2),
        |w| {
            cfl(w).unwrap();
        },
    );
    assert_doubling(
        "find_min_rot random",
        &SIZES,
        |n| random_word(&mut rng, n, 3),
        |w| {
            find_min_rot(w).unwrap();
        },
    );
    // Periodic inputs with a long root stress the failure function.
    assert_doubling(
        "find_root periodic",
        &SIZES,
        |n| {
            let mut w: Word = (0..n).map(|i| usize::from(i % 97 == 0)).collect();
            w[n - 1] = 1;
            w
        },
        |w| {
            find_root(w).unwrap();
        },
    );
    assert_doubling(
        "find_min_rot 0^m1",
        &SIZES,
        |n| {
            let mut w = Word::repeat_symbol(0, n);
            w[n / 2] = 1;
            w
        },
        |w| {
            find_min_rot(w).unwrap();
        },
    );
}

#[test]
fn lnext_is_linear() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let sizes = [100_000, 200_000, 400_000];
    // 0 1^{n-1}: the successor rewrites almost the whole word.
    assert_doubling(
        "lnext 01^(n-1)",
        &sizes,
        |n| {
            let mut w = Word::repeat_symbol(1, n);
            w[0] = 0;
            w
        },
        |w| {
            lnext(w, &params(w.len(), 2)).unwrap();
        },
    );
    assert_doubling(
        "lnext 0",
        &sizes,
        |n| Word::repeat_symbol(0, n),
        |w| {
            // The word itself is just `0`; the parameter n is carried by its length.
            lnext(&w[..1], &params(w.len(), 2)).unwrap();
        },
    );
}

#[test]
fn ftg_is_linear() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let mut rng = StdRng::seed_from_u64(11);
    assert_doubling(
        "ftg random",
        &SIZES,
        |n| random_word(&mut rng, n, 2),
        |w| {
            filling_the_gap(w, &params(w.len(), 2)).unwrap();
        },
    );
    assert_doubling(
        "ftg 10^(n-1)",
        &SIZES,
        |n| {
            let mut w = Word::repeat_symbol(0, n);
            w[0] = 1;
            w
        },
        |w| {
            filling_the_gap(w, &params(w.len(), 2)).unwrap();
        },
    );
    assert_doubling(
        "ftg almost-top",
        &SIZES,
        |n| {
            let mut w = Word::repeat_symbol(1, n);
            w[n / 3] = 0;
            w
        },
        |w| {
            filling_the_gap(w, &params(w.len(), 2)).unwrap();
        },
    );
}
