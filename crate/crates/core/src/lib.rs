//! A time-optimal generalized shift rule for the prefer-min and prefer-max
//! `(n, k)` De Bruijn sequences.
//!
//! Given any n-word `w` and a count `c`, [`generalized_shift_rule`] returns
//! the `c` symbols that follow `w` in the cyclic prefer-min sequence in
//! `O(n + c)` time. The prefer-min sequence is the lexicographically sorted
//! concatenation of all Lyndon words whose length divides `n`; the engine
//! locates `w` relative to those blocks ([`filling_the_gap`]) and then walks
//! forward block by block ([`lnext`]).
//!
//! ```
//! use debruijn_gsr::{generalized_shift_rule, prefer_max_gsr, Params, Word};
//!
//! let p = Params::new(3, 2).unwrap();
//! let next = generalized_shift_rule(&[0, 0, 0], 5, &p).unwrap();
//! assert_eq!(next, Word::from([1, 0, 1, 1, 1]));
//!
//! let p = Params::new(2, 3).unwrap();
//! assert_eq!(prefer_max_gsr(&[2, 2], 3, &p).unwrap(), Word::from([1, 2, 0]));
//! ```

pub mod bench;
pub mod error;
pub mod ftg;
pub mod gsr;
pub mod lyndon;
pub mod reference;
pub mod stringology;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use ftg::{cover_to_ftg, filling_the_gap, GapResult};
pub use gsr::{
    generalized_shift_rule, generate_sequence, gsr_variant, prefer_max_gsr, shift_rule,
    SequenceStream, Variant,
};
pub use lyndon::{duval_next, lnext, lnext_fast, Blocks};
pub use stringology::{
    cfl, find_min_rot, find_root, find_suffix, is_almost_lyndon, is_expanded_lyndon, is_lyndon,
    Factorization,
};
pub use words::{
    compare_lex, complement, format_word, parse_word, rotate_left, Format, Params, Symbol, Word,
};
