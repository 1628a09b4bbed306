//! Single-edit correcting codes over binary and q-ary alphabets.
//!
//! The crate covers the VT family of checksum codes and its relatives:
//!
//! - [`vt_binary`]: `VT_a(n)`, the words whose weighted checksum `sum i*x_i`
//!   is `a` modulo `n + 1`. Decoders for one deletion, one insertion and one
//!   asymmetric `1 -> 0` flip, plus a systematic encoder with parity bits at
//!   the power-of-two positions.
//! - [`vt_indel`]: the same checksum taken modulo `2n + 1`, which corrects one
//!   insertion, one deletion or one substitution, told apart by received length.
//! - [`tenengolts`]: q-ary single-deletion codes built on the monotonicity
//!   indicator sequence of a word.
//! - [`burst`]: interleaved VT codewords correcting one burst of exactly `s`
//!   consecutive deletions.
//! - [`analysis`]: exhaustive checks of the combinatorial facts these codes rest
//!   on (perfect partitions, optimal code sizes, the indel lemma, ...).
//! - [`channels`]: seeded channel models and a trial harness.
//!
//! Positions are 1-based at every public interface. The crate is `no_std` and
//! only needs `alloc`.
//!
//! ```
//! use delcode_core::{BinaryWord, vt_binary::{self, VtParams}};
//!
//! let params = VtParams::new(5, 2).unwrap();
//! let received: BinaryWord = "1010".parse().unwrap();
//! let outcome = vt_binary::decode_deletion(&received, &params).unwrap();
//! assert_eq!(outcome.codeword.to_string(), "10110");
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod burst;
pub mod channels;
mod error;
pub mod graph;
mod outcome;
pub mod tenengolts;
pub mod vt_binary;
pub mod vt_indel;
pub mod words;

pub use error::{Error, ErrorClass, Result};
pub use outcome::{DecodeOutcome, EditKind, Interval};
pub use words::{BinaryWord, Limits, QaryWord, Word};
