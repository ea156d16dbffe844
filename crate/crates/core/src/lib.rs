//! Exact arithmetic with noncommutative symmetric functions.
//!
//! Compositions index the bases; box-adding operators `t_i` act on them and
//! generate the reverse composition poset. Skew shapes in that poset, their
//! standard reverse composition tableaux and nc border strips give the
//! noncommutative Schur basis and a cancellation-free Murnaghan-Nakayama
//! rule for `Psi_n * s_alpha`, which [`verify`] checks against three other
//! evaluations and the classical rule.

pub mod box_ops;
pub mod classical;
pub mod composition;
pub mod error;
pub mod nsym;
pub mod skew;
pub mod tableaux;
pub mod verify;

pub use box_ops::{apply, apply_word, apply_word_tracked, Word};
pub use classical::{chi_consistency, chi_project, classical_mn, sort_to_partition, Partition};
pub use composition::{compositions_of, Composition};
pub use error::{Error, Result};
pub use nsym::{Basis, Element, MnMethod};
pub use skew::{classify, enumerate_b, enumerate_p, skew, SkewShape};
pub use tableaux::{canonical_strip_filling, enumerate_srct, Filling};
