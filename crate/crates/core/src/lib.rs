//! Braid-group tools for recognising powers of half-twists.
//!
//! Given a braid `b ∈ B_n`, [`classify`] decides whether `b = h^k` for a
//! half-twist `h` (a conjugate of `σ_1`) and returns `k`, the root `h` and a
//! conjugator `P` with `b = P⁻¹ σ_1^k P`. Along the way the crate provides
//! braid words and their invariants ([`braid`]), a complete word-problem
//! solver ([`word_problem`]), the free subgroup of combed braids
//! ([`free_group`]) and combing into it ([`combing`]).
//!
//! ```
//! use halftwist::{classify, BraidWord, Classification};
//!
//! let b = BraidWord::new(3, &[-2, 1, 1, 1, 2]).unwrap();
//! match classify(&b) {
//!     Classification::Power { k, .. } => assert_eq!(k, 3),
//!     other => panic!("unexpected {other:?}"),
//! }
//! ```

pub mod braid;
pub mod cli;
pub mod combing;
pub mod error;
pub mod free_group;
pub mod garside;
pub mod halftwist;
pub mod word_problem;

pub use braid::{BraidWord, CrossingMatrix, Letter, Permutation};
pub use combing::{comb, comb_with, in_a_n, Budget, CombError};
pub use error::BraidError;
pub use free_group::FreeWord;
pub use halftwist::{
    classify, classify_with, delta, delta_conjugator, move_switching_strands,
    random_half_twist_power, verify_power, Classification, FailedStep, HalfTwistInstance,
    SwitchingPair,
};
pub use word_problem::{
    equal, find_positive_conjugator, is_trivial, left_extract, positive_equal, EqualityVerdict,
};
