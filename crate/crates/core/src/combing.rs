//! Membership in `A_n` and rewriting combed braids over `a_1, …, a_{n-1}`.
//!
//! The combing pass reads the word left to right and keeps the prefix in the
//! form `F · β · M_p`, where
//!
//! * `F` is a reduced word over the `a_i`,
//! * `β` is a braid on strands `2..n` (generated by `σ_2, …, σ_{n-1}`),
//! * `M_p = σ_1 σ_2 ⋯ σ_{p-1}` carries the first strand out to position `p`.
//!
//! Letters away from position `p` slide through `M_p` into `β`. Letters that
//! move the first strand either change `p` or emit one generator `a_{p-1}` or
//! `a_p^{-1}`, which then has to be pulled left through `β`. Conjugation by
//! `β` is an automorphism of the free group; it is kept as the images of the
//! generators and updated one letter at a time:
//!
//! * `σ_j (·) σ_j⁻¹`: `a_j ↦ a_{j-1}`, `a_{j-1} ↦ a_{j-1}⁻¹ a_j a_{j-1}`;
//! * `σ_j⁻¹ (·) σ_j`: `a_{j-1} ↦ a_j`, `a_j ↦ a_j a_{j-1} a_j⁻¹`;
//!
//! with every other generator fixed. For a combed braid the pass ends with
//! `p = 1` and `β` trivial, so the prefix is `F` itself.

use thiserror::Error;

use crate::braid::BraidWord;
use crate::free_group::FreeWord;
use crate::word_problem::is_trivial;

/// Limits for the exponential parts of the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Cap on the total syllable count of the combing state (the running
    /// free word plus the generator images).
    pub comb_syllables: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            comb_syllables: 4_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("braid is not combed (strands 2..n are not straight)")]
    NotCombed,
    #[error("combing exceeded the budget of {limit} syllables")]
    BudgetExceeded { limit: usize },
}

/// Is `w` a combed braid: pure, and trivial once the first strand is removed?
pub fn in_a_n(w: &BraidWord) -> bool {
    if !w.permutation().is_identity() {
        return false;
    }
    if w.strands() == 2 {
        return true;
    }
    let rest = w.delete_strand(1).expect("strand 1 always exists");
    is_trivial(&rest)
}

pub fn comb(w: &BraidWord) -> Result<FreeWord, CombError> {
    comb_with(w, &Budget::default())
}

pub fn comb_with(w: &BraidWord, budget: &Budget) -> Result<FreeWord, CombError> {
    let n = w.strands();
    let rank = n - 1;
    let mut out = FreeWord::identity(rank);
    // images[i - 1] is β · a_i · β⁻¹.
    let mut images: Vec<FreeWord> = (1..=rank).map(|i| FreeWord::generator(rank, i)).collect();
    let mut p = 1usize;
    let mut images_len = rank;

    for l in w.letters() {
        let i = l.index();
        if i + 1 < p || i > p {
            // Slides through M_p: σ_i ↦ σ_{i+1} when left of the first strand.
            let j = if i > p { i } else { i + 1 };
            let (lo, hi) = (images[j - 2].clone(), images[j - 1].clone());
            let old_len = lo.len() + hi.len();
            if l.is_positive() {
                images[j - 2] = lo.inverse().mul(&hi).mul(&lo);
                images[j - 1] = lo;
            } else {
                images[j - 1] = hi.mul(&lo).mul(&hi.inverse());
                images[j - 2] = hi;
            }
            images_len = images_len + images[j - 2].len() + images[j - 1].len() - old_len;
        } else if i + 1 == p {
            // Exchange with the strand on the left.
            if l.is_positive() {
                out.append(&images[p - 2]);
            }
            p -= 1;
        } else {
            // i == p: exchange with the strand on the right.
            if !l.is_positive() {
                out.append(&images[p - 1].inverse());
            }
            p += 1;
        }
        if out.len() + images_len > budget.comb_syllables {
            return Err(CombError::BudgetExceeded {
                limit: budget.comb_syllables,
            });
        }
    }

    let untouched = images
        .iter()
        .enumerate()
        .all(|(k, img)| img.syllables() == [k as i32 + 1]);
    if p != 1 || !untouched {
        return Err(CombError::NotCombed);
    }
    Ok(out)
}
