//! Recognising powers of half-twists.
//!
//! A half-twist is any conjugate `P⁻¹ σ_1 P`. [`classify`] decides whether a
//! braid `b` equals `h^k` for some half-twist `h` and, if so, returns `k`,
//! the root `h` and a conjugator `P` with `b = P⁻¹ σ_1^k P`.
//!
//! The pipeline:
//!
//! 1. `k = exp(b)`; `k = 0` and `k < 0` are handled up front.
//! 2. Necessary conditions: for odd `k` the permutation is a transposition;
//!    for even `k` the braid is pure and its crossing matrix is `k/2` on one
//!    pair of strands and zero elsewhere. This names the switching strands.
//! 3. Conjugate so the switching strands sit at positions `1` and `n`.
//! 4. Square when `k` is odd (and re-run the crossing test on the square).
//! 5. The result must lie in `A_n`; comb it into a free word.
//! 6. The free word must be conjugate to a power of `a_{n-1}`, which yields `Q`.
//! 7. The root is `Q⁻¹ δ Q` with `δ` the half-twist on strands `1, n`; for
//!    odd `k` it is checked against `b` directly. Undoing step 3 gives `P`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::combing::{comb_with, in_a_n, Budget, CombError};
use crate::word_problem::{equal, find_positive_conjugator, is_trivial};

/// The necessary condition that ruled a braid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailedStep {
    /// Exponent sum zero but the braid is not the identity.
    ExponentZero,
    /// Permutation is not a transposition (odd `k`) or not the identity (even `k`).
    PermutationFilter,
    /// Crossing indices are not concentrated on one pair with value `k/2`.
    CrossingFilter,
    /// The (squared) braid is not combed.
    NotCombed,
    /// The combed free word is not conjugate to the expected generator power.
    NotConjugate,
    /// For odd `k`, the candidate root does not reproduce the braid.
    RootCheck,
}

impl FailedStep {
    pub fn tag(self) -> &'static str {
        match self {
            FailedStep::ExponentZero => "exponent-zero",
            FailedStep::PermutationFilter => "permutation-filter",
            FailedStep::CrossingFilter => "crossing-filter",
            FailedStep::NotCombed => "not-combed",
            FailedStep::NotConjugate => "not-conjugate",
            FailedStep::RootCheck => "root-check",
        }
    }
}

impl fmt::Display for FailedStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    NotPower {
        reason: FailedStep,
    },
    Identity,
    /// `b = root^k = conjugator⁻¹ · σ_1^k · conjugator`.
    Power {
        k: i64,
        root: BraidWord,
        conjugator: BraidWord,
    },
    /// A resource budget ran out before the answer was known.
    Undecided {
        limit: usize,
    },
}

impl Classification {
    pub fn is_power(&self) -> bool {
        matches!(self, Classification::Power { .. })
    }

    pub fn failed_step(&self) -> Option<FailedStep> {
        match self {
            Classification::NotPower { reason } => Some(*reason),
            _ => None,
        }
    }
}

/// Strands `i < j` entangled by a half-twist power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwitchingPair {
    i: usize,
    j: usize,
}

impl SwitchingPair {
    pub fn new(i: usize, j: usize, strands: usize) -> Option<Self> {
        (1 <= i && i < j && j <= strands).then_some(SwitchingPair { i, j })
    }

    pub fn i(self) -> usize {
        self.i
    }

    pub fn j(self) -> usize {
        self.j
    }
}

/// `δ = σ_1 ⋯ σ_{n-2} σ_{n-1} σ_{n-2}⁻¹ ⋯ σ_1⁻¹`, the half-twist exchanging
/// strands `1` and `n`.
pub fn delta(n: usize) -> BraidWord {
    assert!(n >= 2);
    let mut letters: Vec<Letter> = (1..n as u32 - 1).map(Letter::pos).collect();
    letters.push(Letter::pos(n as u32 - 1));
    letters.extend((1..n as u32 - 1).rev().map(Letter::neg));
    BraidWord::from_letters(n, letters)
}

/// `D` with `D⁻¹ σ_1 D = δ`.
///
/// The candidate `σ_2 σ_3 ⋯ σ_{n-1}` is checked with the word problem; a
/// bounded positive search is the fallback should the check ever fail.
pub fn delta_conjugator(n: usize) -> BraidWord {
    assert!(n >= 2);
    let candidate = BraidWord::from_letters(n, (2..n as u32).map(Letter::pos).collect());
    let s1 = BraidWord::generator(n, 1, true);
    let target = delta(n);
    if equal(&s1.conjugate(&candidate).expect("same strands"), &target).expect("same strands") {
        return candidate;
    }
    find_positive_conjugator(&s1, &target, 2 * n)
        .expect("same strands")
        .expect("σ_1 and δ are conjugate by a short positive word")
}

/// Conjugates `b` so that its switching strands move to positions `1` and
/// `n`. Returns `(b', C)` with `b' = C⁻¹ b C`.
///
/// `C = (σ_{i-1} ⋯ σ_1)(σ_j ⋯ σ_{n-1})`: the first factor walks strand `i`
/// down to position 1, the second walks strand `j` up to position `n`.
pub fn move_switching_strands(b: &BraidWord, pair: SwitchingPair) -> (BraidWord, BraidWord) {
    let n = b.strands();
    let (i, j) = (pair.i, pair.j);
    let mut letters: Vec<Letter> = (1..i as u32).rev().map(Letter::pos).collect();
    letters.extend((j as u32..n as u32).map(Letter::pos));
    let c = BraidWord::from_letters(n, letters);
    let moved = b.conjugate(&c).expect("same strands");

    let perm = b.permutation();
    if let Some(t) = perm.as_transposition() {
        assert_eq!(t, (i, j), "switching pair does not match the permutation");
        assert_eq!(
            moved.permutation().as_transposition(),
            Some((1, n)),
            "conjugation did not move the switching strands to 1 and n"
        );
    } else {
        let before = b.crossing_matrix();
        let after = moved.crossing_matrix();
        assert!(moved.permutation().is_identity());
        assert_eq!(after.get(1, n), before.get(i, j));
        assert_eq!(after.get(n, 1), before.get(j, i));
        assert_eq!(
            after.isolated_pair(before.get(i, j)),
            before.isolated_pair(before.get(i, j)).map(|_| (1, n)),
            "conjugation did not move the switching strands to 1 and n"
        );
    }
    (moved, c)
}

pub fn classify(b: &BraidWord) -> Classification {
    classify_with(b, &Budget::default())
}

pub fn classify_with(b: &BraidWord, budget: &Budget) -> Classification {
    let k = b.exponent_sum();
    if k == 0 {
        if !b.permutation().is_identity() {
            return Classification::NotPower {
                reason: FailedStep::PermutationFilter,
            };
        }
        return if is_trivial(b) {
            Classification::Identity
        } else {
            Classification::NotPower {
                reason: FailedStep::ExponentZero,
            }
        };
    }
    if k < 0 {
        // b = h^k exactly when b⁻¹ = h^{-k}; root and conjugator carry over.
        return match classify_positive(&b.invert(), -k, budget) {
            Classification::Power {
                k,
                root,
                conjugator,
            } => Classification::Power {
                k: -k,
                root,
                conjugator,
            },
            other => other,
        };
    }
    classify_positive(b, k, budget)
}

fn not_power(reason: FailedStep) -> Classification {
    Classification::NotPower { reason }
}

fn classify_positive(b: &BraidWord, k: i64, budget: &Budget) -> Classification {
    let n = b.strands();
    let odd = k % 2 != 0;
    let perm = b.permutation();

    let pair = if odd {
        match perm.as_transposition() {
            Some((i, j)) => SwitchingPair { i, j },
            None => return not_power(FailedStep::PermutationFilter),
        }
    } else {
        if !perm.is_identity() {
            return not_power(FailedStep::PermutationFilter);
        }
        match b.crossing_matrix().isolated_pair(k / 2) {
            Some((i, j)) => SwitchingPair { i, j },
            None => return not_power(FailedStep::CrossingFilter),
        }
    };

    let (moved, c) = move_switching_strands(b, pair);

    let (candidate, target_power) = if odd {
        let sq = moved.power(2);
        if sq.crossing_matrix().isolated_pair(k) != Some((1, n)) {
            return not_power(FailedStep::CrossingFilter);
        }
        (sq, k)
    } else {
        (moved.clone(), k / 2)
    };

    if !in_a_n(&candidate) {
        return not_power(FailedStep::NotCombed);
    }
    let combed = match comb_with(&candidate, budget) {
        Ok(f) => f,
        Err(CombError::BudgetExceeded { limit }) => return Classification::Undecided { limit },
        Err(CombError::NotCombed) => return not_power(FailedStep::NotCombed),
    };

    let q = match combed.conjugate_to_generator_power(n - 1, target_power) {
        Some(q) => q,
        None => return not_power(FailedStep::NotConjugate),
    };

    let q_braid = q.embed();
    let root_moved = delta(n).conjugate(&q_braid).expect("same strands");
    if odd && !equal(&root_moved.power(k), &moved).expect("same strands") {
        return not_power(FailedStep::RootCheck);
    }

    // P = D · Q · C⁻¹, and the root is written directly as P⁻¹ σ_1 P.
    let conjugator = delta_conjugator(n)
        .concat(&q_braid)
        .and_then(|x| x.concat(&c.invert()))
        .expect("same strands")
        .free_cancel();
    let root = BraidWord::generator(n, 1, true)
        .conjugate(&conjugator)
        .expect("same strands");
    Classification::Power {
        k,
        root,
        conjugator,
    }
}

/// A constructed instance `b = q⁻¹ σ_i^k q` with its known root and conjugator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfTwistInstance {
    pub word: BraidWord,
    pub k: i64,
    pub generator: usize,
    /// `q⁻¹ σ_i q`.
    pub root: BraidWord,
    /// `P` with `P⁻¹ σ_1^k P = word`.
    pub conjugator: BraidWord,
}

/// `G` with `G⁻¹ σ_1 G = σ_i`, namely `((σ_{i-1}σ_i)(σ_{i-2}σ_{i-1}) ⋯ (σ_1σ_2))⁻¹`.
pub fn generator_mover(n: usize, i: usize) -> BraidWord {
    assert!(i >= 1 && i < n);
    let mut x = Vec::new();
    for m in (1..i as u32).rev() {
        x.push(Letter::pos(m));
        x.push(Letter::pos(m + 1));
    }
    BraidWord::from_letters(n, x).invert()
}

/// Random word of exactly `len` letters with no cancelling neighbours.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let idx = rng.gen_range(1..n as u32);
        let l = Letter::new(idx, rng.gen_bool(0.5));
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    BraidWord::from_letters(n, letters)
}

/// Deterministic in `seed`.
pub fn random_half_twist_power(n: usize, k: i64, conj_len: usize, seed: u64) -> HalfTwistInstance {
    assert!(n >= 2 && k != 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = random_word(&mut rng, n, conj_len);
    let i = rng.gen_range(1..n);
    let si = BraidWord::generator(n, i, true);
    let word = si.power(k).conjugate(&q).expect("same strands");
    let root = si.conjugate(&q).expect("same strands");
    let conjugator = generator_mover(n, i)
        .concat(&q)
        .expect("same strands")
        .free_cancel();
    HalfTwistInstance {
        word,
        k,
        generator: i,
        root,
        conjugator,
    }
}

/// Checks a claimed certificate: `root^k = b` and `P⁻¹ σ_1^k P = b`.
pub fn verify_power(b: &BraidWord, k: i64, root: &BraidWord, conjugator: &BraidWord) -> bool {
    let n = b.strands();
    if root.strands() != n || conjugator.strands() != n || k == 0 {
        return false;
    }
    let s1k = BraidWord::generator(n, 1, true).power(k);
    let from_root = equal(&root.power(k), b).unwrap_or(false);
    let from_p = equal(&s1k.conjugate(conjugator).expect("same strands"), b).unwrap_or(false);
    let root_is_half_twist = equal(
        &BraidWord::generator(n, 1, true).conjugate(conjugator).expect("same strands"),
        root,
    )
    .unwrap_or(false);
    from_root && from_p && root_is_half_twist
}
