//! Equality in `B_n` and the positive-braid machinery.
//!
//! [`is_trivial`] and [`equal`] compare Garside left normal forms, which is a
//! complete decision procedure. [`positive_equal`] instead walks the finite
//! graph of positive words of one length linked by single relation moves; it
//! shares no code with the normal form and serves as an oracle for it.

use std::collections::{HashSet, VecDeque};

use crate::braid::{BraidWord, Letter};
use crate::error::{BraidError, Result};
use crate::garside::{NormalForm, Simple};

/// Outcome of an equality test, carrying both normal forms as a certificate.
#[derive(Debug, Clone)]
pub struct EqualityVerdict {
    pub equal: bool,
    pub left: NormalForm,
    pub right: NormalForm,
}

pub fn normal_form(w: &BraidWord) -> NormalForm {
    NormalForm::of(w)
}

pub fn is_trivial(w: &BraidWord) -> bool {
    if w.exponent_sum() != 0 {
        return false;
    }
    let w = w.free_cancel();
    w.is_empty() || NormalForm::of(&w).is_identity()
}

pub fn equal_verdict(u: &BraidWord, v: &BraidWord) -> Result<EqualityVerdict> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    let left = NormalForm::of(&u.free_cancel());
    let right = NormalForm::of(&v.free_cancel());
    Ok(EqualityVerdict {
        equal: left == right,
        left,
        right,
    })
}

pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() == v.strands() && u.exponent_sum() != v.exponent_sum() {
        return Ok(false);
    }
    Ok(equal_verdict(u, v)?.equal)
}

fn positive_indices(w: &BraidWord) -> Vec<u8> {
    assert!(w.is_positive(), "expected a positive word");
    w.letters().iter().map(|l| l.index() as u8).collect()
}

fn relation_moves(w: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[p], w[p + 1]);
        if a.abs_diff(b) >= 2 {
            let mut x = w.to_vec();
            x.swap(p, p + 1);
            out.push(x);
        } else if a.abs_diff(b) == 1 && p + 2 < w.len() && w[p + 2] == a {
            let mut x = w.to_vec();
            x[p] = b;
            x[p + 1] = a;
            x[p + 2] = b;
            out.push(x);
        }
    }
    out
}

/// All positive words reachable from `w` by single relation moves, in
/// breadth-first order starting with `w` itself.
pub fn positive_orbit(w: &BraidWord) -> Vec<BraidWord> {
    let start = positive_indices(w);
    let n = w.strands();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut order = Vec::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        for y in relation_moves(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        order.push(x);
    }
    order
        .into_iter()
        .map(|x| BraidWord::from_letters(n, x.into_iter().map(|i| Letter::pos(i as u32)).collect()))
        .collect()
}

/// Positive equivalence by exhaustive relation search. Words of different
/// lengths are never positively equivalent.
pub fn positive_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    let target = positive_indices(v);
    let start = positive_indices(u);
    if start.len() != target.len() {
        return Ok(false);
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        if x == target {
            return Ok(true);
        }
        for y in relation_moves(&x) {
            debug_assert_eq!(y.len(), target.len());
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(false)
}

/// For positive `alpha`, finds a positive `w'` with `σ_index · w' = alpha`.
///
/// Works on the left normal form: `σ_i` left-divides a positive braid exactly
/// when it divides its first canonical factor (or the braid has a `Δ`).
pub fn left_extract(alpha: &BraidWord, index: usize) -> Option<BraidWord> {
    assert!(alpha.is_positive(), "left_extract needs a positive word");
    let n = alpha.strands();
    assert!(index >= 1 && index < n);
    let i = index - 1;
    let nf = NormalForm::of(alpha);
    let mut factors: Vec<Simple> = Vec::new();
    for _ in 0..nf.delta_power {
        factors.push(Simple::delta(n));
    }
    factors.extend(nf.factors.iter().cloned());
    let first = factors.first_mut()?;
    if !first.starts_with(i) {
        return None;
    }
    first.pop_left(i);
    let mut letters = Vec::with_capacity(alpha.len().saturating_sub(1));
    for f in &factors {
        letters.extend(f.word().into_iter().map(|g| Letter::pos(g as u32 + 1)));
    }
    Some(BraidWord::from_letters(n, letters))
}

fn cycle_type(w: &BraidWord) -> Vec<usize> {
    let mut t: Vec<usize> = w.permutation().cycles().iter().map(|c| c.len()).collect();
    t.sort_unstable();
    t
}

/// Searches positive words `w` with `|w| ≤ max_len`, shortest first, for one
/// satisfying `w⁻¹ α w = β`. `None` only means nothing was found in budget.
pub fn find_positive_conjugator(
    alpha: &BraidWord,
    beta: &BraidWord,
    max_len: usize,
) -> Result<Option<BraidWord>> {
    if alpha.strands() != beta.strands() {
        return Err(BraidError::StrandMismatch {
            left: alpha.strands(),
            right: beta.strands(),
        });
    }
    if alpha.exponent_sum() != beta.exponent_sum() || cycle_type(alpha) != cycle_type(beta) {
        return Ok(None);
    }
    let n = alpha.strands();
    let target = NormalForm::of(beta);
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for len in 0..=max_len {
        for letters in &layer {
            let w = BraidWord::from_letters(n, letters.clone());
            if NormalForm::of(&alpha.conjugate(&w)?) == target {
                return Ok(Some(w));
            }
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * (n - 1));
        for letters in &layer {
            for g in 1..n {
                let mut x = letters.clone();
                x.push(Letter::pos(g as u32));
                next.push(x);
            }
        }
        layer = next;
    }
    Ok(None)
}
