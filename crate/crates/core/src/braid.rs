//! Braid words and their combinatorial invariants.
//!
//! A [`BraidWord`] is a strand count together with a sequence of Artin
//! generators `σ_i^{±1}`. Nothing here applies the braid relations; the
//! invariants computed in this module (permutation, exponent sum, crossing
//! indices) are nevertheless invariant under them.
//!
//! Strands are labelled by their starting position, counted from 1. Letters
//! act left to right: `σ_i` exchanges whatever strands currently sit at
//! positions `i` and `i + 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

/// A single generator `σ_i^{±1}`, stored as the signed index `±i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: u32, positive: bool) -> Self {
        assert!(index >= 1, "generator index starts at 1");
        let e = index as i32;
        Letter(if positive { e } else { -e })
    }

    pub fn pos(index: u32) -> Self {
        Letter::new(index, true)
    }

    pub fn neg(index: u32) -> Self {
        Letter::new(index, false)
    }

    /// Generator subscript `i` of `σ_i`.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// Exponent, `+1` or `-1`.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn to_signed(self) -> i32 {
        self.0
    }
}

/// A braid word on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a validated word from signed entries: `e` stands for
    /// `σ_{|e|}^{sign(e)}`.
    pub fn new(strands: usize, entries: &[i32]) -> Result<Self> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        let mut letters = Vec::with_capacity(entries.len());
        for (k, &e) in entries.iter().enumerate() {
            if e == 0 {
                return Err(BraidError::ZeroLetter { position: k + 1 });
            }
            if e.unsigned_abs() as usize >= strands {
                return Err(BraidError::IndexOutOfRange {
                    position: k + 1,
                    index: e.unsigned_abs(),
                    max: strands - 1,
                });
            }
            letters.push(Letter(e));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Internal constructor; callers guarantee every index is below `strands`.
    pub(crate) fn from_letters(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index() < strands));
        BraidWord { strands, letters }
    }

    /// The single-letter word `σ_i^{±1}`.
    pub fn generator(strands: usize, index: usize, positive: bool) -> Self {
        assert!(index >= 1 && index < strands, "generator σ_{index} not in B_{strands}");
        Self::from_letters(strands, vec![Letter::new(index as u32, positive)])
    }

    /// Parses the shared text format: signed integers separated by
    /// whitespace and/or commas.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let tokens = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty());
        for (k, tok) in tokens.enumerate() {
            let e = tok.parse::<i32>().map_err(|_| BraidError::BadToken {
                position: k + 1,
                token: tok.to_string(),
            })?;
            entries.push(e);
        }
        BraidWord::new(strands, &entries)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_letters(self.strands, letters))
    }

    pub fn invert(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord::from_letters(self.strands, letters)
    }

    /// `q⁻¹ · self · q`, freely cancelled.
    pub fn conjugate(&self, q: &BraidWord) -> Result<BraidWord> {
        self.check_same(q)?;
        let mut letters = Vec::with_capacity(self.len() + 2 * q.len());
        letters.extend(q.letters.iter().rev().map(|l| l.inverse()));
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&q.letters);
        Ok(BraidWord::from_letters(self.strands, cancel(letters)))
    }

    /// Removes adjacent `σ_i σ_i⁻¹` and `σ_i⁻¹ σ_i` pairs until none remain.
    pub fn free_cancel(&self) -> BraidWord {
        BraidWord::from_letters(self.strands, cancel(self.letters.clone()))
    }

    /// `self^k`, freely cancelled. Negative `k` uses the inverse.
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_letters(self.strands, cancel(letters))
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }

    /// Image in the symmetric group; see [`Permutation`] for the orientation.
    pub fn permutation(&self) -> Permutation {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index() - 1, l.index());
        }
        // `at[pos]` is the strand now at `pos`; invert to strand -> position.
        let mut images = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    /// Crossing indices `cr(i, j) = p(i, j) - n(i, j)`.
    ///
    /// At each letter let `s` be the strand at position `i` and `t` the strand
    /// at `i + 1`. A positive letter counts towards `p(s, t)`, a negative one
    /// towards `n(t, s)`. With this rule a cancelling pair contributes nothing
    /// and the off-diagonal entries sum to the exponent sum.
    pub fn crossing_matrix(&self) -> CrossingMatrix {
        let n = self.strands;
        let mut entries = vec![0i64; n * n];
        let mut at: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            let i = l.index() - 1;
            let (s, t) = (at[i], at[i + 1]);
            if l.is_positive() {
                entries[s * n + t] += 1;
            } else {
                entries[t * n + s] -= 1;
            }
            at.swap(i, i + 1);
        }
        CrossingMatrix { n, entries }
    }

    /// Deletes the strand that starts at position `strand` (1-based),
    /// producing a word on one strand fewer.
    pub fn delete_strand(&self, strand: usize) -> Result<BraidWord> {
        if strand < 1 || strand > self.strands {
            return Err(BraidError::StrandOutOfRange {
                strand,
                strands: self.strands,
            });
        }
        let mut tracked = strand;
        let mut letters = Vec::new();
        for l in &self.letters {
            let i = l.index();
            if tracked == i {
                tracked = i + 1;
            } else if tracked == i + 1 {
                tracked = i;
            } else if tracked < i {
                letters.push(Letter::new((i - 1) as u32, l.is_positive()));
            } else {
                letters.push(*l);
            }
        }
        Ok(BraidWord::from_letters(self.strands - 1, letters))
    }
}

fn cancel(letters: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", l.to_signed())?;
        }
        Ok(())
    }
}

/// Parses with the strand count taken as one more than the largest index
/// (at least 2). Prefer [`BraidWord::parse`] when the strand count is known.
impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        let probe = BraidWord::parse(i32::MAX as usize, s)?;
        let n = probe.letters.iter().map(|l| l.index()).max().unwrap_or(1) + 1;
        Ok(BraidWord::from_letters(n.max(2), probe.letters))
    }
}

/// A permutation of strand positions.
///
/// `image(s)` is the final position of the strand that starts at position
/// `s`. Since letters act left to right, `π(uv) = π(v) ∘ π(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images. Panics if `images` is not a bijection on `1..=n`.
    pub fn from_images(images: &[usize]) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        let images: Vec<usize> = images
            .iter()
            .map(|&x| {
                assert!(x >= 1 && x <= n && !seen[x - 1], "not a bijection");
                seen[x - 1] = true;
                x - 1
            })
            .collect();
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based image of the 1-based point `s`.
    pub fn image(&self, s: usize) -> usize {
        self.images[s - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `Some((i, j))` with `i < j` when this is a single transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (0..self.images.len())
            .filter(|&i| self.images[i] != i)
            .collect();
        match moved.as_slice() {
            &[a, b] if self.images[a] == b => Some((a + 1, b + 1)),
            _ => None,
        }
    }

    /// Disjoint cycles of length at least two, 1-based, each starting from
    /// its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Table of crossing indices between strands, indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CrossingMatrix {
    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn off_diagonal_sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// The single unordered pair `(i, j)`, `i < j`, carrying nonzero entries,
    /// provided `cr(i, j) = cr(j, i) = value` and every other entry is zero.
    pub fn isolated_pair(&self, value: i64) -> Option<(usize, usize)> {
        let mut pair = None;
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.get(i, j) == 0 {
                    continue;
                }
                let p = (i.min(j), i.max(j));
                match pair {
                    None => pair = Some(p),
                    Some(q) if q == p => {}
                    Some(_) => return None,
                }
            }
        }
        let (i, j) = pair?;
        (self.get(i, j) == value && self.get(j, i) == value).then_some((i, j))
    }
}

impl fmt::Display for CrossingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows().iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, e: &[i32]) -> BraidWord {
        BraidWord::new(n, e).unwrap()
    }

    #[test]
    fn make_word_validates() {
        let b = w(4, &[1, 2, 3, 1, 2, 3]);
        assert_eq!(b.len(), 6);
        assert!(w(2, &[]).is_empty());
        assert_eq!(
            BraidWord::new(3, &[1, 3]),
            Err(BraidError::IndexOutOfRange {
                position: 2,
                index: 3,
                max: 2
            })
        );
        assert_eq!(BraidWord::new(3, &[0]), Err(BraidError::ZeroLetter { position: 1 }));
        assert_eq!(BraidWord::new(1, &[]), Err(BraidError::TooFewStrands(1)));
    }

    #[test]
    fn parse_format() {
        assert_eq!(BraidWord::parse(4, "1, -2  3").unwrap().to_signed(), vec![1, -2, 3]);
        assert!(BraidWord::parse(4, "").unwrap().is_empty());
        assert!(matches!(
            BraidWord::parse(4, "1 x 2"),
            Err(BraidError::BadToken { position: 2, .. })
        ));
        let b: BraidWord = "1 -3".parse().unwrap();
        assert_eq!(b.strands(), 4);
    }

    #[test]
    fn invert_and_conjugate() {
        assert_eq!(w(3, &[1, -2]).invert().to_signed(), vec![2, -1]);
        let s1 = w(3, &[1]);
        assert_eq!(s1.conjugate(&w(3, &[])).unwrap(), s1);
        assert_eq!(s1.conjugate(&w(3, &[2])).unwrap().to_signed(), vec![-2, 1, 2]);
        assert!(s1.conjugate(&w(4, &[2])).is_err());
    }

    #[test]
    fn free_cancel_examples() {
        assert!(w(2, &[1, -1]).free_cancel().is_empty());
        assert!(w(3, &[1, 2, -2, -1]).free_cancel().is_empty());
        assert_eq!(w(3, &[1, 2, 1]).free_cancel().to_signed(), vec![1, 2, 1]);
    }

    #[test]
    fn power_examples() {
        let s1 = w(2, &[1]);
        assert_eq!(s1.power(2).to_signed(), vec![1, 1]);
        assert!(s1.power(0).is_empty());
        assert_eq!(s1.power(-1).to_signed(), vec![-1]);
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w(3, &[1]).permutation().as_transposition(), Some((1, 2)));
        let delta = w(4, &[1, 2, 3, 1, 2, 1]).permutation();
        assert_eq!(delta.cycles(), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(delta.to_string(), "(1 4)(2 3)");
        assert!(w(4, &[]).permutation().is_identity());
        // B of the Garside-square example.
        assert_eq!(
            w(4, &[1, 2, 3, 1, 2, 3]).permutation().cycles(),
            vec![vec![1, 3], vec![2, 4]]
        );
    }

    #[test]
    fn permutation_orientation() {
        // σ1σ2 carries the first strand to position 3.
        let p = w(3, &[1, 2]).permutation();
        assert_eq!(p.image(1), 3);
        assert_eq!(p.image(2), 1);
        assert_eq!(p.image(3), 2);
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(w(4, &[1, 2, 3, 1, 2, 3]).exponent_sum(), 6);
        assert_eq!(w(2, &[1, -1]).exponent_sum(), 0);
        let x = w(4, &[1, -2, 3, 3]);
        assert_eq!(x.invert().exponent_sum(), -x.exponent_sum());
    }

    #[test]
    fn crossing_matrix_examples() {
        let m = w(2, &[1, 1]).crossing_matrix();
        assert_eq!((m.get(1, 2), m.get(2, 1)), (1, 1));
        assert_eq!(m.get(1, 1), 0);
        assert!(w(3, &[]).crossing_matrix().rows().iter().flatten().all(|&x| x == 0));
        let x = w(4, &[1, -2, 3, 3, -1, 2]);
        assert_eq!(x.crossing_matrix().off_diagonal_sum(), x.exponent_sum());
        assert!(w(3, &[1, -1]).crossing_matrix().rows().iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn isolated_pair_filter() {
        assert_eq!(w(3, &[2, 2]).crossing_matrix().isolated_pair(1), Some((2, 3)));
        assert_eq!(w(3, &[2, 2]).crossing_matrix().isolated_pair(2), None);
        assert_eq!(w(3, &[1, 1, 2, 2]).crossing_matrix().isolated_pair(1), None);
        assert_eq!(w(3, &[]).crossing_matrix().isolated_pair(0), None);
    }

    #[test]
    fn delete_strand_examples() {
        assert!(w(2, &[1, 1]).delete_strand(1).unwrap().is_empty());
        let d = w(3, &[2]).delete_strand(1).unwrap();
        assert_eq!((d.strands(), d.to_signed()), (2, vec![1]));
        assert!(w(3, &[1, 2, 2, -1]).delete_strand(1).unwrap().is_empty());
        assert_eq!(w(3, &[2, 2]).delete_strand(1).unwrap().to_signed(), vec![1, 1]);
        assert!(w(3, &[1]).delete_strand(4).is_err());
    }

    #[test]
    fn positivity() {
        assert!(w(3, &[1, 2]).is_positive());
        assert!(!w(3, &[1, -2]).is_positive());
        assert!(w(3, &[]).is_positive());
    }
}
