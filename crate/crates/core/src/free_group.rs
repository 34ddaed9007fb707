//! The free subgroup `A_n ⊂ B_n` of combed braids.
//!
//! `A_n` is free on `a_1, …, a_{n-1}` with
//! `a_i = σ_1 ⋯ σ_{i-1} σ_i² σ_{i-1}⁻¹ ⋯ σ_1⁻¹`: the first strand travels out
//! to position `i`, loops once around the strand at `i + 1`, and returns.

use std::fmt;

use crate::braid::{BraidWord, Letter};
use crate::error::{BraidError, Result};

/// A freely reduced word in `a_1^{±1}, …, a_rank^{±1}`, one syllable per
/// letter; the syllable `±i` stands for `a_i^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    syllables: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            syllables: Vec::new(),
        }
    }

    /// Freely reduces `syllables`. Panics on a syllable outside `±1..=±rank`.
    pub fn reduce(rank: usize, syllables: impl IntoIterator<Item = i32>) -> Self {
        let mut w = FreeWord::identity(rank);
        for s in syllables {
            w.push(s);
        }
        w
    }

    pub fn generator(rank: usize, index: usize) -> Self {
        FreeWord::reduce(rank, [index as i32])
    }

    /// `a_index^k`.
    pub fn generator_power(rank: usize, index: usize, k: i64) -> Self {
        let s = if k < 0 { -(index as i32) } else { index as i32 };
        FreeWord::reduce(rank, std::iter::repeat_n(s, k.unsigned_abs() as usize))
    }

    pub(crate) fn push(&mut self, s: i32) {
        assert!(
            s != 0 && s.unsigned_abs() as usize <= self.rank,
            "syllable {s} outside rank {}",
            self.rank
        );
        if self.syllables.last() == Some(&-s) {
            self.syllables.pop();
        } else {
            self.syllables.push(s);
        }
    }

    pub(crate) fn append(&mut self, other: &FreeWord) {
        for &s in &other.syllables {
            self.push(s);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[i32] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            syllables: self.syllables.iter().rev().map(|s| -s).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut w = self.clone();
        w.append(other);
        w
    }

    /// Splits `self = u · core · u⁻¹` with `core` cyclically reduced.
    /// Returns `(core, u)`.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let s = &self.syllables;
        let mut peel = 0;
        while 2 * peel + 1 < s.len() && s[peel] == -s[s.len() - 1 - peel] {
            peel += 1;
        }
        let core = FreeWord {
            rank: self.rank,
            syllables: s[peel..s.len() - peel].to_vec(),
        };
        let u = FreeWord {
            rank: self.rank,
            syllables: s[..peel].to_vec(),
        };
        (core, u)
    }

    /// Decides whether `self` is conjugate to `a_index^k` and, if so, returns
    /// `Q` with `Q⁻¹ · a_index^k · Q = self`.
    ///
    /// `a_index^k` is cyclically reduced and all its cyclic rotations coincide,
    /// so conjugacy holds exactly when the cyclic core equals it.
    pub fn conjugate_to_generator_power(&self, index: usize, k: i64) -> Option<FreeWord> {
        assert!(k != 0, "exponent must be nonzero");
        let (core, u) = self.cyclic_reduce();
        (core == FreeWord::generator_power(self.rank, index, k)).then(|| u.inverse())
    }

    /// Image in `B_{rank+1}` under `a_i ↦ σ_1 ⋯ σ_{i-1} σ_i² σ_{i-1}⁻¹ ⋯ σ_1⁻¹`.
    pub fn embed(&self) -> BraidWord {
        let n = self.rank + 1;
        let mut letters = Vec::new();
        for &s in &self.syllables {
            let i = s.unsigned_abs();
            let positive = s > 0;
            letters.extend((1..i).map(Letter::pos));
            letters.push(Letter::new(i, positive));
            letters.push(Letter::new(i, positive));
            letters.extend((1..i).rev().map(Letter::neg));
        }
        BraidWord::from_letters(n, letters).free_cancel()
    }

    /// Like [`FreeWord::embed`] but checks the target strand count.
    pub fn embed_in(&self, strands: usize) -> Result<BraidWord> {
        if strands != self.rank + 1 {
            return Err(BraidError::StrandMismatch {
                left: self.rank + 1,
                right: strands,
            });
        }
        Ok(self.embed())
    }

    /// Parses tokens such as `a2^-1 a3 a1^2`; `1` or an empty string is the
    /// identity.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let mut syllables = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            if tok == "1" {
                continue;
            }
            let bad = || BraidError::FreeWord(format!("cannot parse token {tok:?}"));
            let body = tok.strip_prefix('a').ok_or_else(bad)?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 || idx > rank {
                return Err(BraidError::FreeWord(format!(
                    "generator a{idx} outside rank {rank}"
                )));
            }
            let s = if exp < 0 { -(idx as i32) } else { idx as i32 };
            syllables.extend(std::iter::repeat_n(s, exp.unsigned_abs() as usize));
        }
        Ok(FreeWord::reduce(rank, syllables))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|&s| {
                if s > 0 {
                    format!("a{s}")
                } else {
                    format!("a{}^-1", -s)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}
