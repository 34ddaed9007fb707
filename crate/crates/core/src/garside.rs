//! Left normal form `Δ^p · s_1 ⋯ s_r` of braids.
//!
//! Simple elements (positive divisors of `Δ`) are stored as permutations of
//! positions: `perm[p]` is where the strand starting at `p` ends. Every
//! permutation is realised by exactly one simple braid, so equality of normal
//! forms decides equality in `B_n`.

use crate::braid::{BraidWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple(Vec<u8>);

impl Simple {
    pub fn identity(n: usize) -> Self {
        Simple((0..n as u8).collect())
    }

    pub fn delta(n: usize) -> Self {
        Simple((0..n as u8).rev().collect())
    }

    /// `σ_{i+1}` for the 0-based index `i`.
    pub fn generator(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.0.swap(i, i + 1);
        s
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.0.len();
        self.0.iter().enumerate().all(|(i, &x)| x as usize == n - 1 - i)
    }

    /// Number of crossings, i.e. the length of any positive word for it.
    pub fn crossings(&self) -> usize {
        let mut c = 0;
        for a in 0..self.0.len() {
            for b in a + 1..self.0.len() {
                if self.0[a] > self.0[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Does `σ_{i+1}` left-divide this element?
    pub fn starts_with(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    /// Does `σ_{i+1}` right-divide this element?
    pub fn ends_with(&self, i: usize) -> bool {
        let inv = self.inverse_perm();
        inv[i] > inv[i + 1]
    }

    fn inverse_perm(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.0.len()];
        for (p, &x) in self.0.iter().enumerate() {
            inv[x as usize] = p as u8;
        }
        inv
    }

    /// `self · σ_{i+1}`; only meaningful when `!self.ends_with(i)`.
    fn push_right(&mut self, i: usize) {
        for x in self.0.iter_mut() {
            if *x as usize == i {
                *x = (i + 1) as u8;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
    }

    /// `σ_{i+1}⁻¹ · self`; only meaningful when `self.starts_with(i)`.
    pub(crate) fn pop_left(&mut self, i: usize) {
        self.0.swap(i, i + 1);
    }

    /// The simple element `x` with `self · x = Δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.0.len() as u8;
        // self then x is the reversal: x[self[p]] = n - 1 - p.
        let mut x = vec![0u8; self.0.len()];
        for (p, &q) in self.0.iter().enumerate() {
            x[q as usize] = n - 1 - p as u8;
        }
        Simple(x)
    }

    /// Conjugation by `Δ`, which sends `σ_i` to `σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.0.len() as u8;
        let mut x = vec![0u8; self.0.len()];
        for (p, &q) in self.0.iter().enumerate() {
            x[(n - 1) as usize - p] = n - 1 - q;
        }
        Simple(x)
    }

    /// A positive word for this element, as 0-based generator indices.
    pub fn word(&self) -> Vec<usize> {
        let mut s = self.clone();
        let mut out = Vec::with_capacity(s.crossings());
        while let Some(i) = (0..s.0.len().saturating_sub(1)).find(|&i| s.starts_with(i)) {
            out.push(i);
            s.pop_left(i);
        }
        out
    }
}

/// Rewrites the pair `(a, b)` in place so that it is left-weighted.
/// Returns `false` when the pair already was.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.strands();
    let mut changed = false;
    loop {
        let pick = (0..n.saturating_sub(1)).find(|&i| b.starts_with(i) && !a.ends_with(i));
        match pick {
            Some(i) => {
                a.push_right(i);
                b.pop_left(i);
                changed = true;
            }
            None => return changed,
        }
    }
}

/// Left normal form `Δ^delta_power · factors[0] ⋯ factors[r-1]`, where no
/// factor is `Δ` or the identity and consecutive factors are left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub strands: usize,
    pub delta_power: i64,
    pub factors: Vec<Simple>,
}

impl NormalForm {
    pub fn of(word: &BraidWord) -> Self {
        let n = word.strands();
        // Rewrite each σ_i⁻¹ as Δ⁻¹·x with x simple and push every Δ⁻¹ to the
        // front; a factor passed by an odd number of them gets flipped.
        let mut raw: Vec<(Simple, i64)> = Vec::with_capacity(word.len());
        let mut inverses = 0i64;
        for l in word.letters() {
            let g = Simple::generator(n, l.index() - 1);
            if l.is_positive() {
                raw.push((g, inverses));
            } else {
                inverses += 1;
                // σ_i⁻¹ = Δ⁻¹ · (Δσ_i⁻¹), and Δσ_i⁻¹ = σ_{n-i}⁻¹Δ.
                raw.push((g.flip().right_complement(), inverses));
            }
        }
        let mut factors: Vec<Simple> = Vec::new();
        for (s, stamp) in raw {
            let s = if (inverses - stamp) % 2 == 1 { s.flip() } else { s };
            insert_right(&mut factors, s);
        }
        let lead = factors.iter().take_while(|s| s.is_delta()).count();
        factors.drain(..lead);
        while factors.last().is_some_and(|s| s.is_identity()) {
            factors.pop();
        }
        NormalForm {
            strands: n,
            delta_power: lead as i64 - inverses,
            factors,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Writes the normal form back out as a braid word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        let delta = Simple::delta(n).word();
        for _ in 0..self.delta_power.unsigned_abs() {
            if self.delta_power > 0 {
                letters.extend(delta.iter().map(|&i| Letter::pos(i as u32 + 1)));
            } else {
                letters.extend(delta.iter().rev().map(|&i| Letter::neg(i as u32 + 1)));
            }
        }
        for f in &self.factors {
            letters.extend(f.word().into_iter().map(|i| Letter::pos(i as u32 + 1)));
        }
        BraidWord::from_letters(n, letters)
    }
}

/// Multiplies a normal-form factor list on the right by a simple element.
fn insert_right(factors: &mut Vec<Simple>, s: Simple) {
    factors.push(s);
    let mut j = factors.len() - 1;
    while j > 0 {
        let (left, right) = factors.split_at_mut(j);
        if !left_weight(&mut left[j - 1], &mut right[0]) {
            break;
        }
        j -= 1;
    }
}
