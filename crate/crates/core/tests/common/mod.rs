#![allow(dead_code)]

use halftwist::BraidWord;
use rand::Rng;

pub fn w(n: usize, e: &[i32]) -> BraidWord {
    BraidWord::new(n, e).unwrap()
}

/// Uniform random letters; cancelling neighbours are allowed.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let e: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    w(n, &e)
}

/// Every positive word on `n` strands with at most `max_len` letters.
pub fn all_positive_words(n: usize, max_len: usize) -> Vec<BraidWord> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for x in &layer {
            for g in 1..n as i32 {
                let mut y = x.clone();
                y.push(g);
                next.push(y);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter().map(|e| w(n, &e)).collect()
}

/// Applies one defining relation somewhere in the word: insert or delete a
/// cancelling pair, swap distant commuting letters, or rewrite a braid triple
/// `σ_i σ_{i±1} σ_i` of uniform sign.
pub fn random_relation_move<R: Rng>(rng: &mut R, word: &BraidWord) -> BraidWord {
    let n = word.strands();
    let e = word.to_signed();
    let mut candidates: Vec<Vec<i32>> = Vec::new();
    for p in 0..e.len().saturating_sub(1) {
        let (a, b) = (e[p], e[p + 1]);
        if a == -b {
            let mut x = e.clone();
            x.drain(p..p + 2);
            candidates.push(x);
        }
        if a.unsigned_abs().abs_diff(b.unsigned_abs()) >= 2 {
            let mut x = e.clone();
            x.swap(p, p + 1);
            candidates.push(x);
        }
        if p + 2 < e.len()
            && e[p + 2] == a
            && a.signum() == b.signum()
            && a.unsigned_abs().abs_diff(b.unsigned_abs()) == 1
        {
            let mut x = e.clone();
            x[p] = b;
            x[p + 1] = a;
            x[p + 2] = b;
            candidates.push(x);
        }
    }
    if candidates.is_empty() || rng.gen_bool(0.2) {
        let p = rng.gen_range(0..=e.len());
        let g = rng.gen_range(1..n as i32);
        let g = if rng.gen_bool(0.5) { g } else { -g };
        let mut x = e.clone();
        x.splice(p..p, [g, -g]);
        return w(n, &x);
    }
    let pick = rng.gen_range(0..candidates.len());
    w(n, &candidates.swap_remove(pick))
}
