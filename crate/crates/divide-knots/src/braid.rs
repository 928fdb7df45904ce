//! Braid words, the curve presentations attached to L-shaped regions, and a
//! handle-reduction solver for the word problem.
//!
//! Letters are stored as nonzero `i32`s: `+i` is the Artin generator
//! `sigma_i`, `-i` its inverse, with `1 <= i < index`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::lshape::{LRegion, LShapeError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("generator {gen} is out of range for braid index {index}")]
    LetterOutOfRange { gen: i64, index: usize },
    #[error("cannot embed an index-{from} word into index {to}")]
    BadEmbed { from: usize, to: usize },
    #[error("cannot multiply words of different index ({0} vs {1}); embed first")]
    IndexMismatch(usize, usize),
    #[error("handle reduction exceeded its budget of {budget} written letters")]
    BudgetExceeded { budget: u64 },
    #[error("a full twist needs 1 <= strands <= index, got {strands} at index {index}")]
    BadTwist { strands: usize, index: usize },
    #[error("conjugator words need 1 <= a1 < a2, got ({a1}, {a2})")]
    BadConjugatorRange { a1: i64, a2: i64 },
    #[error("mirror case needs 0 < a1 < a2 and c > 0, got a1 = {a1}, a2 = {a2}, c = {c}")]
    BadMirrorParams { a1: i64, a2: i64, c: i64 },
    #[error("cannot parse braid token {0:?}")]
    Parse(String),
    #[error(transparent)]
    Region(#[from] LShapeError),
}

/// A word in the braid group on `index` strands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    index: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn empty(index: usize) -> Self {
        BraidWord {
            index: index.max(1),
            letters: Vec::new(),
        }
    }

    pub fn from_letters<I>(index: usize, letters: I) -> Result<Self, BraidError>
    where
        I: IntoIterator<Item = i32>,
    {
        let mut w = BraidWord::empty(index);
        for l in letters {
            w.push(l)?;
        }
        Ok(w)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn push(&mut self, letter: i32) -> Result<(), BraidError> {
        let gen = letter.unsigned_abs() as usize;
        if letter == 0 || gen >= self.index {
            return Err(BraidError::LetterOutOfRange {
                gen: letter as i64,
                index: self.index,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Append another word of the same index.
    pub fn extend(&mut self, other: &BraidWord) {
        debug_assert_eq!(self.index, other.index);
        self.letters.extend_from_slice(&other.letters);
    }

    /// The same word viewed in a braid group on at least as many strands.
    pub fn embed(&self, index: usize) -> Result<BraidWord, BraidError> {
        if index < self.index {
            return Err(BraidError::BadEmbed {
                from: self.index,
                to: index,
            });
        }
        Ok(BraidWord {
            index,
            letters: self.letters.clone(),
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            index: self.index,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Concatenated `e`-th power; negative `e` uses the inverse.
    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let reps = e.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(self.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            index: self.index,
            letters,
        }
    }

    /// Product of two words, embedding both into the larger index.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let index = self.index.max(other.index);
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord { index, letters }
    }

    /// The permutation of strand positions induced by the word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.index).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            perm.swap(i - 1, i);
        }
        perm
    }

    /// Free reduction: cancel adjacent inverse pairs.
    pub fn free_reduced(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            index: self.index,
            letters: out,
        }
    }

    /// Compact form: maximal runs of `W(n) = s_{n-1} ... s_1` are printed as
    /// `W(n)^e` (`W(n)` for a single run covering at least two letters),
    /// everything else as `s<i>` / `S<i>`. The empty word prints as `e`.
    pub fn to_macro_string(&self) -> String {
        let ls = &self.letters;
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < ls.len() {
            if let Some((n, reps)) = w_run(ls, i, true) {
                if n >= 3 || reps >= 2 {
                    out.push(if reps == 1 {
                        format!("W({n})")
                    } else {
                        format!("W({n})^{reps}")
                    });
                    i += reps * (n - 1);
                    continue;
                }
            }
            if let Some((n, reps)) = w_run(ls, i, false) {
                if n >= 3 || reps >= 2 {
                    out.push(format!("W({n})^-{reps}"));
                    i += reps * (n - 1);
                    continue;
                }
            }
            let l = ls[i];
            out.push(if l > 0 {
                format!("s{l}")
            } else {
                format!("S{}", -l)
            });
            i += 1;
        }
        if out.is_empty() {
            "e".to_string()
        } else {
            out.join(" ")
        }
    }

    /// Fully expanded letter-by-letter form, `s3 s2 S1 ...`.
    pub fn to_expanded_string(&self) -> String {
        if self.letters.is_empty() {
            return "e".to_string();
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("s{l}")
                } else {
                    format!("S{}", -l)
                }
            })
            .collect();
        parts.join(" ")
    }

    /// Parse either serialized form; the index is the smallest one admitting
    /// every letter.
    pub fn parse(s: &str) -> Result<BraidWord, BraidError> {
        let mut letters: Vec<i32> = Vec::new();
        for token in s.split_whitespace() {
            if token == "e" {
                continue;
            }
            if let Some(rest) = token.strip_prefix("W(") {
                let (n_str, tail) = rest
                    .split_once(')')
                    .ok_or_else(|| BraidError::Parse(token.to_string()))?;
                let n: usize = n_str
                    .parse()
                    .map_err(|_| BraidError::Parse(token.to_string()))?;
                if n < 2 {
                    return Err(BraidError::Parse(token.to_string()));
                }
                let e: i64 = match tail.strip_prefix('^') {
                    None if tail.is_empty() => 1,
                    Some(e_str) => e_str
                        .parse()
                        .map_err(|_| BraidError::Parse(token.to_string()))?,
                    None => return Err(BraidError::Parse(token.to_string())),
                };
                let w = w_word(n, n);
                let block = if e >= 0 { w.letters } else { w.inverse().letters };
                for _ in 0..e.unsigned_abs() {
                    letters.extend_from_slice(&block);
                }
            } else if let Some(i_str) = token.strip_prefix('s') {
                let i: i32 = i_str
                    .parse()
                    .map_err(|_| BraidError::Parse(token.to_string()))?;
                if i < 1 {
                    return Err(BraidError::Parse(token.to_string()));
                }
                letters.push(i);
            } else if let Some(i_str) = token.strip_prefix('S') {
                let i: i32 = i_str
                    .parse()
                    .map_err(|_| BraidError::Parse(token.to_string()))?;
                if i < 1 {
                    return Err(BraidError::Parse(token.to_string()));
                }
                letters.push(-i);
            } else {
                return Err(BraidError::Parse(token.to_string()));
            }
        }
        let index = letters
            .iter()
            .map(|l| l.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(1);
        BraidWord::from_letters(index, letters)
    }
}

/// Detect a maximal repeated `W(n)` (or inverse) run starting at `from`,
/// returning `(n, repetitions)` for the longest block, preferring large `n`.
fn w_run(ls: &[i32], from: usize, positive: bool) -> Option<(usize, usize)> {
    let first = *ls.get(from)?;
    if positive {
        if first <= 0 {
            return None;
        }
        let n = first as usize + 1;
        let run = n - 1;
        let fits = |start: usize| {
            start + run <= ls.len() && (0..run).all(|j| ls[start + j] == (n - 1 - j) as i32)
        };
        if !fits(from) {
            return None;
        }
        let mut reps = 1;
        while fits(from + reps * run) {
            reps += 1;
        }
        Some((n, reps))
    } else {
        if first != -1 {
            return None;
        }
        let mut top = 1usize;
        while from + top < ls.len() && ls[from + top] == -((top as i32) + 1) {
            top += 1;
        }
        let n = top + 1;
        let run = top;
        let fits = |start: usize| {
            start + run <= ls.len() && (0..run).all(|j| ls[start + j] == -((j + 1) as i32))
        };
        let mut reps = 1;
        while fits(from + reps * run) {
            reps += 1;
        }
        Some((n, reps))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_macro_string())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord[{}]({})", self.index, self.to_macro_string())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BraidWord::parse(s)
    }
}

/// `W(n) = s_{n-1} s_{n-2} ... s_1` as a word of the given index
/// (`n <= index`); `n <= 1` gives the empty word.
pub fn w_word(n: usize, index: usize) -> BraidWord {
    assert!(n <= index, "W({n}) does not fit in index {index}");
    let letters = (1..n).rev().map(|i| i as i32).collect();
    BraidWord {
        index: index.max(1),
        letters,
    }
}

/// The involution sending `s_i` to `s_{index - i}`: reverse the word and
/// remap letters, preserving signs.
pub fn rho(w: &BraidWord) -> BraidWord {
    let n = w.index as i32;
    let letters = w
        .letters
        .iter()
        .rev()
        .map(|&l| l.signum() * (n - l.abs()))
        .collect();
    BraidWord {
        index: w.index,
        letters,
    }
}

/// The curve-presentation braid of a region: `W(a2)^b1 W(a1)^(b2-b1)` on
/// `a2` strands.
pub fn cp_braid(r: &LRegion) -> BraidWord {
    let a1 = r.a1() as usize;
    let a2 = r.a2() as usize;
    let mut w = w_word(a2, a2).pow(r.b1());
    w.extend(&w_word(a1, a2).pow(r.b2() - r.b1()));
    w
}

/// Ascending product of the even generators below `n`.
fn even_word(n: usize, index: usize) -> BraidWord {
    let letters = (2..n).step_by(2).map(|i| i as i32).collect();
    BraidWord { index, letters }
}

/// Ascending product of the odd generators below `n`.
fn odd_word(n: usize, index: usize) -> BraidWord {
    let letters = (1..n).step_by(2).map(|i| i as i32).collect();
    BraidWord { index, letters }
}

/// The raw braid read off the divide curve column by column:
/// `(block(a2))^b1 (block(a1))^(b2-b1)` on `a2` strands, where `block(n)` is
/// the even generators then the odd ones below `n` for odd `a1`, and the odd
/// then even ones for even `a1`.
pub fn column_braid(r: &LRegion) -> BraidWord {
    let a1 = r.a1() as usize;
    let a2 = r.a2() as usize;
    let block = |n: usize| {
        let mut b = if a1 % 2 == 1 {
            even_word(n, a2)
        } else {
            odd_word(n, a2)
        };
        b.extend(&if a1 % 2 == 1 {
            odd_word(n, a2)
        } else {
            even_word(n, a2)
        });
        b
    };
    let mut w = block(a2).pow(r.b1());
    w.extend(&block(a1).pow(r.b2() - r.b1()));
    w
}

/// The recursive sorting word `G(n)`: empty for `n <= 1`, otherwise
/// `head(n) G(n-2)` with `head(n) = e(n+1) o(n)` for odd `n` and
/// `o(n+1) e(n)` for even `n`.
fn g_word(n: i64, index: usize) -> BraidWord {
    if n <= 1 {
        return BraidWord::empty(index);
    }
    let n_us = n as usize;
    let mut w = if n % 2 == 1 {
        let mut h = even_word(n_us + 1, index);
        h.extend(&odd_word(n_us, index));
        h
    } else {
        let mut h = odd_word(n_us + 1, index);
        h.extend(&even_word(n_us, index));
        h
    };
    w.extend(&g_word(n - 2, index));
    w
}

/// The conjugating words used to sort a raw curve braid into
/// `W`-block form.
#[derive(Clone, Debug)]
pub struct Conjugators {
    /// `G(a1 - 2)`, sorting the thin columns.
    pub g: BraidWord,
    /// `rho(G(a2 - a1 - 1))`, sorting the wide columns; uses only the
    /// generators `s_{a1+1} .. s_{a2-1}`.
    pub h: BraidWord,
    /// `h^{-1} g`, the full conjugator of the final identity.
    pub omega: BraidWord,
}

pub fn conjugators(a1: i64, a2: i64) -> Result<Conjugators, BraidError> {
    if !(1 <= a1 && a1 < a2) {
        return Err(BraidError::BadConjugatorRange { a1, a2 });
    }
    let index = a2 as usize;
    let g = g_word(a1 - 2, index);
    let h = rho(&g_word(a2 - a1 - 1, index));
    let mut omega = h.inverse();
    omega.extend(&g);
    Ok(Conjugators { g, h, omega })
}

/// The word with the last `strands` strands given `n` full twists:
/// `w (W(strands)^strands)^n`.
pub fn full_twist(w: &BraidWord, strands: usize, n: i64) -> Result<BraidWord, BraidError> {
    if strands < 1 || strands > w.index {
        return Err(BraidError::BadTwist {
            strands,
            index: w.index,
        });
    }
    let mut out = w.clone();
    out.extend(&w_word(strands, w.index).pow(strands as i64).pow(n));
    Ok(out)
}

/// Number of components of the closure.
pub fn closure_components(w: &BraidWord) -> usize {
    let perm = w.permutation();
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

/// The region presenting `W(a2)^c W(a1)^delta` up to mirror image, by the
/// signs of `c` and `delta`.
///
/// Both-positive is the region `[a1,a2;c,c+1]`; positive `c`, negative
/// `delta` is `[a2-a1+1,a2;c-1,c]` (needing `c >= 2` and `a1 >= 2`); the two
/// remaining cases are mirrors of those.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MirrorPresentation {
    pub region: LRegion,
    pub mirror: bool,
}

pub fn mirror_case(
    c_sign: crate::sign::Sign,
    delta: crate::sign::Sign,
    a1: i64,
    a2: i64,
    c: i64,
) -> Result<MirrorPresentation, BraidError> {
    if !(0 < a1 && a1 < a2 && c > 0) {
        return Err(BraidError::BadMirrorParams { a1, a2, c });
    }
    let mirror = !c_sign.is_positive();
    let straight = c_sign == delta;
    let region = if straight {
        LRegion::new(a1, a2, c, c + 1)?
    } else {
        LRegion::new(a2 - a1 + 1, a2, c - 1, c)?
    };
    Ok(MirrorPresentation { region, mirror })
}

/// The outcome of handle reduction.
#[derive(Clone, Debug)]
pub struct ReducedForm {
    pub word: BraidWord,
    /// The input represented the identity braid.
    pub trivial: bool,
    /// For nonempty reduced words: whether the lowest generator occurs only
    /// positively. `None` when trivial.
    pub sigma_positive: Option<bool>,
}

const DEFAULT_BUDGET: u64 = 10_000_000;

/// The handle-reduction budget: letters written during rewrites before
/// giving up. Defaults to ten million, overridable through `ATLAS_BUDGET`.
pub fn default_budget() -> u64 {
    std::env::var("ATLAS_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

pub fn handle_reduce(w: &BraidWord) -> Result<ReducedForm, BraidError> {
    handle_reduce_with_budget(w, default_budget())
}

/// Dehornoy handle reduction: repeatedly rewrite the leftmost-ending handle
/// `s_i^e v s_i^{-e}` (with `v` using only higher generators) by deleting
/// the outer pair and replacing each `s_{i+1}^d` inside by
/// `s_{i+1}^{-e} s_i^d s_{i+1}^e`, until the word is handle-free.
pub fn handle_reduce_with_budget(w: &BraidWord, budget: u64) -> Result<ReducedForm, BraidError> {
    let mut letters = w.free_reduced().letters;
    let mut written: u64 = 0;
    let mut scan_from = 0usize;
    loop {
        let mut found: Option<(usize, usize)> = None;
        'ends: for q in scan_from..letters.len() {
            let lq = letters[q];
            let iq = lq.abs();
            for p in (0..q).rev() {
                let lp = letters[p];
                let ip = lp.abs();
                if ip < iq {
                    continue 'ends;
                }
                if ip == iq {
                    if lp == -lq {
                        found = Some((p, q));
                        break 'ends;
                    }
                    continue 'ends;
                }
            }
        }
        let Some((p, q)) = found else { break };
        let e = letters[p].signum();
        let i = letters[p].abs();
        let mut repl: Vec<i32> = Vec::with_capacity((q - p) * 3);
        for &l in &letters[p + 1..q] {
            if l.abs() == i + 1 {
                repl.push(-e * (i + 1));
                repl.push(l.signum() * i);
                repl.push(e * (i + 1));
            } else {
                repl.push(l);
            }
        }
        written += repl.len() as u64;
        if written > budget {
            return Err(BraidError::BudgetExceeded { budget });
        }
        letters.splice(p..=q, repl);
        scan_from = p;
    }
    let word = BraidWord {
        index: w.index,
        letters,
    };
    let trivial = word.is_empty();
    let sigma_positive = (!trivial).then(|| {
        let low = word.letters.iter().map(|l| l.abs()).min().unwrap();
        word.letters.iter().all(|&l| l != -low)
    });
    Ok(ReducedForm {
        word,
        trivial,
        sigma_positive,
    })
}

/// Whether two words represent the same braid (after embedding into the
/// larger index).
pub fn equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool, BraidError> {
    equal_with_budget(w1, w2, default_budget())
}

pub fn equal_with_budget(w1: &BraidWord, w2: &BraidWord, budget: u64) -> Result<bool, BraidError> {
    let quotient = w1.concat(&w2.inverse());
    Ok(handle_reduce_with_budget(&quotient, budget)?.trivial)
}
