//! p-Fibonacci words: validation, counting and enumeration.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Largest alphabet accepted unless a caller supplies its own [`Limits`].
pub const DEFAULT_MAX_P: u8 = 64;

/// Default cap on the number of words materialised by one enumeration.
pub const DEFAULT_WORD_CAP: u64 = 10_000_000;

/// Resource bounds shared by the enumerating operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_p: u8,
    pub word_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_p: DEFAULT_MAX_P,
            word_cap: DEFAULT_WORD_CAP,
        }
    }
}

impl Limits {
    pub fn check_alphabet(&self, p: i64) -> Result<u8> {
        if p < 1 || p > i64::from(self.max_p) {
            return Err(Error::InvalidAlphabet { p, max: self.max_p });
        }
        Ok(p as u8)
    }
}

/// Validates `p` against [`DEFAULT_MAX_P`].
pub fn check_alphabet(p: i64) -> Result<u8> {
    Limits::default().check_alphabet(p)
}

/// A validated p-Fibonacci word. The digits double as the column heights of
/// the associated bargraph polyomino.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FibWord {
    p: u8,
    digits: Vec<u8>,
}

impl FibWord {
    pub fn new(p: u8, digits: Vec<u8>) -> Result<Self> {
        check_alphabet(i64::from(p))?;
        if let Some(reason) = violation(p, &digits) {
            return Err(Error::InvalidWord { p, digits, reason });
        }
        Ok(FibWord { p, digits })
    }

    pub fn empty(p: u8) -> Self {
        FibWord {
            p,
            digits: Vec::new(),
        }
    }

    /// Parses either a run of decimal digits (`"32321"`) or, for alphabets
    /// with multi-digit letters, a comma separated list (`"12,11,12"`).
    pub fn parse(p: u8, text: &str) -> Result<Self> {
        let text = text.trim();
        let digits = if text.contains(',') {
            text.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad letter {s:?} in word {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in word {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        FibWord::new(p, digits)
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The generating-tree state reached after reading this word.
    pub fn state(&self) -> WordState {
        WordState {
            p: self.p,
            last: self.digits.last().copied(),
        }
    }

    /// Appends `digit` if the result is still a p-Fibonacci word.
    pub fn push(&mut self, digit: u8) -> Result<()> {
        if !self
            .state()
            .successors()
            .iter()
            .any(|s| s.last == Some(digit))
        {
            let mut digits = self.digits.clone();
            digits.push(digit);
            let reason = violation(self.p, &digits).unwrap_or_default();
            return Err(Error::InvalidWord {
                p: self.p,
                digits,
                reason,
            });
        }
        self.digits.push(digit);
        Ok(())
    }

    pub(crate) fn from_trusted(p: u8, digits: Vec<u8>) -> Self {
        debug_assert!(violation(p, &digits).is_none());
        FibWord { p, digits }
    }
}

impl fmt::Display for FibWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p <= 9 {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

fn violation(p: u8, digits: &[u8]) -> Option<String> {
    if let Some(i) = digits.iter().position(|&d| d == 0 || d > p) {
        return Some(format!(
            "letter {} at position {} is outside 1..={p}",
            digits[i],
            i + 1
        ));
    }
    if let Some(&first) = digits.first() {
        if first != p {
            return Some(format!("first letter is {first}, expected {p}"));
        }
    }
    for (i, pair) in digits.windows(2).enumerate() {
        let (cur, next) = (pair[0], pair[1]);
        let ok = next == p || (cur >= 2 && next == cur - 1);
        if !ok {
            return Some(format!(
                "letter {next} at position {} cannot follow {cur}",
                i + 2
            ));
        }
    }
    None
}

/// True iff `digits` is a p-Fibonacci word. The empty sequence is valid.
pub fn is_valid_word(p: u8, digits: &[u8]) -> bool {
    p >= 1 && violation(p, digits).is_none()
}

/// A node of the generating tree: the alphabet bound and the last letter
/// read, or `None` at the root (the empty word).
///
/// A state whose last letter is `k >= 2` carries the production label
/// `2_{k-1}`; last letter `1` carries the label `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WordState {
    pub p: u8,
    pub last: Option<u8>,
}

impl WordState {
    pub fn root(p: u8) -> Self {
        WordState { p, last: None }
    }

    pub fn new(p: u8, last: u8) -> Result<Self> {
        check_alphabet(i64::from(p))?;
        if last == 0 || last > p {
            return Err(Error::InvalidWord {
                p,
                digits: vec![last],
                reason: format!("state letter must lie in 1..={p}"),
            });
        }
        Ok(WordState {
            p,
            last: Some(last),
        })
    }

    /// Children in canonical order: the descent `last - 1` (when `last >= 2`)
    /// followed by the reset to `p`.
    pub fn successors(&self) -> Vec<WordState> {
        let p = self.p;
        let child = |d| WordState { p, last: Some(d) };
        match self.last {
            None => vec![child(p)],
            Some(d) if d >= 2 => vec![child(d - 1), child(p)],
            Some(_) => vec![child(p)],
        }
    }
}

/// `F_{p,n}`: each term is the sum of the previous `p`, with
/// `F_{p,n} = 0` for `-p+2 <= n <= 0` and `F_{p,1} = 1`.
pub fn fibonacci_number(p: u8, n: i64) -> Result<BigUint> {
    check_alphabet(i64::from(p))?;
    let min = 2 - i64::from(p);
    if n < min {
        return Err(Error::IndexOutOfRange { p, n, min });
    }
    if n <= 0 {
        return Ok(BigUint::zero());
    }
    // Sliding window over the last p terms, seeded with F_{p,1}=1 and zeros.
    let mut window: VecDeque<BigUint> = VecDeque::with_capacity(p as usize);
    for _ in 1..p {
        window.push_back(BigUint::zero());
    }
    window.push_back(BigUint::one());
    let mut sum = BigUint::one();
    for _ in 1..n {
        let next = sum.clone();
        sum += &next;
        window.push_back(next);
        if let Some(old) = window.pop_front() {
            sum -= old;
        }
    }
    Ok(window.pop_back().expect("window holds p >= 1 terms"))
}

/// `|W_n^{(p)}| = F_{p,n+1}`, computed without enumerating.
pub fn count_words(p: u8, n: usize) -> Result<BigUint> {
    fibonacci_number(p, n as i64 + 1)
}

/// Lexicographic iterator over the p-Fibonacci words of a fixed length.
#[derive(Debug, Clone)]
pub struct WordIter {
    p: u8,
    current: Option<Vec<u8>>,
}

impl WordIter {
    pub fn new(p: u8, n: usize) -> Self {
        let mut digits = Vec::with_capacity(n);
        fill_minimal(p, &mut digits, n);
        WordIter {
            p,
            current: Some(digits),
        }
    }
}

/// Extends `digits` to length `n` with the lexicographically smallest valid
/// continuation.
fn fill_minimal(p: u8, digits: &mut Vec<u8>, n: usize) {
    while digits.len() < n {
        let next = match digits.last() {
            None => p,
            Some(&d) if d >= 2 => d - 1,
            Some(_) => p,
        };
        digits.push(next);
    }
}

impl Iterator for WordIter {
    type Item = FibWord;

    fn next(&mut self) -> Option<FibWord> {
        let digits = self.current.take()?;
        let n = digits.len();
        let mut succ = digits.clone();
        // A position can be bumped only from a descent letter up to the reset p.
        let bump = (1..n).rev().find(|&k| succ[k] < self.p);
        if let Some(k) = bump {
            succ[k] = self.p;
            succ.truncate(k + 1);
            fill_minimal(self.p, &mut succ, n);
            self.current = Some(succ);
        }
        Some(FibWord::from_trusted(self.p, digits))
    }
}

/// All words of `W_n^{(p)}` in ascending lexicographic order.
pub fn enumerate_words(p: u8, n: usize) -> Result<Vec<FibWord>> {
    enumerate_words_with(p, n, &Limits::default())
}

pub fn enumerate_words_with(p: u8, n: usize, limits: &Limits) -> Result<Vec<FibWord>> {
    limits.check_alphabet(i64::from(p))?;
    let count = count_words(p, n)?;
    ensure_within_cap(&count, limits.word_cap)?;
    Ok(WordIter::new(p, n).collect())
}

pub(crate) fn ensure_within_cap(count: &BigUint, cap: u64) -> Result<()> {
    match count.to_u64() {
        Some(c) if c <= cap => Ok(()),
        _ => Err(Error::CapExceeded {
            requested: count.to_string(),
            cap,
        }),
    }
}
