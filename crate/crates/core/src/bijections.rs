//! Two bijections out of the p-Fibonacci words.
//!
//! * Words of area `n` and compositions of `n` with parts in
//!   [`parts_set`](crate::series::parts_set): cut the word before every `p`;
//!   each block `p, p-1, ..., i` contributes its digit sum.
//! * Words of length `n >= 1` and binary words of length `n - 1` with no run
//!   of `p` ones: record `1` for every descent and `0` for every reset to `p`.

use std::fmt;

use crate::series::parts_set;
use crate::words::{check_alphabet, FibWord};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    p: u8,
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(p: u8, parts: Vec<u64>) -> Result<Self> {
        let allowed = parts_set(p)?;
        if let Some(&bad) = parts.iter().find(|part| !allowed.contains(part)) {
            return Err(Error::InvalidPart { part: bad, allowed });
        }
        Ok(Composition { p, parts })
    }

    /// Comma separated parts, e.g. `"6,5"`. The empty string is the empty
    /// composition.
    pub fn parse(p: u8, text: &str) -> Result<Self> {
        let text = text.trim();
        let parts = if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad part {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Composition::new(p, parts)
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    p: u8,
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(p: u8, bits: Vec<bool>) -> Result<Self> {
        check_alphabet(i64::from(p))?;
        let run = longest_run_of_ones(&bits);
        if run >= usize::from(p) {
            return Err(Error::InvalidBinary {
                p,
                run,
                max: usize::from(p) - 1,
            });
        }
        Ok(BinaryWord { p, bits })
    }

    pub fn parse(p: u8, text: &str) -> Result<Self> {
        let bits = text
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("bad bit {c:?} in {text:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BinaryWord::new(p, bits)
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn longest_run_of_ones(bits: &[bool]) -> usize {
    bits.split(|&b| !b).map(<[bool]>::len).max().unwrap_or(0)
}

pub fn word_to_composition(w: &FibWord) -> Composition {
    let p = w.p();
    let mut parts: Vec<u64> = Vec::new();
    for &digit in w.digits() {
        match parts.last_mut() {
            Some(sum) if digit != p => *sum += u64::from(digit),
            _ => parts.push(u64::from(digit)),
        }
    }
    Composition { p, parts }
}

pub fn composition_to_word(c: &Composition) -> Result<FibWord> {
    let p = c.p;
    let mut digits = Vec::new();
    for &part in &c.parts {
        let mut remaining = part;
        let mut next = u64::from(p);
        let start = digits.len();
        while next >= 1 && remaining >= next {
            digits.push(next as u8);
            remaining -= next;
            next -= 1;
        }
        if remaining != 0 || digits.len() == start {
            return Err(Error::InvalidPart {
                part,
                allowed: parts_set(p)?,
            });
        }
    }
    FibWord::new(p, digits)
}

pub fn word_to_binary(w: &FibWord) -> Result<BinaryWord> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let bits = w
        .digits()
        .windows(2)
        .map(|pair| pair[1] + 1 == pair[0])
        .collect();
    Ok(BinaryWord { p: w.p(), bits })
}

pub fn binary_to_word(b: &BinaryWord) -> Result<FibWord> {
    let p = b.p;
    let mut digits = Vec::with_capacity(b.bits.len() + 1);
    let mut current = p;
    digits.push(current);
    for &bit in &b.bits {
        current = if bit {
            current
                .checked_sub(1)
                .filter(|&d| d >= 1)
                .ok_or(Error::InvalidBinary {
                    p,
                    run: usize::from(p),
                    max: usize::from(p) - 1,
                })?
        } else {
            p
        };
        digits.push(current);
    }
    FibWord::new(p, digits)
}

/// Every composition of `total` with parts in the allowed set, in
/// lexicographic order of the part sequences.
pub fn compositions(p: u8, total: u64) -> Result<Vec<Composition>> {
    let allowed = parts_set(p)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill_compositions(&allowed, total, &mut stack, &mut |parts| {
        out.push(Composition {
            p,
            parts: parts.to_vec(),
        })
    });
    Ok(out)
}

fn fill_compositions(
    allowed: &[u64],
    remaining: u64,
    stack: &mut Vec<u64>,
    emit: &mut impl FnMut(&[u64]),
) {
    if remaining == 0 {
        emit(stack);
        return;
    }
    for &a in allowed.iter().take_while(|&&a| a <= remaining) {
        stack.push(a);
        fill_compositions(allowed, remaining - a, stack, emit);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::area;
    use crate::words::WordIter;
    use proptest::prelude::*;

    fn word(p: u8, s: &str) -> FibWord {
        FibWord::parse(p, s).unwrap()
    }

    #[test]
    fn word_to_composition_examples() {
        assert_eq!(word_to_composition(&word(3, "32321")).parts(), &[5, 6]);
        assert!(word_to_composition(&FibWord::empty(3)).parts().is_empty());
        assert_eq!(word_to_composition(&word(3, "333")).parts(), &[3, 3, 3]);
    }

    #[test]
    fn composition_to_word_examples() {
        let c = Composition::new(3, vec![6, 5]).unwrap();
        assert_eq!(composition_to_word(&c).unwrap().to_string(), "32132");
        let c = Composition::new(3, vec![5, 6]).unwrap();
        assert_eq!(composition_to_word(&c).unwrap().to_string(), "32321");
        assert!(matches!(
            Composition::new(3, vec![4]),
            Err(Error::InvalidPart { part: 4, .. })
        ));
        assert!(Composition::parse(3, "4").is_err());
        assert!(Composition::parse(3, "").unwrap().parts().is_empty());
    }

    #[test]
    fn binary_examples() {
        assert_eq!(
            word_to_binary(&word(3, "32323")).unwrap().to_string(),
            "1010"
        );
        assert!(word_to_binary(&word(4, "4")).unwrap().is_empty());
        assert_eq!(word_to_binary(&word(3, "321")).unwrap().to_string(), "11");
        assert!(matches!(
            word_to_binary(&FibWord::empty(3)),
            Err(Error::EmptyWord)
        ));

        let b = BinaryWord::parse(3, "1010").unwrap();
        assert_eq!(binary_to_word(&b).unwrap().to_string(), "32323");
        let b = BinaryWord::parse(4, "").unwrap();
        assert_eq!(binary_to_word(&b).unwrap().to_string(), "4");
        assert!(matches!(
            BinaryWord::parse(2, "11"),
            Err(Error::InvalidBinary { run: 2, .. })
        ));
        let b = BinaryWord::parse(3, "1011011").unwrap();
        assert_eq!(binary_to_word(&b).unwrap().to_string(), "32321321");
    }

    #[test]
    fn composition_enumeration_matches_recurrence() {
        for p in 1..=5u8 {
            let d = crate::series::area_counts(p, 30).unwrap();
            for total in 0..=30u64 {
                let all = compositions(p, total).unwrap();
                assert_eq!(num_bigint::BigUint::from(all.len()), d[total as usize]);
                for c in all {
                    let w = composition_to_word(&c).unwrap();
                    assert_eq!(area(&w), total);
                    assert_eq!(word_to_composition(&w), c);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn composition_roundtrip(p in 1u8..=6, n in 0usize..=12, pick in any::<prop::sample::Index>()) {
            let words: Vec<FibWord> = WordIter::new(p, n).collect();
            let w = &words[pick.index(words.len())];
            let c = word_to_composition(w);
            prop_assert_eq!(c.total(), area(w));
            prop_assert_eq!(&composition_to_word(&c).unwrap(), w);
        }

        #[test]
        fn binary_roundtrip(p in 1u8..=6, bits in prop::collection::vec(any::<bool>(), 0..16)) {
            match BinaryWord::new(p, bits.clone()) {
                Ok(b) => {
                    let w = binary_to_word(&b).unwrap();
                    prop_assert_eq!(w.len(), bits.len() + 1);
                    prop_assert_eq!(word_to_binary(&w).unwrap(), b);
                }
                Err(_) => prop_assert!(longest_run_of_ones(&bits) >= usize::from(p)),
            }
        }
    }
}
