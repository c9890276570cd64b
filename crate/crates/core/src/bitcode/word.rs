use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};

const BLOCK_BITS: usize = 64;

/// A fixed-length binary vector over GF(2), packed into machine words.
///
/// Coordinates are 0-based internally; file formats and reports use 1-based
/// indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: usize,
    blocks: Vec<u64>,
}

impl BitWord {
    pub fn zero(len: usize) -> Self {
        assert!(len >= 1, "BitWord length must be positive");
        BitWord {
            len,
            blocks: vec![0; (len + BLOCK_BITS - 1) / BLOCK_BITS],
        }
    }

    /// Builds a word from the 0-based indices of its one-bits.
    pub fn from_support(len: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut w = BitWord::zero(len);
        for i in support {
            w.set(i, true);
        }
        w
    }

    /// Parses a 0/1 string: the leftmost character is coordinate 0 (the
    /// 1-based coordinate 1 of external reports).
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Parse("empty codeword string".into()));
        }
        let mut w = BitWord::zero(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => w.set(i, true),
                _ => return Err(Error::Parse(format!("invalid bit character {ch:?}"))),
            }
        }
        Ok(w)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.blocks[i / BLOCK_BITS] >> (i % BLOCK_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % BLOCK_BITS);
        if value {
            self.blocks[i / BLOCK_BITS] |= mask;
        } else {
            self.blocks[i / BLOCK_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / BLOCK_BITS] ^= 1u64 << (i % BLOCK_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn parity(&self) -> bool {
        self.weight() % 2 == 1
    }

    pub fn distance(&self, other: &BitWord) -> usize {
        assert_eq!(self.len, other.len, "length mismatch");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Parity of the coordinate-wise product, i.e. the GF(2) inner product.
    pub fn dot(&self, other: &BitWord) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// 0-based index of the lowest set bit, if any.
    pub fn lowest_set(&self) -> Option<usize> {
        for (bi, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(bi * BLOCK_BITS + b.trailing_zeros() as usize);
            }
        }
        None
    }

    /// 0-based indices of the one-bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (bi, &b) in self.blocks.iter().enumerate() {
            let mut bits = b;
            while bits != 0 {
                out.push(bi * BLOCK_BITS + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Restriction of the word to the given 0-based coordinates, in the
    /// order listed.
    pub fn restrict(&self, coords: &[usize]) -> BitWord {
        let mut w = BitWord::zero(coords.len());
        for (j, &i) in coords.iter().enumerate() {
            if self.get(i) {
                w.set(j, true);
            }
        }
        w
    }
}

impl AddAssign<&BitWord> for BitWord {
    fn add_assign(&mut self, rhs: &BitWord) {
        assert_eq!(self.len, rhs.len, "length mismatch");
        for (a, b) in self.blocks.iter_mut().zip(&rhs.blocks) {
            *a ^= b;
        }
    }
}

impl Add<&BitWord> for &BitWord {
    type Output = BitWord;

    fn add(self, rhs: &BitWord) -> BitWord {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w = BitWord::parse("0110101").unwrap();
        assert_eq!(w.to_string(), "0110101");
        assert_eq!(w.weight(), 4);
        assert_eq!(w.support(), vec![1, 2, 4, 6]);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(BitWord::parse("01x").is_err());
        assert!(BitWord::parse("").is_err());
    }

    #[test]
    fn dot_and_distance() {
        let a = BitWord::parse("1101").unwrap();
        let b = BitWord::parse("0111").unwrap();
        assert_eq!(a.distance(&b), 2);
        assert!(!a.dot(&b)); // common support {2,4} -> even
    }

    #[test]
    fn restrict_relabels() {
        let w = BitWord::parse("10110").unwrap();
        assert_eq!(w.restrict(&[0, 2, 3]).to_string(), "111");
        assert_eq!(w.restrict(&[1, 4]).to_string(), "00");
    }

    proptest! {
        #[test]
        fn addition_is_an_involution(bits_a in proptest::collection::vec(any::<bool>(), 1..100),
                                     bits_b in proptest::collection::vec(any::<bool>(), 1..100)) {
            let n = bits_a.len().min(bits_b.len());
            let a = BitWord::from_support(n, (0..n).filter(|&i| bits_a[i]));
            let b = BitWord::from_support(n, (0..n).filter(|&i| bits_b[i]));
            let back = &(&a + &b) + &b;
            prop_assert_eq!(back, a);
        }

        #[test]
        fn weight_matches_support(bits in proptest::collection::vec(any::<bool>(), 1..200)) {
            let n = bits.len();
            let w = BitWord::from_support(n, (0..n).filter(|&i| bits[i]));
            prop_assert_eq!(w.weight(), w.support().len());
            prop_assert_eq!(w.parity(), w.weight() % 2 == 1);
        }
    }
}
