use std::fmt;

use crate::bitcode::BitWord;
use crate::error::{Error, Result};

/// A bijection on coordinates {0..n-1} (reported 1-based externally).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidInput("not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// A transposition of two 0-based points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// Builds the permutation sending cycle[i] to cycle[i + 1] (0-based).
    pub fn from_cycle(degree: usize, cycle: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        for w in 0..cycle.len() {
            images[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Composition: (a.compose(b))(x) = a(b(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn order(&self) -> u64 {
        let mut ord = 1u64;
        let mut seen = vec![false; self.degree()];
        for i in 0..self.degree() {
            if seen[i] {
                continue;
            }
            let mut len = 0u64;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            ord = num_lcm(ord, len);
        }
        ord
    }

    /// Permutes the coordinates of a word: bit i of the input lands on
    /// coordinate sigma(i) of the output.
    pub fn permute_word(&self, w: &BitWord) -> BitWord {
        debug_assert_eq!(self.degree(), w.len());
        let mut out = BitWord::zero(w.len());
        for i in w.support() {
            out.set(self.images[i], true);
        }
        out
    }

    /// Whether `coords` (0-based) is fixed as a set.
    pub fn fixes_setwise(&self, coords: &[usize]) -> bool {
        let set: std::collections::HashSet<usize> = coords.iter().copied().collect();
        coords.iter().all(|&i| set.contains(&self.images[i]))
    }

    /// Whether every coordinate in `coords` is fixed individually.
    pub fn fixes_pointwise(&self, coords: &[usize]) -> bool {
        coords.iter().all(|&i| self.images[i] == i)
    }
}

fn num_lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    /// Cycle notation over 1-based points.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for i in 0..self.degree() {
            if seen[i] || self.images[i] == i {
                seen[i] = true;
                continue;
            }
            write!(f, "(")?;
            let mut j = i;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", j + 1)?;
                first = false;
                j = self.images[j];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
