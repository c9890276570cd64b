//! Row-reduction over GF(2) with a deterministic pivot order (lowest
//! coordinate first), so that bases, duals and partition labels are
//! reproducible across runs.

use super::word::BitWord;
use crate::error::{Error, Result};

/// A reduced row-echelon basis over GF(2), kept sorted by pivot index.
#[derive(Clone, Debug)]
pub struct Gf2Basis {
    len: usize,
    rows: Vec<BitWord>,
    pivots: Vec<usize>,
}

impl Gf2Basis {
    pub fn new(len: usize) -> Self {
        Gf2Basis {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_words<'a>(len: usize, words: impl IntoIterator<Item = &'a BitWord>) -> Self {
        let mut b = Gf2Basis::new(len);
        for w in words {
            b.insert(w);
        }
        b
    }

    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `w` against the basis; the remainder is zero iff `w` is in
    /// the span.
    pub fn reduce(&self, w: &BitWord) -> BitWord {
        let mut r = w.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r += row;
            }
        }
        r
    }

    pub fn contains(&self, w: &BitWord) -> bool {
        self.reduce(w).is_zero()
    }

    /// Inserts a word, returning true if it enlarged the span. The basis is
    /// kept in reduced row-echelon form.
    pub fn insert(&mut self, w: &BitWord) -> bool {
        assert_eq!(w.len(), self.len, "length mismatch");
        let r = self.reduce(w);
        let Some(p) = r.lowest_set() else {
            return false;
        };
        // Back-substitute into earlier rows, then insert sorted by pivot.
        for row in self.rows.iter_mut() {
            if row.get(p) {
                *row += &r;
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(pos, r);
        self.pivots.insert(pos, p);
        true
    }

    /// Every word in the span, in a deterministic order. Errors when the
    /// span is larger than `budget` words.
    pub fn span_words(&self, budget: usize) -> Result<Vec<BitWord>> {
        if self.rank() >= usize::BITS as usize || (1usize << self.rank()) > budget {
            return Err(Error::ResourceLimit(format!(
                "span of dimension {} exceeds budget {}",
                self.rank(),
                budget
            )));
        }
        let mut words = Vec::with_capacity(1 << self.rank());
        words.push(BitWord::zero(self.len));
        for row in &self.rows {
            for i in 0..words.len() {
                words.push(&words[i] + row);
            }
        }
        words.sort();
        Ok(words)
    }

    /// A basis of the orthogonal complement of the span.
    pub fn null_space(&self) -> Vec<BitWord> {
        let pivot_set: std::collections::HashSet<usize> = self.pivots.iter().copied().collect();
        let mut out = Vec::with_capacity(self.len - self.rank());
        for f in 0..self.len {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = BitWord::zero(self.len);
            v.set(f, true);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if row.get(f) {
                    v.set(p, true);
                }
            }
            out.push(v);
        }
        out
    }
}
