//! Steiner triple systems: quasigroup/loop algebra, Pasch configuration
//! census, nu-linearity, projectivity, and automorphism search.

mod auto;
mod pasch;

pub use auto::automorphisms;

use std::collections::HashSet;

use crate::bitcode::{BinaryCode, BitWord, Gf2Basis};
use crate::error::{Error, Result};

/// A Steiner triple system on points 1..=n: every unordered pair of
/// distinct points lies in exactly one triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSystem {
    order: usize,
    triples: Vec<[usize; 3]>,
    /// third[i * (n + 1) + j] = k if (i, j, k) is a triple, else 0.
    third: Vec<u32>,
}

impl TripleSystem {
    pub fn new(order: usize, mut triples: Vec<[usize; 3]>) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidInput("order must be at least 1".into()));
        }
        for t in triples.iter_mut() {
            t.sort_unstable();
            if t[0] < 1 || t[2] > order || t[0] == t[1] || t[1] == t[2] {
                return Err(Error::CorruptDesign(format!("invalid triple {t:?}")));
            }
        }
        triples.sort_unstable();
        triples.dedup();

        let n1 = order + 1;
        let mut third = vec![0u32; n1 * n1];
        for t in &triples {
            for (a, b, c) in [(t[0], t[1], t[2]), (t[0], t[2], t[1]), (t[1], t[2], t[0])] {
                if third[a * n1 + b] != 0 {
                    return Err(Error::CorruptDesign(format!(
                        "pair ({a}, {b}) covered more than once"
                    )));
                }
                third[a * n1 + b] = c as u32;
                third[b * n1 + a] = c as u32;
            }
        }
        for i in 1..=order {
            for j in i + 1..=order {
                if third[i * n1 + j] == 0 {
                    return Err(Error::CorruptDesign(format!("pair ({i}, {j}) not covered")));
                }
            }
        }
        Ok(TripleSystem {
            order,
            triples,
            third,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Sorted triples over points 1..=n.
    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn contains_triple(&self, t: [usize; 3]) -> bool {
        let mut t = t;
        t.sort_unstable();
        t[0] != t[1] && t[1] != t[2] && self.third(t[0], t[1]) == Some(t[2])
    }

    /// The third point of the triple through a pair of distinct points.
    pub fn third(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.third[i * (self.order + 1) + j];
        if k == 0 {
            None
        } else {
            Some(k as usize)
        }
    }

    /// Quasigroup product: the third point of the triple through {i, j}
    /// when i != j, and i itself when i = j.
    pub fn quasigroup_mul(&self, i: usize, j: usize) -> Result<usize> {
        if i < 1 || i > self.order || j < 1 || j > self.order {
            return Err(Error::InvalidInput(format!("point out of range: {i}, {j}")));
        }
        if i == j {
            return Ok(i);
        }
        self.third(i, j)
            .ok_or_else(|| Error::CorruptDesign(format!("pair ({i}, {j}) not covered")))
    }

    pub fn loop_of(&self) -> SteinerLoop {
        let n1 = self.order + 1;
        let mut table = vec![0u32; n1 * n1];
        for i in 1..=self.order {
            table[i] = i as u32; // 0 * i
            table[i * n1] = i as u32; // i * 0
            for j in 1..=self.order {
                if i != j {
                    table[i * n1 + j] = self.third[i * n1 + j];
                }
            }
        }
        SteinerLoop {
            order: self.order,
            table,
        }
    }

    /// Triple supports as GF(2) incidence vectors of length n.
    pub fn incidence_words(&self) -> Vec<BitWord> {
        self.triples
            .iter()
            .map(|t| BitWord::from_support(self.order, t.iter().map(|&p| p - 1)))
            .collect()
    }

    pub fn incidence_basis(&self) -> Gf2Basis {
        Gf2Basis::from_words(self.order, &self.incidence_words())
    }

    /// True iff the GF(2) span of the triple incidence vectors is a perfect
    /// code of length n. Decided structurally: the span must have dimension
    /// n - log2(n + 1) and its dual must have pairwise-distinct nonzero
    /// coordinate columns (no weight-1 or weight-2 words in the span).
    pub fn is_projective(&self) -> bool {
        let n = self.order;
        if !(n + 1).is_power_of_two() {
            return false;
        }
        let logn1 = (n + 1).trailing_zeros() as usize;
        let basis = self.incidence_basis();
        if basis.rank() != n - logn1 {
            return false;
        }
        let dual = basis.null_space();
        let mut columns = HashSet::with_capacity(n);
        for i in 0..n {
            let label: u64 = dual
                .iter()
                .enumerate()
                .map(|(k, v)| (v.get(i) as u64) << k)
                .sum();
            if label == 0 || !columns.insert(label) {
                return false;
            }
        }
        true
    }

    /// The triples fully contained in `points`, relabeled 1..|points| by
    /// increasing original index. Errors when the restriction is not a
    /// Steiner system.
    pub fn subdesign(&self, points: &[usize]) -> Result<TripleSystem> {
        let mut sorted: Vec<usize> = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().any(|&p| p < 1 || p > self.order) {
            return Err(Error::InvalidInput("subdesign point out of range".into()));
        }
        let mut relabel = vec![0usize; self.order + 1];
        for (new, &old) in sorted.iter().enumerate() {
            relabel[old] = new + 1;
        }
        let inside: Vec<[usize; 3]> = self
            .triples
            .iter()
            .filter(|t| t.iter().all(|&p| relabel[p] != 0))
            .map(|t| [relabel[t[0]], relabel[t[1]], relabel[t[2]]])
            .collect();
        TripleSystem::new(sorted.len(), inside)
            .map_err(|e| Error::NotClosed(format!("restriction is not Steiner: {e}")))
    }

    /// Number of Pasch configurations incident to point i.
    pub fn pasch_count_at(&self, i: usize) -> usize {
        pasch::count_at(self, i)
    }

    /// Total number of Pasch configurations; each is incident to exactly
    /// its 6 points.
    pub fn pasch_total(&self) -> usize {
        let sum: usize = (1..=self.order).map(|i| self.pasch_count_at(i)).sum();
        debug_assert_eq!(sum % 6, 0);
        sum / 6
    }

    /// Points whose Pasch count attains the maximum (n - 1)(n - 3) / 4.
    pub fn lin_nu(&self) -> Vec<usize> {
        let threshold = self.nu_threshold();
        (1..=self.order)
            .filter(|&i| self.pasch_count_at(i) == threshold)
            .collect()
    }

    pub fn nu_threshold(&self) -> usize {
        (self.order - 1) * (self.order.saturating_sub(3)) / 4
    }

    /// Equivalence of nu-linearity with the two quasigroup identities:
    /// (l.s).(l.s') = s.s' and l.(s.s') = (l.s).s' for all distinct
    /// s, s' != l. The three returned booleans are always equal.
    pub fn check_nu_identities(&self, l: usize) -> Result<(bool, bool, bool)> {
        pasch::check_nu_identities(self, l)
    }

    /// The full automorphism group (optionally the setwise stabilizer of
    /// `setwise_fixed`), as the explicit list of elements.
    pub fn automorphism_elements(
        &self,
        setwise_fixed: Option<&[usize]>,
        node_budget: u64,
    ) -> Result<Vec<crate::symmetry::Permutation>> {
        automorphisms(self, setwise_fixed, node_budget)
    }
}

/// The Steiner loop of a triple system: carrier {0} u {1..n} with
/// i * j = third(i, j), i * i = 0 and identity 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerLoop {
    order: usize,
    table: Vec<u32>,
}

impl SteinerLoop {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Loop product over the carrier {0, 1, ..., n}.
    pub fn star(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= self.order && j <= self.order);
        self.table[i * (self.order + 1) + j] as usize
    }

    /// Whether `subset` (not containing 0) together with 0 is closed
    /// under the loop operation.
    pub fn closed_with_zero(&self, subset: &[usize]) -> bool {
        let set: HashSet<usize> = subset.iter().copied().chain(std::iter::once(0)).collect();
        set.iter()
            .all(|&a| set.iter().all(|&b| set.contains(&self.star(a, b))))
    }
}

/// The supports of the weight-3 codewords of a perfect code containing
/// zero, as a Steiner triple system.
pub fn sts_of_code(code: &BinaryCode) -> Result<TripleSystem> {
    let triples: Vec<[usize; 3]> = code
        .weight3_words()
        .iter()
        .map(|w| {
            let s = w.support();
            [s[0] + 1, s[1] + 1, s[2] + 1]
        })
        .collect();
    TripleSystem::new(code.len(), triples)
        .map_err(|e| Error::CorruptCode(format!("weight-3 words do not form an STS: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitcode::hamming_code;

    pub(crate) fn fano() -> TripleSystem {
        sts_of_code(&hamming_code(3).unwrap()).unwrap()
    }

    fn trivial3() -> TripleSystem {
        TripleSystem::new(3, vec![[1, 2, 3]]).unwrap()
    }

    #[test]
    fn repetition_code_yields_single_triple() {
        let c = hamming_code(2).unwrap();
        let ts = sts_of_code(&c).unwrap();
        assert_eq!(ts.triples(), &[[1, 2, 3]]);
    }

    #[test]
    fn fano_has_seven_triples() {
        let ts = fano();
        assert_eq!(ts.order(), 7);
        assert_eq!(ts.triples().len(), 7);
    }

    #[test]
    fn hamming15_yields_35_triples() {
        let ts = sts_of_code(&hamming_code(4).unwrap()).unwrap();
        assert_eq!(ts.triples().len(), 35);
    }

    #[test]
    fn steiner_violations_are_rejected() {
        assert!(TripleSystem::new(7, vec![[1, 2, 3]]).is_err()); // pairs uncovered
        assert!(TripleSystem::new(3, vec![[1, 2, 2]]).is_err());
    }

    #[test]
    fn quasigroup_and_loop_agree_with_triples() {
        let ts = trivial3();
        assert_eq!(ts.quasigroup_mul(1, 2).unwrap(), 3);
        assert_eq!(ts.quasigroup_mul(2, 2).unwrap(), 2);
        let l = ts.loop_of();
        assert_eq!(l.star(1, 2), 3);
        assert_eq!(l.star(1, 1), 0);
        assert_eq!(l.star(1, 0), 1);
        assert_eq!(l.star(0, 2), 2);
    }

    #[test]
    fn fano_loop_table_is_commutative_with_zero_diagonal() {
        let l = fano().loop_of();
        for i in 0..=7 {
            assert_eq!(l.star(i, i), 0);
            assert_eq!(l.star(i, 0), i);
            for j in 0..=7 {
                assert_eq!(l.star(i, j), l.star(j, i));
            }
        }
    }

    #[test]
    fn projectivity_of_small_systems() {
        assert!(trivial3().is_projective());
        assert!(fano().is_projective());
        let sts15 = sts_of_code(&hamming_code(4).unwrap()).unwrap();
        assert!(sts15.is_projective());
    }

    #[test]
    fn subdesign_of_fano_on_all_points_is_fano() {
        let ts = fano();
        let all: Vec<usize> = (1..=7).collect();
        assert_eq!(ts.subdesign(&all).unwrap(), ts);
    }

    #[test]
    fn subdesign_on_one_triple() {
        let ts = fano();
        let t = ts.triples()[0];
        let sub = ts.subdesign(&t).unwrap();
        assert_eq!(sub.triples(), &[[1, 2, 3]]);
    }

    #[test]
    fn subdesign_on_non_closed_points_fails() {
        let ts = fano();
        // two points of a triple plus an unrelated point: the pair inside
        // the missing triple is uncovered
        let t = ts.triples()[0];
        let other = (1..=7).find(|p| !t.contains(p)).unwrap();
        assert!(ts.subdesign(&[t[0], t[1], other]).is_err());
    }
}
