//! Fundamental partition of a perfect code: coordinates grouped by their
//! value column over a dual basis, the Heden loop on partition classes,
//! and the closed-form partition of a Mollard code.

use serde::Serialize;

use crate::bitcode::{BinaryCode, BitWord};
use crate::design::SteinerLoop;
use crate::error::{Error, Result};
use crate::mollard::MollardCode;
use crate::symmetry::Permutation;

/// Classes I_0 .. I_{2^{n-rk}-1} of coordinates (1-based). The label is
/// the integer reading of the dual-basis value column; label 0 is the
/// all-zero column and its class may be empty.
#[derive(Clone, Debug, Serialize)]
pub struct FundamentalPartition {
    n: usize,
    corank: usize,
    /// classes[label] = sorted 1-based coordinates
    classes: Vec<Vec<usize>>,
}

impl FundamentalPartition {
    /// Groups coordinates by their value column over the given dual basis.
    /// The class-size formulas of a perfect code are enforced.
    pub fn from_dual_basis(n: usize, dual_basis: &[BitWord]) -> Result<Self> {
        let corank = dual_basis.len();
        if corank >= 26 {
            return Err(Error::ResourceLimit(format!(
                "corank {corank} produces too many classes"
            )));
        }
        let mut classes = vec![Vec::new(); 1 << corank];
        for i in 0..n {
            let label: usize = dual_basis
                .iter()
                .enumerate()
                .map(|(k, v)| (v.get(i) as usize) << k)
                .sum();
            classes[label].push(i + 1);
        }
        let fp = FundamentalPartition { n, corank, classes };
        fp.check_sizes()?;
        Ok(fp)
    }

    fn check_sizes(&self) -> Result<()> {
        let cells = 1usize << self.corank;
        if (self.n + 1) % cells != 0 {
            return Err(Error::InternalConsistency(format!(
                "n + 1 = {} not divisible by 2^corank = {cells}",
                self.n + 1
            )));
        }
        let size = (self.n + 1) / cells;
        for (label, class) in self.classes.iter().enumerate() {
            let expect = if label == 0 { size - 1 } else { size };
            if class.len() != expect {
                return Err(Error::InternalConsistency(format!(
                    "class {label} has {} coordinates, expected {expect}",
                    class.len()
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn corank(&self) -> usize {
        self.corank
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Sorted 1-based coordinates of class `label`.
    pub fn class(&self, label: usize) -> &[usize] {
        &self.classes[label]
    }

    /// Label of the class containing a 1-based coordinate.
    pub fn label_of(&self, coord: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.binary_search(&coord).is_ok())
            .expect("coordinate in some class")
    }

    /// Same partition (class sets equal, I_0 matching), labels aside.
    pub fn same_partition(&self, other: &FundamentalPartition) -> bool {
        if self.n != other.n || self.corank != other.corank {
            return false;
        }
        if self.classes[0] != other.classes[0] {
            return false;
        }
        let mut a: Vec<&Vec<usize>> = self.classes.iter().collect();
        let mut b: Vec<&Vec<usize>> = other.classes.iter().collect();
        a.sort();
        b.sort();
        a == b
    }
}

/// Fundamental partition of an explicit code, over its deterministic dual
/// basis.
pub fn fundamental_partition(code: &BinaryCode) -> Result<FundamentalPartition> {
    FundamentalPartition::from_dual_basis(code.len(), &code.dual_basis())
}

/// Fundamental partition of a Mollard code via its structured dual basis
/// (no enumeration).
pub fn mollard_partition_direct(mc: &MollardCode) -> Result<FundamentalPartition> {
    FundamentalPartition::from_dual_basis(mc.len(), &mc.dual_basis())
}

/// Closed-form fundamental partition of M(C, D) as the product of the
/// component partitions: I_0(M) = (I_0(C) u 0) x (I_0(D) u 0) \ (0, 0),
/// and classes I_j(C) x I_{j'}(D) with the 0-row/0-column adjoined to the
/// zero classes.
pub fn mollard_partition(
    mc: &MollardCode,
    fp_c: &FundamentalPartition,
    fp_d: &FundamentalPartition,
) -> Result<FundamentalPartition> {
    let corank = fp_c.corank() + fp_d.corank();
    if corank >= 26 {
        return Err(Error::ResourceLimit("corank too large".into()));
    }
    let coords = mc.coords();
    let mut classes = vec![Vec::new(); 1 << corank];
    for r in 0..=coords.t {
        let jc = if r == 0 { 0 } else { fp_c.label_of(r) };
        for s in 0..=coords.m {
            if (r, s) == (0, 0) {
                continue;
            }
            let jd = if s == 0 { 0 } else { fp_d.label_of(s) };
            let label = jc | (jd << fp_c.corank());
            classes[label].push(coords.index0(r, s) + 1);
        }
    }
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    let fp = FundamentalPartition {
        n: mc.len(),
        corank,
        classes,
    };
    fp.check_sizes()?;
    Ok(fp)
}

/// Lemma-2 predicate: the permutation fixes I_0 setwise and permutes the
/// nonzero classes among themselves.
pub fn respects_partition(fp: &FundamentalPartition, perm: &Permutation) -> bool {
    if perm.degree() != fp.n() {
        return false;
    }
    for label in 0..fp.class_count() {
        let class = fp.class(label);
        let Some(&first) = class.first() else {
            continue;
        };
        let target = fp.label_of(perm.apply(first - 1) + 1);
        if label == 0 && target != 0 {
            return false;
        }
        if label != 0 && target == 0 {
            return false;
        }
        if !class
            .iter()
            .all(|&c| fp.label_of(perm.apply(c - 1) + 1) == target)
        {
            return false;
        }
    }
    true
}

/// The induced operation on class labels (Heden): I_j *' I_{j'} is the
/// class containing r * r' for representatives, with the loop identity
/// mapping to label 0.
#[derive(Clone, Debug)]
pub struct HedenTable {
    size: usize,
    table: Vec<usize>,
}

impl HedenTable {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, j: usize, j2: usize) -> usize {
        self.table[j * self.size + j2]
    }

    /// Identity 0, self-inverse elements, commutativity and associativity:
    /// an elementary abelian 2-group on the labels.
    pub fn is_elementary_abelian_2(&self) -> bool {
        let k = self.size;
        for j in 0..k {
            if self.get(0, j) != j || self.get(j, 0) != j || self.get(j, j) != 0 {
                return false;
            }
            for j2 in 0..k {
                if self.get(j, j2) != self.get(j2, j) {
                    return false;
                }
                for j3 in 0..k {
                    if self.get(self.get(j, j2), j3) != self.get(j, self.get(j2, j3)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Builds the class-label operation from the Steiner loop of STS(code).
/// Every representative pair must land in the same class; a violation is
/// reported as a theory-violation error. Pairs with an empty class (only
/// possible for label 0) default to the identity row.
pub fn heden_loop(fp: &FundamentalPartition, lp: &SteinerLoop) -> Result<HedenTable> {
    if lp.order() != fp.n() {
        return Err(Error::InvalidInput("loop and partition order mismatch".into()));
    }
    let k = fp.class_count();
    let mut table = vec![usize::MAX; k * k];
    for j in 0..k {
        for j2 in 0..k {
            let mut result: Option<usize> = None;
            for &r in fp.class(j) {
                for &r2 in fp.class(j2) {
                    let v = lp.star(r, r2);
                    let label = if v == 0 { 0 } else { fp.label_of(v) };
                    match result {
                        None => result = Some(label),
                        Some(prev) if prev != label => {
                            return Err(Error::TheoryViolation(format!(
                                "class product I_{j} *' I_{j2} is not well defined: \
                                 representatives give labels {prev} and {label}"
                            )));
                        }
                        _ => {}
                    }
                }
            }
            // Empty representative set: identity convention on label 0.
            let value = result.unwrap_or(if j == 0 { j2 } else { j });
            table[j * k + j2] = value;
        }
    }
    Ok(HedenTable { size: k, table })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitcode::{hamming_code, vasilev, Lambda};
    use crate::design::sts_of_code;
    use crate::mollard::mollard;

    #[test]
    fn repetition_code_partition_is_three_singletons() {
        let fp = fundamental_partition(&hamming_code(2).unwrap()).unwrap();
        assert_eq!(fp.corank(), 2);
        assert!(fp.class(0).is_empty());
        let mut seen: Vec<usize> = (1..4).flat_map(|j| fp.class(j).to_vec()).collect();
        seen.sort_unstable();
        assert_eq!(seen, vec![1, 2, 3]);
    }

    #[test]
    fn hamming7_partition_is_singletons() {
        let fp = fundamental_partition(&hamming_code(3).unwrap()).unwrap();
        assert_eq!(fp.corank(), 3);
        assert_eq!(fp.class_count(), 8);
        assert!(fp.class(0).is_empty());
        for j in 1..8 {
            assert_eq!(fp.class(j).len(), 1);
        }
    }

    #[test]
    fn nonlinear_vasilev_partition_sizes() {
        let h7 = hamming_code(3).unwrap();
        let v = vasilev(&h7, &Lambda::nonlinear(&h7, 1).unwrap()).unwrap();
        assert_eq!(v.rank(), 12);
        let fp = fundamental_partition(&v).unwrap();
        assert_eq!(fp.class_count(), 8);
        assert_eq!(fp.class(0).len(), 1);
        for j in 1..8 {
            assert_eq!(fp.class(j).len(), 2);
        }
    }

    #[test]
    fn identity_respects_any_partition() {
        let fp = fundamental_partition(&hamming_code(3).unwrap()).unwrap();
        assert!(respects_partition(&fp, &Permutation::identity(7)));
    }

    #[test]
    fn class_breaking_transposition_is_detected() {
        let h7 = hamming_code(3).unwrap();
        let v = vasilev(&h7, &Lambda::nonlinear(&h7, 1).unwrap()).unwrap();
        let fp = fundamental_partition(&v).unwrap();
        // swap the I_0 coordinate with a coordinate outside it: a nonzero
        // class then straddles two labels
        let inside = fp.class(0)[0];
        let outside = (1..=15).find(|&c| fp.label_of(c) != 0).unwrap();
        let perm = Permutation::transposition(15, inside - 1, outside - 1);
        assert!(!respects_partition(&fp, &perm));
    }

    #[test]
    fn heden_table_of_repetition_code_is_klein_four() {
        let code = hamming_code(2).unwrap();
        let fp = fundamental_partition(&code).unwrap();
        let lp = sts_of_code(&code).unwrap().loop_of();
        let table = heden_loop(&fp, &lp).unwrap();
        assert_eq!(table.size(), 4);
        assert!(table.is_elementary_abelian_2());
        // three nonzero labels multiply like Z2 x Z2
        let (a, b) = (1, 2);
        let c = table.get(a, b);
        assert!(c != 0 && c != a && c != b);
    }

    #[test]
    fn heden_table_of_hamming7_is_z2_cubed() {
        let code = hamming_code(3).unwrap();
        let fp = fundamental_partition(&code).unwrap();
        let lp = sts_of_code(&code).unwrap().loop_of();
        let table = heden_loop(&fp, &lp).unwrap();
        assert_eq!(table.size(), 8);
        assert!(table.is_elementary_abelian_2());
    }

    #[test]
    fn heden_table_of_nonlinear_vasilev() {
        let h7 = hamming_code(3).unwrap();
        let v = vasilev(&h7, &Lambda::nonlinear(&h7, 1).unwrap()).unwrap();
        let fp = fundamental_partition(&v).unwrap();
        let lp = sts_of_code(&v).unwrap().loop_of();
        let table = heden_loop(&fp, &lp).unwrap();
        assert!(table.is_elementary_abelian_2());
        for j in 0..table.size() {
            assert_eq!(table.get(j, j), 0); // I_j *' I_j = I_0
        }
    }

    #[test]
    fn mollard_partition_formula_matches_direct_at_t3_m3() {
        let rep = hamming_code(2).unwrap();
        let mc = mollard(&rep, &rep).unwrap();
        let fp_c = fundamental_partition(&rep).unwrap();
        let fp_d = fundamental_partition(&rep).unwrap();
        let formula = mollard_partition(&mc, &fp_c, &fp_d).unwrap();
        let direct = mollard_partition_direct(&mc).unwrap();
        assert!(formula.same_partition(&direct));
        assert!(formula.class(0).is_empty());
        assert_eq!(formula.class_count(), 16);
        // also equals the enumerated code's partition
        let enumerated = fundamental_partition(&mc.enumerate(1 << 12).unwrap()).unwrap();
        assert!(formula.same_partition(&enumerated));
    }
}
