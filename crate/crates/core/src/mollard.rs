//! The Mollard construction for codes and designs: grid coordinates,
//! parity-check functions p1/p2, constructive enumeration, unique
//! decomposition, structured dual, STS partition, and kernel/mu machinery.
//!
//! Codes above the explicit-enumeration budget are never materialized;
//! membership and all invariants route through the p1/p2 characterization.

use std::collections::HashSet;

use crate::bitcode::{BinaryCode, BitWord, Gf2Basis, MAX_EXPLICIT_WORDS};
use crate::design::{sts_of_code, TripleSystem};
use crate::error::{Error, Result};
use crate::symmetry::Permutation;

/// The bijection between grid pairs (r, s) in {0..t} x {0..m} \ (0, 0) and
/// linear coordinates 1..tm+t+m; fixed layout index(r, s) = r(m+1) + s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridCoords {
    pub t: usize,
    pub m: usize,
}

impl GridCoords {
    pub fn new(t: usize, m: usize) -> Self {
        GridCoords { t, m }
    }

    pub fn len(&self) -> usize {
        self.t * self.m + self.t + self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 0-based bit index of the pair (r, s); (0, 0) is not a coordinate.
    #[inline]
    pub fn index0(&self, r: usize, s: usize) -> usize {
        debug_assert!(r <= self.t && s <= self.m && (r, s) != (0, 0));
        r * (self.m + 1) + s - 1
    }

    /// Inverse of `index0`.
    #[inline]
    pub fn pair(&self, idx0: usize) -> (usize, usize) {
        debug_assert!(idx0 < self.len());
        let lin = idx0 + 1;
        (lin / (self.m + 1), lin % (self.m + 1))
    }
}

/// Row parity function: p1(z)_r = sum_s z_{r,s} for r = 1..t.
pub fn p1(z: &BitWord, coords: GridCoords) -> Result<BitWord> {
    check_len(z, coords)?;
    let mut out = BitWord::zero(coords.t);
    for i in z.support() {
        let (r, _) = coords.pair(i);
        if r >= 1 {
            out.flip(r - 1);
        }
    }
    Ok(out)
}

/// Column parity function: p2(z)_s = sum_r z_{r,s} for s = 1..m.
pub fn p2(z: &BitWord, coords: GridCoords) -> Result<BitWord> {
    check_len(z, coords)?;
    let mut out = BitWord::zero(coords.m);
    for i in z.support() {
        let (_, s) = coords.pair(i);
        if s >= 1 {
            out.flip(s - 1);
        }
    }
    Ok(out)
}

fn check_len(z: &BitWord, coords: GridCoords) -> Result<()> {
    if z.len() != coords.len() {
        return Err(Error::InvalidInput(format!(
            "word length {} does not match grid length {}",
            z.len(),
            coords.len()
        )));
    }
    Ok(())
}

/// The Mollard code M(C, D) = {z : p1(z) in C, p2(z) in D} (the zero-f
/// case), kept structured: component codes plus their kernels.
#[derive(Clone, Debug)]
pub struct MollardCode {
    c: BinaryCode,
    d: BinaryCode,
    kernel_c: BinaryCode,
    kernel_d: BinaryCode,
    coords: GridCoords,
}

/// Builds M(C, D) from perfect component codes containing zero.
pub fn mollard(c: &BinaryCode, d: &BinaryCode) -> Result<MollardCode> {
    if !c.is_perfect() || !c.contains_zero() {
        return Err(Error::InvalidParameter(
            "C must be a perfect code containing zero".into(),
        ));
    }
    if !d.is_perfect() || !d.contains_zero() {
        return Err(Error::InvalidParameter(
            "D must be a perfect code containing zero".into(),
        ));
    }
    let coords = GridCoords::new(c.len(), d.len());
    Ok(MollardCode {
        kernel_c: c.kernel(),
        kernel_d: d.kernel(),
        c: c.clone(),
        d: d.clone(),
        coords,
    })
}

impl MollardCode {
    pub fn c(&self) -> &BinaryCode {
        &self.c
    }

    pub fn d(&self) -> &BinaryCode {
        &self.d
    }

    pub fn t(&self) -> usize {
        self.coords.t
    }

    pub fn m(&self) -> usize {
        self.coords.m
    }

    pub fn coords(&self) -> GridCoords {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn size(&self) -> u128 {
        (self.c.size() as u128) * (self.d.size() as u128)
            << (self.coords.t * self.coords.m)
    }

    pub fn membership(&self, z: &BitWord) -> Result<bool> {
        Ok(self.c.contains(&p1(z, self.coords)?) && self.d.contains(&p2(z, self.coords)?))
    }

    /// x^1: x on the column-0 coordinates (r, 0), zeros elsewhere.
    pub fn embed1(&self, x: &BitWord) -> BitWord {
        let mut out = BitWord::zero(self.len());
        for i in x.support() {
            out.set(self.coords.index0(i + 1, 0), true);
        }
        out
    }

    /// y^2: y on the row-0 coordinates (0, s), zeros elsewhere.
    pub fn embed2(&self, y: &BitWord) -> BitWord {
        let mut out = BitWord::zero(self.len());
        for i in y.support() {
            out.set(self.coords.index0(0, i + 1), true);
        }
        out
    }

    /// The weight-3 member e_{r,s} + e_{0,s} + e_{r,0} attached to an
    /// interior grid cell.
    pub fn cell_word(&self, r: usize, s: usize) -> BitWord {
        debug_assert!(r >= 1 && s >= 1);
        BitWord::from_support(
            self.len(),
            [
                self.coords.index0(r, s),
                self.coords.index0(0, s),
                self.coords.index0(r, 0),
            ],
        )
    }

    /// Unique decomposition of a member: z = x^1 + y^2 + sum of cell words
    /// over the interior cells where z is one.
    pub fn decompose(&self, z: &BitWord) -> Result<(BitWord, BitWord, Vec<(usize, usize)>)> {
        if !self.membership(z)? {
            return Err(Error::InvalidInput("word is not a member of M(C, D)".into()));
        }
        let x = p1(z, self.coords)?;
        let y = p2(z, self.coords)?;
        let cells: Vec<(usize, usize)> = z
            .support()
            .into_iter()
            .map(|i| self.coords.pair(i))
            .filter(|&(r, s)| r >= 1 && s >= 1)
            .collect();
        debug_assert_eq!(self.recompose(&x, &y, &cells), *z);
        Ok((x, y, cells))
    }

    pub fn recompose(&self, x: &BitWord, y: &BitWord, cells: &[(usize, usize)]) -> BitWord {
        let mut z = &self.embed1(x) + &self.embed2(y);
        for &(r, s) in cells {
            z += &self.cell_word(r, s);
        }
        z
    }

    /// Explicit enumeration via the Lemma-1 representation; errors above
    /// the budget.
    pub fn enumerate(&self, budget: usize) -> Result<BinaryCode> {
        if self.size() > budget.min(MAX_EXPLICIT_WORDS) as u128 {
            return Err(Error::ResourceLimit(format!(
                "Mollard code with {} words exceeds the enumeration budget",
                self.size()
            )));
        }
        let cells: Vec<BitWord> = (1..=self.coords.t)
            .flat_map(|r| (1..=self.coords.m).map(move |s| (r, s)))
            .map(|(r, s)| self.cell_word(r, s))
            .collect();
        let mut words = Vec::with_capacity(self.size() as usize);
        for x in self.c.words() {
            for y in self.d.words() {
                let base = &self.embed1(x) + &self.embed2(y);
                // iterate subsets of the cell set by gray code
                let mut cur = base;
                words.push(cur.clone());
                for g in 1u64..1 << cells.len() {
                    let flip = (g ^ (g >> 1)) ^ ((g - 1) ^ ((g - 1) >> 1));
                    cur += &cells[flip.trailing_zeros() as usize];
                    words.push(cur.clone());
                }
            }
        }
        BinaryCode::from_words(self.len(), words)
    }

    /// A generating family of the linear span: spans of the components,
    /// embedded, plus all cell words.
    pub fn span_basis(&self) -> Gf2Basis {
        let mut basis = Gf2Basis::new(self.len());
        for x in self.c.basis().rows() {
            basis.insert(&self.embed1(x));
        }
        for y in self.d.basis().rows() {
            basis.insert(&self.embed2(y));
        }
        for r in 1..=self.coords.t {
            for s in 1..=self.coords.m {
                basis.insert(&self.cell_word(r, s));
            }
        }
        basis
    }

    /// rank(M) = rank(C) + rank(D) + tm, computed by elimination over the
    /// structured generating family.
    pub fn rank(&self) -> usize {
        self.span_basis().rank()
    }

    /// Basis of the dual per the p1/p2 characterization: every u in the
    /// dual of C lifts to the word with support supp(u) x {0..m}, every v
    /// in the dual of D to {0..t} x supp(v).
    pub fn dual_basis(&self) -> Vec<BitWord> {
        let mut out = Vec::new();
        for u in self.c.dual_basis() {
            let mut w = BitWord::zero(self.len());
            for i in u.support() {
                for s in 0..=self.coords.m {
                    w.set(self.coords.index0(i + 1, s), true);
                }
            }
            out.push(w);
        }
        for v in self.d.dual_basis() {
            let mut w = BitWord::zero(self.len());
            for i in v.support() {
                for r in 0..=self.coords.t {
                    w.set(self.coords.index0(r, i + 1), true);
                }
            }
            out.push(w);
        }
        out
    }

    /// The dual code enumerated explicitly (its dimension is only
    /// (t - rk C) + (m - rk D)).
    pub fn dual_code(&self) -> Result<BinaryCode> {
        let basis = Gf2Basis::from_words(self.len(), &self.dual_basis());
        BinaryCode::from_words(self.len(), basis.span_words(MAX_EXPLICIT_WORDS)?)
    }

    /// Kernel membership via the p1/p2 characterization: z is a kernel
    /// member iff p1(z) in Ker(C) and p2(z) in Ker(D).
    pub fn kernel_membership(&self, z: &BitWord) -> Result<bool> {
        if !self.membership(z)? {
            return Err(Error::InvalidInput("word is not a member of M(C, D)".into()));
        }
        Ok(self.kernel_c.contains(&p1(z, self.coords)?)
            && self.kernel_d.contains(&p2(z, self.coords)?))
    }

    pub fn kernel_dimension(&self) -> usize {
        self.kernel_c.rank() + self.kernel_d.rank() + self.coords.t * self.coords.m
    }

    /// STS(M(C, D)) built structurally from the component systems.
    pub fn sts(&self) -> Result<TripleSystem> {
        mollard_sts(&sts_of_code(&self.c)?, &sts_of_code(&self.d)?)
    }

    /// Perfection via the cardinality identity plus a low-weight scan: no
    /// weight-1 or weight-2 members, and the weight-3 members form an STS.
    pub fn is_perfect(&self) -> Result<bool> {
        let n = self.len() as u128;
        if self.size() * (n + 1) != 1u128 << self.len() {
            return Ok(false);
        }
        for i in 0..self.len() {
            let e = BitWord::from_support(self.len(), [i]);
            if self.membership(&e)? {
                return Ok(false);
            }
            for j in i + 1..self.len() {
                let mut w = e.clone();
                w.set(j, true);
                if self.membership(&w)? {
                    return Ok(false);
                }
            }
        }
        Ok(self.sts().is_ok())
    }

    /// Closed-form mu value of a grid coordinate, from the component mu
    /// profiles (mu_c[i], mu_d[i] are the values of 1-based coordinate
    /// i + 1).
    pub fn mu_formula(&self, r: usize, s: usize, mu_c: &[usize], mu_d: &[usize]) -> usize {
        match (r, s) {
            (0, 0) => unreachable!("(0, 0) is not a coordinate"),
            (r, 0) => mu_c[r - 1] * (self.coords.m + 1) + self.coords.m,
            (0, s) => mu_d[s - 1] * (self.coords.t + 1) + self.coords.t,
            (r, s) => 1 + 2 * (mu_d[s - 1] + mu_c[r - 1] + mu_c[r - 1] * mu_d[s - 1]),
        }
    }

    /// Direct mu value: weight-3 kernel members through the coordinate,
    /// counted over the structured STS.
    pub fn mu_direct_profile(&self) -> Result<Vec<usize>> {
        let sts = self.sts()?;
        let mut values = vec![0usize; self.len()];
        for t in sts.triples() {
            let w = BitWord::from_support(self.len(), t.iter().map(|&p| p - 1));
            if self.kernel_membership(&w)? {
                for &p in t {
                    values[p - 1] += 1;
                }
            }
        }
        Ok(values)
    }

    /// Exact symmetry test without enumeration, via the Lemma-1 coset
    /// structure: sigma preserves M iff psi(sigma(x^1)) + psi(sigma(y^2)) +
    /// psi(sigma(E)) stays inside {(c, d)} for all components, where
    /// psi = (p1, p2) and E is the span of the cell words.
    pub fn is_symmetry(&self, perm: &Permutation) -> Result<bool> {
        if perm.degree() != self.len() {
            return Err(Error::InvalidInput("permutation degree mismatch".into()));
        }
        let psi = |w: &BitWord| -> Result<BitWord> {
            let a = p1(w, self.coords)?;
            let b = p2(w, self.coords)?;
            let mut out = BitWord::zero(self.coords.t + self.coords.m);
            for i in a.support() {
                out.set(i, true);
            }
            for i in b.support() {
                out.set(self.coords.t + i, true);
            }
            Ok(out)
        };

        let mut w_basis = Gf2Basis::new(self.coords.t + self.coords.m);
        for r in 1..=self.coords.t {
            for s in 1..=self.coords.m {
                w_basis.insert(&psi(&perm.permute_word(&self.cell_word(r, s)))?);
            }
        }
        let pairs = (self.c.size() as u128) * (self.d.size() as u128);
        if (1u128 << w_basis.rank()) > pairs {
            return Ok(false);
        }
        let shifts = w_basis.span_words(MAX_EXPLICIT_WORDS)?;

        let mut cd_set: HashSet<BitWord> = HashSet::new();
        for c in self.c.words() {
            for d in self.d.words() {
                let mut w = BitWord::zero(self.coords.t + self.coords.m);
                for i in c.support() {
                    w.set(i, true);
                }
                for i in d.support() {
                    w.set(self.coords.t + i, true);
                }
                cd_set.insert(w);
            }
        }

        let a_imgs: Vec<BitWord> = self
            .c
            .words()
            .iter()
            .map(|x| psi(&perm.permute_word(&self.embed1(x))))
            .collect::<Result<_>>()?;
        let b_imgs: Vec<BitWord> = self
            .d
            .words()
            .iter()
            .map(|y| psi(&perm.permute_word(&self.embed2(y))))
            .collect::<Result<_>>()?;

        for a in &a_imgs {
            for b in &b_imgs {
                let ab = a + b;
                for w in &shifts {
                    if !cd_set.contains(&(&ab + w)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// The Mollard STS of two arbitrary Steiner triple systems, as the union
/// of the four triple families T00, T33, T30, T03.
pub fn mollard_sts(s1: &TripleSystem, s2: &TripleSystem) -> Result<TripleSystem> {
    let t = s1.order();
    let m = s2.order();
    let g = GridCoords::new(t, m);
    let ix = |r: usize, s: usize| g.index0(r, s) + 1; // 1-based points
    let mut triples: Vec<[usize; 3]> = Vec::new();

    // T00: one triple per interior cell
    for r in 1..=t {
        for s in 1..=m {
            triples.push([ix(r, 0), ix(r, s), ix(0, s)]);
        }
    }
    // T33: every bijection between a triple of S1 and a triple of S2
    for t1 in s1.triples() {
        for t2 in s2.triples() {
            let [x, y, z] = *t2;
            for (a, b, c) in [
                (x, y, z),
                (x, z, y),
                (y, x, z),
                (y, z, x),
                (z, x, y),
                (z, y, x),
            ] {
                triples.push([ix(t1[0], a), ix(t1[1], b), ix(t1[2], c)]);
            }
        }
    }
    // T30: an S1 triple at column s, one of its points dropped to column 0
    for t1 in s1.triples() {
        triples.push([ix(t1[0], 0), ix(t1[1], 0), ix(t1[2], 0)]);
        for s in 1..=m {
            for drop in 0..3 {
                let [a, b, c] = rotate(*t1, drop);
                triples.push([ix(a, 0), ix(b, s), ix(c, s)]);
            }
        }
    }
    // T03: an S2 triple at row r, one of its points raised to row 0
    for t2 in s2.triples() {
        triples.push([ix(0, t2[0]), ix(0, t2[1]), ix(0, t2[2])]);
        for r in 1..=t {
            for drop in 0..3 {
                let [a, b, c] = rotate(*t2, drop);
                triples.push([ix(0, a), ix(r, b), ix(r, c)]);
            }
        }
    }

    TripleSystem::new(g.len(), triples)
        .map_err(|e| Error::InternalConsistency(format!("Mollard STS is not Steiner: {e}")))
}

fn rotate(t: [usize; 3], k: usize) -> [usize; 3] {
    [t[k % 3], t[(k + 1) % 3], t[(k + 2) % 3]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitcode::hamming_code;

    fn rep3() -> BinaryCode {
        hamming_code(2).unwrap()
    }

    fn m33() -> MollardCode {
        mollard(&rep3(), &rep3()).unwrap()
    }

    #[test]
    fn grid_layout_is_the_fixed_bijection() {
        let g = GridCoords::new(3, 3);
        assert_eq!(g.len(), 15);
        assert_eq!(g.index0(0, 1), 0);
        assert_eq!(g.index0(3, 3), 14);
        for i in 0..g.len() {
            let (r, s) = g.pair(i);
            assert_eq!(g.index0(r, s), i);
        }
    }

    #[test]
    fn parity_functions_on_embeddings() {
        let mc = m33();
        let x = BitWord::parse("111").unwrap();
        let z = mc.embed1(&x);
        assert_eq!(p1(&z, mc.coords()).unwrap(), x);
        assert!(p2(&z, mc.coords()).unwrap().is_zero());
        let y = BitWord::parse("111").unwrap();
        let z = mc.embed2(&y);
        assert!(p1(&z, mc.coords()).unwrap().is_zero());
        assert_eq!(p2(&z, mc.coords()).unwrap(), y);
        // a cell word has zero parities
        let h = mc.cell_word(1, 1);
        assert!(p1(&h, mc.coords()).unwrap().is_zero());
        assert!(p2(&h, mc.coords()).unwrap().is_zero());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let mc = m33();
        assert!(p1(&BitWord::zero(7), mc.coords()).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force_membership() {
        let mc = m33();
        assert_eq!(mc.size(), 1 << 11);
        let code = mc.enumerate(1 << 12).unwrap();
        assert_eq!(code.size(), 1 << 11);
        assert!(code.contains_zero());
        assert!(code.is_perfect());

        // brute force over all 2^15 vectors
        let mut count = 0usize;
        for v in 0u32..1 << 15 {
            let w = BitWord::from_support(15, (0..15).filter(|&i| v >> i & 1 == 1));
            let member = mc.membership(&w).unwrap();
            assert_eq!(member, code.contains(&w));
            count += member as usize;
        }
        assert_eq!(count, 1 << 11);
    }

    #[test]
    fn rank_and_kernel_dimension_include_the_tm_term() {
        let mc = m33();
        assert_eq!(mc.rank(), 1 + 1 + 9);
        assert_eq!(mc.kernel_dimension(), 1 + 1 + 9);
        let code = mc.enumerate(1 << 12).unwrap();
        assert_eq!(code.rank(), 11); // the printed rank formula without +tm fails here
        assert_eq!(code.kernel().rank(), 11);
    }

    #[test]
    fn decompose_round_trips_all_members() {
        let mc = m33();
        let code = mc.enumerate(1 << 12).unwrap();
        for z in code.words() {
            let (x, y, cells) = mc.decompose(z).unwrap();
            assert!(mc.c().contains(&x));
            assert!(mc.d().contains(&y));
            assert_eq!(mc.recompose(&x, &y, &cells), *z);
        }
    }

    #[test]
    fn decompose_examples() {
        let mc = m33();
        let h = mc.cell_word(1, 1);
        let (x, y, cells) = mc.decompose(&h).unwrap();
        assert!(x.is_zero());
        assert!(y.is_zero());
        assert_eq!(cells, vec![(1, 1)]);

        let x1 = mc.embed1(&BitWord::parse("111").unwrap());
        let (x, y, cells) = mc.decompose(&x1).unwrap();
        assert_eq!(x.to_string(), "111");
        assert!(y.is_zero());
        assert!(cells.is_empty());

        assert!(mc.decompose(&BitWord::from_support(15, [0])).is_err());
    }

    #[test]
    fn structured_dual_equals_elimination_dual() {
        let mc = m33();
        let structured = mc.dual_code().unwrap();
        let direct = mc.enumerate(1 << 12).unwrap().dual().unwrap();
        assert_eq!(structured, direct);
        assert_eq!(structured.rank(), 4); // (3-1) + (3-1)
    }

    #[test]
    fn mollard_sts_equals_weight3_extraction() {
        let mc = m33();
        let structural = mc.sts().unwrap();
        let extracted = sts_of_code(&mc.enumerate(1 << 12).unwrap()).unwrap();
        assert_eq!(structural, extracted);
        assert_eq!(structural.triples().len(), 35);
    }

    #[test]
    fn sts_family_sizes_at_t3_m3() {
        // T00 = tm, T33 = 6, T30 = 3m + 1, T03 = 3t + 1
        let s = TripleSystem::new(3, vec![[1, 2, 3]]).unwrap();
        let m = mollard_sts(&s, &s).unwrap();
        assert_eq!(m.order(), 15);
        assert_eq!(m.triples().len(), 9 + 6 + 10 + 10);
    }

    #[test]
    fn mollard_sts_of_fano_and_triple_has_order_31() {
        let fano = sts_of_code(&hamming_code(3).unwrap()).unwrap();
        let s3 = TripleSystem::new(3, vec![[1, 2, 3]]).unwrap();
        let m = mollard_sts(&fano, &s3).unwrap();
        assert_eq!(m.order(), 31);
        assert_eq!(m.triples().len(), 31 * 30 / 6);
    }

    #[test]
    fn kernel_membership_matches_definitional_test() {
        let mc = m33();
        let code = mc.enumerate(1 << 12).unwrap();
        let kernel = code.kernel();
        for z in code.words() {
            assert_eq!(mc.kernel_membership(z).unwrap(), kernel.contains(z));
        }
        assert_eq!(kernel.rank(), mc.kernel_dimension());
    }

    #[test]
    fn larger_mollard_is_membership_tested_not_enumerated() {
        let mc = mollard(&hamming_code(3).unwrap(), &rep3()).unwrap();
        assert_eq!(mc.len(), 31);
        assert!(mc.enumerate(1 << 20).is_err());
        assert!(mc.is_perfect().unwrap());
        assert!(mc.membership(&BitWord::zero(31)).unwrap());
        assert_eq!(mc.rank(), 4 + 1 + 21);
    }

    #[test]
    fn rejects_imperfect_components() {
        let even = BinaryCode::from_words(
            2,
            vec![BitWord::parse("00").unwrap(), BitWord::parse("11").unwrap()],
        )
        .unwrap();
        assert!(mollard(&even, &rep3()).is_err());
    }

    #[test]
    fn mu_formula_matches_direct_count_at_t3_m3() {
        let mc = m33();
        let mu_c = vec![1usize; 3];
        let mu_d = vec![1usize; 3];
        let direct = mc.mu_direct_profile().unwrap();
        for i in 0..15 {
            let (r, s) = mc.coords().pair(i);
            assert_eq!(mc.mu_formula(r, s, &mu_c, &mu_d), 7);
            assert_eq!(direct[i], 7);
        }
    }

    #[test]
    fn mu_formula_instance_with_zero_components() {
        let mc = m33();
        assert_eq!(mc.mu_formula(1, 1, &[0, 0, 0], &[0, 0, 0]), 1);
    }

    #[test]
    fn symmetry_test_agrees_with_set_equality() {
        let mc = m33();
        let code = mc.enumerate(1 << 12).unwrap();
        let words: std::collections::HashSet<BitWord> = code.words().iter().cloned().collect();
        // a handful of permutations, symmetric and not
        let mut perms = vec![Permutation::identity(15)];
        perms.push(Permutation::transposition(15, 0, 1)); // swap (0,1) and (0,2)
        perms.push(Permutation::transposition(15, 0, 14));
        perms.push(Permutation::from_cycle(15, &(0..15).collect::<Vec<_>>()));
        for p in perms {
            let brute = code
                .words()
                .iter()
                .all(|w| words.contains(&p.permute_word(w)));
            assert_eq!(mc.is_symmetry(&p).unwrap(), brute, "perm {p:?}");
        }
    }
}
