use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gf2::Gf2Basis;
use super::word::BitWord;
use crate::error::{Error, Result};

/// Explicit codes above this size are refused; larger codes must stay in a
/// structured (Mollard) representation.
pub const MAX_EXPLICIT_WORDS: usize = 1 << 20;

/// An explicitly enumerated binary code: a finite set of equal-length words.
#[derive(Clone, Debug)]
pub struct BinaryCode {
    len: usize,
    words: Vec<BitWord>,
    index: HashSet<BitWord>,
}

impl PartialEq for BinaryCode {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.words == other.words
    }
}
impl Eq for BinaryCode {}

impl BinaryCode {
    pub fn from_words(len: usize, mut words: Vec<BitWord>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::InvalidInput("empty code".into()));
        }
        if words.len() > MAX_EXPLICIT_WORDS {
            return Err(Error::ResourceLimit(format!(
                "{} words exceed the explicit-code limit",
                words.len()
            )));
        }
        for w in &words {
            if w.len() != len {
                return Err(Error::InvalidInput(format!(
                    "word length {} differs from code length {}",
                    w.len(),
                    len
                )));
            }
        }
        words.sort();
        words.dedup();
        let index = words.iter().cloned().collect();
        Ok(BinaryCode { len, words, index })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Codewords in sorted order.
    pub fn words(&self) -> &[BitWord] {
        &self.words
    }

    pub fn contains(&self, w: &BitWord) -> bool {
        self.index.contains(w)
    }

    pub fn contains_zero(&self) -> bool {
        self.words.first().map_or(false, |w| w.is_zero())
    }

    pub fn basis(&self) -> Gf2Basis {
        Gf2Basis::from_words(self.len, &self.words)
    }

    /// Dimension of the GF(2) linear span of the codewords.
    pub fn rank(&self) -> usize {
        self.basis().rank()
    }

    pub fn is_linear(&self) -> bool {
        self.contains_zero() && self.size() == 1 << self.rank()
    }

    /// The linear span as an explicit code.
    pub fn span(&self) -> Result<BinaryCode> {
        let words = self.basis().span_words(MAX_EXPLICIT_WORDS)?;
        BinaryCode::from_words(self.len, words)
    }

    /// Minimum pairwise Hamming distance. Undefined for singleton codes.
    pub fn min_distance(&self) -> Result<usize> {
        if self.size() < 2 {
            return Err(Error::InvalidInput(
                "minimum distance undefined for a singleton code".into(),
            ));
        }
        let mut best = usize::MAX;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                best = best.min(a.distance(b));
                if best == 1 {
                    return Ok(1);
                }
            }
        }
        Ok(best)
    }

    /// The weight-3 codewords, whose supports form STS(C) for a perfect
    /// code containing zero.
    pub fn weight3_words(&self) -> Vec<BitWord> {
        self.words.iter().filter(|w| w.weight() == 3).cloned().collect()
    }

    /// True iff every length-n vector lies at distance <= 1 from exactly
    /// one codeword. Decided by the cardinality and minimum-distance
    /// characterization.
    pub fn is_perfect(&self) -> bool {
        let n = self.len;
        if !(n + 1).is_power_of_two() {
            return false;
        }
        if n >= 128 {
            return false; // 2^n does not fit; nothing this large is explicit anyway
        }
        if (self.size() as u128) * (n as u128 + 1) != 1u128 << n {
            return false;
        }
        if self.size() == 1 {
            // Only the length-1 singleton covers its space.
            return n == 1;
        }
        self.min_distance().is_ok_and(|d| d == 3)
    }

    /// Ker(C) = {x in C : x + C = C}, always a linear subcode.
    pub fn kernel(&self) -> BinaryCode {
        let mut kernel = Vec::new();
        'outer: for x in &self.words {
            for w in &self.words {
                if !self.contains(&(x + w)) {
                    continue 'outer;
                }
            }
            kernel.push(x.clone());
        }
        BinaryCode::from_words(self.len, kernel).expect("kernel contains zero")
    }

    /// All vectors orthogonal to every codeword, as an explicit code.
    pub fn dual(&self) -> Result<BinaryCode> {
        let null = self.basis().null_space();
        let words = Gf2Basis::from_words(self.len, &null).span_words(MAX_EXPLICIT_WORDS)?;
        BinaryCode::from_words(self.len, words)
    }

    /// A deterministic basis of the dual code.
    pub fn dual_basis(&self) -> Vec<BitWord> {
        self.basis().null_space()
    }
}

/// The linear perfect code of length 2^m - 1 whose parity-check columns are
/// the nonzero m-bit integers in increasing order.
pub fn hamming_code(m: usize) -> Result<BinaryCode> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "hamming_code requires m >= 2, got {m}"
        )));
    }
    if m > 11 {
        return Err(Error::ResourceLimit(format!(
            "hamming_code with m = {m} cannot be enumerated explicitly"
        )));
    }
    let n = (1usize << m) - 1;
    // Row j of the check matrix: bit j of the column index i+1.
    let check_rows: Vec<BitWord> = (0..m)
        .map(|j| BitWord::from_support(n, (0..n).filter(|&i| (i + 1) >> j & 1 == 1)))
        .collect();
    let check = Gf2Basis::from_words(n, &check_rows);
    let gen = Gf2Basis::from_words(n, &check.null_space());
    let words = gen.span_words(MAX_EXPLICIT_WORDS)?;
    BinaryCode::from_words(n, words)
}

/// A map base-codeword -> bit used by the Vasil'ev construction.
#[derive(Clone, Debug)]
pub struct Lambda {
    map: HashMap<BitWord, bool>,
}

impl Lambda {
    pub fn zero(base: &BinaryCode) -> Self {
        Lambda {
            map: base.words().iter().map(|w| (w.clone(), false)).collect(),
        }
    }

    /// A seeded pseudo-random map with lambda(0) = 0, retried until it is
    /// nonlinear, so nonlinear perfect test inputs are reproducible.
    pub fn nonlinear(base: &BinaryCode, seed: u64) -> Result<Self> {
        if base.size() < 4 {
            return Err(Error::InvalidParameter(
                "a nonlinear lambda needs at least 4 base codewords".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let map: HashMap<BitWord, bool> = base
                .words()
                .iter()
                .map(|w| (w.clone(), if w.is_zero() { false } else { rng.gen() }))
                .collect();
            let l = Lambda { map };
            if !l.is_linear_on(base) {
                return Ok(l);
            }
        }
    }

    pub fn get(&self, w: &BitWord) -> Result<bool> {
        self.map
            .get(w)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("lambda undefined on {w}")))
    }

    /// Whether lambda is additive on the (linear) base code.
    pub fn is_linear_on(&self, base: &BinaryCode) -> bool {
        for a in base.words() {
            for b in base.words() {
                let s = a + b;
                if !base.contains(&s) {
                    continue;
                }
                let (Some(&la), Some(&lb), Some(&ls)) =
                    (self.map.get(a), self.map.get(b), self.map.get(&s))
                else {
                    return false;
                };
                if la ^ lb != ls {
                    return false;
                }
            }
        }
        true
    }
}

/// Vasil'ev construction: {(v + c | v | p(v) + lambda(c))} of length 2n + 1.
/// Nonlinear lambda yields nonlinear perfect codes.
pub fn vasilev(base: &BinaryCode, lambda: &Lambda) -> Result<BinaryCode> {
    let n = base.len();
    if !base.is_perfect() || !base.contains_zero() {
        return Err(Error::InvalidParameter(
            "vasilev base must be a perfect code containing zero".into(),
        ));
    }
    if lambda.get(&BitWord::zero(n))? {
        return Err(Error::InvalidParameter("lambda(0) must be 0".into()));
    }
    let out_len = 2 * n + 1;
    let total = (base.size() as u128) << n;
    if total > MAX_EXPLICIT_WORDS as u128 {
        return Err(Error::ResourceLimit(format!(
            "vasilev output with {total} words cannot be enumerated"
        )));
    }
    let mut words = Vec::with_capacity(total as usize);
    let mut v = BitWord::zero(n);
    let mut counter = vec![false; n];
    loop {
        let pv = v.parity();
        for c in base.words() {
            let vc = &v + c;
            let mut w = BitWord::zero(out_len);
            for i in vc.support() {
                w.set(i, true);
            }
            for i in v.support() {
                w.set(n + i, true);
            }
            if pv ^ lambda.get(c)? {
                w.set(2 * n, true);
            }
            words.push(w);
        }
        // advance v through F_2^n
        let mut i = 0;
        loop {
            if i == n {
                return BinaryCode::from_words(out_len, words);
            }
            counter[i] = !counter[i];
            v.flip(i);
            if counter[i] {
                break;
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep3() -> BinaryCode {
        BinaryCode::from_words(
            3,
            vec![BitWord::parse("000").unwrap(), BitWord::parse("111").unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn repetition_code_is_perfect() {
        assert!(rep3().is_perfect());
        assert_eq!(rep3().rank(), 1);
    }

    #[test]
    fn even_weight_code_is_not_perfect() {
        let words = ["0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111"]
            .iter()
            .map(|s| BitWord::parse(s).unwrap())
            .collect();
        let c = BinaryCode::from_words(4, words).unwrap();
        assert_eq!(c.min_distance().unwrap(), 2);
        assert!(!c.is_perfect());
    }

    #[test]
    fn hamming_m2_is_the_repetition_code() {
        assert_eq!(hamming_code(2).unwrap(), rep3());
        assert!(hamming_code(1).is_err());
    }

    #[test]
    fn hamming_m3_parameters() {
        let h = hamming_code(3).unwrap();
        assert_eq!(h.len(), 7);
        assert_eq!(h.size(), 16);
        assert_eq!(h.min_distance().unwrap(), 3);
        assert_eq!(h.rank(), 4);
        assert!(h.is_perfect());
        assert!(h.is_linear());
        assert_eq!(h.weight3_words().len(), 7);
    }

    #[test]
    fn hamming_m4_parameters() {
        let h = hamming_code(4).unwrap();
        assert_eq!(h.len(), 15);
        assert_eq!(h.rank(), 11);
        assert_eq!(h.size(), 1 << 11);
        assert!(h.is_perfect());
        assert_eq!(h.weight3_words().len(), 35);
        assert_eq!(h.kernel().size(), h.size()); // linear: kernel = code
    }

    #[test]
    fn dual_of_repetition_code() {
        let d = rep3().dual().unwrap();
        assert_eq!(d.size(), 4);
        for w in d.words() {
            assert_eq!(w.weight() % 2, 0);
        }
    }

    #[test]
    fn dual_of_hamming7_is_the_simplex_code() {
        let d = hamming_code(3).unwrap().dual().unwrap();
        assert_eq!(d.size(), 8);
        for w in d.words() {
            assert!(w.is_zero() || w.weight() == 4);
        }
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let full = BinaryCode::from_words(
            3,
            (0..8u32)
                .map(|v| BitWord::from_support(3, (0..3).filter(move |&i| v >> i & 1 == 1)))
                .collect(),
        )
        .unwrap();
        let d = full.dual().unwrap();
        assert_eq!(d.size(), 1);
        assert!(d.contains_zero());
    }

    #[test]
    fn rank_plus_dual_rank_is_n() {
        for c in [rep3(), hamming_code(3).unwrap()] {
            let d = c.dual().unwrap();
            assert_eq!(c.rank() + d.rank(), c.len());
            // dual(dual(C)) = span(C)
            assert_eq!(d.dual().unwrap(), c.span().unwrap());
        }
    }

    #[test]
    fn vasilev_base_zero_gives_repetition_code() {
        let base = BinaryCode::from_words(1, vec![BitWord::parse("0").unwrap()]).unwrap();
        let v = vasilev(&base, &Lambda::zero(&base)).unwrap();
        assert_eq!(v, rep3());
    }

    #[test]
    fn vasilev_linear_lambda_gives_linear_perfect_15() {
        let h7 = hamming_code(3).unwrap();
        let v = vasilev(&h7, &Lambda::zero(&h7)).unwrap();
        assert_eq!(v.len(), 15);
        assert_eq!(v.size(), 1 << 11);
        assert!(v.is_perfect());
        assert_eq!(v.rank(), 11);
    }

    #[test]
    fn vasilev_nonlinear_lambda_gives_rank_12_and_small_kernel() {
        let h7 = hamming_code(3).unwrap();
        let lambda = Lambda::nonlinear(&h7, 1).unwrap();
        assert!(!lambda.is_linear_on(&h7));
        let v = vasilev(&h7, &lambda).unwrap();
        assert!(v.is_perfect());
        assert_eq!(v.rank(), 12);
        let k = v.kernel();
        assert!(k.size() < v.size());
        assert!(k.is_linear());
        // kernel words translate the code onto itself
        for x in k.words().iter().take(8) {
            for w in v.words().iter().step_by(97) {
                assert!(v.contains(&(x + w)));
            }
        }
    }

    #[test]
    fn kernel_of_hamming15_has_dimension_11() {
        let h = hamming_code(4).unwrap();
        let k = h.kernel();
        assert_eq!(k.rank(), 11);
    }

    #[test]
    fn lambda_undefined_is_an_error() {
        let h7 = hamming_code(3).unwrap();
        let partial = Lambda {
            map: std::collections::HashMap::new(),
        };
        assert!(vasilev(&h7, &partial).is_err());
    }
}
