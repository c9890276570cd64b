//! The mu invariant of a perfect code: per-coordinate counts of weight-3
//! kernel codewords, the mu-linear coordinate set, and its relations to
//! nu-linearity, projective subsystems and Hamming subcodes.

use serde::Serialize;

use crate::bitcode::{BinaryCode, BitWord, Gf2Basis};
use crate::design::sts_of_code;
use crate::error::{Error, Result};
use crate::mollard::MollardCode;

/// Per-coordinate mu values of a length-n code; mu_i is the number of
/// weight-3 kernel codewords whose support contains coordinate i.
#[derive(Clone, Debug, Serialize)]
pub struct MuProfile {
    n: usize,
    values: Vec<usize>,
    threshold: usize,
}

impl MuProfile {
    fn new(n: usize, values: Vec<usize>) -> Result<Self> {
        let threshold = (n - 1) / 2;
        if values.iter().any(|&v| v > threshold) {
            return Err(Error::InternalConsistency(format!(
                "a mu value exceeds the maximum {threshold}"
            )));
        }
        Ok(MuProfile {
            n,
            values,
            threshold,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// values()[i] is mu of the 1-based coordinate i + 1.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// mu of a 1-based coordinate.
    pub fn mu(&self, coord: usize) -> usize {
        self.values[coord - 1]
    }

    /// The maximum possible value (n - 1) / 2.
    pub fn threshold(&self) -> usize {
        self.threshold
    }

    /// Sorted 1-based coordinates attaining the maximum.
    pub fn lin_mu(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.values[i - 1] == self.threshold)
            .collect()
    }
}

/// Mu profile of an explicit code via the definitional kernel.
pub fn mu_profile(code: &BinaryCode) -> Result<MuProfile> {
    if code.is_empty() {
        return Err(Error::InvalidInput("empty code".into()));
    }
    let mut values = vec![0usize; code.len()];
    for w in code.kernel().weight3_words() {
        for i in w.support() {
            values[i] += 1;
        }
    }
    MuProfile::new(code.len(), values)
}

/// Mu profile of a structured Mollard code via the p1/p2 kernel
/// characterization; agrees with `mu_profile` on the enumerated code.
pub fn mollard_mu_profile(mc: &MollardCode) -> Result<MuProfile> {
    MuProfile::new(mc.len(), mc.mu_direct_profile()?)
}

/// Sorted 1-based coordinates with maximal mu.
pub fn lin_mu(code: &BinaryCode) -> Result<Vec<usize>> {
    Ok(mu_profile(code)?.lin_mu())
}

/// Mu-linear coordinates are nu-linear points of the code's triple
/// system; a false return signals a broken input rather than a valid
/// outcome.
pub fn check_linmu_subset_linnu(code: &BinaryCode) -> Result<bool> {
    let lm = lin_mu(code)?;
    let ln = sts_of_code(code)?.lin_nu();
    Ok(lm.iter().all(|i| ln.binary_search(i).is_ok()))
}

/// Codewords supported inside `coords` (1-based), restricted to those
/// coordinates in increasing order.
pub fn subcode_on(code: &BinaryCode, coords: &[usize]) -> Result<BinaryCode> {
    let mut sorted: Vec<usize> = coords.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.iter().any(|&c| c < 1 || c > code.len()) {
        return Err(Error::InvalidInput("coordinate out of range".into()));
    }
    let zero_based: Vec<usize> = sorted.iter().map(|&c| c - 1).collect();
    let mut inside = vec![false; code.len()];
    for &c in &zero_based {
        inside[c] = true;
    }
    let words: Vec<BitWord> = code
        .words()
        .iter()
        .filter(|w| w.support().iter().all(|&i| inside[i]))
        .map(|w| w.restrict(&zero_based))
        .collect();
    BinaryCode::from_words(sorted.len(), words)
}

/// The subcode of Ker(code) generated by its weight-3 words on the
/// mu-linear coordinates is a Hamming (perfect linear) code of length
/// |Lin_mu|. An empty Lin_mu is vacuously true; |Lin_mu| + 1 not being a
/// power of two breaks the claim outright.
pub fn check_hamming_on_linmu(code: &BinaryCode) -> Result<bool> {
    let lm = lin_mu(code)?;
    if lm.is_empty() {
        return Ok(true);
    }
    if !(lm.len() + 1).is_power_of_two() {
        return Err(Error::TheoryViolation(format!(
            "|Lin_mu| + 1 = {} is not a power of two",
            lm.len() + 1
        )));
    }
    let zero_based: Vec<usize> = lm.iter().map(|&c| c - 1).collect();
    let mut inside = vec![false; code.len()];
    for &c in &zero_based {
        inside[c] = true;
    }
    let generators: Vec<BitWord> = code
        .kernel()
        .weight3_words()
        .into_iter()
        .filter(|w| w.support().iter().all(|&i| inside[i]))
        .map(|w| w.restrict(&zero_based))
        .collect();
    let basis = Gf2Basis::from_words(lm.len(), &generators);
    let sub = BinaryCode::from_words(lm.len(), basis.span_words(1 << 22)?)?;
    Ok(sub.is_perfect() && sub.is_linear())
}
