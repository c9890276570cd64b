//! Explicit symmetry families on the Mollard grid: the Dub1/Dub2 lifts of
//! component symmetries, the Ort column translations, and the predicate
//! for the row-preserving group T.

use super::perm::Permutation;
use crate::bitcode::{BinaryCode, BitWord};
use crate::design::{sts_of_code, SteinerLoop, TripleSystem};
use crate::error::{Error, Result};
use crate::linearity::mu_profile;
use crate::mollard::{GridCoords, MollardCode};

/// Set-equality symmetry test for an explicit code.
pub fn is_symmetry_explicit(code: &BinaryCode, perm: &Permutation) -> Result<bool> {
    if perm.degree() != code.len() {
        return Err(Error::InvalidInput("permutation degree mismatch".into()));
    }
    Ok(code
        .words()
        .iter()
        .all(|w| code.contains(&perm.permute_word(w))))
}

/// 0-based coordinates of the embedded row code C^1: the column-0 cells.
pub fn c1_coords(coords: GridCoords) -> Vec<usize> {
    (1..=coords.t).map(|r| coords.index0(r, 0)).collect()
}

/// 0-based coordinates of the embedded column code D^2: the row-0 cells.
pub fn d2_coords(coords: GridCoords) -> Vec<usize> {
    (1..=coords.m).map(|s| coords.index0(0, s)).collect()
}

/// Lifts a permutation of rows 1..t to the grid: (r, s) -> (pi(r), s),
/// with the whole row 0 fixed.
pub fn dub1(coords: GridCoords, pi: &Permutation) -> Result<Permutation> {
    if pi.degree() != coords.t {
        return Err(Error::InvalidInput("row permutation degree mismatch".into()));
    }
    let mut images = vec![0usize; coords.len()];
    for i in 0..coords.len() {
        let (r, s) = coords.pair(i);
        let r2 = if r == 0 { 0 } else { pi.apply(r - 1) + 1 };
        images[i] = coords.index0(r2, s);
    }
    Permutation::from_images(images)
}

/// Lifts a permutation of columns 1..m to the grid: (r, s) -> (r, pi(s)),
/// with the whole column 0 fixed.
pub fn dub2(coords: GridCoords, pi: &Permutation) -> Result<Permutation> {
    if pi.degree() != coords.m {
        return Err(Error::InvalidInput(
            "column permutation degree mismatch".into(),
        ));
    }
    let mut images = vec![0usize; coords.len()];
    for i in 0..coords.len() {
        let (r, s) = coords.pair(i);
        let s2 = if s == 0 { 0 } else { pi.apply(s - 1) + 1 };
        images[i] = coords.index0(r, s2);
    }
    Permutation::from_images(images)
}

/// (r, s) -> (r, s * l) on the marked rows, identity elsewhere; `lp` is
/// the column loop on {0..m}.
fn column_translation(
    coords: GridCoords,
    lp: &SteinerLoop,
    l: usize,
    row_marked: &[bool],
) -> Permutation {
    let mut images = vec![0usize; coords.len()];
    for i in 0..coords.len() {
        let (r, s) = coords.pair(i);
        let s2 = if r >= 1 && row_marked[r] { lp.star(s, l) } else { s };
        images[i] = coords.index0(r, s2);
    }
    Permutation::from_images(images).expect("star translation is a bijection per row")
}

/// Ort_l(u): columns of the rows in supp(u) are translated by the loop
/// element l. Requires l in Lin_mu(D) and u in the dual of C; the result
/// is an involutive symmetry of M(C, D).
pub fn ort(mc: &MollardCode, l: usize, u: &BitWord) -> Result<Permutation> {
    if u.len() != mc.t() {
        return Err(Error::InvalidInput("u length differs from t".into()));
    }
    if mc.c().basis().rows().iter().any(|b| b.dot(u)) {
        return Err(Error::InvalidParameter("u is not in the dual of C".into()));
    }
    let lm = mu_profile(mc.d())?.lin_mu();
    if l < 1 || l > mc.m() || lm.binary_search(&l).is_err() {
        return Err(Error::InvalidParameter(format!(
            "column {l} is not mu-linear in D"
        )));
    }
    let lp = sts_of_code(mc.d())?.loop_of();
    let mut marked = vec![false; mc.t() + 1];
    for i in u.support() {
        marked[i + 1] = true;
    }
    Ok(column_translation(mc.coords(), &lp, l, &marked))
}

/// The design analogue of `ort`: l must be a nu-linear point of S2 and u
/// orthogonal to every triple of S1.
pub fn ort_design(
    s1: &TripleSystem,
    s2: &TripleSystem,
    l: usize,
    u: &BitWord,
) -> Result<Permutation> {
    if u.len() != s1.order() {
        return Err(Error::InvalidInput("u length differs from |S1|".into()));
    }
    if s1.incidence_words().iter().any(|w| w.dot(u)) {
        return Err(Error::InvalidParameter(
            "u is not orthogonal to the triples of S1".into(),
        ));
    }
    if l < 1 || l > s2.order() || s2.lin_nu().binary_search(&l).is_err() {
        return Err(Error::InvalidParameter(format!(
            "point {l} is not nu-linear in S2"
        )));
    }
    let coords = GridCoords::new(s1.order(), s2.order());
    let lp = s2.loop_of();
    let mut marked = vec![false; s1.order() + 1];
    for i in u.support() {
        marked[i + 1] = true;
    }
    Ok(column_translation(coords, &lp, l, &marked))
}

/// The two structural membership conditions of the group T: every row
/// r >= 1 maps into itself, and every (0, s) with s >= 1 is fixed.
pub fn grid_row_conditions(coords: GridCoords, perm: &Permutation) -> bool {
    if perm.degree() != coords.len() {
        return false;
    }
    for i in 0..coords.len() {
        let (r, s) = coords.pair(i);
        let (r2, s2) = coords.pair(perm.apply(i));
        if r2 != r {
            return false;
        }
        if r == 0 && s2 != s {
            return false;
        }
    }
    true
}

/// T-membership: the grid conditions plus being a symmetry of M(C, D).
pub fn in_t(mc: &MollardCode, perm: &Permutation) -> Result<bool> {
    Ok(grid_row_conditions(mc.coords(), perm) && mc.is_symmetry(perm)?)
}

/// Sym(code) as an element list: automorphisms of STS(code) filtered by
/// the set-equality symmetry test (every symmetry of a perfect code with
/// zero is an STS automorphism, so nothing is missed).
pub fn symmetry_elements(code: &BinaryCode, node_budget: u64) -> Result<Vec<Permutation>> {
    stabilizer_elements(code, None, node_budget)
}

/// The setwise stabilizer of `fixed` (0-based coordinates) inside
/// Sym(code), computed by constrained automorphism backtracking plus the
/// symmetry filter.
pub fn stabilizer_elements(
    code: &BinaryCode,
    fixed: Option<&[usize]>,
    node_budget: u64,
) -> Result<Vec<Permutation>> {
    let sts = sts_of_code(code)?;
    let fixed_1based: Option<Vec<usize>> =
        fixed.map(|f| f.iter().map(|&i| i + 1).collect());
    let auts = sts.automorphism_elements(fixed_1based.as_deref(), node_budget)?;
    let mut out = Vec::new();
    for a in auts {
        if is_symmetry_explicit(code, &a)? {
            out.push(a);
        }
    }
    Ok(out)
}
