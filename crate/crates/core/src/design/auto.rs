//! Backtracking search for Steiner triple system automorphisms.
//!
//! Point images are chosen in an order sorted by (nu-class size, index);
//! each assignment propagates through the pair-to-third-point map, so a
//! handful of base choices forces the rest of the permutation. An optional
//! point set can be required to be fixed setwise, which computes the
//! setwise stabilizer directly instead of filtering the full group.

use super::TripleSystem;
use crate::error::{Error, Result};
use crate::symmetry::Permutation;

struct Search<'a> {
    ts: &'a TripleSystem,
    n: usize,
    /// invariant class id per point (nu value x fixed-set membership)
    class: Vec<usize>,
    base_order: Vec<usize>,
    sigma: Vec<usize>,     // 0 = unassigned
    sigma_inv: Vec<usize>, // 0 = unused
    trail: Vec<usize>,     // assigned points, in order
    nodes: u64,
    budget: u64,
    found: Vec<Permutation>,
}

pub fn automorphisms(
    ts: &TripleSystem,
    setwise_fixed: Option<&[usize]>,
    node_budget: u64,
) -> Result<Vec<Permutation>> {
    let n = ts.order();
    let fixed_mask: Vec<bool> = {
        let mut m = vec![false; n + 1];
        if let Some(fs) = setwise_fixed {
            for &p in fs {
                if p < 1 || p > n {
                    return Err(Error::InvalidInput(format!("fixed point {p} out of range")));
                }
                m[p] = true;
            }
        }
        m
    };

    // Invariant classes: points may only map within their class.
    let mut keys: Vec<(usize, bool)> = vec![(0, false); n + 1];
    for p in 1..=n {
        keys[p] = (ts.pasch_count_at(p), fixed_mask[p]);
    }
    let mut distinct: Vec<(usize, bool)> = keys[1..].to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let class: Vec<usize> = (0..=n)
        .map(|p| {
            if p == 0 {
                usize::MAX
            } else {
                distinct.binary_search(&keys[p]).unwrap()
            }
        })
        .collect();
    let mut class_size = vec![0usize; distinct.len()];
    for p in 1..=n {
        class_size[class[p]] += 1;
    }

    let mut base_order: Vec<usize> = (1..=n).collect();
    base_order.sort_by_key(|&p| (class_size[class[p]], p));

    let mut s = Search {
        ts,
        n,
        class,
        base_order,
        sigma: vec![0; n + 1],
        sigma_inv: vec![0; n + 1],
        trail: Vec::with_capacity(n),
        nodes: 0,
        budget: node_budget,
        found: Vec::new(),
    };
    s.recurse()?;
    let mut out = s.found;
    out.sort();
    Ok(out)
}

impl<'a> Search<'a> {
    fn recurse(&mut self) -> Result<()> {
        let Some(&p) = self.base_order.iter().find(|&&p| self.sigma[p] == 0) else {
            let images: Vec<usize> = (1..=self.n).map(|p| self.sigma[p] - 1).collect();
            self.found
                .push(Permutation::from_images(images).expect("bijection by construction"));
            return Ok(());
        };
        for q in 1..=self.n {
            if self.sigma_inv[q] != 0 || self.class[q] != self.class[p] {
                continue;
            }
            let mark = self.trail.len();
            if self.try_assign(p, q)? {
                self.recurse()?;
            }
            self.undo_to(mark);
        }
        Ok(())
    }

    /// Assigns p -> q and propagates forced images. Returns false (after
    /// recording trail entries for undo) when a contradiction appears.
    fn try_assign(&mut self, p: usize, q: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit(format!(
                "automorphism search exceeded {} nodes",
                self.budget
            )));
        }
        let mut queue_start = self.trail.len();
        self.sigma[p] = q;
        self.sigma_inv[q] = p;
        self.trail.push(p);

        while queue_start < self.trail.len() {
            let a = self.trail[queue_start];
            queue_start += 1;
            let fa = self.sigma[a];
            // pairs with every other already-mapped point force a third image
            for idx in 0..queue_start - 1 {
                let b = self.trail[idx];
                let (Some(k), Some(k2)) = (
                    self.ts.third(a, b),
                    self.ts.third(fa, self.sigma[b]),
                ) else {
                    continue;
                };
                let cur = self.sigma[k];
                if cur != 0 {
                    if cur != k2 {
                        return Ok(false);
                    }
                    continue;
                }
                if self.sigma_inv[k2] != 0 || self.class[k] != self.class[k2] {
                    return Ok(false);
                }
                self.sigma[k] = k2;
                self.sigma_inv[k2] = k;
                self.trail.push(k);
            }
        }
        Ok(true)
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let p = self.trail.pop().unwrap();
            let q = self.sigma[p];
            self.sigma[p] = 0;
            self.sigma_inv[q] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{sts_of_code, TripleSystem};
    use crate::bitcode::hamming_code;

    #[test]
    fn single_triple_has_full_s3() {
        let ts = TripleSystem::new(3, vec![[1, 2, 3]]).unwrap();
        let auts = ts.automorphism_elements(None, 1 << 20).unwrap();
        assert_eq!(auts.len(), 6);
    }

    #[test]
    fn fano_has_order_168() {
        let ts = sts_of_code(&hamming_code(3).unwrap()).unwrap();
        let auts = ts.automorphism_elements(None, 1 << 24).unwrap();
        assert_eq!(auts.len(), 168);
        // every automorphism maps triples to triples
        for a in &auts {
            for t in ts.triples() {
                let img = [
                    a.apply(t[0] - 1) + 1,
                    a.apply(t[1] - 1) + 1,
                    a.apply(t[2] - 1) + 1,
                ];
                assert!(ts.contains_triple(img));
            }
        }
    }

    #[test]
    fn fano_point_stabilizer_has_order_24() {
        let ts = sts_of_code(&hamming_code(3).unwrap()).unwrap();
        let auts = ts.automorphism_elements(Some(&[1]), 1 << 24).unwrap();
        assert_eq!(auts.len(), 24);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let ts = sts_of_code(&hamming_code(3).unwrap()).unwrap();
        assert!(ts.automorphism_elements(None, 3).is_err());
    }
}
