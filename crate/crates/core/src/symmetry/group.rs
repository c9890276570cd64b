use std::collections::HashSet;

use super::perm::Permutation;
use super::schreier::StabChain;
use crate::error::{Error, Result};

/// Default ceiling for explicit element enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 1 << 20;

#[derive(Clone, Debug)]
enum Rep {
    /// Sorted element list plus a lookup set.
    Enumerated(Vec<Permutation>, HashSet<Permutation>),
    Chain(StabChain),
}

/// A permutation group given by generators, with exact order and either a
/// full element enumeration or a stabilizer chain behind it.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    order: u128,
    rep: Rep,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup::from_elements(degree, vec![Permutation::identity(degree)])
            .expect("identity is closed")
    }

    /// Wraps an explicit element list; the list must be closed under the
    /// group operations (verified).
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let set: HashSet<Permutation> = elements.iter().cloned().collect();
        if !set.contains(&Permutation::identity(degree)) {
            return Err(Error::InvalidInput("element set misses the identity".into()));
        }
        // Extract a small generating subset greedily, then verify that its
        // closure reproduces exactly the given element set.
        let mut gens: Vec<Permutation> = Vec::new();
        let mut reached: HashSet<Permutation> = HashSet::new();
        reached.insert(Permutation::identity(degree));
        for e in &elements {
            if !reached.contains(e) {
                gens.push(e.clone());
                let closed = close(degree, &gens, elements.len() + 1).map_err(|_| {
                    Error::InvalidInput("element set not closed under products".into())
                })?;
                reached = closed.into_iter().collect();
            }
        }
        if reached.len() != elements.len() || !reached.iter().all(|e| set.contains(e)) {
            return Err(Error::InvalidInput("element set not closed under products".into()));
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(degree));
        }
        let order = elements.len() as u128;
        Ok(PermGroup {
            degree,
            gens,
            order,
            rep: Rep::Enumerated(elements, set),
        })
    }

    /// Breadth-first closure of the generators. Falls back to a stabilizer
    /// chain when the closure would exceed `enum_bound` elements; both
    /// paths produce the exact order.
    pub fn from_generators(
        degree: usize,
        gens: Vec<Permutation>,
        enum_bound: usize,
    ) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::InvalidInput("generator degree mismatch".into()));
            }
        }
        match close(degree, &gens, enum_bound) {
            Ok(elements) => {
                let set = elements.iter().cloned().collect();
                Ok(PermGroup {
                    degree,
                    order: elements.len() as u128,
                    gens,
                    rep: Rep::Enumerated(elements, set),
                })
            }
            Err(_) => {
                let chain = StabChain::new(degree, &gens);
                Ok(PermGroup {
                    degree,
                    order: chain.order(),
                    gens,
                    rep: Rep::Chain(chain),
                })
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        match &self.rep {
            Rep::Enumerated(_, set) => set.contains(p),
            Rep::Chain(chain) => chain.contains(p),
        }
    }

    /// Sorted element list, when enumerated.
    pub fn elements(&self) -> Option<&[Permutation]> {
        match &self.rep {
            Rep::Enumerated(v, _) => Some(v),
            Rep::Chain(_) => None,
        }
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Equal orders plus one-sided generator containment.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        other.gens.iter().all(|g| {
            let gi = g.inverse();
            self.gens
                .iter()
                .all(|n| self.contains(&g.compose(n).compose(&gi)))
        })
    }

    pub fn is_elementary_abelian_2(&self) -> bool {
        match &self.rep {
            Rep::Enumerated(v, _) => {
                v.iter().all(|a| a.compose(a).is_identity())
                    && v.iter()
                        .all(|a| v.iter().all(|b| a.compose(b) == b.compose(a)))
            }
            Rep::Chain(_) => {
                // order 2 generators that pairwise commute generate an
                // elementary abelian 2-group
                self.gens.iter().all(|a| a.compose(a).is_identity())
                    && self
                        .gens
                        .iter()
                        .all(|a| self.gens.iter().all(|b| a.compose(b) == b.compose(a)))
            }
        }
    }

    /// Elements fixing `coords` (0-based) setwise. Requires enumeration.
    pub fn setwise_stabilizer(&self, coords: &[usize]) -> Result<PermGroup> {
        let elements = self
            .elements()
            .ok_or_else(|| Error::ResourceLimit("group too large to filter".into()))?;
        let filtered: Vec<Permutation> = elements
            .iter()
            .filter(|p| p.fixes_setwise(coords))
            .cloned()
            .collect();
        PermGroup::from_elements(self.degree, filtered)
    }

    /// Elements fixing every coordinate of `coords`. Requires enumeration.
    pub fn pointwise_stabilizer(&self, coords: &[usize]) -> Result<PermGroup> {
        let elements = self
            .elements()
            .ok_or_else(|| Error::ResourceLimit("group too large to filter".into()))?;
        let filtered: Vec<Permutation> = elements
            .iter()
            .filter(|p| p.fixes_pointwise(coords))
            .cloned()
            .collect();
        PermGroup::from_elements(self.degree, filtered)
    }
}

fn close(degree: usize, gens: &[Permutation], bound: usize) -> Result<Vec<Permutation>> {
    let mut set: HashSet<Permutation> = HashSet::new();
    let mut queue: Vec<Permutation> = vec![Permutation::identity(degree)];
    set.insert(Permutation::identity(degree));
    while let Some(e) = queue.pop() {
        for g in gens {
            let f = g.compose(&e);
            if !set.contains(&f) {
                if set.len() >= bound {
                    return Err(Error::ResourceLimit(format!(
                        "closure exceeds bound {bound}"
                    )));
                }
                set.insert(f.clone());
                queue.push(f);
            }
        }
    }
    let mut out: Vec<Permutation> = set.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycle(n, c)
    }

    #[test]
    fn closure_of_a_transposition() {
        let g = PermGroup::from_generators(3, vec![cyc(3, &[0, 1])], 100).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn closure_of_s3() {
        let g = PermGroup::from_generators(3, vec![cyc(3, &[0, 1]), cyc(3, &[0, 1, 2])], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.contains(&cyc(3, &[1, 2])));
    }

    #[test]
    fn closure_and_chain_orders_agree() {
        let gens = vec![cyc(6, &[0, 1]), cyc(6, &(0..6).collect::<Vec<_>>())];
        let enumerated = PermGroup::from_generators(6, gens.clone(), 1 << 12).unwrap();
        let chained = PermGroup::from_generators(6, gens, 10).unwrap();
        assert_eq!(enumerated.order(), 720);
        assert_eq!(chained.order(), 720);
        assert!(chained.elements().is_none());
        assert!(chained.contains(&cyc(6, &[2, 3])));
    }

    #[test]
    fn stabilizers_in_s4() {
        let g = PermGroup::from_generators(4, vec![cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])], 100)
            .unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.setwise_stabilizer(&[0, 1]).unwrap().order(), 4);
        assert_eq!(g.pointwise_stabilizer(&[0, 1]).unwrap().order(), 2);
        assert_eq!(g.setwise_stabilizer(&[0, 1, 2, 3]).unwrap().order(), 24);
    }

    #[test]
    fn normality_and_elementary_abelian() {
        let v4 = PermGroup::from_generators(
            4,
            vec![
                Permutation::from_images(vec![1, 0, 3, 2]).unwrap(),
                Permutation::from_images(vec![2, 3, 0, 1]).unwrap(),
            ],
            100,
        )
        .unwrap();
        let s4 =
            PermGroup::from_generators(4, vec![cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])], 100).unwrap();
        assert!(v4.is_elementary_abelian_2());
        assert!(v4.is_normal_in(&s4));
        assert!(!s4.is_elementary_abelian_2());
        let s3_in_s4 = PermGroup::from_generators(4, vec![cyc(4, &[0, 1]), cyc(4, &[0, 1, 2])], 100)
            .unwrap();
        assert!(!s3_in_s4.is_normal_in(&s4));
    }
}
