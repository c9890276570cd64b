//! A plain deterministic Schreier-Sims stabilizer chain, used to compute
//! exact group orders and membership when full element enumeration is out
//! of reach.

use std::collections::HashMap;

use super::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    /// generators of the chain group at this level (they all fix the
    /// base points of the shallower levels)
    gens: Vec<Permutation>,
    /// orbit point -> coset representative u with u(point) = orbit point
    transversal: HashMap<usize, Permutation>,
}

impl Level {
    fn new(degree: usize, point: usize) -> Self {
        let mut transversal = HashMap::new();
        transversal.insert(point, Permutation::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            transversal,
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.transversal.clear();
        self.transversal
            .insert(self.point, Permutation::identity(degree));
        let mut frontier = vec![self.point];
        while let Some(p) = frontier.pop() {
            let rep = self.transversal[&p].clone();
            for g in &self.gens {
                let q = g.apply(p);
                if !self.transversal.contains_key(&q) {
                    self.transversal.insert(q, g.compose(&rep));
                    frontier.push(q);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            if !chain.contains(g) {
                chain.add_at(0, g.clone());
            }
        }
        chain
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.transversal.len() as u128)
            .product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.contains_from(0, g)
    }

    fn contains_from(&self, start: usize, g: &Permutation) -> bool {
        let mut h = g.clone();
        for level in &self.levels[start.min(self.levels.len())..] {
            let p = h.apply(level.point);
            match level.transversal.get(&p) {
                Some(rep) => h = rep.inverse().compose(&h),
                None => return false,
            }
        }
        h.is_identity()
    }

    /// Installs a new generator of the chain group at `level` (the element
    /// must fix the base points above it) and restores the strong
    /// generation property by sifting all Schreier generators downward.
    fn add_at(&mut self, level: usize, g: Permutation) {
        if g.is_identity() {
            return;
        }
        if level == self.levels.len() {
            let point = (0..self.degree)
                .find(|&i| g.apply(i) != i)
                .expect("non-identity moves a point");
            self.levels.push(Level::new(self.degree, point));
        }
        self.levels[level].gens.push(g);
        self.levels[level].recompute_orbit(self.degree);

        let (points, gens): (Vec<usize>, Vec<Permutation>) = {
            let l = &self.levels[level];
            (l.transversal.keys().copied().collect(), l.gens.clone())
        };
        for p in points {
            let rep = self.levels[level].transversal[&p].clone();
            for s in &gens {
                let target = self.levels[level].transversal[&s.apply(p)].clone();
                let schreier = target.inverse().compose(&s.compose(&rep));
                if !self.contains_from(level + 1, &schreier) {
                    self.add_at(level + 1, schreier);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycle(n, c)
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7usize {
            let gens = vec![cyc(n, &[0, 1]), cyc(n, &(0..n).collect::<Vec<_>>())];
            let chain = StabChain::new(n, &gens);
            let expect: u128 = (1..=n as u128).product();
            assert_eq!(chain.order(), expect);
        }
    }

    #[test]
    fn alternating_group_a5() {
        let gens = vec![cyc(5, &[0, 1, 2]), cyc(5, &[2, 3, 4])];
        let chain = StabChain::new(5, &gens);
        assert_eq!(chain.order(), 60);
        assert!(chain.contains(&cyc(5, &[0, 1, 2])));
        assert!(!chain.contains(&cyc(5, &[0, 1]))); // odd permutation
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::new(4, &[Permutation::identity(4)]);
        assert_eq!(chain.order(), 1);
        assert!(chain.contains(&Permutation::identity(4)));
        assert!(!chain.contains(&cyc(4, &[0, 1])));
    }

    #[test]
    fn klein_four_group() {
        let gens = vec![
            Permutation::from_images(vec![1, 0, 3, 2]).unwrap(),
            Permutation::from_images(vec![2, 3, 0, 1]).unwrap(),
        ];
        let chain = StabChain::new(4, &gens);
        assert_eq!(chain.order(), 4);
    }

    #[test]
    fn membership_of_random_products() {
        let gens = vec![cyc(6, &[0, 1]), cyc(6, &(0..6).collect::<Vec<_>>())];
        let chain = StabChain::new(6, &gens);
        assert_eq!(chain.order(), 720);
        let w = gens[0].compose(&gens[1]).compose(&gens[0].inverse());
        assert!(chain.contains(&w));
    }
}
