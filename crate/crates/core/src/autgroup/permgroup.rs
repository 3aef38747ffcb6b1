//! Permutation groups backed by a stabilizer chain built with the
//! incremental Schreier-Sims algorithm.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    // transversal[q] maps `point` to q; inverse kept alongside for sifting
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[point] = Some((id.clone(), id));
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal,
        }
    }
}

/// A permutation group on `0..degree` with exact order and membership.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: Vec::new(),
        }
    }

    pub fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        Self::with_base_prefix(degree, generators, &[])
    }

    /// Builds the chain so that its base starts with `prefix`.
    pub fn with_base_prefix(degree: usize, generators: Vec<Permutation>, prefix: &[usize]) -> Self {
        let generators: Vec<Permutation> = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        let mut group = PermGroup {
            degree,
            generators: Vec::new(),
            chain: prefix.iter().map(|&p| Level::new(p, degree)).collect(),
        };
        for g in &generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            group.extend(0, g.clone());
        }
        group.generators = generators;
        group
    }

    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.chain.iter().enumerate().skip(from) {
            let q = h.apply(level.point);
            match &level.transversal[q] {
                Some((_, inv)) => h = h.then(inv),
                None => return (h, l),
            }
        }
        (h, self.chain.len())
    }

    fn contains_from(&self, g: &Permutation, from: usize) -> bool {
        let (h, l) = self.sift(g, from);
        l == self.chain.len() && h.is_identity()
    }

    fn extend(&mut self, level: usize, g: Permutation) {
        if self.contains_from(&g, level) {
            return;
        }
        if level == self.chain.len() {
            let point = g
                .first_moved_point()
                .expect("non-member is not the identity");
            self.chain.push(Level::new(point, self.degree));
        }
        self.chain[level].gens.push(g.clone());

        // Schreier generators pairing the new generator with old orbit points,
        // then every generator with each newly reached point.
        let mut work: VecDeque<(usize, Permutation)> = self.chain[level]
            .orbit
            .iter()
            .map(|&p| (p, g.clone()))
            .collect();
        while let Some((p, s)) = work.pop_front() {
            let q = s.apply(p);
            let tp = self.chain[level].transversal[p]
                .as_ref()
                .expect("orbit point has a transversal")
                .0
                .clone();
            match self.chain[level].transversal[q].clone() {
                None => {
                    let tq = tp.then(&s);
                    let inv = tq.inverse();
                    let lev = &mut self.chain[level];
                    lev.transversal[q] = Some((tq, inv));
                    lev.orbit.push(q);
                    for t in lev.gens.clone() {
                        work.push_back((q, t));
                    }
                }
                Some((_, tq_inv)) => {
                    let schreier = tp.then(&s).then(&tq_inv);
                    if !schreier.is_identity() {
                        self.extend(level + 1, schreier);
                    }
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.iter().map(|l| l.point).collect()
    }

    /// Generators of every level of the chain, without repetition.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.chain {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Lengths of the fundamental orbits along the chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.chain.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.chain
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.iter().all(|l| l.orbit.len() == 1)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.contains_from(g, 0)
    }

    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[v] = true;
        let mut out = vec![v];
        let mut k = 0;
        while k < out.len() {
            let u = out[k];
            k += 1;
            for g in &self.generators {
                let w = g.apply(u);
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// All orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for v in 0..self.degree {
            if !seen[v] {
                let orbit = self.orbit(v);
                for &w in &orbit {
                    seen[w] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    /// The full stabilizer of `v`.
    pub fn point_stabilizer(&self, v: usize) -> PermGroup {
        let rebased = PermGroup::with_base_prefix(self.degree, self.strong_generators(), &[v]);
        let gens = rebased
            .chain
            .get(1)
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        PermGroup::new(self.degree, gens)
    }

    pub fn fixes_setwise(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.degree];
        for &v in set {
            inside[v] = true;
        }
        self.generators
            .iter()
            .all(|g| set.iter().all(|&v| inside[g.apply(v)]))
    }

    pub fn fixes_pointwise(&self, set: &[usize]) -> bool {
        self.generators
            .iter()
            .all(|g| set.iter().all(|&v| g.apply(v) == v))
    }

    /// True iff only the identity fixes any point.
    pub fn is_semiregular(&self) -> bool {
        self.orbits()
            .iter()
            .all(|orbit| self.point_stabilizer(orbit[0]).is_trivial())
    }

    /// Every element, by walking the transversals. Intended for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.chain.iter().rev() {
            let reps: Vec<&Permutation> = level
                .orbit
                .iter()
                .map(|&q| &level.transversal[q].as_ref().expect("orbit point").0)
                .collect();
            out = out
                .iter()
                .flat_map(|h| reps.iter().map(move |u| h.then(u)))
                .collect();
        }
        out
    }

    pub fn report(&self) -> PermGroupReport {
        PermGroupReport {
            degree: self.degree,
            order: self.order().to_string(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
        }
    }
}

/// Serialized form of a [`PermGroup`]: order as a decimal string, generators
/// in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermGroupReport {
    pub degree: usize,
    pub order: String,
    pub generators: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    /// Element count by closing the generators under composition.
    fn closure_count(degree: usize, gens: &[Permutation]) -> usize {
        let mut seen = HashSet::from([Permutation::identity(degree)]);
        let mut queue = vec![Permutation::identity(degree)];
        while let Some(a) = queue.pop() {
            for g in gens {
                let b = a.then(g);
                if seen.insert(b.clone()) {
                    queue.push(b);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let s5 = PermGroup::new(5, vec![p(5, "(0 1 2 3 4)"), p(5, "(0 1)")]);
        assert_eq!(s5.order(), BigUint::from(120u32));
        let a5 = PermGroup::new(5, vec![p(5, "(0 1 2 3 4)"), p(5, "(0 1 2)")]);
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert!(!a5.contains(&p(5, "(0 1)")));
        assert!(a5.contains(&p(5, "(0 1)(2 3)")));
        let s7 = PermGroup::new(7, vec![p(7, "(0 1 2 3 4 5 6)"), p(7, "(0 1)")]);
        assert_eq!(s7.order(), BigUint::from(5040u32));
        assert_eq!(s7.elements().len(), 5040);
    }

    #[test]
    fn matches_closure_count() {
        let cases: Vec<(usize, Vec<&str>)> = vec![
            (6, vec!["(0 1 2)(3 4 5)", "(0 3)"]),
            (8, vec!["(0 1 2 3)(4 5 6 7)", "(0 4)(1 5)"]),
            (6, vec!["(0 1)(2 3)", "(2 3)(4 5)"]),
            (7, vec!["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"]),
            (4, vec![]),
        ];
        for (n, gens) in cases {
            let gens: Vec<Permutation> = gens.into_iter().map(|g| p(n, g)).collect();
            let group = PermGroup::new(n, gens.clone());
            assert_eq!(group.order(), BigUint::from(closure_count(n, &gens)));
            for g in &gens {
                assert!(group.contains(g));
            }
        }
    }

    #[test]
    fn orbits_and_stabilizers() {
        let g = PermGroup::new(6, vec![p(6, "(0 1 2)"), p(6, "(3 4)")]);
        assert_eq!(g.orbits(), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        let stab = g.point_stabilizer(0);
        assert_eq!(stab.order(), BigUint::from(2u32));
        assert!(stab.fixes_pointwise(&[0, 1, 2]));
        assert!(g.fixes_setwise(&[3, 4]));
        assert!(!g.fixes_setwise(&[0, 3]));
        assert!(g.fixes_setwise(&[]) && g.fixes_pointwise(&[]));
        assert!(!g.is_semiregular());

        let regular = PermGroup::new(4, vec![p(4, "(0 1 2 3)")]);
        assert!(regular.point_stabilizer(2).is_trivial());
        assert!(regular.is_semiregular());
        assert!(PermGroup::trivial(3).is_semiregular());
        assert_eq!(PermGroup::trivial(3).orbits().len(), 3);

        let s4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)"), p(4, "(0 1)")]);
        assert_eq!(s4.point_stabilizer(3).order(), BigUint::from(6u32));
    }

    #[test]
    fn report_shape() {
        let g = PermGroup::new(3, vec![p(3, "(0 1 2)")]);
        let r = g.report();
        assert_eq!(r.order, "3");
        assert_eq!(r.generators, vec!["(0 1 2)"]);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"degree":3,"order":"3","generators":["(0 1 2)"]}"#);
    }
}
