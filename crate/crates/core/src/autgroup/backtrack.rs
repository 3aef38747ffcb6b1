//! Individualize-and-refine search for generators of a digraph's
//! automorphism group.
//!
//! The first path of the search tree always individualizes the least vertex
//! of the target cell. At each level, from the deepest up, every other vertex
//! of that level's target cell that is not already in the orbit of the
//! first-path vertex is tried: its subtree is searched for one leaf whose
//! labelling differs from the first leaf by an automorphism. The automorphisms
//! found this way form a strong generating set relative to the first-path
//! vertices.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::partition::{Partition, RefineGraph, Scratch};
use crate::digraph::Digraph;
use crate::perm::Permutation;

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub pruned_by_orbit: u64,
    pub pruned_by_trace: u64,
    pub generators: usize,
    pub base_length: usize,
    pub elapsed_ms: f64,
}

pub(crate) struct SearchOutcome {
    pub generators: Vec<Permutation>,
    pub base: Vec<usize>,
    /// Product of the stabilizer orbit lengths of the base points.
    pub order: BigUint,
    pub stats: SearchStats,
}

struct Level {
    partition: Partition,
    target: usize,
    trace: u64,
}

struct Searcher<'a> {
    rg: RefineGraph<'a>,
    graph: &'a Digraph,
    colors: Option<&'a [usize]>,
    scratch: Scratch,
    first: Vec<Level>,
    first_leaf: Vec<usize>,
    stats: SearchStats,
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }

    fn absorb(&mut self, g: &Permutation) {
        for v in 0..g.degree() {
            self.union(v, g.apply(v));
        }
    }
}

pub(crate) fn search(graph: &Digraph, use_colors: bool) -> SearchOutcome {
    let start = Instant::now();
    let n = graph.order();
    let colors = if use_colors { graph.colors() } else { None };
    let mut s = Searcher {
        rg: RefineGraph::new(graph),
        graph,
        colors,
        scratch: Scratch::new(n),
        first: Vec::new(),
        first_leaf: Vec::new(),
        stats: SearchStats::default(),
    };
    if n == 0 {
        return SearchOutcome {
            generators: Vec::new(),
            base: Vec::new(),
            order: BigUint::one(),
            stats: s.stats,
        };
    }

    let mut root = Partition::from_colors(n, colors);
    let all = root.cell_starts();
    let root_trace = root.refine(&s.rg, &all, &mut s.scratch, 0x5eed);
    s.stats.nodes += 1;

    // first path
    let mut base = Vec::new();
    let mut current = root;
    let mut trace = root_trace;
    while let Some(target) = current.target_cell() {
        let v = *current.cell(target).iter().min().expect("non-empty cell");
        let mut child = current.clone();
        let singleton = child.individualize(v);
        let child_trace = child.refine(
            &s.rg,
            &[singleton],
            &mut s.scratch,
            node_seed(target, child.len()),
        );
        s.stats.nodes += 1;
        s.first.push(Level {
            partition: current,
            target,
            trace,
        });
        base.push(v);
        current = child;
        trace = child_trace;
    }
    s.first_leaf = current.elems().to_vec();
    // traces of first-path children, for comparison during subtree search
    let mut child_traces: Vec<u64> = s.first.iter().skip(1).map(|l| l.trace).collect();
    child_traces.push(trace);

    let mut generators: Vec<Permutation> = Vec::new();
    let mut orbits = UnionFind::new(n);
    let mut order = BigUint::one();
    for level in (0..s.first.len()).rev() {
        let target = s.first[level].target;
        let b = base[level];
        let mut cell: Vec<usize> = s.first[level].partition.cell(target).to_vec();
        cell.sort_unstable();
        let mut failed: Vec<usize> = Vec::new();
        for &v in &cell {
            if v == b {
                continue;
            }
            let rv = orbits.find(v);
            if rv == orbits.find(b) || failed.iter().any(|&f| orbits.find(f) == rv) {
                s.stats.pruned_by_orbit += 1;
                continue;
            }
            let mut child = s.first[level].partition.clone();
            let singleton = child.individualize(v);
            let t = child.refine(&s.rg, &[singleton], &mut s.scratch, node_seed(target, n));
            s.stats.nodes += 1;
            if t != child_traces[level] {
                s.stats.pruned_by_trace += 1;
                failed.push(v);
                continue;
            }
            match s.find_leaf(child, level + 1, &child_traces) {
                Some(gamma) => {
                    orbits.absorb(&gamma);
                    generators.push(gamma);
                }
                None => failed.push(v),
            }
        }
        let rb = orbits.find(b);
        let orbit_len = cell.iter().filter(|&&v| orbits.find(v) == rb).count();
        order *= BigUint::from(orbit_len);
    }

    s.stats.generators = generators.len();
    s.stats.base_length = base.len();
    s.stats.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    SearchOutcome {
        generators,
        base,
        order,
        stats: s.stats,
    }
}

fn node_seed(target: usize, n: usize) -> u64 {
    ((target as u64) << 32) ^ n as u64
}

impl Searcher<'_> {
    /// Depth-first search below a node at `depth` whose trace matched the
    /// first path, for a leaf equivalent to the first leaf.
    fn find_leaf(
        &mut self,
        node: Partition,
        depth: usize,
        child_traces: &[u64],
    ) -> Option<Permutation> {
        if node.is_discrete() {
            self.stats.leaves += 1;
            return self.leaf_automorphism(node.elems());
        }
        if depth >= self.first.len() {
            return None;
        }
        let target = node.target_cell()?;
        if target != self.first[depth].target
            || node.cell(target).len() != self.first[depth].partition.cell(target).len()
        {
            self.stats.pruned_by_trace += 1;
            return None;
        }
        let mut cell = node.cell(target).to_vec();
        cell.sort_unstable();
        for v in cell {
            let mut child = node.clone();
            let singleton = child.individualize(v);
            let t = child.refine(
                &self.rg,
                &[singleton],
                &mut self.scratch,
                node_seed(target, child.len()),
            );
            self.stats.nodes += 1;
            if t != child_traces[depth] {
                self.stats.pruned_by_trace += 1;
                continue;
            }
            if let Some(gamma) = self.find_leaf(child, depth + 1, child_traces) {
                return Some(gamma);
            }
        }
        None
    }

    fn leaf_automorphism(&self, leaf: &[usize]) -> Option<Permutation> {
        let n = leaf.len();
        let mut images = vec![0; n];
        for (p, &v) in self.first_leaf.iter().enumerate() {
            images[v] = leaf[p];
        }
        let ok_colors = self
            .colors
            .is_none_or(|c| (0..n).all(|v| c[v] == c[images[v]]));
        let ok_arcs = ok_colors
            && self
                .graph
                .arcs()
                .all(|(u, v)| self.graph.has_arc(images[u], images[v]));
        if ok_arcs {
            Permutation::from_images(images).ok()
        } else {
            None
        }
    }
}
