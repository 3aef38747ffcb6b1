//! Plain digraphs with the neighbourhood and substructure predicates used to
//! reason about m-partite Cayley digraphs.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub const HAMILTONIAN_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connectivity {
    /// Reachability in the underlying undirected graph.
    Weak,
    /// Directed reachability between every ordered pair.
    Strong,
}

#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
    colors: Option<Vec<usize>>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.out_adj == other.out_adj && self.colors == other.colors
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a loopless digraph. Duplicate arcs, loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(u, _)) = arcs.iter().find(|(u, v)| u == v) {
            return Err(Error::Precondition(format!("self-loop at vertex {u}")));
        }
        Self::with_loops(n, arcs)
    }

    /// Like [`Digraph::new`] but permits self-loops.
    pub fn with_loops(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, size: n });
                }
            }
            let word = &mut bits[u * words + v / 64];
            if *word & (1 << (v % 64)) != 0 {
                return Err(Error::DuplicateArc(u, v));
            }
            *word |= 1 << (v % 64);
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Digraph {
            n,
            out_adj,
            in_adj,
            words,
            bits,
            colors: None,
        })
    }

    /// Attaches a vertex colouring; automorphisms must preserve it.
    pub fn with_colors(mut self, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != self.n {
            return Err(Error::Precondition(format!(
                "{} colours for {} vertices",
                colors.len(),
                self.n
            )));
        }
        self.colors = Some(colors);
        Ok(self)
    }

    pub fn uncolored(&self) -> Self {
        let mut d = self.clone();
        d.colors = None;
        d
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(Vec::len).sum()
    }

    pub fn colors(&self) -> Option<&[usize]> {
        self.colors.as_deref()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors.as_ref().map_or(0, |c| c[v])
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.has_arc(v, v))
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.out_adj[v].len() == k && self.in_adj[v].len() == k)
    }

    /// The common valency if every in- and out-degree agrees.
    pub fn valency(&self) -> Option<usize> {
        let k = self.out_adj.first().map_or(0, Vec::len);
        self.is_k_regular(k).then_some(k)
    }

    /// Vertices reachable by walks of length exactly `k` from `x`.
    pub fn k_step_out_neighborhood(&self, x: usize, k: usize) -> Result<Vec<usize>> {
        if x >= self.n {
            return Err(Error::IndexOutOfRange {
                index: x,
                size: self.n,
            });
        }
        let mut current = vec![x];
        for _ in 0..k {
            let mut mark = vec![false; self.n];
            for &y in &current {
                for &z in &self.out_adj[y] {
                    mark[z] = true;
                }
            }
            current = (0..self.n).filter(|&z| mark[z]).collect();
        }
        Ok(current)
    }

    /// The subdigraph induced on `set`, with vertices renumbered in ascending
    /// order of their original index. The second value maps new indices to
    /// original ones.
    pub fn induced_subdigraph(&self, set: &[usize]) -> Result<(Digraph, Vec<usize>)> {
        let mut keep = vec![usize::MAX; self.n];
        let mut mapping: Vec<usize> = set.to_vec();
        mapping.sort_unstable();
        mapping.dedup();
        for (new, &old) in mapping.iter().enumerate() {
            if old >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: old,
                    size: self.n,
                });
            }
            keep[old] = new;
        }
        let arcs: Vec<(usize, usize)> = mapping
            .iter()
            .flat_map(|&u| {
                let keep = &keep;
                self.out_adj[u]
                    .iter()
                    .filter(move |&&v| keep[v] != usize::MAX)
                    .map(move |&v| (keep[u], keep[v]))
            })
            .collect();
        let mut sub = Digraph::with_loops(mapping.len(), &arcs)?;
        if let Some(colors) = &self.colors {
            sub.colors = Some(mapping.iter().map(|&v| colors[v]).collect());
        }
        Ok((sub, mapping))
    }

    #[inline]
    pub fn is_digon(&self, u: usize, v: usize) -> bool {
        u != v && self.has_arc(u, v) && self.has_arc(v, u)
    }

    pub fn is_oriented(&self) -> bool {
        self.arcs().all(|(u, v)| !self.is_digon(u, v))
    }

    /// All pairs `{u, v}` (with `u < v`) joined by arcs in both directions.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        self.arcs()
            .filter(|&(u, v)| u < v && self.has_arc(v, u))
            .collect()
    }

    /// Number of undirected edges at each vertex.
    pub fn digon_degrees(&self) -> Vec<usize> {
        (0..self.n)
            .map(|u| {
                self.out_adj[u]
                    .iter()
                    .filter(|&&v| self.is_digon(u, v))
                    .count()
            })
            .collect()
    }

    pub fn is_connected(&self, mode: Connectivity) -> bool {
        if self.n == 0 {
            return true;
        }
        match mode {
            Connectivity::Weak => self.reach(0, true, true).iter().all(|&r| r),
            Connectivity::Strong => {
                self.reach(0, true, false).iter().all(|&r| r)
                    && self.reach(0, false, true).iter().all(|&r| r)
            }
        }
    }

    fn reach(&self, start: usize, forward: bool, backward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let outs = if forward { &self.out_adj[u][..] } else { &[] };
            let ins = if backward { &self.in_adj[u][..] } else { &[] };
            for &v in outs.iter().chain(ins) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Directed Hamiltonian cycles that use no arc belonging to a digon.
    /// Each cycle is listed once, starting at vertex 0.
    pub fn directed_hamiltonian_oriented_cycles(&self) -> Result<Vec<Vec<usize>>> {
        if self.n > HAMILTONIAN_CAP {
            return Err(Error::TooLarge {
                size: self.n,
                cap: HAMILTONIAN_CAP,
            });
        }
        if self.n == 0 {
            return Ok(Vec::new());
        }
        let one_way: Vec<Vec<usize>> = (0..self.n)
            .map(|u| {
                self.out_adj[u]
                    .iter()
                    .copied()
                    .filter(|&v| !self.is_digon(u, v))
                    .collect()
            })
            .collect();
        if self.n == 1 {
            return Ok(if one_way[0].contains(&0) {
                vec![vec![0]]
            } else {
                vec![]
            });
        }
        let mut cycles = Vec::new();
        let mut path = vec![0];
        self.extend_cycle(&one_way, &mut path, 1u32, &mut cycles);
        Ok(cycles)
    }

    fn extend_cycle(
        &self,
        one_way: &[Vec<usize>],
        path: &mut Vec<usize>,
        visited: u32,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("path starts at vertex 0");
        if path.len() == self.n {
            if one_way[last].contains(&0) {
                cycles.push(path.clone());
            }
            return;
        }
        for &v in &one_way[last] {
            if visited & (1 << v) == 0 {
                path.push(v);
                self.extend_cycle(one_way, path, visited | (1 << v), cycles);
                path.pop();
            }
        }
    }

    /// Reads the digraph text format: `n <count>` followed by one `u v`
    /// line per arc. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty digraph file"))?;
        let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["n", count] => count
                .parse::<usize>()
                .map_err(|_| Error::parse(hline, format!("bad vertex count {count:?}")))?,
            _ => return Err(Error::parse(hline, "expected `n <count>`")),
        };
        let mut arcs = Vec::new();
        for (line, body) in lines {
            let ends: Vec<usize> = body
                .split_whitespace()
                .map(|w| w.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(line, format!("bad arc {body:?}")))?;
            match ends[..] {
                [u, v] => arcs.push((u, v)),
                _ => return Err(Error::parse(line, format!("expected `u v`, got {body:?}"))),
            }
        }
        Digraph::with_loops(n, &arcs)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// DOT rendering in which each digon is a single undirected edge and
    /// every other arc is an arrow.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let name = |v: usize| match labels {
            Some(l) => format!("\"{}\"", l[v]),
            None => v.to_string(),
        };
        let mut out = String::from("digraph G {\n");
        for v in 0..self.n {
            match &self.colors {
                Some(c) => {
                    let _ = writeln!(out, "  {} [group={}];", name(v), c[v]);
                }
                None => {
                    let _ = writeln!(out, "  {};", name(v));
                }
            }
        }
        for (u, v) in self.arcs() {
            if self.is_digon(u, v) {
                if u < v {
                    let _ = writeln!(out, "  {} -> {} [dir=none];", name(u), name(v));
                }
            } else {
                let _ = writeln!(out, "  {} -> {};", name(u), name(v));
            }
        }
        out.push_str("}\n");
        out
    }
}
