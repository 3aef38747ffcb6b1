//! Ordered vertex partitions and equitable refinement for digraphs.
//!
//! Cells are identified by their start position, which is stable under
//! splitting: a split cell keeps its start for its first fragment. All
//! choices made during refinement depend only on cell positions and arc
//! counts, so refining an image of a partition under an automorphism yields
//! the image of the refinement, with an identical trace.

use std::collections::VecDeque;

use crate::digraph::Digraph;

/// Adjacency views the refiner needs, precomputed once per search.
pub(crate) struct RefineGraph<'a> {
    pub graph: &'a Digraph,
    pub digon_adj: Vec<Vec<usize>>,
}

impl<'a> RefineGraph<'a> {
    pub fn new(graph: &'a Digraph) -> Self {
        let digon_adj = (0..graph.order())
            .map(|u| {
                graph
                    .out_neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&v| graph.is_digon(u, v))
                    .collect()
            })
            .collect();
        RefineGraph { graph, digon_adj }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    elems: Vec<usize>,
    pos: Vec<usize>,
    cell_of: Vec<usize>,
    // indexed by cell start; meaningless elsewhere
    cell_len: Vec<usize>,
    cells: usize,
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x
        .wrapping_add(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(h << 6)
        .wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Scratch buffers reused across refinements.
pub(crate) struct Scratch {
    out_to: Vec<u32>,
    in_from: Vec<u32>,
    digons: Vec<u32>,
    touched: Vec<usize>,
    mark: Vec<bool>,
    in_queue: Vec<bool>,
}

impl Scratch {
    pub fn new(n: usize) -> Self {
        Scratch {
            out_to: vec![0; n],
            in_from: vec![0; n],
            digons: vec![0; n],
            touched: Vec::new(),
            mark: vec![false; n],
            in_queue: vec![false; n],
        }
    }
}

impl Partition {
    /// Cells ordered by colour value; a single cell when `colors` is `None`.
    pub fn from_colors(n: usize, colors: Option<&[usize]>) -> Self {
        let mut elems: Vec<usize> = (0..n).collect();
        if let Some(c) = colors {
            elems.sort_by_key(|&v| (c[v], v));
        }
        let mut p = Partition {
            pos: vec![0; n],
            cell_of: vec![0; n],
            cell_len: vec![0; n],
            elems,
            cells: 0,
        };
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && colors.is_none_or(|c| c[p.elems[end]] == c[p.elems[start]]) {
                end += 1;
            }
            p.cell_len[start] = end - start;
            for k in start..end {
                p.cell_of[p.elems[k]] = start;
                p.pos[p.elems[k]] = k;
            }
            p.cells += 1;
            start = end;
        }
        p
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    pub fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.len() {
            out.push(s);
            s += self.cell_len[s];
        }
        out
    }

    pub fn cell(&self, start: usize) -> &[usize] {
        &self.elems[start..start + self.cell_len[start]]
    }

    /// Vertex at each position; a labelling once the partition is discrete.
    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    /// First smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.len() {
            let l = self.cell_len[s];
            if l > 1 && best.is_none_or(|(_, bl)| l < bl) {
                best = Some((s, l));
            }
            s += l;
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell and returns the new singleton's
    /// start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell_of[v];
        let l = self.cell_len[s];
        debug_assert!(l > 1);
        let pv = self.pos[v];
        let w = self.elems[s];
        self.elems.swap(s, pv);
        self.pos[w] = pv;
        self.pos[v] = s;
        self.cell_len[s] = 1;
        self.cell_len[s + 1] = l - 1;
        for k in s + 1..s + l {
            self.cell_of[self.elems[k]] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition finer than `self`, using
    /// the cells starting at `splitters` as initial splitters. Returns a hash
    /// of the refinement trace.
    pub fn refine(
        &mut self,
        g: &RefineGraph<'_>,
        splitters: &[usize],
        scratch: &mut Scratch,
        seed: u64,
    ) -> u64 {
        let mut trace = seed;
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in splitters {
            if !scratch.in_queue[s] {
                scratch.in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut members: Vec<(u64, usize)> = Vec::new();
        while let Some(w) = queue.pop_front() {
            scratch.in_queue[w] = false;
            if self.is_discrete() {
                continue;
            }
            let wl = self.cell_len[w];
            for k in w..w + wl {
                let v = self.elems[k];
                for &u in g.graph.in_neighbors(v) {
                    touch(scratch, u);
                    scratch.out_to[u] += 1;
                }
                for &u in g.graph.out_neighbors(v) {
                    touch(scratch, u);
                    scratch.in_from[u] += 1;
                }
                for &u in &g.digon_adj[v] {
                    scratch.digons[u] += 1;
                }
            }
            let mut cells: Vec<usize> = scratch.touched.iter().map(|&u| self.cell_of[u]).collect();
            cells.sort_unstable();
            cells.dedup();
            for &s in &cells {
                let l = self.cell_len[s];
                if l == 1 {
                    continue;
                }
                members.clear();
                members.extend(self.elems[s..s + l].iter().map(|&u| {
                    let key = ((scratch.out_to[u] as u64) << 42)
                        | ((scratch.in_from[u] as u64) << 21)
                        | scratch.digons[u] as u64;
                    (key, u)
                }));
                members.sort_unstable();
                if members[0].0 == members[l - 1].0 {
                    continue;
                }
                trace = mix(trace, (w as u64) << 32 | s as u64);
                let mut frag_start = s;
                for k in 0..l {
                    let (key, u) = members[k];
                    self.elems[s + k] = u;
                    self.pos[u] = s + k;
                    if k > 0 && key != members[k - 1].0 {
                        self.cell_len[frag_start] = s + k - frag_start;
                        trace = mix(trace, members[k - 1].0);
                        trace = mix(trace, (s + k - frag_start) as u64);
                        frag_start = s + k;
                        self.cells += 1;
                    }
                    self.cell_of[u] = frag_start;
                }
                self.cell_len[frag_start] = s + l - frag_start;
                trace = mix(trace, members[l - 1].0);
                trace = mix(trace, (s + l - frag_start) as u64);
                let mut f = s;
                while f < s + l {
                    if !scratch.in_queue[f] {
                        scratch.in_queue[f] = true;
                        queue.push_back(f);
                    }
                    f += self.cell_len[f];
                }
            }
            for &u in &scratch.touched {
                scratch.out_to[u] = 0;
                scratch.in_from[u] = 0;
                scratch.digons[u] = 0;
                scratch.mark[u] = false;
            }
            scratch.touched.clear();
        }
        mix(trace, self.cells as u64)
    }
}

#[inline]
fn touch(scratch: &mut Scratch, u: usize) {
    if !scratch.mark[u] {
        scratch.mark[u] = true;
        scratch.touched.push(u);
    }
}
