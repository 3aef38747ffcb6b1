//! m-Cayley digraphs `Cay(G, T_{i,j})`: vertex `g_i` is encoded as
//! `i·|G| + g`, and each `t ∈ T_{i,j}` contributes the arcs
//! `g_i → (t·g)_j` for all `g`.

use serde::{Deserialize, Serialize};

use crate::autgroup::{is_automorphism, PermGroup};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::perm::Permutation;

/// An `m × m` matrix of connection sets over a group of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSpec {
    m: usize,
    n: usize,
    sets: Vec<Vec<Elem>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDoc {
    m: usize,
    n: usize,
    sets: Vec<SpecEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecEntry {
    i: usize,
    j: usize,
    elements: Vec<Elem>,
}

impl ConnectionSpec {
    /// All sets empty.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Unsupported(format!(
                "m = {m}: a 1-partite Cayley digraph has no arcs, so m >= 2 is required"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        Ok(ConnectionSpec {
            m,
            n,
            sets: vec![Vec::new(); m * m],
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn group_order(&self) -> usize {
        self.n
    }

    /// Replaces `T_{i,j}` (indices taken mod m). Elements are sorted and
    /// deduplicated.
    pub fn set(&mut self, i: usize, j: usize, elements: &[Elem]) -> Result<&mut Self> {
        let (i, j) = (i % self.m, j % self.m);
        if let Some(&bad) = elements.iter().find(|&&e| e >= self.n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: self.n,
            });
        }
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        self.sets[i * self.m + j] = elems;
        Ok(self)
    }

    pub fn with(mut self, i: usize, j: usize, elements: &[Elem]) -> Result<Self> {
        self.set(i, j, elements)?;
        Ok(self)
    }

    pub fn get(&self, i: usize, j: usize) -> &[Elem] {
        &self.sets[(i % self.m) * self.m + j % self.m]
    }

    pub fn is_partite(&self) -> bool {
        (0..self.m).all(|i| self.get(i, i).is_empty())
    }

    /// Out-valency of every vertex in part `i`.
    pub fn out_valency(&self, i: usize) -> usize {
        (0..self.m).map(|j| self.get(i, j).len()).sum()
    }

    /// In-valency of every vertex in part `j`.
    pub fn in_valency(&self, j: usize) -> usize {
        (0..self.m).map(|i| self.get(i, j).len()).sum()
    }

    /// The common valency if all parts have equal in- and out-valency.
    pub fn valency(&self) -> Option<usize> {
        let k = self.out_valency(0);
        (0..self.m)
            .all(|i| self.out_valency(i) == k && self.in_valency(i) == k)
            .then_some(k)
    }

    /// Canonical JSON: non-empty sets only, ordered by `(i, j)`, elements
    /// ascending.
    pub fn to_json(&self) -> String {
        let doc = SpecDoc {
            m: self.m,
            n: self.n,
            sets: (0..self.m)
                .flat_map(|i| (0..self.m).map(move |j| (i, j)))
                .filter(|&(i, j)| !self.get(i, j).is_empty())
                .map(|(i, j)| SpecEntry {
                    i,
                    j,
                    elements: self.get(i, j).to_vec(),
                })
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("spec serializes");
        out.push('\n');
        out
    }

    /// Parses the JSON document written by [`ConnectionSpec::to_json`].
    /// Omitted pairs are empty; repeated pairs or elements are rejected.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SpecDoc = serde_json::from_str(text)?;
        let mut spec = ConnectionSpec::new(doc.m, doc.n)?;
        let mut seen = vec![false; doc.m * doc.m];
        for e in doc.sets {
            if e.i >= doc.m || e.j >= doc.m {
                return Err(Error::IndexOutOfRange {
                    index: e.i.max(e.j),
                    size: doc.m,
                });
            }
            if std::mem::replace(&mut seen[e.i * doc.m + e.j], true) {
                return Err(Error::Precondition(format!(
                    "pair ({}, {}) listed twice",
                    e.i, e.j
                )));
            }
            let before = e.elements.len();
            spec.set(e.i, e.j, &e.elements)?;
            if spec.get(e.i, e.j).len() != before {
                return Err(Error::Precondition(format!(
                    "repeated element in T({}, {})",
                    e.i, e.j
                )));
            }
        }
        Ok(spec)
    }
}

/// A built m-Cayley digraph together with the data it came from.
#[derive(Clone, Debug)]
pub struct MCayleyDigraph {
    digraph: Digraph,
    group: FiniteGroup,
    spec: ConnectionSpec,
}

impl MCayleyDigraph {
    /// Builds `Cay(G, T_{i,j})`, coloured by part.
    pub fn build(group: &FiniteGroup, spec: &ConnectionSpec) -> Result<Self> {
        let n = group.order();
        if spec.group_order() != n {
            return Err(Error::OrderMismatch {
                spec: spec.group_order(),
                group: n,
            });
        }
        let m = spec.m();
        let mut arcs = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for &t in spec.get(i, j) {
                    for g in 0..n {
                        arcs.push((i * n + g, j * n + group.mul(t, g)));
                    }
                }
            }
        }
        let digraph =
            Digraph::with_loops(m * n, &arcs)?.with_colors((0..m * n).map(|v| v / n).collect())?;
        Ok(MCayleyDigraph {
            digraph,
            group: group.clone(),
            spec: spec.clone(),
        })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn spec(&self) -> &ConnectionSpec {
        &self.spec
    }

    pub fn m(&self) -> usize {
        self.spec.m()
    }

    #[inline]
    pub fn vertex(&self, g: Elem, part: usize) -> usize {
        part * self.group.order() + g
    }

    #[inline]
    pub fn part_of(&self, v: usize) -> usize {
        v / self.group.order()
    }

    #[inline]
    pub fn element_of(&self, v: usize) -> Elem {
        v % self.group.order()
    }

    /// Vertices of `G_i`.
    pub fn part(&self, i: usize) -> Vec<usize> {
        let n = self.group.order();
        (i * n..(i + 1) * n).collect()
    }

    /// Labels of the form `x^2_1` for each vertex.
    pub fn vertex_labels(&self) -> Vec<String> {
        (0..self.digraph.order())
            .map(|v| {
                format!(
                    "{}_{}",
                    self.group.label(self.element_of(v)),
                    self.part_of(v)
                )
            })
            .collect()
    }

    /// `R(g): x_i ↦ (x·g)_i`.
    pub fn right_translation(&self, g: Elem) -> Result<Permutation> {
        self.group.check(g)?;
        let images = (0..self.digraph.order())
            .map(|v| self.vertex(self.group.mul(self.element_of(v), g), self.part_of(v)))
            .collect();
        Permutation::from_images(images)
    }

    /// `R(G)`, generated by the translations of the designated generators.
    pub fn right_regular_group(&self) -> PermGroup {
        let gens = self
            .group
            .generators()
            .iter()
            .map(|&g| self.right_translation(g).expect("generator in range"))
            .collect();
        PermGroup::new(self.digraph.order(), gens)
    }

    /// The part-swapping map `g_0 ↦ (y·g)_1`, `g_1 ↦ g_0`, which is an
    /// automorphism whenever `G` is abelian and `T_{0,1} = y·T_{1,0}`.
    pub fn swap_automorphism(&self, y: Elem) -> Result<Permutation> {
        self.group.check(y)?;
        if self.m() != 2 {
            return Err(Error::Precondition(format!(
                "m = {} (need m = 2)",
                self.m()
            )));
        }
        if !self.group.is_abelian() {
            return Err(Error::Precondition("group is not abelian".into()));
        }
        let t10 = self.group.left_translate(y, self.spec.get(1, 0));
        if t10 != self.spec.get(0, 1) {
            return Err(Error::Precondition(format!(
                "T(0,1) = {:?} differs from y*T(1,0) = {:?} for y = {}",
                self.spec.get(0, 1),
                t10,
                self.group.label(y)
            )));
        }
        let n = self.group.order();
        let mut images = vec![0; 2 * n];
        for g in 0..n {
            images[self.vertex(g, 0)] = self.vertex(self.group.mul(y, g), 1);
            images[self.vertex(g, 1)] = self.vertex(g, 0);
        }
        let tau = Permutation::from_images(images)?;
        debug_assert!(is_automorphism(&self.digraph.uncolored(), &tau));
        Ok(tau)
    }
}

/// Semiregularity of `group` on its domain, with its orbits.
pub fn verify_semiregular(group: &PermGroup) -> (bool, Vec<Vec<usize>>) {
    (group.is_semiregular(), group.orbits())
}

/// The Cayley digraph `Cay(G, S)` with arcs `g → s·g`.
pub fn cayley_digraph(group: &FiniteGroup, set: &[Elem]) -> Result<Digraph> {
    for &s in set {
        group.check(s)?;
    }
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let arcs: Vec<(usize, usize)> = (0..group.order())
        .flat_map(|g| set.iter().map(move |&s| (g, group.mul(s, g))))
        .collect();
    Digraph::with_loops(group.order(), &arcs)
}
