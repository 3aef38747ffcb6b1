//! Finite groups as multiplication tables over element indices `0..n`.
//!
//! The identity is always index 0. `multiply(a, b)` is "a then b": for
//! permutation groups it composes left to right, for cyclic groups it adds
//! exponents.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_CLOSURE_CAP: usize = 5000;

/// Element index. The identity is always [`IDENTITY`].
pub type Elem = usize;
pub const IDENTITY: Elem = 0;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<Elem>,
    labels: Option<Vec<String>>,
    generators: Vec<Elem>,
}

impl FiniteGroup {
    /// The cyclic group of order `n`; element `i` is `x^i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(((a + b) % n) as u32);
            }
        }
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            labels: Some(labels),
            generators: if n == 1 { vec![] } else { vec![1] },
        })
    }

    pub fn from_permutations(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::from_permutations_capped(degree, gens, DEFAULT_CLOSURE_CAP)
    }

    /// Closure of `gens` under composition, indexed in breadth-first
    /// discovery order: identity, then the generators in the given order,
    /// then products.
    pub fn from_permutations_capped(
        degree: usize,
        gens: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidOrder(0));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let mut elems = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, Elem> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        // BFS tree: element = parent · generator
        let mut parent: Vec<Option<(Elem, usize)>> = vec![None];

        let mut designated = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            let idx = *index.entry(g.clone()).or_insert_with(|| {
                elems.push(g.clone());
                parent.push(Some((IDENTITY, k)));
                elems.len() - 1
            });
            designated.push(idx);
        }
        if elems.len() > cap {
            return Err(Error::GroupTooLarge { cap });
        }

        let mut queue: VecDeque<Elem> = (0..elems.len()).collect();
        while let Some(a) = queue.pop_front() {
            for (k, g) in gens.iter().enumerate() {
                let prod = elems[a].then(g);
                if !index.contains_key(&prod) {
                    if elems.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(prod.clone(), elems.len());
                    elems.push(prod);
                    parent.push(Some((a, k)));
                    queue.push_back(elems.len() - 1);
                }
            }
        }

        let n = elems.len();
        // right multiplication by each generator
        let right: Vec<Vec<Elem>> = (0..n)
            .map(|a| gens.iter().map(|g| index[&elems[a].then(g)]).collect())
            .collect();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n] = a as u32;
        }
        // elements were discovered after their BFS parent, so columns fill in order
        for b in 1..n {
            let (p, k) = parent[b].expect("non-identity element has a parent");
            for a in 0..n {
                let ap = table[a * n + p] as usize;
                table[a * n + b] = right[ap][k] as u32;
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            let inv = elems[a].inverse();
            inverse[a] = index[&inv];
        }
        let labels = elems.iter().map(|p| p.to_string()).collect();
        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            labels: Some(labels),
            generators: designated,
        })
    }

    /// Symmetric group on `k` points, generated by `(0 1 ... k-1)` and `(0 1)`.
    pub fn symmetric(k: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if k >= 2 {
            gens.push(Permutation::from_cycles(k, &[(0..k).collect()])?);
        }
        if k >= 3 {
            gens.push(Permutation::from_cycles(k, &[vec![0, 1]])?);
        }
        Self::from_permutations(k.max(1), &gens)
    }

    /// Dihedral group of order `2k` acting on the `k`-gon: rotation, reflection.
    pub fn dihedral(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::Unsupported(format!("dihedral group of a {k}-gon")));
        }
        let rotation = Permutation::from_cycles(k, &[(0..k).collect()])?;
        let reflection: Vec<Vec<usize>> = (1..k)
            .filter(|&i| i < k - i)
            .map(|i| vec![i, k - i])
            .collect();
        let reflection = Permutation::from_cycles(k, &reflection)?;
        Self::from_permutations(k, &[rotation, reflection])
    }

    /// Quaternion group of order 8 in its regular representation,
    /// generated by `i` and `j`.
    pub fn quaternion() -> Result<Self> {
        // element 4*s + u is (-1)^s * [1, i, j, k][u]
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mul = |a: usize, b: usize| {
            let (s, u) = UNIT[a % 4][b % 4];
            4 * ((a / 4 + b / 4 + s) % 2) + u
        };
        let right = |g: usize| Permutation::from_images((0..8).map(|a| mul(a, g)).collect());
        Self::from_permutations(8, &[right(1)?, right(2)?])
    }

    /// `Z_a × Z_b` acting on `a + b` points, generated by the two cycles.
    pub fn cyclic_product(a: usize, b: usize) -> Result<Self> {
        if a < 2 || b < 2 {
            return Err(Error::Unsupported(format!(
                "Z_{a} x Z_{b} with a trivial factor"
            )));
        }
        let n = a + b;
        let x = Permutation::from_cycles(n, &[(0..a).collect()])?;
        let y = Permutation::from_cycles(n, &[(a..n).collect()])?;
        Self::from_permutations(n, &[x, y])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    pub fn multiply(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn inverse(&self, a: Elem) -> Result<Elem> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    pub fn check(&self, a: Elem) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                size: self.order,
            })
        }
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(labels) => labels[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn element_order(&self, a: Elem) -> Result<usize> {
        self.check(a)?;
        let mut k = 1;
        let mut p = a;
        while p != IDENTITY {
            p = self.mul(p, a);
            k += 1;
        }
        Ok(k)
    }

    /// The subgroup generated by `set`, as a sorted list of elements.
    pub fn closure(&self, set: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order];
        seen[IDENTITY] = true;
        let mut queue = VecDeque::from([IDENTITY]);
        let mut out = vec![IDENTITY];
        while let Some(a) = queue.pop_front() {
            for &s in set {
                let b = self.mul(a, s);
                if !seen[b] {
                    seen[b] = true;
                    out.push(b);
                    queue.push_back(b);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn generates(&self, set: &[Elem]) -> bool {
        set.iter().all(|&s| s < self.order) && self.closure(set).len() == self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `{ t·s : s ∈ set }`, sorted.
    pub fn left_translate(&self, t: Elem, set: &[Elem]) -> Vec<Elem> {
        let mut out: Vec<Elem> = set.iter().map(|&s| self.mul(t, s)).collect();
        out.sort_unstable();
        out
    }

    pub fn inverse_set(&self, set: &[Elem]) -> Vec<Elem> {
        let mut out: Vec<Elem> = set.iter().map(|&s| self.inv(s)).collect();
        out.sort_unstable();
        out
    }

    /// Exhaustively checks the group axioms on the table.
    pub fn verify_axioms(&self) -> bool {
        let n = self.order;
        let identity = (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a);
        let inverses =
            (0..n).all(|a| self.mul(a, self.inv(a)) == 0 && self.mul(self.inv(a), a) == 0);
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        });
        identity && inverses && assoc
    }

    /// Parses the group spec text format:
    ///
    /// ```text
    /// cyclic 5
    /// ```
    /// or
    /// ```text
    /// perm 3
    /// (0 1 2)
    /// (0 1)
    /// ```
    ///
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty group spec"))?;
        let mut words = header.split_whitespace();
        let kind = words.next().unwrap_or("");
        let size: usize = words
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| Error::parse(hline, format!("expected `{kind} <n>`")))?;
        if words.next().is_some() {
            return Err(Error::parse(hline, "trailing tokens in header"));
        }
        match kind {
            "cyclic" => {
                if let Some((l, _)) = lines.next() {
                    return Err(Error::parse(l, "cyclic group takes no generator lines"));
                }
                Self::cyclic(size)
            }
            "perm" => {
                let gens = lines
                    .map(|(l, g)| {
                        Permutation::parse_cycles(size, g)
                            .map_err(|e| Error::parse(l, e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::from_permutations(size, &gens)
            }
            other => Err(Error::parse(hline, format!("unknown group kind {other:?}"))),
        }
    }
}
