//! Loop-free digraphs on dense vertex indices and the structural predicates
//! used throughout the crate: strong connectivity, linear vertices,
//! transitive arcs, minimality and cycle contraction.
//!
//! Adjacency is kept as one out-bitmap and one in-bitmap per vertex, so the
//! supported order is capped at [`MAX_ORDER`](crate::MAX_ORDER).

use std::fmt;

use crate::error::{Error, Result};
use crate::MAX_ORDER;

/// Iterates the set bit positions of a vertex mask in ascending order.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Bits {
    pub fn new(mask: u64) -> Self {
        Bits(mask)
    }
}

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A loop-free directed graph on vertices `0..order`.
///
/// Values are immutable once built; every operator returns a new digraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    out: Vec<u64>,
    inc: Vec<u64>,
}

impl Digraph {
    /// The arcless digraph of the given order.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange(order));
        }
        Ok(Digraph {
            order,
            out: vec![0; order],
            inc: vec![0; order],
        })
    }

    /// The one-vertex digraph, seed of the expansion tree.
    pub fn single_vertex() -> Self {
        Digraph {
            order: 1,
            out: vec![0],
            inc: vec![0],
        }
    }

    pub fn from_arcs(order: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::empty(order)?;
        for &(u, w) in arcs {
            d.insert_arc(u, w)?;
        }
        Ok(d)
    }

    /// The directed cycle `0→1→…→(q−1)→0`.
    pub fn cycle(q: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidCycle(format!("cycle length {q} < 2")));
        }
        let arcs: Vec<_> = (0..q).map(|i| (i, (i + 1) % q)).collect();
        Digraph::from_arcs(q, &arcs)
    }

    /// The complete digraph on `n` vertices (every ordered pair of distinct
    /// vertices is an arc).
    pub fn complete(n: usize) -> Result<Self> {
        let mut d = Digraph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            d.out[v] = all & !bit(v);
            d.inc[v] = all & !bit(v);
        }
        Ok(d)
    }

    /// The directed tree obtained by replacing every edge of an undirected
    /// tree with two opposite arcs.
    pub fn directed_tree(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::empty(order)?;
        for &(a, b) in edges {
            d.insert_arc(a, b)?;
            d.insert_arc(b, a)?;
        }
        Ok(d)
    }

    /// Builds a digraph directly from out-neighbour bitmaps.
    pub fn from_out_masks(out: Vec<u64>) -> Result<Self> {
        let order = out.len();
        let mut d = Digraph::empty(order)?;
        let all = full_mask(order);
        for (u, &row) in out.iter().enumerate() {
            if row & !all != 0 {
                let w = (row & !all).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, order });
            }
            if row & bit(u) != 0 {
                return Err(Error::SelfLoop(u));
            }
            for w in Bits(row) {
                d.out[u] |= bit(w);
                d.inc[w] |= bit(u);
            }
        }
        Ok(d)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub(crate) fn insert_arc(&mut self, u: usize, w: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if u == w {
            return Err(Error::SelfLoop(u));
        }
        self.out[u] |= bit(w);
        self.inc[w] |= bit(u);
        Ok(())
    }

    pub(crate) fn delete_arc(&mut self, u: usize, w: usize) {
        self.out[u] &= !bit(w);
        self.inc[w] &= !bit(u);
    }

    /// Appends a fresh isolated vertex with index `order`.
    pub(crate) fn push_vertex(&mut self) -> Result<usize> {
        if self.order >= MAX_ORDER {
            return Err(Error::OrderOutOfRange(self.order + 1));
        }
        self.out.push(0);
        self.inc.push(0);
        self.order += 1;
        Ok(self.order - 1)
    }

    /// A copy with the arc `u→w` added.
    pub fn with_arc(&self, u: usize, w: usize) -> Result<Self> {
        let mut d = self.clone();
        d.insert_arc(u, w)?;
        Ok(d)
    }

    /// A copy with the arc `u→w` removed.
    pub fn without_arc(&self, u: usize, w: usize) -> Result<Self> {
        if !self.has_arc(u, w) {
            return Err(Error::MissingArc(u, w));
        }
        let mut d = self.clone();
        d.delete_arc(u, w);
        Ok(d)
    }

    /// Deletes vertex `v` and its arcs; indices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if self.order == 1 {
            return Err(Error::OrderOutOfRange(0));
        }
        let keep = |mask: u64| -> u64 {
            let low = mask & (bit(v) - 1);
            let high = (mask >> (v + 1)) << v;
            low | high
        };
        let out = (0..self.order)
            .filter(|&x| x != v)
            .map(|x| keep(self.out[x]))
            .collect::<Vec<_>>();
        let inc = (0..self.order)
            .filter(|&x| x != v)
            .map(|x| keep(self.inc[x]))
            .collect::<Vec<_>>();
        Ok(Digraph {
            order: self.order - 1,
            out,
            inc,
        })
    }

    /// Relabels vertices: old vertex `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.order {
            return Err(Error::InvalidPartition(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.order
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != full_mask(self.order) {
            return Err(Error::InvalidPartition("not a permutation".into()));
        }
        let mut d = Digraph::empty(self.order)?;
        for (u, w) in self.arcs() {
            d.insert_arc(perm[u], perm[w])?;
        }
        Ok(d)
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Self {
        Digraph {
            order: self.order,
            out: self.inc.clone(),
            inc: self.out.clone(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of arcs.
    pub fn size(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, w: usize) -> bool {
        u < self.order && w < self.order && self.out[u] & bit(w) != 0
    }

    #[inline]
    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    #[inline]
    pub fn in_mask(&self, v: usize) -> u64 {
        self.inc[v]
    }

    pub fn out_masks(&self) -> &[u64] {
        &self.out
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order)
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| Bits(self.out[u]).map(move |w| (u, w)))
    }

    /// Vertices reachable from `seeds` (seeds included).
    pub fn forward_closure(&self, seeds: u64) -> u64 {
        closure(&self.out, seeds, seeds)
    }

    /// Vertices that reach some vertex of `seeds` (seeds included).
    pub fn backward_closure(&self, seeds: u64) -> u64 {
        closure(&self.inc, seeds, seeds)
    }

    pub fn is_strongly_connected(&self) -> bool {
        let all = self.vertex_mask();
        self.forward_closure(1) == all && self.backward_closure(1) == all
    }

    /// Vertices with in-degree 1 and out-degree 1.
    pub fn linear_vertices(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.is_linear(v)).collect()
    }

    #[inline]
    pub fn is_linear(&self, v: usize) -> bool {
        self.out[v].count_ones() == 1 && self.inc[v].count_ones() == 1
    }

    /// Whether `u→w` is bypassed by another directed `u→w` path of length at
    /// least two.
    pub fn is_transitive_arc(&self, u: usize, w: usize) -> Result<bool> {
        if !self.has_arc(u, w) {
            return Err(Error::MissingArc(u, w));
        }
        Ok(self.has_bypass(u, w))
    }

    #[inline]
    pub(crate) fn has_bypass(&self, u: usize, w: usize) -> bool {
        let seeds = self.out[u] & !bit(w);
        closure(&self.out, seeds, seeds | bit(u)) & bit(w) != 0
    }

    /// All transitive arcs in row-major order.
    pub fn transitive_arcs(&self) -> Vec<(usize, usize)> {
        self.arcs()
            .filter(|&(u, w)| self.has_bypass(u, w))
            .collect()
    }

    /// Strongly connected with no transitive arc.
    pub fn is_minimal_strong(&self) -> bool {
        self.is_strongly_connected() && self.arcs().all(|(u, w)| !self.has_bypass(u, w))
    }

    /// `m − n + 1`, defined here for strongly connected digraphs only.
    pub fn cyclomatic_number(&self) -> Result<usize> {
        if !self.is_strongly_connected() {
            return Err(Error::NotStronglyConnected);
        }
        Ok(self.size() + 1 - self.order)
    }

    /// Some directed cycle: the shortest cycle through the smallest vertex
    /// that lies on a cycle.
    pub fn find_any_cycle(&self) -> Result<VertexCycle> {
        for v in 0..self.order {
            if self.forward_closure(self.out[v]) & bit(v) == 0 {
                continue;
            }
            // BFS from v back to v, recording parents.
            let mut parent = vec![usize::MAX; self.order];
            let mut seen = 0u64;
            let mut frontier = 0u64;
            for w in Bits(self.out[v]) {
                parent[w] = v;
                seen |= bit(w);
                frontier |= bit(w);
            }
            while seen & bit(v) == 0 {
                let mut next = 0u64;
                for x in Bits(frontier) {
                    for y in Bits(self.out[x] & !seen & !next) {
                        parent[y] = x;
                        next |= bit(y);
                    }
                }
                seen |= next;
                frontier = next;
            }
            let mut path = vec![v];
            let mut x = parent[v];
            while x != v {
                path.push(x);
                x = parent[x];
            }
            path[1..].reverse();
            return VertexCycle::new(path);
        }
        Err(Error::Acyclic)
    }

    /// Merges the vertices of `c` into its smallest vertex; parallel arcs
    /// collapse and loops are dropped. Surviving vertices are re-indexed
    /// densely in their original order.
    pub fn contract_cycle(&self, c: &VertexCycle) -> Result<Self> {
        c.check_in(self)?;
        let members = c.mask();
        let keep = c.vertices.iter().copied().min().expect("cycle is nonempty");
        let mut map = vec![0usize; self.order];
        let mut next = 0;
        for (x, slot) in map.iter_mut().enumerate() {
            if members & bit(x) != 0 && x != keep {
                continue;
            }
            *slot = next;
            next += 1;
        }
        for &x in &c.vertices {
            map[x] = map[keep];
        }
        let mut d = Digraph::empty(next)?;
        for (a, b) in self.arcs() {
            let (ma, mb) = (map[a], map[b]);
            if ma != mb {
                d.insert_arc(ma, mb)?;
            }
        }
        Ok(d)
    }
}

/// Forward closure over `adj` starting from `frontier`, with `seen` as the
/// already-visited set. Vertices in `seen` but not in `frontier` are never
/// expanded.
#[inline]
pub(crate) fn closure(adj: &[u64], frontier: u64, seen: u64) -> u64 {
    let mut seen = seen | frontier;
    let mut frontier = frontier;
    while frontier != 0 {
        let mut next = 0u64;
        for x in Bits(frontier) {
            next |= adj[x];
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, [", self.order)?;
        for (i, (u, w)) in self.arcs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}→{w}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A directed cycle given by its vertex sequence `v_0, …, v_{q−1}`; the
/// closing arc is `v_{q−1}→v_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCycle {
    vertices: Vec<usize>,
}

impl VertexCycle {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidCycle(format!(
                "length {} < 2",
                vertices.len()
            )));
        }
        let mut seen = 0u64;
        for &v in &vertices {
            if v >= MAX_ORDER {
                return Err(Error::InvalidCycle(format!("vertex {v} out of range")));
            }
            if seen & bit(v) != 0 {
                return Err(Error::InvalidCycle(format!("vertex {v} repeated")));
            }
            seen |= bit(v);
        }
        Ok(VertexCycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }

    /// Fails unless every consecutive pair (with wrap-around) is an arc of `d`.
    pub fn check_in(&self, d: &Digraph) -> Result<()> {
        let q = self.vertices.len();
        for i in 0..q {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % q]);
            if !d.has_arc(a, b) {
                return Err(Error::InvalidCycle(format!("{a}→{b} is not an arc")));
            }
        }
        Ok(())
    }
}
