//! Canonical labelling by equitable refinement plus individualization.
//!
//! The refinement splits cells until every vertex of a cell sends the same
//! number of arcs into, and receives the same number from, every cell. When
//! that leaves non-singleton cells, the search individualizes each member of
//! the first such cell in turn and recurses; the canonical code is the
//! smallest adjacency matrix over all discrete partitions reached.
//!
//! Automorphisms discovered at leaves with equal matrices prune the search:
//! sibling branches in one orbit of the pointwise stabilizer of the current
//! prefix are skipped, and a subtree shown equivalent to an earlier one is
//! abandoned. Both only remove branches whose leaf codes already occur.

use std::cmp::Ordering;
use std::fmt;

use crate::digraph::{Bits, Digraph};
use crate::digraph6;
use crate::error::{Error, Result};

/// Ordered partition of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn new(cells: Vec<Vec<usize>>, order: usize) -> Result<Self> {
        let mut seen = vec![false; order];
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::InvalidPartition("empty cell".into()));
            }
            for &v in cell {
                if v >= order {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition(
                "cells do not cover every vertex".into(),
            ));
        }
        Ok(OrderedPartition { cells })
    }

    /// The single-cell partition.
    pub fn unit(order: usize) -> Self {
        OrderedPartition {
            cells: vec![(0..order).collect()],
        }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }
}

/// Flat working form of an ordered partition: `lab` lists vertices cell by
/// cell, `cells` holds `(start, len)` ranges into it.
#[derive(Clone)]
struct Part {
    lab: Vec<usize>,
    cells: Vec<(usize, usize)>,
}

impl Part {
    fn from_partition(p: &OrderedPartition) -> Self {
        let mut lab = Vec::new();
        let mut cells = Vec::with_capacity(p.cells.len());
        for c in &p.cells {
            cells.push((lab.len(), c.len()));
            lab.extend_from_slice(c);
        }
        Part { lab, cells }
    }

    fn to_partition(&self) -> OrderedPartition {
        OrderedPartition {
            cells: self
                .cells
                .iter()
                .map(|&(s, l)| self.lab[s..s + l].to_vec())
                .collect(),
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells.len() == self.lab.len()
    }

    /// Refines to the coarsest equitable partition below `self`. Fragments
    /// of a split cell replace it in place, ordered by ascending signature
    /// `(out-counts per cell, in-counts per cell)`.
    fn refine(&mut self, d: &Digraph) {
        let n = self.lab.len();
        let mut masks: Vec<u64> = Vec::with_capacity(n);
        let mut sig: Vec<u8> = Vec::new();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        loop {
            let k = self.cells.len();
            if k == n {
                return;
            }
            masks.clear();
            masks.extend(
                self.cells
                    .iter()
                    .map(|&(s, l)| self.lab[s..s + l].iter().fold(0u64, |m, &v| m | 1 << v)),
            );
            let width = 2 * k;
            let mut new_cells = Vec::with_capacity(n);
            let mut changed = false;
            for &(start, len) in &self.cells {
                if len == 1 {
                    new_cells.push((start, len));
                    continue;
                }
                sig.clear();
                for &v in &self.lab[start..start + len] {
                    let (o, i) = (d.out_mask(v), d.in_mask(v));
                    sig.extend(masks.iter().map(|m| (o & m).count_ones() as u8));
                    sig.extend(masks.iter().map(|m| (i & m).count_ones() as u8));
                }
                let row = |j: usize| &sig[j * width..(j + 1) * width];
                order.clear();
                order.extend(0..len);
                order.sort_by(|&a, &b| row(a).cmp(row(b)));
                if row(order[0]) == row(order[len - 1]) {
                    new_cells.push((start, len));
                    continue;
                }
                changed = true;
                let reordered: Vec<usize> = order.iter().map(|&j| self.lab[start + j]).collect();
                let mut frag_start = 0;
                for j in 1..=len {
                    if j == len || row(order[j]) != row(order[frag_start]) {
                        new_cells.push((start + frag_start, j - frag_start));
                        frag_start = j;
                    }
                }
                self.lab[start..start + len].copy_from_slice(&reordered);
            }
            self.cells = new_cells;
            if !changed {
                return;
            }
        }
    }

    /// Splits the cell at `cell_idx` into `[v]` followed by the rest.
    fn individualize(&self, cell_idx: usize, v: usize) -> Part {
        let mut p = self.clone();
        let (start, len) = p.cells[cell_idx];
        let pos = p.lab[start..start + len]
            .iter()
            .position(|&x| x == v)
            .expect("vertex belongs to cell")
            + start;
        p.lab[start..=pos].rotate_right(1);
        p.cells[cell_idx] = (start, 1);
        p.cells.insert(cell_idx + 1, (start + 1, len - 1));
        p
    }
}

/// The coarsest equitable refinement of `initial`.
pub fn equitable_partition(d: &Digraph, initial: &OrderedPartition) -> Result<OrderedPartition> {
    let checked = OrderedPartition::new(initial.cells.clone(), d.order())?;
    let mut p = Part::from_partition(&checked);
    p.refine(d);
    Ok(p.to_partition())
}

/// Canonical code: the digraph6 record of the canonically relabelled
/// digraph. Codes compare lexicographically and are equal exactly for
/// isomorphic digraphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Box<[u8]>);

impl CanonicalCode {
    /// Wraps a digraph6 record that is already canonical (e.g. read back
    /// from a catalog file); the record is validated but not re-canonicalized.
    pub fn from_canonical_record(record: &str) -> Result<Self> {
        let d = digraph6::decode(record)?;
        Ok(CanonicalCode(
            digraph6::encode(&d).into_bytes().into_boxed_slice(),
        ))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("digraph6 is ASCII")
    }

    pub fn order(&self) -> usize {
        (self.0[1] - 63) as usize
    }

    pub fn to_digraph(&self) -> Digraph {
        digraph6::decode(self.as_str()).expect("canonical codes are valid digraph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

/// Adjacency rows of a relabelled digraph, packed so that comparing the
/// row vectors matches comparing the row-major bit strings.
type RowKey = Vec<u64>;

struct Leaf {
    key: RowKey,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    d: &'a Digraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn leaf_key(&self, lab: &[usize]) -> RowKey {
        let mut pos = [0usize; 64];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        lab.iter()
            .map(|&v| {
                Bits::new(self.d.out_mask(v)).fold(0u64, |row, w| row | (1u64 << (63 - pos[w])))
            })
            .collect()
    }

    /// Records the automorphism mapping `other`'s labelling onto `lab` and
    /// returns the depth to resume at.
    fn automorphism(
        &mut self,
        lab: &[usize],
        other_lab: &[usize],
        other_path: &[usize],
        path: &[usize],
    ) -> usize {
        let mut gamma = vec![0usize; lab.len()];
        for (&a, &b) in other_lab.iter().zip(lab) {
            gamma[a] = b;
        }
        debug_assert!(self
            .d
            .arcs()
            .all(|(u, w)| self.d.has_arc(gamma[u], gamma[w])));
        if gamma.iter().enumerate().any(|(i, &g)| i != g) {
            self.generators.push(gamma);
        }
        other_path
            .iter()
            .zip(path)
            .take_while(|(a, b)| a == b)
            .count()
    }

    fn visit(&mut self, part: Part, path: &mut Vec<usize>) -> Option<usize> {
        if part.is_discrete() {
            return self.visit_leaf(part.lab, path);
        }
        let depth = path.len();
        let cell_idx = part
            .cells
            .iter()
            .position(|&(_, l)| l > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let (start, len) = part.cells[cell_idx];
        let members: Vec<usize> = part.lab[start..start + len].to_vec();
        let mut tried: Vec<usize> = Vec::with_capacity(len);
        for v in members {
            if !tried.is_empty() && self.same_orbit_as_any(v, &tried, path) {
                continue;
            }
            tried.push(v);
            let mut child = part.individualize(cell_idx, v);
            child.refine(self.d);
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, lab: Vec<usize>, path: &[usize]) -> Option<usize> {
        let key = self.leaf_key(&lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                key,
                lab,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                key: leaf.key.clone(),
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if key == first.key {
            let (flab, fpath) = (first.lab.clone(), first.path.clone());
            return Some(self.automorphism(&lab, &flab, &fpath, path));
        }
        let best = self.best.as_ref().expect("best is set with first");
        match key.cmp(&best.key) {
            Ordering::Less => {
                self.best = Some(Leaf {
                    key,
                    lab,
                    path: path.to_vec(),
                });
                None
            }
            Ordering::Equal => {
                let (blab, bpath) = (best.lab.clone(), best.path.clone());
                Some(self.automorphism(&lab, &blab, &bpath, path))
            }
            Ordering::Greater => None,
        }
    }

    /// Whether `v` shares an orbit with some vertex of `tried` under the
    /// group generated by the known automorphisms that fix `prefix`
    /// pointwise.
    fn same_orbit_as_any(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let n = self.d.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for g in &self.generators {
            if prefix.iter().any(|&p| g[p] != p) {
                continue;
            }
            any = true;
            for (x, &gx) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }
}

/// Canonical code together with the labelling that produces it:
/// `labelling[i]` is the vertex of `d` placed at position `i`.
pub fn canonical_labelling(d: &Digraph) -> (CanonicalCode, Vec<usize>) {
    let mut part = Part::from_partition(&OrderedPartition::unit(d.order()));
    part.refine(d);
    let mut search = Search {
        d,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.visit(part, &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");
    let n = d.order();
    let rows: Vec<u64> = best
        .key
        .iter()
        .map(|k| k.reverse_bits() & crate::digraph::full_mask(n))
        .collect();
    let code = CanonicalCode(digraph6::encode_masks(&rows).into_boxed_slice());
    (code, best.lab)
}

pub fn canonical_form(d: &Digraph) -> CanonicalCode {
    canonical_labelling(d).0
}

/// The canonically relabelled copy of `d`.
pub fn canonical_digraph(d: &Digraph) -> Digraph {
    canonical_form(d).to_digraph()
}

pub fn are_isomorphic(d1: &Digraph, d2: &Digraph) -> bool {
    if d1.order() != d2.order() || d1.size() != d2.size() {
        return false;
    }
    let degrees = |d: &Digraph| {
        let mut v: Vec<(usize, usize)> = (0..d.order())
            .map(|x| (d.out_degree(x), d.in_degree(x)))
            .collect();
        v.sort_unstable();
        v
    };
    if degrees(d1) != degrees(d2) {
        return false;
    }
    canonical_form(d1) == canonical_form(d2)
}
