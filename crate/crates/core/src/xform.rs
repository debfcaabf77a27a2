//! Expansion operators and their inverse reductions.
//!
//! An internal expansion `i_uw` subdivides the arc `u→w` with a fresh vertex;
//! an external expansion `e_uw` hangs a fresh vertex `v` off the digraph with
//! arcs `u→v` and `v→w` (`u = w` allowed). Every minimal strong digraph of
//! order `n ≥ 3` is an expansion of one of order `n − 1`, obtained by reducing
//! at any linear vertex.

use std::fmt;

use crate::digraph::{bit, closure, Bits, Digraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpansionKind {
    Internal,
    External,
}

impl fmt::Display for ExpansionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExpansionKind::Internal => "internal",
            ExpansionKind::External => "external",
        })
    }
}

/// One expansion: applied to a digraph of order `v`, it creates vertex `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExpansionStep {
    pub kind: ExpansionKind,
    pub u: usize,
    pub w: usize,
    pub v: usize,
}

impl ExpansionStep {
    pub fn apply(&self, d: &Digraph) -> Result<Digraph> {
        if self.v != d.order() {
            return Err(Error::VertexOutOfRange {
                vertex: self.v,
                order: d.order(),
            });
        }
        match self.kind {
            ExpansionKind::Internal => internal_expansion(d, self.u, self.w),
            ExpansionKind::External => external_expansion(d, self.u, self.w),
        }
    }
}

impl fmt::Display for ExpansionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} u={} w={} v={}", self.kind, self.u, self.w, self.v)
    }
}

/// `i_uw(d)`: replaces `u→w` by `u→v→w` with `v` fresh.
pub fn internal_expansion(d: &Digraph, u: usize, w: usize) -> Result<Digraph> {
    if !d.has_arc(u, w) {
        return Err(Error::MissingArc(u, w));
    }
    let mut g = d.clone();
    let v = g.push_vertex()?;
    g.delete_arc(u, w);
    g.insert_arc(u, v)?;
    g.insert_arc(v, w)?;
    Ok(g)
}

/// `e_uw(d)`: adds `u→v` and `v→w` with `v` fresh.
pub fn external_expansion(d: &Digraph, u: usize, w: usize) -> Result<Digraph> {
    d.check_vertex(u)?;
    d.check_vertex(w)?;
    let mut g = d.clone();
    let v = g.push_vertex()?;
    g.insert_arc(u, v)?;
    g.insert_arc(v, w)?;
    Ok(g)
}

/// For minimal strong `d` and a non-arc `u→w` with `u ≠ w`: whether `e_uw(d)`
/// is again minimal, decided by checking that no arc of `d + uw` other than
/// `uw` itself is transitive.
pub fn external_expansion_preserves_msc(d: &Digraph, u: usize, w: usize) -> Result<bool> {
    d.check_vertex(u)?;
    d.check_vertex(w)?;
    if u == w {
        return Err(Error::EqualEndpoints(u));
    }
    if d.has_arc(u, w) {
        return Err(Error::ArcPresent(u, w));
    }
    let plus = d.with_arc(u, w)?;
    let preserves = plus
        .arcs()
        .filter(|&arc| arc != (u, w))
        .all(|(x, z)| !plus.has_bypass(x, z));
    Ok(preserves)
}

/// Batch form of [`external_expansion_preserves_msc`] for one minimal strong
/// digraph.
///
/// For each arc `x→z` it stores the vertices reachable from `x` and the
/// vertices reaching `z` in `d − xz`. Since `d` has no bypass for `x→z`, the
/// arc becomes transitive in `d + uw` exactly when `u` is in the first set and
/// `w` in the second.
pub struct ExternalExpansionTester {
    arcs: Vec<(u64, u64)>,
}

impl ExternalExpansionTester {
    pub fn new(d: &Digraph) -> Self {
        let n = d.order();
        let out = d.out_masks();
        let inc: Vec<u64> = (0..n).map(|v| d.in_mask(v)).collect();
        let arcs = d
            .arcs()
            .map(|(x, z)| {
                let fwd_seed = out[x] & !bit(z);
                let from_x = closure(out, fwd_seed, fwd_seed | bit(x));
                let bwd_seed = inc[z] & !bit(x);
                let to_z = closure(&inc, bwd_seed, bwd_seed | bit(z));
                (from_x, to_z)
            })
            .collect();
        ExternalExpansionTester { arcs }
    }

    #[inline]
    pub fn preserves(&self, u: usize, w: usize) -> bool {
        let (bu, bw) = (bit(u), bit(w));
        self.arcs
            .iter()
            .all(|&(from_x, to_z)| from_x & bu == 0 || to_z & bw == 0)
    }
}

/// Removes linear vertex `v` from minimal strong `d` (order ≥ 3), returning
/// the reduced digraph and the expansion that rebuilds `d` from it, with the
/// rebuilt copy of `v` at the last index.
pub fn reduce_at_linear_vertex(d: &Digraph, v: usize) -> Result<(Digraph, ExpansionStep)> {
    if d.order() < 3 {
        return Err(Error::OrderTooSmall {
            order: d.order(),
            required: 3,
        });
    }
    d.check_vertex(v)?;
    if !d.is_minimal_strong() {
        return Err(Error::NotMinimalStrong);
    }
    reduce_unchecked(d, v)
}

fn reduce_unchecked(d: &Digraph, v: usize) -> Result<(Digraph, ExpansionStep)> {
    if !d.is_linear(v) {
        return Err(Error::NotLinear(v));
    }
    let u = d.in_mask(v).trailing_zeros() as usize;
    let w = d.out_mask(v).trailing_zeros() as usize;
    let shift = |x: usize| if x > v { x - 1 } else { x };
    let reduced = d.remove_vertex(v)?;
    let (ru, rw) = (shift(u), shift(w));
    let new_v = reduced.order();
    if u == w {
        let step = ExpansionStep {
            kind: ExpansionKind::External,
            u: ru,
            w: rw,
            v: new_v,
        };
        return Ok((reduced, step));
    }
    // Is there a u→w path avoiding v? In d − v that is plain reachability.
    let seeds = reduced.out_mask(ru);
    let reachable = closure(reduced.out_masks(), seeds, seeds | bit(ru));
    if reachable & bit(rw) != 0 {
        let step = ExpansionStep {
            kind: ExpansionKind::External,
            u: ru,
            w: rw,
            v: new_v,
        };
        Ok((reduced, step))
    } else {
        let with_arc = reduced.with_arc(ru, rw)?;
        let step = ExpansionStep {
            kind: ExpansionKind::Internal,
            u: ru,
            w: rw,
            v: new_v,
        };
        Ok((with_arc, step))
    }
}

/// Reduces minimal strong `d` down to `C_2`, always at the smallest linear
/// vertex. Returns the `n − 2` steps in reduction order; replaying them in
/// reverse from `C_2` (see [`replay_from_c2`]) rebuilds `d` with its vertices
/// renumbered so that the `k`-th eliminated vertex becomes `n − 1 − k`.
pub fn reduce_to_c2(d: &Digraph) -> Result<Vec<ExpansionStep>> {
    Ok(reduction_trace(d)?.into_iter().map(|(_, s)| s).collect())
}

/// Like [`reduce_to_c2`] but also returns each reduced digraph alongside the
/// step that re-expands it. Each step applied to its digraph gives exactly
/// the previous digraph of the trace (the first one being `d` renumbered as
/// described above).
pub fn reduction_trace(d: &Digraph) -> Result<Vec<(Digraph, ExpansionStep)>> {
    let n = d.order();
    if n < 2 {
        return Err(Error::OrderTooSmall {
            order: n,
            required: 2,
        });
    }
    if !d.is_minimal_strong() {
        return Err(Error::NotMinimalStrong);
    }
    // First pass picks the vertices, tracking original ids through the shifts.
    let mut ids: Vec<usize> = (0..n).collect();
    let mut perm = vec![0; n];
    let mut cur = d.clone();
    while cur.order() > 2 {
        let v = Bits::new(linear_mask(&cur))
            .next()
            .ok_or(Error::NotMinimalStrong)?;
        perm[ids.remove(v)] = cur.order() - 1;
        cur = reduce_unchecked(&cur, v)?.0;
    }
    perm[ids[0]] = 0;
    perm[ids[1]] = 1;

    // Second pass on the renumbered digraph always removes the last vertex,
    // so no labels shift and every step re-applies verbatim.
    let mut trace = Vec::with_capacity(n - 2);
    let mut cur = d.relabel(&perm)?;
    while cur.order() > 2 {
        let (next, step) = reduce_unchecked(&cur, cur.order() - 1)?;
        debug_assert!(next.is_minimal_strong());
        debug_assert!(step.apply(&next).is_ok_and(|g| g == cur));
        trace.push((next.clone(), step));
        cur = next;
    }
    Ok(trace)
}

/// Rebuilds a digraph from `C_2` by applying `steps` last-to-first.
pub fn replay_from_c2(steps: &[ExpansionStep]) -> Result<Digraph> {
    let mut d = Digraph::cycle(2)?;
    for step in steps.iter().rev() {
        d = step.apply(&d)?;
    }
    Ok(d)
}

fn linear_mask(d: &Digraph) -> u64 {
    (0..d.order())
        .filter(|&v| d.is_linear(v))
        .fold(0, |m, v| m | bit(v))
}
