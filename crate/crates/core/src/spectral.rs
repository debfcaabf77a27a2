//! Exact characteristic polynomials of adjacency matrices and the grouping
//! of a catalog into isospectral classes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::canon::CanonicalCode;
use crate::digraph::{Bits, Digraph};
use crate::error::{Error, Result};
use crate::gen::{Catalog, CountTable};

/// `det(xI − A)` with exact coefficients, stored lowest degree first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharPoly {
    coeffs: Vec<i128>,
}

impl CharPoly {
    /// Coefficients `c_0, …, c_n`.
    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn from_coefficients(coeffs: Vec<i128>) -> Self {
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_n,…,c_0` separated by commas.
    pub fn to_csv(&self) -> String {
        self.coeffs
            .iter()
            .rev()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{a}x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// Characteristic polynomial of the 0/1 adjacency matrix, by Berkowitz's
/// division-free recurrence over trailing principal submatrices.
pub fn char_poly(d: &Digraph) -> Result<CharPoly> {
    let n = d.order();
    let a = |i: usize, j: usize| -> i128 { i128::from(d.has_arc(i, j)) };
    // Highest degree first while building.
    let mut p: Vec<i128> = vec![1, -a(n - 1, n - 1)];
    for k in (0..n - 1).rev() {
        let s = n - k - 1;
        // Toeplitz column: 1, −a_kk, −R C, −R S C, …, −R S^{s−1} C
        let mut t = Vec::with_capacity(s + 2);
        t.push(1i128);
        t.push(-a(k, k));
        let mut v: Vec<i128> = (k + 1..n).map(|i| a(i, k)).collect();
        for j in 0..s {
            let mut rv = 0i128;
            for (idx, &x) in v.iter().enumerate() {
                if x != 0 && d.has_arc(k, k + 1 + idx) {
                    rv = add(rv, x)?;
                }
            }
            t.push(-rv);
            if j + 1 < s {
                let mut next = vec![0i128; s];
                for (r, slot) in next.iter_mut().enumerate() {
                    let row = d.out_mask(k + 1 + r) >> (k + 1);
                    let mut acc = 0i128;
                    for c in Bits::new(row) {
                        acc = add(acc, v[c])?;
                    }
                    *slot = acc;
                }
                v = next;
            }
        }
        let mut next = vec![0i128; s + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = 0i128;
            for (j, &pj) in p.iter().enumerate().take(i + 1) {
                acc = add(acc, mul(t[i - j], pj)?)?;
            }
            *slot = acc;
        }
        p = next;
    }
    p.reverse();
    Ok(CharPoly { coeffs: p })
}

/// Isospectral classes of one catalog, with per-arc-count class counts.
#[derive(Clone, Debug)]
pub struct IsospectralReport {
    pub order: usize,
    /// Classes keyed by polynomial, members sorted by code.
    pub classes: Vec<(CharPoly, Vec<CanonicalCode>)>,
    /// Classes counted within each arc-count sub-catalog.
    pub per_arc_counts: CountTable,
    pub total: u64,
}

impl IsospectralReport {
    /// Sum of the per-arc class counts.
    pub fn sum(&self) -> u64 {
        self.per_arc_counts.total(self.order)
    }

    /// `sum − total`: positive only when some class mixes arc counts.
    pub fn delta(&self) -> u64 {
        self.sum() - self.total
    }

    /// One line per class: `c_n,…,c_0` then the member codes.
    pub fn export_lines(&self) -> impl Iterator<Item = String> + '_ {
        self.classes.iter().map(|(poly, members)| {
            let mut line = poly.to_csv();
            for m in members {
                line.push(' ');
                line.push_str(m.as_str());
            }
            line
        })
    }
}

pub fn isospectral_classes(catalog: &Catalog) -> Result<IsospectralReport> {
    let polys: Vec<(usize, CharPoly)> = catalog
        .entries()
        .par_iter()
        .map(|code| {
            let d = code.to_digraph();
            Ok((d.size(), char_poly(&d)?))
        })
        .collect::<Result<_>>()?;
    let mut classes: BTreeMap<CharPoly, Vec<CanonicalCode>> = BTreeMap::new();
    let mut per_arc: BTreeSet<(usize, &CharPoly)> = BTreeSet::new();
    for (code, (m, poly)) in catalog.entries().iter().zip(&polys) {
        per_arc.insert((*m, poly));
        classes.entry(poly.clone()).or_default().push(code.clone());
    }
    let mut per_arc_counts = CountTable::default();
    for (m, _) in per_arc {
        per_arc_counts.increment(catalog.order(), m);
    }
    Ok(IsospectralReport {
        order: catalog.order(),
        total: classes.len() as u64,
        classes: classes.into_iter().collect(),
        per_arc_counts,
    })
}

/// Every pair of distinct members of every isospectral class of size ≥ 2.
pub fn first_collision(catalog: &Catalog) -> Result<Vec<(CanonicalCode, CanonicalCode, CharPoly)>> {
    let report = isospectral_classes(catalog)?;
    let mut pairs = Vec::new();
    for (poly, members) in &report.classes {
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                pairs.push((a.clone(), b.clone(), poly.clone()));
            }
        }
    }
    Ok(pairs)
}

/// Per report, `(n, number of classes among the directed trees)`, the trees
/// being the entries with `2n − 2` arcs.
pub fn isospectral_tree_counts(reports: &[IsospectralReport]) -> Vec<(usize, u64)> {
    reports
        .iter()
        .filter(|r| r.order >= 2)
        .map(|r| (r.order, r.per_arc_counts.get(r.order, 2 * r.order - 2)))
        .collect()
}
