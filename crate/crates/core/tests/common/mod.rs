#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::OnceLock;

use msd_core::gen::{enumerate_to, Catalog, GenConfig};
use msd_core::Digraph;

pub fn fixtures() -> HashMap<String, Digraph> {
    let text = include_str!("../fixtures/spectral_pairs.txt");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut f = l.split_whitespace();
            let name = f.next().unwrap().to_string();
            let order: usize = f.next().unwrap().parse().unwrap();
            let arcs: Vec<(usize, usize)> = f
                .map(|a| {
                    let (u, w) = a.split_once('-').unwrap();
                    (u.parse().unwrap(), w.parse().unwrap())
                })
                .collect();
            (name, Digraph::from_arcs(order, &arcs).unwrap())
        })
        .collect()
}

/// Catalogs of orders 1..=9, computed once per test binary.
pub fn catalogs() -> &'static [Catalog] {
    static CATS: OnceLock<Vec<Catalog>> = OnceLock::new();
    CATS.get_or_init(|| enumerate_to(9, &GenConfig::default()).unwrap())
}

pub fn catalog(n: usize) -> &'static Catalog {
    &catalogs()[n - 1]
}

/// Every loop-free labeled digraph of order `n` (2^(n(n−1)) of them).
pub fn all_labeled(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&w| w != u).map(move |w| (u, w)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let arcs: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Digraph::from_arcs(n, &arcs).unwrap()
    })
}

/// All permutations of `0..n` by simple recursion.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism-class key by exhaustive relabeling: the smallest sorted arc
/// list over all n! permutations.
pub fn brute_key(d: &Digraph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut arcs: Vec<_> = d.arcs().map(|(u, w)| (p[u], p[w])).collect();
            arcs.sort_unstable();
            arcs
        })
        .min()
        .unwrap()
}
