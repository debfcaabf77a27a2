mod common;

use common::{all_labeled, catalog, fixtures};
use msd_core::{digraph6, Digraph};
use proptest::prelude::*;

/// Minimality by deletion: strong, and removing any single arc breaks it.
fn every_arc_essential(d: &Digraph) -> bool {
    d.is_strongly_connected()
        && d.arcs()
            .all(|(u, w)| !d.without_arc(u, w).unwrap().is_strongly_connected())
}

#[test]
fn no_transitive_arc_iff_every_arc_essential() {
    for n in 1..=4 {
        let mut strong = 0;
        for d in all_labeled(n).filter(Digraph::is_strongly_connected) {
            strong += 1;
            assert_eq!(d.is_minimal_strong(), every_arc_essential(&d), "{d}");
        }
        assert!(strong > 0);
    }
}

fn is_directed_tree(d: &Digraph) -> bool {
    // symmetric arc set whose underlying simple graph has n − 1 edges
    d.arcs().all(|(u, w)| d.has_arc(w, u)) && d.size() == 2 * (d.order() - 1)
}

#[test]
fn size_bounds_and_extremes() {
    for n in 2..=7 {
        for d in catalog(n).digraphs() {
            let m = d.size();
            assert!(n <= m && m <= 2 * (n - 1), "{d}");
            if m == n {
                assert!(msd_core::are_isomorphic(&d, &Digraph::cycle(n).unwrap()));
            }
            assert_eq!(
                m == 2 * (n - 1),
                is_directed_tree(&d) && d.is_strongly_connected()
            );
            if m == 2 * (n - 1) {
                // every cycle of a directed tree is a 2-cycle
                let mut cur = d.clone();
                while cur.order() > 1 {
                    let c = cur.find_any_cycle().unwrap();
                    assert_eq!(c.len(), 2);
                    cur = cur.contract_cycle(&c).unwrap();
                }
            }
        }
        assert_eq!(catalog(n).counts().get(n, n), 1);
    }
}

#[test]
fn at_least_two_linear_vertices() {
    for n in 2..=8 {
        for d in catalog(n).digraphs() {
            assert!(d.linear_vertices().len() >= 2, "{d}");
        }
    }
}

#[test]
fn contraction_preserves_minimality() {
    for n in 2..=7 {
        for d in catalog(n).digraphs() {
            // contract the shortest cycle through each vertex that has one
            for v in 0..n {
                let Some(c) = cycle_through(&d, v) else {
                    continue;
                };
                let r = d.contract_cycle(&c).unwrap();
                assert!(r.is_minimal_strong(), "{d} / {c:?}");
                assert_eq!(r.order(), n - (c.len() - 1));
                assert!(r.size() <= d.size() - c.len());
            }
        }
    }
}

fn cycle_through(d: &Digraph, v: usize) -> Option<msd_core::VertexCycle> {
    // relabel v to 0 so find_any_cycle starts there, then map back
    let mut perm: Vec<usize> = (0..d.order()).collect();
    perm.swap(0, v);
    let c = d.relabel(&perm).ok()?.find_any_cycle().ok()?;
    msd_core::VertexCycle::new(c.vertices().iter().map(|&x| perm[x]).collect()).ok()
}

#[test]
fn contraction_sequence_length_is_cyclomatic_number() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(7);
    for n in 2..=7 {
        for d in catalog(n).digraphs() {
            let expected = d.cyclomatic_number().unwrap();
            for _ in 0..3 {
                let mut cur = d.clone();
                let mut steps = 0;
                while cur.order() > 1 {
                    let start = rng.gen_range(0..cur.order());
                    let c = (0..cur.order())
                        .find_map(|k| cycle_through(&cur, (start + k) % cur.order()))
                        .unwrap();
                    cur = cur.contract_cycle(&c).unwrap();
                    steps += 1;
                }
                assert_eq!(steps, expected, "{d}");
                assert_eq!(cur.size(), 0);
            }
        }
    }
}

#[test]
fn cyclomatic_examples() {
    let fx = fixtures();
    assert_eq!(fx["cospectral_a"].cyclomatic_number().unwrap(), 3);
    let tree =
        Digraph::directed_tree(7, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5), (4, 6)]).unwrap();
    assert_eq!(tree.cyclomatic_number().unwrap(), 6);
}

#[test]
fn fixtures_structure() {
    let fx = fixtures();
    assert!(fx["cospectral_a"].is_minimal_strong());
    assert!(fx["cospectral_b"].is_minimal_strong());
    assert!(fx["twin_minimal"].is_minimal_strong());
    let twin = &fx["twin_non_minimal"];
    assert!(twin.is_strongly_connected());
    assert!(!twin.is_minimal_strong());
    assert_eq!(twin.transitive_arcs(), vec![(1, 3)]);
}

fn arb_digraph() -> impl Strategy<Value = Digraph> {
    (1usize..=20).prop_flat_map(|n| {
        prop::collection::vec(any::<u64>(), n).prop_map(move |rows| {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let rows = rows
                .into_iter()
                .enumerate()
                .map(|(u, r)| r & mask & !(1 << u))
                .collect();
            Digraph::from_out_masks(rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn digraph6_round_trip(d in arb_digraph()) {
        let s = digraph6::encode(&d);
        prop_assert!(s.bytes().all(|b| b == b'&' || (63..=126).contains(&b)));
        prop_assert_eq!(s.len(), 2 + digraph6::body_len(d.order()));
        prop_assert_eq!(digraph6::decode(&s).unwrap(), d);
    }
}
