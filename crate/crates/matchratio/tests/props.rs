//! Randomized structural invariants: encoding round trips, profile bounds,
//! ratio inequalities, independent re-counts of the ordered and greedy
//! statistics, thorn duality, and isomorphism invariance.

use matchratio::exact::rg_expected_size;
use matchratio::{from_graph6, invariant_report, to_graph6, Graph};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, One, Zero};
use proptest::prelude::*;

fn colex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for v in 0..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = colex_pairs(n);
    let edges = pairs
        .iter()
        .zip(bits)
        .filter(|(_, &keep)| keep)
        .map(|(&(u, v), _)| (u, v));
    Graph::new(n, edges).expect("pairs are valid edges")
}

/// Arbitrary graph on at most `max_n` vertices, edges chosen independently.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// Ordered-sequence statistics and the greedy distribution, recomputed by
/// direct recursion over edge choices (independent of the library's
/// include/exclude enumeration).
fn sequence_stats(g: &Graph) -> (BigUint, BigUint, BigRational, BigRational) {
    fn rec(
        edges: &[(u32, u32)],
        covered: u64,
        prob: &BigRational,
        depth: u64,
        acc: &mut (BigUint, BigUint, BigRational, BigRational),
    ) {
        let available: Vec<usize> = edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| covered & (1 << u) == 0 && covered & (1 << v) == 0)
            .map(|(i, _)| i)
            .collect();
        if available.is_empty() {
            acc.0 += BigUint::one();
            acc.1 += BigUint::from(depth);
            acc.2 += prob;
            acc.3 += prob * BigRational::from(BigInt::from(depth));
            return;
        }
        let next = prob / BigRational::from(BigInt::from(available.len() as u64));
        for i in available {
            let (u, v) = edges[i];
            rec(edges, covered | (1 << u) | (1 << v), &next, depth + 1, acc);
        }
    }
    let mut acc = (
        BigUint::zero(),
        BigUint::zero(),
        BigRational::zero(),
        BigRational::zero(),
    );
    rec(g.edges(), 0, &BigRational::one(), 0, &mut acc);
    acc
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(16)) {
        let code = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&code).unwrap(), g);
    }

    #[test]
    fn profile_sizes_lie_between_half_nu_and_nu(g in arb_graph(7)) {
        let r = invariant_report(&g).unwrap();
        prop_assert_eq!(r.profile.max_size(), r.nu);
        for (k, count) in r.profile.iter() {
            prop_assert!(!count.is_zero());
            prop_assert!(2 * k >= r.nu, "maximal size {k} below half of nu {}", r.nu);
        }
    }

    #[test]
    fn ratio_bounds_and_ordered_dominance(g in arb_graph(7)) {
        let r = invariant_report(&g).unwrap();
        let one = BigRational::one();
        prop_assert!(r.i_avg <= one && r.i_ord <= one && r.i_df <= one && r.i_arw <= one);
        if r.nu >= 1 {
            prop_assert!(r.i_avg > half());
            prop_assert!(r.i_ord > half());
            prop_assert!(r.i_df > half());
            prop_assert!(r.i_arw > BigRational::zero());
        }
        prop_assert!(r.i_avg <= r.i_ord);
    }

    #[test]
    fn ordered_and_greedy_statistics_match_direct_recursion(g in arb_graph(6)) {
        let r = invariant_report(&g).unwrap();
        let (count, length, total_prob, expected_size) = sequence_stats(&g);
        prop_assert_eq!(count, r.t0_ord);
        prop_assert_eq!(length, r.t1_ord);
        prop_assert_eq!(total_prob, BigRational::one());
        prop_assert_eq!(expected_size, rg_expected_size(&g).unwrap());
    }

    #[test]
    fn thorn_duality(g in arb_graph(6)) {
        prop_assume!(g.order() >= 1);
        let r = invariant_report(&g).unwrap();
        let thorn = invariant_report(&g.thorn()).unwrap();
        prop_assert_eq!(thorn.nu, g.order());
        let n = BigRational::from(BigInt::from(g.order() as u64));
        let arw_mean = BigRational::new(
            BigInt::from(r.t1_arw.clone()),
            BigInt::from(r.t0_arw.clone()),
        );
        prop_assert_eq!(thorn.i_avg, BigRational::one() - arw_mean / n);
    }

    #[test]
    fn invariants_are_isomorphism_invariant(
        (g, perm) in arb_graph(6).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let relabeled = Graph::new(
            g.order(),
            g.edges().iter().map(|&(u, v)| (perm[u as usize], perm[v as usize])),
        )
        .unwrap();
        let a = invariant_report(&g).unwrap();
        let b = invariant_report(&relabeled).unwrap();
        prop_assert_eq!(a.profile, b.profile);
        prop_assert_eq!(a.t0_ord, b.t0_ord);
        prop_assert_eq!(a.t1_arw, b.t1_arw);
        prop_assert_eq!(a.mu, b.mu);
        prop_assert_eq!(a.i_df, b.i_df);
    }
}
