//! Pinned reference values: graph6 codes under the crate's constructions,
//! recurrence-extended profile sums at indexes far beyond enumeration reach,
//! and the order-6 exception classes with their exact ratios.

use matchratio::exact::invariant_report;
use matchratio::families::Family;
use matchratio::recurrence::family_profiles;
use matchratio::sweep::{all_graphs, canonical_bits, compare_invariants, comparison_row};
use matchratio::{from_graph6, to_graph6, Graph};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::BigUint;

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn family(name: &str, s: Option<u64>, c: Option<u64>) -> Family {
    Family::parse(name, s, c).unwrap()
}

#[test]
fn graph6_codes_of_reference_graphs() {
    let refs: &[(Graph, &str)] = &[
        (Graph::empty(0), "?"),
        (Graph::empty(1), "@"),
        (family("complete", None, None).generate(2).unwrap(), "A_"),
        (family("complete", None, None).generate(3).unwrap(), "Bw"),
        (family("complete", None, None).generate(4).unwrap(), "C~"),
        (family("path", None, None).generate(4).unwrap(), "Ch"),
        (family("cycle", None, None).generate(5).unwrap(), "Dhc"),
        (family("cycle", None, None).generate(6).unwrap(), "EhEG"),
        (family("wheel", None, None).generate(6).unwrap(), "E|fG"),
        (family("thorn-complete", None, None).generate(3).unwrap(), "E{O_"),
        (
            family("complete-bipartite", None, Some(3)).generate(3).unwrap(),
            "EFz_",
        ),
    ];
    for (g, code) in refs {
        assert_eq!(to_graph6(g).unwrap(), *code);
        let back = from_graph6(code).unwrap();
        assert_eq!(&back, g);
    }
}

#[test]
fn petersen_reference_values() {
    let g = from_graph6("IheA@GUAo").unwrap();
    assert_eq!(g.order(), 10);
    assert_eq!(g.size(), 15);
    assert!((0..10).all(|v| g.degree(v) == 3));
    let report = invariant_report(&g).unwrap();
    assert_eq!(report.nu, 5);
    // Six perfect matchings; smallest maximal matchings have three edges.
    assert_eq!(report.profile.count(5), BigUint::from(6u32));
    assert_eq!(report.profile.iter().next().unwrap().0, 3);
    assert_eq!(to_graph6(&g).unwrap(), "IheA@GUAo");
}

#[test]
fn extended_profile_sums_far_beyond_enumeration() {
    let cases: &[(&str, Option<u64>, u64, u64, u64)] = &[
        ("path", None, 30, 3329, 40645),
        ("cycle", None, 30, 4610, 56910),
        ("ladder", None, 20, 2_259_072, 39_035_258),
        ("hexagon-chain", Some(1), 10, 114_220_833, 2_814_535_205),
    ];
    for &(name, s, n, t0, t1) in cases {
        let fam = family(name, s, None);
        let (start, profs) = family_profiles(&fam, n).unwrap();
        let p = &profs[(n - start) as usize];
        assert_eq!(p.t0(), BigUint::from(t0), "{fam} T0 at n = {n}");
        assert_eq!(p.t1(), BigUint::from(t1), "{fam} T1 at n = {n}");
    }
}

#[test]
fn caterpillar_ratio_at_twenty() {
    let fam = family("caterpillar-tree", None, None);
    let (start, profs) = family_profiles(&fam, 20).unwrap();
    let p = &profs[(20 - start) as usize];
    let nu = fam.matching_number(20);
    assert_eq!(matchratio::profile_ratio(p, nu), rational(254, 351));
}

#[test]
fn complete_bipartite_three_three_is_equimatchable() {
    let g = family("complete-bipartite", None, Some(3)).generate(3).unwrap();
    let report = invariant_report(&g).unwrap();
    assert_eq!(report.nu, 3);
    assert_eq!(report.profile.to_string(), "{3: 6}");
    assert_eq!(report.i_avg, rational(1, 1));
    assert_eq!(report.i_ord, rational(1, 1));
    assert_eq!(report.i_df, rational(1, 1));
}

/// The order-6 sweep's exception lists, matched against independently
/// labeled witnesses by canonical form, with their exact ratios.
#[test]
fn order_six_exception_classes() {
    let rows: Vec<_> = all_graphs(6)
        .unwrap()
        .iter()
        .map(|g| comparison_row(g, 26).unwrap())
        .collect();
    let (_, summary) = compare_invariants(rows);
    assert_eq!(summary.classes, 156);

    let canon_of = |code: &str| canonical_bits(&from_graph6(code).unwrap()).unwrap();
    let canon_list =
        |codes: &[String]| codes.iter().map(|c| canon_of(c)).collect::<Vec<u64>>();

    // Witnesses where the greedy ratio exceeds the ordered ratio.
    let above = [
        ("E{CW", rational(19, 27), rational(25, 33), rational(16, 21)),
        ("EJyG", rational(20, 27), rational(32, 39), rational(33, 40)),
        ("E~aG", rational(7, 9), rational(13, 15), rational(47, 54)),
    ];
    let listed = canon_list(&summary.df_above_ord);
    assert_eq!(listed.len(), 3);
    for (code, i_avg, i_ord, i_df) in &above {
        let g = from_graph6(code).unwrap();
        let r = invariant_report(&g).unwrap();
        assert_eq!(&r.i_avg, i_avg, "{code}");
        assert_eq!(&r.i_ord, i_ord, "{code}");
        assert_eq!(&r.i_df, i_df, "{code}");
        assert!(r.i_df > r.i_ord, "{code}");
        assert!(listed.contains(&canon_of(code)), "{code} not listed");
    }

    // Witnesses where the greedy ratio drops below the uniform average.
    let below = [
        ("EhX_", rational(15, 16), rational(29, 30), rational(13, 14)),
        ("EzW_", rational(19, 20), rational(37, 38), rational(15, 16)),
        ("E?~w", rational(25, 26), rational(49, 50), rational(17, 18)),
    ];
    let listed = canon_list(&summary.df_below_avg);
    assert_eq!(listed.len(), 3);
    for (code, i_avg, i_ord, i_df) in &below {
        let g = from_graph6(code).unwrap();
        let r = invariant_report(&g).unwrap();
        assert_eq!(&r.i_avg, i_avg, "{code}");
        assert_eq!(&r.i_ord, i_ord, "{code}");
        assert_eq!(&r.i_df, i_df, "{code}");
        assert!(r.i_df < r.i_avg, "{code}");
        assert!(listed.contains(&canon_of(code)), "{code} not listed");
    }
}

/// thorn(P_n) and the s = 1 pendant chain are the same graph up to
/// relabeling, so their profiles must coincide exactly.
#[test]
fn thorn_path_shares_pendant_chain_profile() {
    for n in 1..=8 {
        let thorn = family("path", None, None).generate(n).unwrap().thorn();
        let chain = family("clique-pendant-chain", Some(1), None)
            .generate(n)
            .unwrap();
        assert_eq!(
            matchratio::maximal_matching_profile(&thorn).unwrap(),
            matchratio::maximal_matching_profile(&chain).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn no_exception_classes_below_order_six() {
    for n in 0..=5 {
        let rows: Vec<_> = all_graphs(n)
            .unwrap()
            .iter()
            .map(|g| comparison_row(g, 26).unwrap())
            .collect();
        let (_, summary) = compare_invariants(rows);
        assert!(summary.df_above_ord.is_empty(), "n = {n}");
        assert!(summary.df_below_avg.is_empty(), "n = {n}");
    }
}
