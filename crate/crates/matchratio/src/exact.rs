//! Exact matching statistics by enumeration.
//!
//! Everything here is exact: counts are arbitrary-precision integers and the
//! derived ratios are arbitrary-precision rationals. A matching is *maximal*
//! when no edge can be added, equivalently when the set of uncovered vertices
//! is independent; ν(G) is the largest matching size.
//!
//! The four averages reported for a graph with ν ≥ 1 (all equal to 1 by
//! convention when ν = 0):
//!
//! * `i_avg` — mean maximal-matching size over maximal matchings, over ν;
//! * `i_ord` — the same mean over *ordered* maximal matchings (a matching of
//!   size k is counted k! times), over ν;
//! * `i_arw` — mean size over *all* matchings, the empty one included, over ν;
//! * `i_df`  — expected size of the matching grown by repeatedly picking a
//!   uniformly random edge and deleting its endpoints, over ν.

use crate::error::EngineError;
use crate::graph::Graph;
use num::{BigInt, BigRational, BigUint, One, Zero};
use std::collections::HashMap;
use std::fmt;

/// Default enumeration cap, in vertices.
pub const DEFAULT_VERTEX_CAP: usize = 26;

/// Hard representation limit: enumeration uses one-word vertex bitmasks.
pub const MASK_LIMIT: usize = 64;

// ---------------------------------------------------------------------------
// Size profiles
// ---------------------------------------------------------------------------

/// Counts of matchings by size: `counts()[k]` matchings of size `k`.
///
/// Trailing zero entries are trimmed, so `max_size` is the largest size with
/// a nonzero count (0 for the all-zero profile).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeProfile {
    counts: Vec<BigUint>,
}

impl SizeProfile {
    /// The all-zero profile (not realizable by a graph; real graphs always
    /// have at least the empty matching or one maximal matching).
    pub fn zero() -> Self {
        SizeProfile { counts: Vec::new() }
    }

    pub fn from_counts(mut counts: Vec<BigUint>) -> Self {
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        SizeProfile { counts }
    }

    /// Build from `(size, count)` pairs; sizes may repeat and accumulate.
    pub fn from_pairs(pairs: &[(usize, u128)]) -> Self {
        let len = pairs.iter().map(|&(k, _)| k + 1).max().unwrap_or(0);
        let mut counts = vec![BigUint::zero(); len];
        for &(k, c) in pairs {
            counts[k] += BigUint::from(c);
        }
        SizeProfile::from_counts(counts)
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Entries with nonzero count, in increasing size order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.counts.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    /// Largest size with nonzero count; 0 for the zero profile.
    pub fn max_size(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    /// Total count Σ_k counts[k].
    pub fn t0(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Size-weighted count Σ_k k·counts[k].
    pub fn t1(&self) -> BigUint {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigUint::from(k))
            .sum()
    }

    /// Ordered total Σ_k k!·counts[k].
    pub fn t0_ordered(&self) -> BigUint {
        let mut fact = BigUint::one();
        let mut acc = BigUint::zero();
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                fact *= BigUint::from(k);
            }
            acc += c * &fact;
        }
        acc
    }

    /// Ordered size-weighted total Σ_k k·k!·counts[k].
    pub fn t1_ordered(&self) -> BigUint {
        let mut fact = BigUint::one();
        let mut acc = BigUint::zero();
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                fact *= BigUint::from(k);
            }
            acc += c * &fact * BigUint::from(k);
        }
        acc
    }
}

impl fmt::Display for SizeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}: {c}")?;
        }
        write!(f, "}}")
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

fn check_cap(g: &Graph, cap: usize) -> Result<(), EngineError> {
    if cap > MASK_LIMIT {
        return Err(EngineError::CapAboveMaskLimit { cap });
    }
    if g.order() > cap {
        return Err(EngineError::CapExceeded {
            order: g.order(),
            cap,
        });
    }
    Ok(())
}

/// Two-bit endpoint masks for each edge; requires order ≤ [`MASK_LIMIT`].
fn edge_masks(g: &Graph) -> Vec<u64> {
    g.edges()
        .iter()
        .map(|&(u, v)| (1u64 << u) | (1u64 << v))
        .collect()
}

/// Walk all matchings by deciding each edge in turn (skip it if an endpoint
/// is already covered, otherwise branch on include/exclude). Each complete
/// assignment is one matching; `maximal_only` keeps those whose uncovered
/// vertex set is independent, i.e. with every edge blocked.
fn enumerate_matchings(masks: &[u64], maximal_only: bool) -> Vec<u128> {
    fn rec(masks: &[u64], mut i: usize, covered: u64, size: usize, maximal_only: bool, counts: &mut Vec<u128>) {
        while i < masks.len() && masks[i] & covered != 0 {
            i += 1;
        }
        if i == masks.len() {
            if !maximal_only || masks.iter().all(|&m| m & covered != 0) {
                if counts.len() <= size {
                    counts.resize(size + 1, 0);
                }
                counts[size] += 1;
            }
            return;
        }
        rec(masks, i + 1, covered | masks[i], size + 1, maximal_only, counts);
        rec(masks, i + 1, covered, size, maximal_only, counts);
    }
    let mut counts = Vec::new();
    rec(masks, 0, 0, 0, maximal_only, &mut counts);
    counts
}

fn counts_to_profile(counts: Vec<u128>) -> SizeProfile {
    SizeProfile::from_counts(counts.into_iter().map(BigUint::from).collect())
}

/// Size profile of the maximal matchings, default cap.
pub fn maximal_matching_profile(g: &Graph) -> Result<SizeProfile, EngineError> {
    maximal_matching_profile_with_cap(g, DEFAULT_VERTEX_CAP)
}

/// Size profile of the maximal matchings of `g`.
///
/// Always has total count ≥ 1 (the empty matching is maximal in an edgeless
/// graph).
pub fn maximal_matching_profile_with_cap(g: &Graph, cap: usize) -> Result<SizeProfile, EngineError> {
    check_cap(g, cap)?;
    Ok(counts_to_profile(enumerate_matchings(&edge_masks(g), true)))
}

/// Size profile of *all* matchings (size 0 included), default cap.
pub fn matching_profile(g: &Graph) -> Result<SizeProfile, EngineError> {
    matching_profile_with_cap(g, DEFAULT_VERTEX_CAP)
}

/// Size profile of all matchings of `g`; its total count is the Hosoya index.
pub fn matching_profile_with_cap(g: &Graph, cap: usize) -> Result<SizeProfile, EngineError> {
    check_cap(g, cap)?;
    Ok(counts_to_profile(enumerate_matchings(&edge_masks(g), false)))
}

/// ν(G): the maximum matching size, default cap.
pub fn max_matching_size(g: &Graph) -> Result<usize, EngineError> {
    max_matching_size_with_cap(g, DEFAULT_VERTEX_CAP)
}

/// ν(G) via enumeration (every maximum matching is maximal).
pub fn max_matching_size_with_cap(g: &Graph, cap: usize) -> Result<usize, EngineError> {
    Ok(maximal_matching_profile_with_cap(g, cap)?.max_size())
}

// ---------------------------------------------------------------------------
// Randomized greedy (uniform random edge) expectation
// ---------------------------------------------------------------------------

/// Expected size of the matching built by drawing a uniformly random edge of
/// the surviving graph and deleting its endpoints until no edge remains.
/// Default cap.
pub fn rg_expected_size(g: &Graph) -> Result<BigRational, EngineError> {
    rg_expected_size_with_cap(g, DEFAULT_VERTEX_CAP)
}

/// Exact expectation via the recursion μ(G) = (1/m)·Σ_{uv∈E} (1 + μ(G−u−v)),
/// memoized on the set of deleted vertices; μ of an edgeless graph is 0.
pub fn rg_expected_size_with_cap(g: &Graph, cap: usize) -> Result<BigRational, EngineError> {
    check_cap(g, cap)?;
    fn mu(masks: &[u64], removed: u64, memo: &mut HashMap<u64, BigRational>) -> BigRational {
        if let Some(v) = memo.get(&removed) {
            return v.clone();
        }
        let live: Vec<u64> = masks.iter().copied().filter(|m| m & removed == 0).collect();
        if live.is_empty() {
            return BigRational::zero();
        }
        let mut acc = BigRational::zero();
        for &m in &live {
            acc += BigRational::one() + mu(masks, removed | m, memo);
        }
        let value = acc / BigRational::from_integer(BigInt::from(live.len()));
        memo.insert(removed, value.clone());
        value
    }
    Ok(mu(&edge_masks(g), 0, &mut HashMap::new()))
}

// ---------------------------------------------------------------------------
// Invariant report
// ---------------------------------------------------------------------------

/// All exact matching statistics of one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub order: usize,
    pub size: usize,
    /// Maximal-matching size profile.
    pub profile: SizeProfile,
    pub nu: usize,
    pub t0: BigUint,
    pub t1: BigUint,
    pub i_avg: BigRational,
    pub t0_ord: BigUint,
    pub t1_ord: BigUint,
    pub i_ord: BigRational,
    /// Totals over all matchings, the empty matching included.
    pub t0_arw: BigUint,
    pub t1_arw: BigUint,
    pub i_arw: BigRational,
    /// Expected randomized-greedy matching size.
    pub mu: BigRational,
    pub i_df: BigRational,
}

fn big_ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Mean size over ν for a maximal-matching profile: T₁/(ν·T₀), or 1 when
/// ν = 0. `nu` is passed in so extended profiles can use the family formula.
pub fn profile_ratio(profile: &SizeProfile, nu: u64) -> BigRational {
    if nu == 0 {
        return BigRational::one();
    }
    big_ratio(&profile.t1(), &(profile.t0() * BigUint::from(nu)))
}

/// Compute the full invariant report, default cap.
pub fn invariant_report(g: &Graph) -> Result<InvariantReport, EngineError> {
    invariant_report_with_cap(g, DEFAULT_VERTEX_CAP)
}

/// Compute the full invariant report. When ν = 0 every ratio is 1 by
/// convention and μ = 0.
pub fn invariant_report_with_cap(g: &Graph, cap: usize) -> Result<InvariantReport, EngineError> {
    let profile = maximal_matching_profile_with_cap(g, cap)?;
    let arw = matching_profile_with_cap(g, cap)?;
    let nu = profile.max_size();
    let (t0, t1) = (profile.t0(), profile.t1());
    let (t0_ord, t1_ord) = (profile.t0_ordered(), profile.t1_ordered());
    let (t0_arw, t1_arw) = (arw.t0(), arw.t1());
    let mu = rg_expected_size_with_cap(g, cap)?;
    let (i_avg, i_ord, i_arw, i_df) = if nu == 0 {
        (
            BigRational::one(),
            BigRational::one(),
            BigRational::one(),
            BigRational::one(),
        )
    } else {
        let nu_big = BigUint::from(nu);
        (
            big_ratio(&t1, &(&t0 * &nu_big)),
            big_ratio(&t1_ord, &(&t0_ord * &nu_big)),
            big_ratio(&t1_arw, &(&t0_arw * &nu_big)),
            mu.clone() / BigRational::from_integer(BigInt::from(nu)),
        )
    };
    Ok(InvariantReport {
        order: g.order(),
        size: g.size(),
        profile,
        nu,
        t0,
        t1,
        i_avg,
        t0_ord,
        t1_ord,
        i_ord,
        t0_arw,
        t1_arw,
        i_arw,
        mu,
        i_df,
    })
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Number of maximal matchings of the complete graph K_s: s!! for odd s,
/// (s−1)!! for even s, and 1 for s ≤ 0 (the empty-product convention used by
/// the chain coefficient formulas at small parameters).
pub fn clique_maximal_count(s: i64) -> BigUint {
    if s <= 0 {
        return BigUint::one();
    }
    let start = if s % 2 == 1 { s } else { s - 1 };
    let mut acc = BigUint::one();
    let mut k = start;
    while k > 1 {
        acc *= BigUint::from(k as u64);
        k -= 2;
    }
    acc
}

/// Maximal-matching profile of the path on `n` vertices, by the exact
/// three-term recurrence S(P_n, k) = S(P_{n−2}, k−1) + S(P_{n−3}, k−1) with
/// the real profiles of P_0, P_1, P_2 as bases.
pub(crate) fn path_profile(n: usize) -> SizeProfile {
    let mut profs: Vec<Vec<BigUint>> = vec![
        vec![BigUint::one()],                  // P0: empty matching only
        vec![BigUint::one()],                  // P1
        vec![BigUint::zero(), BigUint::one()], // P2: the single edge
    ];
    for m in 3..=n.max(2) {
        let len = profs[m - 2].len().max(profs[m - 3].len()) + 1;
        let mut next = vec![BigUint::zero(); len];
        for (k, c) in profs[m - 2].iter().enumerate() {
            next[k + 1] += c;
        }
        for (k, c) in profs[m - 3].iter().enumerate() {
            next[k + 1] += c;
        }
        profs.push(next);
    }
    SizeProfile::from_counts(profs[n].clone())
}

/// Maximal-matching profile of the wheel W_n (hub plus an (n−1)-cycle rim),
/// n ≥ 4: every maximal matching either saturates the hub through one of the
/// n−1 spokes leaving a path P_{n−2} of rim vertices, or is one of the two
/// perfect rim matchings that exist when n is odd.
pub fn wheel_profile(n: usize) -> Result<SizeProfile, EngineError> {
    if n < 4 {
        return Err(EngineError::OrderTooSmall {
            what: "wheel_profile",
            order: n,
            min: 4,
        });
    }
    let rim_path = path_profile(n - 2);
    let mut counts = vec![BigUint::zero(); rim_path.max_size() + 2];
    for (k, c) in rim_path.iter() {
        counts[k + 1] = c * BigUint::from(n - 1);
    }
    if n % 2 == 1 {
        let k = (n - 1) / 2;
        if counts.len() <= k {
            counts.resize(k + 1, BigUint::zero());
        }
        counts[k] += BigUint::from(2u32);
    }
    Ok(SizeProfile::from_counts(counts))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Maximal-matching profile of the thorn graph of K_{c,n} (one pendant on
/// each of the c + n vertices). Closed form: for max(n,c) ≤ k ≤ n+c the count
/// is c!·n! / ((n+c−k)!·(k−n)!·(k−c)!), choosing which vertices are matched
/// across the bipartition and which to their own thorns.
pub fn thorn_bipartite_profile(c: usize, n: usize) -> SizeProfile {
    let lo = n.max(c);
    let mut counts = vec![BigUint::zero(); n + c + 1];
    let num = factorial(c) * factorial(n);
    for (k, slot) in counts.iter_mut().enumerate().take(n + c + 1).skip(lo) {
        let den = factorial(n + c - k) * factorial(k - n) * factorial(k - c);
        debug_assert!((&num % &den).is_zero(), "profile count must be integral");
        *slot = &num / den;
    }
    SizeProfile::from_counts(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use num::ToPrimitive;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn profile_totals() {
        let p = SizeProfile::from_pairs(&[(2, 3), (3, 1)]);
        assert_eq!(p.t0(), BigUint::from(4u32));
        assert_eq!(p.t1(), BigUint::from(9u32));
        assert_eq!(p.t0_ordered(), BigUint::from(12u32)); // 3·2! + 1·3!
        assert_eq!(p.t1_ordered(), BigUint::from(30u32)); // 3·2·2! + 1·3·3!
        assert_eq!(p.max_size(), 3);
        assert_eq!(p.to_string(), "{2: 3, 3: 1}");
    }

    #[test]
    fn profile_trims_trailing_zeros() {
        let p = SizeProfile::from_counts(vec![BigUint::zero(), BigUint::one(), BigUint::zero()]);
        assert_eq!(p.counts().len(), 2);
        assert_eq!(p.max_size(), 1);
        assert!(SizeProfile::from_pairs(&[]).is_zero());
    }

    #[test]
    fn small_maximal_profiles() {
        // P4 has one maximal matching of size 1 (the middle edge) and one of size 2.
        let p4 = maximal_matching_profile(&path(4)).unwrap();
        assert_eq!(p4, SizeProfile::from_pairs(&[(1, 1), (2, 1)]));
        // P6: {2:3, 3:1}
        let p6 = maximal_matching_profile(&path(6)).unwrap();
        assert_eq!(p6, SizeProfile::from_pairs(&[(2, 3), (3, 1)]));
        // C6: {2:3, 3:2}
        let c6 = maximal_matching_profile(&cycle(6)).unwrap();
        assert_eq!(c6, SizeProfile::from_pairs(&[(2, 3), (3, 2)]));
        // Edgeless graphs have exactly the empty maximal matching.
        let e = maximal_matching_profile(&Graph::empty(5)).unwrap();
        assert_eq!(e, SizeProfile::from_pairs(&[(0, 1)]));
    }

    #[test]
    fn clique_profiles_are_equimatchable() {
        for s in 1..=8usize {
            let prof = maximal_matching_profile(&complete(s)).unwrap();
            let expected = clique_maximal_count(s as i64);
            assert_eq!(prof.count(s / 2), expected, "K_{s}");
            assert_eq!(prof.t0(), expected, "K_{s} has a single maximal size");
        }
        assert_eq!(clique_maximal_count(-1), BigUint::one());
        assert_eq!(clique_maximal_count(0), BigUint::one());
        assert_eq!(clique_maximal_count(5), BigUint::from(15u32));
        assert_eq!(clique_maximal_count(6), BigUint::from(15u32));
        assert_eq!(clique_maximal_count(26), BigUint::from(7905853580625u64));
    }

    #[test]
    fn hosoya_profile_counts_all_matchings() {
        // C6: 1 empty + 6 singles + 9 pairs + 2 perfect = 18 matchings.
        let h = matching_profile(&cycle(6)).unwrap();
        assert_eq!(h, SizeProfile::from_pairs(&[(0, 1), (1, 6), (2, 9), (3, 2)]));
        // K2: empty + the edge.
        let k2 = matching_profile(&complete(2)).unwrap();
        assert_eq!(k2, SizeProfile::from_pairs(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn rg_expectation_small_cases() {
        assert_eq!(rg_expected_size(&path(4)).unwrap(), ratio(5, 3));
        assert_eq!(rg_expected_size(&path(5)).unwrap(), ratio(2, 1));
        assert_eq!(rg_expected_size(&cycle(5)).unwrap(), ratio(2, 1));
        assert_eq!(rg_expected_size(&complete(4)).unwrap(), ratio(2, 1));
        assert_eq!(rg_expected_size(&Graph::empty(3)).unwrap(), BigRational::zero());
        // star K_{1,4}: one edge always
        let star = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(rg_expected_size(&star).unwrap(), ratio(1, 1));
    }

    #[test]
    fn invariant_report_thorn_triangle() {
        let report = invariant_report(&complete(3).thorn()).unwrap();
        assert_eq!(report.profile, SizeProfile::from_pairs(&[(2, 3), (3, 1)]));
        assert_eq!(report.nu, 3);
        assert_eq!(report.i_avg, ratio(3, 4));
        assert_eq!(report.i_ord, ratio(5, 6));
        assert_eq!(report.mu, ratio(7, 3));
        assert_eq!(report.i_df, ratio(7, 9));
        assert_eq!(report.i_arw, ratio(1, 2));
    }

    #[test]
    fn invariant_report_nu_zero_convention() {
        let report = invariant_report(&Graph::empty(4)).unwrap();
        assert_eq!(report.nu, 0);
        assert!(report.i_avg.is_one());
        assert!(report.i_ord.is_one());
        assert!(report.i_arw.is_one());
        assert!(report.i_df.is_one());
        assert!(report.mu.is_zero());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(27);
        assert_eq!(
            maximal_matching_profile(&g),
            Err(EngineError::CapExceeded { order: 27, cap: 26 })
        );
        assert!(maximal_matching_profile_with_cap(&g, 27).is_ok());
        assert_eq!(
            maximal_matching_profile_with_cap(&g, 65),
            Err(EngineError::CapAboveMaskLimit { cap: 65 })
        );
    }

    #[test]
    fn wheel_profile_matches_enumeration() {
        for n in 4..=12usize {
            let rim: Vec<(usize, usize)> = (1..n - 1).map(|v| (v, v + 1)).chain([(1, n - 1)]).collect();
            let spokes = (1..n).map(|v| (0, v));
            let w = Graph::new(n, rim.into_iter().chain(spokes)).unwrap();
            assert_eq!(
                wheel_profile(n).unwrap(),
                maximal_matching_profile(&w).unwrap(),
                "W_{n}"
            );
        }
        assert!(matches!(wheel_profile(3), Err(EngineError::OrderTooSmall { .. })));
    }

    #[test]
    fn thorn_bipartite_profile_matches_enumeration() {
        for (c, n) in [(0, 3), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (2, 4)] {
            let kb = Graph::new(c + n, (0..c).flat_map(|a| (0..n).map(move |b| (a, c + b)))).unwrap();
            assert_eq!(
                thorn_bipartite_profile(c, n),
                maximal_matching_profile(&kb.thorn()).unwrap(),
                "thorn K_{{{c},{n}}}"
            );
        }
        // frozen value: c=2, n=2 gives {2: 2, 3: 4, 4: 1}
        assert_eq!(
            thorn_bipartite_profile(2, 2),
            SizeProfile::from_pairs(&[(2, 2), (3, 4), (4, 1)])
        );
    }

    #[test]
    fn path_profile_closed_recurrence() {
        for n in 0..=12 {
            assert_eq!(
                path_profile(n),
                maximal_matching_profile(&path(n)).unwrap(),
                "P_{n}"
            );
        }
        // I(P200) numerator/denominator stay exact far beyond u64
        let p200 = path_profile(200);
        assert!(p200.t0().to_u64().is_none() || p200.t0() > BigUint::from(u32::MAX));
    }
}
