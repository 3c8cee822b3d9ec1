//! Exhaustive comparison of the invariant ratios over small orders.
//!
//! Generation is brute force: one representative per isomorphism class,
//! chosen as the minimum adjacency bit-string over all vertex permutations.
//! That is cheap through order 6 (2^15 labeled graphs × 720 permutations);
//! larger orders must be supplied externally as a graph6 stream.

use crate::error::SweepError;
use crate::exact::{invariant_report_with_cap, DEFAULT_VERTEX_CAP};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::render::{rational_str, significant};
use num::BigRational;

/// Largest order with built-in exhaustive generation.
pub const MAX_SWEEP_ORDER: usize = 6;

/// Largest order accepted by [`canonical_bits`] (8! permutations is still
/// instant for a single graph).
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Vertex pairs (u, v), u < v, in the colexicographic order used for both
/// canonical bit-strings and the graph6 payload.
fn colex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

/// Bit-position remap tables, one per permutation: entry `b` is the position
/// of pair `b` after relabeling vertices by the permutation.
fn perm_bit_maps(n: usize) -> Vec<Vec<usize>> {
    let pairs = colex_pairs(n);
    let index_of = |u: usize, v: usize| -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        b * (b - 1) / 2 + a
    };
    permutations(n)
        .into_iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(u, v)| index_of(perm[u], perm[v]))
                .collect()
        })
        .collect()
}

fn remap(code: u64, map: &[usize]) -> u64 {
    let mut mapped = 0u64;
    let mut bits = code;
    while bits != 0 {
        let b = bits.trailing_zeros() as usize;
        mapped |= 1 << map[b];
        bits &= bits - 1;
    }
    mapped
}

fn graph_from_code(n: usize, code: u64, pairs: &[(usize, usize)]) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(b, _)| code >> b & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).expect("pair table edges are in range")
}

/// The canonical adjacency bit-string of `g`: minimum over all vertex
/// permutations. Equal exactly for isomorphic graphs.
pub fn canonical_bits(g: &Graph) -> Result<u64, SweepError> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(SweepError::OrderTooLarge {
            order: n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let index_of = |u: usize, v: usize| -> u64 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        (b * (b - 1) / 2 + a) as u64
    };
    let code = g
        .edges()
        .iter()
        .fold(0u64, |c, &(u, v)| c | 1 << index_of(u as usize, v as usize));
    Ok(perm_bit_maps(n)
        .iter()
        .map(|map| remap(code, map))
        .min()
        .unwrap_or(0))
}

/// Every graph of order `n` up to isomorphism, in increasing canonical-code
/// order. Requires n ≤ [`MAX_SWEEP_ORDER`].
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, SweepError> {
    if n > MAX_SWEEP_ORDER {
        return Err(SweepError::OrderTooLarge {
            order: n,
            max: MAX_SWEEP_ORDER,
        });
    }
    let pairs = colex_pairs(n);
    let maps = perm_bit_maps(n);
    let mut out = Vec::new();
    for code in 0..1u64 << pairs.len() {
        if maps.iter().all(|map| remap(code, map) >= code) {
            out.push(graph_from_code(n, code, &pairs));
        }
    }
    Ok(out)
}

/// One sweep output row: all four exact ratios of one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub nu: usize,
    pub i_avg: BigRational,
    pub i_ord: BigRational,
    pub i_df: BigRational,
    pub i_arw: BigRational,
}

/// Compute the row for one graph.
pub fn comparison_row(g: &Graph, cap: usize) -> Result<ComparisonRow, SweepError> {
    let report = invariant_report_with_cap(g, cap)?;
    let graph6 = to_graph6(g).map_err(|_| SweepError::OrderTooLarge {
        order: g.order(),
        max: crate::graph6::MAX_ORDER,
    })?;
    Ok(ComparisonRow {
        graph6,
        order: report.order,
        size: report.size,
        nu: report.nu,
        i_avg: report.i_avg,
        i_ord: report.i_ord,
        i_df: report.i_df,
        i_arw: report.i_arw,
    })
}

/// Exception tallies over a batch of rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub classes: usize,
    /// Rows with i_df > i_ord, by graph6 code.
    pub df_above_ord: Vec<String>,
    /// Rows with i_df < i_avg, by graph6 code.
    pub df_below_avg: Vec<String>,
}

/// Sort rows by non-decreasing i_avg (ties by graph6 code) and tally the
/// exception classes.
pub fn compare_invariants(mut rows: Vec<ComparisonRow>) -> (Vec<ComparisonRow>, SweepSummary) {
    rows.sort_by(|a, b| {
        a.i_avg
            .cmp(&b.i_avg)
            .then_with(|| a.graph6.cmp(&b.graph6))
    });
    let summary = SweepSummary {
        classes: rows.len(),
        df_above_ord: rows
            .iter()
            .filter(|r| r.i_df > r.i_ord)
            .map(|r| r.graph6.clone())
            .collect(),
        df_below_avg: rows
            .iter()
            .filter(|r| r.i_df < r.i_avg)
            .map(|r| r.graph6.clone())
            .collect(),
    };
    (rows, summary)
}

/// Fixed CSV header for sweep rows.
pub const CSV_HEADER: &str = "graph6,n,m,nu,I,I_ord,I_DF,I_ARW,I_dec,I_ord_dec,I_DF_dec,I_ARW_dec";

/// Render rows as CSV, ratios both exact and at 12 significant digits.
pub fn rows_to_csv(rows: &[ComparisonRow]) -> String {
    use crate::render::rational_to_f64;
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let dec = |x: &BigRational| significant(rational_to_f64(x), 12);
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.graph6,
            r.order,
            r.size,
            r.nu,
            rational_str(&r.i_avg),
            rational_str(&r.i_ord),
            rational_str(&r.i_df),
            rational_str(&r.i_arw),
            dec(&r.i_avg),
            dec(&r.i_ord),
            dec(&r.i_df),
            dec(&r.i_arw),
        ));
    }
    out
}

/// One entry of the thorn-tree ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeRankEntry {
    /// graph6 of the underlying tree (not the thorn graph).
    pub tree_graph6: String,
    pub thorn_ratio: BigRational,
}

/// Ranking of I(thorn(T)) over all trees T of one order.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeExtremalReport {
    pub order: usize,
    /// Ascending by thorn ratio, ties by graph6 code.
    pub ranking: Vec<TreeRankEntry>,
    /// Whether the path's thorn graph attains the minimum.
    pub path_is_minimum: bool,
    /// Whether the minimum is attained by the path alone.
    pub path_is_unique_minimum: bool,
}

/// Rank I(thorn(T)) over every tree of order `n` and check that the path is
/// the minimizer.
pub fn tree_extremal_check(n: usize) -> Result<TreeExtremalReport, SweepError> {
    let trees: Vec<Graph> = all_graphs(n)?.into_iter().filter(Graph::is_tree).collect();
    let path_code = {
        let path = Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges in range");
        canonical_bits(&path)?
    };
    let mut ranking = Vec::new();
    let mut path_ratio: Option<BigRational> = None;
    for tree in &trees {
        let report = invariant_report_with_cap(&tree.thorn(), DEFAULT_VERTEX_CAP)?;
        let entry = TreeRankEntry {
            tree_graph6: to_graph6(tree).expect("sweep order is well under the graph6 limit"),
            thorn_ratio: report.i_avg,
        };
        if canonical_bits(tree)? == path_code {
            path_ratio = Some(entry.thorn_ratio.clone());
        }
        ranking.push(entry);
    }
    ranking.sort_by(|a, b| {
        a.thorn_ratio
            .cmp(&b.thorn_ratio)
            .then_with(|| a.tree_graph6.cmp(&b.tree_graph6))
    });
    // Vacuously true at order 0, where no tree exists.
    let (path_is_minimum, path_is_unique_minimum) = match (&path_ratio, ranking.first()) {
        (Some(p), Some(first)) => {
            let is_min = *p == first.thorn_ratio;
            let unique = is_min
                && ranking.iter().filter(|e| e.thorn_ratio == first.thorn_ratio).count() == 1;
            (is_min, unique)
        }
        _ => (true, true),
    };
    Ok(TreeExtremalReport {
        order: n,
        ranking,
        path_is_minimum,
        path_is_unique_minimum,
    })
}
