//! Exact maximal-matching statistics for small graphs and graph families.
//!
//! A matching is *maximal* when no edge of the graph can be added to it. The
//! library computes, with arbitrary-precision arithmetic:
//!
//! * size profiles S(G, k) — the number of maximal matchings of each size —
//!   by direct enumeration ([`exact`]);
//! * the four average-size ratios I, I^o, I^ARW, I^DF of a graph
//!   ([`exact::invariant_report`]);
//! * the same profiles along parameterized families by exact bivariate
//!   recurrences ([`families`], [`recurrence`]), cross-validated against
//!   enumeration;
//! * certified limits lim I(G_n) via dominant characteristic roots
//!   ([`recurrence::family_asymptote`]);
//! * exhaustive small-order comparisons of the four ratios ([`sweep`]).
//!
//! Counts and ratios are exact ([`num::BigUint`] / [`num::BigRational`]);
//! floating point appears only in root finding and limit evaluation.

pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod recurrence;
pub mod render;
pub mod roots;
pub mod sweep;

pub use error::{
    AnalysisError, CatalogError, EngineError, ExtendError, FamilyError, Graph6Error,
    GraphError, HypothesisError, ParseError, SweepError,
};
pub use exact::{
    invariant_report, invariant_report_with_cap, matching_profile, maximal_matching_profile,
    profile_ratio, rg_expected_size, InvariantReport, SizeProfile, DEFAULT_VERTEX_CAP,
};
pub use families::{Family, FAMILY_IDS};
pub use graph::{parse_edge_list, Graph, VertexSet};
pub use graph6::{from_graph6, to_graph6};
pub use recurrence::{
    convergence, family_asymptote, family_profiles, family_recurrence, standard_catalog,
    verify_family, verify_member, AsymptoticMethod, AsymptoticResult, RecurrenceSpec,
};
pub use sweep::{all_graphs, compare_invariants, comparison_row, tree_extremal_check};
