//! Parameterized graph families.
//!
//! Each family maps an index `n` to a concrete graph; chains grow by one
//! block per index step so the matching number is (eventually) linear in `n`.
//! Vertex layouts are fixed and documented per constructor, since the
//! recurrence bases are enumerated from these exact graphs.

use crate::error::FamilyError;
use crate::graph::Graph;
use num::{BigInt, BigRational};
use std::fmt;

/// Upper bound on the order of generated members; construction past this is
/// refused rather than allocating unbounded adjacency data.
pub const GENERATION_VERTEX_LIMIT: u64 = 10_000;

/// Largest clique parameter accepted by the clique chain families. Their
/// recurrence bases are obtained by enumerating one- and two-block members,
/// which grows with the number of matchings of K_s; s ≤ 8 keeps that trivial.
pub const MAX_CLIQUE_PARAM: u64 = 8;

/// Every id accepted by [`Family::parse`], aliases included.
pub const FAMILY_IDS: &[&str] = &[
    "path",
    "cycle",
    "wheel",
    "complete",
    "complete-bipartite",
    "thorn-path",
    "thorn-cycle",
    "thorn-complete",
    "thorn-complete-bipartite",
    "hexagon-chain",
    "c4-chain",
    "triangle-chain",
    "clique-pendant-chain",
    "clique-link-chain",
    "ladder",
    "thorn-ladder",
    "caterpillar-tree",
    "trees",
];

/// A graph family with any parameters fixed; indexing it gives members.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// Path P_n on vertices 0..n with edges (i, i+1).
    Path,
    /// Cycle C_n, n ≥ 3: path plus the closing edge (n−1, 0).
    Cycle,
    /// Wheel W_n, n ≥ 4: hub 0 joined to the rim cycle on 1..n.
    Wheel,
    /// Complete graph K_n.
    Complete,
    /// Complete bipartite K_{c,n}: left side 0..c, right side c..c+n.
    CompleteBipartite { c: u64 },
    /// Thorn graph of P_n (a pendant vertex attached to every vertex).
    ThornPath,
    /// Thorn graph of C_n, n ≥ 3.
    ThornCycle,
    /// Thorn graph of K_n.
    ThornComplete,
    /// Thorn graph of K_{c,n}.
    ThornCompleteBipartite { c: u64 },
    /// Chain of n hexagons: hexagon i on vertices 6i..6i+6 (a 6-cycle),
    /// bridged by the edge (6i+s, 6(i+1)); s ∈ {1, 2, 3} picks the ortho,
    /// meta, or para attachment point.
    HexagonChain { s: u64 },
    /// Chain of n squares: 4-cycle i on 4i..4i+4, bridge (4i+s, 4(i+1));
    /// s ∈ {1, 2} picks the adjacent or opposite corner.
    C4Chain { s: u64 },
    /// Chain of n triangles sharing spine vertices: triangle i spans the
    /// spine vertices 2i−2, 2i and apex 2i−1 (order 2n+1).
    TriangleChain,
    /// Chain of n blocks, each K_s on (s+1)i..(s+1)i+s with a pendant at
    /// (s+1)i+s, linked by ((s+1)i, (s+1)(i+1)).
    CliquePendantChain { s: u64 },
    /// Chain of n cliques K_s on si..si+s, linked by (si+1, s(i+1)), s ≥ 2.
    CliqueLinkChain { s: u64 },
    /// Ladder P_n □ K_2: rails 0..n and n..2n, rungs (i, n+i).
    Ladder,
    /// Thorn graph of the ladder.
    ThornLadder,
    /// Caterpillar tree: spine path on 3n−2 vertices with a leg at every
    /// third spine vertex (leg i is the edge (3n−2+i, 3i)), order 4n−2.
    CaterpillarTree,
}

impl Family {
    /// Resolve a family id plus optional parameters. Accepts the canonical
    /// hyphenated names and the alias `trees` for `caterpillar-tree`.
    pub fn parse(name: &str, s: Option<u64>, c: Option<u64>) -> Result<Family, FamilyError> {
        let fam = match name {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "wheel" => Family::Wheel,
            "complete" => Family::Complete,
            "complete-bipartite" => Family::CompleteBipartite {
                c: require("complete-bipartite", "c", c)?,
            },
            "thorn-path" => Family::ThornPath,
            "thorn-cycle" => Family::ThornCycle,
            "thorn-complete" => Family::ThornComplete,
            "thorn-complete-bipartite" => Family::ThornCompleteBipartite {
                c: require("thorn-complete-bipartite", "c", c)?,
            },
            "hexagon-chain" => Family::HexagonChain {
                s: require("hexagon-chain", "s", s)?,
            },
            "c4-chain" => Family::C4Chain {
                s: require("c4-chain", "s", s)?,
            },
            "triangle-chain" => Family::TriangleChain,
            "clique-pendant-chain" => Family::CliquePendantChain {
                s: require("clique-pendant-chain", "s", s)?,
            },
            "clique-link-chain" => Family::CliqueLinkChain {
                s: require("clique-link-chain", "s", s)?,
            },
            "ladder" => Family::Ladder,
            "thorn-ladder" => Family::ThornLadder,
            "caterpillar-tree" | "trees" => Family::CaterpillarTree,
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        fam.check_params(s, c)?;
        Ok(fam)
    }

    fn check_params(&self, s: Option<u64>, c: Option<u64>) -> Result<(), FamilyError> {
        let name = self.name();
        if s.is_some() && !self.takes_s() {
            return Err(FamilyError::UnexpectedParam { family: name, param: "s" });
        }
        if c.is_some() && !self.takes_c() {
            return Err(FamilyError::UnexpectedParam { family: name, param: "c" });
        }
        let bad = |param, value, why| Err(FamilyError::BadParam { family: name, param, value, why });
        match *self {
            Family::CompleteBipartite { c } | Family::ThornCompleteBipartite { c } if c == 0 => {
                bad("c", c, "must be at least 1")
            }
            Family::HexagonChain { s } if !(1..=3).contains(&s) => {
                bad("s", s, "attachment point must be 1, 2, or 3")
            }
            Family::C4Chain { s } if !(1..=2).contains(&s) => {
                bad("s", s, "attachment point must be 1 or 2")
            }
            Family::CliquePendantChain { s } if !(1..=MAX_CLIQUE_PARAM).contains(&s) => {
                bad("s", s, "clique size must be in 1..=8")
            }
            Family::CliqueLinkChain { s } if !(2..=MAX_CLIQUE_PARAM).contains(&s) => {
                bad("s", s, "clique size must be in 2..=8")
            }
            _ => Ok(()),
        }
    }

    fn takes_s(&self) -> bool {
        matches!(
            self,
            Family::HexagonChain { .. }
                | Family::C4Chain { .. }
                | Family::CliquePendantChain { .. }
                | Family::CliqueLinkChain { .. }
        )
    }

    fn takes_c(&self) -> bool {
        matches!(
            self,
            Family::CompleteBipartite { .. } | Family::ThornCompleteBipartite { .. }
        )
    }

    /// Canonical family id, without parameters.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::Complete => "complete",
            Family::CompleteBipartite { .. } => "complete-bipartite",
            Family::ThornPath => "thorn-path",
            Family::ThornCycle => "thorn-cycle",
            Family::ThornComplete => "thorn-complete",
            Family::ThornCompleteBipartite { .. } => "thorn-complete-bipartite",
            Family::HexagonChain { .. } => "hexagon-chain",
            Family::C4Chain { .. } => "c4-chain",
            Family::TriangleChain => "triangle-chain",
            Family::CliquePendantChain { .. } => "clique-pendant-chain",
            Family::CliqueLinkChain { .. } => "clique-link-chain",
            Family::Ladder => "ladder",
            Family::ThornLadder => "thorn-ladder",
            Family::CaterpillarTree => "caterpillar-tree",
        }
    }

    /// Name with parameters, e.g. `hexagon-chain(s=2)`.
    pub fn label(&self) -> String {
        match *self {
            Family::CompleteBipartite { c } | Family::ThornCompleteBipartite { c } => {
                format!("{}(c={c})", self.name())
            }
            Family::HexagonChain { s }
            | Family::C4Chain { s }
            | Family::CliquePendantChain { s }
            | Family::CliqueLinkChain { s } => format!("{}(s={s})", self.name()),
            _ => self.name().to_string(),
        }
    }

    /// Smallest index with a defined member.
    pub fn min_index(&self) -> u64 {
        match self {
            Family::Path | Family::ThornPath => 0,
            Family::Cycle | Family::ThornCycle => 3,
            Family::Wheel => 4,
            _ => 1,
        }
    }

    /// Order of member `n` (may exceed the construction limit).
    pub fn vertex_count(&self, n: u64) -> u128 {
        let n = n as u128;
        match *self {
            Family::Path | Family::Cycle | Family::Wheel | Family::Complete => n,
            Family::CompleteBipartite { c } => c as u128 + n,
            Family::ThornPath | Family::ThornCycle | Family::ThornComplete => 2 * n,
            Family::ThornCompleteBipartite { c } => 2 * (c as u128 + n),
            Family::HexagonChain { .. } => 6 * n,
            Family::C4Chain { .. } => 4 * n,
            Family::TriangleChain => 2 * n + 1,
            Family::CliquePendantChain { s } => (s as u128 + 1) * n,
            Family::CliqueLinkChain { s } => s as u128 * n,
            Family::Ladder => 2 * n,
            Family::ThornLadder => 4 * n,
            Family::CaterpillarTree => (4 * n).saturating_sub(2),
        }
    }

    /// ν of member `n` (valid for n ≥ min_index).
    pub fn matching_number(&self, n: u64) -> u64 {
        match *self {
            Family::Path | Family::Cycle | Family::Wheel | Family::Complete => n / 2,
            Family::CompleteBipartite { c } => c.min(n),
            Family::ThornPath | Family::ThornCycle | Family::ThornComplete => n,
            Family::ThornCompleteBipartite { c } => c + n,
            Family::HexagonChain { .. } => 3 * n,
            Family::C4Chain { .. } => 2 * n,
            Family::TriangleChain => n,
            Family::CliquePendantChain { s } => s.div_ceil(2) * n,
            Family::CliqueLinkChain { s } => n * s / 2,
            Family::Ladder => n,
            Family::ThornLadder => 2 * n,
            Family::CaterpillarTree => (2 * n).saturating_sub(1),
        }
    }

    /// Growth rate c = lim ν(G_n)/n of the matching number per index step.
    pub fn growth(&self) -> BigRational {
        let r = |p: u64, q: u64| BigRational::new(BigInt::from(p), BigInt::from(q));
        match *self {
            Family::Path | Family::Cycle | Family::Wheel | Family::Complete => r(1, 2),
            // ν(K_{c,n}) is eventually the constant c.
            Family::CompleteBipartite { .. } => r(0, 1),
            Family::ThornPath
            | Family::ThornCycle
            | Family::ThornComplete
            | Family::ThornCompleteBipartite { .. } => r(1, 1),
            Family::HexagonChain { .. } => r(3, 1),
            Family::C4Chain { .. } => r(2, 1),
            Family::TriangleChain => r(1, 1),
            Family::CliquePendantChain { s } => r(s.div_ceil(2), 1),
            Family::CliqueLinkChain { s } => r(s, 2),
            Family::Ladder => r(1, 1),
            Family::ThornLadder | Family::CaterpillarTree => r(2, 1),
        }
    }

    /// Build member `n`.
    pub fn generate(&self, n: u64) -> Result<Graph, FamilyError> {
        if n < self.min_index() {
            return Err(FamilyError::IndexBelowMinimum {
                family: self.name(),
                index: n,
                min: self.min_index(),
            });
        }
        let vertices = self.vertex_count(n);
        if vertices > GENERATION_VERTEX_LIMIT as u128 {
            return Err(FamilyError::TooManyVertices {
                family: self.name(),
                index: n,
                vertices: vertices.min(u64::MAX as u128) as u64,
                limit: GENERATION_VERTEX_LIMIT,
            });
        }
        let n = n as usize;
        let g = match *self {
            Family::Path => path(n),
            Family::Cycle => cycle(n),
            Family::Wheel => wheel(n),
            Family::Complete => complete(n),
            Family::CompleteBipartite { c } => complete_bipartite(c as usize, n),
            Family::ThornPath => path(n).thorn(),
            Family::ThornCycle => cycle(n).thorn(),
            Family::ThornComplete => complete(n).thorn(),
            Family::ThornCompleteBipartite { c } => complete_bipartite(c as usize, n).thorn(),
            Family::HexagonChain { s } => hexagon_chain(s as usize, n),
            Family::C4Chain { s } => c4_chain(s as usize, n),
            Family::TriangleChain => triangle_chain(n),
            Family::CliquePendantChain { s } => clique_pendant_chain(s as usize, n),
            Family::CliqueLinkChain { s } => clique_link_chain(s as usize, n),
            Family::Ladder => ladder(n),
            Family::ThornLadder => ladder(n).thorn(),
            Family::CaterpillarTree => caterpillar_tree(n),
        };
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn require(family: &'static str, param: &'static str, value: Option<u64>) -> Result<u64, FamilyError> {
    value.ok_or(FamilyError::MissingParam { family, param })
}

fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
}

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are in range")
}

fn wheel(n: usize) -> Graph {
    let rim = (1..n - 1).map(|v| (v, v + 1)).chain([(1, n - 1)]);
    let spokes = (1..n).map(|v| (0, v));
    Graph::new(n, rim.chain(spokes)).expect("wheel edges are in range")
}

fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    Graph::new(n, edges).expect("complete edges are in range")
}

fn complete_bipartite(c: usize, n: usize) -> Graph {
    let edges = (0..c).flat_map(|a| (0..n).map(move |b| (a, c + b)));
    Graph::new(c + n, edges).expect("bipartite edges are in range")
}

fn hexagon_chain(s: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        let b = 6 * i;
        edges.extend((0..5).map(|j| (b + j, b + j + 1)));
        edges.push((b, b + 5));
        if i + 1 < n {
            edges.push((b + s, 6 * (i + 1)));
        }
    }
    Graph::new(6 * n, edges).expect("hexagon edges are in range")
}

fn c4_chain(s: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        let b = 4 * i;
        edges.extend([(b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b, b + 3)]);
        if i + 1 < n {
            edges.push((b + s, 4 * (i + 1)));
        }
    }
    Graph::new(4 * n, edges).expect("square edges are in range")
}

fn triangle_chain(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        let (s0, a, s1) = (2 * i - 2, 2 * i - 1, 2 * i);
        edges.extend([(s0, a), (a, s1), (s0, s1)]);
    }
    Graph::new(2 * n + 1, edges).expect("triangle edges are in range")
}

fn clique_pendant_chain(s: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        let b = (s + 1) * i;
        edges.extend((b..b + s).flat_map(|v| (b..v).map(move |u| (u, v))));
        edges.push((b, b + s));
        if i + 1 < n {
            edges.push((b, (s + 1) * (i + 1)));
        }
    }
    Graph::new((s + 1) * n, edges).expect("clique-pendant edges are in range")
}

fn clique_link_chain(s: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        let b = s * i;
        edges.extend((b..b + s).flat_map(|v| (b..v).map(move |u| (u, v))));
        if i + 1 < n {
            edges.push((b + 1, s * (i + 1)));
        }
    }
    Graph::new(s * n, edges).expect("clique-link edges are in range")
}

fn ladder(n: usize) -> Graph {
    let rungs = (0..n).map(|i| (i, n + i));
    let rails = (1..n).flat_map(|i| [(i - 1, i), (n + i - 1, n + i)]);
    Graph::new(2 * n, rungs.chain(rails)).expect("ladder edges are in range")
}

fn caterpillar_tree(n: usize) -> Graph {
    let spine = 3 * n - 2;
    let back = (1..spine).map(|j| (j - 1, j));
    let legs = (0..n).map(|i| (spine + i, 3 * i));
    Graph::new(spine + n, back.chain(legs)).expect("caterpillar edges are in range")
}
