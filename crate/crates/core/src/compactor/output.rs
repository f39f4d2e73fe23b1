//! The four compactor outputs and an independent verifier for them.

use serde::{Deserialize, Serialize};

use super::params::{CompactorParams, VerifyLevel};
use crate::connectivity::flow::DisjointPaths;
use crate::decomposition::triconnected::is_triconnected;
use crate::graph::{apply_minor_op, Graph, MinorOp, Vertex};

/// A shrink operation that keeps a 3-connected graph 3-connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", content = "payload")]
pub enum Shrink {
    /// Edges to delete; each has `c` disjoint paths avoiding the others.
    EdgeSet(Vec<(Vertex, Vertex)>),
    /// Stable vertices of bounded degree to delete.
    StableSet(Vec<Vertex>),
    /// Matching to contract.
    MatchingOut(Vec<(Vertex, Vertex)>),
    /// Disjoint triangles of degree-3 vertices, each contracted to a vertex.
    Triangles(Vec<[Vertex; 3]>),
}

impl Shrink {
    pub fn len(&self) -> usize {
        match self {
            Shrink::EdgeSet(x) | Shrink::MatchingOut(x) => x.len(),
            Shrink::StableSet(x) => x.len(),
            Shrink::Triangles(x) => x.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Shrink::EdgeSet(_) => "EdgeSet",
            Shrink::StableSet(_) => "StableSet",
            Shrink::MatchingOut(_) => "MatchingOut",
            Shrink::Triangles(_) => "Triangles",
        }
    }

    pub fn minor_op(&self) -> MinorOp {
        match self {
            Shrink::EdgeSet(es) => MinorOp::DeleteEdges(es.clone()),
            Shrink::StableSet(vs) => MinorOp::DeleteVertices(vs.clone()),
            Shrink::MatchingOut(es) => MinorOp::ContractMatching(es.clone()),
            Shrink::Triangles(ts) => MinorOp::ContractTriangles(ts.clone()),
        }
    }
}

/// Which part of the algorithm produced an output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Edges outside a sparse connectivity certificate.
    DenseEdgeDeletion,
    /// Vertices left out of a highly connected subgraph around a small cover.
    SmallCover,
    /// The refined matching itself.
    RefinedMatching,
    /// The submatching with no two edges forming a 4-cut.
    IndependentMatching,
    /// Edges of that submatching lying in no 2-cut after contraction.
    UncutMatching,
    LeafOrPathTriangles,
    WellBehavedMatching,
    SweetMatching,
    /// Edges added one at a time, each addition checked.
    Fallback,
    /// Nothing was found.
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub condition: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub level: VerifyLevel,
    pub checks: Vec<Check>,
}

impl Transcript {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    fn record(&mut self, condition: &str, witness: Option<String>) {
        self.checks.push(Check { condition: condition.into(), passed: witness.is_none(), witness });
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompactorOutput {
    pub shrink: Shrink,
    pub route: Route,
    /// Payload smaller than delta (|V| + |E|).
    pub below_target: bool,
    pub transcript: Transcript,
}

fn first_bad<T: std::fmt::Debug>(items: impl IntoIterator<Item = T>, mut bad: impl FnMut(&T) -> bool) -> Option<String> {
    items.into_iter().find(|x| bad(x)).map(|x| format!("{x:?}"))
}

/// Checks every side condition of `shrink` on `h` without trusting the
/// producer. `Off` returns an empty transcript; `Debug` checks structure
/// and 3-connectivity of the result; `Full` adds the path counts.
pub fn verify_output(
    h: &Graph,
    protected: &[Vertex],
    params: &CompactorParams,
    shrink: &Shrink,
    level: VerifyLevel,
) -> Transcript {
    let mut t = Transcript { level, checks: Vec::new() };
    if level == VerifyLevel::Off {
        return t;
    }
    let c = params.c;
    let touched: Vec<Vertex> = match shrink {
        Shrink::EdgeSet(es) | Shrink::MatchingOut(es) => es.iter().flat_map(|&(a, b)| [a, b]).collect(),
        Shrink::StableSet(vs) => vs.clone(),
        Shrink::Triangles(ts) => ts.iter().flatten().copied().collect(),
    };
    t.record("avoids_protected", first_bad(touched.iter(), |v| protected.contains(v)));
    match shrink {
        Shrink::EdgeSet(es) => {
            let mut seen = std::collections::HashSet::new();
            t.record(
                "distinct_edges_of_graph",
                first_bad(es.iter(), |&&(a, b)| !h.has_edge(a, b) || !seen.insert((a.min(b), a.max(b)))),
            );
            if level == VerifyLevel::Full && t.passed() {
                let rest = h.without_edges(es);
                let mut dp = DisjointPaths::new(&rest);
                t.record("c_paths_avoiding_deleted_edges", first_bad(es.iter(), |&&(a, b)| dp.count(a, b, c) < c));
            }
        }
        Shrink::StableSet(vs) => {
            let mut inside = vec![false; h.id_bound()];
            let mut dup = None;
            for &v in vs {
                if !h.contains(v) || inside[v] {
                    dup = Some(format!("{v}"));
                    break;
                }
                inside[v] = true;
            }
            t.record("distinct_vertices_of_graph", dup);
            if t.passed() {
                t.record("stable", first_bad(vs.iter(), |&&v| h.neighbors(v).iter().any(|&w| inside[w])));
                t.record("degree_at_most_big_delta", first_bad(vs.iter(), |&&v| h.degree(v) > params.big_delta));
            }
            if level == VerifyLevel::Full && t.passed() {
                let rest = h.without_vertices(vs);
                let mut dp = DisjointPaths::new(&rest);
                let bad = vs.iter().find_map(|&v| {
                    let nb = h.neighbors(v);
                    for (i, &a) in nb.iter().enumerate() {
                        for &b in &nb[i + 1..] {
                            if dp.count(a, b, c) < c {
                                return Some(format!("{v}: {a}-{b}"));
                            }
                        }
                    }
                    None
                });
                t.record("neighbour_pairs_c_connected", bad);
            }
        }
        Shrink::MatchingOut(es) => {
            let mut seen = std::collections::HashSet::new();
            t.record(
                "matching_of_graph",
                first_bad(es.iter(), |&&(a, b)| !h.has_edge(a, b) || !seen.insert(a) || !seen.insert(b)),
            );
            t.record(
                "degree_at_most_big_delta",
                first_bad(touched.iter(), |&&v| h.contains(v) && h.degree(v) > params.big_delta),
            );
        }
        Shrink::Triangles(ts) => {
            let mut seen = std::collections::HashSet::new();
            t.record(
                "disjoint_triangles_of_graph",
                first_bad(ts.iter(), |&&[a, b, x]| {
                    !(h.has_edge(a, b) && h.has_edge(b, x) && h.has_edge(a, x))
                        || !seen.insert(a)
                        || !seen.insert(b)
                        || !seen.insert(x)
                }),
            );
            t.record("degree_three", first_bad(touched.iter(), |&&v| h.contains(v) && h.degree(v) != 3));
        }
    }
    if t.passed() {
        let witness = match apply_minor_op(h, &shrink.minor_op(), protected) {
            Ok((g, _)) if is_triconnected(&g) => None,
            Ok(_) => Some("result has a separating set of at most two vertices".into()),
            Err(e) => Some(e.to_string()),
        };
        t.record("result_3_connected", witness);
    }
    t
}
