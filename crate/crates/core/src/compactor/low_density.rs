//! The compactor for graphs with at most 2c|V| edges.
//!
//! A greedy matching among low-degree vertices either leaves a small cover
//! (then a stable set is deleted) or is refined and contracted. If the
//! contraction is not 3-connected, the 2-cut trees of the contracted graphs
//! give small regions (leaves and long degree-2 paths) in each of which a
//! degree-3 triangle, a well-behaved edge or a sweet edge is found. Every
//! candidate output is checked for 3-connectivity before it is returned.

use std::collections::HashMap;

use super::cover::small_cover_embed;
use super::gadgets::{find_leaf_gadget, find_path_gadget, GadgetContext, GadgetFinding};
use super::matching::{greedy_low_degree_matching, refine_matching};
use super::output::{Route, Shrink};
use super::params::CompactorParams;
use super::CompactorError;
use crate::decomposition::harvest::{degree2_paths, independent_nodes, HarvestParams};
use crate::decomposition::tree::{special_2cut_tree, strong_2cut_tree, CutTree, Node, PartKind};
use crate::decomposition::triconnected::is_triconnected;
use crate::graph::{apply_minor_op, Graph, Vertex};

/// Edges tried one at a time when no candidate survives.
const FALLBACK_TRIES: usize = 32;

/// `h` with a matching contracted; each contracted vertex keeps the smaller id.
struct Contracted {
    graph: Graph,
    pair_of: HashMap<Vertex, (Vertex, Vertex)>,
}

impl Contracted {
    fn new(h: &Graph, edges: &[(Vertex, Vertex)]) -> Self {
        let groups: Vec<Vec<Vertex>> = edges.iter().map(|&(a, b)| vec![a, b]).collect();
        let (graph, _) = h.contract_groups(&groups);
        let pair_of = edges.iter().map(|&(a, b)| (a.min(b), (a, b))).collect();
        Contracted { graph, pair_of }
    }

    fn expand(&self, vs: impl IntoIterator<Item = Vertex>) -> Vec<Vertex> {
        let mut out = Vec::new();
        for v in vs {
            match self.pair_of.get(&v) {
                Some(&(a, b)) => out.extend([a, b]),
                None => out.push(v),
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Default)]
struct Pools {
    triangles: Vec<[Vertex; 3]>,
    well: Vec<((Vertex, Vertex), Vec<Vertex>, Vec<Vertex>)>,
    sweet: Vec<(Vertex, Vertex)>,
}

impl Pools {
    fn add(&mut self, f: GadgetFinding) {
        match f {
            GadgetFinding::Degree3Triangle { triangle } => self.triangles.push(triangle),
            GadgetFinding::WellBehavedEdge { edge, cut, side } => self.well.push((edge, cut, side)),
            GadgetFinding::SweetEdge { edge, .. } => self.sweet.push(edge),
        }
    }

    fn triangles(&self, bound: usize) -> Vec<[Vertex; 3]> {
        let mut used = vec![false; bound];
        let mut out = Vec::new();
        for t in &self.triangles {
            if t.iter().all(|&v| !used[v]) {
                for &v in t {
                    used[v] = true;
                }
                out.push(*t);
            }
        }
        out
    }

    /// Well-behaved edges whose sides avoid every other chosen cut and side.
    fn well_behaved(&self, bound: usize) -> Vec<(Vertex, Vertex)> {
        let mut in_side = vec![false; bound];
        let mut claimed = vec![false; bound];
        let mut out = Vec::new();
        for (e, cut, side) in &self.well {
            if side.iter().any(|&v| claimed[v]) || cut.iter().chain(side).any(|&v| in_side[v]) {
                continue;
            }
            for &v in side {
                in_side[v] = true;
            }
            for &v in cut.iter().chain(side) {
                claimed[v] = true;
            }
            out.push(*e);
        }
        out
    }

    fn sweet(&self, bound: usize) -> Vec<(Vertex, Vertex)> {
        let mut used = vec![false; bound];
        let mut out = Vec::new();
        for &(a, b) in &self.sweet {
            if !used[a] && !used[b] {
                used[a] = true;
                used[b] = true;
                out.push((a, b));
            }
        }
        out
    }
}

/// Whether applying `shrink` to `h` leaves a 3-connected graph.
pub(crate) fn preserves(h: &Graph, shrink: &Shrink, protected: &[Vertex]) -> bool {
    match apply_minor_op(h, &shrink.minor_op(), protected) {
        Ok((g, _)) => is_triconnected(&g),
        Err(_) => false,
    }
}

/// Stable set left out of the highly connected subgraph around `cover`.
pub(crate) fn stable_set_from_cover(h: &Graph, cover: &[Vertex], c: usize) -> Result<Vec<Vertex>, CompactorError> {
    let mut in_cover = vec![false; h.id_bound()];
    for &x in cover {
        in_cover[x] = true;
    }
    let stable: Vec<Vertex> = h.vertices().filter(|&v| !in_cover[v]).collect();
    let j = small_cover_embed(h, cover, &stable, c)?;
    Ok(stable.into_iter().filter(|&v| !j.contains(v)).collect())
}

/// Vertices of degree above `d`, the protected ones and the matched ones.
pub(crate) fn small_cover(h: &Graph, d: usize, protected: &[Vertex], matched: &[Vertex]) -> Vec<Vertex> {
    let mut cover: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) > d).collect();
    cover.extend(protected.iter().copied().filter(|&v| h.contains(v)));
    cover.extend(matched.iter().copied());
    cover.sort_unstable();
    cover.dedup();
    cover
}

pub(crate) fn cover_limit(h: &Graph, params: &CompactorParams) -> usize {
    10 * params.c * h.n() / params.d
}

fn leaf_regions(con: &Contracted, tree: &CutTree, limit: usize) -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
    let mut out = Vec::new();
    for leaf in tree.leaves() {
        let cut = con.expand([leaf.cut.0, leaf.cut.1]);
        let side = con.expand(leaf.interior.iter().copied());
        if cut.len() >= 3 && !side.is_empty() && side.len() <= limit {
            out.push((cut, side));
        }
    }
    out
}

fn path_regions(con: &Contracted, strong: &CutTree, limit: usize) -> Vec<(Vec<Vec<Vertex>>, Vec<Vertex>)> {
    let mut out = Vec::new();
    for path in degree2_paths(strong, &HarvestParams::default()) {
        let cuts: Vec<Vec<Vertex>> = path
            .iter()
            .filter_map(|n| match *n {
                Node::Cut(c) => Some(con.expand([strong.cuts[c].pair.0, strong.cuts[c].pair.1])),
                Node::Part(_) => None,
            })
            .collect();
        let (first, last) = (&cuts[0], &cuts[cuts.len() - 1]);
        let inner = path.iter().filter_map(|n| match *n {
            Node::Part(p) => Some(strong.parts[p].vertices.iter().copied()),
            Node::Cut(_) => None,
        });
        let region: Vec<Vertex> = con
            .expand(inner.flatten())
            .into_iter()
            .filter(|v| !first.contains(v) && !last.contains(v))
            .collect();
        if !region.is_empty() && region.len() <= limit && cuts.iter().all(|y| y.len() == 3) {
            out.push((cuts, region));
        }
    }
    out
}

fn search_leaves(h: &Graph, con: &Contracted, tree: &CutTree, limit: usize, ctx: &GadgetContext, pools: &mut Pools) {
    for (cut, side) in leaf_regions(con, tree, limit) {
        if let Ok(f) = find_leaf_gadget(h, &cut, &side, ctx) {
            pools.add(f);
        }
    }
}

/// The body of the compactor for sparse inputs; preconditions are the
/// caller's business. Returns an empty matching when nothing is found.
pub(crate) fn sparse_step(h: &Graph, params: &CompactorParams, protected: &[Vertex]) -> (Shrink, Route) {
    let bound = h.id_bound();
    let m = greedy_low_degree_matching(h, params.d, protected);
    let cover = small_cover(h, params.d, protected, &m.vertices());
    if cover.len() <= cover_limit(h, params) {
        if let Ok(s) = stable_set_from_cover(h, &cover, params.c) {
            let out = Shrink::StableSet(s);
            if !out.is_empty() && preserves(h, &out, protected) {
                return (out, Route::SmallCover);
            }
        }
    }
    let mstar = refine_matching(h, &m, params.d);
    if mstar.is_empty() {
        return (Shrink::MatchingOut(Vec::new()), Route::Empty);
    }
    let star = Contracted::new(h, &mstar.edges);
    if is_triconnected(&star.graph) {
        return (Shrink::MatchingOut(mstar.edges), Route::RefinedMatching);
    }
    let ctx = GadgetContext { d: params.d, max_degree: params.big_delta, protected };
    let limit = params.region_limit();
    let mut pools = Pools::default();
    let mut candidates: Vec<(Shrink, Route)> = Vec::new();
    if let Ok(strong_star) = strong_2cut_tree(&star.graph) {
        let special = special_2cut_tree(&strong_star);
        search_leaves(h, &star, &special.tree, limit, &ctx, &mut pools);
        // Contracted vertices no two of which form a 2-cut or share a cycle.
        let reps: Vec<Vertex> = star.pair_of.keys().copied().collect();
        let chosen = independent_nodes(&strong_star.tree, &reps);
        let mplus: Vec<(Vertex, Vertex)> = chosen.iter().map(|r| star.pair_of[r]).collect();
        if !mplus.is_empty() {
            let plus = Contracted::new(h, &mplus);
            if is_triconnected(&plus.graph) {
                candidates.push((Shrink::MatchingOut(mplus), Route::IndependentMatching));
            } else if let Ok(strong_plus) = strong_2cut_tree(&plus.graph) {
                let special = special_2cut_tree(&strong_plus);
                search_leaves(h, &plus, &special.tree, limit, &ctx, &mut pools);
                for (cuts, region) in path_regions(&plus, &strong_plus.tree, limit) {
                    if let Ok(f) = find_path_gadget(h, &cuts, &region, &ctx) {
                        pools.add(f);
                    }
                }
                let mut in_cut = vec![false; bound];
                for c in &strong_plus.tree.cuts {
                    in_cut[c.pair.0] = true;
                    in_cut[c.pair.1] = true;
                }
                for p in &strong_plus.tree.parts {
                    if p.kind == PartKind::Cycle && p.vertices.len() >= 4 {
                        for &v in &p.vertices {
                            in_cut[v] = true;
                        }
                    }
                }
                let last: Vec<(Vertex, Vertex)> =
                    chosen.iter().filter(|&&r| !in_cut[r]).map(|r| star.pair_of[r]).collect();
                candidates.push((Shrink::MatchingOut(last), Route::UncutMatching));
            }
        }
    }
    candidates.push((Shrink::Triangles(pools.triangles(bound)), Route::LeafOrPathTriangles));
    candidates.push((Shrink::MatchingOut(pools.well_behaved(bound)), Route::WellBehavedMatching));
    candidates.push((Shrink::MatchingOut(pools.sweet(bound)), Route::SweetMatching));
    candidates.retain(|(s, _)| !s.is_empty());
    candidates.sort_by_key(|(s, _)| std::cmp::Reverse(s.len()));
    for (s, r) in candidates {
        if preserves(h, &s, protected) {
            return (s, r);
        }
    }
    // One edge at a time, keeping each addition that preserves 3-connectivity.
    let mut chosen: Vec<(Vertex, Vertex)> = Vec::new();
    let mut used = vec![false; bound];
    for &(a, b) in mstar.edges.iter().chain(&pools.sweet).take(FALLBACK_TRIES) {
        if used[a] || used[b] {
            continue;
        }
        chosen.push((a, b));
        if preserves(h, &Shrink::MatchingOut(chosen.clone()), protected) {
            used[a] = true;
            used[b] = true;
        } else {
            chosen.pop();
        }
    }
    if chosen.is_empty() {
        (Shrink::MatchingOut(chosen), Route::Empty)
    } else {
        (Shrink::MatchingOut(chosen), Route::Fallback)
    }
}
