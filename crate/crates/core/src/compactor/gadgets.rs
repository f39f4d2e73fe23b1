//! Sweet edges, well-behaved edges and degree-3 triangles, with exact
//! predicates and searches confined to a small region of the graph.
//!
//! A region is a cutset `X` and the union `U` of some components of
//! `H - X`. The rest of the graph is summarised by attachment classes:
//! each class stands for a set of outside components that are connected to
//! one another through the class's cut vertices and see all of them. With
//! that summary, both well-behaved conditions can be decided on `X ∪ U`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::decomposition::blocks::{articulation_points, connected_components};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GadgetFinding {
    /// Three pairwise adjacent vertices of degree three.
    Degree3Triangle { triangle: [Vertex; 3] },
    /// An edge of `side` well-behaved for `[cut, side]`.
    WellBehavedEdge { edge: (Vertex, Vertex), cut: Vec<Vertex>, side: Vec<Vertex> },
    /// An edge with a sweet end.
    SweetEdge { edge: (Vertex, Vertex), sweet_end: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GadgetError {
    #[error("no gadget found: {0}")]
    NoGadget(String),
}

/// What a search may use.
#[derive(Clone, Copy, Debug)]
pub struct GadgetContext<'a> {
    /// Cut vertices of larger degree may not end a sweet edge.
    pub d: usize,
    /// Every vertex of a returned edge has at most this degree.
    pub max_degree: usize,
    pub protected: &'a [Vertex],
}

/// `x` is a sweet end of `xy`: the other neighbours of `x` form a clique,
/// or an induced path on three vertices whose midpoint has no neighbour
/// outside the closed neighbourhood of `x`.
pub fn is_sweet_end(h: &Graph, x: Vertex, y: Vertex) -> bool {
    if !h.has_edge(x, y) {
        return false;
    }
    let others: Vec<Vertex> = h.neighbors(x).iter().copied().filter(|&w| w != y).collect();
    let clique = others
        .iter()
        .enumerate()
        .all(|(i, &u)| others[i + 1..].iter().all(|&w| h.has_edge(u, w)));
    if clique {
        return true;
    }
    if others.len() != 3 {
        return false;
    }
    for i in 0..3 {
        let mid = others[i];
        let (p, q) = (others[(i + 1) % 3], others[(i + 2) % 3]);
        if h.has_edge(mid, p) && h.has_edge(mid, q) && !h.has_edge(p, q) {
            return h.neighbors(mid).iter().all(|&w| w == x || h.has_edge(x, w));
        }
    }
    false
}

pub fn sweet_end(h: &Graph, e: (Vertex, Vertex)) -> Option<Vertex> {
    if is_sweet_end(h, e.0, e.1) {
        Some(e.0)
    } else if is_sweet_end(h, e.1, e.0) {
        Some(e.1)
    } else {
        None
    }
}

pub fn is_degree3_triangle(h: &Graph, t: [Vertex; 3]) -> bool {
    let [a, b, c] = t;
    a != b
        && b != c
        && a != c
        && h.has_edge(a, b)
        && h.has_edge(b, c)
        && h.has_edge(a, c)
        && t.iter().all(|&v| h.degree(v) == 3)
}

/// Components of `h` minus `removed`.
fn components_without(h: &Graph, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    connected_components(&h.without_vertices(removed))
}

/// `side` is a union of components of `h - cut`, disjoint from `cut`.
pub fn is_union_of_components(h: &Graph, cut: &[Vertex], side: &[Vertex]) -> bool {
    let mut tag = vec![0u8; h.id_bound()];
    for &x in cut {
        tag[x] = 1;
    }
    for &u in side {
        if !h.contains(u) || tag[u] != 0 {
            return false;
        }
        tag[u] = 2;
    }
    side.iter().all(|&u| h.neighbors(u).iter().all(|&w| tag[w] != 0))
}

/// The definition, checked on the whole graph: `ab` lies in `side`, a
/// component of `h - cut`; (i) for every clique `Z` of at most two vertices
/// outside `cut ∪ side`, the cut lies in one component of `h - a - b - Z`;
/// (ii) for every `z` in `cut ∪ side`, `h - a - b - z` is connected.
pub fn is_well_behaved(h: &Graph, e: (Vertex, Vertex), cut: &[Vertex], side: &[Vertex]) -> bool {
    let (a, b) = e;
    if !h.has_edge(a, b) || !side.contains(&a) || !side.contains(&b) || !is_union_of_components(h, cut, side) {
        return false;
    }
    let side_g = h.induced(side);
    if connected_components(&side_g).len() != 1 || cut.is_empty() {
        return false;
    }
    let mut inside = vec![false; h.id_bound()];
    for &v in cut.iter().chain(side) {
        inside[v] = true;
    }
    let rest: Vec<Vertex> = h.vertices().filter(|&v| !inside[v]).collect();
    let mut cliques: Vec<Vec<Vertex>> = vec![vec![]];
    for &r in &rest {
        cliques.push(vec![r]);
        for &s in h.neighbors(r) {
            if s > r && !inside[s] {
                cliques.push(vec![r, s]);
            }
        }
    }
    for z in cliques {
        let mut removed = vec![a, b];
        removed.extend(z);
        let comps = components_without(h, &removed);
        let home = comps.iter().position(|c| c.binary_search(&cut[0]).is_ok());
        if cut.iter().any(|x| comps.iter().position(|c| c.binary_search(x).is_ok()) != home) {
            return false;
        }
    }
    for &z in cut.iter().chain(side) {
        if components_without(h, &[a, b, z]).len() > 1 {
            return false;
        }
    }
    true
}

/// Checks a finding against the definitions on the whole graph.
pub fn verify_gadget(h: &Graph, g: &GadgetFinding) -> bool {
    match g {
        GadgetFinding::Degree3Triangle { triangle } => is_degree3_triangle(h, *triangle),
        GadgetFinding::WellBehavedEdge { edge, cut, side } => is_well_behaved(h, *edge, cut, side),
        GadgetFinding::SweetEdge { edge, sweet_end } => {
            let other = if *sweet_end == edge.0 { edge.1 } else { edge.0 };
            (*sweet_end == edge.0 || *sweet_end == edge.1) && is_sweet_end(h, *sweet_end, other)
        }
    }
}

/// `X ∪ U` with local ids, followed by one node per attachment class.
struct LocalRegion {
    g: Graph,
    real: usize,
    cut_local: Vec<usize>,
    class_nodes: Vec<usize>,
}

impl LocalRegion {
    fn new(h: &Graph, cut: &[Vertex], side: &[Vertex], classes: &[Vec<Vertex>]) -> (Self, HashMap<Vertex, usize>) {
        let mut local: HashMap<Vertex, usize> = HashMap::new();
        for &v in cut.iter().chain(side) {
            let k = local.len();
            local.entry(v).or_insert(k);
        }
        let real = local.len();
        let mut edges = Vec::new();
        for &v in side {
            for &w in h.neighbors(v) {
                if let Some(&lw) = local.get(&w) {
                    if v < w || !side.contains(&w) {
                        edges.push((local[&v], lw));
                    }
                }
            }
        }
        for (i, &x) in cut.iter().enumerate() {
            for &y in &cut[i + 1..] {
                if h.has_edge(x, y) {
                    edges.push((local[&x], local[&y]));
                }
            }
        }
        let mut class_nodes = Vec::new();
        for (i, class) in classes.iter().enumerate() {
            let node = real + i;
            class_nodes.push(node);
            for x in class {
                if let Some(&lx) = local.get(x) {
                    edges.push((node, lx));
                }
            }
        }
        let g = Graph::from_edges(real + classes.len(), edges);
        let cut_local = cut.iter().map(|x| local[x]).collect();
        (LocalRegion { g, real, cut_local, class_nodes }, local)
    }

    fn well_behaved(&self, a: usize, b: usize) -> bool {
        // (ii): no real vertex separates the rest once a and b are gone.
        let g2 = self.g.without_vertices(&[a, b]);
        if connected_components(&g2).len() > 1 {
            return false;
        }
        if articulation_points(&g2).iter().any(|&z| z < self.real) {
            return false;
        }
        // (i): a small clique outside sits in one class; the others survive.
        for &skip in &self.class_nodes {
            let g1 = self.g.without_vertices(&[a, b, skip]);
            let comps = connected_components(&g1);
            let home = |x: usize| comps.iter().position(|c| c.binary_search(&x).is_ok());
            let first = home(self.cut_local[0]);
            if self.cut_local.iter().any(|&x| home(x) != first) {
                return false;
            }
        }
        true
    }
}

fn search(
    h: &Graph,
    cut: &[Vertex],
    side: &[Vertex],
    classes: &[Vec<Vertex>],
    ctx: &GadgetContext,
) -> Result<GadgetFinding, GadgetError> {
    if side.is_empty() {
        return Err(GadgetError::NoGadget("empty region".into()));
    }
    let free = |v: Vertex| !ctx.protected.contains(&v);
    let mut in_side: HashMap<Vertex, ()> = HashMap::new();
    for &u in side {
        in_side.insert(u, ());
    }
    let in_cut = |v: Vertex| cut.contains(&v);
    // Degree-3 triangles meeting the side.
    for &v in side {
        if h.degree(v) != 3 || !free(v) {
            continue;
        }
        let nb = h.neighbors(v);
        for i in 0..3 {
            for j in i + 1..3 {
                let (p, q) = (nb[i], nb[j]);
                if h.degree(p) == 3 && h.degree(q) == 3 && h.has_edge(p, q) && free(p) && free(q) {
                    let mut t = [v, p, q];
                    t.sort_unstable();
                    return Ok(GadgetFinding::Degree3Triangle { triangle: t });
                }
            }
        }
    }
    // Well-behaved edges inside the side.
    let (region, local) = LocalRegion::new(h, cut, side, classes);
    let mut cut_sorted = cut.to_vec();
    cut_sorted.sort_unstable();
    cut_sorted.dedup();
    let mut side_sorted = side.to_vec();
    side_sorted.sort_unstable();
    for &a in &side_sorted {
        if !free(a) || h.degree(a) > ctx.max_degree {
            continue;
        }
        for &b in h.neighbors(a) {
            if b <= a || !in_side.contains_key(&b) || !free(b) || h.degree(b) > ctx.max_degree {
                continue;
            }
            if region.well_behaved(local[&a], local[&b]) {
                return Ok(GadgetFinding::WellBehavedEdge {
                    edge: (a, b),
                    cut: cut_sorted.clone(),
                    side: side_sorted.clone(),
                });
            }
        }
    }
    // Sweet edges with an end in the side.
    for &a in &side_sorted {
        if !free(a) || h.degree(a) > ctx.max_degree {
            continue;
        }
        for &b in h.neighbors(a) {
            let ok_other = if in_side.contains_key(&b) {
                b > a
            } else {
                in_cut(b) && h.degree(b) <= ctx.d.min(ctx.max_degree)
            };
            if !ok_other || !free(b) {
                continue;
            }
            if let Some(end) = sweet_end(h, (a, b)) {
                return Ok(GadgetFinding::SweetEdge { edge: (a.min(b), a.max(b)), sweet_end: end });
            }
        }
    }
    Err(GadgetError::NoGadget(format!("cut {cut:?}, {} interior vertices", side.len())))
}

/// Searches `cut ∪ side` where `cut` is a minimal cutset of a 3-connected
/// `h` and `side` a component of `h - cut`. Everything else is treated as
/// one attachment class seeing the cut vertices that have outside
/// neighbours.
pub fn find_leaf_gadget(h: &Graph, cut: &[Vertex], side: &[Vertex], ctx: &GadgetContext) -> Result<GadgetFinding, GadgetError> {
    if cut.len() < 3 {
        return Err(GadgetError::NoGadget(format!("cut {cut:?} is too small")));
    }
    let span = cut.len() + side.len();
    let attached: Vec<Vertex> = cut
        .iter()
        .copied()
        .filter(|&x| {
            h.degree(x) > span || h.neighbors(x).iter().any(|w| !cut.contains(w) && !side.contains(w))
        })
        .collect();
    search(h, cut, side, &[attached], ctx)
}

/// Searches the region between the first and last of a sequence of nested
/// 3-cuts. Outside components attach to all of the first cut or all of the
/// last one.
pub fn find_path_gadget(
    h: &Graph,
    cuts: &[Vec<Vertex>],
    region: &[Vertex],
    ctx: &GadgetContext,
) -> Result<GadgetFinding, GadgetError> {
    if cuts.len() < 2 || region.is_empty() {
        return Err(GadgetError::NoGadget("degenerate path region".into()));
    }
    let (first, last) = (&cuts[0], &cuts[cuts.len() - 1]);
    let mut cut: Vec<Vertex> = first.iter().chain(last).copied().collect();
    cut.sort_unstable();
    cut.dedup();
    search(h, &cut, region, &[first.clone(), last.clone()], ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, prism, wheel};

    const CTX: GadgetContext = GadgetContext { d: 1024, max_degree: 2054, protected: &[] };

    #[test]
    fn sweet_ends() {
        // In K4 every end is sweet.
        let k4 = complete(4);
        assert!(is_sweet_end(&k4, 0, 1));
        // Wheel hub: the rim minus one vertex is a path, not a clique.
        let w = wheel(5);
        let hub = (0..w.id_bound()).find(|&v| w.degree(v) == 5).unwrap();
        let rim = w.neighbors(hub)[0];
        assert!(!is_sweet_end(&w, hub, rim));
        // Rim vertex: neighbours other than the hub are two non-adjacent rim vertices.
        assert!(!is_sweet_end(&w, rim, hub));
    }

    #[test]
    fn p3_with_closed_midpoint_is_sweet() {
        // x=0 with neighbours y=1 and the path 2-3-4; 3 sees only 0, 2, 4.
        // Close it up with a vertex 5 joined to 1, 2 and 4.
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (3, 4), (5, 1), (5, 2), (5, 4), (1, 2)]);
        assert!(is_sweet_end(&g, 0, 1));
        let mut h = g.clone();
        h.add_edge(3, 5);
        assert!(!is_sweet_end(&h, 0, 1));
    }

    #[test]
    fn prism_triangles() {
        let g = prism();
        assert!(is_degree3_triangle(&g, [0, 1, 2]));
        let ctx = CTX;
        let found = find_leaf_gadget(&g, &[3, 4, 5], &[0, 1, 2], &ctx).unwrap();
        assert_eq!(found, GadgetFinding::Degree3Triangle { triangle: [0, 1, 2] });
    }

    #[test]
    fn single_vertex_side_with_low_degree_third_vertex() {
        // u = 0 of degree 3 sees x = 1, y = 2 (a matched edge) and z = 3.
        // Core: the cycle 1..=5 with hub 6.
        let mut g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        for r in 1..=5 {
            g.add_edge(6, r);
        }
        assert!(crate::connectivity::kconn::is_k_connected(&g, 3));
        assert!(is_sweet_end(&g, 0, 3));
        let found = find_leaf_gadget(&g, &[1, 2, 3], &[0], &CTX).unwrap();
        assert!(matches!(found, GadgetFinding::SweetEdge { sweet_end: 0, .. }));
        assert!(verify_gadget(&g, &found));
    }

    #[test]
    fn single_vertex_side_with_high_degree_third_vertex() {
        // Prism: u = 0 with x = 1, y = 2 of degree 3 and z = 3 above the bound.
        let g = prism();
        let ctx = GadgetContext { d: 2, ..CTX };
        let found = find_leaf_gadget(&g, &[1, 2, 3], &[0], &ctx).unwrap();
        assert_eq!(found, GadgetFinding::Degree3Triangle { triangle: [0, 1, 2] });
    }

    #[test]
    fn empty_region_is_no_gadget() {
        let g = prism();
        assert!(find_path_gadget(&g, &[vec![0, 1, 2], vec![3, 4, 5]], &[], &CTX).is_err());
        assert!(find_leaf_gadget(&g, &[0, 1], &[2], &CTX).is_err());
    }
}
