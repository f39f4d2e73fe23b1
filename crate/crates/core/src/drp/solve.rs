use super::certificate::{check_ferociously_strong, check_strong, DrpCertificate, FerociousError, Strength};
use super::instance::{build_auxiliary, AuxiliaryGraph, DrpError, DrpInstance};
use super::reduction::{irreducible_kept, reduce, Reduction};
use super::root::{root_component, route_outside, RootGraph};
use crate::connectivity::flow::SplitNetwork;
use crate::connectivity::planarity::{embed, is_planar, k33_subdivision};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    /// Largest cut-off piece searched exhaustively for a split.
    pub ferocious_cutoff: usize,
    /// Look for the reduction that cuts off as little as possible rather
    /// than returning the fully reduced graph.
    pub minimal_cut_offs: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { ferocious_cutoff: 20, minimal_cut_offs: true }
    }
}

/// Whether the two paths exist.
pub fn decide(inst: &DrpInstance) -> bool {
    let aux = build_auxiliary(inst);
    framed_feasible(&aux.graph, &aux.roots())
}

/// Decision on a graph that already carries the hub and terminal cycle.
fn framed_feasible(g: &Graph, roots: &[Vertex]) -> bool {
    let t = root_component(g, roots).graph;
    let kept = irreducible_kept(&t, roots);
    let f = Reduction::from_kept(&t, &kept).expect("reductions compose").graph;
    !is_planar(&f)
}

pub fn solve(inst: &DrpInstance, config: &SolveConfig) -> Result<DrpCertificate, DrpError> {
    let aux = build_auxiliary(inst);
    let roots = aux.roots();
    let root = root_component(&aux.graph, &roots);
    let kept = irreducible_kept(&root.graph, &roots);
    let full = Reduction::from_kept(&root.graph, &kept).map_err(DrpError::Internal)?;
    if is_planar(&full.graph) {
        planar_certificate(&aux, &root, full, config)
    } else {
        two_paths(inst, &aux, &root, &full)
    }
}

fn planar_certificate(
    aux: &AuxiliaryGraph,
    root: &RootGraph,
    full: Reduction,
    config: &SolveConfig,
) -> Result<DrpCertificate, DrpError> {
    let roots = aux.roots();
    let minimal = if config.minimal_cut_offs { minimal_cut_off_kept(&root.graph, &roots) } else { None };
    let r = match minimal.map(|k| Reduction::from_kept(&root.graph, &k)) {
        Some(Ok(r)) if embed(&r.graph).is_some() => r,
        _ => full,
    };
    r.check(&roots).map_err(DrpError::Internal)?;
    let emb = embed(&r.graph).ok_or_else(|| DrpError::Internal("reduction is not planar".into()))?;
    let (strength, witnesses) = if !check_strong(&r, &emb) {
        (Strength::None, Vec::new())
    } else {
        match check_ferociously_strong(&r, &emb, config.ferocious_cutoff) {
            Ok(v) if v.holds => (Strength::FerociouslyStrong, v.witnesses),
            Ok(_) => (Strength::Strong, Vec::new()),
            Err(FerociousError::ComponentTooLarge { .. }) => (Strength::Undecided, Vec::new()),
        }
    };
    Ok(DrpCertificate::PlanarReduction {
        separators: r.separators(),
        vertices: r.kept,
        rotation: emb.rotation,
        strength,
        witnesses,
    })
}

/// While the graph is non-planar, take a K3,3 subdivision and cut at the
/// 3-cut that separates five of its branch vertices from the roots while
/// leaving the root side as large as possible. What remains is the planar
/// reduction that keeps the most vertices.
fn minimal_cut_off_kept(t: &Graph, roots: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut f = t.clone();
    while !is_planar(&f) {
        let k = k33_subdivision(&f)?;
        let x = k33_cut(&f, &k.branch, roots)?;
        let mut removed = vec![false; f.id_bound()];
        for &v in &x {
            removed[v] = true;
        }
        let pieces: Vec<Vec<Vertex>> = components_avoiding(&f, &removed)
            .into_iter()
            .filter(|c| !c.iter().any(|v| roots.contains(v)))
            .collect();
        if pieces.is_empty() {
            return None;
        }
        let gone: Vec<Vertex> = pieces.concat();
        f = reduce(&f, x, &gone);
    }
    Some(f.vertex_list())
}

fn components_avoiding(f: &Graph, removed: &[bool]) -> Vec<Vec<Vertex>> {
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    for s in f.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in f.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

/// Over the six ways of dropping one branch vertex, the 3-cut between the
/// other five and the roots that is nearest the branch vertices; the one
/// leaving the most vertices with the roots wins.
fn k33_cut(f: &Graph, branch: &[Vertex], roots: &[Vertex]) -> Option<[Vertex; 3]> {
    let mut best: Option<(usize, [Vertex; 3])> = None;
    for skip in 0..branch.len() {
        let mut net = SplitNetwork::new(f);
        let src = net.add_node();
        let sink = net.add_node();
        for (i, &z) in branch.iter().enumerate() {
            if i != skip {
                net.add_infinite_arc(src, SplitNetwork::inn(z));
            }
        }
        for &r in roots {
            net.add_infinite_arc(SplitNetwork::out(r), sink);
        }
        if net.max_flow(src, sink, 4) != 3 {
            continue;
        }
        let side = net.source_side(src);
        let Ok(x) = <[Vertex; 3]>::try_from(net.cut_vertices(&side).as_slice()) else { continue };
        let mut removed = vec![false; f.id_bound()];
        for &v in &x {
            removed[v] = true;
        }
        let root_side: usize = components_avoiding(f, &removed)
            .iter()
            .filter(|c| c.iter().any(|v| roots.contains(v)))
            .map(Vec::len)
            .sum();
        if root_side + 3 == f.n() {
            continue;
        }
        if best.is_none_or(|(b, bx)| root_side > b || (root_side == b && x < bx)) {
            best = Some((root_side, x));
        }
    }
    best.map(|(_, x)| x)
}

/// Finds the paths in the fully reduced graph, then expands them through
/// the cut-off pieces and the pruned 2-cut pieces.
fn two_paths(
    inst: &DrpInstance,
    aux: &AuxiliaryGraph,
    root: &RootGraph,
    full: &Reduction,
) -> Result<DrpCertificate, DrpError> {
    let roots = aux.roots();
    let f = &full.graph;
    let mut usable = f.clone();
    usable.remove_vertex(aux.hub);
    for (a, b) in aux.cycle_edges() {
        usable.remove_edge(a, b);
    }
    let [s1, t1, s2, t2] = aux.terminals;
    let (q1, q2) = match greedy_pair(&usable, [s1, t1, s2, t2]) {
        Some(p) => p,
        None => {
            // Delete every edge the paths can do without; what is left is
            // exactly the two paths.
            let mut cur = f.clone();
            for (a, b) in f.edge_list() {
                if aux.is_frame_edge(a, b) {
                    continue;
                }
                cur.remove_edge(a, b);
                if !framed_feasible(&cur, &roots) {
                    cur.add_edge(a, b);
                }
            }
            let mut bare = cur;
            bare.remove_vertex(aux.hub);
            for (a, b) in aux.cycle_edges() {
                bare.remove_edge(a, b);
            }
            greedy_pair(&bare, [s1, t1, s2, t2])
                .ok_or_else(|| DrpError::Internal("probing left no pair of paths".into()))?
        }
    };
    let q1 = shortcut(f, &q1);
    let q2 = shortcut(f, &q2);
    let p1 = root.lift_path(&lift_cut_offs(full, &q1)?);
    let p2 = root.lift_path(&lift_cut_offs(full, &q2)?);
    let cert = DrpCertificate::TwoPaths { p1, p2 };
    if !super::certificate::verify_certificate(inst, &cert) {
        return Err(DrpError::Internal("lifted paths do not check out".into()));
    }
    Ok(cert)
}

/// Shortest s1–t1 path avoiding s2 and t2, then any s2–t2 path avoiding
/// it; and the same with the pairs swapped.
fn greedy_pair(g: &Graph, [s1, t1, s2, t2]: [Vertex; 4]) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let mut blocked = vec![false; g.id_bound()];
    for (a, b, c, d, swap) in [(s1, t1, s2, t2, false), (s2, t2, s1, t1, true)] {
        blocked.iter_mut().for_each(|x| *x = false);
        blocked[c] = true;
        blocked[d] = true;
        let Some(first) = bfs_path(g, a, b, &blocked) else { continue };
        blocked.iter_mut().for_each(|x| *x = false);
        for &v in &first {
            blocked[v] = true;
        }
        if let Some(second) = bfs_path(g, c, d, &blocked) {
            return Some(if swap { (second, first) } else { (first, second) });
        }
    }
    None
}

fn bfs_path(g: &Graph, s: Vertex, t: Vertex, blocked: &[bool]) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; g.id_bound()];
    prev[s] = s;
    let mut queue = vec![s];
    let mut i = 0;
    while i < queue.len() {
        let v = queue[i];
        i += 1;
        if v == t {
            let mut p = vec![t];
            let mut z = t;
            while z != s {
                z = prev[z];
                p.push(z);
            }
            p.reverse();
            return Some(p);
        }
        for &w in g.neighbors(v) {
            if prev[w] == usize::MAX && !blocked[w] {
                prev[w] = v;
                queue.push(w);
            }
        }
    }
    None
}

/// Makes a path induced in `g` by jumping to the furthest later neighbour.
fn shortcut(g: &Graph, p: &[Vertex]) -> Vec<Vertex> {
    let mut out = vec![p[0]];
    let mut i = 0;
    while i + 1 < p.len() {
        let j = (i + 1..p.len()).rev().find(|&j| g.has_edge(p[i], p[j])).unwrap_or(i + 1);
        out.push(p[j]);
        i = j;
    }
    out
}

/// Replaces each completed separator edge by a path through a piece that
/// attaches at both of its ends.
fn lift_cut_offs(r: &Reduction, q: &[Vertex]) -> Result<Vec<Vertex>, DrpError> {
    let mut out = vec![q[0]];
    for w in q.windows(2) {
        let (a, b) = (w[0], w[1]);
        if r.host.has_edge(a, b) {
            out.push(b);
            continue;
        }
        let piece = r
            .cut_offs
            .iter()
            .find(|c| c.separator.contains(&a) && c.separator.contains(&b))
            .ok_or_else(|| DrpError::Internal(format!("edge {a}-{b} has no source")))?;
        let mut outside = vec![true; r.host.id_bound()];
        for &v in &piece.vertices {
            outside[v] = false;
        }
        let p = route_outside(&r.host, a, b, &outside)
            .ok_or_else(|| DrpError::Internal(format!("piece at {:?} does not join {a} and {b}", piece.separator)))?;
        out.extend_from_slice(&p[1..]);
    }
    Ok(out)
}
