use std::collections::BTreeMap;

use super::instance::AuxiliaryGraph;
use crate::decomposition::blocks::block_tree;
use crate::decomposition::triconnected::{triconnected_components, SplitKind};
use crate::graph::{Graph, Vertex};

/// The triconnected component holding the root vertices, with a real path
/// for every edge that stands in for a pruned piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootGraph {
    pub graph: Graph,
    /// For each stand-in edge `(x, y)` with `x < y`: a path from `x` to `y`
    /// in the auxiliary graph whose interior avoids the root graph.
    pub lifts: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
}

impl RootGraph {
    /// Expands a path of the root graph into the host it was cut from.
    pub fn lift_path(&self, path: &[Vertex]) -> Vec<Vertex> {
        let mut out = vec![path[0]];
        for w in path.windows(2) {
            let (a, b) = (w[0], w[1]);
            match self.lifts.get(&(a.min(b), a.max(b))) {
                Some(p) if p[0] == a => out.extend_from_slice(&p[1..]),
                Some(p) => out.extend(p.iter().rev().skip(1)),
                None => out.push(b),
            }
        }
        out
    }
}

pub fn root_graph(aux: &AuxiliaryGraph) -> RootGraph {
    root_component(&aux.graph, &aux.roots())
}

/// Root graph of any graph whose `roots` lie in a common 3-connected
/// subgraph: blocks away from the roots are dropped, then pieces hanging
/// off 2-cuts are replaced by an edge.
pub fn root_component(g: &Graph, roots: &[Vertex]) -> RootGraph {
    let bt = block_tree(g);
    let block = bt
        .blocks
        .iter()
        .find(|b| roots.iter().all(|r| b.binary_search(r).is_ok()))
        .expect("roots share a block");
    let b = g.induced(block);
    let tc = triconnected_components(&b).expect("blocks are biconnected");
    let (ci, vs) = (0..tc.components.len())
        .filter(|&c| tc.components[c].kind == SplitKind::Rigid)
        .map(|c| (c, tc.vertices_of(c)))
        .find(|(_, vs)| roots.iter().all(|r| vs.binary_search(r).is_ok()))
        .expect("roots share a rigid component");
    let mut t = b.induced(&vs);
    let mut inside = vec![false; g.id_bound()];
    for &v in &vs {
        inside[v] = true;
    }
    let mut lifts = BTreeMap::new();
    for &e in &tc.components[ci].edges {
        let (x, y) = tc.endpoints[e];
        if tc.is_virtual(e) && t.add_edge(x, y) {
            let p = route_outside(&b, x, y, &inside).expect("a pruned piece joins its 2-cut");
            lifts.insert((x.min(y), x.max(y)), if x < y { p } else { p.into_iter().rev().collect() });
        }
    }
    RootGraph { graph: t, lifts }
}

/// Shortest `x`–`y` path whose interior avoids `inside`.
pub(crate) fn route_outside(g: &Graph, x: Vertex, y: Vertex, inside: &[bool]) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; g.id_bound()];
    prev[x] = x;
    let mut queue = vec![x];
    let mut i = 0;
    while i < queue.len() {
        let v = queue[i];
        i += 1;
        for &w in g.neighbors(v) {
            if prev[w] != usize::MAX {
                continue;
            }
            if w == y && v != x {
                prev[w] = v;
                let mut p = vec![y];
                let mut z = y;
                while z != x {
                    z = prev[z];
                    p.push(z);
                }
                p.reverse();
                return Some(p);
            }
            if !inside[w] {
                prev[w] = v;
                queue.push(w);
            }
        }
    }
    None
}
