use serde::{Deserialize, Serialize};

use crate::connectivity::flow::SplitNetwork;
use crate::decomposition::triconnected::is_triconnected;
use crate::graph::{Graph, Vertex};

/// A piece of the host cut away from a reduction, with the three vertices
/// it attaches to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutOff {
    pub separator: [Vertex; 3],
    pub vertices: Vec<Vertex>,
}

/// A reduction of `host`: the subgraph induced on `kept`, with every
/// cut-off piece's separator completed to a triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub host: Graph,
    pub kept: Vec<Vertex>,
    pub graph: Graph,
    pub cut_offs: Vec<CutOff>,
}

impl Reduction {
    /// Builds the reduction keeping `kept`. Fails if some piece of the host
    /// outside `kept` does not attach at exactly three kept vertices.
    pub fn from_kept(host: &Graph, kept: &[Vertex]) -> Result<Self, String> {
        let nb = host.id_bound();
        let mut is_kept = vec![false; nb];
        for &v in kept {
            if !host.contains(v) {
                return Err(format!("vertex {v} is not in the host"));
            }
            is_kept[v] = true;
        }
        let mut kept: Vec<Vertex> = kept.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut graph = host.induced(&kept);
        let mut seen = is_kept.clone();
        let mut cut_offs = Vec::new();
        for s in host.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut attach = Vec::new();
            let mut i = 0;
            while i < comp.len() {
                for &w in host.neighbors(comp[i]) {
                    if is_kept[w] {
                        attach.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            attach.sort_unstable();
            attach.dedup();
            let Ok(separator) = <[Vertex; 3]>::try_from(attach.as_slice()) else {
                return Err(format!("piece containing {s} attaches at {attach:?}"));
            };
            let [a, b, c] = separator;
            graph.add_edge(a, b);
            graph.add_edge(a, c);
            graph.add_edge(b, c);
            comp.sort_unstable();
            cut_offs.push(CutOff { separator, vertices: comp });
        }
        cut_offs.sort_by(|x, y| (x.separator, &x.vertices).cmp(&(y.separator, &y.vertices)));
        Ok(Reduction { host: host.clone(), kept, graph, cut_offs })
    }

    /// Distinct separators, sorted.
    pub fn separators(&self) -> Vec<[Vertex; 3]> {
        let mut s: Vec<[Vertex; 3]> = self.cut_offs.iter().map(|c| c.separator).collect();
        s.dedup();
        s
    }

    pub fn cut_offs_at(&self, x: [Vertex; 3]) -> impl Iterator<Item = &CutOff> {
        self.cut_offs.iter().filter(move |c| c.separator == x)
    }

    /// Keeps the roots and is 3-connected (or is exactly the five roots
    /// with at most one missing edge, which can only be planar).
    pub fn check(&self, roots: &[Vertex]) -> Result<(), String> {
        if let Some(r) = roots.iter().find(|r| self.kept.binary_search(r).is_err()) {
            return Err(format!("root {r} was cut off"));
        }
        if !is_triconnected(&self.graph) {
            return Err("reduction is not 3-connected".into());
        }
        Ok(())
    }
}

/// Flow network asking whether a vertex can be cut from the roots by at
/// most three vertices.
struct RootSeparator {
    net: SplitNetwork,
    sink: usize,
}

impl RootSeparator {
    fn new(f: &Graph, roots: &[Vertex]) -> Self {
        let mut net = SplitNetwork::new(f);
        let sink = net.add_node();
        for &r in roots {
            net.add_infinite_arc(SplitNetwork::out(r), sink);
        }
        RootSeparator { net, sink }
    }

    /// The cut of size at most three nearest the roots, if any.
    fn cut_for(&mut self, v: Vertex) -> Option<Vec<Vertex>> {
        let flow = self.net.max_flow(SplitNetwork::out(v), self.sink, 4);
        let cut = if flow <= 3 {
            let far: Vec<bool> = self.net.sink_side(self.sink).into_iter().map(|s| !s).collect();
            Some(self.net.cut_vertices(&far))
        } else {
            None
        };
        self.net.reset();
        cut
    }
}

fn component_of(f: &Graph, v: Vertex, removed: &[Vertex]) -> Vec<Vertex> {
    let mut seen = vec![false; f.id_bound()];
    for &x in removed {
        seen[x] = true;
    }
    seen[v] = true;
    let mut comp = vec![v];
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
    comp.sort_unstable();
    comp
}

/// A 3-cut `X` of `f` and a component of `f - X` avoiding `roots`. For
/// every vertex the cut nearest the roots is found by flow; among those,
/// the lexicographically smallest cut wins, then the largest component.
pub fn find_reducible_3cut(f: &Graph, roots: &[Vertex]) -> Option<([Vertex; 3], Vec<Vertex>)> {
    let mut sep = RootSeparator::new(f, roots);
    let mut best: Option<([Vertex; 3], Vec<Vertex>)> = None;
    for v in f.vertices() {
        if roots.contains(&v) {
            continue;
        }
        let Some(cut) = sep.cut_for(v) else { continue };
        let Ok(x) = <[Vertex; 3]>::try_from(cut.as_slice()) else { continue };
        let u = component_of(f, v, &x);
        let better = match &best {
            None => true,
            Some((bx, bu)) => x < *bx || (x == *bx && u.len() > bu.len()),
        };
        if better {
            best = Some((x, u));
        }
    }
    best
}

/// Deletes `u` and completes `x` to a triangle.
pub fn reduce(f: &Graph, x: [Vertex; 3], u: &[Vertex]) -> Graph {
    let mut g = f.without_vertices(u);
    let [a, b, c] = x;
    g.add_edge(a, b);
    g.add_edge(a, c);
    g.add_edge(b, c);
    g
}

/// Cuts away everything that some 3-cut separates from the roots, taking
/// the largest piece each time. Each vertex is tested once: a reduction
/// never creates a new small cut.
pub fn irreducible_reduction(t: &Graph, roots: &[Vertex]) -> Reduction {
    let kept = irreducible_kept(t, roots);
    Reduction::from_kept(t, &kept).expect("reductions compose")
}

pub(crate) fn irreducible_kept(t: &Graph, roots: &[Vertex]) -> Vec<Vertex> {
    let mut f = t.clone();
    let mut sep = RootSeparator::new(&f, roots);
    for v in t.vertices() {
        if !f.contains(v) || roots.contains(&v) {
            continue;
        }
        if let Some(cut) = sep.cut_for(v) {
            let Ok(x) = <[Vertex; 3]>::try_from(cut.as_slice()) else { continue };
            let u = component_of(&f, v, &x);
            f = reduce(&f, x, &u);
            sep = RootSeparator::new(&f, roots);
        }
    }
    f.vertex_list()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, octahedron};
    use crate::oracles::bf_all_3cuts;

    #[test]
    fn k5_has_nothing_to_cut() {
        assert_eq!(find_reducible_3cut(&complete(5), &[0, 1, 2, 3, 4]), None);
        assert_eq!(find_reducible_3cut(&complete(5), &[]), None);
    }

    #[test]
    fn pyramid_over_a_face() {
        // Octahedron with a pyramid apex 6 over face 0,2,4 and a vertex 7
        // adjacent to the same face and the apex.
        let mut g = octahedron();
        let a = g.add_vertex();
        let b = g.add_vertex();
        for x in [0, 2, 4] {
            g.add_edge(a, x);
            g.add_edge(b, x);
        }
        g.add_edge(a, b);
        let roots = [1, 3, 5, 0, 2];
        let bf = bf_all_3cuts(&g, &roots).unwrap();
        assert!(bf.iter().any(|(x, u)| *x == [0, 2, 4] && u == &vec![6, 7]));
        let (x, u) = find_reducible_3cut(&g, &roots).unwrap();
        assert_eq!((x, u), ([0, 2, 4], vec![6, 7]));
        let h = reduce(&g, x, &vec![6, 7]);
        assert_eq!(h.edge_list(), octahedron().edge_list());
        let r = irreducible_reduction(&g, &roots);
        assert_eq!(r.kept, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(r.cut_offs, vec![CutOff { separator: [0, 2, 4], vertices: vec![6, 7] }]);
        r.check(&roots).unwrap();
    }

    #[test]
    fn octahedron_with_five_roots() {
        // The octahedron is 4-connected, and vertex 5 sees four roots.
        let g = octahedron();
        let roots = [0, 1, 2, 3, 4];
        let bf: Vec<_> = bf_all_3cuts(&g, &roots).unwrap();
        assert!(bf.is_empty());
        assert_eq!(find_reducible_3cut(&g, &roots), None);
    }

    #[test]
    fn from_kept_rejects_bad_pieces() {
        let g = octahedron();
        // Dropping a single vertex of degree 4 leaves a piece with 4 attachments.
        assert!(Reduction::from_kept(&g, &[0, 1, 2, 3, 4]).is_err());
        let r = Reduction::from_kept(&g, &g.vertex_list()).unwrap();
        assert!(r.cut_offs.is_empty());
        assert_eq!(r.graph, g);
    }
}
