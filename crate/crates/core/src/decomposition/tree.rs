//! Strong and special 2-cut trees.
//!
//! The strong tree is read off the triconnected components: bonds and
//! virtual edges between two non-bond pieces become cut nodes, polygons and
//! rigid pieces become graph nodes. The special tree triangulates every
//! cycle node, using alternating chords on long cycles and fans elsewhere.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::triconnected::{triconnected_components, SplitKind, TriconnectedError};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartKind {
    ThreeConnected,
    Cycle,
}

/// A graph node. `edges` includes the virtual edges, which are also listed
/// in `virtual_edges`; cycles carry their cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    pub kind: PartKind,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub virtual_edges: Vec<(Vertex, Vertex)>,
    pub cycle: Option<Vec<Vertex>>,
}

impl Part {
    pub fn graph(&self) -> Graph {
        let bound = self.vertices.iter().max().map_or(0, |&v| v + 1);
        let mut g = Graph::new(bound);
        let keep: Vec<Vertex> = self.vertices.clone();
        g = g.induced(&keep);
        for &(a, b) in &self.edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn is_triangle(&self) -> bool {
        self.kind == PartKind::Cycle && self.vertices.len() == 3
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    pub pair: (Vertex, Vertex),
    /// The pair is an edge of the host graph.
    pub real_edge: bool,
}

/// Bipartite tree between cut nodes and graph nodes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutTree {
    pub cuts: Vec<Cut>,
    pub parts: Vec<Part>,
    /// (cut index, part index)
    pub links: Vec<(usize, usize)>,
}

/// Node handle in a `CutTree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Node {
    Cut(usize),
    Part(usize),
}

impl CutTree {
    pub fn node_count(&self) -> usize {
        self.cuts.len() + self.parts.len()
    }

    pub fn cut_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cuts.len()];
        for &(c, p) in &self.links {
            out[c].push(p);
        }
        out
    }

    pub fn part_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.parts.len()];
        for &(c, p) in &self.links {
            out[p].push(c);
        }
        out
    }

    pub fn degree(&self, n: Node) -> usize {
        self.links
            .iter()
            .filter(|&&(c, p)| n == Node::Cut(c) || n == Node::Part(p))
            .count()
    }

    /// Connected and acyclic, every link joins a cut to a part containing
    /// its pair, every cut has degree at least two.
    pub fn check_shape(&self) -> Result<(), String> {
        let total = self.node_count();
        if total == 0 {
            return Err("empty tree".into());
        }
        if self.links.len() + 1 != total {
            return Err(format!("{} links for {} nodes", self.links.len(), total));
        }
        let mut dsu: Vec<usize> = (0..total).collect();
        fn find(d: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while d[r] != r {
                r = d[r];
            }
            let mut y = x;
            while d[y] != r {
                let nx = d[y];
                d[y] = r;
                y = nx;
            }
            r
        }
        let base = self.cuts.len();
        for &(c, p) in &self.links {
            let (a, b) = (find(&mut dsu, c), find(&mut dsu, base + p));
            if a == b {
                return Err("cycle in tree".into());
            }
            dsu[a] = b;
            let (x, y) = self.cuts[c].pair;
            let part = &self.parts[p];
            if !part.vertices.contains(&x) || !part.vertices.contains(&y) {
                return Err(format!("part {p} misses cut pair {:?}", (x, y)));
            }
        }
        for (c, nb) in self.cut_neighbors().iter().enumerate() {
            if nb.len() < 2 {
                return Err(format!("cut {c} has degree {}", nb.len()));
            }
        }
        Ok(())
    }

    /// Graph nodes with exactly one neighbour, with their cut pair and
    /// interior (the node's vertices outside the pair).
    pub fn leaves(&self) -> Vec<Leaf> {
        let nb = self.part_neighbors();
        let mut out = Vec::new();
        for (p, cs) in nb.iter().enumerate() {
            if cs.len() == 1 {
                let (x, y) = self.cuts[cs[0]].pair;
                let interior: Vec<Vertex> =
                    self.parts[p].vertices.iter().copied().filter(|&v| v != x && v != y).collect();
                out.push(Leaf { part: p, cut: (x, y), interior });
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leaf {
    pub part: usize,
    pub cut: (Vertex, Vertex),
    pub interior: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strong2CutTree {
    pub tree: CutTree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Special2CutTree {
    pub tree: CutTree,
    /// Chords added by the triangulation.
    pub chords: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("graph is not 2-connected")]
    Not2Connected,
}

fn ordered(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    (a.min(b), a.max(b))
}

/// Cyclic order of a 2-regular edge set, starting at the smallest vertex
/// and heading to its smaller neighbour.
fn cycle_order(edges: &[(Vertex, Vertex)]) -> Vec<Vertex> {
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let start = *adj.keys().min().unwrap();
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().min().unwrap();
    while cur != start {
        order.push(cur);
        let nx = adj[&cur].iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = nx;
    }
    order
}

pub fn strong_2cut_tree(g: &Graph) -> Result<Strong2CutTree, TreeError> {
    let tc = triconnected_components(g).map_err(|e| match e {
        TriconnectedError::NotBiconnected | TriconnectedError::TooSmall => TreeError::Not2Connected,
    })?;
    let mut tree = CutTree::default();
    // component index -> node
    let mut node_of: Vec<Node> = Vec::with_capacity(tc.components.len());
    for (ci, comp) in tc.components.iter().enumerate() {
        match comp.kind {
            SplitKind::Bond => {
                let (a, b) = tc.endpoints[comp.edges[0]];
                let real_edge = comp.edges.iter().any(|&e| !tc.is_virtual(e));
                node_of.push(Node::Cut(tree.cuts.len()));
                tree.cuts.push(Cut { pair: ordered(a, b), real_edge });
            }
            kind => {
                let mut edges: Vec<(Vertex, Vertex)> =
                    comp.edges.iter().map(|&e| ordered(tc.endpoints[e].0, tc.endpoints[e].1)).collect();
                edges.sort_unstable();
                let mut virtual_edges: Vec<(Vertex, Vertex)> = comp
                    .edges
                    .iter()
                    .filter(|&&e| tc.is_virtual(e))
                    .map(|&e| ordered(tc.endpoints[e].0, tc.endpoints[e].1))
                    .collect();
                virtual_edges.sort_unstable();
                let (pk, cycle) = if kind == SplitKind::Polygon {
                    (PartKind::Cycle, Some(cycle_order(&edges)))
                } else {
                    (PartKind::ThreeConnected, None)
                };
                node_of.push(Node::Part(tree.parts.len()));
                tree.parts.push(Part { kind: pk, vertices: tc.vertices_of(ci), edges, virtual_edges, cycle });
            }
        }
    }
    for (e, c1, c2) in tc.virtual_links() {
        match (node_of[c1], node_of[c2]) {
            (Node::Cut(c), Node::Part(p)) | (Node::Part(p), Node::Cut(c)) => tree.links.push((c, p)),
            (Node::Part(p), Node::Part(q)) => {
                let (a, b) = tc.endpoints[e];
                let c = tree.cuts.len();
                tree.cuts.push(Cut { pair: ordered(a, b), real_edge: false });
                tree.links.push((c, p));
                tree.links.push((c, q));
            }
            (Node::Cut(_), Node::Cut(_)) => unreachable!("bonds are merged"),
        }
    }
    canonicalize(&mut tree);
    Ok(Strong2CutTree { tree })
}

/// Sorts cuts by pair and parts by vertex list so equal trees compare equal.
fn canonicalize(tree: &mut CutTree) {
    let mut cut_idx: Vec<usize> = (0..tree.cuts.len()).collect();
    cut_idx.sort_by_key(|&i| tree.cuts[i].pair);
    let mut part_idx: Vec<usize> = (0..tree.parts.len()).collect();
    part_idx.sort_by(|&i, &j| tree.parts[i].vertices.cmp(&tree.parts[j].vertices).then(tree.parts[i].edges.cmp(&tree.parts[j].edges)));
    let mut new_cut = vec![0; cut_idx.len()];
    for (k, &i) in cut_idx.iter().enumerate() {
        new_cut[i] = k;
    }
    let mut new_part = vec![0; part_idx.len()];
    for (k, &i) in part_idx.iter().enumerate() {
        new_part[i] = k;
    }
    tree.cuts = cut_idx.iter().map(|&i| tree.cuts[i].clone()).collect();
    tree.parts = part_idx.iter().map(|&i| tree.parts[i].clone()).collect();
    for l in &mut tree.links {
        *l = (new_cut[l.0], new_part[l.1]);
    }
    tree.links.sort_unstable();
}

/// Triangles and chords of the prescribed triangulation of a cycle given in
/// cyclic order starting at its smallest vertex.
pub fn triangulate_cycle(cycle: &[Vertex]) -> (Vec<[Vertex; 3]>, Vec<(Vertex, Vertex)>) {
    let k = cycle.len();
    let mut tris = Vec::new();
    let mut chords = Vec::new();
    if k < 3 {
        return (tris, chords);
    }
    if k < 6 {
        fan(cycle, &mut tris, &mut chords);
        return (tris, chords);
    }
    // Alternating chords c1c3, c3c5, ... cut off ears; the odd-indexed
    // vertices (1-based) form the interior cycle.
    let mut interior = Vec::new();
    let mut i = 0;
    while i + 2 < k || (k % 2 == 0 && i + 2 == k) {
        let a = cycle[i];
        let b = cycle[i + 1];
        let c = cycle[(i + 2) % k];
        tris.push([a, b, c]);
        chords.push(ordered(a, c));
        interior.push(a);
        i += 2;
    }
    if k % 2 == 1 {
        interior.push(cycle[k - 1]);
    }
    fan(&interior, &mut tris, &mut chords);
    (tris, chords)
}

/// Fan from the smallest vertex of the cycle.
fn fan(cycle: &[Vertex], tris: &mut Vec<[Vertex; 3]>, chords: &mut Vec<(Vertex, Vertex)>) {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let rot: Vec<Vertex> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    for i in 1..k - 1 {
        tris.push([rot[0], rot[i], rot[i + 1]]);
        if i + 1 < k - 1 {
            chords.push(ordered(rot[0], rot[i + 1]));
        }
    }
}

pub fn special_2cut_tree(strong: &Strong2CutTree) -> Special2CutTree {
    let src = &strong.tree;
    let mut tree = CutTree { cuts: src.cuts.clone(), parts: Vec::new(), links: Vec::new() };
    let mut all_chords = Vec::new();
    let part_nb = src.part_neighbors();
    for (p, part) in src.parts.iter().enumerate() {
        let cycle = match &part.cycle {
            Some(c) if c.len() >= 4 => c.clone(),
            _ => {
                let np = tree.parts.len();
                tree.parts.push(part.clone());
                for &c in &part_nb[p] {
                    tree.links.push((c, np));
                }
                continue;
            }
        };
        let (tris, chords) = triangulate_cycle(&cycle);
        let base = tree.parts.len();
        let mut owner: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
        for (i, t) in tris.iter().enumerate() {
            let mut vs = t.to_vec();
            vs.sort_unstable();
            let mut edges = vec![ordered(t[0], t[1]), ordered(t[1], t[2]), ordered(t[0], t[2])];
            edges.sort_unstable();
            for &e in &edges {
                owner.entry(e).or_default().push(base + i);
            }
            let virtual_edges: Vec<(Vertex, Vertex)> = edges
                .iter()
                .copied()
                .filter(|e| chords.contains(e) || part.virtual_edges.contains(e))
                .collect();
            tree.parts.push(Part {
                kind: PartKind::Cycle,
                vertices: vs,
                edges,
                virtual_edges,
                cycle: Some(t.to_vec()),
            });
        }
        for &ch in &chords {
            let c = tree.cuts.len();
            tree.cuts.push(Cut { pair: ch, real_edge: false });
            for &q in &owner[&ch] {
                tree.links.push((c, q));
            }
        }
        for &c in &part_nb[p] {
            let q = owner[&tree.cuts[c].pair][0];
            tree.links.push((c, q));
        }
        all_chords.extend(chords);
    }
    canonicalize(&mut tree);
    all_chords.sort_unstable();
    Special2CutTree { tree, chords: all_chords }
}
