//! Triconnected components of a biconnected simple graph.
//!
//! Path-based splitting in the style of Hopcroft and Tarjan, including the
//! corrections of Gutwenger and Mutzel. Everything is iterative so deep
//! palm trees do not exhaust the call stack.

use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitKind {
    Bond,
    Polygon,
    Rigid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitComponent {
    pub kind: SplitKind,
    /// Indices into `TriconnectedComponents::endpoints`.
    pub edges: Vec<usize>,
}

/// Result of the decomposition. Edges `0..n_real` are the host edges, the
/// rest are virtual; every virtual edge lies in exactly two components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriconnectedComponents {
    pub endpoints: Vec<(Vertex, Vertex)>,
    pub n_real: usize,
    pub components: Vec<SplitComponent>,
}

impl TriconnectedComponents {
    pub fn is_virtual(&self, e: usize) -> bool {
        e >= self.n_real
    }

    pub fn vertices_of(&self, c: usize) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.components[c]
            .edges
            .iter()
            .flat_map(|&e| {
                let (a, b) = self.endpoints[e];
                [a, b]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// For each virtual edge, the two components containing it.
    pub fn virtual_links(&self) -> Vec<(usize, usize, usize)> {
        let mut owner = vec![usize::MAX; self.endpoints.len()];
        let mut links = Vec::new();
        for (ci, c) in self.components.iter().enumerate() {
            for &e in &c.edges {
                if e >= self.n_real {
                    if owner[e] == usize::MAX {
                        owner[e] = ci;
                    } else {
                        links.push((e, owner[e], ci));
                    }
                }
            }
        }
        links.sort_unstable();
        links
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TriconnectedError {
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph needs at least three vertices")]
    TooSmall,
}

const NONE: usize = usize::MAX;

#[derive(Clone, Copy)]
struct Edge {
    src: usize,
    dst: usize,
    tree: bool,
    removed: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TEntry {
    Eos,
    Triple(usize, usize, usize),
}

struct Splitter {
    edges: Vec<Edge>,
    // Indexed by DFS number (1-based) after renumbering.
    adj: Vec<Vec<usize>>,
    outs: Vec<Vec<usize>>,
    parent: Vec<usize>,
    tree_arc_in: Vec<usize>,
    low1: Vec<usize>,
    low2: Vec<usize>,
    nd: Vec<usize>,
    deg: Vec<usize>,
    unvisited_tree: Vec<usize>,
    high: Vec<BinaryHeap<(usize, usize)>>,
    starts_path: Vec<bool>,
    estack: Vec<usize>,
    tstack: Vec<TEntry>,
    comps: Vec<(Option<SplitKind>, Vec<usize>)>,
}

impl Splitter {
    fn new_component(&mut self, kind: Option<SplitKind>) -> usize {
        self.comps.push((kind, Vec::new()));
        self.comps.len() - 1
    }

    /// Moves a graph edge into component `c`.
    fn take(&mut self, c: usize, e: usize) {
        let ed = &mut self.edges[e];
        debug_assert!(!ed.removed);
        ed.removed = true;
        self.deg[ed.src] -= 1;
        self.deg[ed.dst] -= 1;
        self.comps[c].1.push(e);
    }

    /// Creates a virtual edge that is both in component `c` and still in the graph.
    fn new_virtual(&mut self, c: usize, src: usize, dst: usize) -> usize {
        self.edges.push(Edge { src, dst, tree: false, removed: false });
        self.deg[src] += 1;
        self.deg[dst] += 1;
        let e = self.edges.len() - 1;
        self.comps[c].1.push(e);
        e
    }

    fn make_tree_arc(&mut self, e: usize) {
        let Edge { src, dst, .. } = self.edges[e];
        self.edges[e].tree = true;
        self.parent[dst] = src;
        self.tree_arc_in[dst] = e;
        self.outs[src].push(e);
    }

    fn make_frond(&mut self, e: usize) {
        let Edge { src, dst, .. } = self.edges[e];
        self.edges[e].tree = false;
        self.high[dst].push((src, e));
        self.outs[src].push(e);
    }

    fn high_of(&mut self, v: usize) -> usize {
        while let Some(&(h, e)) = self.high[v].peek() {
            if self.edges[e].removed {
                self.high[v].pop();
            } else {
                return h;
            }
        }
        0
    }

    /// The single remaining outgoing edge target of a degree-2 vertex.
    fn first_child(&mut self, w: usize) -> usize {
        let edges = &self.edges;
        self.outs[w].retain(|&e| !edges[e].removed);
        match self.outs[w].first() {
            Some(&e) => self.edges[e].dst,
            None => 0,
        }
    }

    fn ends(&self, e: usize) -> (usize, usize) {
        (self.edges[e].src, self.edges[e].dst)
    }

    fn before_tree_arc(&mut self, v: usize, e: usize) {
        let w = self.edges[e].dst;
        self.unvisited_tree[v] -= 1;
        if self.starts_path[e] {
            let mut y = 0;
            let mut last_b = NONE;
            while let Some(&TEntry::Triple(h, a, b)) = self.tstack.last() {
                if a <= self.low1[w] {
                    break;
                }
                y = y.max(h);
                last_b = b;
                self.tstack.pop();
            }
            if last_b == NONE {
                self.tstack.push(TEntry::Triple(w + self.nd[w] - 1, self.low1[w], v));
            } else {
                self.tstack.push(TEntry::Triple(y, self.low1[w], last_b));
            }
            self.tstack.push(TEntry::Eos);
        }
    }

    fn after_tree_arc(&mut self, v: usize, e: usize) {
        let w0 = self.edges[e].dst;
        self.estack.push(self.tree_arc_in[w0]);
        let mut w = w0;

        // Type-2 pairs.
        while v != 1 {
            let top = self.tstack.last().copied();
            let case1 = matches!(top, Some(TEntry::Triple(_, a, _)) if a == v);
            let case2 = self.deg[w] == 2 && self.first_child(w) > w;
            if !case1 && !case2 {
                break;
            }
            if let (true, Some(TEntry::Triple(_, _, b))) = (case1, top) {
                if self.parent[b] == v {
                    self.tstack.pop();
                    continue;
                }
            }
            let mut e_ab = NONE;
            let mut e_virt;
            let x;
            if case2 {
                let e1 = self.estack.pop().unwrap();
                let e2 = self.estack.pop().unwrap();
                x = self.edges[e2].dst;
                let c = self.new_component(Some(SplitKind::Polygon));
                self.take(c, e1);
                self.take(c, e2);
                e_virt = self.new_virtual(c, v, x);
                if let Some(&t) = self.estack.last() {
                    if self.ends(t) == (x, v) {
                        e_ab = self.estack.pop().unwrap();
                    }
                }
            } else {
                let Some(TEntry::Triple(h, a, b)) = self.tstack.pop() else { unreachable!() };
                let c = self.new_component(None);
                while let Some(&t) = self.estack.last() {
                    let (p, q) = self.ends(t);
                    if !(a <= p && p <= h && a <= q && q <= h) {
                        break;
                    }
                    self.estack.pop();
                    if (p, q) == (a, b) || (p, q) == (b, a) {
                        e_ab = t;
                    } else {
                        self.take(c, t);
                    }
                }
                e_virt = self.new_virtual(c, v, b);
                x = b;
            }
            if e_ab != NONE {
                let c = self.new_component(Some(SplitKind::Bond));
                self.take(c, e_ab);
                self.take(c, e_virt);
                e_virt = self.new_virtual(c, v, x);
            }
            self.estack.push(e_virt);
            self.make_tree_arc(e_virt);
            w = x;
        }

        // Type-1 pair.
        if self.low2[w0] >= v && self.low1[w0] < v && (self.parent[v] != 1 || self.unvisited_tree[v] >= 1) {
            let c = self.new_component(None);
            let lo = w0;
            let hi = w0 + self.nd[w0];
            while let Some(&t) = self.estack.last() {
                let (p, q) = self.ends(t);
                if !((lo..hi).contains(&p) || (lo..hi).contains(&q)) {
                    break;
                }
                self.estack.pop();
                self.take(c, t);
            }
            let lp = self.low1[w0];
            let mut e_virt = self.new_virtual(c, v, lp);
            if let Some(&t) = self.estack.last() {
                if self.ends(t) == (v, lp) {
                    self.estack.pop();
                    let b = self.new_component(Some(SplitKind::Bond));
                    self.take(b, t);
                    self.take(b, e_virt);
                    e_virt = self.new_virtual(b, v, lp);
                }
            }
            if lp != self.parent[v] {
                self.estack.push(e_virt);
                self.make_frond(e_virt);
            } else {
                let b = self.new_component(Some(SplitKind::Bond));
                let arc = self.tree_arc_in[v];
                self.take(b, e_virt);
                self.take(b, arc);
                let e2 = self.new_virtual(b, lp, v);
                self.make_tree_arc(e2);
            }
        }

        if self.starts_path[e] {
            while let Some(t) = self.tstack.pop() {
                if t == TEntry::Eos {
                    break;
                }
            }
        }

        loop {
            let Some(&TEntry::Triple(h, a, b)) = self.tstack.last() else { break };
            if a != v && b != v && self.high_of(v) > h {
                self.tstack.pop();
            } else {
                break;
            }
        }
    }

    fn frond(&mut self, v: usize, e: usize) {
        let w = self.edges[e].dst;
        if self.starts_path[e] {
            let mut y = 0;
            let mut last_b = NONE;
            while let Some(&TEntry::Triple(h, a, b)) = self.tstack.last() {
                if a <= w {
                    break;
                }
                y = y.max(h);
                last_b = b;
                self.tstack.pop();
            }
            if last_b == NONE {
                self.tstack.push(TEntry::Triple(v, w, v));
            } else {
                self.tstack.push(TEntry::Triple(y, w, last_b));
            }
        }
        if w == self.parent[v] {
            let c = self.new_component(Some(SplitKind::Bond));
            let arc = self.tree_arc_in[v];
            self.take(c, e);
            self.take(c, arc);
            let e2 = self.new_virtual(c, w, v);
            self.make_tree_arc(e2);
        } else {
            self.estack.push(e);
        }
    }

    fn path_search(&mut self) {
        let mut stack: Vec<(usize, usize)> = vec![(1, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, i) = *top;
            if i == self.adj[v].len() {
                stack.pop();
                if let Some(&(p, pi)) = stack.last() {
                    let e = self.adj[p][pi - 1];
                    self.after_tree_arc(p, e);
                }
                continue;
            }
            top.1 += 1;
            let e = self.adj[v][i];
            if self.edges[e].tree {
                self.before_tree_arc(v, e);
                stack.push((self.edges[e].dst, 0));
            } else {
                self.frond(v, e);
            }
        }
        if !self.estack.is_empty() {
            let c = self.new_component(None);
            while let Some(e) = self.estack.pop() {
                self.take(c, e);
            }
        }
    }
}

/// Decomposes a biconnected simple graph on vertices `0..n`.
pub fn split_components(n: usize, edge_list: &[(usize, usize)]) -> Result<TriconnectedComponents, TriconnectedError> {
    if n < 3 {
        return Err(TriconnectedError::TooSmall);
    }
    let m = edge_list.len();
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(a, b)) in edge_list.iter().enumerate() {
        inc[a].push((b, i));
        inc[b].push((a, i));
    }

    // First DFS: numbering, low points, orientation.
    let mut num = vec![0usize; n];
    let mut vert_of_num = vec![0usize; n + 1];
    let mut par = vec![NONE; n];
    let mut low1 = vec![0usize; n];
    let mut low2 = vec![0usize; n];
    let mut nd = vec![1usize; n];
    let mut used = vec![false; m];
    let mut src = vec![0usize; m];
    let mut dst = vec![0usize; m];
    let mut is_tree = vec![false; m];
    let mut counter = 1;
    num[0] = 1;
    vert_of_num[1] = 0;
    low1[0] = 1;
    low2[0] = 1;
    counter += 1;
    let mut root_children = 0;
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some(top) = stack.last_mut() {
        let (v, i) = *top;
        if i < inc[v].len() {
            top.1 += 1;
            let (w, e) = inc[v][i];
            if used[e] {
                continue;
            }
            used[e] = true;
            src[e] = v;
            dst[e] = w;
            if num[w] == 0 {
                is_tree[e] = true;
                par[w] = v;
                num[w] = counter;
                vert_of_num[counter] = w;
                counter += 1;
                low1[w] = num[w];
                low2[w] = num[w];
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, 0));
            } else {
                let nw = num[w];
                if nw < low1[v] {
                    low2[v] = low1[v];
                    low1[v] = nw;
                } else if nw > low1[v] {
                    low2[v] = low2[v].min(nw);
                }
            }
        } else {
            stack.pop();
            let p = par[v];
            if p == NONE {
                continue;
            }
            if p != 0 && low1[v] >= num[p] {
                return Err(TriconnectedError::NotBiconnected);
            }
            if low1[v] < low1[p] {
                low2[p] = low1[p].min(low2[v]);
                low1[p] = low1[v];
            } else if low1[v] == low1[p] {
                low2[p] = low2[p].min(low2[v]);
            } else {
                low2[p] = low2[p].min(low1[v]);
            }
            nd[p] += nd[v];
        }
    }
    if counter != n + 1 || root_children > 1 {
        return Err(TriconnectedError::NotBiconnected);
    }

    // Order outgoing edges by the path-search key.
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); 3 * n + 3];
    for e in 0..m {
        let phi = if is_tree[e] {
            let w = dst[e];
            if low2[w] < num[src[e]] {
                3 * low1[w]
            } else {
                3 * low1[w] + 2
            }
        } else {
            3 * num[dst[e]] + 1
        };
        buckets[phi].push(e);
    }
    let mut out_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for b in &buckets {
        for &e in b {
            out_adj[src[e]].push(e);
        }
    }

    // Second DFS: renumber so that first children get the highest numbers,
    // and mark the first edge of each path.
    let mut newnum = vec![0usize; n];
    let mut starts_path = vec![false; m];
    let mut high_src: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut mc = n;
    let mut fresh = true;
    newnum[0] = mc - nd[0] + 1;
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some(top) = stack.last_mut() {
        let (v, i) = *top;
        if i == out_adj[v].len() {
            stack.pop();
            if !stack.is_empty() {
                mc -= 1;
            }
            continue;
        }
        top.1 += 1;
        let e = out_adj[v][i];
        if fresh {
            starts_path[e] = true;
            fresh = false;
        }
        if is_tree[e] {
            let w = dst[e];
            newnum[w] = mc - nd[w] + 1;
            stack.push((w, 0));
        } else {
            high_src[dst[e]].push((newnum[v], e));
            fresh = true;
        }
    }

    let mut old_of_new = vec![0usize; n + 1];
    for v in 0..n {
        old_of_new[newnum[v]] = v;
    }
    let renum = |x: usize| newnum[vert_of_num[x]];
    let mut sp = Splitter {
        edges: (0..m)
            .map(|e| Edge { src: newnum[src[e]], dst: newnum[dst[e]], tree: is_tree[e], removed: false })
            .collect(),
        adj: vec![Vec::new(); n + 1],
        outs: vec![Vec::new(); n + 1],
        parent: vec![0; n + 1],
        tree_arc_in: vec![NONE; n + 1],
        low1: vec![0; n + 1],
        low2: vec![0; n + 1],
        nd: vec![0; n + 1],
        deg: vec![0; n + 1],
        unvisited_tree: vec![0; n + 1],
        high: vec![BinaryHeap::new(); n + 1],
        starts_path,
        estack: Vec::with_capacity(m),
        tstack: Vec::new(),
        comps: Vec::new(),
    };
    for v in 0..n {
        let x = newnum[v];
        sp.adj[x] = out_adj[v].clone();
        sp.outs[x] = out_adj[v].clone();
        sp.parent[x] = if par[v] == NONE { 0 } else { newnum[par[v]] };
        sp.low1[x] = renum(low1[v]);
        sp.low2[x] = renum(low2[v]);
        sp.nd[x] = nd[v];
        sp.deg[x] = inc[v].len();
        sp.unvisited_tree[x] = out_adj[v].iter().filter(|&&e| is_tree[e]).count();
        sp.high[x] = high_src[v].iter().copied().collect();
    }
    for e in 0..m {
        if is_tree[e] {
            sp.tree_arc_in[newnum[dst[e]]] = e;
        }
    }

    sp.path_search();

    let endpoints: Vec<(usize, usize)> = sp
        .edges
        .iter()
        .map(|ed| (old_of_new[ed.src], old_of_new[ed.dst]))
        .collect();
    let raw: Vec<SplitComponent> = sp
        .comps
        .into_iter()
        .filter(|(_, es)| !es.is_empty())
        .map(|(kind, es)| {
            let kind = kind.unwrap_or_else(|| classify(&es, &endpoints));
            SplitComponent { kind, edges: es }
        })
        .collect();
    Ok(merge(TriconnectedComponents { endpoints, n_real: m, components: raw }))
}

fn classify(es: &[usize], endpoints: &[(usize, usize)]) -> SplitKind {
    let mut count = std::collections::HashMap::new();
    for &e in es {
        let (a, b) = endpoints[e];
        *count.entry(a).or_insert(0usize) += 1;
        *count.entry(b).or_insert(0usize) += 1;
    }
    if count.len() == 2 {
        SplitKind::Bond
    } else if count.values().all(|&d| d == 2) {
        SplitKind::Polygon
    } else {
        SplitKind::Rigid
    }
}

/// Merges bonds sharing a virtual edge, and polygons sharing a virtual edge.
fn merge(tc: TriconnectedComponents) -> TriconnectedComponents {
    let k = tc.components.len();
    let mut dsu: Vec<usize> = (0..k).collect();
    fn find(d: &mut [usize], mut x: usize) -> usize {
        while d[x] != x {
            d[x] = d[d[x]];
            x = d[x];
        }
        x
    }
    let links = tc.virtual_links();
    let mut dropped = vec![false; tc.endpoints.len()];
    for &(e, a, b) in &links {
        let ka = tc.components[a].kind;
        if ka != SplitKind::Rigid && ka == tc.components[b].kind {
            dropped[e] = true;
            let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
            if ra != rb {
                dsu[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); k];
    for c in 0..k {
        let r = find(&mut dsu, c);
        groups[r].push(c);
    }
    let mut comps = Vec::new();
    for (r, grp) in groups.iter().enumerate() {
        if grp.is_empty() {
            continue;
        }
        let mut es: Vec<usize> = grp
            .iter()
            .flat_map(|&c| tc.components[c].edges.iter().copied())
            .filter(|&e| !dropped[e])
            .collect();
        es.sort_unstable();
        comps.push(SplitComponent { kind: tc.components[r].kind, edges: es });
    }
    TriconnectedComponents { endpoints: tc.endpoints, n_real: tc.n_real, components: comps }
}

/// Decomposition of a graph with arbitrary ids; endpoints are reported in
/// the graph's own ids.
pub fn triconnected_components(g: &Graph) -> Result<TriconnectedComponents, TriconnectedError> {
    let (h, old) = g.compacted();
    let edges = h.edge_list();
    let mut tc = split_components(h.n(), &edges)?;
    for p in &mut tc.endpoints {
        *p = (old[p.0], old[p.1]);
    }
    Ok(tc)
}

/// True iff the graph has at least four vertices and no separating set of size below three.
pub fn is_triconnected(g: &Graph) -> bool {
    if g.n() < 4 {
        return false;
    }
    let (h, _) = g.compacted();
    let edges = h.edge_list();
    match split_components(h.n(), &edges) {
        Ok(tc) => tc.components.len() == 1 && tc.components[0].kind == SplitKind::Rigid,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(tc: &TriconnectedComponents) -> Vec<SplitKind> {
        let mut k: Vec<SplitKind> = tc.components.iter().map(|c| c.kind).collect();
        k.sort_by_key(|x| *x as u8);
        k
    }

    #[test]
    fn cycle_is_one_polygon() {
        let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)));
        let tc = triconnected_components(&g).unwrap();
        assert_eq!(kinds(&tc), vec![SplitKind::Polygon]);
        assert_eq!(tc.components[0].edges.len(), 6);
    }

    #[test]
    fn k4_is_rigid() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let tc = triconnected_components(&g).unwrap();
        assert_eq!(kinds(&tc), vec![SplitKind::Rigid]);
        assert!(is_triconnected(&g));
    }

    #[test]
    fn k23_is_bond_with_three_polygons() {
        let g = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let tc = triconnected_components(&g).unwrap();
        assert_eq!(kinds(&tc), vec![SplitKind::Bond, SplitKind::Polygon, SplitKind::Polygon, SplitKind::Polygon]);
        assert!(!is_triconnected(&g));
    }

    #[test]
    fn not_biconnected() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(triconnected_components(&g).unwrap_err(), TriconnectedError::NotBiconnected);
    }
}
