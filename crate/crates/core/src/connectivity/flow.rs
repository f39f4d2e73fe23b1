//! Internally vertex-disjoint paths via unit vertex capacities.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlowError {
    #[error("endpoints coincide")]
    SameVertex,
    #[error("vertex {0} is not in the graph")]
    MissingVertex(Vertex),
}

/// Internally disjoint `u`–`v` paths, each listed from `u` to `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSet {
    pub u: Vertex,
    pub v: Vertex,
    pub paths: Vec<Vec<Vertex>>,
}

impl PathSet {
    /// Each path is a path of `g` between the endpoints and interiors are pairwise disjoint.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut used = std::collections::HashSet::new();
        for p in &self.paths {
            if p.len() < 2 || p[0] != self.u || *p.last().unwrap() != self.v {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if x == self.u || x == self.v || !used.insert(x) {
                    return false;
                }
            }
        }
        let direct = self.paths.iter().filter(|p| p.len() == 2).count();
        direct <= 1
    }
}

const INF: u32 = u32::MAX / 4;

/// Residual network where every vertex is split into an in-node and an
/// out-node. Extra nodes can be appended for multi-terminal queries.
#[derive(Clone, Debug)]
pub struct SplitNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
    touched: Vec<usize>,
    mark: Vec<u32>,
    stamp: u32,
    prev: Vec<usize>,
    queue: Vec<usize>,
    vertex_slots: usize,
}

impl SplitNetwork {
    /// Every vertex gets capacity 1, every edge both directions.
    pub fn new(g: &Graph) -> Self {
        let nb = g.id_bound();
        let mut net = SplitNetwork {
            head: vec![Vec::new(); 2 * nb],
            to: Vec::with_capacity(2 * (nb + 2 * g.m())),
            cap: Vec::new(),
            orig: Vec::new(),
            touched: Vec::new(),
            mark: vec![0; 2 * nb],
            stamp: 0,
            prev: vec![usize::MAX; 2 * nb],
            queue: Vec::new(),
            vertex_slots: nb,
        };
        for v in g.vertices() {
            net.add_arc(Self::inn(v), Self::out(v), 1);
        }
        for (a, b) in g.edges() {
            net.add_arc(Self::out(a), Self::inn(b), 1);
            net.add_arc(Self::out(b), Self::inn(a), 1);
        }
        net
    }

    pub fn inn(v: Vertex) -> usize {
        2 * v
    }

    pub fn out(v: Vertex) -> usize {
        2 * v + 1
    }

    pub fn add_node(&mut self) -> usize {
        self.head.push(Vec::new());
        self.mark.push(0);
        self.prev.push(usize::MAX);
        self.head.len() - 1
    }

    /// Adds an arc with its reverse; returns the forward arc id.
    pub fn add_arc(&mut self, a: usize, b: usize, c: u32) -> usize {
        let id = self.to.len();
        self.to.push(b);
        self.cap.push(c);
        self.orig.push(c);
        self.head[a].push(id);
        self.to.push(a);
        self.cap.push(0);
        self.orig.push(0);
        self.head[b].push(id + 1);
        id
    }

    pub fn add_infinite_arc(&mut self, a: usize, b: usize) -> usize {
        self.add_arc(a, b, INF)
    }

    /// Arc id of the internal arc of vertex `v` (its capacity).
    pub fn vertex_arc(&self, v: Vertex) -> usize {
        self.head[Self::inn(v)][0]
    }

    pub fn set_vertex_capacity(&mut self, v: Vertex, c: u32) {
        let a = self.vertex_arc(v);
        self.cap[a] = c;
        self.orig[a] = c;
    }

    pub fn set_vertex_unbounded(&mut self, v: Vertex) {
        self.set_vertex_capacity(v, INF);
    }

    /// Restores all arcs changed by augmentations.
    pub fn reset(&mut self) {
        for &a in &self.touched {
            self.cap[a] = self.orig[a];
            self.cap[a ^ 1] = self.orig[a ^ 1];
        }
        self.touched.clear();
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.stamp += 1;
        if self.stamp == u32::MAX {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        let st = self.stamp;
        self.queue.clear();
        self.queue.push(s);
        self.mark[s] = st;
        let mut i = 0;
        while i < self.queue.len() {
            let x = self.queue[i];
            i += 1;
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && self.mark[y] != st {
                    self.mark[y] = st;
                    self.prev[y] = a;
                    if y == t {
                        return true;
                    }
                    self.queue.push(y);
                }
            }
        }
        false
    }

    /// Augments from `s` to `t` until `limit` units or no path remain.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            let mut y = t;
            let mut bottleneck = limit - flow;
            while y != s {
                let a = self.prev[y];
                bottleneck = bottleneck.min(self.cap[a]);
                y = self.to[a ^ 1];
            }
            let mut y = t;
            while y != s {
                let a = self.prev[y];
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                self.touched.push(a);
                y = self.to[a ^ 1];
            }
            flow += bottleneck;
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network after a max flow.
    pub fn source_side(&mut self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Nodes that can still reach `t` in the residual network.
    pub fn sink_side(&mut self, t: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        let mut stack = vec![t];
        seen[t] = true;
        while let Some(x) = stack.pop() {
            for &a in &self.head[x] {
                // reverse arc a^1 goes y -> x
                let y = self.to[a];
                if self.cap[a ^ 1] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Vertices (not extra nodes) whose internal arc is saturated and crosses the cut `side`.
    pub fn cut_vertices(&self, side: &[bool]) -> Vec<Vertex> {
        (0..self.vertex_slots)
            .filter(|&v| {
                !self.head[Self::inn(v)].is_empty() && side[Self::inn(v)] && !side[Self::out(v)]
            })
            .collect()
    }

    /// Decomposes the current flow out of vertex `u`'s out-node into
    /// vertex sequences ending at vertex `v` (whose in-node is the sink).
    pub fn extract_paths(&self, u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
        let mut used = vec![0u32; self.to.len()];
        let mut paths = Vec::new();
        let start = Self::out(u);
        loop {
            let mut path = vec![u];
            let mut x = start;
            let mut ok = false;
            loop {
                let next = self.head[x].iter().copied().find(|&a| {
                    a % 2 == 0 && self.orig[a] > self.cap[a] && self.orig[a] - self.cap[a] > used[a]
                });
                let Some(a) = next else { break };
                used[a] += 1;
                let y = self.to[a];
                if y == Self::inn(v) {
                    path.push(v);
                    ok = true;
                    break;
                }
                if y % 2 == 0 && y < 2 * self.vertex_slots {
                    path.push(y / 2);
                }
                x = y;
            }
            if !ok {
                break;
            }
            paths.push(path);
        }
        paths
    }
}

/// Reusable disjoint-path counter for many queries on one graph.
pub struct DisjointPaths {
    net: SplitNetwork,
}

impl DisjointPaths {
    pub fn new(g: &Graph) -> Self {
        DisjointPaths { net: SplitNetwork::new(g) }
    }

    /// min(cap, number of internally disjoint u–v paths).
    pub fn count(&mut self, u: Vertex, v: Vertex, cap: usize) -> usize {
        let f = self.net.max_flow(SplitNetwork::out(u), SplitNetwork::inn(v), cap as u32);
        self.net.reset();
        f as usize
    }

    pub fn paths(&mut self, u: Vertex, v: Vertex, cap: usize) -> PathSet {
        self.net.max_flow(SplitNetwork::out(u), SplitNetwork::inn(v), cap as u32);
        let paths = self.net.extract_paths(u, v);
        self.net.reset();
        PathSet { u, v, paths }
    }
}

/// min(cap, max number of internally vertex-disjoint u–v paths) with witnesses.
pub fn count_disjoint_paths(g: &Graph, u: Vertex, v: Vertex, cap: usize) -> Result<(usize, PathSet), FlowError> {
    if u == v {
        return Err(FlowError::SameVertex);
    }
    for x in [u, v] {
        if !g.contains(x) {
            return Err(FlowError::MissingVertex(x));
        }
    }
    let ps = DisjointPaths::new(g).paths(u, v, cap.max(1));
    Ok((ps.paths.len(), ps))
}
