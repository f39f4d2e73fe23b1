//! Simple undirected graphs with stable vertex ids, minor operations and
//! the plain-text edge-list format.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("{0:?} does not induce a triangle")]
    NotATriangle([Vertex; 3]),
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(Vertex),
    #[error("invalid payload: {0}")]
    InvalidPayload(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

/// Simple undirected graph. Vertex ids are never reused; deleted ids stay
/// dead so that ids remain meaningful across a sequence of minors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    alive: Vec<bool>,
    n: usize,
    m: usize,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            alive: vec![true; n],
            n,
            m: 0,
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph on ids `0..n`; loops are dropped and parallel edges merged.
    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(n: usize, edges: I) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            assert!(u < n && v < n, "edge {u}-{v} out of range for n={n}");
            if u != v {
                g.adj[u].push(v);
                g.adj[v].push(u);
            }
        }
        g.normalize();
        g
    }

    fn normalize(&mut self) {
        let mut twice = 0;
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        self.m = twice / 2;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// One past the largest id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.alive.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.alive.len() && self.alive[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.alive.len()).filter(move |&v| self.alive[v])
    }

    pub fn vertex_list(&self) -> Vec<Vertex> {
        self.vertices().collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(Vertex, Vertex)> {
        self.edges().collect()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.contains(v) && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.alive.push(true);
        self.n += 1;
        self.alive.len() - 1
    }

    /// Revives or creates vertex `v` (ids up to `v` are allocated dead).
    pub fn ensure_vertex(&mut self, v: Vertex) {
        while self.alive.len() <= v {
            self.adj.push(Vec::new());
            self.alive.push(false);
        }
        if !self.alive[v] {
            self.alive[v] = true;
            self.n += 1;
        }
    }

    /// Returns false when the edge was already present or is a loop.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert!(self.contains(u) && self.contains(v), "add_edge on missing vertex");
        if u == v {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                self.m += 1;
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if !self.contains(u) || !self.contains(v) {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(i) => {
                self.adj[u].remove(i);
                let j = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(j);
                self.m -= 1;
                true
            }
            Err(_) => false,
        }
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> bool {
        if !self.contains(v) {
            return false;
        }
        let nbrs = std::mem::take(&mut self.adj[v]);
        for &w in &nbrs {
            let j = self.adj[w].binary_search(&v).unwrap();
            self.adj[w].remove(j);
        }
        self.m -= nbrs.len();
        self.alive[v] = false;
        self.n -= 1;
        self.labels.remove(&v);
        true
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    /// Subgraph induced by `vs`, keeping ids.
    pub fn induced(&self, vs: &[Vertex]) -> Graph {
        let mut keep = vec![false; self.id_bound()];
        for &v in vs {
            if self.contains(v) {
                keep[v] = true;
            }
        }
        let mut g = Graph {
            adj: vec![Vec::new(); self.id_bound()],
            alive: keep.clone(),
            n: keep.iter().filter(|&&k| k).count(),
            m: 0,
            labels: BTreeMap::new(),
        };
        let mut twice = 0;
        for v in 0..self.id_bound() {
            if keep[v] {
                g.adj[v] = self.adj[v].iter().copied().filter(|&w| keep[w]).collect();
                twice += g.adj[v].len();
                if let Some(l) = self.labels.get(&v) {
                    g.labels.insert(v, l.clone());
                }
            }
        }
        g.m = twice / 2;
        g
    }

    pub fn without_vertices(&self, vs: &[Vertex]) -> Graph {
        let mut drop = vec![false; self.id_bound()];
        for &v in vs {
            if v < drop.len() {
                drop[v] = true;
            }
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !drop[v]).collect();
        self.induced(&keep)
    }

    pub fn without_edges(&self, es: &[(Vertex, Vertex)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in es {
            g.remove_edge(u, v);
        }
        g
    }

    /// Relabels alive vertices to `0..n` in increasing id order. Returns the
    /// new graph and, for each new id, the old id.
    pub fn compacted(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertex_list();
        let mut new_of = vec![usize::MAX; self.id_bound()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut g = Graph::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            g.adj[i] = self.adj[v].iter().map(|&w| new_of[w]).collect();
            if let Some(l) = self.labels.get(&v) {
                g.labels.insert(i, l.clone());
            }
        }
        g.m = self.m;
        (g, old)
    }

    /// Merges each group into its smallest member and simplifies. Groups must
    /// be pairwise disjoint sets of alive vertices.
    pub fn contract_groups(&self, groups: &[Vec<Vertex>]) -> (Graph, VertexMap) {
        let mut rep: Vec<Vertex> = (0..self.id_bound()).collect();
        for grp in groups {
            let r = *grp.iter().min().expect("empty group");
            for &v in grp {
                rep[v] = r;
            }
        }
        let mut g = Graph {
            adj: vec![Vec::new(); self.id_bound()],
            alive: vec![false; self.id_bound()],
            n: 0,
            m: 0,
            labels: BTreeMap::new(),
        };
        for v in self.vertices() {
            let r = rep[v];
            if !g.alive[r] {
                g.alive[r] = true;
                g.n += 1;
            }
            for &w in &self.adj[v] {
                let s = rep[w];
                if s != r {
                    g.adj[r].push(s);
                }
            }
        }
        for (&v, l) in &self.labels {
            if rep[v] == v {
                g.labels.insert(v, l.clone());
            }
        }
        g.normalize();
        let map = VertexMap {
            map: (0..self.id_bound())
                .map(|v| if self.contains(v) { Some(rep[v]) } else { None })
                .collect(),
        };
        (g, map)
    }

    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<(Graph, VertexMap), GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok(self.contract_groups(&[vec![u, v]]))
    }

    pub fn contract_triangle(&self, t: [Vertex; 3]) -> Result<(Graph, VertexMap), GraphError> {
        let [a, b, c] = t;
        if a == b || b == c || a == c || !self.has_edge(a, b) || !self.has_edge(b, c) || !self.has_edge(a, c) {
            return Err(GraphError::NotATriangle(t));
        }
        Ok(self.contract_groups(&[vec![a, b, c]]))
    }

    /// Checks simplicity, symmetry, sortedness and the edge count.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut twice = 0;
        let mut alive_count = 0;
        for v in 0..self.id_bound() {
            if !self.alive[v] {
                if !self.adj[v].is_empty() {
                    return Err(format!("dead vertex {v} has neighbours"));
                }
                continue;
            }
            alive_count += 1;
            let list = &self.adj[v];
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(format!("adjacency of {v} not strictly sorted"));
                }
            }
            for &w in list {
                if w == v {
                    return Err(format!("loop at {v}"));
                }
                if !self.contains(w) || self.adj[w].binary_search(&v).is_err() {
                    return Err(format!("asymmetric edge {v}-{w}"));
                }
            }
            twice += list.len();
        }
        if alive_count != self.n {
            return Err("vertex count mismatch".into());
        }
        if twice != 2 * self.m {
            return Err("edge count mismatch".into());
        }
        Ok(())
    }
}

/// Old vertex id to new vertex id; `None` for deleted (or never present) ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    pub map: Vec<Option<Vertex>>,
}

impl VertexMap {
    pub fn identity(g: &Graph) -> Self {
        VertexMap {
            map: (0..g.id_bound()).map(|v| g.contains(v).then_some(v)).collect(),
        }
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.map.get(v).copied().flatten()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        VertexMap {
            map: self.map.iter().map(|x| x.and_then(|v| next.get(v))).collect(),
        }
    }
}

/// One step of a minor sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", content = "payload")]
pub enum MinorOp {
    DeleteEdges(Vec<(Vertex, Vertex)>),
    DeleteVertices(Vec<Vertex>),
    ContractMatching(Vec<(Vertex, Vertex)>),
    ContractTriangles(Vec<[Vertex; 3]>),
}

impl MinorOp {
    pub fn payload_len(&self) -> usize {
        match self {
            MinorOp::DeleteEdges(x) => x.len(),
            MinorOp::DeleteVertices(x) => x.len(),
            MinorOp::ContractMatching(x) => x.len(),
            MinorOp::ContractTriangles(x) => x.len(),
        }
    }

    fn touched(&self) -> Vec<Vertex> {
        match self {
            MinorOp::DeleteEdges(es) | MinorOp::ContractMatching(es) => {
                es.iter().flat_map(|&(u, v)| [u, v]).collect()
            }
            MinorOp::DeleteVertices(vs) => vs.clone(),
            MinorOp::ContractTriangles(ts) => ts.iter().flatten().copied().collect(),
        }
    }
}

/// Applies `op` after checking that its payload is valid in `g` and avoids
/// `protected`.
pub fn apply_minor_op(g: &Graph, op: &MinorOp, protected: &[Vertex]) -> Result<(Graph, VertexMap), GraphError> {
    for v in op.touched() {
        if !g.contains(v) {
            return Err(GraphError::NoSuchVertex(v));
        }
        if protected.contains(&v) {
            return Err(GraphError::InvalidPayload(format!("touches protected vertex {v}")));
        }
    }
    match op {
        MinorOp::DeleteEdges(es) => {
            let mut h = g.clone();
            for &(u, v) in es {
                if !h.remove_edge(u, v) {
                    return Err(GraphError::NotAnEdge(u, v));
                }
            }
            let map = VertexMap::identity(&h);
            Ok((h, map))
        }
        MinorOp::DeleteVertices(vs) => {
            let mut seen = std::collections::BTreeSet::new();
            if !vs.iter().all(|v| seen.insert(*v)) {
                return Err(GraphError::InvalidPayload("repeated vertex".into()));
            }
            let h = g.without_vertices(vs);
            let mut map = VertexMap::identity(g);
            for &v in vs {
                map.map[v] = None;
            }
            Ok((h, map))
        }
        MinorOp::ContractMatching(es) => {
            let mut used = std::collections::BTreeSet::new();
            for &(u, v) in es {
                if !g.has_edge(u, v) {
                    return Err(GraphError::NotAnEdge(u, v));
                }
                if !used.insert(u) || !used.insert(v) {
                    return Err(GraphError::InvalidPayload("matching edges share a vertex".into()));
                }
            }
            let groups: Vec<Vec<Vertex>> = es.iter().map(|&(u, v)| vec![u, v]).collect();
            Ok(g.contract_groups(&groups))
        }
        MinorOp::ContractTriangles(ts) => {
            let mut used = std::collections::BTreeSet::new();
            for t in ts {
                let [a, b, c] = *t;
                if a == b || b == c || a == c || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c) {
                    return Err(GraphError::NotATriangle(*t));
                }
                if !t.iter().all(|v| used.insert(*v)) {
                    return Err(GraphError::InvalidPayload("triangles share a vertex".into()));
                }
            }
            let groups: Vec<Vec<Vertex>> = ts.iter().map(|t| t.to_vec()).collect();
            Ok(g.contract_groups(&groups))
        }
    }
}

/// A recorded minor sequence that can be replayed from its first graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Journal {
    pub ops: Vec<MinorOp>,
}

impl Journal {
    pub fn replay(&self, start: &Graph, protected: &[Vertex]) -> Result<(Graph, VertexMap), GraphError> {
        let mut g = start.clone();
        let mut map = VertexMap::identity(start);
        let mut prot: Vec<Vertex> = protected.to_vec();
        for op in &self.ops {
            let (h, step) = apply_minor_op(&g, op, &prot)?;
            prot = prot.iter().filter_map(|&v| step.get(v)).collect();
            map = map.then(&step);
            g = h;
        }
        Ok((g, map))
    }
}

/// Parses the `p n m` / `e u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| ParseError { line: lineno, msg: msg.to_string() };
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap();
        let nums: Result<Vec<usize>, _> = parts.map(str::parse::<usize>).collect();
        let nums = nums.map_err(|_| err("expected non-negative integers"))?;
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(err("duplicate header"));
                }
                if nums.len() != 2 {
                    return Err(err("header must be `p <n> <m>`"));
                }
                header = Some((nums[0], nums[1]));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err("edge before header"))?;
                if nums.len() != 2 {
                    return Err(err("edge must be `e <u> <v>`"));
                }
                if nums[0] >= n || nums[1] >= n {
                    return Err(err("vertex id out of range"));
                }
                if nums[0] == nums[1] {
                    return Err(err("self loop"));
                }
                edges.push((nums[0], nums[1]));
            }
            _ => return Err(err("unknown line tag")),
        }
    }
    let (n, m) = header.ok_or(ParseError { line: 0, msg: "missing header".into() })?;
    if edges.len() != m {
        return Err(ParseError {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_edges(n, edges))
}

/// Writes the edge-list format with sorted edges; `n` is the id bound.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.id_bound(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Pairwise disjoint vertex pairs, each an edge of its host.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v) && seen.insert(u) && seen.insert(v))
    }
}

/// Pairwise disjoint triangles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleSet {
    pub triangles: Vec<[Vertex; 3]>,
}

impl TriangleSet {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.triangles.iter().all(|&[a, b, c]| {
            g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) && seen.insert(a) && seen.insert(b) && seen.insert(c)
        })
    }
}
