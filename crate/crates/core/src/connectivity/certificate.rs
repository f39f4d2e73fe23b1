//! Sparse connectivity certificates by scan-first forest decomposition.
//!
//! Vertices are scanned in maximum-adjacency order; an edge from the
//! scanned vertex to an unscanned `w` goes to forest number `r(w)` after
//! `r(w)` is incremented. The first `k` forests keep every pairwise local
//! connectivity up to `k`.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestDecomposition {
    /// `forests[i]` holds the edges of forest `i + 1`.
    pub forests: Vec<Vec<(Vertex, Vertex)>>,
    pub remainder: Vec<(Vertex, Vertex)>,
}

impl ForestDecomposition {
    pub fn kept_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.forests.iter().flatten().copied()
    }

    /// Each forest is acyclic and forests plus remainder partition the edges of `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut all: Vec<(Vertex, Vertex)> = self.kept_edges().chain(self.remainder.iter().copied()).collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        if total != all.len() || all != g.edge_list() {
            return false;
        }
        let mut parent: Vec<Vertex> = (0..g.id_bound()).collect();
        fn find(p: &mut [Vertex], x: Vertex) -> Vertex {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for f in &self.forests {
            for (i, x) in parent.iter_mut().enumerate() {
                *x = i;
            }
            for &(a, b) in f {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    return false;
                }
                parent[ra] = rb;
            }
        }
        true
    }
}

/// Scan-first decomposition keeping the first `k` forests.
pub fn sparse_certificate(g: &Graph, k: usize) -> ForestDecomposition {
    let edges = g.edge_list();
    let vertices: Vec<Vertex> = g.vertices().collect();
    let k = k.max(1);
    let mut forests: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); k];
    let mut remainder = Vec::new();
    for (e, f) in edges.iter().zip(scan_first_forests(&vertices, g.id_bound(), &edges, k)) {
        match f {
            Some(i) => forests[i].push(*e),
            None => remainder.push(*e),
        }
    }
    ForestDecomposition { forests, remainder }
}

/// The forest (0-based, below `k`) of each edge of a multigraph in the
/// scan-first decomposition, or `None` for edges past the first `k`.
/// Parallel edges are allowed and each counts as its own path.
pub fn scan_first_forests(vertices: &[Vertex], id_bound: usize, edges: &[(Vertex, Vertex)], k: usize) -> Vec<Option<usize>> {
    let k = k.max(1);
    let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); id_bound];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    let mut out = vec![None; edges.len()];
    let mut r = vec![0usize; id_bound];
    let mut scanned = vec![false; id_bound];
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new()];
    // Lowest ids come out first among equals.
    let mut order = vertices.to_vec();
    order.sort_unstable();
    buckets[0].extend(order.into_iter().rev());
    let mut top = 0usize;
    loop {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !scanned[v] && r[v] == top => break Some(v),
                Some(_) => continue,
                None if top == 0 => break None,
                None => top -= 1,
            }
        };
        let Some(v) = v else { break };
        scanned[v] = true;
        for &(w, e) in &adj[v] {
            if scanned[w] {
                continue;
            }
            r[w] += 1;
            if r[w] <= k {
                out[e] = Some(r[w] - 1);
            }
            if r[w] == buckets.len() {
                buckets.push(Vec::new());
            }
            buckets[r[w]].push(w);
            top = top.max(r[w]);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DenseError {
    #[error("average degree {avg:.2} does not exceed {bound}")]
    TooSparse { avg: f64, bound: usize },
}

/// Edges outside the first `c` forests and away from `protected`. Needs
/// average degree above `4c`.
pub fn dense_edge_deletion(g: &Graph, c: usize, protected: &[Vertex]) -> Result<Vec<(Vertex, Vertex)>, DenseError> {
    let avg = if g.n() == 0 { 0.0 } else { 2.0 * g.m() as f64 / g.n() as f64 };
    if avg <= (4 * c) as f64 {
        return Err(DenseError::TooSparse { avg, bound: 4 * c });
    }
    let cert = sparse_certificate(g, c);
    Ok(cert
        .remainder
        .into_iter()
        .filter(|(a, b)| !protected.contains(a) && !protected.contains(b))
        .collect())
}
