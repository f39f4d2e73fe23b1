//! Embedding a small vertex cover into a highly connected small subgraph.
//!
//! Round `i` builds an auxiliary graph on the current subgraph: its own
//! edges plus, for every stable vertex still outside, a clique on that
//! vertex's neighbours, each clique edge labelled by the vertex (parallel
//! edges kept). A sparse certificate keeping local connectivity up to `i`
//! is taken and the labels of the kept clique edges join the subgraph.

use crate::connectivity::certificate::scan_first_forests;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("cover has {size} vertices, limit {limit}")]
    CoverTooLarge { size: usize, limit: usize },
}

/// `c!` times two, saturating.
pub fn embed_bound_factor(c: usize) -> usize {
    (1..=c).fold(2usize, |acc, i| acc.saturating_mul(i))
}

/// Induced subgraph `J` of `f` containing `cover` such that for every
/// vertex outside `J`, every two of its neighbours are joined by `c`
/// internally disjoint paths of `J`. `cover` and `stable` must partition
/// the vertices of `f`, with `stable` a stable set.
pub fn small_cover_embed(f: &Graph, cover: &[Vertex], stable: &[Vertex], c: usize) -> Result<Graph, CoverError> {
    let nb = f.id_bound();
    let mut side = vec![0u8; nb];
    for &x in cover {
        if !f.contains(x) {
            return Err(CoverError::BadPartition(format!("cover vertex {x} not in graph")));
        }
        side[x] |= 1;
    }
    for &s in stable {
        if !f.contains(s) {
            return Err(CoverError::BadPartition(format!("stable vertex {s} not in graph")));
        }
        side[s] |= 2;
    }
    for v in f.vertices() {
        match side[v] {
            1 | 2 => {}
            0 => return Err(CoverError::BadPartition(format!("vertex {v} in neither part"))),
            _ => return Err(CoverError::BadPartition(format!("vertex {v} in both parts"))),
        }
    }
    for &s in stable {
        if let Some(&w) = f.neighbors(s).iter().find(|&&w| side[w] == 2) {
            return Err(CoverError::BadPartition(format!("stable vertices {s} and {w} are adjacent")));
        }
    }
    let mut inside: Vec<bool> = (0..nb).map(|v| side[v] == 1).collect();
    let mut outside: Vec<Vertex> = stable.to_vec();
    outside.sort_unstable();
    outside.dedup();
    for round in 1..=c.max(1) {
        let members: Vec<Vertex> = (0..nb).filter(|&v| inside[v]).collect();
        let mut edges: Vec<(Vertex, Vertex)> = f.induced(&members).edge_list();
        let mut label: Vec<Option<Vertex>> = vec![None; edges.len()];
        // One parallel edge per outside vertex and pair of its neighbours,
        // so k common neighbours count as k paths.
        for &s in &outside {
            let nbrs = f.neighbors(s);
            for (i, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[i + 1..] {
                    edges.push((u, w));
                    label.push(Some(s));
                }
            }
        }
        let forests = scan_first_forests(&members, nb, &edges, round);
        let mut grew = false;
        for (i, f) in forests.iter().enumerate() {
            if let (Some(_), Some(s)) = (f, label[i]) {
                if !inside[s] {
                    inside[s] = true;
                    grew = true;
                }
            }
        }
        if grew {
            outside.retain(|&s| !inside[s]);
        }
    }
    let members: Vec<Vertex> = (0..nb).filter(|&v| inside[v]).collect();
    Ok(f.induced(&members))
}
