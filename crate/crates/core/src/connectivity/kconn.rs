//! k-vertex-connectivity tests.

use super::flow::DisjointPaths;
use crate::decomposition::blocks::{is_biconnected, is_connected};
use crate::decomposition::triconnected::is_triconnected;
use crate::graph::Graph;

/// True iff `g` has more than `k` vertices and no separating set of fewer
/// than `k` vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.n() <= k {
        return false;
    }
    match k {
        0 => true,
        1 => is_connected(g),
        2 => is_biconnected(g),
        3 => is_triconnected(g),
        _ => flow_k_connected(g, k),
    }
}

/// Any separator S with |S| < k misses one of the first k vertices, and
/// that vertex is then cut from something; so checking every pair with an
/// endpoint among the first k vertices suffices.
fn flow_k_connected(g: &Graph, k: usize) -> bool {
    if g.vertices().any(|v| g.degree(v) < k) {
        return false;
    }
    let vs = g.vertex_list();
    let mut dp = DisjointPaths::new(g);
    for (i, &a) in vs.iter().take(k).enumerate() {
        for &b in &vs[i + 1..] {
            if dp.count(a, b, k) < k {
                return false;
            }
        }
    }
    true
}

/// Vertex connectivity, capped at `cap`.
pub fn connectivity(g: &Graph, cap: usize) -> usize {
    let mut k = 0;
    while k < cap && is_k_connected(g, k + 1) {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, octahedron, prism};

    #[test]
    fn small_cases() {
        assert!(is_k_connected(&complete(4), 3));
        assert!(!is_k_connected(&cycle(5), 3));
        assert!(is_k_connected(&prism(), 3));
        assert!(!is_k_connected(&prism(), 4));
        assert!(is_k_connected(&octahedron(), 4));
        assert!(is_k_connected(&complete(6), 5));
        assert!(!is_k_connected(&complete(5), 5));
        assert_eq!(connectivity(&octahedron(), 10), 4);
    }
}
