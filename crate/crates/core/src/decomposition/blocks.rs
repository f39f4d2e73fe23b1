//! Connected components, articulation points and the block-cut tree.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.id_bound()];
    let mut comps = Vec::new();
    let mut queue = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.clear();
        queue.push(s);
        let mut i = 0;
        while i < queue.len() {
            let v = queue[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        let mut comp = queue.clone();
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && connected_components(g).len() == 1
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTree {
    /// Vertex sets of the blocks, each sorted; isolated vertices form singleton blocks.
    pub blocks: Vec<Vec<Vertex>>,
    /// Edges of each block, `(u, v)` with `u < v`, sorted.
    pub block_edges: Vec<Vec<(Vertex, Vertex)>>,
    pub cut_vertices: Vec<Vertex>,
}

impl BlockTree {
    /// Block-cut tree edges as (block index, cut vertex).
    pub fn tree_edges(&self) -> Vec<(usize, Vertex)> {
        let mut is_cut = std::collections::HashSet::new();
        is_cut.extend(self.cut_vertices.iter().copied());
        let mut out = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                if is_cut.contains(&v) {
                    out.push((i, v));
                }
            }
        }
        out
    }
}

/// Biconnected components by an iterative Tarjan DFS.
pub fn block_tree(g: &Graph) -> BlockTree {
    let nb = g.id_bound();
    let mut disc = vec![usize::MAX; nb];
    let mut low = vec![0usize; nb];
    let mut is_cut = vec![false; nb];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = BlockTree::default();

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            out.blocks.push(vec![root]);
            out.block_edges.push(Vec::new());
            continue;
        }
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, p, i) = *top;
            if i < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[i];
                if w == p {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if p == usize::MAX {
                    continue;
                }
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    if p != root {
                        is_cut[p] = true;
                    }
                    let mut verts = Vec::new();
                    let mut edges = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        verts.push(a);
                        verts.push(b);
                        edges.push((a.min(b), a.max(b)));
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    verts.dedup();
                    edges.sort_unstable();
                    out.blocks.push(verts);
                    out.block_edges.push(edges);
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    out.cut_vertices = (0..nb).filter(|&v| is_cut[v]).collect();
    out
}

pub fn articulation_points(g: &Graph) -> Vec<Vertex> {
    block_tree(g).cut_vertices
}

/// Connected, at least three vertices, no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && articulation_points(g).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_has_two_blocks() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let bt = block_tree(&g);
        assert_eq!(bt.blocks.len(), 2);
        assert_eq!(bt.cut_vertices, vec![2]);
        assert_eq!(bt.tree_edges().len(), 2);
    }

    #[test]
    fn k4_is_one_block() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let bt = block_tree(&g);
        assert_eq!(bt.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(bt.cut_vertices.is_empty());
        assert!(is_biconnected(&g));
    }

    #[test]
    fn path_and_isolated() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]);
        let bt = block_tree(&g);
        assert_eq!(bt.blocks.len(), 3);
        assert_eq!(bt.cut_vertices, vec![1]);
        assert_eq!(connected_components(&g).len(), 2);
        assert!(!is_biconnected(&g));
    }
}
