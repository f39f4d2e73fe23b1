//! Harvesting structure from 2-cut trees: leaves with their interiors, long
//! runs of degree-2 nodes, and vertex sets that avoid strong 2-cuts and
//! cycle nodes.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::tree::{CutTree, Leaf, Node, PartKind};
use crate::graph::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarvestParams {
    /// Nodes per harvested degree-2 path (odd, so both ends are cuts).
    pub path_nodes: usize,
    /// Runs are chopped into windows of this many nodes, one path each.
    pub window: usize,
    /// Cycle nodes at least this long are removed before looking for paths.
    pub long_cycle: usize,
    /// Expected ratio for independent sets.
    pub independent_ratio: usize,
    /// Leaf and path counts are compared against size / this.
    pub leaf_ratio: usize,
    /// Multiplier in the leaf-count guarantee.
    pub specialty_factor: usize,
}

impl Default for HarvestParams {
    fn default() -> Self {
        HarvestParams {
            path_nodes: 141,
            window: 142,
            long_cycle: 6,
            independent_ratio: 15,
            leaf_ratio: 2000,
            specialty_factor: 7,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HarvestWant {
    Leaves,
    Degree2Paths,
    IndependentNodes(Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TreeHarvest {
    Leaves(Vec<Leaf>),
    Degree2Paths(Vec<Vec<Node>>),
    IndependentNodes(Vec<Vertex>),
}

pub fn harvest(tree: &CutTree, want: &HarvestWant, params: &HarvestParams) -> TreeHarvest {
    match want {
        HarvestWant::Leaves => TreeHarvest::Leaves(tree.leaves()),
        HarvestWant::Degree2Paths => TreeHarvest::Degree2Paths(degree2_paths(tree, params)),
        HarvestWant::IndependentNodes(s) => TreeHarvest::IndependentNodes(independent_nodes(tree, s)),
    }
}

fn long_cycle(tree: &CutTree, p: usize, params: &HarvestParams) -> bool {
    tree.parts[p].kind == PartKind::Cycle && tree.parts[p].vertices.len() >= params.long_cycle
}

/// Disjoint paths of `path_nodes` nodes whose nodes all have degree two in
/// the tree and whose ends are cut nodes. Long cycle nodes are skipped;
/// each maximal run yields one path per full window.
pub fn degree2_paths(tree: &CutTree, params: &HarvestParams) -> Vec<Vec<Node>> {
    let cut_nb = tree.cut_neighbors();
    let part_nb = tree.part_neighbors();
    let usable = |n: Node| match n {
        Node::Cut(c) => cut_nb[c].len() == 2,
        Node::Part(p) => part_nb[p].len() == 2 && !long_cycle(tree, p, params),
    };
    let nbrs = |n: Node| -> Vec<Node> {
        match n {
            Node::Cut(c) => cut_nb[c].iter().map(|&p| Node::Part(p)).collect(),
            Node::Part(p) => part_nb[p].iter().map(|&c| Node::Cut(c)).collect(),
        }
    };
    let all: Vec<Node> = (0..tree.cuts.len())
        .map(Node::Cut)
        .chain((0..tree.parts.len()).map(Node::Part))
        .collect();
    let mut seen: BTreeSet<Node> = BTreeSet::new();
    let mut out = Vec::new();
    // Runs are paths, so each one is entered at an end.
    for &end in &all {
        if !usable(end) || seen.contains(&end) || nbrs(end).iter().filter(|&&w| usable(w)).count() > 1 {
            continue;
        }
        let mut run = vec![end];
        seen.insert(end);
        let mut cur = end;
        while let Some(w) = nbrs(cur).into_iter().find(|&w| usable(w) && !seen.contains(&w)) {
            run.push(w);
            seen.insert(w);
            cur = w;
        }
        for chunk in run.chunks_exact(params.window) {
            let span = params.path_nodes;
            let pick = (0..=params.window - span).find(|&o| {
                matches!(chunk[o], Node::Cut(_)) && matches!(chunk[o + span - 1], Node::Cut(_))
            });
            if let Some(o) = pick {
                out.push(chunk[o..o + span].to_vec());
            }
        }
    }
    out
}

/// Subset of `s` no two of which form a cut pair or share a cycle node.
/// Vertices in long cycles or in heavily used cuts are dropped first; the
/// rest are coloured greedily along the tree and the largest class wins.
pub fn independent_nodes(tree: &CutTree, s: &[Vertex]) -> Vec<Vertex> {
    if s.is_empty() {
        return Vec::new();
    }
    let params = HarvestParams::default();
    let cut_nb = tree.cut_neighbors();
    let part_nb = tree.part_neighbors();
    let mut dropped_cut = vec![false; tree.cuts.len()];
    let mut dropped_part = vec![false; tree.parts.len()];
    let mut banned: BTreeSet<Vertex> = BTreeSet::new();
    for (p, part) in tree.parts.iter().enumerate() {
        if long_cycle(tree, p, &params) {
            dropped_part[p] = true;
            banned.extend(part.vertices.iter().copied());
        }
        if part.kind == PartKind::ThreeConnected && part_nb[p].len() > 2 {
            dropped_part[p] = true;
            for &c in &part_nb[p] {
                dropped_cut[c] = true;
            }
        }
    }
    for (c, nb) in cut_nb.iter().enumerate() {
        if nb.len() >= 3 {
            dropped_cut[c] = true;
        }
        if dropped_cut[c] {
            banned.insert(tree.cuts[c].pair.0);
            banned.insert(tree.cuts[c].pair.1);
        }
    }
    let wanted: BTreeSet<Vertex> = s.iter().copied().filter(|v| !banned.contains(v)).collect();
    // Bags that create conflicts: remaining cuts and cycle parts.
    let bag = |n: Node| -> Vec<Vertex> {
        match n {
            Node::Cut(c) if !dropped_cut[c] => {
                let (a, b) = tree.cuts[c].pair;
                [a, b].into_iter().filter(|v| wanted.contains(v)).collect()
            }
            Node::Part(p) if !dropped_part[p] && tree.parts[p].kind == PartKind::Cycle => {
                tree.parts[p].vertices.iter().copied().filter(|v| wanted.contains(v)).collect()
            }
            _ => Vec::new(),
        }
    };
    // Order vertices by first appearance in a breadth-first sweep of the tree.
    let mut order: Vec<Vertex> = Vec::new();
    let mut placed: BTreeSet<Vertex> = BTreeSet::new();
    let mut conflicts: std::collections::BTreeMap<Vertex, BTreeSet<Vertex>> = Default::default();
    let mut seen_c = vec![false; tree.cuts.len()];
    let mut seen_p = vec![false; tree.parts.len()];
    let roots: Vec<Node> = (0..tree.parts.len()).map(Node::Part).chain((0..tree.cuts.len()).map(Node::Cut)).collect();
    for root in roots {
        let fresh = match root {
            Node::Cut(c) => !seen_c[c],
            Node::Part(p) => !seen_p[p],
        };
        if !fresh {
            continue;
        }
        let mut queue = VecDeque::from([root]);
        match root {
            Node::Cut(c) => seen_c[c] = true,
            Node::Part(p) => seen_p[p] = true,
        }
        while let Some(n) = queue.pop_front() {
            let members = bag(n);
            for &v in &members {
                if placed.insert(v) {
                    order.push(v);
                }
                for &w in &members {
                    if w != v {
                        conflicts.entry(v).or_default().insert(w);
                    }
                }
            }
            match n {
                Node::Cut(c) => {
                    for &p in &cut_nb[c] {
                        if !seen_p[p] {
                            seen_p[p] = true;
                            queue.push_back(Node::Part(p));
                        }
                    }
                }
                Node::Part(p) => {
                    for &c in &part_nb[p] {
                        if !seen_c[c] {
                            seen_c[c] = true;
                            queue.push_back(Node::Cut(c));
                        }
                    }
                }
            }
        }
    }
    // Vertices of S that lie in no bag are conflict free.
    for &v in &wanted {
        if placed.insert(v) {
            order.push(v);
        }
    }
    let mut colour: std::collections::BTreeMap<Vertex, usize> = Default::default();
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for &v in &order {
        let used: BTreeSet<usize> = conflicts
            .get(&v)
            .map(|ws| ws.iter().filter_map(|w| colour.get(w).copied()).collect())
            .unwrap_or_default();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        colour.insert(v, c);
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
    }
    let mut best = classes.into_iter().max_by_key(|c| c.len()).unwrap_or_default();
    best.sort_unstable();
    best
}

/// No two vertices of `set` form a cut pair or lie in a common cycle node
/// of length at least four.
pub fn is_independent(tree: &CutTree, set: &[Vertex]) -> bool {
    let inside: BTreeSet<Vertex> = set.iter().copied().collect();
    for c in &tree.cuts {
        if inside.contains(&c.pair.0) && inside.contains(&c.pair.1) {
            return false;
        }
    }
    for p in &tree.parts {
        if p.kind == PartKind::Cycle && p.vertices.len() >= 4 {
            if p.vertices.iter().filter(|v| inside.contains(v)).count() > 1 {
                return false;
            }
        }
    }
    true
}
