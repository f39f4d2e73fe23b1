//! Shared helpers for the integration suites: exhaustive small-graph
//! enumeration by brute-force canonical forms.
#![allow(dead_code)]

pub mod families;

use tricon::{Graph, Vertex};

/// Edge index of the pair `i < j` among `n` vertices.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, out);
            p.swap(k, i);
        }
    }
    rec(&mut p, 0, &mut out);
    out
}

/// Canonical form by minimising the edge bitmask over all relabelings.
pub struct Canon {
    n: usize,
    /// For each permutation, the image of every pair index.
    maps: Vec<Vec<u8>>,
}

impl Canon {
    pub fn new(n: usize) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        let maps = permutations(n)
            .into_iter()
            .map(|p| {
                let mut m = vec![0u8; pairs];
                for i in 0..n {
                    for j in i + 1..n {
                        let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                        m[pair_index(n, i, j)] = pair_index(n, a, b) as u8;
                    }
                }
                m
            })
            .collect();
        Canon { n, maps }
    }

    pub fn form(&self, mask: u32) -> u32 {
        self.maps
            .iter()
            .map(|m| {
                let mut out = 0u32;
                let mut rest = mask;
                while rest != 0 {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    out |= 1 << m[b];
                }
                out
            })
            .min()
            .unwrap_or(0)
    }

    pub fn mask_of(&self, g: &Graph) -> u32 {
        g.edges().fold(0, |m, (a, b)| m | 1 << pair_index(self.n, a.min(b), a.max(b)))
    }

    pub fn graph(&self, mask: u32) -> Graph {
        let mut es = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if mask >> pair_index(self.n, i, j) & 1 == 1 {
                    es.push((i, j));
                }
            }
        }
        Graph::from_edges(self.n, es)
    }
}

/// Canonical masks of all graphs on `n` vertices up to isomorphism, grown
/// one vertex at a time from the classes on `n - 1` vertices.
pub fn graph_classes(n: usize) -> Vec<u32> {
    if n <= 1 {
        return vec![0];
    }
    let smaller = graph_classes(n - 1);
    let canon = Canon::new(n);
    let mut seen = std::collections::BTreeSet::new();
    for m in smaller {
        // Re-index the (n-1)-vertex mask into n vertices.
        let mut base = 0u32;
        for i in 0..n - 1 {
            for j in i + 1..n - 1 {
                if m >> pair_index(n - 1, i, j) & 1 == 1 {
                    base |= 1 << pair_index(n, i, j);
                }
            }
        }
        for nb in 0u32..1 << (n - 1) {
            let mut mask = base;
            for i in 0..n - 1 {
                if nb >> i & 1 == 1 {
                    mask |= 1 << pair_index(n, i, n - 1);
                }
            }
            seen.insert(canon.form(mask));
        }
    }
    seen.into_iter().collect()
}

/// One ordered terminal tuple `[s1, t1, s2, t2]` per class under swapping
/// the ends of a pair and swapping the pairs.
pub fn terminal_classes(n: usize) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    out.push([a, b, c, d]);
                    out.push([a, c, b, d]);
                    out.push([a, d, b, c]);
                }
            }
        }
    }
    out
}
