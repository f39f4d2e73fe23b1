//! Seeded graph families used by tests, benchmarks and the CLI.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Hub 0 joined to the rim cycle 1..=k.
pub fn wheel(k: usize) -> Graph {
    let mut g = Graph::new(k + 1);
    for i in 0..k {
        g.add_edge(0, 1 + i);
        g.add_edge(1 + i, 1 + (i + 1) % k);
    }
    g
}

/// Two triangles 0,1,2 and 3,4,5 joined by 0-3, 1-4, 2-5.
pub fn prism() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

/// K6 minus the perfect matching {0,3}, {1,4}, {2,5}.
pub fn octahedron() -> Graph {
    let mut g = complete(6);
    for i in 0..3 {
        g.remove_edge(i, i + 3);
    }
    g
}

/// G(n, p).
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random graph with exactly `m` edges.
pub fn gnm<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs > 4_000_000 && m <= pairs / 4 {
        // Too many pairs to list; sample with rejection instead.
        let mut seen = std::collections::HashSet::with_capacity(m);
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && seen.insert((u.min(v), u.max(v))) {
                edges.push((u.min(v), u.max(v)));
            }
        }
        return Graph::from_edges(n, edges);
    }
    let mut all: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    all.truncate(m);
    Graph::from_edges(n, all)
}

/// Random 2-connected graph grown by ears from a cycle, then sprinkled
/// with extra chords.
pub fn random_2connected<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Graph {
    assert!(n >= 3);
    let start = rng.gen_range(3..=n);
    let mut g = cycle(start);
    for _ in start..n {
        g.add_vertex();
    }
    let mut next = start;
    while next < n {
        let len = rng.gen_range(1..=(n - next));
        let a = rng.gen_range(0..next);
        let mut b = rng.gen_range(0..next);
        while b == a {
            b = rng.gen_range(0..next);
        }
        let mut prev = a;
        for v in next..next + len {
            g.add_edge(prev, v);
            prev = v;
        }
        g.add_edge(prev, b);
        next += len;
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            g.add_edge(a, b);
        }
    }
    g
}

/// Random 3-connected graph: a wheel grown by vertices of degree at least
/// three, then extra edges. Both steps preserve 3-connectivity.
pub fn random_3connected<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Graph {
    assert!(n >= 4);
    let k = rng.gen_range(3..=n - 1).min(n - 1);
    let mut g = wheel(k);
    while g.n() < n {
        let v = g.add_vertex();
        let deg = rng.gen_range(3..=4.min(v));
        let mut pool: Vec<Vertex> = (0..v).collect();
        pool.shuffle(rng);
        for &w in &pool[..deg] {
            g.add_edge(v, w);
        }
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            g.add_edge(a, b);
        }
    }
    g
}

/// Random 3-connected graph by splitting vertices of a wheel: each step
/// picks a vertex of degree at least four, splits its neighbourhood into two
/// parts of size at least two and joins the halves. Keeps degrees low.
pub fn random_sparse_3connected<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4);
    let mut g = wheel(3.max(n.min(8) - 1));
    while g.n() < n {
        let cands: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 4).collect();
        if cands.is_empty() {
            let v = g.add_vertex();
            let mut pool: Vec<Vertex> = g.vertices().filter(|&w| w != v).collect();
            pool.shuffle(rng);
            for &w in &pool[..3] {
                g.add_edge(v, w);
            }
            continue;
        }
        let v = *cands.choose(rng).unwrap();
        let mut nb = g.neighbors(v).to_vec();
        nb.shuffle(rng);
        let cut = rng.gen_range(2..=nb.len() - 2);
        let u = g.add_vertex();
        for &w in &nb[cut..] {
            g.remove_edge(v, w);
            g.add_edge(u, w);
        }
        g.add_edge(u, v);
    }
    g
}

/// Planar triangulation: stacked insertions into random faces followed by
/// random edge flips that keep degrees at least three.
pub fn planar_triangulation<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4);
    let mut g = complete(4);
    let mut faces: Vec<[Vertex; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    while g.n() < n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        let v = g.add_vertex();
        g.add_edge(v, a);
        g.add_edge(v, b);
        g.add_edge(v, c);
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([a, c, v]);
    }
    // Flip edges: an edge ab with opposite vertices c, d becomes cd when cd is absent.
    let key = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
    let mut owner: HashMap<(Vertex, Vertex), [usize; 2]> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for k in 0..3 {
            let e = key(f[k], f[(k + 1) % 3]);
            owner.entry(e).or_insert([usize::MAX; 2]);
            let slot = owner.get_mut(&e).unwrap();
            if slot[0] == usize::MAX {
                slot[0] = i;
            } else {
                slot[1] = i;
            }
        }
    }
    for _ in 0..n {
        let i = rng.gen_range(0..faces.len());
        let f = faces[i];
        let k = rng.gen_range(0..3);
        let (a, b, c) = (f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
        let pair = owner[&key(a, b)];
        let j = if pair[0] == i { pair[1] } else { pair[0] };
        let d = *faces[j].iter().find(|&&x| x != a && x != b).unwrap();
        if g.has_edge(c, d) || g.degree(a) <= 3 || g.degree(b) <= 3 {
            continue;
        }
        g.remove_edge(a, b);
        g.add_edge(c, d);
        owner.remove(&key(a, b));
        faces[i] = [a, c, d];
        faces[j] = [b, c, d];
        // Edge bc moves from face i to j, edge ad from j to i.
        for (e, from, to) in [(key(b, c), i, j), (key(a, d), j, i)] {
            let slot = owner.get_mut(&e).unwrap();
            for s in slot.iter_mut() {
                if *s == from {
                    *s = to;
                }
            }
        }
        owner.insert(key(c, d), [i, j]);
    }
    g
}

/// `K_{k,3}` with every vertex of the larger side replaced by a triangle,
/// each triangle vertex taking one of the three edges.
pub fn kk3_triangle_family(k: usize) -> (Graph, Vec<[Vertex; 3]>) {
    let mut g = Graph::new(3 + 3 * k);
    let mut tris = Vec::new();
    for i in 0..k {
        let t = [3 + 3 * i, 4 + 3 * i, 5 + 3 * i];
        g.add_edge(t[0], t[1]);
        g.add_edge(t[1], t[2]);
        g.add_edge(t[0], t[2]);
        for j in 0..3 {
            g.add_edge(t[j], j);
        }
        tris.push(t);
    }
    (g, tris)
}

/// A 3-connected core with many degree-three vertices attached to random
/// triples of core vertices (a stable set of degree-three vertices).
pub fn bipartite_attachment<R: Rng>(core: usize, attached: usize, rng: &mut R) -> Graph {
    let mut g = random_3connected(core.max(4), core, rng);
    for _ in 0..attached {
        let v = g.add_vertex();
        let mut pool: Vec<Vertex> = (0..core.max(4)).collect();
        pool.shuffle(rng);
        for &w in &pool[..3] {
            g.add_edge(v, w);
        }
    }
    g
}

/// Triangle 0,1,2 with `t` further triangles glued onto its edges by
/// 2-cuts, giving a 2-connected host whose special tree has `t` leaves.
pub fn star_of_triangles(t: usize) -> Graph {
    let mut g = complete(3);
    for i in 0..t {
        let v = g.add_vertex();
        let (a, b) = [(0, 1), (1, 2), (0, 2)][i % 3];
        // Pair each glued vertex through its own 2-cut: a path a-v-b forms
        // a triangle with the virtual edge ab.
        g.add_edge(a, v);
        g.add_edge(v, b);
    }
    g
}

/// Chain of `k` K4 blocks, consecutive blocks sharing a 2-cut pair and
/// joined along a ladder. Its strong tree is a long path.
pub fn ladder_chain(k: usize) -> Graph {
    // Rungs r_i = (2i, 2i+1). Between rung i and i+1 sits a K4 formed by
    // the four rung vertices.
    let mut g = Graph::new(2 * (k + 1));
    for i in 0..=k {
        g.add_edge(2 * i, 2 * i + 1);
    }
    for i in 0..k {
        let (a, b, c, d) = (2 * i, 2 * i + 1, 2 * i + 2, 2 * i + 3);
        g.add_edge(a, c);
        g.add_edge(b, d);
        g.add_edge(a, d);
        g.add_edge(b, c);
    }
    g
}

/// An instance of the two disjoint paths problem with no solution: a planar
/// triangulation minus one vertex, terminals in order s1, s2, t1, t2 around
/// the hole, and `gadgets` random connected pieces of up to `gadget_size`
/// vertices hung on triangular faces. Returns the graph and
/// `[s1, t1, s2, t2]`.
pub fn obstructed_drp<R: Rng>(n: usize, gadgets: usize, gadget_size: usize, rng: &mut R) -> (Graph, [Vertex; 4]) {
    let tri = planar_triangulation(n.max(5) + 1, rng);
    let emb = crate::connectivity::planarity::embed(&tri).expect("triangulations are planar");
    let hole = tri.vertices().max_by_key(|&v| (tri.degree(v), std::cmp::Reverse(v))).unwrap();
    let link = &emb.rotation[&hole];
    let mut pos: Vec<usize> = (0..link.len()).collect();
    pos.shuffle(rng);
    let mut pick = pos[..4].to_vec();
    pick.sort_unstable();
    let [s1, s2, t1, t2] = [link[pick[0]], link[pick[1]], link[pick[2]], link[pick[3]]];
    let faces: Vec<Vec<Vertex>> = emb.faces.iter().filter(|f| f.len() == 3 && !f.contains(&hole)).cloned().collect();
    let mut g = tri.clone();
    g.remove_vertex(hole);
    for _ in 0..gadgets {
        let face = &faces[rng.gen_range(0..faces.len())];
        let k = rng.gen_range(1..=gadget_size.max(1));
        let first = g.id_bound();
        let vs: Vec<Vertex> = (0..k).map(|_| g.add_vertex()).collect();
        for i in 1..k {
            g.add_edge(vs[rng.gen_range(0..i)], vs[i]);
            for j in 0..i - 1 {
                if rng.gen_bool(0.5) {
                    g.add_edge(vs[j], vs[i]);
                }
            }
        }
        for &x in face {
            g.add_edge(x, first + rng.gen_range(0..k));
            for &v in &vs {
                if rng.gen_bool(0.3) {
                    g.add_edge(x, v);
                }
            }
        }
    }
    (g, [s1, t1, s2, t2])
}

/// Relabels `g` by a random permutation; returns the new graph and the
/// permutation (old id to new id).
pub fn shuffled<R: Rng>(g: &Graph, rng: &mut R) -> (Graph, Vec<Vertex>) {
    let (h, _) = g.compacted();
    let mut perm: Vec<Vertex> = (0..h.n()).collect();
    perm.shuffle(rng);
    let out = Graph::from_edges(h.n(), h.edges().map(|(a, b)| (perm[a], perm[b])));
    (out, perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::bf_is_3_connected;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn families_are_3_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 4..20 {
            assert!(bf_is_3_connected(&random_3connected(n, 3, &mut rng)).unwrap());
            assert!(bf_is_3_connected(&random_sparse_3connected(n, &mut rng)).unwrap());
            assert!(bf_is_3_connected(&planar_triangulation(n, &mut rng)).unwrap());
        }
        assert!(bf_is_3_connected(&kk3_triangle_family(4).0).unwrap());
        assert!(bf_is_3_connected(&octahedron()).unwrap());
        assert!(bf_is_3_connected(&bipartite_attachment(6, 10, &mut rng)).unwrap());
    }

    #[test]
    fn triangulation_edge_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 4..40 {
            let g = planar_triangulation(n, &mut rng);
            assert_eq!(g.m(), 3 * n - 6);
        }
    }

    #[test]
    fn seeded_is_deterministic() {
        let a = random_2connected(12, 4, &mut ChaCha8Rng::seed_from_u64(3));
        let b = random_2connected(12, 4, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(a, b);
    }
}
