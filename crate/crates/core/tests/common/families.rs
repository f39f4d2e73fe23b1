//! Instance families and brute-force predicates for the compaction suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricon::compactor::gadgets::{is_sweet_end, is_well_behaved};
use tricon::oracles::{bf_all_3cuts, bf_is_3_connected};
use tricon::generators::{kk3_triangle_family, planar_triangulation, random_3connected, random_sparse_3connected};
use tricon::{Graph, Vertex};

/// Replaces each vertex by a cycle through its incident edges, so every
/// degree-3 vertex becomes a triangle of degree-3 vertices.
pub fn truncate(g: &Graph) -> Graph {
    let mut h = Graph::new(0);
    let mut port = std::collections::HashMap::new();
    for v in g.vertices() {
        let ids: Vec<Vertex> = g.neighbors(v).iter().map(|_| h.add_vertex()).collect();
        for i in 0..ids.len() {
            h.add_edge(ids[i], ids[(i + 1) % ids.len()]);
        }
        for (k, &w) in g.neighbors(v).iter().enumerate() {
            port.insert((v, w), ids[k]);
        }
    }
    for (a, b) in g.edges() {
        h.add_edge(port[&(a, b)], port[&(b, a)]);
    }
    h
}

/// Replaces a random subset of degree-3 vertices by triangles.
pub fn inflate<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let mut h = g.clone();
    for v in g.vertices() {
        if h.degree(v) != 3 || !rng.gen_bool(0.5) {
            continue;
        }
        let nb = h.neighbors(v).to_vec();
        let mut t = vec![v];
        for &w in &nb[1..] {
            h.remove_edge(v, w);
            let u = h.add_vertex();
            h.add_edge(u, w);
            t.push(u);
        }
        h.add_edge(t[0], t[1]);
        h.add_edge(t[1], t[2]);
        h.add_edge(t[0], t[2]);
    }
    h
}

/// A small 3-connected graph from one of several generators.
pub fn small_3connected<R: Rng>(n: usize, rng: &mut R) -> Graph {
    match rng.gen_range(0..5) {
        0 => random_3connected(n, rng.gen_range(0..n), rng),
        1 => random_sparse_3connected(n, rng),
        2 => planar_triangulation(n.max(4), rng),
        3 => inflate(&random_sparse_3connected((n / 2).max(4), rng), rng),
        _ => truncate(&random_sparse_3connected(4 + n / 6, rng)),
    }
}

/// Hosts for the triangle suite; the K_{k,3} family appears every fifth time.
pub fn triangle_host<R: Rng>(i: usize, rng: &mut R) -> Graph {
    match i % 5 {
        0 => kk3_triangle_family(3 + i / 5 % 15).0,
        1 => truncate(&random_3connected(rng.gen_range(4..=9), rng.gen_range(0..4), rng)),
        2 => truncate(&random_sparse_3connected(rng.gen_range(4..=12), rng)),
        _ => inflate(&random_sparse_3connected(rng.gen_range(4..=20), rng), rng),
    }
}

/// Triangles all of whose vertices have degree three, by brute force.
pub fn degree3_triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let vs: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            for &c in &vs[j + 1..] {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Random subset, in random order, of pairwise disjoint vertex groups.
pub fn disjoint_subset<R: Rng, T: AsRef<[Vertex]> + Clone>(items: &[T], rng: &mut R) -> Vec<T> {
    let mut order: Vec<&T> = items.iter().collect();
    order.shuffle(rng);
    let mut used = std::collections::HashSet::new();
    let mut out = Vec::new();
    for t in order {
        if t.as_ref().iter().all(|v| !used.contains(v)) && rng.gen_bool(0.8) {
            used.extend(t.as_ref().iter().copied());
            out.push(t.clone());
        }
    }
    out
}

/// Identifies each group into its smallest vertex, written independently of
/// the library's contraction.
pub fn contract(g: &Graph, groups: &[Vec<Vertex>]) -> Graph {
    let mut rep: Vec<Vertex> = (0..g.id_bound()).collect();
    for grp in groups {
        let r = *grp.iter().min().unwrap();
        for &v in grp {
            rep[v] = r;
        }
    }
    let mut h = Graph::new(g.id_bound());
    for v in 0..g.id_bound() {
        if !g.contains(v) || rep[v] != v {
            h.remove_vertex(v);
        }
    }
    for (a, b) in g.edges() {
        if rep[a] != rep[b] {
            h.add_edge(rep[a], rep[b]);
        }
    }
    h
}

fn components_without(g: &Graph, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut seen: Vec<bool> = (0..g.id_bound()).map(|v| removed.contains(&v)).collect();
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

/// Sweet end by the definition: the other neighbours of `x` form a clique,
/// or induce a path on three vertices whose middle sees nothing outside
/// `N(x)` besides `x`.
pub fn bf_sweet_end(g: &Graph, x: Vertex, y: Vertex) -> bool {
    let rest: Vec<Vertex> = g.neighbors(x).iter().copied().filter(|&w| w != y).collect();
    let adj = |a: Vertex, b: Vertex| g.has_edge(a, b);
    let clique = rest.iter().enumerate().all(|(i, &a)| rest[i + 1..].iter().all(|&b| adj(a, b)));
    if clique {
        return true;
    }
    if rest.len() != 3 {
        return false;
    }
    for mid in 0..3 {
        let (z, p, q) = (rest[mid], rest[(mid + 1) % 3], rest[(mid + 2) % 3]);
        if adj(z, p) && adj(z, q) && !adj(p, q) {
            return g.neighbors(z).iter().all(|&w| w == x || g.has_edge(x, w));
        }
    }
    false
}

/// Well-behaved by the definition, enumerating every clique of at most two
/// vertices outside `cut ∪ side` and every vertex of `cut ∪ side`.
pub fn bf_well_behaved(g: &Graph, (a, b): (Vertex, Vertex), cut: &[Vertex], side: &[Vertex]) -> bool {
    let inside = |v: &Vertex| cut.contains(v) || side.contains(v);
    let outer: Vec<Vertex> = g.vertices().filter(|v| !inside(v)).collect();
    let mut cliques: Vec<Vec<Vertex>> = vec![vec![]];
    for (i, &p) in outer.iter().enumerate() {
        cliques.push(vec![p]);
        for &q in &outer[i + 1..] {
            if g.has_edge(p, q) {
                cliques.push(vec![p, q]);
            }
        }
    }
    for z in cliques {
        let mut removed = vec![a, b];
        removed.extend(&z);
        let comps = components_without(g, &removed);
        let live: Vec<Vertex> = cut.iter().copied().filter(|v| !removed.contains(v)).collect();
        if !comps.iter().any(|c| live.iter().all(|v| c.contains(v))) {
            return false;
        }
    }
    cut.iter().chain(side).all(|&z| components_without(g, &[a, b, z]).len() == 1)
}

/// Disjoint degree-3 triangle sets contracted and checked by brute force.
/// Returns the number of checked instances and of those that collapse to
/// at most three vertices (complete, but too small to count as 3-connected).
pub fn triangle_suite(seed: u64, want: usize) -> Result<(usize, usize), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut checked, mut degenerate) = (0, 0);
    let mut i = 0;
    while checked < want {
        let g = triangle_host(i, &mut rng);
        i += 1;
        if !bf_is_3_connected(&g).unwrap() {
            return Err(format!("host not 3-connected: {:?}", g.edge_list()));
        }
        let pick = disjoint_subset(&degree3_triangles(&g), &mut rng);
        if pick.is_empty() {
            continue;
        }
        let groups: Vec<Vec<Vertex>> = pick.iter().map(|t| t.to_vec()).collect();
        match judge(&contract(&g, &groups)) {
            Verdict::ThreeConnected => checked += 1,
            Verdict::Degenerate => degenerate += 1,
            Verdict::Broken => return Err(format!("{:?} triangles {pick:?}", g.edge_list())),
        }
    }
    Ok((checked, degenerate))
}

/// Random matchings of sweet edges, each edge's sweetness also compared
/// with the library predicate.
pub fn sweet_suite(seed: u64, want: usize) -> Result<(usize, usize), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut checked, mut degenerate) = (0, 0);
    while checked < want {
        let g = small_3connected(rng.gen_range(6..=16), &mut rng);
        if g.n() < 6 || g.n() > 60 {
            continue;
        }
        let mut sweet = Vec::new();
        for (a, b) in g.edges() {
            for (x, y) in [(a, b), (b, a)] {
                if is_sweet_end(&g, x, y) != bf_sweet_end(&g, x, y) {
                    return Err(format!("predicates disagree on end {x} of {x}{y} in {:?}", g.edge_list()));
                }
            }
            if bf_sweet_end(&g, a, b) || bf_sweet_end(&g, b, a) {
                sweet.push(vec![a, b]);
            }
        }
        let pick = disjoint_subset(&sweet, &mut rng);
        if pick.is_empty() {
            continue;
        }
        match judge(&contract(&g, &pick)) {
            Verdict::ThreeConnected => checked += 1,
            Verdict::Degenerate => degenerate += 1,
            Verdict::Broken => return Err(format!("{:?} matching {pick:?}", g.edge_list())),
        }
    }
    Ok((checked, degenerate))
}

/// Every edge inside every component cut off by a 3-cut is classified by
/// brute force (and by the library); random families of well-behaved
/// edges with sides avoiding the other cuts and sides are contracted.
pub fn well_behaved_suite(seed: u64, want: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut hosts = 0;
    while checked < want {
        hosts += 1;
        if hosts > 50 * want {
            return Err(format!("only {checked} instances in {hosts} hosts"));
        }
        let g = small_3connected(rng.gen_range(7..=14), &mut rng);
        if g.n() > 20 {
            continue;
        }
        let mut found: Vec<((Vertex, Vertex), Vec<Vertex>, Vec<Vertex>)> = Vec::new();
        for (x, u) in bf_all_3cuts(&g, &[]).unwrap() {
            for (a, b) in g.edges() {
                if !u.contains(&a) || !u.contains(&b) {
                    continue;
                }
                let wb = bf_well_behaved(&g, (a, b), &x, &u);
                if is_well_behaved(&g, (a, b), &x, &u) != wb {
                    return Err(format!("predicates disagree on {a}{b} for {x:?} in {:?}", g.edge_list()));
                }
                if wb {
                    found.push(((a, b), x.to_vec(), u.clone()));
                }
            }
        }
        if found.is_empty() {
            continue;
        }
        let mut pick: Vec<&((Vertex, Vertex), Vec<Vertex>, Vec<Vertex>)> = Vec::new();
        for _ in 0..found.len() {
            let f = &found[rng.gen_range(0..found.len())];
            let ok = pick.iter().all(|p| {
                f.2.iter().all(|v| !p.1.contains(v) && !p.2.contains(v))
                    && p.2.iter().all(|v| !f.1.contains(v) && !f.2.contains(v))
            });
            if ok {
                pick.push(f);
            }
        }
        let groups: Vec<Vec<Vertex>> = pick.iter().map(|p| vec![p.0 .0, p.0 .1]).collect();
        if !bf_is_3_connected(&contract(&g, &groups)).unwrap() {
            return Err(format!("{:?} edges {groups:?}", g.edge_list()));
        }
        checked += 1;
    }
    Ok(checked)
}

enum Verdict {
    ThreeConnected,
    Degenerate,
    Broken,
}

fn judge(h: &Graph) -> Verdict {
    if h.n() <= 3 && h.m() == h.n() * h.n().saturating_sub(1) / 2 {
        Verdict::Degenerate
    } else if bf_is_3_connected(h).unwrap() {
        Verdict::ThreeConnected
    } else {
        Verdict::Broken
    }
}
