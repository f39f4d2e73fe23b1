//! Brute-force reference answers for small graphs. These deliberately share
//! no code with the algorithms they check beyond the `Graph` type.

use std::time::{Duration, Instant};

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("instance exceeds the oracle budget: {0}")]
    BudgetExceeded(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub time_cap: Option<Duration>,
}

impl OracleBudget {
    pub fn paths() -> Self {
        OracleBudget { max_vertices: 14, max_edges: 91, time_cap: None }
    }

    pub fn deletion() -> Self {
        OracleBudget { max_vertices: 60, max_edges: 1770, time_cap: None }
    }

    /// Room for the graphs of a compaction run; cubic in `n`, so slow.
    pub fn compaction() -> Self {
        OracleBudget { max_vertices: 200, max_edges: 4000, time_cap: None }
    }

    fn check(&self, g: &Graph) -> Result<(), OracleError> {
        if g.n() > self.max_vertices || g.m() > self.max_edges {
            return Err(OracleError::BudgetExceeded(format!(
                "n={} m={} (limits {} / {})",
                g.n(),
                g.m(),
                self.max_vertices,
                self.max_edges
            )));
        }
        Ok(())
    }
}

/// Connected components of `g` minus `removed`, as vertex lists.
fn components_without(g: &Graph, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut gone = vec![false; g.id_bound()];
    for &r in removed {
        gone[r] = true;
    }
    let mut comps = Vec::new();
    for s in g.vertices() {
        if gone[s] {
            continue;
        }
        let mut comp = vec![s];
        gone[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !gone[w] {
                    gone[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn connected_without(g: &Graph, removed: &[Vertex], a: Vertex, b: Vertex) -> bool {
    components_without(g, removed).iter().any(|c| c.contains(&a) && c.contains(&b))
}

/// Exact two disjoint paths by enumerating induced `s1`–`t1` paths and
/// searching for an `s2`–`t2` path in what is left.
pub fn bf_two_disjoint_paths(
    g: &Graph,
    s1: Vertex,
    t1: Vertex,
    s2: Vertex,
    t2: Vertex,
) -> Result<Option<(Vec<Vertex>, Vec<Vertex>)>, OracleError> {
    bf_two_disjoint_paths_with(g, [s1, t1, s2, t2], OracleBudget::paths())
}

pub fn bf_two_disjoint_paths_with(
    g: &Graph,
    terminals: [Vertex; 4],
    budget: OracleBudget,
) -> Result<Option<(Vec<Vertex>, Vec<Vertex>)>, OracleError> {
    budget.check(g)?;
    let [s1, t1, s2, t2] = terminals;
    let started = Instant::now();
    let mut on_path = vec![false; g.id_bound()];
    on_path[s1] = true;
    let mut path = vec![s1];
    // Depth-first over induced paths: a vertex may join only if it has no
    // neighbour on the path other than the current end.
    let mut iters: Vec<usize> = vec![0];
    while let Some(&i) = iters.last() {
        if let Some(cap) = budget.time_cap {
            if started.elapsed() > cap {
                return Err(OracleError::BudgetExceeded("time cap".into()));
            }
        }
        let end = *path.last().unwrap();
        if end == t1 {
            if let Some(p2) = route_avoiding(g, s2, t2, &on_path) {
                return Ok(Some((path.clone(), p2)));
            }
            iters.pop();
            on_path[path.pop().unwrap()] = false;
            continue;
        }
        let nbrs = g.neighbors(end);
        if i >= nbrs.len() {
            iters.pop();
            on_path[path.pop().unwrap()] = false;
            continue;
        }
        *iters.last_mut().unwrap() += 1;
        let w = nbrs[i];
        if on_path[w] || w == s2 || w == t2 {
            continue;
        }
        let chord = g.neighbors(w).iter().any(|&x| x != end && on_path[x]);
        if chord {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        iters.push(0);
    }
    Ok(None)
}

fn route_avoiding(g: &Graph, s: Vertex, t: Vertex, blocked: &[bool]) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; g.id_bound()];
    prev[s] = s;
    let mut queue = vec![s];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        if x == t {
            let mut p = vec![t];
            let mut y = t;
            while y != s {
                y = prev[y];
                p.push(y);
            }
            p.reverse();
            return Some(p);
        }
        for &w in g.neighbors(x) {
            if prev[w] == usize::MAX && !blocked[w] {
                prev[w] = x;
                queue.push(w);
            }
        }
    }
    None
}

/// At least four vertices and connected after deleting any two vertices.
pub fn bf_is_3_connected(g: &Graph) -> Result<bool, OracleError> {
    bf_is_3_connected_with(g, OracleBudget::deletion())
}

pub fn bf_is_3_connected_with(g: &Graph, budget: OracleBudget) -> Result<bool, OracleError> {
    budget.check(g)?;
    if g.n() < 4 {
        return Ok(false);
    }
    if components_without(g, &[]).len() != 1 {
        return Ok(false);
    }
    let vs = g.vertex_list();
    for i in 0..vs.len() {
        if components_without(g, &[vs[i]]).len() != 1 {
            return Ok(false);
        }
        for j in i + 1..vs.len() {
            if components_without(g, &[vs[i], vs[j]]).len() != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// At least `k + 1` vertices and connected after deleting any `k - 1` vertices.
pub fn bf_is_k_connected(g: &Graph, k: usize) -> Result<bool, OracleError> {
    OracleBudget::deletion().check(g)?;
    if g.n() <= k {
        return Ok(false);
    }
    let vs = g.vertex_list();
    let mut ok = true;
    for_each_subset_upto(&vs, k.saturating_sub(1), &mut |s| {
        if components_without(g, s).len() != 1 {
            ok = false;
        }
        ok
    });
    Ok(ok)
}

fn for_each_subset_upto(items: &[Vertex], max: usize, f: &mut dyn FnMut(&[Vertex]) -> bool) {
    fn rec(items: &[Vertex], start: usize, max: usize, cur: &mut Vec<Vertex>, f: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        if !f(cur) {
            return false;
        }
        if cur.len() == max {
            return true;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            let go = rec(items, i + 1, max, cur, f);
            cur.pop();
            if !go {
                return false;
            }
        }
        true
    }
    rec(items, 0, max, &mut Vec::new(), f);
}

/// Every 3-set `X` whose removal disconnects `g`, paired with each
/// component of `g - X` that avoids `c`.
pub fn bf_all_3cuts(g: &Graph, c: &[Vertex]) -> Result<Vec<([Vertex; 3], Vec<Vertex>)>, OracleError> {
    OracleBudget::deletion().check(g)?;
    let vs = g.vertex_list();
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            for k in j + 1..vs.len() {
                let x = [vs[i], vs[j], vs[k]];
                let comps = components_without(g, &x);
                if comps.len() < 2 {
                    continue;
                }
                for comp in comps {
                    if !comp.iter().any(|v| c.contains(v)) {
                        out.push((x, comp));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Pairs that separate `g` and are joined by three internally disjoint
/// paths, decided through Menger: no set of at most two other vertices
/// separates them (for adjacent pairs the edge is one path, so one vertex
/// must not separate them in `g` minus that edge).
pub fn bf_strong_2cuts(g: &Graph) -> Result<Vec<(Vertex, Vertex)>, OracleError> {
    OracleBudget::deletion().check(g)?;
    let vs = g.vertex_list();
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let (x, y) = (vs[i], vs[j]);
            if components_without(g, &[x, y]).len() < 2 {
                continue;
            }
            if bf_local_connectivity_at_least(g, x, y, 3) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// Whether `x` and `y` are joined by `k` internally disjoint paths,
/// decided by exhaustive separator search.
pub fn bf_local_connectivity_at_least(g: &Graph, x: Vertex, y: Vertex, k: usize) -> bool {
    let (h, need) = if g.has_edge(x, y) {
        (g.without_edges(&[(x, y)]), k.saturating_sub(1))
    } else {
        (g.clone(), k)
    };
    if need == 0 {
        return true;
    }
    let others: Vec<Vertex> = h.vertices().filter(|&v| v != x && v != y).collect();
    let mut ok = true;
    for_each_subset_upto(&others, need - 1, &mut |s| {
        if !connected_without(&h, s, x, y) {
            ok = false;
        }
        ok
    });
    ok
}

/// Strong 2-cut tree by the recursive definition: split on any strong
/// 2-cut, add the cut edge to each side and recurse. Returns the cut pairs
/// and the vertex sets of the pieces, both sorted.
pub fn bf_strong_2cut_tree(g: &Graph) -> Result<(Vec<(Vertex, Vertex)>, Vec<Vec<Vertex>>), OracleError> {
    OracleBudget::deletion().check(g)?;
    let mut cuts = Vec::new();
    let mut pieces = Vec::new();
    let mut work = vec![g.clone()];
    while let Some(j) = work.pop() {
        let strong = bf_strong_2cuts(&j)?;
        let Some(&(x, y)) = strong.first() else {
            pieces.push(j.vertex_list());
            continue;
        };
        cuts.push((x, y));
        for comp in components_without(&j, &[x, y]) {
            let mut vs = comp;
            vs.push(x);
            vs.push(y);
            let mut piece = j.induced(&vs);
            piece.add_edge(x, y);
            work.push(piece);
        }
    }
    cuts.sort_unstable();
    cuts.dedup();
    pieces.sort();
    Ok((cuts, pieces))
}

/// Maximum number of internally disjoint `x`–`y` paths by trying all
/// families of simple paths (tiny graphs only).
pub fn bf_max_disjoint_paths(g: &Graph, x: Vertex, y: Vertex) -> Result<usize, OracleError> {
    OracleBudget { max_vertices: 9, max_edges: 36, time_cap: None }.check(g)?;
    let mut all: Vec<Vec<Vertex>> = Vec::new();
    let mut path = vec![x];
    let mut seen = vec![false; g.id_bound()];
    seen[x] = true;
    fn dfs(g: &Graph, y: Vertex, path: &mut Vec<Vertex>, seen: &mut [bool], all: &mut Vec<Vec<Vertex>>) {
        let end = *path.last().unwrap();
        for &w in g.neighbors(end) {
            if w == y {
                let mut p = path.clone();
                p.push(y);
                all.push(p);
            } else if !seen[w] {
                seen[w] = true;
                path.push(w);
                dfs(g, y, path, seen, all);
                path.pop();
                seen[w] = false;
            }
        }
    }
    dfs(g, y, &mut path, &mut seen, &mut all);
    fn best(all: &[Vec<Vertex>], start: usize, used: &mut Vec<bool>) -> usize {
        let mut top = 0;
        for i in start..all.len() {
            let inner = &all[i][1..all[i].len() - 1];
            if inner.iter().all(|&v| !used[v]) {
                inner.iter().for_each(|&v| used[v] = true);
                top = top.max(1 + best(all, i + 1, used));
                inner.iter().for_each(|&v| used[v] = false);
            }
        }
        top
    }
    Ok(best(&all, 0, &mut vec![false; g.id_bound()]))
}

/// Vertices whose deletion increases the number of components.
pub fn bf_cut_vertices(g: &Graph) -> Vec<Vertex> {
    let base = components_without(g, &[]).len();
    g.vertices()
        .filter(|&v| components_without(g, &[v]).len() > base)
        .collect()
}

/// Size of a smallest vertex set separating non-adjacent `x` and `y`.
pub fn bf_min_separator(g: &Graph, x: Vertex, y: Vertex) -> Option<usize> {
    if g.has_edge(x, y) {
        return None;
    }
    let others: Vec<Vertex> = g.vertices().filter(|&v| v != x && v != y).collect();
    for size in 0..=others.len() {
        let mut found = false;
        for_each_subset_upto(&others, size, &mut |s| {
            if s.len() == size && !connected_without(g, s, x, y) {
                found = true;
            }
            !found
        });
        if found {
            return Some(size);
        }
    }
    Some(others.len())
}
