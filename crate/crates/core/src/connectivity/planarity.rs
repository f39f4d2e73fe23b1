//! Left-right planarity test with a combinatorial embedding, or a
//! Kuratowski subdivision when the graph is not planar.
//!
//! The test follows the conflict-pair formulation of the left-right
//! criterion; all three depth-first passes are iterative.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;

/// Rotation system (clockwise neighbour order per vertex) with its faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarEmbedding {
    pub rotation: BTreeMap<Vertex, Vec<Vertex>>,
    /// Each face as the cyclic sequence of vertices met along its boundary.
    pub faces: Vec<Vec<Vertex>>,
    pub outer_face: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch: Vec<Vertex>,
    pub paths: Vec<Vec<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Planarity {
    Planar(PlanarEmbedding),
    NonPlanar(KuratowskiWitness),
}

impl PlanarEmbedding {
    /// Builds faces from a rotation system. The face after dart `(v, w)` is
    /// continued by `(w, u)` where `u` precedes `v` clockwise around `w`.
    pub fn from_rotation(rotation: BTreeMap<Vertex, Vec<Vertex>>) -> Option<Self> {
        let faces = trace_faces(&rotation)?;
        let outer_face = (0..faces.len()).max_by_key(|&i| (faces[i].len(), std::cmp::Reverse(i))).unwrap_or(0);
        Some(PlanarEmbedding { rotation, faces, outer_face })
    }

    /// The rotation lists exactly the neighbours of each vertex, the stored
    /// faces are the traced ones, and Euler's formula holds per component.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        for v in g.vertices() {
            let mut r = self.rotation.get(&v).cloned().unwrap_or_default();
            r.sort_unstable();
            if r != g.neighbors(v) {
                return Err(format!("rotation at {v} is not its neighbourhood"));
            }
        }
        if self.rotation.keys().any(|&v| !g.contains(v)) {
            return Err("rotation mentions a missing vertex".into());
        }
        let faces = trace_faces(&self.rotation).ok_or("rotation is not symmetric")?;
        let canon = |fs: &[Vec<Vertex>]| {
            let mut out: Vec<Vec<Vertex>> = fs.iter().map(|f| rotate_min(f)).collect();
            out.sort();
            out
        };
        if canon(&faces) != canon(&self.faces) {
            return Err("face list does not match the rotation".into());
        }
        if !self.faces.is_empty() && self.outer_face >= self.faces.len() {
            return Err("outer face out of range".into());
        }
        // Euler per component with at least one edge.
        let comps = crate::decomposition::blocks::connected_components(g);
        let mut comp_of = vec![usize::MAX; g.id_bound()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut face_count = vec![0i64; comps.len()];
        for f in &faces {
            face_count[comp_of[f[0]]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            if c.len() == 1 {
                continue;
            }
            let m: i64 = c.iter().map(|&v| g.degree(v) as i64).sum::<i64>() / 2;
            if c.len() as i64 - m + face_count[i] != 2 {
                return Err(format!("Euler check fails on component {i}"));
            }
        }
        Ok(())
    }

    /// Whether `t` (three vertices) bounds a face.
    pub fn has_triangular_face(&self, t: [Vertex; 3]) -> bool {
        let mut want = t.to_vec();
        want.sort_unstable();
        self.faces.iter().any(|f| {
            let mut s = f.clone();
            s.sort_unstable();
            s == want
        })
    }
}

fn rotate_min(f: &[Vertex]) -> Vec<Vertex> {
    let i = (0..f.len()).min_by_key(|&i| f[i]).unwrap_or(0);
    f[i..].iter().chain(f[..i].iter()).copied().collect()
}

fn trace_faces(rotation: &BTreeMap<Vertex, Vec<Vertex>>) -> Option<Vec<Vec<Vertex>>> {
    // Dart ids: position within the source's rotation.
    let mut base = BTreeMap::new();
    let mut total = 0;
    for (&v, r) in rotation {
        base.insert(v, total);
        total += r.len();
    }
    let pos = |v: Vertex, w: Vertex| -> Option<usize> { rotation.get(&v)?.iter().position(|&x| x == w) };
    let mut used = vec![false; total];
    let mut faces = Vec::new();
    for (&v, r) in rotation {
        for (i, &w) in r.iter().enumerate() {
            if used[base[&v] + i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut ai) = (v, i);
            loop {
                let id = base[&a] + ai;
                if used[id] {
                    break;
                }
                used[id] = true;
                face.push(a);
                let b = rotation[&a][ai];
                let rb = rotation.get(&b)?;
                let back = pos(b, a)?;
                let next = (back + rb.len() - 1) % rb.len();
                a = b;
                ai = next;
            }
            if a != v || ai != i {
                return None;
            }
            let _ = w;
            faces.push(face);
        }
    }
    Some(faces)
}

#[derive(Clone, Copy, Debug)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl Pair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr {
    adj: Vec<Vec<(usize, usize)>>,
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    roots: Vec<usize>,
    out: Vec<Vec<usize>>,
    refs: Vec<usize>,
    side: Vec<i64>,
    lowpt_edge: Vec<usize>,
    stack: Vec<Pair>,
    stack_bottom: Vec<usize>,
    next_id: usize,
}

impl Lr {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        for (e, &(a, b)) in edges.iter().enumerate() {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        Lr {
            adj,
            src: vec![NONE; m],
            dst: vec![NONE; m],
            oriented: vec![false; m],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            roots: Vec::new(),
            out: vec![Vec::new(); n],
            refs: vec![NONE; m],
            side: vec![1; m],
            lowpt_edge: vec![NONE; m],
            stack: Vec::new(),
            stack_bottom: vec![NONE; m],
            next_id: 0,
        }
    }

    fn finish_edge(&mut self, v: usize, vw: usize) {
        self.nesting[vw] = 2 * self.lowpt[vw] as i64 + i64::from(self.lowpt2[vw] < self.height[v]);
        let e = self.parent_edge[v];
        if e == NONE {
            return;
        }
        if self.lowpt[vw] < self.lowpt[e] {
            self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
            self.lowpt[e] = self.lowpt[vw];
        } else if self.lowpt[vw] > self.lowpt[e] {
            self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
        } else {
            self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
        }
    }

    fn orient(&mut self, root: usize) {
        let mut stack = vec![(root, 0usize)];
        while let Some(&(v, i)) = stack.last() {
            if i < self.adj[v].len() {
                stack.last_mut().unwrap().1 += 1;
                let (w, e) = self.adj[v][i];
                if self.oriented[e] {
                    continue;
                }
                self.oriented[e] = true;
                self.src[e] = v;
                self.dst[e] = w;
                self.out[v].push(e);
                self.lowpt[e] = self.height[v];
                self.lowpt2[e] = self.height[v];
                if self.height[w] == NONE {
                    self.parent_edge[w] = e;
                    self.height[w] = self.height[v] + 1;
                    stack.push((w, 0));
                    continue;
                }
                self.lowpt[e] = self.height[w];
                self.finish_edge(v, e);
            } else {
                stack.pop();
                let pe = self.parent_edge[v];
                if pe != NONE {
                    self.finish_edge(self.src[pe], pe);
                }
            }
        }
    }

    fn top_id(&self) -> usize {
        self.stack.last().map_or(NONE, |p| p.id)
    }

    fn conflicting(&self, i: Interval, b: usize) -> bool {
        !i.empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &Pair) -> usize {
        if p.left.empty() {
            if p.right.empty() {
                return NONE;
            }
            return self.lowpt[p.right.low];
        }
        if p.right.empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = Pair { id: NONE, left: Interval::EMPTY, right: Interval::EMPTY };
        loop {
            let mut q = self.stack.pop().expect("return edges present");
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q.right.low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(top.left, ei) || self.conflicting(top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(q.right, ei) {
                q.swap();
            }
            if self.conflicting(q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.refs[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left = q.left;
            } else {
                self.refs[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            p.id = self.next_id;
            self.next_id += 1;
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if p.left.low != NONE {
                self.side[p.left.low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.refs[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refs[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.refs[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refs[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edge present");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) { hl } else { hr };
        }
    }

    fn integrate(&mut self, v: usize, i: usize) -> bool {
        let ei = self.out[v][i];
        let e = self.parent_edge[v];
        if self.lowpt[ei] < self.height[v] {
            if i == 0 {
                self.lowpt_edge[e] = self.lowpt_edge[ei];
            } else if !self.add_constraints(ei, e) {
                return false;
            }
        }
        true
    }

    fn test(&mut self, root: usize) -> bool {
        let mut stack = vec![(root, 0usize)];
        while let Some(&(v, i)) = stack.last() {
            if i < self.out[v].len() {
                let ei = self.out[v][i];
                self.stack_bottom[ei] = self.top_id();
                let w = self.dst[ei];
                if self.parent_edge[w] == ei {
                    stack.push((w, 0));
                    continue;
                }
                self.lowpt_edge[ei] = ei;
                let id = self.next_id;
                self.next_id += 1;
                self.stack.push(Pair { id, left: Interval::EMPTY, right: Interval { low: ei, high: ei } });
                if !self.integrate(v, i) {
                    return false;
                }
                stack.last_mut().unwrap().1 += 1;
            } else {
                let e = self.parent_edge[v];
                if e != NONE {
                    self.remove_back_edges(e);
                }
                stack.pop();
                if let Some(&(u, j)) = stack.last() {
                    if !self.integrate(u, j) {
                        return false;
                    }
                    stack.last_mut().unwrap().1 += 1;
                }
            }
        }
        true
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = Vec::new();
        let mut x = e;
        while self.refs[x] != NONE {
            chain.push(x);
            x = self.refs[x];
        }
        let mut s = self.side[x];
        for &y in chain.iter().rev() {
            self.side[y] *= s;
            self.refs[y] = NONE;
            s = self.side[y];
        }
        self.side[e]
    }

    fn run(&mut self) -> bool {
        let n = self.adj.len();
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        let insertion = self.out.clone();
        for v in 0..n {
            let nest = &self.nesting;
            self.out[v].sort_by_key(|&e| nest[e]);
        }
        for r in self.roots.clone() {
            if !self.test(r) {
                return false;
            }
        }
        self.out = insertion;
        true
    }

    /// Clockwise rotation at each vertex; only valid after a successful run.
    fn embed(&mut self) -> Vec<Vec<usize>> {
        let m = self.src.len();
        let n = self.adj.len();
        for e in 0..m {
            let s = self.sign(e);
            self.nesting[e] *= s;
        }
        for v in 0..n {
            let nest = &self.nesting;
            self.out[v].sort_by_key(|&e| nest[e]);
        }
        // Half-edge 2e leaves src[e], 2e + 1 leaves dst[e].
        let mut cw = vec![NONE; 2 * m];
        let mut ccw = vec![NONE; 2 * m];
        let mut first = vec![NONE; n];
        let target = |h: usize, src: &[usize], dst: &[usize]| if h % 2 == 0 { dst[h / 2] } else { src[h / 2] };
        fn insert_after(cw: &mut [usize], ccw: &mut [usize], r: usize, h: usize) {
            let nx = cw[r];
            cw[h] = nx;
            ccw[h] = r;
            ccw[nx] = h;
            cw[r] = h;
        }
        for v in 0..n {
            let mut prev = NONE;
            for &e in &self.out[v] {
                let h = 2 * e;
                if prev == NONE {
                    cw[h] = h;
                    ccw[h] = h;
                    first[v] = h;
                } else {
                    insert_after(&mut cw, &mut ccw, prev, h);
                }
                prev = h;
            }
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        for r in self.roots.clone() {
            let mut stack = vec![(r, 0usize)];
            while let Some(&(v, i)) = stack.last() {
                if i >= self.out[v].len() {
                    stack.pop();
                    continue;
                }
                stack.last_mut().unwrap().1 += 1;
                let ei = self.out[v][i];
                let w = self.dst[ei];
                let h = 2 * ei + 1; // w -> v
                if self.parent_edge[w] == ei {
                    if first[w] == NONE {
                        cw[h] = h;
                        ccw[h] = h;
                    } else {
                        let before = ccw[first[w]];
                        insert_after(&mut cw, &mut ccw, before, h);
                    }
                    first[w] = h;
                    left_ref[v] = 2 * ei;
                    right_ref[v] = 2 * ei;
                    stack.push((w, 0));
                } else if self.side[ei] == 1 {
                    insert_after(&mut cw, &mut ccw, right_ref[w], h);
                } else {
                    let r = left_ref[w];
                    let before = ccw[r];
                    insert_after(&mut cw, &mut ccw, before, h);
                    if first[w] == r {
                        first[w] = h;
                    }
                    left_ref[w] = h;
                }
            }
        }
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            if first[v] == NONE {
                continue;
            }
            let mut h = first[v];
            loop {
                rot[v].push(target(h, &self.src, &self.dst));
                h = cw[h];
                if h == first[v] {
                    break;
                }
            }
        }
        rot
    }
}

fn quick_nonplanar(n: usize, m: usize) -> bool {
    n > 2 && m > 3 * n - 6
}

pub fn is_planar(g: &Graph) -> bool {
    let (h, _) = g.compacted();
    if quick_nonplanar(h.n(), h.m()) {
        return false;
    }
    Lr::new(h.n(), &h.edge_list()).run()
}

/// Embedding if planar.
pub fn embed(g: &Graph) -> Option<PlanarEmbedding> {
    let (h, old) = g.compacted();
    if quick_nonplanar(h.n(), h.m()) {
        return None;
    }
    let mut lr = Lr::new(h.n(), &h.edge_list());
    if !lr.run() {
        return None;
    }
    let rot = lr.embed();
    let rotation: BTreeMap<Vertex, Vec<Vertex>> =
        rot.into_iter().enumerate().map(|(v, r)| (old[v], r.into_iter().map(|w| old[w]).collect())).collect();
    PlanarEmbedding::from_rotation(rotation)
}

pub fn planarity(g: &Graph) -> Planarity {
    match embed(g) {
        Some(e) => Planarity::Planar(e),
        None => Planarity::NonPlanar(kuratowski(g)),
    }
}

/// Deletes edges while the graph stays non-planar, trying large batches
/// first, then reads the subdivision off the remaining edges.
pub fn kuratowski(g: &Graph) -> KuratowskiWitness {
    let mut edges = g.edge_list();
    let mut i = 0;
    let mut chunk = (edges.len() / 4).max(1);
    while i < edges.len() {
        let end = (i + chunk).min(edges.len());
        let trial: Vec<(Vertex, Vertex)> = edges[..i].iter().chain(edges[end..].iter()).copied().collect();
        if !is_planar(&Graph::from_edges(g.id_bound(), trial.iter().copied())) {
            edges = trial;
        } else if chunk > 1 {
            chunk = (chunk / 2).max(1);
        } else {
            i += 1;
        }
    }
    let h = Graph::from_edges(g.id_bound(), edges.iter().copied());
    let branch: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch.len() == 5 { KuratowskiKind::K5 } else { KuratowskiKind::K33 };
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            let mut path = vec![b, first];
            let mut prev = b;
            let mut cur = first;
            while h.degree(cur) == 2 {
                let nx = *h.neighbors(cur).iter().find(|&&x| x != prev).unwrap();
                prev = cur;
                cur = nx;
                path.push(cur);
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();
    KuratowskiWitness { kind, branch, paths }
}

/// A K3,3 subdivision of a non-planar graph. Every 3-connected non-planar
/// graph other than K5 has one; when the search lands on a K5 subdivision
/// it is rerouted through a path leaving a subdivided branch path, or
/// through a vertex outside the subdivision. `None` if planar or if the
/// rerouting fails, which needs a separation of order at most two.
pub fn k33_subdivision(g: &Graph) -> Option<KuratowskiWitness> {
    if is_planar(g) {
        return None;
    }
    let w = kuratowski(g);
    match w.kind {
        KuratowskiKind::K33 => Some(w),
        KuratowskiKind::K5 => k33_from_k5(g, &w).filter(|k| k.verify(g)),
    }
}

fn k33_from_k5(g: &Graph, w: &KuratowskiWitness) -> Option<KuratowskiWitness> {
    let nb = g.id_bound();
    let mut in_s = vec![false; nb];
    for p in &w.paths {
        for &x in p {
            in_s[x] = true;
        }
    }
    let between = |a: Vertex, b: Vertex| -> Vec<Vertex> {
        let p = w.paths.iter().find(|p| (p[0] == a && p[p.len() - 1] == b) || (p[0] == b && p[p.len() - 1] == a));
        let mut p = p.expect("K5 paths join every pair").clone();
        if p[0] != a {
            p.reverse();
        }
        p
    };
    let finish = |paths: Vec<Vec<Vertex>>| -> KuratowskiWitness {
        let mut branch: Vec<Vertex> = paths.iter().flat_map(|p| [p[0], p[p.len() - 1]]).collect();
        branch.sort_unstable();
        branch.dedup();
        let mut paths: Vec<Vec<Vertex>> = paths
            .into_iter()
            .map(|mut p| {
                if p[0] > p[p.len() - 1] {
                    p.reverse();
                }
                p
            })
            .collect();
        paths.sort();
        KuratowskiWitness { kind: KuratowskiKind::K33, branch, paths }
    };
    for p in w.paths.iter().filter(|p| p.len() > 2) {
        let (a, b) = (p[0], p[p.len() - 1]);
        // Breadth-first from the inside of `p`, through vertices off the
        // subdivision, until some other vertex of the subdivision is met.
        let mut prev = vec![NONE; nb];
        let mut queue: Vec<Vertex> = p[1..p.len() - 1].to_vec();
        for &x in &queue {
            prev[x] = x;
        }
        let mut hit = None;
        let mut i = 0;
        'search: while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &y in g.neighbors(x) {
                if prev[y] != NONE || y == a || y == b {
                    continue;
                }
                prev[y] = x;
                if in_s[y] {
                    hit = Some(y);
                    break 'search;
                }
                queue.push(y);
            }
        }
        let Some(q) = hit else { continue };
        let mut qpath = vec![q];
        let mut y = q;
        while prev[y] != y {
            y = prev[y];
            qpath.push(y);
        }
        qpath.reverse();
        let start = qpath[0];
        let i = p.iter().position(|&x| x == start).unwrap();
        let to_a: Vec<Vertex> = p[..=i].to_vec();
        let to_b: Vec<Vertex> = p[i..].to_vec();
        let others: Vec<Vertex> = w.branch.iter().copied().filter(|&x| x != a && x != b).collect();
        // Either `q` is a branch vertex, or it sits inside another branch path.
        let (x, reach_x) = if others.contains(&q) {
            (q, qpath)
        } else {
            let r = w
                .paths
                .iter()
                .find(|r| r[1..r.len() - 1].contains(&q))
                .expect("vertex of the subdivision lies on a path");
            let (r0, r1) = (r[0], r[r.len() - 1]);
            let j = r.iter().position(|&x| x == q).unwrap();
            if r0 != a && r0 != b && r1 != a && r1 != b {
                // Sides {start, r0, r1} and {a, b, q}.
                return Some(finish(vec![
                    to_a,
                    to_b,
                    qpath,
                    r[..=j].to_vec(),
                    r[j..].to_vec(),
                    between(r0, a),
                    between(r0, b),
                    between(r1, a),
                    between(r1, b),
                ]));
            }
            // `r` leaves `a` or `b`; follow it from `q` to its far end.
            let (x, tail) = if r0 == a || r0 == b {
                (r1, r[j..].to_vec())
            } else {
                let mut t = r[..=j].to_vec();
                t.reverse();
                (r0, t)
            };
            let mut ext = qpath;
            ext.extend_from_slice(&tail[1..]);
            (x, ext)
        };
        let rest: Vec<Vertex> = others.iter().copied().filter(|&o| o != x).collect();
        let (y, z) = (rest[0], rest[1]);
        // Sides {a, b, x} and {start, y, z}.
        return Some(finish(vec![
            to_a,
            to_b,
            reach_x,
            between(a, y),
            between(a, z),
            between(b, y),
            between(b, z),
            between(x, y),
            between(x, z),
        ]));
    }
    // Every branch path is an edge, so some vertex lies off the subdivision.
    let outside = g.vertices().find(|&v| !in_s[v])?;
    let mut h = g.clone();
    let sink = h.add_vertex();
    for &b in &w.branch {
        h.add_edge(sink, b);
    }
    let (k, fan) = crate::connectivity::flow::count_disjoint_paths(&h, outside, sink, 3).ok()?;
    if k < 3 {
        return None;
    }
    let mut ends = Vec::new();
    let mut paths = Vec::new();
    for f in fan.paths {
        let cut = f.iter().position(|&x| w.branch.contains(&x)).unwrap();
        ends.push(f[cut]);
        paths.push(f[..=cut].to_vec());
    }
    let rest: Vec<Vertex> = w.branch.iter().copied().filter(|x| !ends.contains(x)).collect();
    for &r in &rest {
        for &e in &ends {
            paths.push(between(r, e));
        }
    }
    Some(finish(paths))
}

impl KuratowskiWitness {
    /// Paths lie in `g`, are internally disjoint and avoid branch vertices
    /// inside, and connect the branch vertices as K5 or K3,3.
    pub fn verify(&self, g: &Graph) -> bool {
        let b = &self.branch;
        let (need_b, need_p) = match self.kind {
            KuratowskiKind::K5 => (5, 10),
            KuratowskiKind::K33 => (6, 9),
        };
        let mut sorted_b = b.clone();
        sorted_b.sort_unstable();
        sorted_b.dedup();
        if sorted_b.len() != need_b || self.paths.len() != need_p || !b.iter().all(|&v| g.contains(v)) {
            return false;
        }
        let mut used = std::collections::BTreeSet::new();
        let mut ends = std::collections::BTreeSet::new();
        for p in &self.paths {
            if p.len() < 2 || p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            let (a, z) = (p[0], *p.last().unwrap());
            if !sorted_b.contains(&a) || !sorted_b.contains(&z) || a == z {
                return false;
            }
            if !ends.insert((a.min(z), a.max(z))) {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if sorted_b.contains(&x) || !used.insert(x) {
                    return false;
                }
            }
        }
        match self.kind {
            KuratowskiKind::K5 => true,
            KuratowskiKind::K33 => {
                // Two colour classes of three, all nine cross pairs joined.
                let mut side: BTreeMap<Vertex, bool> = BTreeMap::new();
                side.insert(sorted_b[0], false);
                for _ in 0..6 {
                    for &(a, z) in &ends {
                        if let Some(&s) = side.get(&a) {
                            if side.insert(z, !s).is_some_and(|old| old == s) {
                                return false;
                            }
                        } else if let Some(&s) = side.get(&z) {
                            side.insert(a, !s);
                        }
                    }
                }
                side.len() == 6 && side.values().filter(|&&s| s).count() == 3
            }
        }
    }
}
