//! Greedy matchings among low-degree vertices and their refinement into
//! induced, well-separated submatchings.

use crate::graph::{Graph, Matching, Vertex};

/// Degree bound below which a vertex may not see two refined edges.
pub const SEPARATION_DEGREE: usize = 12;

/// Maximal matching among vertices of degree at most `d` outside
/// `protected`. Vertices are taken in nondecreasing order of degree and each
/// unmatched one is paired with an unmatched eligible neighbour of lowest
/// degree, ties broken by smaller id.
pub fn greedy_low_degree_matching(h: &Graph, d: usize, protected: &[Vertex]) -> Matching {
    let nb = h.id_bound();
    let mut eligible = vec![false; nb];
    for v in h.vertices() {
        eligible[v] = h.degree(v) <= d;
    }
    for &p in protected {
        if p < nb {
            eligible[p] = false;
        }
    }
    let mut order: Vec<Vertex> = h.vertices().filter(|&v| eligible[v]).collect();
    order.sort_by_key(|&v| (h.degree(v), v));
    let mut matched = vec![false; nb];
    let mut edges = Vec::new();
    for v in order {
        if matched[v] {
            continue;
        }
        let partner = h
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| eligible[w] && !matched[w])
            .min_by_key(|&w| (h.degree(w), w));
        if let Some(w) = partner {
            matched[v] = true;
            matched[w] = true;
            edges.push((v.min(w), v.max(w)));
        }
    }
    Matching { edges }
}

/// No edge of `h` joins endpoints of two different matching edges.
pub fn is_induced(h: &Graph, m: &Matching) -> bool {
    let mut owner = vec![usize::MAX; h.id_bound()];
    for (i, &(a, b)) in m.edges.iter().enumerate() {
        owner[a] = i;
        owner[b] = i;
    }
    m.edges.iter().enumerate().all(|(i, &(a, b))| {
        [a, b].iter().all(|&x| h.neighbors(x).iter().all(|&w| owner[w] == usize::MAX || owner[w] == i))
    })
}

/// No vertex of degree at most `SEPARATION_DEGREE` outside the matching
/// is adjacent to two different matching edges.
pub fn is_separated(h: &Graph, m: &Matching) -> bool {
    let mut owner = vec![usize::MAX; h.id_bound()];
    for (i, &(a, b)) in m.edges.iter().enumerate() {
        owner[a] = i;
        owner[b] = i;
    }
    h.vertices().filter(|&w| owner[w] == usize::MAX && h.degree(w) <= SEPARATION_DEGREE).all(|w| {
        let mut seen = usize::MAX;
        for &x in h.neighbors(w) {
            let o = owner[x];
            if o != usize::MAX {
                if seen != usize::MAX && seen != o {
                    return false;
                }
                seen = o;
            }
        }
        true
    })
}

/// Induced submatching, then a submatching of that in which no vertex of
/// degree at most 12 sees two edges. Both passes are greedy in the order of
/// `m`, so an edge is only dropped because of an earlier kept one.
pub fn refine_matching(h: &Graph, m: &Matching, d: usize) -> Matching {
    debug_assert!(m.vertices().iter().all(|&v| h.degree(v) <= d));
    let nb = h.id_bound();
    // Pass 1: induced.
    let mut blocked = vec![false; nb];
    let mut induced = Vec::new();
    for &(a, b) in &m.edges {
        if blocked[a] || blocked[b] {
            continue;
        }
        induced.push((a, b));
        for x in [a, b] {
            blocked[x] = true;
            for &w in h.neighbors(x) {
                blocked[w] = true;
            }
        }
    }
    // Pass 2: separation at low-degree vertices.
    let mut owner = vec![usize::MAX; nb];
    let mut kept = Vec::new();
    for (i, &(a, b)) in induced.iter().enumerate() {
        let clash = [a, b].iter().any(|&x| {
            h.neighbors(x).iter().any(|&w| w != a && w != b && h.degree(w) <= SEPARATION_DEGREE && owner[w] != usize::MAX)
        });
        if clash {
            continue;
        }
        kept.push((a, b));
        for x in [a, b] {
            for &w in h.neighbors(x) {
                if w != a && w != b && h.degree(w) <= SEPARATION_DEGREE {
                    owner[w] = i;
                }
            }
        }
    }
    Matching { edges: kept }
}

/// The guaranteed size of the refinement of a matching of size `len`
/// among vertices of degree at most `d`.
pub fn refinement_bound(len: usize, d: usize) -> usize {
    let den = (2 * d - 1) * 24 * d;
    len.div_ceil(den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, cycle, planar_triangulation};
    use rand::SeedableRng;

    #[test]
    fn star_has_no_low_degree_edge() {
        let g = complete_bipartite(1, 5);
        assert!(greedy_low_degree_matching(&g, 3, &[]).is_empty());
    }

    #[test]
    fn c6_trace() {
        let m = greedy_low_degree_matching(&cycle(6), 2, &[]);
        assert_eq!(m.edges, vec![(0, 1), (2, 3), (4, 5)]);
    }

    #[test]
    fn zero_degree_bound_is_empty() {
        assert!(greedy_low_degree_matching(&cycle(6), 0, &[]).is_empty());
    }

    #[test]
    fn protected_vertices_stay_unmatched() {
        let m = greedy_low_degree_matching(&cycle(6), 2, &[1]);
        assert!(m.vertices().iter().all(|&v| v != 1));
        assert_eq!(m.edges, vec![(0, 5), (2, 3)]);
    }

    #[test]
    fn refine_c6() {
        // 01 is kept; 23 touches 1 via the edge 12 and 45 touches 0.
        let g = cycle(6);
        let m = greedy_low_degree_matching(&g, 2, &[]);
        let r = refine_matching(&g, &m, 2);
        assert_eq!(r.edges, vec![(0, 1)]);
    }

    #[test]
    fn refine_keeps_separated_induced_matchings() {
        let g = cycle(12);
        let m = Matching { edges: vec![(0, 1), (6, 7)] };
        assert!(is_induced(&g, &m) && is_separated(&g, &m));
        assert_eq!(refine_matching(&g, &m, 2), m);
        assert!(refine_matching(&g, &Matching::default(), 2).is_empty());
    }

    #[test]
    fn refinement_properties_on_triangulations() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for n in [20, 200, 2000] {
            let g = planar_triangulation(n, &mut rng);
            let m = greedy_low_degree_matching(&g, 1024, &[0, 1]);
            assert!(m.is_valid_in(&g));
            let r = refine_matching(&g, &m, 1024);
            assert!(r.is_valid_in(&g));
            assert!(is_induced(&g, &r) && is_separated(&g, &r));
            assert!(r.len() >= refinement_bound(m.len(), 1024));
        }
    }
}
