use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricon::decomposition::blocks::articulation_points;
use tricon::decomposition::tree::{special_2cut_tree, strong_2cut_tree, PartKind};
use tricon::generators::{gnp, random_2connected, shuffled};
use tricon::oracles::{bf_cut_vertices, bf_is_3_connected, bf_strong_2cut_tree, bf_strong_2cuts};

#[test]
fn strong_tree_matches_recursive_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..3000 {
        let n = rng.gen_range(3..=9);
        let extra = rng.gen_range(0..n);
        let g = random_2connected(n, extra, &mut rng);
        let t = strong_2cut_tree(&g).unwrap_or_else(|e| panic!("round {round}: {e}"));
        t.tree.check_shape().unwrap();
        let pairs: Vec<_> = t.tree.cuts.iter().map(|c| c.pair).collect();
        assert_eq!(pairs, bf_strong_2cuts(&g).unwrap(), "round {round}: {:?}", g.edge_list());
        let (bf_pairs, bf_pieces) = bf_strong_2cut_tree(&g).unwrap();
        assert_eq!(pairs, bf_pairs);
        let pieces: Vec<_> = t.tree.parts.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(pieces, bf_pieces, "round {round}: {:?}", g.edge_list());
        for p in &t.tree.parts {
            let pg = p.graph();
            match p.kind {
                PartKind::ThreeConnected => assert!(bf_is_3_connected(&pg).unwrap()),
                PartKind::Cycle => assert!(pg.vertices().all(|v| pg.degree(v) == 2) && pg.m() == pg.n()),
            }
        }
    }
}

#[test]
fn strong_tree_is_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let n = rng.gen_range(3..=10);
        let g = random_2connected(n, rng.gen_range(0..n), &mut rng);
        let (h, perm) = shuffled(&g, &mut rng);
        let a = strong_2cut_tree(&g).unwrap().tree;
        let b = strong_2cut_tree(&h).unwrap().tree;
        let mut mapped: Vec<_> = a
            .cuts
            .iter()
            .map(|c| (perm[c.pair.0].min(perm[c.pair.1]), perm[c.pair.0].max(perm[c.pair.1])))
            .collect();
        mapped.sort_unstable();
        let other: Vec<_> = b.cuts.iter().map(|c| c.pair).collect();
        assert_eq!(mapped, other);
        let mut pa: Vec<Vec<usize>> = a
            .parts
            .iter()
            .map(|p| {
                let mut v: Vec<usize> = p.vertices.iter().map(|&x| perm[x]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        pa.sort();
        let pb: Vec<Vec<usize>> = b.parts.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(pa, pb);
    }
}

#[test]
fn special_tree_parts_are_triangles_or_rigid() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let n = rng.gen_range(3..=12);
        let g = random_2connected(n, rng.gen_range(0..3), &mut rng);
        let s = special_2cut_tree(&strong_2cut_tree(&g).unwrap());
        s.tree.check_shape().unwrap();
        for p in &s.tree.parts {
            assert!(p.kind == PartKind::ThreeConnected || p.is_triangle());
        }
        let leaves = s.tree.leaves();
        let mut seen = std::collections::HashSet::new();
        for l in &leaves {
            assert!(!l.interior.is_empty());
            for &v in &l.interior {
                assert!(seen.insert(v), "interiors overlap");
            }
        }
    }
}

#[test]
fn articulation_points_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..2000 {
        let g = gnp(9, rng.gen_range(0.1..0.6), &mut rng);
        assert_eq!(articulation_points(&g), bf_cut_vertices(&g));
    }
}

#[test]
fn strong_cuts_on_dense_random_graphs() {
    use tricon::decomposition::blocks::is_biconnected;
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut checked = 0;
    while checked < 3000 {
        let n = rng.gen_range(3..=9);
        let g = gnp(n, rng.gen_range(0.25..0.9), &mut rng);
        if !is_biconnected(&g) {
            continue;
        }
        checked += 1;
        let t = strong_2cut_tree(&g).unwrap();
        let pairs: Vec<_> = t.tree.cuts.iter().map(|c| c.pair).collect();
        assert_eq!(pairs, bf_strong_2cuts(&g).unwrap(), "{:?}", g.edge_list());
        let pieces: Vec<_> = t.tree.parts.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(pieces, bf_strong_2cut_tree(&g).unwrap().1, "{:?}", g.edge_list());
    }
}
