use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricon::connectivity::certificate::sparse_certificate;
use tricon::connectivity::flow::count_disjoint_paths;
use tricon::connectivity::kconn::is_k_connected;
use tricon::connectivity::planarity::{planarity, Planarity};
use tricon::generators::{gnm, gnp, planar_triangulation};
use tricon::oracles::{bf_is_k_connected, bf_max_disjoint_paths, bf_min_separator};
use tricon::{Graph, Vertex};

#[test]
fn planarity_is_self_certifying() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut planar, mut nonplanar) = (0, 0);
    for _ in 0..4000 {
        let n = rng.gen_range(1..=12);
        let max = n * (n - 1) / 2;
        let m = rng.gen_range(0..=max.min(3 * n));
        let g = gnm(n, m, &mut rng);
        match planarity(&g) {
            Planarity::Planar(e) => {
                e.verify(&g).unwrap();
                planar += 1;
            }
            Planarity::NonPlanar(w) => {
                assert!(w.verify(&g), "bad witness for {:?}", g.edge_list());
                nonplanar += 1;
            }
        }
    }
    assert!(planar > 500 && nonplanar > 500);
}

#[test]
fn triangulations_embed() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in [5, 10, 50, 300, 2000] {
        let g = planar_triangulation(n, &mut rng);
        let Planarity::Planar(e) = planarity(&g) else { panic!("triangulation rejected") };
        e.verify(&g).unwrap();
        assert_eq!(e.faces.len(), 2 * n - 4);
        // One more edge makes it non-planar.
        let (a, b) = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| !g.has_edge(a, b))
            .unwrap();
        let mut h = g.clone();
        h.add_edge(a, b);
        if n <= 300 {
            let Planarity::NonPlanar(w) = planarity(&h) else { panic!("overfull graph accepted") };
            assert!(w.verify(&h));
        }
    }
}

#[test]
fn menger_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1500 {
        let n = rng.gen_range(2..=9);
        let g = gnp(n, rng.gen_range(0.2..0.8), &mut rng);
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        let (k, ps) = count_disjoint_paths(&g, u, v, 10).unwrap();
        assert!(ps.verify(&g));
        assert_eq!(ps.paths.len(), k);
        if let Some(sep) = bf_min_separator(&g, u, v) {
            assert_eq!(k, sep);
        }
        if n <= 8 {
            assert_eq!(k, bf_max_disjoint_paths(&g, u, v).unwrap());
        }
    }
}

#[test]
fn k_connectivity_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1500 {
        let n = rng.gen_range(1..=9);
        let g = gnp(n, rng.gen_range(0.3..1.0), &mut rng);
        for k in 1..=5 {
            assert_eq!(is_k_connected(&g, k), bf_is_k_connected(&g, k).unwrap(), "k={k} {:?}", g.edge_list());
        }
    }
}

#[test]
fn certificate_preserves_local_connectivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..150 {
        let n = rng.gen_range(5..=30);
        let g = gnp(n, rng.gen_range(0.1..0.9), &mut rng);
        let k = rng.gen_range(1..=6);
        let d = sparse_certificate(&g, k);
        assert!(d.verify(&g));
        let kept = Graph::from_edges(g.id_bound(), d.kept_edges());
        assert!(kept.m() <= k * (n - 1));
        for &(a, b) in &d.remainder {
            let want = count_disjoint_paths(&g, a, b, k).unwrap().0;
            assert!(count_disjoint_paths(&kept, a, b, k).unwrap().0 >= want);
        }
    }
}

#[test]
fn k33_found_in_3_connected_nonplanar_graphs() {
    use tricon::connectivity::kconn::is_k_connected;
    use tricon::connectivity::planarity::{is_planar, k33_subdivision, KuratowskiKind};
    use tricon::generators::{complete, random_3connected};
    assert!(k33_subdivision(&complete(5)).is_none());
    // K5 on `ids`, some edges subdivided, plus extra edges. The plain
    // search lands on the K5 in each case, so every rerouting is used: an
    // outside vertex, a detour to a branch vertex, to a disjoint branch
    // path, and to a branch path sharing an end.
    let k5_on = |ids: [Vertex; 5], n: usize, sub: &[((Vertex, Vertex), Vertex)], extra: &[(Vertex, Vertex)]| {
        let mut g = Graph::new(n);
        for i in 0..5 {
            for j in i + 1..5 {
                let (a, b) = (ids[i], ids[j]);
                match sub.iter().find(|(e, _)| *e == (a, b)) {
                    Some(&(_, s)) => {
                        g.add_edge(a, s);
                        g.add_edge(s, b);
                    }
                    None => {
                        g.add_edge(a, b);
                    }
                }
            }
        }
        for &(a, b) in extra {
            g.add_edge(a, b);
        }
        g
    };
    let cases = [
        k5_on([1, 2, 3, 4, 5], 6, &[], &[(0, 1), (0, 2), (0, 3)]),
        k5_on([1, 2, 3, 4, 5], 6, &[((1, 2), 0)], &[(0, 3)]),
        k5_on([2, 3, 4, 5, 6], 7, &[((2, 3), 0), ((4, 5), 1)], &[(0, 1)]),
        k5_on([2, 3, 4, 5, 6], 7, &[((2, 3), 0), ((2, 4), 1)], &[(0, 1)]),
    ];
    for g in cases {
        assert_eq!(tricon::connectivity::planarity::kuratowski(&g).kind, KuratowskiKind::K5);
        let w = k33_subdivision(&g).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(w.verify(&g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut found = 0;
    for _ in 0..400 {
        let n = rng.gen_range(6..=16);
        let g = random_3connected(n, rng.gen_range(0..3 * n), &mut rng);
        if is_planar(&g) || !is_k_connected(&g, 3) {
            continue;
        }
        let w = k33_subdivision(&g).expect("3-connected non-planar graphs other than K5 contain K3,3");
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(w.verify(&g));
        found += 1;
    }
    assert!(found > 100);
}
