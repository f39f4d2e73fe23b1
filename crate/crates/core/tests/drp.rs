mod common;

use proptest::prelude::*;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricon::drp::certificate::SeparatorWitness;
use tricon::drp::*;
use tricon::generators::{gnp, obstructed_drp, random_3connected, shuffled};
use tricon::oracles::{bf_all_3cuts, bf_is_3_connected, bf_two_disjoint_paths};
use tricon::{Graph, Vertex};

fn check_against_oracle(g: &Graph, t: [Vertex; 4]) -> DrpCertificate {
    let inst = DrpInstance::new(g.clone(), t).unwrap();
    let cert = solve(&inst, &SolveConfig::default()).unwrap();
    let bf = bf_two_disjoint_paths(g, t[0], t[1], t[2], t[3]).unwrap();
    assert_eq!(cert.has_paths(), bf.is_some(), "{:?} terminals {t:?}", g.edge_list());
    assert_eq!(decide(&inst), bf.is_some());
    assert!(verify_certificate(&inst, &cert), "{:?} terminals {t:?}", g.edge_list());
    cert
}

#[test]
fn exhaustive_up_to_six_vertices() {
    for n in 4..=6 {
        let canon = common::Canon::new(n);
        for mask in common::graph_classes(n) {
            let g = canon.graph(mask);
            for t in common::terminal_classes(n) {
                let cert = check_against_oracle(&g, t);
                if let DrpCertificate::PlanarReduction { strength, .. } = cert {
                    assert_eq!(strength, Strength::FerociouslyStrong);
                }
            }
        }
    }
}

#[test]
fn random_eight_vertex_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..5000 {
        let g = gnp(8, rng.gen_range(0.15..0.9), &mut rng);
        let mut t: Vec<Vertex> = (0..8).collect();
        t.shuffle(&mut rng);
        check_against_oracle(&g, [t[0], t[1], t[2], t[3]]);
    }
}

#[test]
fn decision_ignores_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..500 {
        let n = rng.gen_range(5..=12);
        let g = gnp(n, rng.gen_range(0.2..0.7), &mut rng);
        let (h, perm) = shuffled(&g, &mut rng);
        let a = DrpInstance::new(g, [0, 1, 2, 3]).unwrap();
        let b = DrpInstance::new(h, [perm[0], perm[1], perm[2], perm[3]]).unwrap();
        assert_eq!(decide(&a), decide(&b));
    }
}

#[test]
fn obstructed_family_gets_strong_certificates() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut cut = 0;
    for _ in 0..400 {
        let (g, t) = obstructed_drp(rng.gen_range(5..25), rng.gen_range(1..7), rng.gen_range(1..8), &mut rng);
        let inst = DrpInstance::new(g, t).unwrap();
        let cert = solve(&inst, &SolveConfig::default()).unwrap();
        assert!(verify_certificate(&inst, &cert));
        let DrpCertificate::PlanarReduction { vertices, strength, separators, witnesses, .. } = cert else {
            panic!("the family has no solutions")
        };
        assert_ne!(strength, Strength::None);
        assert_ne!(strength, Strength::Strong, "ferocious check failed");
        if strength == Strength::FerociouslyStrong {
            assert_eq!(witnesses.len(), separators.len());
        }
        cut += separators.len();
        // The fully reduced certificate keeps a subset of the vertices.
        let full = solve(&inst, &SolveConfig { minimal_cut_offs: false, ..Default::default() }).unwrap();
        let DrpCertificate::PlanarReduction { vertices: fewer, .. } = full else { unreachable!() };
        assert!(fewer.iter().all(|v| vertices.contains(v)));
    }
    assert!(cut > 200);
}

#[test]
fn tampering_is_caught() {
    let inst = DrpInstance::new(tricon::generators::complete(6), [0, 1, 2, 3]).unwrap();
    let cert = solve(&inst, &SolveConfig::default()).unwrap();
    assert!(verify_certificate(&inst, &cert));
    let DrpCertificate::TwoPaths { p1, p2 } = cert else { panic!() };
    let bad = DrpCertificate::TwoPaths { p1: vec![0, 2, 1], p2: p2.clone() };
    assert!(!verify_certificate(&inst, &bad));
    let bad = DrpCertificate::TwoPaths { p1: p1.clone(), p2: vec![2, 5] };
    assert!(!verify_certificate(&inst, &bad));

    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let (g, t) = obstructed_drp(12, 3, 4, &mut rng);
    let inst = DrpInstance::new(g, t).unwrap();
    let cert = solve(&inst, &SolveConfig::default()).unwrap();
    assert!(verify_certificate(&inst, &cert));
    let DrpCertificate::PlanarReduction { vertices, separators, rotation, strength, witnesses } = cert else {
        panic!()
    };
    let mut swapped = rotation.clone();
    let r = swapped.values_mut().find(|r| r.len() >= 4).unwrap();
    r.swap(0, 2);
    let bad = DrpCertificate::PlanarReduction {
        vertices: vertices.clone(),
        separators: separators.clone(),
        rotation: swapped,
        strength,
        witnesses: witnesses.clone(),
    };
    assert!(!verify_certificate(&inst, &bad));
    let mut fewer = vertices.clone();
    fewer.pop();
    let bad = DrpCertificate::PlanarReduction { vertices: fewer, separators, rotation, strength, witnesses };
    assert!(!verify_certificate(&inst, &bad));
}

#[test]
fn json_shape() {
    let inst = DrpInstance::new(tricon::generators::complete(4), [0, 1, 2, 3]).unwrap();
    let cert = solve(&inst, &SolveConfig::default()).unwrap();
    let text = serde_json::to_string(&cert).unwrap();
    assert_eq!(text, r#"{"kind":"two_paths","p1":[0,1],"p2":[2,3]}"#);
    let inst = DrpInstance::new(tricon::generators::cycle(4), [0, 2, 1, 3]).unwrap();
    let cert = solve(&inst, &SolveConfig::default()).unwrap();
    let text = serde_json::to_string(&cert).unwrap();
    assert!(text.starts_with(r#"{"kind":"planar_reduction","vertices":[0,1,2,3,4],"separators":[],"rotation":{"0":"#));
    assert!(text.contains(r#""strength":"ferociously_strong""#));
    let back: DrpCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
    let w = SeparatorWitness::Split { separator: [1, 2, 3], red: vec![4], yellow: vec![5] };
    assert_eq!(
        serde_json::to_string(&w).unwrap(),
        r#"{"kind":"split","separator":[1,2,3],"red":[4],"yellow":[5]}"#
    );
}

fn roots_of(n: usize, seed: u64) -> Vec<Vertex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vs: Vec<Vertex> = (0..n).collect();
    vs.shuffle(&mut rng);
    vs.truncate(5);
    vs.sort_unstable();
    vs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn reductions_shrink_and_stay_3_connected(n in 6usize..30, extra in 0usize..30, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_3connected(n, extra, &mut rng);
        let roots = roots_of(n, seed);
        let mut f = g.clone();
        loop {
            let bf = bf_all_3cuts(&f, &roots).unwrap();
            match find_reducible_3cut(&f, &roots) {
                None => {
                    prop_assert!(bf.is_empty());
                    break;
                }
                Some((x, u)) => {
                    prop_assert!(bf.iter().any(|(bx, bu)| *bx == x && *bu == u));
                    let h = reduce(&f, x, &u);
                    prop_assert!(h.n() < f.n());
                    prop_assert!(bf_is_3_connected(&h).unwrap());
                    f = h;
                }
            }
        }
        // Reductions compose: the result is the reduction of the start
        // that keeps the same vertices.
        let r = Reduction::from_kept(&g, &f.vertex_list()).unwrap();
        prop_assert_eq!(r.graph.edge_list(), f.edge_list());
        r.check(&roots).unwrap();
        let once = irreducible_reduction(&g, &roots);
        prop_assert!(bf_all_3cuts(&once.graph, &roots).unwrap().is_empty());
    }
}
