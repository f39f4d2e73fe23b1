mod common;

use common::families::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricon::compactor::gadgets::verify_gadget;
use tricon::compactor::*;
use tricon::generators::{bipartite_attachment, complete, cycle, kk3_triangle_family, random_3connected, wheel};
use tricon::oracles::{bf_all_3cuts, bf_is_3_connected, bf_is_3_connected_with, OracleBudget};
use tricon::{Graph, Vertex};

fn params(n0: usize) -> CompactorParams {
    CompactorParams::default().with_n0(n0).unwrap()
}

#[test]
fn degree3_triangle_sets_preserve_3_connectivity() {
    let (checked, degenerate) = triangle_suite(31, 1000).unwrap();
    assert!(degenerate < checked / 10, "{checked} {degenerate}");
}

#[test]
fn whole_kk3_family_contracts_to_k33_plus() {
    for k in 1..=12 {
        let (g, tris) = kk3_triangle_family(k);
        assert_eq!(degree3_triangles(&g), tris);
        let groups: Vec<Vec<Vertex>> = tris.iter().map(|t| t.to_vec()).collect();
        let h = contract(&g, &groups);
        assert_eq!((h.n(), h.m()), (3 + k, 3 * k));
        assert_eq!(bf_is_3_connected(&h).unwrap(), k >= 3);
    }
}

#[test]
fn sweet_matchings_preserve_3_connectivity() {
    let (checked, degenerate) = sweet_suite(32, 1000).unwrap();
    assert!(degenerate < checked / 10, "{checked} {degenerate}");
}

#[test]
fn well_behaved_matchings_preserve_3_connectivity() {
    well_behaved_suite(33, 1000).unwrap();
}

#[test]
fn leaf_gadgets_verify_on_small_sides() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let mut found = 0;
    for _ in 0..300 {
        let g = small_3connected(rng.gen_range(6..=14), &mut rng);
        if g.n() > 30 {
            continue;
        }
        let ctx = GadgetContext { d: 1024, max_degree: 2054, protected: &[] };
        for (x, u) in bf_all_3cuts(&g, &[]).unwrap() {
            if let Ok(f) = find_leaf_gadget(&g, &x, &u, &ctx) {
                assert!(verify_gadget(&g, &f), "{:?} {f:?}", g.edge_list());
                match &f {
                    GadgetFinding::Degree3Triangle { triangle } => assert!(triangle.iter().any(|v| u.contains(v))),
                    GadgetFinding::WellBehavedEdge { edge, .. } => {
                        assert!(u.contains(&edge.0) && u.contains(&edge.1))
                    }
                    GadgetFinding::SweetEdge { edge, .. } => {
                        assert!(u.contains(&edge.0) || u.contains(&edge.1));
                        assert!([edge.0, edge.1].iter().all(|v| u.contains(v) || x.contains(v)));
                    }
                }
                found += 1;
            }
        }
    }
    assert!(found > 500, "{found}");
}

#[test]
fn small_graph_gives_empty_sequence() {
    let g = wheel(6);
    let s = iterative_compactor(&g, &[0], &CompactorParams::default(), VerifyLevel::Full).unwrap();
    assert!(s.steps.is_empty());
    assert_eq!(s.termination, Termination::BelowN0);
    assert_eq!(s.last.edge_list(), g.edge_list());
}

#[test]
fn preconditions_are_enforced() {
    let p = params(4);
    assert!(matches!(
        compactor(&wheel(6), &[], &CompactorParams::default(), VerifyLevel::Off),
        Err(CompactorError::TooSmall { .. })
    ));
    assert!(matches!(compactor(&cycle(8), &[], &p, VerifyLevel::Off), Err(CompactorError::Not3Connected)));
    assert!(matches!(
        compactor(&complete(9), &[0, 1, 2, 3, 4, 5], &p, VerifyLevel::Off),
        Err(CompactorError::Precondition(_))
    ));
    assert!(matches!(compactor(&complete(9), &[0, 0], &p, VerifyLevel::Off), Err(CompactorError::Precondition(_))));
    assert!(matches!(
        low_density_compactor(&complete(60), &[], &p, VerifyLevel::Off),
        Err(CompactorError::Precondition(_))
    ));
}

#[test]
fn dense_graphs_lose_a_quarter_of_their_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    let g = random_3connected(120, 4000, &mut rng);
    assert!(g.m() > 20 * g.n());
    let out = compactor(&g, &[0, 1, 2, 3, 4], &params(10), VerifyLevel::Full).unwrap();
    assert_eq!(out.route, Route::DenseEdgeDeletion);
    let Shrink::EdgeSet(es) = &out.shrink else { panic!() };
    assert!(4 * es.len() >= g.m());
    assert!(out.transcript.passed());
    assert!(out.transcript.checks.iter().any(|c| c.condition == "c_paths_avoiding_deleted_edges"));
}

#[test]
fn attached_stable_set_is_deleted() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let g = bipartite_attachment(30, 3000, &mut rng);
    let out = stable_set_output(&g, &[0], &params(10), VerifyLevel::Full).unwrap();
    let Shrink::StableSet(s) = &out.shrink else { panic!() };
    assert!(s.len() > 1500, "{}", s.len());
    assert!(out.transcript.passed());
    let out = compactor(&g, &[0], &params(10), VerifyLevel::Full).unwrap();
    assert_eq!(out.route, Route::SmallCover);
}

#[test]
fn big_cover_is_reported() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let g = random_3connected(200, 100, &mut rng);
    assert!(matches!(
        stable_set_output(&g, &[], &params(10), VerifyLevel::Off),
        Err(CompactorError::Cover(CoverError::CoverTooLarge { .. }))
    ));
}

#[test]
fn journal_replays_and_serializes() {
    let mut rng = ChaCha8Rng::seed_from_u64(38);
    let g = truncate(&random_3connected(30, 20, &mut rng));
    let s = iterative_compactor(&g, &[0, 5], &params(12), VerifyLevel::Debug).unwrap();
    assert!(!s.steps.is_empty());
    s.audit(&g, |h| bf_is_3_connected_with(h, OracleBudget::compaction()).unwrap()).unwrap();
    let (end, _) = s.journal.replay(&g, &s.protected).unwrap();
    assert_eq!(end.edge_list(), s.last.edge_list());
    let text = serde_json::to_string(&s).unwrap();
    let back: CompactionSequence = serde_json::from_str(&text).unwrap();
    assert_eq!(back.journal, s.journal);
    assert_eq!(back.steps, s.steps);
}

#[test]
fn audit_catches_a_tampered_journal() {
    let mut rng = ChaCha8Rng::seed_from_u64(39);
    let g = random_3connected(40, 10, &mut rng);
    let mut s = iterative_compactor(&g, &[], &params(10), VerifyLevel::Off).unwrap();
    assert!(!s.steps.is_empty());
    s.last = Graph::new(3);
    assert!(s.audit(&g, |h| tricon::decomposition::triconnected::is_triconnected(h)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_step_is_3_connected_and_verified(n in 8usize..40, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = small_3connected(n, &mut rng);
        prop_assume!(g.n() >= 8 && g.n() <= 60);
        let protected: Vec<Vertex> = g.vertices().take(3).collect();
        let s = iterative_compactor(&g, &protected, &params(6), VerifyLevel::Full).unwrap();
        for step in &s.steps {
            prop_assert!(step.output.transcript.passed());
            prop_assert!(step.after.0 + step.after.1 < step.before.0 + step.before.1);
        }
        prop_assert!(s.audit(&g, |h| bf_is_3_connected(h).unwrap()).is_ok());
    }
}
