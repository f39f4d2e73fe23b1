use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use tricon::compactor::{compactor, iterative_compactor, CompactorError, CompactorParams, Transcript, VerifyLevel};
use tricon::decomposition::blocks::{block_tree, is_biconnected};
use tricon::decomposition::tree::{special_2cut_tree, strong_2cut_tree, CutTree, PartKind};
use tricon::decomposition::triconnected::is_triconnected;
use tricon::drp::{solve, verify_certificate, DrpCertificate, DrpInstance, SolveConfig};
use tricon::generators;
use tricon::graph::{parse_edge_list, write_edge_list};
use tricon::oracles::{bf_is_3_connected, bf_two_disjoint_paths};
use tricon::Graph;

use crate::report::RunReport;
use crate::{Cli, Command, Family, ParamArgs};

pub const OK: u8 = 0;
pub const CERTIFIED_INFEASIBLE: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const VERIFICATION_FAILURE: u8 = 3;

pub struct Outcome {
    pub report: RunReport,
    /// Printed instead of the report when set.
    pub raw: Option<String>,
    pub code: u8,
}

impl Outcome {
    fn new(report: RunReport) -> Self {
        let code = if report.passed() { OK } else { VERIFICATION_FAILURE };
        Outcome { report, raw: None, code }
    }
}

fn read_graph(path: &str) -> Result<Graph> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading stdin")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    parse_edge_list(&text).map_err(|e| anyhow!("{path}: {e}"))
}

fn params(p: &ParamArgs) -> Result<CompactorParams> {
    let delta = p.delta.unwrap_or_else(|| CompactorParams::default_delta(p.c, p.d));
    CompactorParams::new(p.c, p.d, delta, p.n0).map_err(|e| anyhow!("{e}"))
}

pub fn generate(family: Family, n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n.max(6);
    match family {
        Family::Triangulation => generators::planar_triangulation(n, &mut rng),
        Family::Sparse => generators::random_sparse_3connected(n, &mut rng),
        Family::Dense => generators::random_3connected(n, 25 * n, &mut rng),
        Family::Attachment => {
            let core = (n / 50).max(6);
            generators::bipartite_attachment(core, n.saturating_sub(core), &mut rng)
        }
        Family::Kk3 => generators::kk3_triangle_family((n / 3).max(3)).0,
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let start = Instant::now();
    let mut out = match &cli.command {
        Command::Solve { graph, terminals, oracle } => cmd_solve(&read_graph(graph)?, *terminals, *oracle)?,
        Command::Decompose { graph } => cmd_decompose(&read_graph(graph)?, cli.verify),
        Command::Compact { graph, params: p, protected, step } => {
            cmd_compact(&read_graph(graph)?, &params(p)?, protected, *step, cli.verify)?
        }
        Command::Bench { family, sizes, params: p } => cmd_bench(*family, sizes, &params(p)?, cli.seed, cli.verify)?,
        Command::Oracle { graph, terminals } => cmd_oracle(&read_graph(graph)?, *terminals)?,
        Command::Verify { graph, terminals, certificate } => cmd_verify(&read_graph(graph)?, *terminals, certificate)?,
        Command::Generate { family, n } => {
            let g = generate(*family, *n, cli.seed);
            let mut o = Outcome::new(RunReport::new("generate", g.n(), g.m()));
            o.raw = Some(write_edge_list(&g));
            o
        }
    };
    out.report.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(out)
}

fn cmd_solve(g: &Graph, terminals: [usize; 4], oracle: bool) -> Result<Outcome> {
    let mut report = RunReport::new("solve", g.n(), g.m());
    let inst = DrpInstance::new(g.clone(), terminals)?;
    let cert = solve(&inst, &SolveConfig::default()).map_err(|e| anyhow!("{e}"))?;
    report.check("certificate_verifies", verify_certificate(&inst, &cert));
    report.output = match &cert {
        DrpCertificate::TwoPaths { .. } => "two_paths".into(),
        DrpCertificate::PlanarReduction { strength, .. } => format!("planar_reduction ({strength:?})"),
    };
    if oracle {
        let [s1, t1, s2, t2] = terminals;
        match bf_two_disjoint_paths(g, s1, t1, s2, t2) {
            Ok(bf) => report.check("agrees_with_brute_force", bf.is_some() == cert.has_paths()),
            Err(e) => report.lines.push(format!("brute force skipped: {e}")),
        }
    }
    report.detail = serde_json::to_value(&cert)?;
    let mut o = Outcome::new(report);
    if o.code == OK && !cert.has_paths() {
        o.code = CERTIFIED_INFEASIBLE;
    }
    Ok(o)
}

fn tree_summary(t: &CutTree) -> serde_json::Value {
    let rigid = t.parts.iter().filter(|p| p.kind == PartKind::ThreeConnected).count();
    json!({
        "cut_nodes": t.cuts.len(),
        "three_connected_nodes": rigid,
        "cycle_nodes": t.parts.len() - rigid,
        "leaves": t.leaves().len(),
        "tree": t,
    })
}

fn check_tree(report: &mut RunReport, name: &str, t: &CutTree, level: VerifyLevel) {
    if level == VerifyLevel::Off {
        return;
    }
    report.check(format!("{name}_shape"), t.check_shape().is_ok());
    let ok = t.parts.iter().all(|p| match p.kind {
        PartKind::ThreeConnected => is_triconnected(&p.graph()),
        PartKind::Cycle => p.graph().vertices().all(|v| p.graph().degree(v) == 2),
    });
    report.check(format!("{name}_nodes_3_connected_or_cycle"), ok);
}

fn cmd_decompose(g: &Graph, level: VerifyLevel) -> Outcome {
    let mut report = RunReport::new("decompose", g.n(), g.m());
    let blocks = block_tree(g);
    let mut detail = json!({ "blocks": blocks });
    if !is_biconnected(g) {
        report.output = format!("{} blocks; not 2-connected", blocks.blocks.len());
        report.detail = detail;
        return Outcome { report, raw: None, code: INPUT_ERROR };
    }
    let strong = strong_2cut_tree(g).expect("2-connected");
    let special = special_2cut_tree(&strong);
    check_tree(&mut report, "strong", &strong.tree, level);
    check_tree(&mut report, "special", &special.tree, level);
    report.output = format!(
        "strong tree: {} cut nodes, {} parts; special tree: {} leaves",
        strong.tree.cuts.len(),
        strong.tree.parts.len(),
        special.tree.leaves().len()
    );
    detail["strong"] = tree_summary(&strong.tree);
    detail["special"] = tree_summary(&special.tree);
    report.detail = detail;
    Outcome::new(report)
}

fn transcript_rows(report: &mut RunReport, transcripts: &[&Transcript]) {
    let mut by_name: BTreeMap<&str, bool> = BTreeMap::new();
    for t in transcripts {
        for c in &t.checks {
            *by_name.entry(&c.condition).or_insert(true) &= c.passed;
        }
    }
    for (name, ok) in by_name {
        report.check(name, ok);
    }
}

fn compactor_failure(e: CompactorError) -> anyhow::Error {
    anyhow!("{e}")
}

fn cmd_compact(
    g: &Graph,
    params: &CompactorParams,
    protected: &[usize],
    step: bool,
    level: VerifyLevel,
) -> Result<Outcome> {
    let mut report = RunReport::new("compact", g.n(), g.m());
    if step {
        let out = match compactor(g, protected, params, level) {
            Err(CompactorError::Verification(msg)) => return Ok(verification_failure(report, msg)),
            r => r.map_err(compactor_failure)?,
        };
        report.output = format!("{} of size {} via {:?}", out.shrink.tag(), out.shrink.len(), out.route);
        report.shrink_ratios.push(out.shrink.len() as f64 / (g.n() + g.m()) as f64);
        transcript_rows(&mut report, &[&out.transcript]);
        report.detail = serde_json::to_value(&out)?;
        return Ok(Outcome::new(report));
    }
    let seq = match iterative_compactor(g, protected, params, level) {
        Err(CompactorError::Verification(msg)) => return Ok(verification_failure(report, msg)),
        r => r.map_err(compactor_failure)?,
    };
    report.output = format!(
        "{} steps to n={} m={} ({:?})",
        seq.steps.len(),
        seq.last.n(),
        seq.last.m(),
        seq.termination
    );
    report.shrink_ratios = seq.steps.iter().map(|s| s.shrink_ratio).collect();
    let ts: Vec<&Transcript> = seq.steps.iter().map(|s| &s.output.transcript).collect();
    transcript_rows(&mut report, &ts);
    if level != VerifyLevel::Off {
        report.check("journal_replays_3_connected", seq.audit(g, is_triconnected).is_ok());
    }
    report.detail = serde_json::to_value(&seq)?;
    Ok(Outcome::new(report))
}

fn verification_failure(mut report: RunReport, msg: String) -> Outcome {
    report.output = format!("verification failed: {msg}");
    report.check("producer_output_verifies", false);
    Outcome::new(report)
}

fn cmd_bench(family: Family, sizes: &[usize], params: &CompactorParams, seed: u64, level: VerifyLevel) -> Result<Outcome> {
    let mut report = RunReport::new("bench", 0, 0);
    let mut rows = Vec::new();
    report.lines.push(format!("{:>9} {:>9} {:>6} {:>9} {:>9} {:>10} {:>10}", "n", "m", "steps", "final n", "final m", "mean shrink", "ms"));
    for (i, &size) in sizes.iter().enumerate() {
        let g = generate(family, size, seed.wrapping_add(i as u64));
        let t = Instant::now();
        let seq = iterative_compactor(&g, &[], params, level).map_err(compactor_failure)?;
        let ms = t.elapsed().as_secs_f64() * 1e3;
        let ratios: Vec<f64> = seq.steps.iter().map(|s| s.shrink_ratio).collect();
        let mean = if ratios.is_empty() { 0.0 } else { ratios.iter().sum::<f64>() / ratios.len() as f64 };
        report.lines.push(format!(
            "{:>9} {:>9} {:>6} {:>9} {:>9} {:>10.4} {:>10.1}",
            g.n(),
            g.m(),
            seq.steps.len(),
            seq.last.n(),
            seq.last.m(),
            mean,
            ms
        ));
        if level != VerifyLevel::Off {
            report.check(format!("n={}: steps verify", g.n()), seq.steps.iter().all(|s| s.output.transcript.passed()));
        }
        report.n = report.n.max(g.n());
        report.m = report.m.max(g.m());
        rows.push(json!({
            "n": g.n(), "m": g.m(), "steps": seq.steps.len(),
            "final_n": seq.last.n(), "final_m": seq.last.m(),
            "shrink_ratios": ratios, "termination": seq.termination, "ms": ms,
        }));
    }
    report.output = format!("{} rows for {family:?}", rows.len());
    report.detail = json!({ "family": format!("{family:?}"), "seed": seed, "rows": rows });
    Ok(Outcome::new(report))
}

fn cmd_oracle(g: &Graph, terminals: Option<[usize; 4]>) -> Result<Outcome> {
    let mut report = RunReport::new("oracle", g.n(), g.m());
    let three = bf_is_3_connected(g).map_err(|e| anyhow!("{e}"))?;
    let mut parts = vec![format!("3-connected: {three}")];
    let mut detail = json!({ "three_connected": three });
    if let Some([s1, t1, s2, t2]) = terminals {
        for v in [s1, t1, s2, t2] {
            if !g.contains(v) {
                bail!("terminal {v} is not in the graph");
            }
        }
        let paths = bf_two_disjoint_paths(g, s1, t1, s2, t2).map_err(|e| anyhow!("{e}"))?;
        parts.push(format!("two paths: {}", paths.is_some()));
        detail["paths"] = json!(paths);
    }
    report.output = parts.join(", ");
    report.detail = detail;
    Ok(Outcome::new(report))
}

fn cmd_verify(g: &Graph, terminals: [usize; 4], path: &str) -> Result<Outcome> {
    let mut report = RunReport::new("verify", g.n(), g.m());
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let value: serde_json::Value = serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
    // Either a bare certificate or the report written by `solve --json`.
    let cert_value = value.get("detail").cloned().unwrap_or(value);
    let cert: DrpCertificate = serde_json::from_value(cert_value).context("not a certificate")?;
    let inst = DrpInstance::new(g.clone(), terminals)?;
    let ok = verify_certificate(&inst, &cert);
    report.output = if ok { "certificate valid".into() } else { "certificate rejected".into() };
    report.check("certificate_verifies", ok);
    Ok(Outcome::new(report))
}
