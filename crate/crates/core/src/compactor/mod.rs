//! Shrinking a 3-connected graph by a constant fraction while keeping it
//! 3-connected and keeping a small set of protected vertices intact.
//!
//! [`compactor`] returns one shrinking operation; [`iterative_compactor`]
//! applies it until the graph is small or progress stalls.

pub mod cover;
pub mod gadgets;
pub mod low_density;
pub mod matching;
pub mod output;
pub mod params;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::certificate::dense_edge_deletion;
use crate::decomposition::triconnected::is_triconnected;
use crate::graph::{apply_minor_op, Graph, GraphError, Journal, Vertex};

pub use cover::{small_cover_embed, CoverError};
pub use gadgets::{find_leaf_gadget, find_path_gadget, GadgetContext, GadgetFinding};
pub use matching::{greedy_low_degree_matching, refine_matching};
pub use output::{verify_output, Check, CompactorOutput, Route, Shrink, Transcript};
pub use params::{CompactorParams, ParamError, VerifyLevel};

/// Most protected vertices a caller may pass.
pub const MAX_PROTECTED: usize = 5;

#[derive(Debug, Error)]
pub enum CompactorError {
    #[error("graph has {n} vertices, fewer than n0 = {n0}")]
    TooSmall { n: usize, n0: usize },
    #[error("graph is not 3-connected")]
    Not3Connected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check_protected(h: &Graph, protected: &[Vertex]) -> Result<(), CompactorError> {
    if protected.len() > MAX_PROTECTED {
        return Err(CompactorError::Precondition(format!(
            "{} protected vertices, at most {MAX_PROTECTED} allowed",
            protected.len()
        )));
    }
    for (i, &v) in protected.iter().enumerate() {
        if !h.contains(v) {
            return Err(CompactorError::Precondition(format!("protected vertex {v} is not in the graph")));
        }
        if protected[..i].contains(&v) {
            return Err(CompactorError::Precondition(format!("protected vertex {v} repeated")));
        }
    }
    Ok(())
}

fn is_dense(h: &Graph, c: usize) -> bool {
    h.m() > 2 * c * h.n()
}

fn finish(
    h: &Graph,
    protected: &[Vertex],
    params: &CompactorParams,
    level: VerifyLevel,
    shrink: Shrink,
    route: Route,
) -> Result<CompactorOutput, CompactorError> {
    let below_target = (shrink.len() as f64) < params.target(h.n(), h.m());
    let transcript = verify_output(h, protected, params, &shrink, level);
    if !transcript.passed() {
        let msg: Vec<String> = transcript
            .failures()
            .iter()
            .map(|c| format!("{} ({})", c.condition, c.witness.as_deref().unwrap_or("")))
            .collect();
        return Err(CompactorError::Verification(msg.join("; ")));
    }
    Ok(CompactorOutput { shrink, route, below_target, transcript })
}

fn step(
    h: &Graph,
    protected: &[Vertex],
    params: &CompactorParams,
    level: VerifyLevel,
) -> Result<CompactorOutput, CompactorError> {
    if is_dense(h, params.c) {
        let es = dense_edge_deletion(h, params.c, protected)
            .map_err(|e| CompactorError::Precondition(e.to_string()))?;
        return finish(h, protected, params, level, Shrink::EdgeSet(es), Route::DenseEdgeDeletion);
    }
    let (shrink, route) = low_density::sparse_step(h, params, protected);
    finish(h, protected, params, level, shrink, route)
}

/// One shrinking operation for a 3-connected `h` with at least `n0`
/// vertices. Dense graphs lose edges outside a sparse certificate; sparse
/// ones go through the low-density compactor.
pub fn compactor(
    h: &Graph,
    protected: &[Vertex],
    params: &CompactorParams,
    level: VerifyLevel,
) -> Result<CompactorOutput, CompactorError> {
    check_protected(h, protected)?;
    if h.n() < params.n0 {
        return Err(CompactorError::TooSmall { n: h.n(), n0: params.n0 });
    }
    if !is_triconnected(h) {
        return Err(CompactorError::Not3Connected);
    }
    step(h, protected, params, level)
}

/// The low-density compactor on its own; `h` must have at most 2c|V| edges.
pub fn low_density_compactor(
    h: &Graph,
    protected: &[Vertex],
    params: &CompactorParams,
    level: VerifyLevel,
) -> Result<CompactorOutput, CompactorError> {
    check_protected(h, protected)?;
    if h.n() < params.n0 {
        return Err(CompactorError::TooSmall { n: h.n(), n0: params.n0 });
    }
    if is_dense(h, params.c) {
        return Err(CompactorError::Precondition(format!(
            "{} edges exceed 2c|V| = {}",
            h.m(),
            2 * params.c * h.n()
        )));
    }
    if !is_triconnected(h) {
        return Err(CompactorError::Not3Connected);
    }
    let (shrink, route) = low_density::sparse_step(h, params, protected);
    finish(h, protected, params, level, shrink, route)
}

/// Deletes the stable set outside a highly connected subgraph spanned
/// around the small cover (high-degree, protected and matched vertices).
pub fn stable_set_output(
    h: &Graph,
    protected: &[Vertex],
    params: &CompactorParams,
    level: VerifyLevel,
) -> Result<CompactorOutput, CompactorError> {
    check_protected(h, protected)?;
    let m = greedy_low_degree_matching(h, params.d, protected);
    let cover = low_density::small_cover(h, params.d, protected, &m.vertices());
    let limit = low_density::cover_limit(h, params);
    if cover.len() > limit {
        return Err(CoverError::CoverTooLarge { size: cover.len(), limit }.into());
    }
    let s = low_density::stable_set_from_cover(h, &cover, params.c)?;
    finish(h, protected, params, level, Shrink::StableSet(s), Route::SmallCover)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    /// Fewer than n0 vertices remain.
    BelowN0,
    /// The last step removed less than delta (|V| + |E|), or nothing.
    ShrinkBelowTarget,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompactionStep {
    pub output: CompactorOutput,
    pub before: (usize, usize),
    pub after: (usize, usize),
    /// Payload size over |V| + |E| before the step.
    pub shrink_ratio: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompactionSequence {
    pub protected: Vec<Vertex>,
    pub steps: Vec<CompactionStep>,
    pub journal: Journal,
    pub termination: Termination,
    #[serde(skip)]
    pub last: Graph,
}

impl CompactionSequence {
    /// Every graph of the sequence, starting with `start`.
    pub fn replay(&self, start: &Graph) -> Result<Vec<Graph>, GraphError> {
        let mut out = vec![start.clone()];
        for op in &self.journal.ops {
            let (g, _) = apply_minor_op(out.last().unwrap(), op, &self.protected)?;
            out.push(g);
        }
        Ok(out)
    }

    /// Replays from `start` and checks each graph with `is_3_connected`,
    /// the recorded sizes, and that the end matches `last`.
    pub fn audit(&self, start: &Graph, is_3_connected: impl Fn(&Graph) -> bool) -> Result<(), String> {
        let graphs = self.replay(start).map_err(|e| e.to_string())?;
        for (i, g) in graphs.iter().enumerate() {
            if !is_3_connected(g) {
                return Err(format!("graph {i} of the sequence is not 3-connected"));
            }
            if let Some(&v) = self.protected.iter().find(|&&v| !g.contains(v)) {
                return Err(format!("protected vertex {v} lost in graph {i}"));
            }
        }
        for (i, s) in self.steps.iter().enumerate() {
            let (a, b) = (&graphs[i], &graphs[i + 1]);
            if s.before != (a.n(), a.m()) || s.after != (b.n(), b.m()) {
                return Err(format!("step {i} records wrong sizes"));
            }
        }
        let end = graphs.last().unwrap();
        if end.edge_list() != self.last.edge_list() || end.vertex_list() != self.last.vertex_list() {
            return Err("replay does not end at the recorded graph".into());
        }
        Ok(())
    }
}

/// Applies [`compactor`] until fewer than n0 vertices remain or a step
/// shrinks by less than the target.
pub fn iterative_compactor(
    t: &Graph,
    protected: &[Vertex],
    params: &CompactorParams,
    level: VerifyLevel,
) -> Result<CompactionSequence, CompactorError> {
    check_protected(t, protected)?;
    if !is_triconnected(t) {
        return Err(CompactorError::Not3Connected);
    }
    let mut g = t.clone();
    let mut steps = Vec::new();
    let mut journal = Journal::default();
    let termination = loop {
        if g.n() < params.n0 {
            break Termination::BelowN0;
        }
        // Each graph is 3-connected by the check on the previous step.
        let out = step(&g, protected, params, level)?;
        if out.shrink.is_empty() {
            break Termination::ShrinkBelowTarget;
        }
        let op = out.shrink.minor_op();
        let (next, _) = apply_minor_op(&g, &op, protected)?;
        let before = (g.n(), g.m());
        let after = (next.n(), next.m());
        let shrink_ratio = out.shrink.len() as f64 / (before.0 + before.1) as f64;
        let stop = out.below_target;
        steps.push(CompactionStep { output: out, before, after, shrink_ratio });
        journal.ops.push(op);
        g = next;
        if stop {
            break Termination::ShrinkBelowTarget;
        }
    };
    Ok(CompactionSequence { protected: protected.to_vec(), steps, journal, termination, last: g })
}
