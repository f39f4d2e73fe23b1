use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DrpError {
    #[error("bad terminals: {0}")]
    BadTerminals(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrpInstance {
    pub graph: Graph,
    pub s1: Vertex,
    pub t1: Vertex,
    pub s2: Vertex,
    pub t2: Vertex,
}

impl DrpInstance {
    /// Terminals in the order `[s1, t1, s2, t2]`; they must be distinct
    /// vertices of `graph`.
    pub fn new(graph: Graph, terminals: [Vertex; 4]) -> Result<Self, DrpError> {
        for (i, &a) in terminals.iter().enumerate() {
            if !graph.contains(a) {
                return Err(DrpError::BadTerminals(format!("vertex {a} is not in the graph")));
            }
            if terminals[..i].contains(&a) {
                return Err(DrpError::BadTerminals(format!("vertex {a} is repeated")));
            }
        }
        let [s1, t1, s2, t2] = terminals;
        Ok(DrpInstance { graph, s1, t1, s2, t2 })
    }

    pub fn terminals(&self) -> [Vertex; 4] {
        [self.s1, self.t1, self.s2, self.t2]
    }
}

/// The instance graph plus a hub joined to the terminals and the cycle
/// s1 s2 t1 t2. Ids of the instance are kept; the hub gets the next id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryGraph {
    #[serde(skip)]
    pub graph: Graph,
    pub hub: Vertex,
    /// `[s1, t1, s2, t2]`.
    pub terminals: [Vertex; 4],
    /// Cycle edges that were not already in the instance.
    pub added_cycle_edges: Vec<(Vertex, Vertex)>,
}

impl AuxiliaryGraph {
    /// The five root vertices, sorted.
    pub fn roots(&self) -> [Vertex; 5] {
        let [a, b, c, d] = self.terminals;
        let mut r = [self.hub, a, b, c, d];
        r.sort_unstable();
        r
    }

    /// The cycle s1 s2 t1 t2 as edges with the smaller end first.
    pub fn cycle_edges(&self) -> [(Vertex, Vertex); 4] {
        let [s1, t1, s2, t2] = self.terminals;
        [(s1, s2), (s2, t1), (t1, t2), (t2, s1)].map(|(a, b)| (a.min(b), a.max(b)))
    }

    /// Edges that belong to the construction rather than to the instance:
    /// the hub's edges and the whole terminal cycle. Neither kind can lie
    /// on a solution path.
    pub fn is_frame_edge(&self, a: Vertex, b: Vertex) -> bool {
        let e = (a.min(b), a.max(b));
        a == self.hub || b == self.hub || self.cycle_edges().contains(&e)
    }
}

pub fn build_auxiliary(inst: &DrpInstance) -> AuxiliaryGraph {
    let mut g = inst.graph.clone();
    let hub = g.add_vertex();
    let terminals = inst.terminals();
    for t in terminals {
        g.add_edge(hub, t);
    }
    let mut aux = AuxiliaryGraph { graph: Graph::new(0), hub, terminals, added_cycle_edges: Vec::new() };
    for (a, b) in aux.cycle_edges() {
        if g.add_edge(a, b) {
            aux.added_cycle_edges.push((a, b));
        }
    }
    aux.graph = g;
    aux
}
