use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::instance::{build_auxiliary, DrpInstance};
use super::reduction::{CutOff, Reduction};
use super::root::root_graph;
use crate::connectivity::planarity::PlanarEmbedding;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strength {
    /// Some separator is not a face.
    None,
    Strong,
    FerociouslyStrong,
    /// Strong, but a cut-off piece was too large to search for a split.
    Undecided,
}

/// Why a separator satisfies the ferocious condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SeparatorWitness {
    /// At least two pieces attach at the separator.
    Shared { separator: [Vertex; 3], pieces: usize },
    /// The single piece splits into two connected halves, each adjacent to
    /// all three separator vertices.
    Split { separator: [Vertex; 3], red: Vec<Vertex>, yellow: Vec<Vertex> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DrpCertificate {
    TwoPaths {
        p1: Vec<Vertex>,
        p2: Vec<Vertex>,
    },
    /// A planar reduction of the root graph. Vertex ids are those of the
    /// instance, with the hub numbered one past the largest instance id.
    PlanarReduction {
        vertices: Vec<Vertex>,
        separators: Vec<[Vertex; 3]>,
        #[serde(with = "string_keys")]
        rotation: BTreeMap<Vertex, Vec<Vertex>>,
        strength: Strength,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        witnesses: Vec<SeparatorWitness>,
    },
}

/// Integer map keys as JSON strings, readable back inside tagged enums.
mod string_keys {
    use std::collections::BTreeMap;

    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::graph::Vertex;

    pub fn serialize<S: Serializer>(m: &BTreeMap<Vertex, Vec<Vertex>>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vertex, Vec<Vertex>>, D::Error> {
        BTreeMap::<String, Vec<Vertex>>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(D::Error::custom))
            .collect()
    }
}

impl DrpCertificate {
    pub fn has_paths(&self) -> bool {
        matches!(self, DrpCertificate::TwoPaths { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FerociousError {
    #[error("piece of {size} vertices at {separator:?} is too large to search")]
    ComponentTooLarge { separator: [Vertex; 3], size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerociousVerdict {
    pub holds: bool,
    pub witnesses: Vec<SeparatorWitness>,
    /// First separator that fails, when `holds` is false.
    pub failing: Option<[Vertex; 3]>,
}

/// Every separator bounds a face.
pub fn check_strong(r: &Reduction, emb: &PlanarEmbedding) -> bool {
    r.separators().into_iter().all(|x| emb.has_triangular_face(x))
}

/// Strong, and each separator either carries two pieces or its one piece
/// splits into two connected halves both seeing the whole separator.
/// Pieces up to `cutoff` vertices are searched exhaustively.
pub fn check_ferociously_strong(
    r: &Reduction,
    emb: &PlanarEmbedding,
    cutoff: usize,
) -> Result<FerociousVerdict, FerociousError> {
    if !check_strong(r, emb) {
        let failing = r.separators().into_iter().find(|&x| !emb.has_triangular_face(x));
        return Ok(FerociousVerdict { holds: false, witnesses: Vec::new(), failing });
    }
    let mut witnesses = Vec::new();
    let mut too_large = None;
    for x in r.separators() {
        let pieces: Vec<&CutOff> = r.cut_offs_at(x).collect();
        if pieces.len() >= 2 {
            witnesses.push(SeparatorWitness::Shared { separator: x, pieces: pieces.len() });
            continue;
        }
        match split_piece(&r.host, &pieces[0].vertices, x, cutoff) {
            Ok(Some((red, yellow))) => witnesses.push(SeparatorWitness::Split { separator: x, red, yellow }),
            Ok(None) => return Ok(FerociousVerdict { holds: false, witnesses, failing: Some(x) }),
            Err(e) => {
                too_large.get_or_insert(e);
            }
        }
    }
    match too_large {
        Some(e) => Err(e),
        None => Ok(FerociousVerdict { holds: true, witnesses, failing: None }),
    }
}

/// A partition of `piece` into two connected parts each adjacent to every
/// vertex of `x`. Tries the splits of a spanning tree first, then every
/// subset if the piece has at most `cutoff` vertices.
pub fn split_piece(
    host: &Graph,
    piece: &[Vertex],
    x: [Vertex; 3],
    cutoff: usize,
) -> Result<Option<(Vec<Vertex>, Vec<Vertex>)>, FerociousError> {
    let k = piece.len();
    if k < 2 {
        return Ok(None);
    }
    let index: BTreeMap<Vertex, usize> = piece.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let local: Vec<Vec<usize>> =
        piece.iter().map(|&v| host.neighbors(v).iter().filter_map(|w| index.get(w).copied()).collect()).collect();
    let sees: Vec<[bool; 3]> = piece.iter().map(|&v| x.map(|s| host.has_edge(v, s))).collect();
    let covers = |part: &[bool], want: bool| -> bool {
        (0..3).all(|j| (0..k).any(|i| part[i] == want && sees[i][j]))
    };
    let to_sets = |part: &[bool]| -> (Vec<Vertex>, Vec<Vertex>) {
        let red = (0..k).filter(|&i| part[i]).map(|i| piece[i]).collect();
        let yellow = (0..k).filter(|&i| !part[i]).map(|i| piece[i]).collect();
        (red, yellow)
    };
    // Spanning tree splits: both sides are connected by construction.
    let mut parent = vec![usize::MAX; k];
    let mut order = vec![0];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &w in &local[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    if order.len() == k {
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); k];
        for &v in &order[1..] {
            children[parent[v]].push(v);
        }
        for &top in &order[1..] {
            let mut part = vec![false; k];
            let mut stack = vec![top];
            while let Some(v) = stack.pop() {
                part[v] = true;
                stack.extend_from_slice(&children[v]);
            }
            if covers(&part, true) && covers(&part, false) {
                return Ok(Some(to_sets(&part)));
            }
        }
    }
    if k > cutoff.min(30) {
        return Err(FerociousError::ComponentTooLarge { separator: x, size: k });
    }
    let nbr: Vec<u32> = local.iter().map(|ns| ns.iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let seen_by: Vec<u32> = (0..3).map(|j| (0..k).filter(|&i| sees[i][j]).fold(0u32, |m, i| m | 1 << i)).collect();
    let full: u32 = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
    let connected = |set: u32| -> bool {
        let start = set & set.wrapping_neg();
        let mut reach = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = nbr[v] & set & !reach;
            reach |= new;
            frontier |= new;
        }
        reach == set
    };
    // Vertex 0 is always red, so each partition is met once.
    for rest in 0..(full >> 1) {
        let red = (rest << 1) | 1;
        let yellow = full & !red;
        if seen_by.iter().any(|&s| s & red == 0 || s & yellow == 0) {
            continue;
        }
        if connected(red) && connected(yellow) {
            let part: Vec<bool> = (0..k).map(|i| red >> i & 1 == 1).collect();
            return Ok(Some(to_sets(&part)));
        }
    }
    Ok(None)
}

fn valid_path(g: &Graph, p: &[Vertex], from: Vertex, to: Vertex) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    !p.is_empty()
        && p[0] == from
        && p[p.len() - 1] == to
        && p.iter().all(|&v| g.contains(v) && seen.insert(v))
        && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

fn connected_in(host: &Graph, part: &[Vertex]) -> bool {
    let sub = host.induced(part);
    sub.n() == part.len() && crate::decomposition::blocks::is_connected(&sub)
}

/// Re-checks a certificate from scratch against the instance.
pub fn verify_certificate(inst: &DrpInstance, cert: &DrpCertificate) -> bool {
    match cert {
        DrpCertificate::TwoPaths { p1, p2 } => {
            valid_path(&inst.graph, p1, inst.s1, inst.t1)
                && valid_path(&inst.graph, p2, inst.s2, inst.t2)
                && p1.iter().all(|v| !p2.contains(v))
        }
        DrpCertificate::PlanarReduction { vertices, separators, rotation, strength, witnesses } => {
            let aux = build_auxiliary(inst);
            let root = root_graph(&aux);
            let Ok(r) = Reduction::from_kept(&root.graph, vertices) else { return false };
            if r.kept != *vertices || r.check(&aux.roots()).is_err() || r.separators() != *separators {
                return false;
            }
            let Some(emb) = PlanarEmbedding::from_rotation(rotation.clone()) else { return false };
            if emb.verify(&r.graph).is_err() {
                return false;
            }
            match strength {
                Strength::None => true,
                Strength::Strong | Strength::Undecided => check_strong(&r, &emb),
                Strength::FerociouslyStrong => {
                    check_strong(&r, &emb)
                        && r.separators().into_iter().all(|x| {
                            let pieces: Vec<&CutOff> = r.cut_offs_at(x).collect();
                            pieces.len() >= 2
                                || witnesses.iter().any(|w| match w {
                                    SeparatorWitness::Split { separator, red, yellow } if *separator == x => {
                                        let mut both: Vec<Vertex> = red.iter().chain(yellow).copied().collect();
                                        both.sort_unstable();
                                        both == pieces[0].vertices
                                            && connected_in(&r.host, red)
                                            && connected_in(&r.host, yellow)
                                            && x.iter().all(|&s| {
                                                red.iter().any(|&v| r.host.has_edge(v, s))
                                                    && yellow.iter().any(|&v| r.host.has_edge(v, s))
                                            })
                                    }
                                    _ => false,
                                })
                        })
                }
            }
        }
    }
}
