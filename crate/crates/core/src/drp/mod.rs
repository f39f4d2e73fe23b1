//! Two disjoint rooted paths: given terminals s1, t1, s2, t2, find disjoint
//! paths s1–t1 and s2–t2, or certify that none exist with a planar
//! reduction of the root graph.
//!
//! The instance is turned into the auxiliary graph (a new vertex joined to
//! the four terminals plus the cycle s1 s2 t1 t2), cut down to its
//! triconnected component around the five root vertices, and reduced along
//! 3-cuts that split off pieces away from the roots. The paths exist
//! exactly when the fully reduced graph is non-planar.

pub mod certificate;
pub mod instance;
pub mod reduction;
pub mod root;
pub mod solve;

pub use certificate::{check_ferociously_strong, check_strong, verify_certificate, DrpCertificate, Strength};
pub use instance::{build_auxiliary, AuxiliaryGraph, DrpError, DrpInstance};
pub use reduction::{find_reducible_3cut, irreducible_reduction, reduce, Reduction};
pub use root::{root_graph, RootGraph};
pub use solve::{decide, solve, SolveConfig};
