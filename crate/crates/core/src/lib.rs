//! Weighted metrics on the space of walks of a finite graph, Lipschitz
//! evaluations and their duality pairings with walks, McShane/Whitney
//! extension of partially known evaluations, and proximity functions used
//! to cluster walks around reference walks.
//!
//! All quantities are exact rationals ([`rational::Q`]); decimals appear
//! only when rendering.

// Error payloads carry exact rationals; errors are off the hot path.
#![allow(clippy::result_large_err)]

pub mod cli;
pub mod error;
pub mod evaluation;
pub mod extension;
pub mod fixture;
pub mod graph;
pub mod io;
pub mod proximity;
pub mod rational;
pub mod walk;

pub use error::{Error, Result};
pub use evaluation::{Evaluation, NormWitness};
pub use extension::{AnchorPolicy, PartialEvaluation};
pub use graph::{Graph, Vertex};
pub use proximity::{ProximityModel, WeightSequence};
pub use rational::Q;
pub use walk::{d_tau, d_tau_periodic, d_tau_restricted, restrict, IndexSet, PeriodicSeq, VertexSeq, Walk, WeightScheme};
