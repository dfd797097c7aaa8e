//! Trigraphs, homogeneous pairs of strong cliques, and optimal
//! antithickenings of claw-free trigraphs.
//!
//! The main entry point is [`optimal_antithickening`], which contracts the
//! maximal square-connected homogeneous pairs of strong cliques of a
//! connected non-degenerate trigraph to semiedges. [`schposc`] grows one
//! such pair from a seed in linear time, and [`oracle`] holds brute-force
//! reference implementations for small inputs.

pub mod antithicken;
pub mod cli;
mod dsu;
pub mod error;
pub mod format;
pub mod gen;
pub mod oracle;
pub mod schposc;
pub mod set;
pub mod structure;
pub mod trigraph;

pub use antithicken::{
    compose_thickenings, is_laminar, optimal_antithickening, verify_thickening, AntithickenOptions,
    AntithickeningResult, ThickeningMap,
};
pub use error::{Error, Result};
pub use schposc::schposc;
pub use set::VertexSet;
pub use structure::CliquePair;
pub use trigraph::{Adjacency, Classification, Trigraph, TrigraphBuilder};
