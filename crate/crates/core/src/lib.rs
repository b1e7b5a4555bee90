//! Compatible H-factors and tilings in graphs carrying an incompatibility
//! system.

pub mod absorb;
pub mod acceptance;
pub mod bitset;
pub mod chromatic;
pub mod cli;
pub mod construct;
pub mod error;
pub mod graph;
pub mod incompat;
pub mod rational;
pub mod regcount;
pub mod rng;
pub mod solver;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, MultipartiteSpec, VertexPartition};
pub use incompat::IncompatibilitySystem;
pub use rational::Rational;
