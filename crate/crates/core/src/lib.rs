//! Verification toolkit for spectral traceability conditions on connected
//! claw-free graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] – the immutable [`Graph`] value, set algebra, blocks,
//!   graph6 and canonical labelling;
//! * [`families`] – constructors for every named extremal graph;
//! * [`spectral`] – power-iteration spectral radius and the classical bounds;
//! * [`structure`] – forbidden induced subgraphs and the closure operation;
//! * [`hamilton`] – exact Hamilton path and cycle decisions;
//! * [`enumerate`] – isomorph-free generation and dense random samplers;
//! * [`verify`] – theorem verifiers producing [`verify::VerificationReport`]s.

pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod hamilton;
pub mod spectral;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{BlockDecomposition, Graph, VertexSet};
