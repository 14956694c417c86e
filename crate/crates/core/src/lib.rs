//! Core graph machinery for Hamilton cycle search in cubic polyhedral
//! graphs with faces of size at most 6: combinatorial-map embeddings,
//! format I/O, classification, reductions, canonical forms and the exact
//! brute-force solver.

pub mod builder;
pub mod canonical;
pub mod classify;
pub mod codec;
pub mod construct;
pub mod embedding;
pub mod oracle;
pub mod reduce;
pub mod spiral;
pub mod twofactor;
pub mod verify;

pub use classify::{classify, GraphClass, ScopeReason};
pub use embedding::{Dart, DualGraph, FaceSet, PlanarEmbedding, Vertex};
pub use oracle::{brute_hamilton, enumerate_2factors, enumerate_hamiltonian, OracleConfig, OracleError, SearchStats};
pub use reduce::{lift_cycle, reduce_to_barnette, ReduceError, ReductionStep, ReductionTrace, StepKind};
pub use twofactor::{FactorError, TwoFactor};
pub use verify::{check_hamiltonian, verify_hamiltonian, HamCycle};
