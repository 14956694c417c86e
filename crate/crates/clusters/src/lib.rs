//! Boundary clusters of small faces: patch growth, exhaustive cluster
//! generation, and the local parity criterion.

pub mod check;
pub mod generate;
pub mod patch;

pub use check::{parity_check, ParityCfg, ParityReport};
pub use generate::{generate_clusters, ClusterDatabase, ClusterRecord, GenCfg};
pub use patch::{Patch, Slot};
