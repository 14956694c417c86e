//! Constructive Hamilton cycle pipeline: cut-path coloring, 2-factor
//! completion, parity repair and resonant-hexagon gluing.

pub mod coloring;
pub mod factor;
pub mod glue;
pub mod hamilton;

pub use coloring::{build_cut_path, configurations, three_coloring, ColoringError, DualPath, SplitColoring};
pub use factor::{cycle_parity, free_faces, search_factors, valid_structure, FactorCfg, FactorStats};
pub use glue::{glue, GlueError, GlueStep, StepKind};
pub use hamilton::{find_hamilton, Certificate, FailureReport, Outcome, PipelineCfg, PipelineStats, Stage};
