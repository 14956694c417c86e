//! End-to-end driver: classify, reduce, color, complete a 2-factor,
//! glue, lift, verify.
//!
//! The constructive stages are deterministic but depend on a handful of
//! discrete choices (where the cut path starts, which of the three
//! corner colors seeds the face coloring, how far the recoloring search
//! may roam). The driver walks a short ladder of these settings and
//! returns the first certificate; a certificate is always re-verified
//! against the input graph, so the ladder can be arbitrary without
//! risking a wrong answer.

use crate::coloring::build_cut_path;
use crate::coloring::three_coloring;
use crate::factor::{free_faces, search_factors, FactorCfg};
use crate::glue::{glue, GlueStep};
use barnette_core::{
    brute_hamilton, classify, lift_cycle, reduce_to_barnette, verify_hamiltonian, DualGraph,
    GraphClass, HamCycle, OracleConfig, PlanarEmbedding, ScopeReason,
};

#[derive(Debug, Clone)]
pub struct PipelineCfg {
    /// refuse the brute-force fallback: fail instead
    pub strict: bool,
    /// search nodes per factor-search rung
    pub budget: u64,
    /// keep the gluing trace in the certificate
    pub trace: bool,
}

impl Default for PipelineCfg {
    fn default() -> Self {
        PipelineCfg { strict: false, budget: 200_000, trace: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Reduce,
    CutPath,
    Coloring,
    Factor,
    Glue,
    Lift,
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Stage::Reduce => "reduce",
            Stage::CutPath => "cut-path",
            Stage::Coloring => "coloring",
            Stage::Factor => "factor",
            Stage::Glue => "glue",
            Stage::Lift => "lift",
        };
        f.write_str(s)
    }
}

/// How the cycle was found, per stage of the run.
#[derive(Debug, Clone, Default)]
pub struct PipelineStats {
    pub class: Option<GraphClass>,
    pub reduction_steps: usize,
    pub reduced_n: usize,
    pub rungs_tried: usize,
    pub factor_cycles: usize,
    pub glue_steps: usize,
    pub used_oracle: bool,
}

#[derive(Debug, Clone)]
pub struct Certificate {
    /// Hamilton cycle of the input graph, verified
    pub cycle: HamCycle,
    pub stats: PipelineStats,
    /// gluing steps on the reduced graph, when tracing is on
    pub glue_trace: Vec<GlueStep>,
}

#[derive(Debug, Clone)]
pub struct FailureReport {
    pub stage: Stage,
    pub detail: String,
    pub stats: PipelineStats,
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Certified(Box<Certificate>),
    OutOfScope(ScopeReason),
    Failed(FailureReport),
}

impl Outcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Outcome::Certified(c) => Some(c),
            _ => None,
        }
    }
}

/// Find and certify a Hamilton cycle of `g`.
pub fn find_hamilton(g: &PlanarEmbedding, cfg: &PipelineCfg) -> Outcome {
    let mut stats = PipelineStats::default();
    let class = classify(g);
    if let GraphClass::OutOfScope(reason) = &class {
        return Outcome::OutOfScope(reason.clone());
    }
    stats.class = Some(class);

    let trace = match reduce_to_barnette(g) {
        Ok(t) => t,
        Err(e) => {
            return Outcome::Failed(FailureReport {
                stage: Stage::Reduce,
                detail: e.to_string(),
                stats,
            })
        }
    };
    stats.reduction_steps = trace.steps.len();
    stats.reduced_n = trace.final_graph.n_vertices();

    let reduced = &trace.final_graph;
    let found = if trace.is_terminal() {
        // K4 or the cube; a direct search is the base case here
        brute_hamilton(reduced, &OracleConfig::default())
            .ok()
            .flatten()
            .map(|c| (c, Vec::new()))
            .ok_or(FailureReport {
                stage: Stage::Factor,
                detail: "terminal graph has no Hamilton cycle".into(),
                stats: stats.clone(),
            })
    } else {
        core_pipeline(reduced, cfg, &mut stats)
    };

    let (cycle, glue_trace) = match found {
        Ok(x) => x,
        Err(mut report) => {
            if !cfg.strict {
                if let Ok(Some(c)) = brute_hamilton(g, &OracleConfig::default()) {
                    stats.used_oracle = true;
                    debug_assert!(verify_hamiltonian(g, &c));
                    return Outcome::Certified(Box::new(Certificate {
                        cycle: c,
                        stats,
                        glue_trace: Vec::new(),
                    }));
                }
            }
            report.stats = stats;
            return Outcome::Failed(report);
        }
    };

    let lifted = match lift_cycle(&trace, &cycle) {
        Ok(c) => c,
        Err(e) => {
            return Outcome::Failed(FailureReport {
                stage: Stage::Lift,
                detail: e.to_string(),
                stats,
            })
        }
    };
    if !verify_hamiltonian(g, &lifted) {
        return Outcome::Failed(FailureReport {
            stage: Stage::Lift,
            detail: "lifted cycle failed verification".into(),
            stats,
        });
    }
    Outcome::Certified(Box::new(Certificate {
        cycle: lifted,
        stats,
        glue_trace: if cfg.trace { glue_trace } else { Vec::new() },
    }))
}

/// The constructive stages on an irreducible graph.
fn core_pipeline(
    g: &PlanarEmbedding,
    cfg: &PipelineCfg,
    stats: &mut PipelineStats,
) -> Result<(HamCycle, Vec<GlueStep>), FailureReport> {
    let faces = g.faces();
    let dual = DualGraph::build(g, &faces);
    let mut last_stage = Stage::CutPath;
    let mut last_detail = String::from("no cut path found");
    for start in 0..4 {
        let path = match build_cut_path(&faces, &dual, start) {
            Ok(p) => p,
            Err(e) => {
                last_detail = e.to_string();
                continue;
            }
        };
        let coloring = match three_coloring(g, &faces, &path) {
            Ok(c) => c,
            Err(e) => {
                last_stage = Stage::Coloring;
                last_detail = e.to_string();
                continue;
            }
        };
        for choice in 1..=3u8 {
            let seed = coloring.grey_faces(choice);
            let all = vec![true; faces.n_faces()];
            let rungs: [(Vec<bool>, usize); 3] = [
                (free_faces(&faces, &dual, &path.faces, 1), 2),
                (free_faces(&faces, &dual, &path.faces, 2), 3),
                (all, faces.n_faces()),
            ];
            for (free, max_region) in rungs {
                stats.rungs_tried += 1;
                let fcfg = FactorCfg {
                    max_region,
                    node_budget: cfg.budget,
                    ..Default::default()
                };
                let mut hit: Option<(HamCycle, Vec<GlueStep>, usize)> = None;
                let (_, fstats) =
                    search_factors(g, &faces, &dual, &seed, &free, &fcfg, &mut |f, grey| {
                        match glue(g, &faces, f, grey) {
                            Ok((cycle, steps)) => {
                                hit = Some((cycle, steps, f.n_cycles()));
                                true
                            }
                            Err(_) => false,
                        }
                    });
                if let Some((cycle, steps, c)) = hit {
                    stats.factor_cycles = c;
                    stats.glue_steps = steps.len();
                    return Ok((cycle, steps));
                }
                last_stage = if fstats.candidates > 0 { Stage::Glue } else { Stage::Factor };
                last_detail = format!(
                    "no gluable factor ({} candidates, {} nodes)",
                    fstats.candidates, fstats.nodes
                );
            }
        }
    }
    Err(FailureReport {
        stage: last_stage,
        detail: last_detail,
        stats: stats.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use barnette_core::construct::{cube, dodecahedron};
    use barnette_core::spiral::all_fullerenes;

    fn certify(g: &PlanarEmbedding, strict: bool) -> Certificate {
        let cfg = PipelineCfg { strict, trace: true, ..Default::default() };
        match find_hamilton(g, &cfg) {
            Outcome::Certified(c) => *c,
            other => panic!("n={}: {:?}", g.n_vertices(), other),
        }
    }

    #[test]
    fn certifies_the_platonic_barnette_graphs() {
        for g in [cube(), dodecahedron()] {
            let c = certify(&g, true);
            assert!(verify_hamiltonian(&g, &c.cycle));
            assert!(!c.stats.used_oracle);
        }
    }

    #[test]
    fn certifies_small_fullerenes_strictly() {
        for n in (20..=32usize).step_by(2) {
            for g in all_fullerenes(n) {
                let c = certify(&g, true);
                assert!(verify_hamiltonian(&g, &c.cycle));
                assert!(!c.stats.used_oracle);
            }
        }
    }

    #[test]
    fn rejects_out_of_scope_graphs() {
        // a path-shaped embedding is not cubic
        let g = PlanarEmbedding::from_rotations(&[vec![1], vec![0]]).unwrap();
        match find_hamilton(&g, &PipelineCfg::default()) {
            Outcome::OutOfScope(_) => {}
            other => panic!("{other:?}"),
        }
    }
}
