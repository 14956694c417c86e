//! Certification of Hamilton cycles.

use crate::embedding::{PlanarEmbedding, Vertex};
use std::fmt;

/// A candidate Hamilton cycle as a cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamCycle(pub Vec<Vertex>);

impl HamCycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Canonical rotation: starts at vertex 0, second vertex is the smaller
    /// of the two neighbors on the cycle. Makes cycles comparable in tests.
    pub fn canonicalize(&mut self) {
        if self.0.is_empty() {
            return;
        }
        let pos = self.0.iter().position(|&v| v == 0).unwrap_or(0);
        self.0.rotate_left(pos);
        if self.0.len() > 2 && self.0[1] > *self.0.last().unwrap() {
            self.0[1..].reverse();
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleDefect {
    NotSpanning,
    RepeatedVertex(Vertex),
    VertexOutOfRange(Vertex),
    NonEdge(Vertex, Vertex),
}

impl fmt::Display for CycleDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleDefect::NotSpanning => write!(f, "not_spanning"),
            CycleDefect::RepeatedVertex(v) => write!(f, "repeated_vertex:{v}"),
            CycleDefect::VertexOutOfRange(v) => write!(f, "vertex_out_of_range:{v}"),
            CycleDefect::NonEdge(u, v) => write!(f, "non_edge:{u}-{v}"),
        }
    }
}

/// Check that `cycle` is a spanning cycle of `emb` using only its edges.
pub fn check_hamiltonian(emb: &PlanarEmbedding, cycle: &HamCycle) -> Result<(), CycleDefect> {
    let n = emb.n_vertices();
    if cycle.len() != n {
        return Err(CycleDefect::NotSpanning);
    }
    let mut seen = vec![false; n];
    for &v in &cycle.0 {
        if v >= n {
            return Err(CycleDefect::VertexOutOfRange(v));
        }
        if seen[v] {
            return Err(CycleDefect::RepeatedVertex(v));
        }
        seen[v] = true;
    }
    for i in 0..n {
        let u = cycle.0[i];
        let v = cycle.0[(i + 1) % n];
        if !emb.has_edge(u, v) {
            return Err(CycleDefect::NonEdge(u, v));
        }
    }
    Ok(())
}

pub fn verify_hamiltonian(emb: &PlanarEmbedding, cycle: &HamCycle) -> bool {
    check_hamiltonian(emb, cycle).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn k4_cycle() {
        let g = construct::k4();
        assert!(verify_hamiltonian(&g, &HamCycle(vec![0, 1, 2, 3])));
    }

    #[test]
    fn k4_short_cycle_rejected() {
        let g = construct::k4();
        assert_eq!(
            check_hamiltonian(&g, &HamCycle(vec![0, 1, 2])),
            Err(CycleDefect::NotSpanning)
        );
    }

    #[test]
    fn non_edge_rejected() {
        let g = construct::cube();
        // 0 and 2 are opposite corners of the outer quad
        let r = check_hamiltonian(&g, &HamCycle(vec![0, 2, 1, 3, 4, 5, 6, 7]));
        assert!(matches!(r, Err(CycleDefect::NonEdge(_, _))));
    }
}
