//! 2-factors in the modified sense: spanning subgraphs whose components
//! are cycles or isolated edges, the isolated edges counting as 2-cycles.
//! Stored as per-edge multiplicities (an isolated edge has multiplicity 2)
//! so that every vertex has factor degree exactly 2.

use crate::embedding::{Dart, FaceSet, PlanarEmbedding, Vertex};
use thiserror::Error;

/// Edge id: the smaller of the two dart ids of an edge.
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("vertex {0} has factor degree {1}, expected 2")]
    BadDegree(Vertex, u8),
    #[error("edge multiplicity out of range")]
    BadMultiplicity,
    #[error("hexagon {0} is not resonant")]
    NotResonant(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    /// multiplicity per dart (same value on both darts of an edge)
    mult: Vec<u8>,
    /// cycles as vertex sequences; a multiplicity-2 edge appears as [u, v]
    cycles: Vec<Vec<Vertex>>,
    /// cycle id per dart, None for edges outside the factor
    cycle_of: Vec<Option<u32>>,
}

impl TwoFactor {
    /// Build from per-dart multiplicities, checking 2-regularity.
    pub fn from_multiplicities(
        emb: &PlanarEmbedding,
        mult: Vec<u8>,
    ) -> Result<TwoFactor, FactorError> {
        assert_eq!(mult.len(), emb.n_darts());
        for d in 0..mult.len() {
            if mult[d] > 2 {
                return Err(FactorError::BadMultiplicity);
            }
            if mult[d] != mult[emb.twin(d)] {
                return Err(FactorError::BadMultiplicity);
            }
        }
        for v in 0..emb.n_vertices() {
            let deg: u8 = emb.darts_at(v).iter().map(|&d| mult[d]).sum();
            if deg != 2 {
                return Err(FactorError::BadDegree(v, deg));
            }
        }
        let (cycles, cycle_of) = trace_cycles(emb, &mult);
        Ok(TwoFactor { mult, cycles, cycle_of })
    }

    /// Build from a set of edges (each used once unless isolated). Edges
    /// whose both endpoints have degree 1 in the set get multiplicity 2.
    pub fn from_edge_set(
        emb: &PlanarEmbedding,
        in_factor: impl Fn(Dart) -> bool,
    ) -> Result<TwoFactor, FactorError> {
        let mut mult = vec![0u8; emb.n_darts()];
        for d in 0..emb.n_darts() {
            if in_factor(d) || in_factor(emb.twin(d)) {
                mult[d] = 1;
            }
        }
        let degree = |mult: &[u8], v: Vertex| -> u8 { emb.darts_at(v).iter().map(|&d| mult[d]).sum() };
        for d in 0..emb.n_darts() {
            if mult[d] == 1 {
                let u = emb.origin(d);
                let v = emb.head(d);
                if degree(&mult, u) == 1 && degree(&mult, v) == 1 {
                    mult[d] = 2;
                    mult[emb.twin(d)] = 2;
                }
            }
        }
        TwoFactor::from_multiplicities(emb, mult)
    }

    pub fn multiplicity(&self, d: Dart) -> u8 {
        self.mult[d]
    }

    pub fn contains(&self, d: Dart) -> bool {
        self.mult[d] > 0
    }

    pub fn cycles(&self) -> &[Vec<Vertex>] {
        &self.cycles
    }

    pub fn n_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle_of(&self, d: Dart) -> Option<usize> {
        self.cycle_of[d].map(|c| c as usize)
    }

    pub fn multiplicities(&self) -> &[u8] {
        &self.mult
    }

    /// True when the factor is a single spanning cycle.
    pub fn is_hamiltonian(&self, emb: &PlanarEmbedding) -> bool {
        self.cycles.len() == 1 && self.cycles[0].len() == emb.n_vertices()
    }

    /// The hexagonal faces resonant with respect to this factor: exactly
    /// three pairwise non-adjacent boundary edges in the factor, belonging
    /// to three different cycles.
    pub fn resonant_hexagons(&self, emb: &PlanarEmbedding, faces: &FaceSet) -> Vec<usize> {
        (0..faces.n_faces())
            .filter(|&f| self.is_resonant(emb, faces, f))
            .collect()
    }

    pub fn is_resonant(&self, _emb: &PlanarEmbedding, faces: &FaceSet, f: usize) -> bool {
        if faces.size(f) != 6 {
            return false;
        }
        let boundary = &faces.faces[f];
        let pattern: Vec<bool> = boundary.iter().map(|&d| self.mult[d] > 0).collect();
        let count = pattern.iter().filter(|&&b| b).count();
        if count != 3 {
            return false;
        }
        // non-adjacent means alternating around the hexagon
        for i in 0..6 {
            if pattern[i] && pattern[(i + 1) % 6] {
                return false;
            }
        }
        let mut cycles: Vec<usize> = boundary
            .iter()
            .filter(|&&d| self.mult[d] > 0)
            .map(|&d| self.cycle_of(d).unwrap())
            .collect();
        cycles.sort();
        cycles.dedup();
        cycles.len() == 3
    }

    /// Symmetric difference with the boundary of a resonant hexagon.
    /// Joins the three incident cycles into one; for an incident 2-cycle a
    /// single copy of the edge is kept.
    pub fn flip(
        &self,
        emb: &PlanarEmbedding,
        faces: &FaceSet,
        hexagon: usize,
    ) -> Result<TwoFactor, FactorError> {
        if !self.is_resonant(emb, faces, hexagon) {
            return Err(FactorError::NotResonant(hexagon));
        }
        let mut mult = self.mult.clone();
        for &d in &faces.faces[hexagon] {
            let t = emb.twin(d);
            if mult[d] > 0 {
                mult[d] -= 1;
                mult[t] -= 1;
            } else {
                mult[d] += 1;
                mult[t] += 1;
            }
        }
        TwoFactor::from_multiplicities(emb, mult)
    }
}

fn trace_cycles(emb: &PlanarEmbedding, mult: &[u8]) -> (Vec<Vec<Vertex>>, Vec<Option<u32>>) {
    let mut cycle_of: Vec<Option<u32>> = vec![None; emb.n_darts()];
    let mut cycles: Vec<Vec<Vertex>> = Vec::new();
    for d0 in 0..emb.n_darts() {
        if mult[d0] == 0 || cycle_of[d0].is_some() {
            continue;
        }
        let id = cycles.len() as u32;
        if mult[d0] == 2 {
            cycle_of[d0] = Some(id);
            cycle_of[emb.twin(d0)] = Some(id);
            cycles.push(vec![emb.origin(d0), emb.head(d0)]);
            continue;
        }
        // walk the simple cycle of multiplicity-1 edges
        let mut cyc = Vec::new();
        let mut d = d0;
        loop {
            cycle_of[d] = Some(id);
            cycle_of[emb.twin(d)] = Some(id);
            cyc.push(emb.origin(d));
            let v = emb.head(d);
            let back = emb.twin(d);
            let out = emb
                .darts_at(v)
                .into_iter()
                .find(|&e| e != back && mult[e] == 1 && cycle_of[e].is_none());
            match out {
                Some(e) => d = e,
                None => break,
            }
        }
        cycles.push(cyc);
    }
    (cycles, cycle_of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn hamilton_cycle_is_single_component() {
        let g = construct::k4();
        // cycle 0-1-2-3: mark darts on those edges
        let f = TwoFactor::from_edge_set(&g, |d| {
            let (u, v) = (g.origin(d), g.head(d));
            matches!(
                (u.min(v), u.max(v)),
                (0, 1) | (1, 2) | (2, 3) | (0, 3)
            )
        })
        .unwrap();
        assert_eq!(f.n_cycles(), 1);
        assert!(f.is_hamiltonian(&g));
    }

    #[test]
    fn perfect_matching_becomes_two_cycles() {
        let g = construct::k4();
        // matching {01, 23}: each edge isolated -> multiplicity 2
        let f = TwoFactor::from_edge_set(&g, |d| {
            let (u, v) = (g.origin(d), g.head(d));
            matches!((u.min(v), u.max(v)), (0, 1) | (2, 3))
        })
        .unwrap();
        assert_eq!(f.n_cycles(), 2);
        assert!(f.cycles().iter().all(|c| c.len() == 2));
    }

    #[test]
    fn non_spanning_rejected() {
        let g = construct::cube();
        let r = TwoFactor::from_edge_set(&g, |_| false);
        assert!(r.is_err());
    }
}
