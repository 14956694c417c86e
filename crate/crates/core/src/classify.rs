//! Structural classification of input graphs.

use crate::embedding::{FaceSet, PlanarEmbedding};
use std::fmt;

/// Why a graph falls outside the classes this tool handles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScopeReason {
    NotCubic { vertex: usize, degree: usize },
    NotConnected,
    NotSimple,
    NonZeroGenus(i64),
    NotThreeConnected,
    LargeFace { face: usize, size: usize },
    TooSmall,
}

impl fmt::Display for ScopeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScopeReason::NotCubic { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}")
            }
            ScopeReason::NotConnected => write!(f, "not connected"),
            ScopeReason::NotSimple => write!(f, "has loops or parallel edges"),
            ScopeReason::NonZeroGenus(g) => write!(f, "embedding has genus {g}"),
            ScopeReason::NotThreeConnected => write!(f, "connectivity below 3"),
            ScopeReason::LargeFace { face, size } => {
                write!(f, "face {face} has size {size} > 6")
            }
            ScopeReason::TooSmall => write!(f, "fewer than 4 vertices"),
        }
    }
}

/// Classification of a plane graph, from most to least specific.
/// Every fullerene is a Barnette graph; every Barnette graph is a
/// cubic polyhedral graph with faces of size at most 6.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphClass {
    Fullerene,
    Barnette,
    CubicPolyhedralLe6,
    OutOfScope(ScopeReason),
}

impl GraphClass {
    pub fn is_cubic_polyhedral_le6(&self) -> bool {
        !matches!(self, GraphClass::OutOfScope(_))
    }

    pub fn is_barnette(&self) -> bool {
        matches!(self, GraphClass::Fullerene | GraphClass::Barnette)
    }

    pub fn is_fullerene(&self) -> bool {
        matches!(self, GraphClass::Fullerene)
    }
}

pub fn has_triangle(faces: &FaceSet) -> bool {
    faces.faces.iter().any(|f| f.len() == 3)
}

/// Two quadrangles sharing an edge.
pub fn has_adjacent_quads(emb: &PlanarEmbedding, faces: &FaceSet) -> bool {
    for f in 0..faces.n_faces() {
        if faces.size(f) != 4 {
            continue;
        }
        for &d in &faces.faces[f] {
            let g = faces.face_of(emb.twin(d));
            if g != f && faces.size(g) == 4 {
                return true;
            }
        }
    }
    false
}

pub fn classify(emb: &PlanarEmbedding) -> GraphClass {
    if emb.n_vertices() < 4 {
        return GraphClass::OutOfScope(ScopeReason::TooSmall);
    }
    for v in 0..emb.n_vertices() {
        let d = emb.degree(v);
        if d != 3 {
            return GraphClass::OutOfScope(ScopeReason::NotCubic { vertex: v, degree: d });
        }
    }
    if !emb.is_connected() {
        return GraphClass::OutOfScope(ScopeReason::NotConnected);
    }
    if !emb.is_simple() {
        return GraphClass::OutOfScope(ScopeReason::NotSimple);
    }
    let genus = emb.genus();
    if genus != 0 {
        return GraphClass::OutOfScope(ScopeReason::NonZeroGenus(genus));
    }
    if !emb.is_three_connected() {
        return GraphClass::OutOfScope(ScopeReason::NotThreeConnected);
    }
    let faces = emb.faces();
    for f in 0..faces.n_faces() {
        if faces.size(f) > 6 {
            return GraphClass::OutOfScope(ScopeReason::LargeFace { face: f, size: faces.size(f) });
        }
    }
    if has_triangle(&faces) || has_adjacent_quads(emb, &faces) {
        return GraphClass::CubicPolyhedralLe6;
    }
    if faces.count_size(4) > 0 {
        return GraphClass::Barnette;
    }
    GraphClass::Fullerene
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn dodecahedron_is_fullerene() {
        assert_eq!(classify(&construct::dodecahedron()), GraphClass::Fullerene);
    }

    #[test]
    fn k4_has_triangles() {
        assert_eq!(classify(&construct::k4()), GraphClass::CubicPolyhedralLe6);
    }

    #[test]
    fn cube_has_adjacent_quads() {
        assert_eq!(classify(&construct::cube()), GraphClass::CubicPolyhedralLe6);
    }

    #[test]
    fn classification_is_monotone() {
        // every fullerene passes the barnette predicate etc.
        for g in [construct::dodecahedron(), construct::nanotube_5_0(2)] {
            let c = classify(&g);
            assert!(c.is_fullerene());
            assert!(c.is_barnette());
            assert!(c.is_cubic_polyhedral_le6());
        }
    }

    #[test]
    fn truncated_octahedron_like_barnette() {
        // hexagonal prism has adjacent quads -> not Barnette
        let c = classify(&construct::hexagonal_prism());
        assert_eq!(c, GraphClass::CubicPolyhedralLe6);
    }
}
