//! Rotation-system (combinatorial map) representation of plane graphs.
//!
//! A graph is stored as a set of darts (half-edges). Each dart knows its
//! `twin` (the opposite half of the same edge), its `next` (the following
//! dart in the clockwise rotation around its origin vertex) and its
//! `origin` vertex. Faces are the orbits of `next ∘ twin`.

use std::collections::VecDeque;
use thiserror::Error;

pub type Dart = usize;
pub type Vertex = usize;

pub const NO_DART: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("dart arrays have inconsistent lengths")]
    InconsistentArrays,
    #[error("twin is not a fixed-point-free involution (dart {0})")]
    BadTwin(Dart),
    #[error("next is not a permutation on the darts of vertex {0}")]
    BadRotation(Vertex),
    #[error("origin of dart {0} out of range")]
    BadOrigin(Dart),
    #[error("rotation list of vertex {0} references vertex {1} which is out of range")]
    NeighborOutOfRange(Vertex, Vertex),
    #[error("edge ({0},{1}) is not symmetric in the rotation lists")]
    AsymmetricEdge(Vertex, Vertex),
    #[error("parallel edge ({0},{1}) cannot be built from neighbor lists")]
    ParallelEdge(Vertex, Vertex),
    #[error("self-loop at vertex {0} cannot be built from neighbor lists")]
    SelfLoop(Vertex),
    #[error("graph is not connected")]
    NotConnected,
    #[error("embedding has genus {0}, expected a plane graph")]
    NonZeroGenus(i64),
    #[error("vertex {0} has degree {1}, expected cubic")]
    NotCubic(Vertex, usize),
}

/// An immutable plane graph given by its rotation system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarEmbedding {
    n_vertices: usize,
    twin: Vec<u32>,
    next: Vec<u32>,
    origin: Vec<u32>,
    /// One entry dart per vertex, NO_DART for isolated vertices (never
    /// present in valid inputs, but kept for builder intermediates).
    first: Vec<u32>,
}

impl PlanarEmbedding {
    /// Build from per-vertex neighbor lists in clockwise order.
    /// Only simple graphs can be described this way.
    pub fn from_rotations(rotations: &[Vec<Vertex>]) -> Result<Self, EmbeddingError> {
        let n = rotations.len();
        // dart ids: assigned in list order per vertex
        let mut start = vec![0usize; n + 1];
        for v in 0..n {
            start[v + 1] = start[v] + rotations[v].len();
        }
        let m2 = start[n];
        let mut origin = vec![0u32; m2];
        let mut next = vec![0u32; m2];
        let mut twin = vec![NO_DART; m2];
        let mut first = vec![NO_DART; n];
        for v in 0..n {
            let deg = rotations[v].len();
            if deg > 0 {
                first[v] = start[v] as u32;
            }
            for i in 0..deg {
                let d = start[v] + i;
                origin[d] = v as u32;
                next[d] = (start[v] + (i + 1) % deg) as u32;
            }
        }
        // pair twins by endpoints; reject parallels and loops
        for v in 0..n {
            for (i, &w) in rotations[v].iter().enumerate() {
                if w >= n {
                    return Err(EmbeddingError::NeighborOutOfRange(v, w));
                }
                if w == v {
                    return Err(EmbeddingError::SelfLoop(v));
                }
                if rotations[v].iter().filter(|&&x| x == w).count() > 1 {
                    return Err(EmbeddingError::ParallelEdge(v, w));
                }
                let d = start[v] + i;
                let j = rotations[w]
                    .iter()
                    .position(|&x| x == v)
                    .ok_or(EmbeddingError::AsymmetricEdge(v, w))?;
                twin[d] = (start[w] + j) as u32;
            }
        }
        let emb = PlanarEmbedding { n_vertices: n, twin, next, origin, first };
        emb.check_structure()?;
        Ok(emb)
    }

    /// Build from raw dart arrays. Used by surgery code that needs
    /// parallel edges.
    pub fn from_darts(
        n_vertices: usize,
        origin: Vec<u32>,
        twin: Vec<u32>,
        next: Vec<u32>,
    ) -> Result<Self, EmbeddingError> {
        if origin.len() != twin.len() || origin.len() != next.len() {
            return Err(EmbeddingError::InconsistentArrays);
        }
        let mut first = vec![NO_DART; n_vertices];
        for d in 0..origin.len() {
            let v = origin[d] as usize;
            if v >= n_vertices {
                return Err(EmbeddingError::BadOrigin(d));
            }
            if first[v] == NO_DART {
                first[v] = d as u32;
            }
        }
        let emb = PlanarEmbedding { n_vertices, twin, next, origin, first };
        emb.check_structure()?;
        Ok(emb)
    }

    fn check_structure(&self) -> Result<(), EmbeddingError> {
        let m2 = self.twin.len();
        if self.next.len() != m2 || self.origin.len() != m2 {
            return Err(EmbeddingError::InconsistentArrays);
        }
        for d in 0..m2 {
            let t = self.twin[d];
            if t == NO_DART || t as usize >= m2 || t as usize == d {
                return Err(EmbeddingError::BadTwin(d));
            }
            if self.twin[t as usize] as usize != d {
                return Err(EmbeddingError::BadTwin(d));
            }
            if self.next[d] as usize >= m2 {
                return Err(EmbeddingError::BadRotation(self.origin[d] as usize));
            }
            if self.origin[self.next[d] as usize] != self.origin[d] {
                return Err(EmbeddingError::BadRotation(self.origin[d] as usize));
            }
        }
        // next restricted to each vertex must be a single cycle
        let mut seen = vec![false; m2];
        for v in 0..self.n_vertices {
            let f = self.first[v];
            if f == NO_DART {
                continue;
            }
            let mut d = f as usize;
            let mut cnt = 0usize;
            loop {
                if seen[d] {
                    return Err(EmbeddingError::BadRotation(v));
                }
                seen[d] = true;
                cnt += 1;
                d = self.next[d] as usize;
                if d == f as usize {
                    break;
                }
                if cnt > m2 {
                    return Err(EmbeddingError::BadRotation(v));
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            // some dart not reachable from its vertex's entry dart
            return Err(EmbeddingError::BadRotation(0));
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_darts(&self) -> usize {
        self.twin.len()
    }

    pub fn n_edges(&self) -> usize {
        self.twin.len() / 2
    }

    #[inline]
    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d] as usize
    }

    #[inline]
    pub fn next(&self, d: Dart) -> Dart {
        self.next[d] as usize
    }

    /// Predecessor in the rotation at the origin vertex.
    pub fn prev(&self, d: Dart) -> Dart {
        let mut e = d;
        loop {
            let n = self.next(e);
            if n == d {
                return e;
            }
            e = n;
        }
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> Vertex {
        self.origin[d] as usize
    }

    #[inline]
    pub fn head(&self, d: Dart) -> Vertex {
        self.origin(self.twin(d))
    }

    /// Successor on the face orbit containing `d`.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.next(self.twin(d))
    }

    /// Darts with origin `v`, in rotation order.
    pub fn darts_at(&self, v: Vertex) -> Vec<Dart> {
        let mut out = Vec::new();
        let f = self.first[v];
        if f == NO_DART {
            return out;
        }
        let mut d = f as usize;
        loop {
            out.push(d);
            d = self.next(d);
            if d == f as usize {
                break;
            }
        }
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.darts_at(v).len()
    }

    /// Neighbors of `v` in rotation order (with multiplicity).
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.darts_at(v).iter().map(|&d| self.head(d)).collect()
    }

    /// The dart from `u` to `v`, if the edge exists (first match).
    pub fn dart_between(&self, u: Vertex, v: Vertex) -> Option<Dart> {
        self.darts_at(u).into_iter().find(|&d| self.head(d) == v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.dart_between(u, v).is_some()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n_vertices).all(|v| self.degree(v) == 3)
    }

    pub fn is_simple(&self) -> bool {
        for v in 0..self.n_vertices {
            let nb = self.neighbors(v);
            for (i, &w) in nb.iter().enumerate() {
                if w == v || nb[..i].contains(&w) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n_vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.n_vertices];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut cnt = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    cnt += 1;
                    queue.push_back(w);
                }
            }
        }
        cnt == self.n_vertices
    }

    /// Number of face orbits.
    pub fn n_faces(&self) -> usize {
        self.faces().faces.len()
    }

    /// Euler genus of the embedding (0 for plane graphs).
    pub fn genus(&self) -> i64 {
        let n = self.n_vertices as i64;
        let m = self.n_edges() as i64;
        let f = self.n_faces() as i64;
        (2 - (n - m + f)) / 2
    }

    /// Full structural validation for pipeline inputs: connected plane graph.
    pub fn validate_plane(&self) -> Result<(), EmbeddingError> {
        if !self.is_connected() {
            return Err(EmbeddingError::NotConnected);
        }
        let g = self.genus();
        if g != 0 {
            return Err(EmbeddingError::NonZeroGenus(g));
        }
        Ok(())
    }

    pub fn require_cubic(&self) -> Result<(), EmbeddingError> {
        for v in 0..self.n_vertices {
            let d = self.degree(v);
            if d != 3 {
                return Err(EmbeddingError::NotCubic(v, d));
            }
        }
        Ok(())
    }

    /// Face orbits of `next ∘ twin`.
    pub fn faces(&self) -> FaceSet {
        let m2 = self.n_darts();
        let mut face_of = vec![u32::MAX; m2];
        let mut faces = Vec::new();
        for d0 in 0..m2 {
            if face_of[d0] != u32::MAX {
                continue;
            }
            let id = faces.len() as u32;
            let mut cyc = Vec::new();
            let mut d = d0;
            loop {
                face_of[d] = id;
                cyc.push(d);
                d = self.face_next(d);
                if d == d0 {
                    break;
                }
            }
            faces.push(cyc);
        }
        FaceSet { face_of, faces }
    }

    /// Per-vertex clockwise neighbor lists (only meaningful for simple graphs).
    pub fn rotations(&self) -> Vec<Vec<Vertex>> {
        (0..self.n_vertices).map(|v| self.neighbors(v)).collect()
    }

    /// The dual embedding: one vertex per face, darts and twins unchanged,
    /// rotation around a dual vertex follows the face orbit. The dual of
    /// the dual is the original graph; genus is preserved.
    pub fn dual(&self) -> Result<PlanarEmbedding, EmbeddingError> {
        let faces = self.faces();
        let m2 = self.n_darts();
        let origin: Vec<u32> = (0..m2).map(|d| faces.face_of[d]).collect();
        let mut next = vec![0u32; m2];
        for f in &faces.faces {
            for (i, &d) in f.iter().enumerate() {
                next[d] = f[(i + 1) % f.len()] as u32;
            }
        }
        PlanarEmbedding::from_darts(faces.n_faces(), origin, self.twin.clone(), next)
    }

    /// Vertex connectivity is at least 3: no cut vertex and no 2-cut.
    /// Exhaustive removal check; fine at the scales this tool targets.
    pub fn is_three_connected(&self) -> bool {
        let n = self.n_vertices;
        if n < 4 {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        let adj: Vec<Vec<Vertex>> = (0..n).map(|v| self.neighbors(v)).collect();
        let connected_without = |banned: &[Vertex]| -> bool {
            let mut seen = vec![false; n];
            for &b in banned {
                seen[b] = true;
            }
            let Some(s) = (0..n).find(|v| !seen[*v]) else {
                return true;
            };
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            let mut cnt = 1;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        cnt += 1;
                        queue.push_back(w);
                    }
                }
            }
            cnt == n - banned.len()
        };
        for a in 0..n {
            if !connected_without(&[a]) {
                return false;
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if !connected_without(&[a, b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// The faces of an embedding: a partition of the darts.
#[derive(Debug, Clone)]
pub struct FaceSet {
    /// face id of each dart
    pub face_of: Vec<u32>,
    /// boundary dart cycle of each face
    pub faces: Vec<Vec<Dart>>,
}

impl FaceSet {
    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn size(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d] as usize
    }

    /// Face size census as (size, count) pairs, ascending by size.
    pub fn census(&self) -> Vec<(usize, usize)> {
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for f in &self.faces {
            match counts.iter_mut().find(|(s, _)| *s == f.len()) {
                Some((_, c)) => *c += 1,
                None => counts.push((f.len(), 1)),
            }
        }
        counts.sort();
        counts
    }

    pub fn count_size(&self, size: usize) -> usize {
        self.faces.iter().filter(|f| f.len() == size).count()
    }

    /// Vertices on the boundary of face `f`, in boundary order.
    pub fn vertices(&self, emb: &PlanarEmbedding, f: usize) -> Vec<Vertex> {
        self.faces[f].iter().map(|&d| emb.origin(d)).collect()
    }
}

/// Dual graph: one node per face, one edge per primal edge.
#[derive(Debug, Clone)]
pub struct DualGraph {
    /// adjacency: for each face, (neighbor face, crossing dart) per incidence
    pub adj: Vec<Vec<(usize, Dart)>>,
    pub sizes: Vec<usize>,
    /// faces of size 4 or 5
    pub small_faces: Vec<usize>,
}

impl DualGraph {
    pub fn build(emb: &PlanarEmbedding, faces: &FaceSet) -> Self {
        let nf = faces.n_faces();
        let mut adj = vec![Vec::new(); nf];
        for f in 0..nf {
            for &d in &faces.faces[f] {
                let g = faces.face_of(emb.twin(d));
                adj[f].push((g, d));
            }
        }
        let sizes: Vec<usize> = (0..nf).map(|f| faces.size(f)).collect();
        let small_faces = (0..nf).filter(|&f| sizes[f] == 4 || sizes[f] == 5).collect();
        DualGraph { adj, sizes, small_faces }
    }

    pub fn n_nodes(&self) -> usize {
        self.adj.len()
    }

    /// BFS distance between two faces.
    pub fn distance(&self, f1: usize, f2: usize) -> usize {
        self.distances(f1)[f2]
    }

    /// BFS distances from `f` to every face.
    pub fn distances(&self, f: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        dist[f] = 0;
        let mut queue = VecDeque::from([f]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn k4_basic() {
        let g = construct::k4();
        assert_eq!(g.n_vertices(), 4);
        assert_eq!(g.n_edges(), 6);
        let faces = g.faces();
        assert_eq!(faces.n_faces(), 4);
        assert!(faces.faces.iter().all(|f| f.len() == 3));
        assert_eq!(g.genus(), 0);
        assert!(g.is_three_connected());
    }

    #[test]
    fn cube_faces() {
        let g = construct::cube();
        let faces = g.faces();
        assert_eq!(faces.census(), vec![(4, 6)]);
        assert!(g.is_three_connected());
    }

    #[test]
    fn dodecahedron_faces() {
        let g = construct::dodecahedron();
        assert_eq!(g.n_vertices(), 20);
        let faces = g.faces();
        assert_eq!(faces.census(), vec![(5, 12)]);
        assert!(g.is_three_connected());
    }

    #[test]
    fn face_orbits_partition_darts() {
        let g = construct::dodecahedron();
        let faces = g.faces();
        let total: usize = faces.faces.iter().map(|f| f.len()).sum();
        assert_eq!(total, g.n_darts());
        // sum of face sizes = 2m = 3n for cubic
        assert_eq!(total, 3 * g.n_vertices());
    }

    #[test]
    fn dual_degrees_match_face_sizes() {
        let g = construct::dodecahedron();
        let faces = g.faces();
        let dual = DualGraph::build(&g, &faces);
        for f in 0..faces.n_faces() {
            assert_eq!(dual.adj[f].len(), faces.size(f));
        }
    }

    #[test]
    fn dual_distance_trivial_cases() {
        let g = construct::cube();
        let faces = g.faces();
        let dual = DualGraph::build(&g, &faces);
        assert_eq!(dual.distance(0, 0), 0);
        let (f1, _) = (0, ());
        let neighbor = dual.adj[f1][0].0;
        assert_eq!(dual.distance(f1, neighbor), 1);
    }

    #[test]
    fn dual_of_cube_is_octahedron() {
        let g = construct::cube();
        let d = g.dual().unwrap();
        assert_eq!(d.n_vertices(), 6);
        assert_eq!(d.n_edges(), 12);
        assert!((0..6).all(|v| d.degree(v) == 4));
        assert_eq!(d.faces().census(), vec![(3, 8)]);
        assert_eq!(d.genus(), 0);
        // dual of the dual comes back to the cube
        let dd = d.dual().unwrap();
        assert_eq!(dd.faces().census(), g.faces().census());
        assert_eq!(dd.n_vertices(), 8);
    }

    #[test]
    fn dual_of_dodecahedron_is_icosahedron() {
        let d = construct::dodecahedron().dual().unwrap();
        assert_eq!(d.n_vertices(), 12);
        assert!((0..12).all(|v| d.degree(v) == 5));
        assert_eq!(d.faces().census(), vec![(3, 20)]);
        assert_eq!(d.genus(), 0);
    }

    #[test]
    fn rejects_bad_rotations() {
        // asymmetric edge
        let r = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1]];
        assert!(PlanarEmbedding::from_rotations(&r).is_err());
    }

    #[test]
    fn two_connected_prism_is_not_three_connected_after_no_edge() {
        let g = construct::triangular_prism();
        assert!(g.is_three_connected());
    }
}
