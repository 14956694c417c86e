//! Mutable combinatorial-map surgery: contract and delete edges, splice
//! in new ones, then compact back to an immutable embedding. Unlike
//! `PlanarEmbedding::from_rotations`, intermediate states may contain
//! parallel edges and loops; validity is checked when compacting.

use crate::embedding::{Dart, PlanarEmbedding, Vertex};

#[derive(Debug, Clone)]
pub struct MapBuilder {
    origin: Vec<u32>,
    twin: Vec<u32>,
    next: Vec<u32>,
    prev: Vec<u32>,
    dart_alive: Vec<bool>,
    vertex_alive: Vec<bool>,
    /// one alive dart per vertex (kept roughly up to date; fixed on use)
    anchor: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl MapBuilder {
    pub fn from_embedding(emb: &PlanarEmbedding) -> Self {
        let m2 = emb.n_darts();
        let n = emb.n_vertices();
        let mut b = MapBuilder {
            origin: (0..m2).map(|d| emb.origin(d) as u32).collect(),
            twin: (0..m2).map(|d| emb.twin(d) as u32).collect(),
            next: (0..m2).map(|d| emb.next(d) as u32).collect(),
            prev: vec![0; m2],
            dart_alive: vec![true; m2],
            vertex_alive: vec![true; n],
            anchor: vec![NONE; n],
        };
        for d in 0..m2 {
            b.prev[emb.next(d)] = d as u32;
            if b.anchor[emb.origin(d)] == NONE {
                b.anchor[emb.origin(d)] = d as u32;
            }
        }
        b
    }

    pub fn origin(&self, d: Dart) -> Vertex {
        self.origin[d] as usize
    }

    pub fn head(&self, d: Dart) -> Vertex {
        self.origin[self.twin[d] as usize] as usize
    }

    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d] as usize
    }

    pub fn next(&self, d: Dart) -> Dart {
        self.next[d] as usize
    }

    pub fn is_alive(&self, d: Dart) -> bool {
        self.dart_alive[d]
    }

    /// Alive darts with origin `v`, in rotation order.
    pub fn darts_at(&self, v: Vertex) -> Vec<Dart> {
        let mut out = Vec::new();
        let Some(start) = self.some_dart_at(v) else {
            return out;
        };
        let mut d = start;
        loop {
            out.push(d);
            d = self.next[d] as usize;
            if d == start {
                break;
            }
        }
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.darts_at(v).len()
    }

    fn some_dart_at(&self, v: Vertex) -> Option<Dart> {
        let a = self.anchor[v];
        if a != NONE && self.dart_alive[a as usize] && self.origin[a as usize] as usize == v {
            return Some(a as usize);
        }
        (0..self.origin.len())
            .find(|&d| self.dart_alive[d] && self.origin[d] as usize == v)
    }

    pub fn dart_between(&self, u: Vertex, v: Vertex) -> Option<Dart> {
        self.darts_at(u).into_iter().find(|&d| self.head(d) == v)
    }

    /// Remove a dart from its rotation (does not kill it).
    fn unlink(&mut self, d: Dart) {
        let p = self.prev[d] as usize;
        let n = self.next[d] as usize;
        self.next[p] = n as u32;
        self.prev[n] = p as u32;
    }

    /// Delete the edge containing dart `d`. A vertex left without darts is
    /// marked dead.
    pub fn delete_edge(&mut self, d: Dart) {
        let t = self.twin[d] as usize;
        for x in [d, t] {
            let v = self.origin[x] as usize;
            if self.next[x] as usize == x {
                self.vertex_alive[v] = false;
                self.anchor[v] = NONE;
            } else {
                self.unlink(x);
                self.anchor[v] = self.next[x];
            }
            self.dart_alive[x] = false;
        }
    }

    /// Delete a vertex with all its incident edges.
    pub fn delete_vertex(&mut self, v: Vertex) {
        for d in self.darts_at(v) {
            if self.dart_alive[d] {
                self.delete_edge(d);
            }
        }
        self.vertex_alive[v] = false;
    }

    /// Contract the edge containing dart `d` (must not be a loop): the
    /// head vertex is merged into the origin, splicing its rotation in
    /// place of `d`.
    pub fn contract_edge(&mut self, d: Dart) {
        let t = self.twin[d] as usize;
        let u = self.origin[d] as usize;
        let v = self.origin[t] as usize;
        assert_ne!(u, v, "cannot contract a loop");
        // darts of v move to u
        for x in self.darts_at(v) {
            self.origin[x] = u as u32;
        }
        let a = self.prev[d] as usize; // before d at u
        let b = self.next[d] as usize; // after d at u
        let c = self.prev[t] as usize; // before t at v
        let e = self.next[t] as usize; // after t at v
        self.dart_alive[d] = false;
        self.dart_alive[t] = false;
        self.vertex_alive[v] = false;
        self.anchor[v] = NONE;
        if b == d && e == t {
            // u and v both had degree 1: contraction isolates u
            self.vertex_alive[u] = false;
            self.anchor[u] = NONE;
            return;
        }
        if b == d {
            // d was the only dart at u: u's rotation becomes v's minus t
            self.next[c] = e as u32;
            self.prev[e] = c as u32;
            self.anchor[u] = e as u32;
            return;
        }
        if e == t {
            // t was the only dart at v
            self.next[a] = b as u32;
            self.prev[b] = a as u32;
            self.anchor[u] = b as u32;
            return;
        }
        self.next[a] = e as u32;
        self.prev[e] = a as u32;
        self.next[c] = b as u32;
        self.prev[b] = c as u32;
        self.anchor[u] = b as u32;
    }

    /// Predecessor of `d` in the rotation at its origin.
    pub fn prev(&self, d: Dart) -> Dart {
        self.prev[d] as usize
    }

    /// Create a new isolated vertex.
    pub fn add_vertex(&mut self) -> Vertex {
        self.vertex_alive.push(true);
        self.anchor.push(NONE);
        self.vertex_alive.len() - 1
    }

    /// Add an edge from the origin of `after_a` (inserted right after it)
    /// to the isolated vertex `v`. Returns the dart at `v`.
    pub fn add_first_edge(&mut self, after_a: Dart, v: Vertex) -> Dart {
        debug_assert!(self.anchor[v] == NONE);
        let d = self.origin.len();
        let t = d + 1;
        let u = self.origin[after_a];
        self.origin.push(u);
        self.origin.push(v as u32);
        self.twin.push(t as u32);
        self.twin.push(d as u32);
        self.next.push(0);
        self.next.push(t as u32);
        self.prev.push(0);
        self.prev.push(t as u32);
        self.dart_alive.push(true);
        self.dart_alive.push(true);
        let n = self.next[after_a] as usize;
        self.next[after_a] = d as u32;
        self.prev[d] = after_a as u32;
        self.next[d] = n as u32;
        self.prev[n] = d as u32;
        self.anchor[v] = t as u32;
        self.vertex_alive[v] = true;
        t
    }

    /// Number of alive darts at no cost per dart (for iteration bounds).
    pub fn n_dart_slots(&self) -> usize {
        self.origin.len()
    }

    /// Face orbits of `next ∘ twin` over the alive darts.
    pub fn face_orbits(&self) -> (Vec<u32>, Vec<Vec<Dart>>) {
        let m = self.origin.len();
        let mut face_of = vec![NONE; m];
        let mut orbits = Vec::new();
        for d0 in 0..m {
            if !self.dart_alive[d0] || face_of[d0] != NONE {
                continue;
            }
            let id = orbits.len() as u32;
            let mut cyc = Vec::new();
            let mut d = d0;
            loop {
                face_of[d] = id;
                cyc.push(d);
                d = self.next[self.twin[d] as usize] as usize;
                if d == d0 {
                    break;
                }
            }
            orbits.push(cyc);
        }
        (face_of, orbits)
    }

    /// Add an edge between the origins of `after_a` and `after_b`,
    /// inserting the new darts immediately after those darts in the
    /// respective rotations. Returns the dart at the origin of `after_a`.
    pub fn add_edge(&mut self, after_a: Dart, after_b: Dart) -> Dart {
        let d = self.origin.len();
        let t = d + 1;
        let u = self.origin[after_a];
        let v = self.origin[after_b];
        self.origin.push(u);
        self.origin.push(v);
        self.twin.push(t as u32);
        self.twin.push(d as u32);
        self.next.push(0);
        self.next.push(0);
        self.prev.push(0);
        self.prev.push(0);
        self.dart_alive.push(true);
        self.dart_alive.push(true);
        for (nd, after) in [(d, after_a), (t, after_b)] {
            let n = self.next[after] as usize;
            self.next[after] = nd as u32;
            self.prev[nd] = after as u32;
            self.next[nd] = n as u32;
            self.prev[n] = nd as u32;
        }
        d
    }

    /// Collapse a connected set of vertices to a single vertex by
    /// contracting internal edges and deleting the loops that arise.
    /// Returns the surviving vertex.
    pub fn collapse(&mut self, vertices: &[Vertex]) -> Vertex {
        let keep = vertices[0];
        let inside = |v: usize, set: &[Vertex]| set.contains(&v);
        loop {
            let mut progress = false;
            // contract one internal non-loop edge, then clean loops
            let darts = self.darts_at(keep);
            for d in darts {
                if !self.dart_alive[d] {
                    continue;
                }
                let h = self.head(d);
                if h == keep {
                    self.delete_edge(d); // loop
                    progress = true;
                } else if inside(h, vertices) {
                    self.contract_edge(d);
                    progress = true;
                }
            }
            if !progress {
                break;
            }
        }
        keep
    }

    /// Compact to an immutable embedding. Returns the embedding and the
    /// old-vertex → new-vertex mapping (dead vertices map to None).
    pub fn compact(&self) -> (PlanarEmbedding, Vec<Option<Vertex>>) {
        let mut vmap = vec![None; self.vertex_alive.len()];
        let mut nv = 0;
        for v in 0..self.vertex_alive.len() {
            if self.vertex_alive[v] {
                vmap[v] = Some(nv);
                nv += 1;
            }
        }
        let mut dmap = vec![NONE; self.origin.len()];
        let mut nd = 0;
        for d in 0..self.origin.len() {
            if self.dart_alive[d] {
                dmap[d] = nd;
                nd += 1;
            }
        }
        let mut origin = vec![0u32; nd as usize];
        let mut twin = vec![0u32; nd as usize];
        let mut next = vec![0u32; nd as usize];
        for d in 0..self.origin.len() {
            if self.dart_alive[d] {
                let i = dmap[d] as usize;
                origin[i] = vmap[self.origin[d] as usize].unwrap() as u32;
                twin[i] = dmap[self.twin[d] as usize];
                next[i] = dmap[self.next[d] as usize];
            }
        }
        let emb = PlanarEmbedding::from_darts(nv, origin, twin, next)
            .expect("surgery left the map inconsistent");
        (emb, vmap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn delete_edge_merges_faces() {
        let g = construct::cube();
        let mut b = MapBuilder::from_embedding(&g);
        let d = g.dart_between(0, 1).unwrap();
        b.delete_edge(d);
        let (h, _) = b.compact();
        assert_eq!(h.n_vertices(), 8);
        assert_eq!(h.n_edges(), 11);
        assert_eq!(h.faces().census(), vec![(4, 4), (6, 1)]);
        assert_eq!(h.genus(), 0);
    }

    #[test]
    fn contract_edge_of_k4() {
        let g = construct::k4();
        let mut b = MapBuilder::from_embedding(&g);
        let d = g.dart_between(0, 1).unwrap();
        b.contract_edge(d);
        let (h, vmap) = b.compact();
        // two parallel edge pairs on 3 vertices
        assert_eq!(h.n_vertices(), 3);
        assert_eq!(h.n_edges(), 5);
        assert_eq!(h.genus(), 0);
        assert_eq!(vmap.iter().filter(|m| m.is_some()).count(), 3);
    }

    #[test]
    fn collapse_triangle_of_prism_gives_k4() {
        let g = construct::triangular_prism();
        let mut b = MapBuilder::from_embedding(&g);
        // one triangle of the prism is 0,1,2
        b.collapse(&[0, 1, 2]);
        let (h, vmap) = b.compact();
        assert_eq!(h.n_vertices(), 4);
        assert_eq!(h.faces().census(), vec![(3, 4)]);
        assert_eq!(h.genus(), 0);
        assert!(h.is_simple());
        assert_eq!(vmap[0], Some(0));
        assert_eq!(vmap[1], None);
    }

    #[test]
    fn add_edge_splits_face() {
        let g = construct::cube();
        let mut b = MapBuilder::from_embedding(&g);
        // chord across a quad: insert between darts at opposite corners
        let d02 = g.dart_between(0, 1).unwrap();
        let d20 = g.dart_between(2, 3).unwrap();
        b.add_edge(d02, d20);
        let (h, _) = b.compact();
        assert_eq!(h.n_edges(), 13);
        assert_eq!(h.genus(), 0);
    }
}
