//! Plane patches: 2-connected regions of faces of size 4, 5 and 6 with
//! one distinguished outer face, grown face by face along the boundary.
//!
//! Rotation lists are counterclockwise; tracing a face with
//! `next = rot[v][pos(u) - 1]` walks inner faces counterclockwise and
//! the outer face clockwise. The boundary is kept explicitly in outer
//! (clockwise) order.

use std::collections::HashSet;
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Patch {
    rot: Vec<Vec<usize>>,
    boundary: Vec<usize>,
}

/// A maximal boundary stretch between two open (degree-2) vertices; a
/// single new face can be attached along it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    /// index into the boundary of the first open vertex
    pub at: usize,
    /// number of boundary edges the new face would share
    pub edges: usize,
}

impl Patch {
    /// A single k-gon.
    pub fn polygon(k: usize) -> Patch {
        let rot = (0..k).map(|i| vec![(i + k - 1) % k, (i + 1) % k]).collect();
        Patch { rot, boundary: (0..k).rev().collect() }
    }

    pub fn n_vertices(&self) -> usize {
        self.rot.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    /// Number of degree-2 vertices: the size of the cut separating the
    /// patch from the rest of any host graph.
    pub fn perimeter(&self) -> usize {
        self.boundary.iter().filter(|&&v| self.degree(v) == 2).count()
    }

    fn pos(&self, v: usize, w: usize) -> usize {
        self.rot[v].iter().position(|&x| x == w).expect("neighbor")
    }

    fn face_next(&self, u: usize, v: usize) -> (usize, usize) {
        let p = self.pos(v, u);
        let d = self.rot[v].len();
        (v, self.rot[v][(p + d - 1) % d])
    }

    /// Inner faces as vertex cycles (counterclockwise).
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen: Vec<Vec<bool>> =
            self.rot.iter().map(|ns| vec![false; ns.len()]).collect();
        // mark the outer orbit
        let b = &self.boundary;
        for i in 0..b.len() {
            let (u, v) = (b[i], b[(i + 1) % b.len()]);
            seen[u][self.pos(u, v)] = true;
        }
        let mut out = Vec::new();
        for u0 in 0..self.rot.len() {
            for k in 0..self.rot[u0].len() {
                if seen[u0][k] {
                    continue;
                }
                let v0 = self.rot[u0][k];
                let mut cyc = Vec::new();
                let (mut u, mut v) = (u0, v0);
                loop {
                    seen[u][self.pos(u, v)] = true;
                    cyc.push(u);
                    let (nu, nv) = self.face_next(u, v);
                    u = nu;
                    v = nv;
                    if (u, v) == (u0, v0) {
                        break;
                    }
                }
                out.push(cyc);
            }
        }
        out
    }

    /// Face size census (f4, f5, f6) of the inner faces.
    pub fn census(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for f in self.faces() {
            match f.len() {
                4 => c.0 += 1,
                5 => c.1 += 1,
                6 => c.2 += 1,
                s => panic!("inner face of size {s}"),
            }
        }
        c
    }

    /// Curvature 2 f4 + f5.
    pub fn curvature(&self) -> usize {
        let (f4, f5, _) = self.census();
        2 * f4 + f5
    }

    /// The attachable stretches, one per pair of consecutive open
    /// boundary vertices.
    pub fn slots(&self) -> Vec<Slot> {
        let b = &self.boundary;
        let open: Vec<usize> = (0..b.len()).filter(|&i| self.degree(b[i]) == 2).collect();
        let mut out = Vec::new();
        for w in 0..open.len() {
            let i = open[w];
            let j = open[(w + 1) % open.len()];
            let edges = (j + b.len() - i) % b.len();
            if edges > 0 {
                out.push(Slot { at: i, edges });
            }
        }
        out
    }

    /// Attach a face of size `k` along the stretch of `slot`; the
    /// shared path interior must be saturated. Fails when the face is
    /// too small for the stretch.
    pub fn attach(&self, slot: Slot, k: usize) -> Option<Patch> {
        let b = &self.boundary;
        let e = slot.edges;
        if k < e + 1 || e >= b.len() {
            return None;
        }
        let vi = b[slot.at];
        let vj = b[(slot.at + e) % b.len()];
        let v_next = b[(slot.at + 1) % b.len()];
        let v_prev = b[(slot.at + e + b.len() - 1) % b.len()];
        debug_assert_eq!(self.degree(vi), 2);
        debug_assert_eq!(self.degree(vj), 2);
        let mut p = self.clone();
        let q = k - e - 1;
        let base = p.rot.len();
        for t in 0..q {
            let prev = if t == 0 { vi } else { base + t - 1 };
            let next = if t == q - 1 { vj } else { base + t + 1 };
            p.rot.push(vec![prev, next]);
        }
        let (first, last) = if q == 0 { (vj, vi) } else { (base, base + q - 1) };
        // new face orbit runs vi → … → vj along the old boundary, then
        // back outside through the new path
        let at = p.pos(vi, v_next);
        p.rot[vi].insert(at + 1, first);
        let at = p.pos(vj, v_prev);
        p.rot[vj].insert(at, last);
        // boundary: drop the saturated interior, walk the new path
        let mut nb = Vec::with_capacity(b.len() - e + 1 + q);
        nb.push(vi);
        nb.extend(base..base + q);
        let mut i = (slot.at + e) % b.len();
        while i != slot.at {
            nb.push(b[i]);
            i = (i + 1) % b.len();
        }
        p.boundary = nb;
        Some(p)
    }

    /// Dual distance of every inner face from the nearest small face.
    pub fn small_distances(&self, faces: &[Vec<usize>]) -> Vec<usize> {
        let adj = self.dual_adjacency(faces);
        let mut dist = vec![usize::MAX; faces.len()];
        let mut queue = VecDeque::new();
        for (f, cyc) in faces.iter().enumerate() {
            if cyc.len() < 6 {
                dist[f] = 0;
                queue.push_back(f);
            }
        }
        while let Some(f) = queue.pop_front() {
            for &g in &adj[f] {
                if dist[g] == usize::MAX {
                    dist[g] = dist[f] + 1;
                    queue.push_back(g);
                }
            }
        }
        dist
    }

    /// Inner faces sharing an edge.
    pub fn dual_adjacency(&self, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut of_edge: std::collections::HashMap<(usize, usize), Vec<usize>> =
            std::collections::HashMap::new();
        for (f, cyc) in faces.iter().enumerate() {
            for i in 0..cyc.len() {
                let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                let key = (a.min(b), a.max(b));
                of_edge.entry(key).or_default().push(f);
            }
        }
        let mut adj = vec![Vec::new(); faces.len()];
        for fs in of_edge.values() {
            if fs.len() == 2 {
                adj[fs[0]].push(fs[1]);
                adj[fs[1]].push(fs[0]);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }

    /// The inner face on the other side of boundary edge
    /// (boundary[i], boundary[i+1]).
    pub fn face_at_boundary(&self, faces: &[Vec<usize>], i: usize) -> usize {
        let b = &self.boundary;
        let (u, v) = (b[i], b[(i + 1) % b.len()]);
        for (f, cyc) in faces.iter().enumerate() {
            for t in 0..cyc.len() {
                let (a, c) = (cyc[t], cyc[(t + 1) % cyc.len()]);
                if (a == u && c == v) || (a == v && c == u) {
                    return f;
                }
            }
        }
        unreachable!("boundary edge must bound an inner face")
    }

    /// Complete every 2-disc centered at a small face by filling the
    /// needed boundary stretches with hexagons. Returns None when a
    /// stretch is too long for a hexagon.
    pub fn closure(&self) -> Option<Patch> {
        let mut p = self.clone();
        loop {
            let faces = p.faces();
            let dist = p.small_distances(&faces);
            // deepest notch first, so a fillable stretch is never
            // widened past six edges by its neighbors
            let next = p
                .slots()
                .into_iter()
                .filter(|s| {
                    (0..s.edges).any(|t| {
                        let f = p.face_at_boundary(&faces, (s.at + t) % p.boundary.len());
                        dist[f] <= 1
                    })
                })
                .max_by_key(|s| s.edges);
            match next {
                Some(s) if s.edges > 5 => return None, // needs a face of size > 6
                Some(s) => p = p.attach(s, 6)?,
                None => return Some(p),
            }
        }
    }

    /// Surround the patch with one ring of hexagons, one per boundary
    /// stretch, the way any host graph must. Returns None when a
    /// stretch is too long for a hexagon to cover.
    pub fn layer(&self) -> Option<Patch> {
        let old: HashSet<(usize, usize)> = {
            let b = &self.boundary;
            (0..b.len())
                .map(|i| {
                    let (u, v) = (b[i], b[(i + 1) % b.len()]);
                    (u.min(v), u.max(v))
                })
                .collect()
        };
        let mut p = self.clone();
        loop {
            let exposed = |p: &Patch, s: &Slot| {
                (0..s.edges).any(|t| {
                    let b = p.boundary();
                    let (u, v) = (b[(s.at + t) % b.len()], b[(s.at + t + 1) % b.len()]);
                    old.contains(&(u.min(v), u.max(v)))
                })
            };
            let next = p
                .slots()
                .into_iter()
                .filter(|s| exposed(&p, s))
                .max_by_key(|s| s.edges);
            match next {
                Some(s) if s.edges > 5 => return None,
                Some(s) => p = p.attach(s, 6)?,
                None => return Some(p),
            }
        }
    }

    /// Canonical form: minimum traversal code over all boundary darts
    /// and both reflections; equal codes mean isomorphic patches with
    /// corresponding outer faces.
    pub fn canonical_key(&self) -> Vec<u32> {
        let b = &self.boundary;
        let mut best: Option<Vec<u32>> = None;
        for i in 0..b.len() {
            let (u, v) = (b[i], b[(i + 1) % b.len()]);
            for mirror in [false, true] {
                let (s, t) = if mirror { (v, u) } else { (u, v) };
                let code = self.code_from(s, t, mirror);
                if best.as_ref().map_or(true, |x| code < *x) {
                    best = Some(code);
                }
            }
        }
        let mut key = best.unwrap();
        let (f4, f5, f6) = self.census();
        let mut out = vec![f4 as u32, f5 as u32, f6 as u32, self.perimeter() as u32];
        out.append(&mut key);
        out
    }

    fn code_from(&self, u0: usize, v0: usize, mirror: bool) -> Vec<u32> {
        let n = self.rot.len();
        let mut label = vec![u32::MAX; n];
        let mut entry = vec![usize::MAX; n];
        label[u0] = 0;
        entry[u0] = v0;
        let mut order = vec![u0];
        let mut next = 1u32;
        let mut code = Vec::new();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let ns = &self.rot[v];
            let d = ns.len();
            let start = ns.iter().position(|&x| x == entry[v]).unwrap();
            for s in 0..d {
                let w = if mirror {
                    ns[(start + d - s) % d]
                } else {
                    ns[(start + s) % d]
                };
                if label[w] == u32::MAX {
                    label[w] = next;
                    next += 1;
                    entry[w] = v;
                    order.push(w);
                }
                code.push(label[w]);
            }
            code.push(u32::MAX);
        }
        code
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_polygon_has_one_inner_face_and_all_vertices_open() {
        let p = Patch::polygon(5);
        let faces = p.faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 5);
        assert_eq!(p.perimeter(), 5);
        assert_eq!(p.slots().len(), 5);
    }

    #[test]
    fn attaching_hexagons_around_a_pentagon_builds_the_first_ring() {
        let mut p = Patch::polygon(5);
        for _ in 0..5 {
            // always the most saturated stretch
            let slot = *p
                .slots()
                .iter()
                .max_by_key(|s| s.edges)
                .unwrap();
            p = p.attach(slot, 6).unwrap();
        }
        let (f4, f5, f6) = p.census();
        assert_eq!((f4, f5, f6), (0, 1, 5));
        // ring of five hexagons around a pentagon: 20 vertices, 15 on
        // the boundary, the 5 hexagon-hexagon corners saturated
        assert_eq!(p.n_vertices(), 20);
        assert_eq!(p.boundary().len(), 15);
        assert_eq!(p.perimeter(), 10);
    }

    #[test]
    fn closure_of_a_pentagon_is_its_two_disc() {
        let p = Patch::polygon(5).closure().unwrap();
        let (f4, f5, f6) = p.census();
        // 5 hexagons at distance 1 and 10 at distance 2
        assert_eq!((f4, f5, f6), (0, 1, 15));
        let again = p.closure().unwrap();
        assert_eq!(again.census(), p.census());
        assert_eq!(again.n_vertices(), p.n_vertices());
    }

    #[test]
    fn canonical_key_ignores_construction_order() {
        // the same hexagon ring, grown from different starting slots
        let mut a = Patch::polygon(5);
        let mut b = Patch::polygon(5);
        for _ in 0..5 {
            let sa = *a.slots().iter().max_by_key(|s| (s.edges, s.at)).unwrap();
            a = a.attach(sa, 6).unwrap();
            let sb = *b
                .slots()
                .iter()
                .max_by_key(|s| (s.edges, usize::MAX - s.at))
                .unwrap();
            b = b.attach(sb, 6).unwrap();
        }
        assert_eq!(a.census(), (0, 1, 5));
        assert_eq!(b.census(), (0, 1, 5));
        assert_eq!(a.canonical_key(), b.canonical_key());
        let c = Patch::polygon(5).closure().unwrap();
        assert_ne!(a.canonical_key(), c.canonical_key());
    }
}
