//! Fullerene generation from face spirals.
//!
//! A fullerene on n vertices has n/2 + 2 faces, twelve of them pentagons.
//! A face spiral lists the face sizes in an order in which the faces can
//! be wound up: each new face shares an edge with the previous one and
//! covers the saturated stretch of the patch boundary at the winding
//! front. Every fullerene far below 380 vertices has at least one spiral,
//! so exhaustive search over spiral sequences enumerates all isomers; the
//! results are deduplicated by canonical code and validated against the
//! published isomer counts.
//!
//! The windup keeps the patch boundary explicitly as a linked list of
//! vertices (bookkeeping only face degrees is known to reject some valid
//! spirals). Each placed face is recorded as an oriented vertex cycle;
//! the embedding is assembled from those cycles at the end.

use crate::canonical::canonical_code;
use crate::classify::{classify, GraphClass};
use crate::embedding::PlanarEmbedding;
use std::collections::{HashMap, HashSet};

struct Windup {
    n_faces: usize,
    n_target_vertices: usize,
    /// vertex degrees in the patch
    deg: Vec<u8>,
    /// boundary as a doubly linked list over vertex ids
    next_b: Vec<u32>,
    prev_b: Vec<u32>,
    boundary_len: usize,
    /// oriented vertex cycles of placed faces
    faces: Vec<Vec<u32>>,
    /// boundary edge (x, y) with y = next_b[x] that the next face must
    /// share with the previous one
    pos: (usize, usize),
}

/// Information to undo one placement.
struct Undo {
    kind: UndoKind,
    old_pos: (usize, usize),
}

enum UndoKind {
    First,
    Final,
    /// arc endpoints, enclosed arc interior (in boundary order) and the
    /// number of vertices the face created
    Attach { l: usize, r: usize, interior: Vec<u32>, created: usize },
}

impl Windup {
    fn new(n_faces: usize, n_target_vertices: usize) -> Self {
        Windup {
            n_faces,
            n_target_vertices,
            deg: Vec::with_capacity(n_target_vertices),
            next_b: Vec::with_capacity(n_target_vertices),
            prev_b: Vec::with_capacity(n_target_vertices),
            boundary_len: 0,
            faces: Vec::new(),
            pos: (0, 0),
        }
    }

    fn new_vertex(&mut self) -> usize {
        let v = self.deg.len();
        self.deg.push(0);
        self.next_b.push(u32::MAX);
        self.prev_b.push(u32::MAX);
        v
    }

    fn link(&mut self, a: usize, b: usize) {
        self.next_b[a] = b as u32;
        self.prev_b[b] = a as u32;
    }

    fn place(&mut self, size: usize) -> Option<Undo> {
        let old_pos = self.pos;
        let j = self.faces.len();
        if j == 0 {
            let vs: Vec<usize> = (0..size).map(|_| self.new_vertex()).collect();
            for i in 0..size {
                self.deg[vs[i]] = 2;
                // boundary runs opposite to the face cycle
                self.link(vs[(i + 1) % size], vs[i]);
            }
            self.faces.push(vs.iter().map(|&v| v as u32).collect());
            self.boundary_len = size;
            self.pos = (vs[1], vs[0]);
            return Some(Undo { kind: UndoKind::First, old_pos });
        }
        if j == self.n_faces - 1 {
            // the last face is the remaining hole: all boundary vertices
            // saturated and the hole has the right size
            if self.boundary_len != size || self.deg.len() != self.n_target_vertices {
                return None;
            }
            let mut cycle = Vec::with_capacity(size);
            let mut v = self.pos.0;
            for _ in 0..size {
                if self.deg[v] != 3 {
                    return None;
                }
                cycle.push(v as u32);
                v = self.next_b[v] as usize;
            }
            self.faces.push(cycle);
            return Some(Undo { kind: UndoKind::Final, old_pos });
        }

        // grow the shared arc from the mandatory edge to degree-2 endpoints
        let (x, y) = self.pos;
        let mut l = x;
        let mut steps = 0;
        while self.deg[l] == 3 {
            l = self.prev_b[l] as usize;
            steps += 1;
            if steps >= self.boundary_len {
                return None; // everything saturated but faces remain
            }
        }
        let mut r = y;
        while self.deg[r] == 3 {
            r = self.next_b[r] as usize;
            steps += 1;
            if steps >= self.boundary_len {
                return None;
            }
        }
        if l == r {
            return None; // single open vertex left; only a final face fits
        }
        // collect the arc l..r
        let mut interior = Vec::new();
        let mut t = 0usize;
        let mut v = l;
        while v != r {
            v = self.next_b[v] as usize;
            t += 1;
            if v != r {
                interior.push(v as u32);
            }
        }
        if size < t + 1 {
            return None;
        }
        let created = size - t - 1;
        let new_boundary_len = self.boundary_len - interior.len() + created;
        if new_boundary_len < 3 {
            return None;
        }
        if self.deg.len() + created > self.n_target_vertices {
            return None;
        }

        let mut cycle: Vec<u32> = Vec::with_capacity(size);
        cycle.push(l as u32);
        cycle.extend(interior.iter().copied());
        cycle.push(r as u32);
        let news: Vec<usize> = (0..created).map(|_| self.new_vertex()).collect();
        cycle.extend(news.iter().map(|&v| v as u32));
        // boundary: l -> m_k -> ... -> m_1 -> r (face cycle runs l..r
        // then r -> m_1 -> ... -> m_k -> l)
        let mut prev = l;
        for &m in news.iter().rev() {
            self.deg[m] = 2;
            self.link(prev, m);
            prev = m;
        }
        self.link(prev, r);
        self.deg[l] += 1;
        self.deg[r] += 1;
        self.boundary_len = new_boundary_len;
        self.pos = if created > 0 { (news[0], r) } else { (l, r) };
        self.faces.push(cycle);
        Some(Undo { kind: UndoKind::Attach { l, r, interior, created }, old_pos })
    }

    fn retreat(&mut self, u: Undo) {
        self.faces.pop();
        match u.kind {
            UndoKind::First => {
                self.deg.clear();
                self.next_b.clear();
                self.prev_b.clear();
                self.boundary_len = 0;
            }
            UndoKind::Final => {}
            UndoKind::Attach { l, r, interior, created } => {
                for _ in 0..created {
                    self.deg.pop();
                    self.next_b.pop();
                    self.prev_b.pop();
                }
                let mut prev = l;
                for &v in &interior {
                    self.link(prev, v as usize);
                    prev = v as usize;
                }
                self.link(prev, r);
                self.deg[l] -= 1;
                self.deg[r] -= 1;
                self.boundary_len = self.boundary_len + interior.len() - created;
            }
        }
        self.pos = u.old_pos;
    }

    /// Assemble the embedding from the oriented face cycles.
    fn build(&self) -> Option<PlanarEmbedding> {
        let n = self.deg.len();
        let mut dart_of: HashMap<(u32, u32), u32> = HashMap::new();
        let mut origin = Vec::new();
        let mut face_succ = Vec::new();
        for f in &self.faces {
            let base = origin.len();
            let len = f.len();
            for (i, &v) in f.iter().enumerate() {
                let w = f[(i + 1) % len];
                if dart_of.insert((v, w), (base + i) as u32).is_some() {
                    return None; // directed edge used twice
                }
                origin.push(v);
                face_succ.push((base + (i + 1) % len) as u32);
            }
        }
        let m2 = origin.len();
        let mut twin = vec![u32::MAX; m2];
        for (&(v, w), &d) in &dart_of {
            twin[d as usize] = *dart_of.get(&(w, v))?;
        }
        // rotation at the origin: continue into the neighboring face
        let next: Vec<u32> = (0..m2).map(|d| face_succ[twin[d] as usize]).collect();
        let emb = PlanarEmbedding::from_darts(n, origin, twin, next).ok()?;
        if emb.genus() != 0 {
            return None;
        }
        Some(emb)
    }
}

/// Visit the graph of every complete spiral sequence whose face sizes
/// match the given multiset, given as (size, count) pairs (with
/// repetition across isomorphic results). The visitor returns false to
/// stop the search. The multiset must satisfy sum (6 - size) * count = 12.
pub fn enumerate_spirals(
    face_counts: &[(usize, usize)],
    visit: &mut impl FnMut(&PlanarEmbedding) -> bool,
) -> bool {
    let curvature: i64 = face_counts
        .iter()
        .map(|&(s, c)| (6 - s as i64) * c as i64)
        .sum();
    assert_eq!(curvature, 12, "face sizes must close a cubic sphere");
    let nf: usize = face_counts.iter().map(|&(_, c)| c).sum();
    // Euler: vertices = 2 (faces - 2) for cubic plane graphs
    let mut w = Windup::new(nf, 2 * (nf - 2));
    let mut left: Vec<(usize, usize)> = face_counts.to_vec();
    rec(&mut w, &mut left, visit)
}

fn rec(
    w: &mut Windup,
    left: &mut [(usize, usize)],
    visit: &mut impl FnMut(&PlanarEmbedding) -> bool,
) -> bool {
    if left.iter().all(|&(_, c)| c == 0) {
        if let Some(g) = w.build() {
            return visit(&g);
        }
        return true;
    }
    for i in 0..left.len() {
        if left[i].1 == 0 {
            continue;
        }
        let size = left[i].0;
        if let Some(u) = w.place(size) {
            left[i].1 -= 1;
            let go_on = rec(w, left, visit);
            left[i].1 += 1;
            w.retreat(u);
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// All fullerene isomers on `n` vertices, up to isomorphism (reflections
/// identified).
pub fn all_fullerenes(n: usize) -> Vec<PlanarEmbedding> {
    assert!(n >= 20 && n % 2 == 0, "fullerenes need even n >= 20");
    let n_hex = (n / 2 + 2) - 12;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    enumerate_spirals(&[(5, 12), (6, n_hex)], &mut |g| {
        if seen.insert(canonical_code(g)) {
            debug_assert_eq!(classify(g), GraphClass::Fullerene);
            out.push(g.clone());
        }
        true
    });
    out
}

/// Spiral-generated graphs on `n` vertices for any admissible mix of face
/// sizes drawn from `sizes`, deduplicated. Used to build supplementary
/// test sets (graphs with quadrangles and triangles); unlike the
/// fullerene case there is no completeness guarantee that every such
/// graph has a spiral.
pub fn spiral_survey(n: usize, sizes: &[usize]) -> Vec<PlanarEmbedding> {
    assert!(n >= 4 && n % 2 == 0);
    let nf = n / 2 + 2;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut mixes = Vec::new();
    mix_rec(sizes, nf, 12, &mut Vec::new(), &mut mixes);
    for mix in mixes {
        enumerate_spirals(&mix, &mut |g| {
            if seen.insert(canonical_code(g)) {
                out.push(g.clone());
            }
            true
        });
    }
    out
}

fn mix_rec(
    sizes: &[usize],
    faces_left: usize,
    curvature_left: i64,
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if sizes.is_empty() {
        if faces_left == 0 && curvature_left == 0 {
            out.push(acc.clone());
        }
        return;
    }
    let s = sizes[0];
    let curv = 6 - s as i64;
    for c in 0..=faces_left {
        let used: i64 = curv * c as i64;
        if curv > 0 && used > curvature_left {
            break;
        }
        acc.push((s, c));
        mix_rec(&sizes[1..], faces_left - c, curvature_left - used, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::are_isomorphic;
    use crate::construct;

    #[test]
    fn c20_is_the_dodecahedron() {
        let all = all_fullerenes(20);
        assert_eq!(all.len(), 1);
        assert!(are_isomorphic(&all[0], &construct::dodecahedron()));
    }

    #[test]
    fn no_fullerene_on_22_vertices() {
        assert!(all_fullerenes(22).is_empty());
    }

    #[test]
    fn small_isomer_counts() {
        // published counts, reflections identified
        for (n, count) in [(24, 1), (26, 1), (28, 2), (30, 3), (32, 6), (34, 6), (36, 15)] {
            let all = all_fullerenes(n);
            assert_eq!(all.len(), count, "isomer count for n = {n}");
            for g in &all {
                assert_eq!(classify(g), GraphClass::Fullerene);
            }
        }
    }

    #[test]
    fn c30_includes_the_nanotube() {
        let tube = construct::nanotube_5_0(1);
        assert!(all_fullerenes(30).iter().any(|g| are_isomorphic(g, &tube)));
    }

    #[test]
    fn triangle_spirals_find_k4_and_prism() {
        let mut found_k4 = false;
        enumerate_spirals(&[(3, 4)], &mut |g| {
            found_k4 |= are_isomorphic(g, &construct::k4());
            true
        });
        assert!(found_k4);

        let surveyed = spiral_survey(6, &[3, 4]);
        assert!(surveyed.iter().any(|g| are_isomorphic(g, &construct::triangular_prism())));
    }

    #[test]
    fn survey_finds_the_cube() {
        let surveyed = spiral_survey(8, &[3, 4, 5, 6]);
        assert!(surveyed.iter().any(|g| are_isomorphic(g, &construct::cube())));
    }
}
