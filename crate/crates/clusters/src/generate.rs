//! Exhaustive generation of clusters: closed patches collecting all
//! small faces at pairwise dual distance at most two.
//!
//! Starting from a single pentagon, the recursion picks the least
//! convex boundary stretch (the deepest notch that still matters for
//! completing a 2-disc) and branches on the size of the face covering
//! it. Every closure of a patch gained through a 4- or 5-face branch is
//! a cluster; closures are deduplicated by canonical form. Patches that
//! are their own closure stop growing unless their curvature is at
//! least 7 and their perimeter small enough, in which case every
//! completion to a whole graph is finite and the growth continues until
//! only a triangle of open vertices is left.

use crate::patch::{Patch, Slot};
use std::collections::HashMap;
use std::collections::HashSet;

#[derive(Debug, Clone)]
pub struct GenCfg {
    /// largest number of quadrangles to explore
    pub max_f4: usize,
    /// largest number of pentagons to explore
    pub max_f5: usize,
    /// cap on inner faces of a single patch
    pub max_faces: usize,
    /// recursion budget
    pub node_budget: u64,
}

impl Default for GenCfg {
    fn default() -> Self {
        GenCfg { max_f4: 2, max_f5: 3, max_faces: 120, node_budget: 10_000_000 }
    }
}

#[derive(Debug, Clone)]
pub struct ClusterRecord {
    /// the cluster: a patch equal to its closure
    pub patch: Patch,
    pub f4: usize,
    pub f5: usize,
    pub f6: usize,
    /// curvature 2 f4 + f5
    pub mu: usize,
    /// perimeter: number of open boundary vertices
    pub delta: usize,
}

#[derive(Debug, Default)]
pub struct ClusterDatabase {
    pub records: Vec<ClusterRecord>,
    by_key: HashMap<Vec<u32>, usize>,
    /// whole graphs completed from high-curvature patches
    pub graphs: usize,
    /// false when the node budget ran out
    pub complete: bool,
}

impl ClusterDatabase {
    fn insert(&mut self, key: Vec<u32>, patch: Patch) -> bool {
        if self.by_key.contains_key(&key) {
            return false;
        }
        let (f4, f5, f6) = patch.census();
        let rec = ClusterRecord {
            mu: 2 * f4 + f5,
            delta: patch.perimeter(),
            patch,
            f4,
            f5,
            f6,
        };
        self.by_key.insert(key, self.records.len());
        self.records.push(rec);
        true
    }

    /// Clusters with the given face numbers, under the convention that
    /// a cluster of curvature above 6 counts only when its perimeter
    /// exceeds its curvature (smaller ones are finished off as whole
    /// graphs instead).
    pub fn count(&self, f4: usize, f5: usize) -> usize {
        self.records
            .iter()
            .filter(|r| r.f4 == f4 && r.f5 == f5 && (r.mu <= 6 || r.delta > r.mu))
            .count()
    }
}

struct Gen<'a> {
    cfg: &'a GenCfg,
    db: ClusterDatabase,
    seen: HashSet<Vec<u32>>,
    nodes: u64,
}

/// Generate every cluster containing a pentagon, within the caps of
/// `cfg`.
pub fn generate_clusters(cfg: &GenCfg) -> ClusterDatabase {
    let seed = Patch::polygon(5);
    let mut gen = Gen { cfg, db: ClusterDatabase { complete: true, ..Default::default() }, seen: HashSet::new(), nodes: 0 };
    let disc = seed.closure().expect("pentagon disc");
    let key = disc.canonical_key();
    gen.db.insert(key, disc);
    gen.add(&seed);
    gen.db
}

impl Gen<'_> {
    fn add(&mut self, p: &Patch) {
        if self.nodes >= self.cfg.node_budget {
            self.db.complete = false;
            return;
        }
        self.nodes += 1;
        if p.perimeter() <= 3 {
            self.db.graphs += 1;
            return;
        }
        let closed = match p.closure() {
            Some(c) => c,
            None => return, // a stretch too long for any face: dead end
        };
        let is_closed = closed.n_vertices() == p.n_vertices();
        let (f4, f5, _) = p.census();
        let mu = 2 * f4 + f5;
        if is_closed && !(mu >= 7 && p.perimeter() <= mu) {
            return;
        }
        let faces = p.faces();
        if faces.len() >= self.cfg.max_faces {
            self.db.complete = false;
            return;
        }
        let slots = self.relevant_slots(p, &faces, is_closed);
        for slot in slots.into_iter().take(1) {
            if slot.edges > 5 {
                return; // the covering face would be too big
            }
            let quad_next_door = (0..slot.edges).any(|t| {
                let f = p.face_at_boundary(&faces, (slot.at + t) % p.boundary().len());
                faces[f].len() == 4
            });
            if f4 < self.cfg.max_f4 && !quad_next_door {
                self.branch_small(p, slot, 4);
            }
            if f5 < self.cfg.max_f5 {
                self.branch_small(p, slot, 5);
            }
            if let Some(p6) = p.attach(slot, 6) {
                if self.seen.insert(p6.canonical_key()) {
                    self.add(&p6);
                }
            }
        }
    }

    fn branch_small(&mut self, p: &Patch, slot: Slot, k: usize) {
        let pk = match p.attach(slot, k) {
            Some(x) => x,
            None => return,
        };
        let ck = match pk.closure() {
            Some(x) => x,
            None => return,
        };
        self.db.insert(ck.canonical_key(), ck);
        if self.seen.insert(pk.canonical_key()) {
            self.add(&pk);
        }
    }

    /// The stretch to branch on: the most saturated one among those
    /// whose covering face would touch an incomplete 2-disc — or, when
    /// the patch is closed and being grown into whole graphs, among all
    /// stretches.
    fn relevant_slots(&self, p: &Patch, faces: &[Vec<usize>], is_closed: bool) -> Vec<Slot> {
        let dist = p.small_distances(faces);
        let mut out = Vec::new();
        for s in p.slots() {
            if !is_closed {
                let near = (0..s.edges).any(|t| {
                    let f = p.face_at_boundary(faces, (s.at + t) % p.boundary().len());
                    dist[f] <= 1
                });
                if !near {
                    continue;
                }
            }
            out.push(s);
        }
        out.sort_by_key(|s| (usize::MAX - s.edges, s.at));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts_with(max_f4: usize, max_f5: usize) -> ClusterDatabase {
        let cfg = GenCfg { max_f4, max_f5, ..Default::default() };
        let db = generate_clusters(&cfg);
        assert!(db.complete);
        db
    }

    #[test]
    fn one_cluster_with_a_single_pentagon() {
        let db = counts_with(0, 1);
        assert_eq!(db.count(0, 1), 1);
    }

    #[test]
    fn three_clusters_with_two_pentagons() {
        let db = counts_with(0, 2);
        assert_eq!(db.count(0, 1), 1);
        assert_eq!(db.count(0, 2), 3);
    }

    #[test]
    fn eleven_clusters_with_three_pentagons() {
        let db = counts_with(0, 3);
        assert_eq!(db.count(0, 3), 11);
    }

    #[test]
    fn three_clusters_with_a_quadrangle_and_a_pentagon() {
        let db = counts_with(1, 1);
        assert_eq!(db.count(1, 1), 3);
    }

    #[test]
    fn sixteen_clusters_with_two_quadrangles_and_a_pentagon() {
        let db = counts_with(2, 1);
        assert_eq!(db.count(2, 1), 16);
    }
}
