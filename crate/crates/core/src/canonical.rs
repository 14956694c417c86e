//! Canonical forms of plane graphs, used to deduplicate generated graphs
//! and clusters up to isomorphism (including reflections).
//!
//! The code of a rooted embedding is a BFS labeling: vertices are numbered
//! in discovery order, and each vertex contributes its rotation (starting
//! at the entry dart) as a 0-terminated list of neighbor labels. The
//! canonical code is the lexicographic minimum over all root darts and
//! both orientations.

use crate::embedding::{PlanarEmbedding, Vertex};

fn code_from(emb: &PlanarEmbedding, root: usize, mirror: bool) -> Vec<u32> {
    let n = emb.n_vertices();
    let mut label = vec![u32::MAX; n];
    let mut entry = vec![usize::MAX; n]; // entry dart per labeled vertex
    let mut order: Vec<Vertex> = Vec::with_capacity(n);

    let v0 = emb.origin(root);
    label[v0] = 0;
    entry[v0] = root;
    order.push(v0);

    let mut code = Vec::with_capacity(emb.n_darts() + n);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        let start = entry[v];
        let mut d = start;
        loop {
            let w = emb.head(d);
            if label[w] == u32::MAX {
                label[w] = order.len() as u32;
                entry[w] = emb.twin(d);
                order.push(w);
            }
            code.push(label[w] + 1);
            d = if mirror { emb.prev(d) } else { emb.next(d) };
            if d == start {
                break;
            }
        }
        code.push(0);
        i += 1;
    }
    code
}

/// Canonical code of an embedding, invariant under relabeling, rotation of
/// the rotation lists, and reflection.
pub fn canonical_code(emb: &PlanarEmbedding) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for root in 0..emb.n_darts() {
        for mirror in [false, true] {
            let code = code_from(emb, root, mirror);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

/// Canonical code without the reflected orientations; distinguishes chiral
/// embeddings from their mirror images.
pub fn canonical_code_oriented(emb: &PlanarEmbedding) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for root in 0..emb.n_darts() {
        let code = code_from(emb, root, false);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

pub fn are_isomorphic(a: &PlanarEmbedding, b: &PlanarEmbedding) -> bool {
    a.n_vertices() == b.n_vertices()
        && a.n_darts() == b.n_darts()
        && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::embedding::PlanarEmbedding;

    /// Relabel vertices by v -> (a·v + b) mod n with gcd(a, n) = 1.
    fn relabeled(emb: &PlanarEmbedding, a: usize, b: usize) -> PlanarEmbedding {
        let n = emb.n_vertices();
        let p: Vec<usize> = (0..n).map(|v| (a * v + b) % n).collect();
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            rot[p[v]] = emb.neighbors(v).into_iter().map(|w| p[w]).collect();
        }
        PlanarEmbedding::from_rotations(&rot).unwrap()
    }

    fn mirrored(emb: &PlanarEmbedding) -> PlanarEmbedding {
        let rot: Vec<Vec<usize>> = (0..emb.n_vertices())
            .map(|v| {
                let mut nb = emb.neighbors(v);
                nb.reverse();
                nb
            })
            .collect();
        PlanarEmbedding::from_rotations(&rot).unwrap()
    }

    #[test]
    fn relabeling_invariant() {
        for g in [construct::cube(), construct::dodecahedron(), construct::truncated_tetrahedron()] {
            let c0 = canonical_code(&g);
            let c1 = canonical_code(&relabeled(&g, 7, 3));
            assert_eq!(c0, c1);
        }
    }

    #[test]
    fn mirror_invariant() {
        let g = construct::dodecahedron();
        assert_eq!(canonical_code(&g), canonical_code(&mirrored(&g)));
    }

    #[test]
    fn different_graphs_distinguished() {
        // both cubic on 12 vertices
        let a = construct::hexagonal_prism();
        let b = construct::truncated_tetrahedron();
        assert!(!are_isomorphic(&a, &b));
    }

    #[test]
    fn same_graph_different_construction() {
        let a = construct::prism(5);
        let b = relabeled(&construct::pentagonal_prism(), 7, 2);
        assert!(are_isomorphic(&a, &b));
    }
}
