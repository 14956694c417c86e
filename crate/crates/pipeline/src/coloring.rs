//! Cut paths through the pentagons and the face colorings they induce.
//!
//! Cutting the sphere open along a dual path through all pentagons leaves
//! a disk whose faces are all even, so its faces admit a proper
//! 3-coloring (all three colors around every vertex). We never build the
//! cut patch explicitly: faces the path passes through simply carry one
//! color per side of the path, and the coloring is found by constraint
//! propagation over face corners of the original graph.

use barnette_core::{Dart, DualGraph, FaceSet, PlanarEmbedding};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("no cut path through all pentagons from this starting configuration")]
    NoPath,
    #[error("corner colors clash at vertex {0}")]
    CornerClash(usize),
    #[error("color propagation stalled with {0} corners undetermined")]
    Stuck(usize),
}

/// A simple path in the dual graph: the trail the cut follows. The path
/// visits every pentagon; intermediate faces are hexagons.
#[derive(Debug, Clone, Default)]
pub struct DualPath {
    /// visited faces in order
    pub faces: Vec<usize>,
    /// crossings[i] is the dart whose face is faces[i] and whose twin's
    /// face is faces[i + 1]
    pub crossings: Vec<Dart>,
}

impl DualPath {
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Positions of the pentagons along the path.
    pub fn pentagon_positions(&self, faces: &FaceSet) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| faces.size(self.faces[i]) == 5)
            .collect()
    }

    /// Number of segments: stretches between consecutive pentagons.
    pub fn n_segments(&self, faces: &FaceSet) -> usize {
        self.pentagon_positions(faces).len().saturating_sub(1)
    }
}

/// Groups of small faces (size 4 or 5) whose pairwise dual distance is at
/// most 2, closed transitively. Sorted by smallest member.
pub fn configurations(dual: &DualGraph) -> Vec<Vec<usize>> {
    let small = &dual.small_faces;
    let mut root: Vec<usize> = (0..small.len()).collect();
    fn find(root: &mut Vec<usize>, mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    for (i, &f) in small.iter().enumerate() {
        let dist = dual.distances(f);
        for (j, &g) in small.iter().enumerate().skip(i + 1) {
            if dist[g] <= 2 {
                let (a, b) = (find(&mut root, i), find(&mut root, j));
                if a != b {
                    root[a] = b;
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); small.len()];
    for i in 0..small.len() {
        let r = find(&mut root, i);
        groups[r].push(small[i]);
    }
    let mut out: Vec<Vec<usize>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
    for g in &mut out {
        g.sort();
    }
    out.sort();
    out
}

/// BFS tree in the dual from `from`, with interior faces restricted to
/// unused hexagons. `parent[g]` gives the predecessor face and crossing
/// dart on a shortest admissible route to `g`.
struct RouteTree {
    dist: Vec<usize>,
    parent: Vec<Option<(usize, Dart)>>,
}

fn route_tree(dual: &DualGraph, from: usize, used: &[bool]) -> RouteTree {
    let nf = dual.adj.len();
    let mut dist = vec![usize::MAX; nf];
    let mut parent: Vec<Option<(usize, Dart)>> = vec![None; nf];
    dist[from] = 0;
    let mut frontier = vec![from];
    let mut d = 0usize;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &f in &frontier {
            // deterministic order: the face boundary order of `adj`
            for &(g, dd) in &dual.adj[f] {
                if dist[g] != usize::MAX || used[g] {
                    continue;
                }
                dist[g] = d + 1;
                parent[g] = Some((f, dd));
                // only hexagons may be path interiors
                if dual.sizes[g] == 6 {
                    next.push(g);
                }
            }
        }
        frontier = next;
        d += 1;
    }
    RouteTree { dist, parent }
}

impl RouteTree {
    /// Faces and crossings from the root to `target`, root excluded.
    fn hop_to(&self, target: usize) -> (Vec<usize>, Vec<Dart>) {
        let mut faces = Vec::new();
        let mut crossings = Vec::new();
        let mut cur = target;
        while let Some((p, d)) = self.parent[cur] {
            faces.push(cur);
            crossings.push(d);
            cur = p;
        }
        faces.reverse();
        crossings.reverse();
        (faces, crossings)
    }
}

struct PathSearch<'a> {
    dual: &'a DualGraph,
    path: DualPath,
    used: Vec<bool>,
    visited: Vec<bool>,
    budget: usize,
}

impl PathSearch<'_> {
    /// Extend the path through all pentagons of `configs[ci..]`, trying
    /// nearest targets first and backtracking on dead ends.
    fn solve(&mut self, configs: &[Vec<usize>], ci: usize, remaining: usize) -> bool {
        if ci == configs.len() {
            return true;
        }
        if remaining == 0 {
            return self.solve(
                configs,
                ci + 1,
                configs.get(ci + 1).map_or(0, |c| c.len()),
            );
        }
        if self.budget == 0 {
            return false;
        }
        let end = *self.path.faces.last().unwrap();
        let tree = route_tree(self.dual, end, &self.used);
        let mut targets: Vec<usize> = configs[ci]
            .iter()
            .copied()
            .filter(|&f| !self.visited[f] && tree.dist[f] != usize::MAX)
            .collect();
        targets.sort_by_key(|&f| (tree.dist[f], f));
        for t in targets {
            self.budget -= 1;
            let (hop, crossings) = tree.hop_to(t);
            let undo_faces = self.path.faces.len();
            let undo_cross = self.path.crossings.len();
            for &f in &hop {
                self.path.faces.push(f);
                self.used[f] = true;
            }
            self.visited[t] = true;
            self.path.crossings.extend(crossings);
            if self.solve(configs, ci, remaining - 1) {
                return true;
            }
            self.visited[t] = false;
            for &f in &self.path.faces[undo_faces..] {
                self.used[f] = false;
            }
            self.path.faces.truncate(undo_faces);
            self.path.crossings.truncate(undo_cross);
            if self.budget == 0 {
                return false;
            }
        }
        false
    }
}

/// Build a cut path visiting every pentagon, one configuration at a time,
/// each hop a shortest dual path through unused hexagons. `start` selects
/// which configuration (among those containing pentagons) the path starts
/// in; varying it gives the retry ladder different paths.
pub fn build_cut_path(
    faces: &FaceSet,
    dual: &DualGraph,
    start: usize,
) -> Result<DualPath, ColoringError> {
    let nf = faces.n_faces();
    let pentagons: Vec<usize> = (0..nf).filter(|&f| faces.size(f) == 5).collect();
    if pentagons.is_empty() {
        return Ok(DualPath::default());
    }
    let mut configs: Vec<Vec<usize>> = configurations(dual)
        .into_iter()
        .map(|c| c.into_iter().filter(|&f| faces.size(f) == 5).collect::<Vec<_>>())
        .filter(|c| !c.is_empty())
        .collect();
    let k = configs.len();
    configs.rotate_left(start % k);
    // greedy over configurations: after the first, visit them nearest-first
    // (decided up front by inter-config dual distance, ignoring usage)
    if configs.len() > 2 {
        let all_dist: Vec<Vec<usize>> = (0..nf).map(|f| dual.distances(f)).collect();
        let mut ordered = vec![configs.remove(0)];
        while !configs.is_empty() {
            let last = ordered.last().unwrap();
            let best = configs
                .iter()
                .enumerate()
                .min_by_key(|&(i, c)| {
                    let mut d = usize::MAX;
                    for &f in c {
                        for &e in last {
                            d = d.min(all_dist[e][f]);
                        }
                    }
                    (d, i)
                })
                .map(|(i, _)| i)
                .unwrap();
            ordered.push(configs.remove(best));
        }
        configs = ordered;
    }

    // try each pentagon of the first configuration as the starting face
    for &first in &configs[0] {
        let mut search = PathSearch {
            dual,
            path: DualPath { faces: vec![first], crossings: Vec::new() },
            used: vec![false; nf],
            visited: vec![false; nf],
            budget: 50_000,
        };
        search.used[first] = true;
        search.visited[first] = true;
        if search.solve(&configs, 0, configs[0].len() - 1) {
            return Ok(search.path);
        }
    }
    Err(ColoringError::NoPath)
}

/// A proper 3-coloring of the faces of the cut-open graph. Faces the path
/// passes through carry one color per side; every other face carries one.
#[derive(Debug, Clone)]
pub struct SplitColoring {
    /// color variable of the corner at `origin(d)` of the face of `d`
    pub var_of: Vec<u32>,
    /// color 1..=3 per variable
    pub colors: Vec<u8>,
    /// the two variables of each face (equal when the face is not split)
    pub face_vars: Vec<(u32, u32)>,
}

impl SplitColoring {
    /// Faces of the given color on at least one side.
    pub fn grey_faces(&self, choice: u8) -> Vec<bool> {
        self.face_vars
            .iter()
            .map(|&(a, b)| self.colors[a as usize] == choice || self.colors[b as usize] == choice)
            .collect()
    }
}

/// Compute the split 3-coloring induced by a cut path.
pub fn three_coloring(
    g: &PlanarEmbedding,
    faces: &FaceSet,
    path: &DualPath,
) -> Result<SplitColoring, ColoringError> {
    let nf = faces.n_faces();
    let mut face_vars: Vec<(u32, u32)> = (0..nf).map(|f| (f as u32, f as u32)).collect();
    let mut var_of: Vec<u32> = (0..g.n_darts())
        .map(|d| faces.face_of(d) as u32)
        .collect();
    let mut n_vars = nf;
    // interior path faces split into two sides at the crossing darts
    for i in 1..path.faces.len().saturating_sub(1) {
        let f = path.faces[i];
        let enter = g.twin(path.crossings[i - 1]); // dart of face f
        let exit = path.crossings[i]; // dart of face f
        debug_assert_eq!(faces.face_of(enter), f);
        debug_assert_eq!(faces.face_of(exit), f);
        let side = n_vars as u32;
        n_vars += 1;
        face_vars[f].1 = side;
        // corners strictly after the entering dart, up to and including
        // the exiting dart, lie on one side of the cut
        let boundary = &faces.faces[f];
        let start = boundary.iter().position(|&d| d == enter).unwrap();
        let len = boundary.len();
        for k in 1..=len {
            let d = boundary[(start + k) % len];
            var_of[d] = side;
            if d == exit {
                break;
            }
        }
    }

    // propagate: the three corners around each vertex get distinct colors
    let mut colors = vec![0u8; n_vars];
    let corner_vars = |v: usize| -> [u32; 3] {
        let ds = g.darts_at(v);
        [var_of[ds[0]], var_of[ds[1]], var_of[ds[2]]]
    };
    // vertices touching each variable, for the propagation worklist
    let mut touching: Vec<Vec<u32>> = vec![Vec::new(); n_vars];
    for v in 0..g.n_vertices() {
        for var in corner_vars(v) {
            touching[var as usize].push(v as u32);
        }
    }
    let seed = corner_vars(0);
    if seed[0] == seed[1] || seed[1] == seed[2] || seed[0] == seed[2] {
        return Err(ColoringError::CornerClash(0));
    }
    for (i, &var) in seed.iter().enumerate() {
        colors[var as usize] = i as u8 + 1;
    }
    let mut queue: Vec<u32> = seed.iter().flat_map(|&v| touching[v as usize].clone()).collect();
    while let Some(v) = queue.pop() {
        let vars = corner_vars(v as usize);
        let known: Vec<u8> = vars.iter().map(|&x| colors[x as usize]).collect();
        let set = known.iter().filter(|&&c| c != 0).count();
        if set < 2 {
            continue;
        }
        if set == 3 {
            if known[0] + known[1] + known[2] != 6
                || known[0] == known[1]
                || known[1] == known[2]
            {
                return Err(ColoringError::CornerClash(v as usize));
            }
            continue;
        }
        let missing = vars.iter().position(|&x| colors[x as usize] == 0).unwrap();
        let (a, b) = match missing {
            0 => (known[1], known[2]),
            1 => (known[0], known[2]),
            _ => (known[0], known[1]),
        };
        if a == b {
            return Err(ColoringError::CornerClash(v as usize));
        }
        let var = vars[missing] as usize;
        colors[var] = 6 - a - b;
        queue.extend(touching[var].iter().copied());
    }
    let undetermined = colors.iter().filter(|&&c| c == 0).count();
    if undetermined > 0 {
        return Err(ColoringError::Stuck(undetermined));
    }
    Ok(SplitColoring { var_of, colors, face_vars })
}

#[cfg(test)]
mod tests {
    use super::*;
    use barnette_core::construct;

    fn setup(g: &PlanarEmbedding) -> (FaceSet, DualGraph) {
        let faces = g.faces();
        let dual = DualGraph::build(g, &faces);
        (faces, dual)
    }

    #[test]
    fn cube_needs_no_cut_and_colors_in_three_pairs() {
        let g = construct::cube();
        let (faces, dual) = setup(&g);
        let path = build_cut_path(&faces, &dual, 0).unwrap();
        assert!(path.is_empty());
        let col = three_coloring(&g, &faces, &path).unwrap();
        for choice in 1..=3 {
            let grey = col.grey_faces(choice);
            assert_eq!(grey.iter().filter(|&&b| b).count(), 2);
        }
    }

    #[test]
    fn dodecahedron_path_covers_all_pentagons() {
        let g = construct::dodecahedron();
        let (faces, dual) = setup(&g);
        let path = build_cut_path(&faces, &dual, 0).unwrap();
        let on_path: Vec<usize> = path
            .faces
            .iter()
            .filter(|&&f| faces.size(f) == 5)
            .copied()
            .collect();
        assert_eq!(on_path.len(), 12);
        // simple path
        let mut sorted = path.faces.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), path.faces.len());
        assert_eq!(path.crossings.len() + 1, path.faces.len());
        assert_eq!(path.n_segments(&faces), 11);
    }

    #[test]
    fn dodecahedron_coloring_is_consistent() {
        let g = construct::dodecahedron();
        let (faces, dual) = setup(&g);
        let path = build_cut_path(&faces, &dual, 0).unwrap();
        let col = three_coloring(&g, &faces, &path).unwrap();
        // every vertex sees all three colors
        for v in 0..g.n_vertices() {
            let mut seen = [false; 4];
            for d in g.darts_at(v) {
                seen[col.colors[col.var_of[d] as usize] as usize] = true;
            }
            assert!(seen[1] && seen[2] && seen[3], "vertex {v}");
        }
    }

    #[test]
    fn crossing_darts_line_up_with_path_faces() {
        let g = construct::dodecahedron();
        let (faces, dual) = setup(&g);
        let path = build_cut_path(&faces, &dual, 0).unwrap();
        for i in 0..path.crossings.len() {
            let d = path.crossings[i];
            assert_eq!(faces.face_of(d), path.faces[i]);
            assert_eq!(faces.face_of(g.twin(d)), path.faces[i + 1]);
        }
    }
}
