//! Reduction of cubic polyhedral graphs with faces of size at most 6 to
//! Barnette graphs, together with certified lifting of Hamilton cycles
//! back through each reduction step.
//!
//! Three local moves remove the obstructions one at a time:
//!
//! * a triangle is contracted to a single vertex (`triangle_contract`);
//! * three quadrangles sharing a vertex collapse to a single vertex when
//!   the remaining flanking face is large (`quad_triple_contract`);
//! * a pair of adjacent quadrangles with both flanking faces of size at
//!   least 5 is excised down to a single edge (`quad_pair_excise`).
//!
//! K4 and the cube terminate the recursion and are handled directly.
//!
//! Every step carries a lift table keyed by the set of reduced-graph
//! edges a Hamilton cycle uses at the replacement site. The tables are
//! not hard-coded case lists: they are rebuilt for each concrete site by
//! exhaustive search for disjoint path covers of the removed patch, so
//! their completeness is checked against the actual graph rather than
//! assumed.

use std::collections::BTreeMap;

use crate::builder::MapBuilder;
use crate::classify::classify;
use crate::embedding::{FaceSet, PlanarEmbedding, Vertex};
use crate::verify::{verify_hamiltonian, HamCycle};

/// Undirected edge as an ordered vertex pair.
pub type Edge = (Vertex, Vertex);

fn norm(u: Vertex, v: Vertex) -> Edge {
    if u < v { (u, v) } else { (v, u) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    TriangleContract,
    QuadTripleContract,
    QuadPairExcise,
    TerminalK4,
    TerminalCube,
}

/// One reduction step: the graph before the step, the patch of vertices
/// it removes, and a lift table translating every possible traversal of
/// the replacement site back into original edges.
#[derive(Debug, Clone)]
pub struct ReductionStep {
    pub kind: StepKind,
    /// patch vertices in the pre-image (removed or merged by this step)
    pub site: Vec<Vertex>,
    /// traversal pattern (reduced-graph edges at the site) → original
    /// edges replacing them
    pub lift_table: BTreeMap<Vec<Edge>, Vec<Edge>>,
    original: PlanarEmbedding,
    /// reduced vertex → original vertex, for vertices untouched by the step
    inv: Vec<Option<Vertex>>,
    /// reduced vertices that stand in for the patch
    site_images: Vec<Vertex>,
}

#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub final_graph: PlanarEmbedding,
}

impl ReductionTrace {
    pub fn is_terminal(&self) -> bool {
        matches!(
            self.steps.last().map(|s| s.kind),
            Some(StepKind::TerminalK4) | Some(StepKind::TerminalCube)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceError {
    NotATriangle(usize),
    NotAdjacentQuads(usize, usize),
    OutOfScope,
    /// the step would leave the graph outside the cubic polyhedral ≤ 6 class
    InvalidResult(&'static str),
    /// cycle traverses the site in a way absent from the lift table;
    /// indicates an incomplete table, not bad input
    MissingLift(Vec<Edge>),
    BadCycle,
}

impl std::fmt::Display for ReduceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReduceError::NotATriangle(face) => write!(f, "face {face} is not a triangle"),
            ReduceError::NotAdjacentQuads(f1, f2) => {
                write!(f, "faces {f1}, {f2} are not adjacent quadrangles")
            }
            ReduceError::OutOfScope => write!(f, "graph is not cubic polyhedral with faces <= 6"),
            ReduceError::InvalidResult(msg) => write!(f, "reduction rejected: {msg}"),
            ReduceError::MissingLift(p) => write!(f, "no lift for traversal pattern {p:?}"),
            ReduceError::BadCycle => write!(f, "input cycle is not Hamiltonian"),
        }
    }
}

impl std::error::Error for ReduceError {}

impl ReductionStep {
    fn terminal(kind: StepKind, g: &PlanarEmbedding) -> ReductionStep {
        ReductionStep {
            kind,
            site: (0..g.n_vertices()).collect(),
            lift_table: BTreeMap::new(),
            original: g.clone(),
            inv: (0..g.n_vertices()).map(Some).collect(),
            site_images: Vec::new(),
        }
    }

    pub fn original(&self) -> &PlanarEmbedding {
        &self.original
    }

    /// Lift a Hamilton cycle of the reduced graph through this step.
    pub fn lift(&self, cycle: &HamCycle) -> Result<HamCycle, ReduceError> {
        if matches!(self.kind, StepKind::TerminalK4 | StepKind::TerminalCube) {
            return Ok(cycle.clone());
        }
        let is_site = |v: Vertex| self.site_images.contains(&v);
        let mut pattern: Vec<Edge> = Vec::new();
        let mut edges: Vec<Edge> = Vec::new();
        let k = cycle.0.len();
        for i in 0..k {
            let p = cycle.0[i];
            let q = cycle.0[(i + 1) % k];
            if is_site(p) || is_site(q) {
                pattern.push(norm(p, q));
            } else {
                let (a, b) = (self.inv[p], self.inv[q]);
                match (a, b) {
                    (Some(a), Some(b)) => edges.push(norm(a, b)),
                    _ => return Err(ReduceError::BadCycle),
                }
            }
        }
        pattern.sort_unstable();
        let patch_edges = self
            .lift_table
            .get(&pattern)
            .ok_or(ReduceError::MissingLift(pattern))?;
        edges.extend_from_slice(patch_edges);
        let lifted = cycle_from_edges(self.original.n_vertices(), &edges)
            .ok_or(ReduceError::InvalidResult("lift did not produce a single cycle"))?;
        if !verify_hamiltonian(&self.original, &lifted) {
            return Err(ReduceError::InvalidResult("lifted cycle failed verification"));
        }
        Ok(lifted)
    }
}

/// Rebuild a vertex cycle from an edge set in which every vertex of
/// `0..n` has degree exactly 2.
fn cycle_from_edges(n: usize, edges: &[Edge]) -> Option<HamCycle> {
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    if adj.iter().any(|a| a.len() != 2) {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        order.push(cur);
        let nxt = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
        prev = cur;
        cur = nxt;
        if cur == 0 {
            break;
        }
        if order.len() > n {
            return None;
        }
    }
    if order.len() != n {
        return None; // edge set decomposed into several cycles
    }
    Some(HamCycle(order))
}

/// The three faces incident to a vertex of a cubic map.
fn faces_at(emb: &PlanarEmbedding, faces: &FaceSet, v: Vertex) -> Vec<usize> {
    emb.darts_at(v).into_iter().map(|d| faces.face_of(d)).collect()
}

fn validate_reduced(g: &PlanarEmbedding) -> Result<(), ReduceError> {
    if !classify(g).is_cubic_polyhedral_le6() {
        return Err(ReduceError::InvalidResult("step left the supported class"));
    }
    Ok(())
}

/// Contract a triangular face to a single vertex. If an adjacent face is
/// also a triangle the graph is K4 and the step is terminal.
pub fn reduce_triangle(
    g: &PlanarEmbedding,
    triangle_face: usize,
) -> Result<(PlanarEmbedding, ReductionStep), ReduceError> {
    let faces = g.faces();
    if triangle_face >= faces.n_faces() || faces.size(triangle_face) != 3 {
        return Err(ReduceError::NotATriangle(triangle_face));
    }
    for &d in &faces.faces[triangle_face] {
        if faces.size(faces.face_of(g.twin(d))) == 3 {
            if g.n_vertices() != 4 {
                return Err(ReduceError::InvalidResult(
                    "adjacent triangles outside K4 contradict 3-connectivity",
                ));
            }
            return Ok((g.clone(), ReductionStep::terminal(StepKind::TerminalK4, g)));
        }
    }
    let site = faces.vertices(g, triangle_face);
    finish_collapse(g, StepKind::TriangleContract, site)
}

/// Reduce a pair of adjacent quadrangles, branching on the flanking face
/// sizes exactly as the case analysis demands: both flanks quads → the
/// graph is the cube (terminal); exactly one flank a quad → collapse the
/// three quadrangles sharing a vertex; both flanks ≥ 5 → excise the pair
/// down to a single edge.
pub fn reduce_quads(
    g: &PlanarEmbedding,
    f1: usize,
    f2: usize,
) -> Result<(PlanarEmbedding, ReductionStep), ReduceError> {
    let faces = g.faces();
    if f1 >= faces.n_faces() || f2 >= faces.n_faces() || f1 == f2 {
        return Err(ReduceError::NotAdjacentQuads(f1, f2));
    }
    if faces.size(f1) != 4 || faces.size(f2) != 4 {
        return Err(ReduceError::NotAdjacentQuads(f1, f2));
    }
    // shared edge v1-v2
    let shared = faces.faces[f1]
        .iter()
        .find(|&&d| faces.face_of(g.twin(d)) == f2)
        .copied()
        .ok_or(ReduceError::NotAdjacentQuads(f1, f2))?;
    let v1 = g.origin(shared);
    let v2 = g.head(shared);
    let ring_nbr = |f: usize, v: Vertex, other: Vertex| -> Vertex {
        // neighbour of v along the boundary of f that is not `other`
        let cyc = faces.vertices(g, f);
        let k = cyc.len();
        let i = cyc.iter().position(|&x| x == v).unwrap();
        let a = cyc[(i + 1) % k];
        let b = cyc[(i + k - 1) % k];
        if a == other { b } else { a }
    };
    let u3 = ring_nbr(f1, v2, v1);
    let u4 = ring_nbr(f1, v1, v2);
    let w3 = ring_nbr(f2, v2, v1);
    let w4 = ring_nbr(f2, v1, v2);
    // the flanking faces are the third faces at the shared vertices
    let third_face = |v: Vertex| -> usize {
        faces_at(g, &faces, v)
            .into_iter()
            .find(|&f| f != f1 && f != f2)
            .expect("cubic vertex has three incident faces")
    };
    let f3 = third_face(v2); // incident to u3 and w3
    let f4 = third_face(v1); // incident to u4 and w4
    let (d3, d4) = (faces.size(f3), faces.size(f4));
    if d3 == 4 && d4 == 4 {
        if g.n_vertices() != 8 {
            return Err(ReduceError::InvalidResult(
                "quad flanks on both sides outside the cube contradict 3-connectivity",
            ));
        }
        return Ok((g.clone(), ReductionStep::terminal(StepKind::TerminalCube, g)));
    }
    if d3 == 4 || d4 == 4 {
        // relabel so the quadrangular flank is f3 (incident to u3, w3)
        let (u3, w3, f3) = if d3 == 4 { (u3, w3, f3) } else { (u4, w4, f4) };
        let mut site = vec![v1, v2, u3, u4, w3, w4];
        for x in faces.vertices(g, f3) {
            if !site.contains(&x) {
                site.push(x);
            }
        }
        if site.len() != 7 {
            return Err(ReduceError::InvalidResult("degenerate triple-quad site"));
        }
        return finish_collapse(g, StepKind::QuadTripleContract, site);
    }
    // both flanks of size >= 5: remove v1, v2 and identify u3 with w3,
    // u4 with w4, leaving a single edge in place of the two quadrangles
    let mut b = MapBuilder::from_embedding(g);
    b.delete_edge(shared);
    b.contract_edge(b.dart_between(u3, v2).expect("u3 adjacent to v2"));
    b.contract_edge(b.dart_between(u3, w3).expect("identification edge present"));
    b.contract_edge(b.dart_between(u4, v1).expect("u4 adjacent to v1"));
    b.contract_edge(b.dart_between(u4, w4).expect("identification edge present"));
    // the images of u3u4 and w3w4 are now parallel; keep one copy
    let par = b.dart_between(u3, u4).expect("merged vertices stay adjacent");
    b.delete_edge(par);
    let (g2, vmap) = b.compact();
    validate_reduced(&g2)?;
    let site = vec![v1, v2, u3, u4, w3, w4];
    build_step(g, g2, vmap, StepKind::QuadPairExcise, site)
}

fn finish_collapse(
    g: &PlanarEmbedding,
    kind: StepKind,
    site: Vec<Vertex>,
) -> Result<(PlanarEmbedding, ReductionStep), ReduceError> {
    let mut b = MapBuilder::from_embedding(g);
    b.collapse(&site);
    let (g2, vmap) = b.compact();
    validate_reduced(&g2)?;
    build_step(g, g2, vmap, kind, site)
}

fn build_step(
    g: &PlanarEmbedding,
    g2: PlanarEmbedding,
    vmap: Vec<Option<Vertex>>,
    kind: StepKind,
    site: Vec<Vertex>,
) -> Result<(PlanarEmbedding, ReductionStep), ReduceError> {
    if g2.n_vertices() >= g.n_vertices() {
        return Err(ReduceError::InvalidResult("step failed to shrink the graph"));
    }
    let mut inv = vec![None; g2.n_vertices()];
    let mut site_images = Vec::new();
    for v in 0..g.n_vertices() {
        if let Some(r) = vmap[v] {
            if site.contains(&v) {
                if !site_images.contains(&r) {
                    site_images.push(r);
                }
            } else {
                inv[r] = Some(v);
            }
        }
    }
    let lift_table = build_lift_table(g, &g2, &inv, &site, &site_images)?;
    let step = ReductionStep { kind, site, lift_table, original: g.clone(), inv, site_images };
    Ok((g2, step))
}

/// A path the reduced cycle takes through the site, translated into a
/// requirement on the original graph: connect `s` to `t` by a path whose
/// interior lies in the patch, passing through every listed waypoint.
struct PathSpec {
    s: Vertex,
    t: Vertex,
    waypoints: Vec<Vertex>,
}

/// Enumerate every way a Hamilton cycle can use the edges at the
/// replacement site and search for a matching disjoint path cover of the
/// patch. Patterns without a cover are omitted: they cannot occur on a
/// liftable cycle, and `lift` reports them as hard errors if ever seen.
fn build_lift_table(
    g: &PlanarEmbedding,
    g2: &PlanarEmbedding,
    inv: &[Option<Vertex>],
    site: &[Vertex],
    site_images: &[Vertex],
) -> Result<BTreeMap<Vec<Edge>, Vec<Edge>>, ReduceError> {
    let mut site_edges: Vec<Edge> = Vec::new();
    for &s in site_images {
        for w in g2.neighbors(s) {
            let e = norm(s, w);
            if !site_edges.contains(&e) {
                site_edges.push(e);
            }
        }
    }
    site_edges.sort_unstable();
    let mut in_patch = vec![false; g.n_vertices()];
    for &v in site {
        in_patch[v] = true;
    }
    let mut table = BTreeMap::new();
    for mask in 0u32..(1 << site_edges.len()) {
        let pattern: Vec<Edge> = site_edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let Some(specs) = pattern_paths(&pattern, site_images, inv) else {
            continue;
        };
        if let Some(cover) = cover_patch(g, &in_patch, site, &specs) {
            table.insert(pattern, cover);
        }
    }
    if table.is_empty() {
        return Err(ReduceError::InvalidResult("site admits no liftable traversal"));
    }
    Ok(table)
}

/// Decompose a candidate traversal pattern into the paths it forms
/// through the site. Returns None unless every site vertex has degree
/// exactly 2 and the pattern is a disjoint union of paths ending outside
/// the site (mapped back to original-graph endpoints and waypoints).
fn pattern_paths(
    pattern: &[Edge],
    site_images: &[Vertex],
    inv: &[Option<Vertex>],
) -> Option<Vec<PathSpec>> {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(u, v) in pattern {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for &s in site_images {
        if adj.get(&s).map_or(0, |a| a.len()) != 2 {
            return None;
        }
    }
    for a in adj.values() {
        if a.len() > 2 {
            return None;
        }
    }
    let mut used: Vec<Edge> = Vec::new();
    let mut specs = Vec::new();
    for (&start, nbrs) in &adj {
        if nbrs.len() != 1 {
            continue; // path endpoints have degree 1
        }
        let mut prev = start;
        let mut cur = nbrs[0];
        let e0 = norm(start, cur);
        if used.contains(&e0) {
            continue;
        }
        used.push(e0);
        let mut waypoints = Vec::new();
        loop {
            let a = &adj[&cur];
            if a.len() == 1 {
                break; // reached the other endpoint
            }
            // interior vertex of the site path: a site image is a free
            // patch traversal, an outside vertex is a fixed waypoint
            if !site_images.contains(&cur) {
                waypoints.push(inv[cur]?);
            }
            let nxt = if a[0] != prev { a[0] } else { a[1] };
            used.push(norm(cur, nxt));
            prev = cur;
            cur = nxt;
        }
        let s = inv[start]?;
        let t = inv[cur]?;
        specs.push(PathSpec { s, t, waypoints });
    }
    if used.len() != pattern.len() {
        return None; // leftover edges form a closed cycle at the site
    }
    Some(specs)
}

/// Search for vertex-disjoint paths realizing `specs` whose interiors
/// lie in the patch, jointly covering every patch vertex. Patch sizes
/// are at most 7, so plain backtracking is fine.
fn cover_patch(
    g: &PlanarEmbedding,
    in_patch: &[bool],
    site: &[Vertex],
    specs: &[PathSpec],
) -> Option<Vec<Edge>> {
    let mut used = vec![false; g.n_vertices()];
    let mut acc: Vec<Edge> = Vec::new();
    fn solve(
        g: &PlanarEmbedding,
        in_patch: &[bool],
        site: &[Vertex],
        specs: &[PathSpec],
        idx: usize,
        used: &mut Vec<bool>,
        acc: &mut Vec<Edge>,
    ) -> bool {
        if idx == specs.len() {
            return site.iter().all(|&v| used[v]);
        }
        let spec = &specs[idx];
        fn extend(
            g: &PlanarEmbedding,
            in_patch: &[bool],
            site: &[Vertex],
            specs: &[PathSpec],
            idx: usize,
            used: &mut Vec<bool>,
            acc: &mut Vec<Edge>,
            cur: Vertex,
            seen_waypoints: usize,
        ) -> bool {
            let spec = &specs[idx];
            for w in g.neighbors(cur) {
                if w == spec.t {
                    if seen_waypoints == spec.waypoints.len() {
                        acc.push(norm(cur, w));
                        if solve(g, in_patch, site, specs, idx + 1, used, acc) {
                            return true;
                        }
                        acc.pop();
                    }
                    continue;
                }
                let is_way = spec.waypoints.contains(&w);
                if (!in_patch[w] && !is_way) || used[w] {
                    continue;
                }
                used[w] = true;
                acc.push(norm(cur, w));
                let sw = seen_waypoints + is_way as usize;
                if extend(g, in_patch, site, specs, idx, used, acc, w, sw) {
                    return true;
                }
                acc.pop();
                used[w] = false;
            }
            false
        }
        extend(g, in_patch, site, specs, idx, used, acc, spec.s, 0)
    }
    // waypoints sit outside the patch but must not be reused across paths
    if solve(g, in_patch, site, specs, 0, &mut used, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

/// Apply triangle and adjacent-quad reductions until the graph is
/// Barnette or a terminal base case. Triangles are eliminated first,
/// then quad pairs, re-scanning after every step, so traces are
/// deterministic.
pub fn reduce_to_barnette(g: &PlanarEmbedding) -> Result<ReductionTrace, ReduceError> {
    if !classify(g).is_cubic_polyhedral_le6() {
        return Err(ReduceError::OutOfScope);
    }
    let mut cur = g.clone();
    let mut steps: Vec<ReductionStep> = Vec::new();
    let budget = g.n_vertices() / 2 + 1;
    loop {
        if steps.len() > budget {
            return Err(ReduceError::InvalidResult("reduction exceeded its step budget"));
        }
        let faces = cur.faces();
        let triangles: Vec<usize> =
            (0..faces.n_faces()).filter(|&f| faces.size(f) == 3).collect();
        if !triangles.is_empty() {
            let mut applied = None;
            for &f in &triangles {
                if let Ok(res) = reduce_triangle(&cur, f) {
                    applied = Some(res);
                    break;
                }
            }
            let (g2, step) =
                applied.ok_or(ReduceError::InvalidResult("no reducible triangle site"))?;
            let terminal = matches!(step.kind, StepKind::TerminalK4);
            steps.push(step);
            cur = g2;
            if terminal {
                break;
            }
            continue;
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for f in 0..faces.n_faces() {
            if faces.size(f) != 4 {
                continue;
            }
            for &d in &faces.faces[f] {
                let h = faces.face_of(cur.twin(d));
                if h > f && faces.size(h) == 4 && !pairs.contains(&(f, h)) {
                    pairs.push((f, h));
                }
            }
        }
        if pairs.is_empty() {
            break; // Barnette
        }
        let mut applied = None;
        for &(f1, f2) in &pairs {
            if let Ok(res) = reduce_quads(&cur, f1, f2) {
                applied = Some(res);
                break;
            }
        }
        let (g2, step) =
            applied.ok_or(ReduceError::InvalidResult("no reducible quadrangle pair"))?;
        let terminal = matches!(step.kind, StepKind::TerminalCube);
        steps.push(step);
        cur = g2;
        if terminal {
            break;
        }
    }
    Ok(ReductionTrace { steps, final_graph: cur })
}

/// Lift a Hamilton cycle of the fully reduced graph back to the
/// original, verifying at every stage.
pub fn lift_cycle(trace: &ReductionTrace, cycle: &HamCycle) -> Result<HamCycle, ReduceError> {
    if !verify_hamiltonian(&trace.final_graph, cycle) {
        return Err(ReduceError::BadCycle);
    }
    let mut cyc = cycle.clone();
    for step in trace.steps.iter().rev() {
        cyc = step.lift(&cyc)?;
    }
    Ok(cyc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::oracle::{enumerate_hamiltonian, OracleConfig};
    use crate::spiral::spiral_survey;

    fn lift_all(g: &PlanarEmbedding) -> usize {
        let trace = reduce_to_barnette(g).expect("reduction succeeds");
        let cls = classify(&trace.final_graph);
        assert!(
            trace.is_terminal() || cls.is_barnette(),
            "final graph neither terminal nor Barnette: {cls:?}"
        );
        let cycles = enumerate_hamiltonian(&trace.final_graph, &OracleConfig::default())
            .expect("oracle within budget");
        let mut lifted = 0;
        for c in &cycles {
            let up = lift_cycle(&trace, c).expect("lift succeeds");
            assert!(verify_hamiltonian(g, &up));
            lifted += 1;
        }
        lifted
    }

    #[test]
    fn prism_reduces_to_k4_and_lifts() {
        let g = construct::triangular_prism();
        let trace = reduce_to_barnette(&g).unwrap();
        let kinds: Vec<StepKind> = trace.steps.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, vec![StepKind::TriangleContract, StepKind::TerminalK4]);
        assert_eq!(trace.final_graph.n_vertices(), 4);
        assert!(lift_all(&g) >= 1);
    }

    #[test]
    fn k4_is_terminal() {
        let trace = reduce_to_barnette(&construct::k4()).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].kind, StepKind::TerminalK4);
    }

    #[test]
    fn cube_is_terminal() {
        let trace = reduce_to_barnette(&construct::cube()).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].kind, StepKind::TerminalCube);
        assert_eq!(lift_all(&construct::cube()), 6);
    }

    #[test]
    fn barnette_input_gives_empty_trace() {
        let g = construct::dodecahedron();
        let trace = reduce_to_barnette(&g).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.final_graph.n_vertices(), 20);
    }

    #[test]
    fn pentagonal_prism_excises_then_contracts() {
        let g = construct::pentagonal_prism();
        let trace = reduce_to_barnette(&g).unwrap();
        let kinds: Vec<StepKind> = trace.steps.iter().map(|s| s.kind).collect();
        assert_eq!(
            kinds,
            vec![StepKind::QuadPairExcise, StepKind::TriangleContract, StepKind::TerminalK4]
        );
        assert!(lift_all(&g) >= 1);
    }

    #[test]
    fn hexagonal_prism_excises_to_cube() {
        let g = construct::hexagonal_prism();
        let trace = reduce_to_barnette(&g).unwrap();
        let kinds: Vec<StepKind> = trace.steps.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, vec![StepKind::QuadPairExcise, StepKind::TerminalCube]);
        assert!(lift_all(&g) >= 1);
    }

    #[test]
    fn truncated_tetrahedron_reduces() {
        let g = construct::truncated_tetrahedron();
        assert!(lift_all(&g) >= 1);
    }

    #[test]
    fn exhaustive_lifts_small_survey() {
        // every cubic polyhedral graph with faces <= 6 on up to 14
        // vertices reachable by spiral windup: reduce, enumerate every
        // Hamilton cycle of the reduced graph, lift, verify
        let mut seen_kinds = Vec::new();
        for n in [4, 6, 8, 10, 12, 14] {
            for g in spiral_survey(n, &[3, 4, 5, 6]) {
                if !classify(&g).is_cubic_polyhedral_le6() {
                    continue;
                }
                let trace = reduce_to_barnette(&g).unwrap();
                for s in &trace.steps {
                    if !seen_kinds.contains(&s.kind) {
                        seen_kinds.push(s.kind);
                    }
                }
                lift_all(&g);
            }
        }
        assert!(seen_kinds.contains(&StepKind::TriangleContract));
        assert!(seen_kinds.contains(&StepKind::QuadPairExcise));
    }

    #[test]
    fn triple_quad_collapse_occurs_and_lifts() {
        // find a graph where an adjacent-quad pair has exactly one
        // quadrangular flank, forcing the three-quads-at-a-vertex collapse
        let mut found = false;
        'outer: for n in [10, 12, 14, 16] {
            for g in spiral_survey(n, &[4, 5, 6]) {
                if !classify(&g).is_cubic_polyhedral_le6() {
                    continue;
                }
                let trace = reduce_to_barnette(&g).unwrap();
                if trace.steps.iter().any(|s| s.kind == StepKind::QuadTripleContract) {
                    lift_all(&g);
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(found, "no triple-quad site in the survey range");
    }

    #[test]
    fn lift_rejects_foreign_cycle() {
        let g = construct::triangular_prism();
        let trace = reduce_to_barnette(&g).unwrap();
        let bogus = HamCycle(vec![0, 1, 2]);
        assert_eq!(lift_cycle(&trace, &bogus), Err(ReduceError::BadCycle));
    }
}
