//! Exact brute-force search: Hamilton cycles by branch-and-bound over edge
//! states, and exhaustive enumeration of 2-factors. Deliberately simple —
//! the pruning is limited to degree forcing, the cycle-closure rule and a
//! connectivity check, so the search is easy to trust.

use crate::embedding::{Dart, PlanarEmbedding, Vertex};
use crate::twofactor::TwoFactor;
use crate::verify::{verify_hamiltonian, HamCycle};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// refuse instances larger than this
    pub vertex_cap: usize,
    /// abort after this many branch nodes
    pub node_budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { vertex_cap: 64, node_budget: 200_000_000 }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub pruned: u64,
    pub found: bool,
    pub elapsed: Duration,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} vertices, above the oracle cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("search aborted after {0} branch nodes")]
    BudgetExceeded(u64),
}

/// Undirected edge view of an embedding, with one representative dart per edge.
struct EdgeGraph {
    n: usize,
    ends: Vec<(Vertex, Vertex)>,
    rep_dart: Vec<Dart>,
    /// incident edge ids per vertex
    inc: Vec<Vec<usize>>,
}

impl EdgeGraph {
    fn build(emb: &PlanarEmbedding) -> Self {
        let n = emb.n_vertices();
        let mut ends = Vec::new();
        let mut rep_dart = Vec::new();
        let mut inc = vec![Vec::new(); n];
        for d in 0..emb.n_darts() {
            if d < emb.twin(d) {
                let e = ends.len();
                ends.push((emb.origin(d), emb.head(d)));
                rep_dart.push(d);
                inc[emb.origin(d)].push(e);
                inc[emb.head(d)].push(e);
            }
        }
        EdgeGraph { n, ends, rep_dart, inc }
    }
}

/// Union-find without path compression so that unions can be rolled back.
struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    trail: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n as u32).collect(), size: vec![1; n], trail: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Merge the components of two roots. Caller guarantees `a != b`.
    fn union_roots(&mut self, a: usize, b: usize) {
        let (big, small) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
        self.parent[small] = big as u32;
        self.size[big] += self.size[small];
        self.trail.push(small as u32);
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let small = self.trail.pop().unwrap() as usize;
            let big = self.parent[small] as usize;
            self.parent[small] = small as u32;
            self.size[big] -= self.size[small];
        }
    }
}

const UNDEC: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct HamSearch<'a> {
    g: &'a EdgeGraph,
    state: Vec<u8>,
    deg_in: Vec<u8>,
    deg_und: Vec<u8>,
    n_in: usize,
    dsu: Dsu,
    /// edges assigned (any state), for rollback
    trail: Vec<usize>,
    stats: SearchStats,
    budget: u64,
    /// solutions as vertex cycles; search stops after `want` of them
    solutions: Vec<HamCycle>,
    want: usize,
}

enum SearchEnd {
    Exhausted,
    Satisfied,
    OverBudget,
}

impl<'a> HamSearch<'a> {
    fn new(g: &'a EdgeGraph, budget: u64, want: usize) -> Self {
        let deg_und: Vec<u8> = (0..g.n).map(|v| g.inc[v].len() as u8).collect();
        HamSearch {
            g,
            state: vec![UNDEC; g.ends.len()],
            deg_in: vec![0; g.n],
            deg_und,
            n_in: 0,
            dsu: Dsu::new(g.n),
            trail: Vec::new(),
            stats: SearchStats::default(),
            budget,
            solutions: Vec::new(),
            want,
        }
    }

    /// Set one edge and run degree forcing to a fixed point.
    /// Returns false on contradiction (caller must roll back).
    fn assign(&mut self, e0: usize, val0: u8) -> bool {
        let mut pending = vec![(e0, val0)];
        while let Some((e, val)) = pending.pop() {
            match self.state[e] {
                s if s == val => continue,
                UNDEC => {}
                _ => return false, // forced both ways
            }
            let (u, v) = self.g.ends[e];
            if val == IN {
                if self.deg_in[u] >= 2 || self.deg_in[v] >= 2 {
                    return false;
                }
                let (ru, rv) = (self.dsu.find(u), self.dsu.find(v));
                if ru == rv {
                    // closing a cycle is only allowed when it is the
                    // spanning one
                    if self.n_in != self.g.n - 1 {
                        return false;
                    }
                } else {
                    self.dsu.union_roots(ru, rv);
                }
                self.n_in += 1;
                self.deg_in[u] += 1;
                self.deg_in[v] += 1;
            }
            self.state[e] = val;
            self.trail.push(e);
            self.deg_und[u] -= 1;
            self.deg_und[v] -= 1;
            for w in [u, v] {
                let need = 2 - self.deg_in[w] as i32;
                let avail = self.deg_und[w] as i32;
                if avail < need {
                    return false;
                }
                if need == 0 && avail > 0 {
                    for &f in &self.g.inc[w] {
                        if self.state[f] == UNDEC {
                            pending.push((f, OUT));
                        }
                    }
                } else if need == avail && need > 0 {
                    for &f in &self.g.inc[w] {
                        if self.state[f] == UNDEC {
                            pending.push((f, IN));
                        }
                    }
                }
            }
        }
        true
    }

    fn rollback(&mut self, edge_mark: usize, dsu_mark: usize) {
        while self.trail.len() > edge_mark {
            let e = self.trail.pop().unwrap();
            let (u, v) = self.g.ends[e];
            if self.state[e] == IN {
                self.n_in -= 1;
                self.deg_in[u] -= 1;
                self.deg_in[v] -= 1;
            }
            self.state[e] = UNDEC;
            self.deg_und[u] += 1;
            self.deg_und[v] += 1;
        }
        self.dsu.rollback(dsu_mark);
    }

    /// All vertices must lie in a single component of the not-OUT subgraph.
    fn connectivity_ok(&self) -> bool {
        let n = self.g.n;
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(v) = stack.pop() {
            for &e in &self.g.inc[v] {
                if self.state[e] == OUT {
                    continue;
                }
                let (a, b) = self.g.ends[e];
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    cnt += 1;
                    stack.push(w);
                }
            }
        }
        cnt == n
    }

    /// Pick an undecided edge, preferring to extend an existing path.
    fn branch_edge(&self) -> Option<usize> {
        let mut fallback = None;
        for v in 0..self.g.n {
            if self.deg_und[v] == 0 {
                continue;
            }
            if self.deg_in[v] == 1 {
                return self.g.inc[v].iter().copied().find(|&e| self.state[e] == UNDEC);
            }
            if fallback.is_none() {
                fallback = self.g.inc[v].iter().copied().find(|&e| self.state[e] == UNDEC);
            }
        }
        fallback
    }

    fn extract_cycle(&self) -> HamCycle {
        let n = self.g.n;
        let mut cycle = Vec::with_capacity(n);
        let mut prev = usize::MAX;
        let mut v = 0usize;
        for _ in 0..n {
            cycle.push(v);
            let &e = self.g.inc[v]
                .iter()
                .find(|&&e| {
                    let (a, b) = self.g.ends[e];
                    self.state[e] == IN && (if a == v { b } else { a }) != prev
                })
                .expect("degree-2 vertex on cycle");
            let (a, b) = self.g.ends[e];
            prev = v;
            v = if a == v { b } else { a };
        }
        HamCycle(cycle)
    }

    fn search(&mut self) -> SearchEnd {
        self.stats.nodes_expanded += 1;
        if self.stats.nodes_expanded > self.budget {
            return SearchEnd::OverBudget;
        }
        let Some(e) = self.branch_edge() else {
            if self.n_in == self.g.n {
                self.solutions.push(self.extract_cycle());
                if self.solutions.len() >= self.want {
                    return SearchEnd::Satisfied;
                }
            }
            return SearchEnd::Exhausted;
        };
        if !self.connectivity_ok() {
            self.stats.pruned += 1;
            return SearchEnd::Exhausted;
        }
        for val in [IN, OUT] {
            let em = self.trail.len();
            let dm = self.dsu.mark();
            let ok = self.assign(e, val);
            if ok {
                match self.search() {
                    SearchEnd::Exhausted => {}
                    end => {
                        self.rollback(em, dm);
                        return end;
                    }
                }
            } else {
                self.stats.pruned += 1;
            }
            self.rollback(em, dm);
        }
        SearchEnd::Exhausted
    }
}

fn run_ham_search(
    emb: &PlanarEmbedding,
    cfg: &OracleConfig,
    want: usize,
) -> Result<(Vec<HamCycle>, SearchStats), OracleError> {
    let n = emb.n_vertices();
    if n > cfg.vertex_cap {
        return Err(OracleError::CapExceeded { n, cap: cfg.vertex_cap });
    }
    let g = EdgeGraph::build(emb);
    let start = Instant::now();
    let mut s = HamSearch::new(&g, cfg.node_budget, want);
    let end = s.search();
    let mut stats = s.stats.clone();
    stats.elapsed = start.elapsed();
    stats.found = !s.solutions.is_empty();
    if matches!(end, SearchEnd::OverBudget) {
        return Err(OracleError::BudgetExceeded(stats.nodes_expanded));
    }
    for c in &s.solutions {
        debug_assert!(verify_hamiltonian(emb, c));
    }
    Ok((s.solutions, stats))
}

/// Exact search for one Hamilton cycle. `None` means the graph is certainly
/// non-hamiltonian.
pub fn brute_hamilton(
    emb: &PlanarEmbedding,
    cfg: &OracleConfig,
) -> Result<Option<HamCycle>, OracleError> {
    let (mut sols, _) = run_ham_search(emb, cfg, 1)?;
    if let Some(c) = sols.first() {
        assert!(verify_hamiltonian(emb, c), "oracle produced an invalid certificate");
    }
    Ok(sols.pop())
}

/// Like `brute_hamilton` but also returns search statistics.
pub fn brute_hamilton_stats(
    emb: &PlanarEmbedding,
    cfg: &OracleConfig,
) -> Result<(Option<HamCycle>, SearchStats), OracleError> {
    let (mut sols, stats) = run_ham_search(emb, cfg, 1)?;
    Ok((sols.pop(), stats))
}

/// All Hamilton cycles, each edge set listed once, in canonical form.
pub fn enumerate_hamiltonian(
    emb: &PlanarEmbedding,
    cfg: &OracleConfig,
) -> Result<Vec<HamCycle>, OracleError> {
    let (mut sols, _) = run_ham_search(emb, cfg, usize::MAX)?;
    for c in &mut sols {
        assert!(verify_hamiltonian(emb, c), "oracle produced an invalid certificate");
        c.canonicalize();
    }
    Ok(sols)
}

/// All 2-factors in the modified sense (components are cycles or isolated
/// edges). Exhaustive over edge subsets with degree pruning; capped at 28
/// vertices.
pub fn enumerate_2factors(
    emb: &PlanarEmbedding,
    cfg: &OracleConfig,
) -> Result<Vec<TwoFactor>, OracleError> {
    let n = emb.n_vertices();
    let cap = cfg.vertex_cap.min(28);
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let g = EdgeGraph::build(emb);
    let m = g.ends.len();
    // a vertex is fully decided once its last incident edge (in index
    // order) is assigned
    let mut close_at = vec![0usize; n];
    for e in 0..m {
        let (u, v) = g.ends[e];
        close_at[u] = close_at[u].max(e);
        close_at[v] = close_at[v].max(e);
    }
    let mut chosen = vec![false; m];
    let mut deg = vec![0u8; n];
    let mut und: Vec<u8> = (0..n).map(|v| g.inc[v].len() as u8).collect();
    let mut out = Vec::new();
    let mut nodes: u64 = 0;

    fn rec(
        e: usize,
        g: &EdgeGraph,
        emb: &PlanarEmbedding,
        close_at: &[usize],
        chosen: &mut Vec<bool>,
        deg: &mut Vec<u8>,
        und: &mut Vec<u8>,
        out: &mut Vec<TwoFactor>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<(), OracleError> {
        *nodes += 1;
        if *nodes > budget {
            return Err(OracleError::BudgetExceeded(*nodes));
        }
        if e == g.ends.len() {
            // components must be cycles or isolated edges: a degree-1
            // vertex's partner must also have degree 1
            for v in 0..g.n {
                if deg[v] == 1 {
                    let &f = g.inc[v].iter().find(|&&f| chosen[f]).unwrap();
                    let (a, b) = g.ends[f];
                    let w = if a == v { b } else { a };
                    if deg[w] != 1 {
                        return Ok(());
                    }
                }
            }
            let mut mult = vec![0u8; emb.n_darts()];
            for f in 0..g.ends.len() {
                if chosen[f] {
                    let d = g.rep_dart[f];
                    let (a, _) = g.ends[f];
                    let m = if deg[a] == 1 { 2 } else { 1 };
                    mult[d] = m;
                    mult[emb.twin(d)] = m;
                }
            }
            out.push(TwoFactor::from_multiplicities(emb, mult).expect("search kept degrees valid"));
            return Ok(());
        }
        let (u, v) = g.ends[e];
        for take in [true, false] {
            if take && (deg[u] == 2 || deg[v] == 2) {
                continue;
            }
            chosen[e] = take;
            if take {
                deg[u] += 1;
                deg[v] += 1;
            }
            und[u] -= 1;
            und[v] -= 1;
            let mut ok = true;
            for w in [u, v] {
                if deg[w] + und[w] < 1 {
                    ok = false;
                }
                if close_at[w] == e && !(deg[w] == 1 || deg[w] == 2) {
                    ok = false;
                }
            }
            if ok {
                rec(e + 1, g, emb, close_at, chosen, deg, und, out, nodes, budget)?;
            }
            und[u] += 1;
            und[v] += 1;
            if take {
                deg[u] -= 1;
                deg[v] -= 1;
            }
            chosen[e] = false;
        }
        Ok(())
    }

    rec(
        0,
        &g,
        emb,
        &close_at,
        &mut chosen,
        &mut deg,
        &mut und,
        &mut out,
        &mut nodes,
        cfg.node_budget,
    )?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn k4_has_three_hamilton_cycles() {
        let g = construct::k4();
        let cfg = OracleConfig::default();
        assert!(brute_hamilton(&g, &cfg).unwrap().is_some());
        let all = enumerate_hamiltonian(&g, &cfg).unwrap();
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn prisms_are_hamiltonian() {
        let cfg = OracleConfig::default();
        for k in 3..=6 {
            let g = construct::prism(k);
            let c = brute_hamilton(&g, &cfg).unwrap().expect("prisms are hamiltonian");
            assert_eq!(c.len(), 2 * k);
        }
    }

    #[test]
    fn dodecahedron_cycle_found() {
        let g = construct::dodecahedron();
        let c = brute_hamilton(&g, &OracleConfig::default()).unwrap().unwrap();
        assert_eq!(c.len(), 20);
    }

    #[test]
    fn cap_respected() {
        let g = construct::nanotube_5_0(5);
        let cfg = OracleConfig { vertex_cap: 24, ..OracleConfig::default() };
        assert_eq!(
            brute_hamilton(&g, &cfg),
            Err(OracleError::CapExceeded { n: 70, cap: 24 })
        );
    }

    #[test]
    fn k4_two_factors() {
        let g = construct::k4();
        let all = enumerate_2factors(&g, &OracleConfig::default()).unwrap();
        // 3 Hamilton cycles + 3 perfect matchings (as pairs of 2-cycles)
        assert_eq!(all.len(), 6);
        let hams = all.iter().filter(|f| f.is_hamiltonian(&g)).count();
        let matchings = all.iter().filter(|f| f.n_cycles() == 2).count();
        assert_eq!(hams, 3);
        assert_eq!(matchings, 3);
    }

    #[test]
    fn dodecahedron_two_factor_parity() {
        // every modified 2-factor of the dodecahedron satisfies
        // f6 + f5 + x4 + q + c = 0 (mod 2) with the coloring derived from
        // cycle nesting and q = (white pentagons) / 2
        let g = construct::dodecahedron();
        let faces = g.faces();
        let all = enumerate_2factors(&g, &OracleConfig::default()).unwrap();
        assert_eq!(all.len(), 579);
        // the dodecahedron has exactly 30 Hamilton cycles
        assert_eq!(all.iter().filter(|f| f.is_hamiltonian(&g)).count(), 30);
        for f in &all {
            let mut col = vec![u8::MAX; faces.n_faces()];
            col[0] = 0;
            let mut queue = std::collections::VecDeque::from([0usize]);
            while let Some(x) = queue.pop_front() {
                for &d in &faces.faces[x] {
                    let y = faces.face_of(g.twin(d));
                    let want = col[x] ^ u8::from(f.multiplicity(d) == 1);
                    if col[y] == u8::MAX {
                        col[y] = want;
                        queue.push_back(y);
                    } else {
                        assert_eq!(col[y], want, "cycle nesting must 2-color the faces");
                    }
                }
            }
            let whites = col.iter().filter(|&&c| c == 1).count();
            assert_eq!(whites % 2, 0);
            assert_eq!((12 + whites / 2 + f.n_cycles()) % 2, 0);
        }
    }

    #[test]
    fn cube_two_factors_include_face_pairs() {
        let g = construct::cube();
        let all = enumerate_2factors(&g, &OracleConfig::default()).unwrap();
        // some factor is a pair of disjoint 4-cycles (top and bottom faces)
        assert!(all
            .iter()
            .any(|f| f.n_cycles() == 2 && f.cycles().iter().all(|c| c.len() == 4)));
        assert!(all.iter().any(|f| f.is_hamiltonian(&g)));
    }
}
