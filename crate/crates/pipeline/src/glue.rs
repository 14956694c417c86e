//! Gluing the cycles of a modified 2-factor into a single Hamilton cycle.
//!
//! Every resonant hexagon is replaced by a hub vertex joined to the six
//! hexagon vertices; the three factor edges on the hexagon disappear.
//! In the resulting plane multigraph F the faces are black (they contain
//! a grey region of the factor) or white. Processing a hub means putting
//! back one of the two alternating edge triples of the hexagon, which
//! merges the three faces in the slots the triple does not close. The
//! order is driven by how many distinguished ("colored") faces surround
//! each hub: the first hub merges its three white faces into the red
//! face, hubs seeing one colored face are fragile and grow the red face,
//! hubs seeing two are unstable and are resolved immediately. Keeping
//! the hub graph 2-connected at every step guarantees the final triple
//! choice closes everything into a single cycle.

use barnette_core::builder::MapBuilder;
use barnette_core::{Dart, FaceSet, HamCycle, PlanarEmbedding, TwoFactor, Vertex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlueError {
    #[error("face colors around hexagon {0} do not alternate as expected")]
    BadState(usize),
    #[error("no processing order keeps the hexagon graph 2-connected")]
    Stuck,
    #[error("glued factor is not a Hamilton cycle")]
    BadResult,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Start,
    Fragile,
    Unstable,
    Final,
}

/// One processed hexagon, for `--trace` output and the replay tests.
#[derive(Debug, Clone)]
pub struct GlueStep {
    pub hexagon: usize,
    pub kind: StepKind,
    pub hubs_left: usize,
    pub h_two_connected: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FColor {
    Black,
    White,
    /// red is tag 0; every other tag marks one unique colored face
    Special(u32),
}

#[derive(Debug, Clone)]
struct State {
    b: MapBuilder,
    /// face id per dart slot (dead darts hold stale values)
    face_of: Vec<u32>,
    orbits: Vec<Vec<Dart>>,
    color: Vec<FColor>,
    /// unprocessed resonant hexagons (face ids in G)
    alive: Vec<usize>,
    /// inserted triple per processed hexagon
    chosen: Vec<(usize, [(Vertex, Vertex); 3])>,
    next_tag: u32,
}

pub struct Glue<'a> {
    g: &'a PlanarEmbedding,
    faces: &'a FaceSet,
    factor: &'a TwoFactor,
    grey: &'a [bool],
    hub_of: Vec<Option<Vertex>>,
    hex_vertices: Vec<Vec<Vertex>>,
    /// slot i of a hub is closed by hexagon edge (u_i, u_{i+1}) when
    /// true, (u_{i-1}, u_i) otherwise; fixed by the global orientation
    forward: bool,
    state: State,
    steps: Vec<GlueStep>,
}

/// Glue the factor into a single cycle. `factor` must satisfy
/// `valid_structure`; a single-cycle factor is returned as is.
pub fn glue(
    g: &PlanarEmbedding,
    faces: &FaceSet,
    factor: &TwoFactor,
    grey: &[bool],
) -> Result<(HamCycle, Vec<GlueStep>), GlueError> {
    if factor.n_cycles() == 1 {
        return Ok((HamCycle(factor.cycles()[0].clone()), Vec::new()));
    }
    let base = Glue::build(g, faces, factor, grey)?;
    let hubs = base.state.alive.clone();
    for &start in &hubs {
        let mut run = Glue { state: base.state.clone(), steps: Vec::new(), ..base.shallow() };
        match run.run(start) {
            Ok(cycle) => return Ok((cycle, run.steps)),
            Err(_) => continue,
        }
    }
    Err(GlueError::Stuck)
}

impl<'a> Glue<'a> {
    fn shallow(&self) -> Glue<'a> {
        Glue {
            g: self.g,
            faces: self.faces,
            factor: self.factor,
            grey: self.grey,
            hub_of: self.hub_of.clone(),
            hex_vertices: self.hex_vertices.clone(),
            forward: self.forward,
            state: self.state.clone(),
            steps: Vec::new(),
        }
    }

    fn build(
        g: &'a PlanarEmbedding,
        faces: &'a FaceSet,
        factor: &'a TwoFactor,
        grey: &'a [bool],
    ) -> Result<Glue<'a>, GlueError> {
        let resonant = factor.resonant_hexagons(g, faces);
        let mut b = MapBuilder::from_embedding(g);
        let mut hub_of = vec![None; faces.n_faces()];
        let mut hex_vertices = vec![Vec::new(); faces.n_faces()];
        for &h in &resonant {
            let hub = b.add_vertex();
            let mut prev_hub_dart = None;
            // walking the boundary backwards makes the hub rotation the
            // reverse of the face orbit, so each slot face is the
            // triangle hub, u_i, u_{i+1}
            for &d in faces.faces[h].iter().rev() {
                let after = b.prev(d);
                let t = match prev_hub_dart {
                    None => b.add_first_edge(after, hub),
                    Some(p) => {
                        let nd = b.add_edge(after, p);
                        b.twin(nd)
                    }
                };
                prev_hub_dart = Some(t);
            }
            hub_of[h] = Some(hub);
            hex_vertices[h] = b.darts_at(hub).iter().map(|&t| b.head(t)).collect();
        }
        // keep only factor edges not on a resonant hexagon, plus spokes
        for d in 0..g.n_darts() {
            if d > g.twin(d) || !b.is_alive(d) {
                continue;
            }
            let on_hub = hub_of[faces.face_of(d)].is_some()
                || hub_of[faces.face_of(g.twin(d))].is_some();
            if factor.multiplicity(d) == 0 || on_hub {
                b.delete_edge(d);
            }
        }
        let state = State {
            b,
            face_of: Vec::new(),
            orbits: Vec::new(),
            color: Vec::new(),
            alive: resonant.clone(),
            chosen: Vec::new(),
            next_tag: 0,
        };
        let mut glue = Glue {
            g,
            faces,
            factor,
            grey,
            hub_of,
            hex_vertices,
            forward: true,
            state,
            steps: Vec::new(),
        };
        glue.recompute_initial()?;
        glue.detect_orientation()?;
        Ok(glue)
    }

    fn hub(&self, h: usize) -> Vertex {
        self.hub_of[h].unwrap()
    }

    /// Compute face orbits and their initial black/white colors.
    fn recompute_initial(&mut self) -> Result<(), GlueError> {
        let (face_of, orbits) = self.state.b.face_orbits();
        let mut color = Vec::with_capacity(orbits.len());
        for orbit in &orbits {
            color.push(self.initial_color(orbit)?);
        }
        self.state.face_of = face_of;
        self.state.orbits = orbits;
        self.state.color = color;
        Ok(())
    }

    fn initial_color(&self, orbit: &[Dart]) -> Result<FColor, GlueError> {
        if let Some(&d) = orbit.iter().find(|&&d| d < self.g.n_darts()) {
            // a factor edge: the face inherits the color of its side
            return Ok(if self.grey[self.faces.face_of(d)] {
                FColor::Black
            } else {
                FColor::White
            });
        }
        // all spokes: the face encloses a non-factor or multiplicity-2
        // edge between consecutive original vertices on its boundary
        let originals: Vec<Vertex> = orbit
            .iter()
            .map(|&d| self.state.b.origin(d))
            .filter(|&v| v < self.g.n_vertices())
            .collect();
        for i in 0..originals.len() {
            let u = originals[i];
            let v = originals[(i + 1) % originals.len()];
            if let Some(d) = self.g.dart_between(u, v) {
                if self.factor.multiplicity(d) == 2 {
                    return Ok(FColor::Black);
                }
            }
        }
        Ok(FColor::White)
    }

    /// Whether slot i (the face of the i-th hub dart) spans the hexagon
    /// edge (u_i, u_{i+1}) or (u_{i-1}, u_i).
    fn detect_orientation(&mut self) -> Result<(), GlueError> {
        for &h in &self.state.alive {
            let hub = self.hub(h);
            let ts = self.state.b.darts_at(hub);
            let f0 = self.state.face_of[ts[0]];
            // the slot face of t_0 re-enters the hub through the twin of
            // the adjacent spoke
            let others: Vec<Dart> = self.state.orbits[f0 as usize]
                .iter()
                .copied()
                .filter(|&d| d != self.state.b.twin(ts[0]) && self.state.b.head(d) == hub)
                .map(|d| self.state.b.twin(d))
                .collect();
            if others.len() == 1 {
                self.forward = others[0] == ts[1];
                return Ok(());
            }
        }
        Err(GlueError::Stuck)
    }

    /// Neighbors of a hub in the hexagon graph H, via the degree-2 chains.
    fn h_neighbors(&self, h: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for t in self.state.b.darts_at(self.hub(h)) {
            let mut d = t;
            loop {
                let w = self.state.b.head(d);
                if w >= self.g.n_vertices() {
                    // another hub (or h itself through a chain)
                    let hex = self
                        .state
                        .alive
                        .iter()
                        .copied()
                        .find(|&x| self.hub(x) == w)
                        .expect("chain must end at an alive hub");
                    out.push(hex);
                    break;
                }
                let back = self.state.b.twin(d);
                let ds = self.state.b.darts_at(w);
                debug_assert_eq!(ds.len(), 2);
                d = if ds[0] == back { ds[1] } else { ds[0] };
            }
        }
        out
    }

    /// H restricted to the alive hubs is 2-connected (trivially true with
    /// at most two hubs, provided it stays connected).
    fn two_connected(&self) -> bool {
        let hubs = &self.state.alive;
        if hubs.len() <= 1 {
            return true;
        }
        let adj: Vec<Vec<usize>> = hubs
            .iter()
            .map(|&h| {
                self.h_neighbors(h)
                    .into_iter()
                    .map(|x| hubs.iter().position(|&y| y == x).unwrap())
                    .collect()
            })
            .collect();
        let connected = |skip: Option<usize>| -> bool {
            let k = hubs.len();
            let start = (0..k).find(|&i| Some(i) != skip).unwrap();
            let mut seen = vec![false; k];
            seen[start] = true;
            let mut stack = vec![start];
            let mut cnt = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if Some(y) != skip && !seen[y] {
                        seen[y] = true;
                        cnt += 1;
                        stack.push(y);
                    }
                }
            }
            cnt == k - usize::from(skip.is_some())
        };
        if !connected(None) {
            return false;
        }
        if hubs.len() == 2 {
            return true;
        }
        (0..hubs.len()).all(|i| connected(Some(i)))
    }

    fn slot_colors(&self, h: usize) -> (Vec<Dart>, Vec<FColor>) {
        let ts = self.state.b.darts_at(self.hub(h));
        let cols = ts
            .iter()
            .map(|&t| self.state.color[self.state.face_of[t] as usize])
            .collect();
        (ts, cols)
    }

    fn special_positions(cols: &[FColor]) -> Vec<usize> {
        (0..6)
            .filter(|&i| matches!(cols[i], FColor::Special(_)))
            .collect()
    }

    /// The edge that closes slot i of hexagon h.
    fn closing_edge(&self, h: usize, i: usize) -> (Vertex, Vertex) {
        let us = &self.hex_vertices[h];
        if self.forward {
            (us[i], us[(i + 1) % 6])
        } else {
            (us[(i + 5) % 6], us[i])
        }
    }

    /// Process hexagon h by inserting its triple at the given parity
    /// class, merging the other three slots into a face of `merged`
    /// color. `fresh_white_slot` marks a slot whose face must take a new
    /// unique color afterwards.
    fn process(
        &mut self,
        h: usize,
        insert_class: usize,
        merged: FColor,
        fresh_white_slot: Option<usize>,
    ) -> Result<(), GlueError> {
        let hub = self.hub(h);
        let ts = self.state.b.darts_at(hub);
        // representative surviving darts of the faces to merge, and of
        // the slot that gets a fresh color
        let rep_of_slot = |slot: usize| -> Option<Dart> {
            let f = self.state.face_of[ts[slot]] as usize;
            self.state.orbits[f]
                .iter()
                .copied()
                .find(|&d| self.state.b.origin(d) != hub && self.state.b.head(d) != hub)
        };
        let merged_reps: Vec<Dart> = (0..6)
            .filter(|i| i % 2 != insert_class)
            .filter_map(rep_of_slot)
            .collect();
        if merged_reps.is_empty() {
            return Err(GlueError::BadState(h));
        }
        let fresh_rep = fresh_white_slot.and_then(rep_of_slot);
        // remember old colors per dart before the orbits change
        let old_color: Vec<FColor> = (0..self.state.b.n_dart_slots())
            .map(|d| {
                let f = self.state.face_of.get(d).copied().unwrap_or(0);
                self.state
                    .color
                    .get(f as usize)
                    .copied()
                    .unwrap_or(FColor::White)
            })
            .collect();
        let old_len = self.state.b.n_dart_slots();

        // surgery
        self.state.b.delete_vertex(hub);
        let mut triple = [(0, 0); 3];
        for (k, i) in (0..6).filter(|i| i % 2 == insert_class).enumerate() {
            let (u, v) = self.closing_edge(h, i);
            let du = self.state.b.darts_at(u)[0];
            let dv = self.state.b.darts_at(v)[0];
            self.state.b.add_edge(du, dv);
            triple[k] = (u, v);
        }
        self.state.chosen.push((h, triple));
        self.state.alive.retain(|&x| x != h);

        // recompute faces and carry the colors over
        let (face_of, orbits) = self.state.b.face_orbits();
        let merged_face = face_of[merged_reps[0]];
        if merged_reps.iter().any(|&d| face_of[d] != merged_face) {
            return Err(GlueError::BadState(h));
        }
        let mut color = vec![FColor::White; orbits.len()];
        for (f, orbit) in orbits.iter().enumerate() {
            if f as u32 == merged_face {
                color[f] = merged;
                continue;
            }
            let inherited = orbit
                .iter()
                .copied()
                .find(|&d| d < old_len)
                .map(|d| old_color[d]);
            color[f] = inherited.ok_or(GlueError::BadState(h))?;
        }
        if let Some(rep) = fresh_rep {
            let f = face_of[rep] as usize;
            if f as u32 != merged_face {
                color[f] = FColor::Special(self.state.next_tag);
                self.state.next_tag += 1;
            }
        }
        // a split face may leave two orbits with the same unique tag
        let mut seen_tag: Vec<(u32, usize)> = Vec::new();
        for f in 0..color.len() {
            if let FColor::Special(t) = color[f] {
                if let Some(&(_, first)) = seen_tag.iter().find(|&&(x, _)| x == t) {
                    let keep_first = orbits[first][0] < orbits[f][0];
                    let loser = if keep_first { f } else { first };
                    color[loser] = FColor::Special(self.state.next_tag);
                    self.state.next_tag += 1;
                    if !keep_first {
                        seen_tag.retain(|&(x, _)| x != t);
                        seen_tag.push((t, f));
                    }
                } else {
                    seen_tag.push((t, f));
                }
            }
        }
        self.state.face_of = face_of;
        self.state.orbits = orbits;
        self.state.color = color;
        Ok(())
    }

    /// Black slots must occupy exactly one parity class; return it.
    fn black_class(cols: &[FColor]) -> Option<usize> {
        let blacks: Vec<usize> = (0..6).filter(|&i| cols[i] == FColor::Black).collect();
        if blacks.len() == 3 && blacks.iter().all(|&i| i % 2 == blacks[0] % 2) {
            Some(blacks[0] % 2)
        } else {
            None
        }
    }

    fn step(&mut self, h: usize, kind: StepKind) -> Result<(), GlueError> {
        let (_, cols) = self.slot_colors(h);
        let specials = Self::special_positions(&cols);
        match kind {
            StepKind::Start => {
                let bc = Self::black_class(&cols).ok_or(GlueError::BadState(h))?;
                // red face: tag 0
                self.state.next_tag = self.state.next_tag.max(1);
                self.process(h, bc, FColor::Special(0), None)?;
            }
            StepKind::Fragile => {
                debug_assert_eq!(specials.len(), 1);
                let bc = Self::black_class(&cols).ok_or(GlueError::BadState(h))?;
                let FColor::Special(tag) = cols[specials[0]] else { unreachable!() };
                if specials[0] % 2 == bc {
                    return Err(GlueError::BadState(h));
                }
                self.process(h, bc, FColor::Special(tag), None)?;
            }
            StepKind::Unstable => {
                debug_assert_eq!(specials.len(), 2);
                let (a, b) = (specials[0], specials[1]);
                let (FColor::Special(ta), FColor::Special(tb)) = (cols[a], cols[b]) else {
                    unreachable!()
                };
                if a % 2 != b % 2 {
                    return Err(GlueError::BadState(h));
                }
                let same_face =
                    self.state.face_of[self.state.b.darts_at(self.hub(h))[a]]
                        == self.state.face_of[self.state.b.darts_at(self.hub(h))[b]];
                if same_face {
                    // merge the three black faces; the white slot in the
                    // closed class becomes a new unique face
                    let class = a % 2;
                    let white_slot = (0..6)
                        .find(|&i| i % 2 == class && i != a && i != b)
                        .unwrap();
                    self.process(h, class, FColor::Black, Some(white_slot))?;
                } else {
                    let bc = Self::black_class(&cols).ok_or(GlueError::BadState(h))?;
                    if a % 2 == bc {
                        return Err(GlueError::BadState(h));
                    }
                    self.process(h, bc, FColor::Special(ta.min(tb)), None)?;
                }
            }
            StepKind::Final => unreachable!("handled in run"),
        }
        Ok(())
    }

    fn classify(&self, h: usize) -> usize {
        let (_, cols) = self.slot_colors(h);
        Self::special_positions(&cols).len()
    }

    fn record(&mut self, h: usize, kind: StepKind) {
        let frame = GlueStep {
            hexagon: h,
            kind,
            hubs_left: self.state.alive.len(),
            h_two_connected: self.two_connected(),
        };
        self.steps.push(frame);
    }

    fn run(&mut self, start: usize) -> Result<HamCycle, GlueError> {
        if self.state.alive.len() == 1 {
            return self.final_step();
        }
        self.step(start, StepKind::Start)?;
        self.record(start, StepKind::Start);
        if !self.steps.last().unwrap().h_two_connected {
            return Err(GlueError::Stuck);
        }
        loop {
            if self.state.alive.len() == 1 {
                let h = self.state.alive[0];
                let c = self.final_step();
                if c.is_ok() {
                    self.record(h, StepKind::Final);
                }
                return c;
            }
            // unstable hubs are resolved immediately
            if let Some(h) = self
                .state
                .alive
                .iter()
                .copied()
                .find(|&h| self.classify(h) == 2)
            {
                self.step(h, StepKind::Unstable)?;
                self.record(h, StepKind::Unstable);
                if !self.steps.last().unwrap().h_two_connected {
                    return Err(GlueError::Stuck);
                }
                continue;
            }
            // fragile hubs, preferring one adjacent to a solid hub
            let mut fragile: Vec<usize> = self
                .state
                .alive
                .iter()
                .copied()
                .filter(|&h| self.classify(h) == 1)
                .collect();
            fragile.sort_by_key(|&h| {
                let near_solid = self.h_neighbors(h).iter().any(|&x| self.classify(x) == 0);
                (!near_solid, h)
            });
            if fragile.is_empty() {
                return Err(GlueError::Stuck);
            }
            let mut committed = false;
            for &h in &fragile {
                let snapshot = self.state.clone();
                if self.step(h, StepKind::Fragile).is_ok() && self.two_connected() {
                    self.record(h, StepKind::Fragile);
                    committed = true;
                    break;
                }
                self.state = snapshot;
            }
            if !committed {
                return Err(GlueError::Stuck);
            }
        }
    }

    /// One hub left: both triple choices are tried, the one whose final
    /// factor is a single cycle wins.
    fn final_step(&mut self) -> Result<HamCycle, GlueError> {
        let h = self.state.alive[0];
        for class in 0..2 {
            let triple: Vec<(Vertex, Vertex)> = (0..6)
                .filter(|i| i % 2 == class)
                .map(|i| self.closing_edge(h, i))
                .collect();
            if let Some(c) = self.try_final(h, &triple) {
                self.state.chosen.push((h, [triple[0], triple[1], triple[2]]));
                self.state.alive.clear();
                return Ok(c);
            }
        }
        Err(GlueError::BadResult)
    }

    fn try_final(&self, last: usize, last_triple: &[(Vertex, Vertex)]) -> Option<HamCycle> {
        let mut mult: Vec<u8> = (0..self.g.n_darts())
            .map(|d| {
                let on_hub = self.hub_of[self.faces.face_of(d)].is_some()
                    || self.hub_of[self.faces.face_of(self.g.twin(d))].is_some();
                if on_hub { 0 } else { self.factor.multiplicity(d) }
            })
            .collect();
        let mut add = |u: Vertex, v: Vertex| {
            let d = self.g.dart_between(u, v)?;
            mult[d] += 1;
            mult[self.g.twin(d)] += 1;
            Some(())
        };
        for (_, triple) in &self.state.chosen {
            for &(u, v) in triple {
                add(u, v)?;
            }
        }
        for &(u, v) in last_triple {
            add(u, v)?;
        }
        let _ = last;
        let f = TwoFactor::from_multiplicities(self.g, mult).ok()?;
        if f.is_hamiltonian(self.g) {
            Some(HamCycle(f.cycles()[0].clone()))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{build_cut_path, three_coloring};
    use crate::factor::{free_faces, search_factors, FactorCfg};
    use barnette_core::{spiral::all_fullerenes, verify_hamiltonian, DualGraph};

    #[test]
    fn glues_multi_cycle_factors_of_small_fullerenes() {
        let mut glued = 0;
        let mut attempted = 0;
        for n in (24usize..=36).step_by(2) {
            for g in all_fullerenes(n) {
                let faces = g.faces();
                let dual = DualGraph::build(&g, &faces);
                let Ok(path) = build_cut_path(&faces, &dual, 0) else { continue };
                let Ok(col) = three_coloring(&g, &faces, &path) else { continue };
                let mut done = false;
                'ladder: for choice in 1..=3 {
                    let seed = col.grey_faces(choice);
                    for (widen, region) in [(1, 2), (2, 3)] {
                        let free = free_faces(&faces, &dual, &path.faces, widen);
                        let cfg = FactorCfg { max_region: region, ..Default::default() };
                        let mut hit = false;
                        search_factors(&g, &faces, &dual, &seed, &free, &cfg, &mut |f, grey| {
                            if f.n_cycles() == 1 {
                                return false; // keep hunting for cycles to glue
                            }
                            attempted += 1;
                            match glue(&g, &faces, f, grey) {
                                Ok((cycle, steps)) => {
                                    assert!(verify_hamiltonian(&g, &cycle));
                                    assert_eq!(steps.len(), f.resonant_hexagons(&g, &faces).len());
                                    assert!(steps.iter().all(|s| s.h_two_connected));
                                    hit = true;
                                    true
                                }
                                Err(_) => false,
                            }
                        });
                        if hit {
                            glued += 1;
                            done = true;
                            break 'ladder;
                        }
                    }
                }
                let _ = done;
            }
        }
        assert!(attempted >= 20, "too few multi-cycle factors reached the glue stage");
        assert!(glued >= 20, "glued only {glued} of {attempted} graphs");
    }
}
