use barnette_clusters::{generate_clusters, parity_check, GenCfg, ParityCfg};
use std::time::Instant;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().unwrap()).collect();
    let f5 = args[0];
    let cfg = GenCfg { max_f4: 0, max_f5: f5, ..Default::default() };
    let db = generate_clusters(&cfg);
    let mut pcfg = ParityCfg::default();
    if args.len() > 2 {
        pcfg.max_run = args[1];
        pcfg.max_ring = args[2];
    }
    let only: Option<usize> = args.get(3).copied();
    for (ix, r) in db.records.iter().enumerate().filter(|(_, r)| r.f5 == f5) {
        if only.is_some_and(|o| o != ix) {
            continue;
        }
        let faces = r.patch.faces();
        let pents: Vec<&Vec<usize>> = faces.iter().filter(|c| c.len() == 5).collect();
        let mut rel = Vec::new();
        for i in 0..pents.len() {
            for j in i + 1..pents.len() {
                let shared = pents[i].iter().filter(|v| pents[j].contains(v)).count();
                rel.push(format!("{shared}"));
            }
        }
        let t = Instant::now();
        let rep = parity_check(&r.patch, &pcfg);
        println!(
            "#{ix} n={} faces={} shared-verts={:?} problematic={} failing={}/{} colorings={:?} {:?}",
            r.patch.n_vertices(),
            faces.len(),
            rel,
            rep.problematic,
            rep.failing_positions,
            rep.positions,
            rep.colorings,
            t.elapsed()
        );
    }
}
