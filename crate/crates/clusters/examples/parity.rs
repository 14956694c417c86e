use barnette_clusters::{generate_clusters, parity_check, GenCfg, ParityCfg};
use std::time::Instant;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().unwrap()).collect();
    let f5 = args[0];
    let cfg = GenCfg { max_f4: 0, max_f5: f5, ..Default::default() };
    let db = generate_clusters(&cfg);
    for b in 1..=f5 {
        let t = Instant::now();
        let mut bad = Vec::new();
        let mut exhausted = 0;
        let total = db.records.iter().filter(|r| r.f4 == 0 && r.f5 == b).count();
        for (ix, r) in db.records.iter().enumerate().filter(|(_, r)| r.f4 == 0 && r.f5 == b) {
            let mut problematic = true;
            for (max_run, max_ring) in [(2, 2), (3, 3)] {
                let pcfg = ParityCfg { max_run, max_ring, ..Default::default() };
                let rep = parity_check(&r.patch, &pcfg);
                if rep.exhausted_budget {
                    exhausted += 1;
                }
                if !rep.problematic {
                    problematic = false;
                    break;
                }
            }
            if problematic {
                bad.push(ix);
            }
        }
        println!(
            "f5={b}: {}/{total} problematic {bad:?}, {exhausted} exhausted, {:?}",
            bad.len(),
            t.elapsed()
        );
    }
}
