use barnette_clusters::{generate_clusters, GenCfg};
use std::time::Instant;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().unwrap()).collect();
    let (f4, f5) = (args[0], args[1]);
    let t = Instant::now();
    let cfg = GenCfg { max_f4: f4, max_f5: f5, ..Default::default() };
    let db = generate_clusters(&cfg);
    println!("complete={} graphs={} elapsed={:?}", db.complete, db.graphs, t.elapsed());
    for a in 0..=f4 {
        for b in 1..=f5 {
            let c = db.count(a, b);
            if c > 0 {
                println!("({a},{b}) = {c}");
            }
        }
    }
}
