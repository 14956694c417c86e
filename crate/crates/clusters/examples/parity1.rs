use barnette_clusters::{generate_clusters, parity_check, GenCfg, ParityCfg};

fn main() {
    let cfg = GenCfg { max_f4: 0, max_f5: 1, ..Default::default() };
    let db = generate_clusters(&cfg);
    let r = &db.records[0];
    let rep = parity_check(&r.patch, &ParityCfg::default());
    println!("{rep:?}");
}
