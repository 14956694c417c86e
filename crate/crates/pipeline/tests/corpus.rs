//! Pipeline stages exercised over the committed graph corpus.

use barnette_core::codec::decode_planar_code;
use barnette_core::{DualGraph, PlanarEmbedding};
use barnette_pipeline::{build_cut_path, three_coloring};

fn load(name: &str) -> Vec<PlanarEmbedding> {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("read {path}: {e}"));
    decode_planar_code(&bytes).expect("valid planar_code")
}

#[test]
fn every_corpus_graph_has_a_consistent_cut_coloring() {
    let mut graphs = load("fullerenes_20_52.plc");
    graphs.extend(load("barnette_quads_le24.plc"));
    for (i, g) in graphs.iter().enumerate() {
        let faces = g.faces();
        let dual = DualGraph::build(g, &faces);
        let path = build_cut_path(&faces, &dual, 0)
            .unwrap_or_else(|e| panic!("graph {i} (n={}): {e}", g.n_vertices()));
        let pentagons = faces.count_size(5);
        let on_path = path.faces.iter().filter(|&&f| faces.size(f) == 5).count();
        assert_eq!(on_path, pentagons, "graph {i}");
        let col = three_coloring(g, &faces, &path)
            .unwrap_or_else(|e| panic!("graph {i} (n={}): {e}", g.n_vertices()));
        for v in 0..g.n_vertices() {
            let mut seen = [false; 4];
            for d in g.darts_at(v) {
                seen[col.colors[col.var_of[d] as usize] as usize] = true;
            }
            assert!(seen[1] && seen[2] && seen[3], "graph {i} vertex {v}");
        }
    }
}
