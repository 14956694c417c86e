//! Integrity checks for the committed graph corpus. Regenerate with
//! `cargo run --release -p barnette-core --example gen_fixtures`.

use barnette_core::classify::{classify, GraphClass};
use barnette_core::codec::decode_planar_code;
use barnette_core::PlanarEmbedding;

fn load(name: &str) -> Vec<PlanarEmbedding> {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("read {path}: {e}"));
    decode_planar_code(&bytes).expect("valid planar_code")
}

#[test]
fn fullerene_corpus_counts() {
    let graphs = load("fullerenes_20_52.plc");
    assert_eq!(graphs.len(), 1249);
    let mut by_n = std::collections::BTreeMap::new();
    for g in &graphs {
        assert_eq!(classify(g), GraphClass::Fullerene, "n={}", g.n_vertices());
        *by_n.entry(g.n_vertices()).or_insert(0usize) += 1;
    }
    // isomer counts for C20..C52
    let expected = [
        (20, 1),
        (24, 1),
        (26, 1),
        (28, 2),
        (30, 3),
        (32, 6),
        (34, 6),
        (36, 15),
        (38, 17),
        (40, 40),
        (42, 45),
        (44, 89),
        (46, 116),
        (48, 199),
        (50, 271),
        (52, 437),
    ];
    for (n, c) in expected {
        assert_eq!(by_n.get(&n), Some(&c), "n={n}");
    }
}

#[test]
fn barnette_corpus_in_class() {
    let graphs = load("barnette_quads_le24.plc");
    assert_eq!(graphs.len(), 64);
    for g in &graphs {
        assert_eq!(classify(g), GraphClass::Barnette);
        assert!(g.n_vertices() <= 24);
    }
}

#[test]
fn reducible_corpus_in_class() {
    let graphs = load("reducible_le20.plc");
    assert_eq!(graphs.len(), 169);
    for g in &graphs {
        assert_eq!(classify(g), GraphClass::CubicPolyhedralLe6);
        assert!(g.n_vertices() <= 20);
    }
}
