//! Regenerates the graph corpus under fixtures/. Run from the workspace
//! root:
//!
//! ```text
//! cargo run --release -p barnette-core --example gen_fixtures
//! ```
//!
//! Output is deterministic; the files are committed so the test suite
//! does not pay the enumeration cost.

use std::fs;

use barnette_core::classify::{classify, GraphClass};
use barnette_core::codec::encode_planar_code;
use barnette_core::spiral::{all_fullerenes, spiral_survey};
use barnette_core::PlanarEmbedding;

fn write(path: &str, graphs: &[PlanarEmbedding]) {
    let refs: Vec<&PlanarEmbedding> = graphs.iter().collect();
    let bytes = encode_planar_code(&refs).expect("encodable");
    fs::write(path, bytes).expect("fixtures/ is writable");
    println!("{path}: {} graphs", graphs.len());
}

fn main() {
    fs::create_dir_all("fixtures").unwrap();

    // every fullerene isomer on 20..=52 vertices
    let mut fullerenes = Vec::new();
    for n in (20..=52).step_by(2) {
        let isomers = all_fullerenes(n);
        println!("  fullerenes n={n}: {}", isomers.len());
        fullerenes.extend(isomers);
    }
    write("fixtures/fullerenes_20_52.plc", &fullerenes);

    // Barnette graphs with quadrangles (not fullerenes) on <= 24 vertices
    let mut barnette = Vec::new();
    for n in (8..=24).step_by(2) {
        let graphs: Vec<_> = spiral_survey(n, &[4, 5, 6])
            .into_iter()
            .filter(|g| classify(g) == GraphClass::Barnette)
            .collect();
        println!("  barnette quads n={n}: {}", graphs.len());
        barnette.extend(graphs);
    }
    write("fixtures/barnette_quads_le24.plc", &barnette);

    // cubic polyhedral graphs with faces <= 6 that still need reduction
    // (triangles or adjacent quadrangles) on <= 20 vertices
    let mut reducible = Vec::new();
    for n in (4..=20).step_by(2) {
        let graphs: Vec<_> = spiral_survey(n, &[3, 4, 5, 6])
            .into_iter()
            .filter(|g| classify(g) == GraphClass::CubicPolyhedralLe6)
            .collect();
        println!("  reducible n={n}: {}", graphs.len());
        reducible.extend(graphs);
    }
    write("fixtures/reducible_le20.plc", &reducible);
}
