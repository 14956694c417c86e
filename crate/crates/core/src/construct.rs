//! Constructions of concrete plane graphs used as fixtures and base cases.

use crate::embedding::{PlanarEmbedding, Vertex};

/// Build an embedding from a straight-line planar drawing: the rotation at
/// each vertex is its neighbors sorted clockwise by angle.
pub fn from_coordinates(points: &[(f64, f64)], edges: &[(usize, usize)]) -> PlanarEmbedding {
    let n = points.len();
    let mut rotations: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        rotations[u].push(v);
        rotations[v].push(u);
    }
    for v in 0..n {
        let (x0, y0) = points[v];
        rotations[v].sort_by(|&a, &b| {
            let ang = |w: usize| {
                let (x, y) = points[w];
                (y - y0).atan2(x - x0)
            };
            // descending angle = clockwise
            ang(b).partial_cmp(&ang(a)).unwrap()
        });
    }
    PlanarEmbedding::from_rotations(&rotations).expect("drawing should give a valid embedding")
}

fn ring(r: f64, k: usize, offset_deg: f64) -> Vec<(f64, f64)> {
    (0..k)
        .map(|i| {
            let a = (offset_deg + 360.0 * i as f64 / k as f64).to_radians();
            (r * a.cos(), r * a.sin())
        })
        .collect()
}

pub fn k4() -> PlanarEmbedding {
    let mut pts = ring(2.0, 3, 90.0);
    pts.push((0.0, 0.0));
    from_coordinates(&pts, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
}

/// k-gonal prism: outer cycle 0..k, inner cycle k..2k, spokes i -- k+i.
pub fn prism(k: usize) -> PlanarEmbedding {
    let mut pts = ring(3.0, k, 90.0);
    pts.extend(ring(1.5, k, 90.0));
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    from_coordinates(&pts, &edges)
}

pub fn triangular_prism() -> PlanarEmbedding {
    prism(3)
}

pub fn cube() -> PlanarEmbedding {
    prism(4)
}

pub fn pentagonal_prism() -> PlanarEmbedding {
    prism(5)
}

pub fn hexagonal_prism() -> PlanarEmbedding {
    prism(6)
}

/// Truncated tetrahedron: 4 triangles and 4 hexagons, 12 vertices.
pub fn truncated_tetrahedron() -> PlanarEmbedding {
    // outer hexagon 0..6; triangle tips 6,7,8; inner triangle 9,10,11
    let mut pts = ring(4.0, 6, 90.0);
    // tip i sits outside-inward between outer pair (2i, 2i+1)
    for i in 0..3 {
        let (x1, y1) = pts[2 * i];
        let (x2, y2) = pts[2 * i + 1];
        pts.push(((x1 + x2) / 2.0 * 0.55, (y1 + y2) / 2.0 * 0.55));
    }
    for i in 0..3 {
        let (x, y) = pts[6 + i];
        pts.push((x * 0.4, y * 0.4));
    }
    let mut edges = vec![(9, 10), (10, 11), (11, 9)];
    for i in 0..6 {
        edges.push((i, (i + 1) % 6));
    }
    for i in 0..3 {
        edges.push((6 + i, 2 * i));
        edges.push((6 + i, 2 * i + 1));
        edges.push((6 + i, 9 + i));
    }
    from_coordinates(&pts, &edges)
}

/// The dodecahedron: the smallest fullerene graph, C20.
pub fn dodecahedron() -> PlanarEmbedding {
    nanotube_5_0(0)
}

/// A (5,0) nanotube with `rings` intermediate zigzag rings of 10 vertices.
/// `rings = 0` gives the dodecahedron; n = 10·rings + 20.
///
/// Layout: apex pentagon (vertices 0..5), then `rings + 1` zigzag rings of
/// 10 (the last ring doubles as the bottom cap shoulder), then the bottom
/// pentagon.
pub fn nanotube_5_0(rings: usize) -> PlanarEmbedding {
    let r = rings + 1; // number of 10-rings
    let n = 5 + 10 * r + 5;
    let ring_base = |j: usize| 5 + 10 * (j - 1); // j in 1..=r
    let bottom = 5 + 10 * r;

    let mut pts: Vec<(f64, f64)> = ring(1.0, 5, 90.0);
    for j in 1..=r {
        let phi = -36.0 * (j as f64 - 1.0);
        pts.extend(ring(1.0 + 1.5 * j as f64, 10, 90.0 + phi));
    }
    let phi_r = -36.0 * (r as f64 - 1.0);
    pts.extend(ring(1.0 + 1.5 * (r as f64 + 1.0), 5, 90.0 + 36.0 + phi_r));
    assert_eq!(pts.len(), n);

    let mut edges = Vec::new();
    // apex pentagon + links down to even positions of ring 1
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, ring_base(1) + 2 * i));
    }
    // each 10-ring is a cycle; odd positions link down
    for j in 1..=r {
        let b = ring_base(j);
        for t in 0..10 {
            edges.push((b + t, b + (t + 1) % 10));
        }
        if j < r {
            let b2 = ring_base(j + 1);
            for i in 0..5 {
                edges.push((b + 2 * i + 1, b2 + (2 * i + 2) % 10));
            }
        }
    }
    // bottom pentagon
    for i in 0..5 {
        edges.push((bottom + i, bottom + (i + 1) % 5));
        edges.push((ring_base(r) + 2 * i + 1, bottom + i));
    }
    from_coordinates(&pts, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prisms() {
        let p = pentagonal_prism();
        assert_eq!(p.faces().census(), vec![(4, 5), (5, 2)]);
        let h = hexagonal_prism();
        assert_eq!(h.faces().census(), vec![(4, 6), (6, 2)]);
        assert!(p.is_three_connected());
    }

    #[test]
    fn truncated_tetrahedron_census() {
        let g = truncated_tetrahedron();
        assert_eq!(g.n_vertices(), 12);
        assert_eq!(g.faces().census(), vec![(3, 4), (6, 4)]);
        assert!(g.is_three_connected());
        assert_eq!(g.genus(), 0);
    }

    #[test]
    fn nanotube_family() {
        for rings in [0usize, 1, 2, 5] {
            let g = nanotube_5_0(rings);
            assert_eq!(g.n_vertices(), 10 * rings + 20);
            assert!(g.is_cubic());
            assert_eq!(g.genus(), 0);
            let census = g.faces().census();
            let pent = census.iter().find(|(s, _)| *s == 5).map(|(_, c)| *c);
            assert_eq!(pent, Some(12));
            assert!(g.is_three_connected());
        }
    }
}
