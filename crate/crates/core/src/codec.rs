//! Input/output formats: the planar_code binary format used by plantri
//! and buckygen, and a plain-text edge-list-with-rotation format.

use crate::embedding::{PlanarEmbedding, Vertex};
use thiserror::Error;

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("missing >>planar_code<< header")]
    MissingHeader,
    #[error("truncated stream at byte {0}")]
    Truncated(usize),
    #[error("graph {graph}: neighbor index {index} out of range (n = {n})")]
    NeighborOutOfRange { graph: usize, index: usize, n: usize },
    #[error("graph {graph}: {message}")]
    BadGraph { graph: usize, message: String },
    #[error("edge list parse error on line {line}: {message}")]
    EdgeListParse { line: usize, message: String },
    #[error("graph too large to encode with 8-bit planar_code (n = {0})")]
    TooLarge(usize),
}

struct Reader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn byte(&mut self) -> Result<u8, CodecError> {
        let b = *self.data.get(self.pos).ok_or(CodecError::Truncated(self.pos))?;
        self.pos += 1;
        Ok(b)
    }

    fn u16le(&mut self) -> Result<u16, CodecError> {
        let lo = self.byte()? as u16;
        let hi = self.byte()? as u16;
        Ok(lo | (hi << 8))
    }

    fn done(&self) -> bool {
        self.pos >= self.data.len()
    }
}

/// Decode a planar_code stream into embeddings. The neighbor lists are in
/// clockwise order; we store that order as the fixed rotation direction.
pub fn decode_planar_code(bytes: &[u8]) -> Result<Vec<PlanarEmbedding>, CodecError> {
    let rest = bytes.strip_prefix(PLANAR_CODE_HEADER).ok_or(CodecError::MissingHeader)?;
    let mut r = Reader { data: rest, pos: 0 };
    let mut graphs = Vec::new();
    while !r.done() {
        let idx = graphs.len();
        let first = r.byte()?;
        let wide = first == 0;
        let n = if wide { r.u16le()? as usize } else { first as usize };
        if n == 0 {
            return Err(CodecError::BadGraph { graph: idx, message: "empty graph".into() });
        }
        let mut read_entry = || -> Result<usize, CodecError> {
            if wide {
                Ok(r.u16le()? as usize)
            } else {
                Ok(r.byte()? as usize)
            }
        };
        let mut rotations: Vec<Vec<Vertex>> = Vec::with_capacity(n);
        for _ in 0..n {
            let mut nbrs = Vec::new();
            loop {
                let e = read_entry()?;
                if e == 0 {
                    break;
                }
                if e > n {
                    return Err(CodecError::NeighborOutOfRange { graph: idx, index: e, n });
                }
                nbrs.push(e - 1);
            }
            rotations.push(nbrs);
        }
        let emb = PlanarEmbedding::from_rotations(&rotations)
            .map_err(|e| CodecError::BadGraph { graph: idx, message: e.to_string() })?;
        graphs.push(emb);
    }
    Ok(graphs)
}

/// Encode embeddings as 8-bit planar_code (n ≤ 255 per graph).
pub fn encode_planar_code(graphs: &[&PlanarEmbedding]) -> Result<Vec<u8>, CodecError> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for g in graphs {
        let n = g.n_vertices();
        if n > 255 {
            return Err(CodecError::TooLarge(n));
        }
        out.push(n as u8);
        for v in 0..n {
            for w in g.neighbors(v) {
                out.push((w + 1) as u8);
            }
            out.push(0);
        }
    }
    Ok(out)
}

/// Parse the plain-text format: first line `n`, then one line per vertex,
/// `v: w1 w2 w3` with neighbors in rotation order (1-indexed).
pub fn parse_edge_list(text: &str) -> Result<PlanarEmbedding, CodecError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, first) = lines.next().ok_or(CodecError::EdgeListParse {
        line: 0,
        message: "empty input".into(),
    })?;
    let n: usize = first.parse().map_err(|_| CodecError::EdgeListParse {
        line: ln + 1,
        message: format!("expected vertex count, got {first:?}"),
    })?;
    let mut rotations: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    for (ln, line) in lines {
        let err = |message: String| CodecError::EdgeListParse { line: ln + 1, message };
        let (v_str, rest) = line
            .split_once(':')
            .ok_or_else(|| err("expected `v: w1 w2 ...`".into()))?;
        let v: usize = v_str
            .trim()
            .parse()
            .map_err(|_| err(format!("bad vertex id {v_str:?}")))?;
        if v == 0 || v > n {
            return Err(err(format!("vertex {v} out of range 1..={n}")));
        }
        if seen[v - 1] {
            return Err(err(format!("duplicate line for vertex {v}")));
        }
        seen[v - 1] = true;
        for w_str in rest.split_whitespace() {
            let w: usize = w_str
                .parse()
                .map_err(|_| err(format!("bad neighbor id {w_str:?}")))?;
            if w == 0 || w > n {
                return Err(err(format!("neighbor {w} out of range 1..={n}")));
            }
            rotations[v - 1].push(w - 1);
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(CodecError::EdgeListParse {
            line: 0,
            message: format!("missing line for vertex {}", v + 1),
        });
    }
    PlanarEmbedding::from_rotations(&rotations)
        .map_err(|e| CodecError::EdgeListParse { line: 0, message: e.to_string() })
}

pub fn write_edge_list(g: &PlanarEmbedding) -> String {
    let mut out = format!("{}\n", g.n_vertices());
    for v in 0..g.n_vertices() {
        let nbrs: Vec<String> = g.neighbors(v).iter().map(|w| (w + 1).to_string()).collect();
        out.push_str(&format!("{}: {}\n", v + 1, nbrs.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn k4_record_decodes() {
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.extend_from_slice(&[4, 3, 4, 2, 0, 1, 4, 3, 0, 2, 4, 1, 0, 1, 3, 2, 0]);
        let graphs = decode_planar_code(&bytes).unwrap();
        assert_eq!(graphs.len(), 1);
        let g = &graphs[0];
        assert_eq!(g.n_vertices(), 4);
        let faces = g.faces();
        assert_eq!(faces.census(), vec![(3, 4)]);
    }

    #[test]
    fn empty_body_is_empty_list() {
        let graphs = decode_planar_code(PLANAR_CODE_HEADER).unwrap();
        assert!(graphs.is_empty());
    }

    #[test]
    fn missing_header_rejected() {
        assert_eq!(decode_planar_code(b"nonsense"), Err(CodecError::MissingHeader));
    }

    #[test]
    fn truncation_detected() {
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.extend_from_slice(&[4, 2, 3]);
        assert!(matches!(decode_planar_code(&bytes), Err(CodecError::Truncated(_))));
    }

    #[test]
    fn roundtrip_preserves_bytes() {
        let g = construct::dodecahedron();
        let bytes = encode_planar_code(&[&g]).unwrap();
        let decoded = decode_planar_code(&bytes).unwrap();
        let again = encode_planar_code(&[&decoded[0]]).unwrap();
        assert_eq!(bytes, again);
    }

    #[test]
    fn dodecahedron_record_census() {
        let g = construct::dodecahedron();
        let bytes = encode_planar_code(&[&g]).unwrap();
        let decoded = decode_planar_code(&bytes).unwrap();
        assert_eq!(decoded[0].n_vertices(), 20);
        assert_eq!(decoded[0].faces().census(), vec![(5, 12)]);
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = construct::cube();
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.rotations(), g.rotations());
    }
}
