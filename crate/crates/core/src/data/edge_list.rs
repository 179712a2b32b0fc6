//! Weighted graph datasets as text.
//!
//! ```text
//! # comment
//! graph <id> <label> <vertex_count>
//! <u> <v> <w>
//! ...
//! ```
//!
//! Vertices are 0-indexed. Labels are non-negative integers; the class count
//! is the largest label plus one.

use std::collections::HashSet;
use std::io::{BufRead, Write};
use std::path::Path;

use super::{DataError, Dataset, Payload, Sample};
use crate::filtrations::WeightedGraph;

struct Block {
    id: String,
    label: usize,
    vertex_count: usize,
    edges: Vec<(usize, usize, f64)>,
    seen: HashSet<(usize, usize)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> DataError {
    DataError::Parse {
        line,
        message: message.into(),
    }
}

fn finish(block: Block, out: &mut Vec<Sample>) -> Result<(), DataError> {
    let graph = WeightedGraph::new(block.vertex_count, block.edges)?;
    out.push(Sample {
        id: block.id,
        label: block.label,
        payload: Payload::Graph(graph),
    });
    Ok(())
}

pub fn read_graph_edge_list<R: BufRead>(r: R, provenance: &str) -> Result<Dataset, DataError> {
    let mut samples = Vec::new();
    let mut current: Option<Block> = None;
    for (i, line) in r.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "graph" {
            let [_, id, label, count] = fields[..] else {
                return Err(parse_err(line_no, "expected `graph <id> <label> <vertex_count>`"));
            };
            let label = label
                .parse()
                .map_err(|e| parse_err(line_no, format!("bad label: {e}")))?;
            let vertex_count = count
                .parse()
                .map_err(|e| parse_err(line_no, format!("bad vertex count: {e}")))?;
            if let Some(b) = current.take() {
                finish(b, &mut samples)?;
            }
            current = Some(Block {
                id: id.to_string(),
                label,
                vertex_count,
                edges: Vec::new(),
                seen: HashSet::new(),
            });
            continue;
        }
        let block = current
            .as_mut()
            .ok_or_else(|| parse_err(line_no, "edge before any `graph` header"))?;
        let [u, v, w] = fields[..] else {
            return Err(parse_err(line_no, "expected `u v w`"));
        };
        let u: usize = u
            .parse()
            .map_err(|e| parse_err(line_no, format!("bad vertex: {e}")))?;
        let v: usize = v
            .parse()
            .map_err(|e| parse_err(line_no, format!("bad vertex: {e}")))?;
        let w: f64 = w
            .parse()
            .map_err(|e| parse_err(line_no, format!("bad weight: {e}")))?;
        for vertex in [u, v] {
            if vertex >= block.vertex_count {
                return Err(DataError::VertexOutOfRange {
                    line: line_no,
                    vertex,
                    vertex_count: block.vertex_count,
                });
            }
        }
        if u == v || !w.is_finite() {
            return Err(parse_err(line_no, "self loops and non-finite weights are not allowed"));
        }
        let key = (u.min(v), u.max(v));
        if !block.seen.insert(key) {
            return Err(DataError::DuplicateEdge {
                line: line_no,
                u: key.0,
                v: key.1,
            });
        }
        block.edges.push((u, v, w));
    }
    if let Some(b) = current.take() {
        finish(b, &mut samples)?;
    }
    let classes = samples.iter().map(|s| s.label).max().map_or(0, |m| m + 1);
    Dataset::new(
        samples,
        (0..classes).map(|c| c.to_string()).collect(),
        provenance,
    )
}

pub fn load_graph_edge_list(path: &Path) -> Result<Dataset, DataError> {
    let file = std::fs::File::open(path)?;
    read_graph_edge_list(
        std::io::BufReader::new(file),
        &format!("edge list {}", path.display()),
    )
}

/// Writes graph samples in the format read by [`read_graph_edge_list`];
/// samples with other payloads are skipped.
pub fn write_graph_edge_list<W: Write>(mut w: W, samples: &[Sample]) -> std::io::Result<()> {
    for s in samples {
        if let Payload::Graph(g) = &s.payload {
            writeln!(w, "graph {} {} {}", s.id, s.label, g.vertex_count())?;
            for (u, v, weight) in g.edges() {
                writeln!(w, "{u} {v} {weight}")?;
            }
        }
    }
    Ok(())
}
