//! Line-based dataset files.
//!
//! ```text
//! kind point_cloud|image|graph
//! provenance <free text>
//! class <name>                      one line per class, in label order
//! sample <id> <label> <points>      then one `x y ...` line per point
//! sample <id> <label> <w> <h>       then h lines of w pixel values
//! sample <id> <label> <n> <edges>   then one `u v w` line per edge
//! ```
//!
//! Floats are written in shortest round-trip form, so reading a written file
//! reproduces the dataset exactly.

use std::io::{BufRead, Write};

use super::{DataError, Dataset, Payload, PayloadKind, Sample};
use crate::filtrations::{GreyImage, PointCloud, WeightedGraph};

fn join<T: std::fmt::Display>(values: impl IntoIterator<Item = T>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_dataset<W: Write>(mut w: W, d: &Dataset) -> std::io::Result<()> {
    writeln!(w, "kind {}", d.kind().name())?;
    writeln!(w, "provenance {}", d.provenance.replace('\n', " "))?;
    for c in d.class_names() {
        writeln!(w, "class {c}")?;
    }
    for s in d.samples() {
        match &s.payload {
            Payload::PointCloud(c) => {
                writeln!(w, "sample {} {} {}", s.id, s.label, c.len())?;
                for p in c.points() {
                    writeln!(w, "{}", join(p))?;
                }
            }
            Payload::Image(img) => {
                writeln!(w, "sample {} {} {} {}", s.id, s.label, img.width(), img.height())?;
                for row in img.pixels().chunks(img.width().max(1)) {
                    writeln!(w, "{}", join(row))?;
                }
            }
            Payload::Graph(g) => {
                writeln!(
                    w,
                    "sample {} {} {} {}",
                    s.id,
                    s.label,
                    g.vertex_count(),
                    g.edges().len()
                )?;
                for (u, v, weight) in g.edges() {
                    writeln!(w, "{u} {v} {weight}")?;
                }
            }
        }
    }
    Ok(())
}

struct Lines<R> {
    inner: std::io::Lines<R>,
    number: usize,
}

impl<R: BufRead> Lines<R> {
    fn next_line(&mut self) -> Result<Option<String>, DataError> {
        for line in self.inner.by_ref() {
            self.number += 1;
            let line = line?;
            if !line.trim().is_empty() {
                return Ok(Some(line));
            }
        }
        Ok(None)
    }

    fn require(&mut self) -> Result<String, DataError> {
        self.next_line()?.ok_or_else(|| self.err("unexpected end of file"))
    }

    fn err(&self, message: impl Into<String>) -> DataError {
        DataError::Parse {
            line: self.number,
            message: message.into(),
        }
    }

    fn numbers<T: std::str::FromStr>(&self, line: &str) -> Result<Vec<T>, DataError>
    where
        T::Err: std::fmt::Display,
    {
        line.split_whitespace()
            .map(|t| t.parse::<T>().map_err(|e| self.err(format!("`{t}`: {e}"))))
            .collect()
    }
}

pub fn read_dataset<R: BufRead>(r: R) -> Result<Dataset, DataError> {
    let mut lines = Lines {
        inner: r.lines(),
        number: 0,
    };
    let header = lines.require()?;
    let kind = match header.trim().strip_prefix("kind ") {
        Some("point_cloud") => PayloadKind::PointCloud,
        Some("image") => PayloadKind::Image,
        Some("graph") => PayloadKind::Graph,
        _ => return Err(lines.err("expected `kind point_cloud|image|graph`")),
    };
    let mut provenance = String::new();
    let mut classes = Vec::new();
    let mut samples = Vec::new();
    while let Some(line) = lines.next_line()? {
        if let Some(rest) = line.strip_prefix("provenance") {
            provenance = rest.trim().to_string();
            continue;
        }
        if let Some(rest) = line.strip_prefix("class ") {
            classes.push(rest.trim().to_string());
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.first() != Some(&"sample") || fields.len() < 4 {
            return Err(lines.err(format!("expected a sample header, got `{line}`")));
        }
        let id = fields[1].to_string();
        let label: usize = lines.numbers(fields[2])?[0];
        let sizes: Vec<usize> = lines.numbers(&fields[3..].join(" "))?;
        let payload = match (kind, sizes.as_slice()) {
            (PayloadKind::PointCloud, &[n]) => {
                let mut points = Vec::with_capacity(n);
                for _ in 0..n {
                    let l = lines.require()?;
                    points.push(lines.numbers(&l)?);
                }
                Payload::PointCloud(PointCloud::new(points)?)
            }
            (PayloadKind::Image, &[width, height]) => {
                let mut pixels = Vec::with_capacity(width * height);
                for _ in 0..height {
                    let l = lines.require()?;
                    let row: Vec<f64> = lines.numbers(&l)?;
                    if row.len() != width {
                        return Err(lines.err(format!("expected {width} pixels")));
                    }
                    pixels.extend(row);
                }
                Payload::Image(GreyImage::new(width, height, pixels)?)
            }
            (PayloadKind::Graph, &[n, m]) => {
                let mut edges = Vec::with_capacity(m);
                for _ in 0..m {
                    let l = lines.require()?;
                    let f: Vec<&str> = l.split_whitespace().collect();
                    let [u, v, w] = f[..] else {
                        return Err(lines.err("expected `u v w`"));
                    };
                    let uv: Vec<usize> = lines.numbers(&format!("{u} {v}"))?;
                    let w: Vec<f64> = lines.numbers(w)?;
                    edges.push((uv[0], uv[1], w[0]));
                }
                Payload::Graph(WeightedGraph::new(n, edges)?)
            }
            _ => return Err(lines.err("sample header has the wrong number of sizes")),
        };
        samples.push(Sample { id, label, payload });
    }
    Dataset::new(samples, classes, provenance)
}
