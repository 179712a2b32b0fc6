//! Persistence diagrams: multisets of (birth, death) pairs tagged with a
//! homology dimension.

mod distance;

pub use distance::{
    bottleneck_distance, hungarian, wasserstein_distance, wasserstein_distance_with_limit,
    DEFAULT_WASSERSTEIN_LIMIT,
};

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("point ({birth}, {death}) has death before birth")]
    InvalidPoint { birth: f64, death: f64 },
    #[error("diagram contains an essential point; regularize it first")]
    InfiniteDeath,
    #[error("diagram has {size} points, above the exact-matching limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("Wasserstein order must be at least 1, got {0}")]
    InvalidOrder(f64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PersistencePoint {
    pub birth: f64,
    /// `f64::INFINITY` for essential classes.
    pub death: f64,
    pub dim: usize,
}

impl PersistencePoint {
    pub fn new(birth: f64, death: f64, dim: usize) -> Result<Self, DiagramError> {
        if birth.is_nan() || death.is_nan() || birth.is_infinite() || death < birth {
            return Err(DiagramError::InvalidPoint { birth, death });
        }
        Ok(PersistencePoint { birth, death, dim })
    }

    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    pub fn is_essential(&self) -> bool {
        self.death.is_infinite()
    }

    /// ((b + d) / 2, (d - b) / 2).
    pub fn midlife(&self) -> (f64, f64) {
        ((self.birth + self.death) / 2.0, (self.death - self.birth) / 2.0)
    }
}

/// A multiset of persistence points; multiplicity is repetition.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PersistenceDiagram {
    points: Vec<PersistencePoint>,
    pub source: Option<String>,
    pub filtration: Option<String>,
}

impl PersistenceDiagram {
    pub fn new(points: Vec<PersistencePoint>) -> Self {
        PersistenceDiagram {
            points,
            source: None,
            filtration: None,
        }
    }

    /// Builds a single-dimension diagram from (birth, death) pairs.
    pub fn from_pairs(
        dim: usize,
        pairs: impl IntoIterator<Item = (f64, f64)>,
    ) -> Result<Self, DiagramError> {
        let points = pairs
            .into_iter()
            .map(|(b, d)| PersistencePoint::new(b, d, dim))
            .collect::<Result<_, _>>()?;
        Ok(Self::new(points))
    }

    pub fn points(&self) -> &[PersistencePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn push(&mut self, p: PersistencePoint) {
        self.points.push(p);
    }

    pub fn extend(&mut self, other: &PersistenceDiagram) {
        self.points.extend_from_slice(&other.points);
    }

    /// Points of homology dimension `dim` only.
    pub fn restrict(&self, dim: usize) -> PersistenceDiagram {
        PersistenceDiagram {
            points: self.points.iter().filter(|p| p.dim == dim).copied().collect(),
            source: self.source.clone(),
            filtration: self.filtration.clone(),
        }
    }

    /// Drops points above dimension `max_dim`.
    pub fn retain_dims(&mut self, max_dim: usize) {
        self.points.retain(|p| p.dim <= max_dim);
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.points.iter().map(|p| p.dim).max()
    }

    /// Largest finite birth or death, if any.
    pub fn max_finite_value(&self) -> Option<f64> {
        self.points
            .iter()
            .flat_map(|p| [p.birth, p.death])
            .filter(|v| v.is_finite())
            .reduce(f64::max)
    }

    /// Replaces infinite deaths by `global_max`; an empty diagram becomes the
    /// single point (0, 0) in dimension `placeholder_dim`.
    pub fn regularize(&self, global_max: f64, placeholder_dim: usize) -> PersistenceDiagram {
        let mut points: Vec<PersistencePoint> = self
            .points
            .iter()
            .map(|p| PersistencePoint {
                death: if p.is_essential() { global_max.max(p.birth) } else { p.death },
                ..*p
            })
            .collect();
        if points.is_empty() {
            points.push(PersistencePoint {
                birth: 0.0,
                death: 0.0,
                dim: placeholder_dim,
            });
        }
        PersistenceDiagram {
            points,
            source: self.source.clone(),
            filtration: self.filtration.clone(),
        }
    }

    pub fn to_midlife_coords(&self) -> Result<Vec<(f64, f64)>, DiagramError> {
        self.points
            .iter()
            .map(|p| {
                if p.is_essential() {
                    Err(DiagramError::InfiniteDeath)
                } else {
                    Ok(p.midlife())
                }
            })
            .collect()
    }

    /// (birth, death) pairs, ignoring dimension.
    pub fn pairs(&self) -> Vec<(f64, f64)> {
        self.points.iter().map(|p| (p.birth, p.death)).collect()
    }

    /// One point per line: `dim birth death`, with `inf` for essential deaths.
    pub fn write_text<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for p in &self.points {
            writeln!(w, "{} {} {}", p.dim, p.birth, p.death)?;
        }
        Ok(())
    }

    pub fn read_text<R: BufRead>(r: R) -> Result<Self, DiagramError> {
        let mut points = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            points.push(parse_point_line(line).map_err(|message| DiagramError::Parse {
                line: i + 1,
                message,
            })?);
        }
        Ok(Self::new(points))
    }
}

/// Parses one `dim birth death` line.
pub fn parse_point_line(line: &str) -> Result<PersistencePoint, String> {
    let mut it = line.split_whitespace();
    let (Some(dim), Some(birth), Some(death), None) = (it.next(), it.next(), it.next(), it.next())
    else {
        return Err(format!("expected `dim birth death`, got `{line}`"));
    };
    let dim: usize = dim.parse().map_err(|e| format!("bad dimension: {e}"))?;
    let birth: f64 = birth.parse().map_err(|e| format!("bad birth: {e}"))?;
    let death: f64 = death.parse().map_err(|e| format!("bad death: {e}"))?;
    PersistencePoint::new(birth, death, dim).map_err(|e| e.to_string())
}
