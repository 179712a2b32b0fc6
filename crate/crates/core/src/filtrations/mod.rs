//! Constructors turning raw data into [`FilteredComplex`](crate::complex::FilteredComplex)es, plus the image
//! pre-filtrations (height, radial, density, greyscale) that produce new
//! greyscale images before the lower-star construction.

mod graph;
mod image;
mod point_cloud;

pub use graph::{expand_cliques, flag_complex};
pub use image::{
    binarize, density_filtration, greyscale_prepare, height_filtration, image_complex,
    radial_filtration, DEFAULT_BINARIZE_THRESHOLD, DEFAULT_DENSITY_RADIUS, HEIGHT_DIRECTIONS,
    RADIAL_CENTERS,
};
pub use point_cloud::{alpha_complex_2d, rips_complex};
pub(crate) use point_cloud::dedup_points;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FiltrationError {
    #[error("point cloud is empty")]
    EmptyCloud,
    #[error("expected {expected}-dimensional points, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("all points are collinear; use the Rips construction instead")]
    DegenerateInput,
    #[error("direction ({0}, {1}) is not a unit vector")]
    NotUnitVector(f64, f64),
    #[error("center ({0}, {1}) lies outside the {2}x{3} grid")]
    CenterOutOfBounds(i64, i64, usize, usize),
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// A finite set of points in ℝᵈ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointCloud {
    dim: usize,
    points: Vec<Vec<f64>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self, FiltrationError> {
        let dim = points.first().map_or(0, Vec::len);
        if !points.is_empty() && dim == 0 {
            return Err(FiltrationError::Invalid("points need at least one coordinate".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(FiltrationError::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(FiltrationError::Invalid("non-finite coordinate".into()));
            }
        }
        Ok(PointCloud { dim, points })
    }

    pub fn from_xy(points: impl IntoIterator<Item = (f64, f64)>) -> Result<Self, FiltrationError> {
        Self::new(points.into_iter().map(|(x, y)| vec![x, y]).collect())
    }

    /// Ambient dimension; 0 only for the empty cloud.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Row-major real-valued image.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GreyImage {
    width: usize,
    height: usize,
    pixels: Vec<f64>,
}

impl GreyImage {
    pub fn new(width: usize, height: usize, pixels: Vec<f64>) -> Result<Self, FiltrationError> {
        if width * height != pixels.len() {
            return Err(FiltrationError::Invalid(format!(
                "{width}x{height} image needs {} pixels, got {}",
                width * height,
                pixels.len()
            )));
        }
        if pixels.iter().any(|p| !p.is_finite()) {
            return Err(FiltrationError::Invalid("non-finite pixel intensity".into()));
        }
        Ok(GreyImage {
            width,
            height,
            pixels,
        })
    }

    pub fn filled(width: usize, height: usize, value: f64) -> Self {
        GreyImage {
            width,
            height,
            pixels: vec![value; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.pixels[row * self.width + col]
    }
}

/// Image with pixels in {0, 1}; `true` means lit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryImage {
    width: usize,
    height: usize,
    pixels: Vec<bool>,
}

impl BinaryImage {
    pub fn new(width: usize, height: usize, pixels: Vec<bool>) -> Result<Self, FiltrationError> {
        if width * height != pixels.len() {
            return Err(FiltrationError::Invalid(format!(
                "{width}x{height} image needs {} pixels, got {}",
                width * height,
                pixels.len()
            )));
        }
        Ok(BinaryImage {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[bool] {
        &self.pixels
    }

    pub fn is_lit(&self, row: usize, col: usize) -> bool {
        self.pixels[row * self.width + col]
    }

    pub(crate) fn lit_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pixels
            .iter()
            .enumerate()
            .filter(|(_, &lit)| lit)
            .map(|(i, _)| (i / self.width, i % self.width))
    }
}

/// Undirected graph with real edge weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl WeightedGraph {
    /// Edges are stored with `u < v`; self loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self, FiltrationError> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for (u, v, w) in edges {
            if u == v {
                return Err(FiltrationError::SelfLoop(u));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(FiltrationError::VertexOutOfRange(u, v, vertex_count));
            }
            if !w.is_finite() {
                return Err(FiltrationError::Invalid(format!("edge ({u}, {v}) has weight {w}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert((a, b)) {
                return Err(FiltrationError::DuplicateEdge(a, b));
            }
            out.push((a, b, w));
        }
        Ok(WeightedGraph {
            vertex_count,
            edges: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_validation() {
        assert_eq!(
            WeightedGraph::new(3, [(1, 1, 1.0)]).unwrap_err(),
            FiltrationError::SelfLoop(1)
        );
        assert_eq!(
            WeightedGraph::new(3, [(0, 1, 1.0), (1, 0, 2.0)]).unwrap_err(),
            FiltrationError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            WeightedGraph::new(3, [(0, 3, 1.0)]).unwrap_err(),
            FiltrationError::VertexOutOfRange(0, 3, 3)
        );
        let g = WeightedGraph::new(3, [(2, 0, 1.0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2, 1.0)]);
    }

    #[test]
    fn point_cloud_dimension_checks() {
        assert!(matches!(
            PointCloud::new(vec![vec![0.0, 1.0], vec![1.0]]),
            Err(FiltrationError::DimensionMismatch { expected: 2, found: 1 })
        ));
        assert!(PointCloud::new(vec![vec![f64::NAN]]).is_err());
        assert_eq!(PointCloud::new(vec![]).unwrap().dim(), 0);
    }

    #[test]
    fn image_size_checks() {
        assert!(GreyImage::new(2, 2, vec![0.0; 3]).is_err());
        assert!(BinaryImage::new(1, 2, vec![true, false]).is_ok());
    }
}
