//! Fixed-length vectors from persistence diagrams.
//!
//! Four methods: persistence images (PI), landscapes (PL), silhouettes (PS)
//! and Betti curves (BC). Diagrams are first regularized (essential deaths
//! replaced by a fitted global maximum, empty diagrams by the point (0, 0)),
//! then sampled on grids spanning a range fitted on training data.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{PersistenceDiagram, PersistencePoint};

/// Half-width added on each side of a zero-width fitted range.
pub const DEGENERATE_RANGE_DELTA: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VectorizeError {
    #[error("no training diagrams to fit a range on")]
    NoDiagrams,
    #[error("homology dimension {dim} not computed (max is {max})")]
    UnknownDimension { dim: usize, max: usize },
    #[error("sample has {found} filtrations, expected {expected}")]
    FiltrationCountMismatch { expected: usize, found: usize },
    #[error("diagram has an essential point; regularize it first")]
    InfiniteDeath,
    #[error("invalid vectorizer parameters: {0}")]
    InvalidSpec(String),
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    PI,
    PL,
    PS,
    BC,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::PI, Method::PL, Method::PS, Method::BC];

    pub fn abbreviation(self) -> &'static str {
        match self {
            Method::PI => "PI",
            Method::PL => "PL",
            Method::PS => "PS",
            Method::BC => "BC",
        }
    }

    /// The default parameter grid: 9 images, 4 of each other method.
    pub fn default_grid(self) -> Vec<VectorizerSpec> {
        const RESOLUTIONS: [usize; 4] = [25, 50, 75, 100];
        match self {
            Method::PI => {
                let mut grid = Vec::new();
                for sigma in [0.1, 1.0, 10.0] {
                    for n in [5, 10, 25] {
                        grid.push(VectorizerSpec::Image { n, sigma });
                    }
                }
                grid
            }
            Method::PL => RESOLUTIONS
                .iter()
                .map(|&resolution| VectorizerSpec::Landscape {
                    layers: 5,
                    resolution,
                })
                .collect(),
            Method::PS => RESOLUTIONS
                .iter()
                .map(|&resolution| VectorizerSpec::Silhouette { resolution })
                .collect(),
            Method::BC => RESOLUTIONS
                .iter()
                .map(|&resolution| VectorizerSpec::BettiCurve { resolution })
                .collect(),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

impl FromStr for Method {
    type Err = VectorizeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pi" | "image" | "persistence_image" => Ok(Method::PI),
            "pl" | "landscape" | "persistence_landscape" => Ok(Method::PL),
            "ps" | "silhouette" | "persistence_silhouette" => Ok(Method::PS),
            "bc" | "betti" | "betti_curve" => Ok(Method::BC),
            _ => Err(unknown("vectorizer", s)),
        }
    }
}

fn unknown(kind: &'static str, name: &str) -> VectorizeError {
    VectorizeError::UnknownName {
        kind,
        name: name.to_string(),
    }
}

/// One method with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum VectorizerSpec {
    /// `n × n` grid, Gaussian standard deviation `sigma`.
    Image { n: usize, sigma: f64 },
    Landscape { layers: usize, resolution: usize },
    Silhouette { resolution: usize },
    BettiCurve { resolution: usize },
}

impl VectorizerSpec {
    pub fn method(&self) -> Method {
        match self {
            VectorizerSpec::Image { .. } => Method::PI,
            VectorizerSpec::Landscape { .. } => Method::PL,
            VectorizerSpec::Silhouette { .. } => Method::PS,
            VectorizerSpec::BettiCurve { .. } => Method::BC,
        }
    }

    /// Output length for one diagram.
    pub fn len(&self) -> usize {
        match *self {
            VectorizerSpec::Image { n, .. } => n * n,
            VectorizerSpec::Landscape { layers, resolution } => layers * resolution,
            VectorizerSpec::Silhouette { resolution } | VectorizerSpec::BettiCurve { resolution } => {
                resolution
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate(&self) -> Result<(), VectorizeError> {
        let ok = match *self {
            VectorizerSpec::Image { n, sigma } => n >= 1 && sigma > 0.0 && sigma.is_finite(),
            VectorizerSpec::Landscape { layers, resolution } => layers >= 1 && resolution >= 1,
            VectorizerSpec::Silhouette { resolution } | VectorizerSpec::BettiCurve { resolution } => {
                resolution >= 1
            }
        };
        if ok {
            Ok(())
        } else {
            Err(VectorizeError::InvalidSpec(self.to_string()))
        }
    }

    /// Vectorizes a finite diagram, ignoring dimension tags.
    pub fn apply(&self, d: &PersistenceDiagram, range: Range) -> Result<Vec<f64>, VectorizeError> {
        self.validate()?;
        if d.points().iter().any(|p| p.is_essential()) {
            return Err(VectorizeError::InfiniteDeath);
        }
        Ok(self.apply_unchecked(d, range))
    }

    fn apply_unchecked(&self, d: &PersistenceDiagram, range: Range) -> Vec<f64> {
        match *self {
            VectorizerSpec::Image { n, sigma } => persistence_image(d, n, sigma, range),
            VectorizerSpec::Landscape { layers, resolution } => {
                persistence_landscape(d, layers, resolution, range)
            }
            VectorizerSpec::Silhouette { resolution } => silhouette(d, resolution, range),
            VectorizerSpec::BettiCurve { resolution } => betti_curve(d, resolution, range),
        }
    }
}

impl fmt::Display for VectorizerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VectorizerSpec::Image { n, sigma } => write!(f, "PI(n={n};sigma={sigma})"),
            VectorizerSpec::Landscape { layers, resolution } => {
                write!(f, "PL(n={layers};r={resolution})")
            }
            VectorizerSpec::Silhouette { resolution } => write!(f, "PS(r={resolution})"),
            VectorizerSpec::BettiCurve { resolution } => write!(f, "BC(r={resolution})"),
        }
    }
}

impl FromStr for VectorizerSpec {
    type Err = VectorizeError;

    /// Parses the `Display` form, e.g. `PI(n=5;sigma=0.1)` or `BC(r=25)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || unknown("vectorizer", s);
        let (name, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let mut n = None;
        let mut r = None;
        let mut sigma = None;
        for part in args.split(';').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(bad)?;
            match k.trim() {
                "n" => n = Some(v.trim().parse::<usize>().map_err(|_| bad())?),
                "r" => r = Some(v.trim().parse::<usize>().map_err(|_| bad())?),
                "sigma" => sigma = Some(v.trim().parse::<f64>().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        let spec = match (name.parse::<Method>()?, n, r, sigma) {
            (Method::PI, Some(n), None, Some(sigma)) => VectorizerSpec::Image { n, sigma },
            (Method::PL, Some(layers), Some(resolution), None) => {
                VectorizerSpec::Landscape { layers, resolution }
            }
            (Method::PS, None, Some(resolution), None) => VectorizerSpec::Silhouette { resolution },
            (Method::BC, None, Some(resolution), None) => VectorizerSpec::BettiCurve { resolution },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Closed interval on the filtration axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Range {
    pub min: f64,
    pub max: f64,
}

impl Range {
    pub fn new(min: f64, max: f64) -> Self {
        Range { min, max }
    }

    /// Widens a zero-width range by [`DEGENERATE_RANGE_DELTA`] on each side.
    pub fn widened(self) -> Self {
        if self.max > self.min {
            self
        } else {
            Range {
                min: self.min - DEGENERATE_RANGE_DELTA,
                max: self.max + DEGENERATE_RANGE_DELTA,
            }
        }
    }

    /// `r` equispaced values from `min` to `max` inclusive; `min` alone when
    /// `r == 1`.
    pub fn grid(&self, r: usize) -> Vec<f64> {
        if r == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (r - 1) as f64;
        (0..r)
            .map(|i| if i == r - 1 { self.max } else { self.min + step * i as f64 })
            .collect()
    }

    fn include(&mut self, v: f64) {
        self.min = self.min.min(v);
        self.max = self.max.max(v);
    }

    fn empty() -> Self {
        Range {
            min: f64::INFINITY,
            max: f64::NEG_INFINITY,
        }
    }
}

fn global_max_of<'a>(diagrams: impl IntoIterator<Item = &'a PersistenceDiagram>) -> f64 {
    diagrams
        .into_iter()
        .filter_map(|d| d.max_finite_value())
        .fold(0.0, f64::max)
}

/// Fits a sampling range on training diagrams: regularizes them with the
/// largest finite value seen, then spans [min birth, max death]. Returns the
/// range and that global maximum.
pub fn fit_range(diagrams: &[PersistenceDiagram]) -> Result<(Range, f64), VectorizeError> {
    if diagrams.is_empty() {
        return Err(VectorizeError::NoDiagrams);
    }
    let global_max = global_max_of(diagrams);
    let mut range = Range::empty();
    for d in diagrams {
        for p in d.regularize(global_max, 0).points() {
            range.include(p.birth);
            range.include(p.death);
        }
    }
    Ok((range.widened(), global_max))
}

fn tent(p: &PersistencePoint, t: f64) -> f64 {
    (t - p.birth).min(p.death - t).max(0.0)
}

fn finite_points(d: &PersistenceDiagram) -> impl Iterator<Item = &PersistencePoint> {
    d.points().iter().filter(|p| !p.is_essential())
}

/// Persistence image on an `n × n` grid over x ∈ [min, max] (midlife) and
/// y ∈ [0, (max − min)/2] (half-persistence), sampled at pixel centers.
///
/// Each point contributes a Gaussian density with standard deviation `sigma`
/// weighted by f((d − b)/2), where f ramps linearly from 0 to 1 over
/// [0, m] and m is the largest persistence d − b in the diagram. Output is
/// row-major with y as the row index. Essential points are skipped.
pub fn persistence_image(d: &PersistenceDiagram, n: usize, sigma: f64, range: Range) -> Vec<f64> {
    let mut image = vec![0.0; n * n];
    let m = finite_points(d).map(|p| p.persistence()).fold(0.0, f64::max);
    if m <= 0.0 {
        return image;
    }
    let width = range.max - range.min;
    let xs: Vec<f64> = (0..n)
        .map(|i| range.min + (i as f64 + 0.5) * width / n as f64)
        .collect();
    let ys: Vec<f64> = (0..n)
        .map(|j| (j as f64 + 0.5) * width / (2.0 * n as f64))
        .collect();
    let norm = 1.0 / (2.0 * std::f64::consts::PI * sigma * sigma);
    let two_var = 2.0 * sigma * sigma;
    let mut gx = vec![0.0; n];
    let mut gy = vec![0.0; n];
    for p in finite_points(d) {
        let (cx, cy) = p.midlife();
        let weight = (cy / m).clamp(0.0, 1.0);
        if weight == 0.0 {
            continue;
        }
        // the isotropic Gaussian factors into one exponential per axis
        for (g, &x) in gx.iter_mut().zip(&xs) {
            *g = (-(x - cx) * (x - cx) / two_var).exp();
        }
        for (g, &y) in gy.iter_mut().zip(&ys) {
            *g = weight * norm * (-(y - cy) * (y - cy) / two_var).exp();
        }
        for (row, &wy) in image.chunks_exact_mut(n).zip(&gy) {
            if wy == 0.0 {
                continue;
            }
            for (v, &wx) in row.iter_mut().zip(&gx) {
                *v += wy * wx;
            }
        }
    }
    image
}

/// Landscape layers 1..=`layers` sampled on the range grid, layer-major:
/// entry `k * resolution + i` is the (k+1)-th largest tent at grid point i.
pub fn persistence_landscape(
    d: &PersistenceDiagram,
    layers: usize,
    resolution: usize,
    range: Range,
) -> Vec<f64> {
    let mut out = vec![0.0; layers * resolution];
    let points: Vec<&PersistencePoint> = finite_points(d).filter(|p| p.death > p.birth).collect();
    let mut top = Vec::with_capacity(layers + 1);
    for (i, t) in range.grid(resolution).into_iter().enumerate() {
        top.clear();
        for p in &points {
            let v = tent(p, t);
            if v <= 0.0 {
                continue;
            }
            // keep the `layers` largest values, descending
            let pos = top.partition_point(|&x: &f64| x >= v);
            if pos < layers {
                top.insert(pos, v);
                top.truncate(layers);
            }
        }
        for (k, &v) in top.iter().enumerate() {
            out[k * resolution + i] = v;
        }
    }
    out
}

/// Unweighted mean of the tents of off-diagonal points, on the range grid.
/// Zero when every point lies on the diagonal.
pub fn silhouette(d: &PersistenceDiagram, resolution: usize, range: Range) -> Vec<f64> {
    let points: Vec<&PersistencePoint> = finite_points(d).filter(|p| p.death > p.birth).collect();
    if points.is_empty() {
        return vec![0.0; resolution];
    }
    let count = points.len() as f64;
    range
        .grid(resolution)
        .into_iter()
        .map(|t| points.iter().map(|p| tent(p, t)).sum::<f64>() / count)
        .collect()
}

/// Number of off-diagonal points with b ≤ t ≤ d at each grid value.
pub fn betti_curve(d: &PersistenceDiagram, resolution: usize, range: Range) -> Vec<f64> {
    let points: Vec<&PersistencePoint> = finite_points(d).filter(|p| p.death > p.birth).collect();
    range
        .grid(resolution)
        .into_iter()
        .map(|t| points.iter().filter(|p| p.birth <= t && t <= p.death).count() as f64)
        .collect()
}

/// How homology dimensions are combined into one vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DimStrategy {
    /// One dimension only.
    Single(usize),
    /// Union of all dimensions, vectorized once.
    Fused,
    /// Each dimension vectorized on its own range, concatenated in order.
    Concat,
}

impl fmt::Display for DimStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimStrategy::Single(k) => write!(f, "H{k}"),
            DimStrategy::Fused => f.write_str("fused"),
            DimStrategy::Concat => f.write_str("concat"),
        }
    }
}

impl FromStr for DimStrategy {
    type Err = VectorizeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "fused" => Ok(DimStrategy::Fused),
            "concat" => Ok(DimStrategy::Concat),
            _ => lower
                .strip_prefix('h')
                .and_then(|k| k.parse().ok())
                .map(DimStrategy::Single)
                .ok_or_else(|| unknown("dimension strategy", s)),
        }
    }
}

/// How diagrams from several filtrations of one sample are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum FilterStrategy {
    /// Union all diagrams, then vectorize once.
    #[default]
    Collapse,
    /// Vectorize each filtration separately and concatenate in order.
    Multivector,
}

impl fmt::Display for FilterStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FilterStrategy::Collapse => "collapse",
            FilterStrategy::Multivector => "multivector",
        })
    }
}

impl FromStr for FilterStrategy {
    type Err = VectorizeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "collapse" => Ok(FilterStrategy::Collapse),
            "multivector" => Ok(FilterStrategy::Multivector),
            _ => Err(unknown("filtration strategy", s)),
        }
    }
}

/// Regularization maximum and one range per output block of a single
/// diagram source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockFit {
    pub global_max: f64,
    pub ranges: Vec<Range>,
}

/// Splits a diagram into regularized blocks: one for `Single` and `Fused`,
/// `max_hom_dim + 1` for `Concat`.
pub fn dimension_blocks(
    d: &PersistenceDiagram,
    strategy: DimStrategy,
    max_hom_dim: usize,
    global_max: f64,
) -> Result<Vec<PersistenceDiagram>, VectorizeError> {
    match strategy {
        DimStrategy::Single(k) => {
            if k > max_hom_dim {
                return Err(VectorizeError::UnknownDimension {
                    dim: k,
                    max: max_hom_dim,
                });
            }
            Ok(vec![d.restrict(k).regularize(global_max, k)])
        }
        DimStrategy::Fused => {
            let mut union = d.clone();
            union.retain_dims(max_hom_dim);
            Ok(vec![union.regularize(global_max, 0)])
        }
        DimStrategy::Concat => Ok((0..=max_hom_dim)
            .map(|k| d.restrict(k).regularize(global_max, k))
            .collect()),
    }
}

impl BlockFit {
    /// Fits on the training diagrams of a single source.
    pub fn fit(
        train: &[&PersistenceDiagram],
        strategy: DimStrategy,
        max_hom_dim: usize,
    ) -> Result<Self, VectorizeError> {
        if train.is_empty() {
            return Err(VectorizeError::NoDiagrams);
        }
        let global_max = global_max_of(train.iter().copied());
        let mut ranges: Vec<Range> = Vec::new();
        for d in train {
            let blocks = dimension_blocks(d, strategy, max_hom_dim, global_max)?;
            if ranges.is_empty() {
                ranges = vec![Range::empty(); blocks.len()];
            }
            for (range, block) in ranges.iter_mut().zip(&blocks) {
                for p in block.points() {
                    range.include(p.birth);
                    range.include(p.death);
                }
            }
        }
        Ok(BlockFit {
            global_max,
            ranges: ranges.into_iter().map(Range::widened).collect(),
        })
    }
}

/// Vectorizes one diagram with a dimension strategy and a fitted range set.
pub fn combine_dims(
    d: &PersistenceDiagram,
    strategy: DimStrategy,
    max_hom_dim: usize,
    spec: &VectorizerSpec,
    fit: &BlockFit,
) -> Result<Vec<f64>, VectorizeError> {
    spec.validate()?;
    let blocks = dimension_blocks(d, strategy, max_hom_dim, fit.global_max)?;
    let mut out = Vec::with_capacity(spec.len() * blocks.len());
    for (block, range) in blocks.iter().zip(&fit.ranges) {
        out.extend(spec.apply_unchecked(block, *range));
    }
    Ok(out)
}

/// Union of several diagrams.
pub fn collapse(diagrams: &[PersistenceDiagram]) -> PersistenceDiagram {
    let mut all = PersistenceDiagram::default();
    for d in diagrams {
        all.extend(d);
    }
    if let Some(first) = diagrams.first() {
        all.source = first.source.clone();
    }
    all
}

/// Everything needed to turn a sample's diagrams (one per filtration, all
/// dimensions mixed) into a vector, fitted on a training split.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FittedVectorizer {
    pub dims: DimStrategy,
    pub filtrations: FilterStrategy,
    pub max_hom_dim: usize,
    pub filtration_count: usize,
    /// One fit for `Collapse`, one per filtration for `Multivector`.
    pub fits: Vec<BlockFit>,
}

/// A sample's regularized blocks with their ranges, ready for any spec.
#[derive(Debug, Clone)]
pub struct PreparedSample {
    blocks: Vec<(PersistenceDiagram, Range)>,
}

impl PreparedSample {
    pub fn vectorize(&self, spec: &VectorizerSpec) -> Vec<f64> {
        let mut out = Vec::with_capacity(spec.len() * self.blocks.len());
        for (block, range) in &self.blocks {
            out.extend(spec.apply_unchecked(block, *range));
        }
        out
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

impl FittedVectorizer {
    pub fn fit(
        train: &[&[PersistenceDiagram]],
        dims: DimStrategy,
        filtrations: FilterStrategy,
        max_hom_dim: usize,
    ) -> Result<Self, VectorizeError> {
        let first = train.first().ok_or(VectorizeError::NoDiagrams)?;
        let filtration_count = first.len();
        for s in train {
            check_count(filtration_count, s.len())?;
        }
        let fits = match filtrations {
            FilterStrategy::Collapse => {
                let collapsed: Vec<PersistenceDiagram> = train.iter().map(|s| collapse(s)).collect();
                let refs: Vec<&PersistenceDiagram> = collapsed.iter().collect();
                vec![BlockFit::fit(&refs, dims, max_hom_dim)?]
            }
            FilterStrategy::Multivector => (0..filtration_count)
                .map(|f| {
                    let refs: Vec<&PersistenceDiagram> = train.iter().map(|s| &s[f]).collect();
                    BlockFit::fit(&refs, dims, max_hom_dim)
                })
                .collect::<Result<_, _>>()?,
        };
        Ok(FittedVectorizer {
            dims,
            filtrations,
            max_hom_dim,
            filtration_count,
            fits,
        })
    }

    pub fn prepare(&self, sample: &[PersistenceDiagram]) -> Result<PreparedSample, VectorizeError> {
        check_count(self.filtration_count, sample.len())?;
        let mut blocks = Vec::new();
        let mut push = |d: &PersistenceDiagram, fit: &BlockFit| -> Result<(), VectorizeError> {
            let parts = dimension_blocks(d, self.dims, self.max_hom_dim, fit.global_max)?;
            blocks.extend(parts.into_iter().zip(fit.ranges.iter().copied()));
            Ok(())
        };
        match self.filtrations {
            FilterStrategy::Collapse => push(&collapse(sample), &self.fits[0])?,
            FilterStrategy::Multivector => {
                for (d, fit) in sample.iter().zip(&self.fits) {
                    push(d, fit)?;
                }
            }
        }
        Ok(PreparedSample { blocks })
    }

    pub fn transform(
        &self,
        sample: &[PersistenceDiagram],
        spec: &VectorizerSpec,
    ) -> Result<Vec<f64>, VectorizeError> {
        spec.validate()?;
        Ok(self.prepare(sample)?.vectorize(spec))
    }
}

fn check_count(expected: usize, found: usize) -> Result<(), VectorizeError> {
    if expected == found && found > 0 {
        Ok(())
    } else {
        Err(VectorizeError::FiltrationCountMismatch { expected, found })
    }
}

/// Vectorizes samples given as per-filtration diagram lists, fitting on the
/// whole input. For fitting on a split, use [`FittedVectorizer`] directly.
pub fn combine_filtrations(
    samples: &[Vec<PersistenceDiagram>],
    dims: DimStrategy,
    filtrations: FilterStrategy,
    max_hom_dim: usize,
    spec: &VectorizerSpec,
) -> Result<Vec<Vec<f64>>, VectorizeError> {
    let refs: Vec<&[PersistenceDiagram]> = samples.iter().map(|s| s.as_slice()).collect();
    let fitted = FittedVectorizer::fit(&refs, dims, filtrations, max_hom_dim)?;
    samples.iter().map(|s| fitted.transform(s, spec)).collect()
}

/// Writes `sample_id,label,v_1,...,v_k` rows with a header line.
pub fn write_vectors_csv<W: Write>(
    mut w: W,
    rows: &[(String, usize, Vec<f64>)],
) -> std::io::Result<()> {
    let width = rows.first().map_or(0, |r| r.2.len());
    write!(w, "sample_id,label")?;
    for i in 1..=width {
        write!(w, ",v_{i}")?;
    }
    writeln!(w)?;
    for (id, label, values) in rows {
        write!(w, "{id},{label}")?;
        for v in values {
            write!(w, ",{v}")?;
        }
        writeln!(w)?;
    }
    Ok(())
}
