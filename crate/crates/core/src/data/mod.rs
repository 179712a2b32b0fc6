//! Samples and datasets: the linked twisted map generator, IDX image files,
//! graph edge lists, subsampling and a plain-text dataset format.

mod edge_list;
mod idx;
mod text;

pub use edge_list::{load_graph_edge_list, read_graph_edge_list, write_graph_edge_list};
pub use idx::{load_idx, read_idx_images, read_idx_labels, write_idx};
pub use text::{read_dataset, write_dataset};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::filtrations::{FiltrationError, GreyImage, PointCloud, WeightedGraph};
use crate::rng::{derive_seed, rng_from_seed};

/// Parameters of the dynamical-system benchmark.
pub const DEFAULT_R_VALUES: [f64; 5] = [2.0, 3.5, 4.0, 4.1, 4.3];
pub const DEFAULT_ORBITS_PER_CLASS: usize = 50;
pub const DEFAULT_POINTS_PER_ORBIT: usize = 1000;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("{path}: bad magic number {found:#010x}, expected {expected:#010x}")]
    BadMagic {
        path: String,
        expected: u32,
        found: u32,
    },
    #[error("{images} images but {labels} labels")]
    CountMismatch { images: usize, labels: usize },
    #[error("{path}: file ends before the declared {expected} bytes of data")]
    TruncatedFile { path: String, expected: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} outside 0..{vertex_count}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("requested {requested} samples{context}, only {available} available")]
    TooFew {
        requested: usize,
        available: usize,
        context: String,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Filtration(#[from] FiltrationError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Payload {
    PointCloud(PointCloud),
    Image(GreyImage),
    Graph(WeightedGraph),
}

impl Payload {
    pub fn kind(&self) -> PayloadKind {
        match self {
            Payload::PointCloud(_) => PayloadKind::PointCloud,
            Payload::Image(_) => PayloadKind::Image,
            Payload::Graph(_) => PayloadKind::Graph,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PayloadKind {
    PointCloud,
    Image,
    Graph,
}

impl PayloadKind {
    pub fn name(self) -> &'static str {
        match self {
            PayloadKind::PointCloud => "point_cloud",
            PayloadKind::Image => "image",
            PayloadKind::Graph => "graph",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub id: String,
    pub label: usize,
    pub payload: Payload,
}

/// Labeled samples of one payload kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    samples: Vec<Sample>,
    class_names: Vec<String>,
    pub provenance: String,
}

impl Dataset {
    /// Checks non-emptiness, a single payload kind and labels below the
    /// number of classes.
    pub fn new(
        samples: Vec<Sample>,
        class_names: Vec<String>,
        provenance: impl Into<String>,
    ) -> Result<Self, DataError> {
        let first = samples.first().ok_or(DataError::EmptyDataset)?;
        let kind = first.payload.kind();
        for s in &samples {
            if s.payload.kind() != kind {
                return Err(DataError::InvalidParameter(format!(
                    "sample {} is a {}, dataset holds {}",
                    s.id,
                    s.payload.kind().name(),
                    kind.name()
                )));
            }
            if s.label >= class_names.len() {
                return Err(DataError::InvalidParameter(format!(
                    "sample {} has label {} but there are {} classes",
                    s.id,
                    s.label,
                    class_names.len()
                )));
            }
        }
        Ok(Dataset {
            samples,
            class_names,
            provenance: provenance.into(),
        })
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn class_count(&self) -> usize {
        self.class_names.len()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn kind(&self) -> PayloadKind {
        self.samples[0].payload.kind()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.samples.iter().map(|s| s.label).collect()
    }
}

/// Iterates x ← x + r·y(1−y), y ← y + r·x(1−x) (with the new x), both
/// mod 1, returning the `n` iterates after the start point.
pub fn linked_twisted_map(r: f64, start: (f64, f64), n: usize) -> Result<PointCloud, DataError> {
    if r.is_nan() || r <= 0.0 {
        return Err(DataError::InvalidParameter(format!("r must be positive, got {r}")));
    }
    let in_unit = |v: f64| (0.0..1.0).contains(&v);
    if !in_unit(start.0) || !in_unit(start.1) {
        return Err(DataError::InvalidParameter(format!(
            "start ({}, {}) outside [0,1)^2",
            start.0, start.1
        )));
    }
    let (mut x, mut y) = start;
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        x = wrap(x + r * y * (1.0 - y));
        y = wrap(y + r * x * (1.0 - x));
        points.push(vec![x, y]);
    }
    Ok(PointCloud::new(points)?)
}

/// Reduction mod 1 into [0, 1); rounding can make `v - floor(v)` equal 1.
fn wrap(v: f64) -> f64 {
    let w = v - v.floor();
    if w >= 1.0 {
        0.0
    } else {
        w
    }
}

/// `orbits_per_class` orbits per value of r, labeled by the index of r.
/// Starting points are uniform in [0,1)², drawn from a stream keyed by
/// (seed, class, orbit).
pub fn generate_dynamic_dataset(
    r_values: &[f64],
    orbits_per_class: usize,
    points_per_orbit: usize,
    seed: u64,
) -> Result<Dataset, DataError> {
    if r_values.is_empty() || orbits_per_class == 0 || points_per_orbit == 0 {
        return Err(DataError::InvalidParameter(
            "r values, orbits per class and points per orbit must be non-empty".into(),
        ));
    }
    let mut samples = Vec::with_capacity(r_values.len() * orbits_per_class);
    for (label, &r) in r_values.iter().enumerate() {
        for orbit in 0..orbits_per_class {
            let mut rng = rng_from_seed(derive_seed(seed, &[label as u64, orbit as u64]));
            let start = (rng.random::<f64>(), rng.random::<f64>());
            let cloud = linked_twisted_map(r, start, points_per_orbit)?;
            samples.push(Sample {
                id: format!("r{label}_o{orbit}"),
                label,
                payload: Payload::PointCloud(cloud),
            });
        }
    }
    let class_names = r_values.iter().map(|r| format!("r={r}")).collect();
    let provenance = format!(
        "linked twisted map r={r_values:?} orbits_per_class={orbits_per_class} \
         points_per_orbit={points_per_orbit} seed={seed}"
    );
    Dataset::new(samples, class_names, provenance)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Subsample {
    Total(usize),
    PerClass(usize),
}

/// Seeded subsample without replacement; chosen samples keep their
/// original order.
pub fn subsample(dataset: &Dataset, size: Subsample, seed: u64) -> Result<Dataset, DataError> {
    let mut rng = rng_from_seed(seed);
    let mut chosen: Vec<usize> = match size {
        Subsample::Total(n) => {
            if n > dataset.len() {
                return Err(DataError::TooFew {
                    requested: n,
                    available: dataset.len(),
                    context: String::new(),
                });
            }
            let mut idx: Vec<usize> = (0..dataset.len()).collect();
            idx.partial_shuffle(&mut rng, n).0.to_vec()
        }
        Subsample::PerClass(n) => {
            let mut chosen = Vec::new();
            for class in 0..dataset.class_count() {
                let mut idx: Vec<usize> = (0..dataset.len())
                    .filter(|&i| dataset.samples[i].label == class)
                    .collect();
                if n > idx.len() {
                    return Err(DataError::TooFew {
                        requested: n,
                        available: idx.len(),
                        context: format!(" of class {}", dataset.class_names[class]),
                    });
                }
                chosen.extend_from_slice(idx.partial_shuffle(&mut rng, n).0);
            }
            chosen
        }
    };
    chosen.sort_unstable();
    let samples = chosen.into_iter().map(|i| dataset.samples[i].clone()).collect();
    Dataset::new(
        samples,
        dataset.class_names.clone(),
        format!("{} | subsample {size:?} seed={seed}", dataset.provenance),
    )
}
