//! Classifiers, split protocols, the grid-search harness and significance
//! tests between vectorization methods.

mod classifiers;
mod forest;
mod grid;
mod stats;
mod validation;

pub use classifiers::{accuracy, fit_predict, ClassifierSpec};
pub use grid::{grid_search, grid_search_with_splits, AccuracyRecord, AccuracyTable, Combination, GridConfig, RunBest};
pub use stats::{method_stats, render_stats, welch_t_test, write_stats_csv, StatsRow, WelchTest};
pub use validation::{cross_validate, make_splits, mean_std, CvResult, Protocol, Split};

use thiserror::Error;

use crate::vectorize::VectorizeError;

#[derive(Debug, Error)]
pub enum LearnError {
    #[error("training set is empty")]
    EmptyTrainingSet,
    #[error("training labels contain a single class")]
    SingleClass,
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{vectors} vectors but {labels} labels")]
    LabelCountMismatch { vectors: usize, labels: usize },
    #[error("{samples} samples cannot be split {needed} ways")]
    TooFewSamples { samples: usize, needed: usize },
    #[error("a t-test needs at least two observations per sample")]
    TooFewObservations,
    #[error("invalid classifier `{0}`")]
    InvalidClassifier(String),
    #[error("invalid protocol {0}")]
    InvalidProtocol(String),
    #[error("grid has no vectorizers, classifiers or strategies")]
    EmptyGrid,
    #[error("statistics: {0}")]
    Statistics(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Vectorize(#[from] VectorizeError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
