//! Persistent homology pipeline for classification experiments.
//!
//! Build a filtered complex from a point cloud, image or weighted graph,
//! reduce it to persistence diagrams, turn the diagrams into fixed-length
//! vectors and score classifiers on them under repeated cross-validation.

pub mod complex;
pub mod data;
pub mod diagram;
pub mod filtrations;
pub mod learn;
pub mod persistence;
pub mod pipeline;
pub mod rng;
pub mod vectorize;
