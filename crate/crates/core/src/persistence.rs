//! Persistent homology over ℤ₂ by boundary-matrix column reduction.
//!
//! Columns are reduced dimension by dimension from the top down. Once a
//! column of dimension k+1 is reduced, its lowest row names a k-simplex whose
//! own column must reduce to zero, so that column is cleared without work.

use thiserror::Error;

use crate::complex::{ComplexError, FilteredComplex};
use crate::diagram::{PersistenceDiagram, PersistencePoint};

#[derive(Debug, Error)]
pub enum PersistenceError {
    #[error("invalid complex: {0}")]
    InvalidComplex(#[from] ComplexError),
}

const NONE: usize = usize::MAX;

/// Reduced boundary matrix and the resulting pairing, all indices in
/// filtration order.
#[derive(Debug, Clone)]
pub struct ReductionState {
    /// Position in [`FilteredComplex::simplices`] for each filtration index.
    pub order: Vec<usize>,
    pub values: Vec<f64>,
    pub dims: Vec<usize>,
    /// Reduced columns as sorted row indices; empty for zero columns.
    pub columns: Vec<Vec<usize>>,
    /// `low_to_column[row]` is the column whose lowest one is `row`.
    pub low_to_column: Vec<usize>,
    /// (birth index, death index) pairs, birth < death.
    pub pairs: Vec<(usize, usize)>,
    /// Birth indices never killed within the reduced dimensions.
    pub unpaired: Vec<usize>,
}

/// Per-dimension diagrams plus bookkeeping about dropped pairs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PersistenceResult {
    /// One diagram per homology dimension 0..=max_hom_dim.
    pub diagrams: Vec<PersistenceDiagram>,
    /// Pairs with birth == death, per dimension; not in `diagrams`.
    pub zero_persistence: Vec<usize>,
}

impl PersistenceResult {
    /// All dimensions merged into one diagram.
    pub fn combined(&self) -> PersistenceDiagram {
        let mut all = PersistenceDiagram::default();
        for d in &self.diagrams {
            all.extend(d);
        }
        all
    }
}

/// symmetric difference of two sorted index lists
fn add_column(target: &mut Vec<usize>, other: &[usize], scratch: &mut Vec<usize>) {
    scratch.clear();
    let (mut i, mut j) = (0, 0);
    while i < target.len() && j < other.len() {
        match target[i].cmp(&other[j]) {
            std::cmp::Ordering::Less => {
                scratch.push(target[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                scratch.push(other[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    scratch.extend_from_slice(&target[i..]);
    scratch.extend_from_slice(&other[j..]);
    std::mem::swap(target, scratch);
}

/// Reduces the boundary matrix of every simplex up to dimension
/// `max_hom_dim + 1`; higher simplices are ignored.
pub fn reduce(complex: &FilteredComplex, max_hom_dim: usize) -> ReductionState {
    let top = max_hom_dim + 1;
    let order: Vec<usize> = complex
        .sort_filtration()
        .into_iter()
        .filter(|&i| complex.simplices()[i].0.dimension() <= top)
        .collect();
    let n = order.len();
    let mut position = vec![NONE; complex.len()];
    for (f, &i) in order.iter().enumerate() {
        position[i] = f;
    }
    let values: Vec<f64> = order.iter().map(|&i| complex.simplices()[i].1).collect();
    let dims: Vec<usize> = order
        .iter()
        .map(|&i| complex.simplices()[i].0.dimension())
        .collect();

    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut low_to_column = vec![NONE; n];
    let mut scratch = Vec::new();

    let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    for (f, &d) in dims.iter().enumerate() {
        by_dim[d].push(f);
    }

    for dim in (1..=top).rev() {
        for &j in &by_dim[dim] {
            // clearing: j is already the lowest one of a higher column
            if low_to_column[j] != NONE {
                continue;
            }
            let (simplex, _) = &complex.simplices()[order[j]];
            let mut col: Vec<usize> = simplex
                .boundary()
                .iter()
                .map(|face| {
                    let p = complex.position(face).expect("closed complex");
                    position[p]
                })
                .collect();
            col.sort_unstable();
            while let Some(&low) = col.last() {
                let k = low_to_column[low];
                if k == NONE {
                    break;
                }
                add_column(&mut col, &columns[k], &mut scratch);
            }
            if let Some(&low) = col.last() {
                low_to_column[low] = j;
            }
            columns[j] = col;
        }
    }

    let mut pairs = Vec::new();
    let mut unpaired = Vec::new();
    for j in 0..n {
        if let Some(&low) = columns[j].last() {
            pairs.push((low, j));
        } else if low_to_column[j] == NONE && dims[j] < top {
            unpaired.push(j);
        }
    }
    pairs.sort_unstable();

    ReductionState {
        order,
        values,
        dims,
        columns,
        low_to_column,
        pairs,
        unpaired,
    }
}

/// Persistence diagrams for homology dimensions `0..=max_hom_dim`.
///
/// Essential classes die at `f64::INFINITY`; pairs born and killed at the
/// same value are counted in `zero_persistence` and left out of the diagrams.
pub fn compute_persistence(
    complex: &FilteredComplex,
    max_hom_dim: usize,
) -> Result<PersistenceResult, PersistenceError> {
    complex.validate()?;
    Ok(diagrams_from_reduction(&reduce(complex, max_hom_dim), max_hom_dim))
}

/// Like [`compute_persistence`] but skips validation; for complexes produced
/// by the constructors in [`crate::filtrations`].
pub fn compute_persistence_unchecked(
    complex: &FilteredComplex,
    max_hom_dim: usize,
) -> PersistenceResult {
    diagrams_from_reduction(&reduce(complex, max_hom_dim), max_hom_dim)
}

fn diagrams_from_reduction(state: &ReductionState, max_hom_dim: usize) -> PersistenceResult {
    let mut points: Vec<Vec<PersistencePoint>> = vec![Vec::new(); max_hom_dim + 1];
    let mut zero = vec![0usize; max_hom_dim + 1];
    for &(b, d) in &state.pairs {
        let dim = state.dims[b];
        let (birth, death) = (state.values[b], state.values[d]);
        if birth == death {
            zero[dim] += 1;
        } else {
            points[dim].push(PersistencePoint { birth, death, dim });
        }
    }
    for &b in &state.unpaired {
        let dim = state.dims[b];
        points[dim].push(PersistencePoint {
            birth: state.values[b],
            death: f64::INFINITY,
            dim,
        });
    }
    PersistenceResult {
        diagrams: points.into_iter().map(PersistenceDiagram::new).collect(),
        zero_persistence: zero,
    }
}

/// Number of points alive at `t` (birth ≤ t < death) in each diagram.
pub fn betti_at(diagrams: &[PersistenceDiagram], t: f64) -> Vec<usize> {
    diagrams
        .iter()
        .map(|d| {
            d.points()
                .iter()
                .filter(|p| p.birth <= t && t < p.death)
                .count()
        })
        .collect()
}
