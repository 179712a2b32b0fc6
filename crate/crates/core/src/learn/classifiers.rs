use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::forest::RandomForest;
use super::LearnError;

/// A classifier with fixed hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassifierSpec {
    /// One-vs-rest ridge regression on ±1 targets.
    RidgeOvr { lambda: f64 },
    Knn { k: usize },
    RandomForest {
        trees: usize,
        /// `None` grows trees until leaves are pure.
        max_depth: Option<usize>,
        /// Features tried per split; `None` means ⌈√d⌉.
        max_features: Option<usize>,
    },
}

impl ClassifierSpec {
    pub fn forest(trees: usize) -> Self {
        ClassifierSpec::RandomForest {
            trees,
            max_depth: None,
            max_features: None,
        }
    }

    /// Ridge λ ∈ {0.1, 1, 10}, k-NN k ∈ {1, 3, 5}, a 100-tree forest.
    pub fn default_roster() -> Vec<ClassifierSpec> {
        let mut roster: Vec<ClassifierSpec> = [0.1, 1.0, 10.0]
            .into_iter()
            .map(|lambda| ClassifierSpec::RidgeOvr { lambda })
            .collect();
        roster.extend([1, 3, 5].map(|k| ClassifierSpec::Knn { k }));
        roster.push(ClassifierSpec::forest(100));
        roster
    }

    pub fn validate(&self) -> Result<(), LearnError> {
        let ok = match *self {
            ClassifierSpec::RidgeOvr { lambda } => lambda > 0.0 && lambda.is_finite(),
            ClassifierSpec::Knn { k } => k >= 1,
            ClassifierSpec::RandomForest {
                trees,
                max_depth,
                max_features,
            } => trees >= 1 && max_depth != Some(0) && max_features != Some(0),
        };
        if ok {
            Ok(())
        } else {
            Err(LearnError::InvalidClassifier(self.to_string()))
        }
    }
}

impl fmt::Display for ClassifierSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassifierSpec::RidgeOvr { lambda } => write!(f, "ridge(lambda={lambda})"),
            ClassifierSpec::Knn { k } => write!(f, "knn(k={k})"),
            ClassifierSpec::RandomForest {
                trees,
                max_depth,
                max_features,
            } => {
                write!(f, "forest(trees={trees}")?;
                if let Some(d) = max_depth {
                    write!(f, ";depth={d}")?;
                }
                if let Some(m) = max_features {
                    write!(f, ";features={m}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for ClassifierSpec {
    type Err = LearnError;

    /// Parses the `Display` form, e.g. `knn(k=3)` or `forest(trees=100;depth=8)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LearnError::InvalidClassifier(s.to_string());
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let mut kv = std::collections::HashMap::new();
        for part in args.split(';').filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(bad)?;
            kv.insert(k.trim(), v.trim());
        }
        let get = |k: &str| kv.get(k).copied();
        let spec = match name.trim() {
            "ridge" => ClassifierSpec::RidgeOvr {
                lambda: get("lambda").ok_or_else(bad)?.parse().map_err(|_| bad())?,
            },
            "knn" => ClassifierSpec::Knn {
                k: get("k").ok_or_else(bad)?.parse().map_err(|_| bad())?,
            },
            "forest" => ClassifierSpec::RandomForest {
                trees: get("trees").ok_or_else(bad)?.parse().map_err(|_| bad())?,
                max_depth: get("depth").map(str::parse).transpose().map_err(|_| bad())?,
                max_features: get("features").map(str::parse).transpose().map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn check_inputs(
    train_x: &[Vec<f64>],
    train_y: &[usize],
    test_x: &[Vec<f64>],
) -> Result<(usize, Vec<usize>), LearnError> {
    if train_x.is_empty() {
        return Err(LearnError::EmptyTrainingSet);
    }
    if train_x.len() != train_y.len() {
        return Err(LearnError::LabelCountMismatch {
            vectors: train_x.len(),
            labels: train_y.len(),
        });
    }
    let d = train_x[0].len();
    for v in train_x.iter().chain(test_x) {
        if v.len() != d {
            return Err(LearnError::DimensionMismatch {
                expected: d,
                found: v.len(),
            });
        }
    }
    let mut classes = train_y.to_vec();
    classes.sort_unstable();
    classes.dedup();
    if classes.len() < 2 {
        return Err(LearnError::SingleClass);
    }
    Ok((d, classes))
}

/// Trains on `(train_x, train_y)` and predicts `test_x`. `seed` only
/// matters for the forest.
pub fn fit_predict(
    spec: &ClassifierSpec,
    train_x: &[Vec<f64>],
    train_y: &[usize],
    test_x: &[Vec<f64>],
    seed: u64,
) -> Result<Vec<usize>, LearnError> {
    spec.validate()?;
    let (d, classes) = check_inputs(train_x, train_y, test_x)?;
    Ok(match *spec {
        ClassifierSpec::RidgeOvr { lambda } => ridge_ovr(train_x, train_y, test_x, &classes, d, lambda),
        ClassifierSpec::Knn { k } => test_x.iter().map(|x| knn_one(train_x, train_y, x, k)).collect(),
        ClassifierSpec::RandomForest {
            trees,
            max_depth,
            max_features,
        } => {
            let m = max_features.unwrap_or_else(|| (d as f64).sqrt().ceil() as usize).clamp(1, d.max(1));
            let forest = RandomForest::fit(train_x, train_y, trees, max_depth, m, seed);
            test_x.iter().map(|x| forest.predict(x)).collect()
        }
    })
}

fn ridge_ovr(
    train_x: &[Vec<f64>],
    train_y: &[usize],
    test_x: &[Vec<f64>],
    classes: &[usize],
    d: usize,
    lambda: f64,
) -> Vec<usize> {
    let n = train_x.len();
    let c = classes.len();
    let mut mean = vec![0.0; d];
    for x in train_x {
        for (m, v) in mean.iter_mut().zip(x) {
            *m += v;
        }
    }
    for m in &mut mean {
        *m /= n as f64;
    }
    let xc = DMatrix::from_fn(n, d, |i, j| train_x[i][j] - mean[j]);
    let y = DMatrix::from_fn(n, c, |i, k| if train_y[i] == classes[k] { 1.0 } else { -1.0 });
    let y_mean: Vec<f64> = (0..c).map(|k| y.column(k).mean()).collect();
    let yc = DMatrix::from_fn(n, c, |i, k| y[(i, k)] - y_mean[k]);

    // primal (d×d) or dual (n×n) normal equations, whichever is smaller
    let weights = if d <= n {
        let mut gram = xc.transpose() * &xc;
        for i in 0..d {
            gram[(i, i)] += lambda;
        }
        solve_spd(gram, xc.transpose() * &yc)
    } else {
        let mut gram = &xc * xc.transpose();
        for i in 0..n {
            gram[(i, i)] += lambda;
        }
        xc.transpose() * solve_spd(gram, yc)
    };

    test_x
        .iter()
        .map(|x| {
            let mut best = (0usize, f64::NEG_INFINITY);
            for k in 0..c {
                let mut score = y_mean[k];
                for j in 0..d {
                    score += (x[j] - mean[j]) * weights[(j, k)];
                }
                if score > best.1 {
                    best = (k, score);
                }
            }
            classes[best.0]
        })
        .collect()
}

fn solve_spd(a: DMatrix<f64>, b: DMatrix<f64>) -> DMatrix<f64> {
    match a.clone().cholesky() {
        Some(ch) => ch.solve(&b),
        // rounding can make a nearly singular Gram matrix fail Cholesky
        None => a.lu().solve(&b).unwrap_or_else(|| DMatrix::zeros(b.nrows(), b.ncols())),
    }
}

/// Majority vote of the `k` nearest training points (ties in distance go to
/// the lower training index). Tied votes go to the class whose nearest
/// member is closest, then to the lowest label.
fn knn_one(train_x: &[Vec<f64>], train_y: &[usize], x: &[f64], k: usize) -> usize {
    let mut dist: Vec<(f64, usize)> = train_x
        .iter()
        .enumerate()
        .map(|(i, t)| (t.iter().zip(x).map(|(a, b)| (a - b) * (a - b)).sum(), i))
        .collect();
    let k = k.min(dist.len());
    let cmp = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    if k < dist.len() {
        dist.select_nth_unstable_by(k - 1, cmp);
    }
    let neighbours = &mut dist[..k];
    neighbours.sort_by(cmp);
    // (label, votes, rank of first occurrence)
    let mut tally: Vec<(usize, usize, usize)> = Vec::new();
    for (rank, &(_, i)) in neighbours.iter().enumerate() {
        let label = train_y[i];
        match tally.iter_mut().find(|t| t.0 == label) {
            Some(t) => t.1 += 1,
            None => tally.push((label, 1, rank)),
        }
    }
    tally
        .into_iter()
        .min_by(|a, b| b.1.cmp(&a.1).then(a.2.cmp(&b.2)).then(a.0.cmp(&b.0)))
        .map(|t| t.0)
        .expect("k >= 1")
}

/// Fraction of positions where `predicted` equals `truth`.
pub fn accuracy(predicted: &[usize], truth: &[usize]) -> f64 {
    if truth.is_empty() {
        return 0.0;
    }
    let correct = predicted.iter().zip(truth).filter(|(p, t)| p == t).count();
    correct as f64 / truth.len() as f64
}
