use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::classifiers::{accuracy, fit_predict, ClassifierSpec};
use super::LearnError;
use crate::rng::{derive_seed, rng_from_seed};

/// How train/test splits are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Protocol {
    /// Independent stratified shuffles, each holding out `test_fraction`.
    MonteCarlo { runs: usize, test_fraction: f64 },
    /// Stratified k-fold; `folds` equal to the sample count is leave-one-out.
    KFold { folds: usize },
}

impl Default for Protocol {
    fn default() -> Self {
        Protocol::MonteCarlo {
            runs: 10,
            test_fraction: 0.2,
        }
    }
}

impl Protocol {
    pub fn runs(&self) -> usize {
        match *self {
            Protocol::MonteCarlo { runs, .. } => runs,
            Protocol::KFold { folds } => folds,
        }
    }

    pub fn validate(&self) -> Result<(), LearnError> {
        match *self {
            Protocol::MonteCarlo {
                runs,
                test_fraction,
            } if runs >= 1 && test_fraction > 0.0 && test_fraction < 1.0 => Ok(()),
            Protocol::KFold { folds } if folds >= 2 => Ok(()),
            _ => Err(LearnError::InvalidProtocol(format!("{self:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub train: Vec<usize>,
    pub test: Vec<usize>,
}

fn by_class(labels: &[usize]) -> Vec<Vec<usize>> {
    let classes = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut groups = vec![Vec::new(); classes];
    for (i, &l) in labels.iter().enumerate() {
        groups[l].push(i);
    }
    groups.retain(|g| !g.is_empty());
    groups
}

/// Per-class test counts summing to ⌈n·fraction⌉, proportional to class
/// sizes; leftover slots go to the largest remainders, lower class first.
fn allocate(groups: &[Vec<usize>], n: usize, fraction: f64) -> Vec<usize> {
    let total = ((n as f64 * fraction).ceil() as usize).clamp(1, n - 1);
    let exact: Vec<f64> = groups.iter().map(|g| g.len() as f64 * total as f64 / n as f64).collect();
    let mut counts: Vec<usize> = exact.iter().map(|e| e.floor() as usize).collect();
    let mut order: Vec<usize> = (0..groups.len()).collect();
    order.sort_by(|&a, &b| {
        let ra = exact[a] - exact[a].floor();
        let rb = exact[b] - exact[b].floor();
        rb.total_cmp(&ra).then(a.cmp(&b))
    });
    let mut left = total - counts.iter().sum::<usize>();
    for &c in order.iter().cycle().take(order.len() * 2) {
        if left == 0 {
            break;
        }
        if counts[c] < groups[c].len() {
            counts[c] += 1;
            left -= 1;
        }
    }
    counts
}

/// Stratified splits for `labels`, reproducible from `seed`. Index lists are
/// sorted.
pub fn make_splits(labels: &[usize], protocol: &Protocol, seed: u64) -> Result<Vec<Split>, LearnError> {
    protocol.validate()?;
    let n = labels.len();
    let groups = by_class(labels);
    match *protocol {
        Protocol::MonteCarlo {
            runs,
            test_fraction,
        } => {
            if n < 2 {
                return Err(LearnError::TooFewSamples { samples: n, needed: 2 });
            }
            let counts = allocate(&groups, n, test_fraction);
            Ok((0..runs)
                .map(|run| {
                    let mut rng = rng_from_seed(derive_seed(seed, &[run as u64]));
                    let mut train = Vec::new();
                    let mut test = Vec::new();
                    for (g, &k) in groups.iter().zip(&counts) {
                        let mut idx = g.clone();
                        idx.shuffle(&mut rng);
                        test.extend_from_slice(&idx[..k]);
                        train.extend_from_slice(&idx[k..]);
                    }
                    train.sort_unstable();
                    test.sort_unstable();
                    Split { train, test }
                })
                .collect())
        }
        Protocol::KFold { folds } => {
            if n < folds {
                return Err(LearnError::TooFewSamples {
                    samples: n,
                    needed: folds,
                });
            }
            let mut rng = rng_from_seed(seed);
            let mut fold_of = vec![0usize; n];
            let mut next = 0usize;
            for g in &groups {
                let mut idx = g.clone();
                idx.shuffle(&mut rng);
                for i in idx {
                    fold_of[i] = next % folds;
                    next += 1;
                }
            }
            Ok((0..folds)
                .map(|f| Split {
                    train: (0..n).filter(|&i| fold_of[i] != f).collect(),
                    test: (0..n).filter(|&i| fold_of[i] == f).collect(),
                })
                .collect())
        }
    }
}

/// Mean and population standard deviation.
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvResult {
    pub accuracies: Vec<f64>,
    pub mean: f64,
    pub std: f64,
}

/// Accuracy of one classifier on ready-made vectors, per split.
pub fn cross_validate(
    vectors: &[Vec<f64>],
    labels: &[usize],
    spec: &ClassifierSpec,
    protocol: &Protocol,
    seed: u64,
) -> Result<CvResult, LearnError> {
    if vectors.len() != labels.len() {
        return Err(LearnError::LabelCountMismatch {
            vectors: vectors.len(),
            labels: labels.len(),
        });
    }
    let splits = make_splits(labels, protocol, seed)?;
    let mut accuracies = Vec::with_capacity(splits.len());
    for (run, split) in splits.iter().enumerate() {
        let tx: Vec<Vec<f64>> = split.train.iter().map(|&i| vectors[i].clone()).collect();
        let ty: Vec<usize> = split.train.iter().map(|&i| labels[i]).collect();
        let sx: Vec<Vec<f64>> = split.test.iter().map(|&i| vectors[i].clone()).collect();
        let sy: Vec<usize> = split.test.iter().map(|&i| labels[i]).collect();
        let p = fit_predict(spec, &tx, &ty, &sx, derive_seed(seed, &[0, run as u64]))?;
        accuracies.push(accuracy(&p, &sy));
    }
    let (mean, std) = mean_std(&accuracies);
    Ok(CvResult {
        accuracies,
        mean,
        std,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(classes: usize, per: usize) -> Vec<usize> {
        (0..classes * per).map(|i| i / per).collect()
    }

    #[test]
    fn monte_carlo_80_20() {
        let y = labels(5, 50);
        let splits = make_splits(&y, &Protocol::default(), 1).unwrap();
        assert_eq!(splits.len(), 10);
        for s in &splits {
            assert_eq!(s.train.len(), 200);
            assert_eq!(s.test.len(), 50);
            for c in 0..5 {
                assert_eq!(s.test.iter().filter(|&&i| y[i] == c).count(), 10);
            }
        }
        assert_ne!(splits[0], splits[1]);
        assert_eq!(splits, make_splits(&y, &Protocol::default(), 1).unwrap());
    }

    #[test]
    fn k_fold_partitions_and_leave_one_out() {
        let y = labels(2, 7);
        let splits = make_splits(&y, &Protocol::KFold { folds: 5 }, 0).unwrap();
        let mut seen: Vec<usize> = splits.iter().flat_map(|s| s.test.clone()).collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..14).collect::<Vec<_>>());
        let loo = make_splits(&y, &Protocol::KFold { folds: 14 }, 0).unwrap();
        assert!(loo.iter().all(|s| s.test.len() == 1));
        assert!(matches!(
            make_splits(&y, &Protocol::KFold { folds: 15 }, 0),
            Err(LearnError::TooFewSamples { .. })
        ));
    }

    #[test]
    fn perfect_features_score_one() {
        let y = labels(3, 10);
        let x: Vec<Vec<f64>> = y.iter().map(|&l| vec![l as f64]).collect();
        let r = cross_validate(&x, &y, &ClassifierSpec::Knn { k: 1 }, &Protocol::default(), 0).unwrap();
        assert_eq!((r.mean, r.std), (1.0, 0.0));
        let loo =
            cross_validate(&x, &y, &ClassifierSpec::Knn { k: 1 }, &Protocol::KFold { folds: 30 }, 0).unwrap();
        assert_eq!(loo.accuracies.len(), 30);
    }

    #[test]
    fn population_std() {
        let h1 = [0.960, 0.880, 0.933, 0.907, 0.960, 0.920, 0.960, 0.947, 0.907, 0.933];
        let (m, s) = mean_std(&h1);
        assert_eq!(format!("{m:.3} {s:.3}"), "0.931 0.026");
    }
}
