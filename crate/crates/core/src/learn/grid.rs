use std::fmt::Write as _;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classifiers::{accuracy, fit_predict, ClassifierSpec};
use super::validation::{make_splits, mean_std, Protocol, Split};
use super::LearnError;
use crate::diagram::PersistenceDiagram;
use crate::rng::derive_seed;
use crate::vectorize::{DimStrategy, FilterStrategy, FittedVectorizer, Method, VectorizerSpec};

/// Everything evaluated by [`grid_search`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridConfig {
    pub vectorizers: Vec<VectorizerSpec>,
    pub classifiers: Vec<ClassifierSpec>,
    pub strategies: Vec<DimStrategy>,
    pub filtration_strategy: FilterStrategy,
    pub max_hom_dim: usize,
    pub protocol: Protocol,
    pub seed: u64,
}

impl GridConfig {
    pub fn validate(&self) -> Result<(), LearnError> {
        if self.vectorizers.is_empty() || self.classifiers.is_empty() || self.strategies.is_empty() {
            return Err(LearnError::EmptyGrid);
        }
        for v in &self.vectorizers {
            v.validate()?;
        }
        for c in &self.classifiers {
            c.validate()?;
        }
        self.protocol.validate()
    }
}

/// Accuracy of one (strategy, vectorizer, classifier) cell on one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AccuracyRecord {
    pub strategy: String,
    pub method: Method,
    pub vectorizer: String,
    pub classifier: String,
    pub run: usize,
    pub accuracy: f64,
}

/// A fixed (vectorizer, classifier) pair with its accuracy on every run.
#[derive(Debug, Clone, PartialEq)]
pub struct Combination {
    pub method: Method,
    pub vectorizer: String,
    pub classifier: String,
    pub accuracies: Vec<f64>,
    pub mean: f64,
    pub std: f64,
}

/// The best cell of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunBest {
    pub accuracy: f64,
    pub method: Method,
    pub vectorizer: String,
    pub classifier: String,
}

/// Per-run accuracies of every evaluated cell, in strategy, vectorizer,
/// classifier, run order.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct AccuracyTable {
    pub records: Vec<AccuracyRecord>,
}

const CSV_HEADER: &str = "strategy,method,vectorizer,classifier,run,accuracy";

impl AccuracyTable {
    /// Strategy names in first-appearance order.
    pub fn strategies(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for r in &self.records {
            if !out.contains(&r.strategy) {
                out.push(r.strategy.clone());
            }
        }
        out
    }

    pub fn runs(&self) -> usize {
        self.records.iter().map(|r| r.run + 1).max().unwrap_or(0)
    }

    /// Fixed combinations of a strategy in first-appearance order.
    pub fn combinations(&self, strategy: &str) -> Vec<Combination> {
        let runs = self.runs();
        let mut out: Vec<Combination> = Vec::new();
        for r in self.records.iter().filter(|r| r.strategy == strategy) {
            let pos = out
                .iter()
                .position(|c| c.vectorizer == r.vectorizer && c.classifier == r.classifier);
            let c = match pos {
                Some(p) => &mut out[p],
                None => {
                    out.push(Combination {
                        method: r.method,
                        vectorizer: r.vectorizer.clone(),
                        classifier: r.classifier.clone(),
                        accuracies: vec![f64::NAN; runs],
                        mean: f64::NAN,
                        std: f64::NAN,
                    });
                    out.last_mut().expect("just pushed")
                }
            };
            c.accuracies[r.run] = r.accuracy;
        }
        for c in &mut out {
            (c.mean, c.std) = mean_std(&c.accuracies);
        }
        out
    }

    /// Best cell per run; ties keep the earliest cell.
    pub fn run_best(&self, strategy: &str) -> Vec<RunBest> {
        let mut best: Vec<Option<RunBest>> = vec![None; self.runs()];
        for r in self.records.iter().filter(|r| r.strategy == strategy) {
            let slot = &mut best[r.run];
            if slot.as_ref().is_none_or(|b| r.accuracy > b.accuracy) {
                *slot = Some(RunBest {
                    accuracy: r.accuracy,
                    method: r.method,
                    vectorizer: r.vectorizer.clone(),
                    classifier: r.classifier.clone(),
                });
            }
        }
        best.into_iter().flatten().collect()
    }

    /// Mean and population std of the per-run best accuracies.
    pub fn run_best_summary(&self, strategy: &str) -> (f64, f64) {
        let acc: Vec<f64> = self.run_best(strategy).iter().map(|b| b.accuracy).collect();
        mean_std(&acc)
    }

    /// The fixed combination with the highest mean; ties keep the earliest.
    pub fn best_combination(&self, strategy: &str) -> Option<Combination> {
        self.combinations(strategy)
            .into_iter()
            .fold(None, |best: Option<Combination>, c| match best {
                Some(b) if b.mean >= c.mean => Some(b),
                _ => Some(c),
            })
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{CSV_HEADER}")?;
        for r in &self.records {
            writeln!(
                w,
                "{},{},{},{},{},{}",
                r.strategy, r.method, r.vectorizer, r.classifier, r.run, r.accuracy
            )?;
        }
        Ok(())
    }

    pub fn read_csv<R: BufRead>(r: R) -> Result<Self, LearnError> {
        let mut records = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let bad = |m: &str| LearnError::Parse {
                line: i + 1,
                message: m.to_string(),
            };
            if i == 0 {
                if line.trim() != CSV_HEADER {
                    return Err(bad("unexpected header"));
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split(',').collect();
            let [strategy, method, vectorizer, classifier, run, acc] = f[..] else {
                return Err(bad("expected 6 fields"));
            };
            records.push(AccuracyRecord {
                strategy: strategy.to_string(),
                method: method.parse().map_err(|_| bad("unknown method"))?,
                vectorizer: vectorizer.to_string(),
                classifier: classifier.to_string(),
                run: run.parse().map_err(|_| bad("bad run index"))?,
                accuracy: acc.parse().map_err(|_| bad("bad accuracy"))?,
            });
        }
        if records.is_empty() {
            return Err(LearnError::EmptyGrid);
        }
        Ok(AccuracyTable { records })
    }

    /// Runs × strategies, each cell the run's best accuracy and method, with
    /// a closing mean ± std row.
    pub fn render_runs(&self) -> String {
        let strategies = self.strategies();
        let mut rows: Vec<Vec<String>> = vec![std::iter::once("Accuracy".to_string())
            .chain(strategies.iter().cloned())
            .collect()];
        let bests: Vec<Vec<RunBest>> = strategies.iter().map(|s| self.run_best(s)).collect();
        for run in 0..self.runs() {
            let mut row = vec![format!("Run {}", run + 1)];
            for b in &bests {
                row.push(
                    b.get(run)
                        .map_or("-".into(), |b| format!("{:.3}({})", b.accuracy, b.method)),
                );
            }
            rows.push(row);
        }
        let mut mean_row = vec!["Mean".to_string()];
        for s in &strategies {
            let (m, sd) = self.run_best_summary(s);
            mean_row.push(format!("{m:.3} ± {sd:.3}"));
        }
        rows.push(mean_row);
        render_columns(&rows)
    }

    /// One row per strategy: the best fixed combination.
    pub fn render_best(&self) -> String {
        let mut rows = vec![vec![
            "Homology".to_string(),
            "Accuracy".to_string(),
            "Vectorization".to_string(),
            "Classifier".to_string(),
        ]];
        for s in self.strategies() {
            if let Some(c) = self.best_combination(&s) {
                rows.push(vec![
                    s,
                    format!("{:.3} ± {:.3}", c.mean, c.std),
                    c.vectorizer,
                    c.classifier,
                ]);
            }
        }
        render_columns(&rows)
    }

    pub fn write_best_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "strategy,method,vectorizer,classifier,mean,std")?;
        for s in self.strategies() {
            if let Some(c) = self.best_combination(&s) {
                writeln!(
                    w,
                    "{s},{},{},{},{},{}",
                    c.method, c.vectorizer, c.classifier, c.mean, c.std
                )?;
            }
        }
        Ok(())
    }
}

pub(crate) fn render_columns(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s}{}", " ".repeat(widths[c] - s.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

/// Evaluates every (strategy, vectorizer, classifier) cell on every split.
///
/// `samples[i]` holds sample i's diagrams, one per filtration. Ranges are
/// fitted on each split's training part. Cell randomness is keyed by
/// (seed, cell, run), so the thread schedule does not affect results.
pub fn grid_search(
    samples: &[Vec<PersistenceDiagram>],
    labels: &[usize],
    config: &GridConfig,
) -> Result<AccuracyTable, LearnError> {
    config.validate()?;
    if samples.len() != labels.len() {
        return Err(LearnError::LabelCountMismatch {
            vectors: samples.len(),
            labels: labels.len(),
        });
    }
    let splits = make_splits(labels, &config.protocol, config.seed)?;
    grid_search_with_splits(samples, labels, config, &splits)
}

/// [`grid_search`] on caller-supplied splits; `config.protocol` is ignored.
pub fn grid_search_with_splits(
    samples: &[Vec<PersistenceDiagram>],
    labels: &[usize],
    config: &GridConfig,
    splits: &[Split],
) -> Result<AccuracyTable, LearnError> {
    config.validate()?;
    if samples.len() != labels.len() {
        return Err(LearnError::LabelCountMismatch {
            vectors: samples.len(),
            labels: labels.len(),
        });
    }
    if splits.is_empty() {
        return Err(LearnError::EmptyGrid);
    }
    let n = samples.len();
    for s in splits {
        if s.train.is_empty() || s.train.iter().chain(&s.test).any(|&i| i >= n) {
            return Err(LearnError::InvalidProtocol("split indices out of range".into()));
        }
    }
    let jobs: Vec<(usize, usize)> = (0..config.strategies.len())
        .flat_map(|s| (0..splits.len()).map(move |r| (s, r)))
        .collect();
    let results: Vec<Vec<AccuracyRecord>> = jobs
        .par_iter()
        .map(|&(s, run)| evaluate_job(samples, labels, config, s, run, &splits[run]))
        .collect::<Result<_, _>>()?;

    let mut records: Vec<AccuracyRecord> = Vec::new();
    let per_job = config.vectorizers.len() * config.classifiers.len();
    for s in 0..config.strategies.len() {
        for cell in 0..per_job {
            for run in 0..splits.len() {
                records.push(results[s * splits.len() + run][cell].clone());
            }
        }
    }
    Ok(AccuracyTable { records })
}

fn evaluate_job(
    samples: &[Vec<PersistenceDiagram>],
    labels: &[usize],
    config: &GridConfig,
    strategy_index: usize,
    run: usize,
    split: &Split,
) -> Result<Vec<AccuracyRecord>, LearnError> {
    let strategy = config.strategies[strategy_index];
    let train: Vec<&[PersistenceDiagram]> = split.train.iter().map(|&i| samples[i].as_slice()).collect();
    let fitted = FittedVectorizer::fit(
        &train,
        strategy,
        config.filtration_strategy,
        config.max_hom_dim,
    )?;
    let prepared = samples
        .iter()
        .map(|s| fitted.prepare(s))
        .collect::<Result<Vec<_>, _>>()?;
    let train_y: Vec<usize> = split.train.iter().map(|&i| labels[i]).collect();
    let test_y: Vec<usize> = split.test.iter().map(|&i| labels[i]).collect();

    let mut out = Vec::with_capacity(config.vectorizers.len() * config.classifiers.len());
    for (v, spec) in config.vectorizers.iter().enumerate() {
        let train_x: Vec<Vec<f64>> = split.train.iter().map(|&i| prepared[i].vectorize(spec)).collect();
        let test_x: Vec<Vec<f64>> = split.test.iter().map(|&i| prepared[i].vectorize(spec)).collect();
        for (c, clf) in config.classifiers.iter().enumerate() {
            let cell = (strategy_index * config.vectorizers.len() + v) * config.classifiers.len() + c;
            let seed = derive_seed(config.seed, &[cell as u64, run as u64]);
            let predicted = fit_predict(clf, &train_x, &train_y, &test_x, seed)?;
            out.push(AccuracyRecord {
                strategy: strategy.to_string(),
                method: spec.method(),
                vectorizer: spec.to_string(),
                classifier: clf.to_string(),
                run,
                accuracy: accuracy(&predicted, &test_y),
            });
        }
    }
    Ok(out)
}
