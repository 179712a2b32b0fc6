//! Staged experiment runner behind the `tdapipe` binary.
//!
//! Stages communicate only through files in the output directory:
//!
//! | stage       | reads                     | writes                                        |
//! |-------------|---------------------------|-----------------------------------------------|
//! | `generate`  | config                    | `dataset.txt`                                 |
//! | `diagrams`  | `dataset.txt`             | `diagrams.txt`                                |
//! | `vectorize` | `diagrams.txt`            | `splits.csv`, `ranges.json`, `vectors/*.csv`  |
//! | `train`     | `diagrams.txt`, `splits.csv` | `accuracy.csv`, `best.csv`, `summary.txt`  |
//! | `stats`     | `accuracy.csv`            | `stats.csv`, `stats.txt`                      |
//! | `plot`      | `diagrams.txt`            | `plots/*.svg`                                 |
//!
//! Every stage rewrites `manifest.json`.

pub mod artifacts;
mod compute;
pub mod config;
mod plot;

pub use compute::{FiltrationPlan, SampleOutcome};
pub use config::{
    ClassifierConfig, DatasetConfig, FiltrationConfig, FiltrationKind, PlotConfig, Resolved, RunConfig,
    VectorizeConfig,
};
pub use plot::{plot_diagram, render_svg};

use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::data::{self, DataError, Dataset};
use crate::diagram::PersistenceDiagram;
use crate::learn::{
    grid_search_with_splits, make_splits, method_stats, render_stats, write_stats_csv, AccuracyTable,
    LearnError,
};
use crate::rng::derive_seed;
use crate::vectorize::{
    collapse, write_vectors_csv, DimStrategy, FilterStrategy, FittedVectorizer, Method, VectorizeError,
};
use artifacts::*;

/// Environment variable overriding the configured output directory.
pub const OUT_ENV: &str = "TDAPIPE_OUT";
pub const DEFAULT_OUT: &str = "tdapipe-out";

const SUBSAMPLE_KEY: u64 = 0x5355_4253;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    Generate,
    Diagrams,
    Vectorize,
    Train,
    Stats,
    Plot,
}

impl Stage {
    pub const ALL: [Stage; 6] = [
        Stage::Generate,
        Stage::Diagrams,
        Stage::Vectorize,
        Stage::Train,
        Stage::Stats,
        Stage::Plot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Generate => "generate",
            Stage::Diagrams => "diagrams",
            Stage::Vectorize => "vectorize",
            Stage::Train => "train",
            Stage::Stats => "stats",
            Stage::Plot => "plot",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stage {
    type Err = PipelineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Stage::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| PipelineError::Config(format!("unknown stage `{s}`")))
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("stage `{stage}` needs {}, which does not exist; {hint}", path.display())]
    MissingStageInput {
        stage: Stage,
        path: PathBuf,
        hint: String,
    },
    #[error("stage `{stage}`, sample `{sample}`: {message}")]
    Sample {
        stage: Stage,
        sample: String,
        message: String,
    },
    #[error("stage `{stage}`: {}: line {line}: {message}", path.display())]
    Artifact {
        stage: Stage,
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("stage `{stage}`: {source}")]
    Data { stage: Stage, source: DataError },
    #[error("stage `{stage}`: {source}")]
    Learn { stage: Stage, source: LearnError },
    #[error("stage `{stage}`: {source}")]
    Vectorize { stage: Stage, source: VectorizeError },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("internal error: {0}")]
    Internal(String),
}

impl PipelineError {
    /// 1 for problems with the configuration or inputs, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Io { .. } | PipelineError::Internal(_) => 2,
            _ => 1,
        }
    }
}

impl From<VectorizeError> for PipelineError {
    fn from(e: VectorizeError) -> Self {
        PipelineError::Config(e.to_string())
    }
}

impl From<LearnError> for PipelineError {
    fn from(e: LearnError) -> Self {
        PipelineError::Config(e.to_string())
    }
}

/// `--out`, then `TDAPIPE_OUT`, then the config's `out`, then `tdapipe-out`.
pub fn output_dir(cli: Option<&Path>, config: &RunConfig) -> PathBuf {
    if let Some(p) = cli {
        return p.to_path_buf();
    }
    if let Some(p) = std::env::var_os(OUT_ENV).filter(|v| !v.is_empty()) {
        return PathBuf::from(p);
    }
    config.out.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_OUT))
}

/// A validated config bound to an output directory.
#[derive(Debug, Clone)]
pub struct Pipeline {
    config: RunConfig,
    resolved: Resolved,
    out: PathBuf,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> PipelineError + '_ {
    move |source| PipelineError::Io {
        path: path.to_path_buf(),
        source,
    }
}

impl Pipeline {
    /// Validates the config; nothing is computed or written.
    pub fn new(config: RunConfig, out: impl Into<PathBuf>) -> Result<Self, PipelineError> {
        let resolved = config.resolve()?;
        Ok(Pipeline {
            config,
            resolved,
            out: out.into(),
        })
    }

    pub fn config(&self) -> &RunConfig {
        &self.config
    }

    pub fn out_dir(&self) -> &Path {
        &self.out
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.out.join(name)
    }

    /// All stages in order.
    pub fn run(&self) -> Result<(), PipelineError> {
        for stage in Stage::ALL {
            self.run_stage(stage)?;
        }
        Ok(())
    }

    /// Runs one stage and records it in the manifest. A failed stage is
    /// recorded too, with `partial` set.
    pub fn run_stage(&self, stage: Stage) -> Result<(), PipelineError> {
        std::fs::create_dir_all(&self.out).map_err(io_err(&self.out))?;
        let manifest_path = self.path(MANIFEST_FILE);
        let mut manifest = if stage == Stage::Generate {
            Manifest::new(&self.config)
        } else {
            std::fs::read_to_string(&manifest_path)
                .ok()
                .and_then(|s| serde_json::from_str::<Manifest>(&s).ok())
                .unwrap_or_else(|| Manifest::new(&self.config))
        };
        manifest.config = self.config.clone();
        manifest.seed = self.config.seed;
        manifest.stages.retain(|s| {
            s.parse::<Stage>().is_ok_and(|s| s < stage)
        });

        let result = match stage {
            Stage::Generate => self.generate(),
            Stage::Diagrams => self.diagrams().map(|d| manifest.diagnostics = Some(d)),
            Stage::Vectorize => self.vectorize(),
            Stage::Train => self.train(),
            Stage::Stats => self.stats(),
            Stage::Plot => self.plot(),
        };
        match &result {
            Ok(()) => {
                manifest.stages.push(stage.name().to_string());
                manifest.partial = false;
                manifest.failure = None;
            }
            Err(e) => {
                manifest.partial = true;
                manifest.failure = Some(StageFailure {
                    stage: stage.name().to_string(),
                    error: e.to_string(),
                });
            }
        }
        manifest.refresh_files(&self.out).map_err(io_err(&self.out))?;
        std::fs::write(&manifest_path, manifest.to_json()).map_err(io_err(&manifest_path))?;
        result
    }

    fn require(&self, stage: Stage, name: &str, producer: Stage) -> Result<PathBuf, PipelineError> {
        let path = self.path(name);
        if path.is_file() {
            Ok(path)
        } else {
            Err(PipelineError::MissingStageInput {
                stage,
                path,
                hint: format!("run the `{producer}` stage first (tdapipe --stage {producer})"),
            })
        }
    }

    fn create(&self, name: &str) -> Result<BufWriter<File>, PipelineError> {
        let path = self.path(name);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent).map_err(io_err(parent))?;
        }
        File::create(&path).map(BufWriter::new).map_err(io_err(&path))
    }

    fn write_with(
        &self,
        name: &str,
        f: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
    ) -> Result<(), PipelineError> {
        let mut w = self.create(name)?;
        let path = self.path(name);
        f(&mut w).map_err(io_err(&path))?;
        w.flush().map_err(io_err(&path))
    }

    fn clear_dir(&self, name: &str) -> Result<(), PipelineError> {
        let dir = self.path(name);
        if dir.is_dir() {
            std::fs::remove_dir_all(&dir).map_err(io_err(&dir))?;
        }
        std::fs::create_dir_all(&dir).map_err(io_err(&dir))
    }

    fn open(&self, path: &Path) -> Result<BufReader<File>, PipelineError> {
        File::open(path).map(BufReader::new).map_err(io_err(path))
    }

    /// Builds the dataset described by the config.
    pub fn load_dataset(&self) -> Result<Dataset, PipelineError> {
        let stage = Stage::Generate;
        let data_err = |source| PipelineError::Data { stage, source };
        let seed = self.config.seed;
        match &self.config.dataset {
            DatasetConfig::Dynamic {
                r_values,
                orbits,
                points,
            } => data::generate_dynamic_dataset(r_values, *orbits, *points, seed).map_err(data_err),
            DatasetConfig::Idx {
                images,
                labels,
                subsample,
            } => {
                let d = data::load_idx(images, labels).map_err(data_err)?;
                match subsample {
                    Some(size) => data::subsample(&d, *size, derive_seed(seed, &[SUBSAMPLE_KEY])).map_err(data_err),
                    None => Ok(d),
                }
            }
            DatasetConfig::GraphEdgeList { path } => data::load_graph_edge_list(path).map_err(data_err),
            DatasetConfig::Text { path } => {
                let r = self.open(path)?;
                data::read_dataset(r).map_err(data_err)
            }
        }
    }

    fn generate(&self) -> Result<(), PipelineError> {
        let dataset = self.load_dataset()?;
        if let Some(kind) = self.config.filtration.kind {
            if !kind.accepts(dataset.kind()) {
                return Err(PipelineError::Config(format!(
                    "filtration `{}` does not apply to {} data",
                    kind.name(),
                    dataset.kind().name()
                )));
            }
        }
        self.write_with(DATASET_FILE, |w| data::write_dataset(w, &dataset))
    }

    fn read_dataset_artifact(&self, stage: Stage) -> Result<Dataset, PipelineError> {
        let path = self.require(stage, DATASET_FILE, Stage::Generate)?;
        data::read_dataset(self.open(&path)?).map_err(|source| match source {
            DataError::Parse { line, message } => PipelineError::Artifact {
                stage,
                path: path.clone(),
                line,
                message,
            },
            source => PipelineError::Data { stage, source },
        })
    }

    /// Computes every sample's diagrams.
    pub fn compute_diagrams(&self, dataset: &Dataset) -> Result<(DiagramSet, Diagnostics), PipelineError> {
        let stage = Stage::Diagrams;
        let kind = dataset.kind();
        let max_hom_dim = self.config.max_hom_dim(kind);
        if let Some(DimStrategy::Single(d)) = self
            .resolved
            .strategies
            .iter()
            .find(|s| matches!(s, DimStrategy::Single(d) if *d > max_hom_dim))
        {
            return Err(PipelineError::Config(format!(
                "strategy H{d} exceeds max_hom_dim {max_hom_dim}"
            )));
        }
        let plan = FiltrationPlan::new(&self.config.filtration, kind, max_hom_dim).map_err(PipelineError::Config)?;
        let outcomes: Vec<Result<SampleOutcome, String>> = dataset
            .samples()
            .par_iter()
            .map(|s| plan.compute(&s.payload).map_err(|e| e.to_string()))
            .collect();
        let mut diagnostics = Diagnostics {
            zero_persistence: vec![0; max_hom_dim + 1],
            rips_fallback: Vec::new(),
        };
        let mut samples = Vec::with_capacity(outcomes.len());
        for (s, outcome) in dataset.samples().iter().zip(outcomes) {
            let outcome = outcome.map_err(|message| PipelineError::Sample {
                stage,
                sample: s.id.clone(),
                message,
            })?;
            for (z, n) in diagnostics.zero_persistence.iter_mut().zip(&outcome.zero_persistence) {
                *z += n;
            }
            if outcome.fallback {
                diagnostics.rips_fallback.push(s.id.clone());
            }
            samples.push(SampleDiagrams {
                id: s.id.clone(),
                label: s.label,
                diagrams: outcome.diagrams,
            });
        }
        let set = DiagramSet {
            max_hom_dim,
            filtrations: plan.names(),
            class_names: dataset.class_names().to_vec(),
            samples,
        };
        Ok((set, diagnostics))
    }

    fn diagrams(&self) -> Result<Diagnostics, PipelineError> {
        let dataset = self.read_dataset_artifact(Stage::Diagrams)?;
        let (set, diagnostics) = self.compute_diagrams(&dataset)?;
        self.write_with(DIAGRAMS_FILE, |w| set.write(w))?;
        Ok(diagnostics)
    }

    /// Reads `diagrams.txt`.
    pub fn read_diagrams(&self, stage: Stage) -> Result<DiagramSet, PipelineError> {
        let path = self.require(stage, DIAGRAMS_FILE, Stage::Diagrams)?;
        DiagramSet::read(self.open(&path)?).map_err(|e| PipelineError::Artifact {
            stage,
            path,
            line: e.line,
            message: e.message,
        })
    }

    fn vectorize(&self) -> Result<(), PipelineError> {
        let stage = Stage::Vectorize;
        let set = self.read_diagrams(stage)?;
        let ids: Vec<String> = set.samples.iter().map(|s| s.id.clone()).collect();
        let labels = set.labels();
        let splits = make_splits(&labels, &self.config.protocol, self.config.seed)
            .map_err(|source| PipelineError::Learn { stage, source })?;
        self.write_with(SPLITS_FILE, |w| write_splits(w, &splits, &ids))?;

        let samples = set.diagrams();
        let vec_err = |source| PipelineError::Vectorize { stage, source };
        let mut ranges = Vec::new();
        let mut first_fits = Vec::new();
        for &strategy in &self.resolved.strategies {
            let runs = splits
                .iter()
                .map(|split| {
                    let train: Vec<&[PersistenceDiagram]> =
                        split.train.iter().map(|&i| samples[i].as_slice()).collect();
                    FittedVectorizer::fit(
                        &train,
                        strategy,
                        self.resolved.filtration_strategy,
                        set.max_hom_dim,
                    )
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(vec_err)?;
            first_fits.push(runs[0].clone());
            ranges.push(StrategyRanges {
                strategy: strategy.to_string(),
                runs,
            });
        }
        let doc = RangesFile {
            filtration_strategy: self.resolved.filtration_strategy,
            max_hom_dim: set.max_hom_dim,
            filtrations: set.filtrations.clone(),
            strategies: ranges,
        };
        let json = serde_json::to_string_pretty(&doc).map_err(|e| PipelineError::Internal(e.to_string()))?;
        self.write_with(RANGES_FILE, |w| writeln!(w, "{json}"))?;

        self.clear_dir(VECTORS_DIR)?;
        for (&strategy, fitted) in self.resolved.strategies.iter().zip(&first_fits) {
            let prepared = samples
                .iter()
                .map(|s| fitted.prepare(s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(vec_err)?;
            for method in Method::ALL {
                let Some(spec) = self.resolved.vectorizers.iter().find(|v| v.method() == method) else {
                    continue;
                };
                let rows: Vec<(String, usize, Vec<f64>)> = set
                    .samples
                    .iter()
                    .zip(&prepared)
                    .map(|(s, p)| (s.id.clone(), s.label, p.vectorize(spec)))
                    .collect();
                let name = format!("{VECTORS_DIR}/{strategy}_{method}.csv");
                self.write_with(&name, |w| write_vectors_csv(w, &rows))?;
            }
        }
        Ok(())
    }

    /// Runs the grid search on the stored diagrams and splits.
    pub fn evaluate(&self) -> Result<AccuracyTable, PipelineError> {
        let stage = Stage::Train;
        let set = self.read_diagrams(stage)?;
        let path = self.require(stage, SPLITS_FILE, Stage::Vectorize)?;
        let ids: Vec<String> = set.samples.iter().map(|s| s.id.clone()).collect();
        let splits = read_splits(self.open(&path)?, &ids).map_err(|e| PipelineError::Artifact {
            stage,
            path: path.clone(),
            line: e.line,
            message: e.message,
        })?;
        let grid = self.config.grid_config(&self.resolved, set.max_hom_dim);
        grid_search_with_splits(&set.diagrams(), &set.labels(), &grid, &splits)
            .map_err(|source| PipelineError::Learn { stage, source })
    }

    fn train(&self) -> Result<(), PipelineError> {
        let table = self.evaluate()?;
        self.write_with(ACCURACY_FILE, |w| table.write_csv(w))?;
        self.write_with(BEST_FILE, |w| table.write_best_csv(w))?;
        self.write_with(SUMMARY_FILE, |w| {
            writeln!(w, "Best accuracy per run")?;
            write!(w, "{}", table.render_runs())?;
            writeln!(w)?;
            writeln!(w, "Best fixed combination (mean ± std over runs)")?;
            write!(w, "{}", table.render_best())
        })
    }

    /// Reads `accuracy.csv`.
    pub fn read_accuracy(&self, stage: Stage) -> Result<AccuracyTable, PipelineError> {
        let path = self.require(stage, ACCURACY_FILE, Stage::Train)?;
        AccuracyTable::read_csv(self.open(&path)?).map_err(|e| match e {
            LearnError::Parse { line, message } => PipelineError::Artifact {
                stage,
                path,
                line,
                message,
            },
            source => PipelineError::Learn { stage, source },
        })
    }

    fn stats(&self) -> Result<(), PipelineError> {
        let stage = Stage::Stats;
        let table = self.read_accuracy(stage)?;
        let rows = method_stats(&table).map_err(|source| PipelineError::Learn { stage, source })?;
        self.write_with(STATS_FILE, |w| write_stats_csv(w, &rows))?;
        self.write_with(STATS_TABLE_FILE, |w| {
            writeln!(w, "Welch t-test p-values between the best combination of each method")?;
            write!(w, "{}", render_stats(&rows))
        })
    }

    fn plot(&self) -> Result<(), PipelineError> {
        let stage = Stage::Plot;
        let set = self.read_diagrams(stage)?;
        let chosen: Vec<&SampleDiagrams> = if self.config.plot.samples.is_empty() {
            (0..set.class_names.len())
                .filter_map(|c| set.samples.iter().find(|s| s.label == c))
                .collect()
        } else {
            self.config
                .plot
                .samples
                .iter()
                .map(|id| {
                    set.samples
                        .iter()
                        .find(|s| &s.id == id)
                        .ok_or_else(|| PipelineError::Config(format!("no sample `{id}` to plot")))
                })
                .collect::<Result<_, _>>()?
        };
        let global_max = set
            .samples
            .iter()
            .flat_map(|s| &s.diagrams)
            .filter_map(PersistenceDiagram::max_finite_value)
            .fold(0.0, f64::max);
        self.clear_dir(PLOTS_DIR)?;
        for s in chosen {
            let mut d = PersistenceDiagram::default();
            for p in collapse(&s.diagrams).points() {
                let mut p = *p;
                if p.is_essential() {
                    p.death = global_max.max(p.birth);
                }
                d.push(p);
            }
            let title = format!("{} ({})", s.id, set.class_names[s.label]);
            let path = self.path(&format!("{PLOTS_DIR}/{}.svg", file_safe(&s.id)));
            plot_diagram(&d, &title, &path).map_err(io_err(&path))?;
        }
        Ok(())
    }
}

#[derive(Debug, Serialize)]
struct StrategyRanges {
    strategy: String,
    runs: Vec<FittedVectorizer>,
}

/// Contents of `ranges.json`: the fitted regularization and grid ranges for
/// every strategy and run.
#[derive(Debug, Serialize)]
struct RangesFile {
    filtration_strategy: FilterStrategy,
    max_hom_dim: usize,
    filtrations: Vec<String>,
    strategies: Vec<StrategyRanges>,
}

fn file_safe(id: &str) -> String {
    id.chars()
        .map(|c| if c.is_ascii_alphanumeric() || "-_.".contains(c) { c } else { '_' })
        .collect()
}

/// Runs `stages` (all of them when empty) on a rayon pool of `threads`
/// workers, or the global pool when `None`.
pub fn execute(pipeline: &Pipeline, stages: &[Stage], threads: Option<usize>) -> Result<(), PipelineError> {
    let work = || -> Result<(), PipelineError> {
        if stages.is_empty() {
            pipeline.run()
        } else {
            stages.iter().try_for_each(|&s| pipeline.run_stage(s))
        }
    };
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| PipelineError::Internal(e.to_string()))?
            .install(work),
        None => work(),
    }
}

/// Validates `config` and runs every stage into `out`.
pub fn run_pipeline(config: &RunConfig, out: &Path) -> Result<(), PipelineError> {
    let pipeline = Pipeline::new(config.clone(), out)?;
    execute(&pipeline, &[], config.threads)
}
