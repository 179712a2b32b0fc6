use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::PipelineError;
use crate::data::{
    PayloadKind, Subsample, DEFAULT_ORBITS_PER_CLASS, DEFAULT_POINTS_PER_ORBIT, DEFAULT_R_VALUES,
};
use crate::filtrations::{
    DEFAULT_BINARIZE_THRESHOLD, DEFAULT_DENSITY_RADIUS, HEIGHT_DIRECTIONS, RADIAL_CENTERS,
};
use crate::learn::{ClassifierSpec, GridConfig, Protocol};
use crate::vectorize::{DimStrategy, FilterStrategy, Method, VectorizerSpec};

pub const DEFAULT_SEED: u64 = 42;

/// A full experiment, read from TOML.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// Output directory; `--out` and `TDAPIPE_OUT` take precedence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    pub dataset: DatasetConfig,
    #[serde(default)]
    pub filtration: FiltrationConfig,
    #[serde(default)]
    pub vectorize: VectorizeConfig,
    #[serde(default)]
    pub classifiers: ClassifierConfig,
    #[serde(default)]
    pub protocol: Protocol,
    #[serde(default)]
    pub plot: PlotConfig,
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DatasetConfig {
    /// Orbits of the linked twisted map, one class per value of r.
    Dynamic {
        #[serde(default = "default_r_values")]
        r_values: Vec<f64>,
        #[serde(default = "default_orbits")]
        orbits: usize,
        #[serde(default = "default_points")]
        points: usize,
    },
    /// A pair of IDX files, optionally subsampled.
    Idx {
        images: PathBuf,
        labels: PathBuf,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subsample: Option<Subsample>,
    },
    GraphEdgeList { path: PathBuf },
    /// A dataset in the text format written by the generate stage.
    Text { path: PathBuf },
}

fn default_r_values() -> Vec<f64> {
    DEFAULT_R_VALUES.to_vec()
}

fn default_orbits() -> usize {
    DEFAULT_ORBITS_PER_CLASS
}

fn default_points() -> usize {
    DEFAULT_POINTS_PER_ORBIT
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiltrationKind {
    Alpha,
    Rips,
    Greyscale,
    /// Height, radial and density filtrations of the binarized image.
    ImageMulti,
    Flag,
}

impl FiltrationKind {
    pub fn default_for(kind: PayloadKind) -> Self {
        match kind {
            PayloadKind::PointCloud => FiltrationKind::Alpha,
            PayloadKind::Image => FiltrationKind::ImageMulti,
            PayloadKind::Graph => FiltrationKind::Flag,
        }
    }

    pub fn accepts(self, kind: PayloadKind) -> bool {
        matches!(
            (self, kind),
            (FiltrationKind::Alpha | FiltrationKind::Rips, PayloadKind::PointCloud)
                | (FiltrationKind::Greyscale | FiltrationKind::ImageMulti, PayloadKind::Image)
                | (FiltrationKind::Flag, PayloadKind::Graph)
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            FiltrationKind::Alpha => "alpha",
            FiltrationKind::Rips => "rips",
            FiltrationKind::Greyscale => "greyscale",
            FiltrationKind::ImageMulti => "image_multi",
            FiltrationKind::Flag => "flag",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiltrationConfig {
    /// Defaults by payload: alpha for point clouds, image_multi for images,
    /// flag for graphs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<FiltrationKind>,
    /// Defaults to 2 for graphs and 1 otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_hom_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rips_max_radius: Option<f64>,
    #[serde(default = "default_threshold")]
    pub threshold: f64,
    /// Height directions as (row, col); normalized before use.
    #[serde(default = "default_directions")]
    pub directions: Vec<[f64; 2]>,
    #[serde(default = "default_centers")]
    pub centers: Vec<[i64; 2]>,
    #[serde(default = "default_true")]
    pub density: bool,
    #[serde(default = "default_density_radius")]
    pub density_radius: f64,
    /// Largest clique simplex dimension; defaults to max_hom_dim + 1, at most 3.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag_max_dim: Option<usize>,
}

impl Default for FiltrationConfig {
    fn default() -> Self {
        FiltrationConfig {
            kind: None,
            max_hom_dim: None,
            rips_max_radius: None,
            threshold: default_threshold(),
            directions: default_directions(),
            centers: default_centers(),
            density: true,
            density_radius: default_density_radius(),
            flag_max_dim: None,
        }
    }
}

fn default_threshold() -> f64 {
    DEFAULT_BINARIZE_THRESHOLD
}

fn default_directions() -> Vec<[f64; 2]> {
    HEIGHT_DIRECTIONS.iter().map(|&(r, c)| [r, c]).collect()
}

fn default_centers() -> Vec<[i64; 2]> {
    RADIAL_CENTERS.iter().map(|&(r, c)| [r, c]).collect()
}

fn default_true() -> bool {
    true
}

fn default_density_radius() -> f64 {
    DEFAULT_DENSITY_RADIUS
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorizeConfig {
    /// Methods whose default parameter grids are evaluated.
    #[serde(default = "default_methods")]
    pub methods: Vec<String>,
    /// Explicit vectorizers such as `PI(n=10;sigma=1)`; replaces `methods`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vectorizers: Option<Vec<String>>,
    /// Defaults to H0..Hk, fused and concat.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategies: Option<Vec<String>>,
    #[serde(default = "default_filtration_strategy")]
    pub filtration_strategy: String,
}

impl Default for VectorizeConfig {
    fn default() -> Self {
        VectorizeConfig {
            methods: default_methods(),
            vectorizers: None,
            strategies: None,
            filtration_strategy: default_filtration_strategy(),
        }
    }
}

fn default_methods() -> Vec<String> {
    Method::ALL.iter().map(|m| m.to_string()).collect()
}

fn default_filtration_strategy() -> String {
    "collapse".into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ClassifierConfig {
    /// Classifier names such as `ridge(lambda=1)`, `knn(k=3)` or
    /// `forest(trees=100)`. Defaults to the standard roster.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roster: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct PlotConfig {
    /// Sample ids to plot; by default the first sample of each class.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<String>,
}

/// Typed, checked view of a [`RunConfig`].
#[derive(Debug, Clone, PartialEq)]
pub struct Resolved {
    pub vectorizers: Vec<VectorizerSpec>,
    pub classifiers: Vec<ClassifierSpec>,
    pub strategies: Vec<DimStrategy>,
    pub filtration_strategy: FilterStrategy,
    /// Known once the payload kind is; `None` for text datasets.
    pub payload: Option<PayloadKind>,
}

fn invalid(msg: impl Into<String>) -> PipelineError {
    PipelineError::Config(msg.into())
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, PipelineError> {
        let config: RunConfig = toml::from_str(text).map_err(|e| invalid(e.to_string()))?;
        config.resolve()?;
        Ok(config)
    }

    /// Reads a config file; relative dataset paths are taken relative to the
    /// file's directory.
    pub fn from_file(path: &Path) -> Result<Self, PipelineError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
        let mut config = Self::from_toml(&text)?;
        if let Some(base) = path.parent() {
            config.rebase(base);
        }
        Ok(config)
    }

    fn rebase(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        match &mut self.dataset {
            DatasetConfig::Dynamic { .. } => {}
            DatasetConfig::Idx { images, labels, .. } => {
                fix(images);
                fix(labels);
            }
            DatasetConfig::GraphEdgeList { path } | DatasetConfig::Text { path } => fix(path),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn payload_kind(&self) -> Option<PayloadKind> {
        match self.dataset {
            DatasetConfig::Dynamic { .. } => Some(PayloadKind::PointCloud),
            DatasetConfig::Idx { .. } => Some(PayloadKind::Image),
            DatasetConfig::GraphEdgeList { .. } => Some(PayloadKind::Graph),
            DatasetConfig::Text { .. } => None,
        }
    }

    pub fn max_hom_dim(&self, payload: PayloadKind) -> usize {
        self.filtration.max_hom_dim.unwrap_or(match payload {
            PayloadKind::Graph => 2,
            _ => 1,
        })
    }

    /// Checks every name and range without touching any data.
    pub fn resolve(&self) -> Result<Resolved, PipelineError> {
        match &self.dataset {
            DatasetConfig::Dynamic {
                r_values,
                orbits,
                points,
            } => {
                if r_values.is_empty() || *orbits == 0 || *points == 0 {
                    return Err(invalid("dynamic dataset needs r values, orbits and points"));
                }
            }
            DatasetConfig::Idx {
                subsample: Some(Subsample::Total(0) | Subsample::PerClass(0)),
                ..
            } => return Err(invalid("subsample size must be positive")),
            _ => {}
        }
        if self.threads == Some(0) {
            return Err(invalid("threads must be at least 1"));
        }

        let payload = self.payload_kind();
        let f = &self.filtration;
        if let (Some(kind), Some(p)) = (f.kind, payload) {
            if !kind.accepts(p) {
                return Err(invalid(format!(
                    "filtration `{}` does not apply to {} data",
                    kind.name(),
                    p.name()
                )));
            }
        }
        if !(f.threshold.is_finite()) {
            return Err(invalid("threshold must be finite"));
        }
        if f.rips_max_radius.is_some_and(|r| r.is_nan() || r <= 0.0) {
            return Err(invalid("rips_max_radius must be positive"));
        }
        if f.density && !(f.density_radius > 0.0) {
            return Err(invalid("density_radius must be positive"));
        }
        if f.directions.iter().any(|d| d[0] == 0.0 && d[1] == 0.0 || !d[0].is_finite() || !d[1].is_finite()) {
            return Err(invalid("height directions must be finite and non-zero"));
        }
        if f.flag_max_dim.is_some_and(|d| d > 3) {
            return Err(invalid("flag_max_dim is at most 3"));
        }
        if f.kind == Some(FiltrationKind::ImageMulti) && f.directions.is_empty() && f.centers.is_empty() && !f.density {
            return Err(invalid("image_multi needs at least one filtration"));
        }

        let vectorizers: Vec<VectorizerSpec> = match &self.vectorize.vectorizers {
            Some(names) => names
                .iter()
                .map(|n| n.parse::<VectorizerSpec>())
                .collect::<Result<_, _>>()?,
            None => {
                let methods = self
                    .vectorize
                    .methods
                    .iter()
                    .map(|n| n.parse::<Method>())
                    .collect::<Result<Vec<_>, _>>()?;
                methods.into_iter().flat_map(Method::default_grid).collect()
            }
        };
        if vectorizers.is_empty() {
            return Err(invalid("no vectorizers configured"));
        }

        let strategies: Vec<DimStrategy> = match &self.vectorize.strategies {
            Some(names) => names
                .iter()
                .map(|n| n.parse::<DimStrategy>())
                .collect::<Result<_, _>>()?,
            None => {
                let k = payload.map_or(1, |p| self.max_hom_dim(p));
                (0..=k)
                    .map(DimStrategy::Single)
                    .chain([DimStrategy::Fused, DimStrategy::Concat])
                    .collect()
            }
        };
        if strategies.is_empty() {
            return Err(invalid("no dimension strategies configured"));
        }
        if let Some(p) = payload {
            let k = self.max_hom_dim(p);
            if let Some(DimStrategy::Single(d)) =
                strategies.iter().find(|s| matches!(s, DimStrategy::Single(d) if *d > k))
            {
                return Err(invalid(format!("strategy H{d} exceeds max_hom_dim {k}")));
            }
        }

        let filtration_strategy: FilterStrategy = self.vectorize.filtration_strategy.parse()?;

        let classifiers: Vec<ClassifierSpec> = match &self.classifiers.roster {
            Some(names) => names
                .iter()
                .map(|n| n.parse::<ClassifierSpec>())
                .collect::<Result<_, _>>()?,
            None => ClassifierSpec::default_roster(),
        };
        if classifiers.is_empty() {
            return Err(invalid("no classifiers configured"));
        }
        for c in &classifiers {
            c.validate()?;
        }
        self.protocol.validate()?;

        Ok(Resolved {
            vectorizers,
            classifiers,
            strategies,
            filtration_strategy,
            payload,
        })
    }

    pub fn grid_config(&self, resolved: &Resolved, max_hom_dim: usize) -> GridConfig {
        GridConfig {
            vectorizers: resolved.vectorizers.clone(),
            classifiers: resolved.classifiers.clone(),
            strategies: resolved.strategies.clone(),
            filtration_strategy: resolved.filtration_strategy,
            max_hom_dim,
            protocol: self.protocol,
            seed: self.seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_gets_defaults() {
        let c = RunConfig::from_toml("[dataset]\nkind = \"dynamic\"\n").unwrap();
        assert_eq!(c.seed, DEFAULT_SEED);
        let r = c.resolve().unwrap();
        assert_eq!(r.vectorizers.len(), 21);
        assert_eq!(r.classifiers.len(), 7);
        assert_eq!(
            r.strategies,
            vec![
                DimStrategy::Single(0),
                DimStrategy::Single(1),
                DimStrategy::Fused,
                DimStrategy::Concat
            ]
        );
        assert_eq!(c.protocol.runs(), 10);
    }

    #[test]
    fn unknown_names_are_rejected() {
        let base = "[dataset]\nkind = \"dynamic\"\n";
        for extra in [
            "[vectorize]\nmethods = [\"PX\"]\n",
            "[vectorize]\nvectorizers = [\"PI(n=5)\"]\n",
            "[vectorize]\nstrategies = [\"H7\"]\n",
            "[vectorize]\nfiltration_strategy = \"stack\"\n",
            "[classifiers]\nroster = [\"svm(c=1)\"]\n",
            "[filtration]\nkind = \"flag\"\n",
            "[filtration]\nbogus = 1\n",
            "[protocol]\nkind = \"monte_carlo\"\nruns = 3\ntest_fraction = 1.5\n",
        ] {
            let err = RunConfig::from_toml(&format!("{base}{extra}")).unwrap_err();
            assert_eq!(err.exit_code(), 1, "{extra}");
        }
    }

    #[test]
    fn toml_round_trip() {
        let text = "seed = 7\n[dataset]\nkind = \"idx\"\nimages = \"a\"\nlabels = \"b\"\n\
                    subsample = { per_class = 10 }\n[protocol]\nkind = \"k_fold\"\nfolds = 5\n";
        let c = RunConfig::from_toml(text).unwrap();
        assert_eq!(RunConfig::from_toml(&c.to_toml()).unwrap(), c);
        assert_eq!(c.resolve().unwrap().payload, Some(PayloadKind::Image));
    }
}
