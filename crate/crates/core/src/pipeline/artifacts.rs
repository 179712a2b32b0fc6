//! On-disk formats shared by the stages.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::config::RunConfig;
use crate::diagram::{parse_point_line, PersistenceDiagram};
use crate::learn::Split;

pub const DATASET_FILE: &str = "dataset.txt";
pub const DIAGRAMS_FILE: &str = "diagrams.txt";
pub const SPLITS_FILE: &str = "splits.csv";
pub const RANGES_FILE: &str = "ranges.json";
pub const VECTORS_DIR: &str = "vectors";
pub const ACCURACY_FILE: &str = "accuracy.csv";
pub const BEST_FILE: &str = "best.csv";
pub const SUMMARY_FILE: &str = "summary.txt";
pub const STATS_FILE: &str = "stats.csv";
pub const STATS_TABLE_FILE: &str = "stats.txt";
pub const PLOTS_DIR: &str = "plots";
pub const MANIFEST_FILE: &str = "manifest.json";

/// A parse failure in one of the artifact files.
#[derive(Debug, Clone, PartialEq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn format_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleDiagrams {
    pub id: String,
    pub label: usize,
    /// One diagram per filtration.
    pub diagrams: Vec<PersistenceDiagram>,
}

/// Every sample's diagrams with the filtration names and class names.
///
/// Text layout:
///
/// ```text
/// max_hom_dim 1
/// filtration alpha
/// class r=2
/// sample r0_o0 0
/// diagram 0 2
/// 0 0 0.01
/// 0 0 inf
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramSet {
    pub max_hom_dim: usize,
    pub filtrations: Vec<String>,
    pub class_names: Vec<String>,
    pub samples: Vec<SampleDiagrams>,
}

impl DiagramSet {
    pub fn labels(&self) -> Vec<usize> {
        self.samples.iter().map(|s| s.label).collect()
    }

    pub fn diagrams(&self) -> Vec<Vec<PersistenceDiagram>> {
        self.samples.iter().map(|s| s.diagrams.clone()).collect()
    }

    pub fn write<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "max_hom_dim {}", self.max_hom_dim)?;
        for f in &self.filtrations {
            writeln!(w, "filtration {f}")?;
        }
        for c in &self.class_names {
            writeln!(w, "class {c}")?;
        }
        for s in &self.samples {
            writeln!(w, "sample {} {}", s.id, s.label)?;
            for (i, d) in s.diagrams.iter().enumerate() {
                writeln!(w, "diagram {i} {}", d.len())?;
                d.write_text(&mut w)?;
            }
        }
        Ok(())
    }

    pub fn read<R: BufRead>(r: R) -> Result<Self, FormatError> {
        let mut set = DiagramSet {
            max_hom_dim: 0,
            filtrations: Vec::new(),
            class_names: Vec::new(),
            samples: Vec::new(),
        };
        let mut seen_header = false;
        // points still expected for the current diagram
        let mut pending = 0usize;
        for (i, line) in r.lines().enumerate() {
            let n = i + 1;
            let line = line.map_err(|e| format_error(n, e.to_string()))?;
            if pending > 0 {
                let p = parse_point_line(&line).map_err(|m| format_error(n, m))?;
                let sample = set.samples.last_mut().expect("diagram belongs to a sample");
                sample.diagrams.last_mut().expect("point belongs to a diagram").push(p);
                pending -= 1;
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(' ').unwrap_or((line.as_str(), ""));
            match key {
                "max_hom_dim" => {
                    set.max_hom_dim = rest.trim().parse().map_err(|_| format_error(n, "bad max_hom_dim"))?;
                    seen_header = true;
                }
                "filtration" => set.filtrations.push(rest.to_string()),
                "class" => set.class_names.push(rest.to_string()),
                "sample" => {
                    let (id, label) = rest
                        .rsplit_once(' ')
                        .ok_or_else(|| format_error(n, "expected `sample <id> <label>`"))?;
                    let label: usize = label.parse().map_err(|_| format_error(n, "bad label"))?;
                    if label >= set.class_names.len() {
                        return Err(format_error(n, format!("label {label} has no class")));
                    }
                    set.samples.push(SampleDiagrams {
                        id: id.to_string(),
                        label,
                        diagrams: Vec::new(),
                    });
                }
                "diagram" => {
                    let sample = set
                        .samples
                        .last_mut()
                        .ok_or_else(|| format_error(n, "diagram before any sample"))?;
                    let mut it = rest.split_whitespace();
                    let (Some(index), Some(count), None) = (it.next(), it.next(), it.next()) else {
                        return Err(format_error(n, "expected `diagram <index> <count>`"));
                    };
                    if index.parse::<usize>().ok() != Some(sample.diagrams.len()) {
                        return Err(format_error(n, "diagram index out of order"));
                    }
                    pending = count.parse().map_err(|_| format_error(n, "bad point count"))?;
                    let mut d = PersistenceDiagram::default();
                    d.source = Some(sample.id.clone());
                    d.filtration = set.filtrations.get(sample.diagrams.len()).cloned();
                    sample.diagrams.push(d);
                }
                _ => return Err(format_error(n, format!("unexpected line `{line}`"))),
            }
        }
        if pending > 0 {
            return Err(format_error(0, "file ends inside a diagram"));
        }
        if !seen_header || set.filtrations.is_empty() {
            return Err(format_error(1, "missing max_hom_dim or filtration header"));
        }
        if let Some(s) = set.samples.iter().find(|s| s.diagrams.len() != set.filtrations.len()) {
            return Err(format_error(
                0,
                format!(
                    "sample {} has {} diagrams for {} filtrations",
                    s.id,
                    s.diagrams.len(),
                    set.filtrations.len()
                ),
            ));
        }
        Ok(set)
    }
}

/// `run,index,sample_id,role` rows, one per sample and run.
pub fn write_splits<W: Write>(mut w: W, splits: &[Split], ids: &[String]) -> std::io::Result<()> {
    writeln!(w, "run,index,sample_id,role")?;
    for (run, s) in splits.iter().enumerate() {
        let mut rows: Vec<(usize, &str)> = s
            .train
            .iter()
            .map(|&i| (i, "train"))
            .chain(s.test.iter().map(|&i| (i, "test")))
            .collect();
        rows.sort_unstable();
        for (i, role) in rows {
            writeln!(w, "{run},{i},{},{role}", ids[i])?;
        }
    }
    Ok(())
}

/// Reads splits back, checking indices against `ids`.
pub fn read_splits<R: BufRead>(r: R, ids: &[String]) -> Result<Vec<Split>, FormatError> {
    let mut splits: Vec<Split> = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let n = i + 1;
        let line = line.map_err(|e| format_error(n, e.to_string()))?;
        if i == 0 {
            if line.trim() != "run,index,sample_id,role" {
                return Err(format_error(n, "unexpected header"));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        let [run, index, id, role] = f[..] else {
            return Err(format_error(n, "expected 4 fields"));
        };
        let run: usize = run.parse().map_err(|_| format_error(n, "bad run"))?;
        let index: usize = index.parse().map_err(|_| format_error(n, "bad index"))?;
        if ids.get(index).map(String::as_str) != Some(id) {
            return Err(format_error(n, format!("sample {id} is not at index {index}")));
        }
        if run > splits.len() {
            return Err(format_error(n, "runs out of order"));
        }
        if run == splits.len() {
            splits.push(Split {
                train: Vec::new(),
                test: Vec::new(),
            });
        }
        match role {
            "train" => splits[run].train.push(index),
            "test" => splits[run].test.push(index),
            _ => return Err(format_error(n, format!("unknown role `{role}`"))),
        }
    }
    if splits.is_empty() {
        return Err(format_error(1, "no splits"));
    }
    Ok(splits)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Counts gathered while computing diagrams.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Zero-length pairs dropped, per homology dimension, over all samples.
    pub zero_persistence: Vec<usize>,
    /// Samples whose collinear point cloud was filtered with Rips instead of
    /// the alpha construction.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rips_fallback: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageFailure {
    pub stage: String,
    pub error: String,
}

/// Machine-readable record of a run. Deliberately free of timestamps so that
/// identical runs give identical manifests.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub config: RunConfig,
    /// Completed stages in pipeline order.
    pub stages: Vec<String>,
    /// Set when a stage failed; outputs of later stages are missing or stale.
    pub partial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<StageFailure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
    /// Relative path to SHA-256 of every file in the output directory.
    pub files: BTreeMap<String, String>,
}

impl Manifest {
    pub fn new(config: &RunConfig) -> Self {
        Manifest {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            seed: config.seed,
            config: config.clone(),
            stages: Vec::new(),
            partial: false,
            failure: None,
            diagnostics: None,
            files: BTreeMap::new(),
        }
    }

    /// Hashes every file under `dir` except the manifest itself.
    pub fn refresh_files(&mut self, dir: &Path) -> std::io::Result<()> {
        self.files.clear();
        let mut stack = vec![dir.to_path_buf()];
        while let Some(d) = stack.pop() {
            for entry in std::fs::read_dir(&d)? {
                let path = entry?.path();
                if path.is_dir() {
                    stack.push(path);
                    continue;
                }
                let rel = path
                    .strip_prefix(dir)
                    .expect("under the output directory")
                    .components()
                    .map(|c| c.as_os_str().to_string_lossy())
                    .collect::<Vec<_>>()
                    .join("/");
                if rel == MANIFEST_FILE {
                    continue;
                }
                self.files.insert(rel, sha256_hex(&std::fs::read(&path)?));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }
}
