//! Greyscale versus eighteen-filtration multivector features on an MNIST
//! subsample.
//!
//! Usage: mnist_pipeline IMAGES.idx LABELS.idx [SAMPLES] [OUT_DIR]
//!
//! SAMPLES defaults to 625, split 500/125 over 5 runs.

use std::path::PathBuf;

use tdapipe::data::Subsample;
use tdapipe::pipeline::{run_pipeline, DatasetConfig, FiltrationKind, RunConfig};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.len() < 2 {
        eprintln!("usage: mnist_pipeline IMAGES.idx LABELS.idx [SAMPLES] [OUT_DIR]");
        std::process::exit(1);
    }
    let samples: usize = args.get(2).map_or(625, |s| s.parse().expect("sample count"));
    let out = PathBuf::from(args.get(3).cloned().unwrap_or_else(|| "mnist-out".into()));

    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/mnist.toml");
    let mut base = RunConfig::from_file(&path).unwrap();
    base.dataset = DatasetConfig::Idx {
        images: PathBuf::from(&args[0]),
        labels: PathBuf::from(&args[1]),
        subsample: Some(Subsample::Total(samples)),
    };

    for (name, kind, strategy) in [
        ("greyscale", FiltrationKind::Greyscale, "collapse"),
        ("multivector", FiltrationKind::ImageMulti, "multivector"),
    ] {
        let mut config = base.clone();
        config.filtration.kind = Some(kind);
        config.vectorize.filtration_strategy = strategy.into();
        let dir = out.join(name);
        if let Err(e) = run_pipeline(&config, &dir) {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
        println!("== {name}");
        println!("{}", std::fs::read_to_string(dir.join("summary.txt")).unwrap());
    }
}
