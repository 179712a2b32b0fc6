//! The linked twisted map benchmark through the staged pipeline.
//!
//! Usage: dynamic_experiment [ORBITS_PER_CLASS] [OUT_DIR]
//!
//! With the default of 50 orbits per class this is the full 250-orbit
//! experiment; pass a smaller number for a quick look.

use std::path::PathBuf;

use tdapipe::pipeline::{run_pipeline, DatasetConfig, RunConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let orbits: usize = args.next().map_or(50, |a| a.parse().expect("orbit count"));
    let out = PathBuf::from(args.next().unwrap_or_else(|| "dynamic-out".into()));

    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/dynamic.toml");
    let mut config = RunConfig::from_file(&path).unwrap();
    if let DatasetConfig::Dynamic { orbits: o, .. } = &mut config.dataset {
        *o = orbits;
    }
    let started = std::time::Instant::now();
    if let Err(e) = run_pipeline(&config, &out) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
    println!("{}", std::fs::read_to_string(out.join("summary.txt")).unwrap());
    println!("{}", std::fs::read_to_string(out.join("stats.txt")).unwrap());
    println!("finished in {:.1?}, outputs in {}", started.elapsed(), out.display());
}
