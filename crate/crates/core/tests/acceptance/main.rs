//! Acceptance checks, one PASS/FAIL/SKIP line per criterion.
//!
//! Criterion 7 needs MNIST IDX files: set `TDAPIPE_MNIST_DIR` to a directory
//! holding `train-images-idx3-ubyte` and `train-labels-idx1-ubyte`.

mod oracles;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use tdapipe::complex::{FaceCompletion, FilteredComplex, Simplex};
use tdapipe::data::Subsample;
use tdapipe::diagram::{bottleneck_distance, wasserstein_distance, PersistenceDiagram, PersistencePoint};
use tdapipe::filtrations::{image_complex, GreyImage};
use tdapipe::learn::{method_stats, welch_t_test, AccuracyRecord, AccuracyTable};
use tdapipe::persistence::{betti_at, compute_persistence};
use tdapipe::pipeline::{run_pipeline, DatasetConfig, FiltrationKind, RunConfig};
use tdapipe::rng::{derive_seed, rng_from_seed, Xoshiro256PlusPlus};
use tdapipe::vectorize::{
    betti_curve, fit_range, persistence_landscape, silhouette, Method, Range, VectorizerSpec,
};

const SEED: u64 = 20_240_601;

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn within(elapsed: Duration, limit: f64, detail: String) -> Outcome {
    let secs = elapsed.as_secs_f64();
    check(secs < limit, format!("{detail}; {secs:.2}s (limit {limit}s)"))
}

fn rng(criterion: u64) -> Xoshiro256PlusPlus {
    rng_from_seed(derive_seed(SEED, &[criterion]))
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

// 1

fn closed_complex(tops: &[Vec<u32>]) -> FilteredComplex {
    let mut k = FilteredComplex::new();
    for t in tops {
        k.add_simplex(Simplex::new(t.iter().copied()).unwrap(), 0.0, FaceCompletion::Insert)
            .unwrap();
    }
    k
}

fn ranks(tops: &[Vec<u32>]) -> Vec<usize> {
    let k = closed_complex(tops);
    betti_at(&compute_persistence(&k, 2).unwrap().diagrams, 0.0)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let octahedron: Vec<Vec<u32>> = [
        [0, 2, 4], [0, 2, 5], [0, 3, 4], [0, 3, 5],
        [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5],
    ]
    .iter()
    .map(|t| t.to_vec())
    .collect();
    // seven-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7
    let torus: Vec<Vec<u32>> = (0..7u32)
        .flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]])
        .collect();
    let (o, t) = (ranks(&octahedron), ranks(&torus));
    let ok = o == [1, 0, 1] && t == [1, 2, 1];
    let elapsed = start.elapsed();
    if !ok {
        return Outcome::Fail(format!("octahedron {o:?}, torus {t:?}"));
    }
    within(elapsed, 1.0, format!("octahedron {o:?}, torus {t:?}"))
}

// 2

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(2);
    let mut probes = 0;
    for case in 0..200 {
        let f = oracles::random_filtration(&mut rng, 8, 3, 50);
        let mut k = FilteredComplex::new();
        for (s, v) in &f {
            k.add_simplex(Simplex::new(s.iter().copied()).unwrap(), *v, FaceCompletion::Require)
                .unwrap();
        }
        let diagrams = compute_persistence(&k, 3).unwrap().diagrams;
        for (t, expected) in oracles::sublevel_betti(&f, 3) {
            probes += 1;
            let got = betti_at(&diagrams, t);
            if got != expected {
                return Outcome::Fail(format!("case {case} at t={t}: reduction {got:?}, elimination {expected:?}"));
            }
        }
    }
    within(start.elapsed(), 30.0, format!("200 complexes, {probes} critical values"))
}

// 3

fn random_pairs(rng: &mut impl Rng, max: usize) -> Vec<(f64, f64)> {
    (0..rng.random_range(0..=max))
        .map(|_| {
            let b = rng.random_range(0.0..10.0);
            (b, b + rng.random_range(0.0..5.0))
        })
        .collect()
}

fn diagram(pairs: &[(f64, f64)]) -> PersistenceDiagram {
    PersistenceDiagram::from_pairs(0, pairs.iter().copied()).unwrap()
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(3);
    let mut worst: f64 = 0.0;
    for case in 0..200 {
        let (a, b) = (random_pairs(&mut rng, 6), random_pairs(&mut rng, 6));
        let (da, db) = (diagram(&a), diagram(&b));
        let errors = [
            bottleneck_distance(&da, &db) - oracles::brute_bottleneck(&a, &b),
            wasserstein_distance(&da, &db, 1.0).unwrap() - oracles::brute_wasserstein(&a, &b, 1.0),
            wasserstein_distance(&da, &db, 2.0).unwrap() - oracles::brute_wasserstein(&a, &b, 2.0),
        ];
        for e in errors {
            worst = worst.max(e.abs());
        }
        if worst > 1e-9 {
            return Outcome::Fail(format!("case {case}: error {worst:e}"));
        }
    }
    within(start.elapsed(), 30.0, format!("200 pairs, max error {worst:e}"))
}

// 4

fn image_diagrams(img: &GreyImage) -> Vec<PersistenceDiagram> {
    compute_persistence(&image_complex(img), 1).unwrap().diagrams
}

fn criterion_4() -> Outcome {
    let mut rng = rng(4);
    let eps = 0.01;
    let mut worst: f64 = 0.0;
    for case in 0..100 {
        let pixels: Vec<f64> = (0..64).map(|_| rng.random::<f64>()).collect();
        let mut noise: Vec<f64> = (0..64).map(|_| rng.random_range(-eps..=eps)).collect();
        // make the sup norm exactly eps
        let at = rng.random_range(0..64);
        noise[at] = if rng.random::<bool>() { eps } else { -eps };
        let a = GreyImage::new(8, 8, pixels.clone()).unwrap();
        let b = GreyImage::new(8, 8, pixels.iter().zip(&noise).map(|(p, n)| p + n).collect()).unwrap();
        for (dim, (x, y)) in image_diagrams(&a).iter().zip(&image_diagrams(&b)).enumerate() {
            let d = bottleneck_distance(x, y);
            worst = worst.max(d);
            if d > eps + 1e-9 {
                return Outcome::Fail(format!("image {case}, H{dim}: bottleneck {d}"));
            }
        }
    }
    check(true, format!("100 images, largest bottleneck {worst:.6}"))
}

// 5 and 9

fn dynamic_config() -> RunConfig {
    RunConfig::from_file(&manifest_dir().join("examples/dynamic.toml")).unwrap()
}

fn accuracy_of(dir: &Path) -> (Vec<u8>, AccuracyTable) {
    let bytes = std::fs::read(dir.join("accuracy.csv")).unwrap();
    let table = AccuracyTable::read_csv(bytes.as_slice()).unwrap();
    (bytes, table)
}

fn criterion_5(out: &Path) -> (Outcome, Option<Vec<u8>>) {
    let start = Instant::now();
    if let Err(e) = run_pipeline(&dynamic_config(), out) {
        return (Outcome::Fail(format!("pipeline failed: {e}")), None);
    }
    let (bytes, table) = accuracy_of(out);
    let (h0, h0_sd) = table.run_best_summary("H0");
    let (h1, h1_sd) = table.run_best_summary("H1");
    let (concat, concat_sd) = table.run_best_summary("concat");
    let ok = table.runs() == 10 && h1 >= 0.85 && concat >= 0.85 && h1 - h0 >= 0.20;
    let detail = format!(
        "H0 {h0:.3}±{h0_sd:.3}, H1 {h1:.3}±{h1_sd:.3}, concat {concat:.3}±{concat_sd:.3}, \
         H1-H0 {:.3}; {:.0}s",
        h1 - h0,
        start.elapsed().as_secs_f64()
    );
    (check(ok, detail), Some(bytes))
}

fn criterion_9(first: Option<Vec<u8>>, out: &Path) -> Outcome {
    let Some(first) = first else {
        return Outcome::Fail("criterion 5 produced no table to compare".into());
    };
    if let Err(e) = run_pipeline(&dynamic_config(), out) {
        return Outcome::Fail(format!("second run failed: {e}"));
    }
    let (second, _) = accuracy_of(out);
    check(
        first == second,
        format!("two runs, accuracy.csv {} bytes each, identical: {}", first.len(), first == second),
    )
}

// 6

fn random_diagram(rng: &mut impl Rng) -> PersistenceDiagram {
    let n = rng.random_range(0..30);
    let integer = rng.random::<bool>();
    let pairs: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            if integer {
                let b = rng.random_range(0..10) as f64;
                (b, b + rng.random_range(0..5) as f64)
            } else {
                let b = rng.random_range(0.0..10.0);
                (b, b + rng.random_range(0.0..5.0))
            }
        })
        .collect();
    diagram(&pairs)
}

fn close(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-12 * (1.0 + x.abs().max(y.abs())))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(6);
    let specs: Vec<VectorizerSpec> = Method::ALL.iter().flat_map(|m| m.default_grid()).collect();
    let integer_range = Range::new(0.0, 15.0);
    for case in 0..1000 {
        let d = random_diagram(&mut rng);
        let range = if d.is_empty() || case % 2 == 0 {
            integer_range
        } else {
            fit_range(std::slice::from_ref(&d)).unwrap().0.widened()
        };
        let points: Vec<&PersistencePoint> = d.points().iter().filter(|p| p.death > p.birth).collect();

        let layers = 5;
        let res = 31;
        let l = persistence_landscape(&d, layers, res, range);
        for k in 0..layers - 1 {
            for i in 0..res {
                if l[k * res + i] < l[(k + 1) * res + i] {
                    return Outcome::Fail(format!("diagram {case}: landscape layer {k} below {}", k + 1));
                }
            }
        }

        let grid = range.grid(res);
        let tents: Vec<f64> = grid
            .iter()
            .map(|&t| {
                if points.is_empty() {
                    0.0
                } else {
                    points.iter().map(|p| (t - p.birth).min(p.death - t).max(0.0)).sum::<f64>() / points.len() as f64
                }
            })
            .collect();
        if !close(&silhouette(&d, res, range), &tents) {
            return Outcome::Fail(format!("diagram {case}: silhouette differs from the mean tent"));
        }

        let curve = betti_curve(&d, res, range);
        for (i, &t) in grid.iter().enumerate() {
            let closing = points.iter().filter(|p| p.death == t).count();
            let expected = betti_at(std::slice::from_ref(&d), t)[0] + closing;
            if curve[i] != expected as f64 {
                return Outcome::Fail(format!("diagram {case}: BC {} vs betti_at {expected} at t={t}", curve[i]));
            }
        }

        let mut shuffled = d.points().to_vec();
        shuffled.shuffle(&mut rng);
        let shuffled = PersistenceDiagram::new(shuffled);
        for spec in &specs {
            if !close(&spec.apply(&d, range).unwrap(), &spec.apply(&shuffled, range).unwrap()) {
                return Outcome::Fail(format!("diagram {case}: {spec} depends on point order"));
            }
        }
    }
    let origin = PersistenceDiagram::new(vec![PersistencePoint::new(0.0, 0.0, 0).unwrap()]);
    for spec in &specs {
        for d in [PersistenceDiagram::default(), origin.clone()] {
            if spec.apply(&d, integer_range).unwrap().iter().any(|&x| x != 0.0) {
                return Outcome::Fail(format!("{spec} is non-zero on {d:?}"));
            }
        }
    }
    within(start.elapsed(), 30.0, "1000 diagrams, 5 invariants".into())
}

// 7

fn criterion_7(out: &Path) -> Outcome {
    let Some(dir) = std::env::var_os("TDAPIPE_MNIST_DIR").map(PathBuf::from) else {
        return Outcome::Skip(
            "set TDAPIPE_MNIST_DIR to a directory with train-images-idx3-ubyte and train-labels-idx1-ubyte".into(),
        );
    };
    let (images, labels) = (dir.join("train-images-idx3-ubyte"), dir.join("train-labels-idx1-ubyte"));
    if !images.exists() || !labels.exists() {
        return Outcome::Skip(format!("no MNIST IDX files in {}", dir.display()));
    }
    let start = Instant::now();
    let mut base = RunConfig::from_file(&manifest_dir().join("examples/mnist.toml")).unwrap();
    base.dataset = DatasetConfig::Idx {
        images,
        labels,
        subsample: Some(Subsample::Total(625)),
    };
    let mut means = Vec::new();
    for (kind, strategy) in [(FiltrationKind::Greyscale, "collapse"), (FiltrationKind::ImageMulti, "multivector")] {
        let mut config = base.clone();
        config.filtration.kind = Some(kind);
        config.vectorize.filtration_strategy = strategy.into();
        let dir = out.join(kind.name());
        if let Err(e) = run_pipeline(&config, &dir) {
            return Outcome::Fail(format!("{} run failed: {e}", kind.name()));
        }
        let (_, table) = accuracy_of(&dir);
        means.push(table.run_best_summary("fused"));
    }
    let gap = means[1].0 - means[0].0;
    check(
        gap >= 0.20,
        format!(
            "greyscale fused {:.3}±{:.3}, multivector fused {:.3}±{:.3}, gap {gap:.3}; {:.0}s",
            means[0].0,
            means[0].1,
            means[1].0,
            means[1].1,
            start.elapsed().as_secs_f64()
        ),
    )
}

// 8

fn accuracies(rng: &mut impl Rng) -> Vec<f64> {
    let n = rng.random_range(5..=12);
    let centre = rng.random_range(0.4..0.95);
    (0..n)
        .map(|_| (((centre + rng.random_range(-0.08..0.08)) * 125.0_f64).round() / 125.0).clamp(0.0, 1.0))
        .collect()
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(8);
    let mut worst: f64 = 0.0;
    for case in 0..100 {
        let (a, b) = (accuracies(&mut rng), accuracies(&mut rng));
        let got = welch_t_test(&a, &b).unwrap();
        let (t, df, p) = oracles::welch(&a, &b);
        let err = (got.t - t).abs().max((got.df - df).abs() / df.max(1.0)).max((got.p_value - p).abs());
        worst = worst.max(err);
        if err > 1e-6 {
            return Outcome::Fail(format!("pair {case}: t {} vs {t}, df {} vs {df}, p {} vs {p}", got.t, got.df, got.p_value));
        }
    }

    // four methods, two cells each, ten runs
    let mut table = AccuracyTable::default();
    for (m, method) in Method::ALL.iter().enumerate() {
        for cell in 0..2 {
            for run in 0..10 {
                table.records.push(AccuracyRecord {
                    strategy: "H1".into(),
                    method: *method,
                    vectorizer: format!("{}#{cell}", method.abbreviation()),
                    classifier: "knn(k=3)".into(),
                    run,
                    accuracy: 0.5 + 0.1 * m as f64 + rng.random_range(-0.05..0.05),
                });
            }
        }
    }
    let rows = method_stats(&table).unwrap();
    let mut pairs: Vec<(Method, Method)> = rows.iter().map(|r| (r.a, r.b)).collect();
    pairs.sort_by_key(|&(a, b)| (a as usize, b as usize));
    pairs.dedup();
    let shape_ok = rows.len() == 6 && pairs.len() == 6 && rows.iter().all(|r| r.a != r.b);
    if !shape_ok {
        return Outcome::Fail(format!("stats produced {} rows, {} distinct pairs", rows.len(), pairs.len()));
    }
    within(start.elapsed(), 5.0, format!("100 pairs, max deviation {worst:e}; 6-row method matrix"))
}

fn guarded<T>(f: impl FnOnce() -> T) -> std::thread::Result<T> {
    catch_unwind(AssertUnwindSafe(f))
}

fn main() {
    let tmp = tempfile::tempdir().expect("temporary directory");
    let mut failed = 0;
    let mut report = |n: usize, outcome: std::thread::Result<Outcome>| {
        let (tag, detail) = match outcome {
            Ok(Outcome::Pass(d)) => ("PASS", d),
            Ok(Outcome::Fail(d)) => ("FAIL", d),
            Ok(Outcome::Skip(d)) => ("SKIP", d),
            Err(_) => ("FAIL", "panicked".to_string()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("criterion {n}: {tag} - {detail}");
    };

    report(1, guarded(criterion_1));
    report(2, guarded(criterion_2));
    report(3, guarded(criterion_3));
    report(4, guarded(criterion_4));
    let (outcome, first_table) = match guarded(|| criterion_5(&tmp.path().join("dynamic-1"))) {
        Ok((o, t)) => (Ok(o), t),
        Err(e) => (Err(e), None),
    };
    report(5, outcome);
    report(6, guarded(criterion_6));
    report(7, guarded(|| criterion_7(&tmp.path().join("mnist"))));
    report(8, guarded(criterion_8));
    report(9, guarded(|| criterion_9(first_table, &tmp.path().join("dynamic-2"))));

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
