//! Betti-curve features of noisy circles versus noisy discs, scored by each
//! classifier of the default roster under 10 stratified 80/20 splits.
//! Ranges are fitted on all samples here; the pipeline refits them per split.

use rand::Rng;
use tdapipe::filtrations::{alpha_complex_2d, PointCloud};
use tdapipe::learn::{cross_validate, ClassifierSpec, Protocol};
use tdapipe::persistence::compute_persistence_unchecked;
use tdapipe::rng::rng_from_seed;
use tdapipe::vectorize::{combine_filtrations, DimStrategy, FilterStrategy, VectorizerSpec};

fn main() {
    let mut rng = rng_from_seed(1);
    let mut samples = Vec::new();
    let mut labels = Vec::new();
    for i in 0..60 {
        let label = i % 2;
        let points: Vec<(f64, f64)> = (0..80)
            .map(|_| {
                let a = rng.random_range(0.0..std::f64::consts::TAU);
                let r = if label == 0 { 1.0 + rng.random_range(-0.1..0.1) } else { rng.random::<f64>().sqrt() };
                (r * a.cos(), r * a.sin())
            })
            .collect();
        let k = alpha_complex_2d(&PointCloud::from_xy(points).unwrap()).unwrap();
        samples.push(vec![compute_persistence_unchecked(&k, 1).combined()]);
        labels.push(label);
    }
    let spec = VectorizerSpec::BettiCurve { resolution: 25 };
    let x = combine_filtrations(&samples, DimStrategy::Single(1), FilterStrategy::Collapse, 1, &spec).unwrap();
    for clf in ClassifierSpec::default_roster() {
        let r = cross_validate(&x, &labels, &clf, &Protocol::default(), 3).unwrap();
        println!("{:<20} {:.3} ± {:.3}", clf.to_string(), r.mean, r.std);
    }
}
