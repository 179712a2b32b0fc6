//! A noisy circle through the alpha and Rips constructions. The loop shows
//! up as one long H1 bar in both; alpha values are squared radii, Rips
//! values are edge lengths.

use rand::Rng;
use tdapipe::filtrations::{alpha_complex_2d, rips_complex, PointCloud};
use tdapipe::persistence::compute_persistence;
use tdapipe::rng::rng_from_seed;

fn main() {
    let mut rng = rng_from_seed(7);
    let points: Vec<(f64, f64)> = (0..60)
        .map(|i| {
            let a = i as f64 / 60.0 * std::f64::consts::TAU;
            let r = 1.0 + rng.random_range(-0.05..0.05);
            (r * a.cos(), r * a.sin())
        })
        .collect();
    let cloud = PointCloud::from_xy(points).unwrap();

    let alpha = alpha_complex_2d(&cloud).unwrap();
    let rips = rips_complex(&cloud, 2, 2.5).unwrap();
    for (name, k) in [("alpha", &alpha), ("rips", &rips)] {
        let result = compute_persistence(k, 1).unwrap();
        let mut h1: Vec<_> = result.diagrams[1].pairs();
        h1.sort_by(|a, b| (b.1 - b.0).total_cmp(&(a.1 - a.0)));
        println!(
            "{name}: {} simplices, {} H0 points, longest H1 bar {:?}",
            k.len(),
            result.diagrams[0].len(),
            h1.first()
        );
    }
}
