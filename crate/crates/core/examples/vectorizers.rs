//! The four vectorizations of one H1 diagram on a shared range.

use tdapipe::diagram::PersistenceDiagram;
use tdapipe::vectorize::{betti_curve, fit_range, persistence_image, persistence_landscape, silhouette};

fn show(name: &str, v: &[f64]) {
    let cells: Vec<String> = v.iter().map(|x| format!("{x:.3}")).collect();
    println!("{name:<10} {}", cells.join(" "));
}

fn main() {
    let d = PersistenceDiagram::from_pairs(1, [(0.0, 2.0), (1.0, 3.0), (1.5, 1.75)]).unwrap();
    let (range, _) = fit_range(std::slice::from_ref(&d)).unwrap();
    println!("range [{}, {}]", range.min, range.max);

    show("PI 3x3", &persistence_image(&d, 3, 0.5, range));
    let pl = persistence_landscape(&d, 2, 7, range);
    show("PL k=1", &pl[..7]);
    show("PL k=2", &pl[7..]);
    show("PS", &silhouette(&d, 7, range));
    show("BC", &betti_curve(&d, 7, range));
}
