//! Bottleneck and Wasserstein distances between two small diagrams, with the
//! optimal matching found by the Hungarian method.

use tdapipe::diagram::{bottleneck_distance, wasserstein_distance, PersistenceDiagram};

fn main() {
    let a = PersistenceDiagram::from_pairs(1, [(0.0, 4.0), (1.0, 2.0), (3.0, 3.5)]).unwrap();
    let b = PersistenceDiagram::from_pairs(1, [(0.2, 4.1), (1.4, 2.0)]).unwrap();

    println!("bottleneck   {:.4}", bottleneck_distance(&a, &b));
    for p in [1.0, 2.0] {
        println!("wasserstein{p} {:.4}", wasserstein_distance(&a, &b, p).unwrap());
    }
    println!("self         {:.4}", bottleneck_distance(&a, &a));
}
