//! Flag complex of a small weighted graph: a 4-cycle whose chords arrive
//! late, and the complete graph on four vertices with and without its
//! 3-simplex.

use tdapipe::filtrations::{flag_complex, WeightedGraph};
use tdapipe::persistence::compute_persistence;

fn main() {
    let square = WeightedGraph::new(
        4,
        vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0), (0, 2, 3.0)],
    )
    .unwrap();
    let k = flag_complex(&square, 2).unwrap();
    let result = compute_persistence(&k, 1).unwrap();
    println!("square: H0 {:?}", result.diagrams[0].pairs());
    println!("square: H1 {:?}", result.diagrams[1].pairs());

    // the complete graph on 4 vertices: its triangles enclose a void unless
    // the 4-clique is added as a 3-simplex
    let mut edges = Vec::new();
    for u in 0..4 {
        for v in u + 1..4 {
            edges.push((u, v, 1.0 + (u + v) as f64 / 10.0));
        }
    }
    let k4 = WeightedGraph::new(4, edges).unwrap();
    for max_dim in [2, 3] {
        let k = flag_complex(&k4, max_dim).unwrap();
        let result = compute_persistence(&k, 2).unwrap();
        println!(
            "K4, cliques up to dimension {max_dim}: {:?} simplices, H2 {:?}",
            k.count_by_dimension(),
            result.diagrams[2].pairs()
        );
    }
}
