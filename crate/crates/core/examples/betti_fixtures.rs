//! Betti numbers of two triangulated surfaces: the octahedron (a sphere)
//! and the 7-vertex torus.

use tdapipe::complex::{FaceCompletion, FilteredComplex, Simplex};
use tdapipe::persistence::{betti_at, compute_persistence};

fn surface(triangles: &[[u32; 3]]) -> FilteredComplex {
    let mut k = FilteredComplex::new();
    for t in triangles {
        k.add_simplex(Simplex::new(t.iter().copied()).unwrap(), 0.0, FaceCompletion::Insert)
            .unwrap();
    }
    k
}

fn report(name: &str, k: &FilteredComplex) {
    let result = compute_persistence(k, 2).unwrap();
    let betti = betti_at(&result.diagrams, 0.0);
    println!(
        "{name}: simplices per dimension {:?}, betti numbers {:?}",
        k.count_by_dimension(),
        betti
    );
}

fn main() {
    let mut octahedron = Vec::new();
    for pole in [0, 5] {
        for i in 0..4 {
            octahedron.push([pole, 1 + i, 1 + (i + 1) % 4]);
        }
    }
    report("octahedron", &surface(&octahedron));

    let torus: Vec<[u32; 3]> = (0..7)
        .flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]])
        .collect();
    report("7-vertex torus", &surface(&torus));
}
