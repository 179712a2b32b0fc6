//! Writes an SVG of a two-dimension diagram. Usage: plot_diagram [OUT.svg]

use tdapipe::diagram::{PersistenceDiagram, PersistencePoint};
use tdapipe::pipeline::plot_diagram;

fn main() {
    let out = std::env::args().nth(1).unwrap_or_else(|| "diagram.svg".into());
    let d = PersistenceDiagram::new(vec![
        PersistencePoint::new(0.0, 0.4, 0).unwrap(),
        PersistencePoint::new(0.0, 1.0, 0).unwrap(),
        PersistencePoint::new(0.3, 0.9, 1).unwrap(),
        PersistencePoint::new(0.5, 0.6, 1).unwrap(),
    ]);
    plot_diagram(&d, "example", std::path::Path::new(&out)).unwrap();
    println!("wrote {out}");
}
