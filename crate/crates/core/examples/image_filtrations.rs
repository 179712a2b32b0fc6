//! The eighteen pre-filtrations of a binarized image (eight heights, nine
//! radial centers, one density) plus the plain greyscale filtration, on a
//! drawn ring that should give one H1 class each.

use tdapipe::filtrations::{
    binarize, density_filtration, greyscale_prepare, height_filtration, image_complex,
    radial_filtration, GreyImage, DEFAULT_BINARIZE_THRESHOLD, DEFAULT_DENSITY_RADIUS,
    HEIGHT_DIRECTIONS, RADIAL_CENTERS,
};
use tdapipe::persistence::compute_persistence_unchecked;

fn ring() -> GreyImage {
    let mut pixels = vec![0.0; 28 * 28];
    for r in 0..28 {
        for c in 0..28 {
            let d = ((r as f64 - 13.5).powi(2) + (c as f64 - 13.5).powi(2)).sqrt();
            if (6.0..9.0).contains(&d) {
                pixels[r * 28 + c] = 230.0;
            }
        }
    }
    GreyImage::new(28, 28, pixels).unwrap()
}

fn summary(name: &str, img: &GreyImage) {
    let result = compute_persistence_unchecked(&image_complex(img), 1);
    let h1: Vec<(f64, f64)> = result.diagrams[1].pairs();
    println!("{name:<22} H0 {:>3}  H1 {:?}", result.diagrams[0].len(), h1);
}

fn main() {
    let img = ring();
    summary("greyscale", &greyscale_prepare(&img));

    let unit = GreyImage::new(28, 28, img.pixels().iter().map(|p| p / 255.0).collect()).unwrap();
    let b = binarize(&unit, DEFAULT_BINARIZE_THRESHOLD);
    for v in HEIGHT_DIRECTIONS {
        summary(&format!("height({:.2},{:.2})", v.0, v.1), &height_filtration(&b, v).unwrap());
    }
    for c in RADIAL_CENTERS {
        summary(&format!("radial({},{})", c.0, c.1), &radial_filtration(&b, c).unwrap());
    }
    summary("density", &density_filtration(&b, DEFAULT_DENSITY_RADIUS).unwrap());
}
