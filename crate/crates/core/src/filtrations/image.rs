use std::f64::consts::FRAC_1_SQRT_2;

use crate::complex::{FilteredComplex, Simplex};

use super::{BinaryImage, FiltrationError, GreyImage};

pub const DEFAULT_BINARIZE_THRESHOLD: f64 = 0.4;
pub const DEFAULT_DENSITY_RADIUS: f64 = 6.0;

/// The eight unit directions used for height filtrations, as (row, col)
/// components.
pub const HEIGHT_DIRECTIONS: [(f64, f64); 8] = [
    (0.0, 1.0),
    (0.0, -1.0),
    (1.0, 0.0),
    (-1.0, 0.0),
    (FRAC_1_SQRT_2, FRAC_1_SQRT_2),
    (FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
    (-FRAC_1_SQRT_2, FRAC_1_SQRT_2),
    (-FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
];

/// Radial filtration centers for 28x28 images, as (row, col).
pub const RADIAL_CENTERS: [(i64, i64); 9] = [
    (13, 6),
    (6, 13),
    (13, 13),
    (20, 13),
    (13, 20),
    (6, 6),
    (6, 20),
    (20, 6),
    (20, 20),
];

/// Lower-star complex of an image on the triangulated pixel grid.
///
/// Pixel (r, c) becomes vertex `r * width + c` at its intensity. Each unit
/// cell is split along the diagonal (r, c)–(r+1, c+1) into two triangles, so
/// every pixel has six neighbours. Higher simplices take the maximum vertex
/// value, which makes the sublevel set at `t` exactly the pixels with
/// intensity at most `t` and the cells they span.
pub fn image_complex(img: &GreyImage) -> FilteredComplex {
    let (w, h) = (img.width(), img.height());
    let id = |r: usize, c: usize| (r * w + c) as u32;
    let val = |r: usize, c: usize| img.get(r, c);
    let mut k = FilteredComplex::new();
    for r in 0..h {
        for c in 0..w {
            k.push_unchecked(Simplex::vertex(id(r, c)), val(r, c));
        }
    }
    for r in 0..h {
        for c in 0..w {
            if c + 1 < w {
                k.push_unchecked(
                    Simplex::edge(id(r, c), id(r, c + 1)),
                    val(r, c).max(val(r, c + 1)),
                );
            }
            if r + 1 < h {
                k.push_unchecked(
                    Simplex::edge(id(r, c), id(r + 1, c)),
                    val(r, c).max(val(r + 1, c)),
                );
            }
            if r + 1 < h && c + 1 < w {
                k.push_unchecked(
                    Simplex::edge(id(r, c), id(r + 1, c + 1)),
                    val(r, c).max(val(r + 1, c + 1)),
                );
            }
        }
    }
    for r in 0..h.saturating_sub(1) {
        for c in 0..w.saturating_sub(1) {
            let diag = val(r, c).max(val(r + 1, c + 1));
            k.push_unchecked(
                Simplex::from_sorted(vec![id(r, c), id(r, c + 1), id(r + 1, c + 1)]),
                diag.max(val(r, c + 1)),
            );
            k.push_unchecked(
                Simplex::from_sorted(vec![id(r, c), id(r + 1, c), id(r + 1, c + 1)]),
                diag.max(val(r + 1, c)),
            );
        }
    }
    k
}

/// Lit iff intensity is strictly greater than `threshold`.
pub fn binarize(img: &GreyImage, threshold: f64) -> BinaryImage {
    BinaryImage {
        width: img.width(),
        height: img.height(),
        pixels: img.pixels().iter().map(|&p| p > threshold).collect(),
    }
}

/// Lit pixels get ⟨v, (row, col)⟩; unlit pixels get the largest such value
/// over the whole grid.
pub fn height_filtration(b: &BinaryImage, v: (f64, f64)) -> Result<GreyImage, FiltrationError> {
    let norm = (v.0 * v.0 + v.1 * v.1).sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > 1e-9 {
        return Err(FiltrationError::NotUnitVector(v.0, v.1));
    }
    let (w, h) = (b.width(), b.height());
    let height_at = |r: usize, c: usize| v.0 * r as f64 + v.1 * c as f64;
    // the maximum of a linear function over the grid sits at a corner
    let far = if w == 0 || h == 0 {
        0.0
    } else {
        [(0, 0), (0, w - 1), (h - 1, 0), (h - 1, w - 1)]
            .iter()
            .map(|&(r, c)| height_at(r, c))
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let pixels = (0..h)
        .flat_map(|r| (0..w).map(move |c| (r, c)))
        .map(|(r, c)| if b.is_lit(r, c) { height_at(r, c) } else { far })
        .collect();
    Ok(GreyImage {
        width: w,
        height: h,
        pixels,
    })
}

/// Lit pixels get their Euclidean distance to `center` (row, col); unlit
/// pixels get the largest distance from `center` over the grid.
pub fn radial_filtration(b: &BinaryImage, center: (i64, i64)) -> Result<GreyImage, FiltrationError> {
    let (w, h) = (b.width(), b.height());
    if center.0 < 0 || center.1 < 0 || center.0 as usize >= h || center.1 as usize >= w {
        return Err(FiltrationError::CenterOutOfBounds(center.0, center.1, h, w));
    }
    let dist = |r: usize, c: usize| {
        let dr = r as f64 - center.0 as f64;
        let dc = c as f64 - center.1 as f64;
        (dr * dr + dc * dc).sqrt()
    };
    let far = [(0, 0), (0, w - 1), (h - 1, 0), (h - 1, w - 1)]
        .iter()
        .map(|&(r, c)| dist(r, c))
        .fold(0.0, f64::max);
    let pixels = (0..h)
        .flat_map(|r| (0..w).map(move |c| (r, c)))
        .map(|(r, c)| if b.is_lit(r, c) { dist(r, c) } else { far })
        .collect();
    Ok(GreyImage {
        width: w,
        height: h,
        pixels,
    })
}

/// Every pixel gets the number of lit pixels within Euclidean distance
/// `radius` of it, inclusive.
pub fn density_filtration(b: &BinaryImage, radius: f64) -> Result<GreyImage, FiltrationError> {
    if radius.is_nan() || radius <= 0.0 {
        return Err(FiltrationError::Invalid(format!(
            "density radius must be positive, got {radius}"
        )));
    }
    let (w, h) = (b.width(), b.height());
    let reach = radius.floor() as i64;
    let r2 = radius * radius;
    let mut counts = vec![0.0; w * h];
    for (lr, lc) in b.lit_positions() {
        for dr in -reach..=reach {
            let r = lr as i64 + dr;
            if r < 0 || r >= h as i64 {
                continue;
            }
            for dc in -reach..=reach {
                let c = lc as i64 + dc;
                if c < 0 || c >= w as i64 || ((dr * dr + dc * dc) as f64) > r2 {
                    continue;
                }
                counts[r as usize * w + c as usize] += 1.0;
            }
        }
    }
    Ok(GreyImage {
        width: w,
        height: h,
        pixels: counts,
    })
}

/// Scales to [0, 1] (dividing by 255 when the maximum exceeds 1) and
/// inverts, so dark strokes on a light background become low values.
pub fn greyscale_prepare(img: &GreyImage) -> GreyImage {
    let max = img.pixels().iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let scale = if max > 1.0 { 255.0 } else { 1.0 };
    GreyImage {
        width: img.width(),
        height: img.height(),
        pixels: img.pixels().iter().map(|&p| 1.0 - p / scale).collect(),
    }
}
