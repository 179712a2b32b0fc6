use super::config::{FiltrationConfig, FiltrationKind};
use crate::complex::FilteredComplex;
use crate::data::{Payload, PayloadKind};
use crate::diagram::PersistenceDiagram;
use crate::filtrations::{
    alpha_complex_2d, binarize, density_filtration, flag_complex, greyscale_prepare, height_filtration,
    image_complex, dedup_points, radial_filtration, rips_complex, FiltrationError, GreyImage,
    PointCloud,
};
use crate::persistence::compute_persistence_unchecked;

/// Filtration settings resolved for one payload kind.
#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationPlan {
    pub kind: FiltrationKind,
    pub max_hom_dim: usize,
    pub rips_max_radius: f64,
    pub threshold: f64,
    /// Unit (row, col) directions.
    pub directions: Vec<(f64, f64)>,
    pub centers: Vec<(i64, i64)>,
    pub density_radius: Option<f64>,
    pub flag_max_dim: usize,
}

/// Diagrams of one sample, one per filtration with all dimensions mixed.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleOutcome {
    pub diagrams: Vec<PersistenceDiagram>,
    /// Zero-length pairs dropped, per dimension.
    pub zero_persistence: Vec<usize>,
    /// The alpha construction was replaced by Rips for a collinear cloud.
    pub fallback: bool,
}

impl FiltrationPlan {
    pub fn new(config: &FiltrationConfig, payload: PayloadKind, max_hom_dim: usize) -> Result<Self, String> {
        let kind = config.kind.unwrap_or(FiltrationKind::default_for(payload));
        if !kind.accepts(payload) {
            return Err(format!(
                "filtration `{}` does not apply to {} data",
                kind.name(),
                payload.name()
            ));
        }
        Ok(FiltrationPlan {
            kind,
            max_hom_dim,
            rips_max_radius: config.rips_max_radius.unwrap_or(f64::INFINITY),
            threshold: config.threshold,
            directions: config
                .directions
                .iter()
                .map(|d| {
                    let n = d[0].hypot(d[1]);
                    (d[0] / n, d[1] / n)
                })
                .collect(),
            centers: config.centers.iter().map(|c| (c[0], c[1])).collect(),
            density_radius: config.density.then_some(config.density_radius),
            flag_max_dim: config.flag_max_dim.unwrap_or((max_hom_dim + 1).min(3)),
        })
    }

    /// One name per filtration, in output order.
    pub fn names(&self) -> Vec<String> {
        match self.kind {
            FiltrationKind::ImageMulti => {
                let mut names: Vec<String> = self
                    .directions
                    .iter()
                    .map(|&(r, c)| format!("height({},{})", short(r), short(c)))
                    .collect();
                names.extend(self.centers.iter().map(|(r, c)| format!("radial({r},{c})")));
                if let Some(radius) = self.density_radius {
                    names.push(format!("density({radius})"));
                }
                names
            }
            k => vec![k.name().to_string()],
        }
    }

    pub fn compute(&self, payload: &Payload) -> Result<SampleOutcome, FiltrationError> {
        let mut fallback = false;
        let complexes: Vec<FilteredComplex> = match (self.kind, payload) {
            (FiltrationKind::Alpha, Payload::PointCloud(cloud)) => match alpha_complex_2d(cloud) {
                Ok(k) => vec![k],
                Err(FiltrationError::DegenerateInput) => {
                    fallback = true;
                    vec![self.collinear_fallback(cloud)?]
                }
                Err(e) => return Err(e),
            },
            (FiltrationKind::Rips, Payload::PointCloud(cloud)) => {
                vec![rips_complex(cloud, self.max_hom_dim + 1, self.rips_max_radius)?]
            }
            (FiltrationKind::Greyscale, Payload::Image(img)) => {
                vec![image_complex(&greyscale_prepare(img))]
            }
            (FiltrationKind::ImageMulti, Payload::Image(img)) => {
                let b = binarize(&unit_scaled(img), self.threshold);
                let mut images = Vec::new();
                for &v in &self.directions {
                    images.push(height_filtration(&b, v)?);
                }
                for &c in &self.centers {
                    images.push(radial_filtration(&b, c)?);
                }
                if let Some(r) = self.density_radius {
                    images.push(density_filtration(&b, r)?);
                }
                images.iter().map(image_complex).collect()
            }
            (FiltrationKind::Flag, Payload::Graph(g)) => vec![flag_complex(g, self.flag_max_dim)?],
            (kind, p) => {
                return Err(FiltrationError::Invalid(format!(
                    "filtration `{}` does not apply to {} data",
                    kind.name(),
                    p.kind().name()
                )))
            }
        };
        let mut zero_persistence = vec![0; self.max_hom_dim + 1];
        let diagrams = complexes
            .iter()
            .map(|k| {
                let r = compute_persistence_unchecked(k, self.max_hom_dim);
                for (z, n) in zero_persistence.iter_mut().zip(&r.zero_persistence) {
                    *z += n;
                }
                r.combined()
            })
            .collect();
        Ok(SampleOutcome {
            diagrams,
            zero_persistence,
            fallback,
        })
    }

    /// Rips on the de-duplicated cloud, reparametrized from radius r to the
    /// squared-radius scale (r/2)² used by the alpha construction.
    fn collinear_fallback(&self, cloud: &PointCloud) -> Result<FilteredComplex, FiltrationError> {
        let unique = PointCloud::from_xy(dedup_points(cloud.points()).into_iter().map(|p| (p[0], p[1])))?;
        let rips = rips_complex(&unique, self.max_hom_dim + 1, f64::INFINITY)?;
        let mut out = FilteredComplex::new();
        for (s, v) in rips.simplices() {
            out.push_unchecked(s.clone(), (v / 2.0) * (v / 2.0));
        }
        Ok(out)
    }
}

/// Divides by 255 when intensities exceed 1.
fn unit_scaled(img: &GreyImage) -> GreyImage {
    let max = img.pixels().iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max > 1.0 {
        GreyImage::new(
            img.width(),
            img.height(),
            img.pixels().iter().map(|p| p / 255.0).collect(),
        )
        .expect("same shape")
    } else {
        img.clone()
    }
}

fn short(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}
