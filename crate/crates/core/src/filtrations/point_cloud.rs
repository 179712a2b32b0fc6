use std::collections::HashMap;

use delaunator::{next_halfedge, prev_halfedge, Point};

use crate::complex::{FilteredComplex, Simplex};

use super::graph::expand_cliques;
use super::{FiltrationError, PointCloud};

const DUPLICATE_TOLERANCE: f64 = 1e-12;

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Vietoris–Rips complex: vertices at 0, edges at their Euclidean length when
/// it does not exceed `max_radius`, higher simplices at their longest edge.
pub fn rips_complex(
    cloud: &PointCloud,
    max_dim: usize,
    max_radius: f64,
) -> Result<FilteredComplex, FiltrationError> {
    if cloud.is_empty() {
        return Err(FiltrationError::EmptyCloud);
    }
    if max_radius.is_nan() || max_radius <= 0.0 {
        return Err(FiltrationError::Invalid(format!(
            "max_radius must be positive, got {max_radius}"
        )));
    }
    let pts = cloud.points();
    let mut edges = Vec::new();
    if max_dim >= 1 {
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let d = euclidean(&pts[i], &pts[j]);
                if d <= max_radius {
                    edges.push((i, j, d));
                }
            }
        }
    }
    Ok(expand_cliques(&vec![0.0; pts.len()], &edges, max_dim))
}

/// Drops points within `DUPLICATE_TOLERANCE` (in both coordinates) of an
/// earlier kept point; survivors keep their input order.
pub(crate) fn dedup_points(points: &[Vec<f64>]) -> Vec<[f64; 2]> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        points[a][0]
            .total_cmp(&points[b][0])
            .then(points[a][1].total_cmp(&points[b][1]))
            .then(a.cmp(&b))
    });
    let mut keep = vec![false; points.len()];
    let mut kept: Vec<[f64; 2]> = Vec::with_capacity(points.len());
    for i in order {
        let p = [points[i][0], points[i][1]];
        let duplicate = kept
            .iter()
            .rev()
            .take_while(|q| p[0] - q[0] <= DUPLICATE_TOLERANCE)
            .any(|q| (p[1] - q[1]).abs() <= DUPLICATE_TOLERANCE);
        if !duplicate {
            kept.push(p);
            keep[i] = true;
        }
    }
    points
        .iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| [p[0], p[1]])
        .collect()
}

fn sq_dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)
}

fn sq_circumradius(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    let cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    sq_dist(a, b) * sq_dist(b, c) * sq_dist(c, a) / (4.0 * cross * cross)
}

/// Alpha filtration of a planar point cloud, in squared-radius scale.
///
/// Simplices are those of the Delaunay triangulation. A triangle enters at its
/// squared circumradius; an edge at its squared half-length if its diametral
/// disc contains no opposite vertex, otherwise at the smallest value among its
/// incident triangles. Near-duplicate points are merged first.
pub fn alpha_complex_2d(cloud: &PointCloud) -> Result<FilteredComplex, FiltrationError> {
    if cloud.is_empty() {
        return Err(FiltrationError::EmptyCloud);
    }
    if cloud.dim() != 2 {
        return Err(FiltrationError::DimensionMismatch {
            expected: 2,
            found: cloud.dim(),
        });
    }
    let pts = dedup_points(cloud.points());
    let mut complex = FilteredComplex::new();
    for v in 0..pts.len() {
        complex.push_unchecked(Simplex::vertex(v as u32), 0.0);
    }
    if pts.len() == 1 {
        return Ok(complex);
    }
    let dpts: Vec<Point> = pts.iter().map(|p| Point { x: p[0], y: p[1] }).collect();
    let tri = delaunator::triangulate(&dpts);
    if tri.triangles.is_empty() {
        return Err(FiltrationError::DegenerateInput);
    }

    let triangle_count = tri.triangles.len() / 3;
    let mut tri_values = Vec::with_capacity(triangle_count);
    for t in 0..triangle_count {
        let [a, b, c] = [
            tri.triangles[3 * t],
            tri.triangles[3 * t + 1],
            tri.triangles[3 * t + 2],
        ];
        tri_values.push(sq_circumradius(pts[a], pts[b], pts[c]));
    }

    // edge -> (gabriel value, min over incident triangles, attached?)
    let mut edges: HashMap<(usize, usize), (f64, f64, bool)> = HashMap::new();
    for e in 0..tri.triangles.len() {
        let a = tri.triangles[e];
        let b = tri.triangles[next_halfedge(e)];
        let c = tri.triangles[prev_halfedge(e)];
        let key = if a < b { (a, b) } else { (b, a) };
        let (pa, pb, pc) = (pts[a], pts[b], pts[c]);
        // opposite vertex strictly inside the diametral disc
        let attached = (pc[0] - pa[0]) * (pc[0] - pb[0]) + (pc[1] - pa[1]) * (pc[1] - pb[1]) < 0.0;
        let entry = edges
            .entry(key)
            .or_insert((sq_dist(pa, pb) / 4.0, f64::INFINITY, false));
        entry.1 = entry.1.min(tri_values[e / 3]);
        entry.2 |= attached;
    }

    let mut edge_values: HashMap<(usize, usize), f64> = HashMap::with_capacity(edges.len());
    let mut sorted_edges: Vec<_> = edges.into_iter().collect();
    sorted_edges.sort_by_key(|&(k, _)| k);
    for (key, (gabriel, incident_min, attached)) in sorted_edges {
        let value = if attached { incident_min } else { gabriel.min(incident_min) };
        edge_values.insert(key, value);
    }

    // points skipped by the triangulator (numerical near-duplicates) are
    // attached to their nearest vertex so that no spurious component remains
    let mut used = vec![false; pts.len()];
    for &v in &tri.triangles {
        used[v] = true;
    }
    for v in (0..pts.len()).filter(|&v| !used[v]) {
        let nearest = (0..pts.len())
            .filter(|&w| used[w])
            .min_by(|&a, &b| sq_dist(pts[v], pts[a]).total_cmp(&sq_dist(pts[v], pts[b])))
            .expect("triangulation has vertices");
        let key = if v < nearest { (v, nearest) } else { (nearest, v) };
        edge_values.insert(key, sq_dist(pts[v], pts[nearest]) / 4.0);
    }

    let mut edge_list: Vec<_> = edge_values.iter().map(|(&k, &v)| (k, v)).collect();
    edge_list.sort_by_key(|&(k, _)| k);
    for &((a, b), v) in &edge_list {
        complex.push_unchecked(Simplex::edge(a as u32, b as u32), v);
    }
    for t in 0..triangle_count {
        let s = Simplex::new(tri.triangles[3 * t..3 * t + 3].iter().map(|&v| v as u32))
            .expect("triangle has three vertices");
        // faces never exceed cofaces; guard against rounding in the radius formulas
        let v = s
            .boundary()
            .iter()
            .map(|e| {
                let vs = e.vertices();
                edge_values[&(vs[0] as usize, vs[1] as usize)]
            })
            .fold(tri_values[t], f64::max);
        complex.push_unchecked(s, v);
    }
    Ok(complex)
}
