//! Bottleneck and p-Wasserstein distances between persistence diagrams.
//!
//! Both distances use the ℓ∞ ground metric on (birth, death) coordinates and
//! allow any point to be matched to its projection on the diagonal, at cost
//! half its persistence. Essential points can only be matched to essential
//! points; unequal essential counts give an infinite distance. Dimension tags
//! are ignored, so restrict diagrams to one dimension before comparing.

use super::{DiagramError, PersistenceDiagram};

/// Largest diagram `wasserstein_distance` accepts before refusing.
pub const DEFAULT_WASSERSTEIN_LIMIT: usize = 500;

struct Split {
    finite: Vec<(f64, f64)>,
    essential: Vec<f64>,
}

fn split(d: &PersistenceDiagram) -> Split {
    let mut finite = Vec::new();
    let mut essential = Vec::new();
    for p in d.points() {
        if p.is_essential() {
            essential.push(p.birth);
        } else {
            finite.push((p.birth, p.death));
        }
    }
    essential.sort_by(f64::total_cmp);
    Split { finite, essential }
}

fn linf(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

fn to_diagonal(a: (f64, f64)) -> f64 {
    (a.1 - a.0) / 2.0
}

/// Exact bottleneck distance.
pub fn bottleneck_distance(a: &PersistenceDiagram, b: &PersistenceDiagram) -> f64 {
    let (sa, sb) = (split(a), split(b));
    if sa.essential.len() != sb.essential.len() {
        return f64::INFINITY;
    }
    let essential = sa
        .essential
        .iter()
        .zip(&sb.essential)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    essential.max(finite_bottleneck(&sa.finite, &sb.finite))
}

fn finite_bottleneck(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let (n, m) = (a.len(), b.len());
    if n + m == 0 {
        return 0.0;
    }
    let cross: Vec<Vec<f64>> = a
        .iter()
        .map(|&p| b.iter().map(|&q| linf(p, q)).collect())
        .collect();
    let diag_a: Vec<f64> = a.iter().map(|&p| to_diagonal(p)).collect();
    let diag_b: Vec<f64> = b.iter().map(|&q| to_diagonal(q)).collect();

    let mut candidates: Vec<f64> = cross
        .iter()
        .flatten()
        .chain(&diag_a)
        .chain(&diag_b)
        .copied()
        .collect();
    candidates.push(0.0);
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    // the largest candidate is always feasible (everything to the diagonal)
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if perfect_matching_exists(&cross, &diag_a, &diag_b, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

/// Left vertices: points of `a` (0..n) then diagonal copies of `b` (n..n+m).
/// Right vertices: points of `b` (0..m) then diagonal copies of `a` (m..m+n).
fn perfect_matching_exists(
    cross: &[Vec<f64>],
    diag_a: &[f64],
    diag_b: &[f64],
    eps: f64,
) -> bool {
    let (n, m) = (diag_a.len(), diag_b.len());
    let size = n + m;
    let adjacency: Vec<Vec<usize>> = (0..size)
        .map(|l| {
            if l < n {
                let mut adj: Vec<usize> = (0..m).filter(|&j| cross[l][j] <= eps).collect();
                if diag_a[l] <= eps {
                    adj.push(m + l);
                }
                adj
            } else {
                let j = l - n;
                let mut adj = Vec::with_capacity(n + 1);
                if diag_b[j] <= eps {
                    adj.push(j);
                }
                adj.extend(m..m + n);
                adj
            }
        })
        .collect();

    let mut match_right = vec![usize::MAX; size];
    for l in 0..size {
        let mut visited = vec![false; size];
        if !augment(l, &adjacency, &mut match_right, &mut visited) {
            return false;
        }
    }
    true
}

fn augment(
    l: usize,
    adjacency: &[Vec<usize>],
    match_right: &mut [usize],
    visited: &mut [bool],
) -> bool {
    for &r in &adjacency[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if match_right[r] == usize::MAX || augment(match_right[r], adjacency, match_right, visited)
        {
            match_right[r] = l;
            return true;
        }
    }
    false
}

/// Exact p-Wasserstein distance, refusing diagrams above
/// [`DEFAULT_WASSERSTEIN_LIMIT`] points.
pub fn wasserstein_distance(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    p: f64,
) -> Result<f64, DiagramError> {
    wasserstein_distance_with_limit(a, b, p, DEFAULT_WASSERSTEIN_LIMIT)
}

pub fn wasserstein_distance_with_limit(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    p: f64,
    limit: usize,
) -> Result<f64, DiagramError> {
    if p.is_nan() || p < 1.0 || p.is_infinite() {
        return Err(DiagramError::InvalidOrder(p));
    }
    for d in [a, b] {
        if d.len() > limit {
            return Err(DiagramError::TooLarge {
                size: d.len(),
                limit,
            });
        }
    }
    let (sa, sb) = (split(a), split(b));
    if sa.essential.len() != sb.essential.len() {
        return Ok(f64::INFINITY);
    }
    let essential: f64 = sa
        .essential
        .iter()
        .zip(&sb.essential)
        .map(|(x, y)| (x - y).abs().powf(p))
        .sum();

    let (n, m) = (sa.finite.len(), sb.finite.len());
    let size = n + m;
    let mut finite = 0.0;
    if size > 0 {
        // rows: a then diagonal slots; columns: b then diagonal slots
        let mut cost = vec![vec![0.0; size]; size];
        for i in 0..n {
            let to_diag = to_diagonal(sa.finite[i]).powf(p);
            for j in 0..m {
                cost[i][j] = linf(sa.finite[i], sb.finite[j]).powf(p);
            }
            for c in cost[i].iter_mut().skip(m) {
                *c = to_diag;
            }
        }
        for j in 0..m {
            let to_diag = to_diagonal(sb.finite[j]).powf(p);
            for row in cost.iter_mut().skip(n) {
                row[j] = to_diag;
            }
        }
        let assignment = hungarian(&cost);
        finite = assignment
            .iter()
            .enumerate()
            .map(|(r, &c)| cost[r][c])
            .sum();
    }
    Ok((finite + essential).powf(1.0 / p))
}

/// Minimum-cost perfect assignment on a square cost matrix; returns the
/// column assigned to each row. O(n³) shortest augmenting path with
/// potentials.
pub fn hungarian(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    if n == 0 {
        return Vec::new();
    }
    // 1-based internally; column 0 is a sentinel
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut row_of_col = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of_col[0] = i;
        let mut j0 = 0usize;
        let mut min_to = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of_col[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < min_to[j] {
                    min_to[j] = cur;
                    way[j] = j0;
                }
                if min_to[j] < delta {
                    delta = min_to[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_to[j] -= delta;
                }
            }
            j0 = j1;
            if row_of_col[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of_col[j0] = row_of_col[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        if row_of_col[j] > 0 {
            assignment[row_of_col[j] - 1] = j - 1;
        }
    }
    assignment
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(pairs: &[(f64, f64)]) -> PersistenceDiagram {
        PersistenceDiagram::from_pairs(1, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn bottleneck_examples() {
        let d = diag(&[(0.0, 2.0), (1.0, 4.0)]);
        assert_eq!(bottleneck_distance(&d, &d), 0.0);
        assert_eq!(bottleneck_distance(&diag(&[(0.0, 2.0)]), &diag(&[])), 1.0);
        assert_eq!(bottleneck_distance(&diag(&[(0.0, 2.0)]), &diag(&[(0.0, 2.5)])), 0.5);
        assert_eq!(bottleneck_distance(&diag(&[]), &diag(&[])), 0.0);
    }

    #[test]
    fn wasserstein_examples() {
        let d = diag(&[(0.0, 2.0), (1.0, 4.0)]);
        assert_eq!(wasserstein_distance(&d, &d, 1.0).unwrap(), 0.0);
        assert_eq!(wasserstein_distance(&diag(&[(0.0, 2.0)]), &diag(&[]), 1.0).unwrap(), 1.0);
        assert_eq!(
            wasserstein_distance(&diag(&[(0.0, 2.0), (0.0, 2.0)]), &diag(&[]), 1.0).unwrap(),
            2.0
        );
        let w2 = wasserstein_distance(&diag(&[(0.0, 2.0), (0.0, 2.0)]), &diag(&[]), 2.0).unwrap();
        assert!((w2 - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn essential_points() {
        let a = PersistenceDiagram::from_pairs(0, [(0.0, f64::INFINITY), (0.0, 1.0)]).unwrap();
        let b = PersistenceDiagram::from_pairs(0, [(0.25, f64::INFINITY)]).unwrap();
        assert_eq!(bottleneck_distance(&a, &b), 0.5);
        assert_eq!(wasserstein_distance(&a, &b, 1.0).unwrap(), 0.75);
        let none = diag(&[]);
        assert_eq!(bottleneck_distance(&a, &none), f64::INFINITY);
    }

    #[test]
    fn size_guard_and_order() {
        let big = diag(&vec![(0.0, 1.0); 11]);
        assert!(matches!(
            wasserstein_distance_with_limit(&big, &big, 1.0, 10),
            Err(DiagramError::TooLarge { size: 11, limit: 10 })
        ));
        assert!(matches!(
            wasserstein_distance(&big, &big, 0.5),
            Err(DiagramError::InvalidOrder(_))
        ));
    }

    #[test]
    fn hungarian_small() {
        let cost = vec![vec![4.0, 1.0, 3.0], vec![2.0, 0.0, 5.0], vec![3.0, 2.0, 2.0]];
        let a = hungarian(&cost);
        let total: f64 = a.iter().enumerate().map(|(r, &c)| cost[r][c]).sum();
        assert_eq!(total, 5.0);
    }
}
