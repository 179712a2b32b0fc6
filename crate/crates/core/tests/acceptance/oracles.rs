//! Slow, obviously-correct reference computations used to check the library.
//! Nothing here calls into the code under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// Rank over ℤ₂ of a matrix given as rows of bits.
pub fn rank_z2(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers 0..=max_dim of a simplicial complex given as sorted vertex
/// lists, by ranks of the dense boundary matrices.
pub fn betti_numbers(simplices: &[Vec<u32>], max_dim: usize) -> Vec<usize> {
    let mut by_dim: Vec<Vec<&Vec<u32>>> = vec![Vec::new(); max_dim + 2];
    for s in simplices {
        if s.len() - 1 <= max_dim + 1 {
            by_dim[s.len() - 1].push(s);
        }
    }
    // boundary rank from dim k to k-1
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || k >= by_dim.len() || by_dim[k].is_empty() {
            return 0;
        }
        let index: BTreeMap<&Vec<u32>, usize> =
            by_dim[k - 1].iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let rows = by_dim[k]
            .iter()
            .map(|s| {
                let mut row = vec![false; by_dim[k - 1].len()];
                for skip in 0..s.len() {
                    let face: Vec<u32> =
                        s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    row[index[&face]] = true;
                }
                row
            })
            .collect();
        rank_z2(rows)
    };
    (0..=max_dim)
        .map(|k| by_dim[k].len() - boundary_rank(k) - boundary_rank(k + 1))
        .collect()
}

/// Every face of every listed simplex, each once.
pub fn closure(tops: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for t in tops {
        let n = t.len();
        for mask in 1u32..(1 << n) {
            out.insert((0..n).filter(|i| mask >> i & 1 == 1).map(|i| t[i]).collect());
        }
    }
    out
}

/// A random filtered complex on at most `vertices` vertices: closures of
/// random simplices up to `max_dim`, kept while the total stays within
/// `max_simplices`, with small integer values (so ties are common) raised to
/// the maximum over faces. Listed by dimension, then vertices.
pub fn random_filtration(
    rng: &mut impl rand::Rng,
    vertices: u32,
    max_dim: usize,
    max_simplices: usize,
) -> Vec<(Vec<u32>, f64)> {
    let mut set = BTreeSet::new();
    for _ in 0..rng.random_range(1..=12) {
        let size = rng.random_range(1..=max_dim + 1).min(vertices as usize);
        let mut top: Vec<u32> = Vec::new();
        while top.len() < size {
            let v = rng.random_range(0..vertices);
            if !top.contains(&v) {
                top.push(v);
            }
        }
        top.sort_unstable();
        let grown: BTreeSet<Vec<u32>> = set.union(&closure(&[top])).cloned().collect();
        if grown.len() <= max_simplices {
            set = grown;
        }
    }
    let mut simplices: Vec<Vec<u32>> = set.into_iter().collect();
    simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut values: BTreeMap<Vec<u32>, f64> = BTreeMap::new();
    for s in &simplices {
        let mut v = rng.random_range(0..6) as f64;
        if s.len() > 1 {
            for skip in 0..s.len() {
                let face: Vec<u32> =
                    s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                v = v.max(values[&face]);
            }
        }
        values.insert(s.clone(), v);
    }
    simplices.into_iter().map(|s| {
        let v = values[&s];
        (s, v)
    }).collect()
}

/// Betti numbers 0..=max_dim of the sublevel complex at every distinct value.
pub fn sublevel_betti(filtration: &[(Vec<u32>, f64)], max_dim: usize) -> Vec<(f64, Vec<usize>)> {
    let mut values: Vec<f64> = filtration.iter().map(|s| s.1).collect();
    values.sort_by(f64::total_cmp);
    values.dedup();
    values
        .into_iter()
        .map(|t| {
            let sub: Vec<Vec<u32>> =
                filtration.iter().filter(|s| s.1 <= t).map(|s| s.0.clone()).collect();
            (t, betti_numbers(&sub, max_dim))
        })
        .collect()
}

fn linf(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

/// Costs of every partial matching between `a` and `b`, unmatched points
/// going to the diagonal; `combine` folds the per-edge costs.
fn all_matchings(
    a: &[(f64, f64)],
    b: &[(f64, f64)],
    combine: &dyn Fn(&[f64]) -> f64,
) -> f64 {
    fn go(
        i: usize,
        a: &[(f64, f64)],
        b: &[(f64, f64)],
        used: &mut Vec<bool>,
        costs: &mut Vec<f64>,
        combine: &dyn Fn(&[f64]) -> f64,
        best: &mut f64,
    ) {
        if i == a.len() {
            let mut all = costs.clone();
            for (j, p) in b.iter().enumerate() {
                if !used[j] {
                    all.push((p.1 - p.0) / 2.0);
                }
            }
            *best = best.min(combine(&all));
            return;
        }
        costs.push((a[i].1 - a[i].0) / 2.0);
        go(i + 1, a, b, used, costs, combine, best);
        costs.pop();
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                costs.push(linf(a[i], b[j]));
                go(i + 1, a, b, used, costs, combine, best);
                costs.pop();
                used[j] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    go(0, a, b, &mut vec![false; b.len()], &mut Vec::new(), combine, &mut best);
    best
}

/// Bottleneck distance of finite diagrams by enumeration.
pub fn brute_bottleneck(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    all_matchings(a, b, &|c| c.iter().copied().fold(0.0, f64::max))
}

/// p-Wasserstein distance of finite diagrams by enumeration.
pub fn brute_wasserstein(a: &[(f64, f64)], b: &[(f64, f64)], p: f64) -> f64 {
    all_matchings(a, b, &|c| c.iter().map(|x| x.powf(p)).sum::<f64>()).powf(1.0 / p)
}

/// ln Γ(x) for x > 0 (Lanczos, g = 7).
pub fn ln_gamma(x: f64) -> f64 {
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = C[0];
    let t = x + 7.5;
    for (i, &c) in C.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// Two-sided Student-t p-value: 1 − 2∫₀^|t| f, by composite Simpson.
pub fn t_two_sided_p(t: f64, df: f64) -> f64 {
    let norm = (ln_gamma((df + 1.0) / 2.0) - ln_gamma(df / 2.0)).exp() / (df * std::f64::consts::PI).sqrt();
    let f = |x: f64| norm * (1.0 + x * x / df).powf(-(df + 1.0) / 2.0);
    let upper = t.abs();
    let n = 20_000;
    let h = upper / n as f64;
    let mut s = f(0.0) + f(upper);
    for i in 1..n {
        s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    (1.0 - 2.0 * s * h / 3.0).max(0.0)
}

/// Welch statistic, Welch–Satterthwaite df and two-sided p from scratch.
pub fn welch(a: &[f64], b: &[f64]) -> (f64, f64, f64) {
    let stats = |x: &[f64]| {
        let n = x.len() as f64;
        let m = x.iter().sum::<f64>() / n;
        let v = x.iter().map(|y| (y - m).powi(2)).sum::<f64>() / (n - 1.0);
        (m, v / n, n)
    };
    let (ma, sa, na) = stats(a);
    let (mb, sb, nb) = stats(b);
    let t = (ma - mb) / (sa + sb).sqrt();
    let df = (sa + sb).powi(2) / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
    (t, df, t_two_sided_p(t, df))
}

/// Connected components of points whose pairwise distance is ≤ `scale`.
pub fn components(points: &[(f64, f64)], scale: f64) -> usize {
    let mut parent: Vec<usize> = (0..points.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = (points[i].0 - points[j].0).hypot(points[i].1 - points[j].1);
            if d <= scale {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..points.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// Triangles of an undirected graph by checking every vertex triple.
pub fn triangle_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                if set.contains(&(a, b)) && set.contains(&(a, c)) && set.contains(&(b, c)) {
                    count += 1;
                }
            }
        }
    }
    count
}
