use std::io::Write;

use statrs::distribution::{ContinuousCDF, StudentsT};

use super::grid::{render_columns, AccuracyTable};
use super::LearnError;
use crate::vectorize::Method;

/// Outcome of a two-sided Welch t-test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WelchTest {
    pub t: f64,
    pub df: f64,
    pub p_value: f64,
    /// Both samples had zero variance, so the p-value is a convention:
    /// 1 for equal means, 0 otherwise.
    pub degenerate: bool,
}

fn mean_var(x: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mean = x.iter().sum::<f64>() / n;
    let var = x.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, var)
}

/// Two-sided unequal-variance t-test with Welch–Satterthwaite degrees of
/// freedom.
pub fn welch_t_test(a: &[f64], b: &[f64]) -> Result<WelchTest, LearnError> {
    if a.len() < 2 || b.len() < 2 {
        return Err(LearnError::TooFewObservations);
    }
    let (ma, va) = mean_var(a);
    let (mb, vb) = mean_var(b);
    let (sa, sb) = (va / a.len() as f64, vb / b.len() as f64);
    let se2 = sa + sb;
    if se2 == 0.0 {
        let equal = ma == mb;
        return Ok(WelchTest {
            t: if equal { 0.0 } else { f64::INFINITY.copysign(ma - mb) },
            df: f64::NAN,
            p_value: if equal { 1.0 } else { 0.0 },
            degenerate: true,
        });
    }
    let t = (ma - mb) / se2.sqrt();
    let df = se2 * se2 / (sa * sa / (a.len() as f64 - 1.0) + sb * sb / (b.len() as f64 - 1.0));
    let dist = StudentsT::new(0.0, 1.0, df).map_err(|e| LearnError::Statistics(e.to_string()))?;
    let p_value = (2.0 * dist.cdf(-t.abs())).min(1.0);
    Ok(WelchTest {
        t,
        df,
        p_value,
        degenerate: false,
    })
}

/// One pairwise comparison of methods within a strategy.
#[derive(Debug, Clone, PartialEq)]
pub struct StatsRow {
    pub strategy: String,
    pub a: Method,
    pub b: Method,
    pub test: WelchTest,
}

/// For each strategy, takes each method's best fixed combination (highest
/// mean) and t-tests every pair of methods on their per-run accuracies.
pub fn method_stats(table: &AccuracyTable) -> Result<Vec<StatsRow>, LearnError> {
    let mut rows = Vec::new();
    for strategy in table.strategies() {
        let combos = table.combinations(&strategy);
        let best: Vec<(Method, Vec<f64>)> = Method::ALL
            .iter()
            .filter_map(|&m| {
                combos
                    .iter()
                    .filter(|c| c.method == m)
                    .fold(None, |best: Option<&super::grid::Combination>, c| match best {
                        Some(b) if b.mean >= c.mean => Some(b),
                        _ => Some(c),
                    })
                    .map(|c| (m, c.accuracies.clone()))
            })
            .collect();
        for i in 0..best.len() {
            for j in i + 1..best.len() {
                rows.push(StatsRow {
                    strategy: strategy.clone(),
                    a: best[i].0,
                    b: best[j].0,
                    test: welch_t_test(&best[i].1, &best[j].1)?,
                });
            }
        }
    }
    Ok(rows)
}

pub fn write_stats_csv<W: Write>(mut w: W, rows: &[StatsRow]) -> std::io::Result<()> {
    writeln!(w, "strategy,method_a,method_b,t,df,p_value,degenerate")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            r.strategy, r.a, r.b, r.test.t, r.test.df, r.test.p_value, r.test.degenerate
        )?;
    }
    Ok(())
}

/// Method pairs × strategies matrix of p-values; `*` marks degenerate tests.
pub fn render_stats(rows: &[StatsRow]) -> String {
    let mut strategies: Vec<&str> = Vec::new();
    let mut pairs: Vec<(Method, Method)> = Vec::new();
    for r in rows {
        if !strategies.contains(&r.strategy.as_str()) {
            strategies.push(&r.strategy);
        }
        if !pairs.contains(&(r.a, r.b)) {
            pairs.push((r.a, r.b));
        }
    }
    let mut table = vec![std::iter::once("p-value".to_string())
        .chain(strategies.iter().map(|s| s.to_string()))
        .collect::<Vec<_>>()];
    for (a, b) in pairs {
        let mut row = vec![format!("{a} vs {b}")];
        for s in &strategies {
            row.push(
                rows.iter()
                    .find(|r| r.strategy == *s && r.a == a && r.b == b)
                    .map_or("-".into(), |r| {
                        format!("{:.2e}{}", r.test.p_value, if r.test.degenerate { "*" } else { "" })
                    }),
            );
        }
        table.push(row);
    }
    render_columns(&table)
}
