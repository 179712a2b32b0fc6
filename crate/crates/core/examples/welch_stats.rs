//! Welch's t-test between two sets of per-run accuracies.

use tdapipe::learn::{mean_std, welch_t_test};

fn main() {
    let a = [0.960, 0.880, 0.933, 0.907, 0.960, 0.920, 0.960, 0.947, 0.907, 0.933];
    let b = [0.520, 0.493, 0.547, 0.480, 0.507, 0.453, 0.533, 0.547, 0.493, 0.520];
    for (name, x) in [("a", &a), ("b", &b)] {
        let (m, s) = mean_std(x);
        println!("{name}: {m:.3} ± {s:.3}");
    }
    let t = welch_t_test(&a, &b).unwrap();
    println!("t = {:.3}, df = {:.2}, p = {:.3e}", t.t, t.df, t.p_value);
}
