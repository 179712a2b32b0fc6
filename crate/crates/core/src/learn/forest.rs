//! Random forest of Gini CART trees with bootstrap samples and random
//! feature subsets.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::rng::{derive_seed, rng_from_seed, Xoshiro256PlusPlus};

enum Node {
    Leaf(usize),
    Split {
        feature: usize,
        threshold: f64,
        left: usize,
        right: usize,
    },
}

struct Tree {
    nodes: Vec<Node>,
}

impl Tree {
    fn predict(&self, x: &[f64]) -> usize {
        let mut at = 0;
        loop {
            match self.nodes[at] {
                Node::Leaf(class) => return class,
                Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => at = if x[feature] <= threshold { left } else { right },
            }
        }
    }
}

pub(crate) struct RandomForest {
    trees: Vec<Tree>,
    classes: Vec<usize>,
}

/// Training data shared by all trees: columns of features, labels as class
/// indices.
struct Data {
    columns: Vec<Vec<f64>>,
    y: Vec<usize>,
    class_count: usize,
}

impl RandomForest {
    pub(crate) fn fit(
        x: &[Vec<f64>],
        labels: &[usize],
        trees: usize,
        max_depth: Option<usize>,
        max_features: usize,
        seed: u64,
    ) -> Self {
        let mut classes = labels.to_vec();
        classes.sort_unstable();
        classes.dedup();
        let y = labels
            .iter()
            .map(|l| classes.binary_search(l).expect("label present"))
            .collect();
        let d = x[0].len();
        let data = Data {
            columns: (0..d).map(|j| x.iter().map(|r| r[j]).collect()).collect(),
            y,
            class_count: classes.len(),
        };
        let n = x.len();
        let trees = (0..trees)
            .map(|t| {
                let mut rng = rng_from_seed(derive_seed(seed, &[t as u64]));
                let sample: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
                grow(&data, sample, max_depth, max_features, &mut rng)
            })
            .collect();
        RandomForest { trees, classes }
    }

    /// Majority vote; ties go to the lowest label.
    pub(crate) fn predict(&self, x: &[f64]) -> usize {
        let mut votes = vec![0usize; self.classes.len()];
        for t in &self.trees {
            votes[t.predict(x)] += 1;
        }
        let best = votes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .map(|(i, _)| i)
            .expect("at least one class");
        self.classes[best]
    }
}

fn majority(counts: &[usize]) -> usize {
    counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .expect("at least one class")
}

fn gini_sum(counts: &[usize], total: usize) -> f64 {
    // total · gini = total − Σ c² / total
    if total == 0 {
        return 0.0;
    }
    let sq: f64 = counts.iter().map(|&c| (c * c) as f64).sum();
    total as f64 - sq / total as f64
}

fn grow(
    data: &Data,
    sample: Vec<usize>,
    max_depth: Option<usize>,
    max_features: usize,
    rng: &mut Xoshiro256PlusPlus,
) -> Tree {
    let d = data.columns.len();
    let mut nodes: Vec<Node> = Vec::new();
    let mut features: Vec<usize> = (0..d).collect();
    let mut pairs: Vec<(f64, usize)> = Vec::with_capacity(sample.len());
    // (node slot, sample indices, depth)
    let mut stack = vec![(0usize, sample, 0usize)];
    nodes.push(Node::Leaf(0));

    while let Some((slot, idx, depth)) = stack.pop() {
        let mut counts = vec![0usize; data.class_count];
        for &i in &idx {
            counts[data.y[i]] += 1;
        }
        let pure = counts.iter().filter(|&&c| c > 0).count() <= 1;
        if pure || idx.len() < 2 || max_depth.is_some_and(|m| depth >= m) {
            nodes[slot] = Node::Leaf(majority(&counts));
            continue;
        }

        features.shuffle(rng);
        let mut best: Option<(f64, usize, f64)> = None;
        let mut tried = 0;
        for &f in &features {
            if tried >= max_features && best.is_some() {
                break;
            }
            tried += 1;
            pairs.clear();
            pairs.extend(idx.iter().map(|&i| (data.columns[f][i], data.y[i])));
            pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
            if pairs[0].0 == pairs[pairs.len() - 1].0 {
                continue;
            }
            let mut left = vec![0usize; data.class_count];
            let mut right = counts.clone();
            for s in 0..pairs.len() - 1 {
                left[pairs[s].1] += 1;
                right[pairs[s].1] -= 1;
                if pairs[s].0 == pairs[s + 1].0 {
                    continue;
                }
                let nl = s + 1;
                let impurity = gini_sum(&left, nl) + gini_sum(&right, pairs.len() - nl);
                if best.is_none_or(|b| impurity < b.0) {
                    let threshold = pairs[s].0 + (pairs[s + 1].0 - pairs[s].0) / 2.0;
                    // the midpoint can round up to the right value
                    let threshold = if threshold >= pairs[s + 1].0 { pairs[s].0 } else { threshold };
                    best = Some((impurity, f, threshold));
                }
            }
        }

        let Some((_, feature, threshold)) = best else {
            nodes[slot] = Node::Leaf(majority(&counts));
            continue;
        };
        let (li, ri): (Vec<usize>, Vec<usize>) = idx
            .into_iter()
            .partition(|&i| data.columns[feature][i] <= threshold);
        let left = nodes.len();
        nodes.push(Node::Leaf(0));
        let right = nodes.len();
        nodes.push(Node::Leaf(0));
        nodes[slot] = Node::Split {
            feature,
            threshold,
            left,
            right,
        };
        stack.push((right, ri, depth + 1));
        stack.push((left, li, depth + 1));
    }
    Tree { nodes }
}
