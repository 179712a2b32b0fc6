//! Property tests for the invariants of each layer, checked against the
//! reference computations in `acceptance/oracles.rs`.

#[path = "acceptance/oracles.rs"]
mod oracles;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use tdapipe::complex::{FaceCompletion, FilteredComplex, Simplex};
use tdapipe::data::{generate_dynamic_dataset, linked_twisted_map, load_idx, write_idx};
use tdapipe::diagram::{bottleneck_distance, wasserstein_distance, PersistenceDiagram, PersistencePoint};
use tdapipe::filtrations::{
    alpha_complex_2d, density_filtration, flag_complex, height_filtration, image_complex, radial_filtration,
    rips_complex, BinaryImage, GreyImage, PointCloud, WeightedGraph, HEIGHT_DIRECTIONS, RADIAL_CENTERS,
};
use tdapipe::learn::{
    cross_validate, fit_predict, grid_search, welch_t_test, ClassifierSpec, GridConfig, Protocol,
};
use tdapipe::persistence::{betti_at, compute_persistence, reduce};
use tdapipe::rng::rng_from_seed;
use tdapipe::vectorize::{
    betti_curve, persistence_image, persistence_landscape, silhouette, DimStrategy, FilterStrategy,
    Range, VectorizerSpec,
};

fn build(filtration: &[(Vec<u32>, f64)]) -> FilteredComplex {
    let mut k = FilteredComplex::new();
    for (s, v) in filtration {
        k.add_simplex(Simplex::new(s.iter().copied()).unwrap(), *v, FaceCompletion::Require)
            .unwrap();
    }
    k
}

fn sorted_pairs(d: &PersistenceDiagram) -> Vec<(f64, f64)> {
    let mut p = d.pairs();
    p.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    p
}

fn diagram_strategy(max_points: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((0.0..10.0f64, 0.0..5.0f64), 0..=max_points)
        .prop_map(|v| v.into_iter().map(|(b, p)| (b, b + p)).collect())
}

fn to_diagram(pairs: &[(f64, f64)]) -> PersistenceDiagram {
    PersistenceDiagram::from_pairs(0, pairs.iter().copied()).unwrap()
}

fn cloud_strategy(max: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((0.0..1.0f64, 0.0..1.0f64), 3..=max)
}

fn binary_strategy() -> impl Strategy<Value = (usize, usize, Vec<bool>)> {
    (2usize..9, 2usize..9).prop_flat_map(|(w, h)| {
        prop::collection::vec(any::<bool>(), w * h).prop_map(move |px| (w, h, px))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // complex

    #[test]
    fn boundary_of_boundary_is_empty(mut vs in prop::collection::btree_set(0u32..20, 3..6)) {
        let s = Simplex::new(std::mem::take(&mut vs)).unwrap();
        let mut count = std::collections::BTreeMap::<Simplex, usize>::new();
        for f in s.boundary() {
            for g in f.boundary() {
                *count.entry(g).or_default() += 1;
            }
        }
        prop_assert!(count.values().all(|c| c % 2 == 0));
    }

    #[test]
    fn filtration_order_puts_faces_first(seed in any::<u64>()) {
        let f = oracles::random_filtration(&mut rng_from_seed(seed), 7, 3, 50);
        let k = build(&f);
        let order = k.sort_filtration();
        let mut position = vec![0; order.len()];
        for (i, &o) in order.iter().enumerate() {
            position[o] = i;
        }
        let index = |s: &Simplex| k.simplices().iter().position(|(t, _)| t == s).unwrap();
        for (i, (s, _)) in k.simplices().iter().enumerate() {
            for face in s.boundary() {
                prop_assert!(position[index(&face)] < position[i]);
            }
        }
    }

    #[test]
    fn constructors_output_validates(pts in cloud_strategy(12), (w, h, px) in binary_strategy()) {
        let cloud = PointCloud::from_xy(pts.iter().copied()).unwrap();
        prop_assert!(rips_complex(&cloud, 2, 0.6).unwrap().validate().is_ok());
        if let Ok(alpha) = alpha_complex_2d(&cloud) {
            prop_assert!(alpha.validate().is_ok());
        }
        let b = BinaryImage::new(w, h, px).unwrap();
        let grey = height_filtration(&b, HEIGHT_DIRECTIONS[3]).unwrap();
        prop_assert!(image_complex(&grey).validate().is_ok());
        let mut edges = Vec::new();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                if (i * 7 + j) % 3 != 0 {
                    edges.push((i, j, pts[i].0 + pts[j].1));
                }
            }
        }
        let g = WeightedGraph::new(pts.len(), edges).unwrap();
        prop_assert!(flag_complex(&g, 3).unwrap().validate().is_ok());
    }

    // filtrations

    #[test]
    fn rips_and_alpha_merge_like_union_find(pts in cloud_strategy(10)) {
        let cloud = PointCloud::from_xy(pts.iter().copied()).unwrap();
        let alpha = alpha_complex_2d(&cloud);
        prop_assume!(alpha.is_ok());
        let alpha = compute_persistence(&alpha.unwrap(), 0).unwrap().diagrams;
        let rips = compute_persistence(&rips_complex(&cloud, 1, f64::INFINITY).unwrap(), 0).unwrap().diagrams;

        let mut scales: Vec<f64> = Vec::new();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                scales.push((pts[i].0 - pts[j].0).hypot(pts[i].1 - pts[j].1));
            }
        }
        scales.sort_by(f64::total_cmp);
        scales.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        let mut probes = vec![scales[0] / 2.0, scales[scales.len() - 1] * 2.0];
        probes.extend(scales.windows(2).map(|w| (w[0] + w[1]) / 2.0));
        for t in probes {
            let expected = oracles::components(&pts, t);
            prop_assert_eq!(betti_at(&rips, t)[0], expected);
            prop_assert_eq!(betti_at(&alpha, (t / 2.0) * (t / 2.0))[0], expected);
        }
    }

    #[test]
    fn height_values_survive_padding((w, h, px) in binary_strategy(), extra_r in 0usize..4, extra_c in 0usize..4) {
        let small = BinaryImage::new(w, h, px.clone()).unwrap();
        let (bw, bh) = (w + extra_c, h + extra_r);
        let mut big_px = vec![false; bw * bh];
        for r in 0..h {
            for c in 0..w {
                big_px[r * bw + c] = px[r * w + c];
            }
        }
        let big = BinaryImage::new(bw, bh, big_px).unwrap();
        for v in HEIGHT_DIRECTIONS {
            let a = height_filtration(&small, v).unwrap();
            let b = height_filtration(&big, v).unwrap();
            for r in 0..h {
                for c in 0..w {
                    if small.is_lit(r, c) {
                        prop_assert_eq!(a.get(r, c), b.get(r, c));
                    }
                }
            }
        }
    }

    #[test]
    fn density_grows_with_radius((w, h, px) in binary_strategy(), r1 in 0.5..6.0f64, dr in 0.0..4.0f64) {
        let b = BinaryImage::new(w, h, px).unwrap();
        let lo = density_filtration(&b, r1).unwrap();
        let hi = density_filtration(&b, r1 + dr).unwrap();
        prop_assert!(lo.pixels().iter().zip(hi.pixels()).all(|(a, b)| a <= b));
    }

    #[test]
    fn flag_counts_match_triangle_enumeration(n in 1usize..10, mask in any::<u64>()) {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if mask >> (bit % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        let g = WeightedGraph::new(n, edges.iter().map(|&(u, v)| (u, v, (u + v) as f64))).unwrap();
        let k = flag_complex(&g, 2).unwrap();
        let counts = k.count_by_dimension();
        prop_assert_eq!(counts.get(1).copied().unwrap_or(0), edges.len());
        prop_assert_eq!(k.len(), n + edges.len() + oracles::triangle_count(n, &edges));
    }

    // persistence

    #[test]
    fn betti_matches_dense_elimination(seed in any::<u64>()) {
        let f = oracles::random_filtration(&mut rng_from_seed(seed), 7, 3, 50);
        let result = compute_persistence(&build(&f), 3).unwrap();
        for (t, expected) in oracles::sublevel_betti(&f, 3) {
            prop_assert_eq!(betti_at(&result.diagrams, t), expected, "at t = {}", t);
        }
    }

    #[test]
    fn pairing_accounts_for_every_simplex(seed in any::<u64>()) {
        let f = oracles::random_filtration(&mut rng_from_seed(seed), 7, 3, 50);
        let k = build(&f);
        let state = reduce(&k, 3);
        let mut seen = vec![false; k.len()];
        for &(b, d) in &state.pairs {
            prop_assert!(b < d);
            for i in [b, d] {
                prop_assert!(!seen[i]);
                seen[i] = true;
            }
        }
        for &u in &state.unpaired {
            prop_assert!(!seen[u]);
            seen[u] = true;
        }
        prop_assert!(seen.iter().all(|&s| s));

        let result = compute_persistence(&k, 3).unwrap();
        let births: usize = (0..=3)
            .map(|i| result.diagrams[i].len() + result.zero_persistence[i])
            .sum();
        let deaths: usize = (0..=3)
            .map(|i| result.diagrams[i].points().iter().filter(|p| !p.is_essential()).count() + result.zero_persistence[i])
            .sum();
        prop_assert_eq!(births + deaths, k.len());
    }

    #[test]
    fn diagrams_ignore_tie_breaking(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let f = oracles::random_filtration(&mut rng, 7, 3, 50);
        let mut relabel: Vec<u32> = (0..7).collect();
        relabel.shuffle(&mut rng);
        let mut g: Vec<(Vec<u32>, f64)> = f
            .iter()
            .map(|(s, v)| {
                let mut t: Vec<u32> = s.iter().map(|&x| relabel[x as usize]).collect();
                t.sort_unstable();
                (t, *v)
            })
            .collect();
        g.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        let a = compute_persistence(&build(&f), 3).unwrap();
        let b = compute_persistence(&build(&g), 3).unwrap();
        for dim in 0..=3 {
            prop_assert_eq!(sorted_pairs(&a.diagrams[dim]), sorted_pairs(&b.diagrams[dim]));
        }
    }

    // diagram distances

    #[test]
    fn distances_are_pseudometrics(a in diagram_strategy(5), b in diagram_strategy(5), c in diagram_strategy(5)) {
        let (a, b, c) = (to_diagram(&a), to_diagram(&b), to_diagram(&c));
        prop_assert_eq!(bottleneck_distance(&a, &a), 0.0);
        prop_assert_eq!(bottleneck_distance(&a, &b), bottleneck_distance(&b, &a));
        prop_assert!(bottleneck_distance(&a, &c) <= bottleneck_distance(&a, &b) + bottleneck_distance(&b, &c) + 1e-9);
        for p in [1.0, 2.0] {
            let w = |x: &PersistenceDiagram, y: &PersistenceDiagram| wasserstein_distance(x, y, p).unwrap();
            prop_assert_eq!(w(&a, &a), 0.0);
            prop_assert!((w(&a, &b) - w(&b, &a)).abs() <= 1e-12);
            prop_assert!(w(&a, &c) <= w(&a, &b) + w(&b, &c) + 1e-9);
        }
        prop_assert!(bottleneck_distance(&a, &b) <= wasserstein_distance(&a, &b, 1.0).unwrap() + 1e-12);
    }

    #[test]
    fn distances_match_enumeration(a in diagram_strategy(6), b in diagram_strategy(6)) {
        let (da, db) = (to_diagram(&a), to_diagram(&b));
        prop_assert!((bottleneck_distance(&da, &db) - oracles::brute_bottleneck(&a, &b)).abs() <= 1e-9);
        for p in [1.0, 2.0] {
            let got = wasserstein_distance(&da, &db, p).unwrap();
            prop_assert!((got - oracles::brute_wasserstein(&a, &b, p)).abs() <= 1e-9);
        }
    }

    // vectorize

    #[test]
    fn silhouette_is_the_mean_tent(a in diagram_strategy(20)) {
        let d = to_diagram(&a);
        let range = Range::new(0.0, 15.0);
        let live: Vec<&(f64, f64)> = a.iter().filter(|p| p.1 > p.0).collect();
        let got = silhouette(&d, 30, range);
        for (t, g) in range.grid(30).into_iter().zip(got) {
            let expected = if live.is_empty() {
                0.0
            } else {
                live.iter().map(|p| (t - p.0).min(p.1 - t).max(0.0)).sum::<f64>() / live.len() as f64
            };
            prop_assert!((g - expected).abs() <= 1e-12);
        }
    }

    #[test]
    fn betti_curve_counts_closed_intervals(raw in prop::collection::vec((0u8..20, 0u8..6), 0..20)) {
        // integer points on an integer grid, so deaths land on grid values
        let a: Vec<(f64, f64)> = raw.iter().map(|&(b, p)| (b as f64, (b + p) as f64)).collect();
        let d = to_diagram(&a);
        let range = Range::new(0.0, 24.0);
        let curve = betti_curve(&d, 25, range);
        for (t, v) in range.grid(25).into_iter().zip(curve) {
            let closing = a.iter().filter(|p| p.1 == t && p.0 < p.1).count();
            prop_assert_eq!(v as usize, betti_at(&[d.clone()], t)[0] + closing);
        }
    }

    #[test]
    fn doubling_points_doubles_the_image(a in diagram_strategy(10)) {
        let d = to_diagram(&a);
        let twice: Vec<(f64, f64)> = a.iter().chain(&a).copied().collect();
        let range = Range::new(0.0, 15.0);
        let one = persistence_image(&d, 8, 0.5, range);
        let two = persistence_image(&to_diagram(&twice), 8, 0.5, range);
        for (x, y) in one.iter().zip(&two) {
            prop_assert!((2.0 * x - y).abs() <= 1e-12 * (1.0 + y.abs()));
        }
    }

    #[test]
    fn landscapes_are_ordered_everywhere(a in diagram_strategy(15)) {
        let l = persistence_landscape(&to_diagram(&a), 4, 20, Range::new(0.0, 15.0));
        for k in 0..3 {
            for i in 0..20 {
                prop_assert!(l[k * 20 + i] >= l[(k + 1) * 20 + i]);
            }
        }
    }

    // learn

    #[test]
    fn scaled_features_keep_predictions(seed in any::<u64>(), exp in -3i32..4) {
        let c = 2f64.powi(exp);
        let mut rng = rng_from_seed(seed);
        use rand::Rng;
        let x: Vec<Vec<f64>> = (0..30).map(|_| (0..4).map(|_| rng.random::<f64>()).collect()).collect();
        let y: Vec<usize> = (0..30).map(|i| i % 3).collect();
        let q: Vec<Vec<f64>> = (0..10).map(|_| (0..4).map(|_| rng.random::<f64>()).collect()).collect();
        let scale = |m: &[Vec<f64>]| m.iter().map(|v| v.iter().map(|x| x * c).collect()).collect::<Vec<Vec<f64>>>();
        let (xs, qs) = (scale(&x), scale(&q));
        for k in [1, 3, 5] {
            let spec = ClassifierSpec::Knn { k };
            prop_assert_eq!(fit_predict(&spec, &x, &y, &q, 0).unwrap(), fit_predict(&spec, &xs, &y, &qs, 0).unwrap());
        }
        for lambda in [0.1, 1.0, 10.0] {
            let plain = fit_predict(&ClassifierSpec::RidgeOvr { lambda }, &x, &y, &q, 0).unwrap();
            let scaled = fit_predict(&ClassifierSpec::RidgeOvr { lambda: lambda * c * c }, &xs, &y, &qs, 0).unwrap();
            prop_assert_eq!(plain, scaled);
        }
    }

    #[test]
    fn welch_is_symmetric(a in prop::collection::vec(0.0..1.0f64, 2..12), b in prop::collection::vec(0.0..1.0f64, 2..12)) {
        let (x, y) = (welch_t_test(&a, &b).unwrap(), welch_t_test(&b, &a).unwrap());
        prop_assert_eq!(x.p_value, y.p_value);
    }

    // data

    #[test]
    fn orbits_stay_in_the_unit_square(r in 0.1..6.0f64, x in 0.0..1.0f64, y in 0.0..1.0f64) {
        let cloud = linked_twisted_map(r, (x, y), 500).unwrap();
        prop_assert!(cloud.points().iter().all(|p| (0.0..1.0).contains(&p[0]) && (0.0..1.0).contains(&p[1])));
    }

    #[test]
    fn idx_round_trip(n in 1usize..5, w in 1usize..6, h in 1usize..6, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = rng_from_seed(seed);
        let images: Vec<GreyImage> = (0..n)
            .map(|_| GreyImage::new(w, h, (0..w * h).map(|_| rng.random_range(0..=255u8) as f64).collect()).unwrap())
            .collect();
        let labels: Vec<u8> = (0..n).map(|i| (i % 10) as u8).collect();
        let dir = tempfile::tempdir().unwrap();
        let (ip, lp) = (dir.path().join("img.idx"), dir.path().join("lab.idx"));
        write_idx(&ip, &lp, &images, &labels).unwrap();
        let back = load_idx(&ip, &lp).unwrap();
        prop_assert_eq!(back.len(), n);
        for (s, img) in back.samples().iter().zip(&images) {
            match &s.payload {
                tdapipe::data::Payload::Image(got) => prop_assert_eq!(got.pixels(), img.pixels()),
                other => prop_assert!(false, "unexpected payload {:?}", other.kind()),
            }
        }
        prop_assert_eq!(back.labels(), labels.iter().map(|&l| l as usize).collect::<Vec<_>>());
    }
}

#[test]
fn vectorizers_send_empty_diagrams_to_zero() {
    let empty = PersistenceDiagram::default();
    let origin = PersistenceDiagram::new(vec![PersistencePoint::new(0.0, 0.0, 0).unwrap()]);
    let range = Range::new(0.0, 1.0);
    for m in tdapipe::vectorize::Method::ALL {
        for spec in m.default_grid() {
            for d in [&empty, &origin] {
                let v = spec.apply(d, range).unwrap();
                assert_eq!(v.len(), spec.len());
                assert!(v.iter().all(|&x| x == 0.0), "{spec} on {d:?}");
            }
        }
    }
}

#[test]
fn radial_values_are_distances() {
    let b = BinaryImage::new(28, 28, vec![true; 28 * 28]).unwrap();
    for c in RADIAL_CENTERS {
        let g = radial_filtration(&b, c).unwrap();
        assert_eq!(g.get(c.0 as usize, c.1 as usize), 0.0);
        assert_eq!(g.get(0, 0), ((c.0 * c.0 + c.1 * c.1) as f64).sqrt());
    }
}

#[test]
fn dynamic_dataset_is_a_function_of_its_inputs() {
    let a = generate_dynamic_dataset(&[2.0, 4.3], 3, 50, 9).unwrap();
    let b = generate_dynamic_dataset(&[2.0, 4.3], 3, 50, 9).unwrap();
    let c = generate_dynamic_dataset(&[2.0, 4.3], 3, 50, 10).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
}

fn toy_diagrams(classes: usize, per_class: usize, seed: u64) -> (Vec<Vec<PersistenceDiagram>>, Vec<usize>) {
    use rand::Rng;
    let mut rng = rng_from_seed(seed);
    let mut samples = Vec::new();
    let mut labels = Vec::new();
    for class in 0..classes {
        for _ in 0..per_class {
            let pts: Vec<(f64, f64)> = (0..6)
                .map(|_| {
                    let b = rng.random::<f64>();
                    (b, b + 0.2 + class as f64 * 0.5 * rng.random::<f64>())
                })
                .collect();
            samples.push(vec![to_diagram(&pts)]);
            labels.push(class);
        }
    }
    (samples, labels)
}

fn toy_grid(seed: u64) -> GridConfig {
    GridConfig {
        vectorizers: vec![
            "PI(n=5;sigma=0.1)".parse::<VectorizerSpec>().unwrap(),
            "BC(r=25)".parse().unwrap(),
            "PS(r=25)".parse().unwrap(),
        ],
        classifiers: vec![ClassifierSpec::Knn { k: 3 }, ClassifierSpec::RidgeOvr { lambda: 1.0 }, ClassifierSpec::forest(10)],
        strategies: vec![DimStrategy::Single(0), DimStrategy::Fused],
        filtration_strategy: FilterStrategy::Collapse,
        max_hom_dim: 0,
        protocol: Protocol::MonteCarlo { runs: 4, test_fraction: 0.25 },
        seed,
    }
}

#[test]
fn grid_search_is_deterministic_and_run_best_dominates() {
    let (samples, labels) = toy_diagrams(3, 12, 5);
    let a = grid_search(&samples, &labels, &toy_grid(17)).unwrap();
    let b = grid_search(&samples, &labels, &toy_grid(17)).unwrap();
    let (mut ca, mut cb) = (Vec::new(), Vec::new());
    a.write_csv(&mut ca).unwrap();
    b.write_csv(&mut cb).unwrap();
    assert_eq!(ca, cb);
    for strategy in a.strategies() {
        let best = a.run_best(&strategy);
        for combo in a.combinations(&strategy) {
            for (run, acc) in combo.accuracies.iter().enumerate() {
                assert!(best[run].accuracy >= *acc);
            }
        }
    }
}

#[test]
fn shuffled_labels_give_chance_accuracy() {
    use rand::Rng;
    let classes = 3;
    let n = 300;
    let mut rng = rng_from_seed(3);
    let x: Vec<Vec<f64>> = (0..n).map(|i| vec![(i % classes) as f64 + rng.random::<f64>() * 0.3, rng.random()]).collect();
    let mut y: Vec<usize> = (0..n).map(|i| i % classes).collect();
    y.shuffle(&mut rng);
    let protocol = Protocol::MonteCarlo { runs: 10, test_fraction: 0.2 };
    let p = 1.0 / classes as f64;
    // binomial null for the mean over 10 runs of 60 test samples
    let sd = (p * (1.0 - p) / (60.0 * 10.0)).sqrt();
    for spec in [ClassifierSpec::RidgeOvr { lambda: 1.0 }, ClassifierSpec::Knn { k: 5 }, ClassifierSpec::forest(30)] {
        let cv = cross_validate(&x, &y, &spec, &protocol, 11).unwrap();
        assert!((cv.mean - p).abs() <= 3.0 * sd, "{spec}: {}", cv.mean);
    }
}

#[test]
fn oracle_betti_of_circle_and_sphere() {
    let circle = oracles::closure(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
    let c: Vec<Vec<u32>> = circle.into_iter().collect();
    assert_eq!(oracles::betti_numbers(&c, 1), vec![1, 1]);
    let sphere = oracles::closure(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
    let s: Vec<Vec<u32>> = sphere.into_iter().collect();
    assert_eq!(oracles::betti_numbers(&s, 2), vec![1, 0, 1]);
}

#[test]
fn oracle_student_t_known_values() {
    // df = 1 is Cauchy: P(|T| > 1) = 1/2
    assert!((oracles::t_two_sided_p(1.0, 1.0) - 0.5).abs() < 1e-9);
    assert!((oracles::t_two_sided_p(0.0, 7.0) - 1.0).abs() < 1e-12);
    // df = 2: P(|T| > t) = 1 - t / sqrt(t^2 + 2)
    let t: f64 = 1.7;
    assert!((oracles::t_two_sided_p(t, 2.0) - (1.0 - t / (t * t + 2.0).sqrt())).abs() < 1e-9);
}

#[test]
fn oracle_matchings_by_hand() {
    let a = [(0.0, 4.0)];
    let b = [(1.0, 4.0), (0.0, 0.5)];
    assert_eq!(oracles::brute_bottleneck(&a, &b), 1.0);
    assert!((oracles::brute_wasserstein(&a, &b, 1.0) - 1.25).abs() < 1e-12);
}
