//! Acceptance suite. One test per criterion; each prints its own
//! pass/fail line through the harness.
//!
//! 1. Golden reproduction of the three-alternative service-selection
//!    problem, every intermediate within 1e-3, final order exact.
//! 2. Strong completion reproduces the printed example edges exactly.
//! 3. The five-vertex example graph is valid but not strong.
//! 4. Randomized property suite, 1000 cases per law.
//! 5. Round trips: interval <-> grey within one unit of floating
//!    rounding on 10^4 cases; JSON problem/report formats lossless.

use std::cmp::Ordering;
use std::time::Instant;

use proptest::prelude::*;

use grey_madm::decision::{
    aggregate, normalize, propagate_influence, rank, solve, Attribute, AttributeKind,
    DecisionProblem, SolveOptions,
};
use grey_madm::graph::{GreyGraph, VertexId};
use grey_madm::grey::{GreyInterval, GreyNumber};
use grey_madm::io::{
    emit_report, parse_graph, parse_problem, problem_to_document, ProblemDocument, ProblemFormat,
    Report, ReportFormat,
};
use grey_madm::matrix::GreyMatrix;

const EXAMPLE4_JSON: &str = include_str!("../../../data/example4.json");
const EX21_JSON: &str = include_str!("../../../data/ex21.json");
const EX22_JSON: &str = include_str!("../../../data/ex22_vertices.json");

const TOLERANCE: f64 = 1e-3;

fn assert_close(actual: f64, expected: f64, what: &str) {
    assert!(
        (actual - expected).abs() < TOLERANCE,
        "{what}: got {actual}, expected {expected} within {TOLERANCE}"
    );
}

#[test]
fn criterion_1_worked_example_reproduction() {
    let started = Instant::now();
    let problem = parse_problem(EXAMPLE4_JSON.as_bytes(), ProblemFormat::Json).unwrap();
    let solution = solve(&problem, SolveOptions::default()).unwrap();

    let normalized_intervals = [
        [[0.0000, 0.6667], [0.2000, 0.8000], [0.1667, 0.6667]],
        [[0.5000, 1.0000], [0.0000, 0.6000], [0.5000, 1.0000]],
        [[0.3333, 0.8333], [0.6000, 1.0000], [0.0000, 0.5000]],
    ];
    let kernel_matrix = [
        [0.3333, 0.5000, 0.4167],
        [0.7500, 0.3000, 0.7500],
        [0.5833, 0.8000, 0.2500],
    ];
    let greyness_matrix = [
        [0.6667, 0.6000, 0.5000],
        [0.5000, 0.6000, 0.5000],
        [0.5000, 0.4000, 0.5000],
    ];
    let propagated_kernel = [
        [0.5250, 0.6625, 0.5250],
        [0.9150, 0.6375, 0.8700],
        [0.8483, 1.0125, 0.4283],
    ];
    let propagated_greyness = [
        [0.6667, 0.6667, 0.6667],
        [0.6000, 0.6000, 0.6000],
        [0.5000, 0.5000, 0.5000],
    ];
    for i in 0..3 {
        for j in 0..3 {
            let entry = solution.normalized.entries.get(i, j);
            let interval = entry.to_interval();
            assert_close(
                interval.lower,
                normalized_intervals[i][j][0],
                &format!("normalized lower ({i},{j})"),
            );
            assert_close(
                interval.upper,
                normalized_intervals[i][j][1],
                &format!("normalized upper ({i},{j})"),
            );
            assert_close(entry.kernel, kernel_matrix[i][j], &format!("kernel ({i},{j})"));
            assert_close(
                entry.greyness,
                greyness_matrix[i][j],
                &format!("greyness ({i},{j})"),
            );
            let propagated = solution.propagated.get(i, j);
            assert_close(
                propagated.kernel,
                propagated_kernel[i][j],
                &format!("propagated kernel ({i},{j})"),
            );
            assert_close(
                propagated.greyness,
                propagated_greyness[i][j],
                &format!("propagated greyness ({i},{j})"),
            );
        }
    }

    let aggregates = [(0.5731, 0.6667), (0.8089, 0.6000), (0.8218, 0.5000)];
    let deltas = [0.3439, 0.5056, 0.5479];
    for (i, ((kernel, greyness), delta)) in aggregates.iter().zip(deltas).enumerate() {
        assert_close(
            solution.aggregates[i].kernel,
            *kernel,
            &format!("aggregate kernel X{}", i + 1),
        );
        assert_close(
            solution.aggregates[i].greyness,
            *greyness,
            &format!("aggregate greyness X{}", i + 1),
        );
        assert_close(
            solution.ranking.entries[i].score.delta,
            delta,
            &format!("delta X{}", i + 1),
        );
    }

    assert_eq!(solution.ranking.order, vec![2, 1, 0], "final order");
    let ordered: Vec<&str> = solution
        .ranking
        .order
        .iter()
        .map(|&i| solution.alternatives[i].as_str())
        .collect();
    assert_eq!(ordered, ["X3", "X2", "X1"]);

    assert!(
        started.elapsed().as_secs_f64() < 1.0,
        "solve took {:?}, budget is 1s",
        started.elapsed()
    );
}

#[test]
fn criterion_2_strong_completion_exact_edges() {
    let input = parse_graph(EX22_JSON.as_bytes(), false).unwrap();
    let completed =
        GreyGraph::strong_completion(input.vertices().map(|(id, v)| (id.clone(), v)));
    let expected = [
        ("x1", "x2", 0.3, 0.6),
        ("x1", "x3", 0.5, 0.6),
        ("x1", "x4", 0.4, 0.7),
        ("x2", "x3", 0.3, 0.5),
        ("x2", "x4", 0.3, 0.7),
        ("x3", "x4", 0.4, 0.7),
    ];
    assert_eq!(completed.edge_count(), expected.len());
    for (a, b, kernel, greyness) in expected {
        let value = completed
            .edge_value(&VertexId::new(a), &VertexId::new(b))
            .unwrap_or_else(|| panic!("missing edge {a}--{b}"));
        assert_eq!(value.kernel, kernel, "edge {a}--{b} kernel");
        assert_eq!(value.greyness, greyness, "edge {a}--{b} greyness");
    }
    assert!(completed.is_strong());
}

#[test]
fn criterion_3_five_vertex_graph_validity() {
    let graph = parse_graph(EX21_JSON.as_bytes(), false).unwrap();
    assert_eq!(graph.vertex_count(), 5);
    assert_eq!(graph.edge_count(), 10);
    let report = graph.validate();
    assert!(
        report.violations.is_empty(),
        "expected an empty report, got: {report}"
    );
    assert!(!graph.is_strong());
}

// ---------------------------------------------------------------------
// criterion 4: randomized property suite
// ---------------------------------------------------------------------

fn grey_number() -> impl Strategy<Value = GreyNumber> {
    (-2.0..=2.0f64, 0.0..=1.5f64).prop_map(|(k, g)| GreyNumber::new(k, g))
}

fn unit_interval() -> impl Strategy<Value = GreyInterval> {
    (0.0..=1.0f64, 0.0..=1.0f64)
        .prop_map(|(a, b)| GreyInterval::new(a.min(b), a.max(b)).unwrap())
}

const POOL: [&str; 4] = ["v0", "v1", "v2", "v3"];

/// Valid grey graph over a subset of a fixed label pool; edge values are
/// derived from the endpoint bounds so validity holds by construction.
fn valid_graph(pool: &'static [&'static str]) -> impl Strategy<Value = GreyGraph> {
    (
        proptest::collection::vec(
            proptest::option::of((0.0..=1.0f64, 0.0..=1.0f64)),
            pool.len(),
        ),
        proptest::collection::vec(
            (any::<bool>(), 0.0..=1.0f64, 0.0..=1.0f64),
            pool.len() * (pool.len() - 1) / 2,
        ),
    )
        .prop_map(move |(weights, edge_draws)| {
            let vertices: Vec<(VertexId, GreyNumber)> = weights
                .iter()
                .enumerate()
                .filter_map(|(i, w)| w.map(|(k, g)| (VertexId::new(pool[i]), GreyNumber::new(k, g))))
                .collect();
            let mut edges = Vec::new();
            let mut draw = edge_draws.iter();
            for i in 0..vertices.len() {
                for j in i + 1..vertices.len() {
                    let Some(&(present, tk, tg)) = draw.next() else {
                        break;
                    };
                    if present {
                        let (p, q) = (&vertices[i], &vertices[j]);
                        let kernel_bound = p.1.kernel.min(q.1.kernel);
                        let greyness_bound = p.1.greyness.max(q.1.greyness);
                        edges.push((
                            p.0.clone(),
                            q.0.clone(),
                            GreyNumber::new(
                                tk * kernel_bound,
                                greyness_bound + tg * (1.0 - greyness_bound).max(0.0),
                            ),
                        ));
                    }
                }
            }
            GreyGraph::build(vertices, edges, true).unwrap()
        })
}

fn lattice(lo: i32, hi: i32) -> impl Strategy<Value = f64> {
    (lo..=hi).prop_map(|v| f64::from(v) / 32.0)
}

prop_compose! {
    fn lattice_interval()(a in lattice(0, 320), w in lattice(0, 64)) -> GreyInterval {
        GreyInterval::new(a, a + w).unwrap()
    }
}

/// Random decision problem with identity influence and lattice-valued
/// data (keeps distinct ranking scores well separated from rounding).
fn identity_problem() -> impl Strategy<Value = DecisionProblem> {
    (1..5usize, 1..4usize).prop_flat_map(|(n, m)| {
        (
            proptest::collection::vec(proptest::collection::vec(lattice_interval(), m), n),
            proptest::collection::vec(any::<bool>(), m),
            proptest::collection::vec(lattice(0, 32), m),
            proptest::collection::vec(lattice(0, 16), m),
        )
            .prop_map(move |(rows, kinds, weight_kernels, weight_greyness)| {
                let attributes = (0..m)
                    .map(|j| Attribute {
                        name: format!("a{j}"),
                        kind: if kinds[j] {
                            AttributeKind::Benefit
                        } else {
                            AttributeKind::Cost
                        },
                        weight: GreyNumber::new(weight_kernels[j], weight_greyness[j]),
                    })
                    .collect();
                DecisionProblem::new(
                    (0..n).map(|i| format!("X{i}")).collect(),
                    attributes,
                    rows,
                    GreyMatrix::identity(m),
                )
                .unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn criterion_4a_combined_greyness_is_operand_max(x in grey_number(), y in grey_number()) {
        let expected = x.greyness.max(y.greyness);
        prop_assert_eq!((x + y).greyness, expected);
        prop_assert_eq!((x * y).greyness, expected);
    }

    #[test]
    fn criterion_4b_sum_kernel_matches_minkowski_midpoint(
        a in unit_interval(),
        b in unit_interval(),
    ) {
        // oracle: endpoint interval addition
        let oracle = GreyInterval::new(a.lower + b.lower, a.upper + b.upper).unwrap();
        let sum = GreyNumber::from_interval(a) + GreyNumber::from_interval(b);
        prop_assert!((sum.kernel - oracle.midpoint()).abs() <= 1e-12);
    }

    #[test]
    fn criterion_4c_union_valid_commutative_idempotent(
        g1 in valid_graph(&POOL),
        g2 in valid_graph(&POOL),
    ) {
        let union = g1.union(&g2);
        prop_assert!(union.validate().is_valid());
        prop_assert_eq!(&union, &g2.union(&g1));
        prop_assert_eq!(g1.union(&g1), g1);
    }

    #[test]
    fn criterion_4d_strong_completion_is_strong(
        weights in proptest::collection::vec((0.0..=1.0f64, 0.0..=1.0f64), 1..5)
    ) {
        let vertices: Vec<_> = weights
            .into_iter()
            .enumerate()
            .map(|(i, (k, g))| (VertexId::new(POOL[i]), GreyNumber::new(k, g)))
            .collect();
        let completed = GreyGraph::strong_completion(vertices);
        prop_assert!(completed.is_strong());
        prop_assert!(completed.validate().is_valid());
    }

    #[test]
    fn criterion_4e_cartesian_product_valid_with_counts(
        g1 in valid_graph(&POOL),
        g2 in valid_graph(&["w0", "w1", "w2"]),
    ) {
        prop_assume!(g1.vertex_count() > 0 && g2.vertex_count() > 0);
        let product = g1.cartesian_product(&g2);
        prop_assert_eq!(product.vertex_count(), g1.vertex_count() * g2.vertex_count());
        prop_assert_eq!(
            product.edge_count(),
            g1.vertex_count() * g2.edge_count() + g2.vertex_count() * g1.edge_count()
        );
        prop_assert!(product.validate().is_valid());
    }

    #[test]
    fn criterion_4f_identity_influence_equals_classical_aggregation(
        problem in identity_problem()
    ) {
        let solution = solve(&problem, SolveOptions::default()).unwrap();

        // independent classical route: weighted grey aggregation of the
        // normalized matrix, no propagation step involved
        let normalized = normalize(&problem);
        let weights = problem.weights();
        let n = problem.alternatives().len();
        for i in 0..n {
            let mut kernel = 0.0;
            let mut greyness = 0.0f64;
            for (j, weight) in weights.iter().enumerate() {
                let entry = normalized.entries.get(i, j);
                kernel += weight.kernel * entry.kernel;
                greyness = greyness.max(weight.greyness.max(entry.greyness));
            }
            prop_assert_eq!(solution.aggregates[i].kernel, kernel);
            prop_assert_eq!(solution.aggregates[i].greyness, greyness);
            let gamma = 1.0 / (1.0 + greyness);
            prop_assert_eq!(solution.ranking.entries[i].score.delta, gamma * kernel);
        }
        let classical = rank(&solution.aggregates);
        prop_assert_eq!(&solution.ranking.order, &classical.order);
    }

    #[test]
    fn criterion_4g_ranking_invariant_under_kernel_scaling(
        problem in identity_problem(),
        c in 0.01..=100.0f64,
    ) {
        let normalized = normalize(&problem);
        let influence = problem.influence();
        let weights = problem.weights();

        let base = aggregate(
            &propagate_influence(&normalized.entries, influence).unwrap(),
            &weights,
        )
        .unwrap();
        let base_rank = rank(&base);

        // skip configurations with near-tied scores: a tie is broken by
        // index order and stays a tie under scaling, but scores separated
        // by less than rounding noise have no stable order to preserve
        let deltas: Vec<f64> = base.iter().map(|g| g.relative_score().delta).collect();
        for i in 0..deltas.len() {
            for j in i + 1..deltas.len() {
                let gap = (deltas[i] - deltas[j]).abs();
                prop_assume!(gap == 0.0 || gap > 1e-9);
            }
        }

        let scaled_entries = normalized.entries.map(|g| GreyNumber::new(c * g.kernel, g.greyness));
        let scaled = aggregate(
            &propagate_influence(&scaled_entries, influence).unwrap(),
            &weights,
        )
        .unwrap();
        let scaled_rank = rank(&scaled);
        prop_assert_eq!(base_rank.order, scaled_rank.order);
    }

    #[test]
    fn criterion_4h_comparator_is_a_total_preorder(
        x in grey_number(),
        y in grey_number(),
        z in grey_number(),
    ) {
        // totality and antisymmetry on the (delta, gamma) key
        prop_assert_eq!(x.compare(&y), y.compare(&x).reverse());
        prop_assert_eq!(x.compare(&x), Ordering::Equal);

        // transitivity
        use Ordering::*;
        let (xy, yz, xz) = (x.compare(&y), y.compare(&z), x.compare(&z));
        match (xy, yz) {
            (Less, Less) | (Less, Equal) | (Equal, Less) => prop_assert_eq!(xz, Less),
            (Greater, Greater) | (Greater, Equal) | (Equal, Greater) => {
                prop_assert_eq!(xz, Greater)
            }
            (Equal, Equal) => prop_assert_eq!(xz, Equal),
            _ => {}
        }
    }
}

// ---------------------------------------------------------------------
// criterion 5: round trips
// ---------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn criterion_5_interval_round_trip_within_one_ulp(iv in unit_interval()) {
        let back = GreyNumber::from_interval(iv).to_interval();
        let tolerance = f64::EPSILON * iv.lower.abs().max(iv.upper.abs());
        prop_assert!(
            (back.lower - iv.lower).abs() <= tolerance,
            "lower: {} -> {}",
            iv.lower,
            back.lower
        );
        prop_assert!(
            (back.upper - iv.upper).abs() <= tolerance,
            "upper: {} -> {}",
            iv.upper,
            back.upper
        );
    }
}

#[test]
fn criterion_5_json_problem_and_report_round_trip_losslessly() {
    // problem document: bytes -> document -> bytes -> document
    let document: ProblemDocument = serde_json::from_str(EXAMPLE4_JSON).unwrap();
    let emitted = serde_json::to_vec(&document).unwrap();
    let reparsed: ProblemDocument = serde_json::from_slice(&emitted).unwrap();
    assert_eq!(reparsed, document);

    // problem -> document -> problem keeps every matrix and influence
    // value bit-identical
    let problem = document.clone().into_problem().unwrap();
    let re_emitted = problem_to_document(&problem);
    let reparsed_problem = re_emitted.into_problem().unwrap();
    assert_eq!(reparsed_problem.matrix(), problem.matrix());
    assert_eq!(reparsed_problem.influence(), problem.influence());
    assert_eq!(reparsed_problem.alternatives(), problem.alternatives());

    // report: full-precision JSON round trip
    let solution = solve(&problem, SolveOptions::default()).unwrap();
    let report = Report::from_solution(&solution);
    let bytes = emit_report(&solution, ReportFormat::Json).unwrap();
    let reparsed_report: Report = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(reparsed_report, report);
}
