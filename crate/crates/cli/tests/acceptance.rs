//! Acceptance gate: one test per release criterion. Each test prints a
//! single `criterion N: pass — …` line (shown with `--nocapture`); the
//! harness result line doubles as the pass/fail record per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use rough_cayley::graph::{
    all_connection_sets, generates, is_minimal_cayley_set, symmetric_subsets_within,
    ConnectionSet, Graph,
};
use rough_cayley::group::{ElementSet, FiniteGroup};
use rough_cayley::laws::{fleet_acceptance, run_suite, LawOptions, SuiteReport};
use rough_cayley::rough::{rough_edge_cayley, rough_pseudo, rough_vertex_pseudo};

fn labels(group: &FiniteGroup, names: &[&str]) -> ElementSet {
    group.set_from_labels(names.iter().copied()).expect("known labels")
}

fn connection(group: &FiniteGroup, names: &[&str]) -> ConnectionSet {
    ConnectionSet::new(group, labels(group, names)).expect("valid connection set")
}

/// The dihedral-of-order-8 configuration shared by criteria 2 and 3.
fn order_eight_dihedral_setup() -> (FiniteGroup, ElementSet, ElementSet, ConnectionSet) {
    let group = FiniteGroup::dihedral(4).expect("dihedral group");
    let modulus = labels(&group, &["1", "P2"]);
    let vertices = labels(&group, &["P", "P2", "P3", "Pe", "P2e", "P3e"]);
    let s = connection(&group, &["e"]);
    (group, modulus, vertices, s)
}

#[test]
fn criterion_1_order_eight_cyclic_edge_pair_is_exact_and_fast() {
    let group = FiniteGroup::cyclic(8).expect("cyclic group");
    let modulus = labels(&group, &["0", "4"]);
    let s = connection(&group, &["1", "2", "6", "7"]);

    let pair = rough_edge_cayley(&group, modulus, &s).expect("edge pair");
    assert_eq!(pair.lower_connection, labels(&group, &["2", "6"]));
    assert_eq!(
        pair.upper_connection,
        labels(&group, &["1", "2", "3", "5", "6", "7"])
    );

    let components = pair.lower.components();
    assert_eq!(components.len(), 2, "lower graph component count");
    assert!(
        components.iter().all(|part| part.len() == 4),
        "each lower component has 4 vertices"
    );

    // Warm run above; time the fastest of a few repeats of the full
    // pair-plus-components computation.
    let elapsed = (0..5)
        .map(|_| {
            let start = Instant::now();
            let pair = rough_edge_cayley(&group, modulus, &s).expect("edge pair");
            std::hint::black_box(pair.lower.components());
            start.elapsed()
        })
        .min()
        .expect("timed runs");
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");

    println!(
        "criterion 1: pass — lower connection {{2, 6}}, upper {{1, 2, 3, 5, 6, 7}}, \
         two 4-vertex lower components, computed in {elapsed:?}"
    );
}

#[test]
fn criterion_2_order_eight_dihedral_vertex_pair_is_exact() {
    let (group, modulus, vertices, s) = order_eight_dihedral_setup();
    let pair = rough_vertex_pseudo(&group, modulus, vertices, &s, false).expect("vertex pair");

    assert_eq!(pair.upper.vertices(), group.all(), "upper vertex set");
    assert_eq!(
        pair.lower.vertices(),
        labels(&group, &["P", "P3", "Pe", "P3e"]),
        "lower vertex set"
    );
    assert_eq!(pair.lower_connection, ElementSet::EMPTY, "lower connection");

    println!(
        "criterion 2: pass — upper vertices are all 8 elements, lower vertices \
         {{P, P3, Pe, P3e}}, lower connection empty"
    );
}

#[test]
fn criterion_3_order_eight_dihedral_full_pair_is_exact() {
    let (group, modulus, vertices, s) = order_eight_dihedral_setup();
    let pair = rough_pseudo(&group, modulus, vertices, &s, false).expect("full pair");

    assert_eq!(
        pair.lower.vertices(),
        labels(&group, &["P", "P3", "Pe", "P3e"]),
        "lower vertex set"
    );
    assert_eq!(pair.lower_connection, ElementSet::EMPTY, "lower connection");
    assert_eq!(pair.lower.edge_count(), 0, "lower edge count");
    assert_eq!(
        pair.upper_connection,
        labels(&group, &["e", "P2e"]),
        "upper connection"
    );

    println!(
        "criterion 3: pass — full-family lower is ({{P, P3, Pe, P3e}}; {{}}), \
         upper connection {{e, P2e}}"
    );
}

#[test]
fn criterion_4_law_suites_pass_over_the_whole_fleet() {
    // Catalogue codes that the fleet suites must cover with at least one case.
    const REQUIRED_LAWS: &[&str] = &[
        "3.1(1)", "3.1(2)", "3.1(3)", "3.1(4)", "3.1(5)", "3.1(6)", "3.1(7)", "3.1(8)", "3.1(9)",
        "3.2", "3.3", "2.2", "2.4", "2.5", "2.6", "2.7", "4.2", "4.4(1)", "4.4(2)", "4.4(3)",
        "4.4(4)", "4.4(5)", "4.4(6)", "4.4(7)", "4.4(8)", "4.4(9)", "4.6", "5.2", "5.4(1)",
        "5.4(2)", "5.4(3)", "5.4(4)", "5.4(5)", "5.4(6)", "5.4(7)", "5.4(8)", "5.4(9)", "5.6",
        "5.7", "5.8", "6.2", "6.4(1)", "6.4(2)", "6.4(3)", "6.4(4)", "6.4(5)", "6.4(6)", "6.4(7)",
        "6.6", "6.5",
    ];

    let options = LawOptions::default();
    assert!(options.samples >= 500, "sampled tier must draw >= 500 configs");
    assert_eq!(options.exhaustive_max_order, 8, "exhaustive tier bound");

    let fleet = fleet_acceptance();
    assert_eq!(fleet.len(), 15, "cyclic orders 2..=12 plus dihedral 1..=4");

    let start = Instant::now();
    let reports: Vec<SuiteReport> = fleet
        .iter()
        .map(|(name, group)| run_suite(name, group, &options))
        .collect();
    let elapsed = start.elapsed();

    let mut total_cases = 0u64;
    for report in &reports {
        assert_eq!(
            report.exhaustive,
            report.order <= 8,
            "{} sweep tier",
            report.group_name
        );
        for law in &report.outcomes {
            assert_eq!(
                law.violations, 0,
                "{} law {} violated: {:?}",
                report.group_name, law.code, law.witnesses
            );
            total_cases += law.cases;
        }
    }
    for code in REQUIRED_LAWS {
        let cases: u64 = reports
            .iter()
            .flat_map(|report| &report.outcomes)
            .filter(|law| law.code == *code)
            .map(|law| law.cases)
            .sum();
        assert!(cases > 0, "law {code} never exercised");
    }
    assert!(
        elapsed < Duration::from_secs(300),
        "fleet run took {elapsed:?}"
    );

    println!(
        "criterion 4: pass — {} groups, {} cases, 0 violations in {elapsed:?}",
        reports.len(),
        total_cases
    );
}

#[test]
fn criterion_5_counterexample_regressions_reproduce_exactly() {
    let options = LawOptions::default();

    let three = FiniteGroup::dihedral(3).expect("dihedral group");
    let report = run_suite("dihedral:3", &three, &options);
    for index in 1..=6 {
        let code = format!("4.5({index})");
        let law = report
            .outcomes
            .iter()
            .find(|law| law.code == code)
            .unwrap_or_else(|| panic!("missing regression {code}"));
        assert_eq!((law.cases, law.violations), (1, 0), "{code}");
    }

    let four = FiniteGroup::dihedral(4).expect("dihedral group");
    let report = run_suite("dihedral:4", &four, &options);
    for index in 1..=6 {
        let code = format!("5.5({index})");
        let law = report
            .outcomes
            .iter()
            .find(|law| law.code == code)
            .unwrap_or_else(|| panic!("missing regression {code}"));
        assert_eq!((law.cases, law.violations), (1, 0), "{code}");
    }

    println!(
        "criterion 5: pass — regressions 4.5(1)-(6) and 5.5(1)-(6) each hold \
         with one exact case and zero violations"
    );
}

#[test]
fn criterion_6_connectivity_equals_generation_everywhere() {
    let mut checked = 0u64;
    for (name, group) in fleet_acceptance() {
        for set in all_connection_sets(&group) {
            let cs = ConnectionSet::new(&group, set).expect("valid connection set");
            let graph = Graph::cayley(&group, &cs).expect("graph on the whole group");
            assert_eq!(
                graph.is_connected().expect("nonempty vertex set"),
                generates(&group, set),
                "{name} S={}",
                group.format_set(set)
            );
            checked += 1;
        }
    }
    assert!(checked > 0);
    println!(
        "criterion 6: pass — connectivity matched generation for {checked} \
         connection sets with zero mismatches"
    );
}

#[test]
fn criterion_7_minimal_sets_are_optimally_connected() {
    let mut minimal = 0u64;
    let mut oracle_checked = 0u64;
    for (name, group) in fleet_acceptance() {
        for set in all_connection_sets(&group) {
            let cs = ConnectionSet::new(&group, set).expect("valid connection set");
            if !is_minimal_cayley_set(&group, &cs) {
                continue;
            }
            minimal += 1;
            let graph = Graph::cayley(&group, &cs).expect("graph on the whole group");
            let lambda = graph.edge_connectivity().expect("connected graph");
            assert_eq!(
                lambda,
                set.len(),
                "{name} S={}",
                group.format_set(set)
            );
            if graph.edge_count() <= 24 {
                oracle_checked += 1;
                assert_eq!(
                    graph.edge_connectivity_by_deletion().expect("small graph"),
                    lambda,
                    "{name} S={} deletion oracle",
                    group.format_set(set)
                );
            }
        }
    }
    assert!(minimal > 0 && oracle_checked > 0);
    println!(
        "criterion 7: pass — {minimal} minimal connection sets all satisfy \
         edge-connectivity = |S| ({oracle_checked} re-verified by edge deletion)"
    );
}

#[test]
fn criterion_8_vertex_dichotomy_holds_for_every_subgroup_configuration() {
    let mut cases = 0u64;
    for (name, group) in fleet_acceptance() {
        let normals = group.normal_subgroups();
        for h in group.subgroups() {
            for set in symmetric_subsets_within(&group, h) {
                let cs = ConnectionSet::new(&group, set).expect("valid connection set");
                let x = Graph::pseudo_cayley(&group, h, &cs, true).expect("subgroup graph");
                for &n in &normals {
                    let pair =
                        rough_vertex_pseudo(&group, n, h, &cs, true).expect("vertex pair");
                    let nested = n.is_subset_of(h);
                    let exact = pair.lower == x && pair.upper == x;
                    let empty_lower = pair.lower.vertices().is_empty();
                    assert_eq!(
                        nested,
                        exact,
                        "{name} H={} N={} S={}",
                        group.format_set(h),
                        group.format_set(n),
                        group.format_set(set)
                    );
                    assert_eq!(
                        !nested,
                        empty_lower,
                        "{name} H={} N={} S={}",
                        group.format_set(h),
                        group.format_set(n),
                        group.format_set(set)
                    );
                    cases += 1;
                }
            }
        }
    }
    assert!(cases > 0);
    println!(
        "criterion 8: pass — subgroup/modulus dichotomy held for {cases} \
         (H, N, S) configurations with zero mismatches"
    );
}

#[test]
fn criterion_9_repeated_runs_emit_byte_identical_outputs() {
    let run_once = |dir: &std::path::Path| -> Vec<(String, Vec<u8>)> {
        let json = dir.join("report.json");
        let dots = dir.join("dots");
        let run = Command::new(env!("CARGO_BIN_EXE_rough-cayley"))
            .args([
                "approx",
                "edge",
                "cyclic:8",
                "--N",
                "0,4",
                "--S",
                "1,2,6,7",
                "--json",
                json.to_str().expect("utf-8 path"),
                "--dot",
                dots.to_str().expect("utf-8 path"),
            ])
            .output()
            .expect("binary runs");
        assert!(run.status.success());
        let mut outputs = vec![(
            "report.json".to_string(),
            std::fs::read(&json).expect("json written"),
        )];
        for name in ["lower", "original", "upper"] {
            outputs.push((
                format!("{name}.dot"),
                std::fs::read(dots.join(format!("{name}.dot"))).expect("dot written"),
            ));
        }
        outputs
    };

    let first_dir = tempfile::tempdir().expect("temp dir");
    let second_dir = tempfile::tempdir().expect("temp dir");
    let first = run_once(first_dir.path());
    let second = run_once(second_dir.path());
    assert_eq!(first, second, "outputs differ between runs");

    println!(
        "criterion 9: pass — repeated runs produced byte-identical JSON and \
         DOT outputs ({} files compared)",
        first.len()
    );
}
