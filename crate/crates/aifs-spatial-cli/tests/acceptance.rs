use std::time::Instant;

use aifs_spatial::aifs::{AifsPattern, RealSequence};
use aifs_spatial::axioms::run_axioms;
use aifs_spatial::baseline::{similarity, MeasureId, MeasureParams};
use aifs_spatial::benchmarks::{case, cases, CELL_TOLERANCE};
use aifs_spatial::classify::{strong_classification, Decision};
use aifs_spatial::round::round4;
use aifs_spatial::spatial::{fuzzy_reduced_distance, real_reduced_distance, spatial_distance};

fn verdict(criterion: &str, ok: bool, detail: &str) -> String {
    let state = if ok { "PASS" } else { "FAIL" };
    let line = format!("criterion {criterion}: {state} - {detail}");
    println!("{line}");
    line
}

#[test]
fn criterion_1_spatial_branch_reference_cells() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut off = Vec::new();
    for def in cases() {
        let problem = def.problem();
        for row in def.rows.iter().filter(|r| r.id.is_spatial()) {
            let params = MeasureParams::with_p(row.p);
            for (qi, query) in problem.unknown().iter().enumerate() {
                let Some(reference_row) = row.values.get(qi) else {
                    continue;
                };
                for (known, &reference) in problem.known().iter().zip(reference_row.iter()) {
                    let value =
                        similarity(row.id, &params, known, query).expect("bundled rows evaluate");
                    checked += 1;
                    if (round4(value) - reference).abs() > CELL_TOLERANCE {
                        off.push(format!(
                            "{} {}/{}/{} reference {reference} computed {}",
                            def.name,
                            row.label,
                            query.label(),
                            known.label(),
                            round4(value)
                        ));
                    }
                }
            }
        }
    }

    let anchors = [
        ("example1", MeasureId::SsmEd, "B1", 0.9625),
        ("example1", MeasureId::SsmMd, "B1", 0.9500),
        ("example2", MeasureId::SsmEd, "B2", 0.9933),
        ("example4", MeasureId::SsmEd, "B3", 0.9808),
        ("example6", MeasureId::SsmEd, "B1", 0.9450),
    ];
    for (name, id, class, expected) in anchors {
        let problem = case(name).expect("bundled").problem();
        let known = problem
            .known()
            .iter()
            .find(|p| p.label() == class)
            .expect("class exists");
        let value = similarity(id, &MeasureParams::default(), known, &problem.unknown()[0])
            .expect("anchor evaluates");
        if (round4(value) - expected).abs() > CELL_TOLERANCE {
            off.push(format!(
                "anchor {name} {}/{class} reference {expected} computed {}",
                id.token(),
                round4(value)
            ));
        }
    }

    let elapsed = start.elapsed();
    let ok = off.is_empty() && checked == 48 && elapsed.as_secs_f64() < 1.0;
    let line = verdict(
        "1 (spatial branch reference cells)",
        ok,
        &format!(
            "{checked} cells at {CELL_TOLERANCE:.0e} plus 5 anchors in {} ms{}{}",
            elapsed.as_millis(),
            if off.is_empty() { "" } else { "; off: " },
            off.join("; ")
        ),
    );
    assert!(ok, "{line}");
}

#[test]
fn criterion_2_full_reference_tables() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut off = Vec::new();
    for def in cases() {
        let problem = def.problem();
        for row in def.rows.iter().filter(|r| r.excluded.is_none()) {
            let params = MeasureParams::with_p(row.p);
            for (qi, query) in problem.unknown().iter().enumerate() {
                let Some(reference_row) = row.values.get(qi) else {
                    continue;
                };
                for (known, &reference) in problem.known().iter().zip(reference_row.iter()) {
                    let value =
                        similarity(row.id, &params, known, query).expect("bundled rows evaluate");
                    checked += 1;
                    if (round4(value) - reference).abs() > CELL_TOLERANCE {
                        off.push(format!(
                            "{} {}/{}/{} reference {reference} computed {}",
                            def.name,
                            row.label,
                            query.label(),
                            known.label(),
                            round4(value)
                        ));
                    }
                }
            }
        }
    }
    let ok = off.is_empty() && start.elapsed().as_secs_f64() < 1.0;
    let line = verdict(
        "2 (every baseline reference cell)",
        ok,
        &format!(
            "{checked} cells at {CELL_TOLERANCE:.0e}; {} disagree with the printed tables{}{}",
            off.len(),
            if off.is_empty() { "" } else { ": " },
            off.join("; ")
        ),
    );
    assert!(ok, "{line}");
}

type QueryExpectation = (&'static str, &'static str, bool);

#[test]
fn criterion_3_strong_classification_assignments() {
    let expectations: &[(&str, &[QueryExpectation])] = &[
        ("example1", &[("A", "B1", false)]),
        ("example2", &[("A", "B2", true)]),
        ("example3", &[("A", "B3", true)]),
        ("example4", &[("A", "B3", true)]),
        (
            "example5",
            &[
                ("A1", "B1", true),
                ("A2", "B4", true),
                ("A3", "B3", true),
                ("A4", "B1", true),
            ],
        ),
        ("example6", &[("A", "B1", true)]),
    ];
    let mut off = Vec::new();
    for (name, expected) in expectations {
        let problem = case(name).expect("bundled").problem();
        let outcomes = strong_classification(&problem).expect("bundled data classifies");
        assert_eq!(outcomes.len(), expected.len(), "{name}");
        for (outcome, &(query, label, strong)) in outcomes.iter().zip(*expected) {
            let decision_ok = outcome.query == query
                && outcome.decision == Decision::Label(label.to_string())
                && outcome.strong == strong;
            if !decision_ok {
                off.push(format!(
                    "{name} {query}: expected {label} (strong {strong}), got {} (strong {})",
                    outcome.decision, outcome.strong
                ));
            }
        }
    }
    let ok = off.is_empty();
    let line = verdict(
        "3 (joint branch assignments)",
        ok,
        &format!(
            "8 queries across 6 cases{}{}",
            if off.is_empty() { "" } else { "; off: " },
            off.join("; ")
        ),
    );
    assert!(ok, "{line}");
}

#[test]
fn criterion_4_randomized_axiom_suites() {
    let start = Instant::now();
    let report = run_axioms(1000, 42);
    let elapsed = start.elapsed();
    let suites = [
        "spatial_range",
        "spatial_identity",
        "spatial_symmetry",
        "spatial_triangle",
        "translation_invariance",
        "absolute_homogeneity",
        "complementarity",
        "scalar_range",
        "scalar_identity",
        "scalar_symmetry",
    ];
    let mut off = Vec::new();
    for name in suites {
        let suite = report.suite(name).expect("suite runs");
        if suite.failures > 0 {
            off.push(format!(
                "{name} fails {} of {} trials (first: {})",
                suite.failures,
                suite.trials,
                suite.first_counterexample.as_deref().unwrap_or("none")
            ));
        }
    }
    let ok = off.is_empty() && elapsed.as_secs_f64() < 10.0;
    let line = verdict(
        "4 (randomized axiom suites)",
        ok,
        &format!(
            "10 suites, 1000 trials each, seed 42, {} ms{}{}",
            elapsed.as_millis(),
            if off.is_empty() { "" } else { "; " },
            off.join("; ")
        ),
    );
    assert!(ok, "{line}");
}

#[test]
fn criterion_5_reduction_identities() {
    let report = run_axioms(1000, 42);
    let mut off = Vec::new();
    for name in ["fuzzy_reduction", "real_embedding"] {
        let suite = report.suite(name).expect("suite runs");
        if suite.failures > 0 {
            off.push(format!(
                "{name} fails {} trials (first: {})",
                suite.failures,
                suite.first_counterexample.as_deref().unwrap_or("none")
            ));
        }
    }

    let y = AifsPattern::from_pairs("y", &[(0.25, 0.75), (0.75, 0.25)]).unwrap();
    let x = AifsPattern::from_pairs("x", &[(0.5, 0.5), (1.0, 0.0)]).unwrap();
    let (d1, d2) = fuzzy_reduced_distance(&y, &x).unwrap();
    let branches = spatial_distance(&y, &x).unwrap();
    if (d1 - 0.03125).abs() > 1e-12
        || (d2 - 2.0 * d1).abs() > 1e-12
        || branches.md != branches.nmd
        || (branches.ed - d2).abs() > 1e-12
    {
        off.push(format!(
            "fuzzy spot check: d1 {d1}, d2 {d2}, branches {:?}",
            branches
        ));
    }

    let v = RealSequence::new(vec![0.25, 0.5, 1.0]).unwrap();
    let u = RealSequence::new(vec![0.75, 0.0, 0.5]).unwrap();
    let direct = real_reduced_distance(&v, &u).unwrap();
    let on_mu = spatial_distance(&v.embed_membership("v"), &u.embed_membership("u")).unwrap();
    let on_nu = spatial_distance(&v.embed_nonmembership("v"), &u.embed_nonmembership("u")).unwrap();
    if (direct - 0.25).abs() > 1e-12
        || (on_mu.md - direct).abs() > 1e-12
        || (on_nu.nmd - direct).abs() > 1e-12
    {
        off.push(format!(
            "real spot check: direct {direct}, membership {}, non-membership {}",
            on_mu.md, on_nu.nmd
        ));
    }

    let ok = off.is_empty();
    let line = verdict(
        "5 (reduction identities)",
        ok,
        &format!(
            "two 1000-trial suites plus literal spot checks{}{}",
            if off.is_empty() { "" } else { "; " },
            off.join("; ")
        ),
    );
    assert!(ok, "{line}");
}

#[test]
fn criterion_6_operator_distributivity() {
    let report = run_axioms(1000, 42);
    let suite = report.suite("operator_distributivity").expect("suite runs");
    let ok = suite.failures == 0;
    let line = verdict(
        "6 (difference operator distributivity)",
        ok,
        &format!(
            "1000 trials at 1e-12{}",
            suite
                .first_counterexample
                .as_deref()
                .map(|c| format!("; first: {c}"))
                .unwrap_or_default()
        ),
    );
    assert!(ok, "{line}");
}

#[test]
fn criterion_7_deterministic_outputs() {
    let exe = env!("CARGO_BIN_EXE_aifs-spatial");
    let run = |args: &[&str]| {
        std::process::Command::new(exe)
            .args(args)
            .output()
            .expect("binary runs")
            .stdout
    };
    let compare = ["compare", "all", "--format", "structured"];
    let axioms = ["axioms", "--seed", "42", "--format", "structured"];
    let compare_first = run(&compare);
    let compare_second = run(&compare);
    let axioms_first = run(&axioms);
    let axioms_second = run(&axioms);
    let ok = !compare_first.is_empty()
        && compare_first == compare_second
        && !axioms_first.is_empty()
        && axioms_first == axioms_second;
    let line = verdict(
        "7 (byte-identical reruns)",
        ok,
        &format!(
            "compare all: {} bytes twice; axioms seed 42: {} bytes twice",
            compare_first.len(),
            axioms_first.len()
        ),
    );
    assert!(ok, "{line}");
}
