use aifs_spatial::baseline::{MeasureId, MeasureParams};
use aifs_spatial::benchmarks::case;
use aifs_spatial::classify::{
    classify, decide, rounded_tie, strong_classification, ClassificationProblem, Decision,
    LabeledScore,
};
use aifs_spatial::{AifsPattern, Error};
use proptest::prelude::*;

fn scores(values: &[(&str, f64)]) -> Vec<LabeledScore> {
    values
        .iter()
        .map(|&(label, value)| LabeledScore {
            label: label.to_string(),
            value,
        })
        .collect()
}

#[test]
fn decide_picks_the_unique_maximum() {
    let d = decide(&scores(&[("B1", 0.9), ("B2", 0.95), ("B3", 0.8)]));
    assert_eq!(d, Decision::Label("B2".to_string()));
}

#[test]
fn decide_reports_near_ties_instead_of_guessing() {
    let d = decide(&scores(&[("B1", 0.95), ("B2", 0.95 + 1e-12), ("B3", 0.8)]));
    assert_eq!(
        d,
        Decision::Unclassified(vec!["B1".to_string(), "B2".to_string()])
    );
    let separated = decide(&scores(&[("B1", 0.95), ("B2", 0.95 + 1e-6)]));
    assert_eq!(separated, Decision::Label("B2".to_string()));
}

#[test]
fn rounded_tie_flags_printed_ambiguity() {
    assert_eq!(
        rounded_tie(&scores(&[("B1", 0.95002), ("B2", 0.94998)])),
        vec!["B1".to_string(), "B2".to_string()]
    );
    assert!(rounded_tie(&scores(&[("B1", 0.9501), ("B2", 0.9499)])).is_empty());
}

#[test]
fn joint_branch_separates_the_first_bundled_case() {
    let problem = case("example1").unwrap().problem();
    let report = classify(&problem, &[(MeasureId::SsmEd, MeasureParams::default())]).unwrap();
    let outcome = &report.measures[0].queries[0];
    assert_eq!(outcome.decision, Decision::Label("B1".to_string()));
    let values: Vec<f64> = outcome.scores.iter().map(|s| s.value).collect();
    assert_eq!(values, vec![0.9625, 0.95, 0.95625]);
    assert!(outcome.rounded_tie.is_empty());
}

#[test]
fn pointwise_maximum_measure_ties_on_the_first_bundled_case() {
    let problem = case("example1").unwrap().problem();
    let report = classify(&problem, &[(MeasureId::SHk, MeasureParams::default())]).unwrap();
    let outcome = &report.measures[0].queries[0];
    assert_eq!(
        outcome.decision,
        Decision::Unclassified(vec!["B1".to_string(), "B3".to_string()])
    );
    assert_eq!(
        outcome.rounded_tie,
        vec!["B1".to_string(), "B3".to_string()]
    );
}

#[test]
fn branch_disagreement_is_reported_not_hidden() {
    let problem = case("example1").unwrap().problem();
    let strong = strong_classification(&problem).unwrap();
    assert_eq!(strong.len(), 1);
    let outcome = &strong[0];
    assert_eq!(outcome.md, Decision::Label("B3".to_string()));
    assert_eq!(outcome.nmd, Decision::Label("B3".to_string()));
    assert_eq!(outcome.ed, Decision::Label("B1".to_string()));
    assert_eq!(outcome.decision, Decision::Label("B1".to_string()));
    assert!(!outcome.strong);
}

#[test]
fn agreeing_branches_make_a_strong_assignment() {
    let problem = case("example2").unwrap().problem();
    let strong = strong_classification(&problem).unwrap();
    assert_eq!(strong[0].decision, Decision::Label("B2".to_string()));
    assert!(strong[0].strong);
}

#[test]
fn strong_block_requires_all_three_branches() {
    let problem = case("example1").unwrap().problem();
    let full = classify(
        &problem,
        &[
            (MeasureId::SsmMd, MeasureParams::default()),
            (MeasureId::SsmNmd, MeasureParams::default()),
            (MeasureId::SsmEd, MeasureParams::default()),
        ],
    )
    .unwrap();
    assert!(full.strong.is_some());
    let partial = classify(
        &problem,
        &[
            (MeasureId::SsmMd, MeasureParams::default()),
            (MeasureId::SsmEd, MeasureParams::default()),
        ],
    )
    .unwrap();
    assert!(partial.strong.is_none());
}

#[test]
fn singleton_known_set_always_wins() {
    let known = AifsPattern::from_pairs("B1", &[(0.5, 0.25), (0.25, 0.5)]).unwrap();
    let query = AifsPattern::from_pairs("A", &[(1.0, 0.0), (0.0, 1.0)]).unwrap();
    let problem = ClassificationProblem::from_patterns(vec![known], vec![query]).unwrap();
    let report = classify(&problem, &[(MeasureId::SsmEd, MeasureParams::default())]).unwrap();
    assert_eq!(
        report.measures[0].queries[0].decision,
        Decision::Label("B1".to_string())
    );
}

#[test]
fn problem_construction_validates_its_inputs() {
    let b1 = AifsPattern::from_pairs("B1", &[(0.5, 0.25)]).unwrap();
    let b1_dup = AifsPattern::from_pairs("B1", &[(0.25, 0.5)]).unwrap();
    let short = AifsPattern::from_pairs("B2", &[(0.5, 0.25), (0.25, 0.5)]).unwrap();
    assert_eq!(
        ClassificationProblem::from_patterns(vec![], vec![]),
        Err(Error::EmptyInput)
    );
    assert!(matches!(
        ClassificationProblem::from_patterns(vec![b1.clone(), short], vec![]),
        Err(Error::LengthMismatch { .. })
    ));
    assert_eq!(
        ClassificationProblem::from_patterns(vec![b1.clone(), b1_dup], vec![]),
        Err(Error::DuplicateLabel("B1".to_string()))
    );
    assert!(matches!(
        ClassificationProblem::new(vec!["y1".into(), "y2".into()], vec![b1], vec![]),
        Err(Error::LengthMismatch { .. })
    ));
}

fn dyadic_element() -> impl Strategy<Value = (f64, f64)> {
    (0u32..=64)
        .prop_flat_map(|mt| (Just(mt), 0..=64 - mt))
        .prop_map(|(mt, nt)| (f64::from(mt) / 64.0, f64::from(nt) / 64.0))
}

fn small_problem() -> impl Strategy<Value = ClassificationProblem> {
    (1usize..=8).prop_flat_map(|k| {
        prop::collection::vec(prop::collection::vec(dyadic_element(), k), 4).prop_map(
            |mut groups| {
                let query = AifsPattern::from_pairs("A", &groups.pop().unwrap()).unwrap();
                let known = groups
                    .into_iter()
                    .enumerate()
                    .map(|(i, pairs)| {
                        AifsPattern::from_pairs(format!("B{}", i + 1), &pairs).unwrap()
                    })
                    .collect();
                ClassificationProblem::from_patterns(known, vec![query]).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn increasing_transforms_preserve_decisions(problem in small_problem()) {
        let params = MeasureParams::default();
        let report = classify(
            &problem,
            &[
                (MeasureId::SHy11, params.clone()),
                (MeasureId::SHy21, params.clone()),
                (MeasureId::SHy31, params),
            ],
        )
        .unwrap();
        let base = &report.measures[0].queries[0];
        let gaps_are_wide = base
            .scores
            .iter()
            .enumerate()
            .all(|(i, s)| {
                base.scores[i + 1..]
                    .iter()
                    .all(|t| (s.value - t.value).abs() > 1e-6)
            });
        prop_assume!(gaps_are_wide);
        let transformed_a = &report.measures[1].queries[0];
        let transformed_b = &report.measures[2].queries[0];
        prop_assert_eq!(&base.decision, &transformed_a.decision);
        prop_assert_eq!(&base.decision, &transformed_b.decision);
    }

    #[test]
    fn reordering_known_patterns_does_not_change_the_decision(problem in small_problem()) {
        let reversed = ClassificationProblem::from_patterns(
            problem.known().iter().rev().cloned().collect(),
            problem.unknown().to_vec(),
        )
        .unwrap();
        let selection = [(MeasureId::SsmEd, MeasureParams::default())];
        let forward = classify(&problem, &selection).unwrap();
        let backward = classify(&reversed, &selection).unwrap();
        let a = &forward.measures[0].queries[0].decision;
        let b = &backward.measures[0].queries[0].decision;
        match (a, b) {
            (Decision::Label(la), Decision::Label(lb)) => prop_assert_eq!(la, lb),
            (Decision::Unclassified(la), Decision::Unclassified(lb)) => {
                let mut la = la.clone();
                let mut lb = lb.clone();
                la.sort();
                lb.sort();
                prop_assert_eq!(la, lb);
            }
            _ => prop_assert!(false, "decision kind changed under reordering"),
        }
    }
}
