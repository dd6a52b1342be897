use std::path::Path;

use aifs_spatial::benchmarks::{case, cases};
use aifs_spatial::classify::ClassificationProblem;
use aifs_spatial::dataset::{from_csv_str, from_json_str, from_path, DatasetError};

fn repo_file(relative: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(relative)
        .to_string_lossy()
        .into_owned()
}

fn assert_same_problem(loaded: &ClassificationProblem, bundled: &ClassificationProblem) {
    assert_eq!(loaded.universe(), bundled.universe());
    assert_eq!(loaded.known().len(), bundled.known().len());
    assert_eq!(loaded.unknown().len(), bundled.unknown().len());
    for (a, b) in loaded.known().iter().zip(bundled.known()) {
        assert_eq!(a.label(), b.label());
        assert_eq!(a.pairs(), b.pairs());
    }
    for (a, b) in loaded.unknown().iter().zip(bundled.unknown()) {
        assert_eq!(a.label(), b.label());
        assert_eq!(a.pairs(), b.pairs());
    }
}

#[test]
fn shipped_json_files_match_the_bundled_cases() {
    for def in cases() {
        let path = repo_file(&format!("datasets/{}.json", def.name));
        let loaded = from_path(&path).unwrap_or_else(|e| panic!("{}: {e}", def.name));
        assert_same_problem(&loaded, &def.problem());
    }
}

#[test]
fn shipped_csv_files_match_their_json_twins() {
    for name in ["example1", "example5"] {
        let bundled = case(name).unwrap().problem();
        let loaded = from_path(repo_file(&format!("datasets/{name}.csv"))).unwrap();
        assert_same_problem(&loaded, &bundled);
    }
}

#[test]
fn fuzz_corpus_seeds_stay_parseable() {
    for seed in ["example1", "example5", "example6"] {
        let path = repo_file(&format!("fuzz/corpus/dataset_json/{seed}.json"));
        assert!(from_path(&path).is_ok(), "{seed}.json");
    }
    for seed in ["example1", "example5"] {
        let path = repo_file(&format!("fuzz/corpus/dataset_csv/{seed}.csv"));
        assert!(from_path(&path).is_ok(), "{seed}.csv");
    }
}

#[test]
fn json_errors_carry_the_offending_location() {
    let invalid_element = r#"{
        "universe": ["y1"],
        "known": {"B1": [[0.9, 0.9]]},
        "unknown": {}
    }"#;
    match from_json_str(invalid_element) {
        Err(DatasetError::Invalid { location, message }) => {
            assert_eq!(location, "known.B1[0]");
            assert!(message.contains("exceeds 1"), "{message}");
        }
        other => panic!("expected located error, got {other:?}"),
    }

    let unknown_field = r#"{
        "universe": ["y1"],
        "known": {"B1": [[0.5, 0.25]]},
        "unknown": {},
        "extra": 1
    }"#;
    assert!(matches!(
        from_json_str(unknown_field),
        Err(DatasetError::Syntax(_))
    ));

    let duplicate = r#"{
        "universe": ["y1"],
        "known": {"B1": [[0.5, 0.25]]},
        "unknown": {"B1": [[0.25, 0.5]]}
    }"#;
    match from_json_str(duplicate) {
        Err(DatasetError::Invalid { location, message }) => {
            assert_eq!(location, "dataset");
            assert!(message.contains("B1"), "{message}");
        }
        other => panic!("expected dataset-level error, got {other:?}"),
    }

    let wrong_universe = r#"{
        "universe": ["y1", "y2"],
        "known": {"B1": [[0.5, 0.25]]},
        "unknown": {}
    }"#;
    assert!(matches!(
        from_json_str(wrong_universe),
        Err(DatasetError::Invalid { .. })
    ));
}

#[test]
fn csv_errors_carry_line_and_column() {
    let bad_header = "kind,label,feature,mu,nu\nknown,B1,y1,0.5,0.25\n";
    match from_csv_str(bad_header) {
        Err(DatasetError::Syntax(message)) => {
            assert!(message.contains("set,label,feature,mu,nu"), "{message}");
        }
        other => panic!("expected header error, got {other:?}"),
    }

    let bad_number = "set,label,feature,mu,nu\nknown,B1,y1,high,0.25\n";
    match from_csv_str(bad_number) {
        Err(DatasetError::Invalid { location, .. }) => {
            assert_eq!(location, "line 2, column mu");
        }
        other => panic!("expected located error, got {other:?}"),
    }

    let bad_set = "set,label,feature,mu,nu\nknown,B1,y1,0.5,0.25\ntraining,B2,y1,0.5,0.25\n";
    match from_csv_str(bad_set) {
        Err(DatasetError::Invalid { location, .. }) => {
            assert_eq!(location, "line 3, column set");
        }
        other => panic!("expected located error, got {other:?}"),
    }

    let bad_element = "set,label,feature,mu,nu\nknown,B1,y1,0.9,0.9\n";
    match from_csv_str(bad_element) {
        Err(DatasetError::Invalid { location, message }) => {
            assert_eq!(location, "line 2");
            assert!(message.contains("exceeds 1"), "{message}");
        }
        other => panic!("expected located error, got {other:?}"),
    }

    let drifting_features =
        "set,label,feature,mu,nu\nknown,B1,y1,0.5,0.25\nunknown,A,z9,0.5,0.25\n";
    match from_csv_str(drifting_features) {
        Err(DatasetError::Invalid { location, message }) => {
            assert_eq!(location, "unknown.A");
            assert!(message.contains("feature sequence"), "{message}");
        }
        other => panic!("expected located error, got {other:?}"),
    }

    assert!(matches!(
        from_csv_str("set,label,feature,mu,nu\n"),
        Err(DatasetError::Syntax(_))
    ));
}

#[test]
fn csv_values_are_trimmed() {
    let padded = "set,label,feature,mu,nu\nknown, B1 , y1 , 0.5 , 0.25\nunknown,A,y1,0.25,0.5\n";
    let problem = from_csv_str(padded).unwrap();
    assert_eq!(problem.known()[0].label(), "B1");
    assert_eq!(problem.universe(), ["y1".to_string()]);
}

#[test]
fn unsupported_extensions_are_refused() {
    let dir = std::env::temp_dir().join("aifs-spatial-dataset-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("patterns.toml");
    std::fs::write(&path, "not a dataset").unwrap();
    assert!(matches!(
        from_path(&path),
        Err(DatasetError::UnsupportedFormat(_))
    ));
    assert!(matches!(
        from_path(dir.join("missing.json")),
        Err(DatasetError::Io { .. })
    ));
}
