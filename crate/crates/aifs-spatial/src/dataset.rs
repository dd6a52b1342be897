//! Loading classification problems from JSON and CSV documents.
//!
//! The JSON form is an object with a `universe` array of feature names and
//! `known`/`unknown` maps from pattern label to an array of `[mu, nu]`
//! pairs. The CSV form is long format with the header
//! `set,label,feature,mu,nu`, one element per row, where `set` is either
//! `known` or `unknown` and every pattern lists the same features in the
//! same order. Pattern order follows document order in both forms.

use std::fs;
use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde::Deserialize;

use crate::aifs::{AifsElement, AifsPattern};
use crate::classify::ClassificationProblem;

/// Errors raised while reading a dataset document.
#[derive(Debug, thiserror::Error)]
pub enum DatasetError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Syntax(String),
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
    #[error("unsupported dataset format: {0}")]
    UnsupportedFormat(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDataset {
    universe: Vec<String>,
    known: IndexMap<String, Vec<[f64; 2]>>,
    unknown: IndexMap<String, Vec<[f64; 2]>>,
}

fn patterns_from_groups(
    section: &str,
    groups: IndexMap<String, Vec<[f64; 2]>>,
) -> Result<Vec<AifsPattern>, DatasetError> {
    let mut patterns = Vec::with_capacity(groups.len());
    for (label, pairs) in groups {
        let mut elements = Vec::with_capacity(pairs.len());
        for (index, [mu, nu]) in pairs.iter().enumerate() {
            let element = AifsElement::new(*mu, *nu).map_err(|e| DatasetError::Invalid {
                location: format!("{section}.{label}[{index}]"),
                message: e.to_string(),
            })?;
            elements.push(element);
        }
        let pattern =
            AifsPattern::new(label.clone(), elements).map_err(|e| DatasetError::Invalid {
                location: format!("{section}.{label}"),
                message: e.to_string(),
            })?;
        patterns.push(pattern);
    }
    Ok(patterns)
}

fn assemble(
    universe: Vec<String>,
    known: Vec<AifsPattern>,
    unknown: Vec<AifsPattern>,
) -> Result<ClassificationProblem, DatasetError> {
    ClassificationProblem::new(universe, known, unknown).map_err(|e| DatasetError::Invalid {
        location: "dataset".to_string(),
        message: e.to_string(),
    })
}

/// Parses the JSON document form.
pub fn from_json_str(text: &str) -> Result<ClassificationProblem, DatasetError> {
    let doc: JsonDataset =
        serde_json::from_str(text).map_err(|e| DatasetError::Syntax(e.to_string()))?;
    let known = patterns_from_groups("known", doc.known)?;
    let unknown = patterns_from_groups("unknown", doc.unknown)?;
    assemble(doc.universe, known, unknown)
}

const CSV_HEADER: [&str; 5] = ["set", "label", "feature", "mu", "nu"];

struct CsvGroup {
    features: Vec<String>,
    elements: Vec<AifsElement>,
}

/// Parses the long-format CSV document form.
pub fn from_csv_str(text: &str) -> Result<ClassificationProblem, DatasetError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| DatasetError::Syntax(e.to_string()))?;
    if headers.iter().collect::<Vec<_>>() != CSV_HEADER {
        return Err(DatasetError::Syntax(format!(
            "expected header {}, found {}",
            CSV_HEADER.join(","),
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }

    let mut sections: [IndexMap<String, CsvGroup>; 2] = [IndexMap::new(), IndexMap::new()];
    for record in reader.records() {
        let record = record.map_err(|e| DatasetError::Syntax(e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |column: usize| record.get(column).unwrap_or("");
        let section = match field(0) {
            "known" => 0,
            "unknown" => 1,
            other => {
                return Err(DatasetError::Invalid {
                    location: format!("line {line}, column set"),
                    message: format!("expected known or unknown, found {other:?}"),
                })
            }
        };
        let parse = |column: usize, name: &str| -> Result<f64, DatasetError> {
            field(column)
                .parse::<f64>()
                .map_err(|_| DatasetError::Invalid {
                    location: format!("line {line}, column {name}"),
                    message: format!("expected a number, found {:?}", field(column)),
                })
        };
        let mu = parse(3, "mu")?;
        let nu = parse(4, "nu")?;
        let element = AifsElement::new(mu, nu).map_err(|e| DatasetError::Invalid {
            location: format!("line {line}"),
            message: e.to_string(),
        })?;
        let group = sections[section]
            .entry(field(1).to_string())
            .or_insert_with(|| CsvGroup {
                features: Vec::new(),
                elements: Vec::new(),
            });
        group.features.push(field(2).to_string());
        group.elements.push(element);
    }

    let mut universe: Option<Vec<String>> = None;
    let mut built: [Vec<AifsPattern>; 2] = [Vec::new(), Vec::new()];
    for (section, name) in [(0, "known"), (1, "unknown")] {
        for (label, group) in std::mem::take(&mut sections[section]) {
            match &universe {
                None => universe = Some(group.features.clone()),
                Some(first) if *first != group.features => {
                    return Err(DatasetError::Invalid {
                        location: format!("{name}.{label}"),
                        message: "feature sequence differs from the first pattern".to_string(),
                    })
                }
                Some(_) => {}
            }
            let pattern = AifsPattern::new(label.clone(), group.elements).map_err(|e| {
                DatasetError::Invalid {
                    location: format!("{name}.{label}"),
                    message: e.to_string(),
                }
            })?;
            built[section].push(pattern);
        }
    }
    let universe = universe.ok_or_else(|| DatasetError::Syntax("no data rows".to_string()))?;
    let [known, unknown] = built;
    assemble(universe, known, unknown)
}

/// Reads a dataset file, dispatching on the `.json` or `.csv` extension.
pub fn from_path(path: impl AsRef<Path>) -> Result<ClassificationProblem, DatasetError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let extension = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match extension.as_deref() {
        Some("json") => from_json_str(&text),
        Some("csv") => from_csv_str(&text),
        _ => Err(DatasetError::UnsupportedFormat(path.display().to_string())),
    }
}
