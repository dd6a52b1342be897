//! Bundled reference problems with their published similarity tables, and
//! a harness that recomputes every table and diffs it cell by cell.
//!
//! Reference values are stored verbatim and never recomputed. Cells whose
//! stored value is known to be inconsistent with its own formula carry an
//! [`NoteKind::Inconsistent`] annotation with the recomputed value; they
//! are reported but not asserted. Rows that cannot be recomputed at all
//! (the hesitancy-split family, whose index partition is not stated
//! alongside the values) are excluded row-level. Nothing is silently
//! dropped.

mod data;

use serde::Serialize;

use crate::aifs::AifsPattern;
use crate::baseline::{similarity, MeasureId, MeasureParams};
use crate::classify::ClassificationProblem;
use crate::round::{round4, round4_half_even};

/// How far a recomputed cell may sit from the stored reference value
/// after 4-decimal rounding.
pub const CELL_TOLERANCE: f64 = 5e-5;

/// One bundled problem plus its reference table.
pub struct CaseDef {
    pub name: &'static str,
    pub title: &'static str,
    pub note: Option<&'static str>,
    pub universe: &'static [&'static str],
    pub known: &'static [(&'static str, &'static [(f64, f64)])],
    pub unknown: &'static [(&'static str, &'static [(f64, f64)])],
    pub rows: &'static [RowDef],
}

/// One measure row of a reference table. `values[q][c]` is the stored
/// similarity of query q against class c; `values` is empty for tables
/// that print class labels only. `results[q]` is the stored assignment.
pub struct RowDef {
    pub label: &'static str,
    pub id: MeasureId,
    pub p: u32,
    pub excluded: Option<&'static str>,
    pub values: &'static [&'static [f64]],
    pub results: &'static [&'static str],
    pub notes: &'static [NoteDef],
}

/// Cell- or result-level annotation. `known: Some(c)` marks the value
/// cell for class index c; `known: None` marks the query's result entry.
pub struct NoteDef {
    pub kind: NoteKind,
    pub query: usize,
    pub known: Option<usize>,
    pub text: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoteKind {
    /// Not assertable; shown for completeness only.
    Excluded,
    /// Assertable but known to disagree with its own formula.
    Inconsistent,
}

impl CaseDef {
    pub fn k(&self) -> usize {
        self.known[0].1.len()
    }

    /// Builds the runnable classification problem for this case.
    pub fn problem(&self) -> ClassificationProblem {
        let build = |(label, pairs): &(&'static str, &'static [(f64, f64)])| {
            AifsPattern::from_pairs(*label, pairs).expect("bundled patterns are valid")
        };
        ClassificationProblem::new(
            self.universe.iter().map(|s| s.to_string()).collect(),
            self.known.iter().map(build).collect(),
            self.unknown.iter().map(build).collect(),
        )
        .expect("bundled cases are consistent")
    }

    pub fn summary(&self) -> CaseSummary {
        CaseSummary {
            name: self.name,
            title: self.title,
            features: self.k(),
            classes: self.known.len(),
            queries: self.unknown.len(),
        }
    }

    fn row_note(
        &self,
        row: &RowDef,
        query: usize,
        known: Option<usize>,
    ) -> Option<&'static NoteDef> {
        row.notes
            .iter()
            .find(|n| n.query == query && n.known == known)
    }
}

/// Size line for one bundled case.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CaseSummary {
    pub name: &'static str,
    pub title: &'static str,
    pub features: usize,
    pub classes: usize,
    pub queries: usize,
}

/// All bundled cases in order.
pub fn cases() -> &'static [&'static CaseDef] {
    &data::CASES
}

pub fn case(name: &str) -> Option<&'static CaseDef> {
    data::CASES.iter().copied().find(|c| c.name == name)
}

/// Summaries of every bundled case.
pub fn list() -> Vec<CaseSummary> {
    data::CASES.iter().map(|c| c.summary()).collect()
}

/// One recomputed value cell.
#[derive(Clone, Debug, Serialize)]
pub struct CellReport {
    pub query: &'static str,
    pub class: &'static str,
    pub reference: f64,
    pub computed: Option<f64>,
    pub rounded: Option<f64>,
    /// None when the cell is annotated or its row is excluded.
    pub matched: Option<bool>,
    pub note: Option<&'static str>,
    pub half_even_differs: bool,
}

/// One recomputed result entry.
#[derive(Clone, Debug, Serialize)]
pub struct ResultReport {
    pub query: &'static str,
    pub reference: &'static str,
    pub computed: Option<String>,
    pub matched: Option<bool>,
    pub note: Option<&'static str>,
}

/// One measure row, recomputed.
#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub label: &'static str,
    pub measure: MeasureId,
    pub excluded: Option<&'static str>,
    pub cells: Vec<CellReport>,
    pub results: Vec<ResultReport>,
}

/// A full case diff.
#[derive(Clone, Debug, Serialize)]
pub struct BenchmarkReport {
    pub case: &'static str,
    pub title: &'static str,
    pub note: Option<&'static str>,
    pub rows: Vec<RowReport>,
    pub asserted_cells: usize,
    pub cell_mismatches: usize,
    pub annotated_cells: usize,
    pub asserted_results: usize,
    pub result_mismatches: usize,
    pub passed: bool,
}

/// The class assignment a printed table derives from a row of values:
/// argmax over the 4-decimal roundings, with exact rounded ties reported
/// as "Unclassified".
pub fn printed_result(labels: &[&'static str], values: &[f64]) -> String {
    let rounded: Vec<f64> = values.iter().map(|&v| round4(v)).collect();
    let max = rounded.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let winners: Vec<&str> = labels
        .iter()
        .zip(&rounded)
        .filter(|(_, &r)| r == max)
        .map(|(&l, _)| l)
        .collect();
    if winners.len() == 1 {
        winners[0].to_string()
    } else {
        "Unclassified".to_string()
    }
}

/// Recomputes one case against its stored table.
pub fn run_benchmark(case: &CaseDef) -> BenchmarkReport {
    let problem = case.problem();
    let labels: Vec<&'static str> = case.known.iter().map(|(l, _)| *l).collect();
    let mut rows = Vec::with_capacity(case.rows.len());
    let mut asserted_cells = 0;
    let mut cell_mismatches = 0;
    let mut annotated_cells = 0;
    let mut asserted_results = 0;
    let mut result_mismatches = 0;

    for row in case.rows {
        if row.excluded.is_some() {
            rows.push(excluded_row(case, row));
            continue;
        }
        let params = MeasureParams::with_p(row.p);
        let mut cells = Vec::new();
        let mut results = Vec::new();
        for (qi, query) in problem.unknown().iter().enumerate() {
            let computed: Vec<f64> = problem
                .known()
                .iter()
                .map(|known| {
                    similarity(row.id, &params, known, query)
                        .expect("bundled rows evaluate on bundled data")
                })
                .collect();
            if let Some(reference_row) = row.values.get(qi) {
                for (ci, (&reference, &value)) in reference_row.iter().zip(&computed).enumerate() {
                    let rounded = round4(value);
                    let note = case.row_note(row, qi, Some(ci));
                    let matched = if note.is_some() {
                        annotated_cells += 1;
                        None
                    } else {
                        asserted_cells += 1;
                        let ok = (rounded - reference).abs() <= CELL_TOLERANCE;
                        if !ok {
                            cell_mismatches += 1;
                        }
                        Some(ok)
                    };
                    cells.push(CellReport {
                        query: case.unknown[qi].0,
                        class: case.known[ci].0,
                        reference,
                        computed: Some(value),
                        rounded: Some(rounded),
                        matched,
                        note: note.map(|n| n.text),
                        half_even_differs: rounded != round4_half_even(value),
                    });
                }
            }
            let computed_result = printed_result(&labels, &computed);
            let note = case.row_note(row, qi, None);
            let matched = if note.is_some() {
                None
            } else {
                asserted_results += 1;
                let ok = computed_result == row.results[qi];
                if !ok {
                    result_mismatches += 1;
                }
                Some(ok)
            };
            results.push(ResultReport {
                query: case.unknown[qi].0,
                reference: row.results[qi],
                computed: Some(computed_result),
                matched,
                note: note.map(|n| n.text),
            });
        }
        rows.push(RowReport {
            label: row.label,
            measure: row.id,
            excluded: None,
            cells,
            results,
        });
    }

    BenchmarkReport {
        case: case.name,
        title: case.title,
        note: case.note,
        rows,
        asserted_cells,
        cell_mismatches,
        annotated_cells,
        asserted_results,
        result_mismatches,
        passed: cell_mismatches == 0 && result_mismatches == 0,
    }
}

fn excluded_row(case: &CaseDef, row: &RowDef) -> RowReport {
    let mut cells = Vec::new();
    for (qi, reference_row) in row.values.iter().enumerate() {
        for (ci, &reference) in reference_row.iter().enumerate() {
            cells.push(CellReport {
                query: case.unknown[qi].0,
                class: case.known[ci].0,
                reference,
                computed: None,
                rounded: None,
                matched: None,
                note: row.excluded,
                half_even_differs: false,
            });
        }
    }
    let results = row
        .results
        .iter()
        .enumerate()
        .map(|(qi, &reference)| ResultReport {
            query: case.unknown[qi].0,
            reference,
            computed: None,
            matched: None,
            note: row.excluded,
        })
        .collect();
    RowReport {
        label: row.label,
        measure: row.id,
        excluded: row.excluded,
        cells,
        results,
    }
}

/// Recomputes every bundled case.
pub fn run_all() -> Vec<BenchmarkReport> {
    data::CASES.iter().map(|c| run_benchmark(c)).collect()
}
