//! Nearest-pattern classification with explicit tie reporting.

use serde::Serialize;

use crate::aifs::AifsPattern;
use crate::baseline::{catalog_entry, similarity, MeasureId, MeasureParams};
use crate::error::Error;
use crate::round::round4;

/// Two similarity values within this margin count as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// A query's class assignment, or the tied labels when no single class wins.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Label(String),
    Unclassified(Vec<String>),
}

impl Decision {
    pub fn as_label(&self) -> Option<&str> {
        match self {
            Decision::Label(l) => Some(l),
            Decision::Unclassified(_) => None,
        }
    }

    pub fn is_classified(&self) -> bool {
        matches!(self, Decision::Label(_))
    }
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Decision::Label(l) => f.write_str(l),
            Decision::Unclassified(_) => f.write_str("Unclassified"),
        }
    }
}

/// A feature universe, the labeled known patterns, and the queries.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationProblem {
    universe: Vec<String>,
    known: Vec<AifsPattern>,
    unknown: Vec<AifsPattern>,
}

impl ClassificationProblem {
    pub fn new(
        universe: Vec<String>,
        known: Vec<AifsPattern>,
        unknown: Vec<AifsPattern>,
    ) -> Result<Self, Error> {
        if known.is_empty() {
            return Err(Error::EmptyInput);
        }
        let k = known[0].k();
        if universe.len() != k {
            return Err(Error::LengthMismatch {
                left: universe.len(),
                right: k,
            });
        }
        for pattern in known.iter().chain(&unknown) {
            if pattern.k() != k {
                return Err(Error::LengthMismatch {
                    left: pattern.k(),
                    right: k,
                });
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for pattern in known.iter().chain(&unknown) {
            if !seen.insert(pattern.label().to_string()) {
                return Err(Error::DuplicateLabel(pattern.label().to_string()));
            }
        }
        Ok(ClassificationProblem {
            universe,
            known,
            unknown,
        })
    }

    /// Builds a problem with a generated y1..yk universe.
    pub fn from_patterns(
        known: Vec<AifsPattern>,
        unknown: Vec<AifsPattern>,
    ) -> Result<Self, Error> {
        let k = known.first().map_or(0, AifsPattern::k);
        let universe = (1..=k).map(|i| format!("y{i}")).collect();
        Self::new(universe, known, unknown)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn known(&self) -> &[AifsPattern] {
        &self.known
    }

    pub fn unknown(&self) -> &[AifsPattern] {
        &self.unknown
    }

    pub fn k(&self) -> usize {
        self.known[0].k()
    }
}

/// One similarity score against a known pattern.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LabeledScore {
    pub label: String,
    pub value: f64,
}

/// Argmax over the scores with ties at [`TIE_TOLERANCE`].
pub fn decide(scores: &[LabeledScore]) -> Decision {
    let max = scores
        .iter()
        .map(|s| s.value)
        .fold(f64::NEG_INFINITY, f64::max);
    let winners: Vec<String> = scores
        .iter()
        .filter(|s| s.value >= max - TIE_TOLERANCE)
        .map(|s| s.label.clone())
        .collect();
    if winners.len() == 1 {
        Decision::Label(winners.into_iter().next().expect("one winner"))
    } else {
        Decision::Unclassified(winners)
    }
}

/// Labels that tie for the maximum once scores are rounded to 4 decimals;
/// empty when a single label still wins at that granularity.
pub fn rounded_tie(scores: &[LabeledScore]) -> Vec<String> {
    let rounded: Vec<f64> = scores.iter().map(|s| round4(s.value)).collect();
    let max = rounded.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let winners: Vec<String> = scores
        .iter()
        .zip(&rounded)
        .filter(|(_, &r)| r == max)
        .map(|(s, _)| s.label.clone())
        .collect();
    if winners.len() > 1 {
        winners
    } else {
        Vec::new()
    }
}

/// Scores and decision for one query under one measure.
#[derive(Clone, Debug, Serialize)]
pub struct QueryOutcome {
    pub query: String,
    pub scores: Vec<LabeledScore>,
    pub decision: Decision,
    pub rounded_tie: Vec<String>,
}

/// Every query's outcome under one measure.
#[derive(Clone, Debug, Serialize)]
pub struct MeasureOutcomes {
    pub measure: MeasureId,
    pub display: &'static str,
    pub params: MeasureParams,
    pub queries: Vec<QueryOutcome>,
}

/// The three spatial branch decisions for one query, and whether they
/// agree. The headline decision comes from the joint branch.
#[derive(Clone, Debug, Serialize)]
pub struct StrongOutcome {
    pub query: String,
    pub md: Decision,
    pub nmd: Decision,
    pub ed: Decision,
    pub decision: Decision,
    pub strong: bool,
}

/// Full report for a measure selection.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub measures: Vec<MeasureOutcomes>,
    /// Present when all three spatial branches were part of the selection.
    pub strong: Option<Vec<StrongOutcome>>,
}

/// Runs every selected measure over every query.
pub fn classify(
    problem: &ClassificationProblem,
    selections: &[(MeasureId, MeasureParams)],
) -> Result<ClassificationReport, Error> {
    let mut measures = Vec::with_capacity(selections.len());
    for (id, params) in selections {
        let mut queries = Vec::with_capacity(problem.unknown().len());
        for query in problem.unknown() {
            let mut scores = Vec::with_capacity(problem.known().len());
            for known in problem.known() {
                let value = similarity(*id, params, known, query)?;
                scores.push(LabeledScore {
                    label: known.label().to_string(),
                    value,
                });
            }
            let decision = decide(&scores);
            let rounded = rounded_tie(&scores);
            queries.push(QueryOutcome {
                query: query.label().to_string(),
                scores,
                decision,
                rounded_tie: rounded,
            });
        }
        measures.push(MeasureOutcomes {
            measure: *id,
            display: catalog_entry(*id).display,
            params: params.clone(),
            queries,
        });
    }
    let strong = strong_from_measures(&measures);
    Ok(ClassificationReport { measures, strong })
}

fn strong_from_measures(measures: &[MeasureOutcomes]) -> Option<Vec<StrongOutcome>> {
    let find = |id: MeasureId| measures.iter().find(|m| m.measure == id);
    let md = find(MeasureId::SsmMd)?;
    let nmd = find(MeasureId::SsmNmd)?;
    let ed = find(MeasureId::SsmEd)?;
    let mut outcomes = Vec::with_capacity(ed.queries.len());
    for (i, q) in ed.queries.iter().enumerate() {
        let md_d = md.queries[i].decision.clone();
        let nmd_d = nmd.queries[i].decision.clone();
        let ed_d = q.decision.clone();
        let strong = md_d.is_classified() && md_d == nmd_d && nmd_d == ed_d;
        outcomes.push(StrongOutcome {
            query: q.query.clone(),
            md: md_d,
            nmd: nmd_d,
            decision: ed_d.clone(),
            ed: ed_d,
            strong,
        });
    }
    Some(outcomes)
}

/// Classifies with the three spatial branches only.
pub fn strong_classification(problem: &ClassificationProblem) -> Result<Vec<StrongOutcome>, Error> {
    let selections: Vec<(MeasureId, MeasureParams)> = MeasureId::SSM
        .into_iter()
        .map(|id| (id, MeasureParams::default()))
        .collect();
    let report = classify(problem, &selections)?;
    Ok(report.strong.expect("all three branches selected"))
}
