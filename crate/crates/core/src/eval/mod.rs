//! Relation P/R/F1, QA precision and the lexical ranking baselines.

mod baselines;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;
use std::path::Path;

use crate::corpus::{RuleTagger, SentenceId, Tagger};
use crate::qa::answer_with;
use crate::space::ResourceSpace;
use crate::subsume::SynonymTable;

pub use baselines::{baseline_rank, content_lemmas, BaselineParams, Method, STOPWORDS};

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error("unknown baseline method {0:?}")]
    UnknownMethod(String),
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("gold answer refers to unknown sentence {0}")]
    UnknownSentence(SentenceId),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
}

fn read(path: &Path) -> Result<String, EvalError> {
    std::fs::read_to_string(path).map_err(|e| EvalError::Io(path.display().to_string(), e))
}

/// Annotated `(child, parent, dimension)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldRelations {
    pub pairs: BTreeSet<(String, String, String)>,
}

impl GoldRelations {
    /// `child<TAB>parent<TAB>dimension` lines; `#` comments and blank lines
    /// are skipped.
    pub fn from_tsv(text: &str) -> Result<Self, EvalError> {
        let mut pairs = BTreeSet::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() < 3 {
                return Err(EvalError::Malformed(i + 1, "expected child<TAB>parent<TAB>dimension".into()));
            }
            pairs.insert((cols[0].to_lowercase(), cols[1].to_lowercase(), cols[2].to_lowercase()));
        }
        Ok(GoldRelations { pairs })
    }

    pub fn load(path: &Path) -> Result<Self, EvalError> {
        Self::from_tsv(&read(path)?)
    }
}

/// Question text with its gold sentence ids, in file order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldAnswers {
    pub questions: Vec<(String, BTreeSet<SentenceId>)>,
}

impl GoldAnswers {
    /// `Q: <text>` followed by `A: <sentence_id>` lines.
    pub fn parse(text: &str) -> Result<Self, EvalError> {
        let mut questions: Vec<(String, BTreeSet<SentenceId>)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(q) = line.strip_prefix("Q:") {
                questions.push((q.trim().to_string(), BTreeSet::new()));
            } else if let Some(a) = line.strip_prefix("A:") {
                let id = a.trim().parse().map_err(|_| EvalError::Malformed(i + 1, format!("bad sentence id {a:?}")))?;
                questions.last_mut().ok_or_else(|| EvalError::Malformed(i + 1, "answer before any question".into()))?.1.insert(id);
            } else {
                return Err(EvalError::Malformed(i + 1, "expected `Q:` or `A:`".into()));
            }
        }
        Ok(GoldAnswers { questions })
    }

    pub fn load(path: &Path) -> Result<Self, EvalError> {
        Self::parse(&read(path)?)
    }

    pub fn validate(&self, ids: &BTreeSet<SentenceId>) -> Result<(), EvalError> {
        for (_, a) in &self.questions {
            if let Some(bad) = a.iter().find(|id| !ids.contains(id)) {
                return Err(EvalError::UnknownSentence(*bad));
            }
        }
        Ok(())
    }
}

/// Precision/recall/F1. Precision is undefined with nothing predicted,
/// recall with an empty gold set; F1 is then 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prf {
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f1: f64,
    pub true_positives: usize,
}

impl Prf {
    pub fn empty_gold(&self) -> bool {
        self.recall.is_none()
    }
}

pub fn prf<T: Ord>(gold: &BTreeSet<T>, predicted: &BTreeSet<T>) -> Prf {
    let tp = gold.intersection(predicted).count();
    let precision = (!predicted.is_empty()).then(|| tp as f64 / predicted.len() as f64);
    let recall = (!gold.is_empty()).then(|| tp as f64 / gold.len() as f64);
    let f1 = match (precision, recall) {
        (Some(p), Some(r)) if p + r > 0.0 => 2.0 * p * r / (p + r),
        _ => 0.0,
    };
    Prf { precision, recall, f1, true_positives: tp }
}

/// Closure of each dimension's stored edges as `(child, parent, dimension)`.
pub fn predicted_closure(space: &ResourceSpace) -> BTreeSet<(String, String, String)> {
    space.dimensions.iter().flat_map(|d| d.closure_pairs().into_iter().map(move |(c, p)| (c, p, d.name.to_string()))).collect()
}

/// Relation P/R/F1 against the closure of the predicted edges.
pub fn relation_prf(gold: &GoldRelations, predicted: &BTreeSet<(String, String, String)>) -> Prf {
    prf(&gold.pairs, predicted)
}

/// Per-dimension and overall relation scores, restricted to the
/// dimensions the gold mentions.
pub fn relation_report(gold: &GoldRelations, space: &ResourceSpace) -> (Vec<(String, Prf)>, Prf) {
    let pred = predicted_closure(space);
    let dims: BTreeSet<&str> = gold.pairs.iter().map(|p| p.2.as_str()).collect();
    let pred: BTreeSet<_> = pred.into_iter().filter(|p| dims.contains(p.2.as_str())).collect();
    let rows = dims
        .iter()
        .map(|d| {
            let g: BTreeSet<_> = gold.pairs.iter().filter(|p| p.2 == *d).cloned().collect();
            let p: BTreeSet<_> = pred.iter().filter(|p| p.2 == *d).cloned().collect();
            (d.to_string(), prf(&g, &p))
        })
        .collect();
    (rows, prf(&gold.pairs, &pred))
}

fn pct(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".into(), |x| format!("{:.2}%", 100.0 * x))
}

pub fn format_relation_report(rows: &[(String, Prf)], total: &Prf) -> String {
    let mut out = String::from("dimension\tprecision\trecall\tf1\n");
    for (d, p) in rows.iter().map(|(d, p)| (d.as_str(), p)).chain([("all", total)]) {
        let _ = writeln!(out, "{d}\t{}\t{}\t{:.2}%", pct(p.precision), pct(p.recall), 100.0 * p.f1);
    }
    out
}

/// Micro-averaged precision: correct returned over all returned. `None`
/// when nothing was returned.
pub fn qa_precision(gold: &GoldAnswers, returned: &BTreeMap<String, Vec<SentenceId>>) -> Option<f64> {
    let (mut total, mut correct) = (0usize, 0usize);
    for (q, g) in &gold.questions {
        if let Some(r) = returned.get(q) {
            total += r.len();
            correct += r.iter().filter(|id| g.contains(id)).count();
        }
    }
    (total > 0).then(|| correct as f64 / total as f64)
}

/// A ranking system under evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum System {
    Syntax,
    Baseline(Method),
}

impl System {
    pub fn name(self) -> String {
        match self {
            System::Syntax => "syntax-space".into(),
            System::Baseline(m) => m.to_string(),
        }
    }
}

/// Top-`k` answers per gold question for one system.
pub fn run_system(system: System, space: &ResourceSpace, gold: &GoldAnswers, k: usize, syn: &SynonymTable, params: &BaselineParams, tagger: &dyn Tagger) -> BTreeMap<String, Vec<SentenceId>> {
    let sentences: Vec<(SentenceId, Vec<String>)> = space.sentences.iter().map(|(id, r)| (*id, content_lemmas(&tagger.tag(&r.surface, *id, &r.doc_id)))).collect();
    gold.questions
        .iter()
        .map(|(q, _)| {
            let ids = match system {
                System::Syntax => answer_with(space, q, k, syn, tagger).map(|a| a.into_iter().map(|a| a.sentence_id).collect()).unwrap_or_default(),
                System::Baseline(m) => {
                    let ql = content_lemmas(&tagger.tag(q, 0, "question"));
                    baseline_rank(m, &ql, &sentences, params).into_iter().take(k).map(|(id, _)| id).collect()
                }
            };
            (q.clone(), ids)
        })
        .collect()
}

/// Precision of the syntax system and every baseline on a gold answer set.
pub fn qa_report(space: &ResourceSpace, gold: &GoldAnswers, k: usize, syn: &SynonymTable, params: &BaselineParams) -> Vec<(String, Option<f64>)> {
    let tagger = RuleTagger::default();
    std::iter::once(System::Syntax)
        .chain(Method::ALL.into_iter().map(System::Baseline))
        .map(|s| (s.name(), qa_precision(gold, &run_system(s, space, gold, k, syn, params, &tagger))))
        .collect()
}

pub fn format_qa_report(rows: &[(String, Option<f64>)]) -> String {
    let mut out = String::from("system\tprecision\n");
    for (s, p) in rows {
        let _ = writeln!(out, "{s}\t{}", pct(*p));
    }
    out
}

/// Top-ranked sentence for every baseline on one question.
pub fn baseline_table(space: &ResourceSpace, question: &str, params: &BaselineParams) -> Vec<(Method, Vec<(SentenceId, f64)>)> {
    let tagger = RuleTagger::default();
    let sentences: Vec<(SentenceId, Vec<String>)> = space.sentences.iter().map(|(id, r)| (*id, content_lemmas(&tagger.tag(&r.surface, *id, &r.doc_id)))).collect();
    let q = content_lemmas(&tagger.tag(question, 0, "question"));
    Method::ALL.into_iter().map(|m| (m, baseline_rank(m, &q, &sentences, params))).collect()
}

#[cfg(test)]
mod tests;
