//! Lexical ranking baselines over lemma sequences.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::corpus::{Pos, SentenceId, TaggedSentence};

use super::EvalError;

/// Function words dropped before every baseline sees the text.
pub const STOPWORDS: &[&str] = &[
    "a", "an", "the", "be", "do", "have", "how", "what", "which", "who", "whom", "whose", "when", "where", "why", "that", "this", "these",
    "those", "of", "in", "on", "at", "by", "for", "to", "with", "from", "and", "or", "can", "could", "will", "would", "may", "might",
    "must", "should", "shall", "it", "its",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    CommonWords,
    Jaccard,
    TfidfCosine,
    UnigramLm,
    Bm25,
    Gst,
    Lcs,
}

impl Method {
    pub const ALL: [Method; 7] = [Method::CommonWords, Method::Jaccard, Method::TfidfCosine, Method::UnigramLm, Method::Bm25, Method::Gst, Method::Lcs];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::CommonWords => "common-words",
            Method::Jaccard => "jaccard",
            Method::TfidfCosine => "tfidf-cosine",
            Method::UnigramLm => "unigram-lm",
            Method::Bm25 => "bm25",
            Method::Gst => "gst",
            Method::Lcs => "lcs",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = EvalError;
    fn from_str(s: &str) -> Result<Self, EvalError> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Method::ALL.into_iter().find(|m| m.as_str() == norm || m.as_str().replace('-', "") == norm).ok_or_else(|| EvalError::UnknownMethod(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaselineParams {
    pub bm25_k1: f64,
    pub bm25_b: f64,
    pub gst_min_tile: usize,
}

impl Default for BaselineParams {
    fn default() -> Self {
        BaselineParams { bm25_k1: 1.2, bm25_b: 0.75, gst_min_tile: 2 }
    }
}

/// Content lemmas of a tagged sentence, in order.
pub fn content_lemmas(s: &TaggedSentence) -> Vec<String> {
    s.tokens
        .iter()
        .filter(|t| !t.pos.is_punct() && t.pos != Pos::POS)
        .map(|t| t.lemma.to_lowercase())
        .filter(|l| !STOPWORDS.contains(&l.as_str()))
        .collect()
}

fn set(v: &[String]) -> BTreeSet<&str> {
    v.iter().map(String::as_str).collect()
}

fn tf(v: &[String]) -> BTreeMap<&str, f64> {
    let mut m = BTreeMap::new();
    for w in v {
        *m.entry(w.as_str()).or_insert(0.0) += 1.0;
    }
    m
}

fn lcs(a: &[String], b: &[String]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    for x in a {
        let mut cur = vec![0usize; b.len() + 1];
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y { prev[j] + 1 } else { prev[j + 1].max(cur[j]) };
        }
        prev = cur;
    }
    prev[b.len()]
}

/// Greedy string tiling: repeatedly tile the longest unmarked common run
/// of at least `min` tokens; the score is the total tiled length.
fn gst(a: &[String], b: &[String], min: usize) -> usize {
    let (mut ma, mut mb) = (vec![false; a.len()], vec![false; b.len()]);
    let mut total = 0;
    loop {
        let mut best = (0, 0, 0);
        for i in 0..a.len() {
            for j in 0..b.len() {
                let mut k = 0;
                while i + k < a.len() && j + k < b.len() && !ma[i + k] && !mb[j + k] && a[i + k] == b[j + k] {
                    k += 1;
                }
                if k > best.2 {
                    best = (i, j, k);
                }
            }
        }
        let (i, j, k) = best;
        if k < min.max(1) {
            return total;
        }
        for d in 0..k {
            ma[i + d] = true;
            mb[j + d] = true;
        }
        total += k;
    }
}

/// Score every sentence against the question; highest first, ties to the
/// lower sentence id.
pub fn baseline_rank(method: Method, question: &[String], sentences: &[(SentenceId, Vec<String>)], params: &BaselineParams) -> Vec<(SentenceId, f64)> {
    let n = sentences.len() as f64;
    let mut df: BTreeMap<&str, f64> = BTreeMap::new();
    for (_, s) in sentences {
        for w in set(s) {
            *df.entry(w).or_insert(0.0) += 1.0;
        }
    }
    let avgdl = if sentences.is_empty() { 0.0 } else { sentences.iter().map(|(_, s)| s.len() as f64).sum::<f64>() / n };
    let vocab: BTreeSet<&str> = sentences.iter().flat_map(|(_, s)| s.iter().map(String::as_str)).chain(question.iter().map(String::as_str)).collect();
    let q = set(question);
    let qtf = tf(question);

    let score = |s: &[String]| -> f64 {
        let ss = set(s);
        let common = q.intersection(&ss).count() as f64;
        match method {
            Method::CommonWords => common,
            Method::Jaccard => {
                let union = q.union(&ss).count() as f64;
                if union == 0.0 {
                    0.0
                } else {
                    common / union
                }
            }
            Method::TfidfCosine => {
                let idf = |w: &str| df.get(w).map_or(0.0, |d| (n / d).ln());
                let stf = tf(s);
                let dot: f64 = qtf.iter().map(|(w, c)| c * idf(w) * stf.get(w).copied().unwrap_or(0.0) * idf(w)).sum();
                let nq = qtf.iter().map(|(w, c)| (c * idf(w)).powi(2)).sum::<f64>().sqrt();
                let ns = stf.iter().map(|(w, c)| (c * idf(w)).powi(2)).sum::<f64>().sqrt();
                if nq == 0.0 || ns == 0.0 {
                    0.0
                } else {
                    dot / (nq * ns)
                }
            }
            Method::UnigramLm => {
                // log-likelihood with add-one smoothing
                let stf = tf(s);
                let denom = s.len() as f64 + vocab.len() as f64;
                question.iter().map(|w| ((stf.get(w.as_str()).copied().unwrap_or(0.0) + 1.0) / denom).ln()).sum()
            }
            Method::Bm25 => {
                let stf = tf(s);
                let dl = s.len() as f64;
                q.iter()
                    .map(|w| {
                        let d = df.get(w).copied().unwrap_or(0.0);
                        let idf = ((n - d + 0.5) / (d + 0.5) + 1.0).ln();
                        let f = stf.get(w).copied().unwrap_or(0.0);
                        let norm = if avgdl > 0.0 { dl / avgdl } else { 0.0 };
                        idf * f * (params.bm25_k1 + 1.0) / (f + params.bm25_k1 * (1.0 - params.bm25_b + params.bm25_b * norm))
                    })
                    .sum()
            }
            Method::Gst => gst(question, s, params.gst_min_tile) as f64,
            Method::Lcs => lcs(question, s) as f64,
        }
    };
    let mut out: Vec<(SentenceId, f64)> = sentences.iter().map(|(id, s)| (*id, score(s))).collect();
    out.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    out
}
