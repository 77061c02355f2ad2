//! Question answering over a built space: parse the question, intersect
//! dimension searches, check each candidate against the answer pattern and
//! rank the accepted ones.

mod matcher;
mod question;
pub mod theorems;

use std::collections::BTreeSet;
use std::fmt;

use crate::corpus::{RuleTagger, SentenceId, Tagger};
use crate::space::{DimensionName, Entry, Posting, ResourceSpace};
use crate::subsume::{Cmp, HarvestedEdges, Subsumer, SynonymTable};
use crate::syntax::{Adverbial, AdverbialKind, Element, ObjectGroup, Polarity, SentenceSyntax};

pub use matcher::{match_answer, question_relevant, relevant_slots, sentence_relevant, AnswerJudgment, Outcome, Slot};
pub use question::parse_question;

/// Surface and lemma of the placeholder standing for an untyped gap
/// ("what", "who").
pub const GAP: &str = "?";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QaError {
    #[error("not a question: {0:?}")]
    NotAQuestion(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WhAdverb {
    When,
    Where,
    Why,
    How,
}

impl WhAdverb {
    pub fn from_word(w: &str) -> Option<Self> {
        match w {
            "when" => Some(WhAdverb::When),
            "where" => Some(WhAdverb::Where),
            "why" => Some(WhAdverb::Why),
            "how" => Some(WhAdverb::How),
            _ => None,
        }
    }

    /// Adverbial kinds that answer the question word.
    pub fn kinds(self) -> &'static [AdverbialKind] {
        match self {
            WhAdverb::When => &[AdverbialKind::Time],
            WhAdverb::Where => &[AdverbialKind::Place],
            WhAdverb::Why => &[AdverbialKind::Reason, AdverbialKind::Purpose],
            WhAdverb::How => &[AdverbialKind::Method],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuestionKind {
    AboutSubject,
    AboutDirectObject,
    AboutIndirectObject,
    AboutObjectComplement,
    AboutAdverbial(WhAdverb),
    General,
}

impl fmt::Display for QuestionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuestionKind::AboutAdverbial(w) => write!(f, "AboutAdverbial({w:?})"),
            k => write!(f, "{k:?}"),
        }
    }
}

/// A parsed question in declarative slot order. The asked slot holds the
/// gap's type ("which node" → node) or the `GAP` placeholder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuestionSyntax {
    pub kind: QuestionKind,
    pub interrogative: String,
    pub subject: Option<Element>,
    pub action: Option<Element>,
    pub object: Option<ObjectGroup>,
    pub adverbials: Vec<Adverbial>,
    pub polarity: Polarity,
}

pub fn is_gap(e: &Element) -> bool {
    e.head() == Some(GAP)
}

impl QuestionSyntax {
    /// The question's slots as a sentence tuple (gaps included).
    pub fn as_sentence(&self) -> SentenceSyntax {
        SentenceSyntax {
            sentence_id: 0,
            part: 0,
            subject: self.subject.clone(),
            action: self.action.clone(),
            object: self.object.clone(),
            adverbials: self.adverbials.clone(),
            polarity: self.polarity,
            unparsed: Vec::new(),
        }
    }

    /// The gap slot's type constraint, if the gap is typed.
    pub fn gap_element(&self) -> Option<&Element> {
        let o = self.object.as_ref();
        let e = match self.kind {
            QuestionKind::AboutSubject => self.subject.as_ref(),
            QuestionKind::AboutDirectObject => o.map(|o| &o.direct),
            QuestionKind::AboutIndirectObject => o.and_then(|o| o.indirect.as_ref()),
            QuestionKind::AboutObjectComplement => o.and_then(|o| o.complement.as_ref()),
            _ => None,
        };
        e.filter(|e| !is_gap(e))
    }
}

/// Same interrogative word and kind, and the question tuple is a
/// strict subclass of the other under the sentence rule.
pub fn question_subclass(q1: &QuestionSyntax, q2: &QuestionSyntax, edges: &HarvestedEdges) -> bool {
    q1.interrogative == q2.interrogative && q1.kind == q2.kind && Subsumer::new(edges, SynonymTable::empty_ref()).sentence(&q1.as_sentence(), &q2.as_sentence()) == Cmp::Strict
}

fn root_postings(space: &ResourceSpace, name: DimensionName) -> BTreeSet<Posting> {
    space.dimension(name).search_root()
}

/// Intersect the dimension searches of the question's slots. The asked
/// slot contributes its type's search, or the dimension root when untyped.
pub fn candidate_search(space: &ResourceSpace, q: &QuestionSyntax, syn: &SynonymTable) -> BTreeSet<Posting> {
    let empty = SynonymTable::empty_ref();
    let mut sets: Vec<BTreeSet<Posting>> = Vec::new();
    let mut slot = |name: DimensionName, e: &Element, syn: &SynonymTable| {
        if is_gap(e) {
            sets.push(root_postings(space, name));
        } else {
            sets.push(space.dimension(name).search(&Entry::plain(e.clone()), &space.harvested, syn));
        }
    };
    if let Some(e) = &q.subject {
        slot(DimensionName::Subject, e, empty);
    }
    if let Some(e) = &q.action {
        slot(DimensionName::Action, e, syn);
    }
    if let Some(o) = &q.object {
        slot(DimensionName::Object, &o.direct, empty);
    }
    for a in &q.adverbials {
        sets.push(space.dimension(DimensionName::Adverbial).search(&Entry::adverbial(a), &space.harvested, empty));
    }
    if let QuestionKind::AboutAdverbial(w) = q.kind {
        let d = space.dimension(DimensionName::Adverbial);
        let with_kind: BTreeSet<Posting> = d
            .nodes
            .values()
            .filter(|n| n.entry.kind.is_some_and(|k| w.kinds().contains(&k)))
            .flat_map(|n| d.postings.get(&n.key).into_iter().flatten().copied())
            .collect();
        sets.push(with_kind);
    }
    let mut it = sets.into_iter();
    let Some(first) = it.next() else { return BTreeSet::new() };
    it.fold(first, |acc, s| acc.intersection(&s).copied().collect())
}

pub fn candidate_sentences(space: &ResourceSpace, q: &QuestionSyntax, syn: &SynonymTable) -> BTreeSet<SentenceId> {
    candidate_search(space, q, syn).into_iter().map(|p| p.sentence_id).collect()
}

/// One ranked answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Answer {
    pub sentence_id: SentenceId,
    pub judgment: AnswerJudgment,
}

/// Judge every candidate part; keep the best accepted part per sentence,
/// order by score and keep the top `k`.
pub fn answer_question(space: &ResourceSpace, q: &QuestionSyntax, k: usize, syn: &SynonymTable) -> Vec<Answer> {
    let mut best: std::collections::BTreeMap<SentenceId, AnswerJudgment> = std::collections::BTreeMap::new();
    for p in candidate_search(space, q, syn) {
        let Some(s) = space.parts(p) else { continue };
        let j = match_answer(q, s, &space.harvested, syn);
        if !j.accepted {
            continue;
        }
        match best.get(&p.sentence_id) {
            Some(old) if old.sort_key() <= j.sort_key() => {}
            _ => {
                best.insert(p.sentence_id, j);
            }
        }
    }
    let mut out: Vec<Answer> = best.into_iter().map(|(sentence_id, judgment)| Answer { sentence_id, judgment }).collect();
    out.sort_by_key(|a| a.judgment.sort_key());
    out.truncate(k);
    out
}

/// Parse `question` with the built-in tagger and answer it.
pub fn answer(space: &ResourceSpace, question: &str, k: usize, syn: &SynonymTable) -> Result<Vec<Answer>, QaError> {
    answer_with(space, question, k, syn, &RuleTagger::default())
}

pub fn answer_with(space: &ResourceSpace, question: &str, k: usize, syn: &SynonymTable, tagger: &dyn Tagger) -> Result<Vec<Answer>, QaError> {
    let tagged = tagger.tag(question, 0, "question");
    let q = parse_question(&tagged)?;
    Ok(answer_question(space, &q, k, syn))
}

/// `rank<TAB>sentence_id<TAB>doc_id<TAB>score<TAB>surface`, plus per-slot
/// lines when `explain` is set.
pub fn format_answers(space: &ResourceSpace, answers: &[Answer], explain: bool) -> String {
    let mut out = String::new();
    for (i, a) in answers.iter().enumerate() {
        let (doc, surface) = space.sentences.get(&a.sentence_id).map_or(("-", ""), |r| (r.doc_id.as_str(), r.surface.as_str()));
        out.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", i + 1, a.sentence_id, doc, a.judgment.score_string(), surface));
        if explain {
            for (slot, o) in &a.judgment.matched {
                out.push_str(&format!("\t{slot}\t{o:?}\n"));
            }
            if a.judgment.consistency_penalty > 0 {
                out.push_str("\tpolarity\tmismatch\n");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
