//! Subclass decisions between phrases, clauses and sentences, plus subclass
//! edges harvested from lexical patterns.

mod engine;
mod harvest;
mod patterns;
mod synonyms;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::SentenceId;
use crate::syntax::{Category, Clause, Element, Phrase, PhraseKind, SentenceSyntax};

pub use engine::{Cmp, Subsumer};
pub use harvest::{Harvest, HarvestedEdges};
pub use patterns::scan_syntactic_patterns;
pub use synonyms::SynonymTable;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubsumeError {
    #[error("cannot compare {0:?} with {1:?}")]
    KindMismatch(Category, Category),
}

/// Outcome of comparing two elements of the same category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Equal,
    Subclass,
    Superclass,
    /// Same head (or lead word) but neither subsumes the other.
    Related,
    Unrelated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeSource {
    Modifier,
    SyntacticPattern,
    Integrated,
}

impl EdgeSource {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeSource::Modifier => "modifier",
            EdgeSource::SyntacticPattern => "pattern",
            EdgeSource::Integrated => "integrated",
        }
    }
}

impl fmt::Display for EdgeSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EdgeSource {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "modifier" => Ok(EdgeSource::Modifier),
            "pattern" => Ok(EdgeSource::SyntacticPattern),
            "integrated" => Ok(EdgeSource::Integrated),
            _ => Err(format!("unknown edge source {s:?}")),
        }
    }
}

/// `child ⊑ parent` between canonical keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubclassEdge {
    pub child: String,
    pub parent: String,
    pub source: EdgeSource,
    /// Sentence the pattern was found in (pattern edges only).
    pub evidence: Option<SentenceId>,
}

impl SubclassEdge {
    pub fn new(child: impl Into<String>, parent: impl Into<String>, source: EdgeSource, evidence: Option<SentenceId>) -> Self {
        SubclassEdge { child: child.into(), parent: parent.into(), source, evidence }
    }

    /// `child<TAB>parent<TAB>dimension<TAB>source<TAB>evidence`
    pub fn tsv_line(&self, dimension: &str) -> String {
        let ev = self.evidence.map(|e| e.to_string()).unwrap_or_else(|| "-".into());
        format!("{}\t{}\t{}\t{}\t{}", self.child, self.parent, dimension, self.source, ev)
    }
}

fn check_kinds(a: Category, b: Category) -> Result<(), SubsumeError> {
    if a == b {
        Ok(())
    } else {
        Err(SubsumeError::KindMismatch(a, b))
    }
}

/// Modifier rule for phrases with a head: same head, and the parent's
/// modifiers form a proper sub-multiset of the child's.
pub fn phrase_subclass(p1: &Phrase, p2: &Phrase) -> Result<bool, SubsumeError> {
    check_kinds(p1.category(), p2.category())?;
    Ok(Subsumer::plain().modifier(p1, p2) == Cmp::Strict)
}

/// Verb phrase with an optional object: every component same-or-subclass,
/// at least one strictly.
pub fn verb_phrase_subclass(
    v1: (&Phrase, Option<&Element>),
    v2: (&Phrase, Option<&Element>),
    edges: &HarvestedEdges,
) -> Result<bool, SubsumeError> {
    check_kinds(v1.0.category(), Category::Verbal)?;
    check_kinds(v2.0.category(), Category::Verbal)?;
    if let (Some(a), Some(b)) = (v1.1, v2.1) {
        check_kinds(a.category(), b.category())?;
    }
    let s = Subsumer::new(edges, SynonymTable::empty_ref());
    let c = Cmp::product([s.phrase(v1.0, v2.0), s.optional(v1.1, v2.1)]);
    Ok(c == Cmp::Strict)
}

/// Same preposition and the inner noun phrases are in a subclass relation
/// (modifier rule or harvested edges).
pub fn prep_phrase_subclass(q1: &Phrase, q2: &Phrase, edges: &HarvestedEdges) -> Result<bool, SubsumeError> {
    check_kinds(q1.category(), Category::Prepositional)?;
    check_kinds(q2.category(), Category::Prepositional)?;
    Ok(Subsumer::new(edges, SynonymTable::empty_ref()).phrase(q1, q2) == Cmp::Strict)
}

pub fn clause_subclass(c1: &Clause, c2: &Clause, edges: &HarvestedEdges) -> bool {
    Subsumer::new(edges, SynonymTable::empty_ref()).clause(c1, c2) == Cmp::Strict
}

pub fn sentence_subclass(s1: &SentenceSyntax, s2: &SentenceSyntax, edges: &HarvestedEdges) -> bool {
    Subsumer::new(edges, SynonymTable::empty_ref()).sentence(s1, s2) == Cmp::Strict
}

/// Integrated comparison of two elements of the same category.
pub fn element_subclass(e1: &Element, e2: &Element, edges: &HarvestedEdges, syn: &SynonymTable) -> Result<Relation, SubsumeError> {
    check_kinds(e1.category(), e2.category())?;
    let s = Subsumer::new(edges, syn);
    Ok(s.relation(e1, e2))
}

fn same_head(e1: &Element, e2: &Element, syn: &SynonymTable) -> bool {
    match (e1, e2) {
        (Element::Phrase(a), Element::Phrase(b)) => {
            let heads = a.head == b.head || syn.are_synonyms(&a.head, &b.head);
            match (a.split_prep(), b.split_prep()) {
                (Some((pa, _)), Some((pb, _))) => heads && pa == pb,
                _ => heads && (a.kind == b.kind || (a.kind != PhraseKind::PrepositionalPhrase && b.kind != PhraseKind::PrepositionalPhrase)),
            }
        }
        (Element::Clause(a), Element::Clause(b)) => a.lead == b.lead,
        _ => false,
    }
}
