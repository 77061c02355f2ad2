use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::corpus::SentenceId;

/// Articles never take part in keys or modifier sets.
pub const ARTICLES: &[&str] = &["a", "an", "the"];

/// Auxiliary lemmas that carry tense/voice only; they are kept in a verb
/// phrase's `pre` list but excluded from keys and modifier comparison.
pub const AUX_LEMMAS: &[&str] = &["be", "have", "do", "to"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PhraseKind {
    NounPhrase,
    VerbPhrase,
    AdjectivePhrase,
    AdverbPhrase,
    PrepositionalPhrase,
    Pronoun,
}

/// Lexical category used to decide which phrases may be compared at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Nominal,
    Verbal,
    Adjectival,
    Adverbial,
    Prepositional,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Phrase {
    pub kind: PhraseKind,
    pub pre: Vec<String>,
    pub head: String,
    pub post: Vec<String>,
    pub span: Range<usize>,
    /// Surface text for display; not part of identity.
    #[serde(default)]
    pub display: String,
}

impl Phrase {
    pub fn new(kind: PhraseKind, pre: Vec<String>, head: impl Into<String>, post: Vec<String>) -> Self {
        let head = head.into();
        let mut p = Phrase { kind, pre, head, post, span: 0..0, display: String::new() };
        p.display = p.default_display();
        p
    }

    pub fn noun(pre: &[&str], head: &str, post: &[&str]) -> Self {
        Phrase::new(PhraseKind::NounPhrase, strs(pre), head, strs(post))
    }

    pub fn verb(pre: &[&str], head: &str, post: &[&str]) -> Self {
        Phrase::new(PhraseKind::VerbPhrase, strs(pre), head, strs(post))
    }

    pub fn prep(prep: &str, np: &Phrase) -> Self {
        let mut pre = vec![prep.to_string()];
        pre.extend(np.pre.iter().cloned());
        let mut p = Phrase::new(PhraseKind::PrepositionalPhrase, pre, np.head.clone(), np.post.clone());
        p.display = format!("{prep} {}", np.display);
        p
    }

    pub fn with_span(mut self, span: Range<usize>) -> Self {
        self.span = span;
        self
    }

    fn default_display(&self) -> String {
        let mut parts: Vec<&str> = self.pre.iter().map(String::as_str).collect();
        parts.push(&self.head);
        parts.extend(self.post.iter().map(String::as_str));
        parts.join(" ")
    }

    pub fn category(&self) -> Category {
        match self.kind {
            PhraseKind::NounPhrase | PhraseKind::Pronoun => Category::Nominal,
            PhraseKind::VerbPhrase => Category::Verbal,
            PhraseKind::AdjectivePhrase => Category::Adjectival,
            PhraseKind::AdverbPhrase => Category::Adverbial,
            PhraseKind::PrepositionalPhrase => Category::Prepositional,
        }
    }

    /// For a prepositional phrase, the preposition and the inner noun phrase.
    pub fn split_prep(&self) -> Option<(&str, Phrase)> {
        if self.kind != PhraseKind::PrepositionalPhrase || self.pre.is_empty() {
            return None;
        }
        let np = Phrase::new(PhraseKind::NounPhrase, self.pre[1..].to_vec(), self.head.clone(), self.post.clone());
        Some((&self.pre[0], np))
    }

    /// Modifier lemmas that count for subclass decisions: articles are
    /// dropped and, for verb phrases, tense/voice auxiliaries too.
    pub fn modifiers(&self) -> Vec<&str> {
        self.pre
            .iter()
            .chain(self.post.iter())
            .map(String::as_str)
            .filter(|m| !self.ignorable(m))
            .collect()
    }

    fn ignorable(&self, m: &str) -> bool {
        ARTICLES.contains(&m) || (self.kind == PhraseKind::VerbPhrase && AUX_LEMMAS.contains(&m))
    }

    pub fn is_negated(&self) -> bool {
        self.pre.iter().any(|m| matches!(m.as_str(), "not" | "never" | "no" | "n't"))
    }

    pub fn key(&self) -> String {
        let tag = match self.kind {
            PhraseKind::AdjectivePhrase => "adj:",
            PhraseKind::AdverbPhrase => "adv:",
            _ => "",
        };
        if let Some((prep, np)) = self.split_prep() {
            return format!("{prep} {}", np.key());
        }
        let mut pre: Vec<&str> = self.pre.iter().map(String::as_str).filter(|m| !self.ignorable(m)).collect();
        pre.sort_unstable();
        let post = self.post.iter().map(String::as_str).filter(|m| !self.ignorable(m));
        let words: Vec<&str> = pre.into_iter().chain(std::iter::once(self.head.as_str())).chain(post).collect();
        format!("{tag}{}", words.join(" "))
    }
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub lead: Option<String>,
    pub subject: Option<Box<Element>>,
    pub action: Option<Phrase>,
    pub object: Option<Box<Element>>,
    pub adverbials: Vec<Adverbial>,
    pub span: Range<usize>,
}

impl Clause {
    pub fn key(&self) -> String {
        let opt = |e: Option<String>| e.unwrap_or_else(|| "-".into());
        let advs = if self.adverbials.is_empty() {
            "-".to_string()
        } else {
            self.adverbials.iter().map(Adverbial::key).collect::<Vec<_>>().join(";")
        };
        format!(
            "<{}|{}|{}|{}|{}>",
            opt(self.lead.clone()),
            opt(self.subject.as_ref().map(|e| e.key())),
            opt(self.action.as_ref().map(Phrase::key)),
            opt(self.object.as_ref().map(|e| e.key())),
            advs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Element {
    Phrase(Phrase),
    Clause(Clause),
}

impl Element {
    pub fn key(&self) -> String {
        match self {
            Element::Phrase(p) => p.key(),
            Element::Clause(c) => c.key(),
        }
    }

    pub fn category(&self) -> Category {
        match self {
            Element::Phrase(p) => p.category(),
            Element::Clause(_) => Category::Nominal,
        }
    }

    pub fn as_phrase(&self) -> Option<&Phrase> {
        match self {
            Element::Phrase(p) => Some(p),
            Element::Clause(_) => None,
        }
    }

    pub fn as_clause(&self) -> Option<&Clause> {
        match self {
            Element::Clause(c) => Some(c),
            Element::Phrase(_) => None,
        }
    }

    pub fn head(&self) -> Option<&str> {
        self.as_phrase().map(|p| p.head.as_str())
    }

    pub fn span(&self) -> Range<usize> {
        match self {
            Element::Phrase(p) => p.span.clone(),
            Element::Clause(c) => c.span.clone(),
        }
    }

    pub fn display(&self) -> String {
        match self {
            Element::Phrase(p) => p.display.clone(),
            Element::Clause(c) => {
                let mut parts = Vec::new();
                if let Some(l) = &c.lead {
                    parts.push(l.clone());
                }
                if let Some(s) = &c.subject {
                    parts.push(s.display());
                }
                if let Some(a) = &c.action {
                    parts.push(a.display.clone());
                }
                if let Some(o) = &c.object {
                    parts.push(o.display());
                }
                parts.extend(c.adverbials.iter().map(|a| a.content.display()));
                parts.join(" ")
            }
        }
    }
}

impl From<Phrase> for Element {
    fn from(p: Phrase) -> Self {
        Element::Phrase(p)
    }
}

impl From<Clause> for Element {
    fn from(c: Clause) -> Self {
        Element::Clause(c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AdverbialKind {
    Time,
    Place,
    Method,
    Purpose,
    Reason,
    Condition,
    Unclassified,
}

impl AdverbialKind {
    pub const ALL: [AdverbialKind; 7] = [
        AdverbialKind::Time,
        AdverbialKind::Place,
        AdverbialKind::Method,
        AdverbialKind::Purpose,
        AdverbialKind::Reason,
        AdverbialKind::Condition,
        AdverbialKind::Unclassified,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AdverbialKind::Time => "time",
            AdverbialKind::Place => "place",
            AdverbialKind::Method => "method",
            AdverbialKind::Purpose => "purpose",
            AdverbialKind::Reason => "reason",
            AdverbialKind::Condition => "condition",
            AdverbialKind::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for AdverbialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adverbial {
    pub kind: AdverbialKind,
    pub content: Element,
    pub marker: Option<String>,
}

impl Adverbial {
    pub fn key(&self) -> String {
        format!("{}:{}", self.kind, self.content.key())
    }

    pub fn span(&self) -> Range<usize> {
        self.content.span()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndirectPosition {
    BeforeDirect,
    AfterPreposition,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectGroup {
    pub direct: Element,
    pub indirect: Option<Element>,
    pub complement: Option<Element>,
    pub indirect_position: IndirectPosition,
    /// The preposition introducing an `AfterPreposition` indirect object.
    pub preposition: Option<String>,
}

impl ObjectGroup {
    pub fn direct(e: Element) -> Self {
        ObjectGroup { direct: e, indirect: None, complement: None, indirect_position: IndirectPosition::None, preposition: None }
    }

    pub fn key(&self) -> String {
        let mut k = self.direct.key();
        if let Some(i) = &self.indirect {
            k.push_str(&format!(" /io {}", i.key()));
        }
        if let Some(c) = &self.complement {
            k.push_str(&format!(" /oc {}", c.key()));
        }
        k
    }

    pub fn spans(&self) -> Vec<Range<usize>> {
        let mut v = vec![self.direct.span()];
        v.extend(self.indirect.iter().map(Element::span));
        v.extend(self.complement.iter().map(Element::span));
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarity {
    Affirmative,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceSyntax {
    pub sentence_id: SentenceId,
    /// Index of the coordinated clause within the sentence (0 when not split).
    pub part: u16,
    pub subject: Option<Element>,
    pub action: Option<Element>,
    pub object: Option<ObjectGroup>,
    pub adverbials: Vec<Adverbial>,
    pub polarity: Polarity,
    /// Token indices not assigned to any constituent (punctuation, parentheticals, ...).
    pub unparsed: Vec<usize>,
}

impl SentenceSyntax {
    pub fn action_phrase(&self) -> Option<&Phrase> {
        self.action.as_ref().and_then(Element::as_phrase)
    }

    /// Token indices covered by each top-level constituent.
    pub fn constituent_spans(&self) -> Vec<Range<usize>> {
        let mut v = Vec::new();
        v.extend(self.subject.iter().map(Element::span));
        v.extend(self.action.iter().map(Element::span));
        if let Some(o) = &self.object {
            v.extend(o.spans());
        }
        v.extend(self.adverbials.iter().map(Adverbial::span));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noun_key_sorts_pre_and_drops_articles() {
        let a = Phrase::noun(&["the", "unsupervised", "graph-based"], "algorithm", &[]);
        let b = Phrase::noun(&["graph-based", "unsupervised"], "algorithm", &[]);
        assert_eq!(a.key(), "graph-based unsupervised algorithm");
        assert_eq!(a.key(), b.key());
        let c = Phrase::noun(&[], "essence", &["of", "mathematics"]);
        assert_eq!(c.key(), "essence of mathematics");
    }

    #[test]
    fn verb_key_drops_aux() {
        assert_eq!(Phrase::verb(&["can", "be"], "build", &["well"]).key(), "can build well");
        assert_eq!(Phrase::verb(&[], "be", &[]).key(), "be");
        assert!(Phrase::verb(&["do", "not"], "need", &[]).is_negated());
    }

    #[test]
    fn prep_key() {
        let np = Phrase::noun(&[], "china", &[]);
        let pp = Phrase::prep("in", &np);
        assert_eq!(pp.key(), "in china");
        let (p, inner) = pp.split_prep().unwrap();
        assert_eq!(p, "in");
        assert_eq!(inner.key(), "china");
        let adv = Adverbial { kind: AdverbialKind::Place, content: pp.into(), marker: Some("in".into()) };
        assert_eq!(adv.key(), "place:in china");
    }

    #[test]
    fn clause_key() {
        let c = Clause {
            lead: Some("to".into()),
            subject: None,
            action: Some(Phrase::verb(&[], "solve", &[])),
            object: Some(Box::new(Phrase::noun(&["complex"], "problem", &[]).into())),
            adverbials: vec![],
            span: 0..4,
        };
        assert_eq!(c.key(), "<to|-|solve|complex problem|->");
    }
}
