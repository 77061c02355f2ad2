use std::cmp::Reverse;
use std::fmt;

use crate::corpus::SentenceId;
use crate::subsume::{Cmp, HarvestedEdges, Subsumer, SynonymTable};
use crate::syntax::{Adverbial, AdverbialKind, Element, SentenceSyntax};

use super::{is_gap, QuestionKind, QuestionSyntax};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Subject,
    Action,
    DirectObject,
    IndirectObject,
    ObjectComplement,
    Adverbial(AdverbialKind),
}

impl Slot {
    /// The dimension holding the slot, if any.
    pub fn dimension(self) -> Option<crate::space::DimensionName> {
        use crate::space::DimensionName as D;
        match self {
            Slot::Subject => Some(D::Subject),
            Slot::Action => Some(D::Action),
            Slot::DirectObject => Some(D::Object),
            Slot::Adverbial(_) => Some(D::Adverbial),
            _ => None,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Subject => f.write_str("subject"),
            Slot::Action => f.write_str("action"),
            Slot::DirectObject => f.write_str("object"),
            Slot::IndirectObject => f.write_str("indirect"),
            Slot::ObjectComplement => f.write_str("complement"),
            Slot::Adverbial(k) => write!(f, "adverbial:{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Same,
    Synonym,
    Subclass,
    GapFilled,
    Missing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnswerJudgment {
    pub sentence_id: SentenceId,
    pub part: u16,
    pub matched: Vec<(Slot, Outcome)>,
    pub consistency_penalty: u8,
    pub accepted: bool,
}

impl AnswerJudgment {
    pub fn satisfied(&self) -> usize {
        self.matched.iter().filter(|(_, o)| *o != Outcome::Missing).count()
    }

    pub fn strict(&self) -> usize {
        self.matched.iter().filter(|(_, o)| *o == Outcome::Subclass).count()
    }

    /// Total order: more satisfied slots, fewer strict steps, no polarity
    /// penalty, lower sentence id.
    pub fn sort_key(&self) -> (Reverse<usize>, usize, u8, SentenceId, u16) {
        (Reverse(self.satisfied()), self.strict(), self.consistency_penalty, self.sentence_id, self.part)
    }

    pub fn score_string(&self) -> String {
        format!("({},{},{})", self.satisfied(), self.strict(), self.consistency_penalty)
    }

    pub fn outcome(&self, slot: Slot) -> Option<Outcome> {
        self.matched.iter().find(|(s, _)| *s == slot).map(|(_, o)| *o)
    }
}

fn outcome(c: Cmp) -> Outcome {
    match c {
        Cmp::Same => Outcome::Same,
        Cmp::Strict => Outcome::Subclass,
        Cmp::No => Outcome::Missing,
    }
}

/// A question slot against the answer's element. `asked` marks the gap.
fn judge(q: Option<&Element>, a: Option<&Element>, asked: bool, s: &Subsumer) -> Option<Outcome> {
    let q = q?;
    let Some(a) = a else { return Some(Outcome::Missing) };
    if is_gap(q) {
        return Some(Outcome::GapFilled);
    }
    let c = s.element(a, q);
    Some(match (asked, c) {
        (_, Cmp::No) => Outcome::Missing,
        (true, _) => Outcome::GapFilled,
        (false, c) => outcome(c),
    })
}

/// Check a candidate part against the answer pattern of the question kind.
pub fn match_answer(q: &QuestionSyntax, s: &SentenceSyntax, edges: &HarvestedEdges, syn: &SynonymTable) -> AnswerJudgment {
    let nouns = Subsumer::new(edges, SynonymTable::empty_ref());
    let verbs = Subsumer::new(edges, syn);
    let mut matched = Vec::new();
    let mut push = |slot, o: Option<Outcome>| {
        if let Some(o) = o {
            matched.push((slot, o));
        }
    };
    push(Slot::Subject, judge(q.subject.as_ref(), s.subject.as_ref(), q.kind == QuestionKind::AboutSubject, &nouns));
    let action = judge(q.action.as_ref(), s.action.as_ref(), false, &verbs).map(|o| match (o, q.action.as_ref(), s.action.as_ref()) {
        (Outcome::Same, Some(qa), Some(sa)) if nouns.element(sa, qa) != Cmp::Same => Outcome::Synonym,
        _ => o,
    });
    push(Slot::Action, action);
    let (qo, so) = (q.object.as_ref(), s.object.as_ref());
    push(Slot::DirectObject, judge(qo.map(|o| &o.direct), so.map(|o| &o.direct), q.kind == QuestionKind::AboutDirectObject, &nouns));
    push(
        Slot::IndirectObject,
        judge(qo.and_then(|o| o.indirect.as_ref()), so.and_then(|o| o.indirect.as_ref()), q.kind == QuestionKind::AboutIndirectObject, &nouns),
    );
    push(
        Slot::ObjectComplement,
        judge(qo.and_then(|o| o.complement.as_ref()), so.and_then(|o| o.complement.as_ref()), q.kind == QuestionKind::AboutObjectComplement, &nouns),
    );

    // Adverbials: kind-aligned, equal matches before subclass matches.
    let mut used = vec![false; s.adverbials.len()];
    let mut adv: Vec<Option<Outcome>> = vec![None; q.adverbials.len()];
    for want in [Cmp::Same, Cmp::Strict] {
        for (qi, qa) in q.adverbials.iter().enumerate() {
            if adv[qi].is_some() {
                continue;
            }
            if let Some(si) = (0..s.adverbials.len()).find(|&si| !used[si] && nouns.adverbial(&s.adverbials[si], qa) == want) {
                used[si] = true;
                adv[qi] = Some(outcome(want));
            }
        }
    }
    for (qa, o) in q.adverbials.iter().zip(adv) {
        push(Slot::Adverbial(qa.kind), Some(o.unwrap_or(Outcome::Missing)));
    }
    if let QuestionKind::AboutAdverbial(w) = q.kind {
        let hit = (0..s.adverbials.len()).find(|&si| !used[si] && w.kinds().contains(&s.adverbials[si].kind));
        let kind = hit.map_or(w.kinds()[0], |si| s.adverbials[si].kind);
        push(Slot::Adverbial(kind), Some(if hit.is_some() { Outcome::GapFilled } else { Outcome::Missing }));
    }

    let accepted = matched.iter().all(|(_, o)| *o != Outcome::Missing);
    AnswerJudgment {
        sentence_id: s.sentence_id,
        part: s.part,
        matched,
        consistency_penalty: u8::from(q.polarity != s.polarity),
        accepted,
    }
}

fn related(a: &Element, b: &Element, s: &Subsumer) -> bool {
    !is_gap(a) && !is_gap(b) && (s.element(a, b).holds() || s.element(b, a).holds())
}

fn related_adverbial(a: &Adverbial, b: &Adverbial, s: &Subsumer) -> bool {
    a.kind == b.kind && related(&a.content, &b.content, s)
}

/// Slot pairs through which two tuples are relevant: the elements are the
/// same or one is a subclass of the other. Adverbials pair up by kind.
pub fn relevant_slots(s1: &SentenceSyntax, s2: &SentenceSyntax, edges: &HarvestedEdges) -> Vec<Slot> {
    let s = Subsumer::new(edges, SynonymTable::empty_ref());
    let mut out = Vec::new();
    let pair = |a: Option<&Element>, b: Option<&Element>| matches!((a, b), (Some(a), Some(b)) if related(a, b, &s));
    if pair(s1.subject.as_ref(), s2.subject.as_ref()) {
        out.push(Slot::Subject);
    }
    if pair(s1.action.as_ref(), s2.action.as_ref()) {
        out.push(Slot::Action);
    }
    if pair(s1.object.as_ref().map(|o| &o.direct), s2.object.as_ref().map(|o| &o.direct)) {
        out.push(Slot::DirectObject);
    }
    for a in &s1.adverbials {
        if s2.adverbials.iter().any(|b| related_adverbial(a, b, &s)) && !out.contains(&Slot::Adverbial(a.kind)) {
            out.push(Slot::Adverbial(a.kind));
        }
    }
    out
}

pub fn sentence_relevant(s1: &SentenceSyntax, s2: &SentenceSyntax, edges: &HarvestedEdges) -> bool {
    !relevant_slots(s1, s2, edges).is_empty()
}

pub fn question_relevant(q1: &QuestionSyntax, q2: &QuestionSyntax, edges: &HarvestedEdges) -> bool {
    sentence_relevant(&q1.as_sentence(), &q2.as_sentence(), edges)
}
