//! Checkable forms of the answer-set theorems, used by the property suites.

use std::collections::BTreeSet;

use crate::corpus::SentenceId;
use crate::subsume::{Subsumer, SynonymTable};
use crate::syntax::{Element, SentenceSyntax};
use crate::space::{Posting, ResourceSpace};

use super::{answer_question, candidate_sentences, question_relevant, question_subclass, relevant_slots, QuestionSyntax, Slot};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TheoremReport {
    pub subclass_pairs: usize,
    /// Candidate set of the subclass question not contained in the other's.
    pub subset_violations: usize,
    /// Same containment on accepted answers (reported, not asserted).
    pub answer_subset_divergences: usize,
    pub relevant_pairs: usize,
    /// Answer pairs whose elements on the shared slot are not both below
    /// the more general question element.
    pub relevance_violations: usize,
    /// Answer pairs that are not relevant element-to-element (siblings
    /// under the shared class). Reported, not asserted.
    pub pairwise_divergences: usize,
    pub answer_pairs: usize,
}

impl TheoremReport {
    pub fn merge(&mut self, o: &TheoremReport) {
        self.subclass_pairs += o.subclass_pairs;
        self.subset_violations += o.subset_violations;
        self.answer_subset_divergences += o.answer_subset_divergences;
        self.relevant_pairs += o.relevant_pairs;
        self.relevance_violations += o.relevance_violations;
        self.pairwise_divergences += o.pairwise_divergences;
        self.answer_pairs += o.answer_pairs;
    }
}

fn slot_elements(s: &SentenceSyntax, slot: Slot) -> Vec<&Element> {
    match slot {
        Slot::Subject => s.subject.iter().collect(),
        Slot::Action => s.action.iter().collect(),
        Slot::DirectObject => s.object.iter().map(|o| &o.direct).collect(),
        Slot::IndirectObject => s.object.iter().filter_map(|o| o.indirect.as_ref()).collect(),
        Slot::ObjectComplement => s.object.iter().filter_map(|o| o.complement.as_ref()).collect(),
        Slot::Adverbial(k) => s.adverbials.iter().filter(|a| a.kind == k).map(|a| &a.content).collect(),
    }
}

/// Check both theorems for one ordered question pair on one space.
pub fn check_pair(space: &ResourceSpace, q1: &QuestionSyntax, q2: &QuestionSyntax, k: usize) -> TheoremReport {
    let edges = &space.harvested;
    let syn = SynonymTable::empty_ref();
    let s = Subsumer::new(edges, syn);
    let mut r = TheoremReport::default();
    let answers = |q: &QuestionSyntax| -> Vec<&SentenceSyntax> {
        answer_question(space, q, k, syn).into_iter().filter_map(|a| space.parts(Posting::new(a.sentence_id, a.judgment.part))).collect()
    };

    if question_subclass(q1, q2, edges) {
        r.subclass_pairs = 1;
        if !candidate_sentences(space, q1, syn).is_subset(&candidate_sentences(space, q2, syn)) {
            r.subset_violations = 1;
        }
        let a1: BTreeSet<SentenceId> = answer_question(space, q1, usize::MAX, syn).into_iter().map(|a| a.sentence_id).collect();
        let a2: BTreeSet<SentenceId> = answer_question(space, q2, usize::MAX, syn).into_iter().map(|a| a.sentence_id).collect();
        if !a1.is_subset(&a2) {
            r.answer_subset_divergences = 1;
        }
    }

    if question_relevant(q1, q2, edges) {
        r.relevant_pairs = 1;
        let (t1, t2) = (q1.as_sentence(), q2.as_sentence());
        let slots = relevant_slots(&t1, &t2, edges);
        let (p1, p2) = (answers(q1), answers(q2));
        for s1 in &p1 {
            for s2 in &p2 {
                r.answer_pairs += 1;
                // some shared slot where both answers sit below the upper
                // question element
                let ok = slots.iter().any(|&slot| {
                    let (x, y) = (slot_elements(&t1, slot), slot_elements(&t2, slot));
                    let uppers: Vec<&Element> = x.iter().chain(&y).copied().collect();
                    uppers.iter().any(|u| {
                        slot_elements(s1, slot).iter().any(|e| s.element(e, u).holds()) && slot_elements(s2, slot).iter().any(|e| s.element(e, u).holds())
                    })
                });
                if !ok {
                    r.relevance_violations += 1;
                }
                if relevant_slots(s1, s2, edges).is_empty() {
                    r.pairwise_divergences += 1;
                }
            }
        }
    }
    r
}
