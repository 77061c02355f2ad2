use super::*;
use crate::corpus::{Corpus, RuleTagger};
use crate::fixtures;
use crate::syntax::parse_sentence;

fn q(text: &str) -> QuestionSyntax {
    parse_question(&RuleTagger::default().tag_sentence(text, 0, "q")).unwrap()
}

fn key(e: &Option<Element>) -> String {
    e.as_ref().map_or("-".into(), |e| e.key())
}

fn space_of(sentences: &[&str]) -> ResourceSpace {
    let mut c = Corpus::new();
    c.add_document("doc", &sentences.join(" "), &RuleTagger::default());
    ResourceSpace::build(&c).unwrap()
}

#[test]
fn question_kinds() {
    let a = q("In search engine, what database stores the metadata?");
    assert_eq!(a.kind, QuestionKind::AboutSubject);
    assert_eq!((key(&a.subject), key(&a.action), a.object.as_ref().unwrap().direct.key()), ("database".into(), "store".into(), "metadata".into()));
    assert_eq!(a.adverbials.iter().map(Adverbial::key).collect::<Vec<_>>(), vec!["place:in search engine"]);
    assert_eq!(a.interrogative, "what");

    let b = q("in unsupervised algorithm, which node does the network send the weight to?");
    assert_eq!(b.kind, QuestionKind::AboutIndirectObject);
    assert_eq!(b.object.as_ref().unwrap().indirect.as_ref().unwrap().key(), "node");
    assert_eq!(b.gap_element().unwrap().key(), "node");

    let c = q("When did Marie Curie win the Nobel Prize again?");
    assert_eq!(c.kind, QuestionKind::AboutAdverbial(WhAdverb::When));
    assert_eq!(c.adverbials.iter().map(|a| a.content.display()).collect::<Vec<_>>(), vec!["again"]);
    assert_eq!(key(&c.action), "win");

    let d = q("What is text summarization?");
    assert_eq!(d.kind, QuestionKind::AboutDirectObject);
    assert_eq!((key(&d.subject), key(&d.action)), ("text summarization".into(), "be".into()));
    assert!(is_gap(&d.object.as_ref().unwrap().direct));

    let e = q(fixtures::SHORT_QUESTION);
    assert_eq!(e.kind, QuestionKind::AboutAdverbial(WhAdverb::How));
    assert_eq!((key(&e.subject), key(&e.action), e.object.as_ref().unwrap().direct.key()), ("unsupervised algorithm".into(), "build".into(), "extract".into()));

    let g = q("Does LexRank build an extract?");
    assert_eq!((g.kind, g.interrogative.as_str()), (QuestionKind::General, "do"));
    assert_eq!(key(&g.subject), "lexrank");

    assert_eq!(q("what algorithm needs labelled data").kind, QuestionKind::AboutSubject);
    assert_eq!(q("Who won the prize?").kind, QuestionKind::AboutSubject);
    assert_eq!(q("What does graph-based unsupervised algorithm select?").kind, QuestionKind::AboutDirectObject);
}

#[test]
fn non_questions_are_rejected() {
    for t in ["hello there", "LexRank builds an extract.", "", "Does?"] {
        let s = RuleTagger::default().tag_sentence(t, 0, "q");
        assert!(matches!(parse_question(&s), Err(QaError::NotAQuestion(_))), "{t}");
    }
}

#[test]
fn short_input_question_selects_first_sentence() {
    let space = space_of(&fixtures::SHORT_INPUT);
    let question = q(fixtures::SHORT_QUESTION);
    assert_eq!(candidate_sentences(&space, &question, SynonymTable::empty_ref()).into_iter().collect::<Vec<_>>(), vec![1]);
    let got = answer(&space, fixtures::SHORT_QUESTION, 5, SynonymTable::empty_ref()).unwrap();
    assert_eq!(got.iter().map(|a| a.sentence_id).collect::<Vec<_>>(), vec![1]);
    let j = &got[0].judgment;
    assert_eq!(j.outcome(Slot::Subject), Some(Outcome::Subclass));
    assert_eq!(j.outcome(Slot::Adverbial(AdverbialKind::Method)), Some(Outcome::GapFilled));
    let text = format_answers(&space, &got, true);
    assert!(text.starts_with("1\t1\tdoc\t"), "{text}");
    assert!(text.contains("\tsubject\tSubclass"));
}

#[test]
fn unmatched_subject_gives_nothing() {
    let space = space_of(&fixtures::SHORT_INPUT);
    assert!(answer(&space, "How does neural network build an extract?", 5, SynonymTable::empty_ref()).unwrap().is_empty());
}

#[test]
fn definition_question() {
    let space = space_of(&fixtures::DEFINITION_INPUT);
    let got = answer(&space, "What is text summarization?", 5, SynonymTable::empty_ref()).unwrap();
    assert_eq!(got.iter().map(|a| a.sentence_id).collect::<Vec<_>>(), vec![1]);
    assert_eq!(got[0].judgment.outcome(Slot::DirectObject), Some(Outcome::GapFilled));
}

#[test]
fn subclass_answer_is_accepted() {
    let s = parse_sentence(&RuleTagger::default().tag_sentence("Database in master service stores metadata of the web pages in master-slave search engine.", 1, "d")).unwrap();
    let question = q("In search engine, what database stores the metadata?");
    let j = match_answer(&question, &s, &HarvestedEdges::empty(), SynonymTable::empty_ref());
    assert!(j.accepted, "{j:?}");
    assert_eq!(j.outcome(Slot::Subject), Some(Outcome::GapFilled));
    assert_eq!(j.outcome(Slot::Action), Some(Outcome::Same));
    assert_eq!(j.outcome(Slot::DirectObject), Some(Outcome::Subclass));
    assert_eq!(j.outcome(Slot::Adverbial(AdverbialKind::Place)), Some(Outcome::Subclass));
}

#[test]
fn polarity_mismatch_is_a_penalty() {
    let s = parse_sentence(&RuleTagger::default().tag_sentence("Unsupervised algorithm does not need the labelled data.", 1, "d")).unwrap();
    let j = match_answer(&q("what algorithm needs labelled data"), &s, &HarvestedEdges::empty(), SynonymTable::empty_ref());
    assert!(j.accepted);
    assert_eq!(j.consistency_penalty, 1);
}

#[test]
fn missing_time_adverbial_rejects() {
    let s = parse_sentence(&RuleTagger::default().tag_sentence("Marie Curie won the Nobel Prize again.", 1, "d")).unwrap();
    let j = match_answer(&q("When did Marie Curie win the Nobel Prize again?"), &s, &HarvestedEdges::empty(), SynonymTable::empty_ref());
    assert!(!j.accepted);
    let s = parse_sentence(&RuleTagger::default().tag_sentence("Marie Curie won the Nobel Prize again in 1911.", 1, "d")).unwrap();
    let j = match_answer(&q("When did Marie Curie win the Nobel Prize again?"), &s, &HarvestedEdges::empty(), SynonymTable::empty_ref());
    assert!(j.accepted, "{j:?}");
}

#[test]
fn synonyms_apply_to_actions() {
    let mut syn = SynonymTable::new();
    syn.insert("build", "produce");
    let space = space_of(&["LexRank produces an extract by selecting sentences."]);
    let got = answer(&space, "What builds an extract?", 5, &syn).unwrap();
    assert_eq!(got.len(), 1);
    assert_eq!(got[0].judgment.outcome(Slot::Action), Some(Outcome::Synonym));
    assert!(answer(&space, "What builds an extract?", 5, SynonymTable::empty_ref()).unwrap().is_empty());
}

#[test]
fn question_order_relations() {
    let e = HarvestedEdges::empty();
    let a = q("what does graph-based unsupervised algorithm select");
    let b = q("what does unsupervised algorithm select");
    let c = q("how does unsupervised algorithm select sentences");
    assert!(question_subclass(&a, &b, &e));
    assert!(!question_subclass(&b, &a, &e));
    assert!(!question_subclass(&a, &a, &e));
    assert!(!question_subclass(&a, &c, &e));
    assert!(question_relevant(&a, &b, &e) && question_relevant(&a, &a, &e));
    assert!(!question_relevant(&a, &q("Who won the prize?"), &e));
}

#[test]
fn sentence_relevance() {
    let e = HarvestedEdges::empty();
    let t = |s: &str| parse_sentence(&RuleTagger::default().tag_sentence(s, 1, "d")).unwrap();
    let s1 = t("In China, researchers of ICT have published many papers about neural networks.");
    let s2 = t("Researchers have published many papers.");
    assert!(sentence_relevant(&s1, &s2, &e) && sentence_relevant(&s1, &s1, &e));
    assert!(!sentence_relevant(&s1, &t("The cat sleeps."), &e));
}

#[test]
fn theorem_checks_on_generated_corpora() {
    let mut total = theorems::TheoremReport::default();
    for seed in 0..12 {
        let c = crate::synth::corpus(seed, 25, 3);
        let mut corpus = Corpus::new();
        corpus.add_document("g", &c.text(), &RuleTagger::default());
        let space = ResourceSpace::build(&corpus).unwrap();
        for pair in crate::synth::question_pairs(&c, seed, 20) {
            let (Ok(a), Ok(b)) = (
                parse_question(&RuleTagger::default().tag_sentence(&pair.specific, 0, "q")),
                parse_question(&RuleTagger::default().tag_sentence(&pair.general, 0, "q")),
            ) else {
                panic!("unparsed question pair {pair:?}");
            };
            total.merge(&theorems::check_pair(&space, &a, &b, 5));
        }
    }
    assert!(total.subclass_pairs > 100, "{total:?}");
    assert_eq!(total.subset_violations, 0, "{total:?}");
    assert_eq!(total.relevance_violations, 0, "{total:?}");
    eprintln!("{total:?}");
}
