use super::*;
use crate::corpus::{normalize_voice, tag, Lexicon};

fn sent(text: &str) -> TaggedSentence {
    normalize_voice(&tag(text, &Lexicon::bundled()))
}

fn parse(text: &str) -> SentenceSyntax {
    let s = sent(text);
    parse_sentence(&s).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn key(e: &Option<Element>) -> String {
    e.as_ref().map(Element::key).unwrap_or_default()
}

#[test]
fn infinitive_subject_clause() {
    let s = parse("To solve complex problems is the essence of mathematics.");
    let subj = s.subject.as_ref().and_then(Element::as_clause).expect("clausal subject");
    assert_eq!(subj.lead.as_deref(), Some("to"));
    assert_eq!(subj.action.as_ref().unwrap().head, "solve");
    let obj = subj.object.as_ref().unwrap().as_phrase().unwrap();
    assert_eq!((obj.pre.clone(), obj.head.as_str()), (vec!["complex".to_string()], "problem"));
    assert_eq!(key(&s.action), "be");
    let o = s.object.as_ref().unwrap().direct.as_phrase().unwrap();
    assert_eq!(o.head, "essence");
    assert_eq!(o.post, vec!["of", "mathematics"]);
    assert!(s.adverbials.is_empty());
}

#[test]
fn subject_clause_without_lead() {
    let s = parse("The experiment shows good results in China encourages the researcher.");
    let subj = s.subject.as_ref().and_then(Element::as_clause).expect("clausal subject");
    assert_eq!(subj.lead, None);
    assert_eq!(subj.subject.as_ref().unwrap().key(), "experiment");
    assert_eq!(subj.action.as_ref().unwrap().key(), "show");
    assert_eq!(subj.object.as_ref().unwrap().key(), "good result");
    assert_eq!(subj.adverbials.len(), 1);
    assert_eq!(subj.adverbials[0].key(), "place:in china");
    assert_eq!(key(&s.action), "encourage");
    assert_eq!(s.object.as_ref().unwrap().key(), "researcher");
}

#[test]
fn short_input_sentences() {
    let s1 = parse("LexRank builds an extract by selecting top ranked sentences.");
    assert_eq!(key(&s1.subject), "lexrank");
    assert_eq!(key(&s1.action), "build");
    assert_eq!(s1.object.as_ref().unwrap().key(), "extract");
    assert_eq!(s1.adverbials.len(), 1);
    assert_eq!(s1.adverbials[0].kind, AdverbialKind::Method);

    let s2 = parse("LexRank is an unsupervised algorithm due to no training data is required.");
    assert_eq!(key(&s2.action), "be");
    assert_eq!(s2.object.as_ref().unwrap().key(), "unsupervised algorithm");
    assert_eq!(s2.adverbials[0].kind, AdverbialKind::Reason);

    let s3 = parse("The results show that the extract can be built well by unsupervised algorithm.");
    assert_eq!(key(&s3.action), "show");
    let c = s3.object.as_ref().unwrap().direct.as_clause().expect("that-clause object");
    assert_eq!(c.lead.as_deref(), Some("that"));

    let s4 = parse("Supervised algorithm builds an extract by classifying sentences.");
    assert_eq!(key(&s4.subject), "supervised algorithm");
    assert_eq!(s4.adverbials[0].kind, AdverbialKind::Method);
}

#[test]
fn leading_adverbials_and_time() {
    let s = parse("In 1911, Marie Curie won the Nobel Prize in chemistry again.");
    assert_eq!(key(&s.subject), "marie curie");
    assert_eq!(key(&s.action), "win");
    let kinds: Vec<_> = s.adverbials.iter().map(|a| a.kind).collect();
    assert!(kinds.contains(&AdverbialKind::Time), "{kinds:?}");
    assert_eq!(s.adverbials.iter().filter(|a| a.kind == AdverbialKind::Time).count(), 2);
}

#[test]
fn subject_region_keeps_prepositional_modifiers() {
    let s = parse("The database in master service stores metadata of the web pages in master-slave search engine.");
    assert_eq!(key(&s.subject), "database in master service");
    assert_eq!(s.object.as_ref().unwrap().key(), "metadata of web page");
    assert_eq!(s.adverbials.len(), 1);
    assert_eq!(s.adverbials[0].kind, AdverbialKind::Place);
}

#[test]
fn passive_sentence_becomes_active() {
    let s = parse("The extract can be built well by LexRank.");
    assert_eq!(key(&s.subject), "lexrank");
    assert_eq!(s.object.as_ref().unwrap().key(), "extract");
    let keys: Vec<String> = s.action.iter().map(Element::key).chain(s.adverbials.iter().map(Adverbial::key)).collect();
    assert!(keys.iter().any(|k| k.contains("well")), "{keys:?}");
}

#[test]
fn object_groups() {
    let s = parse("The school awarded Mike a scholarship.");
    let o = s.object.unwrap();
    assert_eq!(o.direct.key(), "scholarship");
    assert_eq!(o.indirect.unwrap().key(), "mike");
    assert_eq!(o.indirect_position, IndirectPosition::BeforeDirect);

    let s = parse("The teacher gave a book to the student.");
    let o = s.object.unwrap();
    assert_eq!(o.direct.key(), "book");
    assert_eq!(o.indirect.unwrap().key(), "student");
    assert_eq!(o.indirect_position, IndirectPosition::AfterPreposition);

    let s = parse("They call the method a ranking algorithm.");
    let o = s.object.unwrap();
    assert_eq!(o.direct.key(), "method");
    assert_eq!(o.complement.unwrap().key(), "ranking algorithm");

    let s = parse("The graph makes the ranking stable.");
    let o = s.object.unwrap();
    assert_eq!(o.direct.key(), "ranking");
    assert_eq!(o.complement.unwrap().key(), "adj:stable");
}

#[test]
fn negation_sets_polarity() {
    let s = parse("The algorithm does not need training data.");
    assert_eq!(s.polarity, Polarity::Negative);
    assert_eq!(key(&s.action), "not need");
}

#[test]
fn coordination_splits_into_parts() {
    let s = sent("LexRank builds an extract, and supervised algorithm classifies sentences.");
    let parts = parse_sentence_parts(&s).unwrap();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[0].part, 0);
    assert_eq!(parts[1].part, 1);
    assert_eq!(key(&parts[1].subject), "supervised algorithm");
    assert_eq!(key(&parts[1].action), "classify");
}

#[test]
fn every_token_is_accounted_for() {
    for text in [
        "LexRank builds an extract by selecting top ranked sentences.",
        "The experiment shows good results in China encourages the researcher.",
        "In 1911, Marie Curie won the Nobel Prize in chemistry again.",
        "Text summarization (TS) is the process of selecting the most salient information in one or more textual documents.",
    ] {
        let s = sent(text);
        let p = parse_sentence(&s).unwrap();
        let mut covered = vec![false; s.tokens.len()];
        for r in p.constituent_spans() {
            r.for_each(|k| covered[k] = true);
        }
        p.unparsed.iter().for_each(|&k| covered[k] = true);
        let missing: Vec<_> = covered.iter().enumerate().filter(|(_, c)| !**c).map(|(k, _)| &s.tokens[k].surface).collect();
        assert!(missing.is_empty(), "{text}: {missing:?}\n{}", dump_syntax(&p));
    }
}

#[test]
fn errors() {
    assert_eq!(parse_sentence(&sent("The big house.")).unwrap_err(), ParseError::NoFiniteVerb);
    assert_eq!(parse_action(&[]).unwrap_err(), ParseError::Empty);
    let t = sent("can be built well");
    assert_eq!(parse_action(&t.tokens).unwrap().key(), "can build well");
    let t = sent("in China");
    assert_eq!(classify_adverbial(&t.tokens).unwrap().key(), "place:in china");
}

#[test]
fn dump_shows_clause_tree() {
    let d = dump_syntax(&parse("To solve complex problems is the essence of mathematics."));
    assert!(d.contains("Clause lead=to"), "{d}");
    assert!(d.contains("head=essence post=[of mathematics]"), "{d}");
}

#[test]
fn fragments() {
    let f = |t: &str| parse_fragment(&tag(t, &Lexicon::bundled()).tokens).unwrap().key();
    assert_eq!(f("what graph-based unsupervised algorithm can do"), "<what|graph-based unsupervised algorithm|can do|-|->");
    assert_eq!(f("automatically using graph-based unsupervised algorithm"), "<-|-|automatically use|graph-based unsupervised algorithm|->");
    assert_eq!(f("based on LexRank"), "based on lexrank");
    assert_eq!(f("through graph-based algorithm"), "through graph-based algorithm");
    assert_eq!(f("graph-based unsupervised algorithm"), "graph-based unsupervised algorithm");
    assert_eq!(f("to solve complex problems"), "<to|-|solve|complex problem|->");
}
