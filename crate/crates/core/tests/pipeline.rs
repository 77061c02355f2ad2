use syntaxspace::corpus::{load_pretagged, RuleTagger};
use syntaxspace::fixtures::{short_input_text, DEFINITION_INPUT, SHORT_QUESTION};
use syntaxspace::qa::{answer, format_answers};
use syntaxspace::*;

fn fixture(name: &str) -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

#[test]
fn pretagged_corpus_builds_and_answers() {
    let mut c = Corpus::new();
    c.add_pretagged(load_pretagged(&fixture("two_sentences.tsv")).unwrap());
    let space = ResourceSpace::build(&c).unwrap();
    let a = answer(&space, "What encourages the researcher?", 5, SynonymTable::empty_ref()).unwrap();
    assert_eq!(a.iter().map(|a| a.sentence_id).collect::<Vec<_>>(), vec![2]);
    let a = answer(&space, "Where does the experiment show good results?", 5, SynonymTable::empty_ref()).unwrap();
    assert!(a.is_empty(), "the place adverbial sits inside the subject clause");
}

#[test]
fn snapshot_files_round_trip() {
    let mut c = Corpus::new();
    c.add_document("short", &short_input_text(), &RuleTagger::default());
    let space = ResourceSpace::build(&c).unwrap();
    let path = std::env::temp_dir().join(format!("syntaxspace-pipeline-{}.snap", std::process::id()));
    space.save(&path).unwrap();
    let back = ResourceSpace::load(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let run = |s: &ResourceSpace| format_answers(s, &answer(s, SHORT_QUESTION, 5, SynonymTable::empty_ref()).unwrap(), true);
    assert_eq!(run(&space), run(&back));
}

#[test]
fn definition_answers_rank_the_copula_sentence() {
    let mut c = Corpus::new();
    c.add_document("def", &DEFINITION_INPUT.join(" "), &RuleTagger::default());
    let space = ResourceSpace::build(&c).unwrap();
    let a = answer(&space, "What is text summarization?", 5, SynonymTable::empty_ref()).unwrap();
    assert_eq!(a[0].sentence_id, 1);
    assert!(answer(&space, "Who evaluates summaries?", 5, SynonymTable::empty_ref()).unwrap().iter().any(|a| a.sentence_id == 2));
}
