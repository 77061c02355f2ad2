use super::*;
use crate::fixtures::{short_input_text, SHORT_QUESTION};
use crate::synth;
use crate::Corpus;
use approx::assert_relative_eq;
use proptest::prelude::*;

fn triple(c: &str, p: &str) -> (String, String, String) {
    (c.into(), p.into(), "subject".into())
}

#[test]
fn closure_against_chain_gold() {
    let gold = GoldRelations::from_tsv("a\tb\tsubject\nb\tc\tsubject\n").unwrap();
    let pred: BTreeSet<_> = [triple("a", "b"), triple("b", "c"), triple("a", "c")].into();
    let r = relation_prf(&gold, &pred);
    assert_relative_eq!(r.precision.unwrap(), 2.0 / 3.0);
    assert_relative_eq!(r.recall.unwrap(), 1.0);
    assert_relative_eq!(r.f1, 0.8);
}

#[test]
fn degenerate_sets() {
    let none: BTreeSet<(String, String, String)> = BTreeSet::new();
    let some: BTreeSet<_> = [triple("a", "b")].into();
    let r = prf(&none, &some);
    assert!(r.empty_gold());
    assert_eq!(r.precision, Some(0.0));
    assert_eq!(r.f1, 0.0);
    let r = prf(&some, &none);
    assert_eq!(r.precision, None);
    assert_eq!(r.recall, Some(0.0));
    assert!(format_relation_report(&[], &r).contains("undefined"));
}

#[test]
fn micro_averaged_precision() {
    let gold = GoldAnswers::parse("Q: q1\nA: 1\nA: 2\nA: 3\nQ: q2\nA: 9\n").unwrap();
    let returned: BTreeMap<String, Vec<SentenceId>> = [("q1".to_string(), vec![1, 2, 3, 4]), ("q2".to_string(), vec![9, 8])].into();
    assert_relative_eq!(qa_precision(&gold, &returned).unwrap(), 4.0 / 6.0);
    assert_eq!(qa_precision(&gold, &BTreeMap::new()), None);
}

#[test]
fn gold_files_are_validated() {
    assert!(matches!(GoldRelations::from_tsv("a\tb\n"), Err(EvalError::Malformed(1, _))));
    assert!(matches!(GoldAnswers::parse("A: 1\n"), Err(EvalError::Malformed(1, _))));
    assert!(matches!(GoldAnswers::parse("Q: x\nA: one\n"), Err(EvalError::Malformed(2, _))));
    assert!(matches!(GoldAnswers::parse("Q: x\nfoo\n"), Err(EvalError::Malformed(2, _))));
    let g = GoldAnswers::parse("# c\nQ: x\nA: 7\n").unwrap();
    assert!(matches!(g.validate(&[1, 2].into()), Err(EvalError::UnknownSentence(7))));
    assert!(g.validate(&[7].into()).is_ok());
}

fn short_space() -> ResourceSpace {
    let mut c = Corpus::new();
    c.add_document("doc", &short_input_text(), &RuleTagger::default());
    ResourceSpace::build(&c).unwrap()
}

#[test]
fn baselines_on_short_input() {
    let space = short_space();
    let table = baseline_table(&space, SHORT_QUESTION, &BaselineParams::default());
    for (m, ranks) in table {
        let want = if matches!(m, Method::Gst | Method::Lcs) { 4 } else { 3 };
        assert_eq!(ranks[0].0, want, "{m}: {ranks:?}");
    }
}

#[test]
fn syntax_system_on_short_input() {
    let space = short_space();
    let gold = GoldAnswers::parse(&format!("Q: {SHORT_QUESTION}\nA: 1\n")).unwrap();
    let rows = qa_report(&space, &gold, 5, SynonymTable::empty_ref(), &BaselineParams::default());
    assert_eq!(rows[0], ("syntax-space".to_string(), Some(1.0)));
    assert!(rows[1..].iter().all(|(_, p)| p.unwrap() < 1.0));
    assert!(format_qa_report(&rows).starts_with("system\tprecision\nsyntax-space\t100.00%"));
}

#[test]
fn synthetic_relations_are_recovered() {
    let g = synth::corpus(7, 40, 2);
    let mut c = Corpus::new();
    c.add_document("synth", &g.text(), &RuleTagger::default());
    let space = ResourceSpace::build(&c).unwrap();
    let gold = GoldRelations::from_tsv(&g.gold_tsv()).unwrap();
    let (_, total) = relation_report(&gold, &space);
    assert!(total.f1 >= 0.95, "{total:?}");
}

fn shuffled<T: Clone>(v: &[T], seed: u64) -> Vec<T> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut v = v.to_vec();
    v.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    v
}

proptest! {
    #[test]
    fn scores_do_not_depend_on_sentence_order(seed in 0u64..1000) {
        let words = ["graph", "rank", "model", "word", "select", "weight", "learn"];
        let sents: Vec<(SentenceId, Vec<String>)> = (1..=6)
            .map(|i| (i, (0..(i as usize % 4 + 2)).map(|j| words[(j * 3 + i as usize + seed as usize) % words.len()].to_string()).collect()))
            .collect();
        let q: Vec<String> = vec!["model".into(), "select".into(), "word".into()];
        for m in Method::ALL {
            let a = baseline_rank(m, &q, &sents, &BaselineParams::default());
            let b = baseline_rank(m, &q, &shuffled(&sents, seed), &BaselineParams::default());
            prop_assert_eq!(a.len(), b.len());
            for (x, y) in a.iter().zip(&b) {
                prop_assert_eq!(x.0, y.0);
                prop_assert!((x.1 - y.1).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn metrics_are_bounded(g in proptest::collection::btree_set(0u8..20, 0..10), p in proptest::collection::btree_set(0u8..20, 0..10)) {
        let r = prf(&g, &p);
        for v in [r.precision, r.recall].into_iter().flatten().chain([r.f1]) {
            prop_assert!((0.0..=1.0).contains(&v));
        }
        if g == p && !g.is_empty() {
            prop_assert_eq!(r.f1, 1.0);
        }
    }
}
