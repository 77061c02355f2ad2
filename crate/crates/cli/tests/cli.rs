use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use syntaxspace::fixtures::{short_input_text, DEFINITION_INPUT, SHORT_QUESTION};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_syntaxspace"));
    c.env_remove("SYNTAXSPACE_CONFIG");
    c
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin().args(args).current_dir(dir).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn ok(args: &[&str], dir: &Path) -> String {
    let o = run(args, dir);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn core_fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name)
}

/// Ingest and build `text`; returns the space path.
fn build(dir: &Path, text: &str) -> String {
    std::fs::write(dir.join("input.txt"), text).unwrap();
    ok(&["ingest", "input.txt", "-o", "corpus.snap"], dir);
    ok(&["build", "corpus.snap", "-o", "space.snap"], dir);
    "space.snap".into()
}

#[test]
fn short_input_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let space = build(dir.path(), &short_input_text());
    let out = ok(&["query", &space, SHORT_QUESTION], dir.path());
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1, "{out}");
    assert!(lines[0].starts_with("1\t1\tinput\t"), "{out}");

    let explained = ok(&["query", &space, SHORT_QUESTION, "--explain"], dir.path());
    assert!(explained.contains("\tadverbial:method\tGapFilled"), "{explained}");

    let stats = ok(&["stats", &space], dir.path());
    assert!(stats.contains("subject\tlexrank ⊑ unsupervised algorithm"), "{stats}");
    assert!(stats.contains("subspace\t1NF\t2NF\t3NF"), "{stats}");

    let edges = ok(&["dump-edges", &space], dir.path());
    assert!(edges.starts_with("lexrank\tunsupervised algorithm\tsubject"), "{edges}");

    let base = ok(&["eval", "baselines", &space, SHORT_QUESTION, "-k", "1"], dir.path());
    assert!(base.contains("common-words\t1\t3\t") && base.contains("gst\t1\t4\t"), "{base}");
}

#[test]
fn definition_question() {
    let dir = tempfile::tempdir().unwrap();
    let space = build(dir.path(), &DEFINITION_INPUT.join(" "));
    let out = ok(&["query", &space, "What is text summarization?"], dir.path());
    assert!(out.starts_with("1\t1\t"), "{out}");
}

#[test]
fn empty_corpus_builds_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("empty.txt"), "").unwrap();
    ok(&["ingest", "empty.txt", "-o", "corpus.snap"], dir.path());
    let o = run(&["build", "corpus.snap", "-o", "space.snap"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("empty corpus"), "{}", stderr(&o));
    let stats = ok(&["stats", "space.snap"], dir.path());
    assert!(stats.contains("subject\t0\t0"), "{stats}");
    assert_eq!(ok(&["query", "space.snap", "What is it?"], dir.path()), "");
}

#[test]
fn builds_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    build(dir.path(), &short_input_text());
    ok(&["build", "corpus.snap", "-o", "again.snap"], dir.path());
    let a = std::fs::read(dir.path().join("space.snap")).unwrap();
    let b = std::fs::read(dir.path().join("again.snap")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(run(&["stats", "missing.snap"], p).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], p).status.code(), Some(1));
    assert_eq!(run(&["query"], p).status.code(), Some(1));
    assert_eq!(run(&["--help"], p).status.code(), Some(0));
    build(p, &short_input_text());
    assert_eq!(run(&["query", "space.snap", SHORT_QUESTION, "-k", "0"], p).status.code(), Some(1));
    let o = run(&["query", "space.snap", "LexRank builds an extract."], p);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a question"), "{}", stderr(&o));
    std::fs::write(p.join("garbage.snap"), "not a snapshot").unwrap();
    assert_eq!(run(&["query", "garbage.snap", SHORT_QUESTION], p).status.code(), Some(2));
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    build(p, &(short_input_text() + " Supervised algorithm builds an extract by ranking sentences."));
    let q = "What builds an extract?";
    assert_eq!(ok(&["query", "space.snap", q], p).lines().count(), 3);

    std::fs::write(p.join("one.toml"), "top_k = 1\n").unwrap();
    let o = bin().args(["query", "space.snap", q]).env("SYNTAXSPACE_CONFIG", p.join("one.toml")).current_dir(p).output().unwrap();
    assert_eq!(stdout(&o).lines().count(), 1);
    // flags win over the environment
    let o = bin().args(["query", "space.snap", q, "-k", "2"]).env("SYNTAXSPACE_CONFIG", p.join("one.toml")).current_dir(p).output().unwrap();
    assert_eq!(stdout(&o).lines().count(), 2);

    std::fs::write(p.join("bad.toml"), "top_k = 0\n").unwrap();
    assert_eq!(run(&["--config", "bad.toml", "stats", "space.snap"], p).status.code(), Some(2));
}

#[test]
fn synonyms_widen_action_matches() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    build(p, "LexRank constructs an extract.");
    assert_eq!(ok(&["query", "space.snap", "What does LexRank build?"], p), "");
    std::fs::write(p.join("syn.tsv"), "build\tconstruct\n").unwrap();
    let out = ok(&["--synonyms", "syn.tsv", "query", "space.snap", "What does LexRank build?", "--explain"], p);
    assert!(out.starts_with("1\t1\t") && out.contains("\taction\tSynonym"), "{out}");
}

#[test]
fn pretagged_ingest_and_parse_dump() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let f = core_fixture("two_sentences.tsv");
    let f = f.to_str().unwrap();
    ok(&["--tagger", "pretagged", "ingest", f, f, "-o", "corpus.snap"], p);
    let corpus = std::fs::read_to_string(p.join("corpus.snap")).unwrap();
    assert!(corpus.contains("#sid 4"), "ids continue across files");
    let dump = ok(&["dump-parse", "corpus.snap"], p);
    assert!(dump.contains("Clause lead=to"), "{dump}");
    assert!(dump.contains("head=essence post=[of mathematics]"), "{dump}");
}

#[test]
fn evaluation_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let text = std::fs::read_to_string(core_fixture("synthetic.txt")).unwrap();
    build(p, &text);
    let gold = core_fixture("synthetic_gold.tsv");
    let out = ok(&["eval", "relations", "space.snap", "--gold", gold.to_str().unwrap()], p);
    let all = out.lines().find(|l| l.starts_with("all\t")).unwrap();
    assert!(all.ends_with("100.00%"), "{out}");

    build(p, &short_input_text());
    std::fs::write(p.join("qa.txt"), format!("Q: {SHORT_QUESTION}\nA: 1\n")).unwrap();
    let out = ok(&["eval", "qa", "space.snap", "--gold", "qa.txt"], p);
    assert!(out.contains("syntax-space\t100.00%"), "{out}");
    assert!(out.contains("bm25\t"), "{out}");

    std::fs::write(p.join("bad.txt"), "Q: x\nA: 99\n").unwrap();
    let o = run(&["eval", "qa", "space.snap", "--gold", "bad.txt"], p);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown sentence 99"), "{}", stderr(&o));
}
