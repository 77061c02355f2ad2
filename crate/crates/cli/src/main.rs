//! `syntaxspace`: ingest → build → inspect → query → evaluate.

mod config;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use log::warn;

use syntaxspace::corpus::{parse_pretagged, RuleTagger};
use syntaxspace::eval::{self, GoldAnswers, GoldRelations, System};
use syntaxspace::qa::{answer_with, format_answers};
use syntaxspace::space::{check_normal_forms, coverage};
use syntaxspace::syntax::{dump_syntax, parse_sentence_parts};
use syntaxspace::{Corpus, ResourceSpace, SynonymTable};

use config::{Config, TaggerKind};

#[derive(Debug, Parser)]
#[command(name = "syntaxspace", version, about = "Build and query syntax-driven resource spaces")]
struct Cli {
    /// TOML config file.
    #[arg(long, global = true, env = "SYNTAXSPACE_CONFIG")]
    config: Option<PathBuf>,
    /// Overrides the config's tagger.
    #[arg(long, global = true, value_enum)]
    tagger: Option<TaggerKind>,
    /// Tab-separated synonym pairs used when comparing actions.
    #[arg(long, global = true)]
    synonyms: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tag raw text (or read pre-tagged files) into a corpus snapshot.
    Ingest {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Parse a corpus snapshot and build the space.
    Build {
        corpus: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Node/edge counts, coverage and normal forms.
    Stats { space: PathBuf },
    /// Answer a question against a space.
    Query {
        space: PathBuf,
        question: String,
        #[arg(short = 'k', long, value_parser = clap::value_parser!(u64).range(1..))]
        top_k: Option<u64>,
        /// Show per-slot match outcomes.
        #[arg(long)]
        explain: bool,
    },
    /// Stored subclass edges of every dimension.
    DumpEdges { space: PathBuf },
    /// Parse trees of every sentence in a corpus snapshot.
    DumpParse { corpus: PathBuf },
    /// Evaluate against gold files.
    #[command(subcommand)]
    Eval(EvalCommand),
}

#[derive(Debug, Subcommand)]
enum EvalCommand {
    /// Relation precision/recall/F1 against `child<TAB>parent<TAB>dimension` gold.
    Relations {
        space: PathBuf,
        #[arg(long)]
        gold: PathBuf,
    },
    /// Answer precision of the system and each baseline on `Q:`/`A:` gold.
    Qa {
        space: PathBuf,
        #[arg(long)]
        gold: PathBuf,
        #[arg(short = 'k', long, value_parser = clap::value_parser!(u64).range(1..))]
        top_k: Option<u64>,
    },
    /// Top-ranked sentences of every lexical baseline for one question.
    Baselines {
        space: PathBuf,
        question: String,
        #[arg(short = 'k', long, value_parser = clap::value_parser!(u64).range(1..))]
        top_k: Option<u64>,
    },
}

fn write_out(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_space(path: &Path) -> anyhow::Result<ResourceSpace> {
    ResourceSpace::from_snapshot(&read(path)?).with_context(|| format!("loading space {}", path.display()))
}

fn load_corpus(path: &Path) -> anyhow::Result<Corpus> {
    let sentences = parse_pretagged(&read(path)?).with_context(|| format!("loading corpus {}", path.display()))?;
    Ok(Corpus::from_sentences(sentences))
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| "doc".into(), |s| s.to_string_lossy().into_owned())
}

fn ingest(cfg: &Config, paths: &[PathBuf]) -> anyhow::Result<Corpus> {
    let tagger = RuleTagger::default();
    let mut corpus = Corpus::new();
    for path in paths {
        let text = read(path)?;
        match cfg.tagger {
            TaggerKind::Builtin => {
                corpus.add_document(&stem(path), &text, &tagger);
            }
            TaggerKind::Pretagged => {
                let mut sentences = parse_pretagged(&text).with_context(|| format!("reading pre-tagged {}", path.display()))?;
                // ids restart per file; renumber after what is already there
                let first = corpus.next_id();
                for (s, id) in sentences.iter_mut().zip(first..) {
                    s.sentence_id = id;
                    if s.doc_id == "doc0" {
                        s.doc_id = stem(path);
                    }
                }
                corpus.add_pretagged(sentences);
            }
        }
    }
    Ok(corpus)
}

fn stats(space: &ResourceSpace) -> String {
    let mut out = space.stats();
    out.push('\n');
    for d in &space.dimensions {
        for e in &d.edges {
            let _ = writeln!(out, "{}\t{} ⊑ {}", d.name, e.child, e.parent);
        }
    }
    out.push('\n');
    out.push_str(&coverage(space).to_table());
    out.push('\n');
    out.push_str(&check_normal_forms(space).to_table());
    out
}

fn dump_parse(corpus: &Corpus) -> String {
    let mut out = String::new();
    for s in &corpus.sentences {
        match parse_sentence_parts(s) {
            Ok(parts) => parts.iter().for_each(|p| out.push_str(&dump_syntax(p))),
            Err(e) => {
                let _ = writeln!(out, "S{}\terror: {e}", s.sentence_id);
            }
        }
    }
    out
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let mut cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(t) = cli.tagger {
        cfg.tagger = t;
    }
    if let Some(p) = cli.synonyms {
        cfg.synonym_path = Some(p);
    }
    let synonyms = match &cfg.synonym_path {
        Some(p) => SynonymTable::load(p).with_context(|| format!("loading synonyms {}", p.display()))?,
        None => SynonymTable::new(),
    };
    let k = |flag: Option<u64>| flag.map_or(cfg.top_k, |k| k as usize);
    let tagger = RuleTagger::default();

    match cli.command {
        Command::Ingest { paths, output } => {
            let corpus = ingest(&cfg, &paths)?;
            if corpus.is_empty() {
                warn!("no sentences found in the input");
            }
            write_out(&output, &corpus.to_tsv())?;
            eprintln!("ingested {} sentences", corpus.len());
        }
        Command::Build { corpus, output } => {
            let corpus = load_corpus(&corpus)?;
            if corpus.is_empty() {
                warn!("empty corpus; writing an empty space");
            }
            let space = ResourceSpace::build(&corpus).context("building the space")?;
            write_out(&output, &space.to_snapshot())?;
        }
        Command::Stats { space } => print!("{}", stats(&load_space(&space)?)),
        Command::Query { space, question, top_k, explain } => {
            let space = load_space(&space)?;
            let answers = answer_with(&space, &question, k(top_k), &synonyms, &tagger)?;
            if answers.is_empty() {
                eprintln!("no answer");
            }
            print!("{}", format_answers(&space, &answers, explain));
        }
        Command::DumpEdges { space } => print!("{}", load_space(&space)?.edges_tsv()),
        Command::DumpParse { corpus } => print!("{}", dump_parse(&load_corpus(&corpus)?)),
        Command::Eval(EvalCommand::Relations { space, gold }) => {
            let space = load_space(&space)?;
            let gold = GoldRelations::load(&gold)?;
            if gold.pairs.is_empty() {
                bail!("gold relation file is empty");
            }
            let (rows, total) = eval::relation_report(&gold, &space);
            print!("{}", eval::format_relation_report(&rows, &total));
        }
        Command::Eval(EvalCommand::Qa { space, gold, top_k }) => {
            let space = load_space(&space)?;
            let gold = GoldAnswers::load(&gold)?;
            gold.validate(&space.sentences.keys().copied().collect())?;
            let rows = eval::qa_report(&space, &gold, k(top_k), &synonyms, &cfg.baseline_params());
            print!("{}", eval::format_qa_report(&rows));
        }
        Command::Eval(EvalCommand::Baselines { space, question, top_k }) => {
            let space = load_space(&space)?;
            let mut out = String::from("method\trank\tsentence_id\tscore\n");
            for (m, ranks) in eval::baseline_table(&space, &question, &cfg.baseline_params()) {
                for (i, (id, score)) in ranks.iter().take(k(top_k)).enumerate() {
                    let _ = writeln!(out, "{}\t{}\t{id}\t{score:.4}", System::Baseline(m).name(), i + 1);
                }
            }
            print!("{out}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).format_timestamp(None).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
