//! Tag lexicon: closed-class word lists plus a bundled open-class vocabulary.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::Path;

use super::morph;
use super::token::Pos;
use super::CorpusError;

pub const MODALS: &[&str] = &[
    "can", "could", "may", "might", "must", "should", "shall", "will", "would",
];

pub const AUXILIARIES: &[&str] = &[
    "have", "has", "had", "am", "is", "are", "was", "were", "be", "been", "being",
];

pub const DO_FORMS: &[&str] = &["do", "does", "did"];

/// Lead words of noun clauses.
pub const SUBORDINATE_CONJUNCTIONS: &[&str] = &[
    "that", "whether", "whom", "whose", "who", "whoever", "what", "whatever", "which",
    "whichever", "why", "when", "whenever", "where", "wherever", "how", "however",
];

pub const NEGATIONS: &[&str] = &["not", "never", "no", "n't"];

const DETERMINERS: &[&str] = &[
    "a", "an", "the", "this", "these", "those", "each", "every", "some", "any", "no", "all",
    "both", "either", "neither", "another",
];

const QUANTIFIERS: &[&str] = &["many", "much", "few", "several", "such", "more", "most", "other", "less", "fewer"];

const PREPOSITIONS: &[&str] = &[
    "of", "in", "on", "at", "by", "for", "with", "from", "into", "onto", "about", "through",
    "via", "over", "under", "after", "before", "since", "until", "during", "within", "without",
    "between", "among", "across", "against", "along", "around", "behind", "beyond", "despite",
    "toward", "towards", "upon", "like", "as", "than", "near", "per", "throughout", "inside",
    "outside", "because", "although", "though", "while", "if", "unless", "whereas", "once",
    "lest", "whether", "due", "owing", "versus", "above", "below", "beside", "besides",
];

const COORDINATORS: &[&str] = &["and", "or", "but", "nor", "yet"];

const PRONOUNS: &[&str] = &[
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them", "itself",
    "themselves", "himself", "herself", "ourselves", "myself", "one",
];

const POSSESSIVES: &[&str] = &["my", "your", "his", "its", "our", "their"];

const ADVERBS: &[&str] = &[
    "not", "never", "also", "very", "quite", "too", "often", "always", "usually", "again",
    "now", "then", "here", "there", "well", "still", "already", "even", "only", "just",
    "rather", "almost", "soon", "later", "today", "yesterday", "tomorrow", "sometimes",
    "together", "further", "instead", "thus", "hence", "therefore", "however", "moreover",
    "furthermore", "so", "first", "twice", "once", "ago", "yet", "fast", "hard",
];

const ADJECTIVES: &[&str] = &[
    "able", "good", "bad", "best", "better", "new", "old", "large", "small", "big", "top",
    "high", "low", "great", "important", "essential", "complex", "simple", "supervised",
    "unsupervised", "semi-supervised", "relevant", "salient", "excellent", "adjacent",
    "neural", "general", "specific", "main", "major", "minor", "senior", "junior", "deep",
    "shallow", "fast", "slow", "challenging", "extractive", "abstractive", "automatic",
    "unlabelled", "labelled", "random", "full", "empty", "same", "different", "similar",
    "due", "likely", "possible", "impossible", "available", "efficient", "effective",
    "accurate", "robust", "sparse", "linear", "dense", "shallow", "novel", "common", "correct", "incorrect", "wrong", "right",
    "useful", "next", "last", "previous", "various", "numerous", "long", "short", "key",
    "natural", "artificial", "statistical", "semantic", "syntactic", "lexical", "textual",
    "global", "local", "public", "private", "social", "digital", "structured", "seminal",
    "beautiful", "red", "green", "blue", "young", "open", "clean", "weak", "strong",
    "graph-based", "rule-based", "well-established", "multi-dimensional", "master-slave",
];

/// Base forms of open-class verbs the bundled tagger knows.
const VERBS: &[&str] = &[
    "access", "base", "group", "accept", "achieve", "add", "adapt", "address", "affect", "aim", "allow",
    "analyze", "answer", "appear", "apply", "approach", "argue", "arise", "ask", "assign",
    "assume", "attach", "avoid", "become", "begin", "believe", "break", "bring", "build",
    "buy", "calculate", "call", "capture", "carry", "cause", "change", "check", "choose",
    "claim", "classify", "cluster", "collect", "combine", "come", "compare", "compose",
    "compute", "concern", "conclude", "conduct", "connect", "consider", "consist", "construct",
    "contain", "continue", "contribute", "control", "convert", "cover", "create", "cut",
    "decide", "decode", "define", "demonstrate", "denote", "depend", "derive", "describe",
    "design", "detect", "determine", "develop", "discover", "discuss", "do", "draw", "drive",
    "eat", "employ", "enable", "encode", "encourage", "end", "enhance", "ensure", "estimate",
    "evaluate", "examine", "execute", "exist", "expand", "expect", "explain", "exploit",
    "explore", "express", "extend", "extract", "fail", "feed", "find", "focus", "follow",
    "form", "generate", "get", "give", "go", "grow", "handle", "happen", "have", "help",
    "hold", "identify", "ignore", "implement", "improve", "include", "incorporate", "increase",
    "index", "indicate", "infer", "introduce", "investigate", "involve", "iterate", "judge",
    "keep", "know", "label", "lead", "learn", "leave", "let", "like", "link", "locate", "look",
    "lose", "make", "manage", "map", "match", "mean", "measure", "meet", "merge", "minimize",
    "maximize", "model", "move", "need", "note", "observe", "obtain", "occur", "offer",
    "operate", "optimize", "organize", "outperform", "overcome", "parse", "pass", "perform",
    "place", "play", "predict", "prefer", "present", "preserve", "process", "produce",
    "propose", "prove", "provide", "publish", "put", "query", "rank", "reach", "read",
    "receive", "recognize", "reduce", "refer", "reflect", "regard", "relate", "rely",
    "remain", "remove", "replace", "report", "represent", "require", "retrieve", "return",
    "reveal", "run", "say", "score", "search", "see", "seek", "seem", "select", "sell", "send",
    "serve", "set", "share", "show", "solve", "sort", "speak", "specify", "split", "start",
    "stop", "store", "study", "suggest", "summarize", "support", "take", "talk", "teach",
    "tell", "tend", "test", "think", "train", "transform", "treat", "try", "understand",
    "update", "use", "utilize", "verify", "view", "want", "weight", "win", "work", "write",
];

/// Open-class nouns. Verb/noun homographs listed here become ambiguous and are
/// resolved by context in the tagger.
const NOUNS: &[&str] = &[
    "algorithm", "answer", "application", "approach", "article", "assumption", "attention",
    "author", "baseline", "case", "category", "chemistry", "class", "clause", "cluster",
    "complexity", "computer", "concept", "condition", "corpus", "data", "database",
    "dataset", "day", "definition", "dimension", "document", "domain", "edge", "element",
    "engine", "entity", "era", "essence", "event", "evidence", "example", "experiment",
    "extract", "fact", "feature", "field", "figure", "form", "framework", "function", "graph",
    "group", "healthcare", "hour", "idea", "index", "information", "input", "instance", "judge",
    "kind", "knowledge", "language", "learning", "level", "link", "list", "literature",
    "machine", "mathematics", "matrix", "measure", "metadata", "method", "metric", "minute",
    "model", "month", "network", "node", "noun", "number", "object", "operation", "order",
    "output", "page", "paper", "paragraph", "part", "pattern", "people", "performance",
    "phrase", "place", "problem", "process", "prize", "program", "property", "query",
    "question", "rank", "reason", "relation", "representation", "researcher", "resource",
    "result", "rule", "scenario", "science", "score", "search", "second", "sentence",
    "server", "service", "set", "size", "space", "step", "store", "structure", "study",
    "subclass", "subfield", "subject", "summary", "system", "table", "task", "technique",
    "term", "test", "text", "thing", "time", "tool", "topic", "training", "tree", "type",
    "unit", "user", "value", "vector", "verb", "version", "way", "web", "week", "weight",
    "word", "work", "world", "year", "summarization", "relevance", "use", "support",
    "design", "need", "report", "process", "change", "match", "map", "return", "view",
    "approach", "end", "start", "focus", "control", "label", "cluster", "sort",
];

/// Homographs whose noun reading should be tried first.
const NOUN_FIRST: &[&str] = &[
    "extract", "result", "results", "work", "use", "set", "rank", "test", "weight", "index",
    "link", "query", "search", "score", "form", "cluster", "label", "need", "report", "study",
    "answer", "model", "map", "view", "return", "end", "start", "match", "store", "process",
    "design", "support", "change", "focus", "control", "sort", "approach", "measure",
];

/// Word → candidate (tag, lemma) readings, most likely first.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: BTreeMap<String, Vec<(Pos, String)>>,
    verbs: HashSet<String>,
}

impl Lexicon {
    pub fn empty() -> Self {
        Lexicon::default()
    }

    /// The bundled lexicon.
    pub fn bundled() -> Self {
        let mut lx = Lexicon::default();
        for v in VERBS {
            lx.verbs.insert((*v).to_string());
        }
        for &(base, _, _) in morph::IRREGULAR_VERBS {
            lx.verbs.insert(base.to_string());
        }

        for w in MODALS {
            lx.add(w, Pos::MD, w);
        }
        for (w, pos) in [
            ("am", Pos::VBP),
            ("is", Pos::VBZ),
            ("are", Pos::VBP),
            ("was", Pos::VBD),
            ("were", Pos::VBD),
            ("be", Pos::VB),
            ("been", Pos::VBN),
            ("being", Pos::VBG),
        ] {
            lx.add(w, pos, "be");
        }
        for (w, pos) in [("have", Pos::VBP), ("has", Pos::VBZ), ("had", Pos::VBD), ("having", Pos::VBG)] {
            lx.add(w, pos, "have");
        }
        lx.add("have", Pos::VB, "have");
        lx.add("had", Pos::VBN, "have");
        for (w, pos) in [("do", Pos::VBP), ("does", Pos::VBZ), ("did", Pos::VBD), ("done", Pos::VBN), ("doing", Pos::VBG)] {
            lx.add(w, pos, "do");
        }
        lx.add("do", Pos::VB, "do");
        lx.add("n't", Pos::RB, "not");

        for w in ["what", "who", "whom", "whoever", "whatever"] {
            lx.add(w, Pos::WP, w);
        }
        lx.add("whose", Pos::WPS, "whose");
        for w in ["which", "whichever"] {
            lx.add(w, Pos::WDT, w);
        }
        for w in ["why", "when", "whenever", "where", "wherever", "how"] {
            lx.add(w, Pos::WRB, w);
        }
        lx.add("that", Pos::IN, "that");
        lx.add("that", Pos::DT, "that");
        lx.add("to", Pos::TO, "to");
        lx.add("'s", Pos::POS, "'s");
        lx.add("there", Pos::EX, "there");

        for w in DETERMINERS {
            lx.add(w, Pos::DT, w);
        }
        for w in QUANTIFIERS {
            lx.add(w, Pos::JJ, w);
        }
        for w in PREPOSITIONS {
            lx.add(w, Pos::IN, w);
        }
        for w in COORDINATORS {
            lx.add(w, Pos::CC, w);
        }
        for w in PRONOUNS {
            lx.add(w, Pos::PRP, w);
        }
        for w in POSSESSIVES {
            lx.add(w, Pos::PRPS, w);
        }
        for w in ADVERBS {
            lx.add(w, Pos::RB, w);
        }
        for w in ADJECTIVES {
            lx.add(w, Pos::JJ, w);
        }

        let noun_first: HashSet<&str> = NOUN_FIRST.iter().copied().collect();
        let mut nouns: Vec<&str> = NOUNS.to_vec();
        nouns.sort_unstable();
        nouns.dedup();
        for n in &nouns {
            let plural = if *n == "data" || *n == "metadata" || *n == "people" || *n == "information" || *n == "mathematics" || *n == "knowledge" || *n == "healthcare" {
                None
            } else if n.ends_with('y') && !n.ends_with("ey") && !n.ends_with("ay") {
                Some(format!("{}ies", &n[..n.len() - 1]))
            } else if n.ends_with('s') || n.ends_with('x') || n.ends_with("ch") || n.ends_with("sh") {
                Some(format!("{n}es"))
            } else {
                Some(format!("{n}s"))
            };
            let sg_tag = if *n == "data" || *n == "people" { Pos::NNS } else { Pos::NN };
            if noun_first.contains(n) {
                lx.add_front(n, sg_tag, n);
            } else {
                lx.add(n, sg_tag, n);
            }
            if let Some(p) = plural {
                if noun_first.contains(n) || noun_first.contains(p.as_str()) {
                    lx.add_front(&p, Pos::NNS, n);
                } else {
                    lx.add(&p, Pos::NNS, n);
                }
            }
        }

        let mut verbs: Vec<String> = lx.verbs.iter().cloned().collect();
        verbs.sort();
        for v in &verbs {
            if matches!(v.as_str(), "be" | "have" | "do") {
                continue;
            }
            lx.add(v, Pos::VB, v);
            lx.add(v, Pos::VBP, v);
            lx.add(&morph::third_person(v), Pos::VBZ, v);
            let past = morph::past(v);
            let pp = morph::past_participle(v);
            lx.add(&past, Pos::VBD, v);
            lx.add(&pp, Pos::VBN, v);
            lx.add(&morph::present_participle(v), Pos::VBG, v);
        }
        lx
    }

    fn add_front(&mut self, word: &str, pos: Pos, lemma: &str) {
        let e = self.entries.entry(word.to_string()).or_default();
        if !e.iter().any(|(p, l)| *p == pos && l == lemma) {
            e.insert(0, (pos, lemma.to_string()));
        }
    }

    pub fn add(&mut self, word: &str, pos: Pos, lemma: &str) {
        let e = self.entries.entry(word.to_string()).or_default();
        if !e.iter().any(|(p, l)| *p == pos && l == lemma) {
            e.push((pos, lemma.to_string()));
        }
        if pos.is_verb() {
            self.verbs.insert(lemma.to_string());
        }
    }

    /// Add entries from a TSV file of `word<TAB>TAG<TAB>lemma` lines. User
    /// entries take precedence over bundled readings of the same word.
    pub fn extend_from_tsv(&mut self, path: &Path) -> Result<(), CorpusError> {
        let text = fs::read_to_string(path).map_err(|e| CorpusError::Io(path.display().to_string(), e))?;
        let mut seen = HashSet::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(CorpusError::MalformedLine(n + 1));
            }
            let pos: Pos = cols[1].parse().map_err(|_| CorpusError::MalformedLine(n + 1))?;
            let word = cols[0].to_lowercase();
            if seen.insert(word.clone()) {
                self.entries.remove(&word);
            }
            self.add(&word, pos, cols[2]);
        }
        Ok(())
    }

    pub fn lookup(&self, word: &str) -> Option<&[(Pos, String)]> {
        self.entries.get(word).map(|v| v.as_slice())
    }

    pub fn is_verb(&self, base: &str) -> bool {
        self.verbs.contains(base)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_classes_present() {
        let lx = Lexicon::bundled();
        for m in MODALS {
            assert_eq!(lx.lookup(m).unwrap()[0].0, Pos::MD);
        }
        assert_eq!(lx.lookup("been").unwrap()[0], (Pos::VBN, "be".to_string()));
        assert_eq!(lx.lookup("builds").unwrap()[0], (Pos::VBZ, "build".to_string()));
        assert_eq!(lx.lookup("built").unwrap()[0], (Pos::VBD, "build".to_string()));
        assert_eq!(lx.lookup("algorithms").unwrap()[0], (Pos::NNS, "algorithm".to_string()));
    }

    #[test]
    fn homographs_keep_both_readings() {
        let lx = Lexicon::bundled();
        let r = lx.lookup("ranks").unwrap();
        assert_eq!(r[0].0, Pos::NNS);
        assert!(r.iter().any(|(p, _)| *p == Pos::VBZ));
    }
}
