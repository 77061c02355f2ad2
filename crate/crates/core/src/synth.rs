//! Seeded generator of small grammatical corpora, question pairs and gold
//! subclass relations. The gold relation is computed from modifier sets and
//! is-a facts directly, independent of the parser and the subsumption
//! engine.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const HEADS: [&str; 6] = ["model", "algorithm", "system", "network", "graph", "method"];
pub const MODIFIERS: [&str; 8] = ["fast", "sparse", "deep", "neural", "large", "robust", "simple", "linear"];
/// (base, third person singular)
pub const VERBS: [(&str, &str); 6] = [("build", "builds"), ("rank", "ranks"), ("select", "selects"), ("train", "trains"), ("use", "uses"), ("evaluate", "evaluates")];
pub const NAMES: [&str; 3] = ["LexRank", "TextRank", "PageRank"];
pub const PLACES: [&str; 2] = ["China", "Europe"];
pub const YEARS: [&str; 2] = ["2004", "2010"];

/// A noun phrase as the generator knows it: head plus modifier set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenNp {
    pub head: String,
    pub mods: BTreeSet<String>,
    pub proper: bool,
}

impl GenNp {
    pub fn key(&self) -> String {
        let mut parts: Vec<&str> = self.mods.iter().map(String::as_str).collect();
        let head = self.head.to_lowercase();
        parts.push(&head);
        parts.join(" ")
    }

    fn surface(&self, det: bool) -> String {
        let mut w: Vec<&str> = Vec::new();
        if det && !self.proper {
            w.push("the");
        }
        w.extend(self.mods.iter().map(String::as_str));
        w.push(&self.head);
        w.join(" ")
    }

    /// Oracle for the modifier rule: same head, strictly more modifiers.
    pub fn strictly_below(&self, other: &GenNp) -> bool {
        self.head.eq_ignore_ascii_case(&other.head) && self.mods.len() > other.mods.len() && other.mods.is_subset(&self.mods)
    }
}

#[derive(Debug, Clone)]
pub struct GenSentence {
    pub text: String,
    pub subject: GenNp,
    /// The object, or the predicate noun of an is-a sentence.
    pub object: GenNp,
    pub isa: bool,
}

#[derive(Debug, Clone)]
pub struct GenCorpus {
    pub sentences: Vec<GenSentence>,
}

fn np(rng: &mut ChaCha8Rng, max_mods: usize) -> GenNp {
    let k = rng.gen_range(0..=max_mods);
    let mods: BTreeSet<String> = MODIFIERS.choose_multiple(rng, k).map(|s| s.to_string()).collect();
    GenNp { head: HEADS.choose(rng).unwrap().to_string(), mods, proper: false }
}

fn name(rng: &mut ChaCha8Rng) -> GenNp {
    GenNp { head: NAMES.choose(rng).unwrap().to_string(), mods: BTreeSet::new(), proper: true }
}

/// `n` sentences, modifier depth ≤ `max_mods`. Roughly one in six is an
/// is-a sentence ("TextRank is a fast graph."); a third carry an adverbial.
pub fn corpus(seed: u64, n: usize, max_mods: usize) -> GenCorpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sentences = Vec::with_capacity(n);
    for _ in 0..n {
        if rng.gen_ratio(1, 6) {
            let subject = name(&mut rng);
            let mut object = np(&mut rng, max_mods);
            if object.mods.is_empty() {
                object.mods.insert(MODIFIERS.choose(&mut rng).unwrap().to_string());
            }
            let text = format!("{} is a {}.", subject.surface(false), object.surface(false));
            sentences.push(GenSentence { text, subject, object, isa: true });
            continue;
        }
        let subject = if rng.gen_ratio(1, 5) { name(&mut rng) } else { np(&mut rng, max_mods) };
        let object = np(&mut rng, max_mods);
        let (_, verb) = VERBS.choose(&mut rng).unwrap();
        let adv = match rng.gen_range(0..6) {
            0 => format!(" in {}", PLACES.choose(&mut rng).unwrap()),
            1 => format!(" in {}", YEARS.choose(&mut rng).unwrap()),
            _ => String::new(),
        };
        let mut text = format!("{} {verb} {}{adv}.", subject.surface(true), object.surface(true));
        text[..1].make_ascii_uppercase();
        sentences.push(GenSentence { text, subject, object, isa: false });
    }
    GenCorpus { sentences }
}

impl GenCorpus {
    pub fn text(&self) -> String {
        self.sentences.iter().map(|s| s.text.as_str()).collect::<Vec<_>>().join("\n")
    }

    /// Gold `(child, parent, dimension)` pairs over the closure of the
    /// modifier rule and the is-a facts, restricted to the phrases each
    /// dimension holds (predicates of is-a facts join a dimension when
    /// something there falls below them).
    pub fn gold(&self) -> BTreeSet<(String, String, String)> {
        let isa: Vec<(GenNp, GenNp)> = self.sentences.iter().filter(|s| s.isa).map(|s| (s.subject.clone(), s.object.clone())).collect();
        let mut dims: BTreeMap<&str, BTreeSet<GenNp>> = BTreeMap::new();
        for s in &self.sentences {
            // the predicate of an is-a sentence parses as its object
            dims.entry("subject").or_default().insert(s.subject.clone());
            dims.entry("object").or_default().insert(s.object.clone());
        }
        let mut out = BTreeSet::new();
        for (dim, members) in dims {
            let mut universe: BTreeSet<GenNp> = members.clone();
            universe.extend(isa.iter().flat_map(|(a, b)| [a.clone(), b.clone()]));
            let nodes: Vec<GenNp> = universe.into_iter().collect();
            let below = closure(&nodes, &isa);
            // endpoint predicates join when something in the dimension is below them
            let mut present: BTreeSet<usize> = (0..nodes.len()).filter(|&i| members.contains(&nodes[i])).collect();
            loop {
                let extra: Vec<usize> = (0..nodes.len())
                    .filter(|&j| !present.contains(&j) && isa.iter().any(|(a, b)| &nodes[j] == a || &nodes[j] == b))
                    .filter(|&j| present.iter().any(|&i| below[i][j]))
                    .collect();
                if extra.is_empty() {
                    break;
                }
                present.extend(extra);
            }
            for &i in &present {
                for &j in &present {
                    if below[i][j] && nodes[i].key() != nodes[j].key() {
                        out.insert((nodes[i].key(), nodes[j].key(), dim.to_string()));
                    }
                }
            }
        }
        out
    }

    pub fn gold_tsv(&self) -> String {
        self.gold().into_iter().map(|(c, p, d)| format!("{c}\t{p}\t{d}\n")).collect()
    }
}

/// Warshall closure of modifier inclusion plus is-a edges.
fn closure(nodes: &[GenNp], isa: &[(GenNp, GenNp)]) -> Vec<Vec<bool>> {
    let n = nodes.len();
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = nodes[i].strictly_below(&nodes[j]) || isa.iter().any(|(a, b)| *a == nodes[i] && *b == nodes[j]);
        }
    }
    for k in 0..n {
        for i in 0..n {
            if m[i][k] {
                for j in 0..n {
                    if m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
    }
    m
}

/// A question pair where the first is built by specializing the second.
#[derive(Debug, Clone)]
pub struct QuestionPair {
    pub specific: String,
    pub general: String,
}

/// A random sub-multiset of the modifiers: a superclass of `np`.
fn generalize(rng: &mut ChaCha8Rng, np: &GenNp) -> GenNp {
    let mut out = np.clone();
    out.mods.retain(|_| rng.gen_bool(0.5));
    out
}

fn specialize(rng: &mut ChaCha8Rng, np: &GenNp, keep_within: &GenNp) -> GenNp {
    // add back some of the modifiers dropped from `keep_within`
    let mut out = np.clone();
    for m in keep_within.mods.difference(&np.mods) {
        if rng.gen_bool(0.5) {
            out.mods.insert(m.clone());
        }
    }
    if out == *np {
        if let Some(m) = keep_within.mods.difference(&np.mods).next() {
            out.mods.insert(m.clone());
        } else if !out.proper && out.mods.len() < 3 {
            let free: Vec<&str> = MODIFIERS.iter().copied().filter(|m| !out.mods.contains(*m)).collect();
            out.mods.insert(free.choose(rng).unwrap().to_string());
        }
    }
    out
}

/// Question pairs drawn from the corpus sentences: the general question
/// drops modifiers from a sentence's phrases, the specific one restores
/// some of them (or adds an adverbial), so most pairs are in the question
/// subclass relation and have answers. Every fifth pair is unrelated.
pub fn question_pairs(c: &GenCorpus, seed: u64, n: usize) -> Vec<QuestionPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let plain: Vec<&GenSentence> = c.sentences.iter().filter(|s| !s.isa).collect();
    let mut out = Vec::with_capacity(n);
    if plain.is_empty() {
        return out;
    }
    let verb_of = |s: &GenSentence| -> (&'static str, &'static str) {
        *VERBS.iter().find(|(_, t)| s.text.contains(&format!(" {t} "))).expect("generated verb")
    };
    for _ in 0..n {
        let s = plain.choose(&mut rng).unwrap();
        let (base, third) = verb_of(s);
        let (gs, go) = (generalize(&mut rng, &s.subject), generalize(&mut rng, &s.object));
        let (ss, so) = (specialize(&mut rng, &gs, &s.subject), specialize(&mut rng, &go, &s.object));
        let place = PLACES.choose(&mut rng).unwrap();
        let subj = |np: &GenNp| np.surface(true);
        let (specific, general) = match rng.gen_range(0..5) {
            0 => (format!("What does {} {base}?", subj(&ss)), format!("What does {} {base}?", subj(&gs))),
            1 if !s.subject.proper => (format!("Which {} {third} {}?", ss.surface(false), go.surface(true)), format!("Which {} {third} {}?", gs.surface(false), go.surface(true))),
            1 | 2 => (format!("Where does {} {base} {}?", subj(&gs), so.surface(true)), format!("Where does {} {base} {}?", subj(&gs), go.surface(true))),
            3 => (format!("Does {} {base} {} in {place}?", subj(&ss), go.surface(true)), format!("Does {} {base} {}?", subj(&gs), go.surface(true))),
            _ => {
                let other = plain.choose(&mut rng).unwrap();
                let (b2, _) = verb_of(other);
                (format!("What does {} {base}?", subj(&gs)), format!("What does {} {b2}?", subj(&generalize(&mut rng, &other.subject))))
            }
        };
        out.push(QuestionPair { specific, general });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_seeded() {
        assert_eq!(corpus(7, 20, 3).text(), corpus(7, 20, 3).text());
        assert_ne!(corpus(7, 20, 3).text(), corpus(8, 20, 3).text());
        let c = corpus(1, 30, 3);
        assert_eq!(c.sentences.len(), 30);
        assert!(c.sentences.iter().all(|s| s.subject.mods.len() <= 3 && s.object.mods.len() <= 3));
    }

    #[test]
    fn vocabulary_is_small() {
        let mut lemmas: BTreeSet<String> = ["the", "a", "be", "in"].iter().map(|s| s.to_string()).collect();
        lemmas.extend(HEADS.iter().chain(&MODIFIERS).chain(&NAMES).chain(&PLACES).chain(&YEARS).map(|s| s.to_lowercase()));
        lemmas.extend(VERBS.iter().map(|(b, _)| b.to_string()));
        assert!(lemmas.len() <= 40, "{}", lemmas.len());
    }

    #[test]
    fn gold_oracle() {
        let np = |m: &[&str], h: &str| GenNp { head: h.into(), mods: m.iter().map(|s| s.to_string()).collect(), proper: false };
        let name = GenNp { head: "LexRank".into(), mods: BTreeSet::new(), proper: true };
        let c = GenCorpus {
            sentences: vec![
                GenSentence { text: String::new(), subject: name.clone(), object: np(&["fast"], "graph"), isa: true },
                GenSentence { text: String::new(), subject: np(&["deep", "fast"], "graph"), object: np(&[], "model"), isa: false },
                GenSentence { text: String::new(), subject: np(&[], "graph"), object: np(&["deep"], "model"), isa: false },
            ],
        };
        let g = c.gold();
        let has = |a: &str, b: &str, d: &str| g.contains(&(a.to_string(), b.to_string(), d.to_string()));
        assert!(has("lexrank", "fast graph", "subject"));
        assert!(has("lexrank", "graph", "subject"));
        assert!(has("deep fast graph", "fast graph", "subject"));
        assert!(has("deep fast graph", "graph", "subject"));
        assert!(has("deep model", "model", "object"));
        assert!(!has("fast graph", "lexrank", "subject"));
    }
}
