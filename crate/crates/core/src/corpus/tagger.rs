//! Rule/lexicon part-of-speech tagger.
//!
//! Each token gets an ordered list of candidate readings from the lexicon or
//! from suffix heuristics; a left-to-right pass then picks one reading per
//! token using the previous tag and the next token's candidates.

use super::lexicon::Lexicon;
use super::morph;
use super::split::tokenize;
use super::token::{Pos, SentenceId, TaggedSentence, Token};

/// Any tagger that turns a raw sentence into tagged tokens.
pub trait Tagger {
    fn tag(&self, sentence: &str, sentence_id: SentenceId, doc_id: &str) -> TaggedSentence;
}

#[derive(Debug, Clone)]
pub struct RuleTagger {
    lexicon: Lexicon,
}

impl Default for RuleTagger {
    fn default() -> Self {
        RuleTagger::new(Lexicon::bundled())
    }
}

type Reading = (Pos, String);

fn punct_tag(tok: &str) -> Option<Pos> {
    Some(match tok {
        "," => Pos::Comma,
        "." | "!" | "?" => Pos::Period,
        ";" | ":" | "--" => Pos::Colon,
        "(" | "[" => Pos::LeftParen,
        ")" | "]" => Pos::RightParen,
        "\"" | "'" | "``" | "''" => Pos::Quote,
        _ if tok.chars().all(|c| !c.is_alphanumeric()) => Pos::Sym,
        _ => return None,
    })
}

fn is_number(tok: &str) -> bool {
    let t = tok.replace([',', '.', '%'], "");
    !t.is_empty() && t.chars().all(|c| c.is_ascii_digit())
}

impl RuleTagger {
    pub fn new(lexicon: Lexicon) -> Self {
        RuleTagger { lexicon }
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    fn verb_lemma(&self, w: &str) -> String {
        morph::verb_lemma(w, |c| self.lexicon.is_verb(c))
    }

    fn candidates(&self, tok: &str, first: bool) -> Vec<Reading> {
        if let Some(p) = punct_tag(tok) {
            return vec![(p, tok.to_string())];
        }
        if is_number(tok) {
            return vec![(Pos::CD, tok.to_lowercase())];
        }
        let lower = tok.to_lowercase();
        let capitalized = tok.chars().next().is_some_and(char::is_uppercase);
        let inner_caps = tok.chars().skip(1).any(char::is_uppercase);
        if inner_caps && !tok.contains('-') {
            return vec![(Pos::NNP, lower)];
        }
        if let Some(readings) = self.lexicon.lookup(&lower) {
            if capitalized && !first {
                let mut out = vec![(Pos::NNP, lower.clone())];
                // Capitalized closed-class words mid-sentence are unusual; only
                // trust them for the wh/aux families used at question starts.
                if readings.iter().any(|(p, _)| p.is_wh() || *p == Pos::MD) {
                    return readings.to_vec();
                }
                out.extend(readings.iter().filter(|(p, _)| p.is_noun()).cloned());
                return out;
            }
            return readings.to_vec();
        }
        if capitalized && !first {
            return vec![(Pos::NNP, lower)];
        }
        if first && capitalized && tok.len() > 1 && tok.chars().all(|c| c.is_uppercase() || !c.is_alphabetic()) {
            return vec![(Pos::NNP, lower)];
        }
        self.suffix_candidates(&lower, first && capitalized)
    }

    fn suffix_candidates(&self, w: &str, sentence_initial_cap: bool) -> Vec<Reading> {
        let last = w.rsplit('-').next().unwrap_or(w);
        let adj_suffixes = [
            "based", "like", "ous", "ful", "ive", "able", "ible", "al", "ic", "less", "ary", "ular",
        ];
        if w.contains('-') && adj_suffixes.iter().any(|s| last.ends_with(s)) {
            return vec![(Pos::JJ, w.to_string())];
        }
        if last.ends_with("ing") && last.len() > 4 {
            return vec![(Pos::VBG, self.verb_lemma(w))];
        }
        if last.ends_with("ed") && last.len() > 3 {
            let lemma = self.verb_lemma(w);
            return vec![(Pos::VBD, lemma.clone()), (Pos::VBN, lemma)];
        }
        if last.ends_with("ly") && last.len() > 3 {
            return vec![(Pos::RB, w.to_string())];
        }
        for s in ["tion", "sion", "ment", "ness", "ity", "ism", "ance", "ence", "ship", "ure", "ogy"] {
            if last.ends_with(s) {
                return vec![(Pos::NN, w.to_string())];
            }
        }
        for s in ["tions", "sions", "ments", "nesses", "ities", "isms", "ances", "ences", "ogies"] {
            if last.ends_with(s) {
                return vec![(Pos::NNS, morph::noun_lemma(w))];
            }
        }
        if adj_suffixes.iter().any(|s| last.ends_with(s)) && last.len() > 4 {
            return vec![(Pos::JJ, w.to_string())];
        }
        if last.ends_with('s') && !last.ends_with("ss") && !last.ends_with("us") && !last.ends_with("is") && last.len() > 3 {
            let base = &w[..w.len() - 1];
            let es_base = w.strip_suffix("es").unwrap_or(base);
            if self.lexicon.is_verb(base) || self.lexicon.is_verb(es_base) {
                let lemma = self.verb_lemma(w);
                return vec![(Pos::NNS, morph::noun_lemma(w)), (Pos::VBZ, lemma)];
            }
            return vec![(Pos::NNS, morph::noun_lemma(w))];
        }
        if sentence_initial_cap {
            return vec![(Pos::NNP, w.to_string()), (Pos::NN, w.to_string())];
        }
        vec![(Pos::NN, w.to_string())]
    }

    /// Tag one raw sentence with the built-in rules.
    pub fn tag_sentence(&self, sentence: &str, sentence_id: SentenceId, doc_id: &str) -> TaggedSentence {
        let words = tokenize(sentence);
        let cands: Vec<Vec<Reading>> = words
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let first = i == 0 || words[..i].iter().all(|p| punct_tag(p).is_some());
                self.candidates(w, first)
            })
            .collect();

        let mut chosen: Vec<Reading> = Vec::with_capacity(words.len());
        let mut finite_seen = false;
        for i in 0..words.len() {
            let c = &cands[i];
            let pick = if c.len() == 1 {
                c[0].clone()
            } else {
                self.disambiguate(i, &cands, &chosen, finite_seen)
            };
            let (pos, lemma) = pick;
            if pos.is_finite_verb() {
                finite_seen = true;
            }
            // Clause boundaries reset the finite-verb expectation.
            if matches!(pos, Pos::WDT | Pos::WP | Pos::WRB | Pos::CC | Pos::Comma)
                || (pos == Pos::IN && is_subordinator(&lemma))
            {
                finite_seen = false;
            }
            chosen.push((pos, lemma));
        }
        self.post_rules(&mut chosen, &words);

        let tokens = words
            .into_iter()
            .zip(chosen)
            .enumerate()
            .map(|(i, (w, (pos, lemma)))| Token::new(w, lemma, pos, i))
            .collect();
        TaggedSentence::new(sentence_id, doc_id, tokens)
    }

    fn disambiguate(&self, i: usize, cands: &[Vec<Reading>], chosen: &[Reading], finite_seen: bool) -> Reading {
        let c = &cands[i];
        let has = |p: Pos| c.iter().find(|(q, _)| *q == p).cloned();
        let has_any = |f: fn(Pos) -> bool| c.iter().find(|(q, _)| f(*q)).cloned();
        // Previous non-adverb reading.
        let prev = chosen.iter().rev().find(|(p, _)| !p.is_adverb()).cloned();
        let prev_immediate = chosen.last().cloned();
        let next: Option<&Vec<Reading>> = cands.get(i + 1);
        let next_is_nominal = next.is_some_and(|n| {
            n[0].0.is_noun() || n[0].0.is_adjective() || matches!(n[0].0, Pos::CD)
        });

        if let Some((pp, pl)) = &prev {
            // After a modal, "to", or do-support: base verb.
            if *pp == Pos::MD || *pp == Pos::TO || (pl == "do" && pp.is_verb()) {
                if let Some(r) = has(Pos::VB) {
                    return r;
                }
            }
            // After be/have: participles.
            if pp.is_verb() && (pl == "be" || pl == "have") {
                if pl == "be" {
                    if let Some(r) = has(Pos::VBG) {
                        return r;
                    }
                }
                if let Some(r) = has(Pos::VBN) {
                    return r;
                }
            }
        }
        let prev_tag = prev_immediate.as_ref().map(|(p, _)| *p);
        let nominal_context = match prev_tag {
            None => false,
            Some(p) => {
                matches!(p, Pos::DT | Pos::PRPS | Pos::POS | Pos::CD | Pos::IN | Pos::JJ | Pos::JJR | Pos::JJS)
                    || (p == Pos::VBN && !finite_seen)
                    // question-initial "which" opens a noun phrase
                    || (p == Pos::WDT && chosen.len() == 1)
            }
        };
        if nominal_context {
            // Participles before a noun act as modifiers ("top ranked sentences").
            if next_is_nominal {
                if let Some(r) = has(Pos::VBN) {
                    return r;
                }
            }
            if let Some(r) = has_any(Pos::is_noun) {
                return r;
            }
            if let Some(r) = has_any(Pos::is_adjective) {
                return r;
            }
        }
        // Sentence-initial participle before a noun: "Supervised algorithm builds".
        if prev_tag.is_none() && next_is_nominal {
            if let Some(r) = has(Pos::VBN) {
                return r;
            }
            if let Some(r) = has_any(Pos::is_adjective) {
                return r;
            }
        }
        let subject_like = matches!(
            prev_tag,
            Some(Pos::NN | Pos::NNS | Pos::NNP | Pos::NNPS | Pos::PRP | Pos::RightParen)
        ) || matches!(prev_tag, Some(p) if p.is_adverb());
        if subject_like && !finite_seen {
            let plural_subject = matches!(prev.as_ref().map(|(p, _)| *p), Some(Pos::NNS | Pos::NNPS))
                || prev.as_ref().is_some_and(|(p, l)| *p == Pos::PRP && matches!(l.as_str(), "we" | "they" | "you" | "i"));
            let order: &[Pos] = if plural_subject {
                &[Pos::VBP, Pos::VBD, Pos::VBZ]
            } else {
                &[Pos::VBZ, Pos::VBD, Pos::VBP]
            };
            for p in order {
                if let Some(r) = has(*p) {
                    return r;
                }
            }
        }
        if finite_seen {
            // After the main verb, homographs lean nominal; so does the last
            // word of a noun run ("with human judges.").
            let at_end = next.is_none_or(|n| n[0].0.is_punct());
            if let Some(r) = has_any(Pos::is_noun) {
                if matches!(prev_tag, Some(p) if p.is_verb() || p == Pos::CC) || (at_end && matches!(prev_tag, Some(p) if p.is_noun() || p.is_adjective())) {
                    return r;
                }
            }
            if let Some(r) = has(Pos::VBN) {
                return r;
            }
        }
        if prev_tag == Some(Pos::TO) {
            if let Some(r) = has(Pos::VB) {
                return r;
            }
        }
        c[0].clone()
    }

    fn post_rules(&self, chosen: &mut [Reading], words: &[String]) {
        let n = chosen.len();
        // No finite verb at all: an unknown "-s" word after a singular noun
        // is the verb ("the model converges").
        if !chosen.iter().any(|(p, _)| p.is_finite_verb()) {
            if let Some(i) = (1..n).find(|&i| chosen[i].0 == Pos::NNS && matches!(chosen[i - 1].0, Pos::NN | Pos::NNP) && self.lexicon.lookup(&words[i].to_lowercase()).is_none()) {
                chosen[i] = (Pos::VBZ, self.verb_lemma(&words[i].to_lowercase()));
            }
        }
        // An inverted "do"/modal still waiting for its bare verb: "does the
        // model use ...".
        let mut pending_do = false;
        for i in 0..n {
            if pending_do && chosen[i].0 == Pos::NN && i > 0 && matches!(chosen[i - 1].0, Pos::NN | Pos::NNP | Pos::NNS | Pos::PRP) {
                let w = words[i].to_lowercase();
                if self.lexicon.is_verb(&w) {
                    chosen[i] = (Pos::VB, w);
                }
            }
            if chosen[i].0.is_verb() {
                pending_do = false;
            }
            // Adjective/adverb word right before a noun: "which fast method".
            let after_adjs = (i + 1..n).find(|&k| !chosen[k].0.is_adjective());
            if chosen[i].0 == Pos::RB && after_adjs.is_some_and(|k| chosen[k].0.is_noun()) {
                let w = words[i].to_lowercase();
                if self.lexicon.lookup(&w).is_some_and(|r| r.iter().any(|(p, _)| *p == Pos::JJ)) {
                    chosen[i] = (Pos::JJ, w);
                }
            }
            if chosen[i].0 == Pos::MD || (chosen[i].1 == "do" && chosen[i].0.is_finite_verb()) {
                pending_do = i + 1 < n && !chosen[i + 1].0.is_verb();
            }
            // Gerund heading a compound noun: "question answering (HQA)".
            if chosen[i].0 == Pos::VBG && i > 0 && matches!(chosen[i - 1].0, Pos::NN | Pos::NNP) {
                let next = chosen.get(i + 1).map(|(p, _)| *p);
                let takes_object = matches!(
                    next,
                    Some(Pos::DT | Pos::PRP | Pos::PRPS | Pos::NN | Pos::NNS | Pos::NNP | Pos::NNPS | Pos::JJ | Pos::CD)
                );
                let prev_prev_verbish = i >= 2 && (chosen[i - 2].0.is_verb() || chosen[i - 2].0 == Pos::IN);
                if !takes_object && !prev_prev_verbish {
                    chosen[i] = (Pos::NN, words[i].to_lowercase());
                }
            }
            // Determiner + gerund with no noun after it: "the ranking".
            if chosen[i].0 == Pos::VBG && i > 0 && matches!(chosen[i - 1].0, Pos::DT | Pos::PRPS) {
                let next = chosen.get(i + 1).map(|(p, _)| *p);
                if !next.is_some_and(|p| p.is_noun() || p == Pos::VBN) {
                    chosen[i] = (Pos::NN, words[i].to_lowercase());
                }
            }
            // "that" is a determiner only after a preposition ("in that
            // language"); elsewhere it introduces a clause.
            if chosen[i].1 == "that" && chosen[i].0 == Pos::DT && !(i > 0 && matches!(chosen[i - 1].0, Pos::IN | Pos::TO)) {
                chosen[i].0 = Pos::IN;
            }
        }
    }
}

fn is_subordinator(lemma: &str) -> bool {
    matches!(
        lemma,
        "that" | "because" | "although" | "though" | "while" | "if" | "unless" | "whereas" | "since" | "once" | "until" | "lest" | "whether"
    )
}

impl Tagger for RuleTagger {
    fn tag(&self, sentence: &str, sentence_id: SentenceId, doc_id: &str) -> TaggedSentence {
        self.tag_sentence(sentence, sentence_id, doc_id)
    }
}
