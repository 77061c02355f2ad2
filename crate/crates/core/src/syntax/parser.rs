//! Token-level machinery shared by the sentence and question parsers:
//! noun phrases, verb groups and small lookahead helpers.

use std::ops::Range;

use crate::corpus::{Pos, Token};

use super::markers;
use super::types::{Phrase, PhraseKind, ARTICLES};
use super::ParseError;

/// Verbs whose second post-verbal noun phrase describes the first.
pub const COMPLEMENT_VERBS: &[&str] = &["make", "call", "name", "consider", "keep", "find", "deem", "label", "term", "elect", "render"];
/// Verbs that take `NP for/at/on NP` as direct + indirect object.
pub const DITRANSITIVE_VERBS: &[&str] = &["give", "send", "assign", "provide", "offer", "show", "tell", "pass", "lend", "buy", "bring", "hand", "pay"];
pub const LINKING_VERBS: &[&str] = &["be", "become", "seem", "remain", "appear", "look", "sound", "feel", "stay", "prove"];

/// Prepositions that stay inside a noun phrase after the verb (they are in
/// none of the adverbial marker tables).
fn attaches_to_np(prep: &str) -> bool {
    matches!(prep, "of" | "about" | "such as" | "including" | "than" | "per" | "against" | "toward" | "towards" | "versus" | "without" | "regarding" | "concerning" | "except")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Attach {
    /// Subject region: every trailing PP belongs to the noun phrase.
    All,
    /// After the verb: only PPs that cannot start an adverbial.
    NonAdverbial,
    /// Core noun phrase only.
    None,
}

pub(crate) struct Parser<'a> {
    pub toks: &'a [Token],
    pub unparsed: Vec<usize>,
}

impl<'a> Parser<'a> {
    pub fn new(toks: &'a [Token]) -> Self {
        Parser { toks, unparsed: Vec::new() }
    }

    pub fn pos(&self, i: usize) -> Option<Pos> {
        self.toks.get(i).map(|t| t.pos)
    }

    pub fn lemma(&self, i: usize) -> &str {
        self.toks.get(i).map_or("", |t| t.lemma.as_str())
    }

    pub fn lower(&self, i: usize) -> String {
        self.toks.get(i).map(Token::lower).unwrap_or_default()
    }

    pub fn display(&self, r: Range<usize>) -> String {
        let mut out = String::new();
        for t in &self.toks[r] {
            if !out.is_empty() && !matches!(t.pos, Pos::Comma | Pos::Period | Pos::RightParen | Pos::POS) && !out.ends_with('(') {
                out.push(' ');
            }
            out.push_str(&t.surface);
        }
        out
    }

    /// Lemma used inside modifier lists: participles keep their surface form
    /// ("ranked", "labelled"), "n't" becomes "not".
    pub fn mod_lemma(&self, i: usize) -> String {
        let t = &self.toks[i];
        match t.pos {
            Pos::VBN | Pos::VBG if !t.surface.is_empty() => t.lower(),
            _ if t.lemma == "n't" => "not".into(),
            _ => t.lemma.clone(),
        }
    }

    pub fn skip_unparsed(&mut self, r: Range<usize>) {
        self.unparsed.extend(r);
    }

    /// Multi-word marker starting at `i` ("due to", "in order to", ...).
    pub fn marker_at(&self, i: usize, end: usize) -> Option<(String, usize)> {
        for m in markers::multiword_markers().into_iter().chain(["such as", "as well as"]) {
            let words: Vec<&str> = m.split(' ').collect();
            if i + words.len() <= end && words.iter().enumerate().all(|(k, w)| self.lower(i + k) == *w) {
                return Some((m.to_string(), i + words.len()));
            }
        }
        let t = self.toks.get(i)?;
        if matches!(t.pos, Pos::IN | Pos::TO) || (t.pos == Pos::WRB && matches!(t.lemma.as_str(), "when" | "where" | "whenever" | "wherever")) {
            return Some((t.lower(), i + 1));
        }
        None
    }

    // ---- verb groups -------------------------------------------------

    pub fn is_aux_lemma(l: &str) -> bool {
        matches!(l, "be" | "have" | "do")
    }

    /// A token that can begin a finite verb group.
    pub fn is_finite_at(&self, i: usize) -> bool {
        self.pos(i).is_some_and(Pos::is_finite_verb)
    }

    /// End (exclusive) of the verb group starting at `i`.
    pub fn verb_group_end(&self, i: usize, end: usize) -> usize {
        match self.action_at(i, end) {
            Ok((_, e)) => e,
            Err(_) => i + 1,
        }
    }

    /// Parse `{pre-head} head {post-head}` starting at `i`.
    pub fn action_at(&self, i: usize, end: usize) -> Result<(Phrase, usize), ParseError> {
        let mut j = i;
        let mut pre: Vec<String> = Vec::new();
        let mut head: Option<String> = None;
        let mut last_aux: Option<usize> = None;
        while j < end {
            let t = &self.toks[j];
            let next_verbal = self.next_non_adverb(j + 1, end).is_some_and(|k| self.pos(k).is_some_and(Pos::is_verb));
            if t.pos == Pos::MD {
                pre.push(t.lemma.clone());
                j += 1;
            } else if t.pos.is_adverb() {
                // Adverbs only belong to the chain if a verb follows.
                if head.is_none() && self.next_non_adverb(j, end).is_some_and(|k| self.pos(k).is_some_and(|p| p.is_verb() || p == Pos::MD)) {
                    pre.push(self.mod_lemma(j));
                    j += 1;
                } else {
                    break;
                }
            } else if t.pos.is_verb() && Self::is_aux_lemma(&t.lemma) && next_verbal {
                pre.push(t.lemma.clone());
                last_aux = Some(j);
                j += 1;
            } else if t.pos.is_verb()
                && t.lemma == "be"
                && self.pos(j + 1).is_some_and(Pos::is_adjective)
                && self.pos(j + 2) == Some(Pos::TO)
                && self.pos(j + 3) == Some(Pos::VB)
            {
                pre.push("be".into());
                pre.push(self.toks[j + 1].lemma.clone());
                pre.push("to".into());
                j += 3;
            } else if t.pos.is_verb() {
                head = Some(t.lemma.clone());
                j += 1;
                break;
            } else {
                break;
            }
        }
        let head = match head {
            Some(h) => h,
            None => {
                // Bare copula or auxiliary used as the main verb ("is", "has").
                let k = last_aux.filter(|&k| k + 1 == j).ok_or(ParseError::NotAVerbGroup)?;
                pre.pop();
                self.toks[k].lemma.clone()
            }
        };
        while j < end && matches!(self.lemma(j), "not" | "n't" | "never") {
            pre.push(self.mod_lemma(j));
            j += 1;
        }
        let mut post = Vec::new();
        while j < end && (self.pos(j) == Some(Pos::RP) || self.is_post_adverb(j)) {
            post.push(self.mod_lemma(j));
            j += 1;
        }
        let mut p = Phrase::new(PhraseKind::VerbPhrase, pre, head, post).with_span(i..j);
        p.display = self.display(i..j);
        Ok((p, j))
    }

    /// Adverb directly after the head that modifies it ("built well").
    /// Time adverbs stay separate adverbials.
    fn is_post_adverb(&self, j: usize) -> bool {
        let Some(t) = self.toks.get(j) else { return false };
        t.pos.is_adverb() && !markers::TIME_ADVERBS.contains(&t.lemma.as_str())
    }

    pub fn next_non_adverb(&self, mut j: usize, end: usize) -> Option<usize> {
        while j < end && self.pos(j).is_some_and(|p| p.is_adverb()) {
            j += 1;
        }
        (j < end).then_some(j)
    }

    // ---- noun phrases ------------------------------------------------

    pub fn np_start(&self, i: usize, end: usize) -> bool {
        if i >= end {
            return false;
        }
        let t = &self.toks[i];
        match t.pos {
            Pos::DT | Pos::PDT | Pos::PRPS | Pos::CD | Pos::PRP | Pos::EX => true,
            p if p.is_noun() => true,
            p if p.is_adjective() => self.core_np_end(i, end).is_some(),
            Pos::VBN | Pos::VBG => self.core_np_end(i, end).is_some() && self.pos(i + 1).is_some_and(|p| p.is_noun() || p.is_adjective()),
            Pos::RB | Pos::RBS | Pos::RBR => self.pos(i + 1).is_some_and(Pos::is_adjective) && self.core_np_end(i, end).is_some(),
            _ => false,
        }
    }

    /// Returns (head index, end) of the core noun phrase starting at `i`.
    fn core_np_end(&self, i: usize, end: usize) -> Option<(usize, usize)> {
        let t = self.toks.get(i)?;
        if matches!(t.pos, Pos::PRP | Pos::EX) && !(t.lemma == "one" && self.pos(i + 1).is_some_and(|p| p == Pos::CC || p.is_adjective() || p.is_noun())) {
            return Some((i, i + 1));
        }
        let mut j = i;
        let mut head: Option<usize> = None;
        let mut cd_head: Option<usize> = None;
        while j < end {
            let t = &self.toks[j];
            let ok = match t.pos {
                Pos::DT | Pos::PDT | Pos::PRPS => head.is_none() || self.pos(j.wrapping_sub(1)) == Some(Pos::POS),
                Pos::CD => true,
                Pos::PRP => t.lemma == "one" && j == i,
                Pos::POS => head.is_some(),
                Pos::CC => {
                    // "one or more textual documents", "neural and symbolic methods"
                    let before_mod = j > i && self.pos(j - 1).is_some_and(|p| p.is_adjective() || p == Pos::CD || p == Pos::PRP);
                    before_mod && self.pos(j + 1).is_some_and(|p| p.is_adjective() || p.is_noun() || p == Pos::CD)
                }
                p if p.is_noun() => true,
                p if p.is_adjective() => head.is_none() || self.pos(j - 1) == Some(Pos::CC),
                Pos::VBN | Pos::VBG => {
                    // participial pre-modifier
                    (head.is_none() || self.pos(j - 1) == Some(Pos::CC))
                        && self.pos(j + 1).is_some_and(|p| p.is_noun() || p.is_adjective() || p == Pos::VBN)
                }
                Pos::RB | Pos::RBS | Pos::RBR => head.is_none() && self.pos(j + 1).is_some_and(|p| p.is_adjective() || p == Pos::VBN),
                _ => false,
            };
            if !ok {
                break;
            }
            // A noun directly after a head noun continues the compound only
            // when no verb-like reading intervenes; the tagger resolved that.
            if t.pos.is_noun() {
                head = Some(j);
            } else if t.pos == Pos::CD {
                cd_head = Some(j);
            }
            j += 1;
        }
        let h = head.or(cd_head)?;
        let stop = h.max(cd_head.unwrap_or(h)) + 1;
        Some((h, stop.min(j)))
    }

    /// Core noun phrase at `i` without post-modifiers.
    pub fn np_core(&self, i: usize, end: usize) -> Option<(Phrase, usize)> {
        let (h, e) = self.core_np_end(i, end)?;
        let t = &self.toks[h];
        let kind = if t.pos == Pos::PRP || t.pos == Pos::EX { PhraseKind::Pronoun } else { PhraseKind::NounPhrase };
        let mut pre = Vec::new();
        for k in i..e {
            if k == h {
                continue;
            }
            let l = self.mod_lemma(k);
            if !ARTICLES.contains(&l.as_str()) {
                pre.push(l);
            }
        }
        // Trailing numbers after the head ("phase 2") are post-modifiers.
        let (pre, post): (Vec<String>, Vec<String>) = if h + 1 < e {
            let n_after = e - h - 1;
            let split = pre.len() - n_after;
            (pre[..split].to_vec(), pre[split..].to_vec())
        } else {
            (pre, Vec::new())
        };
        let mut p = Phrase::new(kind, pre, t.lemma.clone(), post).with_span(i..e);
        p.display = self.display(i..e);
        Some((p, e))
    }

    /// Noun phrase with post-modifiers (PPs, parentheticals, relative clauses).
    pub fn np(&mut self, i: usize, end: usize, attach: Attach) -> Option<(Phrase, usize)> {
        let (mut p, mut j) = self.np_core(i, end)?;
        if attach == Attach::None {
            return Some((p, j));
        }
        loop {
            if j >= end {
                break;
            }
            // Parenthetical: "(HQA)"
            if self.pos(j) == Some(Pos::LeftParen) {
                let close = (j..end).find(|&k| self.pos(k) == Some(Pos::RightParen)).unwrap_or(end - 1);
                self.skip_unparsed(j..close + 1);
                j = close + 1;
                continue;
            }
            // Relative clause: "that/which/who ..." (optionally after a comma).
            let rel_at = if self.pos(j) == Some(Pos::Comma) && self.is_relative(j + 1, end) {
                Some(j + 1)
            } else if self.is_relative(j, end) {
                Some(j)
            } else {
                None
            };
            if let Some(r) = rel_at {
                let stop = if attach == Attach::All { end } else { self.next_comma(r + 1, end) };
                if r > j {
                    self.skip_unparsed(j..r);
                }
                for k in r..stop {
                    if self.toks[k].pos.is_punct() {
                        self.unparsed.push(k);
                    } else {
                        let l = self.mod_lemma(k);
                        if !ARTICLES.contains(&l.as_str()) {
                            p.post.push(l);
                        }
                    }
                }
                j = stop;
                continue;
            }
            // Prepositional post-modifier.
            if let Some((m, k)) = self.marker_at(j, end) {
                let ok = match attach {
                    Attach::All => true,
                    Attach::NonAdverbial => attaches_to_np(&m),
                    Attach::None => false,
                };
                if ok && m != "to" || (ok && attach == Attach::All) {
                    if let Some(stop) = self.pp_object_end(k, end, attach) {
                        p.post.extend(m.split(' ').map(String::from));
                        for q in k..stop {
                            if self.toks[q].pos.is_punct() {
                                self.unparsed.push(q);
                                continue;
                            }
                            let l = self.mod_lemma(q);
                            if !ARTICLES.contains(&l.as_str()) {
                                p.post.push(l);
                            }
                        }
                        j = stop;
                        continue;
                    }
                }
            }
            // "including X" / "and other X" inside the phrase.
            if self.lower(j) == "including" && self.np_start(j + 1, end) {
                if let Some(stop) = self.pp_object_end(j + 1, end, attach) {
                    p.post.push("including".into());
                    for q in j + 1..stop {
                        if !self.toks[q].pos.is_punct() {
                            let l = self.mod_lemma(q);
                            if !ARTICLES.contains(&l.as_str()) {
                                p.post.push(l);
                            }
                        } else {
                            self.unparsed.push(q);
                        }
                    }
                    j = stop;
                    continue;
                }
            }
            if self.pos(j) == Some(Pos::CC) && self.np_start(j + 1, end) && !self.clause_follows(j + 1, end) {
                if let Some((inner, stop)) = self.np_core(j + 1, end) {
                    p.post.push(self.toks[j].lemma.clone());
                    p.post.extend(inner.pre.iter().cloned());
                    p.post.push(inner.head.clone());
                    p.post.extend(inner.post.iter().cloned());
                    j = stop;
                    continue;
                }
            }
            break;
        }
        p.span = i..j;
        p.display = self.display(i..j);
        // Parenthetical tokens are not part of the display.
        p.display = strip_parens(&p.display);
        Some((p, j))
    }

    /// End of the object of a preposition: a noun phrase (with its own
    /// post-modifiers) or a gerund phrase.
    fn pp_object_end(&mut self, k: usize, end: usize, attach: Attach) -> Option<usize> {
        if self.pos(k) == Some(Pos::VBG) {
            // gerund: take the verb and its noun phrase object
            let mut j = k + 1;
            while self.pos(j).is_some_and(|p| p.is_adverb()) && j < end {
                j += 1;
            }
            if self.np_start(j, end) {
                let saved = self.unparsed.len();
                let r = self.np(j, end, attach).map(|(_, e)| e);
                self.unparsed.truncate(saved);
                if let Some(e) = r {
                    return Some(e);
                }
            }
            return Some(j);
        }
        if !self.np_start(k, end) {
            return None;
        }
        let saved = self.unparsed.len();
        let r = self.np(k, end, attach).map(|(_, e)| e);
        self.unparsed.truncate(saved);
        r
    }

    pub fn is_relative(&self, j: usize, end: usize) -> bool {
        if j >= end {
            return false;
        }
        let t = &self.toks[j];
        let wh = matches!(t.pos, Pos::WDT | Pos::WP | Pos::WPS) && matches!(t.lemma.as_str(), "which" | "who" | "whom" | "whose" | "that");
        let that = t.lemma == "that" && matches!(t.pos, Pos::IN | Pos::WDT);
        (wh || that) && j > 0 && self.pos(j - 1).is_some_and(|p| p.is_noun() || p == Pos::Comma || p == Pos::RightParen)
            && ((j + 1..end).any(|k| self.pos(k).is_some_and(Pos::is_verb)))
    }

    /// Does a subject + finite verb start at `i`?
    pub fn clause_follows(&self, i: usize, end: usize) -> bool {
        let Some((_, e)) = self.core_np_end(i, end) else { return false };
        let mut k = e;
        while k < end && self.pos(k).is_some_and(|p| p.is_adverb()) {
            k += 1;
        }
        self.is_finite_at(k)
    }

    pub fn next_comma(&self, from: usize, end: usize) -> usize {
        let mut depth = 0i32;
        for k in from..end {
            match self.pos(k) {
                Some(Pos::LeftParen) => depth += 1,
                Some(Pos::RightParen) => depth -= 1,
                Some(Pos::Comma) | Some(Pos::Colon) if depth <= 0 => return k,
                _ => {}
            }
        }
        end
    }

    /// Adjective phrase `[RB] JJ [PP]` at `i`.
    pub fn adjp(&mut self, i: usize, end: usize) -> Option<(Phrase, usize)> {
        let mut j = i;
        let mut pre = Vec::new();
        while j < end && self.pos(j).is_some_and(|p| p.is_adverb()) {
            pre.push(self.mod_lemma(j));
            j += 1;
        }
        if !self.pos(j).is_some_and(|p| p.is_adjective() || p == Pos::VBN) || j >= end {
            return None;
        }
        let head = self.toks[j].lemma.clone();
        j += 1;
        // coordinated adjectives: "fast and accurate"
        let mut post = Vec::new();
        while j + 1 < end && self.pos(j) == Some(Pos::CC) && self.pos(j + 1).is_some_and(Pos::is_adjective) {
            post.push(self.toks[j].lemma.clone());
            post.push(self.toks[j + 1].lemma.clone());
            j += 2;
        }
        if let Some((m, k)) = self.marker_at(j, end) {
            if matches!(m.as_str(), "of" | "for" | "to" | "about" | "with" | "in" | "than") && self.np_start(k, end) && self.pos(k) != Some(Pos::VB) {
                if let Some(stop) = self.pp_object_end(k, end, Attach::NonAdverbial) {
                    post.push(m);
                    for q in k..stop {
                        if self.toks[q].pos.is_punct() {
                            self.unparsed.push(q);
                        } else {
                            let l = self.mod_lemma(q);
                            if !ARTICLES.contains(&l.as_str()) {
                                post.push(l);
                            }
                        }
                    }
                    j = stop;
                }
            }
        }
        let mut p = Phrase::new(PhraseKind::AdjectivePhrase, pre, head, post).with_span(i..j);
        p.display = self.display(i..j);
        Some((p, j))
    }
}

fn strip_parens(s: &str) -> String {
    let mut out = String::new();
    let mut depth = 0;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ if depth == 0 => out.push(c),
            _ => {}
        }
    }
    out.split_whitespace().collect::<Vec<_>>().join(" ")
}
