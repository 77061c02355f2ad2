//! Sentence and clause structure on top of the phrase-level parser.

use crate::corpus::Pos;

use super::markers::{self, SpanFacts};
use super::parser::{Attach, Parser, COMPLEMENT_VERBS, DITRANSITIVE_VERBS, LINKING_VERBS};
use super::types::*;
use super::ParseError;

/// Tokens that close off a clause when looking for a second finite verb.
fn is_barrier(p: &Parser, k: usize) -> bool {
    let Some(pos) = p.pos(k) else { return true };
    if matches!(pos, Pos::CC | Pos::Comma | Pos::Colon | Pos::WDT | Pos::WP | Pos::WPS | Pos::WRB) {
        return true;
    }
    pos == Pos::IN
        && matches!(
            p.lemma(k),
            "that" | "because" | "due" | "owing" | "since" | "as" | "if" | "when" | "while" | "although" | "though"
                | "whereas" | "unless" | "until" | "once" | "after" | "before" | "whether" | "so" | "lest"
        )
}

pub(crate) struct Complements {
    pub object: Option<ObjectGroup>,
    pub adverbials: Vec<Adverbial>,
}

impl<'a> Parser<'a> {
    /// Position of the main verb group in `[i, end)`, skipping verb groups
    /// inside relative clauses and inside a clausal subject.
    pub fn find_main_verb(&self, i: usize, end: usize, clausal_subject: bool) -> Option<usize> {
        let mut j = i;
        let mut pending_rel = false;
        let mut skip_first = clausal_subject;
        while j < end {
            if self.is_relative(j, end) {
                pending_rel = true;
                j += 1;
                continue;
            }
            if self.is_finite_at(j) {
                let g_end = self.verb_group_end(j, end);
                if pending_rel || skip_first {
                    pending_rel = false;
                    skip_first = false;
                    j = g_end;
                    continue;
                }
                // A second finite group with no barrier in between means the
                // first one belongs to a subject clause with its lead omitted.
                let mut k = g_end;
                while k < end && !is_barrier(self, k) {
                    if self.is_finite_at(k) && j > i {
                        return Some(k);
                    }
                    k += 1;
                }
                return Some(j);
            }
            j += 1;
        }
        None
    }

    /// Subject element for the region `[i, v)`.
    pub fn subject(&mut self, i: usize, v: usize) -> Option<Element> {
        if i >= v {
            return None;
        }
        let t = &self.toks[i];
        if t.pos == Pos::TO && self.pos(i + 1) == Some(Pos::VB) {
            return self.clause(Some("to".into()), i, i + 1, v, false).map(Element::Clause);
        }
        if t.pos == Pos::VBG && !self.np_start(i, v) {
            return self.clause(None, i, i, v, false).map(Element::Clause);
        }
        if self.opens_noun_clause(i) {
            return self.clause(Some(t.lemma.clone()), i, i + 1, v, true).map(Element::Clause);
        }
        if (i..v).any(|k| self.is_finite_at(k)) && !(i..v).any(|k| self.is_relative(k, v)) {
            return self.clause(None, i, i, v, true).map(Element::Clause);
        }
        match self.np(i, v, Attach::All) {
            Some((p, e)) => {
                for k in e..v {
                    self.unparsed.push(k);
                }
                Some(Element::Phrase(p))
            }
            None => {
                self.skip_unparsed(i..v);
                None
            }
        }
    }

    fn opens_noun_clause(&self, i: usize) -> bool {
        let t = &self.toks[i];
        (t.pos == Pos::IN && matches!(t.lemma.as_str(), "that" | "whether" | "if"))
            || (t.pos.is_wh() && !matches!(self.pos(i + 1), Some(Pos::Period) | None))
    }

    /// Parse a clause whose body is `[body, end)`; `start` is the first token
    /// of the clause including its lead word.
    pub fn clause(&mut self, lead: Option<String>, start: usize, body: usize, end: usize, with_subject: bool) -> Option<Clause> {
        if body >= end {
            return None;
        }
        let verb_first = self.pos(body).is_some_and(|p| p.is_verb()) || (self.pos(body).is_some_and(|p| p.is_adverb()) && self.next_non_adverb(body, end).is_some_and(|k| self.pos(k).is_some_and(Pos::is_verb)));
        let (subject, v) = if verb_first || !with_subject {
            (None, Some(body))
        } else {
            match self.find_main_verb(body, end, false) {
                Some(v) => (self.subject(body, v), Some(v)),
                None => (None, None),
            }
        };
        let Some(v) = v else {
            // No verb: a nominal after the lead ("because of the rain").
            let (p, e) = self.np(body, end, Attach::NonAdverbial)?;
            self.skip_unparsed(e..end);
            return Some(Clause { lead, subject: Some(Box::new(p.into())), action: None, object: None, adverbials: vec![], span: start..end });
        };
        let (action, next) = match self.action_at(v, end) {
            Ok(r) => r,
            Err(_) => {
                self.skip_unparsed(v..end);
                return subject.map(|s| Clause { lead, subject: Some(Box::new(s)), action: None, object: None, adverbials: vec![], span: start..end });
            }
        };
        let c = self.complements(next, end, &action.head);
        Some(Clause {
            lead,
            subject: subject.map(Box::new),
            action: Some(action),
            object: c.object.map(|o| Box::new(o.direct)),
            adverbials: c.adverbials,
            span: start..end,
        })
    }

    /// Object group and trailing adverbials after the verb group.
    pub fn complements(&mut self, j: usize, end: usize, head: &str) -> Complements {
        let (object, j) = self.object(j, end, head);
        let adverbials = self.trailing_adverbials(j, end);
        Complements { object, adverbials }
    }

    pub fn object(&mut self, j: usize, end: usize, head: &str) -> (Option<ObjectGroup>, usize) {
        if j >= end {
            return (None, j);
        }
        let t = &self.toks[j];
        // Linking verb + adjective phrase.
        if LINKING_VERBS.contains(&head) && (t.pos.is_adjective() || (t.pos.is_adverb() && self.pos(j + 1).is_some_and(Pos::is_adjective))) && !self.np_start(j, end) {
            if let Some((a, e)) = self.adjp(j, end) {
                return (Some(ObjectGroup::direct(a.into())), e);
            }
        }
        // Clausal object: "show that ...", "know whether ...".
        if (t.pos == Pos::IN && matches!(t.lemma.as_str(), "that" | "whether")) || (t.pos.is_wh() && t.lemma != "where" && t.lemma != "when") {
            let stop = end;
            if let Some(c) = self.clause(Some(t.lemma.clone()), j, j + 1, stop, true) {
                return (Some(ObjectGroup::direct(c.into())), stop);
            }
        }
        // Infinitive object: "need to rank sentences", "to X is to Y".
        if t.pos == Pos::TO && self.pos(j + 1) == Some(Pos::VB) && (head == "be" || !LINKING_VERBS.contains(&head)) {
            let stop = self.next_comma(j, end);
            if let Some(c) = self.clause(Some("to".into()), j, j + 1, stop, false) {
                return (Some(ObjectGroup::direct(c.into())), stop);
            }
        }
        // Gerund object: "enjoys reading books".
        if t.pos == Pos::VBG && !markers::METHOD_VERBS.contains(&t.lower().as_str()) && !self.np_start(j, end) {
            let stop = self.next_comma(j, end);
            if let Some(c) = self.clause(None, j, j, stop, false) {
                return (Some(ObjectGroup::direct(c.into())), stop);
            }
        }
        if !self.np_start(j, end) || self.is_time_np(j, end) {
            return (None, j);
        }
        let Some((np1, e1)) = self.np(j, end, Attach::NonAdverbial) else { return (None, j) };
        let mut group = ObjectGroup::direct(np1.clone().into());
        // NP NP
        if self.np_start(e1, end) && !self.is_time_np(e1, end) && self.pos(e1) != Some(Pos::CD) {
            if let Some((np2, e2)) = self.np(e1, end, Attach::NonAdverbial) {
                if COMPLEMENT_VERBS.contains(&head) {
                    group.complement = Some(np2.into());
                    group.indirect_position = IndirectPosition::None;
                } else {
                    group.direct = np2.into();
                    group.indirect = Some(np1.into());
                    group.indirect_position = IndirectPosition::BeforeDirect;
                }
                return (Some(group), e2);
            }
        }
        // NP AdjP complement
        if COMPLEMENT_VERBS.contains(&head) && self.pos(e1).is_some_and(|p| p.is_adjective()) {
            if let Some((a, e2)) = self.adjp(e1, end) {
                group.complement = Some(a.into());
                return (Some(group), e2);
            }
        }
        // NP prep NP
        let prep = self.lower(e1);
        let prep_ok = prep == "to" || (matches!(prep.as_str(), "for" | "at" | "on") && DITRANSITIVE_VERBS.contains(&head));
        if prep_ok && self.pos(e1 + 1) != Some(Pos::VB) && self.np_start(e1 + 1, end) && !self.is_time_np(e1 + 1, end) {
            if let Some((np2, e2)) = self.np(e1 + 1, end, Attach::NonAdverbial) {
                group.indirect = Some(np2.into());
                group.indirect_position = IndirectPosition::AfterPreposition;
                group.preposition = Some(prep);
                return (Some(group), e2);
            }
        }
        (Some(group), e1)
    }

    fn is_time_np(&self, j: usize, end: usize) -> bool {
        match self.np_core(j, end) {
            Some((p, _)) => markers::is_time_noun(&p.head) && (p.pre.iter().any(|m| matches!(m.as_str(), "next" | "last" | "this" | "every" | "each" | "previous" | "following")) || markers::is_year(&p.head)),
            None => false,
        }
    }

    pub fn trailing_adverbials(&mut self, mut j: usize, end: usize) -> Vec<Adverbial> {
        let mut out = Vec::new();
        while j < end {
            let t = &self.toks[j];
            if t.pos.is_punct() {
                if t.pos == Pos::LeftParen {
                    let close = (j..end).find(|&k| self.pos(k) == Some(Pos::RightParen)).unwrap_or(end - 1);
                    self.skip_unparsed(j..close + 1);
                    j = close + 1;
                } else {
                    self.unparsed.push(j);
                    j += 1;
                }
                continue;
            }
            match self.adverbial_at(j, end) {
                Some((a, e)) => {
                    out.push(a);
                    j = e;
                }
                None => {
                    self.unparsed.push(j);
                    j += 1;
                }
            }
        }
        out
    }

    /// One adverbial starting at `j`, ending at or before `end`.
    pub fn adverbial_at(&mut self, j: usize, end: usize) -> Option<(Adverbial, usize)> {
        let t = &self.toks[j];
        // Adverb phrase
        if t.pos.is_adverb() && !self.np_start(j, end) {
            let mut e = j + 1;
            let mut pre = Vec::new();
            while e < end && self.pos(e).is_some_and(|p| p.is_adverb()) {
                pre.push(self.mod_lemma(e - 1));
                e += 1;
            }
            let head = self.toks[e - 1].lemma.clone();
            let mut p = Phrase::new(PhraseKind::AdverbPhrase, pre, head.clone(), vec![]).with_span(j..e);
            p.display = self.display(j..e);
            let facts = SpanFacts { adverb: Some(&head), ..Default::default() };
            let (kind, marker) = markers::classify(&facts);
            return Some((Adverbial { kind, content: p.into(), marker }, e));
        }
        // Method verb phrase: "using clustering algorithm"
        if t.pos == Pos::VBG && markers::METHOD_VERBS.contains(&t.lower().as_str()) {
            let stop = self.next_comma(j, end);
            let verb = self.lower(j);
            let c = self.clause(None, j, j, stop, false)?;
            let facts = SpanFacts { method_verb: Some(&verb), ..Default::default() };
            let (kind, marker) = markers::classify(&facts);
            return Some((Adverbial { kind, content: c.into(), marker }, stop));
        }
        // Time noun phrase without a preposition: "next week", "1911"
        if self.np_start(j, end) {
            let (p, e) = self.np(j, end, Attach::NonAdverbial)?;
            let facts = SpanFacts { np_head: Some(&p.head), ..Default::default() };
            let (kind, marker) = markers::classify(&facts);
            return Some((Adverbial { kind, content: p.into(), marker }, e));
        }
        let (m, k) = self.marker_at(j, end)?;
        let seg_end = self.next_comma(k, end);
        let finite = (k..seg_end).any(|q| self.is_finite_at(q));
        let lead = Some(m.clone());
        // Subordinate clause
        if finite && (markers::is_clause_marker(&m) || matches!(m.as_str(), "due to" | "owing to")) {
            let c = self.clause(lead, j, k, seg_end, true)?;
            let subj_head = c.subject.as_ref().and_then(|s| s.head().map(String::from));
            let facts = SpanFacts { marker: Some(&m), finite: true, np_head: subj_head.as_deref(), ..Default::default() };
            let (kind, marker) = markers::classify(&facts);
            return Some((Adverbial { kind, content: c.into(), marker }, seg_end));
        }
        // Infinitive of purpose
        if (m == "to" || m == "in order to" || m == "so as to") && self.pos(k).is_some_and(|p| p == Pos::VB || p.is_adverb()) {
            let c = self.clause(lead, j, k, seg_end, false)?;
            let facts = SpanFacts { marker: Some(&m), infinitive: true, ..Default::default() };
            let (kind, marker) = markers::classify(&facts);
            return Some((Adverbial { kind, content: c.into(), marker }, seg_end));
        }
        // Preposition + gerund: "by selecting top ranked sentences"
        if self.pos(k) == Some(Pos::VBG) {
            let c = self.clause(lead, j, k, seg_end, false)?;
            let facts = SpanFacts { marker: Some(&m), gerund: true, ..Default::default() };
            let (kind, marker) = markers::classify(&facts);
            return Some((Adverbial { kind, content: c.into(), marker }, seg_end));
        }
        // Preposition + noun phrase
        if self.np_start(k, end) {
            let (np, e) = self.np(k, end, Attach::NonAdverbial)?;
            let proper = self.toks[np.span.clone()].iter().any(|t| t.pos.is_proper() && t.lemma == np.head);
            let mut pp = Phrase::prep(&m, &np).with_span(j..e);
            pp.display = format!("{} {}", self.display(j..k), np.display);
            let facts = SpanFacts { marker: Some(&m), np_head: Some(&np.head), np_head_proper: proper, ..Default::default() };
            let (kind, marker) = markers::classify(&facts);
            return Some((Adverbial { kind, content: pp.into(), marker }, e));
        }
        None
    }

    /// Leading comma-delimited adverbials before the subject.
    pub fn leading_adverbials(&mut self, mut i: usize, end: usize) -> (Vec<Adverbial>, usize) {
        let mut out = Vec::new();
        loop {
            if i >= end {
                break;
            }
            let t = &self.toks[i];
            let opener = matches!(t.pos, Pos::IN | Pos::TO | Pos::RB | Pos::WRB | Pos::CD) || (t.pos == Pos::VBG && markers::METHOD_VERBS.contains(&t.lower().as_str())) || self.is_time_np(i, end);
            if !opener || (t.pos == Pos::WRB && !matches!(t.lemma.as_str(), "when" | "where" | "whenever" | "wherever")) {
                break;
            }
            let c = self.next_comma(i, end);
            if c >= end || self.toks[c].pos != Pos::Comma {
                break;
            }
            let saved = self.unparsed.len();
            match self.adverbial_at(i, c) {
                Some((a, e)) => {
                    out.push(a);
                    for k in e..c {
                        self.unparsed.push(k);
                    }
                    self.unparsed.push(c);
                    i = c + 1;
                }
                None => {
                    self.unparsed.truncate(saved);
                    break;
                }
            }
        }
        (out, i)
    }
}

/// Parse one clause-level part `[start, end)` of a sentence.
pub(crate) fn parse_part(p: &mut Parser, start: usize, mut end: usize) -> Result<(Option<Element>, Option<Element>, Option<ObjectGroup>, Vec<Adverbial>), ParseError> {
    while end > start && matches!(p.pos(end - 1), Some(Pos::Period | Pos::Quote | Pos::Colon)) {
        end -= 1;
        p.unparsed.push(end);
    }
    let (mut adverbials, i) = p.leading_adverbials(start, end);
    if i >= end {
        return Err(ParseError::NoFiniteVerb);
    }
    // Imperative: sentence starts with a base-form verb.
    let (subject, v) = if p.pos(i) == Some(Pos::VB) {
        (None, i)
    } else {
        let clausal = p.opens_noun_clause(i);
        let v = p.find_main_verb(i, end, clausal).ok_or(ParseError::NoFiniteVerb)?;
        (p.subject(i, v), v)
    };
    let (action, next) = p.action_at(v, end)?;
    let c = p.complements(next, end, &action.head.clone());
    adverbials.extend(c.adverbials);
    Ok((subject, Some(Element::Phrase(action)), c.object, adverbials))
}

/// Split points of sentence-level coordination: a top-level "and"/"but"
/// followed by a subject and a finite verb, with a finite verb before it.
pub(crate) fn coordination_splits(p: &Parser, start: usize, end: usize) -> Vec<usize> {
    let mut splits = Vec::new();
    let mut depth = 0i32;
    let mut seg_start = start;
    for c in start..end {
        match p.pos(c) {
            Some(Pos::LeftParen) => depth += 1,
            Some(Pos::RightParen) => depth -= 1,
            Some(Pos::CC) if depth <= 0 && matches!(p.lemma(c), "and" | "but") => {
                let before = (seg_start..c).any(|k| p.is_finite_at(k));
                if before && p.np_start(c + 1, end) && p.clause_follows(c + 1, end) {
                    splits.push(c);
                    seg_start = c + 1;
                }
            }
            _ => {}
        }
    }
    splits
}
