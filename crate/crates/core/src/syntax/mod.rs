//! Sentence syntax: subject / action / object group / adverbials, with
//! clauses allowed as subjects, objects and adverbials.

mod clause;
mod dump;
pub mod markers;
mod parser;
mod types;

use crate::corpus::{TaggedSentence, Token};

pub use dump::{dump_element, dump_syntax};
pub use parser::{COMPLEMENT_VERBS, DITRANSITIVE_VERBS, LINKING_VERBS};
pub use types::*;

pub(crate) use parser::{Attach, Parser};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("no finite verb found")]
    NoFiniteVerb,
    #[error("tokens do not form a verb group")]
    NotAVerbGroup,
    #[error("empty sentence")]
    Empty,
}

fn finish(sentence_id: crate::corpus::SentenceId, part: u16, p: &mut Parser, start: usize, end: usize) -> Result<SentenceSyntax, ParseError> {
    let (subject, action, object, adverbials) = clause::parse_part(p, start, end)?;
    let negated = action.as_ref().and_then(Element::as_phrase).is_some_and(Phrase::is_negated);
    let mut unparsed: Vec<usize> = std::mem::take(&mut p.unparsed).into_iter().filter(|k| (start..end).contains(k)).collect();
    unparsed.sort_unstable();
    unparsed.dedup();
    Ok(SentenceSyntax {
        sentence_id,
        part,
        subject,
        action,
        object,
        adverbials,
        polarity: if negated { Polarity::Negative } else { Polarity::Affirmative },
        unparsed,
    })
}

/// Parse a whole sentence as a single clause.
pub fn parse_sentence(s: &TaggedSentence) -> Result<SentenceSyntax, ParseError> {
    if s.tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser::new(&s.tokens);
    finish(s.sentence_id, 0, &mut p, 0, s.tokens.len())
}

/// Parse a sentence, splitting coordinated main clauses ("X does A and Y does
/// B") into numbered parts. The coordinator and a comma before it are
/// recorded as unparsed in the preceding part.
pub fn parse_sentence_parts(s: &TaggedSentence) -> Result<Vec<SentenceSyntax>, ParseError> {
    if s.tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let probe = Parser::new(&s.tokens);
    let splits = clause::coordination_splits(&probe, 0, s.tokens.len());
    if splits.is_empty() {
        return parse_sentence(s).map(|x| vec![x]);
    }
    let mut bounds = vec![0];
    bounds.extend(splits.iter().map(|c| c + 1));
    let mut out = Vec::new();
    for (n, &start) in bounds.iter().enumerate() {
        let end = bounds.get(n + 1).copied().unwrap_or(s.tokens.len());
        let mut p = Parser::new(&s.tokens);
        // The coordinator (and a comma right before it) belong to no part.
        let mut body_end = end;
        if n + 1 < bounds.len() {
            body_end -= 1;
            p.unparsed.push(body_end);
            if body_end > start && s.tokens[body_end - 1].pos == crate::corpus::Pos::Comma {
                body_end -= 1;
                p.unparsed.push(body_end);
            }
        }
        let mut part = finish(s.sentence_id, n as u16, &mut p, start, body_end)?;
        part.unparsed.extend(body_end..end);
        part.unparsed.sort_unstable();
        part.unparsed.dedup();
        out.push(part);
    }
    Ok(out)
}

/// Parse a verb group on its own ("can be built well").
pub fn parse_action(tokens: &[Token]) -> Result<Phrase, ParseError> {
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let (p, _) = Parser::new(tokens).action_at(0, tokens.len())?;
    Ok(p)
}

/// Parse the object group that follows a verb with lemma `head`.
pub fn parse_object(tokens: &[Token], head: &str) -> Option<ObjectGroup> {
    let mut p = Parser::new(tokens);
    p.object(0, tokens.len(), head).0
}

/// Classify a stand-alone adverbial span ("in China", "because it rains").
pub fn classify_adverbial(tokens: &[Token]) -> Option<Adverbial> {
    if tokens.is_empty() {
        return None;
    }
    let mut p = Parser::new(tokens);
    p.adverbial_at(0, tokens.len()).map(|(a, _)| a)
}

/// Parse a stand-alone fragment: a clause introduced by a lead word or a
/// verb ("what X can do", "to solve problems", "using LexRank"), a
/// prepositional phrase ("based on LexRank") or a noun phrase.
pub fn parse_fragment(tokens: &[Token]) -> Option<Element> {
    use crate::corpus::Pos;
    let end = tokens.len();
    if end == 0 {
        return None;
    }
    let mut p = Parser::new(tokens);
    let first = tokens[0].pos;
    let verb_first = p.next_non_adverb(0, end).is_some_and(|k| p.pos(k).is_some_and(Pos::is_verb));
    if first == Pos::TO && p.pos(1) == Some(Pos::VB) {
        return p.clause(Some("to".into()), 0, 1, end, false).map(Element::Clause);
    }
    if first.is_wh() || (first == Pos::IN && markers::is_clause_marker(&tokens[0].lower()) && (1..end).any(|k| p.is_finite_at(k))) {
        return p.clause(Some(tokens[0].lower()), 0, 1, end, true).map(Element::Clause);
    }
    let multiword = p.marker_at(0, end).is_some_and(|(m, _)| m.contains(' '));
    if verb_first && !multiword {
        return p.clause(None, 0, 0, end, false).map(Element::Clause);
    }
    if !p.np_start(0, end) || multiword {
        if let Some((m, k)) = p.marker_at(0, end) {
            if let Some((np, e)) = p.np(k, end, Attach::All) {
                let mut pp = Phrase::prep(&m, &np).with_span(0..e);
                pp.display = format!("{} {}", p.display(0..k), np.display);
                return Some(pp.into());
            }
        }
    }
    p.np(0, end, Attach::All).map(|(np, _)| np.into())
}

#[cfg(test)]
mod tests;
