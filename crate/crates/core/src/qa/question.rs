//! Question grammars: classify by the leading word, then un-invert the
//! question into a declarative token sequence and parse that.

use crate::corpus::{normalize_voice, Pos, TaggedSentence, Token};
use crate::syntax::{parse_fragment, parse_sentence, Element};

use super::{QaError, QuestionKind, QuestionSyntax, WhAdverb, GAP};

const NOMINAL_WH: &[&str] = &["what", "who", "whom", "which", "whose"];

fn is_aux(t: &Token) -> bool {
    t.pos == Pos::MD || (t.pos.is_verb() && matches!(t.lemma.as_str(), "do" | "be" | "have"))
}

fn is_negation(t: &Token) -> bool {
    t.pos == Pos::RB && matches!(t.lower().as_str(), "not" | "n't" | "never")
}

/// End of a noun-phrase chunk starting at `i` (may equal `i`).
fn np_chunk(toks: &[Token], i: usize) -> usize {
    let mut j = i;
    while j < toks.len() {
        let p = toks[j].pos;
        let modifier_verb = matches!(p, Pos::VBN | Pos::VBG) && toks.get(j + 1).is_some_and(|n| n.pos.is_noun() || n.pos.is_adjective());
        if matches!(p, Pos::DT | Pos::PRPS | Pos::CD | Pos::POS | Pos::PRP) || p.is_adjective() || p.is_noun() || modifier_verb {
            j += 1;
        } else {
            break;
        }
    }
    j
}

fn gap_token() -> Token {
    Token::new(GAP, GAP, Pos::PRP, 0)
}

/// Split the inverted part "AUX SUBJ VERB REST" into subject tokens and
/// everything from the main verb on.
fn uninvert(toks: &[Token], k: usize) -> (Vec<Token>, Vec<Token>) {
    let m = (k..toks.len())
        .find(|&m| (toks[m].pos.is_verb() && !(matches!(toks[m].pos, Pos::VBN | Pos::VBG) && m + 1 < toks.len() && toks[m + 1].pos.is_noun())) || is_negation(&toks[m]))
        .unwrap_or_else(|| np_chunk(toks, k).max(k));
    (toks[k..m].to_vec(), toks[m..].to_vec())
}

/// Place the object gap: after a trailing preposition, else after the
/// verb's first noun phrase, else right after the verb.
fn insert_gap(rest: &mut Vec<Token>, gap: Vec<Token>) {
    if rest.last().is_some_and(|t| matches!(t.pos, Pos::IN | Pos::TO)) {
        rest.extend(gap);
        return;
    }
    let verb = rest.iter().position(|t| t.pos.is_verb() && !is_aux(t)).or_else(|| rest.iter().position(|t| t.pos.is_verb()));
    let mut at = verb.map_or(0, |v| v + 1);
    while at < rest.len() && (rest[at].pos == Pos::RP) {
        at += 1;
    }
    let np_end = np_chunk(rest, at);
    if np_end > at {
        at = np_end;
    }
    rest.splice(at..at, gap);
}

pub fn parse_question(s: &TaggedSentence) -> Result<QuestionSyntax, QaError> {
    let mut toks: Vec<Token> = s.tokens.clone();
    let has_qmark = toks.last().is_some_and(|t| t.surface == "?");
    while toks.last().is_some_and(|t| t.pos.is_punct()) {
        toks.pop();
    }
    let not_q = || QaError::NotAQuestion(s.surface());
    if toks.is_empty() {
        return Err(not_q());
    }
    // "In search engine, what ...": a comma-delimited leading adverbial.
    let mut prefix: Vec<Token> = Vec::new();
    if let Some(c) = toks.iter().position(|t| t.pos == Pos::Comma) {
        if c > 0 && toks.get(c + 1).is_some_and(|t| t.pos.is_wh() || is_aux(t)) && !toks[0].pos.is_wh() && !is_aux(&toks[0]) {
            prefix = toks[..c + 1].to_vec();
            toks.drain(..c + 1);
        }
    }
    let first = &toks[0];
    let word = first.lower();
    let mut body: Vec<Token>;
    let kind: Option<QuestionKind>;
    let mut gap_type: Option<Vec<Token>> = None;

    let nominal = NOMINAL_WH.contains(&word.as_str()) || (word == "how" && toks.get(1).is_some_and(|t| matches!(t.lower().as_str(), "many" | "much")));
    if nominal {
        let i = if word == "how" { 2 } else { 1 };
        let j = np_chunk(&toks, i);
        let typed = toks[i..j].to_vec();
        let gap = if typed.iter().any(|t| t.pos.is_noun()) { typed.clone() } else { vec![gap_token()] };
        if j > i && gap[0].surface != GAP {
            gap_type = Some(gap.clone());
        }
        let Some(next) = toks.get(j) else { return Err(not_q()) };
        if is_aux(next) && toks.get(j + 1).is_some_and(|t| !(t.pos.is_verb() || is_negation(t))) {
            // object question: un-invert "AUX SUBJ VERB REST"
            let (subj, mut rest) = uninvert(&toks, j + 1);
            if subj.is_empty() {
                return Err(not_q());
            }
            insert_gap(&mut rest, gap);
            body = subj;
            body.push(toks[j].clone());
            body.extend(rest);
        } else if next.pos.is_verb() || next.pos == Pos::MD {
            body = gap;
            body.extend(toks[j..].iter().cloned());
        } else {
            return Err(not_q());
        }
        kind = None; // decided by where the gap lands
    } else if let Some(wh) = WhAdverb::from_word(&word) {
        let Some(aux) = toks.get(1).filter(|t| is_aux(t)) else { return Err(not_q()) };
        let (subj, rest) = uninvert(&toks, 2);
        if subj.is_empty() {
            return Err(not_q());
        }
        body = subj;
        body.push(aux.clone());
        body.extend(rest);
        kind = Some(QuestionKind::AboutAdverbial(wh));
    } else if is_aux(first) && (has_qmark || first.pos == Pos::MD || first.pos.is_verb()) && toks.len() > 1 {
        if !has_qmark {
            return Err(not_q());
        }
        let (subj, rest) = uninvert(&toks, 1);
        if subj.is_empty() {
            return Err(not_q());
        }
        body = subj;
        body.push(first.clone());
        body.extend(rest);
        kind = Some(QuestionKind::General);
    } else {
        return Err(not_q());
    }

    let mut tokens = prefix;
    tokens.extend(body);
    let mut decl = TaggedSentence::new(s.sentence_id, s.doc_id.clone(), tokens);
    decl.reindex();
    let decl = normalize_voice(&decl);
    let syn = parse_sentence(&decl).map_err(|_| not_q())?;

    let gap_key = match &gap_type {
        Some(t) => Some(type_key(t)),
        None if kind.is_none() => Some(GAP.to_string()),
        None => None,
    };
    let kind = match kind {
        Some(k) => k,
        None => {
            let key = gap_key.clone().expect("nominal questions have a gap");
            let hit = |e: Option<&Element>| e.is_some_and(|e| e.key() == key);
            let o = syn.object.as_ref();
            if hit(syn.subject.as_ref()) {
                QuestionKind::AboutSubject
            } else if hit(o.map(|o| &o.direct)) {
                QuestionKind::AboutDirectObject
            } else if hit(o.and_then(|o| o.indirect.as_ref())) {
                QuestionKind::AboutIndirectObject
            } else if hit(o.and_then(|o| o.complement.as_ref())) {
                QuestionKind::AboutObjectComplement
            } else {
                return Err(not_q());
            }
        }
    };
    Ok(QuestionSyntax {
        kind,
        interrogative: if word == "how" && nominal { "how many".into() } else if kind == QuestionKind::General { first.lemma.clone() } else { word },
        subject: syn.subject,
        action: syn.action,
        object: syn.object,
        adverbials: syn.adverbials,
        polarity: syn.polarity,
    })
}

/// Key of the typed gap ("which node" → "node") as the parser sees it.
fn type_key(toks: &[Token]) -> String {
    let mut t = toks.to_vec();
    for (i, x) in t.iter_mut().enumerate() {
        x.index = i;
    }
    parse_fragment(&t).map_or_else(|| GAP.to_string(), |e| e.key())
}
