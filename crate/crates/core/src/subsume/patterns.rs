//! Lexical patterns that state a subclass relation inside one sentence.

use crate::corpus::{Pos, TaggedSentence};
use crate::syntax::{Element, Parser, Phrase, PhraseKind, SentenceSyntax};

use super::{EdgeSource, Harvest, SubclassEdge};

fn harvest(child: Element, parent: Element, pattern: &'static str, sid: u32) -> Option<Harvest> {
    let (ck, pk) = (child.key(), parent.key());
    if ck == pk || ck.is_empty() || pk.is_empty() {
        return None;
    }
    Some(Harvest { edge: SubclassEdge::new(ck, pk, EdgeSource::SyntacticPattern, Some(sid)), child, parent, pattern })
}

fn is_np(e: &Element) -> bool {
    e.as_phrase().is_some_and(|p| p.kind == PhraseKind::NounPhrase)
}

/// Longest core noun phrase ending exactly at `end`.
fn np_ending_at(p: &Parser, end: usize) -> Option<Phrase> {
    (end.saturating_sub(8)..end).find_map(|s| {
        if !p.np_start(s, end) {
            return None;
        }
        p.np_core(s, end).filter(|(np, e)| *e == end && np.kind == PhraseKind::NounPhrase).map(|(np, _)| np)
    })
}

/// Core noun phrases in a list "A, B and C" starting at `i`.
fn np_list(p: &Parser, mut i: usize, end: usize) -> Vec<Phrase> {
    let mut out = Vec::new();
    while let Some((np, e)) = p.np_core(i, end).filter(|_| p.np_start(i, end)) {
        if np.kind != PhraseKind::NounPhrase {
            break;
        }
        out.push(np);
        let mut j = e;
        if p.pos(j) == Some(Pos::Comma) {
            j += 1;
        }
        if matches!(p.lemma(j), "and" | "or") && p.lemma(j + 1) != "other" {
            j += 1;
        }
        if j == e {
            break;
        }
        i = j;
    }
    out
}

/// Subclass edges stated by the sentence: "X is a/an Y", "Y such as X",
/// "Y including X", "X and/or other Y", "Ys are Xs that ...", and
/// "to V1 is to V2".
pub fn scan_syntactic_patterns(s: &TaggedSentence, parsed: &SentenceSyntax) -> Vec<Harvest> {
    let sid = s.sentence_id;
    let toks = &s.tokens;
    let mut out = Vec::new();
    let copula = parsed.action_phrase().is_some_and(|a| a.head == "be" && !a.is_negated());
    if let (true, Some(subj), Some(obj)) = (copula, &parsed.subject, &parsed.object) {
        let direct = &obj.direct;
        let first = toks.get(direct.span().start).map(|t| t.lower()).unwrap_or_default();
        let verb = parsed.action.as_ref().and_then(|a| toks.get(a.span().start)).map(|t| t.lower()).unwrap_or_default();
        if is_np(subj) && is_np(direct) && (first == "a" || first == "an") {
            out.extend(harvest(subj.clone(), direct.clone(), "is-a", sid));
        } else if is_np(subj) && is_np(direct) && verb == "are" {
            // "Ys are Xs that ...": read literally, the object is the subclass.
            let p = Parser::new(toks);
            let r = direct.span();
            if let Some((core, e)) = p.np_core(r.start, r.end) {
                if p.lemma(e) == "that" || p.lemma(e) == "which" {
                    out.extend(harvest(core.into(), subj.clone(), "are-that", sid));
                }
            }
        }
        if let (Element::Clause(a), Element::Clause(b)) = (subj, direct) {
            if a.lead.as_deref() == Some("to") && b.lead.as_deref() == Some("to") {
                out.extend(harvest(subj.clone(), direct.clone(), "to-is-to", sid));
            }
        }
    }
    if parsed.part == 0 {
        let p = Parser::new(toks);
        let n = toks.len();
        for i in 0..n {
            let w = toks[i].lower();
            let (hyper_end, list_start, name) = if w == "such" && p.lower(i + 1) == "as" {
                (i, i + 2, "such-as")
            } else if w == "including" {
                (i, i + 1, "including")
            } else {
                (0, 0, "")
            };
            if list_start > 0 {
                if let Some(hyper) = np_ending_at(&p, hyper_end) {
                    for hypon in np_list(&p, list_start, n) {
                        out.extend(harvest(hypon.into(), hyper.clone().into(), name, sid));
                    }
                }
            }
            if matches!(w.as_str(), "and" | "or") && p.lower(i + 1) == "other" {
                if let (Some(hypon), Some((hyper, _))) = (np_ending_at(&p, i), p.np_core(i + 2, n)) {
                    if hyper.kind == PhraseKind::NounPhrase {
                        out.extend(harvest(hypon.into(), hyper.into(), "and-other", sid));
                    }
                }
            }
        }
    }
    out
}
