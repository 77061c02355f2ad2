//! Passive → active rewriting for main clauses.

use super::morph;
use super::token::{Pos, TaggedSentence, Token, Voice};

const BE_FORMS: &[&str] = &["is", "are", "was", "were", "be", "been", "being", "am"];

fn np_start(t: &Token) -> bool {
    matches!(t.pos, Pos::DT | Pos::PDT | Pos::PRPS | Pos::CD | Pos::PRP) || t.pos.is_noun() || t.pos.is_adjective()
}

fn np_inner(t: &Token) -> bool {
    np_start(t) || matches!(t.pos, Pos::POS | Pos::VBN | Pos::VBG)
}

/// Length of the noun phrase starting at `i` (no PP continuation).
fn np_len(toks: &[Token], i: usize) -> usize {
    let Some(t) = toks.get(i) else { return 0 };
    if t.pos == Pos::PRP {
        return 1;
    }
    if !np_start(t) {
        return 0;
    }
    let mut j = i;
    while j < toks.len() && np_inner(&toks[j]) && toks[j].pos != Pos::PRP {
        j += 1;
    }
    // The NP must end at a nominal.
    while j > i && !(toks[j - 1].pos.is_noun() || toks[j - 1].pos == Pos::CD) {
        j -= 1;
    }
    j - i
}

/// Subject NP that may carry PP post-modifiers ("the weight of each node").
fn subject_np_len(toks: &[Token], i: usize) -> usize {
    let mut n = np_len(toks, i);
    if n == 0 {
        return 0;
    }
    while i + n + 1 < toks.len() && toks[i + n].pos == Pos::IN && toks[i + n].lemma != "by" {
        let m = np_len(toks, i + n + 1);
        if m == 0 {
            break;
        }
        n += 1 + m;
    }
    n
}

fn swap_case(t: &Token, to_subject: bool) -> Token {
    let pairs = [("me", "i"), ("him", "he"), ("her", "she"), ("us", "we"), ("them", "they")];
    let lower = t.lower();
    let mut out = t.clone();
    for (obj, subj) in pairs {
        let (from, to) = if to_subject { (obj, subj) } else { (subj, obj) };
        if lower == from {
            out.surface = if to == "i" { "I".into() } else { to.into() };
            out.lemma = to.into();
        }
    }
    out
}

fn plural_np(np: &[Token]) -> bool {
    let Some(last) = np.last() else { return false };
    if last.pos == Pos::PRP {
        return matches!(last.lemma.as_str(), "we" | "they" | "you" | "i" | "us" | "them" | "me");
    }
    last.pos.is_plural()
}

/// Rewrite `NP1 [MD] [have] be RB* VBN RB* by NP2 ...` as
/// `NP2 [MD] [have] RB* V NP1 RB* ...`. Agentless passives are flagged and kept.
pub fn normalize_voice(s: &TaggedSentence) -> TaggedSentence {
    if s.voice == Voice::PassiveConverted {
        return s.clone();
    }
    let toks = &s.tokens;
    let mut out = s.clone();
    out.voice = Voice::Active;

    // Skip one leading comma-delimited adverbial.
    let mut start = 0;
    if toks.first().is_some_and(|t| matches!(t.pos, Pos::IN | Pos::RB)) {
        if let Some(c) = toks.iter().position(|t| t.pos == Pos::Comma) {
            start = c + 1;
        }
    }
    let n1 = subject_np_len(toks, start);
    if n1 == 0 {
        return out;
    }
    let mut i = start + n1;
    let modal = toks.get(i).filter(|t| t.pos == Pos::MD).cloned();
    if modal.is_some() {
        i += 1;
    }
    let have = toks.get(i).filter(|t| t.lemma == "have" && t.pos.is_verb()).cloned();
    if have.is_some() {
        i += 1;
    }
    let be_start = i;
    while toks.get(i).is_some_and(|t| BE_FORMS.contains(&t.lower().as_str()) && t.lemma == "be") {
        i += 1;
    }
    if i == be_start {
        return out;
    }
    let be_tok = toks[be_start].clone();
    let pre_adv_start = i;
    while toks.get(i).is_some_and(|t| t.pos.is_adverb()) {
        i += 1;
    }
    let pre_adv: Vec<Token> = toks[pre_adv_start..i].to_vec();
    let Some(vbn) = toks.get(i).filter(|t| t.pos == Pos::VBN).cloned() else {
        return out;
    };
    i += 1;
    let post_adv_start = i;
    while toks.get(i).is_some_and(|t| t.pos.is_adverb()) {
        i += 1;
    }
    let post_adv: Vec<Token> = toks[post_adv_start..i].to_vec();
    let agent = toks.get(i).is_some_and(|t| t.lemma == "by") && np_len(toks, i + 1) > 0;
    if !agent {
        out.voice = Voice::PassiveAgentless;
        return out;
    }
    let n2 = np_len(toks, i + 1);
    let np2: Vec<Token> = toks[i + 1..i + 1 + n2].iter().map(|t| swap_case(t, true)).collect();
    let np1: Vec<Token> = toks[start..start + n1].iter().map(|t| swap_case(t, false)).collect();
    let rest = &toks[i + 1 + n2..];

    let base = vbn.lemma.clone();
    let plural = plural_np(&np2);
    let first_person_sg = np2.last().is_some_and(|t| t.lemma == "i");
    let (verb_surface, verb_pos) = if modal.is_some() {
        if have.is_some() {
            (morph::past_participle(&base), Pos::VBN)
        } else {
            (base.clone(), Pos::VB)
        }
    } else if have.is_some() {
        (morph::past_participle(&base), Pos::VBN)
    } else {
        match be_tok.lower().as_str() {
            "was" | "were" => (morph::past(&base), Pos::VBD),
            _ if plural || first_person_sg => (base.clone(), Pos::VBP),
            _ => (morph::third_person(&base), Pos::VBZ),
        }
    };
    let have = have.map(|h| {
        let past = h.lower() == "had";
        let (surf, pos) = if past {
            ("had", Pos::VBD)
        } else if plural || first_person_sg {
            ("have", Pos::VBP)
        } else {
            ("has", Pos::VBZ)
        };
        let surf = if modal.is_some() { "have" } else { surf };
        let pos = if modal.is_some() { Pos::VB } else { pos };
        Token::new(surf, "have", pos, 0)
    });

    let mut new_toks: Vec<Token> = toks[..start].to_vec();
    let initial = start == 0 && toks[0].surface.chars().next().is_some_and(char::is_uppercase);
    let mut np2 = np2;
    let mut np1 = np1;
    if initial {
        if let Some(t) = np1.first_mut() {
            if !t.pos.is_proper() && t.surface != "I" {
                t.surface = t.surface.to_lowercase();
            }
        }
        if let Some(t) = np2.first_mut() {
            let mut c = t.surface.chars();
            if let Some(f) = c.next() {
                t.surface = f.to_uppercase().collect::<String>() + c.as_str();
            }
        }
    }
    new_toks.extend(np2);
    new_toks.extend(modal);
    new_toks.extend(have);
    new_toks.extend(pre_adv);
    new_toks.push(Token::new(verb_surface, base, verb_pos, 0));
    new_toks.extend(np1);
    new_toks.extend(post_adv);
    new_toks.extend(rest.iter().cloned());
    out.tokens = new_toks;
    out.reindex();
    out.voice = Voice::PassiveConverted;
    out
}
