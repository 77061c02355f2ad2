//! Indented text rendering of parsed sentences, one constituent per line.

use std::fmt::Write;

use super::types::*;

fn kind_label(k: PhraseKind) -> &'static str {
    match k {
        PhraseKind::NounPhrase => "NP",
        PhraseKind::VerbPhrase => "VP",
        PhraseKind::AdjectivePhrase => "AdjP",
        PhraseKind::AdverbPhrase => "AdvP",
        PhraseKind::PrepositionalPhrase => "PP",
        PhraseKind::Pronoun => "PRON",
    }
}

/// Render one element as `NP pre=[..] head=.. post=[..]` or a clause subtree.
pub fn dump_element(e: &Element, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match e {
        Element::Phrase(p) => {
            let _ = writeln!(out, "{} pre=[{}] head={} post=[{}]", kind_label(p.kind), p.pre.join(" "), p.head, p.post.join(" "));
        }
        Element::Clause(c) => {
            let _ = writeln!(out, "Clause lead={}", c.lead.as_deref().unwrap_or("-"));
            let field = |name: &str, e: Option<&Element>, out: &mut String| {
                let _ = write!(out, "{pad}  {name:<10} ");
                match e {
                    Some(e) => dump_element(e, indent + 2, out),
                    None => out.push_str("-\n"),
                }
            };
            field("subject", c.subject.as_deref(), out);
            let action = c.action.clone().map(Element::Phrase);
            field("action", action.as_ref(), out);
            field("object", c.object.as_deref(), out);
            for a in &c.adverbials {
                let _ = write!(out, "{pad}  {:<10} ", format!("adv:{}", a.kind));
                dump_element(&a.content, indent + 2, out);
            }
        }
    }
}

/// Multi-line dump of a sentence's top-level constituents.
pub fn dump_syntax(s: &SentenceSyntax) -> String {
    let mut out = format!("S{}.{} {}\n", s.sentence_id, s.part, if s.polarity == Polarity::Negative { "negative" } else { "affirmative" });
    let field = |name: &str, e: Option<&Element>, out: &mut String| {
        let _ = write!(out, "  {name:<10} ");
        match e {
            Some(e) => dump_element(e, 2, out),
            None => out.push_str("-\n"),
        }
    };
    field("subject", s.subject.as_ref(), &mut out);
    field("action", s.action.as_ref(), &mut out);
    match &s.object {
        Some(o) => {
            field("object", Some(&o.direct), &mut out);
            if let Some(i) = &o.indirect {
                field("indirect", Some(i), &mut out);
            }
            if let Some(c) = &o.complement {
                field("complement", Some(c), &mut out);
            }
        }
        None => field("object", None, &mut out),
    }
    if s.adverbials.is_empty() {
        field("adverbial", None, &mut out);
    }
    for a in &s.adverbials {
        let _ = write!(out, "  {:<10} ", format!("adv:{}", a.kind));
        dump_element(&a.content, 2, &mut out);
    }
    out
}
