//! Pre-tagged token files: `surface<TAB>lemma<TAB>pos`, blank line between
//! sentences, `#doc <id>` switches the document. `#sid <n>` and
//! `#voice <v>` are optional per-sentence headers written by [`to_tsv`].

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::token::{Pos, SentenceId, TaggedSentence, Token, Voice};
use super::CorpusError;

pub fn load_pretagged(path: &Path) -> Result<Vec<TaggedSentence>, CorpusError> {
    let text = fs::read_to_string(path).map_err(|e| CorpusError::Io(path.display().to_string(), e))?;
    parse_pretagged(&text)
}

pub fn parse_pretagged(text: &str) -> Result<Vec<TaggedSentence>, CorpusError> {
    let mut out = Vec::new();
    let mut doc = String::from("doc0");
    let mut tokens: Vec<Token> = Vec::new();
    let mut sid: Option<SentenceId> = None;
    let mut voice = Voice::Active;
    let mut next_id: SentenceId = 1;

    let mut flush = |tokens: &mut Vec<Token>, sid: &mut Option<SentenceId>, voice: &mut Voice, doc: &str, out: &mut Vec<TaggedSentence>| {
        if tokens.is_empty() {
            return;
        }
        let id = sid.take().unwrap_or(next_id);
        next_id = id + 1;
        let mut s = TaggedSentence::new(id, doc, std::mem::take(tokens));
        s.voice = std::mem::replace(voice, Voice::Active);
        out.push(s);
    };

    for (n, line) in text.lines().enumerate() {
        let lineno = n + 1;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            flush(&mut tokens, &mut sid, &mut voice, &doc, &mut out);
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if !tokens.is_empty() {
                flush(&mut tokens, &mut sid, &mut voice, &doc, &mut out);
            }
            let (key, val) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let val = val.trim();
            match key {
                "doc" => doc = val.to_string(),
                "sid" => sid = Some(val.parse().map_err(|_| CorpusError::MalformedLine(lineno))?),
                "voice" => voice = val.parse().map_err(|_| CorpusError::MalformedLine(lineno))?,
                _ => {}
            }
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 3 {
            return Err(CorpusError::MalformedLine(lineno));
        }
        let pos: Pos = cols[2].parse().map_err(|_| CorpusError::MalformedLine(lineno))?;
        let lemma = cols[1];
        if cols[0].is_empty() || lemma.is_empty() || lemma.contains(char::is_whitespace) {
            return Err(CorpusError::MalformedLine(lineno));
        }
        tokens.push(Token::new(cols[0], lemma, pos, tokens.len()));
    }
    flush(&mut tokens, &mut sid, &mut voice, &doc, &mut out);

    let mut seen = std::collections::HashSet::new();
    for s in &out {
        if !seen.insert(s.sentence_id) {
            return Err(CorpusError::DuplicateSentenceId(s.sentence_id));
        }
    }
    Ok(out)
}

/// Serialize in the normalized form read back by [`parse_pretagged`].
pub fn to_tsv(sentences: &[TaggedSentence]) -> String {
    let mut out = String::new();
    let mut doc: Option<&str> = None;
    for s in sentences {
        if doc != Some(s.doc_id.as_str()) {
            let _ = writeln!(out, "#doc {}", s.doc_id);
            doc = Some(&s.doc_id);
        }
        let _ = writeln!(out, "#sid {}", s.sentence_id);
        if s.voice != Voice::Active {
            let _ = writeln!(out, "#voice {}", s.voice.as_str());
        }
        for t in &s.tokens {
            let _ = writeln!(out, "{}\t{}\t{}", t.surface, t.lemma, t.pos);
        }
        out.push('\n');
    }
    out
}
