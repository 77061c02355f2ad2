//! Sentence splitting and word tokenization.

const ABBREVIATIONS: &[&str] = &[
    "e.g.", "i.e.", "fig.", "figs.", "al.", "etc.", "vs.", "cf.", "eq.", "eqs.", "no.", "dr.",
    "mr.", "mrs.", "ms.", "prof.", "sec.", "ch.", "vol.", "pp.", "approx.", "resp.", "st.",
];

fn is_abbreviation(word: &str) -> bool {
    let w = word.trim_start_matches(['(', '"', '\'']).to_lowercase();
    if ABBREVIATIONS.contains(&w.as_str()) {
        return true;
    }
    // Initials such as "J." or "U.S."
    let letters: Vec<&str> = w.split('.').filter(|s| !s.is_empty()).collect();
    !letters.is_empty() && letters.iter().all(|s| s.chars().count() == 1 && s.chars().all(char::is_alphabetic))
}

/// Split raw text into sentences at `.`, `!` or `?` followed by whitespace and a
/// capital letter, skipping known abbreviations and initials.
pub fn split_sentences(raw: &str) -> Vec<String> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = raw.char_indices().collect();
    let mut start = 0usize;
    let mut i = 0usize;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if matches!(c, '.' | '!' | '?') {
            // Absorb runs like "?!" or closing quotes/parens.
            let mut j = i + 1;
            while j < chars.len() && matches!(chars[j].1, '.' | '!' | '?' | '"' | '\'' | ')') {
                j += 1;
            }
            let end = if j < chars.len() { chars[j].0 } else { raw.len() };
            let mut k = j;
            let mut saw_space = false;
            while k < chars.len() && chars[k].1.is_whitespace() {
                saw_space = true;
                k += 1;
            }
            let next_upper = k < chars.len() && (chars[k].1.is_uppercase() || matches!(chars[k].1, '"' | '('));
            let boundary = if k >= chars.len() {
                true
            } else if !(saw_space && next_upper) {
                false
            } else if c == '.' {
                let word_start = raw[..pos].rfind(char::is_whitespace).map(|p| p + 1).unwrap_or(0);
                !is_abbreviation(&raw[word_start..=pos])
            } else {
                true
            };
            if boundary {
                let s = raw[start..end].trim();
                if !s.is_empty() {
                    out.push(s.to_string());
                }
                start = if k < chars.len() { chars[k].0 } else { raw.len() };
                i = k;
                continue;
            }
            i = j;
            continue;
        }
        i += 1;
        let _ = pos;
    }
    let tail = raw[start.min(raw.len())..].trim();
    if !tail.is_empty() {
        out.push(tail.to_string());
    }
    out
}

/// Split a sentence into word and punctuation tokens. Hyphens and internal
/// apostrophes stay inside words; clitics `'s` and `n't` are separated.
pub fn tokenize(sentence: &str) -> Vec<String> {
    let mut out = Vec::new();
    for chunk in sentence.split_whitespace() {
        let mut word = chunk;
        let mut leading = Vec::new();
        while let Some(c) = word.chars().next() {
            if matches!(c, '(' | '"' | '[') && word.len() > 1 {
                leading.push(c.to_string());
                word = &word[c.len_utf8()..];
            } else {
                break;
            }
        }
        let mut trailing = Vec::new();
        loop {
            let Some(c) = word.chars().last() else { break };
            let strip = match c {
                ',' | ';' | ':' | '!' | '?' | ')' | '"' | ']' => true,
                '.' => !is_abbreviation(word),
                '\'' => word.len() > 1,
                _ => false,
            };
            if !strip || word.is_empty() {
                break;
            }
            trailing.push(c.to_string());
            word = &word[..word.len() - c.len_utf8()];
        }
        out.extend(leading);
        if !word.is_empty() {
            let lower = word.to_lowercase();
            if lower.ends_with("n't") && word.len() > 3 {
                let cut = word.len() - 3;
                let stem = &word[..cut];
                // "can't" → "ca" + "n't" is the usual treebank convention; keep "can".
                let stem = if stem.eq_ignore_ascii_case("ca") { "can" } else if stem.eq_ignore_ascii_case("wo") { "will" } else { stem };
                out.push(stem.to_string());
                out.push(word[cut..].to_string());
            } else if lower.ends_with("'s") && word.len() > 2 {
                out.push(word[..word.len() - 2].to_string());
                out.push(word[word.len() - 2..].to_string());
            } else {
                out.push(word.to_string());
            }
        }
        out.extend(trailing.into_iter().rev());
    }
    out
}
