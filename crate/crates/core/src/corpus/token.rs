use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub type SentenceId = u32;

/// Penn-style part-of-speech tags, plus the punctuation tags the tokenizer emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pos {
    CC,
    CD,
    DT,
    EX,
    IN,
    JJ,
    JJR,
    JJS,
    MD,
    NN,
    NNS,
    NNP,
    NNPS,
    PDT,
    POS,
    PRP,
    PRPS,
    RB,
    RBR,
    RBS,
    RP,
    TO,
    UH,
    VB,
    VBD,
    VBG,
    VBN,
    VBP,
    VBZ,
    WDT,
    WP,
    WPS,
    WRB,
    Comma,
    Period,
    Colon,
    LeftParen,
    RightParen,
    Quote,
    Sym,
}

const TAG_NAMES: &[(Pos, &str)] = &[
    (Pos::CC, "CC"),
    (Pos::CD, "CD"),
    (Pos::DT, "DT"),
    (Pos::EX, "EX"),
    (Pos::IN, "IN"),
    (Pos::JJ, "JJ"),
    (Pos::JJR, "JJR"),
    (Pos::JJS, "JJS"),
    (Pos::MD, "MD"),
    (Pos::NN, "NN"),
    (Pos::NNS, "NNS"),
    (Pos::NNP, "NNP"),
    (Pos::NNPS, "NNPS"),
    (Pos::PDT, "PDT"),
    (Pos::POS, "POS"),
    (Pos::PRP, "PRP"),
    (Pos::PRPS, "PRP$"),
    (Pos::RB, "RB"),
    (Pos::RBR, "RBR"),
    (Pos::RBS, "RBS"),
    (Pos::RP, "RP"),
    (Pos::TO, "TO"),
    (Pos::UH, "UH"),
    (Pos::VB, "VB"),
    (Pos::VBD, "VBD"),
    (Pos::VBG, "VBG"),
    (Pos::VBN, "VBN"),
    (Pos::VBP, "VBP"),
    (Pos::VBZ, "VBZ"),
    (Pos::WDT, "WDT"),
    (Pos::WP, "WP"),
    (Pos::WPS, "WP$"),
    (Pos::WRB, "WRB"),
    (Pos::Comma, ","),
    (Pos::Period, "."),
    (Pos::Colon, ":"),
    (Pos::LeftParen, "-LRB-"),
    (Pos::RightParen, "-RRB-"),
    (Pos::Quote, "''"),
    (Pos::Sym, "SYM"),
];

impl Pos {
    pub fn as_str(self) -> &'static str {
        TAG_NAMES
            .iter()
            .find(|(p, _)| *p == self)
            .map(|(_, s)| *s)
            .expect("every tag has a name")
    }

    pub fn is_noun(self) -> bool {
        matches!(self, Pos::NN | Pos::NNS | Pos::NNP | Pos::NNPS)
    }

    pub fn is_proper(self) -> bool {
        matches!(self, Pos::NNP | Pos::NNPS)
    }

    pub fn is_plural(self) -> bool {
        matches!(self, Pos::NNS | Pos::NNPS)
    }

    pub fn is_verb(self) -> bool {
        matches!(
            self,
            Pos::VB | Pos::VBD | Pos::VBG | Pos::VBN | Pos::VBP | Pos::VBZ
        )
    }

    /// Tags that can carry tense on their own.
    pub fn is_finite_verb(self) -> bool {
        matches!(self, Pos::VBD | Pos::VBP | Pos::VBZ | Pos::MD)
    }

    pub fn is_adjective(self) -> bool {
        matches!(self, Pos::JJ | Pos::JJR | Pos::JJS)
    }

    pub fn is_adverb(self) -> bool {
        matches!(self, Pos::RB | Pos::RBR | Pos::RBS)
    }

    pub fn is_punct(self) -> bool {
        matches!(
            self,
            Pos::Comma
                | Pos::Period
                | Pos::Colon
                | Pos::LeftParen
                | Pos::RightParen
                | Pos::Quote
                | Pos::Sym
        )
    }

    pub fn is_wh(self) -> bool {
        matches!(self, Pos::WDT | Pos::WP | Pos::WPS | Pos::WRB)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown part-of-speech tag `{0}`")]
pub struct UnknownTag(pub String);

impl FromStr for Pos {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TAG_NAMES
            .iter()
            .find(|(_, name)| *name == s)
            .map(|(p, _)| *p)
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub lemma: String,
    pub pos: Pos,
    pub index: usize,
}

impl Token {
    pub fn new(surface: impl Into<String>, lemma: impl Into<String>, pos: Pos, index: usize) -> Self {
        Token {
            surface: surface.into(),
            lemma: lemma.into(),
            pos,
            index,
        }
    }

    pub fn lower(&self) -> String {
        self.surface.to_lowercase()
    }

    pub fn is(&self, lemma: &str) -> bool {
        self.lemma == lemma
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Voice {
    Active,
    PassiveConverted,
    PassiveAgentless,
}

impl Voice {
    pub fn as_str(self) -> &'static str {
        match self {
            Voice::Active => "Active",
            Voice::PassiveConverted => "PassiveConverted",
            Voice::PassiveAgentless => "PassiveAgentless",
        }
    }
}

impl FromStr for Voice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Active" => Ok(Voice::Active),
            "PassiveConverted" => Ok(Voice::PassiveConverted),
            "PassiveAgentless" => Ok(Voice::PassiveAgentless),
            other => Err(format!("unknown voice `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedSentence {
    pub sentence_id: SentenceId,
    pub doc_id: String,
    pub tokens: Vec<Token>,
    pub voice: Voice,
}

impl TaggedSentence {
    pub fn new(sentence_id: SentenceId, doc_id: impl Into<String>, tokens: Vec<Token>) -> Self {
        let mut s = TaggedSentence {
            sentence_id,
            doc_id: doc_id.into(),
            tokens,
            voice: Voice::Active,
        };
        s.reindex();
        s
    }

    /// Renumber token indices 0..n after an edit.
    pub fn reindex(&mut self) {
        for (i, t) in self.tokens.iter_mut().enumerate() {
            t.index = i;
        }
    }

    pub fn surface(&self) -> String {
        let mut out = String::new();
        for t in &self.tokens {
            let glue = matches!(t.pos, Pos::Comma | Pos::Period | Pos::Colon | Pos::RightParen | Pos::POS)
                || out.ends_with('(')
                || out.is_empty();
            if !glue {
                out.push(' ');
            }
            out.push_str(&t.surface);
        }
        out
    }

    pub fn tags(&self) -> Vec<Pos> {
        self.tokens.iter().map(|t| t.pos).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tag_names_round_trip() {
        for (p, name) in TAG_NAMES {
            assert_eq!(name.parse::<Pos>().unwrap(), *p);
            assert_eq!(p.as_str(), *name);
        }
        assert!("XX".parse::<Pos>().is_err());
    }

    #[test]
    fn surface_rejoins_punctuation() {
        let toks = vec![
            Token::new("LexRank", "lexrank", Pos::NNP, 0),
            Token::new("works", "work", Pos::VBZ, 0),
            Token::new(".", ".", Pos::Period, 0),
        ];
        let s = TaggedSentence::new(1, "d", toks);
        assert_eq!(s.surface(), "LexRank works.");
        assert_eq!(s.tokens[2].index, 2);
    }
}
