//! Raw or pre-tagged text in, active-voice tagged sentences out.

mod lexicon;
pub mod morph;
mod split;
mod tagger;
mod token;
mod tsv;
mod voice;

use std::path::Path;

pub use lexicon::{Lexicon, AUXILIARIES, DO_FORMS, MODALS, NEGATIONS, SUBORDINATE_CONJUNCTIONS};
pub use split::{split_sentences, tokenize};
pub use tagger::{RuleTagger, Tagger};
pub use token::{Pos, SentenceId, TaggedSentence, Token, UnknownTag, Voice};
pub use tsv::{load_pretagged, parse_pretagged, to_tsv};
pub use voice::normalize_voice;

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("malformed line {0}")]
    MalformedLine(usize),
    #[error("duplicate sentence id {0}")]
    DuplicateSentenceId(SentenceId),
}

/// Tag with the bundled lexicon.
pub fn tag(sentence: &str, lexicon: &Lexicon) -> TaggedSentence {
    RuleTagger::new(lexicon.clone()).tag_sentence(sentence, 1, "doc0")
}

/// An ordered collection of tagged sentences with unique ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub sentences: Vec<TaggedSentence>,
}

impl Corpus {
    pub fn new() -> Self {
        Corpus::default()
    }

    pub fn from_sentences(sentences: Vec<TaggedSentence>) -> Self {
        Corpus { sentences }
    }

    pub fn next_id(&self) -> SentenceId {
        self.sentences.iter().map(|s| s.sentence_id).max().map_or(1, |m| m + 1)
    }

    /// Split, tag and voice-normalize one document.
    pub fn add_document(&mut self, doc_id: &str, raw: &str, tagger: &dyn Tagger) -> usize {
        let mut id = self.next_id();
        let before = self.sentences.len();
        for s in split_sentences(raw) {
            let tagged = tagger.tag(&s, id, doc_id);
            if tagged.tokens.is_empty() {
                continue;
            }
            self.sentences.push(normalize_voice(&tagged));
            id += 1;
        }
        self.sentences.len() - before
    }

    /// Pre-tagged sentences bypass the tagger but still get voice normalization.
    pub fn add_pretagged(&mut self, sentences: Vec<TaggedSentence>) {
        self.sentences.extend(sentences.iter().map(normalize_voice));
    }

    pub fn load_text(path: &Path, tagger: &dyn Tagger) -> Result<Self, CorpusError> {
        let raw = std::fs::read_to_string(path).map_err(|e| CorpusError::Io(path.display().to_string(), e))?;
        let doc = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "doc0".into());
        let mut c = Corpus::new();
        c.add_document(&doc, &raw, tagger);
        Ok(c)
    }

    pub fn to_tsv(&self) -> String {
        to_tsv(&self.sentences)
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn get(&self, id: SentenceId) -> Option<&TaggedSentence> {
        self.sentences.iter().find(|s| s.sentence_id == id)
    }
}
