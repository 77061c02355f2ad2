//! Syntax-driven resource spaces: parse sentences into subject/action/object/
//! adverbial tuples, organize them into subclass dimensions, and answer
//! questions by searching those dimensions.

pub mod corpus;
pub mod eval;
pub mod fixtures;
pub mod qa;
pub mod space;
pub mod subsume;
pub mod synth;
pub mod syntax;

pub use corpus::{Corpus, Lexicon, Pos, SentenceId, TaggedSentence, Token, Voice};
pub use qa::{answer, parse_question, AnswerJudgment, QuestionKind, QuestionSyntax};
pub use space::{DimensionName, Entry, Posting, ResourceSpace};
pub use subsume::{EdgeSource, HarvestedEdges, SubclassEdge, SynonymTable};
pub use syntax::{parse_sentence, Adverbial, AdverbialKind, Clause, Element, ObjectGroup, Phrase, Polarity, SentenceSyntax};
