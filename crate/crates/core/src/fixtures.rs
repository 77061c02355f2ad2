//! Small bundled inputs used by tests, the benches and the CLI docs.

/// Four sentences about extractive summarizers.
pub const SHORT_INPUT: [&str; 4] = [
    "LexRank builds an extract by selecting top ranked sentences.",
    "LexRank is an unsupervised algorithm due to no training data is required.",
    "The results show that the extract can be built well by unsupervised algorithm.",
    "Supervised algorithm builds an extract by classifying sentences.",
];

pub const SHORT_QUESTION: &str = "How does unsupervised algorithm build an extract?";

/// A definition sentence and a distractor.
pub const DEFINITION_INPUT: [&str; 2] = [
    "Text summarization is the process of selecting the most important content from a document.",
    "Researchers evaluate summaries with human judges.",
];

pub fn short_input_text() -> String {
    SHORT_INPUT.join(" ")
}
