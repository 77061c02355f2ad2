//! Benchmark inputs shared by the criterion benches.

use syntaxspace::corpus::RuleTagger;
use syntaxspace::{synth, Corpus, ResourceSpace};

/// A tagged synthetic corpus of `n` sentences.
pub fn corpus(n: usize) -> Corpus {
    let mut c = Corpus::new();
    c.add_document("bench", &synth::corpus(11, n, 3).text(), &RuleTagger::default());
    c
}

pub fn space(n: usize) -> ResourceSpace {
    ResourceSpace::build(&corpus(n)).expect("synthetic corpora build")
}

/// Questions derived from the same generator as [`corpus`].
pub fn questions(n: usize) -> Vec<String> {
    synth::question_pairs(&synth::corpus(11, n, 3), 11, 10).into_iter().flat_map(|p| [p.specific, p.general]).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn inputs_are_usable() {
        let s = super::space(40);
        assert!(!s.sentences.is_empty());
        assert!(!super::questions(40).is_empty());
    }
}
