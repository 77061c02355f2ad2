use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use crate::corpus::CorpusError;

/// Symmetric lemma synonym table, loaded from `lemma<TAB>synonym` lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SynonymTable {
    map: BTreeMap<String, BTreeSet<String>>,
}

static EMPTY: SynonymTable = SynonymTable { map: BTreeMap::new() };

impl SynonymTable {
    pub fn new() -> Self {
        SynonymTable::default()
    }

    pub fn empty_ref() -> &'static SynonymTable {
        &EMPTY
    }

    /// Insert both directions.
    pub fn insert(&mut self, a: &str, b: &str) {
        let (a, b) = (a.to_lowercase(), b.to_lowercase());
        if a == b {
            return;
        }
        self.map.entry(a.clone()).or_default().insert(b.clone());
        self.map.entry(b).or_default().insert(a);
    }

    pub fn from_tsv(text: &str) -> Result<Self, CorpusError> {
        let mut t = SynonymTable::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split('\t');
            match (cols.next(), cols.next(), cols.next()) {
                (Some(a), Some(b), None) if !a.is_empty() && !b.is_empty() => t.insert(a.trim(), b.trim()),
                _ => return Err(CorpusError::MalformedLine(n + 1)),
            }
        }
        Ok(t)
    }

    pub fn load(path: &Path) -> Result<Self, CorpusError> {
        let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io(path.display().to_string(), e))?;
        Self::from_tsv(&text)
    }

    pub fn are_synonyms(&self, a: &str, b: &str) -> bool {
        self.map.get(a).is_some_and(|s| s.contains(b))
    }

    pub fn synonyms(&self, a: &str) -> impl Iterator<Item = &str> {
        self.map.get(a).into_iter().flatten().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}
