//! The four syntax dimensions: class nodes ordered by subclass edges, with
//! sentence postings, descendant-closed search and normal-form checks.

mod build;
mod nf;
mod reduce;
mod snapshot;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::SentenceId;
use crate::subsume::{Cmp, HarvestedEdges, SubclassEdge, Subsumer, SynonymTable};
use crate::syntax::{Adverbial, AdverbialKind, Category, Element, SentenceSyntax};

pub use build::{build_dimension, entries_for};
pub use nf::{check_normal_forms, coverage, CoverageReport, NfReport, SubspaceForms};
pub use reduce::{find_cycle, is_acyclic, transitive_closure, transitive_reduce, CycleDetected};
pub use snapshot::SnapshotError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("{dimension} dimension cannot hold a {found:?} element")]
    KindMismatch { dimension: DimensionName, found: Category },
    #[error(transparent)]
    Cycle(#[from] CycleDetected),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DimensionName {
    Subject,
    Action,
    Object,
    Adverbial,
}

impl DimensionName {
    pub const ALL: [DimensionName; 4] = [DimensionName::Subject, DimensionName::Action, DimensionName::Object, DimensionName::Adverbial];

    pub fn as_str(self) -> &'static str {
        match self {
            DimensionName::Subject => "subject",
            DimensionName::Action => "action",
            DimensionName::Object => "object",
            DimensionName::Adverbial => "adverbial",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for DimensionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DimensionName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        DimensionName::ALL.into_iter().find(|d| d.as_str() == s).ok_or_else(|| format!("unknown dimension {s:?}"))
    }
}

/// A sentence (and coordinated part) carrying an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Posting {
    pub sentence_id: SentenceId,
    pub part: u16,
}

impl Posting {
    pub fn new(sentence_id: SentenceId, part: u16) -> Self {
        Posting { sentence_id, part }
    }
}

impl fmt::Display for Posting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.sentence_id, self.part)
    }
}

/// What a dimension stores: an element, and for adverbials their kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub element: Element,
    pub kind: Option<AdverbialKind>,
}

impl Entry {
    pub fn plain(element: Element) -> Self {
        Entry { element, kind: None }
    }

    pub fn adverbial(a: &Adverbial) -> Self {
        Entry { element: a.content.clone(), kind: Some(a.kind) }
    }

    /// Canonical key; adverbials are prefixed with their kind.
    pub fn key(&self) -> String {
        match self.kind {
            Some(k) => format!("{k}:{}", self.element.key()),
            None => self.element.key(),
        }
    }

    pub fn compare(&self, other: &Entry, s: &Subsumer) -> Cmp {
        if self.kind != other.kind || self.element.category() != other.element.category() {
            return Cmp::No;
        }
        s.element(&self.element, &other.element)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassNode {
    pub key: String,
    pub display: String,
    pub entry: Entry,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dimension {
    pub name: DimensionName,
    pub nodes: BTreeMap<String, ClassNode>,
    /// Reduced subclass edges (child ⊑ parent), sorted.
    pub edges: Vec<SubclassEdge>,
    /// Direct postings per node key, sorted (duplicates kept).
    pub postings: BTreeMap<String, Vec<Posting>>,
    /// Edges removed to break cycles.
    pub dropped: Vec<SubclassEdge>,
    children: BTreeMap<String, Vec<String>>,
}

impl Dimension {
    pub fn empty(name: DimensionName) -> Self {
        Dimension { name, nodes: BTreeMap::new(), edges: Vec::new(), postings: BTreeMap::new(), dropped: Vec::new(), children: BTreeMap::new() }
    }

    pub(crate) fn index_children(&mut self) {
        self.children.clear();
        for e in &self.edges {
            self.children.entry(e.parent.clone()).or_default().push(e.child.clone());
        }
    }

    pub fn parents(&self, key: &str) -> Vec<&str> {
        self.edges.iter().filter(|e| e.child == key).map(|e| e.parent.as_str()).collect()
    }

    pub fn children(&self, key: &str) -> &[String] {
        self.children.get(key).map_or(&[], Vec::as_slice)
    }

    /// The node and everything below it.
    pub fn descendants(&self, key: &str) -> BTreeSet<String> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![key.to_string()];
        while let Some(k) = stack.pop() {
            if seen.insert(k.clone()) {
                stack.extend(self.children(&k).iter().cloned());
            }
        }
        seen
    }

    fn collect(&self, keys: impl IntoIterator<Item = String>) -> BTreeSet<Posting> {
        keys.into_iter().flat_map(|k| self.postings.get(&k).into_iter().flatten().copied()).collect()
    }

    /// Postings of the query's node and its descendants. An unknown query
    /// collects every node that is a subclass of it.
    pub fn search(&self, query: &Entry, edges: &HarvestedEdges, syn: &SynonymTable) -> BTreeSet<Posting> {
        let key = query.key();
        if self.nodes.contains_key(&key) {
            return self.collect(self.descendants(&key));
        }
        let s = Subsumer::new(edges, syn);
        let mut keys = BTreeSet::new();
        for n in self.nodes.values() {
            if n.entry.compare(query, &s).holds() {
                keys.extend(self.descendants(&n.key));
            }
        }
        self.collect(keys)
    }

    /// Searching the dimension's root: every posting in the dimension.
    pub fn search_root(&self) -> BTreeSet<Posting> {
        self.postings.values().flatten().copied().collect()
    }

    /// Sentence ids with at least one posting.
    pub fn covered(&self) -> BTreeSet<SentenceId> {
        self.postings.values().flatten().map(|p| p.sentence_id).collect()
    }

    /// Maximal nodes (no parent).
    pub fn roots(&self) -> Vec<&str> {
        let children: BTreeSet<&str> = self.edges.iter().map(|e| e.child.as_str()).collect();
        self.nodes.keys().map(String::as_str).filter(|k| !children.contains(k)).collect()
    }

    pub fn closure_pairs(&self) -> Vec<(String, String)> {
        let pairs: Vec<(String, String)> = self.edges.iter().map(|e| (e.child.clone(), e.parent.clone())).collect();
        transitive_closure(&pairs).unwrap_or_default()
    }
}

/// Source text of an ingested sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceRecord {
    pub doc_id: String,
    pub surface: String,
    /// Parsed parts; empty when parsing failed.
    pub parts: Vec<SentenceSyntax>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceSpace {
    pub dimensions: Vec<Dimension>,
    pub sentences: BTreeMap<SentenceId, SentenceRecord>,
    pub harvested: HarvestedEdges,
}

impl ResourceSpace {
    pub fn dimension(&self, name: DimensionName) -> &Dimension {
        &self.dimensions[name.index()]
    }

    pub fn dimension_mut(&mut self, name: DimensionName) -> &mut Dimension {
        &mut self.dimensions[name.index()]
    }

    pub fn search(&self, name: DimensionName, query: &Entry) -> BTreeSet<Posting> {
        self.dimension(name).search(query, &self.harvested, SynonymTable::empty_ref())
    }

    pub fn parts(&self, p: Posting) -> Option<&SentenceSyntax> {
        self.sentences.get(&p.sentence_id)?.parts.iter().find(|s| s.part == p.part)
    }

    /// `stats` text: node and edge counts per dimension.
    pub fn stats(&self) -> String {
        let mut out = String::from("dimension\tnodes\tsubclass_relations\n");
        for d in &self.dimensions {
            out.push_str(&format!("{}\t{}\t{}\n", d.name, d.nodes.len(), d.edges.len()));
        }
        out
    }

    /// Edge dump over all dimensions.
    pub fn edges_tsv(&self) -> String {
        self.dimensions.iter().flat_map(|d| d.edges.iter().map(move |e| e.tsv_line(d.name.as_str()) + "\n")).collect()
    }
}
