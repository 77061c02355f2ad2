use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use crate::corpus::Corpus;
use crate::subsume::{scan_syntactic_patterns, Cmp, EdgeSource, HarvestedEdges, SubclassEdge, Subsumer};
use crate::syntax::{parse_sentence_parts, Category, Element, SentenceSyntax};

use super::{find_cycle, transitive_reduce, ClassNode, Dimension, DimensionName, Entry, Posting, ResourceSpace, SentenceRecord, SpaceError};

/// The entries one parsed sentence part contributes to a dimension.
pub fn entries_for(name: DimensionName, s: &SentenceSyntax) -> Vec<Entry> {
    match name {
        DimensionName::Subject => s.subject.iter().cloned().map(Entry::plain).collect(),
        DimensionName::Action => s.action.iter().cloned().map(Entry::plain).collect(),
        DimensionName::Object => s.object.iter().map(|o| Entry::plain(o.direct.clone())).collect(),
        DimensionName::Adverbial => s.adverbials.iter().map(Entry::adverbial).collect(),
    }
}

fn allowed(name: DimensionName, e: &Entry) -> bool {
    let c = e.element.category();
    match name {
        DimensionName::Subject => e.kind.is_none() && c == Category::Nominal,
        DimensionName::Action => e.kind.is_none() && c == Category::Verbal,
        DimensionName::Object => e.kind.is_none() && matches!(c, Category::Nominal | Category::Adjectival),
        DimensionName::Adverbial => e.kind.is_some(),
    }
}

/// Comparison bucket: only entries sharing a head (or clause lead) can be
/// related by the modifier rule.
fn label(e: &Element) -> String {
    match e {
        Element::Phrase(p) => p.head.clone(),
        Element::Clause(c) => format!("<{}", c.lead.as_deref().unwrap_or("-")),
    }
}

fn rank(s: EdgeSource) -> u8 {
    match s {
        EdgeSource::Modifier => 0,
        EdgeSource::Integrated => 1,
        EdgeSource::SyntacticPattern => 2,
    }
}

/// Merge equal entries, add subclass edges, break cycles, reduce, and
/// attach postings.
pub fn build_dimension(name: DimensionName, elements: Vec<(Posting, Entry)>, harvested: &HarvestedEdges) -> Result<Dimension, SpaceError> {
    let mut dim = Dimension::empty(name);
    for (p, e) in elements {
        if !allowed(name, &e) {
            return Err(SpaceError::KindMismatch { dimension: name, found: e.element.category() });
        }
        let key = e.key();
        dim.postings.entry(key.clone()).or_default().push(p);
        dim.nodes.entry(key.clone()).or_insert_with(|| ClassNode { key, display: e.element.display(), entry: e });
    }
    for v in dim.postings.values_mut() {
        v.sort_unstable();
    }
    let s = Subsumer::new(harvested, crate::subsume::SynonymTable::empty_ref());

    // Pattern endpoints above existing nodes become (posting-free) nodes.
    if name != DimensionName::Adverbial && !harvested.is_empty() {
        loop {
            let mut added = false;
            for (k, x) in harvested.endpoints() {
                let ex = Entry::plain(x.clone());
                if dim.nodes.contains_key(k) || !allowed(name, &ex) {
                    continue;
                }
                if dim.nodes.values().any(|n| n.entry.compare(&ex, &s) == Cmp::Strict) {
                    dim.nodes.insert(k.to_string(), ClassNode { key: k.to_string(), display: x.display(), entry: ex });
                    added = true;
                }
            }
            if !added {
                break;
            }
        }
    }

    // Candidate pairs: same bucket, or buckets linked through pattern edges.
    let mut buckets: BTreeMap<(Option<crate::syntax::AdverbialKind>, Category, String), Vec<&ClassNode>> = BTreeMap::new();
    for n in dim.nodes.values() {
        buckets.entry((n.entry.kind, n.entry.element.category(), label(&n.entry.element))).or_default().push(n);
    }
    let mut linked: BTreeSet<(String, String)> = BTreeSet::new();
    let ends: Vec<(&str, &Element)> = harvested.endpoints().collect();
    for (kx, x) in &ends {
        for (ky, y) in &ends {
            if harvested.reaches(kx, ky) {
                linked.insert((label(x), label(y)));
            }
        }
    }
    let plain = Subsumer::plain();
    let pattern_pairs: BTreeSet<(&str, &str)> = harvested.edges().iter().map(|e| (e.child.as_str(), e.parent.as_str())).collect();
    let mut found: Vec<SubclassEdge> = Vec::new();
    let mut consider = |a: &ClassNode, b: &ClassNode| {
        if a.key != b.key && a.entry.compare(&b.entry, &s) == Cmp::Strict {
            let source = if plain.element(&a.entry.element, &b.entry.element) == Cmp::Strict {
                EdgeSource::Modifier
            } else if pattern_pairs.contains(&(a.key.as_str(), b.key.as_str())) {
                EdgeSource::SyntacticPattern
            } else {
                EdgeSource::Integrated
            };
            let evidence = harvested.edges().iter().find(|e| e.child == a.key && e.parent == b.key).and_then(|e| e.evidence);
            found.push(SubclassEdge::new(a.key.clone(), b.key.clone(), source, evidence));
        }
    };
    for ((kind, cat, la), nodes) in &buckets {
        for a in nodes {
            for b in nodes {
                consider(a, b);
            }
        }
        for (_, ly) in linked.iter().filter(|(lx, ly)| lx == la && lx != ly) {
            if let Some(others) = buckets.get(&(*kind, *cat, ly.clone())) {
                for a in nodes {
                    for b in others {
                        consider(a, b);
                    }
                }
            }
        }
    }

    // Break cycles: lowest evidence first, later discovery on ties.
    loop {
        let pairs: Vec<(String, String)> = found.iter().map(|e| (e.child.clone(), e.parent.clone())).collect();
        let Some(cycle) = find_cycle(&pairs) else { break };
        let victim = *cycle.iter().min_by_key(|&&i| (rank(found[i].source), Reverse(i))).expect("non-empty cycle");
        let e = found.remove(victim);
        log::warn!("{name}: dropping {} ⊑ {} ({}) to break a cycle", e.child, e.parent, e.source);
        dim.dropped.push(e);
    }

    let pairs: Vec<(String, String)> = found.iter().map(|e| (e.child.clone(), e.parent.clone())).collect();
    let reduced = transitive_reduce(&pairs)?;
    let mut meta: BTreeMap<(String, String), SubclassEdge> = BTreeMap::new();
    for e in found {
        meta.entry((e.child.clone(), e.parent.clone())).or_insert(e);
    }
    dim.edges = reduced.into_iter().map(|k| meta.remove(&k).expect("edge metadata")).collect();
    dim.index_children();
    Ok(dim)
}

impl ResourceSpace {
    pub fn empty() -> Self {
        ResourceSpace {
            dimensions: DimensionName::ALL.into_iter().map(Dimension::empty).collect(),
            sentences: BTreeMap::new(),
            harvested: HarvestedEdges::empty(),
        }
    }

    /// Parse every sentence, harvest pattern edges and build the four
    /// dimensions. Sentences that fail to parse are kept with no parts.
    pub fn build(corpus: &Corpus) -> Result<Self, SpaceError> {
        let mut sentences = BTreeMap::new();
        let mut harvests = Vec::new();
        for t in &corpus.sentences {
            let parts = match parse_sentence_parts(t) {
                Ok(p) => p,
                Err(e) => {
                    log::warn!("sentence {}: {e}", t.sentence_id);
                    Vec::new()
                }
            };
            for p in &parts {
                harvests.extend(scan_syntactic_patterns(t, p));
            }
            sentences.insert(t.sentence_id, SentenceRecord { doc_id: t.doc_id.clone(), surface: t.surface(), parts });
        }
        let harvested = HarvestedEdges::from_harvests(harvests);
        Self::from_parts(sentences, harvested)
    }

    /// Build dimensions from already parsed sentences.
    pub fn from_parts(sentences: BTreeMap<crate::corpus::SentenceId, SentenceRecord>, harvested: HarvestedEdges) -> Result<Self, SpaceError> {
        let mut dimensions = Vec::new();
        for name in DimensionName::ALL {
            let mut elems = Vec::new();
            for rec in sentences.values() {
                for p in &rec.parts {
                    for e in entries_for(name, p) {
                        elems.push((Posting::new(p.sentence_id, p.part), e));
                    }
                }
            }
            dimensions.push(build_dimension(name, elems, &harvested)?);
        }
        Ok(ResourceSpace { dimensions, sentences, harvested })
    }
}
