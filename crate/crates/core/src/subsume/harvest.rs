use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::syntax::Element;

use super::{Cmp, Subsumer, SubclassEdge};

/// One pattern match: the edge plus the elements at both ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Harvest {
    pub edge: SubclassEdge,
    pub child: Element,
    pub parent: Element,
    /// Which pattern fired ("is-a", "such-as", ...).
    pub pattern: &'static str,
}

/// Pattern edges collected over a corpus, with conflicting pairs removed and
/// reachability precomputed over pattern edges plus modifier-rule edges
/// among their endpoints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HarvestedEdges {
    edges: Vec<SubclassEdge>,
    endpoints: BTreeMap<String, Element>,
    ancestors: BTreeMap<String, BTreeSet<String>>,
    dropped: Vec<SubclassEdge>,
}

static EMPTY: HarvestedEdges = HarvestedEdges {
    edges: Vec::new(),
    endpoints: BTreeMap::new(),
    ancestors: BTreeMap::new(),
    dropped: Vec::new(),
};

impl HarvestedEdges {
    pub fn empty() -> Self {
        HarvestedEdges::default()
    }

    pub fn empty_ref() -> &'static HarvestedEdges {
        &EMPTY
    }

    /// Merge per-sentence matches. Duplicate edges keep the first evidence;
    /// when both `a ⊑ b` and `b ⊑ a` were found, both are dropped.
    pub fn from_harvests(harvests: impl IntoIterator<Item = Harvest>) -> Self {
        let mut first: BTreeMap<(String, String), SubclassEdge> = BTreeMap::new();
        let mut order: Vec<(String, String)> = Vec::new();
        let mut endpoints = BTreeMap::new();
        for h in harvests {
            if h.edge.child == h.edge.parent {
                continue;
            }
            let k = (h.edge.child.clone(), h.edge.parent.clone());
            endpoints.entry(h.edge.child.clone()).or_insert(h.child);
            endpoints.entry(h.edge.parent.clone()).or_insert(h.parent);
            if let std::collections::btree_map::Entry::Vacant(v) = first.entry(k.clone()) {
                order.push(k);
                v.insert(h.edge);
            }
        }
        let mut edges = Vec::new();
        let mut dropped = Vec::new();
        for k in order {
            let rev = (k.1.clone(), k.0.clone());
            if first.contains_key(&rev) {
                log::warn!("conflicting pattern edges between {:?} and {:?}; dropping both", k.0, k.1);
                dropped.push(first[&k].clone());
            } else {
                edges.push(first[&k].clone());
            }
        }
        // Endpoints only referenced by dropped edges are not kept.
        let live: BTreeSet<&String> = edges.iter().flat_map(|e| [&e.child, &e.parent]).collect();
        let endpoints: BTreeMap<String, Element> = endpoints.into_iter().filter(|(k, _)| live.contains(k)).collect();
        let mut h = HarvestedEdges { edges, endpoints, ancestors: BTreeMap::new(), dropped };
        h.close();
        h
    }

    fn close(&mut self) {
        let mut adj: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(&e.child).or_default().insert(&e.parent);
        }
        let plain = Subsumer::plain();
        for (ka, a) in &self.endpoints {
            for (kb, b) in &self.endpoints {
                if ka != kb && a.category() == b.category() && plain.element(a, b) == Cmp::Strict {
                    adj.entry(ka).or_default().insert(kb);
                }
            }
        }
        let mut ancestors = BTreeMap::new();
        for k in self.endpoints.keys() {
            let mut seen = BTreeSet::new();
            let mut q: VecDeque<&str> = adj.get(k.as_str()).into_iter().flatten().copied().collect();
            while let Some(n) = q.pop_front() {
                if seen.insert(n.to_string()) {
                    q.extend(adj.get(n).into_iter().flatten().copied());
                }
            }
            ancestors.insert(k.clone(), seen);
        }
        self.ancestors = ancestors;
    }

    pub fn edges(&self) -> &[SubclassEdge] {
        &self.edges
    }

    /// Edges removed because of a direction conflict.
    pub fn dropped(&self) -> &[SubclassEdge] {
        &self.dropped
    }

    pub fn endpoints(&self) -> impl Iterator<Item = (&str, &Element)> {
        self.endpoints.iter().map(|(k, e)| (k.as_str(), e))
    }

    pub fn endpoint(&self, key: &str) -> Option<&Element> {
        self.endpoints.get(key)
    }

    /// Strict reachability `x ⊑⁺ y` in the harvested closure.
    pub fn reaches(&self, x: &str, y: &str) -> bool {
        self.ancestors.get(x).is_some_and(|a| a.contains(y))
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// Edge dump lines for one dimension label.
    pub fn to_tsv(&self, dimension: &str) -> String {
        self.edges.iter().map(|e| e.tsv_line(dimension) + "\n").collect()
    }
}
