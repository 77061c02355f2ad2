use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::corpus::SentenceId;

use super::{DimensionName, Posting, ResourceSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub total: usize,
    pub per_dimension: BTreeMap<DimensionName, usize>,
    /// Sentences represented in at least one dimension.
    pub union: usize,
    /// Sentences with subject, action and object all present.
    pub subject_action_object: usize,
}

impl CoverageReport {
    /// Ratios are undefined for an empty corpus.
    pub fn defined(&self) -> bool {
        self.total > 0
    }

    pub fn ratio(&self, n: usize) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            n as f64 / self.total as f64
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = String::from("coverage\tcovered\ttotal\tratio\n");
        let mut row = |name: &str, n: usize| {
            let r = if self.defined() { format!("{:.4}", self.ratio(n)) } else { "undefined".into() };
            let _ = writeln!(out, "{name}\t{n}\t{}\t{r}", self.total);
        };
        for (d, n) in &self.per_dimension {
            row(d.as_str(), *n);
        }
        row("union", self.union);
        row("subject∧action∧object", self.subject_action_object);
        out
    }
}

pub fn coverage(space: &ResourceSpace) -> CoverageReport {
    let total = space.sentences.len();
    let covered: BTreeMap<DimensionName, BTreeSet<SentenceId>> = DimensionName::ALL.into_iter().map(|d| (d, space.dimension(d).covered())).collect();
    let union: BTreeSet<SentenceId> = covered.values().flatten().copied().collect();
    let sao = covered[&DimensionName::Subject]
        .iter()
        .filter(|s| covered[&DimensionName::Action].contains(s) && covered[&DimensionName::Object].contains(s))
        .count();
    CoverageReport {
        total,
        per_dimension: covered.iter().map(|(d, s)| (*d, s.len())).collect(),
        union: union.len(),
        subject_action_object: sao,
    }
}

/// Normal forms attained by one subset of dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceForms {
    pub dimensions: Vec<DimensionName>,
    pub nf1: bool,
    pub nf2: bool,
    pub nf3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfReport {
    /// Every non-empty subset of the four dimensions.
    pub subspaces: Vec<SubspaceForms>,
}

impl NfReport {
    pub fn get(&self, dims: &[DimensionName]) -> Option<&SubspaceForms> {
        let mut want = dims.to_vec();
        want.sort();
        self.subspaces.iter().find(|s| s.dimensions == want)
    }

    /// Largest subspace attaining the form (1, 2 or 3); ties go to the
    /// earlier subset in enumeration order.
    pub fn best(&self, form: u8) -> Option<&SubspaceForms> {
        self.subspaces
            .iter()
            .filter(|s| match form {
                1 => s.nf1,
                2 => s.nf2,
                _ => s.nf3,
            })
            .max_by_key(|s| (s.dimensions.len(), std::cmp::Reverse(s.dimensions.clone())))
    }

    pub fn to_table(&self) -> String {
        let mut out = String::from("subspace\t1NF\t2NF\t3NF\n");
        for s in &self.subspaces {
            let names: Vec<&str> = s.dimensions.iter().map(|d| d.as_str()).collect();
            let _ = writeln!(out, "{}\t{}\t{}\t{}", names.join("+"), s.nf1, s.nf2, s.nf3);
        }
        out
    }
}

/// 1NF: node keys are unique and agree with their elements.
fn first_nf(space: &ResourceSpace, d: DimensionName) -> bool {
    let dim = space.dimension(d);
    let mut seen = BTreeSet::new();
    dim.nodes.iter().all(|(k, n)| {
        let key = n.entry.key();
        key == *k && n.key == *k && seen.insert(key)
    })
}

/// 2NF part: no posting sits directly on two incomparable nodes.
fn disjoint_siblings(space: &ResourceSpace, d: DimensionName) -> bool {
    let dim = space.dimension(d);
    let mut owners: BTreeMap<Posting, Vec<&str>> = BTreeMap::new();
    for (k, ps) in &dim.postings {
        for p in ps {
            owners.entry(*p).or_default().push(k);
        }
    }
    owners.values().all(|ks| {
        ks.iter().enumerate().all(|(i, a)| {
            ks[i + 1..].iter().all(|b| a == b || dim.descendants(a).contains(*b) || dim.descendants(b).contains(*a))
        })
    })
}

pub fn check_normal_forms(space: &ResourceSpace) -> NfReport {
    let all: BTreeSet<SentenceId> = space.sentences.keys().copied().collect();
    let per: BTreeMap<DimensionName, (bool, bool, bool)> = DimensionName::ALL
        .into_iter()
        .map(|d| (d, (first_nf(space, d), disjoint_siblings(space, d), space.dimension(d).covered() == all)))
        .collect();
    let mut subspaces = Vec::new();
    for mask in 1u8..16 {
        let dims: Vec<DimensionName> = DimensionName::ALL.into_iter().filter(|d| mask >> d.index() & 1 == 1).collect();
        let nf1 = dims.iter().all(|d| per[d].0);
        let nf2 = nf1 && dims.iter().all(|d| per[d].1);
        let nf3 = nf2 && dims.iter().all(|d| per[d].2);
        subspaces.push(SubspaceForms { dimensions: dims, nf1, nf2, nf3 });
    }
    NfReport { subspaces }
}
