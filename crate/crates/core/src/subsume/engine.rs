use crate::syntax::{Adverbial, Clause, Element, ObjectGroup, Phrase, SentenceSyntax};

use super::{same_head, HarvestedEdges, Relation, SynonymTable};

/// Result of comparing a child candidate against a parent candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cmp {
    Same,
    Strict,
    No,
}

impl Cmp {
    /// Product order: all components same-or-subclass, at least one strict
    /// for the whole to be strict.
    pub fn product<I: IntoIterator<Item = Cmp>>(parts: I) -> Cmp {
        let mut out = Cmp::Same;
        for c in parts {
            match c {
                Cmp::No => return Cmp::No,
                Cmp::Strict => out = Cmp::Strict,
                Cmp::Same => {}
            }
        }
        out
    }

    pub fn holds(self) -> bool {
        self != Cmp::No
    }
}

#[derive(Clone, Copy)]
enum ERef<'b> {
    P(&'b Phrase),
    C(&'b Clause),
}

impl<'b> ERef<'b> {
    fn of(e: &'b Element) -> Self {
        match e {
            Element::Phrase(p) => ERef::P(p),
            Element::Clause(c) => ERef::C(c),
        }
    }

    fn key(self) -> String {
        match self {
            ERef::P(p) => p.key(),
            ERef::C(c) => c.key(),
        }
    }
}

/// Comparison engine. With harvested edges, every noun/verb comparison
/// point also consults the pattern edges (the integrated approach).
#[derive(Clone, Copy)]
pub struct Subsumer<'a> {
    edges: &'a HarvestedEdges,
    syn: &'a SynonymTable,
    harvest: bool,
}

impl Subsumer<'static> {
    /// Modifier rule and structure only.
    pub fn plain() -> Self {
        Subsumer { edges: HarvestedEdges::empty_ref(), syn: SynonymTable::empty_ref(), harvest: false }
    }
}

impl<'a> Subsumer<'a> {
    pub fn new(edges: &'a HarvestedEdges, syn: &'a SynonymTable) -> Self {
        Subsumer { edges, syn, harvest: !edges.is_empty() }
    }

    fn without_harvest(self) -> Self {
        Subsumer { harvest: false, ..self }
    }

    pub fn synonyms(&self) -> &'a SynonymTable {
        self.syn
    }

    fn heads_match(&self, a: &str, b: &str) -> bool {
        a == b || self.syn.are_synonyms(a, b)
    }

    /// Head equality plus proper sub-multiset of modifiers.
    pub fn modifier(&self, p1: &Phrase, p2: &Phrase) -> Cmp {
        if p1.category() != p2.category() || !self.heads_match(&p1.head, &p2.head) {
            return Cmp::No;
        }
        let mut child = p1.modifiers();
        let mut parent = p2.modifiers();
        if parent.len() > child.len() {
            return Cmp::No;
        }
        child.sort_unstable();
        parent.sort_unstable();
        // multiset inclusion by merge
        let mut i = 0;
        for m in &parent {
            while i < child.len() && child[i] < *m {
                i += 1;
            }
            if i == child.len() || child[i] != *m {
                return Cmp::No;
            }
            i += 1;
        }
        if child.len() == parent.len() {
            Cmp::Same
        } else {
            Cmp::Strict
        }
    }

    pub fn phrase(&self, p1: &Phrase, p2: &Phrase) -> Cmp {
        if p1.category() != p2.category() {
            return Cmp::No;
        }
        let base = match (p1.split_prep(), p2.split_prep()) {
            (Some((a, n1)), Some((b, n2))) => {
                if a == b {
                    self.phrase(&n1, &n2)
                } else {
                    Cmp::No
                }
            }
            _ => self.modifier(p1, p2),
        };
        if base == Cmp::No && self.integrated(ERef::P(p1), ERef::P(p2)) {
            return Cmp::Strict;
        }
        base
    }

    pub fn clause(&self, c1: &Clause, c2: &Clause) -> Cmp {
        if c1.lead != c2.lead {
            return Cmp::No;
        }
        let base = Cmp::product([
            self.optional(c1.subject.as_deref(), c2.subject.as_deref()),
            self.optional_phrase(c1.action.as_ref(), c2.action.as_ref()),
            self.optional(c1.object.as_deref(), c2.object.as_deref()),
            self.adverbials(&c1.adverbials, &c2.adverbials),
        ]);
        if base == Cmp::No && self.integrated(ERef::C(c1), ERef::C(c2)) {
            return Cmp::Strict;
        }
        base
    }

    pub fn element(&self, e1: &Element, e2: &Element) -> Cmp {
        match (e1, e2) {
            (Element::Phrase(a), Element::Phrase(b)) => self.phrase(a, b),
            (Element::Clause(a), Element::Clause(b)) => self.clause(a, b),
            _ if e1.category() == e2.category() && self.integrated(ERef::of(e1), ERef::of(e2)) => Cmp::Strict,
            _ => Cmp::No,
        }
    }

    /// Absent on both sides counts as the same; present vs absent fails.
    pub fn optional(&self, a: Option<&Element>, b: Option<&Element>) -> Cmp {
        match (a, b) {
            (None, None) => Cmp::Same,
            (Some(a), Some(b)) => self.element(a, b),
            _ => Cmp::No,
        }
    }

    fn optional_phrase(&self, a: Option<&Phrase>, b: Option<&Phrase>) -> Cmp {
        match (a, b) {
            (None, None) => Cmp::Same,
            (Some(a), Some(b)) => self.phrase(a, b),
            _ => Cmp::No,
        }
    }

    pub fn adverbial(&self, a1: &Adverbial, a2: &Adverbial) -> Cmp {
        if a1.kind != a2.kind {
            return Cmp::No;
        }
        self.element(&a1.content, &a2.content)
    }

    /// Align the parent's adverbials to distinct child adverbials of the
    /// same kind: equal matches first, then subclass matches. Extra child
    /// adverbials make the comparison strict.
    pub fn adverbials(&self, child: &[Adverbial], parent: &[Adverbial]) -> Cmp {
        if child.len() < parent.len() {
            return Cmp::No;
        }
        let mut used = vec![false; child.len()];
        let mut matched = vec![None; parent.len()];
        for want in [Cmp::Same, Cmp::Strict] {
            for (pi, pa) in parent.iter().enumerate() {
                if matched[pi].is_some() {
                    continue;
                }
                if let Some(ci) = (0..child.len()).find(|&ci| !used[ci] && self.adverbial(&child[ci], pa) == want) {
                    used[ci] = true;
                    matched[pi] = Some(want);
                }
            }
        }
        if matched.iter().any(Option::is_none) {
            return Cmp::No;
        }
        let extra = if child.len() > parent.len() { Cmp::Strict } else { Cmp::Same };
        Cmp::product(matched.into_iter().flatten().chain([extra]))
    }

    pub fn object_group(&self, o1: Option<&ObjectGroup>, o2: Option<&ObjectGroup>) -> Cmp {
        match (o1, o2) {
            (None, None) => Cmp::Same,
            (Some(a), Some(b)) => Cmp::product([
                self.element(&a.direct, &b.direct),
                self.optional(a.indirect.as_ref(), b.indirect.as_ref()),
                self.optional(a.complement.as_ref(), b.complement.as_ref()),
            ]),
            _ => Cmp::No,
        }
    }

    pub fn sentence(&self, s1: &SentenceSyntax, s2: &SentenceSyntax) -> Cmp {
        Cmp::product([
            self.optional(s1.subject.as_ref(), s2.subject.as_ref()),
            self.optional(s1.action.as_ref(), s2.action.as_ref()),
            self.object_group(s1.object.as_ref(), s2.object.as_ref()),
            self.adverbials(&s1.adverbials, &s2.adverbials),
        ])
    }

    /// `a ⊑ b` through harvested edges: a is (or specializes) some endpoint
    /// x, x reaches y in the harvested closure, and y is (or specializes) b.
    fn integrated(&self, a: ERef, b: ERef) -> bool {
        if !self.harvest {
            return false;
        }
        let plain = self.without_harvest();
        let (ka, kb) = (a.key(), b.key());
        let xs: Vec<&str> = self
            .edges
            .endpoints()
            .filter(|(k, x)| *k == ka || plain.cmp_ref(a, ERef::of(x)) == Cmp::Strict)
            .map(|(k, _)| k)
            .collect();
        if xs.is_empty() {
            return false;
        }
        let ys: Vec<&str> = self
            .edges
            .endpoints()
            .filter(|(k, y)| *k == kb || plain.cmp_ref(ERef::of(y), b) == Cmp::Strict)
            .map(|(k, _)| k)
            .collect();
        xs.iter().any(|x| ys.iter().any(|y| self.edges.reaches(x, y)))
    }

    fn cmp_ref(&self, a: ERef, b: ERef) -> Cmp {
        match (a, b) {
            (ERef::P(p), ERef::P(q)) => self.phrase(p, q),
            (ERef::C(c), ERef::C(d)) => self.clause(c, d),
            _ => Cmp::No,
        }
    }

    /// Equal / Subclass / Superclass / Related / Unrelated.
    pub fn relation(&self, e1: &Element, e2: &Element) -> Relation {
        if e1.key() == e2.key() {
            return Relation::Equal;
        }
        match self.element(e1, e2) {
            Cmp::Same => Relation::Equal,
            Cmp::Strict => Relation::Subclass,
            Cmp::No => match self.element(e2, e1) {
                Cmp::Strict => Relation::Superclass,
                Cmp::Same => Relation::Equal,
                Cmp::No if same_head(e1, e2, self.syn) => Relation::Related,
                Cmp::No => Relation::Unrelated,
            },
        }
    }
}
