//! Adverbial marker tables and the time/place word lists used to classify
//! adverbials.

use super::types::AdverbialKind;

pub const TIME_CONJUNCTIONS: &[&str] = &["after", "before", "since", "when", "while", "once", "until", "whenever"];
/// Prepositions that introduce a time noun phrase ("in January", "during the week").
pub const TIME_PREPOSITIONS: &[&str] = &[
    "in", "on", "at", "during", "after", "before", "since", "until", "till", "by", "from", "within", "throughout", "for",
];
pub const TIME_ADVERBS: &[&str] = &[
    "again", "now", "then", "today", "yesterday", "tomorrow", "recently", "currently", "already", "soon", "later",
    "finally", "previously", "formerly", "lately", "always", "often", "sometimes", "usually", "never", "once",
    "twice", "still", "yet", "early", "late", "nowadays", "annually", "daily", "weekly", "monthly", "yearly",
];
pub const TIME_NOUNS: &[&str] = &[
    "time", "moment", "second", "minute", "hour", "day", "week", "month", "year", "decade", "century", "era",
    "period", "morning", "afternoon", "evening", "night", "today", "yesterday", "tomorrow", "weekend", "season",
    "spring", "summer", "autumn", "fall", "winter", "january", "february", "march", "april", "may", "june", "july",
    "august", "september", "october", "november", "december", "monday", "tuesday", "wednesday", "thursday",
    "friday", "saturday", "sunday", "past", "future", "present", "beginning", "end", "stage", "phase", "iteration",
];

pub const PLACE_CONJUNCTIONS: &[&str] = &["where", "wherever"];
pub const PLACE_PREPOSITIONS: &[&str] = &[
    "in", "at", "on", "within", "inside", "outside", "near", "across", "around", "throughout", "into", "onto",
    "under", "over", "above", "below", "between", "among", "beside", "behind", "along", "from", "beyond",
];
pub const PLACE_NOUNS: &[&str] = &[
    "place", "country", "city", "town", "village", "region", "area", "room", "building", "office", "laboratory",
    "lab", "university", "world", "street", "campus", "site", "location", "continent", "state", "province",
    "home", "school", "hospital", "field", "space", "europe", "asia", "america", "africa",
];

pub const METHOD_CONJUNCTIONS: &[&str] = &["as", "as if", "as though", "like", "by", "through", "via", "with", "on"];
pub const METHOD_VERBS: &[&str] = &["using", "utilizing", "employing", "applying", "exploiting", "implementing"];

pub const PURPOSE_CONJUNCTIONS: &[&str] = &[
    "so", "so that", "so as to", "in order that", "in order to", "for fear that", "in case that", "lest", "for", "to",
];

pub const REASON_CONJUNCTIONS: &[&str] = &["because of", "due to", "owing to", "as", "since", "because", "based on"];

pub const CONDITION_CONJUNCTIONS: &[&str] = &[
    "if", "unless", "as long as", "so long as", "provided that", "in case", "in case of", "on condition that",
];

/// All multi-word markers, longest first, for greedy matching.
pub fn multiword_markers() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = [
        METHOD_CONJUNCTIONS,
        PURPOSE_CONJUNCTIONS,
        REASON_CONJUNCTIONS,
        CONDITION_CONJUNCTIONS,
    ]
    .iter()
    .flat_map(|t| t.iter().copied())
    .filter(|m| m.contains(' '))
    .collect();
    v.sort_by_key(|m| std::cmp::Reverse(m.split(' ').count()));
    v.dedup();
    v
}

/// Words that open a subordinate (finite) adverbial clause.
pub fn is_clause_marker(m: &str) -> bool {
    TIME_CONJUNCTIONS.contains(&m)
        || PLACE_CONJUNCTIONS.contains(&m)
        || CONDITION_CONJUNCTIONS.contains(&m)
        || matches!(
            m,
            "because" | "as" | "since" | "so that" | "in order that" | "for fear that" | "in case that" | "lest"
                | "so" | "although" | "though" | "whereas" | "as if" | "as though" | "due to" | "owing to"
        )
}

pub fn is_time_noun(lemma: &str) -> bool {
    TIME_NOUNS.contains(&lemma) || is_year(lemma)
}

pub fn is_year(word: &str) -> bool {
    word.len() == 4 && word.parse::<u32>().is_ok_and(|y| (1000..3000).contains(&y))
}

pub fn is_place_noun(lemma: &str) -> bool {
    PLACE_NOUNS.contains(&lemma)
}

/// Markers listed for `kind`; used to check that a classification is backed
/// by a table entry.
pub fn table(kind: AdverbialKind) -> Vec<&'static str> {
    match kind {
        AdverbialKind::Time => [TIME_CONJUNCTIONS, TIME_PREPOSITIONS, TIME_ADVERBS, TIME_NOUNS].concat(),
        AdverbialKind::Place => [PLACE_CONJUNCTIONS, PLACE_PREPOSITIONS, PLACE_NOUNS].concat(),
        AdverbialKind::Method => [METHOD_CONJUNCTIONS, METHOD_VERBS].concat(),
        AdverbialKind::Purpose => PURPOSE_CONJUNCTIONS.to_vec(),
        AdverbialKind::Reason => REASON_CONJUNCTIONS.to_vec(),
        AdverbialKind::Condition => CONDITION_CONJUNCTIONS.to_vec(),
        AdverbialKind::Unclassified => Vec::new(),
    }
}

/// Facts about an adverbial span that the classifier needs.
#[derive(Debug, Clone, Default)]
pub struct SpanFacts<'a> {
    /// Lowercased marker (possibly multi-word), if the span starts with one.
    pub marker: Option<&'a str>,
    /// Head lemma of the (inner) noun phrase, if any.
    pub np_head: Option<&'a str>,
    pub np_head_proper: bool,
    /// The span contains a finite verb after the marker.
    pub finite: bool,
    /// The marker is followed by a gerund.
    pub gerund: bool,
    /// "to" followed by a base verb.
    pub infinitive: bool,
    /// The span is a bare adverb phrase with this head.
    pub adverb: Option<&'a str>,
    /// The span starts with a method verb ("using X").
    pub method_verb: Option<&'a str>,
}

/// Decide the adverbial kind from span facts. Priority: Condition > Reason >
/// Purpose > Method > Place > Time, with content checks for ambiguous markers.
pub fn classify(f: &SpanFacts) -> (AdverbialKind, Option<String>) {
    use AdverbialKind::*;
    if let Some(adv) = f.adverb {
        if TIME_ADVERBS.contains(&adv) {
            return (Time, None);
        }
        if adv.ends_with("ly") {
            return (Method, None);
        }
        return (Unclassified, None);
    }
    if let Some(v) = f.method_verb {
        return (Method, Some(v.to_string()));
    }
    let Some(m) = f.marker else {
        // Bare noun phrase: only time nouns make an adverbial of their own.
        if f.np_head.is_some_and(is_time_noun) {
            return (Time, None);
        }
        return (Unclassified, None);
    };
    let marker = Some(m.to_string());
    let time_np = f.np_head.is_some_and(is_time_noun);
    if CONDITION_CONJUNCTIONS.contains(&m) {
        return (Condition, marker);
    }
    if REASON_CONJUNCTIONS.contains(&m) {
        let ambiguous = matches!(m, "as" | "since");
        if !ambiguous || f.finite {
            return (Reason, marker);
        }
    }
    if PURPOSE_CONJUNCTIONS.contains(&m) {
        if m == "to" {
            if f.infinitive {
                return (Purpose, marker);
            }
        } else if m == "for" {
            if !time_np {
                return (Purpose, marker);
            }
        } else {
            return (Purpose, marker);
        }
    }
    if METHOD_CONJUNCTIONS.contains(&m) {
        let place_or_time_on = m == "on" && (time_np || f.np_head_proper || f.np_head.is_some_and(is_place_noun));
        let time_by = m == "by" && time_np;
        if !place_or_time_on && !time_by {
            return (Method, marker);
        }
    }
    if PLACE_CONJUNCTIONS.contains(&m) {
        return (Place, marker);
    }
    if TIME_CONJUNCTIONS.contains(&m) {
        if m == "since" && !(f.finite || time_np) {
            return (Unclassified, None);
        }
        if !f.finite && !f.gerund && f.np_head.is_some() && !time_np && !matches!(m, "after" | "before" | "until" | "since") {
            return (Unclassified, None);
        }
        return (Time, marker);
    }
    if TIME_PREPOSITIONS.contains(&m) && time_np {
        return (Time, marker);
    }
    if PLACE_PREPOSITIONS.contains(&m) && f.np_head.is_some() {
        return (Place, marker);
    }
    (Unclassified, None)
}
