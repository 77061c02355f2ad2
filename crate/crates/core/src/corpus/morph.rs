//! Inflection tables and suffix-stripping lemmatization.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

/// (base, past, past participle)
pub(crate) const IRREGULAR_VERBS: &[(&str, &str, &str)] = &[
    ("be", "was", "been"),
    ("have", "had", "had"),
    ("do", "did", "done"),
    ("arise", "arose", "arisen"),
    ("bear", "bore", "borne"),
    ("become", "became", "become"),
    ("begin", "began", "begun"),
    ("bend", "bent", "bent"),
    ("bind", "bound", "bound"),
    ("bite", "bit", "bitten"),
    ("break", "broke", "broken"),
    ("bring", "brought", "brought"),
    ("build", "built", "built"),
    ("buy", "bought", "bought"),
    ("choose", "chose", "chosen"),
    ("come", "came", "come"),
    ("cost", "cost", "cost"),
    ("cut", "cut", "cut"),
    ("deal", "dealt", "dealt"),
    ("dig", "dug", "dug"),
    ("draw", "drew", "drawn"),
    ("drink", "drank", "drunk"),
    ("drive", "drove", "driven"),
    ("eat", "ate", "eaten"),
    ("fall", "fell", "fallen"),
    ("feed", "fed", "fed"),
    ("feel", "felt", "felt"),
    ("fight", "fought", "fought"),
    ("find", "found", "found"),
    ("fly", "flew", "flown"),
    ("forget", "forgot", "forgotten"),
    ("freeze", "froze", "frozen"),
    ("get", "got", "gotten"),
    ("give", "gave", "given"),
    ("go", "went", "gone"),
    ("grow", "grew", "grown"),
    ("hang", "hung", "hung"),
    ("hear", "heard", "heard"),
    ("hide", "hid", "hidden"),
    ("hit", "hit", "hit"),
    ("hold", "held", "held"),
    ("hurt", "hurt", "hurt"),
    ("keep", "kept", "kept"),
    ("know", "knew", "known"),
    ("lay", "laid", "laid"),
    ("lead", "led", "led"),
    ("leave", "left", "left"),
    ("lend", "lent", "lent"),
    ("let", "let", "let"),
    ("lie", "lay", "lain"),
    ("light", "lit", "lit"),
    ("lose", "lost", "lost"),
    ("make", "made", "made"),
    ("mean", "meant", "meant"),
    ("meet", "met", "met"),
    ("overcome", "overcame", "overcome"),
    ("pay", "paid", "paid"),
    ("put", "put", "put"),
    ("quit", "quit", "quit"),
    ("read", "read", "read"),
    ("rebuild", "rebuilt", "rebuilt"),
    ("ride", "rode", "ridden"),
    ("ring", "rang", "rung"),
    ("rise", "rose", "risen"),
    ("run", "ran", "run"),
    ("say", "said", "said"),
    ("see", "saw", "seen"),
    ("seek", "sought", "sought"),
    ("sell", "sold", "sold"),
    ("send", "sent", "sent"),
    ("set", "set", "set"),
    ("shake", "shook", "shaken"),
    ("shed", "shed", "shed"),
    ("shoot", "shot", "shot"),
    ("show", "showed", "shown"),
    ("shrink", "shrank", "shrunk"),
    ("shut", "shut", "shut"),
    ("sing", "sang", "sung"),
    ("sink", "sank", "sunk"),
    ("sit", "sat", "sat"),
    ("sleep", "slept", "slept"),
    ("slide", "slid", "slid"),
    ("speak", "spoke", "spoken"),
    ("spend", "spent", "spent"),
    ("split", "split", "split"),
    ("spread", "spread", "spread"),
    ("stand", "stood", "stood"),
    ("steal", "stole", "stolen"),
    ("stick", "stuck", "stuck"),
    ("strike", "struck", "struck"),
    ("swim", "swam", "swum"),
    ("take", "took", "taken"),
    ("teach", "taught", "taught"),
    ("tell", "told", "told"),
    ("think", "thought", "thought"),
    ("throw", "threw", "thrown"),
    ("undergo", "underwent", "undergone"),
    ("understand", "understood", "understood"),
    ("undertake", "undertook", "undertaken"),
    ("wear", "wore", "worn"),
    ("win", "won", "won"),
    ("withdraw", "withdrew", "withdrawn"),
    ("write", "wrote", "written"),
];

/// (plural, singular)
const IRREGULAR_NOUNS: &[(&str, &str)] = &[
    ("analyses", "analysis"),
    ("bases", "basis"),
    ("children", "child"),
    ("criteria", "criterion"),
    ("crises", "crisis"),
    ("diagnoses", "diagnosis"),
    ("feet", "foot"),
    ("geese", "goose"),
    ("hypotheses", "hypothesis"),
    ("indices", "index"),
    ("matrices", "matrix"),
    ("men", "man"),
    ("mice", "mouse"),
    ("phenomena", "phenomenon"),
    ("syntheses", "synthesis"),
    ("teeth", "tooth"),
    ("theses", "thesis"),
    ("vertices", "vertex"),
    ("women", "woman"),
];

/// Words ending in `s` that are not plurals.
const S_FINAL_SINGULARS: &[&str] = &[
    "analysis", "basis", "bias", "bus", "corpus", "gas", "lens", "news", "physics", "series",
    "species", "status", "thesis", "this", "mathematics", "linguistics", "statistics",
    "economics", "semantics", "syntax", "always", "perhaps", "has", "was", "is", "its", "us",
    "yes", "thus", "plus", "less", "process", "access", "success", "class", "loss", "across",
    "unless", "whereas", "various", "previous", "numerous", "famous", "ambiguous", "continuous",
    "consensus", "campus", "means", "virus", "focus", "canvas", "atlas", "chaos", "ethos", "pathos",
];

struct Tables {
    past_to_base: HashMap<&'static str, &'static str>,
    pp_to_base: HashMap<&'static str, &'static str>,
    base_irregular: HashMap<&'static str, (&'static str, &'static str)>,
    plural_to_singular: HashMap<&'static str, &'static str>,
    s_final: HashSet<&'static str>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut past_to_base = HashMap::new();
        let mut pp_to_base = HashMap::new();
        let mut base_irregular = HashMap::new();
        for &(base, past, pp) in IRREGULAR_VERBS {
            past_to_base.insert(past, base);
            pp_to_base.insert(pp, base);
            base_irregular.insert(base, (past, pp));
        }
        past_to_base.insert("were", "be");
        Tables {
            past_to_base,
            pp_to_base,
            base_irregular,
            plural_to_singular: IRREGULAR_NOUNS.iter().copied().collect(),
            s_final: S_FINAL_SINGULARS.iter().copied().collect(),
        }
    })
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn ends_cvc(w: &str) -> bool {
    let cs: Vec<char> = w.chars().collect();
    let n = cs.len();
    n >= 3
        && !is_vowel(cs[n - 1])
        && !matches!(cs[n - 1], 'w' | 'x' | 'y')
        && is_vowel(cs[n - 2])
        && !is_vowel(cs[n - 3])
}

fn vowel_groups(w: &str) -> usize {
    let mut groups = 0;
    let mut prev = false;
    for c in w.chars() {
        let v = is_vowel(c) || c == 'y';
        if v && !prev {
            groups += 1;
        }
        prev = v;
    }
    groups
}

pub fn third_person(base: &str) -> String {
    match base {
        "be" => return "is".into(),
        "have" => return "has".into(),
        "do" => return "does".into(),
        "go" => return "goes".into(),
        _ => {}
    }
    if base.ends_with('s')
        || base.ends_with('x')
        || base.ends_with('z')
        || base.ends_with("ch")
        || base.ends_with("sh")
        || base.ends_with('o')
    {
        format!("{base}es")
    } else if base.ends_with('y') && base.len() > 1 && !base[..base.len() - 1].ends_with(is_vowel) {
        format!("{}ies", &base[..base.len() - 1])
    } else {
        format!("{base}s")
    }
}

fn regular_ed(base: &str) -> String {
    if base.ends_with('e') {
        format!("{base}d")
    } else if base.ends_with('y') && base.len() > 1 && !base[..base.len() - 1].ends_with(is_vowel) {
        format!("{}ied", &base[..base.len() - 1])
    } else if ends_cvc(base) && vowel_groups(base) == 1 {
        let last = base.chars().last().unwrap();
        format!("{base}{last}ed")
    } else {
        format!("{base}ed")
    }
}

pub fn past(base: &str) -> String {
    match tables().base_irregular.get(base) {
        Some((p, _)) => (*p).to_string(),
        None => regular_ed(base),
    }
}

pub fn past_participle(base: &str) -> String {
    match tables().base_irregular.get(base) {
        Some((_, pp)) => (*pp).to_string(),
        None => regular_ed(base),
    }
}

pub fn present_participle(base: &str) -> String {
    if base == "be" {
        return "being".into();
    }
    if let Some(stem) = base.strip_suffix("ie") {
        format!("{stem}ying")
    } else if base.ends_with('e') && !base.ends_with("ee") && base.len() > 2 {
        format!("{}ing", &base[..base.len() - 1])
    } else if ends_cvc(base) && vowel_groups(base) == 1 {
        let last = base.chars().last().unwrap();
        format!("{base}{last}ing")
    } else {
        format!("{base}ing")
    }
}

/// Base form of a verb. `known` answers whether a candidate base is a known verb.
pub fn verb_lemma(word: &str, known: impl Fn(&str) -> bool) -> String {
    let w = word.to_lowercase();
    let t = tables();
    match w.as_str() {
        "is" | "am" | "are" | "was" | "were" | "been" | "being" | "be" | "'s" | "'re" | "'m" => {
            return "be".into()
        }
        "has" | "had" | "having" | "'ve" => return "have".into(),
        "does" | "did" | "doing" | "done" => return "do".into(),
        _ => {}
    }
    if let Some(b) = t.past_to_base.get(w.as_str()) {
        return (*b).to_string();
    }
    if let Some(b) = t.pp_to_base.get(w.as_str()) {
        return (*b).to_string();
    }
    if known(&w) {
        return w;
    }
    let pick = |stem: &str| -> String {
        let mut cands = vec![stem.to_string(), format!("{stem}e")];
        let cs: Vec<char> = stem.chars().collect();
        if cs.len() >= 2 && cs[cs.len() - 1] == cs[cs.len() - 2] && !matches!(cs[cs.len() - 1], 's' | 'l' | 'f' | 'z') {
            cands.push(cs[..cs.len() - 1].iter().collect());
        }
        if cs.len() >= 2 && cs[cs.len() - 1] == 'l' && cs[cs.len() - 2] == 'l' {
            cands.push(cs[..cs.len() - 1].iter().collect());
        }
        if let Some(c) = cands.iter().find(|c| known(c)) {
            return c.clone();
        }
        // Heuristic e-restoration for unknown verbs.
        let needs_e = ["at", "iz", "is", "ur", "ut", "uc", "ov", "iv", "ag", "ng", "rg", "uir", "ud", "id", "ir", "bl", "pl", "cl", "dl", "gl", "tl", "ec", "anc", "enc", "erv", "olv", "os", "as", "us", "uc", "ib", "ab"];
        if needs_e.iter().any(|s| stem.ends_with(s)) && !stem.ends_with("ss") {
            return format!("{stem}e");
        }
        if cs.len() >= 2
            && cs[cs.len() - 1] == cs[cs.len() - 2]
            && !matches!(cs[cs.len() - 1], 's' | 'l' | 'f' | 'z')
        {
            return cs[..cs.len() - 1].iter().collect();
        }
        stem.to_string()
    };
    if let Some(stem) = w.strip_suffix("ied") {
        return format!("{stem}y");
    }
    if let Some(stem) = w.strip_suffix("ying") {
        if known(&format!("{stem}ie")) {
            return format!("{stem}ie");
        }
        return format!("{stem}y");
    }
    if let Some(stem) = w.strip_suffix("ing") {
        if stem.len() >= 2 {
            return pick(stem);
        }
    }
    if let Some(stem) = w.strip_suffix("ed") {
        if stem.len() >= 2 {
            if known(&format!("{stem}e")) && !known(stem) {
                return format!("{stem}e");
            }
            return pick(stem);
        }
    }
    if let Some(stem) = w.strip_suffix("ies") {
        return format!("{stem}y");
    }
    if let Some(stem) = w.strip_suffix("es") {
        if known(stem) {
            return stem.to_string();
        }
        if stem.ends_with("ss") || stem.ends_with("sh") || stem.ends_with("ch") || stem.ends_with('x') || stem.ends_with('z') || stem.ends_with('o') {
            return stem.to_string();
        }
    }
    if let Some(stem) = w.strip_suffix('s') {
        if !w.ends_with("ss") {
            return stem.to_string();
        }
    }
    w
}

/// Singular form of a noun.
pub fn noun_lemma(word: &str) -> String {
    let w = word.to_lowercase();
    let t = tables();
    if let Some(s) = t.plural_to_singular.get(w.as_str()) {
        return (*s).to_string();
    }
    let last = w.rsplit('-').next().unwrap_or(&w);
    if t.s_final.contains(w.as_str()) || t.s_final.contains(last) || w.len() <= 3 {
        return w;
    }
    if w.ends_with("ss") || w.ends_with("us") || w.ends_with("is") || w.ends_with("'s") {
        return w;
    }
    if let Some(stem) = w.strip_suffix("ies") {
        if stem.len() >= 2 {
            return format!("{stem}y");
        }
    }
    if let Some(stem) = w.strip_suffix("sses") {
        return format!("{stem}ss");
    }
    for suf in ["ches", "shes", "xes", "zes"] {
        if w.ends_with(suf) {
            return w[..w.len() - 2].to_string();
        }
    }
    if let Some(stem) = w.strip_suffix('s') {
        return stem.to_string();
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn known(w: &str) -> bool {
        ["select", "use", "classify", "build", "rank", "stop", "label", "store", "require", "publish"].contains(&w)
    }

    #[test]
    fn verb_lemmas() {
        assert_eq!(verb_lemma("selecting", known), "select");
        assert_eq!(verb_lemma("using", known), "use");
        assert_eq!(verb_lemma("classifying", known), "classify");
        assert_eq!(verb_lemma("built", known), "build");
        assert_eq!(verb_lemma("ranked", known), "rank");
        assert_eq!(verb_lemma("stopped", known), "stop");
        assert_eq!(verb_lemma("labelled", known), "label");
        assert_eq!(verb_lemma("stores", known), "store");
        assert_eq!(verb_lemma("required", known), "require");
        assert_eq!(verb_lemma("published", known), "publish");
        assert_eq!(verb_lemma("is", known), "be");
        assert_eq!(verb_lemma("won", known), "win");
        assert_eq!(verb_lemma("tried", known), "try");
    }

    #[test]
    fn noun_lemmas() {
        assert_eq!(noun_lemma("algorithms"), "algorithm");
        assert_eq!(noun_lemma("studies"), "study");
        assert_eq!(noun_lemma("processes"), "process");
        assert_eq!(noun_lemma("analysis"), "analysis");
        assert_eq!(noun_lemma("children"), "child");
        assert_eq!(noun_lemma("branches"), "branch");
        assert_eq!(noun_lemma("cases"), "case");
        assert_eq!(noun_lemma("data"), "data");
    }

    #[test]
    fn inflections() {
        assert_eq!(third_person("build"), "builds");
        assert_eq!(third_person("classify"), "classifies");
        assert_eq!(third_person("reach"), "reaches");
        assert_eq!(past("build"), "built");
        assert_eq!(past("select"), "selected");
        assert_eq!(past("stop"), "stopped");
        assert_eq!(past("classify"), "classified");
        assert_eq!(past("store"), "stored");
        assert_eq!(past_participle("write"), "written");
        assert_eq!(present_participle("use"), "using");
        assert_eq!(present_participle("run"), "running");
    }
}
