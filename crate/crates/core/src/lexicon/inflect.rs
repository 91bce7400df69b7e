//! Rule-based English inflection with small exception tables.

use std::collections::BTreeSet;

/// Irregular noun plurals, singular first.
const IRREGULAR_PLURALS: &[(&str, &str)] = &[
    ("abacus", "abaci"),
    ("alumnus", "alumni"),
    ("analysis", "analyses"),
    ("axis", "axes"),
    ("basis", "bases"),
    ("cactus", "cacti"),
    ("calf", "calves"),
    ("child", "children"),
    ("crisis", "crises"),
    ("criterion", "criteria"),
    ("datum", "data"),
    ("die", "dice"),
    ("elf", "elves"),
    ("foot", "feet"),
    ("fungus", "fungi"),
    ("goose", "geese"),
    ("half", "halves"),
    ("hypothesis", "hypotheses"),
    ("knife", "knives"),
    ("leaf", "leaves"),
    ("life", "lives"),
    ("loaf", "loaves"),
    ("louse", "lice"),
    ("man", "men"),
    ("medium", "media"),
    ("mouse", "mice"),
    ("nucleus", "nuclei"),
    ("octopus", "octopi"),
    ("ox", "oxen"),
    ("person", "people"),
    ("phenomenon", "phenomena"),
    ("radius", "radii"),
    ("scarf", "scarves"),
    ("self", "selves"),
    ("sheaf", "sheaves"),
    ("shelf", "shelves"),
    ("stimulus", "stimuli"),
    ("syllabus", "syllabi"),
    ("thesis", "theses"),
    ("thief", "thieves"),
    ("tooth", "teeth"),
    ("wife", "wives"),
    ("wolf", "wolves"),
    ("woman", "women"),
];

/// Nouns whose plural equals the singular.
const INVARIANT_NOUNS: &[&str] = &[
    "aircraft",
    "bison",
    "cod",
    "deer",
    "fish",
    "means",
    "moose",
    "news",
    "offspring",
    "salmon",
    "series",
    "sheep",
    "species",
    "swine",
    "trout",
];

/// Words ending in -ie whose plural is -ies.
const IE_NOUNS: &[&str] = &[
    "auntie", "brownie", "calorie", "cookie", "genie", "hippie", "movie", "newbie", "prairie", "rookie", "zombie",
];

/// Words ending in -o that take -es.
const O_ES: &[&str] = &["echo", "hero", "potato", "tomato", "torpedo", "veto"];

/// Irregular verbs: base form followed by its other forms.
const IRREGULAR_VERBS: &[(&str, &[&str])] = &[
    ("be", &["am", "is", "are", "was", "were", "been", "being"]),
    ("begin", &["begins", "began", "begun", "beginning"]),
    ("break", &["breaks", "broke", "broken", "breaking"]),
    ("bring", &["brings", "brought", "bringing"]),
    ("buy", &["buys", "bought", "buying"]),
    ("catch", &["catches", "caught", "catching"]),
    ("come", &["comes", "came", "coming"]),
    ("do", &["does", "did", "done", "doing"]),
    ("draw", &["draws", "drew", "drawn", "drawing"]),
    ("drink", &["drinks", "drank", "drunk", "drinking"]),
    ("drive", &["drives", "drove", "driven", "driving"]),
    ("eat", &["eats", "ate", "eaten", "eating"]),
    ("fall", &["falls", "fell", "fallen", "falling"]),
    ("fly", &["flies", "flew", "flown", "flying"]),
    ("get", &["gets", "got", "gotten", "getting"]),
    ("give", &["gives", "gave", "given", "giving"]),
    ("go", &["goes", "went", "gone", "going"]),
    ("have", &["has", "had", "having"]),
    ("hide", &["hides", "hid", "hidden", "hiding"]),
    ("keep", &["keeps", "kept", "keeping"]),
    ("know", &["knows", "knew", "known", "knowing"]),
    ("lead", &["leads", "led", "leading"]),
    ("leap", &["leaps", "leapt", "leaped", "leaping"]),
    ("lie", &["lies", "lay", "lain", "lying"]),
    ("make", &["makes", "made", "making"]),
    ("meet", &["meets", "met", "meeting"]),
    ("run", &["runs", "ran", "running"]),
    ("say", &["says", "said", "saying"]),
    ("see", &["sees", "saw", "seen", "seeing"]),
    ("sing", &["sings", "sang", "sung", "singing"]),
    ("sit", &["sits", "sat", "sitting"]),
    ("speak", &["speaks", "spoke", "spoken", "speaking"]),
    ("spin", &["spins", "spun", "spinning"]),
    ("steal", &["steals", "stole", "stolen", "stealing"]),
    ("swim", &["swims", "swam", "swum", "swimming"]),
    ("take", &["takes", "took", "taken", "taking"]),
    ("teach", &["teaches", "taught", "teaching"]),
    ("tell", &["tells", "told", "telling"]),
    ("think", &["thinks", "thought", "thinking"]),
    ("throw", &["throws", "threw", "thrown", "throwing"]),
    ("wear", &["wears", "wore", "worn", "wearing"]),
    ("win", &["wins", "won", "winning"]),
    ("write", &["writes", "wrote", "written", "writing"]),
];

const IRREGULAR_ADJECTIVES: &[(&str, &[&str])] = &[
    ("bad", &["worse", "worst"]),
    ("far", &["farther", "farthest", "further", "furthest"]),
    ("good", &["better", "best"]),
    ("little", &["less", "least"]),
    ("many", &["more", "most"]),
    ("much", &["more", "most"]),
];

fn is_vowel(b: u8) -> bool {
    matches!(b, b'a' | b'e' | b'i' | b'o' | b'u')
}

fn ends_consonant_y(w: &[u8]) -> bool {
    w.len() >= 2 && w[w.len() - 1] == b'y' && !is_vowel(w[w.len() - 2])
}

/// Monosyllabic consonant-vowel-consonant endings double their final
/// consonant before a vowel suffix ("stop" -> "stopped").
fn doubles_final(w: &[u8]) -> bool {
    let n = w.len();
    if n < 3 {
        return false;
    }
    let (a, b, c) = (w[n - 3], w[n - 2], w[n - 1]);
    if is_vowel(a) || !is_vowel(b) || is_vowel(c) || matches!(c, b'w' | b'x' | b'y') {
        return false;
    }
    let mut groups = 0;
    let mut prev = false;
    for &ch in w {
        let v = is_vowel(ch);
        if v && !prev {
            groups += 1;
        }
        prev = v;
    }
    groups == 1
}

fn regular_plural(word: &str) -> String {
    let b = word.as_bytes();
    if O_ES.contains(&word) || ["s", "x", "z", "ch", "sh"].iter().any(|s| word.ends_with(s)) {
        format!("{word}es")
    } else if ends_consonant_y(b) {
        format!("{}ies", &word[..word.len() - 1])
    } else {
        format!("{word}s")
    }
}

fn with_vowel_suffix(word: &str, suffix: &str) -> String {
    let b = word.as_bytes();
    if suffix == "ing" {
        if let Some(stem) = word.strip_suffix("ie") {
            return format!("{stem}ying");
        }
        if word.ends_with('e') && !["ee", "ye", "oe"].iter().any(|s| word.ends_with(s)) && word.len() > 2 {
            return format!("{}ing", &word[..word.len() - 1]);
        }
    } else {
        // -ed, -er, -est
        if word.ends_with('e') {
            return format!("{}{}", word, &suffix[1..]);
        }
        if ends_consonant_y(b) {
            return format!("{}i{}", &word[..word.len() - 1], suffix);
        }
    }
    if doubles_final(b) {
        let last = word.chars().last().unwrap_or_default();
        return format!("{word}{last}{suffix}");
    }
    format!("{word}{suffix}")
}

/// The word plus its plural, verb forms and comparative/superlative, as
/// produced by regular suffix rules and the exception tables.
pub fn inflections(word: &str) -> BTreeSet<String> {
    let mut out = BTreeSet::from([word.to_string()]);
    if word.is_empty() || !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return out;
    }
    let mut irregular = false;
    for (s, p) in IRREGULAR_PLURALS {
        if *s == word {
            out.insert(p.to_string());
            irregular = true;
        }
    }
    if !irregular && !INVARIANT_NOUNS.contains(&word) {
        out.insert(regular_plural(word));
    }
    match IRREGULAR_VERBS.iter().find(|(base, _)| *base == word) {
        Some((_, forms)) => out.extend(forms.iter().map(|f| f.to_string())),
        None => {
            if !INVARIANT_NOUNS.contains(&word) {
                out.insert(regular_plural(word));
            }
            out.insert(with_vowel_suffix(word, "ed"));
            out.insert(with_vowel_suffix(word, "ing"));
        }
    }
    match IRREGULAR_ADJECTIVES.iter().find(|(base, _)| *base == word) {
        Some((_, forms)) => out.extend(forms.iter().map(|f| f.to_string())),
        None => {
            out.insert(with_vowel_suffix(word, "er"));
            out.insert(with_vowel_suffix(word, "est"));
        }
    }
    out
}

fn irregular_singular(word: &str) -> Option<&'static str> {
    IRREGULAR_PLURALS.iter().find(|(_, p)| *p == word).map(|(s, _)| *s)
}

/// Canonical singular representative used to group answers "up to plural".
/// Idempotent.
pub fn plural_normalize(word: &str) -> String {
    if INVARIANT_NOUNS.contains(&word) || IRREGULAR_PLURALS.iter().any(|(s, _)| *s == word) {
        return word.to_string();
    }
    if let Some(s) = irregular_singular(word) {
        return s.to_string();
    }
    let stripped = strip_plural_suffix(word);
    match irregular_singular(&stripped) {
        Some(s) => s.to_string(),
        None => stripped,
    }
}

fn strip_plural_suffix(word: &str) -> String {
    let n = word.len();
    if n < 4 || !word.is_ascii() || !word.ends_with('s') {
        return word.to_string();
    }
    if ["ss", "us", "is"].iter().any(|s| word.ends_with(s)) {
        return word.to_string();
    }
    if word.ends_with("ies") && n > 4 {
        let stem = &word[..n - 1];
        if IE_NOUNS.contains(&stem) {
            return stem.to_string();
        }
        return format!("{}y", &word[..n - 3]);
    }
    if word.ends_with("es") {
        let stem = &word[..n - 2];
        if O_ES.contains(&stem) || ["sh", "ch", "x", "z", "ss", "us"].iter().any(|s| stem.ends_with(s)) {
            return stem.to_string();
        }
    }
    word[..n - 1].to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn has(word: &str, forms: &[&str]) {
        let inf = inflections(word);
        for f in forms {
            assert!(inf.contains(*f), "{word}: missing {f} in {inf:?}");
        }
    }

    #[test]
    fn inflection_examples() {
        has("petal", &["petal", "petals"]);
        has("abdicate", &["abdicates", "abdicated", "abdicating"]);
        has("abacus", &["abaci"]);
        has("stop", &["stops", "stopped", "stopping"]);
        has("carry", &["carries", "carried", "carrying"]);
        has("box", &["boxes"]);
        has("tie", &["tying", "tied"]);
        has("large", &["larger", "largest"]);
        has("big", &["bigger", "biggest"]);
        has("happy", &["happier", "happiest"]);
        has("go", &["went", "gone"]);
        has("good", &["better", "best"]);
        has("visit", &["visited", "visiting"]);
        assert!(!inflections("visit").contains("visitted"));
        assert!(!inflections("sheep").contains("sheeps"));
    }

    #[test]
    fn plural_examples() {
        assert_eq!(plural_normalize("petals"), "petal");
        assert_eq!(plural_normalize("abaci"), "abacus");
        assert_eq!(plural_normalize("bert"), "bert");
        assert_eq!(plural_normalize("boxes"), "box");
        assert_eq!(plural_normalize("horses"), "horse");
        assert_eq!(plural_normalize("buses"), "bus");
        assert_eq!(plural_normalize("glasses"), "glass");
        assert_eq!(plural_normalize("glass"), "glass");
        assert_eq!(plural_normalize("cities"), "city");
        assert_eq!(plural_normalize("movies"), "movie");
        assert_eq!(plural_normalize("heroes"), "hero");
        assert_eq!(plural_normalize("children"), "child");
        assert_eq!(plural_normalize("species"), "species");
        assert_eq!(plural_normalize("gas"), "gas");
    }

    #[test]
    fn exception_table_consistent() {
        for (s, p) in IRREGULAR_PLURALS {
            assert_eq!(plural_normalize(p), *s, "{p}");
            assert_eq!(plural_normalize(s), *s, "{s}");
            assert!(inflections(s).contains(*p));
        }
    }

    #[test]
    fn regular_plurals_normalize_back() {
        for w in [
            "petal", "box", "church", "city", "dish", "horse", "cat", "bus", "hero", "movie",
        ] {
            let p = regular_plural(w);
            assert_eq!(plural_normalize(&p), w, "{p}");
        }
    }

    proptest! {
        #[test]
        fn plural_normalize_idempotent(w in "[a-z]{1,12}") {
            let once = plural_normalize(&w);
            prop_assert_eq!(plural_normalize(&once), once.clone());
        }

        #[test]
        fn inflections_contain_input(w in "[a-z]{1,12}") {
            prop_assert!(inflections(&w).contains(&w));
        }
    }
}
