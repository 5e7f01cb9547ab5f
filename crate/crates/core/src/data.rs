//! Data files compiled into the crate. The same files live under `data/`
//! and can be loaded from disk instead with `Pali::from_data_dir`.

pub const SANDHI_DICTIONARY: &str = include_str!("../data/sandhi/dictionary.txt");
pub const SANDHI_MERGE: &str = include_str!("../data/sandhi/merge.txt");
pub const SANDHI_SPLIT: &str = include_str!("../data/sandhi/split.txt");

/// Grammar documents as (word class, XML), in load order.
pub const GRAMMAR: [(&str, &str); 5] = [
    ("noun", include_str!("../data/grammar/noun.xml")),
    ("adjective", include_str!("../data/grammar/adjective.xml")),
    ("numeral", include_str!("../data/grammar/numeral.xml")),
    ("verb", include_str!("../data/grammar/verb.xml")),
    ("pronoun", include_str!("../data/grammar/pronoun.xml")),
];

/// Irregular-form files as (lemma, contents).
pub const IRREGULAR: [(&str, &str); 3] = [
    ("eka", include_str!("../data/irregular/eka.txt")),
    ("go", include_str!("../data/irregular/go.txt")),
    ("rāja", include_str!("../data/irregular/rāja.txt")),
];

pub const STEM_RULES: &str = include_str!("../data/stem_rules.txt");
pub const PREFIXES: &str = include_str!("../data/prefixes.txt");
