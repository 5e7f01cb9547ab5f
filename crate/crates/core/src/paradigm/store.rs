use std::fs;
use std::path::Path;

use super::{
    load_irregulars, load_paradigm, parse_stem_rules, parse_word_list, FeatureSet, IrregularEntry, Morpheme,
    Paradigm, ParadigmError, StemRule,
};
use crate::data;
use crate::phoneme::normalize;

/// Where an exact-form hit came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HitKind {
    Pronoun,
    Irregular,
}

impl HitKind {
    pub fn as_str(self) -> &'static str {
        match self {
            HitKind::Pronoun => "pronoun",
            HitKind::Irregular => "irregular",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactHit {
    pub lemma: String,
    pub features: FeatureSet,
    pub kind: HitKind,
}

pub const PRONOUN: &str = "pronoun";

/// Preferred load order; it also breaks ties in word-class guessing.
const CLASS_ORDER: [&str; 5] = ["noun", "adjective", "numeral", "verb", PRONOUN];

/// Paradigms, irregular forms, stem rules and prefixes.
#[derive(Debug, Clone, Default)]
pub struct ParadigmStore {
    paradigms: Vec<Paradigm>,
    irregulars: Vec<(String, IrregularEntry)>,
    stem_rules: Vec<StemRule>,
    prefixes: Vec<String>,
}

impl ParadigmStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// The data shipped with the crate.
    pub fn builtin() -> Self {
        let mut store = Self::new();
        for (_, xml) in data::GRAMMAR {
            store.add_paradigm(load_paradigm(xml).expect("shipped grammar parses"));
        }
        for (lemma, text) in data::IRREGULAR {
            store.add_irregulars(lemma, load_irregulars(text).expect("shipped irregulars parse"));
        }
        store.stem_rules = parse_stem_rules(data::STEM_RULES).expect("shipped stem rules parse");
        store.prefixes = parse_word_list(data::PREFIXES);
        store
    }

    /// Loads `grammar/*.xml`, `irregular/*.txt`, `stem_rules.txt` and
    /// `prefixes.txt` below `dir`. Missing parts are left empty.
    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Self, ParadigmError> {
        let dir = dir.as_ref();
        let read = |path: &Path| {
            fs::read_to_string(path).map_err(|source| ParadigmError::Io {
                path: path.to_path_buf(),
                source,
            })
        };
        let in_file = |path: &Path| {
            let path = path.to_path_buf();
            move |e| ParadigmError::InFile {
                path,
                source: Box::new(e),
            }
        };
        let mut store = Self::new();

        let mut grammar = files_with_extension(&dir.join("grammar"), "xml")?;
        grammar.sort_by_key(|p| {
            let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or("");
            (CLASS_ORDER.iter().position(|c| *c == stem).unwrap_or(CLASS_ORDER.len()), p.clone())
        });
        for path in grammar {
            store.add_paradigm(load_paradigm(&read(&path)?).map_err(in_file(&path))?);
        }
        let mut irregular = files_with_extension(&dir.join("irregular"), "txt")?;
        irregular.sort();
        for path in irregular {
            let lemma = normalize(path.file_stem().and_then(|s| s.to_str()).unwrap_or(""));
            store.add_irregulars(&lemma, load_irregulars(&read(&path)?).map_err(in_file(&path))?);
        }
        let stem_rules = dir.join("stem_rules.txt");
        if stem_rules.exists() {
            store.stem_rules = parse_stem_rules(&read(&stem_rules)?).map_err(in_file(&stem_rules))?;
        }
        let prefixes = dir.join("prefixes.txt");
        if prefixes.exists() {
            store.prefixes = parse_word_list(&read(&prefixes)?);
        }
        Ok(store)
    }

    /// Adds a paradigm. Morphemes of a class that is already loaded are
    /// appended to it.
    pub fn add_paradigm(&mut self, paradigm: Paradigm) {
        match self.paradigms.iter_mut().find(|p| p.word_class == paradigm.word_class) {
            Some(existing) => existing.morphemes.extend(paradigm.morphemes),
            None => self.paradigms.push(paradigm),
        }
    }

    /// Adds irregular forms of `lemma`. An entry's own `lemma` feature takes
    /// precedence and is removed from its features.
    pub fn add_irregulars(&mut self, lemma: &str, entries: Vec<IrregularEntry>) {
        for mut entry in entries {
            let lemma = entry.features.remove("lemma").unwrap_or_else(|| lemma.to_string());
            self.irregulars.push((lemma, entry));
        }
    }

    pub fn set_stem_rules(&mut self, rules: Vec<StemRule>) {
        self.stem_rules = rules;
    }

    pub fn set_prefixes(&mut self, prefixes: Vec<String>) {
        self.prefixes = prefixes;
    }

    pub fn paradigms(&self) -> &[Paradigm] {
        &self.paradigms
    }

    pub fn word_classes(&self) -> Vec<&str> {
        self.paradigms.iter().map(|p| p.word_class.as_str()).collect()
    }

    pub fn paradigm(&self, word_class: &str) -> Result<&Paradigm, ParadigmError> {
        self.paradigms
            .iter()
            .find(|p| p.word_class == word_class)
            .ok_or_else(|| ParadigmError::UnknownWordClass {
                name: word_class.to_string(),
            })
    }

    /// All morphemes of a word class, in document order.
    pub fn endings_for(&self, word_class: &str) -> Result<&[Morpheme], ParadigmError> {
        Ok(&self.paradigm(word_class)?.morphemes)
    }

    pub fn stem_rules(&self) -> &[StemRule] {
        &self.stem_rules
    }

    pub fn stem_rule(&self, declension: &str) -> Result<&StemRule, ParadigmError> {
        self.stem_rules
            .iter()
            .find(|r| r.declension == declension)
            .ok_or_else(|| ParadigmError::UnknownDeclension {
                declension: declension.to_string(),
            })
    }

    pub fn prefixes(&self) -> &[String] {
        &self.prefixes
    }

    /// Irregular entries listed under `lemma`.
    pub fn irregulars_of<'a>(&'a self, lemma: &'a str) -> impl Iterator<Item = &'a IrregularEntry> + 'a {
        self.irregulars.iter().filter(move |(l, _)| l == lemma).map(|(_, e)| e)
    }

    /// Lemmata of the pronoun paradigm (values of its `lemma` feature).
    pub fn pronoun_lemmas(&self) -> Vec<&str> {
        self.paradigm(PRONOUN).map(|p| p.feature_values("lemma")).unwrap_or_default()
    }

    /// Stored forms of a pronoun lemma, with features minus `lemma`.
    pub fn pronoun_forms(&self, lemma: &str) -> Vec<(String, FeatureSet)> {
        let Ok(p) = self.paradigm(PRONOUN) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for m in p.morphemes.iter().filter(|m| m.features.get("lemma") == Some(lemma)) {
            let mut features = m.features.clone();
            features.remove("lemma");
            for morph in &m.morphs {
                out.push((morph.surface.clone(), features.clone()));
            }
        }
        out
    }

    /// Pronoun-table and irregular-file entries whose form is exactly `form`.
    pub fn lookup_exact(&self, form: &str) -> Vec<ExactHit> {
        let form = normalize(form);
        let mut hits = Vec::new();
        if let Ok(p) = self.paradigm(PRONOUN) {
            for m in &p.morphemes {
                if m.morphs.iter().any(|morph| morph.surface == form) {
                    let mut features = m.features.clone();
                    let lemma = features.remove("lemma").unwrap_or_else(|| form.clone());
                    hits.push(ExactHit {
                        lemma,
                        features,
                        kind: HitKind::Pronoun,
                    });
                }
            }
        }
        for (lemma, entry) in &self.irregulars {
            if entry.form == form {
                hits.push(ExactHit {
                    lemma: lemma.clone(),
                    features: entry.features.clone(),
                    kind: HitKind::Irregular,
                });
            }
        }
        hits
    }
}

fn files_with_extension(dir: &Path, ext: &str) -> Result<Vec<std::path::PathBuf>, ParadigmError> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let io_err = |source| ParadigmError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err)? {
        let path = entry.map_err(io_err)?.path();
        if path.is_file() && path.extension().and_then(|e| e.to_str()) == Some(ext) {
            out.push(path);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_pronouns() {
        let store = ParadigmStore::builtin();
        let hits = store.lookup_exact("ahaṃ");
        assert_eq!(hits.len(), 1);
        let h = &hits[0];
        assert_eq!(h.kind, HitKind::Pronoun);
        assert_eq!(h.lemma, "amha");
        assert_eq!(h.features.get("case"), Some("nominative"));
        assert_eq!(h.features.get("person"), Some("1"));
        assert_eq!(h.features.get("number"), Some("singular"));
        let pronouns = store.endings_for("pronoun").unwrap();
        for form in ["ahaṃ", "maṃ"] {
            assert!(pronouns.iter().any(|m| m.morphs.iter().any(|x| x.surface == form)));
        }
    }

    #[test]
    fn builtin_irregular_and_misses() {
        let store = ParadigmStore::builtin();
        let hits = store.lookup_exact("eko");
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].kind, HitKind::Irregular);
        assert_eq!(hits[0].lemma, "eka");
        assert_eq!(hits[0].features.get("paradigm"), Some("numeral"));
        assert!(store.lookup_exact("zzz").is_empty());
        assert!(matches!(store.endings_for("xyz"), Err(ParadigmError::UnknownWordClass { .. })));
        assert_eq!(store.prefixes().len(), 24);
    }

    #[test]
    fn one_ending_paradigm() {
        let mut store = ParadigmStore::new();
        store.add_paradigm(load_paradigm("<noun><case type=\"nominative\"><ending>o</ending></case></noun>").unwrap());
        assert_eq!(store.endings_for("noun").unwrap().len(), 1);
    }

    #[test]
    fn shipped_data_dir_matches_builtin() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
        let from_disk = ParadigmStore::from_dir(dir).unwrap();
        let builtin = ParadigmStore::builtin();
        assert_eq!(from_disk.paradigms(), builtin.paradigms());
        assert_eq!(from_disk.stem_rules(), builtin.stem_rules());
        assert_eq!(from_disk.prefixes(), builtin.prefixes());
        assert_eq!(from_disk.lookup_exact("gavassa"), builtin.lookup_exact("gavassa"));
    }
}
