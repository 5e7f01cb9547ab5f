//! Paradigm-driven generation of inflected forms.
//!
//! For a lemma and word class, the stem is derived with the stem rule of
//! each morpheme's declension and joined with every morph. Joins that fail
//! the phonotactic check are repaired with sandhi merging if possible and
//! dropped otherwise. Pronouns are listed in full and returned as stored.

use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::paradigm::{FeatureSet, Morph, ParadigmStore};
use crate::phoneme::{normalize, Phonotactics};
use crate::sandhi::SandhiEngine;

pub use crate::paradigm::PRONOUN;

/// Classes tried when a lemma's ending matches nothing.
pub const FALLBACK_CLASSES: [&str; 3] = ["noun", "adjective", "numeral"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
    #[error("empty input")]
    EmptyInput,
    #[error("unknown word class {name:?}")]
    UnknownWordClass { name: String },
}

/// A generated form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructedWord {
    pub word: String,
    pub lemma: String,
    pub stem: String,
    pub features: FeatureSet,
}

impl ConstructedWord {
    pub fn word_class(&self) -> Option<&str> {
        self.features.get("paradigm")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WordClassGuess {
    pub word_class: String,
    pub weight: usize,
}

/// Whether and how prefixes are attached to generated forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AffixMode {
    /// Bare forms only.
    None,
    /// Bare forms followed by every prefixed form.
    #[default]
    WithBare,
    /// Prefixed forms only: exactly forms × prefixes.
    Product,
}

#[derive(Debug, Clone, Default)]
pub struct GenerateOptions {
    /// Features every generated form must carry, e.g. `gender=feminine`.
    pub pin: FeatureSet,
    pub affixes: AffixMode,
}

impl GenerateOptions {
    pub fn bare() -> Self {
        GenerateOptions {
            affixes: AffixMode::None,
            ..Self::default()
        }
    }

    pub fn with_affixes(mut self, mode: AffixMode) -> Self {
        self.affixes = mode;
        self
    }

    pub fn pin(mut self, key: &str, value: &str) -> Self {
        self.pin.set(key, value);
        self
    }
}

/// Attaches every prefix to every word. The prefix is recorded as the
/// `prefix` feature. Prefixed forms are plain concatenations.
pub fn apply_affixes(words: &[ConstructedWord], prefixes: &[String], mode: AffixMode) -> Vec<ConstructedWord> {
    let mut out = Vec::new();
    if mode != AffixMode::Product || prefixes.is_empty() {
        out.extend_from_slice(words);
    }
    if mode == AffixMode::None {
        return out;
    }
    for w in words {
        for p in prefixes {
            let mut features = w.features.clone();
            features.set("prefix", p.as_str());
            out.push(ConstructedWord {
                word: format!("{p}{}", w.word),
                lemma: w.lemma.clone(),
                stem: w.stem.clone(),
                features,
            });
        }
    }
    out
}

/// Joins stem and morph. Returns the plain concatenation if it is a valid
/// word, else the first valid single-word sandhi merge, else `None`.
pub fn combine(stem: &str, morph: &Morph, phonotactics: &Phonotactics, sandhi: &SandhiEngine) -> Option<String> {
    let joined = format!("{stem}{}", morph.surface);
    if phonotactics.is_valid_word(&joined) {
        return Some(joined);
    }
    if stem.is_empty() || morph.is_zero() {
        return None;
    }
    sandhi
        .merge(&[stem, morph.surface.as_str()])
        .ok()?
        .into_iter()
        .find(|c| !c.contains(' ') && phonotactics.is_valid_word(c))
}

/// Generator over a paradigm store.
#[derive(Debug, Clone)]
pub struct Generator {
    store: Arc<ParadigmStore>,
    sandhi: Arc<SandhiEngine>,
}

impl Generator {
    pub fn new(store: Arc<ParadigmStore>, sandhi: Arc<SandhiEngine>) -> Self {
        Generator { store, sandhi }
    }

    pub fn store(&self) -> &ParadigmStore {
        &self.store
    }

    pub fn shared_store(&self) -> Arc<ParadigmStore> {
        Arc::clone(&self.store)
    }

    pub fn sandhi(&self) -> &SandhiEngine {
        &self.sandhi
    }

    pub fn validate_word(&self, word: &str) -> bool {
        self.sandhi.phonotactics().is_valid_word(word)
    }

    /// Word classes a lemma may belong to, judged by its ending alone.
    /// Pronoun lemmata come first. If nothing matches, the nominal,
    /// adjectival and numeral classes are returned.
    pub fn guess_wordclass_lemma(&self, lemma: &str) -> Result<Vec<String>, MorphError> {
        let lemma = normalize(lemma);
        if lemma.is_empty() {
            return Err(MorphError::EmptyInput);
        }
        let mut classes = Vec::new();
        if self.store.pronoun_lemmas().contains(&lemma.as_str()) {
            classes.push(PRONOUN.to_string());
        }
        for p in self.store.paradigms().iter().filter(|p| p.word_class != PRONOUN) {
            let matches = p.feature_values("declension").into_iter().any(|d| {
                self.store
                    .stem_rule(d)
                    .is_ok_and(|r| lemma.len() > r.suffix.len() && lemma.ends_with(r.suffix.as_str()))
            });
            if matches {
                classes.push(p.word_class.clone());
            }
        }
        if classes.is_empty() {
            classes = FALLBACK_CLASSES
                .iter()
                .filter(|c| self.store.paradigm(c).is_ok())
                .map(|c| c.to_string())
                .collect();
        }
        Ok(classes)
    }

    /// Weighs every regular word class by the endings found at the end of
    /// `word`: one plus the total length (in characters) of the distinct
    /// matching endings. Sorted by weight, ties in paradigm order. The list
    /// is cut after the first position where the weight drops by less than
    /// `pruning` to the next entry; `pruning` 0 keeps everything.
    pub fn guess_wordclass_inflected(&self, word: &str, pruning: usize) -> Vec<WordClassGuess> {
        let word = normalize(word);
        let mut guesses: Vec<WordClassGuess> = self
            .store
            .paradigms()
            .iter()
            .filter(|p| p.word_class != PRONOUN)
            .map(|p| WordClassGuess {
                word_class: p.word_class.clone(),
                weight: 1 + p
                    .endings()
                    .into_iter()
                    .filter(|e| word.ends_with(e))
                    .map(|e| e.chars().count())
                    .sum::<usize>(),
            })
            .collect();
        guesses.sort_by_key(|g| std::cmp::Reverse(g.weight));
        if let Some(cut) = guesses.windows(2).position(|w| w[0].weight - w[1].weight < pruning) {
            guesses.truncate(cut + 1);
        }
        guesses
    }

    /// All forms of `lemma`. Without a word class, every class suggested by
    /// [`Generator::guess_wordclass_lemma`] is used.
    pub fn generate(&self, lemma: &str, word_class: Option<&str>, options: &GenerateOptions) -> Result<Vec<ConstructedWord>, MorphError> {
        let lemma = normalize(lemma);
        if lemma.is_empty() {
            return Err(MorphError::EmptyInput);
        }
        let classes = match word_class {
            Some(c) => {
                self.store.paradigm(c).map_err(|_| MorphError::UnknownWordClass { name: c.to_string() })?;
                vec![c.to_string()]
            }
            None => self.guess_wordclass_lemma(&lemma)?,
        };

        let mut out = Vec::new();
        for class in &classes {
            if class == PRONOUN {
                for (word, features) in self.store.pronoun_forms(&lemma) {
                    out.push(ConstructedWord {
                        stem: word.clone(),
                        word,
                        lemma: lemma.clone(),
                        features,
                    });
                }
            } else {
                out.extend(self.decline(&lemma, class));
            }
        }
        for entry in self.store.irregulars_of(&lemma) {
            let class = entry.features.get("paradigm");
            if word_class.is_none() || class == word_class {
                out.push(ConstructedWord {
                    word: entry.form.clone(),
                    lemma: lemma.clone(),
                    stem: lemma.clone(),
                    features: entry.features.clone(),
                });
            }
        }

        out.retain(|w| w.features.contains_all(&options.pin));
        let mut seen = HashSet::new();
        out.retain(|w| seen.insert((w.word.clone(), w.features.clone())));
        Ok(apply_affixes(&out, self.store.prefixes(), options.affixes))
    }

    fn decline(&self, lemma: &str, class: &str) -> Vec<ConstructedWord> {
        let Ok(morphemes) = self.store.endings_for(class) else {
            return Vec::new();
        };
        let phonotactics = self.sandhi.phonotactics();
        let mut out = Vec::new();
        for m in morphemes {
            let Some(stem) = m
                .features
                .get("declension")
                .and_then(|d| self.store.stem_rule(d).ok())
                .and_then(|rule| rule.derive_stem(lemma).ok())
            else {
                continue;
            };
            for morph in &m.morphs {
                match combine(&stem, morph, phonotactics, &self.sandhi) {
                    Some(word) => out.push(ConstructedWord {
                        word,
                        lemma: lemma.to_string(),
                        stem: stem.clone(),
                        features: m.features.clone(),
                    }),
                    None => log::debug!("dropping {stem}+{} for {lemma}", morph.surface),
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generator() -> Generator {
        Generator::new(Arc::new(ParadigmStore::builtin()), Arc::new(SandhiEngine::builtin()))
    }

    fn word(w: &str) -> ConstructedWord {
        ConstructedWord {
            word: w.into(),
            lemma: w.into(),
            stem: w.into(),
            features: [("paradigm", "noun")].into_iter().collect(),
        }
    }

    #[test]
    fn devaya_is_generated() {
        let g = generator();
        let forms = g.generate("deva", Some("noun"), &GenerateOptions::bare()).unwrap();
        let expected: FeatureSet = [
            ("paradigm", "noun"),
            ("declension", "a"),
            ("gender", "masculine"),
            ("number", "singular"),
            ("case", "dative"),
        ]
        .into_iter()
        .collect();
        assert!(forms.iter().any(|f| f.word == "devāya" && f.features == expected && f.stem == "dev"));
    }

    #[test]
    fn pinning_gender() {
        let g = generator();
        let opts = GenerateOptions::bare().pin("gender", "neuter");
        let forms = g.generate("rūpa", Some("noun"), &opts).unwrap();
        assert!(!forms.is_empty());
        assert!(forms.iter().all(|f| f.features.get("gender") == Some("neuter")));
        assert!(forms.iter().any(|f| f.word == "rūpāni"));
    }

    #[test]
    fn pronoun_lemma_returns_stored_forms() {
        let g = generator();
        assert_eq!(g.guess_wordclass_lemma("amha").unwrap()[0], "pronoun");
        let forms = g.generate("amha", None, &GenerateOptions::bare()).unwrap();
        let aham = forms.iter().find(|f| f.word == "ahaṃ").unwrap();
        assert_eq!(aham.features.get("case"), Some("nominative"));
        assert!(forms.iter().any(|f| f.word == "maṃ" && f.features.get("case") == Some("accusative")));
    }

    #[test]
    fn irregular_lemma() {
        let g = generator();
        let forms = g.generate("go", None, &GenerateOptions::bare()).unwrap();
        assert!(forms.iter().any(|f| f.word == "gavassa"));
        assert!(forms.iter().all(|f| f.lemma == "go"));
    }

    #[test]
    fn lemma_guessing() {
        let g = generator();
        let deva = g.guess_wordclass_lemma("deva").unwrap();
        assert!(deva.contains(&"noun".to_string()) && deva.contains(&"adjective".to_string()));
        assert!(g.guess_wordclass_lemma("gacchati").unwrap().contains(&"verb".to_string()));
        assert_eq!(g.guess_wordclass_lemma("brahm").unwrap(), FALLBACK_CLASSES);
        assert_eq!(g.guess_wordclass_lemma(""), Err(MorphError::EmptyInput));
    }

    #[test]
    fn inflected_guessing() {
        let g = generator();
        let all = g.guess_wordclass_inflected("devāya", 0);
        assert_eq!(all.len(), 4);
        assert_eq!(all[0].word_class, "noun");
        assert!(all.windows(2).all(|w| w[0].weight >= w[1].weight));
        assert!(all.iter().all(|w| w.weight > 0));
        let none = g.guess_wordclass_inflected("qqq", 0);
        assert!(none.iter().all(|w| w.weight == 1));
        let names: Vec<_> = none.iter().map(|w| w.word_class.as_str()).collect();
        assert_eq!(names, ["noun", "adjective", "numeral", "verb"]);
        assert_eq!(g.guess_wordclass_inflected("qqq", 10).len(), 1);
    }

    #[test]
    fn combine_paths() {
        let g = generator();
        let v = Phonotactics::default();
        assert_eq!(combine("dev", &Morph::new("āya"), &v, &g.sandhi).as_deref(), Some("devāya"));
        assert_eq!(combine("dev", &Morph::zero(), &v, &g.sandhi), None);
        assert_eq!(combine("buddh", &Morph::new("o"), &v, &g.sandhi).as_deref(), Some("buddho"));
        assert_eq!(combine("mah", &Morph::new("ā"), &v, &g.sandhi).as_deref(), Some("mahā"));
        assert_eq!(combine("ssk", &Morph::new("a"), &v, &g.sandhi), None);
    }

    #[test]
    fn repair_through_sandhi() {
        let sandhi = SandhiEngine::parse(crate::data::SANDHI_DICTIONARY, "(DENTAL) (CONSONANT):$2", Some("")).unwrap();
        let strict = Phonotactics {
            max_consonant_run: 1,
            ..Phonotactics::default()
        };
        assert_eq!(combine("ud", &Morph::new("gata"), &strict, &sandhi).as_deref(), Some("ugata"));
        assert_eq!(combine("ud", &Morph::new("gata"), &Phonotactics::default(), &sandhi).as_deref(), Some("udgata"));
        assert_eq!(combine("uk", &Morph::new("gata"), &strict, &sandhi), None);
    }

    #[test]
    fn affixes() {
        let words = vec![word("deva")];
        let prefixes = vec!["pa".to_string(), "vi".to_string()];
        assert_eq!(apply_affixes(&words, &[], AffixMode::WithBare), words);
        let product = apply_affixes(&words, &prefixes, AffixMode::Product);
        assert_eq!(product.len(), 2);
        assert_eq!(product[1].word, "videva");
        assert_eq!(product[1].features.get("prefix"), Some("vi"));
        assert_eq!(apply_affixes(&words, &prefixes, AffixMode::WithBare).len(), 3);
        let many: Vec<_> = (0..168).map(|i| word(&format!("deva{i}"))).collect();
        let prefixes: Vec<String> = (0..24).map(|i| format!("p{i}")).collect();
        assert_eq!(apply_affixes(&many, &prefixes, AffixMode::Product).len(), 4032);
    }

    #[test]
    fn unknown_class() {
        let g = generator();
        assert_eq!(
            g.generate("deva", Some("xyz"), &GenerateOptions::bare()),
            Err(MorphError::UnknownWordClass { name: "xyz".into() })
        );
    }
}
