//! Analysis, lemmatization and stemming of inflected forms.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::generator::{ConstructedWord, Generator, MorphError, PRONOUN};
use crate::lexicon::{LexiconStore, GENERATED, LEMMA};
use crate::paradigm::{FeatureSet, HitKind, ParadigmStore};
use crate::phoneme::normalize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnalysisSource {
    Dictionary,
    Pronoun,
    Irregular,
    Rule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentRole {
    Prefix,
    Stem,
    Ending,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    pub surface: String,
    pub role: SegmentRole,
}

/// One reading of a word form.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisRecord {
    pub word: String,
    pub lemma: String,
    pub information: FeatureSet,
    /// Prefix, stem and ending of rule-based readings.
    pub segmentation: Option<Vec<Segment>>,
    pub source: AnalysisSource,
    /// The record as read from a lexicon, returned verbatim by `to_json`.
    pub stored: Option<Value>,
}

impl AnalysisRecord {
    pub fn word_class(&self) -> Option<&str> {
        self.information.get("paradigm")
    }

    /// `{"word": .., "grammar": {"morphology": {"lemma": .., "information": {..}}}}`
    pub fn to_json(&self) -> Value {
        if let Some(v) = &self.stored {
            return v.clone();
        }
        let information: Map<String, Value> = self
            .information
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect();
        json!({
            "word": self.word,
            "grammar": {"morphology": {"lemma": self.lemma, "information": information}},
        })
    }

    /// Reads a record in the `to_json` layout. The value is kept as `stored`.
    pub fn from_json(value: &Value) -> Option<Self> {
        let word = value.get("word")?.as_str()?;
        let morphology = value.get("grammar")?.get("morphology")?;
        let lemma = morphology.get("lemma")?.as_str()?;
        let mut information = FeatureSet::new();
        if let Some(info) = morphology.get("information").and_then(Value::as_object) {
            for (k, v) in info {
                information.set(k.as_str(), v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string()));
            }
        }
        Some(AnalysisRecord {
            word: word.to_string(),
            lemma: lemma.to_string(),
            information,
            segmentation: None,
            source: AnalysisSource::Dictionary,
            stored: Some(value.clone()),
        })
    }

    pub fn from_constructed(word: &ConstructedWord) -> Self {
        AnalysisRecord {
            word: word.word.clone(),
            lemma: word.lemma.clone(),
            information: word.features.clone(),
            segmentation: None,
            source: AnalysisSource::Rule,
            stored: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LemmaRecord {
    pub lemma: String,
    pub word_class: Option<String>,
}

/// Morpheme indices of one word class, keyed by morph surface.
#[derive(Debug, Clone, Default)]
struct EndingIndex {
    by_surface: HashMap<String, Vec<usize>>,
    max_len: usize,
}

#[derive(Debug, Clone)]
pub struct Analyzer {
    store: Arc<ParadigmStore>,
    generator: Generator,
    index: HashMap<String, EndingIndex>,
    /// Non-pronoun endings, longest first.
    stem_endings: Vec<String>,
    pruning: usize,
}

impl Analyzer {
    pub fn new(generator: Generator) -> Self {
        let store = generator.shared_store();
        let mut index = HashMap::new();
        let mut stem_endings = HashSet::new();
        for p in store.paradigms().iter().filter(|p| p.word_class != PRONOUN) {
            let mut idx = EndingIndex::default();
            for (i, m) in p.morphemes.iter().enumerate() {
                for morph in &m.morphs {
                    let list = idx.by_surface.entry(morph.surface.clone()).or_default();
                    if !list.contains(&i) {
                        list.push(i);
                    }
                    idx.max_len = idx.max_len.max(morph.surface.chars().count());
                    if !morph.is_zero() {
                        stem_endings.insert(morph.surface.clone());
                    }
                }
            }
            index.insert(p.word_class.clone(), idx);
        }
        let mut stem_endings: Vec<String> = stem_endings.into_iter().collect();
        stem_endings.sort_by(|a, b| b.chars().count().cmp(&a.chars().count()).then_with(|| a.cmp(b)));
        Analyzer {
            store,
            generator,
            index,
            stem_endings,
            pruning: 0,
        }
    }

    /// Pruning threshold handed to word-class guessing. The default 0 keeps
    /// every class.
    pub fn with_pruning(mut self, pruning: usize) -> Self {
        self.pruning = pruning;
        self
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    /// All readings of `word`: pronoun and irregular hits first, then
    /// readings from the paradigms, with and without a prefix.
    pub fn analyze(&self, word: &str, word_class: Option<&str>) -> Result<Vec<AnalysisRecord>, MorphError> {
        let word = normalize(word.trim());
        if word.is_empty() {
            return Err(MorphError::EmptyInput);
        }
        let classes: Vec<String> = match word_class {
            Some(c) => {
                self.store.paradigm(c).map_err(|_| MorphError::UnknownWordClass { name: c.to_string() })?;
                vec![c.to_string()]
            }
            None => self
                .generator
                .guess_wordclass_inflected(&word, self.pruning)
                .into_iter()
                .map(|g| g.word_class)
                .collect(),
        };

        let mut out = Vec::new();
        for hit in self.store.lookup_exact(&word) {
            if word_class.is_some_and(|c| hit.features.get("paradigm") != Some(c)) {
                continue;
            }
            out.push(AnalysisRecord {
                word: word.clone(),
                lemma: hit.lemma,
                information: hit.features,
                segmentation: None,
                source: match hit.kind {
                    HitKind::Pronoun => AnalysisSource::Pronoun,
                    HitKind::Irregular => AnalysisSource::Irregular,
                },
                stored: None,
            });
        }

        let mut candidates: Vec<(Option<&str>, &str)> = vec![(None, word.as_str())];
        for p in self.store.prefixes() {
            if let Some(rest) = word.strip_prefix(p.as_str()).filter(|r| !r.is_empty()) {
                candidates.push((Some(p), rest));
            }
        }
        for (prefix, body) in candidates {
            for class in &classes {
                self.analyze_body(&word, prefix, body, class, &mut out);
            }
        }

        let mut seen = HashSet::new();
        out.retain(|r| seen.insert((r.lemma.clone(), r.information.clone())));
        Ok(out)
    }

    fn analyze_body(&self, word: &str, prefix: Option<&str>, body: &str, class: &str, out: &mut Vec<AnalysisRecord>) {
        let (Some(idx), Ok(paradigm)) = (self.index.get(class), self.store.paradigm(class)) else {
            return;
        };
        let starts: Vec<usize> = body.char_indices().map(|(i, _)| i).skip(1).chain([body.len()]).collect();
        for &cut in starts.iter().rev() {
            let (stem, ending) = body.split_at(cut);
            if ending.chars().count() > idx.max_len {
                break;
            }
            let Some(morphemes) = idx.by_surface.get(ending) else {
                continue;
            };
            for &i in morphemes {
                let m = &paradigm.morphemes[i];
                let Some(rule) = m.features.get("declension").and_then(|d| self.store.stem_rule(d).ok()) else {
                    continue;
                };
                let mut information = m.features.clone();
                let mut segmentation = Vec::new();
                if let Some(p) = prefix {
                    information.set("prefix", p);
                    segmentation.push(Segment {
                        surface: p.to_string(),
                        role: SegmentRole::Prefix,
                    });
                }
                segmentation.push(Segment {
                    surface: stem.to_string(),
                    role: SegmentRole::Stem,
                });
                if !ending.is_empty() {
                    segmentation.push(Segment {
                        surface: ending.to_string(),
                        role: SegmentRole::Ending,
                    });
                }
                out.push(AnalysisRecord {
                    word: word.to_string(),
                    lemma: rule.lemma_for(stem),
                    information,
                    segmentation: Some(segmentation),
                    source: AnalysisSource::Rule,
                    stored: None,
                });
            }
        }
    }

    /// Like [`Analyzer::analyze`], but records stored in the lexicon's
    /// generated collection are returned instead when there are any. Lexicon
    /// failures are logged and fall back to the offline analysis.
    pub fn analyze_with_dictionary(&self, word: &str, lexicon: &LexiconStore) -> Result<Vec<AnalysisRecord>, MorphError> {
        let normalized = normalize(word.trim());
        if normalized.is_empty() {
            return Err(MorphError::EmptyInput);
        }
        match lexicon.lookup(GENERATED, &normalized) {
            Ok(stored) => {
                let records: Vec<_> = stored.iter().filter_map(AnalysisRecord::from_json).collect();
                if !records.is_empty() {
                    return Ok(records);
                }
            }
            Err(e) => log::warn!("lexicon lookup for {normalized:?} failed, analyzing offline: {e}"),
        }
        self.analyze(&normalized, None)
    }

    /// Distinct (lemma, word class) pairs of the analyses, in analysis order.
    pub fn lemmatize(&self, word: &str) -> Result<Vec<LemmaRecord>, MorphError> {
        Ok(project(&self.analyze(word, None)?))
    }

    /// Lemmatization backed by a lexicon. A word listed in the lemma
    /// collection is its own lemma; a word in the generated collection
    /// yields the stored lemmata; anything else is lemmatized offline.
    pub fn lemmatize_with_dictionary(&self, word: &str, lexicon: &LexiconStore) -> Result<Vec<LemmaRecord>, MorphError> {
        let word = normalize(word.trim());
        if word.is_empty() {
            return Err(MorphError::EmptyInput);
        }
        match lexicon.lookup(LEMMA, &word) {
            Ok(hits) if !hits.is_empty() => {
                let mut out: Vec<LemmaRecord> = hits
                    .iter()
                    .map(|v| LemmaRecord {
                        lemma: word.clone(),
                        word_class: v
                            .get("word_class")
                            .or_else(|| v.pointer("/grammar/morphology/information/paradigm"))
                            .and_then(Value::as_str)
                            .map(str::to_string),
                    })
                    .collect();
                let mut seen = HashSet::new();
                out.retain(|r| seen.insert(r.clone()));
                return Ok(out);
            }
            Ok(_) => {}
            Err(e) => {
                log::warn!("lemma lookup for {word:?} failed, lemmatizing offline: {e}");
                return self.lemmatize(&word);
            }
        }
        match lexicon.lookup(GENERATED, &word) {
            Ok(stored) => {
                let records: Vec<_> = stored.iter().filter_map(AnalysisRecord::from_json).collect();
                if !records.is_empty() {
                    return Ok(project(&records));
                }
            }
            Err(e) => log::warn!("lexicon lookup for {word:?} failed, lemmatizing offline: {e}"),
        }
        self.lemmatize(&word)
    }

    /// Strips the longest known ending, keeping at least one character,
    /// until no ending applies.
    pub fn stem(&self, word: &str) -> String {
        let mut current = normalize(word.trim());
        loop {
            let len = current.chars().count();
            let next = self
                .stem_endings
                .iter()
                .find(|e| e.chars().count() < len && current.ends_with(e.as_str()))
                .map(|e| current[..current.len() - e.len()].to_string());
            match next {
                Some(shorter) => current = shorter,
                None => return current,
            }
        }
    }
}

fn project(records: &[AnalysisRecord]) -> Vec<LemmaRecord> {
    let mut seen = HashSet::new();
    records
        .iter()
        .map(|r| LemmaRecord {
            lemma: r.lemma.clone(),
            word_class: r.word_class().map(str::to_string),
        })
        .filter(|r| seen.insert(r.clone()))
        .collect()
}
