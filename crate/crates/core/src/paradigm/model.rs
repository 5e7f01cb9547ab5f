use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

/// Grammatical features as key/value pairs.
///
/// Pairs keep the order in which they were added, but two sets are equal
/// when they hold the same pairs in any order.
#[derive(Debug, Clone, Default, Eq)]
pub struct FeatureSet {
    pairs: Vec<(String, String)>,
}

impl FeatureSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a pair. Returns `false` (and changes nothing) if the key is
    /// already present.
    pub fn insert(&mut self, key: impl Into<String>, value: impl Into<String>) -> bool {
        let key = key.into();
        if self.get(&key).is_some() {
            return false;
        }
        self.pairs.push((key, value.into()));
        true
    }

    /// Sets `key`, replacing an existing value in place.
    pub fn set(&mut self, key: impl Into<String>, value: impl Into<String>) {
        let key = key.into();
        let value = value.into();
        match self.pairs.iter_mut().find(|(k, _)| *k == key) {
            Some(pair) => pair.1 = value,
            None => self.pairs.push((key, value)),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.pairs.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn remove(&mut self, key: &str) -> Option<String> {
        let i = self.pairs.iter().position(|(k, _)| k == key)?;
        Some(self.pairs.remove(i).1)
    }

    pub fn contains_key(&self, key: &str) -> bool {
        self.get(key).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.pairs.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The pairs sorted by key.
    pub fn canonical(&self) -> BTreeMap<&str, &str> {
        self.iter().collect()
    }

    /// True if every pair of `other` is in `self`.
    pub fn contains_all(&self, other: &FeatureSet) -> bool {
        other.iter().all(|(k, v)| self.get(k) == Some(v))
    }
}

impl PartialEq for FeatureSet {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Hash for FeatureSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl<K: Into<String>, V: Into<String>> FromIterator<(K, V)> for FeatureSet {
    fn from_iter<I: IntoIterator<Item = (K, V)>>(iter: I) -> Self {
        let mut fs = FeatureSet::new();
        for (k, v) in iter {
            fs.set(k, v);
        }
        fs
    }
}

impl fmt::Display for FeatureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Whatever a grammar file says about how a morph affects its context.
/// Kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Occurrence(pub String);

/// One ending (or full form). An empty surface is a zero ending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morph {
    pub surface: String,
    pub occurrence: Option<Occurrence>,
}

impl Morph {
    pub fn new(surface: impl Into<String>) -> Self {
        Morph {
            surface: surface.into(),
            occurrence: None,
        }
    }

    pub fn zero() -> Self {
        Morph::new("")
    }

    pub fn is_zero(&self) -> bool {
        self.surface.is_empty()
    }
}

/// Morphs sharing one bundle of features.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morpheme {
    pub morphs: Vec<Morph>,
    pub features: FeatureSet,
}

/// The morphemes of one word class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paradigm {
    pub word_class: String,
    pub morphemes: Vec<Morpheme>,
}

impl Paradigm {
    /// Distinct non-empty morph surfaces, in document order.
    pub fn endings(&self) -> Vec<&str> {
        let mut seen = std::collections::HashSet::new();
        self.morphemes
            .iter()
            .flat_map(|m| &m.morphs)
            .map(|m| m.surface.as_str())
            .filter(|s| !s.is_empty() && seen.insert(*s))
            .collect()
    }

    /// Distinct values of `key` over all morphemes, in document order.
    pub fn feature_values(&self, key: &str) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for m in &self.morphemes {
            if let Some(v) = m.features.get(key) {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }
}

/// A listed form together with its features.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrregularEntry {
    pub form: String,
    pub features: FeatureSet,
}
