//! A file-backed store of word collections.
//!
//! A store is a directory holding one file per collection. The file is
//! named exactly like the collection and holds one JSON record per line.
//! Every record carries a `"word"` key; lookups are exact matches on its
//! NFC-normalized value. Collections are read from disk the first time
//! they are touched.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use serde_json::Value;
use thiserror::Error;

use crate::phoneme::normalize;

pub const WORDFORMS: &str = "wordforms";
pub const LEMMA: &str = "lemma";
pub const GENERATED: &str = "generated";

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("unknown collection {name:?}")]
    UnknownCollection { name: String },
    #[error("record has no \"word\" key")]
    MissingWordKey,
    #[error("{path}: {source}")]
    IoFailure {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}:{line}: {message}")]
    CorruptRecord {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("lexicon unavailable: {reason}")]
    Unavailable { reason: String },
}

/// Anything that can answer "is this a known word?".
pub trait Lexicon {
    fn contains_word(&self, word: &str) -> Result<bool, LexiconError>;
}

impl Lexicon for HashSet<String> {
    fn contains_word(&self, word: &str) -> Result<bool, LexiconError> {
        Ok(self.contains(&normalize(word)))
    }
}

impl Lexicon for BTreeSet<String> {
    fn contains_word(&self, word: &str) -> Result<bool, LexiconError> {
        Ok(self.contains(&normalize(word)))
    }
}

impl<L: Lexicon + ?Sized> Lexicon for &L {
    fn contains_word(&self, word: &str) -> Result<bool, LexiconError> {
        (**self).contains_word(word)
    }
}

#[derive(Debug, Default)]
struct Collection {
    records: Vec<Value>,
    index: HashMap<String, Vec<usize>>,
    lines: HashSet<String>,
}

impl Collection {
    fn push(&mut self, key: String, line: String, record: Value) -> bool {
        if !self.lines.insert(line) {
            return false;
        }
        self.index.entry(key).or_default().push(self.records.len());
        self.records.push(record);
        true
    }
}

fn word_key(record: &Value) -> Result<String, LexiconError> {
    record
        .get("word")
        .and_then(Value::as_str)
        .map(normalize)
        .ok_or(LexiconError::MissingWordKey)
}

/// Directory-backed collections of JSON records.
#[derive(Debug)]
pub struct LexiconStore {
    dir: PathBuf,
    names: RwLock<BTreeSet<String>>,
    loaded: RwLock<HashMap<String, Collection>>,
    confidence_collections: Vec<String>,
}

impl LexiconStore {
    /// Opens (creating if needed) the store at `dir`. Besides the three
    /// standard collections, every regular file already in the directory
    /// is a collection.
    pub fn open(dir: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let dir = dir.as_ref().to_path_buf();
        let io_err = |source| LexiconError::IoFailure {
            path: dir.clone(),
            source,
        };
        fs::create_dir_all(&dir).map_err(io_err)?;
        let mut names: BTreeSet<String> = [WORDFORMS, LEMMA, GENERATED].map(String::from).into();
        for entry in fs::read_dir(&dir).map_err(io_err)? {
            let entry = entry.map_err(io_err)?;
            if entry.file_type().map_err(io_err)?.is_file() {
                if let Some(name) = entry.file_name().to_str() {
                    if !name.starts_with('.') {
                        names.insert(name.to_string());
                    }
                }
            }
        }
        Ok(LexiconStore {
            dir,
            names: RwLock::new(names),
            loaded: RwLock::new(HashMap::new()),
            confidence_collections: vec![WORDFORMS.to_string(), LEMMA.to_string()],
        })
    }

    pub fn path(&self) -> &Path {
        &self.dir
    }

    /// Collections consulted by [`Lexicon::contains_word`]; `wordforms` and
    /// `lemma` unless changed.
    pub fn with_confidence_collections<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.confidence_collections = names.into_iter().map(Into::into).collect();
        self
    }

    /// Registers a user-defined collection.
    pub fn add_collection(&self, name: &str) {
        self.names.write().unwrap().insert(name.to_string());
    }

    pub fn collections(&self) -> Vec<String> {
        self.names.read().unwrap().iter().cloned().collect()
    }

    fn ensure_loaded(&self, name: &str) -> Result<(), LexiconError> {
        if !self.names.read().unwrap().contains(name) {
            return Err(LexiconError::UnknownCollection {
                name: name.to_string(),
            });
        }
        if self.loaded.read().unwrap().contains_key(name) {
            return Ok(());
        }
        let mut loaded = self.loaded.write().unwrap();
        if loaded.contains_key(name) {
            return Ok(());
        }
        let path = self.dir.join(name);
        let mut coll = Collection::default();
        match fs::read_to_string(&path) {
            Ok(text) => {
                for (i, line) in text.lines().enumerate() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    let corrupt = |message: String| LexiconError::CorruptRecord {
                        path: path.clone(),
                        line: i + 1,
                        message,
                    };
                    let record: Value = serde_json::from_str(line).map_err(|e| corrupt(e.to_string()))?;
                    let key = word_key(&record).map_err(|e| corrupt(e.to_string()))?;
                    coll.push(key, line.to_string(), record);
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(source) => return Err(LexiconError::IoFailure { path, source }),
        }
        loaded.insert(name.to_string(), coll);
        Ok(())
    }

    /// All records of `collection` for `word`, in insertion order.
    pub fn lookup(&self, collection: &str, word: &str) -> Result<Vec<Value>, LexiconError> {
        self.ensure_loaded(collection)?;
        let loaded = self.loaded.read().unwrap();
        let coll = &loaded[collection];
        Ok(coll
            .index
            .get(&normalize(word))
            .map(|ids| ids.iter().map(|&i| coll.records[i].clone()).collect())
            .unwrap_or_default())
    }

    pub fn contains(&self, collection: &str, word: &str) -> Result<bool, LexiconError> {
        self.ensure_loaded(collection)?;
        let loaded = self.loaded.read().unwrap();
        Ok(loaded[collection].index.contains_key(&normalize(word)))
    }

    /// Number of records in `collection`.
    pub fn count(&self, collection: &str) -> Result<usize, LexiconError> {
        self.ensure_loaded(collection)?;
        Ok(self.loaded.read().unwrap()[collection].records.len())
    }

    /// Appends `record` to `collection` and flushes it to disk. Inserting a
    /// record identical to a stored one does nothing. Returns whether the
    /// record was new.
    pub fn insert(&self, collection: &str, record: Value) -> Result<bool, LexiconError> {
        let key = word_key(&record)?;
        self.ensure_loaded(collection)?;
        let line = record.to_string();
        let mut loaded = self.loaded.write().unwrap();
        let coll = loaded.get_mut(collection).expect("loaded above");
        if coll.lines.contains(&line) {
            return Ok(false);
        }
        let path = self.dir.join(collection);
        let io_err = |source| LexiconError::IoFailure {
            path: path.clone(),
            source,
        };
        let mut file = OpenOptions::new().create(true).append(true).open(&path).map_err(io_err)?;
        writeln!(file, "{line}").map_err(io_err)?;
        file.flush().map_err(io_err)?;
        Ok(coll.push(key, line, record))
    }
}

impl Lexicon for LexiconStore {
    fn contains_word(&self, word: &str) -> Result<bool, LexiconError> {
        for name in &self.confidence_collections {
            if self.contains(name, word)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
