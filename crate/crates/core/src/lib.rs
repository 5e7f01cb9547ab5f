//! Morphology and sandhi for Pali.
//!
//! [`Pali`] bundles the paradigm store, the sandhi engine and an optional
//! lexicon behind one set of calls:
//!
//! ```
//! use pali_nlp::Pali;
//!
//! let pali = Pali::builtin();
//! let lemmata = pali.lemmatize("devāya").unwrap();
//! assert!(lemmata.iter().any(|l| l.lemma == "deva"));
//! assert_eq!(pali.stem("devāya"), "dev");
//! assert!(pali.merge(&["saki", "eva"]).unwrap().contains(&"sakideva".to_string()));
//! ```
//!
//! The modules can also be used on their own.

pub mod analyzer;
pub mod console;
pub mod data;
pub mod generator;
pub mod lexicon;
pub mod paradigm;
pub mod phoneme;
pub mod reversal;
pub mod rules;
pub mod sandhi;

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

pub use analyzer::{AnalysisRecord, AnalysisSource, Analyzer, LemmaRecord, Segment, SegmentRole};
pub use generator::{AffixMode, ConstructedWord, GenerateOptions, Generator, MorphError, WordClassGuess};
pub use lexicon::{Lexicon, LexiconError, LexiconStore};
pub use paradigm::{FeatureSet, ParadigmError, ParadigmStore};
pub use sandhi::{Confidence, SandhiEngine, SandhiError, SplitResult};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Morph(#[from] MorphError),
    #[error(transparent)]
    Sandhi(#[from] SandhiError),
    #[error(transparent)]
    Paradigm(#[from] ParadigmError),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Loads `dictionary.txt` and `merge.txt` from `dir`, plus `split.txt` if
/// present. Without a split file the merge rules are reversed on load.
pub fn load_sandhi_dir(dir: impl AsRef<Path>) -> Result<SandhiEngine, Error> {
    let dir = dir.as_ref();
    let read = |name: &str| {
        let path = dir.join(name);
        fs::read_to_string(&path).map_err(|source| Error::Io { path, source })
    };
    let dictionary = read("dictionary.txt")?;
    let merge = read("merge.txt")?;
    let split = if dir.join("split.txt").exists() {
        Some(read("split.txt")?)
    } else {
        None
    };
    Ok(SandhiEngine::parse(&dictionary, &merge, split.as_deref())?)
}

/// The toolkit facade.
#[derive(Debug, Clone)]
pub struct Pali {
    analyzer: Analyzer,
    sandhi: Arc<SandhiEngine>,
    lexicon: Option<Arc<LexiconStore>>,
}

impl Pali {
    pub fn new(store: ParadigmStore, sandhi: SandhiEngine) -> Self {
        let sandhi = Arc::new(sandhi);
        let generator = Generator::new(Arc::new(store), Arc::clone(&sandhi));
        Pali {
            analyzer: Analyzer::new(generator),
            sandhi,
            lexicon: None,
        }
    }

    /// Shipped paradigms and sandhi rules.
    pub fn builtin() -> Self {
        Self::new(ParadigmStore::builtin(), SandhiEngine::builtin())
    }

    /// Paradigm data from `dir` (see [`ParadigmStore::from_dir`]) and sandhi
    /// rules from `dir/sandhi` if that directory exists, the shipped ones
    /// otherwise.
    pub fn from_data_dir(dir: impl AsRef<Path>) -> Result<Self, Error> {
        let dir = dir.as_ref();
        let store = ParadigmStore::from_dir(dir)?;
        let sandhi_dir = dir.join("sandhi");
        let sandhi = if sandhi_dir.is_dir() {
            load_sandhi_dir(sandhi_dir)?
        } else {
            SandhiEngine::builtin()
        };
        Ok(Self::new(store, sandhi))
    }

    pub fn with_lexicon(mut self, lexicon: LexiconStore) -> Self {
        self.lexicon = Some(Arc::new(lexicon));
        self
    }

    pub fn with_sandhi(self, sandhi: SandhiEngine) -> Self {
        let mut pali = Self::new(self.analyzer.generator().store().clone(), sandhi);
        pali.lexicon = self.lexicon;
        pali
    }

    pub fn lexicon(&self) -> Option<&LexiconStore> {
        self.lexicon.as_deref()
    }

    pub fn analyzer(&self) -> &Analyzer {
        &self.analyzer
    }

    pub fn generator(&self) -> &Generator {
        self.analyzer.generator()
    }

    pub fn sandhi(&self) -> &SandhiEngine {
        &self.sandhi
    }

    /// Lemmata of `word`, through the lexicon when one is attached.
    pub fn lemmatize(&self, word: &str) -> Result<Vec<LemmaRecord>, Error> {
        Ok(match &self.lexicon {
            Some(lex) => self.analyzer.lemmatize_with_dictionary(word, lex)?,
            None => self.analyzer.lemmatize(word)?,
        })
    }

    /// Analyses of `word`. With a lexicon attached and no word class given,
    /// stored records take precedence.
    pub fn analyze(&self, word: &str, word_class: Option<&str>) -> Result<Vec<AnalysisRecord>, Error> {
        Ok(match (&self.lexicon, word_class) {
            (Some(lex), None) => self.analyzer.analyze_with_dictionary(word, lex)?,
            _ => self.analyzer.analyze(word, word_class)?,
        })
    }

    pub fn generate(&self, lemma: &str, word_class: Option<&str>, options: &GenerateOptions) -> Result<Vec<ConstructedWord>, Error> {
        Ok(self.generator().generate(lemma, word_class, options)?)
    }

    /// Generates the forms of every lemma and stores them in `lexicon`'s
    /// generated collection. Returns the number of new records.
    pub fn generate_into<S: AsRef<str>>(
        &self,
        lemmata: &[S],
        options: &GenerateOptions,
        lexicon: &LexiconStore,
    ) -> Result<usize, Error> {
        let mut added = 0;
        for lemma in lemmata {
            for word in self.generate(lemma.as_ref(), None, options)? {
                if lexicon.insert(lexicon::GENERATED, AnalysisRecord::from_constructed(&word).to_json())? {
                    added += 1;
                }
            }
        }
        Ok(added)
    }

    pub fn stem(&self, word: &str) -> String {
        self.analyzer.stem(word)
    }

    pub fn split(&self, word: &str, depth: usize) -> Vec<SplitResult> {
        self.sandhi.split(word, depth)
    }

    /// Confidence of a split against the attached lexicon, if any.
    pub fn confidence(&self, split: &SplitResult) -> Option<Result<Confidence, LexiconError>> {
        self.lexicon.as_deref().map(|lex| split.confidence(lex))
    }

    pub fn merge<S: AsRef<str>>(&self, words: &[S]) -> Result<Vec<String>, Error> {
        Ok(self.sandhi.merge(words)?)
    }
}
