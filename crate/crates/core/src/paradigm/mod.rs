//! Inflection paradigms, irregular forms and stem rules.

mod irregular;
mod model;
mod store;
mod xml;

pub use irregular::load_irregulars;
pub use model::{FeatureSet, IrregularEntry, Morph, Morpheme, Occurrence, Paradigm};
pub use store::{ExactHit, HitKind, ParadigmStore, PRONOUN};
pub use xml::load_paradigm;

use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::phoneme::normalize;

#[derive(Debug, Error)]
pub enum ParadigmError {
    #[error("malformed grammar document: {reason}")]
    MalformedDocument { reason: String },
    #[error("paradigm {word_class:?} has no endings")]
    EmptyParadigm { word_class: String },
    #[error("line {line}: {reason}: {text:?}")]
    MalformedEntry {
        line: usize,
        text: String,
        reason: &'static str,
    },
    #[error("line {line}: malformed stem rule {text:?}")]
    MalformedStemRule { line: usize, text: String },
    #[error("unknown word class {name:?}")]
    UnknownWordClass { name: String },
    #[error("no stem rule for declension {declension:?}")]
    UnknownDeclension { declension: String },
    #[error("stem rule {declension}:{suffix} does not apply to {lemma:?}")]
    RuleNotApplicable {
        lemma: String,
        declension: String,
        suffix: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    InFile {
        path: PathBuf,
        #[source]
        source: Box<ParadigmError>,
    },
}

/// How to get from a lemma to its stem for one declension: strip `suffix`.
/// The analyzer re-attaches the same suffix to recover the lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemRule {
    pub declension: String,
    pub suffix: String,
}

impl StemRule {
    pub fn new(declension: impl Into<String>, suffix: impl Into<String>) -> Self {
        StemRule {
            declension: declension.into(),
            suffix: suffix.into(),
        }
    }

    pub fn derive_stem(&self, lemma: &str) -> Result<String, ParadigmError> {
        lemma
            .strip_suffix(self.suffix.as_str())
            .filter(|stem| !stem.is_empty() || self.suffix.is_empty())
            .map(str::to_string)
            .ok_or_else(|| ParadigmError::RuleNotApplicable {
                lemma: lemma.to_string(),
                declension: self.declension.clone(),
                suffix: self.suffix.clone(),
            })
    }

    pub fn lemma_for(&self, stem: &str) -> String {
        format!("{stem}{}", self.suffix)
    }
}

/// Parses `declension:suffix` lines.
pub fn parse_stem_rules(text: &str) -> Result<Vec<StemRule>, ParadigmError> {
    let text = normalize(text);
    let mut rules = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || ParadigmError::MalformedStemRule {
            line: i + 1,
            text: line.to_string(),
        };
        let (decl, suffix) = line.split_once(':').ok_or_else(bad)?;
        let decl = decl.trim();
        if decl.is_empty() || suffix.contains(':') {
            return Err(bad());
        }
        rules.push(StemRule::new(decl, suffix.trim()));
    }
    Ok(rules)
}

/// Parses a word list: one entry per line, `#` comments.
pub fn parse_word_list(text: &str) -> Vec<String> {
    normalize(text)
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stem_derivation() {
        let a = StemRule::new("a", "a");
        assert_eq!(a.derive_stem("deva").unwrap(), "dev");
        assert_eq!(StemRule::new("x", "").derive_stem("gam").unwrap(), "gam");
        assert!(matches!(a.derive_stem("gam"), Err(ParadigmError::RuleNotApplicable { .. })));
        assert!(matches!(a.derive_stem("a"), Err(ParadigmError::RuleNotApplicable { .. })));
        assert_eq!(a.lemma_for("dev"), "deva");
        assert_eq!(StemRule::new("ti", "ati").derive_stem("gacchati").unwrap(), "gacch");
    }

    #[test]
    fn stem_rule_file() {
        let rules = parse_stem_rules("# decl:suffix\na:a\nti : ati\n").unwrap();
        assert_eq!(rules, vec![StemRule::new("a", "a"), StemRule::new("ti", "ati")]);
        assert!(parse_stem_rules("a").is_err());
    }
}
