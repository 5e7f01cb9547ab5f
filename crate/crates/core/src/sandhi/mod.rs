//! Sandhi splitting and merging.
//!
//! Merging applies the forward rules across a word boundary. Splitting uses
//! the reversed, atomic rules: a table of (position, rule) pairs is built
//! for the word, and results are produced by applying sets of table entries
//! up to a given depth.

mod merge;
mod split;

pub use merge::{merge_pair, merge_words};
pub use split::{build_split_table, split_with, Confidence, SandhiTableEntry, SplitResult};

use thiserror::Error;

use crate::phoneme::{normalize, Phonotactics};
use crate::reversal::{parse_atomic_rules, reverse_ruleset, AtomicRule, ReversalError};
use crate::rules::{RuleError, RuleSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SandhiError {
    #[error("merging needs at least two words, got {given}")]
    TooFewWords { given: usize },
    #[error("empty word")]
    EmptyWord,
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error(transparent)]
    Reversal(#[from] ReversalError),
}

/// Forward rules, their atomic reversal, and the phonotactic validator.
#[derive(Debug, Clone)]
pub struct SandhiEngine {
    merge_rules: RuleSet,
    split_rules: Vec<AtomicRule>,
    phonotactics: Phonotactics,
}

impl SandhiEngine {
    pub fn new(merge_rules: RuleSet, split_rules: Vec<AtomicRule>) -> Self {
        SandhiEngine {
            merge_rules,
            split_rules,
            phonotactics: Phonotactics::default(),
        }
    }

    /// Builds the split rules by reversing `merge_rules`.
    pub fn from_merge_rules(merge_rules: RuleSet) -> Self {
        let reversed = reverse_ruleset(&merge_rules.rules, &merge_rules.constants, &merge_rules.operations);
        Self::new(merge_rules, reversed.rules)
    }

    /// Parses a dictionary file, a merge rule file and, if given, a split
    /// rule file. Without one, split rules are derived by reversal.
    pub fn parse(dictionary: &str, merge: &str, split: Option<&str>) -> Result<Self, SandhiError> {
        let merge_rules = RuleSet::parse(dictionary, merge)?;
        Ok(match split {
            Some(text) => Self::new(merge_rules, parse_atomic_rules(text)?),
            None => Self::from_merge_rules(merge_rules),
        })
    }

    /// The rules shipped with the crate.
    pub fn builtin() -> Self {
        use crate::data;
        Self::parse(data::SANDHI_DICTIONARY, data::SANDHI_MERGE, Some(data::SANDHI_SPLIT))
            .expect("shipped sandhi rules parse")
    }

    pub fn with_phonotactics(mut self, phonotactics: Phonotactics) -> Self {
        self.phonotactics = phonotactics;
        self
    }

    pub fn merge_rules(&self) -> &RuleSet {
        &self.merge_rules
    }

    pub fn split_rules(&self) -> &[AtomicRule] {
        &self.split_rules
    }

    pub fn phonotactics(&self) -> &Phonotactics {
        &self.phonotactics
    }

    pub fn build_split_table(&self, word: &str) -> Vec<SandhiTableEntry> {
        build_split_table(&normalize(word), &self.split_rules)
    }

    /// See [`split_with`]. The unsplit word always comes first.
    pub fn split(&self, word: &str, depth: usize) -> Vec<SplitResult> {
        split_with(&normalize(word), depth, &self.split_rules, &self.phonotactics)
    }

    pub fn merge<S: AsRef<str>>(&self, words: &[S]) -> Result<Vec<String>, SandhiError> {
        let words: Vec<String> = words.iter().map(|w| normalize(w.as_ref())).collect();
        merge_words(&words, &self.merge_rules)
    }

    /// Whether every word of a candidate passes the phonotactic rules.
    pub fn self_validate<S: AsRef<str>>(&self, candidate: &[S]) -> bool {
        self.phonotactics.is_valid_split(candidate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_split_file_matches_reversal() {
        let shipped = SandhiEngine::builtin();
        let derived = SandhiEngine::from_merge_rules(shipped.merge_rules().clone());
        assert_eq!(shipped.split_rules(), derived.split_rules());
    }

    #[test]
    fn documented_merges() {
        let e = SandhiEngine::builtin();
        let has = |words: &[&str], expected: &str| {
            let out = e.merge(words).unwrap();
            assert!(out.iter().any(|w| w == expected), "{words:?} -> {out:?}");
        };
        has(&["ajja", "uposatho"], "ajjuposatho");
        has(&["cakkhu", "indriyaṃ"], "cakkhundriyaṃ");
        has(&["pa", "kamo"], "pakkamo");
        has(&["saṃ", "mato"], "sammato");
        has(&["taṃ", "patto"], "taṃ patto");
        has(&["saṃ", "yogo"], "saññogo");
        has(&["kiṃ", "iti"], "kinti");
        has(&["saki", "eva"], "sakideva");
    }

    #[test]
    fn sakideva_splits_into_saki_eva() {
        let e = SandhiEngine::builtin();
        let out = e.split("sakideva", 1);
        assert_eq!(out[0].words, ["sakideva"]);
        assert!(out.iter().any(|r| r.valid && r.words == ["saki", "eva"]));
    }

    #[test]
    fn self_validation() {
        let e = SandhiEngine::builtin();
        assert!(e.self_validate(&["deva", "loka"]));
        assert!(!e.self_validate(&["kkkk"]));
        assert!(!e.self_validate(&[""]));
    }
}
