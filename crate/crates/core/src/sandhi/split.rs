use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::lexicon::{Lexicon, LexiconError};
use crate::phoneme::Phonotactics;
use crate::reversal::AtomicRule;

/// A split rule applicable at a character position of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SandhiTableEntry {
    pub position: usize,
    pub rule: AtomicRule,
}

impl fmt::Display for SandhiTableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.position, self.rule)
    }
}

impl SandhiTableEntry {
    fn end(&self) -> usize {
        self.position + self.rule.lhs.chars().count()
    }

    fn delta(&self) -> isize {
        self.rule.rhs.chars().count() as isize - self.rule.lhs.chars().count() as isize
    }
}

/// Scans `word` left to right and records every (position, rule) pair where
/// the rule's left-hand side occurs. Entries are ordered by position, then
/// by rule order.
pub fn build_split_table(word: &str, rules: &[AtomicRule]) -> Vec<SandhiTableEntry> {
    let chars: Vec<char> = word.chars().collect();
    let mut table = Vec::new();
    for position in 0..chars.len() {
        for rule in rules {
            if !rule.lhs.is_empty() && rule.matches_at(&chars, position) {
                table.push(SandhiTableEntry {
                    position,
                    rule: rule.clone(),
                });
            }
        }
    }
    table
}

/// The share of a split's words found in a lexicon, kept as a fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Confidence {
    pub found: usize,
    pub total: usize,
}

impl Confidence {
    pub fn value(self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.found as f64 / self.total as f64
        }
    }
}

impl fmt::Display for Confidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.found, self.total)
    }
}

/// One candidate decomposition of a word.
#[derive(Debug)]
pub struct SplitResult {
    pub words: Vec<String>,
    /// Applied table entries, ordered by position in the original word.
    pub applied: Vec<SandhiTableEntry>,
    /// False if some constituent breaks the phonotactic rules.
    pub valid: bool,
    confidence: OnceLock<Confidence>,
}

impl Clone for SplitResult {
    fn clone(&self) -> Self {
        let confidence = OnceLock::new();
        if let Some(c) = self.confidence.get() {
            let _ = confidence.set(*c);
        }
        SplitResult {
            words: self.words.clone(),
            applied: self.applied.clone(),
            valid: self.valid,
            confidence,
        }
    }
}

impl PartialEq for SplitResult {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words && self.applied == other.applied && self.valid == other.valid
    }
}

impl SplitResult {
    pub fn new(words: Vec<String>, applied: Vec<SandhiTableEntry>, valid: bool) -> Self {
        SplitResult {
            words,
            applied,
            valid,
            confidence: OnceLock::new(),
        }
    }

    /// The words joined with single spaces.
    pub fn text(&self) -> String {
        self.words.join(" ")
    }

    /// `found / total` words present in `lexicon`. Computed on the first
    /// successful call and cached; a failing lexicon is not cached.
    pub fn confidence(&self, lexicon: &dyn Lexicon) -> Result<Confidence, LexiconError> {
        if let Some(c) = self.confidence.get() {
            return Ok(*c);
        }
        let mut found = 0;
        for w in &self.words {
            if lexicon.contains_word(w)? {
                found += 1;
            }
        }
        let c = Confidence {
            found,
            total: self.words.len(),
        };
        Ok(*self.confidence.get_or_init(|| c))
    }

    /// The cached confidence, if it has been computed.
    pub fn cached_confidence(&self) -> Option<Confidence> {
        self.confidence.get().copied()
    }
}

impl fmt::Display for SplitResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())?;
        if !self.valid {
            write!(f, " (invalid)")?;
        }
        if let Some(c) = self.cached_confidence() {
            write!(f, " [{c}]")?;
        }
        Ok(())
    }
}

struct State {
    text: Vec<char>,
    /// Indices into the table, ascending.
    applied: Vec<usize>,
    splits: usize,
}

/// Splits `word` with at most `depth` boundary-inserting rule applications.
///
/// The first result is always the unsplit word. Each further result
/// applies a set of non-overlapping table entries, each entry at most once;
/// positions of later entries are shifted by the length change of earlier
/// ones. Rules that insert no boundary do not count towards `depth`.
/// Results with identical text are kept once, first occurrence wins.
pub fn split_with(word: &str, depth: usize, rules: &[AtomicRule], phonotactics: &Phonotactics) -> Vec<SplitResult> {
    if word.is_empty() {
        return Vec::new();
    }
    let table = build_split_table(word, rules);
    let mut states = vec![State {
        text: word.chars().collect(),
        applied: Vec::new(),
        splits: 0,
    }];
    let mut seen_sets: HashSet<Vec<usize>> = HashSet::new();
    seen_sets.insert(Vec::new());
    let mut frontier = vec![0usize];
    if depth > 0 {
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &s in &frontier {
                for (e, entry) in table.iter().enumerate() {
                    let Some(state) = extend(&states[s], &table, e, entry, depth) else {
                        continue;
                    };
                    if seen_sets.insert(state.applied.clone()) {
                        next.push(states.len());
                        states.push(state);
                    }
                }
            }
            frontier = next;
        }
    }

    let mut seen_text = HashSet::new();
    states
        .into_iter()
        .filter_map(|st| {
            let text: String = st.text.iter().collect();
            if !seen_text.insert(text.clone()) {
                return None;
            }
            let words: Vec<String> = text.split(' ').map(str::to_string).collect();
            let valid = phonotactics.is_valid_split(&words);
            let applied = st.applied.iter().map(|&i| table[i].clone()).collect();
            Some(SplitResult::new(words, applied, valid))
        })
        .collect()
}

fn extend(state: &State, table: &[SandhiTableEntry], e: usize, entry: &SandhiTableEntry, depth: usize) -> Option<State> {
    if state.applied.contains(&e) {
        return None;
    }
    let splits = state.splits + usize::from(entry.rule.splits());
    if splits > depth {
        return None;
    }
    let mut shift: isize = 0;
    for &a in &state.applied {
        let other = &table[a];
        let disjoint = other.end() <= entry.position || entry.end() <= other.position;
        if !disjoint {
            return None;
        }
        if other.position < entry.position {
            shift += other.delta();
        }
    }
    let pos = (entry.position as isize + shift) as usize;
    let lhs_len = entry.rule.lhs.chars().count();
    // anchors refer to the original word, which the table already checked
    if !entry.rule.lhs.chars().eq(state.text[pos..pos + lhs_len].iter().copied()) {
        return None;
    }
    let mut text = state.text[..pos].to_vec();
    text.extend(entry.rule.rhs.chars());
    text.extend_from_slice(&state.text[pos + lhs_len..]);
    let mut applied = state.applied.clone();
    let at = applied.partition_point(|&a| table[a].position < entry.position || (table[a].position == entry.position && a < e));
    applied.insert(at, e);
    Some(State { text, applied, splits })
}
