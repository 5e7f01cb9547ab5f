//! Pali phoneme inventory, text normalization and the phonotactic validator.
//!
//! All text entering the toolkit goes through [`normalize`] so that letters
//! with diacritics (ā, ṃ, ñ, ṅ, ṭ, ḍ, ḷ, ī, ū, ṇ) are single code points.
//! Aspirates (kh, gh, ...) stay two code points in surface strings but are
//! read as one phoneme by [`phonemes`].

use unicode_normalization::UnicodeNormalization;

/// Vowels, short and long. `e` and `o` count as long.
pub const VOWELS: [&str; 8] = ["a", "i", "u", "e", "o", "ā", "ī", "ū"];

/// Aspirate digraphs, each one phoneme.
pub const ASPIRATES: [&str; 10] = ["kh", "gh", "ch", "jh", "ṭh", "ḍh", "th", "dh", "ph", "bh"];

/// The niggahīta.
pub const NIGGAHITA: &str = "ṃ";

/// Canonical composition (NFC) of `text`.
pub fn normalize(text: &str) -> String {
    text.nfc().collect()
}

fn takes_aspiration(c: char) -> bool {
    matches!(c, 'k' | 'g' | 'c' | 'j' | 'ṭ' | 'ḍ' | 't' | 'd' | 'p' | 'b')
}

/// Splits an (already normalized) string into phonemes.
///
/// Spaces are returned as their own tokens.
pub fn phonemes(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut iter = text.char_indices().peekable();
    while let Some((start, c)) = iter.next() {
        let mut end = start + c.len_utf8();
        if takes_aspiration(c) {
            if let Some(&(i, 'h')) = iter.peek() {
                end = i + 1;
                iter.next();
            }
        }
        out.push(&text[start..end]);
    }
    out
}

pub fn is_vowel(phoneme: &str) -> bool {
    VOWELS.contains(&phoneme)
}

pub fn is_aspirate(phoneme: &str) -> bool {
    ASPIRATES.contains(&phoneme)
}

/// Short/long vowel pairs.
pub(crate) const LENGTH_PAIRS: [(&str, &str); 3] = [("a", "ā"), ("i", "ī"), ("u", "ū")];

/// Simple, general phonotactic rules used to reject improbable words.
///
/// A word is accepted when it
/// - is non-empty,
/// - contains at least one vowel (if `require_vowel`),
/// - has no run of more than `max_consonant_run` consonant phonemes,
/// - ends in one of `allowed_finals` (if the list is non-empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phonotactics {
    pub require_vowel: bool,
    pub max_consonant_run: usize,
    pub allowed_finals: Vec<String>,
}

impl Default for Phonotactics {
    fn default() -> Self {
        let mut allowed_finals: Vec<String> = VOWELS.iter().map(|v| v.to_string()).collect();
        allowed_finals.push(NIGGAHITA.to_string());
        Phonotactics {
            require_vowel: true,
            max_consonant_run: 2,
            allowed_finals,
        }
    }
}

impl Phonotactics {
    /// Validates a single word.
    pub fn is_valid_word(&self, word: &str) -> bool {
        let word = normalize(word);
        let tokens = phonemes(&word);
        if tokens.is_empty() || tokens.iter().any(|p| p.trim().is_empty()) {
            return false;
        }
        if self.require_vowel && !tokens.iter().any(|p| is_vowel(p)) {
            return false;
        }
        let mut run = 0;
        for p in &tokens {
            if is_vowel(p) {
                run = 0;
            } else {
                run += 1;
                if run > self.max_consonant_run {
                    return false;
                }
            }
        }
        if !self.allowed_finals.is_empty() {
            let last = tokens[tokens.len() - 1];
            if !self.allowed_finals.iter().any(|f| f == last) {
                return false;
            }
        }
        true
    }

    /// Validates every constituent of a split candidate.
    pub fn is_valid_split<S: AsRef<str>>(&self, words: &[S]) -> bool {
        !words.is_empty() && words.iter().all(|w| self.is_valid_word(w.as_ref()))
    }
}
