use std::collections::HashSet;

use super::SandhiError;
use crate::rules::RuleSet;

/// Every way of joining `left` and `right` with one rule application that
/// spans the boundary between them. Falls back to `"left right"` and
/// `"leftright"` when no rule applies.
pub fn merge_pair(left: &str, right: &str, rules: &RuleSet) -> Result<Vec<String>, SandhiError> {
    let text: Vec<char> = left.chars().chain([' ']).chain(right.chars()).collect();
    let boundary = left.chars().count();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for rule in &rules.rules {
        for start in 0..=boundary {
            for m in rule.matches_at(&text, start, &rules.operations)? {
                if m.end <= boundary {
                    continue;
                }
                for replacement in rule.render(&m, &rules.operations)? {
                    let mut merged: String = text[..m.start].iter().collect();
                    merged.push_str(&replacement);
                    merged.extend(&text[m.end..]);
                    if seen.insert(merged.clone()) {
                        out.push(merged);
                    }
                }
            }
        }
    }
    if out.is_empty() {
        out.push(format!("{left} {right}"));
        out.push(format!("{left}{right}"));
    }
    Ok(out)
}

/// Merges a word sequence pair by pair: the candidates for the first pair
/// are each merged with the third word, and so on.
pub fn merge_words<S: AsRef<str>>(words: &[S], rules: &RuleSet) -> Result<Vec<String>, SandhiError> {
    if words.len() < 2 {
        return Err(SandhiError::TooFewWords { given: words.len() });
    }
    if words.iter().any(|w| w.as_ref().is_empty()) {
        return Err(SandhiError::EmptyWord);
    }
    let mut current = vec![words[0].as_ref().to_string()];
    for next in &words[1..] {
        let mut merged = Vec::new();
        let mut seen = HashSet::new();
        for left in &current {
            for candidate in merge_pair(left, next.as_ref(), rules)? {
                if seen.insert(candidate.clone()) {
                    merged.push(candidate);
                }
            }
        }
        current = merged;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules(src: &str) -> RuleSet {
        RuleSet::parse(
            "=VOWEL:a,i,u,e,o,ā,ī,ū\n=CONSONANT:k,t,p,m\n+duplicate(x)\n",
            src,
        )
        .unwrap()
    }

    #[test]
    fn one_rule() {
        let rs = rules("(VOWEL) (VOWEL):$2");
        assert_eq!(merge_words(&["ajja", "uposatho"], &rs).unwrap(), ["ajjuposatho"]);
    }

    #[test]
    fn several_rules_keep_rule_order() {
        let rs = rules("(VOWEL) (VOWEL):$2\n(VOWEL) (VOWEL):$1\n(VOWEL) (eva|evaṃ):$1d$2");
        assert_eq!(
            merge_words(&["saki", "eva"], &rs).unwrap(),
            ["sakeva", "sakiva", "sakideva"]
        );
    }

    #[test]
    fn unmergeable_pair_is_kept_both_ways() {
        let rs = rules("(VOWEL) (VOWEL):$2");
        assert_eq!(merge_words(&["dhamma", "dhamma"], &rs).unwrap(), ["dhamma dhamma", "dhammadhamma"]);
    }

    #[test]
    fn rules_must_touch_the_boundary() {
        let rs = rules("a:x");
        assert_eq!(merge_words(&["aa", "aa"], &rs).unwrap(), ["aa aa", "aaaa"]);
    }

    #[test]
    fn three_words() {
        let rs = rules("(VOWEL) (VOWEL):$2\n(VOWEL) (CONSONANT):$1+duplicate($2)");
        assert_eq!(merge_words(&["pa", "kamo", "eva"], &rs).unwrap(), ["pakkameva"]);
    }

    #[test]
    fn too_few_words() {
        let rs = rules("a b:c");
        assert!(matches!(merge_words(&["a"], &rs), Err(SandhiError::TooFewWords { given: 1 })));
        assert!(matches!(merge_words(&["a", ""], &rs), Err(SandhiError::EmptyWord)));
    }
}
