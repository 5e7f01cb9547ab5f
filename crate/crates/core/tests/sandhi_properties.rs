use std::collections::HashSet;

use pali_nlp::data;
use pali_nlp::lexicon::{LexiconStore, GENERATED};
use pali_nlp::phoneme::{normalize, phonemes};
use pali_nlp::rules::{parse_rules, RuleSet};
use pali_nlp::SandhiEngine;
use proptest::prelude::*;
use serde_json::json;

const LETTERS: [&str; 16] = ["a", "ā", "i", "ī", "u", "e", "o", "k", "kh", "t", "d", "n", "m", "s", "y", "ṃ"];
const WORDS: [&str; 16] = [
    "saki", "eva", "ajja", "uposatho", "cakkhu", "indriyaṃ", "pa", "kamo", "saṃ", "mato", "taṃ", "patto", "iti", "ca",
    "mahā", "idaṃ",
];

fn word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(LETTERS.to_vec()), 1..8).prop_map(|v| v.concat())
}

fn known_word() -> impl Strategy<Value = String> {
    prop::sample::select(WORDS.to_vec()).prop_map(str::to_string)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalization_is_idempotent(s in "\\PC{0,12}") {
        let once = normalize(&s);
        prop_assert_eq!(normalize(&once), once.clone());
        prop_assert_eq!(phonemes(&once).concat(), once);
    }

    #[test]
    fn rule_display_parses_back(src in prop::sample::select(data::SANDHI_MERGE.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#')).collect::<Vec<_>>())) {
        let set = RuleSet::parse(data::SANDHI_DICTIONARY, "").unwrap();
        let rule = &parse_rules(src, &set.constants).unwrap()[0];
        let again = &parse_rules(&rule.to_string(), &set.constants).unwrap()[0];
        prop_assert_eq!(&rule.lhs, &again.lhs);
        prop_assert_eq!(&rule.rhs, &again.rhs);
    }

    #[test]
    fn splitting_shape(w in word(), depth in 0usize..3) {
        let engine = SandhiEngine::builtin();
        let results = engine.split(&w, depth);
        prop_assert_eq!(results[0].text(), w.clone());
        prop_assert!(results[0].applied.is_empty());
        let texts: HashSet<_> = results.iter().map(|r| r.text()).collect();
        prop_assert_eq!(texts.len(), results.len());
        for r in &results {
            prop_assert_eq!(r.valid, engine.self_validate(&r.words));
            prop_assert!(r.cached_confidence().is_none());
        }
        let deeper: HashSet<_> = engine.split(&w, depth + 1).iter().map(|r| r.text()).collect();
        prop_assert!(texts.is_subset(&deeper));
    }

    #[test]
    fn merging_is_total_and_duplicate_free(a in known_word(), b in known_word()) {
        let engine = SandhiEngine::builtin();
        let merged = engine.merge(&[a.as_str(), b.as_str()]).unwrap();
        prop_assert!(!merged.is_empty());
        let distinct: HashSet<_> = merged.iter().collect();
        prop_assert_eq!(distinct.len(), merged.len());
    }

    #[test]
    fn every_single_word_merge_splits_back(a in known_word(), b in known_word()) {
        let engine = SandhiEngine::builtin();
        let pair = format!("{a} {b}");
        for m in engine.merge(&[a.as_str(), b.as_str()]).unwrap().into_iter().filter(|m| !m.contains(' ')) {
            let splits: Vec<String> = engine.split(&m, 1).iter().map(|s| s.text()).collect();
            prop_assert!(splits.contains(&pair) || m == format!("{a}{b}"), "{} does not split into {}: {:?}", m, pair, splits);
        }
    }

    #[test]
    fn lexicon_contains_matches_lookup(stored in prop::collection::vec(known_word(), 0..6), probe in known_word()) {
        let dir = tempfile::tempdir().unwrap();
        let store = LexiconStore::open(dir.path()).unwrap();
        for w in &stored {
            store.insert(GENERATED, json!({"word": w})).unwrap();
        }
        let hits = store.lookup(GENERATED, &probe).unwrap();
        prop_assert_eq!(store.contains(GENERATED, &probe).unwrap(), !hits.is_empty());
        prop_assert!(hits.len() <= 1);
        let distinct: HashSet<_> = stored.iter().collect();
        prop_assert_eq!(store.count(GENERATED).unwrap(), distinct.len());
        let reopened = LexiconStore::open(dir.path()).unwrap();
        prop_assert_eq!(reopened.lookup(GENERATED, &probe).unwrap(), hits);
    }
}

#[test]
fn self_validation_examples() {
    let engine = SandhiEngine::builtin();
    assert!(engine.self_validate(&["saki", "eva"]));
    assert!(!engine.self_validate(&["sakid", "eva"]));
    assert!(!engine.self_validate(&["kkk"]));
}
