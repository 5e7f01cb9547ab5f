//! Acceptance checks. Prints one PASS or FAIL line per criterion and exits
//! non-zero if any fails.

use std::cell::Cell;
use std::collections::{BTreeSet, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pali_nlp::data;
use pali_nlp::lexicon::{Lexicon, LexiconError};
use pali_nlp::phoneme::Phonotactics;
use pali_nlp::reversal::{parse_atomic_rules, reverse_ruleset};
use pali_nlp::rules::{parse_rules, RuleSet};
use pali_nlp::sandhi::{split_with, SplitResult};
use pali_nlp::{AffixMode, GenerateOptions, Pali};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::json;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixtures().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn fixture_lines(name: &str) -> Vec<String> {
    read_fixture(name)
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    if took < limit {
        Ok(took)
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn reversal_golden() -> Outcome {
    let start = Instant::now();
    let shipped = RuleSet::parse(data::SANDHI_DICTIONARY, "").map_err(|e| e.to_string())?;
    let rule = parse_rules("(DENTAL) (CONSONANT):+duplicate($2)", &shipped.constants).map_err(|e| e.to_string())?;
    let reversed = reverse_ruleset(&rule, &shipped.constants, &shipped.operations);
    let took = within(Duration::from_secs(1), start)?;
    let got: BTreeSet<String> = reversed.rules.iter().map(ToString::to_string).collect();
    let expected: BTreeSet<String> = parse_atomic_rules(&read_fixture("dental_duplicate_reversal.txt"))
        .map_err(|e| e.to_string())?
        .iter()
        .map(ToString::to_string)
        .collect();
    for anchor in ["kk:t k", "cch:dh ch", "ss:l s"] {
        if !got.contains(anchor) {
            return Err(format!("missing {anchor:?}"));
        }
    }
    if got != expected {
        let missing: Vec<_> = expected.difference(&got).collect();
        let extra: Vec<_> = got.difference(&expected).collect();
        return Err(format!("missing {missing:?}, extra {extra:?}"));
    }
    Ok(format!("{} rules, {took:?}", got.len()))
}

fn expandable_expansion() -> Outcome {
    let shipped = RuleSet::parse(data::SANDHI_DICTIONARY, "").map_err(|e| e.to_string())?;
    let rule = parse_rules("(a|ā) (i|ī):e", &shipped.constants).map_err(|e| e.to_string())?;
    let got: BTreeSet<String> = reverse_ruleset(&rule, &shipped.constants, &shipped.operations)
        .rules
        .iter()
        .map(ToString::to_string)
        .collect();
    let expected: BTreeSet<String> = ["e:a i", "e:a ī", "e:ā i", "e:ā ī"].iter().map(|s| s.to_string()).collect();
    if got == expected {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("got {got:?}"))
    }
}

fn depth_semantics() -> Outcome {
    let rules = parse_atomic_rules("b:x y\nd:w v").map_err(|e| e.to_string())?;
    let v = Phonotactics::default();
    let texts = |depth| -> Vec<String> { split_with("abcdef", depth, &rules, &v).iter().map(SplitResult::text).collect() };
    let (d1, d2, d3) = (texts(1), texts(2), texts(3));
    let e1 = ["abcdef", "ax ycdef", "abcw vef"];
    let e2 = ["abcdef", "ax ycdef", "abcw vef", "ax ycw vef"];
    if d1 != e1 || d2 != e2 || d3 != d2 {
        return Err(format!("depth 1 {d1:?}, depth 2 {d2:?}, depth 3 {d3:?}"));
    }
    Ok(format!("depth 2 adds {:?}", d2[3]))
}

fn merger_examples() -> Outcome {
    let pali = Pali::builtin();
    let cases = [
        (["ajja", "uposatho"], "ajjuposatho"),
        (["cakkhu", "indriyaṃ"], "cakkhundriyaṃ"),
        (["pa", "kamo"], "pakkamo"),
        (["saṃ", "mato"], "sammato"),
        (["taṃ", "patto"], "taṃ patto"),
    ];
    for (words, expected) in cases {
        let merged = pali.merge(&words).map_err(|e| e.to_string())?;
        if !merged.iter().any(|m| m == expected) {
            return Err(format!("{words:?} gave {merged:?}, expected {expected:?}"));
        }
    }
    Ok(format!("{} examples", cases.len()))
}

fn generation_count() -> Outcome {
    let pali = Pali::from_data_dir(fixtures().join("count")).map_err(|e| e.to_string())?;
    let bases = pali
        .generate("deva", None, &GenerateOptions::bare())
        .map_err(|e| e.to_string())?
        .len();
    let start = Instant::now();
    let forms = pali
        .generate("deva", None, &GenerateOptions::bare().with_affixes(AffixMode::Product))
        .map_err(|e| e.to_string())?;
    let took = within(Duration::from_secs(5), start)?;
    let prefixes = pali.generator().store().prefixes().len();
    if bases != 168 || prefixes != 24 || forms.len() != 4032 {
        return Err(format!("{bases} base forms × {prefixes} prefixes gave {}", forms.len()));
    }
    Ok(format!("(76 + 76 + 16) × 24 = {}, {took:?}", forms.len()))
}

fn analyzer_golden() -> Outcome {
    let pali = Pali::builtin();
    let golden = json!({
        "lemma": "deva",
        "information": {
            "paradigm": "noun",
            "gender": "masculine",
            "number": "singular",
            "case": "dative",
            "declension": "a"
        }
    });
    let records = pali.analyze("devāya", None).map_err(|e| e.to_string())?;
    let hit = records.iter().any(|r| {
        let v = r.to_json();
        v["word"] == "devāya" && v["grammar"]["morphology"] == golden
    });
    if hit {
        Ok(format!("found among {} analyses", records.len()))
    } else {
        Err(format!("not among {} analyses", records.len()))
    }
}

fn fixture_lemmata() -> Vec<(String, String)> {
    fixture_lines("lemmata.txt")
        .into_iter()
        .filter_map(|l| {
            let (lemma, class) = l.split_once(' ')?;
            Some((lemma.to_string(), class.trim().to_string()))
        })
        .collect()
}

fn round_trip() -> Outcome {
    let pali = Pali::builtin();
    let lemmata = fixture_lemmata();
    if lemmata.len() < 100 {
        return Err(format!("only {} fixture lemmata", lemmata.len()));
    }
    let mut forms = 0;
    let mut failures = Vec::new();
    for (lemma, class) in &lemmata {
        let generated = pali
            .generate(lemma, Some(class), &GenerateOptions::bare())
            .map_err(|e| format!("{lemma}: {e}"))?;
        if generated.is_empty() {
            failures.push(format!("{lemma}: nothing generated"));
        }
        for w in generated {
            forms += 1;
            let lemmas = pali.lemmatize(&w.word).map_err(|e| e.to_string())?;
            if !lemmas.iter().any(|l| &l.lemma == lemma) {
                failures.push(format!("{} -/-> {lemma}", w.word));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{} lemmata, {forms} forms", lemmata.len()))
    } else {
        Err(format!("{} failures, e.g. {:?}", failures.len(), &failures[..failures.len().min(5)]))
    }
}

fn split_merge_duality() -> Outcome {
    let pali = Pali::builtin();
    let compounds = fixture_lines("compounds.txt");
    if compounds.len() != 50 {
        return Err(format!("{} compounds in fixture", compounds.len()));
    }
    let mut splits = 0;
    let mut failures = Vec::new();
    for word in &compounds {
        for s in pali.split(word, 1).into_iter().filter(|s| s.valid && s.words.len() > 1) {
            splits += 1;
            let merged = pali.merge(&s.words).map_err(|e| e.to_string())?;
            if !merged.contains(word) {
                failures.push(format!("{} -> {merged:?}", s.text()));
            }
        }
        if !pali.split(word, 1).iter().any(|s| s.valid && s.words.len() > 1) {
            failures.push(format!("{word}: no valid split"));
        }
    }
    if failures.is_empty() {
        Ok(format!("{splits} valid splits of {} compounds", compounds.len()))
    } else {
        Err(format!("{} failures, e.g. {:?}", failures.len(), &failures[..failures.len().min(5)]))
    }
}

struct Counting<'a> {
    words: &'a HashSet<String>,
    reads: Cell<usize>,
}

impl Lexicon for Counting<'_> {
    fn contains_word(&self, word: &str) -> Result<bool, LexiconError> {
        self.reads.set(self.reads.get() + 1);
        Ok(self.words.contains(word))
    }
}

fn confidence_arithmetic() -> Outcome {
    const POOL: [&str; 8] = ["saki", "eva", "sakid", "ca", "idha", "deva", "a", "iti"];
    let mut runner = TestRunner::new(Config {
        cases: 256,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (
        prop::collection::vec(prop::sample::select(POOL.to_vec()), 1..6),
        prop::collection::hash_set(prop::sample::select(POOL.to_vec()), 0..POOL.len()),
    );
    runner
        .run(&strategy, |(words, known)| {
            let known: HashSet<String> = known.into_iter().map(str::to_string).collect();
            let words: Vec<String> = words.into_iter().map(str::to_string).collect();
            let expected = words.iter().filter(|w| known.contains(*w)).count();
            let split = SplitResult::new(words.clone(), Vec::new(), true);
            let c = split.confidence(&known).unwrap();
            prop_assert_eq!(c.found, expected);
            prop_assert_eq!(c.total, words.len());
            prop_assert!((0.0..=1.0).contains(&c.value()));
            prop_assert!((c.value() - expected as f64 / words.len() as f64).abs() < 1e-12);
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    let known: HashSet<String> = ["saki", "eva"].iter().map(|s| s.to_string()).collect();
    let lexicon = Counting {
        words: &known,
        reads: Cell::new(0),
    };
    let pali = Pali::builtin();
    let splits = pali.split("sakideva", 1);
    if lexicon.reads.get() != 0 || splits.iter().any(|s| s.cached_confidence().is_some()) {
        return Err("lexicon read before the first confidence request".into());
    }
    let target = splits.iter().find(|s| s.words == ["saki", "eva"]).ok_or("no saki eva split")?;
    let c = target.confidence(&lexicon).map_err(|e| e.to_string())?;
    let reads = lexicon.reads.get();
    target.confidence(&lexicon).map_err(|e| e.to_string())?;
    if c.found != 2 || c.total != 2 || reads != 2 || lexicon.reads.get() != reads {
        return Err(format!("confidence {c}, reads {reads} then {}", lexicon.reads.get()));
    }
    Ok("256 random cases; 0 reads before the first request, none after caching".into())
}

fn stemmer_laws() -> Outcome {
    let pali = Pali::builtin();
    let mut forms = Vec::new();
    for (lemma, class) in fixture_lemmata() {
        for w in pali.generate(&lemma, Some(&class), &GenerateOptions::bare()).map_err(|e| e.to_string())? {
            forms.push(w.word);
        }
        if forms.len() >= 1000 {
            break;
        }
    }
    forms.truncate(1000);
    if forms.len() < 1000 {
        return Err(format!("only {} forms", forms.len()));
    }
    let start = Instant::now();
    for w in &forms {
        let s = pali.stem(w);
        if !w.starts_with(&s) {
            return Err(format!("stem({w}) = {s} is not a prefix"));
        }
        if pali.stem(&s) != s {
            return Err(format!("stem is not idempotent on {w}"));
        }
    }
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("1000 forms, {took:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("reversal golden table", reversal_golden),
        ("expandable rule expansion", expandable_expansion),
        ("splitter depth semantics", depth_semantics),
        ("merger examples", merger_examples),
        ("generation count", generation_count),
        ("analyzer golden record", analyzer_golden),
        ("generate/analyze round trip", round_trip),
        ("split/merge duality", split_merge_duality),
        ("confidence arithmetic and laziness", confidence_arithmetic),
        ("stemmer laws", stemmer_laws),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
