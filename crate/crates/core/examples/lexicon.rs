//! Fills a lexicon directory with generated forms and shows how lookups
//! change once records are stored.
//!
//!     cargo run --example lexicon -- /tmp/pali-lexicon deva buddha

use std::{env, process};

use pali_nlp::lexicon::{GENERATED, LEMMA};
use pali_nlp::{GenerateOptions, LexiconStore, Pali};
use serde_json::json;

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let Some((dir, lemmata)) = args.split_first() else {
        eprintln!("usage: lexicon <directory> <lemma> ...");
        process::exit(2);
    };
    let store = LexiconStore::open(dir).unwrap_or_else(|e| {
        eprintln!("{e}");
        process::exit(1);
    });
    let pali = Pali::builtin();
    for lemma in lemmata {
        store.insert(LEMMA, json!({"word": lemma})).expect("insert lemma");
    }
    let added = pali
        .generate_into(lemmata, &GenerateOptions::bare(), &store)
        .expect("generate into lexicon");
    println!("added {added} records; {} generated in total", store.count(GENERATED).unwrap());

    let pali = pali.with_lexicon(store);
    if let Some(lemma) = lemmata.first() {
        let forms = pali.generate(lemma, None, &GenerateOptions::bare()).unwrap();
        if let Some(form) = forms.get(1) {
            println!("stored analyses of {}:", form.word);
            for r in pali.analyze(&form.word, None).unwrap() {
                println!("  {}", r.to_json());
            }
            println!("lemmata of {}: {:?}", form.word, pali.lemmatize(&form.word).unwrap());
        }
    }
}
