//! Lemmatizes words, optionally against a lexicon directory.
//!
//!     cargo run --example lemmatize -- buddhassa devāya
//!     cargo run --example lemmatize -- --lexicon /tmp/lex buddhassa

use std::env;

use pali_nlp::{LexiconStore, Pali};

fn main() {
    let mut args: Vec<String> = env::args().skip(1).collect();
    let mut pali = Pali::builtin();
    if args.first().map(String::as_str) == Some("--lexicon") && args.len() > 1 {
        let dir = args.remove(1);
        args.remove(0);
        pali = pali.with_lexicon(LexiconStore::open(&dir).expect("open lexicon"));
    }
    for word in &args {
        match pali.lemmatize(word) {
            Ok(lemmata) => {
                let list: Vec<String> = lemmata
                    .iter()
                    .map(|l| format!("{} ({})", l.lemma, l.word_class.as_deref().unwrap_or("?")))
                    .collect();
                println!("{word}: {}", list.join(", "));
            }
            Err(e) => eprintln!("{word}: {e}"),
        }
    }
}
