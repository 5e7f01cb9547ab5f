//! Generates the inflected forms of a lemma.
//!
//!     cargo run --example generate -- deva
//!     cargo run --example generate -- deva noun gender=neuter
//!     cargo run --example generate -- deva noun --prefixes

use std::{env, process};

use pali_nlp::{AffixMode, GenerateOptions, Pali};

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let Some(lemma) = args.first() else {
        eprintln!("usage: generate <lemma> [word class] [key=value ...] [--prefixes]");
        process::exit(2);
    };
    let mut options = GenerateOptions::bare();
    let mut class = None;
    for arg in &args[1..] {
        if arg == "--prefixes" {
            options = options.with_affixes(AffixMode::WithBare);
        } else if let Some((k, v)) = arg.split_once('=') {
            options = options.pin(k, v);
        } else {
            class = Some(arg.as_str());
        }
    }

    let pali = Pali::builtin();
    match pali.generate(lemma, class, &options) {
        Ok(words) => {
            for w in &words {
                println!("{:<16} {}", w.word, w.features);
            }
            eprintln!("{} forms", words.len());
        }
        Err(e) => {
            eprintln!("{e}");
            process::exit(1);
        }
    }
}
