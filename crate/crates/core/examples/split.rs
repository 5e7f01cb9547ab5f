//! Splits a word at sandhi junctions and scores each split against a small
//! in-memory word list.
//!
//!     cargo run --example split -- sakideva
//!     cargo run --example split -- sakideva 2

use std::collections::HashSet;
use std::env;

use pali_nlp::Pali;

fn main() {
    let mut args = env::args().skip(1);
    let word = args.next().unwrap_or_else(|| "sakideva".into());
    let depth = args.next().and_then(|d| d.parse().ok()).unwrap_or(1);
    let known: HashSet<String> = ["saki", "eva", "sakid", "idha", "ca"].iter().map(|s| s.to_string()).collect();

    let pali = Pali::builtin();
    for s in pali.split(&word, depth) {
        let confidence = s.confidence(&known).expect("in-memory lookups do not fail");
        let rules: Vec<String> = s.applied.iter().map(|e| format!("{}@{}", e.rule, e.position)).collect();
        println!(
            "{:<24} valid={:<5} confidence={}/{}  {}",
            s.text(),
            s.valid,
            confidence.found,
            confidence.total,
            rules.join(" ")
        );
    }
}
