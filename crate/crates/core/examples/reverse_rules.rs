//! Reverses the shipped merge rules into split rules.
//!
//!     cargo run --example reverse_rules                 # print to stdout
//!     cargo run --example reverse_rules -- out.txt      # write a file
//!     cargo run --example reverse_rules -- --rule "(a|ā) (i|ī):e"

use std::{env, fs, process};

use pali_nlp::data;
use pali_nlp::reversal::{reverse_rule, reverse_ruleset};
use pali_nlp::rules::{RuleSet, SandhiRule};

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let shipped = RuleSet::parse(data::SANDHI_DICTIONARY, data::SANDHI_MERGE).unwrap_or_else(|e| {
        eprintln!("shipped rules: {e}");
        process::exit(1);
    });

    if let [flag, src] = args.as_slice() {
        if flag == "--rule" {
            let rule = SandhiRule::parse(src, &shipped.constants).unwrap_or_else(|e| {
                eprintln!("{e}");
                process::exit(1);
            });
            match reverse_rule(&rule, &shipped.constants, &shipped.operations) {
                Ok(rules) => rules.iter().for_each(|r| println!("{r}")),
                Err(e) => eprintln!("{e}"),
            }
            return;
        }
    }

    let reversed = reverse_ruleset(&shipped.rules, &shipped.constants, &shipped.operations);
    for (rule, err) in &reversed.skipped {
        eprintln!("skipped {rule}: {err}");
    }
    let mut text = String::from("# Split rules derived from merge.txt by reversal. Regenerate with\n# `cargo run --example reverse_rules -- data/sandhi/split.txt`.\n");
    text.push_str(&reversed.to_rule_file());
    match args.first() {
        Some(path) => {
            fs::write(path, text).unwrap_or_else(|e| {
                eprintln!("{path}: {e}");
                process::exit(1);
            });
            eprintln!("wrote {} rules to {path}", reversed.rules.len());
        }
        None => print!("{text}"),
    }
}
