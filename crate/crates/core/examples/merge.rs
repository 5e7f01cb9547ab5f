//! Joins words with the forward sandhi rules.
//!
//!     cargo run --example merge -- saki eva
//!     cargo run --example merge -- ajja uposatho

use std::{env, process};

use pali_nlp::Pali;

fn main() {
    let words: Vec<String> = env::args().skip(1).collect();
    match Pali::builtin().merge(&words) {
        Ok(merged) => merged.iter().for_each(|m| println!("{m}")),
        Err(e) => {
            eprintln!("{e}");
            process::exit(1);
        }
    }
}
