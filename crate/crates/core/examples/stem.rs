//! Stems words by stripping paradigm endings.
//!
//!     cargo run --example stem -- devāya bhikkhūnaṃ gacchanti

use std::env;

use pali_nlp::Pali;

fn main() {
    let pali = Pali::builtin();
    for word in env::args().skip(1) {
        println!("{word} -> {}", pali.stem(&word));
    }
}
