//! Prints every analysis of the given words, one JSON record per line,
//! followed by the stem/ending segmentation where there is one.
//!
//!     cargo run --example analyze -- devāya ahaṃ pagacchati

use std::env;

use pali_nlp::Pali;

fn main() {
    let pali = Pali::builtin();
    for word in env::args().skip(1) {
        match pali.analyze(&word, None) {
            Ok(records) => {
                for r in records {
                    let segments = r
                        .segmentation
                        .as_ref()
                        .map(|s| s.iter().map(|s| s.surface.as_str()).collect::<Vec<_>>().join("+"))
                        .unwrap_or_else(|| "-".into());
                    println!("{}\t{segments}", r.to_json());
                }
            }
            Err(e) => eprintln!("{word}: {e}"),
        }
    }
}
