use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use pali_nlp::console::{Console, ConsoleMode};
use pali_nlp::{load_sandhi_dir, LexiconStore, Pali};

/// Pali lemmatizer, stemmer, analyzer, generator and sandhi tools.
///
/// Without --mode an interactive session is started.
#[derive(Debug, Parser)]
#[command(version)]
struct Args {
    /// Run a single input line in this mode (lemma, stem, ana, gen, ss, sm)
    #[arg(long, short)]
    mode: Option<ConsoleMode>,
    /// Data directory with grammar/, irregular/, stem_rules.txt, prefixes.txt and sandhi/
    #[arg(long, env = "PALI_DATA_DIR")]
    data_dir: Option<PathBuf>,
    /// Lexicon directory
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Sandhi rule directory with dictionary.txt, merge.txt and optionally split.txt
    #[arg(long)]
    rules: Option<PathBuf>,
    /// Split depth
    #[arg(long, default_value_t = 1)]
    depth: usize,
    /// Input for --mode
    input: Vec<String>,
}

fn build(args: &Args) -> Result<Pali, pali_nlp::Error> {
    let mut pali = match &args.data_dir {
        Some(dir) => Pali::from_data_dir(dir)?,
        None => Pali::builtin(),
    };
    if let Some(rules) = &args.rules {
        pali = pali.with_sandhi(load_sandhi_dir(rules)?);
    }
    if let Some(lexicon) = &args.lexicon {
        pali = pali.with_lexicon(LexiconStore::open(lexicon)?);
    }
    Ok(pali)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let pali = match build(&args) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("pali-console: {e}");
            return ExitCode::FAILURE;
        }
    };
    let console = Console::new(pali).with_depth(args.depth);
    match args.mode {
        Some(mode) => {
            println!("{}", console.dispatch(mode, &args.input.join(" ")));
            ExitCode::SUCCESS
        }
        None => match console.run(io::stdin().lock(), io::stdout().lock()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("pali-console: {e}");
                ExitCode::FAILURE
            }
        },
    }
}
