//! The mode-based console.
//!
//! A session starts at mode selection. Once a mode is chosen every input
//! line is handled by it until `chmod` returns to the selection. `quit`
//! ends the session at any point.
//!
//! Input is a list of space-separated words. A word may carry a word class
//! after a colon (`buddhassa:noun`), and in generation mode also feature
//! pins after a second colon (`deva:noun:gender=masculine,case=dative`).
//! Every result is printed as one JSON document per line.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::analyzer::AnalysisRecord;
use crate::generator::GenerateOptions;
use crate::paradigm::FeatureSet;
use crate::Pali;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConsoleMode {
    Lemma,
    Stem,
    Ana,
    Gen,
    Ss,
    Sm,
}

impl ConsoleMode {
    pub const ALL: [ConsoleMode; 6] = [
        ConsoleMode::Lemma,
        ConsoleMode::Stem,
        ConsoleMode::Ana,
        ConsoleMode::Gen,
        ConsoleMode::Ss,
        ConsoleMode::Sm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConsoleMode::Lemma => "lemma",
            ConsoleMode::Stem => "stem",
            ConsoleMode::Ana => "ana",
            ConsoleMode::Gen => "gen",
            ConsoleMode::Ss => "ss",
            ConsoleMode::Sm => "sm",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ConsoleMode::Lemma => "lemmatizer",
            ConsoleMode::Stem => "stemmer",
            ConsoleMode::Ana => "morphological analyzer",
            ConsoleMode::Gen => "morphological generator",
            ConsoleMode::Ss => "sandhi splitter",
            ConsoleMode::Sm => "sandhi merger",
        }
    }
}

impl fmt::Display for ConsoleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConsoleMode {
    type Err = ConsoleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConsoleMode::ALL
            .into_iter()
            .find(|m| m.as_str() == s.trim())
            .ok_or_else(|| ConsoleError::UnknownMode { mode: s.trim().to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConsoleError {
    #[error("empty input")]
    EmptyInput,
    #[error("unknown mode {mode:?}")]
    UnknownMode { mode: String },
    #[error("malformed option {text:?}, expected key=value")]
    MalformedOption { text: String },
    #[error("word classes cannot be given when merging")]
    ClassNotAllowed,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedInput {
    pub words: Vec<String>,
    pub word_class: Option<String>,
    pub options: FeatureSet,
    /// Whether any word carried a `:` suffix, even an empty one.
    pub annotated: bool,
}

/// Splits a line into words and strips `:class` and `:class:key=value,..`
/// suffixes. The last non-empty class given wins.
pub fn parse_input(line: &str) -> Result<ParsedInput, ConsoleError> {
    let mut parsed = ParsedInput::default();
    for token in line.split_whitespace() {
        let mut parts = token.splitn(3, ':');
        let word = parts.next().unwrap_or_default();
        if let Some(class) = parts.next() {
            parsed.annotated = true;
            if !class.is_empty() {
                parsed.word_class = Some(class.to_string());
            }
        }
        if let Some(options) = parts.next() {
            for pair in options.split(',').filter(|p| !p.is_empty()) {
                let (k, v) = pair
                    .split_once('=')
                    .filter(|(k, v)| !k.is_empty() && !v.is_empty())
                    .ok_or_else(|| ConsoleError::MalformedOption { text: pair.to_string() })?;
                parsed.options.set(k, v);
            }
        }
        if !word.is_empty() {
            parsed.words.push(word.to_string());
        }
    }
    if parsed.words.is_empty() {
        return Err(ConsoleError::EmptyInput);
    }
    Ok(parsed)
}

/// Console state over a facade.
#[derive(Debug, Clone)]
pub struct Console {
    pali: Pali,
    depth: usize,
}

impl Console {
    pub fn new(pali: Pali) -> Self {
        Console { pali, depth: 1 }
    }

    /// Split depth used in `ss` mode (1 by default).
    pub fn with_depth(mut self, depth: usize) -> Self {
        self.depth = depth;
        self
    }

    pub fn pali(&self) -> &Pali {
        &self.pali
    }

    /// Runs one input line in `mode`. Errors are rendered as `error: ..`
    /// lines.
    pub fn dispatch(&self, mode: ConsoleMode, line: &str) -> String {
        match self.try_dispatch(mode, line) {
            Ok(lines) if lines.is_empty() => "no results".to_string(),
            Ok(lines) => lines.join("\n"),
            Err(e) => format!("error: {e}"),
        }
    }

    fn try_dispatch(&self, mode: ConsoleMode, line: &str) -> Result<Vec<String>, Box<dyn std::error::Error>> {
        let input = parse_input(line)?;
        let class = input.word_class.as_deref();
        let mut out = Vec::new();
        match mode {
            ConsoleMode::Lemma => {
                for w in &input.words {
                    for l in self.pali.lemmatize(w)? {
                        out.push(lemma_json(w, &l.lemma, l.word_class.as_deref()).to_string());
                    }
                }
            }
            ConsoleMode::Stem => {
                for w in &input.words {
                    out.push(json!({"word": w, "stem": self.pali.stem(w)}).to_string());
                }
            }
            ConsoleMode::Ana => {
                for w in &input.words {
                    out.extend(self.pali.analyze(w, class)?.iter().map(|r| r.to_json().to_string()));
                }
            }
            ConsoleMode::Gen => {
                let options = GenerateOptions {
                    pin: input.options.clone(),
                    ..GenerateOptions::bare()
                };
                for w in &input.words {
                    for c in self.pali.generate(w, class, &options)? {
                        out.push(AnalysisRecord::from_constructed(&c).to_json().to_string());
                    }
                }
            }
            ConsoleMode::Ss => {
                for w in &input.words {
                    for s in self.pali.split(w, self.depth) {
                        let mut v = json!({"word": w, "split": s.words, "valid": s.valid});
                        if let Some(c) = self.pali.confidence(&s) {
                            let c = c?;
                            v["confidence"] = json!({"found": c.found, "total": c.total});
                        }
                        out.push(v.to_string());
                    }
                }
            }
            ConsoleMode::Sm => {
                if input.annotated {
                    return Err(ConsoleError::ClassNotAllowed.into());
                }
                for m in self.pali.merge(&input.words)? {
                    out.push(json!({"words": input.words, "merged": m}).to_string());
                }
            }
        }
        Ok(out)
    }

    /// The interactive loop. Returns on `quit`, `exit` or end of input.
    pub fn run<R: BufRead, W: Write>(&self, input: R, mut output: W) -> io::Result<()> {
        let mut mode: Option<ConsoleMode> = None;
        write_selection(&mut output)?;
        for line in input.lines() {
            let line = line?;
            let trimmed = line.trim();
            match trimmed {
                "" => {}
                "quit" | "exit" => break,
                "chmod" => {
                    mode = None;
                    write_selection(&mut output)?;
                }
                _ => match mode {
                    Some(m) => writeln!(output, "{}", self.dispatch(m, trimmed))?,
                    None => match trimmed.parse::<ConsoleMode>() {
                        Ok(m) => {
                            mode = Some(m);
                            writeln!(output, "mode {m} ({}). Type chmod to return to the mode selection.", m.description())?;
                        }
                        Err(e) => writeln!(output, "error: {e}")?,
                    },
                },
            }
            write!(output, "{}> ", mode.map(ConsoleMode::as_str).unwrap_or(""))?;
            output.flush()?;
        }
        Ok(())
    }
}

fn lemma_json(word: &str, lemma: &str, word_class: Option<&str>) -> Value {
    let information = match word_class {
        Some(c) => json!({"paradigm": c}),
        None => json!({}),
    };
    json!({"word": word, "grammar": {"morphology": {"lemma": lemma, "information": information}}})
}

fn write_selection<W: Write>(out: &mut W) -> io::Result<()> {
    writeln!(out, "Select a mode:")?;
    for m in ConsoleMode::ALL {
        writeln!(out, "  {:<6}{}", m.as_str(), m.description())?;
    }
    write!(out, "> ")?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let p = parse_input("buddhassa:noun").unwrap();
        assert_eq!(p.words, ["buddhassa"]);
        assert_eq!(p.word_class.as_deref(), Some("noun"));
        let p = parse_input("saki eva").unwrap();
        assert_eq!(p.words, ["saki", "eva"]);
        assert_eq!(p.word_class, None);
        assert!(!p.annotated);
        assert_eq!(parse_input(""), Err(ConsoleError::EmptyInput));
        assert_eq!(parse_input("  :noun "), Err(ConsoleError::EmptyInput));
        let p = parse_input("deva:noun:gender=masculine,case=dative").unwrap();
        assert_eq!(p.options.get("case"), Some("dative"));
        assert!(parse_input("deva::gender").is_err());
    }

    #[test]
    fn modes() {
        assert_eq!("ss".parse::<ConsoleMode>().unwrap(), ConsoleMode::Ss);
        assert!("xx".parse::<ConsoleMode>().is_err());
    }

    #[test]
    fn dispatching() {
        let c = Console::new(Pali::builtin());
        let out = c.dispatch(ConsoleMode::Lemma, "buddhassa");
        assert!(out.contains("\"lemma\":\"buddha\""), "{out}");
        assert!(c.dispatch(ConsoleMode::Sm, "saki eva").contains("sakideva"));
        assert!(c.dispatch(ConsoleMode::Ss, "sakideva").contains("[\"saki\",\"eva\"]"));
        assert_eq!(c.dispatch(ConsoleMode::Stem, "devāya:verb"), c.dispatch(ConsoleMode::Stem, "devāya"));
        assert!(c.dispatch(ConsoleMode::Sm, "saki:noun eva").starts_with("error:"));
        assert!(c.dispatch(ConsoleMode::Sm, "saki").starts_with("error:"));
        assert!(c.dispatch(ConsoleMode::Ana, "").starts_with("error:"));
        let gen = c.dispatch(ConsoleMode::Gen, "deva:noun:case=dative,number=singular");
        assert!(gen.contains("devāya") && !gen.contains("devena"));
    }

    #[test]
    fn session() {
        let c = Console::new(Pali::builtin());
        let script = "bogus\nstem\ndevāya\nchmod\nsm\nsaki eva\nquit\nstem\n";
        let mut out = Vec::new();
        c.run(script.as_bytes(), &mut out).unwrap();
        let out = String::from_utf8(out).unwrap();
        assert!(out.contains("unknown mode"));
        assert!(out.contains("\"stem\":\"dev\""));
        assert_eq!(out.matches("Select a mode").count(), 2);
        assert!(out.contains("sakideva"));
    }
}
