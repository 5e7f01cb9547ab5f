//! The sandhi rule language.
//!
//! Rules are written `lhs:rhs`, one per line. The left-hand side is a pattern
//! made of literals, literal groups `(j|c)`, constants `(VOWEL)` and the
//! anchors `^`/`$`; the right-hand side is a template made of literals,
//! back-references `$n` and operation calls `+short($2)`. Constants and
//! operations are declared in a separate dictionary file:
//!
//! ```text
//! =VOWEL:a,i,u,e,o,ā,ī,ū
//! +duplicate(x)
//! ```
//!
//! Comments start with `#` at the very beginning of a line.

mod apply;
mod dictionary;
mod rule;

pub use apply::{Match, RuleSet};
pub use dictionary::{parse_dictionary_file, ConstantTable, Operation, OperationRegistry};
pub use rule::{parse_rules, Atom, Group, SandhiRule};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("malformed line: {text:?}")]
    MalformedLine { text: String },
    #[error("comments must start at the beginning of a line")]
    InlineComment,
    #[error("invalid constant definition {name:?}: {reason}")]
    InvalidConstant { name: String, reason: &'static str },
    #[error("unknown operation {name:?}")]
    UnknownOperation { name: String },
    #[error("operation {operation} is not defined for {arg:?}")]
    DomainError { operation: String, arg: String },
    #[error("unresolved constant {name:?}")]
    UnresolvedConstant { name: String },
    #[error("back-reference ${index} but only {groups} group(s) precede it")]
    DanglingBackReference { index: usize, groups: usize },
    #[error("unbalanced parentheses in {text:?}")]
    UnbalancedParentheses { text: String },
    #[error("empty group in {text:?}")]
    EmptyGroup { text: String },
    #[error("rule {text:?} has an empty side")]
    EmptySide { text: String },
    #[error("unsupported construct in {text:?}: {what}")]
    Unsupported { text: String, what: &'static str },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<RuleError>,
    },
}

impl RuleError {
    /// The underlying error, without line information.
    pub fn root(&self) -> &RuleError {
        match self {
            RuleError::AtLine { source, .. } => source.root(),
            other => other,
        }
    }

    pub(crate) fn at_line(self, line: usize) -> RuleError {
        RuleError::AtLine {
            line,
            source: Box::new(self),
        }
    }
}

/// Iterates the meaningful lines of a rule or dictionary file as
/// `(line_number, text)`. Full-line comments and blank lines are skipped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty())
}
