use std::collections::BTreeMap;
use std::fmt;

use super::{content_lines, RuleError};
use crate::phoneme::{self, LENGTH_PAIRS};

/// Named character classes, e.g. `VOWEL` → `a,i,u,e,o,ā,ī,ū`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstantTable {
    entries: BTreeMap<String, Vec<String>>,
}

fn is_constant_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_uppercase() || c == '_')
}

impl ConstantTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: &str, members: Vec<String>) -> Result<(), RuleError> {
        let invalid = |reason| RuleError::InvalidConstant {
            name: name.to_string(),
            reason,
        };
        if !is_constant_name(name) {
            return Err(invalid("name must match [A-Z_]+"));
        }
        if self.entries.contains_key(name) {
            return Err(invalid("defined twice"));
        }
        if members.is_empty() || members.iter().any(|m| m.is_empty()) {
            return Err(invalid("empty member"));
        }
        for (i, m) in members.iter().enumerate() {
            if members[..i].contains(m) {
                return Err(invalid("duplicate member"));
            }
        }
        self.entries.insert(name.to_string(), members);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&[String]> {
        self.entries.get(name).map(Vec::as_slice)
    }

    pub fn resolve(&self, name: &str) -> Result<&[String], RuleError> {
        self.get(name).ok_or_else(|| RuleError::UnresolvedConstant {
            name: name.to_string(),
        })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The transforms a dictionary file may declare with `+name(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    /// Reduplicates a consonant; aspirates double only their base letter
    /// (`t` → `tt`, `kh` → `kkh`).
    Duplicate,
    /// Long vowel to its short counterpart. `e`, `o` and short vowels are
    /// returned unchanged.
    Short,
    /// Short vowel to its long counterpart. Long vowels, `e` and `o` are
    /// returned unchanged.
    Long,
}

impl Operation {
    pub const ALL: [Operation; 3] = [Operation::Duplicate, Operation::Short, Operation::Long];

    pub fn name(self) -> &'static str {
        match self {
            Operation::Duplicate => "duplicate",
            Operation::Short => "short",
            Operation::Long => "long",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|op| op.name() == name)
    }

    pub fn apply(self, arg: &str) -> Result<String, RuleError> {
        let domain = || RuleError::DomainError {
            operation: self.name().to_string(),
            arg: arg.to_string(),
        };
        let tokens = phoneme::phonemes(arg);
        if tokens.len() != 1 || tokens[0].trim().is_empty() {
            return Err(domain());
        }
        let p = tokens[0];
        match self {
            Operation::Duplicate => {
                if phoneme::is_vowel(p) {
                    return Err(domain());
                }
                if phoneme::is_aspirate(p) {
                    let base: String = p.chars().take(1).collect();
                    Ok(format!("{base}{p}"))
                } else {
                    Ok(format!("{p}{p}"))
                }
            }
            Operation::Short => {
                if !phoneme::is_vowel(p) {
                    return Err(domain());
                }
                Ok(LENGTH_PAIRS
                    .iter()
                    .find(|(_, long)| *long == p)
                    .map_or(p, |(short, _)| short)
                    .to_string())
            }
            Operation::Long => {
                if !phoneme::is_vowel(p) {
                    return Err(domain());
                }
                Ok(LENGTH_PAIRS
                    .iter()
                    .find(|(short, _)| *short == p)
                    .map_or(p, |(_, long)| long)
                    .to_string())
            }
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Operations declared by a dictionary file, bound to built-in transforms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OperationRegistry {
    entries: BTreeMap<String, Operation>,
}

impl OperationRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// A registry holding every built-in transform.
    pub fn builtin() -> Self {
        let mut reg = Self::new();
        for op in Operation::ALL {
            reg.entries.insert(op.name().to_string(), op);
        }
        reg
    }

    pub fn declare(&mut self, name: &str) -> Result<Operation, RuleError> {
        let op = Operation::from_name(name).ok_or_else(|| RuleError::UnknownOperation {
            name: name.to_string(),
        })?;
        self.entries.insert(name.to_string(), op);
        Ok(op)
    }

    pub fn get(&self, name: &str) -> Option<Operation> {
        self.entries.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    pub fn eval(&self, name: &str, arg: &str) -> Result<String, RuleError> {
        let op = self.get(name).ok_or_else(|| RuleError::UnknownOperation {
            name: name.to_string(),
        })?;
        op.apply(arg)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Parses a dictionary file of `=NAME:a,b,c` constants and `+name(x)`
/// operation declarations.
pub fn parse_dictionary_file(text: &str) -> Result<(ConstantTable, OperationRegistry), RuleError> {
    let text = phoneme::normalize(text);
    let mut consts = ConstantTable::new();
    let mut ops = OperationRegistry::new();
    for (line_no, line) in content_lines(&text) {
        parse_dictionary_line(line, &mut consts, &mut ops).map_err(|e| e.at_line(line_no))?;
    }
    Ok((consts, ops))
}

fn parse_dictionary_line(
    line: &str,
    consts: &mut ConstantTable,
    ops: &mut OperationRegistry,
) -> Result<(), RuleError> {
    let malformed = || RuleError::MalformedLine {
        text: line.to_string(),
    };
    if line.contains('#') {
        return Err(RuleError::InlineComment);
    }
    let line = line.trim();
    if let Some(def) = line.strip_prefix('=') {
        let (name, members) = def.split_once(':').ok_or_else(malformed)?;
        let members = members.split(',').map(|m| m.trim().to_string()).collect();
        consts.insert(name.trim(), members)
    } else if let Some(def) = line.strip_prefix('+') {
        let (name, rest) = def.split_once('(').ok_or_else(malformed)?;
        if !rest.ends_with(')') || rest[..rest.len() - 1].contains(['(', ')']) {
            return Err(malformed());
        }
        ops.declare(name.trim()).map(|_| ())
    } else {
        Err(malformed())
    }
}
