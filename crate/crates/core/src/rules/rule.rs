use std::fmt;

use super::{content_lines, ConstantTable, RuleError};
use crate::phoneme;

/// A capturing group: either a named constant or a list of literal
/// alternatives. Members are resolved at parse time.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Group {
    pub constant: Option<String>,
    pub members: Vec<String>,
}

impl Group {
    pub fn literals<S: Into<String>>(members: impl IntoIterator<Item = S>) -> Self {
        Group {
            constant: None,
            members: members.into_iter().map(Into::into).collect(),
        }
    }

    pub fn constant(name: &str, consts: &ConstantTable) -> Result<Self, RuleError> {
        Ok(Group {
            constant: Some(name.to_string()),
            members: consts.resolve(name)?.to_vec(),
        })
    }

    /// Re-resolves a constant group against `consts`.
    pub fn resolved(&self, consts: &ConstantTable) -> Result<Vec<String>, RuleError> {
        match &self.constant {
            Some(name) => Ok(consts.resolve(name)?.to_vec()),
            None => Ok(self.members.clone()),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.constant {
            Some(name) => write!(f, "({name})"),
            None => write!(f, "({})", self.members.join("|")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Literal(String),
    Group(Group),
    BackRef(usize),
    Operation { name: String, arg: Box<Atom> },
    Start,
    End,
}

impl Atom {
    pub fn is_literal(&self) -> bool {
        matches!(self, Atom::Literal(_))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Literal(s) => f.write_str(s),
            Atom::Group(g) => g.fmt(f),
            Atom::BackRef(n) => write!(f, "${n}"),
            Atom::Operation { name, arg } => write!(f, "+{name}({arg})"),
            Atom::Start => f.write_str("^"),
            Atom::End => f.write_str("$"),
        }
    }
}

/// One rewrite rule. Equality ignores `source`.
#[derive(Debug, Clone, Eq)]
pub struct SandhiRule {
    pub lhs: Vec<Atom>,
    pub rhs: Vec<Atom>,
    pub source: String,
}

impl PartialEq for SandhiRule {
    fn eq(&self, other: &Self) -> bool {
        self.lhs == other.lhs && self.rhs == other.rhs
    }
}

impl fmt::Display for SandhiRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.lhs {
            a.fmt(f)?;
        }
        f.write_str(":")?;
        for a in &self.rhs {
            a.fmt(f)?;
        }
        Ok(())
    }
}

fn count_groups(atoms: &[Atom]) -> usize {
    atoms
        .iter()
        .map(|a| match a {
            Atom::Group(_) => 1,
            Atom::Operation { arg, .. } => count_groups(std::slice::from_ref(arg)),
            _ => 0,
        })
        .sum()
}

impl SandhiRule {
    /// Parses a single rule line.
    pub fn parse(line: &str, consts: &ConstantTable) -> Result<SandhiRule, RuleError> {
        let line = phoneme::normalize(line);
        if line.contains('#') {
            return Err(RuleError::InlineComment);
        }
        let (lhs, rhs) = line.split_once(':').ok_or_else(|| RuleError::MalformedLine {
            text: line.clone(),
        })?;
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        if lhs.is_empty() || rhs.is_empty() {
            return Err(RuleError::EmptySide { text: line.clone() });
        }
        let lhs = SideParser::new(lhs, Side::Left, consts).parse()?;
        let rhs = SideParser::new(rhs, Side::Right, consts).parse()?;
        let rule = SandhiRule {
            lhs,
            rhs,
            source: line.clone(),
        };
        rule.check_backreferences()?;
        Ok(rule)
    }

    /// Number of capturing groups on the left-hand side, including groups
    /// used as operation arguments.
    pub fn group_count(&self) -> usize {
        count_groups(&self.lhs)
    }

    /// Every right-hand back-reference must point to a left-hand group; a
    /// left-hand back-reference must point to a group before it.
    pub fn check_backreferences(&self) -> Result<(), RuleError> {
        fn walk(atoms: &[Atom], groups_seen: &mut usize, limit: Option<usize>) -> Result<(), RuleError> {
            for a in atoms {
                match a {
                    Atom::Group(_) => *groups_seen += 1,
                    Atom::BackRef(n) => {
                        let bound = limit.unwrap_or(*groups_seen);
                        if *n == 0 || *n > bound {
                            return Err(RuleError::DanglingBackReference {
                                index: *n,
                                groups: bound,
                            });
                        }
                    }
                    Atom::Operation { arg, .. } => {
                        walk(std::slice::from_ref(arg), groups_seen, limit)?
                    }
                    _ => {}
                }
            }
            Ok(())
        }
        let mut seen = 0;
        walk(&self.lhs, &mut seen, None)?;
        let total = seen;
        walk(&self.rhs, &mut 0, Some(total))
    }

    /// True if both sides consist of literals only (anchors allowed on the
    /// left).
    pub fn is_atomic(&self) -> bool {
        self.lhs
            .iter()
            .all(|a| matches!(a, Atom::Literal(_) | Atom::Start | Atom::End))
            && self.rhs.iter().all(Atom::is_literal)
    }

    /// Concatenated literal text of the left-hand side, ignoring anchors.
    /// `None` if it contains anything but literals and anchors.
    pub fn literal_lhs(&self) -> Option<String> {
        literal_text(&self.lhs)
    }

    pub fn literal_rhs(&self) -> Option<String> {
        literal_text(&self.rhs)
    }
}

fn literal_text(atoms: &[Atom]) -> Option<String> {
    let mut out = String::new();
    for a in atoms {
        match a {
            Atom::Literal(s) => out.push_str(s),
            Atom::Start | Atom::End => {}
            _ => return None,
        }
    }
    Some(out)
}

/// Parses a rule file into rules, one per non-comment line.
pub fn parse_rules(text: &str, consts: &ConstantTable) -> Result<Vec<SandhiRule>, RuleError> {
    content_lines(text)
        .map(|(line_no, line)| {
            SandhiRule::parse(line, consts)
                .map(|mut r| {
                    r.source = format!("line {line_no}: {}", r.source);
                    r
                })
                .map_err(|e| e.at_line(line_no))
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

struct SideParser<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
    side: Side,
    consts: &'a ConstantTable,
}

impl<'a> SideParser<'a> {
    fn new(text: &'a str, side: Side, consts: &'a ConstantTable) -> Self {
        SideParser {
            text,
            chars: text.chars().collect(),
            pos: 0,
            side,
            consts,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn unbalanced(&self) -> RuleError {
        RuleError::UnbalancedParentheses {
            text: self.text.to_string(),
        }
    }

    fn unsupported(&self, what: &'static str) -> RuleError {
        RuleError::Unsupported {
            text: self.text.to_string(),
            what,
        }
    }

    fn parse(mut self) -> Result<Vec<Atom>, RuleError> {
        let mut atoms: Vec<Atom> = Vec::new();
        while let Some(c) = self.peek() {
            let atom = match c {
                '(' => Atom::Group(self.group()?),
                ')' => return Err(self.unbalanced()),
                '+' => self.operation()?,
                '$' => self.dollar()?,
                '^' if self.side == Side::Left => {
                    self.pos += 1;
                    Atom::Start
                }
                '^' => return Err(self.unsupported("anchor on the right-hand side")),
                c if c.is_whitespace() => {
                    while self.peek().is_some_and(char::is_whitespace) {
                        self.pos += 1;
                    }
                    Atom::Literal(" ".to_string())
                }
                c => {
                    self.pos += 1;
                    Atom::Literal(c.to_string())
                }
            };
            match (atoms.last_mut(), atom) {
                (Some(Atom::Literal(prev)), Atom::Literal(next)) => prev.push_str(&next),
                (_, atom) => atoms.push(atom),
            }
        }
        Ok(atoms)
    }

    fn group(&mut self) -> Result<Group, RuleError> {
        debug_assert_eq!(self.peek(), Some('('));
        self.pos += 1;
        let start = self.pos;
        loop {
            match self.peek() {
                None | Some('(') => return Err(self.unbalanced()),
                Some(')') => break,
                Some(_) => self.pos += 1,
            }
        }
        let content: String = self.chars[start..self.pos].iter().collect();
        self.pos += 1;
        if content.is_empty() {
            return Err(RuleError::EmptyGroup {
                text: self.text.to_string(),
            });
        }
        if content.chars().all(|c| c.is_ascii_uppercase() || c == '_') {
            return Group::constant(&content, self.consts);
        }
        let members: Vec<String> = content.split('|').map(str::to_string).collect();
        if members.iter().any(String::is_empty) {
            return Err(RuleError::EmptyGroup {
                text: self.text.to_string(),
            });
        }
        Ok(Group::literals(members))
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }

    fn dollar(&mut self) -> Result<Atom, RuleError> {
        self.pos += 1;
        match self.number() {
            Some(n) => Ok(Atom::BackRef(n)),
            None if self.side == Side::Left => Ok(Atom::End),
            None => Err(self.unsupported("anchor on the right-hand side")),
        }
    }

    fn operation(&mut self) -> Result<Atom, RuleError> {
        self.pos += 1;
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_lowercase() || c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        if name.is_empty() || self.peek() != Some('(') {
            return Err(RuleError::MalformedLine {
                text: self.text.to_string(),
            });
        }
        self.pos += 1;
        let arg = match self.peek() {
            Some('(') => Atom::Group(self.group()?),
            Some('$') => {
                self.pos += 1;
                Atom::BackRef(self.number().ok_or_else(|| RuleError::MalformedLine {
                    text: self.text.to_string(),
                })?)
            }
            Some('+') => return Err(self.unsupported("nested operation")),
            _ => {
                let start = self.pos;
                while self.peek().is_some_and(|c| !matches!(c, '(' | ')')) {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(RuleError::MalformedLine {
                        text: self.text.to_string(),
                    });
                }
                Atom::Literal(self.chars[start..self.pos].iter().collect())
            }
        };
        if self.peek() != Some(')') {
            return Err(self.unbalanced());
        }
        self.pos += 1;
        Ok(Atom::Operation {
            name,
            arg: Box::new(arg),
        })
    }
}
