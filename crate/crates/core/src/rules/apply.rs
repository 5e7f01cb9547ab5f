use super::{parse_dictionary_file, parse_rules, Atom, ConstantTable, OperationRegistry, RuleError, SandhiRule};

/// One way a rule's left-hand side matches a text, in character indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    pub start: usize,
    pub end: usize,
    /// Captured text per group, indexed by group number - 1.
    pub captures: Vec<String>,
}

fn literal_at(text: &[char], pos: usize, lit: &str) -> Option<usize> {
    let mut p = pos;
    for c in lit.chars() {
        if text.get(p) != Some(&c) {
            return None;
        }
        p += 1;
    }
    Some(p)
}

struct Matcher<'a> {
    text: &'a [char],
    ops: &'a OperationRegistry,
    out: Vec<(usize, Vec<String>)>,
}

impl Matcher<'_> {
    fn run(&mut self, atoms: &[Atom], pos: usize, caps: &mut Vec<String>) -> Result<(), RuleError> {
        let Some((atom, rest)) = atoms.split_first() else {
            self.out.push((pos, caps.clone()));
            return Ok(());
        };
        match atom {
            Atom::Literal(s) => {
                if let Some(p) = literal_at(self.text, pos, s) {
                    self.run(rest, p, caps)?;
                }
            }
            Atom::Group(g) => {
                for m in &g.members {
                    if let Some(p) = literal_at(self.text, pos, m) {
                        caps.push(m.clone());
                        self.run(rest, p, caps)?;
                        caps.pop();
                    }
                }
            }
            Atom::BackRef(n) => {
                if let Some(p) = caps.get(n - 1).and_then(|c| literal_at(self.text, pos, c)) {
                    self.run(rest, p, caps)?;
                }
            }
            Atom::Operation { name, arg } => match arg.as_ref() {
                Atom::Group(g) => {
                    for m in &g.members {
                        let produced = match self.ops.eval(name, m) {
                            Ok(s) => s,
                            Err(RuleError::DomainError { .. }) => continue,
                            Err(e) => return Err(e),
                        };
                        if let Some(p) = literal_at(self.text, pos, &produced) {
                            caps.push(m.clone());
                            self.run(rest, p, caps)?;
                            caps.pop();
                        }
                    }
                }
                other => {
                    let arg = match other {
                        Atom::Literal(s) => s.clone(),
                        Atom::BackRef(n) => match caps.get(n - 1) {
                            Some(c) => c.clone(),
                            None => return Ok(()),
                        },
                        _ => return Ok(()),
                    };
                    let produced = self.ops.eval(name, &arg)?;
                    if let Some(p) = literal_at(self.text, pos, &produced) {
                        self.run(rest, p, caps)?;
                    }
                }
            },
            Atom::Start => {
                if pos == 0 {
                    self.run(rest, pos, caps)?;
                }
            }
            Atom::End => {
                if pos == self.text.len() {
                    self.run(rest, pos, caps)?;
                }
            }
        }
        Ok(())
    }
}

/// Renders a template; groups on the template side yield one output per
/// member.
fn render(atoms: &[Atom], captures: &[String], ops: &OperationRegistry) -> Result<Vec<String>, RuleError> {
    let mut outs = vec![String::new()];
    for atom in atoms {
        let pieces: Vec<String> = match atom {
            Atom::Literal(s) => vec![s.clone()],
            Atom::BackRef(n) => vec![capture(captures, *n)?],
            Atom::Group(g) => g.members.clone(),
            Atom::Operation { name, arg } => {
                let args = match arg.as_ref() {
                    Atom::Literal(s) => vec![s.clone()],
                    Atom::BackRef(n) => vec![capture(captures, *n)?],
                    Atom::Group(g) => g.members.clone(),
                    _ => {
                        return Err(RuleError::Unsupported {
                            text: atom.to_string(),
                            what: "operation argument",
                        })
                    }
                };
                args.iter().map(|a| ops.eval(name, a)).collect::<Result<_, _>>()?
            }
            Atom::Start | Atom::End => {
                return Err(RuleError::Unsupported {
                    text: atom.to_string(),
                    what: "anchor in a template",
                })
            }
        };
        outs = outs
            .iter()
            .flat_map(|o| pieces.iter().map(move |p| format!("{o}{p}")))
            .collect();
    }
    Ok(outs)
}

fn capture(captures: &[String], n: usize) -> Result<String, RuleError> {
    captures
        .get(n.wrapping_sub(1))
        .cloned()
        .ok_or(RuleError::DanglingBackReference {
            index: n,
            groups: captures.len(),
        })
}

impl SandhiRule {
    /// All matches of the left-hand side starting at `start`.
    pub fn matches_at(&self, text: &[char], start: usize, ops: &OperationRegistry) -> Result<Vec<Match>, RuleError> {
        let mut m = Matcher { text, ops, out: Vec::new() };
        m.run(&self.lhs, start, &mut Vec::new())?;
        Ok(m.out
            .into_iter()
            .map(|(end, captures)| Match { start, end, captures })
            .collect())
    }

    /// Renders the right-hand side for a match.
    pub fn render(&self, m: &Match, ops: &OperationRegistry) -> Result<Vec<String>, RuleError> {
        render(&self.rhs, &m.captures, ops)
    }

    /// Applies the rule at every position of `text`, returning each
    /// rewritten string paired with the match that produced it.
    pub fn rewrite_all(&self, text: &str, ops: &OperationRegistry) -> Result<Vec<(Match, String)>, RuleError> {
        let chars: Vec<char> = text.chars().collect();
        let mut out = Vec::new();
        for start in 0..=chars.len() {
            for m in self.matches_at(&chars, start, ops)? {
                for replacement in self.render(&m, ops)? {
                    let mut s: String = chars[..m.start].iter().collect();
                    s.push_str(&replacement);
                    s.extend(&chars[m.end..]);
                    out.push((m.clone(), s));
                }
            }
        }
        Ok(out)
    }
}

/// Parsed constants, operations and forward (merge-direction) rules.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleSet {
    pub constants: ConstantTable,
    pub operations: OperationRegistry,
    pub rules: Vec<SandhiRule>,
}

impl RuleSet {
    pub fn parse(dictionary: &str, rules: &str) -> Result<Self, RuleError> {
        let (constants, operations) = parse_dictionary_file(dictionary)?;
        let rules = parse_rules(rules, &constants)?;
        Ok(RuleSet {
            constants,
            operations,
            rules,
        })
    }
}
