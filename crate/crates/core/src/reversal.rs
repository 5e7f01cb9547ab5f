//! Turning merge-direction rules into split-direction rules.
//!
//! A merge rule such as `(VOWEL) (iha|agga):$1t$2` cannot be reversed by
//! exchanging its sides, because the back-references would then precede
//! their groups. [`swap_backreferences`] produces the reversed rule with each
//! group moved to where its back-reference stood, [`resolve_operations`]
//! enumerates every concrete left-hand side, and [`expand_alternatives`]
//! turns right-hand alternatives into separate rules. The result is a list
//! of [`AtomicRule`]s, which contain literals only.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::rules::{Atom, ConstantTable, Group, OperationRegistry, RuleError, SandhiRule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReversalError {
    #[error("rule {rule} is not atomic")]
    NotAtomic { rule: String },
    #[error("rule {rule} cannot be reversed: {reason}")]
    UnreversibleRule { rule: String, reason: &'static str },
    #[error(transparent)]
    Rule(#[from] RuleError),
}

/// A rule made of literals only. The left-hand side may be anchored to the
/// start or end of the word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomicRule {
    pub lhs: String,
    pub rhs: String,
    pub at_start: bool,
    pub at_end: bool,
}

impl AtomicRule {
    pub fn new(lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        AtomicRule {
            lhs: lhs.into(),
            rhs: rhs.into(),
            at_start: false,
            at_end: false,
        }
    }

    /// Exchanges the two sides. Anchors stay attached to the match.
    pub fn reversed(&self) -> AtomicRule {
        AtomicRule {
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            ..*self
        }
    }

    /// True if the rule inserts a word boundary.
    pub fn splits(&self) -> bool {
        self.rhs.contains(' ')
    }

    pub fn is_identity(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Whether `lhs` occurs in `word` (as chars) at `pos`, honoring anchors.
    pub fn matches_at(&self, word: &[char], pos: usize) -> bool {
        let len = self.lhs.chars().count();
        if pos + len > word.len() {
            return false;
        }
        if (self.at_start && pos != 0) || (self.at_end && pos + len != word.len()) {
            return false;
        }
        self.lhs.chars().zip(&word[pos..]).all(|(a, b)| a == *b)
    }

    pub fn from_rule(rule: &SandhiRule) -> Result<AtomicRule, ReversalError> {
        let not_atomic = || ReversalError::NotAtomic {
            rule: rule.to_string(),
        };
        let mut lhs = rule.lhs.as_slice();
        let at_start = lhs.first() == Some(&Atom::Start);
        if at_start {
            lhs = &lhs[1..];
        }
        let at_end = lhs.last() == Some(&Atom::End);
        if at_end {
            lhs = &lhs[..lhs.len() - 1];
        }
        let literal = |atoms: &[Atom]| -> Option<String> {
            atoms
                .iter()
                .map(|a| match a {
                    Atom::Literal(s) => Some(s.as_str()),
                    _ => None,
                })
                .collect()
        };
        Ok(AtomicRule {
            lhs: literal(lhs).ok_or_else(not_atomic)?,
            rhs: literal(&rule.rhs).ok_or_else(not_atomic)?,
            at_start,
            at_end,
        })
    }
}

impl fmt::Display for AtomicRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let start = if self.at_start { "^" } else { "" };
        let end = if self.at_end { "$" } else { "" };
        write!(f, "{start}{}{end}:{}", self.lhs, self.rhs)
    }
}

/// Exchanges the sides of an atomic rule.
pub fn reverse_atomic(rule: &SandhiRule) -> Result<AtomicRule, ReversalError> {
    Ok(AtomicRule::from_rule(rule)?.reversed())
}

/// Returns `rule` in split orientation with every group/back-reference pair
/// exchanged.
///
/// The new left-hand side is the old right-hand side in which the first
/// occurrence of each `$n` is replaced by group `n` (later occurrences stay
/// back-references). The new right-hand side is the old left-hand side in
/// which referenced groups become back-references and unreferenced groups
/// stay behind as expandables. Groups are renumbered left to right.
pub fn swap_backreferences(rule: &SandhiRule) -> Result<SandhiRule, ReversalError> {
    rule.check_backreferences()?;
    let unreversible = |reason| ReversalError::UnreversibleRule {
        rule: rule.to_string(),
        reason,
    };

    let mut old_lhs = rule.lhs.as_slice();
    let at_start = old_lhs.first() == Some(&Atom::Start);
    if at_start {
        old_lhs = &old_lhs[1..];
    }
    let at_end = old_lhs.last() == Some(&Atom::End);
    if at_end {
        old_lhs = &old_lhs[..old_lhs.len() - 1];
    }
    let mut old_groups: Vec<&Group> = Vec::new();
    for atom in old_lhs {
        match atom {
            Atom::Group(g) => old_groups.push(g),
            Atom::Literal(_) => {}
            Atom::Start | Atom::End => return Err(unreversible("anchor inside the pattern")),
            Atom::Operation { .. } => return Err(unreversible("operation in the pattern")),
            Atom::BackRef(_) => return Err(unreversible("back-reference in the pattern")),
        }
    }

    // old group number -> new group number
    let mut renumber: BTreeMap<usize, usize> = BTreeMap::new();
    let mut next_group = 0;
    fn claim(n: usize, renumber: &mut BTreeMap<usize, usize>, next_group: &mut usize) -> Option<usize> {
        if let Some(&k) = renumber.get(&n) {
            return Some(k);
        }
        *next_group += 1;
        renumber.insert(n, *next_group);
        None
    }

    let mut new_lhs = Vec::new();
    if at_start {
        new_lhs.push(Atom::Start);
    }
    for atom in &rule.rhs {
        let swapped = match atom {
            Atom::Literal(s) => Atom::Literal(s.clone()),
            Atom::BackRef(n) => match claim(*n, &mut renumber, &mut next_group) {
                Some(k) => Atom::BackRef(k),
                None => Atom::Group(old_groups[n - 1].clone()),
            },
            Atom::Group(g) => {
                next_group += 1;
                Atom::Group(g.clone())
            }
            Atom::Operation { name, arg } => {
                let arg = match arg.as_ref() {
                    Atom::BackRef(n) => match claim(*n, &mut renumber, &mut next_group) {
                        Some(k) => Atom::BackRef(k),
                        None => Atom::Group(old_groups[n - 1].clone()),
                    },
                    Atom::Literal(s) => Atom::Literal(s.clone()),
                    _ => return Err(unreversible("operation argument must be a back-reference or literal")),
                };
                Atom::Operation {
                    name: name.clone(),
                    arg: Box::new(arg),
                }
            }
            Atom::Start | Atom::End => return Err(unreversible("anchor in the template")),
        };
        push_merged(&mut new_lhs, swapped);
    }
    if at_end {
        new_lhs.push(Atom::End);
    }

    let mut new_rhs = Vec::new();
    let mut group_no = 0;
    for atom in old_lhs {
        let swapped = match atom {
            Atom::Group(g) => {
                group_no += 1;
                match renumber.get(&group_no) {
                    Some(&k) => Atom::BackRef(k),
                    None => Atom::Group(g.clone()),
                }
            }
            other => other.clone(),
        };
        push_merged(&mut new_rhs, swapped);
    }

    Ok(SandhiRule {
        lhs: new_lhs,
        rhs: new_rhs,
        source: rule.source.clone(),
    })
}

fn push_merged(atoms: &mut Vec<Atom>, atom: Atom) {
    match (atoms.last_mut(), atom) {
        (Some(Atom::Literal(prev)), Atom::Literal(next)) => prev.push_str(&next),
        (_, atom) => atoms.push(atom),
    }
}

/// Expands a rule whose left-hand side is literal and whose right-hand side
/// may hold expandables (groups) into one atomic rule per combination.
///
/// Expandables are resolved left to right; the leftmost one varies slowest.
pub fn expand_alternatives(rule: &SandhiRule, consts: &ConstantTable) -> Result<Vec<AtomicRule>, ReversalError> {
    let head = AtomicRule::from_rule(&SandhiRule {
        lhs: rule.lhs.clone(),
        rhs: Vec::new(),
        source: String::new(),
    })
    .map_err(|_| ReversalError::NotAtomic {
        rule: rule.to_string(),
    })?;
    let mut outs = vec![String::new()];
    for atom in &rule.rhs {
        let pieces = match atom {
            Atom::Literal(s) => vec![s.clone()],
            Atom::Group(g) => g.resolved(consts)?,
            _ => {
                return Err(ReversalError::NotAtomic {
                    rule: rule.to_string(),
                })
            }
        };
        outs = outs
            .iter()
            .flat_map(|o| pieces.iter().map(move |p| format!("{o}{p}")))
            .collect();
    }
    Ok(outs
        .into_iter()
        .map(|rhs| AtomicRule { rhs, ..head.clone() })
        .collect())
}

/// Enumerates every concrete left-hand side of a reversed rule.
///
/// Each group on the left is replaced by each of its members in turn;
/// operations are evaluated on the chosen member and back-references on
/// both sides are replaced by it. Members outside an operation's domain
/// are skipped. Remaining right-hand expandables are then expanded.
pub fn resolve_operations(
    rule: &SandhiRule,
    consts: &ConstantTable,
    registry: &OperationRegistry,
) -> Result<Vec<AtomicRule>, ReversalError> {
    let mut groups: Vec<Vec<String>> = Vec::new();
    for atom in &rule.lhs {
        match atom {
            Atom::Group(g) => groups.push(g.resolved(consts)?),
            Atom::Operation { name, arg } => {
                if !registry.contains(name) {
                    return Err(RuleError::UnknownOperation { name: name.clone() }.into());
                }
                if let Atom::Group(g) = arg.as_ref() {
                    groups.push(g.resolved(consts)?);
                }
            }
            _ => {}
        }
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    if groups.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        let chosen: Vec<&str> = choice.iter().zip(&groups).map(|(&i, g)| g[i].as_str()).collect();
        if let Some(concrete) = instantiate(rule, &chosen, registry)? {
            out.extend(expand_alternatives(&concrete, consts)?);
        }
        // odometer: the last group varies fastest
        let mut k = groups.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < groups[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// Substitutes chosen group members into a reversed rule. `None` if an
/// operation is undefined for a chosen member.
fn instantiate(rule: &SandhiRule, chosen: &[&str], registry: &OperationRegistry) -> Result<Option<SandhiRule>, ReversalError> {
    let mut g = 0;
    let mut lhs = Vec::new();
    for atom in &rule.lhs {
        let text = match atom {
            Atom::Literal(s) => s.clone(),
            Atom::Group(_) => {
                g += 1;
                chosen[g - 1].to_string()
            }
            Atom::BackRef(n) => chosen[n - 1].to_string(),
            Atom::Operation { name, arg } => {
                let value = match arg.as_ref() {
                    Atom::Group(_) => {
                        g += 1;
                        chosen[g - 1].to_string()
                    }
                    Atom::BackRef(n) => chosen[n - 1].to_string(),
                    Atom::Literal(s) => s.clone(),
                    _ => {
                        return Err(ReversalError::UnreversibleRule {
                            rule: rule.to_string(),
                            reason: "nested operation",
                        })
                    }
                };
                match registry.eval(name, &value) {
                    Ok(s) => s,
                    Err(RuleError::DomainError { .. }) => return Ok(None),
                    Err(e) => return Err(e.into()),
                }
            }
            Atom::Start | Atom::End => {
                lhs.push(atom.clone());
                continue;
            }
        };
        push_merged(&mut lhs, Atom::Literal(text));
    }
    let mut rhs = Vec::new();
    for atom in &rule.rhs {
        let a = match atom {
            Atom::BackRef(n) => Atom::Literal(chosen[n - 1].to_string()),
            Atom::Literal(_) | Atom::Group(_) => atom.clone(),
            _ => {
                return Err(ReversalError::UnreversibleRule {
                    rule: rule.to_string(),
                    reason: "operation in the split template",
                })
            }
        };
        push_merged(&mut rhs, a);
    }
    Ok(Some(SandhiRule {
        lhs,
        rhs,
        source: rule.source.clone(),
    }))
}

/// Reverses one merge rule into its atomic split rules.
pub fn reverse_rule(
    rule: &SandhiRule,
    consts: &ConstantTable,
    registry: &OperationRegistry,
) -> Result<Vec<AtomicRule>, ReversalError> {
    let swapped = swap_backreferences(rule)?;
    resolve_operations(&swapped, consts, registry)
}

/// Output of [`reverse_ruleset`].
#[derive(Debug, Clone, Default)]
pub struct ReversedRuleset {
    pub rules: Vec<AtomicRule>,
    /// Rules that could not be reversed, with the reason.
    pub skipped: Vec<(SandhiRule, ReversalError)>,
}

impl ReversedRuleset {
    /// Serializes the rules in rule-file format, one per line.
    pub fn to_rule_file(&self) -> String {
        let mut s = String::new();
        for r in &self.rules {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

/// Reverses a whole merge ruleset. Output keeps rule order, drops exact
/// duplicates and identity rules, and reports unreversible rules instead
/// of failing.
pub fn reverse_ruleset(rules: &[SandhiRule], consts: &ConstantTable, registry: &OperationRegistry) -> ReversedRuleset {
    let mut out = ReversedRuleset::default();
    let mut seen = HashSet::new();
    for rule in rules {
        match reverse_rule(rule, consts, registry) {
            Ok(atomic) => {
                for r in atomic {
                    if !r.is_identity() && seen.insert(r.to_string()) {
                        out.rules.push(r);
                    }
                }
            }
            Err(e) => {
                log::warn!("skipping rule {rule}: {e}");
                out.skipped.push((rule.clone(), e));
            }
        }
    }
    out
}

/// Parses a file of atomic rules (as written by
/// [`ReversedRuleset::to_rule_file`]).
pub fn parse_atomic_rules(text: &str) -> Result<Vec<AtomicRule>, ReversalError> {
    let consts = ConstantTable::new();
    crate::rules::parse_rules(text, &consts)?
        .iter()
        .map(AtomicRule::from_rule)
        .collect()
}
