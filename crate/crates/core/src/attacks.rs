//! Notions of attack between arguments.
//!
//! Undercut and rebut are primitive. The other four are derived relationally:
//!
//! ```text
//! a  = u ∪ r
//! d  = u ∪ (r − u⁻¹)
//! sa = (u ∪ r) − u⁻¹
//! su = u − u⁻¹
//! ```
//!
//! The pointwise readings of the same notions live in [`prose`] and are used
//! only to cross-check the relational ones.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arguments::{minimal_arguments, Argument};
use crate::error::Error;
use crate::syntax::{Program, Rule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AttackKind {
    #[serde(rename = "u")]
    Undercuts,
    #[serde(rename = "r")]
    Rebuts,
    #[serde(rename = "a")]
    Attacks,
    #[serde(rename = "d")]
    Defeats,
    #[serde(rename = "sa")]
    StronglyAttacks,
    #[serde(rename = "su")]
    StronglyUndercuts,
}

impl AttackKind {
    pub const ALL: [AttackKind; 6] = [
        AttackKind::Undercuts,
        AttackKind::Rebuts,
        AttackKind::Attacks,
        AttackKind::Defeats,
        AttackKind::StronglyAttacks,
        AttackKind::StronglyUndercuts,
    ];

    /// The five kinds of the attack hierarchy (everything except rebuts).
    pub const HIERARCHY: [AttackKind; 5] = [
        AttackKind::Undercuts,
        AttackKind::Attacks,
        AttackKind::Defeats,
        AttackKind::StronglyAttacks,
        AttackKind::StronglyUndercuts,
    ];

    pub fn abbreviation(self) -> &'static str {
        match self {
            AttackKind::Undercuts => "u",
            AttackKind::Rebuts => "r",
            AttackKind::Attacks => "a",
            AttackKind::Defeats => "d",
            AttackKind::StronglyAttacks => "sa",
            AttackKind::StronglyUndercuts => "su",
        }
    }
}

impl fmt::Display for AttackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

impl FromStr for AttackKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AttackKind::ALL
            .into_iter()
            .find(|k| k.abbreviation() == s)
            .ok_or_else(|| Error::UnknownAttackKind(s.to_owned()))
    }
}

/// `a` undercuts `b`: some conclusion of `a` is an assumption of `b`.
pub fn undercuts(a: &Argument, b: &Argument) -> bool {
    a.conclusions().iter().any(|l| b.assumptions().contains(l))
}

/// `a` rebuts `b`: some conclusion of `a` is the complement of a conclusion of
/// `b`. Symmetric.
pub fn rebuts(a: &Argument, b: &Argument) -> bool {
    a.conclusions()
        .iter()
        .any(|l| b.conclusions().contains(&l.complement()))
}

/// Pointwise evaluation of the relational identity for `kind`.
pub fn attacks_by(kind: AttackKind, a: &Argument, b: &Argument) -> bool {
    let u = undercuts(a, b);
    let r = rebuts(a, b);
    let u_inverse = undercuts(b, a);
    match kind {
        AttackKind::Undercuts => u,
        AttackKind::Rebuts => r,
        AttackKind::Attacks => u || r,
        AttackKind::Defeats => u || (r && !u_inverse),
        AttackKind::StronglyAttacks => (u || r) && !u_inverse,
        AttackKind::StronglyUndercuts => u && !u_inverse,
    }
}

/// The notions of attack phrased one by one, as plain English would: "`a`
/// defeats `b` if `a` undercuts `b`, or `a` rebuts `b` and `b` does not
/// undercut `a`", and so on.
pub mod prose {
    use super::{rebuts, undercuts};
    use crate::arguments::Argument;

    pub fn attacks(a: &Argument, b: &Argument) -> bool {
        undercuts(a, b) || rebuts(a, b)
    }

    pub fn defeats(a: &Argument, b: &Argument) -> bool {
        if undercuts(a, b) {
            return true;
        }
        rebuts(a, b) && !undercuts(b, a)
    }

    pub fn strongly_attacks(a: &Argument, b: &Argument) -> bool {
        attacks(a, b) && !undercuts(b, a)
    }

    pub fn strongly_undercuts(a: &Argument, b: &Argument) -> bool {
        undercuts(a, b) && !undercuts(b, a)
    }
}

/// A binary relation over the arguments `0..size` of some argument list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AttackRelation {
    /// `None` for relations built by set algebra that match no named kind.
    pub kind: Option<AttackKind>,
    size: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl AttackRelation {
    pub fn new(
        kind: Option<AttackKind>,
        size: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        assert!(pairs.iter().all(|&(a, b)| a < size && b < size));
        AttackRelation { kind, size, pairs }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, attacker: usize, target: usize) -> bool {
        self.pairs.contains(&(attacker, target))
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn inverse(&self) -> AttackRelation {
        AttackRelation {
            kind: None,
            size: self.size,
            pairs: self.pairs.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    pub fn union(&self, other: &AttackRelation) -> AttackRelation {
        debug_assert_eq!(self.size, other.size);
        AttackRelation {
            kind: None,
            size: self.size,
            pairs: &self.pairs | &other.pairs,
        }
    }

    pub fn difference(&self, other: &AttackRelation) -> AttackRelation {
        debug_assert_eq!(self.size, other.size);
        AttackRelation {
            kind: None,
            size: self.size,
            pairs: &self.pairs - &other.pairs,
        }
    }

    pub fn is_subset(&self, other: &AttackRelation) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    fn named(mut self, kind: AttackKind) -> Self {
        self.kind = Some(kind);
        self
    }

    /// Dense `attackers[target]` lists, for the fixpoint and dialogue code.
    pub fn attackers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.size];
        for &(a, b) in &self.pairs {
            out[b].push(a);
        }
        out
    }
}

pub fn inverse(relation: &AttackRelation) -> AttackRelation {
    relation.inverse()
}

/// The minimal arguments of a program together with its two primitive
/// attack relations.
#[derive(Clone, Debug)]
pub struct Framework {
    program: Program,
    arguments: Vec<Argument>,
    undercut: AttackRelation,
    rebut: AttackRelation,
    by_rule_set: HashMap<Vec<Rule>, usize>,
}

impl Framework {
    pub fn new(program: &Program) -> Self {
        Framework::from_arguments(program.clone(), minimal_arguments(program))
    }

    pub fn from_arguments(program: Program, arguments: Vec<Argument>) -> Self {
        let n = arguments.len();
        let mut u = Vec::new();
        let mut r = Vec::new();
        for (i, a) in arguments.iter().enumerate() {
            for (j, b) in arguments.iter().enumerate() {
                if undercuts(a, b) {
                    u.push((i, j));
                }
                if rebuts(a, b) {
                    r.push((i, j));
                }
            }
        }
        let by_rule_set = arguments
            .iter()
            .enumerate()
            .map(|(i, a)| (sorted_rules(a), i))
            .collect();
        Framework {
            program,
            by_rule_set,
            arguments,
            undercut: AttackRelation::new(Some(AttackKind::Undercuts), n, u),
            rebut: AttackRelation::new(Some(AttackKind::Rebuts), n, r),
        }
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn arguments(&self) -> &[Argument] {
        &self.arguments
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    /// Position of the argument with the same rule set.
    pub fn index_of(&self, argument: &Argument) -> Option<usize> {
        self.by_rule_set.get(&sorted_rules(argument)).copied()
    }

    pub fn relation(&self, kind: AttackKind) -> AttackRelation {
        let u = &self.undercut;
        let r = &self.rebut;
        let relation = match kind {
            AttackKind::Undercuts => u.clone(),
            AttackKind::Rebuts => r.clone(),
            AttackKind::Attacks => u.union(r),
            AttackKind::Defeats => u.union(&r.difference(&u.inverse())),
            AttackKind::StronglyAttacks => u.union(r).difference(&u.inverse()),
            AttackKind::StronglyUndercuts => u.difference(&u.inverse()),
        };
        relation.named(kind)
    }
}

fn sorted_rules(argument: &Argument) -> Vec<Rule> {
    let mut rules = argument.rules().to_vec();
    rules.sort();
    rules.dedup();
    rules
}

/// Graphviz rendering of the attack graph, one edge per attacking pair and
/// kind, labelled with the kind.
pub fn export_dot(framework: &Framework, kinds: &[AttackKind]) -> String {
    use std::fmt::Write as _;
    let mut out = String::from("digraph attacks {\n");
    for (i, a) in framework.arguments().iter().enumerate() {
        let label = a.to_string().replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(out, "  a{i} [label=\"{i}: {label}\", shape=box];");
    }
    for &kind in kinds {
        for &(i, j) in framework.relation(kind).pairs() {
            let _ = writeln!(out, "  a{i} -> a{j} [label=\"{kind}\"];");
        }
    }
    out.push_str("}\n");
    out
}

/// Materializes `kind` over the minimal arguments of `program`.
pub fn relation(program: &Program, kind: AttackKind) -> AttackRelation {
    Framework::new(program).relation(kind)
}
