//! Arguments: chained rule sequences and the enumeration of minimal ones.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::syntax::{ObjectiveLiteral, Program, Rule};

/// A finite sequence of rules in which every objective body literal of a rule
/// is the head of some later rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Argument {
    rules: Vec<Rule>,
    conclusions: BTreeSet<ObjectiveLiteral>,
    assumptions: BTreeSet<ObjectiveLiteral>,
}

impl Argument {
    /// Builds an argument from a rule sequence, or `None` if the sequence is
    /// empty or violates chaining.
    pub fn new(rules: Vec<Rule>) -> Option<Self> {
        if !is_chained(&rules) {
            return None;
        }
        let conclusions = rules.iter().map(|r| r.head.clone()).collect();
        let assumptions = rules
            .iter()
            .flat_map(|r| r.default_body.iter().cloned())
            .collect();
        Some(Argument {
            rules,
            conclusions,
            assumptions,
        })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// The head of the first rule.
    pub fn root(&self) -> &ObjectiveLiteral {
        &self.rules[0].head
    }

    pub fn conclusions(&self) -> &BTreeSet<ObjectiveLiteral> {
        &self.conclusions
    }

    /// Literals `L` such that `not L` occurs in some body.
    pub fn assumptions(&self) -> &BTreeSet<ObjectiveLiteral> {
        &self.assumptions
    }

    pub fn concludes(&self, literal: &ObjectiveLiteral) -> bool {
        self.conclusions.contains(literal)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Whether no proper subargument concludes `literal`.
    pub fn is_minimal_for(&self, literal: &ObjectiveLiteral) -> bool {
        self.concludes(literal)
            && !proper_subsequences(&self.rules)
                .any(|sub| sub.iter().any(|r| &r.head == literal) && is_chained(&sub))
    }

    pub fn is_minimal(&self) -> bool {
        self.conclusions.iter().any(|l| self.is_minimal_for(l))
    }

    /// Every subsequence that is itself an argument, including `self`.
    pub fn subarguments(&self) -> BTreeSet<Argument> {
        let n = self.rules.len();
        (1u64..1 << n)
            .filter_map(|mask| Argument::new(select(&self.rules, mask)))
            .collect()
    }

    /// The rules as a set; two arguments with the same rule set are
    /// interchangeable for every semantics in this crate.
    pub fn rule_set(&self) -> BTreeSet<&Rule> {
        self.rules.iter().collect()
    }
}

impl PartialOrd for Argument {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Argument {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rules.cmp(&other.rules)
    }
}

/// `[r1; r2; ...]`
impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, rule) in self.rules.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{rule}")?;
        }
        f.write_str("]")
    }
}

fn is_chained(rules: &[Rule]) -> bool {
    !rules.is_empty()
        && rules.iter().enumerate().all(|(i, rule)| {
            rule.objective_body
                .iter()
                .all(|l| rules[i + 1..].iter().any(|later| &later.head == l))
        })
}

fn select(rules: &[Rule], mask: u64) -> Vec<Rule> {
    rules
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, r)| r.clone())
        .collect()
}

fn proper_subsequences(rules: &[Rule]) -> impl Iterator<Item = Vec<Rule>> + '_ {
    assert!(rules.len() < 64, "argument too long for subsequence search");
    let full = (1u64 << rules.len()) - 1;
    (1..full).map(move |mask| select(rules, mask))
}

/// Whether `seq` is a nonempty chained sequence of rules of `program`.
pub fn is_argument(program: &Program, seq: &[Rule]) -> bool {
    seq.iter().all(|r| program.rules().contains(r)) && is_chained(seq)
}

pub fn is_minimal(argument: &Argument) -> bool {
    argument.is_minimal()
}

pub fn subarguments(argument: &Argument) -> BTreeSet<Argument> {
    argument.subarguments()
}

/// All minimal arguments of `program`, sorted by their rendering.
///
/// A minimal argument selects at most one rule per literal, starting from a
/// root rule and following objective body literals without cycles. The rules
/// are emitted root first, each before the rules for its body literals.
pub fn minimal_arguments(program: &Program) -> Vec<Argument> {
    let mut by_head: BTreeMap<&ObjectiveLiteral, Vec<&Rule>> = BTreeMap::new();
    for rule in program.iter() {
        by_head.entry(&rule.head).or_default().push(rule);
    }

    let mut found = BTreeSet::new();
    for root in program.iter() {
        let mut selection = BTreeMap::new();
        selection.insert(&root.head, root);
        if reaches(&selection, &root.head, &root.head) {
            continue;
        }
        extend_selection(&by_head, &mut selection, &mut |sel| {
            found.insert(linearize(root, sel));
        });
    }

    let mut args: Vec<Argument> = found
        .into_iter()
        .map(|rules| Argument::new(rules).expect("selection is chained"))
        .collect();
    args.sort_by_cached_key(|a| a.to_string());
    args
}

type Selection<'p> = BTreeMap<&'p ObjectiveLiteral, &'p Rule>;

/// Enumerates every completion of `selection` that assigns a rule to each
/// required literal without creating a dependency cycle.
fn extend_selection<'p>(
    by_head: &BTreeMap<&'p ObjectiveLiteral, Vec<&'p Rule>>,
    selection: &mut Selection<'p>,
    emit: &mut dyn FnMut(&Selection<'p>),
) {
    let pending = selection
        .values()
        .flat_map(|r| r.objective_body.iter())
        .find(|l| !selection.contains_key(l));
    let Some(literal) = pending else {
        emit(selection);
        return;
    };
    for &rule in by_head.get(literal).into_iter().flatten() {
        selection.insert(literal, rule);
        if !reaches(selection, literal, literal) {
            extend_selection(by_head, selection, emit);
        }
        selection.remove(literal);
    }
}

/// Whether `target` is reachable from the body of the rule selected for
/// `from`, through selected rules.
fn reaches(selection: &Selection<'_>, from: &ObjectiveLiteral, target: &ObjectiveLiteral) -> bool {
    let mut stack: Vec<&ObjectiveLiteral> = selection[from].objective_body.iter().collect();
    let mut seen = BTreeSet::new();
    while let Some(l) = stack.pop() {
        if l == target {
            return true;
        }
        if seen.insert(l) {
            if let Some(rule) = selection.get(l) {
                stack.extend(rule.objective_body.iter());
            }
        }
    }
    false
}

/// Reverse post-order from the root: every rule precedes the rules it uses.
fn linearize(root: &Rule, selection: &Selection<'_>) -> Vec<Rule> {
    fn visit<'p>(
        rule: &'p Rule,
        selection: &Selection<'p>,
        done: &mut BTreeSet<&'p ObjectiveLiteral>,
        out: &mut Vec<Rule>,
    ) {
        for l in &rule.objective_body {
            if done.insert(l) {
                visit(selection[l], selection, done, out);
            }
        }
        out.push(rule.clone());
    }
    let mut done = BTreeSet::from([&root.head]);
    let mut out = Vec::new();
    visit(root, selection, &mut done, &mut out);
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_program;

    fn program(text: &str) -> Program {
        parse_program(text).unwrap()
    }

    fn rules(p: &Program, idx: &[usize]) -> Vec<Rule> {
        idx.iter().map(|&i| p.rules()[i].clone()).collect()
    }

    fn rendered(args: &[Argument]) -> Vec<String> {
        args.iter().map(ToString::to_string).collect()
    }

    const P1: &str = "p :- not q.\nq :- not p.";
    const P2: &str = "p :- not q.\nq :- not p.\n-p.";
    const P3: &str = "p :- not q.\nq :- not r.\nr :- not s.\ns :- not p.\n-p.";
    const CHAIN: &str = "p :- q, not r.\nq.";

    #[test]
    fn chaining_condition() {
        let p1 = program(P1);
        assert!(is_argument(&p1, &rules(&p1, &[1])));
        let chain = program(CHAIN);
        assert!(!is_argument(&chain, &rules(&chain, &[0])));
        assert!(is_argument(&chain, &rules(&chain, &[0, 1])));
        assert!(!is_argument(&chain, &rules(&chain, &[1, 0])));
        assert!(!is_argument(&chain, &[]));
        let foreign = program("z.");
        assert!(!is_argument(&chain, foreign.rules()));
    }

    #[test]
    fn minimality() {
        let p2 = program(P2);
        assert!(Argument::new(rules(&p2, &[2])).unwrap().is_minimal());
        let p1 = program(P1);
        let both = Argument::new(rules(&p1, &[0, 1])).unwrap();
        assert!(!both.is_minimal());
        let chain = program(CHAIN);
        let a = Argument::new(rules(&chain, &[0, 1])).unwrap();
        assert!(a.is_minimal_for(&"p".parse().unwrap()));
        assert!(!a.is_minimal_for(&"q".parse().unwrap()));
        assert!(a.is_minimal());
    }

    #[test]
    fn subargument_enumeration() {
        let chain = program(CHAIN);
        let fact = Argument::new(rules(&chain, &[1])).unwrap();
        assert_eq!(fact.subarguments(), BTreeSet::from([fact.clone()]));
        let a = Argument::new(rules(&chain, &[0, 1])).unwrap();
        assert_eq!(a.subarguments(), BTreeSet::from([a.clone(), fact]));
    }

    #[test]
    fn minimal_arguments_of_fixtures() {
        assert_eq!(
            rendered(&minimal_arguments(&program(P1))),
            ["[p :- not q]", "[q :- not p]"]
        );
        assert_eq!(
            rendered(&minimal_arguments(&program(P3))),
            [
                "[-p]",
                "[p :- not q]",
                "[q :- not r]",
                "[r :- not s]",
                "[s :- not p]"
            ]
        );
        assert!(minimal_arguments(&program("p :- p.")).is_empty());
        assert_eq!(
            rendered(&minimal_arguments(&program(CHAIN))),
            ["[p :- q, not r; q]", "[q]"]
        );
        assert!(minimal_arguments(&Program::default()).is_empty());
    }

    #[test]
    fn shared_subproofs_are_selected_once() {
        let p = program("p :- a, b.\na :- c.\nb :- c.\nc.\nc :- not d.");
        let args = minimal_arguments(&p);
        let for_p: Vec<_> = args
            .iter()
            .filter(|a| a.root() == &"p".parse().unwrap())
            .collect();
        // one argument per choice of rule for c
        assert_eq!(for_p.len(), 2);
        for a in for_p {
            assert_eq!(a.len(), 4);
            assert!(a.is_minimal_for(a.root()));
        }
    }

    #[test]
    fn cycles_are_not_arguments() {
        let p = program("p :- q.\nq :- p.\nq :- not r.");
        assert_eq!(
            rendered(&minimal_arguments(&p)),
            ["[p :- q; q :- not r]", "[q :- not r]"]
        );
    }

    #[test]
    fn json_shape() {
        let a = &minimal_arguments(&program(CHAIN))[0];
        let json = serde_json::to_value(a).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "rules": ["p :- q, not r", "q"],
                "conclusions": ["p", "q"],
                "assumptions": ["r"],
            })
        );
    }
}
