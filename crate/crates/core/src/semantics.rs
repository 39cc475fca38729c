//! Acceptability, the least-fixpoint justification semantics `J_{x/y}`, and
//! the literal-level consequences of a program.
//!
//! Argument sets are sets of indices into [`Framework::arguments`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::attacks::{AttackKind, AttackRelation, Framework};
use crate::error::Error;
use crate::syntax::{ObjectiveLiteral, Program};

pub type ArgumentSet = BTreeSet<usize>;

/// `x/y`: the opponent attacks with `x`, the proponent defends with `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct JustificationConfig {
    pub attack: AttackKind,
    pub defence: AttackKind,
}

impl JustificationConfig {
    pub fn new(attack: AttackKind, defence: AttackKind) -> Self {
        JustificationConfig { attack, defence }
    }

    /// All 36 combinations, attack-major.
    pub fn all() -> impl Iterator<Item = JustificationConfig> {
        AttackKind::ALL.into_iter().flat_map(|x| {
            AttackKind::ALL
                .into_iter()
                .map(move |y| JustificationConfig::new(x, y))
        })
    }
}

impl fmt::Display for JustificationConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.attack, self.defence)
    }
}

impl FromStr for JustificationConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s
            .split_once('/')
            .ok_or_else(|| Error::UnknownAttackKind(s.to_owned()))?;
        Ok(JustificationConfig::new(x.parse()?, y.parse()?))
    }
}

/// The acceptability operator for an arbitrary pair of relations.
#[derive(Clone, Debug)]
pub struct Acceptability {
    attackers: Vec<Vec<usize>>,
    defence: AttackRelation,
}

impl Acceptability {
    pub fn new(attack: &AttackRelation, defence: &AttackRelation) -> Self {
        assert_eq!(attack.size(), defence.size());
        Acceptability {
            attackers: attack.attackers(),
            defence: defence.clone(),
        }
    }

    pub fn for_config(framework: &Framework, cfg: JustificationConfig) -> Self {
        Acceptability::new(
            &framework.relation(cfg.attack),
            &framework.relation(cfg.defence),
        )
    }

    /// Every attacker of `argument` is counter-attacked from `set`.
    pub fn acceptable(&self, argument: usize, set: &ArgumentSet) -> bool {
        self.attackers[argument]
            .iter()
            .all(|&b| set.iter().any(|&c| self.defence.contains(c, b)))
    }

    pub fn apply(&self, set: &ArgumentSet) -> ArgumentSet {
        (0..self.attackers.len())
            .filter(|&a| self.acceptable(a, set))
            .collect()
    }

    /// `J⁰ = ∅, J¹, J², ...` up to and including the least fixpoint.
    pub fn stages(&self) -> Vec<ArgumentSet> {
        let mut stages = vec![ArgumentSet::new()];
        loop {
            let next = self.apply(stages.last().unwrap());
            if &next == stages.last().unwrap() {
                return stages;
            }
            debug_assert!(stages.last().unwrap().is_subset(&next));
            stages.push(next);
        }
    }

    pub fn least_fixpoint(&self) -> ArgumentSet {
        self.stages().pop().unwrap()
    }
}

/// Justified, overruled and defensible arguments under one configuration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ArgumentLabelling {
    pub justified: ArgumentSet,
    pub overruled: ArgumentSet,
    pub defensible: ArgumentSet,
}

/// `T ∪ not F`. The two sets may overlap.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Consequences {
    #[serde(rename = "T")]
    pub t: BTreeSet<ObjectiveLiteral>,
    #[serde(rename = "notF")]
    pub f: BTreeSet<ObjectiveLiteral>,
}

impl Framework {
    pub fn acceptable(&self, argument: usize, set: &ArgumentSet, cfg: JustificationConfig) -> bool {
        Acceptability::for_config(self, cfg).acceptable(argument, set)
    }

    pub fn f_operator(&self, cfg: JustificationConfig, set: &ArgumentSet) -> ArgumentSet {
        Acceptability::for_config(self, cfg).apply(set)
    }

    /// `J_{x/y}`.
    pub fn justified(&self, cfg: JustificationConfig) -> ArgumentSet {
        Acceptability::for_config(self, cfg).least_fixpoint()
    }

    /// Overruled means attacked (undercut or rebutted) by a justified
    /// argument, whatever the configuration.
    pub fn labelling(&self, cfg: JustificationConfig) -> ArgumentLabelling {
        let justified = self.justified(cfg);
        self.label(justified)
    }

    pub fn label(&self, justified: ArgumentSet) -> ArgumentLabelling {
        let attacks = self.relation(AttackKind::Attacks);
        let overruled: ArgumentSet = (0..self.len())
            .filter(|&b| justified.iter().any(|&c| attacks.contains(c, b)))
            .collect();
        let defensible = (0..self.len())
            .filter(|i| !justified.contains(i) && !overruled.contains(i))
            .collect();
        ArgumentLabelling {
            justified,
            overruled,
            defensible,
        }
    }

    /// Union of the conclusions of the given arguments.
    pub fn conclusions_of(&self, set: &ArgumentSet) -> BTreeSet<ObjectiveLiteral> {
        set.iter()
            .flat_map(|&i| self.arguments()[i].conclusions().iter().cloned())
            .collect()
    }

    pub fn consequences(&self, cfg: JustificationConfig) -> Consequences {
        self.consequences_of(&self.labelling(cfg))
    }

    /// `T`: conclusions of justified arguments. `F`: literals of the Herbrand
    /// base all of whose arguments are overruled (vacuously if none exist).
    pub fn consequences_of(&self, labelling: &ArgumentLabelling) -> Consequences {
        let t = self.conclusions_of(&labelling.justified);
        let f = self
            .program()
            .herbrand_base()
            .into_iter()
            .filter(|l| {
                self.arguments()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.concludes(l))
                    .all(|(i, _)| labelling.overruled.contains(&i))
            })
            .collect();
        Consequences { t, f }
    }
}

pub fn least_fixpoint(program: &Program, cfg: JustificationConfig) -> ArgumentSet {
    Framework::new(program).justified(cfg)
}

pub fn labelling(program: &Program, cfg: JustificationConfig) -> ArgumentLabelling {
    Framework::new(program).labelling(cfg)
}

pub fn consequences(program: &Program, cfg: JustificationConfig) -> Consequences {
    Framework::new(program).consequences(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_program;
    use AttackKind::*;

    const P1: &str = "p :- not q.\nq :- not p.";
    const P2: &str = "p :- not q.\nq :- not p.\n-p.";
    const P3: &str = "p :- not q.\nq :- not r.\nr :- not s.\ns :- not p.\n-p.";
    const P4: &str = "p :- not q.\nq :- not p.\nr :- not p.";
    const P5: &str = "p :- not -p.\n-p.";

    fn framework(text: &str) -> Framework {
        Framework::new(&parse_program(text).unwrap())
    }

    fn cfg(x: AttackKind, y: AttackKind) -> JustificationConfig {
        JustificationConfig::new(x, y)
    }

    fn ids(f: &Framework, rendered: &[&str]) -> ArgumentSet {
        rendered
            .iter()
            .map(|r| {
                f.arguments()
                    .iter()
                    .position(|a| a.to_string() == *r)
                    .unwrap_or_else(|| panic!("no argument {r}"))
            })
            .collect()
    }

    fn lits(items: &[&str]) -> BTreeSet<ObjectiveLiteral> {
        items.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn acceptability_examples() {
        let p2 = framework(P2);
        let neg_p = ids(&p2, &["[-p]"]);
        let q = ids(&p2, &["[q :- not p]"]);
        let ua = cfg(Undercuts, Attacks);
        assert!(p2.acceptable(*neg_p.first().unwrap(), &ArgumentSet::new(), ua));
        assert!(p2.acceptable(*q.first().unwrap(), &neg_p, ua));
        let p1 = framework(P1);
        let p = ids(&p1, &["[p :- not q]"]);
        assert!(!p1.acceptable(
            *p.first().unwrap(),
            &ArgumentSet::new(),
            cfg(Undercuts, Undercuts)
        ));
    }

    #[test]
    fn f_operator_stages_on_p2() {
        let p2 = framework(P2);
        let ua = cfg(Undercuts, Attacks);
        let j1 = p2.f_operator(ua, &ArgumentSet::new());
        assert_eq!(j1, ids(&p2, &["[-p]"]));
        let j2 = p2.f_operator(ua, &j1);
        assert_eq!(j2, ids(&p2, &["[-p]", "[q :- not p]"]));
        assert_eq!(p2.f_operator(ua, &j2), j2);
    }

    #[test]
    fn least_fixpoint_examples() {
        let p1 = framework(P1);
        assert_eq!(
            p1.justified(cfg(StronglyUndercuts, Undercuts)),
            ids(&p1, &["[p :- not q]", "[q :- not p]"])
        );
        assert!(framework(P4)
            .justified(cfg(Undercuts, Undercuts))
            .is_empty());
        let p3 = framework(P3);
        assert_eq!(
            p3.justified(cfg(StronglyUndercuts, Attacks)),
            ids(&p3, &["[-p]", "[q :- not r]", "[s :- not p]"])
        );
    }

    #[test]
    fn labelling_examples() {
        let p2 = framework(P2);
        let l = p2.labelling(cfg(Undercuts, Attacks));
        assert_eq!(l.justified, ids(&p2, &["[-p]", "[q :- not p]"]));
        assert_eq!(l.overruled, ids(&p2, &["[p :- not q]"]));
        assert!(l.defensible.is_empty());

        let p1 = framework(P1);
        let l = p1.labelling(cfg(Undercuts, Undercuts));
        assert!(l.justified.is_empty());
        assert!(l.overruled.is_empty());
        assert_eq!(l.defensible, ids(&p1, &["[p :- not q]", "[q :- not p]"]));

        let empty = framework("");
        assert_eq!(
            empty.labelling(cfg(Undercuts, Attacks)),
            ArgumentLabelling::default()
        );
    }

    #[test]
    fn consequences_examples() {
        let ua = cfg(Undercuts, Attacks);
        let c = framework(P2).consequences(ua);
        assert_eq!(c.t, lits(&["-p", "q"]));
        assert_eq!(c.f, lits(&["p", "-q"]));
        let c = framework(P5).consequences(ua);
        assert_eq!(c.t, lits(&["-p"]));
        assert_eq!(c.f, lits(&["p"]));
        let c = framework("p.\n-p.").consequences(ua);
        assert_eq!(c.t, lits(&["p", "-p"]));
        assert_eq!(c.f, lits(&["p", "-p"]));
    }

    #[test]
    fn config_parsing() {
        assert_eq!(
            "su/a".parse::<JustificationConfig>().unwrap(),
            cfg(StronglyUndercuts, Attacks)
        );
        assert!("su".parse::<JustificationConfig>().is_err());
        assert_eq!(JustificationConfig::all().count(), 36);
    }
}
