//! The Γ and Γ_s operators and the paraconsistent well-founded model.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Contradiction, Error};
use crate::syntax::{ObjectiveLiteral, Program};

pub type LiteralSet = BTreeSet<ObjectiveLiteral>;

/// `T ∪ not F`, with `T` and `F` subsets of the Herbrand base.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PseudoInterpretation {
    #[serde(rename = "T")]
    pub t: LiteralSet,
    #[serde(rename = "notF")]
    pub f: LiteralSet,
}

impl PseudoInterpretation {
    /// `T ∩ F`; empty iff this is an interpretation.
    pub fn overlap(&self) -> LiteralSet {
        &self.t & &self.f
    }

    pub fn is_interpretation(&self) -> bool {
        self.t.is_disjoint(&self.f)
    }

    pub fn is_two_valued(&self, herbrand_base: &LiteralSet) -> bool {
        self.is_interpretation() && &(&self.t | &self.f) == herbrand_base
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelResult {
    pub wfm_p: PseudoInterpretation,
    pub contradictory: bool,
    /// `I₀ = ∅, I₁, ...` ending at the least fixpoint of ΓΓ_s.
    pub stages: Vec<LiteralSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Operator {
    Gamma,
    GammaS,
}

impl Operator {
    pub fn apply(self, program: &Program, interpretation: &LiteralSet) -> LiteralSet {
        match self {
            Operator::Gamma => gamma(program, interpretation),
            Operator::GammaS => gamma_s(program, interpretation),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operator::Gamma => "G",
            Operator::GammaS => "Gs",
        })
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "G" | "gamma" => Ok(Operator::Gamma),
            "Gs" | "gamma_s" => Ok(Operator::GammaS),
            _ => Err(Error::InvalidConfig(format!("unknown operator `{s}`"))),
        }
    }
}

/// Γ: drop rules with some `not A` where `A ∈ I`, drop the remaining default
/// literals, and return the least model of what is left. Explicitly negated
/// literals are treated as atoms of their own throughout.
pub fn gamma(program: &Program, interpretation: &LiteralSet) -> LiteralSet {
    let definite: Vec<_> = program
        .iter()
        .filter(|r| r.default_body.is_disjoint(interpretation))
        .map(|r| (&r.head, &r.objective_body))
        .collect();

    let mut model = LiteralSet::new();
    loop {
        let before = model.len();
        for (head, body) in &definite {
            if !model.contains(*head) && body.is_subset(&model) {
                model.insert((*head).clone());
            }
        }
        if model.len() == before {
            return model;
        }
    }
}

/// Γ over the semi-normal version of the program.
pub fn gamma_s(program: &Program, interpretation: &LiteralSet) -> LiteralSet {
    gamma(&program.semi_normal(), interpretation)
}

/// Least fixpoint of `I ↦ outer(inner(I))`, iterated from the empty set.
pub fn lfp_compose(program: &Program, outer: Operator, inner: Operator) -> LiteralSet {
    compose_stages(program, outer, inner).pop().unwrap()
}

fn compose_stages(program: &Program, outer: Operator, inner: Operator) -> Vec<LiteralSet> {
    let semi_normal = program.semi_normal();
    let run = |op: Operator, i: &LiteralSet| match op {
        Operator::Gamma => gamma(program, i),
        Operator::GammaS => gamma(&semi_normal, i),
    };
    let mut stages = vec![LiteralSet::new()];
    loop {
        let last = stages.last().unwrap();
        let next = run(outer, &run(inner, last));
        if &next == last {
            return stages;
        }
        stages.push(next);
    }
}

/// `WFM_p(P) = T ∪ not (H(P) − Γ_s T)` with `T = lfp(ΓΓ_s)`.
pub fn wfm_p(program: &Program) -> ModelResult {
    let stages = compose_stages(program, Operator::Gamma, Operator::GammaS);
    let t = stages.last().unwrap().clone();
    let supported = gamma_s(program, &t);
    let f = program
        .herbrand_base()
        .into_iter()
        .filter(|l| !supported.contains(l))
        .collect();
    let wfm_p = PseudoInterpretation { t, f };
    ModelResult {
        contradictory: !wfm_p.is_interpretation(),
        wfm_p,
        stages,
    }
}

/// The well-founded model, or the contradiction that prevents it.
pub fn wfm(program: &Program) -> Result<PseudoInterpretation, Contradiction> {
    let result = wfm_p(program);
    if result.contradictory {
        Err(Contradiction {
            overlap: result.wfm_p.overlap(),
        })
    } else {
        Ok(result.wfm_p)
    }
}
