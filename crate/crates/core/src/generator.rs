//! Seeded random programs for property suites.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::syntax::{Atom, ObjectiveLiteral, Program, Rule};

const ATOM_NAMES: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub atoms: usize,
    pub rules: usize,
    pub max_body: usize,
    pub explicit_neg_prob: f64,
    pub default_neg_prob: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0,
            atoms: 6,
            rules: 12,
            max_body: 2,
            explicit_neg_prob: 0.3,
            default_neg_prob: 0.6,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidConfig(msg));
        if self.atoms == 0 {
            return invalid("atoms must be at least 1".into());
        }
        if self.max_body > self.atoms {
            return invalid(format!(
                "max_body ({}) cannot exceed atoms ({})",
                self.max_body, self.atoms
            ));
        }
        for (name, p) in [
            ("explicit_neg_prob", self.explicit_neg_prob),
            ("default_neg_prob", self.default_neg_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return invalid(format!("{name} must lie in [0, 1], got {p}"));
            }
        }
        Ok(())
    }
}

pub fn atom_name(i: usize) -> String {
    ATOM_NAMES
        .get(i)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("a{i}"))
}

/// A random program with `cfg.rules` distinct rules (fewer only when the
/// configuration cannot produce that many distinct rules).
///
/// Heads pick an atom uniformly and negate it with `explicit_neg_prob`.
/// Bodies have a uniform size in `0..=max_body` over distinct atoms; each body
/// literal is explicitly negated with `explicit_neg_prob` and placed under
/// `not` with `default_neg_prob`.
pub fn gen_program(cfg: &GeneratorConfig) -> Result<Program> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let atoms: Vec<Atom> = (0..cfg.atoms)
        .map(|i| Atom::new(atom_name(i)).expect("generated names are valid"))
        .collect();
    let literal = |rng: &mut ChaCha8Rng, atom: &Atom| {
        if rng.gen_bool(cfg.explicit_neg_prob) {
            ObjectiveLiteral::negative(atom.clone())
        } else {
            ObjectiveLiteral::positive(atom.clone())
        }
    };

    let mut rules: Vec<Rule> = Vec::with_capacity(cfg.rules);
    let mut attempts = 0;
    while rules.len() < cfg.rules && attempts < cfg.rules * 50 {
        attempts += 1;
        let head_atom = rng.gen_range(0..atoms.len());
        let head = literal(&mut rng, &atoms[head_atom]);
        let size = rng.gen_range(0..=cfg.max_body);
        let mut rule = Rule::fact(head);
        for i in sample(&mut rng, atoms.len(), size) {
            let lit = literal(&mut rng, &atoms[i]);
            if rng.gen_bool(cfg.default_neg_prob) {
                rule.default_body.insert(lit);
            } else {
                rule.objective_body.insert(lit);
            }
        }
        if !rules.contains(&rule) {
            rules.push(rule);
        }
    }
    Ok(Program::new(rules))
}
