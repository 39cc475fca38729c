//! Runs named property suites over the fixtures and generated programs.

use std::fmt;
use std::str::FromStr;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::generator::{gen_program, GeneratorConfig};
use crate::properties::{suite_properties, Property};
use crate::syntax::Program;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Hierarchy,
    Wfsx,
    Dialectic,
    Minimality,
    GammaArgs,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "hierarchy",
        "wfsx",
        "dialectic",
        "minimality",
        "gamma-args",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hierarchy => "hierarchy",
            Suite::Wfsx => "wfsx",
            Suite::Dialectic => "dialectic",
            Suite::Minimality => "minimality",
            Suite::GammaArgs => "gamma-args",
            Suite::All => "all",
        }
    }

    pub fn properties(self) -> Vec<Property> {
        suite_properties(self.name()).expect("every suite has properties")
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hierarchy" => Suite::Hierarchy,
            "wfsx" => Suite::Wfsx,
            "dialectic" => Suite::Dialectic,
            "minimality" => Suite::Minimality,
            "gamma-args" => Suite::GammaArgs,
            "all" => Suite::All,
            _ => return Err(Error::UnknownSuite(s.to_owned())),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub property: String,
    /// Where the case came from: a fixture name or `seed=<n>`.
    pub case: String,
    /// The program after shrinking, in canonical text.
    pub program: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {}: {} cases, {} failures",
            self.suite,
            self.cases,
            self.failures.len()
        )?;
        for failure in &self.failures {
            writeln!(
                f,
                "  {} [{}]: {}",
                failure.property, failure.case, failure.detail
            )?;
            for line in failure.program.lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}

/// A generated case: the program plus the per-case seed handed to the
/// properties.
pub struct Case {
    pub label: String,
    pub program: Program,
    pub seed: u64,
}

/// Seed for generated case `index`; spreads nearby indices apart.
pub fn case_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64)
        .wrapping_add(1)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// The `index`-th generated program. Its atom and rule counts are drawn
/// uniformly up to the bounds in `cfg`, so small programs are covered too.
pub fn generated_case(cfg: &GeneratorConfig, index: usize) -> Result<Case> {
    cfg.validate()?;
    let seed = case_seed(cfg.seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let atoms = rng.gen_range(1..=cfg.atoms);
    let case_cfg = GeneratorConfig {
        seed,
        atoms,
        rules: rng.gen_range(0..=cfg.rules),
        max_body: cfg.max_body.min(atoms),
        ..cfg.clone()
    };
    Ok(Case {
        label: format!("seed={seed}"),
        program: gen_program(&case_cfg)?,
        seed,
    })
}

/// Fixtures first, then `cases` generated programs.
pub fn corpus(cases: usize, cfg: &GeneratorConfig) -> Result<Vec<Case>> {
    let mut all: Vec<Case> = fixtures::all()
        .into_iter()
        .map(|(name, program)| Case {
            label: name.to_owned(),
            program,
            seed: cfg.seed,
        })
        .collect();
    for i in 0..cases {
        all.push(generated_case(cfg, i)?);
    }
    Ok(all)
}

/// Greedily drops rules while `check` keeps failing.
pub fn shrink(program: &Program, check: impl Fn(&Program) -> bool) -> Program {
    let mut current = program.clone();
    'outer: loop {
        for i in 0..current.len() {
            let smaller = current.without_rule(i);
            if !check(&smaller) {
                current = smaller;
                continue 'outer;
            }
        }
        return current;
    }
}

fn run_case(properties: &[Property], case: &Case) -> Vec<Failure> {
    properties
        .iter()
        .filter_map(|prop| {
            (prop.check)(&case.program, case.seed).err().map(|_| {
                let seed = case.seed;
                let shrunk = shrink(&case.program, |p| (prop.check)(p, seed).is_ok());
                let detail = (prop.check)(&shrunk, seed)
                    .err()
                    .unwrap_or_else(|| "failure vanished after shrinking".into());
                Failure {
                    property: prop.name.to_owned(),
                    case: case.label.clone(),
                    program: shrunk.to_string(),
                    detail,
                }
            })
        })
        .collect()
}

/// Runs `suite` over the fixtures and `cases` generated programs, spreading
/// cases over the available cores. Deterministic for a fixed `cfg`.
pub fn run_suite(suite: Suite, cases: usize, cfg: &GeneratorConfig) -> Result<SuiteReport> {
    let corpus = corpus(cases, cfg)?;
    let properties = suite.properties();
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(corpus.len().max(1));
    let chunk = corpus.len().div_ceil(workers).max(1);

    let failures = thread::scope(|scope| {
        let handles: Vec<_> = corpus
            .chunks(chunk)
            .map(|cases| {
                let properties = &properties;
                scope.spawn(move || {
                    cases
                        .iter()
                        .flat_map(|case| run_case(properties, case))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite worker panicked"))
            .collect()
    });

    Ok(SuiteReport {
        suite: suite.name().to_owned(),
        cases: corpus.len(),
        failures,
    })
}
