//! The six example programs P1-P6 and the justified sets known for them.

use crate::attacks::AttackKind::{self, *};
use crate::syntax::{parse_program, Program};

pub const P1: &str = include_str!("../fixtures/p1.elp");
pub const P2: &str = include_str!("../fixtures/p2.elp");
pub const P3: &str = include_str!("../fixtures/p3.elp");
pub const P4: &str = include_str!("../fixtures/p4.elp");
pub const P5: &str = include_str!("../fixtures/p5.elp");
pub const P6: &str = include_str!("../fixtures/p6.elp");

/// Both `p` and `-p` are facts; the smallest contradictory program.
pub const CONTRADICTORY: &str = "p.\n-p.\n";

pub const NAMED: [(&str, &str); 6] = [
    ("P1", P1),
    ("P2", P2),
    ("P3", P3),
    ("P4", P4),
    ("P5", P5),
    ("P6", P6),
];

pub fn program(text: &str) -> Program {
    parse_program(text).expect("fixture parses")
}

/// All fixtures, P1-P6 followed by the contradictory one.
pub fn all() -> Vec<(&'static str, Program)> {
    NAMED
        .iter()
        .map(|&(name, text)| (name, program(text)))
        .chain([("contradictory", program(CONTRADICTORY))])
        .collect()
}

/// Defence kind of a golden entry: a fixed kind, or every kind.
#[derive(Clone, Copy, Debug)]
pub enum Defence {
    Kind(AttackKind),
    Any,
}

/// One known justified set: `J_{attack/defence}` of `fixture`, as rendered
/// arguments.
#[derive(Clone, Debug)]
pub struct Golden {
    pub fixture: &'static str,
    pub attack: AttackKind,
    pub defence: Defence,
    pub justified: &'static [&'static str],
}

const fn g(
    fixture: &'static str,
    attack: AttackKind,
    defence: Defence,
    justified: &'static [&'static str],
) -> Golden {
    Golden {
        fixture,
        attack,
        defence,
        justified,
    }
}

use Defence::{Any, Kind};

const LOOP: &[&str] = &["[p :- not q]", "[q :- not p]"];
const NONE: &[&str] = &[];

pub const GOLDEN: &[Golden] = &[
    g("P1", StronglyUndercuts, Any, LOOP),
    g("P1", StronglyAttacks, Any, LOOP),
    g("P1", Attacks, Any, NONE),
    g("P1", Defeats, Any, NONE),
    g("P1", Undercuts, Any, NONE),
    g("P2", Defeats, Any, NONE),
    g("P2", Attacks, Any, NONE),
    g(
        "P2",
        StronglyAttacks,
        Kind(StronglyUndercuts),
        &["[q :- not p]"],
    ),
    g(
        "P2",
        StronglyAttacks,
        Kind(StronglyAttacks),
        &["[q :- not p]"],
    ),
    g("P2", Undercuts, Kind(StronglyUndercuts), &["[-p]"]),
    g("P2", Undercuts, Kind(Undercuts), &["[-p]"]),
    g("P2", Undercuts, Kind(Attacks), &["[-p]", "[q :- not p]"]),
    g(
        "P2",
        StronglyAttacks,
        Kind(Undercuts),
        &["[-p]", "[q :- not p]"],
    ),
    g("P3", StronglyAttacks, Any, NONE),
    g("P3", StronglyUndercuts, Kind(Undercuts), &["[-p]"]),
    g("P3", StronglyUndercuts, Kind(StronglyUndercuts), &["[-p]"]),
    g(
        "P3",
        Undercuts,
        Kind(Attacks),
        &["[-p]", "[q :- not r]", "[s :- not p]"],
    ),
    g(
        "P3",
        StronglyUndercuts,
        Kind(StronglyAttacks),
        &["[-p]", "[q :- not r]", "[s :- not p]"],
    ),
    g(
        "P3",
        StronglyUndercuts,
        Kind(Attacks),
        &["[-p]", "[q :- not r]", "[s :- not p]"],
    ),
    g("P4", Undercuts, Any, NONE),
    g("P4", Defeats, Any, NONE),
    g("P4", Attacks, Any, NONE),
    g("P4", StronglyUndercuts, Kind(StronglyUndercuts), LOOP),
    g("P4", StronglyUndercuts, Kind(StronglyAttacks), LOOP),
    g("P4", StronglyAttacks, Kind(StronglyUndercuts), LOOP),
    g("P4", StronglyAttacks, Kind(StronglyAttacks), LOOP),
    g(
        "P4",
        StronglyUndercuts,
        Kind(Undercuts),
        &["[p :- not q]", "[q :- not p]", "[r :- not p]"],
    ),
    g(
        "P4",
        StronglyUndercuts,
        Kind(Attacks),
        &["[p :- not q]", "[q :- not p]", "[r :- not p]"],
    ),
    g(
        "P4",
        StronglyAttacks,
        Kind(Undercuts),
        &["[p :- not q]", "[q :- not p]", "[r :- not p]"],
    ),
    g(
        "P4",
        StronglyAttacks,
        Kind(Attacks),
        &["[p :- not q]", "[q :- not p]", "[r :- not p]"],
    ),
    g("P5", Attacks, Any, NONE),
    g("P5", Defeats, Any, &["[-p]"]),
    g("P6", StronglyAttacks, Any, NONE),
    g("P6", Defeats, Any, NONE),
    g("P6", Attacks, Any, NONE),
    g("P6", Undercuts, Any, &["[p]", "[q]"]),
    g("P6", StronglyUndercuts, Any, &["[p]", "[q]"]),
];

impl Golden {
    pub fn defences(&self) -> Vec<AttackKind> {
        match self.defence {
            Kind(k) => vec![k],
            Any => AttackKind::ALL.to_vec(),
        }
    }

    pub fn text(&self) -> &'static str {
        NAMED
            .iter()
            .find(|(name, _)| *name == self.fixture)
            .map(|(_, text)| *text)
            .expect("golden entry names a fixture")
    }
}
