//! Argumentation semantics for extended logic programs.
//!
//! A program ([`syntax::Program`]) induces a set of minimal arguments
//! ([`arguments`]), six notions of attack between them ([`attacks`]), and for
//! each pair of notions a least-fixpoint set of justified arguments
//! ([`semantics`]). The `u/a` semantics coincides with the paraconsistent
//! well-founded model computed in [`wfsx`], and every semantics has a
//! sound and complete dialogue-game prover ([`dialectic`]).

pub mod arguments;
pub mod attacks;
pub mod dialectic;
pub mod error;
pub mod fixtures;
pub mod generator;
pub mod properties;
pub mod semantics;
pub mod suite;
pub mod syntax;
pub mod wfsx;

pub use arguments::{minimal_arguments, Argument};
pub use attacks::{AttackKind, AttackRelation, Framework};
pub use error::{Contradiction, Error, ParseError, Result};
pub use semantics::{ArgumentLabelling, ArgumentSet, Consequences, JustificationConfig};
pub use syntax::{parse_program, ObjectiveLiteral, Program, Rule};
