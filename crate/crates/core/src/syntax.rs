//! Propositional extended logic programs: literals, rules, programs, and the
//! textual format used to read and write them.
//!
//! ```text
//! % comment
//! p :- q, not -r.
//! -q.
//! ```

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::ParseError;

/// A propositional atom. Names match `[a-z][A-Za-z0-9_]*`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Option<Self> {
        let name = name.into();
        is_atom_name(&name).then_some(Atom(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

fn is_atom_name(s: &str) -> bool {
    let mut chars = s.chars();
    s != "not"
        && matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An atom or its explicit negation.
///
/// Ordered like the rendered text: `-p < -q < p < q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ObjectiveLiteral {
    pub atom: Atom,
    pub negated: bool,
}

impl Ord for ObjectiveLiteral {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (!self.negated, &self.atom).cmp(&(!other.negated, &other.atom))
    }
}

impl PartialOrd for ObjectiveLiteral {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl ObjectiveLiteral {
    pub fn positive(atom: Atom) -> Self {
        ObjectiveLiteral {
            atom,
            negated: false,
        }
    }

    pub fn negative(atom: Atom) -> Self {
        ObjectiveLiteral {
            atom,
            negated: true,
        }
    }

    /// Explicit negation; `complement(complement(l)) == l`.
    pub fn complement(&self) -> Self {
        ObjectiveLiteral {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }
}

pub fn complement(literal: &ObjectiveLiteral) -> ObjectiveLiteral {
    literal.complement()
}

impl fmt::Display for ObjectiveLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("-")?;
        }
        write!(f, "{}", self.atom)
    }
}

impl std::str::FromStr for ObjectiveLiteral {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser::new(s);
        parser.skip_trivia();
        let lit = parser.objective_literal()?;
        parser.skip_trivia();
        if let Some(c) = parser.peek() {
            return Err(parser.error(format!("unexpected `{c}` after literal")));
        }
        Ok(lit)
    }
}

impl Serialize for ObjectiveLiteral {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `not inner`. Default negation does not nest.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DefaultLiteral {
    pub inner: ObjectiveLiteral,
}

impl fmt::Display for DefaultLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not {}", self.inner)
    }
}

/// `head :- objective_body, not default_body.`
///
/// Bodies are sets, so two rules differing only in the order or repetition of
/// body literals are the same rule.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub head: ObjectiveLiteral,
    pub objective_body: BTreeSet<ObjectiveLiteral>,
    pub default_body: BTreeSet<ObjectiveLiteral>,
}

impl Rule {
    pub fn new(
        head: ObjectiveLiteral,
        objective_body: impl IntoIterator<Item = ObjectiveLiteral>,
        default_body: impl IntoIterator<Item = ObjectiveLiteral>,
    ) -> Self {
        Rule {
            head,
            objective_body: objective_body.into_iter().collect(),
            default_body: default_body.into_iter().collect(),
        }
    }

    pub fn fact(head: ObjectiveLiteral) -> Self {
        Rule::new(head, [], [])
    }

    pub fn is_fact(&self) -> bool {
        self.objective_body.is_empty() && self.default_body.is_empty()
    }

    pub fn default_literals(&self) -> impl Iterator<Item = DefaultLiteral> + '_ {
        self.default_body
            .iter()
            .map(|l| DefaultLiteral { inner: l.clone() })
    }

    fn literals(&self) -> impl Iterator<Item = &ObjectiveLiteral> {
        std::iter::once(&self.head)
            .chain(self.objective_body.iter())
            .chain(self.default_body.iter())
    }
}

/// Renders without the trailing period, e.g. `p :- q, not r`.
impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if self.is_fact() {
            return Ok(());
        }
        f.write_str(" :- ")?;
        let body = self
            .objective_body
            .iter()
            .map(ToString::to_string)
            .chain(self.default_literals().map(|d| d.to_string()));
        for (i, lit) in body.enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&lit)?;
        }
        Ok(())
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A finite program. Rules keep their source order; duplicates are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Program {
    rules: Vec<Rule>,
}

impl Program {
    pub fn new(rules: impl IntoIterator<Item = Rule>) -> Self {
        let mut seen = BTreeSet::new();
        let rules = rules
            .into_iter()
            .filter(|r| seen.insert(r.clone()))
            .collect();
        Program { rules }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter()
    }

    /// Both polarities of every atom that occurs anywhere in the program.
    pub fn herbrand_base(&self) -> BTreeSet<ObjectiveLiteral> {
        self.rules
            .iter()
            .flat_map(Rule::literals)
            .flat_map(|l| [l.clone(), l.complement()])
            .collect()
    }

    /// Guards every rule `L :- Body` with `not -L`.
    pub fn semi_normal(&self) -> Program {
        Program::new(self.rules.iter().map(|r| {
            let mut r = r.clone();
            r.default_body.insert(r.head.complement());
            r
        }))
    }

    /// The program with the rule at `index` removed.
    pub fn without_rule(&self, index: usize) -> Program {
        let mut rules = self.rules.clone();
        rules.remove(index);
        Program { rules }
    }
}

impl FromIterator<Rule> for Program {
    fn from_iter<T: IntoIterator<Item = Rule>>(iter: T) -> Self {
        Program::new(iter)
    }
}

/// Canonical text: one rule per line, each terminated by `.\n`.
impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}.")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Program {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_program(s)
    }
}

pub fn herbrand_base(program: &Program) -> BTreeSet<ObjectiveLiteral> {
    program.herbrand_base()
}

pub fn semi_normal(program: &Program) -> Program {
    program.semi_normal()
}

pub fn render(program: &Program) -> String {
    program.to_string()
}

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let mut parser = Parser::new(text);
    let mut rules = Vec::new();
    loop {
        parser.skip_trivia();
        if parser.peek().is_none() {
            break;
        }
        rules.push(parser.rule()?);
    }
    Ok(Program::new(rules))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c == '%' {
                while !matches!(self.peek(), None | Some('\n')) {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        self.skip_trivia();
        if self.src[self.pos..].starts_with(token) {
            for _ in token.chars() {
                self.bump();
            }
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{token}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found `{c}`")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn identifier(&mut self) -> Result<String, ParseError> {
        self.skip_trivia();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_lowercase() => {}
            _ => return Err(self.unexpected("an atom")),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        Ok(self.src[start..self.pos].to_owned())
    }

    fn objective_literal(&mut self) -> Result<ObjectiveLiteral, ParseError> {
        self.skip_trivia();
        let negated = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let (line, column) = (self.line, self.column);
        let name = self.identifier()?;
        if name == "not" {
            return Err(ParseError {
                line,
                column,
                message: "`not` is a keyword, not an atom".into(),
            });
        }
        Ok(ObjectiveLiteral {
            atom: Atom(name),
            negated,
        })
    }

    /// Either `not L` or `L`; returns `(literal, is_default)`.
    fn body_literal(&mut self) -> Result<(ObjectiveLiteral, bool), ParseError> {
        self.skip_trivia();
        let checkpoint = (self.pos, self.line, self.column);
        if self.peek() != Some('-') {
            let word = self.identifier()?;
            if word == "not" {
                self.skip_trivia();
                let (line, column) = (self.line, self.column);
                if self.src[self.pos..].starts_with("not")
                    && !self.src[self.pos + 3..]
                        .starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_')
                {
                    return Err(ParseError {
                        line,
                        column,
                        message: "default negation cannot be nested".into(),
                    });
                }
                return Ok((self.objective_literal()?, true));
            }
            (self.pos, self.line, self.column) = checkpoint;
        }
        Ok((self.objective_literal()?, false))
    }

    fn rule(&mut self) -> Result<Rule, ParseError> {
        self.skip_trivia();
        let (line, column) = (self.line, self.column);
        if self.src[self.pos..].starts_with("not")
            && !self.src[self.pos + 3..]
                .starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(ParseError {
                line,
                column,
                message: "default literal not allowed in rule head".into(),
            });
        }
        let head = self.objective_literal()?;
        let mut rule = Rule::fact(head);
        self.skip_trivia();
        if self.src[self.pos..].starts_with(":-") {
            self.expect(":-")?;
            loop {
                let (lit, is_default) = self.body_literal()?;
                if is_default {
                    rule.default_body.insert(lit);
                } else {
                    rule.objective_body.insert(lit);
                }
                self.skip_trivia();
                if self.peek() == Some(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(".")?;
        Ok(rule)
    }
}
