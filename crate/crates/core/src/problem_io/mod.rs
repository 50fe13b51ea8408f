//! Problem input in a TPTP-CNF subset and SZS-style result output.
//!
//! Input grammar, one statement per `.`:
//!
//! ```text
//! cnf(<name>, <role>, <lit> | <lit> | ...).
//! theory(<name>, ...).
//! ```
//!
//! Roles are `axiom`, `theory_axiom` and `negated_conjecture`. Symbols start
//! lowercase, variables uppercase, `~` negates, `=` and `!=` build equality
//! literals and `%` starts a line comment.

mod output;
mod parser;

use std::fmt::Write;
use std::path::Path;

use thiserror::Error;

use crate::kernel::{display_literals, Literal, Signature, SignatureError};
use crate::metrics::AxiomKind;

pub use output::{emit_result, ProverResult, Statistics, Status};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("{line}:{column}: parse error: expected {expected}, found {found}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },
    #[error("{line}:{column}: arity error: {source}")]
    Arity {
        line: usize,
        column: usize,
        source: SignatureError,
    },
    #[error("problem contains no clauses")]
    Empty,
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl ProblemError {
    fn parse(line: usize, column: usize, expected: &str, found: &str) -> Self {
        ProblemError::Parse {
            line,
            column,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    fn arity(line: usize, column: usize, source: SignatureError) -> Self {
        ProblemError::Arity {
            line,
            column,
            source,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Axiom,
    TheoryAxiom,
    NegatedConjecture,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Axiom => "axiom",
            Role::TheoryAxiom => "theory_axiom",
            Role::NegatedConjecture => "negated_conjecture",
        }
    }

    pub fn axiom_kind(self) -> AxiomKind {
        match self {
            Role::TheoryAxiom => AxiomKind::TheoryAxiom,
            Role::Axiom | Role::NegatedConjecture => AxiomKind::InputAxiom,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputClause {
    pub name: String,
    pub role: Role,
    pub literals: Vec<Literal>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub name: String,
    pub signature: Signature,
    pub clauses: Vec<InputClause>,
    /// Theories requested by `theory(...)` statements, in file order.
    pub theories: Vec<String>,
}

impl ProblemSpec {
    /// Prints the problem back in input syntax. Variables are renamed to
    /// `X0, X1, ...`.
    pub fn to_tptp(&self) -> String {
        let mut out = String::new();
        if !self.theories.is_empty() {
            let _ = writeln!(out, "theory({}).", self.theories.join(", "));
        }
        for c in &self.clauses {
            let _ = writeln!(
                out,
                "cnf({}, {}, {}).",
                c.name,
                c.role.name(),
                display_literals(&c.literals, &self.signature)
            );
        }
        out
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemSpec, ProblemError> {
    parse_named_problem("problem", text)
}

pub fn parse_named_problem(name: &str, text: &str) -> Result<ProblemSpec, ProblemError> {
    let mut sig = Signature::new();
    parser::Parser::new(text, &mut sig)?.problem(name)
}

/// Parses `cnf` statements against an existing signature, extending it.
pub fn parse_clauses_into(text: &str, sig: &mut Signature) -> Result<Vec<InputClause>, ProblemError> {
    parser::Parser::new(text, sig)?.clauses()
}

/// Reads and parses a problem file; the problem is named after the file stem.
pub fn load_problem(path: &Path) -> Result<ProblemSpec, ProblemError> {
    let text = std::fs::read_to_string(path).map_err(|e| ProblemError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "problem".to_string());
    parse_named_problem(&name, &text)
}
