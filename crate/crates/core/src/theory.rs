//! Bundled theory axiomatizations. Injected clauses enter saturation as
//! theory axioms, which is what the theory distance feature counts.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::kernel::{Clause, ClauseId, Literal, Signature, SymbolId, SymbolKind, Term, Var};
use crate::metrics::AxiomKind;
use crate::problem_io::{parse_clauses_into, ProblemError, ProblemSpec};

pub const ARRAYS: &str = "arrays";
pub const INT_PARTIAL: &str = "int_partial";
pub const EQUALITY: &str = "equality";

const ARRAY_AXIOMS: &str = "
cnf(read_over_write_same, theory_axiom, read(write(A, I, V), I) = V).
cnf(read_over_write_other, theory_axiom, I = J | read(write(A, I, V), J) = read(A, J)).
";

// A partial axiomatization only; nothing here evaluates numerals.
const INT_PARTIAL_AXIOMS: &str = "
cnf(plus_zero, theory_axiom, plus(X, zero) = X).
cnf(plus_comm, theory_axiom, plus(X, Y) = plus(Y, X)).
cnf(plus_assoc, theory_axiom, plus(plus(X, Y), Z) = plus(X, plus(Y, Z))).
cnf(plus_succ, theory_axiom, plus(X, succ(Y)) = succ(plus(X, Y))).
cnf(times_zero, theory_axiom, times(X, zero) = zero).
cnf(times_distrib, theory_axiom, times(X, plus(Y, Z)) = plus(times(X, Y), times(X, Z))).
cnf(succ_not_zero, theory_axiom, succ(X) != zero).
cnf(succ_injective, theory_axiom, succ(X) != succ(Y) | X = Y).
cnf(less_succ, theory_axiom, less(X, succ(X))).
cnf(less_irreflexive, theory_axiom, ~less(X, X)).
cnf(less_transitive, theory_axiom, ~less(X, Y) | ~less(Y, Z) | less(X, Z)).
cnf(less_total, theory_axiom, less(X, Y) | X = Y | less(Y, X)).
";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoryTemplate {
    /// Fixed clauses in input syntax over the theory's reserved symbols.
    Clauses(String),
    /// Reflexivity, symmetry, transitivity and congruence clauses for the
    /// symbols of the problem at hand.
    Equality,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("unknown theory `{0}`")]
    UnknownTheory(String),
    #[error("theory `{theory}` does not fit the problem signature: {source}")]
    Template { theory: String, source: ProblemError },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoryCatalog {
    theories: BTreeMap<String, TheoryTemplate>,
}

impl Default for TheoryCatalog {
    fn default() -> Self {
        Self::standard()
    }
}

impl TheoryCatalog {
    pub fn empty() -> Self {
        TheoryCatalog {
            theories: BTreeMap::new(),
        }
    }

    /// `arrays`, `int_partial` and `equality`.
    pub fn standard() -> Self {
        let mut cat = Self::empty();
        cat.insert(ARRAYS, TheoryTemplate::Clauses(ARRAY_AXIOMS.to_string()));
        cat.insert(INT_PARTIAL, TheoryTemplate::Clauses(INT_PARTIAL_AXIOMS.to_string()));
        cat.insert(EQUALITY, TheoryTemplate::Equality);
        cat
    }

    pub fn insert(&mut self, name: &str, template: TheoryTemplate) {
        self.theories.insert(name.to_string(), template);
    }

    pub fn get(&self, name: &str) -> Option<&TheoryTemplate> {
        self.theories.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.theories.keys().map(String::as_str)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct InjectOptions {
    /// Mark generated equality axioms as theory axioms.
    pub equality_counts_as_theory: bool,
}

impl Default for InjectOptions {
    fn default() -> Self {
        InjectOptions {
            equality_counts_as_theory: true,
        }
    }
}

/// Input clauses ready for saturation: ids and ages follow list order.
#[derive(Clone, Debug)]
pub struct InjectedProblem {
    pub name: String,
    pub signature: Signature,
    pub clauses: Vec<Clause>,
    /// Clause names, parallel to `clauses`.
    pub clause_names: Vec<String>,
    /// Number of clauses added from the catalog.
    pub injected: usize,
}

impl InjectedProblem {
    /// Input clauses exactly as parsed, with no theory added.
    pub fn plain(p: &ProblemSpec) -> Self {
        let mut out = InjectedProblem {
            name: p.name.clone(),
            signature: p.signature.clone(),
            clauses: Vec::new(),
            clause_names: Vec::new(),
            injected: 0,
        };
        for c in &p.clauses {
            out.push(c.name.clone(), c.literals.clone(), c.role.axiom_kind());
        }
        out
    }

    fn push(&mut self, name: String, literals: Vec<Literal>, kind: AxiomKind) {
        let n = self.clauses.len() as u64;
        self.clauses.push(Clause::axiom(ClauseId(n), n, literals, kind));
        self.clause_names.push(name);
    }
}

/// Appends the clauses of every theory the problem requests. Problem clauses
/// keep their file order and come first. Equality axioms are generated last,
/// so their congruence clauses also cover symbols brought in by the other
/// requested theories.
pub fn inject_theory_axioms(
    p: &ProblemSpec,
    catalog: &TheoryCatalog,
    options: InjectOptions,
) -> Result<InjectedProblem, TheoryError> {
    let mut requested: Vec<&str> = Vec::new();
    for name in &p.theories {
        if catalog.get(name).is_none() {
            return Err(TheoryError::UnknownTheory(name.clone()));
        }
        if !requested.contains(&name.as_str()) {
            requested.push(name);
        }
    }
    let mut out = InjectedProblem::plain(p);
    let mut wants_equality = false;
    for name in requested {
        match catalog.get(name).expect("checked above") {
            TheoryTemplate::Clauses(text) => {
                let clauses = parse_clauses_into(text, &mut out.signature).map_err(|source| {
                    TheoryError::Template {
                        theory: name.to_string(),
                        source,
                    }
                })?;
                for c in clauses {
                    out.push(c.name, c.literals, AxiomKind::TheoryAxiom);
                    out.injected += 1;
                }
            }
            TheoryTemplate::Equality => wants_equality = true,
        }
    }
    if wants_equality {
        let kind = if options.equality_counts_as_theory {
            AxiomKind::TheoryAxiom
        } else {
            AxiomKind::InputAxiom
        };
        let symbols = occurring_symbols(&out.clauses);
        for (name, lits) in equality_axioms(&mut out.signature, &symbols) {
            out.push(name, lits, kind);
            out.injected += 1;
        }
    }
    Ok(out)
}

fn occurring_symbols(clauses: &[Clause]) -> BTreeSet<SymbolId> {
    let mut syms = BTreeSet::new();
    for c in clauses {
        for l in c.literals() {
            syms.insert(l.predicate);
            for a in &l.args {
                a.for_each_symbol(&mut |s| {
                    syms.insert(s);
                });
            }
        }
    }
    syms
}

fn equality_axioms(sig: &mut Signature, symbols: &BTreeSet<SymbolId>) -> Vec<(String, Vec<Literal>)> {
    let eq = sig.equality();
    let x = || Term::Var(Var(0));
    let y = || Term::Var(Var(1));
    let z = || Term::Var(Var(2));
    let lit = |pos: bool, l: Term, r: Term| Literal::new(pos, eq, vec![l, r]);

    let mut out = vec![
        ("eq_reflexivity".to_string(), vec![lit(true, x(), x())]),
        ("eq_symmetry".to_string(), vec![lit(false, x(), y()), lit(true, y(), x())]),
        (
            "eq_transitivity".to_string(),
            vec![lit(false, x(), y()), lit(false, y(), z()), lit(true, x(), z())],
        ),
    ];
    for &sym in symbols {
        if sym == eq {
            continue;
        }
        let info = sig.info(sym).clone();
        for pos in 0..info.arity {
            // X0, X1 are the swapped pair; the other positions get X2, X3, ...
            let args = |swapped: u32| -> Vec<Term> {
                (0..info.arity)
                    .map(|i| {
                        if i == pos {
                            Term::Var(Var(swapped))
                        } else {
                            Term::Var(Var(2 + i as u32))
                        }
                    })
                    .collect()
            };
            let lits = match info.kind {
                SymbolKind::Function => vec![
                    lit(false, x(), y()),
                    lit(true, Term::App(sym, args(0)), Term::App(sym, args(1))),
                ],
                SymbolKind::Predicate => vec![
                    lit(false, x(), y()),
                    Literal::new(false, sym, args(0)),
                    Literal::new(true, sym, args(1)),
                ],
            };
            out.push((format!("eq_congruence_{}_{}", info.name, pos + 1), lits));
        }
    }
    out
}
