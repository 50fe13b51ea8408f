//! First-order syntax: symbols, terms, literals, clauses, substitutions and
//! unification with occurs-check.

mod clause;
mod signature;
mod subst;
mod term;

pub(crate) use clause::normalize_vars_in_place;
pub use clause::{
    normalize_vars, rename_apart, IdHasher, IdMap, same_literal_multiset, shift_vars, var_bound, Clause, ClauseId,
    Inference, Origin,
};
pub use signature::{Signature, SignatureError, SymbolId, SymbolInfo, SymbolKind, EQUALITY};
pub use subst::{apply_substitution, unify, Substitution};
pub use term::{display_literals, weight, Literal, Term, Var};
