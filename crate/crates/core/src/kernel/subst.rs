use std::collections::BTreeMap;

use super::term::{Literal, Term, Var};

/// Variable bindings in triangular form: a bound term may mention other
/// bound variables. `apply` resolves bindings fully, so the substitution it
/// denotes is idempotent.
///
/// Clauses carry only a handful of variables, so bindings live in a flat
/// vector with linear lookup.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    bindings: Vec<(Var, Term)>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, Term)>) -> Self {
        let mut sub = Substitution::new();
        for (v, t) in pairs {
            sub.bind(v, t);
        }
        sub
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn get(&self, v: Var) -> Option<&Term> {
        self.bindings.iter().find(|(w, _)| *w == v).map(|(_, t)| t)
    }

    fn bind(&mut self, v: Var, t: Term) {
        debug_assert!(self.get(v).is_none());
        self.bindings.push((v, t));
    }

    /// Checkpoint for backtracking search.
    pub(crate) fn mark(&self) -> usize {
        self.bindings.len()
    }

    pub(crate) fn undo(&mut self, mark: usize) {
        self.bindings.truncate(mark);
    }

    fn walk<'a>(&'a self, mut t: &'a Term) -> &'a Term {
        while let Term::Var(v) = t {
            match self.get(*v) {
                Some(bound) => t = bound,
                None => break,
            }
        }
        t
    }

    pub fn apply(&self, t: &Term) -> Term {
        match t {
            Term::Var(v) => match self.get(*v) {
                Some(bound) => self.apply(bound),
                None => t.clone(),
            },
            Term::App(sym, args) => Term::App(*sym, args.iter().map(|a| self.apply(a)).collect()),
        }
    }

    pub fn apply_literal(&self, lit: &Literal) -> Literal {
        Literal {
            positive: lit.positive,
            predicate: lit.predicate,
            args: lit.args.iter().map(|a| self.apply(a)).collect(),
        }
    }

    /// Fully resolved bindings, one entry per bound variable.
    pub fn to_map(&self) -> BTreeMap<Var, Term> {
        self.bindings
            .iter()
            .map(|(v, _)| (*v, self.apply(&Term::Var(*v))))
            .collect()
    }

    fn occurs(&self, v: Var, t: &Term) -> bool {
        match self.walk(t) {
            Term::Var(w) => *w == v,
            Term::App(_, args) => args.iter().any(|a| self.occurs(v, a)),
        }
    }

    /// Extends the substitution to a unifier of `s` and `t`. On failure the
    /// substitution may hold partial bindings; callers roll back with
    /// [`Substitution::undo`] or discard it.
    pub fn unify(&mut self, s: &Term, t: &Term) -> bool {
        let s = self.walk(s).clone();
        let t = self.walk(t).clone();
        match (&s, &t) {
            (Term::Var(a), Term::Var(b)) if a == b => true,
            (Term::Var(a), other) | (other, Term::Var(a)) => {
                if self.occurs(*a, other) {
                    false
                } else {
                    self.bind(*a, other.clone());
                    true
                }
            }
            (Term::App(f, xs), Term::App(g, ys)) => {
                f == g
                    && xs.len() == ys.len()
                    && xs.iter().zip(ys).all(|(x, y)| self.unify(x, y))
            }
        }
    }

    pub fn unify_args(&mut self, xs: &[Term], ys: &[Term]) -> bool {
        xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| self.unify(x, y))
    }

    /// One-way matching: binds variables of `pattern` only. Variables of
    /// `instance` are treated as constants, so the two sides may share ids.
    pub fn match_term(&mut self, pattern: &Term, instance: &Term) -> bool {
        match pattern {
            Term::Var(v) => match self.get(*v) {
                Some(bound) => bound == instance,
                None => {
                    self.bind(*v, instance.clone());
                    true
                }
            },
            Term::App(f, xs) => match instance {
                Term::App(g, ys) if f == g && xs.len() == ys.len() => {
                    xs.iter().zip(ys).all(|(x, y)| self.match_term(x, y))
                }
                _ => false,
            },
        }
    }

    pub fn match_literal(&mut self, pattern: &Literal, instance: &Literal) -> bool {
        if pattern.positive != instance.positive || pattern.predicate != instance.predicate {
            return false;
        }
        let mark = self.mark();
        let ok = pattern
            .args
            .iter()
            .zip(&instance.args)
            .all(|(x, y)| self.match_term(x, y));
        if !ok {
            self.undo(mark);
        }
        ok
    }
}

/// Most general unifier of `s` and `t`, or `None` on a symbol clash or
/// occurs-check failure.
pub fn unify(s: &Term, t: &Term) -> Option<Substitution> {
    let mut sub = Substitution::new();
    sub.unify(s, t).then_some(sub)
}

pub fn apply_substitution(sub: &Substitution, literals: &[Literal]) -> Vec<Literal> {
    literals.iter().map(|l| sub.apply_literal(l)).collect()
}
