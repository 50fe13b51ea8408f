use std::fmt;

use super::signature::{Signature, SymbolId};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(Var),
    App(SymbolId, Vec<Term>),
}

impl Term {
    pub fn var(v: u32) -> Self {
        Term::Var(Var(v))
    }

    pub fn constant(sym: SymbolId) -> Self {
        Term::App(sym, Vec::new())
    }

    /// Number of symbol occurrences; variables count 1.
    pub fn weight(&self) -> u64 {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::weight).sum::<u64>(),
        }
    }

    pub fn occurs(&self, v: Var) -> bool {
        match self {
            Term::Var(w) => *w == v,
            Term::App(_, args) => args.iter().any(|a| a.occurs(v)),
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(_, args) => args.iter().all(Term::is_ground),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    pub fn for_each_var(&self, f: &mut impl FnMut(Var)) {
        match self {
            Term::Var(v) => f(*v),
            Term::App(_, args) => args.iter().for_each(|a| a.for_each_var(f)),
        }
    }

    pub fn for_each_symbol(&self, f: &mut impl FnMut(SymbolId)) {
        if let Term::App(sym, args) = self {
            f(*sym);
            args.iter().for_each(|a| a.for_each_symbol(f));
        }
    }

    /// Rewrites every variable through `f`.
    pub fn map_vars(&self, f: &mut impl FnMut(Var) -> Var) -> Term {
        match self {
            Term::Var(v) => Term::Var(f(*v)),
            Term::App(sym, args) => Term::App(*sym, args.iter().map(|a| a.map_vars(f)).collect()),
        }
    }

    pub fn rename_vars(&mut self, f: &mut impl FnMut(Var) -> Var) {
        match self {
            Term::Var(v) => *v = f(*v),
            Term::App(_, args) => args.iter_mut().for_each(|a| a.rename_vars(f)),
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        TermDisplay { term: self, sig }
    }
}

struct TermDisplay<'a> {
    term: &'a Term,
    sig: &'a Signature,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.term {
            Term::Var(v) => write!(f, "X{}", v.0),
            Term::App(sym, args) => {
                f.write_str(self.sig.name(*sym))?;
                write_args(f, args, self.sig)
            }
        }
    }
}

fn write_args(f: &mut fmt::Formatter<'_>, args: &[Term], sig: &Signature) -> fmt::Result {
    if args.is_empty() {
        return Ok(());
    }
    f.write_str("(")?;
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", a.display(sig))?;
    }
    f.write_str(")")
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub positive: bool,
    pub predicate: SymbolId,
    pub args: Vec<Term>,
}

impl Literal {
    pub fn new(positive: bool, predicate: SymbolId, args: Vec<Term>) -> Self {
        Literal {
            positive,
            predicate,
            args,
        }
    }

    pub fn weight(&self) -> u64 {
        1 + self.args.iter().map(Term::weight).sum::<u64>()
    }

    pub fn negated(&self) -> Literal {
        Literal {
            positive: !self.positive,
            ..self.clone()
        }
    }

    /// Same predicate and arguments, polarity ignored.
    pub fn same_atom(&self, other: &Literal) -> bool {
        self.predicate == other.predicate && self.args == other.args
    }

    pub fn for_each_var(&self, f: &mut impl FnMut(Var)) {
        self.args.iter().for_each(|a| a.for_each_var(f));
    }

    pub fn map_vars(&self, f: &mut impl FnMut(Var) -> Var) -> Literal {
        Literal {
            positive: self.positive,
            predicate: self.predicate,
            args: self.args.iter().map(|a| a.map_vars(f)).collect(),
        }
    }

    /// In-place form of [`Literal::map_vars`].
    pub fn rename_vars(&mut self, f: &mut impl FnMut(Var) -> Var) {
        self.args.iter_mut().for_each(|a| a.rename_vars(f));
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        LiteralDisplay { lit: self, sig }
    }
}

struct LiteralDisplay<'a> {
    lit: &'a Literal,
    sig: &'a Signature,
}

impl fmt::Display for LiteralDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lit = self.lit;
        if self.sig.is_equality(lit.predicate) && lit.args.len() == 2 {
            let op = if lit.positive { "=" } else { "!=" };
            return write!(
                f,
                "{} {} {}",
                lit.args[0].display(self.sig),
                op,
                lit.args[1].display(self.sig)
            );
        }
        if !lit.positive {
            f.write_str("~")?;
        }
        f.write_str(self.sig.name(lit.predicate))?;
        write_args(f, &lit.args, self.sig)
    }
}

/// Total symbol count of a literal list. Every predicate, function, constant
/// and variable occurrence counts 1.
pub fn weight(literals: &[Literal]) -> u64 {
    literals.iter().map(Literal::weight).sum()
}

/// Renders a disjunction; the empty clause prints as `$false`.
pub fn display_literals(literals: &[Literal], sig: &Signature) -> String {
    if literals.is_empty() {
        return "$false".to_string();
    }
    literals
        .iter()
        .map(|l| l.display(sig).to_string())
        .collect::<Vec<_>>()
        .join(" | ")
}
