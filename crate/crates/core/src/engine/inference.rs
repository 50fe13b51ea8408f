use crate::kernel::{
    normalize_vars_in_place, shift_vars, Clause, ClauseId, Inference, Literal, Signature,
    SymbolId, Substitution, Term,
};

/// Hands out consecutive ids; a clause's age is its id.
#[derive(Clone, Debug, Default)]
pub struct Births {
    next: u64,
}

impl Births {
    pub fn starting_at(next: u64) -> Self {
        Births { next }
    }

    pub fn peek(&self) -> u64 {
        self.next
    }

    fn mint(
        &mut self,
        literals: Vec<Literal>,
        inference: Inference,
        parents: &[&Clause],
    ) -> Clause {
        let n = self.next;
        self.next += 1;
        Clause::derived(ClauseId(n), n, literals, inference, parents)
            .expect("inferences always have parents")
    }
}

/// Applies `sub`, drops repeated literals (first occurrence wins) and
/// renumbers variables from 0.
fn finish<'a>(sub: &Substitution, literals: impl Iterator<Item = &'a Literal>) -> Vec<Literal> {
    let mut out: Vec<Literal> = Vec::new();
    for l in literals {
        let l = sub.apply_literal(l);
        if !out.contains(&l) {
            out.push(l);
        }
    }
    normalize_vars_in_place(&mut out);
    out
}

/// False when the two argument lists clash on a function symbol at some
/// position where neither side has a variable. Variables are not tracked,
/// so `true` does not imply unifiability.
fn may_unify(xs: &[Term], ys: &[Term]) -> bool {
    xs.iter().zip(ys).all(|(x, y)| match (x, y) {
        (Term::App(f, a), Term::App(g, b)) => f == g && may_unify(a, b),
        _ => true,
    })
}

fn complementary(l1: &Literal, l2: &Literal) -> bool {
    l1.positive != l2.positive && l1.predicate == l2.predicate && may_unify(&l1.args, &l2.args)
}

/// All binary resolvents of `c1` and `c2`. `c2` is renamed apart first, so
/// the two may be the same clause.
pub fn binary_resolution(c1: &Clause, c2: &Clause, births: &mut Births) -> Vec<Clause> {
    let mut out = Vec::new();
    if !has_candidate_pair(c1.literals(), c2.literals()) {
        return out;
    }
    let right = shift_vars(c2.literals(), c1.var_bound());
    resolve_renamed(c1, c1.literals(), c2, &right, births, &mut out);
    out
}

/// Like [`binary_resolution`], but `shifted_given` is `given` with its
/// variables already moved above every variable of any partner. The given
/// clause is renamed once per activation instead of once per partner.
pub(crate) fn resolve_with_shifted(
    given: &Clause,
    shifted_given: &[Literal],
    partner: &Clause,
    births: &mut Births,
    out: &mut Vec<Clause>,
) {
    if has_candidate_pair(shifted_given, partner.literals()) {
        resolve_renamed(given, shifted_given, partner, partner.literals(), births, out);
    }
}

fn has_candidate_pair(left: &[Literal], right: &[Literal]) -> bool {
    left.iter().any(|l1| right.iter().any(|l2| complementary(l1, l2)))
}

/// Children do not depend on which side was renamed: `finish` renumbers
/// variables by first occurrence.
fn resolve_renamed(
    c1: &Clause,
    left: &[Literal],
    c2: &Clause,
    right: &[Literal],
    births: &mut Births,
    out: &mut Vec<Clause>,
) {
    for (i, l1) in left.iter().enumerate() {
        for (j, l2) in right.iter().enumerate() {
            if !complementary(l1, l2) {
                continue;
            }
            if let Some(lits) = resolve_pair(left, i, right, j, l1, l2) {
                out.push(births.mint(lits, Inference::Resolution, &[c1, c2]));
            }
        }
    }
}

/// Resolvent on literal `i` of `left` and literal `j` of `right`, which must
/// be variable-disjoint.
pub(crate) fn resolve_pair(
    left: &[Literal],
    i: usize,
    right: &[Literal],
    j: usize,
    l1: &Literal,
    l2: &Literal,
) -> Option<Vec<Literal>> {
    if l1.positive == l2.positive || l1.predicate != l2.predicate {
        return None;
    }
    let mut sub = Substitution::new();
    if !sub.unify_args(&l1.args, &l2.args) {
        return None;
    }
    let rest = left
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .chain(right.iter().enumerate().filter(|&(k, _)| k != j))
        .map(|(_, l)| l);
    Some(finish(&sub, rest))
}

/// Factors from every unordered pair of unifiable same-sign literals.
pub fn factoring(c: &Clause, births: &mut Births) -> Vec<Clause> {
    let lits = c.literals();
    let mut out = Vec::new();
    for i in 0..lits.len() {
        for j in i + 1..lits.len() {
            let (a, b) = (&lits[i], &lits[j]);
            if a.positive != b.positive || a.predicate != b.predicate {
                continue;
            }
            let mut sub = Substitution::new();
            if sub.unify_args(&a.args, &b.args) {
                let factor = finish(&sub, lits.iter());
                out.push(births.mint(factor, Inference::Factoring, &[c]));
            }
        }
    }
    out
}

/// `L | ~L` on identical atoms, or a positive `t = t`.
pub fn is_tautology(c: &Clause, sig: &Signature) -> bool {
    literals_are_tautology(c.literals(), sig.equality_id())
}

pub(crate) fn literals_are_tautology(lits: &[Literal], eq: Option<SymbolId>) -> bool {
    lits.iter().enumerate().any(|(i, l)| {
        (l.positive && Some(l.predicate) == eq && l.args.len() == 2 && l.args[0] == l.args[1])
            || lits[i + 1..]
                .iter()
                .any(|m| m.positive != l.positive && m.same_atom(l))
    })
}
