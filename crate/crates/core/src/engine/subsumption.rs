use crate::kernel::{Literal, Substitution};

/// `general` subsumes `specific` when one substitution maps the literals of
/// `general` injectively onto literals of `specific` (multiset semantics).
pub fn subsumes(general: &[Literal], specific: &[Literal]) -> bool {
    if general.len() > specific.len() {
        return false;
    }
    let mut used = vec![false; specific.len()];
    let mut sub = Substitution::new();
    extend(general, specific, &mut used, &mut sub)
}

fn extend(rest: &[Literal], specific: &[Literal], used: &mut [bool], sub: &mut Substitution) -> bool {
    let Some((first, rest)) = rest.split_first() else {
        return true;
    };
    for (k, target) in specific.iter().enumerate() {
        if used[k] {
            continue;
        }
        let mark = sub.mark();
        if sub.match_literal(first, target) {
            used[k] = true;
            if extend(rest, specific, used, sub) {
                return true;
            }
            used[k] = false;
            sub.undo(mark);
        }
    }
    false
}
