use std::collections::BTreeSet;

use super::Regexp;

/// Whether `word` is in L(`r`), by repeated derivatives and a final
/// nullability check. Symbols unknown to `r` simply never match.
pub fn matches(r: &Regexp, word: &[char]) -> bool {
    let mut current = normalize(r);
    for &c in word {
        current = derivative(&current, c);
        if current == Regexp::Null {
            return false;
        }
    }
    current.nullable()
}

pub(super) fn derivative(r: &Regexp, c: char) -> Regexp {
    match r {
        Regexp::Null | Regexp::Empty => Regexp::Null,
        Regexp::Singleton(s) => {
            if *s == c {
                Regexp::Empty
            } else {
                Regexp::Null
            }
        }
        Regexp::Union(l, rt) => mk_union(derivative(l, c), derivative(rt, c)),
        Regexp::Concat(l, rt) => {
            let left = mk_concat(derivative(l, c), (**rt).clone());
            if l.nullable() {
                mk_union(left, derivative(rt, c))
            } else {
                left
            }
        }
        Regexp::Star(inner) => mk_concat(derivative(inner, c), r.clone()),
    }
}

/// Rebuilds `r` with the normalizing constructors.
pub(crate) fn normalize(r: &Regexp) -> Regexp {
    match r {
        Regexp::Null | Regexp::Empty | Regexp::Singleton(_) => r.clone(),
        Regexp::Union(l, rt) => mk_union(normalize(l), normalize(rt)),
        Regexp::Concat(l, rt) => mk_concat(normalize(l), normalize(rt)),
        Regexp::Star(inner) => mk_star(normalize(inner)),
    }
}

// Unions are kept flattened, sorted and free of duplicates so the set of
// derivatives of any regexp stays finite.
fn mk_union(a: Regexp, b: Regexp) -> Regexp {
    let mut alts = BTreeSet::new();
    flatten_union(a, &mut alts);
    flatten_union(b, &mut alts);
    alts.remove(&Regexp::Null);
    Regexp::union_all(alts)
}

fn flatten_union(r: Regexp, acc: &mut BTreeSet<Regexp>) {
    match r {
        Regexp::Union(l, rt) => {
            flatten_union(*l, acc);
            flatten_union(*rt, acc);
        }
        other => {
            acc.insert(other);
        }
    }
}

fn mk_concat(a: Regexp, b: Regexp) -> Regexp {
    match (a, b) {
        (Regexp::Null, _) | (_, Regexp::Null) => Regexp::Null,
        (Regexp::Empty, x) | (x, Regexp::Empty) => x,
        // re-associate to the right so equal suffixes compare equal
        (Regexp::Concat(x, y), z) => mk_concat(*x, mk_concat(*y, z)),
        (x, y) => Regexp::concat(x, y),
    }
}

fn mk_star(a: Regexp) -> Regexp {
    match a {
        Regexp::Null | Regexp::Empty => Regexp::Empty,
        s @ Regexp::Star(_) => s,
        x => Regexp::star(x),
    }
}
