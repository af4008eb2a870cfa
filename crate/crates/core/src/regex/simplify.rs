use super::Regexp;

/// Rewrites `r` bottom-up with the rules
///
/// ```text
/// r U ~ -> r     ~ U r -> r
/// r ~   -> ~     ~ r   -> ~
/// r !   -> r     ! r   -> r
/// ~*    -> !     !*    -> !     (r*)* -> r*
/// ```
///
/// Children are normalized before their parent, and each rule's output is
/// either an already-normal child or a constant, so one pass reaches the
/// fixpoint. The result mentions `Null` only when it is exactly `Null`.
pub fn simplify(r: &Regexp) -> Regexp {
    match r {
        Regexp::Null | Regexp::Empty | Regexp::Singleton(_) => r.clone(),
        Regexp::Union(l, rt) => match (simplify(l), simplify(rt)) {
            (x, Regexp::Null) | (Regexp::Null, x) => x,
            (x, y) => Regexp::union(x, y),
        },
        Regexp::Concat(l, rt) => match (simplify(l), simplify(rt)) {
            (Regexp::Null, _) | (_, Regexp::Null) => Regexp::Null,
            (x, Regexp::Empty) | (Regexp::Empty, x) => x,
            (x, y) => Regexp::concat(x, y),
        },
        Regexp::Star(inner) => match simplify(inner) {
            Regexp::Null | Regexp::Empty => Regexp::Empty,
            starred @ Regexp::Star(_) => starred,
            x => Regexp::star(x),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: char) -> Regexp {
        Regexp::singleton(c)
    }

    #[test]
    fn drops_null_branch() {
        let r = Regexp::star(Regexp::concat(s('m'), Regexp::union(s('a'), Regexp::Null)));
        assert_eq!(simplify(&r), Regexp::star(Regexp::concat(s('m'), s('a'))));
    }

    #[test]
    fn singleton_is_already_simple() {
        assert_eq!(simplify(&s('a')), s('a'));
    }

    #[test]
    fn null_absorbs_concat() {
        let r = Regexp::concat(Regexp::Null, Regexp::star(s('b')));
        assert_eq!(simplify(&r), Regexp::Null);
    }

    #[test]
    fn star_rules() {
        assert_eq!(simplify(&Regexp::star(Regexp::Null)), Regexp::Empty);
        assert_eq!(simplify(&Regexp::star(Regexp::Empty)), Regexp::Empty);
        assert_eq!(
            simplify(&Regexp::star(Regexp::star(s('a')))),
            Regexp::star(s('a'))
        );
        // (~ U a*)* -> (a*)* -> a*
        let r = Regexp::star(Regexp::union(Regexp::Null, Regexp::star(s('a'))));
        assert_eq!(simplify(&r), Regexp::star(s('a')));
    }

    #[test]
    fn empty_words_vanish_from_concat() {
        let r = Regexp::concat(
            Regexp::concat(Regexp::Empty, s('a')),
            Regexp::star(Regexp::Null),
        );
        assert_eq!(simplify(&r), s('a'));
    }
}
