mod common;

use common::{filter_words, regexp, SIGMA};
use gnfakit::regex::{enumerate_regexp_language, gen_word, parse_regexp, render_regexp, simplify};
use gnfakit::Regexp;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn render_then_parse_is_identity(r in regexp()) {
        let text = render_regexp(&r);
        prop_assert_eq!(parse_regexp(&text, Some(&SIGMA)).unwrap(), r);
    }

    #[test]
    fn simplify_preserves_language(r in regexp()) {
        let s = simplify(&r);
        prop_assert_eq!(
            filter_words(&SIGMA, 5, |w| s.matches(w)),
            filter_words(&SIGMA, 5, |w| r.matches(w))
        );
        prop_assert!(s.size() <= r.size());
    }

    #[test]
    fn simplify_is_idempotent(r in regexp()) {
        let once = simplify(&r);
        prop_assert_eq!(simplify(&once), once);
    }

    #[test]
    fn simplified_regexps_hide_null(r in regexp()) {
        let s = simplify(&r);
        if s != Regexp::Null {
            prop_assert!(!render_regexp(&s).contains('~'), "{}", s);
        }
    }

    #[test]
    fn enumeration_matches_membership(r in regexp()) {
        prop_assert_eq!(
            enumerate_regexp_language(&r, 5, &SIGMA),
            filter_words(&SIGMA, 5, |w| r.matches(w))
        );
    }

    #[test]
    fn enumeration_is_monotone_in_length(r in regexp(), n in 0usize..5) {
        let short = enumerate_regexp_language(&r, n, &SIGMA);
        let long = enumerate_regexp_language(&r, n + 1, &SIGMA);
        prop_assert!(short.is_subset(&long));
        let truncated: std::collections::BTreeSet<_> =
            long.into_iter().filter(|w| w.len() <= n).collect();
        prop_assert_eq!(truncated, short);
    }

    #[test]
    fn generated_words_belong(r in regexp(), seed in any::<u64>()) {
        match gen_word(&r, seed, 3) {
            Ok(w) => prop_assert!(r.matches(&w), "{} not in {}", w, r),
            Err(_) => prop_assert!(filter_words(&SIGMA, 6, |w| r.matches(w)).is_empty()),
        }
    }

    #[test]
    fn generation_is_deterministic(r in regexp(), seed in any::<u64>()) {
        prop_assert_eq!(gen_word(&r, seed, 4), gen_word(&r, seed, 4));
    }
}
