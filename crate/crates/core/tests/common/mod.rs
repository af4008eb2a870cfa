#![allow(dead_code)]

use gnfakit::random::random_nfa;
use gnfakit::{Language, Nfa, Regexp, Word};
use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SIGMA: [char; 3] = ['a', 'b', 'c'];

/// Regexps over {a, b, c} with occasional `!` and `~` leaves.
pub fn regexp() -> impl Strategy<Value = Regexp> {
    let leaf = prop_oneof![
        1 => Just(Regexp::Null),
        1 => Just(Regexp::Empty),
        6 => prop::sample::select(SIGMA.to_vec()).prop_map(Regexp::Singleton),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Regexp::union(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Regexp::concat(a, b)),
            inner.prop_map(Regexp::star),
        ]
    })
}

/// Random machines with at most 5 states and 10 rules, keyed by seed.
pub fn machine() -> impl Strategy<Value = Nfa> {
    any::<u64>().prop_map(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_nfa(&mut rng, 5, &SIGMA, 10)
    })
}

/// Oracle: every word over `sigma` up to `maxlen` that `accepts` accepts.
pub fn filter_words(sigma: &[char], maxlen: usize, accepts: impl Fn(&[char]) -> bool) -> Language {
    Word::all_up_to(sigma, maxlen)
        .into_iter()
        .filter(|w| accepts(w))
        .collect()
}
