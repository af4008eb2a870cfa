//! Seeded random regexps and machines for differential testing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::nfa::{validate_nfa, Nfa, RawNfa, EMP_TOKEN};
use crate::regex::Regexp;

/// A random regexp tree of depth at most `depth` over `sigma`.
///
/// Leaves are mostly singletons, with occasional empty-word and null
/// regexps so simplification has something to do.
pub fn random_regexp<R: Rng>(rng: &mut R, depth: usize, sigma: &[char]) -> Regexp {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Regexp::Null,
            1 => Regexp::Empty,
            _ => Regexp::Singleton(*sigma.choose(rng).expect("nonempty alphabet")),
        };
    }
    match rng.gen_range(0..10) {
        0..=2 => Regexp::union(
            random_regexp(rng, depth - 1, sigma),
            random_regexp(rng, depth - 1, sigma),
        ),
        3..=6 => Regexp::concat(
            random_regexp(rng, depth - 1, sigma),
            random_regexp(rng, depth - 1, sigma),
        ),
        _ => Regexp::star(random_regexp(rng, depth - 1, sigma)),
    }
}

const STATE_POOL: [&str; 8] = ["S", "A", "B", "C", "D", "F", "P", "Q"];

/// A random valid machine with 1..=`max_states` states, an alphabet drawn
/// from `sigma` (at least one symbol), and 0..=`max_rules` rules of which
/// roughly a quarter are empty transitions.
///
/// State names come from a pool that overlaps the fresh-name scheme, so
/// fresh-state allocation is exercised against collisions.
pub fn random_nfa<R: Rng>(rng: &mut R, max_states: usize, sigma: &[char], max_rules: usize) -> Nfa {
    let n = rng.gen_range(1..=max_states.min(STATE_POOL.len()));
    let states: Vec<String> = STATE_POOL
        .choose_multiple(rng, n)
        .map(|s| s.to_string())
        .collect();

    let k = rng.gen_range(1..=sigma.len());
    let mut symbols: Vec<char> = sigma.choose_multiple(rng, k).copied().collect();
    symbols.sort_unstable();

    let start = states.choose(rng).expect("nonempty").clone();
    let finals: Vec<String> = states
        .iter()
        .filter(|_| rng.gen_bool(0.4))
        .cloned()
        .collect();

    let rule_count = rng.gen_range(0..=max_rules);
    let rules = (0..rule_count)
        .map(|_| {
            let from = states.choose(rng).expect("nonempty").clone();
            let to = states.choose(rng).expect("nonempty").clone();
            let label = if rng.gen_bool(0.25) {
                EMP_TOKEN.to_string()
            } else {
                symbols.choose(rng).expect("nonempty").to_string()
            };
            (from, label, to)
        })
        .collect();

    validate_nfa(&RawNfa {
        states,
        sigma: symbols.iter().map(|c| c.to_string()).collect(),
        start,
        finals,
        rules,
    })
    .expect("generated machines are valid by construction")
}
