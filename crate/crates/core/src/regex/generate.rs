use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::Regexp;
use crate::word::Word;

pub const DEFAULT_MAX_STAR_REPS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("empty language: {0} has no words")]
    EmptyLanguage(String),
}

/// Nondeterministically picks a word of L(`r`).
///
/// Union branches are chosen uniformly, except that a branch denoting the
/// empty language is never taken. Each Kleene star repeats its body a number
/// of times drawn uniformly from `0..=max_star_reps`. The same seed always
/// yields the same word.
pub fn gen_word(r: &Regexp, seed: u64, max_star_reps: usize) -> Result<Word, GenError> {
    if r.is_empty_language() {
        return Err(GenError::EmptyLanguage(r.to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Word::empty();
    generate(r, &mut rng, max_star_reps, &mut out);
    Ok(out)
}

// Precondition: `r` has a nonempty language.
fn generate<R: Rng>(r: &Regexp, rng: &mut R, reps: usize, out: &mut Word) {
    match r {
        Regexp::Null => unreachable!("generation never descends into an empty language"),
        Regexp::Empty => {}
        Regexp::Singleton(c) => out.push(*c),
        Regexp::Union(l, rt) => {
            let branch = match (l.is_empty_language(), rt.is_empty_language()) {
                (true, _) => rt,
                (_, true) => l,
                _ => {
                    if rng.gen_bool(0.5) {
                        l
                    } else {
                        rt
                    }
                }
            };
            generate(branch, rng, reps, out);
        }
        Regexp::Concat(l, rt) => {
            generate(l, rng, reps, out);
            generate(rt, rng, reps, out);
        }
        Regexp::Star(inner) => {
            let n = rng.gen_range(0..=reps);
            if inner.is_empty_language() {
                return;
            }
            for _ in 0..n {
                generate(inner, rng, reps, out);
            }
        }
    }
}
