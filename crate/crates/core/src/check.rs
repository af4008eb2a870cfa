//! Bounded language equivalence between the conversion routes.
//!
//! Every comparison enumerates both languages up to a fixed word length
//! and reports the shortest word on which they differ.

use std::collections::BTreeSet;
use std::fmt;

use crate::gnfa::{enumerate_gnfa_language, Gnfa};
use crate::n2r::{ndfa_to_regexp, r_equations};
use crate::nfa::{enumerate_nfa_language, Nfa};
use crate::r2n::regexp_to_ndfa_over;
use crate::regex::{enumerate_regexp_language, Language, Regexp};
use crate::trace::Trace;
use crate::word::Word;

/// Shortest (then lexicographically first) word in exactly one of `a`, `b`.
pub fn shortest_difference(a: &Language, b: &Language) -> Option<Word> {
    a.symmetric_difference(b).min().cloned()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    /// What was compared, e.g. `"machine vs ripping"`.
    pub name: String,
    pub counterexample: Option<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub maxlen: usize,
    pub comparisons: Vec<Comparison>,
}

impl CheckReport {
    fn compare(&mut self, name: impl Into<String>, a: &Language, b: &Language) {
        self.comparisons.push(Comparison {
            name: name.into(),
            counterexample: shortest_difference(a, b),
        });
    }

    pub fn is_equivalent(&self) -> bool {
        self.comparisons.iter().all(|c| c.counterexample.is_none())
    }

    /// The shortest counterexample over all failed comparisons.
    pub fn shortest_counterexample(&self) -> Option<(&str, &Word)> {
        self.comparisons
            .iter()
            .filter_map(|c| c.counterexample.as_ref().map(|w| (c.name.as_str(), w)))
            .min_by(|x, y| x.1.cmp(y.1))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.comparisons {
            match &c.counterexample {
                None => writeln!(f, "  ok    {}", c.name)?,
                Some(w) => writeln!(f, "  FAIL  {} (differ on {w})", c.name)?,
            }
        }
        Ok(())
    }
}

/// Machine language vs. ripping vs. the recursive equations.
pub fn check_machine(m: &Nfa, maxlen: usize) -> CheckReport {
    let sigma = m.sigma();
    let machine = enumerate_nfa_language(m, maxlen);
    let ripped = enumerate_regexp_language(&ndfa_to_regexp(m).0, maxlen, sigma);
    let equations = enumerate_regexp_language(&r_equations(m), maxlen, sigma);
    let mut report = CheckReport {
        maxlen,
        ..Default::default()
    };
    report.compare("machine vs state ripping", &machine, &ripped);
    report.compare("machine vs recursive equations", &machine, &equations);
    report
}

/// Regexp vs. its NFA vs. the regexp recovered from that NFA by both methods.
pub fn check_regexp(r: &Regexp, sigma: &[char], maxlen: usize) -> CheckReport {
    let (nfa, _) = regexp_to_ndfa_over(r, sigma);
    let sigma = nfa.sigma().to_vec();
    let original = enumerate_regexp_language(r, maxlen, &sigma);
    let machine = enumerate_nfa_language(&nfa, maxlen);
    let round_trip = enumerate_regexp_language(&ndfa_to_regexp(&nfa).0, maxlen, &sigma);
    let equations = enumerate_regexp_language(&r_equations(&nfa), maxlen, &sigma);
    let mut report = CheckReport {
        maxlen,
        ..Default::default()
    };
    report.compare("regexp vs constructed ndfa", &original, &machine);
    report.compare("regexp vs ripped round trip", &original, &round_trip);
    report.compare("regexp vs recursive equations", &original, &equations);
    report
}

/// Consecutive frames of `trace` must accept the same words.
pub fn check_trace(trace: &Trace, maxlen: usize) -> CheckReport {
    let mut report = CheckReport {
        maxlen,
        ..Default::default()
    };
    for pair in trace.frames().windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let sigma = joint_sigma(&a.graph, &b.graph);
        report.compare(
            format!("frame {} vs frame {}", a.index, b.index),
            &gnfa_language_over(&a.graph, &sigma, maxlen),
            &gnfa_language_over(&b.graph, &sigma, maxlen),
        );
    }
    report
}

fn joint_sigma(a: &Gnfa, b: &Gnfa) -> Vec<char> {
    a.sigma()
        .iter()
        .chain(b.sigma())
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn gnfa_language_over(g: &Gnfa, sigma: &[char], maxlen: usize) -> Language {
    if g.sigma() == sigma {
        return enumerate_gnfa_language(g, maxlen);
    }
    let matcher = crate::gnfa::GnfaMatcher::new(g);
    Word::all_up_to(sigma, maxlen)
        .into_iter()
        .filter(|w| matcher.accepts(w))
        .collect()
}
