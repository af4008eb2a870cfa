mod common;

use common::{filter_words, machine, regexp, SIGMA};
use gnfakit::check::{check_machine, check_regexp};
use gnfakit::gnfa::gnfa_accepts;
use gnfakit::n2r::{ndfa_to_regexp, r_equations};
use gnfakit::nfa::{enumerate_nfa_language, nfa_apply};
use gnfakit::r2n::regexp_to_ndfa_over;
use gnfakit::regex::enumerate_regexp_language;
use gnfakit::Verdict;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_frames_preserve_language(r in regexp()) {
        let (nfa, trace) = regexp_to_ndfa_over(&r, &SIGMA);
        let expected = filter_words(&SIGMA, 4, |w| r.matches(w));
        for f in trace.frames() {
            prop_assert!(f.graph.invariant_violations().is_empty(), "frame {}", f.index);
            prop_assert_eq!(
                filter_words(&SIGMA, 4, |w| gnfa_accepts(&f.graph, w)),
                expected.clone(),
                "frame {}: {}", f.index, f.message
            );
        }
        prop_assert!(trace.last().graph.edges().iter().all(|e| e.label.is_atomic()));
        prop_assert_eq!(
            filter_words(&SIGMA, 4, |w| nfa_apply(&nfa, w) == Ok(Verdict::Accept)),
            expected
        );
    }

    #[test]
    fn ripping_trace_has_one_frame_per_state(m in machine()) {
        let (_, trace) = ndfa_to_regexp(&m);
        prop_assert_eq!(trace.len(), m.states().len() + 1);
        for (f, q) in trace.frames()[1..].iter().zip(m.states()) {
            prop_assert_eq!(&f.message, &format!("Ripped out state {q}."));
            prop_assert!(!f.graph.has_state(q));
        }
    }

    #[test]
    fn ripping_and_equations_agree(m in machine()) {
        let machine_lang = enumerate_nfa_language(&m, 5);
        prop_assert_eq!(enumerate_regexp_language(&ndfa_to_regexp(&m).0, 5, m.sigma()), machine_lang.clone());
        prop_assert_eq!(enumerate_regexp_language(&r_equations(&m), 5, m.sigma()), machine_lang);
        prop_assert!(check_machine(&m, 5).is_equivalent());
    }

    #[test]
    fn regexp_round_trip(r in regexp()) {
        let report = check_regexp(&r, &SIGMA, 5);
        prop_assert!(report.is_equivalent(), "{}\n{}", r, report);
    }
}
