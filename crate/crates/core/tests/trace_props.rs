mod common;

use common::{machine, regexp, SIGMA};
use gnfakit::n2r::ndfa_to_regexp;
use gnfakit::r2n::regexp_to_ndfa_over;
use gnfakit::trace::{cursor_new, frame_to_dot};
use gnfakit::{Trace, VizCursor};
use proptest::prelude::*;

#[derive(Debug, Clone, Copy)]
enum Move {
    Next,
    Prev,
    End,
    Start,
}

fn moves() -> impl Strategy<Value = Vec<Move>> {
    prop::collection::vec(
        prop_oneof![
            Just(Move::Next),
            Just(Move::Prev),
            Just(Move::End),
            Just(Move::Start)
        ],
        0..20,
    )
}

fn traces() -> impl Strategy<Value = Trace> {
    prop_oneof![
        regexp().prop_map(|r| regexp_to_ndfa_over(&r, &SIGMA).1),
        machine().prop_map(|m| ndfa_to_regexp(&m).1),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cursor_follows_an_index_model(t in traces(), ms in moves()) {
        let n = t.len();
        let mut c = cursor_new(&t).unwrap();
        let mut i = 0usize;
        for m in ms {
            let (c2, i2) = match m {
                Move::Next => (c.next(), (i + 1).min(n - 1)),
                Move::Prev => (c.prev(), i.saturating_sub(1)),
                Move::End => (c.end(), n - 1),
                Move::Start => (c.start(), 0),
            };
            c = c2;
            i = i2;
            prop_assert_eq!(c.position(), i);
            prop_assert_eq!(c.current(), &t.frames()[i]);
            prop_assert_eq!(c.processed().count() + c.unprocessed().count(), n);
        }
    }

    #[test]
    fn cursor_moves_invert_away_from_boundaries(t in traces(), k in 0usize..12) {
        let c = (0..k).fold(cursor_new(&t).unwrap(), |c, _| c.next());
        if !c.at_end() {
            prop_assert_eq!(&c.next().prev(), &c);
        }
        if !c.at_start() {
            prop_assert_eq!(&c.prev().next(), &c);
        }
        prop_assert_eq!(c.end().end(), c.end());
        prop_assert_eq!(c.start().start(), c.start());
        let processed: Vec<usize> = c.processed().map(|f| f.index).collect();
        let expected: Vec<usize> = (0..c.position()).rev().collect();
        prop_assert_eq!(processed, expected);
    }

    #[test]
    fn dot_is_deterministic_and_survives_json(t in traces()) {
        let json = serde_json::to_string(&t).unwrap();
        let reloaded: Trace = serde_json::from_str(&json).unwrap();
        let c = VizCursor::from_frames(reloaded.into_frames()).unwrap();
        for (f, g) in t.frames().iter().zip(c.unprocessed()) {
            let dot = frame_to_dot(f);
            prop_assert_eq!(&dot, &frame_to_dot(f));
            prop_assert_eq!(&dot, &frame_to_dot(g));
            prop_assert!(graphviz_rust::parse(&dot).is_ok(), "{}", dot);
        }
    }
}
