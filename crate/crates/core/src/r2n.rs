//! Regular expression to NFA, one edge expansion at a time.
//!
//! The driver starts from the two-state GNFA labeled with the input,
//! optionally records a simplification step, and then repeatedly expands
//! the first decomposable edge until every label is a singleton or the
//! empty regexp.

use thiserror::Error;

use crate::gnfa::{gnfa_from_regexp_over, gnfa_to_nfa, Edge, Gnfa};
use crate::nfa::Nfa;
use crate::regex::{simplify, Regexp};
use crate::trace::Trace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpandError {
    #[error("no edge from '{from}' to '{to}'")]
    NoSuchEdge { from: String, to: String },
    #[error("edge from '{from}' to '{to}' is labeled {label}, which cannot be expanded")]
    NotDecomposable {
        from: String,
        to: String,
        label: Regexp,
    },
}

/// Outcome of one expansion step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub gnfa: Gnfa,
    /// Head and tail of the replaced edge.
    pub highlights: (String, String),
    pub message: String,
}

/// First edge, in insertion order, labeled by a union, concatenation or star.
pub fn select_decomposable_edge(g: &Gnfa) -> Option<&Edge> {
    g.edges().iter().find(|e| e.label.is_decomposable())
}

/// Replaces the edge `from -> to` with the sub-GNFA for its label.
///
/// * union `r1 U r2`: fresh `A, B, C, D`; `from -!-> A`, `from -!-> B`,
///   `A -r1-> C`, `B -r2-> D`, `C -!-> to`, `D -!-> to`
/// * concatenation `r1 r2`: fresh `A, B`; `from -r1-> A -!-> B -r2-> to`
/// * star `r*`: fresh `A, B`; `from -!-> A`, `A -!-> B`, `A -!-> to`,
///   `B -!-> to` and a loop `B -r-> B`
///
/// Fresh names are allocated in the order listed. New edges go to the end
/// of the edge list.
pub fn expand_edge(g: &Gnfa, from: &str, to: &str) -> Result<Expansion, ExpandError> {
    let label = g
        .label(from, to)
        .ok_or_else(|| ExpandError::NoSuchEdge {
            from: from.to_string(),
            to: to.to_string(),
        })?
        .clone();
    if !label.is_decomposable() {
        return Err(ExpandError::NotDecomposable {
            from: from.to_string(),
            to: to.to_string(),
            label,
        });
    }

    let mut next = g.clone();
    next.remove_edge(from, to);
    match &label {
        Regexp::Union(r1, r2) => {
            let a = next.add_fresh_state();
            let b = next.add_fresh_state();
            let c = next.add_fresh_state();
            let d = next.add_fresh_state();
            next.add_edge(from, Regexp::Empty, &a);
            next.add_edge(from, Regexp::Empty, &b);
            next.add_edge(&a, (**r1).clone(), &c);
            next.add_edge(&b, (**r2).clone(), &d);
            next.add_edge(&c, Regexp::Empty, to);
            next.add_edge(&d, Regexp::Empty, to);
        }
        Regexp::Concat(r1, r2) => {
            let a = next.add_fresh_state();
            let b = next.add_fresh_state();
            next.add_edge(from, (**r1).clone(), &a);
            next.add_edge(&a, Regexp::Empty, &b);
            next.add_edge(&b, (**r2).clone(), to);
        }
        Regexp::Star(r1) => {
            let a = next.add_fresh_state();
            let b = next.add_fresh_state();
            next.add_edge(from, Regexp::Empty, &a);
            next.add_edge(&a, Regexp::Empty, &b);
            next.add_edge(&a, Regexp::Empty, to);
            next.add_edge(&b, Regexp::Empty, to);
            next.add_edge(&b, (**r1).clone(), &b);
        }
        Regexp::Null | Regexp::Empty | Regexp::Singleton(_) => unreachable!("checked above"),
    }

    Ok(Expansion {
        gnfa: next,
        highlights: (from.to_string(), to.to_string()),
        message: format!("Expanded {label} on the edge from {from} to {to}."),
    })
}

/// Converts `r` to an NFA, recording every step.
pub fn regexp_to_ndfa(r: &Regexp) -> (Nfa, Trace) {
    regexp_to_ndfa_over(r, &[])
}

/// Like [`regexp_to_ndfa`], over an alphabet widened by `sigma`.
pub fn regexp_to_ndfa_over(r: &Regexp, sigma: &[char]) -> (Nfa, Trace) {
    let mut g = gnfa_from_regexp_over(r, sigma);
    let mut trace = Trace::new(g.clone(), "Starting ndfa.", &[]);

    let simplified = simplify(r);
    if simplified != *r {
        g = gnfa_from_regexp_over(&simplified, g.sigma());
        let (s, f) = (g.start().to_string(), g.final_state().to_string());
        trace.push(
            g.clone(),
            format!("Simplified the regular expression to {simplified}."),
            &[&s, &f],
        );
    }

    while let Some(edge) = select_decomposable_edge(&g) {
        let (from, to) = (edge.from.clone(), edge.to.clone());
        let step = expand_edge(&g, &from, &to).expect("selected edge is decomposable");
        trace.push(
            step.gnfa.clone(),
            step.message,
            &[&step.highlights.0, &step.highlights.1],
        );
        g = step.gnfa;
    }

    let nfa = gnfa_to_nfa(&g).expect("fully expanded GNFA has only atomic labels");
    (nfa, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnfa::{gnfa_accepts, gnfa_from_regexp};
    use crate::nfa::enumerate_nfa_language;
    use crate::regex::enumerate_regexp_language;
    use crate::word::Word;

    fn parse(s: &str) -> Regexp {
        s.parse().unwrap()
    }

    fn agree(a: &Gnfa, b: &Gnfa, maxlen: usize) {
        for w in Word::all_up_to(a.sigma(), maxlen) {
            assert_eq!(gnfa_accepts(a, &w), gnfa_accepts(b, &w), "disagree on {w}");
        }
    }

    #[test]
    fn selects_first_decomposable() {
        let g = gnfa_from_regexp(&parse("(ma)*"));
        assert_eq!(select_decomposable_edge(&g).unwrap().label, parse("(ma)*"));
        let g = gnfa_from_regexp(&parse("a"));
        assert!(select_decomposable_edge(&g).is_none());
    }

    #[test]
    fn selection_follows_edge_order() {
        let g = gnfa_from_regexp(&parse("a(b U c)"));
        let step = expand_edge(&g, "S", "F").unwrap();
        let e = select_decomposable_edge(&step.gnfa).unwrap();
        assert_eq!((e.from.as_str(), e.to.as_str()), ("B", "F"));
        assert_eq!(e.label, parse("b U c"));
    }

    #[test]
    fn star_expansion_shape() {
        let g = gnfa_from_regexp(&parse("(ma)*"));
        let step = expand_edge(&g, "S", "F").unwrap();
        let h = &step.gnfa;
        assert_eq!(h.states(), &["S", "F", "A", "B"]);
        assert_eq!(h.label("B", "B"), Some(&parse("ma")));
        for (p, q) in [("S", "A"), ("A", "B"), ("A", "F"), ("B", "F")] {
            assert_eq!(h.label(p, q), Some(&Regexp::Empty), "{p}->{q}");
        }
        assert_eq!(h.edges().len(), 5);
        assert_eq!(step.highlights, ("S".into(), "F".into()));
        assert_eq!(step.message, "Expanded (ma)* on the edge from S to F.");
    }

    #[test]
    fn concat_on_self_loop() {
        let g = gnfa_from_regexp(&parse("(ma)*"));
        let g = expand_edge(&g, "S", "F").unwrap().gnfa;
        let step = expand_edge(&g, "B", "B").unwrap();
        let h = &step.gnfa;
        assert_eq!(h.label("B", "C"), Some(&parse("m")));
        assert_eq!(h.label("C", "D"), Some(&Regexp::Empty));
        assert_eq!(h.label("D", "B"), Some(&parse("a")));
        assert_eq!(h.label("B", "B"), None);
        assert_eq!(step.highlights, ("B".into(), "B".into()));
    }

    #[test]
    fn union_expansion_shape() {
        let g = gnfa_from_regexp(&parse("a U b"));
        let step = expand_edge(&g, "S", "F").unwrap();
        let h = &step.gnfa;
        let expected = [
            ("S", "!", "A"),
            ("S", "!", "B"),
            ("A", "a", "C"),
            ("B", "b", "D"),
            ("C", "!", "F"),
            ("D", "!", "F"),
        ];
        assert_eq!(h.edges().len(), 6);
        for (e, (p, r, q)) in h.edges().iter().zip(expected) {
            assert_eq!(
                (e.from.as_str(), e.label.to_string(), e.to.as_str()),
                (p, r.to_string(), q)
            );
        }
        // Oracle: bounded language equality before and after.
        agree(&g, h, 3);
    }

    #[test]
    fn expanding_atomic_edge_fails() {
        let g = gnfa_from_regexp(&parse("a"));
        assert!(matches!(
            expand_edge(&g, "S", "F"),
            Err(ExpandError::NotDecomposable { .. })
        ));
        assert!(matches!(
            expand_edge(&g, "F", "S"),
            Err(ExpandError::NoSuchEdge { .. })
        ));
    }

    #[test]
    fn walkthrough_with_simplification() {
        let (nfa, trace) = regexp_to_ndfa(&parse("(m(aU~))*"));
        let msgs: Vec<&str> = trace.frames().iter().map(|f| f.message.as_str()).collect();
        assert_eq!(
            msgs,
            [
                "Starting ndfa.",
                "Simplified the regular expression to (ma)*.",
                "Expanded (ma)* on the edge from S to F.",
                "Expanded ma on the edge from B to B.",
            ]
        );
        assert_eq!(trace.frames()[3].highlights, vec!["B"]);
        assert_eq!(
            enumerate_nfa_language(&nfa, 6),
            enumerate_regexp_language(&parse("(ma)*"), 6, &['a', 'm'])
        );
    }

    #[test]
    fn single_symbol_needs_no_steps() {
        let (nfa, trace) = regexp_to_ndfa(&parse("a"));
        assert_eq!(trace.len(), 1);
        assert_eq!(nfa.rules().len(), 1);
        assert_eq!(nfa.rules()[0].from, "S");
        assert_eq!(nfa.rules()[0].to, "F");
    }

    #[test]
    fn null_gives_machine_rejecting_everything() {
        let (nfa, trace) = regexp_to_ndfa(&Regexp::Null);
        assert_eq!(trace.len(), 1);
        assert!(nfa.rules().is_empty());
        assert!(enumerate_nfa_language(&nfa, 3).is_empty());
    }

    #[test]
    fn end_to_end_language() {
        let r = parse("ab* U ba*");
        let (nfa, trace) = regexp_to_ndfa(&r);
        assert_eq!(
            enumerate_nfa_language(&nfa, 5),
            enumerate_regexp_language(&r, 5, &['a', 'b'])
        );
        for pair in trace.frames().windows(2) {
            agree(&pair[0].graph, &pair[1].graph, 5);
        }
    }

    #[test]
    fn widened_alphabet() {
        let (nfa, _) = regexp_to_ndfa_over(&parse("a"), &['a', 'b', 'c']);
        assert_eq!(nfa.sigma(), &['a', 'b', 'c']);
    }
}
