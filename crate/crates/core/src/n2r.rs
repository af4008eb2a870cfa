//! NFA to regular expression.
//!
//! [`ndfa_to_regexp`] rips states out of the machine's GNFA one at a time.
//! [`r_equations`] computes the same language with the recursive
//! `R(i, j, m)` equations and shares no code with the ripping path beyond
//! the regexp type itself.

use std::collections::HashMap;

use crate::gnfa::{gnfa_from_nfa, rip_state};
use crate::nfa::{Label, Nfa};
use crate::regex::{simplify, Regexp};
use crate::trace::Trace;

/// States in the order they are ripped: the machine's declaration order.
pub fn rip_order(m: &Nfa) -> Vec<String> {
    m.states().to_vec()
}

/// Rips every original state out of the GNFA for `m`.
///
/// Returns the raw label left on the start-to-final edge (`Null` if no
/// such edge survives) and one frame per step. Labels in the trace are
/// exactly what ripping produces; no simplification is applied.
pub fn ndfa_to_regexp(m: &Nfa) -> (Regexp, Trace) {
    let mut g = gnfa_from_nfa(m);
    let (start, fin) = (g.start().to_string(), g.final_state().to_string());
    let mut trace = Trace::new(
        g.clone(),
        format!("Constructed GNFA with new start {start} and new final {fin}."),
        &[&start, &fin],
    );

    for q in rip_order(m) {
        // the ripped state is gone from the next graph, so its former
        // neighbours carry the highlight
        let neighbours: Vec<String> = g
            .edges()
            .iter()
            .filter_map(|e| {
                if e.to == q && e.from != q {
                    Some(e.from.clone())
                } else if e.from == q && e.to != q {
                    Some(e.to.clone())
                } else {
                    None
                }
            })
            .collect();
        g = rip_state(&g, &q).expect("original states are never the fresh endpoints");
        let hs: Vec<&str> = neighbours.iter().map(String::as_str).collect();
        trace.push(g.clone(), format!("Ripped out state {q}."), &hs);
    }

    debug_assert_eq!(g.states().len(), 2);
    let result = g.label(&start, &fin).cloned().unwrap_or(Regexp::Null);
    (result, trace)
}

/// The regexp `⋃ { R(1, j, n) : k_j final }` of the recursive equations.
///
/// States are numbered `k_1..k_n` in declaration order, except that the
/// start state is moved to the front. Base cases collect the singleton for
/// each direct rule, with empty transitions contributing the empty regexp,
/// plus the empty regexp on the diagonal. Each memoized entry is
/// simplified, which keeps the tables small without changing any language.
pub fn r_equations(m: &Nfa) -> Regexp {
    let mut order: Vec<&str> = vec![m.start()];
    order.extend(
        m.states()
            .iter()
            .map(String::as_str)
            .filter(|s| *s != m.start()),
    );
    let n = order.len();
    let number: HashMap<&str, usize> = order.iter().enumerate().map(|(i, s)| (*s, i + 1)).collect();

    let mut table = Equations {
        base: vec![vec![Vec::new(); n + 1]; n + 1],
        memo: HashMap::new(),
    };
    for rule in m.rules() {
        let (i, j) = (number[rule.from.as_str()], number[rule.to.as_str()]);
        table.base[i][j].push(match rule.label {
            Label::Symbol(c) => Regexp::Singleton(c),
            Label::Emp => Regexp::Empty,
        });
    }

    let parts: Vec<Regexp> = m
        .finals()
        .iter()
        .map(|f| table.r(1, number[f.as_str()], n))
        .collect();
    simplify(&Regexp::union_all(parts))
}

struct Equations {
    base: Vec<Vec<Vec<Regexp>>>,
    memo: HashMap<(usize, usize, usize), Regexp>,
}

impl Equations {
    fn r(&mut self, i: usize, j: usize, m: usize) -> Regexp {
        if let Some(hit) = self.memo.get(&(i, j, m)) {
            return hit.clone();
        }
        let value = if m == 0 {
            let direct = self.base[i][j].iter().cloned();
            if i == j {
                Regexp::union_all(std::iter::once(Regexp::Empty).chain(direct))
            } else {
                Regexp::union_all(direct)
            }
        } else {
            let avoid = self.r(i, j, m - 1);
            let into = self.r(i, m, m - 1);
            let around = self.r(m, m, m - 1);
            let out = self.r(m, j, m - 1);
            Regexp::union(
                avoid,
                Regexp::concat(into, Regexp::concat(Regexp::star(around), out)),
            )
        };
        let value = simplify(&value);
        self.memo.insert((i, j, m), value.clone());
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnfa::gnfa_accepts;
    use crate::nfa::{enumerate_nfa_language, validate_nfa, RawNfa};
    use crate::regex::enumerate_regexp_language;
    use crate::word::Word;

    fn ab_or_ba() -> Nfa {
        validate_nfa(&RawNfa::new(
            &["S", "A", "B", "D", "E"],
            &["a", "b"],
            "S",
            &["B", "E"],
            &[
                ("S", "eps", "A"),
                ("S", "eps", "D"),
                ("A", "a", "B"),
                ("B", "b", "B"),
                ("D", "b", "E"),
                ("E", "a", "E"),
            ],
        ))
        .unwrap()
    }

    fn dead_branch_machine() -> Nfa {
        validate_nfa(&RawNfa::new(
            &["S", "A", "B", "F"],
            &["a"],
            "S",
            &["B"],
            &[
                ("S", "eps", "F"),
                ("S", "a", "A"),
                ("A", "a", "A"),
                ("A", "eps", "B"),
            ],
        ))
        .unwrap()
    }

    #[test]
    fn order_is_declaration_order() {
        assert_eq!(rip_order(&dead_branch_machine()), ["S", "A", "B", "F"]);
        let single = validate_nfa(&RawNfa::new(&["Q"], &["a"], "Q", &[], &[])).unwrap();
        assert_eq!(rip_order(&single), ["Q"]);
    }

    #[test]
    fn ripping_trace_shape() {
        let m = dead_branch_machine();
        let (r, trace) = ndfa_to_regexp(&m);
        assert_eq!(trace.len(), m.states().len() + 1);
        assert_eq!(
            trace.frames()[0].message,
            "Constructed GNFA with new start C and new final D."
        );
        assert_eq!(trace.frames()[2].message, "Ripped out state A.");
        assert_eq!(trace.last().graph.states(), &["C", "D"]);
        assert_eq!(
            enumerate_regexp_language(&r, 6, &['a']),
            enumerate_nfa_language(&m, 6)
        );
        for pair in trace.frames().windows(2) {
            for w in Word::all_up_to(&['a'], 5) {
                assert_eq!(
                    gnfa_accepts(&pair[0].graph, &w),
                    gnfa_accepts(&pair[1].graph, &w)
                );
            }
        }
    }

    #[test]
    fn no_finals_yields_null() {
        let m = validate_nfa(&RawNfa::new(
            &["P", "Q"],
            &["a"],
            "P",
            &[],
            &[("P", "a", "Q")],
        ))
        .unwrap();
        assert_eq!(ndfa_to_regexp(&m).0, Regexp::Null);
        assert_eq!(r_equations(&m), Regexp::Null);
    }

    #[test]
    fn base_cases() {
        // R(1,2,0) = a; R(1,1,0) = ε with no loop on k1
        let m = validate_nfa(&RawNfa::new(
            &["P", "Q"],
            &["a"],
            "P",
            &["Q"],
            &[("P", "a", "Q")],
        ))
        .unwrap();
        let mut eq = Equations {
            base: vec![vec![Vec::new(); 3]; 3],
            memo: HashMap::new(),
        };
        eq.base[1][2].push(Regexp::Singleton('a'));
        assert_eq!(eq.r(1, 2, 0), Regexp::Singleton('a'));
        assert_eq!(eq.r(1, 1, 0), Regexp::Empty);
        assert_eq!(eq.r(2, 1, 0), Regexp::Null);
        assert_eq!(
            enumerate_regexp_language(&r_equations(&m), 4, &['a']),
            [Word::from("a")].into_iter().collect()
        );
    }

    #[test]
    fn equations_match_machine() {
        let m = ab_or_ba();
        assert_eq!(
            enumerate_regexp_language(&r_equations(&m), 5, m.sigma()),
            enumerate_nfa_language(&m, 5)
        );
    }

    #[test]
    fn start_not_declared_first() {
        let m = validate_nfa(&RawNfa::new(
            &["X", "S"],
            &["a", "b"],
            "S",
            &["X"],
            &[("S", "a", "X"), ("X", "b", "S")],
        ))
        .unwrap();
        let expected = enumerate_nfa_language(&m, 6);
        assert_eq!(
            enumerate_regexp_language(&r_equations(&m), 6, m.sigma()),
            expected
        );
        assert_eq!(
            enumerate_regexp_language(&ndfa_to_regexp(&m).0, 6, m.sigma()),
            expected
        );
    }
}
