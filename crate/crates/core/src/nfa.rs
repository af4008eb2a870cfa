//! Nondeterministic finite automata with empty (`EMP`) transitions.
//!
//! Machines come in as a [`RawNfa`], usually deserialized from JSON, and are
//! checked by [`validate_nfa`], which reports every violated invariant at
//! once rather than stopping at the first.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::regex::Language;
use crate::word::Word;

/// Wire token for the empty transition label.
pub const EMP_TOKEN: &str = "eps";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Symbol(char),
    /// Empty transition: consumes nothing.
    Emp,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Symbol(c) => write!(f, "{c}"),
            Label::Emp => f.write_str(EMP_TOKEN),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub from: String,
    pub label: Label,
    pub to: String,
}

impl Rule {
    pub fn new(from: impl Into<String>, label: Label, to: impl Into<String>) -> Self {
        Rule {
            from: from.into(),
            label,
            to: to.into(),
        }
    }
}

/// Unchecked machine description, field for field the machine JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawNfa {
    pub states: Vec<String>,
    pub sigma: Vec<String>,
    pub start: String,
    pub finals: Vec<String>,
    pub rules: Vec<(String, String, String)>,
}

impl RawNfa {
    /// Convenience constructor from string slices. Rule labels use `"eps"`
    /// for empty transitions.
    pub fn new(
        states: &[&str],
        sigma: &[&str],
        start: &str,
        finals: &[&str],
        rules: &[(&str, &str, &str)],
    ) -> Self {
        let owned = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        RawNfa {
            states: owned(states),
            sigma: owned(sigma),
            start: start.to_string(),
            finals: owned(finals),
            rules: rules
                .iter()
                .map(|(p, a, q)| (p.to_string(), a.to_string(), q.to_string()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("rule {rule} refers to unknown state '{state}'")]
    UnknownStateInRule { rule: usize, state: String },
    #[error("rule {rule} uses symbol '{symbol}' which is not in the alphabet")]
    UnknownSymbol { rule: usize, symbol: String },
    #[error("start state '{0}' is not a state")]
    StartNotAState(String),
    #[error("final state '{0}' is not a state")]
    FinalNotAState(String),
    #[error("state '{0}' is declared more than once")]
    DuplicateState(String),
    #[error("symbol '{0}' is declared more than once")]
    DuplicateSymbol(String),
    #[error("'{0}' is not a valid symbol (expected one alphanumeric character other than 'U')")]
    InvalidSymbol(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct NfaError {
    pub violations: Vec<Violation>,
}

impl fmt::Display for NfaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid machine:")?;
        for v in &self.violations {
            write!(f, "\n  - {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplyError {
    #[error("symbol '{0}' is not in the machine's alphabet")]
    SymbolNotInAlphabet(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

/// A validated NFA. Rules keep their declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    states: Vec<String>,
    sigma: Vec<char>,
    start: String,
    finals: Vec<String>,
    rules: Vec<Rule>,
    // derived adjacency, indexed by position in `states`
    index: HashMap<String, usize>,
    emp_edges: Vec<Vec<usize>>,
    sym_edges: Vec<Vec<(char, usize)>>,
}

/// Checks every machine invariant, returning all violations on failure.
pub fn validate_nfa(raw: &RawNfa) -> Result<Nfa, NfaError> {
    let mut violations = Vec::new();

    let mut index = HashMap::new();
    for (i, s) in raw.states.iter().enumerate() {
        if index.insert(s.clone(), i).is_some() {
            violations.push(Violation::DuplicateState(s.clone()));
            // keep the first declaration's index
            index.insert(s.clone(), raw.states.iter().position(|t| t == s).unwrap());
        }
    }

    let mut sigma = Vec::new();
    let mut seen_symbols = BTreeSet::new();
    for s in &raw.sigma {
        match single_symbol(s) {
            Some(c) => {
                if !seen_symbols.insert(c) {
                    violations.push(Violation::DuplicateSymbol(s.clone()));
                } else {
                    sigma.push(c);
                }
            }
            None => violations.push(Violation::InvalidSymbol(s.clone())),
        }
    }

    if !index.contains_key(&raw.start) {
        violations.push(Violation::StartNotAState(raw.start.clone()));
    }

    let mut finals = Vec::new();
    for f in &raw.finals {
        if !index.contains_key(f) {
            violations.push(Violation::FinalNotAState(f.clone()));
        } else if !finals.contains(f) {
            finals.push(f.clone());
        }
    }

    let mut rules = Vec::new();
    for (i, (from, label, to)) in raw.rules.iter().enumerate() {
        let mut ok = true;
        for state in [from, to] {
            if !index.contains_key(state) {
                violations.push(Violation::UnknownStateInRule {
                    rule: i,
                    state: state.clone(),
                });
                ok = false;
            }
        }
        let label = if label == EMP_TOKEN {
            Some(Label::Emp)
        } else {
            match single_symbol(label) {
                Some(c) if seen_symbols.contains(&c) => Some(Label::Symbol(c)),
                _ => None,
            }
        };
        match label {
            Some(label) if ok => rules.push(Rule::new(from.clone(), label, to.clone())),
            Some(_) => {}
            None => violations.push(Violation::UnknownSymbol {
                rule: i,
                symbol: raw.rules[i].1.clone(),
            }),
        }
    }

    if !violations.is_empty() {
        return Err(NfaError { violations });
    }
    Ok(Nfa::assemble(
        raw.states.clone(),
        sigma,
        raw.start.clone(),
        finals,
        rules,
    ))
}

fn single_symbol(s: &str) -> Option<char> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if crate::regex::is_symbol_char(c) => Some(c),
        _ => None,
    }
}

impl Nfa {
    /// Builds and validates a machine from typed parts.
    pub fn new(
        states: Vec<String>,
        sigma: Vec<char>,
        start: String,
        finals: Vec<String>,
        rules: Vec<Rule>,
    ) -> Result<Nfa, NfaError> {
        validate_nfa(&RawNfa {
            states,
            sigma: sigma.iter().map(|c| c.to_string()).collect(),
            start,
            finals,
            rules: rules
                .into_iter()
                .map(|r| (r.from, r.label.to_string(), r.to))
                .collect(),
        })
    }

    fn assemble(
        states: Vec<String>,
        sigma: Vec<char>,
        start: String,
        finals: Vec<String>,
        rules: Vec<Rule>,
    ) -> Nfa {
        let index: HashMap<String, usize> = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut emp_edges = vec![Vec::new(); states.len()];
        let mut sym_edges = vec![Vec::new(); states.len()];
        for r in &rules {
            let (p, q) = (index[&r.from], index[&r.to]);
            match r.label {
                Label::Emp => emp_edges[p].push(q),
                Label::Symbol(c) => sym_edges[p].push((c, q)),
            }
        }
        Nfa {
            states,
            sigma,
            start,
            finals,
            rules,
            index,
            emp_edges,
            sym_edges,
        }
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn sigma(&self) -> &[char] {
        &self.sigma
    }

    pub fn start(&self) -> &str {
        &self.start
    }

    pub fn finals(&self) -> &[String] {
        &self.finals
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn is_final(&self, state: &str) -> bool {
        self.finals.iter().any(|f| f == state)
    }

    pub fn to_raw(&self) -> RawNfa {
        RawNfa {
            states: self.states.clone(),
            sigma: self.sigma.iter().map(|c| c.to_string()).collect(),
            start: self.start.clone(),
            finals: self.finals.clone(),
            rules: self
                .rules
                .iter()
                .map(|r| (r.from.clone(), r.label.to_string(), r.to.clone()))
                .collect(),
        }
    }

    fn close(&self, frontier: &mut [bool]) {
        let mut stack: Vec<usize> = (0..frontier.len()).filter(|&i| frontier[i]).collect();
        while let Some(p) = stack.pop() {
            for &q in &self.emp_edges[p] {
                if !frontier[q] {
                    frontier[q] = true;
                    stack.push(q);
                }
            }
        }
    }

    fn step(&self, frontier: &[bool], symbol: char) -> Vec<bool> {
        let mut next = vec![false; frontier.len()];
        for (p, _) in frontier.iter().enumerate().filter(|(_, &on)| on) {
            for &(c, q) in &self.sym_edges[p] {
                if c == symbol {
                    next[q] = true;
                }
            }
        }
        self.close(&mut next);
        next
    }

    fn initial_frontier(&self) -> Vec<bool> {
        let mut frontier = vec![false; self.states.len()];
        frontier[self.index[&self.start]] = true;
        self.close(&mut frontier);
        frontier
    }

    fn accepting(&self, frontier: &[bool]) -> bool {
        self.finals.iter().any(|f| frontier[self.index[f]])
    }
}

/// Smallest superset of `set` closed under empty transitions. Names not in
/// the machine are ignored.
pub fn epsilon_closure(m: &Nfa, set: &BTreeSet<String>) -> BTreeSet<String> {
    let mut frontier = vec![false; m.states.len()];
    for s in set {
        if let Some(&i) = m.index.get(s) {
            frontier[i] = true;
        }
    }
    m.close(&mut frontier);
    frontier
        .iter()
        .enumerate()
        .filter(|(_, &on)| on)
        .map(|(i, _)| m.states[i].clone())
        .collect()
}

/// Runs `m` on `word` by frontier simulation.
pub fn nfa_apply(m: &Nfa, word: &[char]) -> Result<Verdict, ApplyError> {
    if let Some(&c) = word.iter().find(|c| !m.sigma.contains(c)) {
        return Err(ApplyError::SymbolNotInAlphabet(c));
    }
    let mut frontier = m.initial_frontier();
    for &c in word {
        frontier = m.step(&frontier, c);
    }
    Ok(if m.accepting(&frontier) {
        Verdict::Accept
    } else {
        Verdict::Reject
    })
}

/// Every word over the machine's alphabet of length at most `maxlen` that
/// the machine accepts. Prefixes that leave the frontier empty are pruned.
pub fn enumerate_nfa_language(m: &Nfa, maxlen: usize) -> Language {
    let mut out = BTreeSet::new();
    let mut prefix = Word::empty();
    walk(m, &m.initial_frontier(), maxlen, &mut prefix, &mut out);
    out
}

fn walk(m: &Nfa, frontier: &[bool], remaining: usize, prefix: &mut Word, out: &mut Language) {
    if m.accepting(frontier) {
        out.insert(prefix.clone());
    }
    if remaining == 0 {
        return;
    }
    for &c in &m.sigma {
        let next = m.step(frontier, c);
        if next.iter().any(|&on| on) {
            prefix.push(c);
            walk(m, &next, remaining - 1, prefix, out);
            prefix.pop();
        }
    }
}

impl Serialize for Nfa {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_raw().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Nfa {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawNfa::deserialize(deserializer)?;
        validate_nfa(&raw).map_err(serde::de::Error::custom)
    }
}
