//! Generalized NFAs: transitions labeled by regular expressions.
//!
//! Unlike the textbook normal form, a [`Gnfa`] never stores an edge labeled
//! with the null regexp, and it keeps at most one edge per ordered pair of
//! states. Adding a parallel edge unions the new label into the existing
//! one, old label first.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nfa::{Label, Nfa, NfaError, Rule};
use crate::regex::{Language, Regexp};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: String,
    pub label: Regexp,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gnfa {
    states: Vec<String>,
    sigma: Vec<char>,
    start: String,
    final_state: String,
    edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GnfaError {
    #[error("cannot rip out '{0}': it is the start or final state")]
    RipStartOrFinal(String),
    #[error("unknown state '{0}'")]
    UnknownState(String),
    #[error("edge from '{from}' to '{to}' is labeled {label}, which is neither a singleton nor the empty regexp")]
    NonAtomicLabel {
        from: String,
        to: String,
        label: Regexp,
    },
    #[error("invalid GNFA: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error(transparent)]
    Machine(#[from] NfaError),
}

/// Shortest state name not in `used`.
///
/// Single letters `A`..`Z` are tried first. After that, names are a letter
/// followed by a number: all one-digit suffixes (`A0`..`Z9`) come before
/// any two-digit suffix, and within one length letters are tried
/// alphabetically and then numbers in increasing order.
pub fn fresh_state_name<S: AsRef<str>>(used: &[S]) -> String {
    let taken: BTreeSet<&str> = used.iter().map(|s| s.as_ref()).collect();
    let letters = || ('A'..='Z').map(String::from);
    if let Some(name) = letters().find(|n| !taken.contains(n.as_str())) {
        return name;
    }
    let mut lo: u64 = 0;
    let mut hi: u64 = 10;
    loop {
        for letter in letters() {
            for n in lo..hi {
                let name = format!("{letter}{n}");
                if !taken.contains(name.as_str()) {
                    return name;
                }
            }
        }
        lo = hi;
        hi *= 10;
    }
}

impl Gnfa {
    /// Builds a GNFA and checks its invariants.
    pub fn new(
        states: Vec<String>,
        sigma: Vec<char>,
        start: String,
        final_state: String,
        edges: Vec<Edge>,
    ) -> Result<Gnfa, GnfaError> {
        let g = Gnfa {
            states,
            sigma,
            start,
            final_state,
            edges,
        };
        let problems = g.invariant_violations();
        if problems.is_empty() {
            Ok(g)
        } else {
            Err(GnfaError::Invalid(problems))
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

    pub fn final_state(&self) -> &str {
        &self.final_state
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_state(&self, q: &str) -> bool {
        self.states.iter().any(|s| s == q)
    }

    pub fn label(&self, from: &str, to: &str) -> Option<&Regexp> {
        self.edges
            .iter()
            .find(|e| e.from == from && e.to == to)
            .map(|e| &e.label)
    }

    /// Adds an edge, unioning into an existing parallel edge. Null labels
    /// are dropped.
    pub(crate) fn add_edge(&mut self, from: &str, label: Regexp, to: &str) {
        if label == Regexp::Null {
            return;
        }
        match self.edges.iter_mut().find(|e| e.from == from && e.to == to) {
            Some(existing) => {
                let old = std::mem::replace(&mut existing.label, Regexp::Null);
                existing.label = Regexp::union(old, label);
            }
            None => self.edges.push(Edge {
                from: from.to_string(),
                label,
                to: to.to_string(),
            }),
        }
    }

    pub(crate) fn remove_edge(&mut self, from: &str, to: &str) -> Option<Regexp> {
        let pos = self
            .edges
            .iter()
            .position(|e| e.from == from && e.to == to)?;
        Some(self.edges.remove(pos).label)
    }

    pub(crate) fn add_fresh_state(&mut self) -> String {
        let name = fresh_state_name(&self.states);
        self.states.push(name.clone());
        name
    }

    /// Describes every broken invariant; empty when the GNFA is well formed.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for s in &self.states {
            if !seen.insert(s.as_str()) {
                out.push(format!("state '{s}' is declared more than once"));
            }
        }
        for (what, s) in [("start", &self.start), ("final", &self.final_state)] {
            if !seen.contains(s.as_str()) {
                out.push(format!("{what} state '{s}' is not a state"));
            }
        }
        if self.start == self.final_state {
            out.push("start and final state coincide".to_string());
        }
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            for s in [&e.from, &e.to] {
                if !seen.contains(s.as_str()) {
                    out.push(format!("edge refers to unknown state '{s}'"));
                }
            }
            if !pairs.insert((e.from.as_str(), e.to.as_str())) {
                out.push(format!(
                    "more than one edge from '{}' to '{}'",
                    e.from, e.to
                ));
            }
            if e.label == Regexp::Null {
                out.push(format!(
                    "edge from '{}' to '{}' has a null label",
                    e.from, e.to
                ));
            }
            if e.to == self.start {
                out.push(format!("edge from '{}' enters the start state", e.from));
            }
            if e.from == self.final_state {
                out.push(format!("edge to '{}' leaves the final state", e.to));
            }
            for c in e.label.symbols() {
                if !self.sigma.contains(&c) {
                    out.push(format!("symbol '{c}' is not in the alphabet"));
                }
            }
        }
        out
    }
}

/// The two-state GNFA `S --r--> F`, over the symbols occurring in `r`.
pub fn gnfa_from_regexp(r: &Regexp) -> Gnfa {
    gnfa_from_regexp_over(r, &[])
}

/// Like [`gnfa_from_regexp`], with the alphabet widened by `sigma`.
pub fn gnfa_from_regexp_over(r: &Regexp, sigma: &[char]) -> Gnfa {
    let mut symbols = r.symbols();
    symbols.extend(sigma.iter().copied());
    let mut g = Gnfa {
        states: vec!["S".to_string(), "F".to_string()],
        sigma: symbols.into_iter().collect(),
        start: "S".to_string(),
        final_state: "F".to_string(),
        edges: Vec::new(),
    };
    g.add_edge("S", r.clone(), "F");
    g
}

/// Wraps `m` with a fresh start and a fresh final state joined by empty
/// transitions. Parallel rules collapse into one union-labeled edge in rule
/// order; missing edges stay missing rather than being labeled null.
pub fn gnfa_from_nfa(m: &Nfa) -> Gnfa {
    let mut names: Vec<String> = m.states().to_vec();
    let start = fresh_state_name(&names);
    names.push(start.clone());
    let final_state = fresh_state_name(&names);

    let mut states = Vec::with_capacity(m.states().len() + 2);
    states.push(start.clone());
    states.extend(m.states().iter().cloned());
    states.push(final_state.clone());

    let mut g = Gnfa {
        states,
        sigma: m.sigma().to_vec(),
        start: start.clone(),
        final_state: final_state.clone(),
        edges: Vec::new(),
    };
    g.add_edge(&start, Regexp::Empty, m.start());
    for rule in m.rules() {
        let label = match rule.label {
            Label::Symbol(c) => Regexp::Singleton(c),
            Label::Emp => Regexp::Empty,
        };
        g.add_edge(&rule.from, label, &rule.to);
    }
    for f in m.finals() {
        g.add_edge(f, Regexp::Empty, &final_state);
    }
    g
}

/// Removes `q`, reconnecting each predecessor `p` to each successor `s`.
///
/// The new label is `label(p,q) label(q,s)`, or `label(p,q) loop* label(q,s)`
/// when `q` has a self-loop. A new label joins an existing `(p, s)` edge as
/// the right operand of a union. `p == s` produces a self-loop on `p`.
pub fn rip_state(g: &Gnfa, q: &str) -> Result<Gnfa, GnfaError> {
    if !g.has_state(q) {
        return Err(GnfaError::UnknownState(q.to_string()));
    }
    if q == g.start || q == g.final_state {
        return Err(GnfaError::RipStartOrFinal(q.to_string()));
    }

    let self_loop = g.label(q, q);
    let incoming: Vec<&Edge> = g
        .edges
        .iter()
        .filter(|e| e.to == q && e.from != q)
        .collect();
    let outgoing: Vec<&Edge> = g
        .edges
        .iter()
        .filter(|e| e.from == q && e.to != q)
        .collect();

    let mut bridges = Vec::with_capacity(incoming.len() * outgoing.len());
    for inc in &incoming {
        for out in &outgoing {
            let tail = match self_loop {
                Some(lp) => Regexp::concat(Regexp::star(lp.clone()), out.label.clone()),
                None => out.label.clone(),
            };
            bridges.push((
                inc.from.clone(),
                Regexp::concat(inc.label.clone(), tail),
                out.to.clone(),
            ));
        }
    }

    let mut next = g.clone();
    next.edges.retain(|e| e.from != q && e.to != q);
    next.states.retain(|s| s != q);
    for (p, label, s) in bridges {
        next.add_edge(&p, label, &s);
    }
    Ok(next)
}

/// Whether some start-to-final path spells `word`, each edge consuming a
/// (possibly empty) segment that its label matches.
pub fn gnfa_accepts(g: &Gnfa, word: &[char]) -> bool {
    GnfaMatcher::new(g).accepts(word)
}

/// Every word over the GNFA's alphabet of length at most `maxlen` that
/// [`gnfa_accepts`] accepts.
pub fn enumerate_gnfa_language(g: &Gnfa, maxlen: usize) -> Language {
    let matcher = GnfaMatcher::new(g);
    Word::all_up_to(&g.sigma, maxlen)
        .into_iter()
        .filter(|w| matcher.accepts(w))
        .collect()
}

/// [`gnfa_accepts`] with the adjacency precomputed, for testing many words
/// against one GNFA.
pub struct GnfaMatcher<'g> {
    start: usize,
    final_state: usize,
    out: Vec<Vec<(&'g Regexp, usize)>>,
}

impl<'g> GnfaMatcher<'g> {
    pub fn new(g: &'g Gnfa) -> Self {
        let index: HashMap<&str, usize> = g
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut out = vec![Vec::new(); g.states.len()];
        for e in &g.edges {
            out[index[e.from.as_str()]].push((&e.label, index[e.to.as_str()]));
        }
        GnfaMatcher {
            start: index[g.start.as_str()],
            final_state: index[g.final_state.as_str()],
            out,
        }
    }

    /// Depth-first search over (state, position) pairs, each visited at
    /// most once, which also cuts cycles of empty-segment moves.
    pub fn accepts(&self, word: &[char]) -> bool {
        let n = word.len();
        let mut visited = vec![false; self.out.len() * (n + 1)];
        let mut stack = vec![(self.start, 0usize)];
        visited[self.start * (n + 1)] = true;
        while let Some((p, i)) = stack.pop() {
            if p == self.final_state && i == n {
                return true;
            }
            for &(label, q) in &self.out[p] {
                for j in segment_ends(label, word, i) {
                    let slot = q * (n + 1) + j;
                    if !visited[slot] {
                        visited[slot] = true;
                        stack.push((q, j));
                    }
                }
            }
        }
        false
    }
}

/// Every `j >= i` such that `label` matches `word[i..j]`.
fn segment_ends(label: &Regexp, word: &[char], i: usize) -> Vec<usize> {
    match label {
        Regexp::Empty => vec![i],
        Regexp::Singleton(c) => {
            if word.get(i) == Some(c) {
                vec![i + 1]
            } else {
                Vec::new()
            }
        }
        _ => {
            // derivative by each successive symbol; stop once nothing can match
            let mut ends = Vec::new();
            let mut residual = label.clone();
            let mut j = i;
            loop {
                if residual.nullable() {
                    ends.push(j);
                }
                if j == word.len() {
                    break;
                }
                residual = residual.derivative(word[j]);
                if residual == Regexp::Null {
                    break;
                }
                j += 1;
            }
            ends
        }
    }
}

/// Reads an all-atomic GNFA back as an NFA whose only final state is the
/// GNFA's final state.
pub fn gnfa_to_nfa(g: &Gnfa) -> Result<Nfa, GnfaError> {
    let mut rules = Vec::with_capacity(g.edges.len());
    for e in &g.edges {
        let label = match e.label {
            Regexp::Singleton(c) => Label::Symbol(c),
            Regexp::Empty => Label::Emp,
            _ => {
                return Err(GnfaError::NonAtomicLabel {
                    from: e.from.clone(),
                    to: e.to.clone(),
                    label: e.label.clone(),
                })
            }
        };
        rules.push(Rule::new(e.from.clone(), label, e.to.clone()));
    }
    Ok(Nfa::new(
        g.states.clone(),
        g.sigma.clone(),
        g.start.clone(),
        vec![g.final_state.clone()],
        rules,
    )?)
}

#[derive(Serialize, Deserialize)]
struct RawGnfa {
    states: Vec<String>,
    sigma: Vec<char>,
    start: String,
    #[serde(rename = "final")]
    final_state: String,
    rules: Vec<(String, Regexp, String)>,
}

impl Serialize for Gnfa {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawGnfa {
            states: self.states.clone(),
            sigma: self.sigma.clone(),
            start: self.start.clone(),
            final_state: self.final_state.clone(),
            rules: self
                .edges
                .iter()
                .map(|e| (e.from.clone(), e.label.clone(), e.to.clone()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Gnfa {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawGnfa::deserialize(deserializer)?;
        let edges = raw
            .rules
            .into_iter()
            .map(|(from, label, to)| Edge { from, label, to })
            .collect();
        Gnfa::new(raw.states, raw.sigma, raw.start, raw.final_state, edges)
            .map_err(serde::de::Error::custom)
    }
}
