//! Bounded languages, computed bottom-up over the regexp's distinct subterms.
//!
//! Regexps produced by state ripping repeat the same subterms many times, so
//! the tree is first interned into a DAG and each distinct node's language
//! (restricted to short words) is computed once.

use std::collections::{BTreeSet, HashMap};

use super::{Language, Regexp};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Null,
    Empty,
    Symbol(char),
    Union(usize, usize),
    Concat(usize, usize),
    Star(usize),
}

#[derive(Default)]
struct Dag {
    ids: HashMap<Node, usize>,
    nodes: Vec<Node>,
}

impl Dag {
    /// Children always receive smaller ids than their parents.
    fn intern(&mut self, r: &Regexp) -> usize {
        let node = match r {
            Regexp::Null => Node::Null,
            Regexp::Empty => Node::Empty,
            Regexp::Singleton(c) => Node::Symbol(*c),
            Regexp::Union(l, rt) => Node::Union(self.intern(l), self.intern(rt)),
            Regexp::Concat(l, rt) => Node::Concat(self.intern(l), self.intern(rt)),
            Regexp::Star(inner) => Node::Star(self.intern(inner)),
        };
        if let Some(&id) = self.ids.get(&node) {
            return id;
        }
        self.nodes.push(node);
        self.ids.insert(node, self.nodes.len() - 1);
        self.nodes.len() - 1
    }
}

/// `{ w over sigma : |w| <= maxlen, w ∈ L(r) }`.
pub fn enumerate_regexp_language(r: &Regexp, maxlen: usize, sigma: &[char]) -> Language {
    let mut dag = Dag::default();
    let root = dag.intern(r);
    let mut langs: Vec<Language> = Vec::with_capacity(dag.nodes.len());
    for node in &dag.nodes {
        let lang = match *node {
            Node::Null => Language::new(),
            Node::Empty => BTreeSet::from([Word::empty()]),
            Node::Symbol(c) if maxlen > 0 && sigma.contains(&c) => {
                BTreeSet::from([Word::from(vec![c])])
            }
            Node::Symbol(_) => Language::new(),
            Node::Union(a, b) => langs[a].union(&langs[b]).cloned().collect(),
            Node::Concat(a, b) => concat(&langs[a], &langs[b], maxlen),
            Node::Star(a) => star(&langs[a], maxlen),
        };
        langs.push(lang);
    }
    langs.swap_remove(root)
}

fn concat(a: &Language, b: &Language, maxlen: usize) -> Language {
    let mut out = Language::new();
    for u in a {
        // `b` iterates shortest first, so stop at the first word too long
        for v in b.iter().take_while(|v| u.len() + v.len() <= maxlen) {
            out.insert(u.iter().chain(v.iter()).copied().collect());
        }
    }
    out
}

fn star(a: &Language, maxlen: usize) -> Language {
    let mut nonempty = a.clone();
    nonempty.remove(&Word::empty());
    let mut out = BTreeSet::from([Word::empty()]);
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        frontier = concat(&frontier, &nonempty, maxlen)
            .into_iter()
            .filter(|w| !out.contains(w))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lang(ws: &[&str]) -> Language {
        ws.iter().map(|w| Word::from(*w)).collect()
    }

    #[test]
    fn concat_respects_the_bound() {
        let r: Regexp = "(a U bb)(a U bb)".parse().unwrap();
        assert_eq!(
            enumerate_regexp_language(&r, 3, &['a', 'b']),
            lang(&["aa", "abb", "bba"])
        );
    }

    #[test]
    fn star_of_nullable() {
        let r: Regexp = "(! U ab)*".parse().unwrap();
        assert_eq!(
            enumerate_regexp_language(&r, 4, &['a', 'b']),
            lang(&["", "ab", "abab"])
        );
    }

    #[test]
    fn symbols_outside_sigma_never_appear() {
        let r: Regexp = "a U c".parse().unwrap();
        assert_eq!(enumerate_regexp_language(&r, 2, &['a', 'b']), lang(&["a"]));
        assert_eq!(enumerate_regexp_language(&r, 0, &['a']), Language::new());
    }

    #[test]
    fn shared_subterms_are_interned_once() {
        let x: Regexp = "(ab U c)*".parse().unwrap();
        let r = Regexp::union(Regexp::concat(x.clone(), x.clone()), x.clone());
        let mut dag = Dag::default();
        let mut alone = Dag::default();
        dag.intern(&r);
        alone.intern(&x);
        assert_eq!(dag.nodes.len(), alone.nodes.len() + 2);
    }
}
