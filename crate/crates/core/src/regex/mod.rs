//! The regular-expression algebra.
//!
//! A [`Regexp`] is one of six varieties: the null regexp (empty language),
//! the empty-word regexp, a single symbol, union, concatenation and Kleene
//! star. Text syntax is handled by [`parse_regexp`] / [`render_regexp`],
//! membership by Brzozowski derivatives ([`matches`]), and bounded language
//! enumeration by [`enumerate_regexp_language`].

mod bounded;
mod generate;
mod json;
mod matching;
mod parse;
mod simplify;

use std::collections::BTreeSet;
use std::fmt;

pub use bounded::enumerate_regexp_language;
pub use generate::{gen_word, GenError, DEFAULT_MAX_STAR_REPS};
pub use matching::matches;
pub(crate) use parse::is_symbol_char;
pub use parse::{parse_regexp, ParseError, ParseErrorKind};
pub use simplify::simplify;

use crate::word::Word;

/// A regular expression tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regexp {
    /// The empty language, written `~`.
    Null,
    /// The language containing only the empty word, written `!`.
    Empty,
    Singleton(char),
    Union(Box<Regexp>, Box<Regexp>),
    Concat(Box<Regexp>, Box<Regexp>),
    Star(Box<Regexp>),
}

impl Regexp {
    pub fn singleton(symbol: char) -> Self {
        Regexp::Singleton(symbol)
    }

    pub fn union(left: Regexp, right: Regexp) -> Self {
        Regexp::Union(Box::new(left), Box::new(right))
    }

    pub fn concat(left: Regexp, right: Regexp) -> Self {
        Regexp::Concat(Box::new(left), Box::new(right))
    }

    pub fn star(inner: Regexp) -> Self {
        Regexp::Star(Box::new(inner))
    }

    /// Left-folds `parts` with [`Regexp::union`]; an empty iterator yields `Null`.
    pub fn union_all<I: IntoIterator<Item = Regexp>>(parts: I) -> Self {
        parts
            .into_iter()
            .reduce(Regexp::union)
            .unwrap_or(Regexp::Null)
    }

    /// Singleton and empty-word regexps cannot be decomposed any further.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Regexp::Singleton(_) | Regexp::Empty)
    }

    /// Union, concatenation and star labels can be expanded into sub-GNFAs.
    pub fn is_decomposable(&self) -> bool {
        matches!(
            self,
            Regexp::Union(..) | Regexp::Concat(..) | Regexp::Star(_)
        )
    }

    /// Whether the empty word is in the language.
    pub fn nullable(&self) -> bool {
        match self {
            Regexp::Null | Regexp::Singleton(_) => false,
            Regexp::Empty | Regexp::Star(_) => true,
            Regexp::Union(l, r) => l.nullable() || r.nullable(),
            Regexp::Concat(l, r) => l.nullable() && r.nullable(),
        }
    }

    /// Whether the language is empty. Decided structurally, without simplifying.
    pub fn is_empty_language(&self) -> bool {
        match self {
            Regexp::Null => true,
            Regexp::Empty | Regexp::Singleton(_) | Regexp::Star(_) => false,
            Regexp::Union(l, r) => l.is_empty_language() && r.is_empty_language(),
            Regexp::Concat(l, r) => l.is_empty_language() || r.is_empty_language(),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Regexp::Null | Regexp::Empty | Regexp::Singleton(_) => 1,
            Regexp::Union(l, r) | Regexp::Concat(l, r) => 1 + l.size() + r.size(),
            Regexp::Star(inner) => 1 + inner.size(),
        }
    }

    /// Every symbol occurring in a singleton, in sorted order.
    pub fn symbols(&self) -> BTreeSet<char> {
        let mut acc = BTreeSet::new();
        self.collect_symbols(&mut acc);
        acc
    }

    fn collect_symbols(&self, acc: &mut BTreeSet<char>) {
        match self {
            Regexp::Null | Regexp::Empty => {}
            Regexp::Singleton(c) => {
                acc.insert(*c);
            }
            Regexp::Union(l, r) | Regexp::Concat(l, r) => {
                l.collect_symbols(acc);
                r.collect_symbols(acc);
            }
            Regexp::Star(inner) => inner.collect_symbols(acc),
        }
    }

    /// Brzozowski derivative with respect to `symbol`.
    ///
    /// The result is built with normalizing constructors so repeated
    /// derivatives stay small; it is language-equal to the textbook
    /// derivative, not structurally equal.
    pub fn derivative(&self, symbol: char) -> Regexp {
        matching::derivative(self, symbol)
    }

    /// Whether `word` is in the language. Same as [`matches`].
    pub fn matches(&self, word: &[char]) -> bool {
        matches(self, word)
    }
}

/// Renders `r` in the text grammar accepted by [`parse_regexp`].
///
/// Union is printed as ` U `, concatenation by juxtaposition. Parentheses
/// appear only where precedence or associativity would otherwise change
/// the parsed tree.
pub fn render_regexp(r: &Regexp) -> String {
    let mut out = String::new();
    write_regexp(r, Prec::Union, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    Union,
    Concat,
    Star,
}

fn prec_of(r: &Regexp) -> Prec {
    match r {
        Regexp::Union(..) => Prec::Union,
        Regexp::Concat(..) => Prec::Concat,
        _ => Prec::Star,
    }
}

fn write_regexp(r: &Regexp, ctx: Prec, out: &mut String) {
    let wrap = prec_of(r) < ctx;
    if wrap {
        out.push('(');
    }
    match r {
        Regexp::Null => out.push('~'),
        Regexp::Empty => out.push('!'),
        Regexp::Singleton(c) => out.push(*c),
        // Both operators are left-associative, so a right child of the same
        // operator needs parentheses to survive a round trip.
        Regexp::Union(l, rt) => {
            write_regexp(l, Prec::Union, out);
            out.push_str(" U ");
            write_regexp(rt, Prec::Concat, out);
        }
        Regexp::Concat(l, rt) => {
            write_regexp(l, Prec::Concat, out);
            write_regexp(rt, Prec::Star, out);
        }
        Regexp::Star(inner) => {
            write_star_operand(inner, out);
            out.push('*');
        }
    }
    if wrap {
        out.push(')');
    }
}

fn write_star_operand(inner: &Regexp, out: &mut String) {
    match inner {
        Regexp::Null | Regexp::Empty | Regexp::Singleton(_) | Regexp::Star(_) => {
            write_regexp(inner, Prec::Star, out)
        }
        _ => {
            out.push('(');
            write_regexp(inner, Prec::Union, out);
            out.push(')');
        }
    }
}

impl fmt::Display for Regexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_regexp(self))
    }
}

/// A finite set of words, iterated shortest first.
pub type Language = BTreeSet<Word>;
