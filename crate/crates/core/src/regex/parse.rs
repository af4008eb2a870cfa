//! Text syntax:
//!
//! ```text
//! union  := concat (('U' | '|') concat)*
//! concat := starred starred*
//! starred:= atom '*'*
//! atom   := symbol | '!' | '~' | '(' union ')'
//! ```
//!
//! Symbols are single alphanumeric characters other than `U`. Whitespace
//! between tokens is ignored.

use std::str::FromStr;

use thiserror::Error;

use super::Regexp;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("symbol '{0}' is not in the alphabet")]
    SymbolNotInAlphabet(char),
}

/// Parses `text`, rejecting any singleton outside `sigma` when an alphabet is given.
pub fn parse_regexp(text: &str, sigma: Option<&[char]>) -> Result<Regexp, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        sigma,
    };
    let r = p.union()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(r),
        Some(c) => Err(p.error(ParseErrorKind::UnexpectedChar(c))),
    }
}

impl FromStr for Regexp {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_regexp(s, None)
    }
}

pub(crate) fn is_symbol_char(c: char) -> bool {
    c.is_alphanumeric() && c != 'U'
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    sigma: Option<&'a [char]>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn union(&mut self) -> Result<Regexp, ParseError> {
        let mut acc = self.concat()?;
        while matches!(self.peek(), Some('U' | '|')) {
            self.pos += 1;
            let rhs = self.concat()?;
            acc = Regexp::union(acc, rhs);
        }
        Ok(acc)
    }

    fn concat(&mut self) -> Result<Regexp, ParseError> {
        let mut acc = self.starred()?;
        while self
            .peek()
            .is_some_and(|c| is_symbol_char(c) || matches!(c, '!' | '~' | '('))
        {
            let rhs = self.starred()?;
            acc = Regexp::concat(acc, rhs);
        }
        Ok(acc)
    }

    fn starred(&mut self) -> Result<Regexp, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = Regexp::star(acc);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Regexp, ParseError> {
        let c = match self.peek() {
            Some(c) => c,
            None => return Err(self.error(ParseErrorKind::UnexpectedEnd)),
        };
        match c {
            '!' => {
                self.pos += 1;
                Ok(Regexp::Empty)
            }
            '~' => {
                self.pos += 1;
                Ok(Regexp::Null)
            }
            '(' => {
                self.pos += 1;
                let inner = self.union()?;
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(other) => Err(self.error(ParseErrorKind::UnexpectedChar(other))),
                    None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
                }
            }
            c if is_symbol_char(c) => {
                if let Some(sigma) = self.sigma {
                    if !sigma.contains(&c) {
                        return Err(self.error(ParseErrorKind::SymbolNotInAlphabet(c)));
                    }
                }
                self.pos += 1;
                Ok(Regexp::Singleton(c))
            }
            other => Err(self.error(ParseErrorKind::UnexpectedChar(other))),
        }
    }
}
