use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

/// A finite sequence of alphabet symbols. The empty word is ε.
///
/// Words order shortlex: shorter words first, then lexicographically. A
/// `BTreeSet<Word>` therefore iterates shortest words first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<char>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    pub fn push(&mut self, symbol: char) {
        self.0.push(symbol);
    }

    pub fn pop(&mut self) -> Option<char> {
        self.0.pop()
    }

    /// Every word over `sigma` of length at most `maxlen`, in shortlex order.
    pub fn all_up_to(sigma: &[char], maxlen: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..maxlen {
            let mut next = Vec::with_capacity(layer.len() * sigma.len());
            for w in &layer {
                for &c in sigma {
                    let mut longer = w.clone();
                    longer.push(c);
                    next.push(longer);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl Deref for Word {
    type Target = [char];

    fn deref(&self) -> &[char] {
        &self.0
    }
}

impl From<Vec<char>> for Word {
    fn from(v: Vec<char>) -> Self {
        Word(v)
    }
}

impl From<&[char]> for Word {
    fn from(v: &[char]) -> Self {
        Word(v.to_vec())
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl FromIterator<char> for Word {
    fn from_iter<I: IntoIterator<Item = char>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn shortlex() {
        let set: BTreeSet<Word> = ["ba", "b", "", "ab", "a"]
            .into_iter()
            .map(Word::from)
            .collect();
        let order: Vec<String> = set.iter().map(|w| w.to_string()).collect();
        assert_eq!(order, ["ε", "a", "b", "ab", "ba"]);
    }

    #[test]
    fn all_up_to_counts() {
        assert_eq!(Word::all_up_to(&['a', 'b'], 2).len(), 7);
        assert_eq!(Word::all_up_to(&['a', 'b', 'c'], 5).len(), 364);
        assert_eq!(Word::all_up_to(&[], 3), vec![Word::empty()]);
    }
}
