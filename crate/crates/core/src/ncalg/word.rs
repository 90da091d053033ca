//! Words in algebra generators with the graded-lexicographic order.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A word in generator indices; the empty word is the unit. Ordered by
/// length first, then lexicographically in the fixed generator order, so the
/// `Ord` instance *is* the monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn gen(i: u8) -> Word {
        Word(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, e: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * e);
        for _ in 0..e {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// Does `sub` occur starting at `pos`?
    pub fn matches_at(&self, sub: &Word, pos: usize) -> bool {
        pos + sub.0.len() <= self.0.len() && self.0[pos..pos + sub.0.len()] == sub.0[..]
    }

    pub fn ends_with(&self, sub: &Word) -> bool {
        self.0.len() >= sub.0.len() && self.matches_at(sub, self.0.len() - sub.0.len())
    }

    /// Replace `len` letters at `pos` by nothing, returning the two framing
    /// pieces (prefix, suffix).
    pub fn split_around(&self, pos: usize, len: usize) -> (Word, Word) {
        (
            Word(self.0[..pos].to_vec()),
            Word(self.0[pos + len..].to_vec()),
        )
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&i| names[i as usize].as_str())
            .collect::<Vec<_>>()
            .join("*")
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

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let ab = Word(vec![0, 1]);
        let ba = Word(vec![1, 0]);
        let c = Word(vec![2]);
        assert!(c < ab, "shorter words come first");
        assert!(ab < ba);
        assert!(Word::unit() < c);
    }

    #[test]
    fn matching() {
        let w = Word(vec![0, 1, 2, 1]);
        assert!(w.matches_at(&Word(vec![1, 2]), 1));
        assert!(!w.matches_at(&Word(vec![1, 2]), 2));
        assert!(w.ends_with(&Word(vec![2, 1])));
    }
}
