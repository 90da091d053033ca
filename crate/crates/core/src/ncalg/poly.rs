//! Noncommutative polynomials: finite Scalar-linear combinations of words.

use super::Word;
use crate::qfield::Scalar;
use std::collections::BTreeMap;

/// A finite linear combination of words with nonzero coefficients. The map
/// is keyed by the monomial order, so the last entry is the leading term and
/// structural equality is equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> NCPoly {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> NCPoly {
        NCPoly::from_word(Word::unit())
    }

    pub fn gen(i: u8) -> NCPoly {
        NCPoly::from_word(Word::gen(i))
    }

    pub fn from_word(w: Word) -> NCPoly {
        NCPoly::from_term(w, Scalar::one())
    }

    pub fn from_term(w: Word, c: Scalar) -> NCPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn scalar(c: Scalar) -> NCPoly {
        NCPoly::from_term(Word::unit(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Word::unit())
                .map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Word length of the largest word, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// Leading term in the graded-lex order.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &NCPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_assign_scaled(&mut self, other: &NCPoly, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), factor * c);
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-&Scalar::one());
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&-&Scalar::one())
    }

    pub fn scale(&self, factor: &Scalar) -> NCPoly {
        if factor.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), factor * c))
                .collect(),
        }
    }

    /// Raw concatenation product, no rewriting.
    pub fn mul_raw(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Apply a scalar-valued, multiplicative character determined by its
    /// values on generators (used for counits).
    pub fn apply_character(&self, values: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for (w, c) in &self.terms {
            let mut v = c.clone();
            for &g in &w.0 {
                v = &v * &values[g as usize];
                if v.is_zero() {
                    break;
                }
            }
            total = &total + &v;
        }
        total
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // leading term first: iterate descending
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let coeff_str = c.to_string();
            let (sign, mag) = match coeff_str.strip_prefix('-') {
                // only plain leading minus on a monomial-style rendering is peeled
                Some(rest) if !coeff_str.starts_with("(-") && !rest.contains(" - ") && !rest.contains(" + ") => {
                    ("-", rest.to_string())
                }
                _ => ("", coeff_str),
            };
            if i == 0 {
                out.push_str(sign);
            } else if sign == "-" {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let needs_parens = mag.contains(' ') && !mag.starts_with('(');
            if w.is_empty() {
                if needs_parens {
                    out.push_str(&format!("({})", mag));
                } else {
                    out.push_str(&mag);
                }
            } else if mag == "1" {
                out.push_str(&w.render(names));
            } else {
                if needs_parens {
                    out.push_str(&format!("({})", mag));
                } else {
                    out.push_str(&mag);
                }
                out.push('*');
                out.push_str(&w.render(names));
            }
        }
        out
    }
}

impl std::fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| format!("{:?}·{:?}", c, w))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_never_stored() {
        let mut p = NCPoly::gen(0);
        p.add_term(Word::gen(0), -&Scalar::one());
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn leading_term_is_graded_lex_max() {
        let mut p = NCPoly::one();
        p.add_term(Word(vec![1, 0]), Scalar::q());
        p.add_term(Word(vec![0, 1]), Scalar::from_int(3));
        let (w, _) = p.leading().unwrap();
        assert_eq!(w, &Word(vec![1, 0]));
    }

    #[test]
    fn rendering() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let mut p = NCPoly::from_term(Word(vec![0, 1]), Scalar::q());
        p.add_term(Word::unit(), -&Scalar::one());
        assert_eq!(p.render(&names), "q*a*b - 1");
    }
}
