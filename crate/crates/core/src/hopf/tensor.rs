//! Tensor-square and tensor-cube elements in canonical expanded form: every
//! leg is written over normal words, so structural equality is equality.

use crate::ncalg::{NCPoly, RewriteError, RewriteSystem, Word};
use crate::qfield::Scalar;
use std::collections::BTreeMap;

/// Element of a two-fold tensor product of presented algebras, fully
/// expanded: a map from word pairs to nonzero scalars.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorElement {
    pub fn zero() -> TensorElement {
        TensorElement::default()
    }

    pub fn unit() -> TensorElement {
        let mut t = TensorElement::zero();
        t.add_term(Word::unit(), Word::unit(), Scalar::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &TensorElement) {
        for ((l, r), c) in &other.terms {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
    }

    pub fn add_assign_scaled(&mut self, other: &TensorElement, factor: &Scalar) {
        for ((l, r), c) in &other.terms {
            self.add_term(l.clone(), r.clone(), factor * c);
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-&Scalar::one());
        out
    }

    pub fn scale(&self, factor: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero();
        out.add_assign_scaled(self, factor);
        out
    }

    /// Expand `p (x) r`, scaled by `c`, into this element. Inputs are taken
    /// as already-normal polynomials.
    pub fn add_pair(&mut self, p: &NCPoly, r: &NCPoly, c: &Scalar) {
        for (wl, cl) in p.terms() {
            for (wr, cr) in r.terms() {
                self.add_term(wl.clone(), wr.clone(), &(c * cl) * cr);
            }
        }
    }

    pub fn from_pair(p: &NCPoly, r: &NCPoly) -> TensorElement {
        let mut t = TensorElement::zero();
        t.add_pair(p, r, &Scalar::one());
        t
    }

    /// Re-normalize both legs after raw construction.
    pub fn normalized(
        &self,
        left: &RewriteSystem,
        right: &RewriteSystem,
        cap: usize,
    ) -> Result<TensorElement, RewriteError> {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            let ln = left.normal_form(&NCPoly::from_word(l.clone()), cap)?;
            let rn = right.normal_form(&NCPoly::from_word(r.clone()), cap)?;
            out.add_pair(&ln, &rn, c);
        }
        Ok(out)
    }

    /// Componentwise product `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn mul(
        &self,
        other: &TensorElement,
        left: &RewriteSystem,
        right: &RewriteSystem,
        cap: usize,
    ) -> Result<TensorElement, RewriteError> {
        let mut out = TensorElement::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let lp = left.multiply(
                    &NCPoly::from_word(l1.clone()),
                    &NCPoly::from_word(l2.clone()),
                    cap,
                )?;
                let rp = right.multiply(
                    &NCPoly::from_word(r1.clone()),
                    &NCPoly::from_word(r2.clone()),
                    cap,
                )?;
                out.add_pair(&lp, &rp, &(c1 * c2));
            }
        }
        Ok(out)
    }

    /// Replace the left leg word-by-word via `f` (e.g. an antipode or a
    /// projection), re-expanding into canonical form.
    pub fn transform_left<E>(
        &self,
        mut f: impl FnMut(&Word) -> Result<NCPoly, E>,
    ) -> Result<TensorElement, E> {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            let lp = f(l)?;
            for (wl, cl) in lp.terms() {
                out.add_term(wl.clone(), r.clone(), c * cl);
            }
        }
        Ok(out)
    }

    pub fn transform_right<E>(
        &self,
        mut f: impl FnMut(&Word) -> Result<NCPoly, E>,
    ) -> Result<TensorElement, E> {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            let rp = f(r)?;
            for (wr, cr) in rp.terms() {
                out.add_term(l.clone(), wr.clone(), c * cr);
            }
        }
        Ok(out)
    }

    /// Multiply the two legs together inside one algebra: `a (x) b -> ab`.
    pub fn contract(
        &self,
        sys: &RewriteSystem,
        cap: usize,
    ) -> Result<NCPoly, RewriteError> {
        let mut out = NCPoly::zero();
        for ((l, r), c) in &self.terms {
            let p = sys.multiply(&NCPoly::from_word(l.clone()), &NCPoly::from_word(r.clone()), cap)?;
            out.add_assign_scaled(&p, c);
        }
        Ok(out)
    }

    /// Apply a character (counit) to the left leg, leaving a polynomial in
    /// the right algebra.
    pub fn counit_left(&self, values: &[Scalar]) -> NCPoly {
        let mut out = NCPoly::zero();
        for ((l, r), c) in &self.terms {
            let v = NCPoly::from_word(l.clone()).apply_character(values);
            out.add_term(r.clone(), &v * c);
        }
        out
    }

    pub fn counit_right(&self, values: &[Scalar]) -> NCPoly {
        let mut out = NCPoly::zero();
        for ((l, r), c) in &self.terms {
            let v = NCPoly::from_word(r.clone()).apply_character(values);
            out.add_term(l.clone(), &v * c);
        }
        out
    }

    /// Swap the legs.
    pub fn flip(&self) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Group the element by right-leg word: right word -> left polynomial.
    pub fn collect_by_right(&self) -> BTreeMap<Word, NCPoly> {
        let mut out: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry(r.clone())
                .or_default()
                .add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn render(&self, left_names: &[String], right_names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (r, lp) in self.collect_by_right() {
            let ls = lp.render(left_names);
            let ls = if lp.num_terms() > 1 {
                format!("({})", ls)
            } else {
                ls
            };
            parts.push(format!("{} (x) {}", ls, r.render(right_names)));
        }
        parts.join(" + ")
    }
}

impl std::fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((l, r), c)| format!("{:?}·{:?}(x){:?}", c, l, r))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of a three-fold tensor product, canonical expanded form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Tensor3 {
    terms: BTreeMap<(Word, Word, Word), Scalar>,
}

impl Tensor3 {
    pub fn zero() -> Tensor3 {
        Tensor3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b, c)) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let s = &*e.get() + &coeff;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        for ((a, b, c), coeff) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone(), -coeff);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word, Word), &Scalar)> {
        self.terms.iter()
    }

    /// Expand a tensor-square element into legs (1,2), placing `w3` third.
    pub fn add_left_pair(&mut self, t: &TensorElement, w3: &Word, factor: &Scalar) {
        for ((a, b), c) in t.terms() {
            self.add_term(a.clone(), b.clone(), w3.clone(), factor * c);
        }
    }

    /// Expand a tensor-square element into legs (2,3), placing `w1` first.
    pub fn add_right_pair(&mut self, w1: &Word, t: &TensorElement, factor: &Scalar) {
        for ((a, b), c) in t.terms() {
            self.add_term(w1.clone(), a.clone(), b.clone(), factor * c);
        }
    }
}

impl std::fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b, c), coeff)| {
                format!("{:?}·{:?}(x){:?}(x){:?}", coeff, a, b, c)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
