//! Comodule algebra structure: coactions, coinvariants, gradings by
//! grouplike exponents, finite-dimensional comodules, cotensor products, and
//! the coinvariant-quotient functor `F -> F / B+ F`.

use super::linalg::{Matrix, RowSpace, WordIndex};
use super::presentation::HopfPresentation;
use super::tensor::TensorElement;
use super::HopfError;
use crate::ncalg::{NCPoly, RewriteSystem, Word};
use crate::qfield::Scalar;
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

/// A right coaction `A -> A (x) H` of a Hopf presentation on another,
/// determined by generator images and extended multiplicatively.
pub struct Coaction {
    pub source: Rc<HopfPresentation>,
    pub target: Rc<HopfPresentation>,
    images: Vec<TensorElement>,
    cache: RefCell<HashMap<Word, TensorElement>>,
}

impl Clone for Coaction {
    fn clone(&self) -> Self {
        Coaction {
            source: Rc::clone(&self.source),
            target: Rc::clone(&self.target),
            images: self.images.clone(),
            cache: RefCell::new(HashMap::new()),
        }
    }
}

impl Coaction {
    /// Build and validate: the map must respect the source relations, and
    /// satisfy coassociativity and the counit law on generators.
    pub fn new(
        source: Rc<HopfPresentation>,
        target: Rc<HopfPresentation>,
        images: Vec<TensorElement>,
        check_cap: usize,
    ) -> Result<Coaction, HopfError> {
        assert_eq!(images.len(), source.algebra.n_gens());
        let co = Coaction {
            source,
            target,
            images,
            cache: RefCell::new(HashMap::new()),
        };
        co.validate(check_cap)?;
        Ok(co)
    }

    fn validate(&self, check_cap: usize) -> Result<(), HopfError> {
        // algebra map: both sides of every source rule agree
        for rule in self.source.algebra.system.rules().to_vec() {
            let l = self.coact(&NCPoly::from_word(rule.lhs.clone()), check_cap)?;
            let r = self.coact(&rule.rhs, check_cap)?;
            if l != r {
                return Err(HopfError::CoactionInvalid {
                    message: format!(
                        "rule {} = {} not respected",
                        self.source.algebra.render_word(&rule.lhs),
                        self.source.algebra.render_poly(&rule.rhs)
                    ),
                });
            }
        }
        for i in 0..self.images.len() {
            let img = &self.images[i];
            // counit law: (id (x) eps) rho = id
            let back = img.counit_right(self.target.counit_values());
            if back != NCPoly::gen(i as u8) {
                return Err(HopfError::CoactionInvalid {
                    message: format!(
                        "counit law fails on generator {}",
                        self.source.algebra.gen_names()[i as usize]
                    ),
                });
            }
            // coassociativity: (rho (x) id) rho = (id (x) Delta) rho
            let mut lhs = super::tensor::Tensor3::zero();
            for ((a, h), c) in img.terms() {
                lhs.add_left_pair(&self.coact_word(a)?, h, c);
            }
            let mut rhs = super::tensor::Tensor3::zero();
            for ((a, h), c) in img.terms() {
                rhs.add_right_pair(a, &self.target.delta_word(h)?, c);
            }
            if lhs != rhs {
                return Err(HopfError::CoactionInvalid {
                    message: format!(
                        "coassociativity fails on generator {}",
                        self.source.algebra.gen_names()[i as usize]
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn images(&self) -> &[TensorElement] {
        &self.images
    }

    pub fn coact_word(&self, w: &Word) -> Result<TensorElement, HopfError> {
        if let Some(t) = self.cache.borrow().get(w) {
            return Ok(t.clone());
        }
        let cap_a = self.source.cap();
        let cap_h = self.target.cap();
        let sys_a = self.source.system();
        let sys_h = self.target.system();
        let mut acc = TensorElement::unit();
        for &g in &w.0 {
            // legs live in different algebras, so multiply them separately
            let mut next = TensorElement::zero();
            for ((a1, h1), c1) in acc.terms() {
                for ((a2, h2), c2) in self.images[g as usize].terms() {
                    let ap = sys_a
                        .multiply(
                            &NCPoly::from_word(a1.clone()),
                            &NCPoly::from_word(a2.clone()),
                            cap_a,
                        )
                        .map_err(HopfError::Rewrite)?;
                    let hp = sys_h
                        .multiply(
                            &NCPoly::from_word(h1.clone()),
                            &NCPoly::from_word(h2.clone()),
                            cap_h,
                        )
                        .map_err(HopfError::Rewrite)?;
                    next.add_pair(&ap, &hp, &(c1 * c2));
                }
            }
            acc = next;
        }
        self.cache.borrow_mut().insert(w.clone(), acc.clone());
        Ok(acc)
    }

    pub fn coact(&self, p: &NCPoly, cap: usize) -> Result<TensorElement, HopfError> {
        if let Some(d) = p.degree() {
            if d > cap {
                return Err(HopfError::Rewrite(
                    crate::ncalg::RewriteError::CapExceeded { cap, needed: d },
                ));
            }
        }
        let mut out = TensorElement::zero();
        for (w, c) in p.terms() {
            out.add_assign_scaled(&self.coact_word(w)?, c);
        }
        Ok(out)
    }

    /// A coaction is diagonal when every generator maps to `g (x) (word)`;
    /// these induce gradings and admit fast weight arithmetic.
    pub fn diagonal_exponents(&self) -> Option<Vec<Word>> {
        let mut out = Vec::with_capacity(self.images.len());
        for (i, img) in self.images.iter().enumerate() {
            if img.num_terms() != 1 {
                return None;
            }
            let ((a, h), c) = img.terms().next().unwrap();
            if a != &Word::gen(i as u8) || !c.is_one() {
                return None;
            }
            out.push(h.clone());
        }
        Some(out)
    }
}

/// Exact basis of the degree-`d` coinvariants `{x : rho(x) = x (x) 1}`,
/// computed as the kernel of a scalar matrix over the basis words.
pub fn coinvariants(
    coaction: &Coaction,
    degree: usize,
) -> Result<Vec<NCPoly>, HopfError> {
    let sys = coaction.source.system();
    let basis = sys.basis_words(degree);
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut row_index: WordIndex = WordIndex::new();
    let mut pair_rows: HashMap<(usize, usize), usize> = HashMap::new();
    let mut a_index = WordIndex::new();
    let mut entries: Vec<((usize, usize), usize, Scalar)> = Vec::new(); // ((a,h) row key, col, coeff)
    for (col, w) in basis.iter().enumerate() {
        let t = coaction.coact_word(w)?;
        for ((a, h), c) in t.terms() {
            let ai = a_index.intern(a);
            let hi = row_index.intern(h);
            entries.push(((ai, hi), col, c.clone()));
        }
        // subtract x (x) 1
        let ai = a_index.intern(w);
        let hi = row_index.intern(&Word::unit());
        entries.push(((ai, hi), col, -&Scalar::one()));
    }
    let mut next_row = 0usize;
    for (key, _, _) in &entries {
        pair_rows.entry(*key).or_insert_with(|| {
            let r = next_row;
            next_row += 1;
            r
        });
    }
    let mut m = Matrix::zero(next_row, basis.len());
    for (key, col, c) in entries {
        let r = pair_rows[&key];
        m.rows[r][col] = &m.rows[r][col] + &c;
    }
    let kernel = m.kernel_basis();
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut p = NCPoly::zero();
            for (i, c) in v.into_iter().enumerate() {
                p.add_term(basis[i].clone(), c);
            }
            p
        })
        .collect())
}

/// An algebra grading by an abelian group `Z^k`, induced by per-generator
/// degrees. Every rewrite rule must be homogeneous.
#[derive(Debug, Clone, serde::Serialize)]
pub struct GradedDecomposition {
    pub k: usize,
    gen_degrees: Vec<Vec<i64>>,
}

impl GradedDecomposition {
    pub fn new(
        k: usize,
        gen_degrees: Vec<Vec<i64>>,
        system: &RewriteSystem,
    ) -> Result<GradedDecomposition, HopfError> {
        let g = GradedDecomposition { k, gen_degrees };
        for rule in system.rules() {
            let d = g.word_degree(&rule.lhs);
            for (w, _) in rule.rhs.terms() {
                if g.word_degree(w) != d {
                    return Err(HopfError::NotHomogeneous {
                        rule: format!("{:?}", rule.lhs),
                    });
                }
            }
        }
        Ok(g)
    }

    pub fn gen_degrees(&self) -> &[Vec<i64>] {
        &self.gen_degrees
    }

    pub fn word_degree(&self, w: &Word) -> Vec<i64> {
        let mut d = vec![0i64; self.k];
        for &g in &w.0 {
            for (i, v) in self.gen_degrees[g as usize].iter().enumerate() {
                d[i] += v;
            }
        }
        d
    }

    /// Degree of a homogeneous polynomial, `None` for 0 or mixed degrees.
    pub fn poly_degree(&self, p: &NCPoly) -> Option<Vec<i64>> {
        let mut it = p.terms();
        let first = self.word_degree(it.next()?.0);
        for (w, _) in it {
            if self.word_degree(w) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Basis words of word-length `len` and grading degree `gamma`.
    pub fn component_words(
        &self,
        system: &RewriteSystem,
        gamma: &[i64],
        len: usize,
    ) -> Vec<Word> {
        system
            .basis_words(len)
            .into_iter()
            .filter(|w| self.word_degree(w) == gamma)
            .collect()
    }

    /// All component basis words of word-length `<= cap`.
    pub fn component_words_up_to(
        &self,
        system: &RewriteSystem,
        gamma: &[i64],
        cap: usize,
    ) -> Vec<Word> {
        (0..=cap)
            .flat_map(|d| self.component_words(system, gamma, d))
            .collect()
    }
}

/// Finite-dimensional right comodule with explicit coaction rows
/// `rho(e_i) = sum_j e_j (x) h[i][j]`.
pub struct RightComodule {
    pub dim: usize,
    pub coact: Vec<Vec<(usize, NCPoly)>>,
}

/// Finite-dimensional left comodule with `lambda(f_l) = sum_m g[l][m] (x) f_m`.
pub struct LeftComodule {
    pub dim: usize,
    pub coact: Vec<Vec<(NCPoly, usize)>>,
}

impl RightComodule {
    /// The degree-truncated regular comodule: basis words of length `<= n`
    /// under a coaction of the source on the target.
    pub fn from_coaction(coaction: &Coaction, n: usize) -> Result<(Vec<Word>, RightComodule), HopfError> {
        let words = coaction.source.system().basis_words_up_to(n);
        let index = WordIndex::from_words(words.iter().cloned());
        let mut rows = Vec::with_capacity(words.len());
        for w in &words {
            let t = coaction.coact_word(w)?;
            let mut row: Vec<(usize, NCPoly)> = Vec::new();
            let mut by_left: std::collections::BTreeMap<Word, NCPoly> = Default::default();
            for ((a, h), c) in t.terms() {
                by_left
                    .entry(a.clone())
                    .or_default()
                    .add_term(h.clone(), c.clone());
            }
            for (a, hp) in by_left {
                let j = index.get(&a).ok_or_else(|| HopfError::CoactionInvalid {
                    message: format!("coaction leaves degree-{} truncation", n),
                })?;
                row.push((j, hp));
            }
            rows.push(row);
        }
        Ok((
            words,
            RightComodule {
                dim: index.len(),
                coact: rows,
            },
        ))
    }

    /// One-dimensional comodule `v -> v (x) g` for a grouplike word `g`.
    pub fn one_dimensional(g: Word) -> RightComodule {
        RightComodule {
            dim: 1,
            coact: vec![vec![(0, NCPoly::from_word(g))]],
        }
    }
}

impl LeftComodule {
    pub fn one_dimensional(g: Word) -> LeftComodule {
        LeftComodule {
            dim: 1,
            coact: vec![vec![(NCPoly::from_word(g), 0)]],
        }
    }

    /// The regular left comodule on basis words of length `<= n`, with the
    /// coproduct as coaction.
    pub fn regular(hopf: &HopfPresentation, n: usize) -> Result<(Vec<Word>, LeftComodule), HopfError> {
        let words = hopf.system().basis_words_up_to(n);
        let index = WordIndex::from_words(words.iter().cloned());
        let mut rows = Vec::with_capacity(words.len());
        for w in &words {
            let t = hopf.delta_word(w)?;
            let mut by_right: std::collections::BTreeMap<Word, NCPoly> = Default::default();
            for ((a, b), c) in t.terms() {
                by_right
                    .entry(b.clone())
                    .or_default()
                    .add_term(a.clone(), c.clone());
            }
            let mut row = Vec::new();
            for (b, hp) in by_right {
                let j = index.get(&b).ok_or_else(|| HopfError::CoactionInvalid {
                    message: format!("coproduct leaves degree-{} truncation", n),
                })?;
                row.push((hp, j));
            }
            rows.push(row);
        }
        Ok((
            words,
            LeftComodule {
                dim: index.len(),
                coact: rows,
            },
        ))
    }
}

/// Exact basis of the cotensor product `V box W`: the kernel of
/// `rho_V (x) id - id (x) lambda_W` inside `V (x) W`. Vectors are returned
/// as dense coordinate matrices `x[i][l]` flattened row-major.
pub fn cotensor(v: &RightComodule, w: &LeftComodule) -> Vec<Vec<Scalar>> {
    let n = v.dim;
    let m = w.dim;
    let mut h_index = WordIndex::new();
    // rows indexed by (a, h-word, b)
    let mut row_of: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut triples: Vec<((usize, usize, usize), usize, Scalar)> = Vec::new();
    for i in 0..n {
        for l in 0..m {
            let col = i * m + l;
            for (j, hp) in &v.coact[i] {
                for (hw, c) in hp.terms() {
                    let hk = h_index.intern(hw);
                    triples.push(((*j, hk, l), col, c.clone()));
                }
            }
            for (gp, mm) in &w.coact[l] {
                for (hw, c) in gp.terms() {
                    let hk = h_index.intern(hw);
                    triples.push(((i, hk, *mm), col, -c));
                }
            }
        }
    }
    let mut next = 0usize;
    for (key, _, _) in &triples {
        row_of.entry(*key).or_insert_with(|| {
            let r = next;
            next += 1;
            r
        });
    }
    let mut mat = Matrix::zero(next, n * m);
    for (key, col, c) in triples {
        let r = row_of[&key];
        mat.rows[r][col] = &mat.rows[r][col] + &c;
    }
    mat.kernel_basis()
}

/// Result of the coinvariant quotient `F / B+ F` at a truncation.
pub struct PhiResult {
    /// Dimension of the truncated quotient (an exact upper bound for the
    /// true quotient restricted to this window).
    pub dim: usize,
    /// Whether the dimension was already stable one product-degree earlier.
    pub stable: bool,
    pub index: WordIndex,
    pub span: RowSpace,
}

impl PhiResult {
    /// Residual of an element modulo the computed `B+ F` span; `None` when
    /// the element does not live in the window.
    pub fn class_residual(&self, x: &NCPoly) -> Option<Vec<Scalar>> {
        let v = self.index.vector_of(x)?;
        Some(self.span.reduce(v))
    }

    pub fn class_is_zero(&self, x: &NCPoly) -> Option<bool> {
        self.class_residual(x).map(|v| v.iter().all(|c| c.is_zero()))
    }
}

/// Compute the quotient `span(F) / span(B+ . F)` where products are formed
/// up to total word length `cap`. `b_basis` spans `B` (the unit may be
/// included; it contributes nothing to `B+`).
pub fn takeuchi_phi(
    sys: &RewriteSystem,
    f_basis: &[NCPoly],
    b_basis: &[NCPoly],
    counit: &[Scalar],
    cap: usize,
) -> Result<PhiResult, HopfError> {
    let mut bplus: Vec<NCPoly> = Vec::new();
    for b in b_basis {
        let mut shifted = b.clone();
        let eps = b.apply_character(counit);
        shifted.add_term(Word::unit(), -&eps);
        if !shifted.is_zero() {
            bplus.push(shifted);
        }
    }
    let mut index = WordIndex::new();
    for f in f_basis {
        for (w, _) in f.terms() {
            index.intern(w);
        }
    }
    let mut products: Vec<(usize, NCPoly)> = Vec::new(); // (total degree budget used, product)
    for b in &bplus {
        let db = b.degree().unwrap_or(0);
        for f in f_basis {
            let df = f.degree().unwrap_or(0);
            if db + df > cap {
                continue;
            }
            let p = sys.multiply(b, f, cap).map_err(HopfError::Rewrite)?;
            for (w, _) in p.terms() {
                index.intern(w);
            }
            products.push((db + df, p));
        }
    }
    let mut span_prev = RowSpace::new(index.len());
    let mut span_full = RowSpace::new(index.len());
    for (budget, p) in &products {
        let v = index.vector_of(p).expect("interned");
        if *budget < cap {
            span_prev.insert(v.clone());
        }
        span_full.insert(v);
    }
    let quotient_dim = |span: &RowSpace| {
        let mut total = span.clone();
        let mut d = 0usize;
        for f in f_basis {
            if let Some(v) = index.vector_of(f) {
                if total.insert(v) {
                    d += 1;
                }
            }
        }
        d
    };
    let dim_full = quotient_dim(&span_full);
    let dim_prev = quotient_dim(&span_prev);
    Ok(PhiResult {
        dim: dim_full,
        stable: dim_full == dim_prev,
        index,
        span: span_full,
    })
}
