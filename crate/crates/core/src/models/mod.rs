//! Concrete Hopf presentations: the coordinate algebras of the quantum
//! groups SU_2 and SU_3 in their FRT form, Laurent tori, quantum-subgroup
//! projections, and the distinguished column generators of the associated
//! homogeneous spaces.
//!
//! Convention block (fixed here, once):
//! - generator order: `a < b < c < d` for n = 2, row-major `u11 < ... < u33`
//!   for n = 3; monomial order graded-lex in that generator order;
//! - relations, for rows `i < j` and columns `k < l`:
//!   `u_il u_ik = q u_ik u_il`, `u_jk u_ik = q u_ik u_jk`,
//!   `u_jk u_il = u_il u_jk`,
//!   `u_jl u_ik = u_ik u_jl + (q - q^-1) u_il u_jk`;
//! - quantum determinant `sum_s (-q^-1)^len(s) u_1s(1) ... u_ns(n) = 1`;
//! - antipode `S(u_ij) = (-q)^(j-i) * qminor(rows != j, cols != i)`;
//! - the `q <-> q^-1` toggle (`QConvention::Inverted`) flips every power of
//!   q above, giving the opposite-direction relation set.
//!
//! Column `j` of the defining matrix carries the j-th weight of the vector
//! representation, with the highest weight in the last column; the torus
//! projection sends `u_jj` to that weight monomial and off-diagonal
//! generators to zero.

use crate::hopf::{
    Coaction, GenStructure, GradedDecomposition, HopfError, HopfPresentation, TensorElement,
};
use crate::ncalg::{NCPoly, Presentation, RewriteSystem, Word};
use crate::qfield::Scalar;
use crate::rootsys::NodeSubset;
use std::rc::Rc;
use thiserror::Error;

#[cfg(test)]
mod tests;

#[derive(Debug, Clone, Error)]
pub enum ModelError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Rewrite(#[from] crate::ncalg::RewriteError),
    #[error("normal-word count at degree {degree} is {got}, flat count is {expect}")]
    FlatCountMismatch {
        degree: usize,
        got: usize,
        expect: usize,
    },
    #[error("unsupported Levi subset for this model: {subset}")]
    UnsupportedSubset { subset: String },
    #[error("projection does not commute with {map} on word {word}")]
    NotHopfMap { map: String, word: String },
}

/// Direction of the deformation: `Inverted` replaces q by 1/q throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QConvention {
    #[default]
    Standard,
    Inverted,
}

impl QConvention {
    fn qpow(&self, k: i64) -> Scalar {
        match self {
            QConvention::Standard => Scalar::q_pow(k),
            QConvention::Inverted => Scalar::q_pow(-k),
        }
    }
}

/// A matrix quantum group `O_q(SU_n)` for n = 2 or 3.
pub struct MatrixModel {
    pub n: usize,
    pub convention: QConvention,
    pub hopf: Rc<HopfPresentation>,
    /// The quantum determinant as a raw polynomial (reduces to 1).
    pub qdet_raw: NCPoly,
    /// Weight of column j (fundamental coordinates), highest weight last.
    pub col_weights: Vec<Vec<i64>>,
}

impl MatrixModel {
    pub fn gen_index(&self, i: usize, j: usize) -> u8 {
        ((i - 1) * self.n + (j - 1)) as u8
    }

    /// The generator `u_ij` (1-based row and column).
    pub fn u(&self, i: usize, j: usize) -> NCPoly {
        NCPoly::gen(self.gen_index(i, j))
    }

    /// Quantum minor on the given row and column sets (ascending, 1-based).
    pub fn qminor(&self, rows: &[usize], cols: &[usize]) -> NCPoly {
        assert_eq!(rows.len(), cols.len());
        qminor_poly(self.n, self.convention, rows, cols)
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }
}

fn perms(k: usize) -> Vec<Vec<usize>> {
    // lexicographic permutations of 0..k
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k.wrapping_sub(2);
        while i != usize::MAX && cur[i] >= cur[i + 1] {
            i = i.wrapping_sub(1);
        }
        if i == usize::MAX {
            return out;
        }
        let mut j = k - 1;
        while cur[j] <= cur[i] {
            j -= 1;
        }
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

fn inversions(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn qminor_poly(n: usize, conv: QConvention, rows: &[usize], cols: &[usize]) -> NCPoly {
    let k = rows.len();
    let mut out = NCPoly::zero();
    for p in perms(k) {
        let coeff = (-&conv.qpow(-1))
            .pow(inversions(&p) as i32)
            .expect("nonzero");
        let mut word = Vec::with_capacity(k);
        for (t, &pi) in p.iter().enumerate() {
            word.push(((rows[t] - 1) * n + (cols[pi] - 1)) as u8);
        }
        out.add_term(Word(word), coeff);
    }
    out
}

fn frt_relations(n: usize, conv: QConvention) -> Vec<(NCPoly, NCPoly)> {
    let q = conv.qpow(1);
    let qdiff = &conv.qpow(1) - &conv.qpow(-1);
    let u = |i: usize, j: usize| NCPoly::gen(((i - 1) * n + (j - 1)) as u8);
    let mut rels = Vec::new();
    // same-row and same-column q-commutation
    for i in 1..=n {
        for k in 1..=n {
            for l in k + 1..=n {
                rels.push((
                    u(i, l).mul_raw(&u(i, k)),
                    u(i, k).mul_raw(&u(i, l)).scale(&q),
                ));
                rels.push((
                    u(l, i).mul_raw(&u(k, i)),
                    u(k, i).mul_raw(&u(l, i)).scale(&q),
                ));
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                for l in k + 1..=n {
                    // antidiagonal pair commutes
                    rels.push((u(j, k).mul_raw(&u(i, l)), u(i, l).mul_raw(&u(j, k))));
                    // diagonal pair picks up the (q - q^-1) correction
                    let mut rhs = u(i, k).mul_raw(&u(j, l));
                    rhs.add_assign_scaled(&u(i, l).mul_raw(&u(j, k)), &qdiff);
                    rels.push((u(j, l).mul_raw(&u(i, k)), rhs));
                }
            }
        }
    }
    rels
}

fn quantum_determinant(n: usize, conv: QConvention) -> NCPoly {
    qminor_poly(
        n,
        conv,
        &(1..=n).collect::<Vec<_>>(),
        &(1..=n).collect::<Vec<_>>(),
    )
}

/// Flat (commutative-specialization) dimension of degree `d` in `n^2`
/// variables modulo one degree-`n` relation.
pub(crate) fn flat_dim(n: usize, d: usize) -> usize {
    let vars = n * n;
    let choose = |top: usize, bot: usize| -> usize {
        let mut acc: u128 = 1;
        for t in 0..bot {
            acc = acc * (top - t) as u128 / (t + 1) as u128;
        }
        acc as usize
    };
    let full = choose(d + vars - 1, vars - 1);
    let excess = if d >= n {
        choose(d - n + vars - 1, vars - 1)
    } else {
        0
    };
    full - excess
}

fn build_matrix_model(
    n: usize,
    conv: QConvention,
    names: Vec<String>,
    complete_cap: usize,
    certify_cap: usize,
    col_weights: Vec<Vec<i64>>,
) -> Result<MatrixModel, ModelError> {
    let mut relations = frt_relations(n, conv);
    let det = quantum_determinant(n, conv);
    relations.push((det.clone(), NCPoly::one()));
    let mut system = RewriteSystem::new(n * n, relations)?.complete_up_to(complete_cap)?;
    // certify canonical normal forms beyond the completed degree by the
    // dimension count: normal words must match the flat count exactly
    for d in 0..=certify_cap {
        let got = system.basis_words(d).len();
        let expect = flat_dim(n, d);
        if got != expect {
            return Err(ModelError::FlatCountMismatch {
                degree: d,
                got,
                expect,
            });
        }
    }
    system.certify_degree(certify_cap);
    let algebra = Presentation::new(names, system).with_name(&format!("su{}", n));

    let u = |i: usize, j: usize| NCPoly::gen(((i - 1) * n + (j - 1)) as u8);
    let mut gens = Vec::new();
    let mut antipode_inv = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let delta = (1..=n).map(|k| (u(i, k), u(k, j))).collect();
            let counit = if i == j { Scalar::one() } else { Scalar::zero() };
            let rows: Vec<usize> = (1..=n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (1..=n).filter(|&c| c != i).collect();
            let minor = qminor_poly(n, conv, &rows, &cols);
            let sign_fwd = (-&conv.qpow(1))
                .pow((j as i32) - (i as i32))
                .expect("nonzero");
            let sign_bwd = (-&conv.qpow(1))
                .pow((i as i32) - (j as i32))
                .expect("nonzero");
            gens.push(GenStructure {
                delta,
                counit,
                antipode: minor.scale(&sign_fwd),
            });
            antipode_inv.push(minor.scale(&sign_bwd));
        }
    }
    let hopf = HopfPresentation::new(algebra, gens, Some(antipode_inv), Vec::new(), certify_cap)?;
    Ok(MatrixModel {
        n,
        convention: conv,
        hopf: Rc::new(hopf),
        qdet_raw: det,
        col_weights,
    })
}

/// The quantum SU_2 coordinate algebra on generators `a b c d`, completed
/// (hence exactly computable) to degree `cap`.
pub fn build_su2_with(conv: QConvention, cap: usize) -> Result<MatrixModel, ModelError> {
    build_matrix_model(
        2,
        conv,
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        cap,
        cap,
        vec![vec![-1], vec![1]],
    )
}

pub fn build_su2() -> Result<MatrixModel, ModelError> {
    build_su2_with(QConvention::Standard, 12)
}

/// The quantum SU_3 coordinate algebra on generators `u11 .. u33`. Overlap
/// completion runs to `complete_cap`; normal forms are certified canonical
/// up to `certify_cap` by the dimension count.
pub fn build_su3_with(
    conv: QConvention,
    complete_cap: usize,
    certify_cap: usize,
) -> Result<MatrixModel, ModelError> {
    let names = (1..=3)
        .flat_map(|i| (1..=3).map(move |j| format!("u{}{}", i, j)))
        .collect();
    build_matrix_model(
        3,
        conv,
        names,
        complete_cap,
        certify_cap,
        vec![vec![0, -1], vec![-1, 1], vec![1, 0]],
    )
}

pub fn build_su3() -> Result<MatrixModel, ModelError> {
    build_su3_with(QConvention::Standard, 4, 9)
}

/// Laurent torus `O(T^r)` on generators `t1 t1~ ... tr tr~`.
pub struct TorusModel {
    pub r: usize,
    pub hopf: Rc<HopfPresentation>,
}

impl TorusModel {
    pub fn t(&self, i: usize) -> u8 {
        (2 * (i - 1)) as u8
    }

    pub fn tbar(&self, i: usize) -> u8 {
        (2 * (i - 1) + 1) as u8
    }

    /// Exponent vector of a word.
    pub fn exponent(&self, w: &Word) -> Vec<i64> {
        let mut e = vec![0i64; self.r];
        for &g in &w.0 {
            let i = (g / 2) as usize;
            if g % 2 == 0 {
                e[i] += 1;
            } else {
                e[i] -= 1;
            }
        }
        e
    }

    /// The canonical normal word with the given exponent vector.
    pub fn monomial(&self, exps: &[i64]) -> Word {
        assert_eq!(exps.len(), self.r);
        let mut letters = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            let g = if e >= 0 { self.t(i + 1) } else { self.tbar(i + 1) };
            for _ in 0..e.unsigned_abs() {
                letters.push(g);
            }
        }
        letters.sort();
        Word(letters)
    }
}

pub fn build_torus(r: usize, cap: usize) -> Result<TorusModel, ModelError> {
    let names: Vec<String> = (1..=r)
        .flat_map(|i| vec![format!("t{}", i), format!("t{}~", i)])
        .collect();
    let n = 2 * r;
    let mut relations: Vec<(NCPoly, NCPoly)> = Vec::new();
    for x in 0..n as u8 {
        for y in x + 1..n as u8 {
            relations.push((
                NCPoly::from_word(Word(vec![y, x])),
                NCPoly::from_word(Word(vec![x, y])),
            ));
        }
    }
    for i in 0..r {
        let t = (2 * i) as u8;
        let tb = (2 * i + 1) as u8;
        relations.push((NCPoly::from_word(Word(vec![t, tb])), NCPoly::one()));
        relations.push((NCPoly::from_word(Word(vec![tb, t])), NCPoly::one()));
    }
    let system = RewriteSystem::new(n, relations)?.complete_up_to(cap)?;
    let algebra = Presentation::new(names, system).with_name(&format!("torus{}", r));
    let mut gens = Vec::new();
    let mut grouplikes = Vec::new();
    for g in 0..n as u8 {
        let p = NCPoly::gen(g);
        gens.push(GenStructure {
            delta: vec![(p.clone(), p.clone())],
            counit: Scalar::one(),
            antipode: NCPoly::gen(if g % 2 == 0 { g + 1 } else { g - 1 }),
        });
        if g % 2 == 0 {
            grouplikes.push(p);
        }
    }
    let hopf = HopfPresentation::new(algebra, gens, None, grouplikes, cap.min(4))?;
    Ok(TorusModel {
        r,
        hopf: Rc::new(hopf),
    })
}

/// A surjective Hopf algebra map onto a quantum subgroup, given by generator
/// images. Construction checks that it respects relations and commutes with
/// the three structure maps on all basis words of length `<= word_check_cap`.
pub struct SubgroupProjection {
    pub source: Rc<HopfPresentation>,
    pub target: Rc<HopfPresentation>,
    images: Vec<NCPoly>,
}

impl SubgroupProjection {
    pub fn new(
        source: Rc<HopfPresentation>,
        target: Rc<HopfPresentation>,
        images: Vec<NCPoly>,
        word_check_cap: usize,
    ) -> Result<SubgroupProjection, ModelError> {
        assert_eq!(images.len(), source.algebra.n_gens());
        let proj = SubgroupProjection {
            source,
            target,
            images,
        };
        proj.validate(word_check_cap)?;
        Ok(proj)
    }

    fn validate(&self, word_cap: usize) -> Result<(), ModelError> {
        let src = &self.source;
        let tgt = &self.target;
        for rule in src.algebra.system.rules().to_vec() {
            let l = self.apply(&NCPoly::from_word(rule.lhs.clone()))?;
            let r = self.apply(&rule.rhs)?;
            if l != r {
                return Err(ModelError::NotHopfMap {
                    map: "multiplication".into(),
                    word: src.algebra.render_word(&rule.lhs),
                });
            }
        }
        for d in 0..=word_cap {
            for w in src.algebra.system.basis_words(d) {
                let name = src.algebra.render_word(&w);
                let img = self.apply(&NCPoly::from_word(w.clone()))?;
                if tgt.counit(&img) != src.counit(&NCPoly::from_word(w.clone())) {
                    return Err(ModelError::NotHopfMap {
                        map: "counit".into(),
                        word: name,
                    });
                }
                let lhs = tgt.delta(&img, tgt.cap()).map_err(ModelError::Hopf)?;
                let dw = src.delta_word(&w).map_err(ModelError::Hopf)?;
                let mut rhs = TensorElement::zero();
                for ((x, y), cxy) in dw.terms() {
                    let px = self.apply(&NCPoly::from_word(x.clone()))?;
                    let py = self.apply(&NCPoly::from_word(y.clone()))?;
                    rhs.add_pair(&px, &py, cxy);
                }
                if lhs != rhs {
                    return Err(ModelError::NotHopfMap {
                        map: "coproduct".into(),
                        word: name,
                    });
                }
                let sa = src.antipode_word(&w).map_err(ModelError::Hopf)?;
                let l = self.apply(&sa)?;
                let r = tgt.antipode(&img, tgt.cap()).map_err(ModelError::Hopf)?;
                if l != r {
                    return Err(ModelError::NotHopfMap {
                        map: "antipode".into(),
                        word: name,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn images(&self) -> &[NCPoly] {
        &self.images
    }

    /// Multiplicative extension over any polynomial.
    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly, ModelError> {
        let sys = self.target.system();
        let cap = self.target.cap();
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NCPoly::one();
            for &g in &w.0 {
                acc = sys.multiply(&acc, &self.images[g as usize], cap)?;
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign_scaled(&acc, c);
        }
        Ok(out)
    }

    /// The induced right coaction `(id (x) pi) Delta : A -> A (x) H`.
    pub fn induced_coaction(&self, check_cap: usize) -> Result<Coaction, ModelError> {
        let mut images = Vec::new();
        for g in 0..self.source.algebra.n_gens() {
            let dg = self.source.delta_of_gen(g as u8);
            let mut t = TensorElement::zero();
            for ((x, y), c) in dg.terms() {
                let py = self.apply(&NCPoly::from_word(y.clone()))?;
                t.add_pair(&NCPoly::from_word(x.clone()), &py, c);
            }
            images.push(t);
        }
        Coaction::new(
            Rc::clone(&self.source),
            Rc::clone(&self.target),
            images,
            check_cap,
        )
        .map_err(ModelError::Hopf)
    }
}

/// The full-torus projection of a matrix model: diagonal generators map to
/// their column-weight monomials, off-diagonal generators to zero.
pub fn torus_projection(
    model: &MatrixModel,
    torus: &TorusModel,
) -> Result<SubgroupProjection, ModelError> {
    assert_eq!(torus.r, model.rank());
    let mut images = Vec::new();
    for i in 1..=model.n {
        for j in 1..=model.n {
            if i == j {
                images.push(NCPoly::from_word(torus.monomial(&model.col_weights[j - 1])));
            } else {
                images.push(NCPoly::zero());
            }
        }
    }
    SubgroupProjection::new(
        Rc::clone(&model.hopf),
        Rc::clone(&torus.hopf),
        images,
        3.min(model.hopf.cap()),
    )
}

/// The grading induced by a diagonal coaction, degrees read off the torus
/// exponents.
pub fn torus_grading(
    model: &MatrixModel,
    torus: &TorusModel,
    proj: &SubgroupProjection,
) -> Result<GradedDecomposition, ModelError> {
    let coaction = proj.induced_coaction(2.min(model.hopf.cap()))?;
    let exps = coaction
        .diagonal_exponents()
        .ok_or_else(|| ModelError::NotHopfMap {
            map: "diagonal coaction".into(),
            word: "grading".into(),
        })?;
    let degrees: Vec<Vec<i64>> = exps.iter().map(|w| torus.exponent(w)).collect();
    GradedDecomposition::new(torus.r, degrees, model.hopf.system()).map_err(ModelError::Hopf)
}

/// The block Levi projection of SU_3 for the Levi subset `{1}`: the target
/// is the 2x2 quantum block extended by a central grouplike `w`, with
/// `u13, u23, u31, u32 -> 0`.
pub fn levi_projection_su3(model: &MatrixModel) -> Result<SubgroupProjection, ModelError> {
    assert_eq!(model.n, 3);
    let conv = model.convention;
    let names: Vec<String> = vec![
        "v11".into(),
        "v12".into(),
        "v21".into(),
        "v22".into(),
        "w".into(),
    ];
    let v = |i: usize, j: usize| NCPoly::gen((2 * (i - 1) + (j - 1)) as u8);
    let w = NCPoly::gen(4);
    let mut relations = frt_relations(2, conv);
    for g in 0..4u8 {
        relations.push((w.mul_raw(&NCPoly::gen(g)), NCPoly::gen(g).mul_raw(&w)));
    }
    let det2 = qminor_poly(2, conv, &[1, 2], &[1, 2]);
    relations.push((det2.mul_raw(&w), NCPoly::one()));
    let cap = model.hopf.cap().min(8);
    let system = RewriteSystem::new(5, relations)?.complete_up_to(cap)?;
    let algebra = Presentation::new(names, system).with_name("levi1-su3");
    let minus_q = -&conv.qpow(1);
    let minus_qinv = -&conv.qpow(-1);
    let gens = vec![
        GenStructure {
            delta: vec![(v(1, 1), v(1, 1)), (v(1, 2), v(2, 1))],
            counit: Scalar::one(),
            antipode: v(2, 2).mul_raw(&w),
        },
        GenStructure {
            delta: vec![(v(1, 1), v(1, 2)), (v(1, 2), v(2, 2))],
            counit: Scalar::zero(),
            antipode: v(1, 2).mul_raw(&w).scale(&minus_q),
        },
        GenStructure {
            delta: vec![(v(2, 1), v(1, 1)), (v(2, 2), v(2, 1))],
            counit: Scalar::zero(),
            antipode: v(2, 1).mul_raw(&w).scale(&minus_qinv),
        },
        GenStructure {
            delta: vec![(v(2, 1), v(1, 2)), (v(2, 2), v(2, 2))],
            counit: Scalar::one(),
            antipode: v(1, 1).mul_raw(&w),
        },
        GenStructure {
            delta: vec![(w.clone(), w.clone())],
            counit: Scalar::one(),
            antipode: det2.clone(),
        },
    ];
    let antipode_inv = vec![
        v(2, 2).mul_raw(&w),
        v(1, 2).mul_raw(&w).scale(&minus_qinv),
        v(2, 1).mul_raw(&w).scale(&minus_q),
        v(1, 1).mul_raw(&w),
        det2,
    ];
    let target = Rc::new(HopfPresentation::new(
        algebra,
        gens,
        Some(antipode_inv),
        vec![w],
        cap,
    )?);
    let zero = NCPoly::zero();
    let images = vec![
        v(1, 1),
        v(1, 2),
        zero.clone(),
        v(2, 1),
        v(2, 2),
        zero.clone(),
        zero.clone(),
        zero,
        NCPoly::gen(4),
    ];
    SubgroupProjection::new(Rc::clone(&model.hopf), target, images, 3)
}

/// The trivial quantum subgroup: every generator maps to its counit value.
/// This is where the quotient by all grouplikes lands when the target Hopf
/// algebra collapses to scalars.
pub fn trivial_projection(
    source: &Rc<HopfPresentation>,
    word_check_cap: usize,
) -> Result<SubgroupProjection, ModelError> {
    let system = RewriteSystem::new(1, vec![(NCPoly::gen(0), NCPoly::one())])?.complete_up_to(4)?;
    let algebra = Presentation::new(vec!["e".into()], system).with_name("trivial");
    let gens = vec![GenStructure {
        delta: vec![(NCPoly::gen(0), NCPoly::gen(0))],
        counit: Scalar::one(),
        antipode: NCPoly::gen(0),
    }];
    let target = Rc::new(HopfPresentation::new(algebra, gens, None, Vec::new(), 2)?);
    let images = (0..source.algebra.n_gens())
        .map(|g| NCPoly::scalar(source.counit_values()[g].clone()))
        .collect();
    SubgroupProjection::new(Rc::clone(source), target, images, word_check_cap)
}

/// The distinguished column generators of the quantum homogeneous space for
/// a Levi subset: for each colored node, the column of matrix coefficients
/// through the highest weight vector and its dual column.
pub struct ZedFamily {
    /// Colored Dynkin node (1-based).
    pub node: usize,
    pub z_cols: Vec<NCPoly>,
    pub zbar_cols: Vec<NCPoly>,
    /// The distinguished member of `z_cols` with counit 1.
    pub z: NCPoly,
    pub zbar: NCPoly,
}

pub struct ZedGenerators {
    pub families: Vec<ZedFamily>,
}

/// Supported subsets: the empty set (full flag) for n = 2, 3 and `{1}` for
/// n = 3.
pub fn zed_generators(model: &MatrixModel, s: &NodeSubset) -> Result<ZedGenerators, ModelError> {
    let rank = model.rank();
    let colored = s.complement(rank).map_err(|_| ModelError::UnsupportedSubset {
        subset: format!("{:?}", s.members()),
    })?;
    let supported =
        s.members().is_empty() || (model.n == 3 && s.members().iter().eq([&1usize]));
    if !supported {
        return Err(ModelError::UnsupportedSubset {
            subset: format!("{:?}", s.members()),
        });
    }
    let sys = model.hopf.system();
    let cap = model.hopf.cap();
    let nf = |p: &NCPoly| sys.normal_form(p, cap).map_err(ModelError::Rewrite);
    let mut families = Vec::new();
    for &x in colored.members() {
        let (z_cols, zbar_cols): (Vec<NCPoly>, Vec<NCPoly>) = if model.n == 2 {
            (
                vec![model.u(1, 2), model.u(2, 2)],
                vec![model.u(1, 1), model.u(2, 1)],
            )
        } else if x == 1 {
            // weight w1: last-column entries; dual weight -w1: column minors
            (
                vec![model.u(1, 3), model.u(2, 3), model.u(3, 3)],
                vec![
                    nf(&model.qminor(&[1, 2], &[1, 2]))?,
                    nf(&model.qminor(&[1, 3], &[1, 2]))?,
                    nf(&model.qminor(&[2, 3], &[1, 2]))?,
                ],
            )
        } else {
            // weight w2: minors on the last two columns; dual: first column
            (
                vec![
                    nf(&model.qminor(&[1, 2], &[2, 3]))?,
                    nf(&model.qminor(&[1, 3], &[2, 3]))?,
                    nf(&model.qminor(&[2, 3], &[2, 3]))?,
                ],
                vec![model.u(1, 1), model.u(2, 1), model.u(3, 1)],
            )
        };
        let eps = model.hopf.counit_values();
        let pick = |cols: &[NCPoly]| -> NCPoly {
            cols.iter()
                .find(|p| p.apply_character(eps).is_one())
                .expect("one column member has counit 1")
                .clone()
        };
        families.push(ZedFamily {
            node: x,
            z: pick(&z_cols),
            zbar: pick(&zbar_cols),
            z_cols,
            zbar_cols,
        });
    }
    Ok(ZedGenerators { families })
}

impl ZedGenerators {
    pub fn family(&self, node: usize) -> Option<&ZedFamily> {
        self.families.iter().find(|f| f.node == node)
    }

    /// The product for a grading vector (coordinates over the colored nodes,
    /// ascending): nonnegative powers use `z`, negative use `zbar`, factors
    /// ordered by node.
    pub fn z_gamma(
        &self,
        gamma: &[i64],
        sys: &RewriteSystem,
        cap: usize,
    ) -> Result<NCPoly, ModelError> {
        assert_eq!(gamma.len(), self.families.len());
        let mut acc = NCPoly::one();
        for (f, &a) in self.families.iter().zip(gamma) {
            let base = if a >= 0 { &f.z } else { &f.zbar };
            for _ in 0..a.unsigned_abs() {
                acc = sys.multiply(&acc, base, cap)?;
            }
        }
        Ok(acc)
    }
}

/// Export a model (with its torus coaction) in the declarative text format.
pub fn export_model(model: &MatrixModel) -> Result<String, ModelError> {
    let torus = build_torus(model.rank(), 24)?;
    let proj = torus_projection(model, &torus)?;
    let co = proj.induced_coaction(2.min(model.hopf.cap()))?;
    let spec = format!("torus {}", model.rank());
    Ok(crate::hopf::render_model_file(
        &model.hopf,
        &[("torus".to_string(), spec, &co)],
    ))
}
