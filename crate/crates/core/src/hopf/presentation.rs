//! Hopf structure on presented algebras: coproduct, counit, antipode given
//! on generators and extended (anti)multiplicatively, with construction-time
//! checks that every structure map respects every rewrite rule.

use super::tensor::{Tensor3, TensorElement};
use super::{CheckStatus, HopfError};
use crate::ncalg::{NCPoly, Presentation, RewriteSystem, Word};
use crate::qfield::Scalar;
use std::cell::RefCell;
use std::collections::HashMap;

/// Per-generator structure data handed to [`HopfPresentation::new`].
#[derive(Clone)]
pub struct GenStructure {
    /// Coproduct image as raw tensor pairs.
    pub delta: Vec<(NCPoly, NCPoly)>,
    pub counit: Scalar,
    pub antipode: NCPoly,
}

#[derive(Default)]
struct Caches {
    delta: HashMap<Word, TensorElement>,
    antipode: HashMap<Word, NCPoly>,
}

/// A presented algebra together with Hopf structure maps on generators.
///
/// The antipode is assumed bijective; when it is not an involution on
/// generators an explicit inverse table must be supplied and is checked.
pub struct HopfPresentation {
    pub algebra: Presentation,
    delta_gen: Vec<TensorElement>,
    counit_gen: Vec<Scalar>,
    antipode_gen: Vec<NCPoly>,
    antipode_inv_gen: Option<Vec<NCPoly>>,
    grouplike_gens: Vec<NCPoly>,
    caches: RefCell<Caches>,
}

impl Clone for HopfPresentation {
    fn clone(&self) -> Self {
        HopfPresentation {
            algebra: self.algebra.clone(),
            delta_gen: self.delta_gen.clone(),
            counit_gen: self.counit_gen.clone(),
            antipode_gen: self.antipode_gen.clone(),
            antipode_inv_gen: self.antipode_inv_gen.clone(),
            grouplike_gens: self.grouplike_gens.clone(),
            caches: RefCell::new(Caches::default()),
        }
    }
}

impl HopfPresentation {
    /// Build and validate. `check_cap` bounds the degree used for the
    /// relation-respect checks (the antipode doubles degrees in matrix
    /// models, so it must fit under the system's usable cap).
    pub fn new(
        algebra: Presentation,
        gens: Vec<GenStructure>,
        antipode_inv: Option<Vec<NCPoly>>,
        grouplike_gens: Vec<NCPoly>,
        check_cap: usize,
    ) -> Result<HopfPresentation, HopfError> {
        assert_eq!(gens.len(), algebra.n_gens());
        let cap = algebra.system.certified_cap();
        let sys = &algebra.system;
        let mut delta_gen = Vec::with_capacity(gens.len());
        let mut counit_gen = Vec::with_capacity(gens.len());
        let mut antipode_gen = Vec::with_capacity(gens.len());
        for g in &gens {
            let mut t = TensorElement::zero();
            for (l, r) in &g.delta {
                let ln = sys.normal_form(l, cap).map_err(HopfError::Rewrite)?;
                let rn = sys.normal_form(r, cap).map_err(HopfError::Rewrite)?;
                t.add_pair(&ln, &rn, &Scalar::one());
            }
            delta_gen.push(t);
            counit_gen.push(g.counit.clone());
            antipode_gen.push(
                sys.normal_form(&g.antipode, cap)
                    .map_err(HopfError::Rewrite)?,
            );
        }
        let hopf = HopfPresentation {
            algebra,
            delta_gen,
            counit_gen,
            antipode_gen,
            antipode_inv_gen: antipode_inv,
            grouplike_gens,
            caches: RefCell::new(Caches::default()),
        };
        hopf.validate(check_cap)?;
        Ok(hopf)
    }

    fn validate(&self, check_cap: usize) -> Result<(), HopfError> {
        let sys = &self.algebra.system;
        // every structure map must agree on the two sides of every rule
        for rule in sys.rules().to_vec() {
            let lhs = NCPoly::from_word(rule.lhs.clone());
            let rule_text = format!(
                "{} = {}",
                self.algebra.render_word(&rule.lhs),
                self.algebra.render_poly(&rule.rhs)
            );
            let dl = self.delta(&lhs, check_cap)?;
            let dr = self.delta(&rule.rhs, check_cap)?;
            if dl != dr {
                return Err(HopfError::RelationNotRespected {
                    map: "coproduct".into(),
                    rule: rule_text,
                });
            }
            if self.counit(&lhs) != self.counit(&rule.rhs) {
                return Err(HopfError::RelationNotRespected {
                    map: "counit".into(),
                    rule: rule_text,
                });
            }
            let sl = self.antipode(&lhs, check_cap)?;
            let sr = self.antipode(&rule.rhs, check_cap)?;
            if sl != sr {
                return Err(HopfError::RelationNotRespected {
                    map: "antipode".into(),
                    rule: rule_text,
                });
            }
        }
        if let Some(inv) = &self.antipode_inv_gen {
            assert_eq!(inv.len(), self.algebra.n_gens());
            for (i, si) in inv.iter().enumerate() {
                let g = NCPoly::gen(i as u8);
                // S(S^-1(g)) = g = S^-1(S(g))
                let forward = self.antipode(si, check_cap)?;
                let backward = self.apply_gen_map(inv, &self.antipode_gen[i].clone(), check_cap, true)?;
                if forward != g || backward != g {
                    return Err(HopfError::AntipodeInverseInconsistent {
                        gen: self.algebra.gen_names()[i].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Largest degree at which normal forms are canonical for this model.
    pub fn cap(&self) -> usize {
        self.algebra.system.certified_cap()
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.algebra.system
    }

    pub fn counit_values(&self) -> &[Scalar] {
        &self.counit_gen
    }

    pub fn declared_grouplikes(&self) -> &[NCPoly] {
        &self.grouplike_gens
    }

    pub fn delta_of_gen(&self, i: u8) -> &TensorElement {
        &self.delta_gen[i as usize]
    }

    pub fn antipode_of_gen(&self, i: u8) -> &NCPoly {
        &self.antipode_gen[i as usize]
    }

    /// Coproduct of a normal word, extended multiplicatively. Cached.
    pub fn delta_word(&self, w: &Word) -> Result<TensorElement, HopfError> {
        if let Some(t) = self.caches.borrow().delta.get(w) {
            return Ok(t.clone());
        }
        let cap = self.cap();
        let sys = &self.algebra.system;
        let mut acc = TensorElement::unit();
        for &g in &w.0 {
            acc = acc
                .mul(&self.delta_gen[g as usize], sys, sys, cap)
                .map_err(HopfError::Rewrite)?;
        }
        self.caches
            .borrow_mut()
            .delta
            .insert(w.clone(), acc.clone());
        Ok(acc)
    }

    /// Coproduct of a polynomial with both legs in normal form.
    pub fn delta(&self, p: &NCPoly, cap: usize) -> Result<TensorElement, HopfError> {
        if let Some(d) = p.degree() {
            if d > cap {
                return Err(HopfError::Rewrite(
                    crate::ncalg::RewriteError::CapExceeded { cap, needed: d },
                ));
            }
        }
        let mut out = TensorElement::zero();
        for (w, c) in p.terms() {
            out.add_assign_scaled(&self.delta_word(w)?, c);
        }
        Ok(out)
    }

    /// Counit, extended multiplicatively and linearly.
    pub fn counit(&self, p: &NCPoly) -> Scalar {
        p.apply_character(&self.counit_gen)
    }

    /// Antipode of a normal word: anti-multiplicative extension. Cached.
    pub fn antipode_word(&self, w: &Word) -> Result<NCPoly, HopfError> {
        if let Some(p) = self.caches.borrow().antipode.get(w) {
            return Ok(p.clone());
        }
        let cap = self.cap();
        let sys = &self.algebra.system;
        let mut acc = NCPoly::one();
        for &g in w.0.iter().rev() {
            acc = sys
                .multiply(&acc, &self.antipode_gen[g as usize], cap)
                .map_err(HopfError::Rewrite)?;
        }
        self.caches
            .borrow_mut()
            .antipode
            .insert(w.clone(), acc.clone());
        Ok(acc)
    }

    pub fn antipode(&self, p: &NCPoly, cap: usize) -> Result<NCPoly, HopfError> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            if w.len() > cap {
                return Err(HopfError::Rewrite(
                    crate::ncalg::RewriteError::CapExceeded {
                        cap,
                        needed: w.len(),
                    },
                ));
            }
            out.add_assign_scaled(&self.antipode_word(w)?, c);
        }
        Ok(out)
    }

    /// Extend a per-generator map multiplicatively (`anti = false`) or
    /// anti-multiplicatively (`anti = true`) over a polynomial.
    fn apply_gen_map(
        &self,
        images: &[NCPoly],
        p: &NCPoly,
        cap: usize,
        anti: bool,
    ) -> Result<NCPoly, HopfError> {
        let sys = &self.algebra.system;
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NCPoly::one();
            let letters: Vec<u8> = if anti {
                w.0.iter().rev().copied().collect()
            } else {
                w.0.clone()
            };
            for g in letters {
                acc = sys
                    .multiply(&acc, &images[g as usize], cap)
                    .map_err(HopfError::Rewrite)?;
            }
            out.add_assign_scaled(&acc, c);
        }
        Ok(out)
    }

    /// Is `x` grouplike: `delta(x) = x (x) x` and `counit(x) = 1`?
    pub fn is_grouplike(&self, x: &NCPoly, cap: usize) -> Result<bool, HopfError> {
        if !self.counit(x).is_one() {
            return Ok(false);
        }
        let dx = self.delta(x, cap)?;
        let xx = TensorElement::from_pair(x, x);
        Ok(dx == xx)
    }

    /// Filter candidates down to the grouplike ones.
    pub fn grouplikes_among(
        &self,
        candidates: &[NCPoly],
        cap: usize,
    ) -> Result<Vec<NCPoly>, HopfError> {
        let mut out = Vec::new();
        for c in candidates {
            if self.is_grouplike(c, cap)? {
                out.push(c.clone());
            }
        }
        Ok(out)
    }

    /// The quotient by the ideal generated by `g - 1` over the declared
    /// grouplike generators, recompleted to the same cap, with structure
    /// maps induced and re-checked.
    pub fn quotient_by_grouplikes(&self) -> Result<HopfPresentation, HopfError> {
        let cap = self.cap();
        for g in &self.grouplike_gens {
            if !self.is_grouplike(g, cap)? {
                return Err(HopfError::NotGrouplike {
                    elem: self.algebra.render_poly(g),
                });
            }
        }
        let mut relations: Vec<(NCPoly, NCPoly)> = self
            .algebra
            .system
            .rules()
            .iter()
            .map(|r| (NCPoly::from_word(r.lhs.clone()), r.rhs.clone()))
            .collect();
        for g in &self.grouplike_gens {
            relations.push((g.clone(), NCPoly::one()));
        }
        let system = RewriteSystem::new(self.algebra.n_gens(), relations)
            .map_err(HopfError::Rewrite)?
            .complete_up_to(cap)
            .map_err(HopfError::Rewrite)?;
        let algebra = Presentation::new(self.algebra.gen_names().to_vec(), system)
            .with_name(&format!("{}/grouplikes", self.algebra.name));
        let gens: Vec<GenStructure> = (0..self.algebra.n_gens())
            .map(|i| GenStructure {
                delta: self.delta_gen[i]
                    .terms()
                    .map(|((l, r), c)| {
                        (
                            NCPoly::from_term(l.clone(), c.clone()),
                            NCPoly::from_word(r.clone()),
                        )
                    })
                    .collect(),
                counit: self.counit_gen[i].clone(),
                antipode: self.antipode_gen[i].clone(),
            })
            .collect();
        HopfPresentation::new(algebra, gens, self.antipode_inv_gen.clone(), Vec::new(), cap)
    }

    /// Normal-word counts per degree `0..=d`.
    pub fn dims_up_to(&self, d: usize) -> Vec<usize> {
        (0..=d)
            .map(|k| self.algebra.system.basis_words(k).len())
            .collect()
    }

    /// Check the Hopf axioms on every basis word of length `<= cap`:
    /// coassociativity, both counit laws, both antipode laws. Exact; the
    /// first failing word per axiom is reported as a witness.
    pub fn check_axioms(&self, cap: usize) -> Result<AxiomReport, HopfError> {
        let sys = &self.algebra.system;
        let names = self.algebra.gen_names();
        let mut report = AxiomReport::new(cap);
        for d in 0..=cap {
            for w in sys.basis_words(d) {
                let dw = self.delta_word(&w)?;

                // coassociativity
                let mut left = Tensor3::zero();
                let mut right = Tensor3::zero();
                for ((a, b), c) in dw.terms() {
                    left.add_left_pair(&self.delta_word(a)?, b, c);
                    right.add_right_pair(a, &self.delta_word(b)?, c);
                }
                report.record(
                    "coassociativity",
                    left == right,
                    || format!("word {}", w.render(names)),
                );

                // counit laws
                let wp = NCPoly::from_word(w.clone());
                let cl = dw.counit_left(&self.counit_gen);
                let cr = dw.counit_right(&self.counit_gen);
                report.record("counit-left", cl == wp, || {
                    format!("word {}", w.render(names))
                });
                report.record("counit-right", cr == wp, || {
                    format!("word {}", w.render(names))
                });

                // antipode laws: m(S (x) id) delta = counit * 1 = m(id (x) S) delta
                let eps = NCPoly::scalar(self.counit(&wp));
                let usable = sys.certified_cap();
                let sl = dw
                    .transform_left(|u| self.antipode_word(u))?
                    .contract(sys, usable)
                    .map_err(HopfError::Rewrite)?;
                report.record("antipode-left", sl == eps, || {
                    format!("word {}", w.render(names))
                });
                let sr = dw
                    .transform_right(|u| self.antipode_word(u))?
                    .contract(sys, usable)
                    .map_err(HopfError::Rewrite)?;
                report.record("antipode-right", sr == eps, || {
                    format!("word {}", w.render(names))
                });
            }
        }
        Ok(report)
    }

    /// Map every coefficient through `f` (rational specialization).
    pub fn map_scalars(
        &self,
        f: &dyn Fn(&Scalar) -> Result<Scalar, crate::qfield::QFieldError>,
    ) -> Result<HopfPresentation, HopfError> {
        let system = self
            .algebra
            .system
            .map_scalars(&|c| f(c))
            .map_err(HopfError::QField)?;
        let algebra =
            Presentation::new(self.algebra.gen_names().to_vec(), system).with_name(&self.algebra.name);
        let map_poly = |p: &NCPoly| -> Result<NCPoly, HopfError> {
            let mut out = NCPoly::zero();
            for (w, c) in p.terms() {
                out.add_term(w.clone(), f(c).map_err(HopfError::QField)?);
            }
            Ok(out)
        };
        let mut gens = Vec::new();
        for i in 0..self.algebra.n_gens() {
            let mut delta = Vec::new();
            for ((l, r), c) in self.delta_gen[i].terms() {
                delta.push((
                    NCPoly::from_term(l.clone(), f(c).map_err(HopfError::QField)?),
                    NCPoly::from_word(r.clone()),
                ));
            }
            gens.push(GenStructure {
                delta,
                counit: f(&self.counit_gen[i]).map_err(HopfError::QField)?,
                antipode: map_poly(&self.antipode_gen[i])?,
            });
        }
        let antipode_inv = match &self.antipode_inv_gen {
            None => None,
            Some(v) => Some(
                v.iter()
                    .map(|p| map_poly(p))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        let grouplikes = self
            .grouplike_gens
            .iter()
            .map(|p| map_poly(p))
            .collect::<Result<Vec<_>, _>>()?;
        HopfPresentation::new(algebra, gens, antipode_inv, grouplikes, self.cap())
    }

    /// Canonical `[hopf]` section text.
    pub fn render_hopf_section(&self) -> String {
        let names = self.algebra.gen_names();
        let mut out = String::from("[hopf]\n");
        for (i, name) in names.iter().enumerate() {
            out.push_str(&format!(
                "delta: {} = {}\n",
                name,
                self.delta_gen[i].render(names, names)
            ));
        }
        for (i, name) in names.iter().enumerate() {
            out.push_str(&format!("counit: {} = {}\n", name, self.counit_gen[i]));
        }
        for (i, name) in names.iter().enumerate() {
            out.push_str(&format!(
                "antipode: {} = {}\n",
                name,
                self.antipode_gen[i].render(names)
            ));
        }
        if let Some(inv) = &self.antipode_inv_gen {
            for (i, name) in names.iter().enumerate() {
                out.push_str(&format!(
                    "antipode-inverse: {} = {}\n",
                    name,
                    inv[i].render(names)
                ));
            }
        }
        for g in &self.grouplike_gens {
            out.push_str(&format!("grouplike: {}\n", g.render(names)));
        }
        out
    }
}

/// Outcome of the axiom suite: per-axiom verdicts with witness words for
/// failures and the number of words checked.
#[derive(Debug, Clone, serde::Serialize)]
pub struct AxiomReport {
    pub cap: usize,
    pub words_checked: usize,
    pub entries: Vec<AxiomEntry>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct AxiomEntry {
    pub axiom: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

impl AxiomReport {
    fn new(cap: usize) -> AxiomReport {
        AxiomReport {
            cap,
            words_checked: 0,
            entries: Vec::new(),
        }
    }

    fn record(&mut self, axiom: &str, ok: bool, witness: impl FnOnce() -> String) {
        if axiom == "coassociativity" {
            self.words_checked += 1;
        }
        match self.entries.iter_mut().find(|e| e.axiom == axiom) {
            Some(e) => {
                if !ok && e.status == CheckStatus::Pass {
                    e.status = CheckStatus::Fail;
                    e.witness = Some(witness());
                }
            }
            None => self.entries.push(AxiomEntry {
                axiom: axiom.to_string(),
                status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
                witness: if ok { None } else { Some(witness()) },
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == CheckStatus::Pass)
    }
}
