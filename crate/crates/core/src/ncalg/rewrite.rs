//! Degree-truncated rewriting and overlap completion.
//!
//! A rewrite system holds rules `lhs -> rhs` with `lhs` a word and `rhs` a
//! polynomial strictly below it in the graded-lex monomial order. Because
//! the order is graded, a rule can never raise word length, so a computation
//! capped at degree N stays at degree N and every identity it reports is
//! exact at that degree. `complete_up_to` resolves all overlap ambiguities
//! whose superposition word fits under the cap, which makes normal forms
//! canonical there; the engine refuses work that would need larger words
//! rather than truncating silently.

use super::{NCPoly, Word};
use crate::qfield::Scalar;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum RewriteError {
    #[error("degree cap {cap} exceeded (needed {needed})")]
    CapExceeded { cap: usize, needed: usize },
    #[error("rewriting budget exhausted after {steps} steps; suspicious rule set")]
    NonTerminating { steps: u64 },
    #[error("completion budget exhausted at overlap {overlap}")]
    CompletionBudget { overlap: String },
    #[error("presented relations force 1 = 0 (inconsistent presentation)")]
    Inconsistent,
    #[error("generator index {index} out of range ({n_gens} generators)")]
    BadGenerator { index: usize, n_gens: usize },
    #[error("system is only confluent to degree {confluent}, degree {needed} requested")]
    NotConfluent { confluent: usize, needed: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

#[derive(Clone)]
pub struct RewriteSystem {
    n_gens: usize,
    rules: Vec<Rule>,
    by_first: Vec<Vec<usize>>,
    by_last: Vec<Vec<usize>>,
    confluent_cap: usize,
    certified_cap: usize,
}

const NF_BUDGET: u64 = 4_000_000;
const COMPLETION_RULE_BUDGET: usize = 2000;

/// Orient a polynomial relation `p = 0` into a rule with monic leading word.
fn orient(p: &NCPoly) -> Result<Option<Rule>, RewriteError> {
    if p.is_zero() {
        return Ok(None);
    }
    let (lead, lc) = p.leading().map(|(w, c)| (w.clone(), c.clone())).unwrap();
    if lead.is_empty() {
        return Err(RewriteError::Inconsistent);
    }
    let mut rest = p.clone();
    rest.add_term(lead.clone(), -&lc);
    let inv = lc.inv().expect("leading coefficient nonzero");
    let rhs = rest.scale(&-&inv);
    Ok(Some(Rule { lhs: lead, rhs }))
}

impl RewriteSystem {
    /// Build a system from relations `lhs = rhs`, orienting by graded-lex
    /// leading word and inter-reducing. The result is *not* yet guaranteed
    /// confluent; call [`RewriteSystem::complete_up_to`].
    pub fn new(
        n_gens: usize,
        relations: Vec<(NCPoly, NCPoly)>,
    ) -> Result<RewriteSystem, RewriteError> {
        let mut sys = RewriteSystem {
            n_gens,
            rules: Vec::new(),
            by_first: vec![Vec::new(); n_gens],
            by_last: vec![Vec::new(); n_gens],
            confluent_cap: 0,
            certified_cap: 0,
        };
        let mut pending: Vec<NCPoly> = relations
            .into_iter()
            .map(|(l, r)| l.sub(&r))
            .collect();
        // deterministic processing order
        pending.sort_by(|a, b| a.leading().map(|(w, _)| w.clone()).cmp(&b.leading().map(|(w, _)| w.clone())));
        sys.drain_pending(&mut pending, usize::MAX)?;
        Ok(sys)
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn confluent_cap(&self) -> usize {
        self.confluent_cap
    }

    /// Largest degree at which normal forms are certified canonical, either
    /// by overlap resolution or by an external dimension-count argument.
    pub fn certified_cap(&self) -> usize {
        self.certified_cap.max(self.confluent_cap)
    }

    fn reindex(&mut self) {
        self.rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        for v in self.by_first.iter_mut().chain(self.by_last.iter_mut()) {
            v.clear();
        }
        for (i, r) in self.rules.iter().enumerate() {
            self.by_first[r.lhs.0[0] as usize].push(i);
            self.by_last[*r.lhs.0.last().unwrap() as usize].push(i);
        }
    }

    /// Leftmost redex; among rules matching at the same position, the one
    /// earliest in the sorted rule order.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            let first = w.0[pos] as usize;
            for &ri in &self.by_first[first] {
                if w.matches_at(&self.rules[ri].lhs, pos) {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    /// Canonical normal form under the current rules. Deterministic: the
    /// largest word in the worklist is rewritten first, at its leftmost
    /// redex. Errors if a word exceeds `cap` or the step budget runs out.
    pub fn normal_form(&self, p: &NCPoly, cap: usize) -> Result<NCPoly, RewriteError> {
        if let Some(d) = p.degree() {
            if d > cap {
                return Err(RewriteError::CapExceeded { cap, needed: d });
            }
        }
        let mut work: std::collections::BTreeMap<Word, Scalar> = std::collections::BTreeMap::new();
        for (w, c) in p.terms() {
            work.insert(w.clone(), c.clone());
        }
        let mut out = NCPoly::zero();
        let mut steps: u64 = 0;
        while let Some((w, c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find_redex(&w) {
                None => out.add_term(w, c),
                Some((pos, ri)) => {
                    steps += 1;
                    if steps > NF_BUDGET {
                        return Err(RewriteError::NonTerminating { steps });
                    }
                    let rule = &self.rules[ri];
                    let (prefix, suffix) = w.split_around(pos, rule.lhs.len());
                    for (t, d) in rule.rhs.terms() {
                        let nw = prefix.concat(t).concat(&suffix);
                        let nc = &c * d;
                        if nc.is_zero() {
                            continue;
                        }
                        use std::collections::btree_map::Entry;
                        match work.entry(nw) {
                            Entry::Vacant(e) => {
                                e.insert(nc);
                            }
                            Entry::Occupied(mut e) => {
                                let s = &*e.get() + &nc;
                                if s.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = s;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product followed by normal form. The degree precondition is checked
    /// against `cap` before any work happens.
    pub fn multiply(&self, p: &NCPoly, r: &NCPoly, cap: usize) -> Result<NCPoly, RewriteError> {
        let dp = p.degree().unwrap_or(0);
        let dr = r.degree().unwrap_or(0);
        if dp + dr > cap {
            return Err(RewriteError::CapExceeded {
                cap,
                needed: dp + dr,
            });
        }
        self.normal_form(&p.mul_raw(r), cap)
    }

    /// All normal words of length exactly `d`, in graded-lex order.
    pub fn basis_words(&self, d: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut stack: Vec<Word> = vec![Word::unit()];
        while let Some(w) = stack.pop() {
            if w.len() == d {
                out.push(w);
                continue;
            }
            // extend on the right; only suffixes ending at the new letter can
            // become redexes, since the prefix is already normal
            for g in (0..self.n_gens as u8).rev() {
                let mut v = w.0.clone();
                v.push(g);
                let nw = Word(v);
                let clean = self.by_last[g as usize]
                    .iter()
                    .all(|&ri| !nw.ends_with(&self.rules[ri].lhs));
                if clean {
                    stack.push(nw);
                }
            }
        }
        out.sort();
        out
    }

    /// Normal words of every length `0..=d`.
    pub fn basis_words_up_to(&self, d: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for k in 0..=d {
            out.extend(self.basis_words(k));
        }
        out
    }

    /// Insert a rule keeping the invariant that no rule's lhs is reducible by
    /// another rule; displaced rules are re-queued as equations.
    fn add_rule(&mut self, rule: Rule, pending: &mut Vec<NCPoly>) {
        let mut kept = Vec::with_capacity(self.rules.len() + 1);
        for r in self.rules.drain(..) {
            let contains = (0..=r.lhs.len().saturating_sub(rule.lhs.len()))
                .any(|pos| r.lhs.matches_at(&rule.lhs, pos));
            if contains {
                let mut eq = NCPoly::from_word(r.lhs.clone());
                eq.add_assign_scaled(&r.rhs, &-&Scalar::one());
                pending.push(eq);
            } else {
                kept.push(r);
            }
        }
        kept.push(rule);
        self.rules = kept;
        self.reindex();
        // keep every rhs fully reduced
        let snapshot = self.clone();
        for r in self.rules.iter_mut() {
            r.rhs = snapshot
                .normal_form(&r.rhs, r.rhs.degree().unwrap_or(0))
                .expect("rhs reduction stays under its own degree");
        }
    }

    fn drain_pending(
        &mut self,
        pending: &mut Vec<NCPoly>,
        budget: usize,
    ) -> Result<(), RewriteError> {
        let mut added = 0usize;
        while let Some(p) = pending.pop() {
            let cap = p.degree().unwrap_or(0);
            let p = self.normal_form(&p, cap)?;
            if let Some(rule) = orient(&p)? {
                self.add_rule(rule, pending);
                added += 1;
                if added > budget.min(COMPLETION_RULE_BUDGET) {
                    return Err(RewriteError::CompletionBudget {
                        overlap: format!("{:?}", self.rules.last().map(|r| &r.lhs)),
                    });
                }
            }
        }
        Ok(())
    }

    /// Resolve all overlap ambiguities whose superposition word has length
    /// at most `cap`. On success the system rewrites confluently on words of
    /// length `<= cap`.
    pub fn complete_up_to(mut self, cap: usize) -> Result<RewriteSystem, RewriteError> {
        let mut rounds = 0;
        loop {
            rounds += 1;
            if rounds > COMPLETION_RULE_BUDGET {
                return Err(RewriteError::CompletionBudget {
                    overlap: "completion did not stabilize".into(),
                });
            }
            let mut pending: Vec<NCPoly> = Vec::new();
            for i in 0..self.rules.len() {
                for j in 0..self.rules.len() {
                    let (u, v) = (self.rules[i].lhs.clone(), self.rules[j].lhs.clone());
                    let kmax = u.len().min(v.len()) - 1;
                    for k in 1..=kmax {
                        // suffix of u of length k == prefix of v of length k
                        if u.0[u.len() - k..] != v.0[..k] {
                            continue;
                        }
                        let super_len = u.len() + v.len() - k;
                        if super_len > cap {
                            continue;
                        }
                        // two reductions of the superposition word
                        let tail = Word(v.0[k..].to_vec());
                        let head = Word(u.0[..u.len() - k].to_vec());
                        let r1 = self.rules[i].rhs.mul_raw(&NCPoly::from_word(tail));
                        let r2 = NCPoly::from_word(head).mul_raw(&self.rules[j].rhs);
                        let diff = self.normal_form(&r1.sub(&r2), super_len)?;
                        if !diff.is_zero() {
                            pending.push(diff);
                        }
                    }
                }
            }
            if pending.is_empty() {
                self.confluent_cap = cap;
                self.certified_cap = self.certified_cap.max(cap);
                return Ok(self);
            }
            pending.sort_by(|a, b| {
                a.leading()
                    .map(|(w, _)| w.clone())
                    .cmp(&b.leading().map(|(w, _)| w.clone()))
            });
            pending.dedup();
            self.drain_pending(&mut pending, COMPLETION_RULE_BUDGET)?;
        }
    }

    pub fn require_canonical(&self, degree: usize) -> Result<(), RewriteError> {
        if degree > self.certified_cap() {
            return Err(RewriteError::NotConfluent {
                confluent: self.certified_cap(),
                needed: degree,
            });
        }
        Ok(())
    }

    /// Record that canonical normal forms at `degree` were certified by an
    /// external count argument (normal-word counts matching the known
    /// dimension), which implies joinability there without running overlap
    /// resolution at that degree.
    pub fn certify_degree(&mut self, degree: usize) {
        if degree > self.certified_cap {
            self.certified_cap = degree;
        }
    }

    /// Map every rule coefficient through `f` (used for rational
    /// specialization of whole presentations).
    pub fn map_scalars<F: Fn(&Scalar) -> Result<Scalar, E>, E>(
        &self,
        f: &F,
    ) -> Result<RewriteSystem, E> {
        let mut rules = Vec::with_capacity(self.rules.len());
        for r in &self.rules {
            let mut rhs = NCPoly::zero();
            for (w, c) in r.rhs.terms() {
                rhs.add_term(w.clone(), f(c)?);
            }
            rules.push(Rule {
                lhs: r.lhs.clone(),
                rhs,
            });
        }
        let mut sys = RewriteSystem {
            n_gens: self.n_gens,
            rules,
            by_first: vec![Vec::new(); self.n_gens],
            by_last: vec![Vec::new(); self.n_gens],
            confluent_cap: self.confluent_cap,
            certified_cap: self.certified_cap,
        };
        sys.reindex();
        Ok(sys)
    }
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "RewriteSystem({} gens, {} rules, confluent to {})",
            self.n_gens,
            self.rules.len(),
            self.confluent_cap
        )?;
        for r in &self.rules {
            writeln!(f, "  {:?} -> {:?}", r.lhs, r.rhs)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // two commuting generators x, y with yx -> xy
    fn commutative2() -> RewriteSystem {
        let yx = NCPoly::from_word(Word(vec![1, 0]));
        let xy = NCPoly::from_word(Word(vec![0, 1]));
        RewriteSystem::new(2, vec![(yx, xy)]).unwrap()
    }

    #[test]
    fn unit_is_normal() {
        let sys = commutative2();
        let one = NCPoly::one();
        assert_eq!(sys.normal_form(&one, 4).unwrap(), one);
    }

    #[test]
    fn idempotent_on_normal_input() {
        let sys = commutative2();
        let p = NCPoly::from_word(Word(vec![0, 0, 1]));
        let n1 = sys.normal_form(&p, 4).unwrap();
        assert_eq!(n1, p);
        assert_eq!(sys.normal_form(&n1, 4).unwrap(), n1);
    }

    #[test]
    fn commutative_completion_adds_nothing() {
        let sys = commutative2().complete_up_to(6).unwrap();
        assert_eq!(sys.rules().len(), 1);
        assert_eq!(sys.confluent_cap(), 6);
        // basis at degree d is d+1 sorted monomials
        for d in 0..=5 {
            assert_eq!(sys.basis_words(d).len(), d + 1);
        }
    }

    #[test]
    fn multiply_checks_cap() {
        let sys = commutative2();
        let x3 = NCPoly::from_word(Word(vec![0, 0, 0]));
        assert!(matches!(
            sys.multiply(&x3, &x3, 5),
            Err(RewriteError::CapExceeded { .. })
        ));
        let ok = sys.multiply(&x3, &x3, 6).unwrap();
        assert_eq!(ok, NCPoly::from_word(Word(vec![0; 6])));
    }

    #[test]
    fn inconsistent_presentation_detected() {
        // x = 1 and x = 2 forces 1 = 0 after inter-reduction
        let x = NCPoly::gen(0);
        let r = RewriteSystem::new(
            1,
            vec![
                (x.clone(), NCPoly::one()),
                (x, NCPoly::scalar(Scalar::from_int(2))),
            ],
        );
        assert!(matches!(r, Err(RewriteError::Inconsistent)));
    }

    #[test]
    fn group_relation_inclusion_ambiguity() {
        // t tbar -> 1, tbar t -> 1, then adjoin t -> 1; completion must
        // derive tbar -> 1 (inclusion of the new rule inside the old lhs)
        let t = NCPoly::gen(0);
        let tb = NCPoly::gen(1);
        let sys = RewriteSystem::new(
            2,
            vec![
                (t.mul_raw(&tb), NCPoly::one()),
                (tb.mul_raw(&t), NCPoly::one()),
                (t.clone(), NCPoly::one()),
            ],
        )
        .unwrap()
        .complete_up_to(4)
        .unwrap();
        let nf = sys.normal_form(&tb, 4).unwrap();
        assert!(nf.is_one(), "tbar should collapse to 1, got {:?}", nf);
        assert_eq!(sys.basis_words(1).len(), 0);
    }
}
