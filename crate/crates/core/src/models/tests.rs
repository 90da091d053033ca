use super::*;
use crate::hopf::{coinvariants, TensorElement};

#[test]
fn su2_counit_and_relations() {
    let m = build_su2_with(QConvention::Standard, 6).unwrap();
    let names = m.hopf.algebra.gen_names();
    assert_eq!(names, ["a", "b", "c", "d"]);
    let eps = m.hopf.counit_values();
    assert!(eps[0].is_one() && eps[3].is_one());
    assert!(eps[1].is_zero() && eps[2].is_zero());

    // c*b = b*c holds as a relation; in this monomial order both sides
    // continue through the determinant rule to the same normal form
    let sys = m.hopf.system();
    let cb = m.hopf.algebra.parse_poly("c*b").unwrap();
    let bc = m.hopf.algebra.parse_poly("b*c").unwrap();
    let nf = sys.normal_form(&cb, 6).unwrap();
    assert_eq!(nf, sys.normal_form(&bc, 6).unwrap());
    assert_eq!(m.hopf.algebra.render_poly(&nf), "q*a*d - q");

    let ba = m.hopf.algebra.parse_poly("b*a").unwrap();
    assert_eq!(
        m.hopf.algebra.render_poly(&sys.normal_form(&ba, 6).unwrap()),
        "q*a*b"
    );

    // the chosen determinant convention reduces to 1
    let det = m.hopf.algebra.parse_poly("a*d - q^-1*b*c").unwrap();
    assert!(sys.normal_form(&det, 6).unwrap().is_one());
}

#[test]
fn su2_degree_2_basis_has_9_words() {
    let m = build_su2_with(QConvention::Standard, 6).unwrap();
    let sys = m.hopf.system();
    assert_eq!(sys.basis_words(1).len(), 4);
    assert_eq!(sys.basis_words(2).len(), 9);
    // cross-check against the monomial-basis count per degree
    for d in 0..=5 {
        assert_eq!(sys.basis_words(d).len(), flat_dim(2, d), "degree {}", d);
    }
}

#[test]
fn su2_completion_adds_no_rules_at_cap_6() {
    let conv = QConvention::Standard;
    let mut relations = frt_relations(2, conv);
    relations.push((quantum_determinant(2, conv), NCPoly::one()));
    let before = RewriteSystem::new(4, relations).unwrap();
    let n_before = before.rules().len();
    let after = before.complete_up_to(6).unwrap();
    assert_eq!(after.rules().len(), n_before);
}

#[test]
fn su2_hopf_axioms_pass_at_cap_4() {
    let m = build_su2_with(QConvention::Standard, 10).unwrap();
    let report = m.hopf.check_axioms(4).unwrap();
    assert!(report.passed(), "{:?}", report);
}

#[test]
fn su2_inverted_convention_also_passes() {
    let m = build_su2_with(QConvention::Inverted, 6).unwrap();
    let report = m.hopf.check_axioms(3).unwrap();
    assert!(report.passed(), "{:?}", report);
}

#[test]
fn su2_antipode_squared_is_a_q_power_on_b() {
    let m = build_su2_with(QConvention::Standard, 6).unwrap();
    let b = m.u(1, 2);
    let s1 = m.hopf.antipode(&b, 6).unwrap();
    let s2 = m.hopf.antipode(&s1, 6).unwrap();
    assert_eq!(s2, b.scale(&Scalar::q_pow(2)));
}

#[test]
fn corrupted_antipode_fails_with_witness() {
    // negating the antipode table respects all relations (they are
    // quadratic except the determinant, whose sign survives squaring is
    // wrong: the sign cancels in even degrees) but breaks the antipode law
    let conv = QConvention::Standard;
    let mut relations = frt_relations(2, conv);
    relations.push((quantum_determinant(2, conv), NCPoly::one()));
    let system = RewriteSystem::new(4, relations)
        .unwrap()
        .complete_up_to(6)
        .unwrap();
    let algebra = Presentation::new(
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        system,
    );
    let good = build_su2_with(conv, 6).unwrap();
    let gens: Vec<GenStructure> = (0..4u8)
        .map(|g| GenStructure {
            delta: good
                .hopf
                .delta_of_gen(g)
                .terms()
                .map(|((l, r), c)| {
                    (
                        NCPoly::from_term(l.clone(), c.clone()),
                        NCPoly::from_word(r.clone()),
                    )
                })
                .collect(),
            counit: good.hopf.counit_values()[g as usize].clone(),
            antipode: good.hopf.antipode_of_gen(g).neg(),
        })
        .collect();
    let tampered = HopfPresentation::new(algebra, gens, None, vec![], 4).unwrap();
    let report = tampered.check_axioms(2).unwrap();
    assert!(!report.passed());
    let failing: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.status == crate::hopf::CheckStatus::Fail)
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|e| e.witness.is_some()));
}

#[test]
fn quantum_determinant_is_grouplike_in_the_bialgebra() {
    // in the FRT bialgebra (no determinant relation) the determinant
    // satisfies delta(det) = det (x) det and eps(det) = 1
    let conv = QConvention::Standard;
    let system = RewriteSystem::new(4, frt_relations(2, conv))
        .unwrap()
        .complete_up_to(6)
        .unwrap();
    let det = quantum_determinant(2, conv);
    let det_nf = system.normal_form(&det, 6).unwrap();
    // extend the matrix coproduct multiplicatively by hand
    let delta_gen: Vec<TensorElement> = (1..=2)
        .flat_map(|i| {
            (1..=2).map(move |j| {
                let mut t = TensorElement::zero();
                for k in 1..=2 {
                    t.add_pair(
                        &NCPoly::gen((2 * (i - 1) + (k - 1)) as u8),
                        &NCPoly::gen((2 * (k - 1) + (j - 1)) as u8),
                        &Scalar::one(),
                    );
                }
                t
            })
        })
        .collect();
    let mut d_det = TensorElement::zero();
    for (w, c) in det_nf.terms() {
        let mut acc = TensorElement::unit();
        for &g in &w.0 {
            acc = acc.mul(&delta_gen[g as usize], &system, &system, 6).unwrap();
        }
        d_det.add_assign_scaled(&acc, c);
    }
    let mut expect = TensorElement::zero();
    expect.add_pair(&det_nf, &det_nf, &Scalar::one());
    let expect = expect.normalized(&system, &system, 6).unwrap();
    assert_eq!(d_det, expect);
}

#[test]
fn su3_structure() {
    let m = build_su3().unwrap();
    assert_eq!(m.hopf.algebra.n_gens(), 9);
    let eps = m.hopf.counit_values();
    for i in 1..=3 {
        for j in 1..=3 {
            let e = &eps[m.gen_index(i, j) as usize];
            assert_eq!(e.is_one(), i == j);
            assert_eq!(e.is_zero(), i != j);
        }
    }
    // degree <= 4 normal-word counts match the flat counts
    for d in 0..=4 {
        assert_eq!(m.hopf.system().basis_words(d).len(), flat_dim(3, d));
    }
    // completion produced output beyond the initial 37 relations
    assert!(m.hopf.system().rules().len() > 37);
}

#[test]
fn su3_hopf_axioms_pass_at_cap_2() {
    // cap 3 runs in the acceptance suite; cap 2 keeps the unit test quick
    let m = build_su3().unwrap();
    let report = m.hopf.check_axioms(2).unwrap();
    assert!(report.passed(), "{:?}", report);
}

#[test]
fn torus_grouplikes_and_quotient() {
    let t = build_torus(1, 12).unwrap();
    // all Laurent monomials are grouplike
    for exps in [[0i64], [1], [-2], [3]] {
        let w = NCPoly::from_word(t.monomial(&exps));
        assert!(t.hopf.is_grouplike(&w, 6).unwrap());
    }
    // generators of the matrix models are not grouplike; zero is rejected
    let su2 = build_su2_with(QConvention::Standard, 6).unwrap();
    for g in 0..4u8 {
        assert!(!su2.hopf.is_grouplike(&NCPoly::gen(g), 4).unwrap());
    }
    assert!(!t.hopf.is_grouplike(&NCPoly::zero(), 4).unwrap());

    // the quotient by grouplikes collapses the torus to scalars
    let k = t.hopf.quotient_by_grouplikes().unwrap();
    assert_eq!(k.dims_up_to(4), vec![1, 0, 0, 0, 0]);

    let t2 = build_torus(2, 12).unwrap();
    let k2 = t2.hopf.quotient_by_grouplikes().unwrap();
    assert_eq!(k2.dims_up_to(3), vec![1, 0, 0, 0]);

    // with no grouplikes declared, the quotient is the identity
    let k_su2 = su2.hopf.quotient_by_grouplikes().unwrap();
    assert_eq!(
        k_su2.algebra.system.rules().len(),
        su2.hopf.algebra.system.rules().len()
    );
    assert_eq!(k_su2.dims_up_to(3), su2.hopf.dims_up_to(3));
}

#[test]
fn su2_torus_projection_and_grading() {
    let m = build_su2_with(QConvention::Standard, 8).unwrap();
    let t = build_torus(1, 16).unwrap();
    let proj = torus_projection(&m, &t).unwrap();
    // a -> t^-1, d -> t, b, c -> 0
    assert_eq!(proj.images()[0], NCPoly::gen(t.tbar(1)));
    assert_eq!(proj.images()[3], NCPoly::gen(t.t(1)));
    assert!(proj.images()[1].is_zero() && proj.images()[2].is_zero());
    let grading = torus_grading(&m, &t, &proj).unwrap();
    assert_eq!(grading.gen_degrees(), &[vec![-1], vec![1], vec![-1], vec![1]]);
}

#[test]
fn su3_torus_projection_degrees_match_column_weights() {
    let m = build_su3().unwrap();
    let t = build_torus(2, 24).unwrap();
    let proj = torus_projection(&m, &t).unwrap();
    let grading = torus_grading(&m, &t, &proj).unwrap();
    for i in 1..=3 {
        for j in 1..=3 {
            let g = m.gen_index(i, j) as usize;
            assert_eq!(grading.gen_degrees()[g], m.col_weights[j - 1]);
        }
    }
}

#[test]
fn su3_levi_projection() {
    let m = build_su3().unwrap();
    let proj = levi_projection_su3(&m).unwrap();
    // cross generators die, the block survives
    assert!(proj.images()[m.gen_index(1, 3) as usize].is_zero());
    assert!(proj.images()[m.gen_index(2, 3) as usize].is_zero());
    assert!(proj.images()[m.gen_index(3, 1) as usize].is_zero());
    assert!(proj.images()[m.gen_index(3, 2) as usize].is_zero());
    // the quotient of the target by its grouplike is the SU_2 model
    let k = proj.target.quotient_by_grouplikes().unwrap();
    let su2 = build_su2_with(QConvention::Standard, 6).unwrap();
    assert_eq!(k.dims_up_to(4), su2.hopf.dims_up_to(4));
}

#[test]
fn su2_zed_generators() {
    let m = build_su2_with(QConvention::Standard, 8).unwrap();
    let t = build_torus(1, 16).unwrap();
    let proj = torus_projection(&m, &t).unwrap();
    let grading = torus_grading(&m, &t, &proj).unwrap();
    let zed = zed_generators(&m, &NodeSubset::empty()).unwrap();
    let fam = zed.family(1).unwrap();
    assert_eq!(fam.z, m.u(2, 2));
    assert_eq!(fam.zbar, m.u(1, 1));
    for z in &fam.z_cols {
        assert_eq!(grading.poly_degree(z), Some(vec![1]));
    }
    for z in &fam.zbar_cols {
        assert_eq!(grading.poly_degree(z), Some(vec![-1]));
    }
    // z_gamma has the right degree and counit 1 for a window of gammas
    let sys = m.hopf.system();
    for g in -3i64..=3 {
        let zg = zed.z_gamma(&[g], sys, 8).unwrap();
        assert!(zg.apply_character(m.hopf.counit_values()).is_one());
        if g != 0 {
            assert_eq!(grading.poly_degree(&zg), Some(vec![g]));
        }
    }
}

#[test]
fn su3_zed_generators_have_fundamental_degrees() {
    let m = build_su3().unwrap();
    let t = build_torus(2, 24).unwrap();
    let proj = torus_projection(&m, &t).unwrap();
    let grading = torus_grading(&m, &t, &proj).unwrap();
    let zed = zed_generators(&m, &NodeSubset::empty()).unwrap();
    let f1 = zed.family(1).unwrap();
    for z in &f1.z_cols {
        assert_eq!(grading.poly_degree(z), Some(vec![1, 0]), "{:?}", z);
    }
    for z in &f1.zbar_cols {
        assert_eq!(grading.poly_degree(z), Some(vec![-1, 0]));
    }
    let f2 = zed.family(2).unwrap();
    for z in &f2.z_cols {
        assert_eq!(grading.poly_degree(z), Some(vec![0, 1]));
    }
    for z in &f2.zbar_cols {
        assert_eq!(grading.poly_degree(z), Some(vec![0, -1]));
    }
    assert_eq!(f1.z, m.u(3, 3));
    assert_eq!(f2.zbar, m.u(1, 1));
}

#[test]
fn su3_minor_columns_are_levi_semisimple_coinvariant() {
    // the weight-w2 column members are coinvariant for the coaction induced
    // by the Levi-block projection composed with its grouplike quotient
    let m = build_su3().unwrap();
    let levi = levi_projection_su3(&m).unwrap();
    let k = Rc::new(levi.target.quotient_by_grouplikes().unwrap());
    let images: Vec<NCPoly> = levi
        .images()
        .iter()
        .map(|p| k.system().normal_form(p, k.cap()).unwrap())
        .collect();
    let proj_k = SubgroupProjection::new(Rc::clone(&m.hopf), k, images, 2).unwrap();
    let co = proj_k.induced_coaction(2).unwrap();
    let zed = zed_generators(&m, &NodeSubset::new([1])).unwrap();
    let fam = zed.family(2).unwrap();
    for z in fam.z_cols.iter().chain(&fam.zbar_cols) {
        let img = co.coact(z, m.hopf.cap()).unwrap();
        let mut expect = TensorElement::zero();
        expect.add_pair(z, &NCPoly::one(), &Scalar::one());
        assert_eq!(img, expect, "{}", m.hopf.algebra.render_poly(z));
    }
}

#[test]
fn coinvariants_of_full_coproduct_are_scalars() {
    let m = build_su2_with(QConvention::Standard, 6).unwrap();
    // coaction = coproduct itself
    let images: Vec<TensorElement> = (0..4u8).map(|g| m.hopf.delta_of_gen(g).clone()).collect();
    let co = crate::hopf::Coaction::new(
        Rc::clone(&m.hopf),
        Rc::clone(&m.hopf),
        images,
        3,
    )
    .unwrap();
    assert_eq!(coinvariants(&co, 0).unwrap().len(), 1);
    assert_eq!(coinvariants(&co, 1).unwrap().len(), 0);
    assert_eq!(coinvariants(&co, 2).unwrap().len(), 0);
}

#[test]
fn su2_torus_coinvariants_match_weight_zero_counts() {
    let m = build_su2_with(QConvention::Standard, 8).unwrap();
    let t = build_torus(1, 16).unwrap();
    let proj = torus_projection(&m, &t).unwrap();
    let co = proj.induced_coaction(2).unwrap();
    let grading = torus_grading(&m, &t, &proj).unwrap();
    for d in 0..=4 {
        let basis = coinvariants(&co, d).unwrap();
        let weight_zero = grading
            .component_words(m.hopf.system(), &[0], d)
            .len();
        assert_eq!(basis.len(), weight_zero, "degree {}", d);
        // the coinvariants form a subalgebra: pairwise products stay coinvariant
        if d == 2 {
            for x in &basis {
                for y in &basis {
                    let xy = m.hopf.system().multiply(x, y, 8).unwrap();
                    let img = co.coact(&xy, 8).unwrap();
                    let mut expect = TensorElement::zero();
                    expect.add_pair(&xy, &NCPoly::one(), &Scalar::one());
                    assert_eq!(img, expect);
                }
            }
        }
    }
}

#[test]
fn export_and_reload_roundtrip() {
    let m = build_su2_with(QConvention::Standard, 6).unwrap();
    let text = export_model(&m).unwrap();
    let resolver = |spec: &str| -> Result<Rc<HopfPresentation>, HopfError> {
        let r: usize = spec
            .strip_prefix("torus ")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| HopfError::Io {
                line: 0,
                message: format!("unknown target '{}'", spec),
            })?;
        Ok(Rc::clone(&build_torus(r, 16).unwrap().hopf))
    };
    let loaded = crate::hopf::parse_model_file(&text, &resolver).unwrap();
    assert_eq!(loaded.hopf.algebra.n_gens(), 4);
    assert_eq!(loaded.coactions.len(), 1);
    // canonical rendering is reproduced byte for byte
    let co_refs: Vec<(String, String, &crate::hopf::Coaction)> = loaded
        .coactions
        .iter()
        .map(|(n, s, c)| (n.clone(), s.clone(), c))
        .collect();
    let again = crate::hopf::render_model_file(&loaded.hopf, &co_refs);
    assert_eq!(again, text);
    // and the reloaded model verifies
    assert!(loaded.hopf.check_axioms(2).unwrap().passed());
}
