use super::*;

fn datum(series: Series, rank: usize) -> CartanDatum {
    CartanDatum::new(series, rank).unwrap()
}

#[test]
fn a2_cartan_matrix() {
    let d = datum(Series::A, 2);
    assert_eq!(*d.cartan_matrix(), vec![vec![2, -1], vec![-1, 2]]);
    assert_eq!(d.symmetrizer_vec(), &[1, 1]);
}

#[test]
fn c2_cartan_matrix() {
    // derived from (coroot_i, root_j) with standard C_2 root data:
    // root_1 = e1 - e2 (short), root_2 = 2 e2 (long), (e_i, e_j) = delta
    // (coroot_1, root_2) = (e1 - e2, 2 e2) = -2, (coroot_2, root_1) = (e2, e1 - e2) = -1
    let d = datum(Series::C, 2);
    assert_eq!(d.a(1, 2) * d.a(2, 1), 2);
    assert_eq!(d.a(1, 2), -2);
    assert_eq!(d.a(2, 1), -1);
    assert_eq!(d.symmetrizer_vec(), &[1, 2]);
}

#[test]
fn g2_cartan_matrix() {
    // same oracle with G_2 data: root_1 short (d=1), root_2 long (d=3),
    // (root_1, root_2) = -3
    let d = datum(Series::G, 2);
    assert_eq!(d.a(1, 2) * d.a(2, 1), 3);
    assert_eq!(d.a(1, 2), -3);
    assert_eq!(d.a(2, 1), -1);
}

#[test]
fn invalid_rank_combinations_rejected() {
    assert!(CartanDatum::new(Series::D, 3).is_err());
    assert!(CartanDatum::new(Series::E, 5).is_err());
    assert!(CartanDatum::new(Series::F, 3).is_err());
    assert!(CartanDatum::new(Series::B, 1).is_err());
}

#[test]
fn a2_positive_roots_by_hand() {
    // reflection closure by hand: a1, a2, a1+a2
    let roots = datum(Series::A, 2).positive_roots();
    assert_eq!(
        roots,
        vec![Root(vec![0, 1]), Root(vec![1, 0]), Root(vec![1, 1])]
    );
}

#[test]
fn positive_root_counts_match_closed_forms() {
    for n in 1..=8 {
        assert_eq!(datum(Series::A, n).positive_roots().len(), n * (n + 1) / 2);
    }
    for n in 2..=8 {
        assert_eq!(datum(Series::B, n).positive_roots().len(), n * n);
        assert_eq!(datum(Series::C, n).positive_roots().len(), n * n);
    }
    for n in 4..=8 {
        assert_eq!(datum(Series::D, n).positive_roots().len(), n * (n - 1));
    }
    assert_eq!(datum(Series::G, 2).positive_roots().len(), 6);
    assert_eq!(datum(Series::F, 4).positive_roots().len(), 24);
    assert_eq!(datum(Series::E, 6).positive_roots().len(), 36);
    assert_eq!(datum(Series::E, 7).positive_roots().len(), 63);
    assert_eq!(datum(Series::E, 8).positive_roots().len(), 120);
}

#[test]
fn positive_roots_is_stable() {
    let d = datum(Series::F, 4);
    assert_eq!(d.positive_roots(), d.positive_roots());
}

#[test]
fn pairing_is_kronecker_on_fundamentals() {
    for (series, max_rank) in [
        (Series::A, 8),
        (Series::B, 8),
        (Series::C, 8),
        (Series::D, 8),
    ] {
        let min_rank = match series {
            Series::A => 1,
            Series::B | Series::C => 2,
            _ => 4,
        };
        for rank in min_rank..=max_rank {
            let d = datum(series, rank);
            for i in 1..=rank {
                for j in 1..=rank {
                    let w = Weight::fundamental(rank, j);
                    assert_eq!(d.pairing(&w, i), if i == j { 1 } else { 0 });
                }
            }
        }
    }
}

#[test]
fn pairing_is_linear() {
    let d = datum(Series::A, 2);
    let w = Weight::fundamental(2, 1).add(&Weight::fundamental(2, 2)).add(&Weight::fundamental(2, 2));
    assert_eq!(d.pairing(&w, 2), 2);
    assert_eq!(d.pairing(&Weight::zero(2), 1), 0);
}

/// Brute-force irreducibility scan: singleton colored node whose coefficient
/// in every positive root is at most 1.
fn irreducible_by_scan(d: &CartanDatum, x: usize) -> bool {
    d.positive_roots().iter().all(|r| r.0[x - 1] <= 1)
}

#[test]
fn irreducibility_matches_scan_for_all_singletons() {
    let data: Vec<CartanDatum> = [
        (Series::A, 1..=8),
        (Series::B, 2..=8),
        (Series::C, 2..=8),
        (Series::D, 4..=8),
        (Series::E, 6..=8),
        (Series::F, 4..=4),
        (Series::G, 2..=2),
    ]
    .into_iter()
    .flat_map(|(s, range)| range.map(move |r| datum(s, r)))
    .collect();
    for d in &data {
        for x in 1..=d.rank {
            let s = NodeSubset::new((1..=d.rank).filter(|&n| n != x));
            assert_eq!(
                d.is_irreducible_flag(&s).unwrap(),
                irreducible_by_scan(d, x),
                "{}{} node {}",
                d.series,
                d.rank,
                x
            );
        }
    }
}

#[test]
fn irreducible_families() {
    // A_n: every single node; C_n: only the last; B_n: only the first
    for n in 2..=8 {
        let a = datum(Series::A, n);
        for x in 1..=n {
            let s = NodeSubset::new((1..=n).filter(|&k| k != x));
            assert!(a.is_irreducible_flag(&s).unwrap());
        }
        let c = datum(Series::C, n);
        let b = datum(Series::B, n);
        for x in 1..=n {
            let s = NodeSubset::new((1..=n).filter(|&k| k != x));
            assert_eq!(c.is_irreducible_flag(&s).unwrap(), x == n, "C{} node {}", n, x);
            assert_eq!(b.is_irreducible_flag(&s).unwrap(), x == 1, "B{} node {}", n, x);
        }
    }
}

#[test]
fn flag_dimensions() {
    // A_2 full flag: all three positive roots
    let a2 = datum(Series::A, 2);
    assert_eq!(a2.flag_dimension(&NodeSubset::empty()).unwrap(), 3);
    // A_n with first node colored: projective space, dimension n
    for n in 1..=6 {
        let d = datum(Series::A, n);
        let s = NodeSubset::new(2..=n);
        assert_eq!(d.flag_dimension(&s).unwrap(), n);
    }
    // A_1 full: one root, and 2*1 + 1 = 3 is the real dimension of the 3-sphere
    let a1 = datum(Series::A, 1);
    let dim = a1.flag_dimension(&NodeSubset::empty()).unwrap();
    assert_eq!(dim, 1);
    assert_eq!(2 * dim + 1, 3);
}

#[test]
fn cayley_plane_dimension_is_16() {
    let e6 = datum(Series::E, 6);
    let s = NodeSubset::new(1..=5);
    assert_eq!(e6.flag_dimension(&s).unwrap(), 16);
}

#[test]
fn sublattice_membership() {
    let rank = 3;
    let s = NodeSubset::new([1, 2]);
    // fundamental weight on a node of S: dominant-on-S yes
    let w1 = Weight::fundamental(rank, 1);
    assert!(sublattice_member(&w1, &s, rank, Sublattice::DominantOnS).unwrap());
    // minus a colored fundamental weight: lattice-on-complement yes, dominant-on-S no
    let w3 = Weight::fundamental(rank, 3).neg();
    assert!(sublattice_member(&w3, &s, rank, Sublattice::LatticeOnComplement).unwrap());
    assert!(!sublattice_member(&w3, &s, rank, Sublattice::DominantOnS).unwrap());
    // mixed support: neither
    let mixed = Weight::fundamental(rank, 1).add(&Weight::fundamental(rank, 3));
    assert!(!sublattice_member(&mixed, &s, rank, Sublattice::DominantOnS).unwrap());
    assert!(!sublattice_member(&mixed, &s, rank, Sublattice::LatticeOnComplement).unwrap());
}

#[test]
fn induced_subsystem_classification() {
    // E6 minus node 6 leaves D5; check via classification and via root counts
    let e6 = datum(Series::E, 6);
    let sub = e6.induced_subsystems(&NodeSubset::new(1..=5)).unwrap();
    assert_eq!(sub.len(), 1);
    assert_eq!((sub[0].0.series, sub[0].0.rank), (Series::D, 5));
    // root-subsystem generation agrees with the classified type
    let inside = e6
        .positive_roots()
        .iter()
        .filter(|r| r.0[5] == 0)
        .count();
    assert_eq!(inside, sub[0].0.positive_roots().len());

    // C4 minus the long node leaves A3
    let c4 = datum(Series::C, 4);
    let sub = c4.induced_subsystems(&NodeSubset::new(1..=3)).unwrap();
    assert_eq!((sub[0].0.series, sub[0].0.rank), (Series::A, 3));

    // B4 keeping nodes 2..4 is B3
    let b4 = datum(Series::B, 4);
    let sub = b4.induced_subsystems(&NodeSubset::new(2..=4)).unwrap();
    assert_eq!((sub[0].0.series, sub[0].0.rank), (Series::B, 3));

    // F4 keeping nodes 2..4 is C3 (long node at an end)
    let f4 = datum(Series::F, 4);
    let sub = f4.induced_subsystems(&NodeSubset::new(2..=4)).unwrap();
    assert_eq!((sub[0].0.series, sub[0].0.rank), (Series::C, 3));

    // disconnected subset splits
    let a5 = datum(Series::A, 5);
    let sub = a5.induced_subsystems(&NodeSubset::new([1, 2, 4, 5])).unwrap();
    assert_eq!(sub.len(), 2);
    assert!(sub.iter().all(|(d, _)| d.series == Series::A && d.rank == 2));
}

#[test]
fn colored_diagram_text_roundtrip() {
    let cd: ColoredDiagram = "A3:c={1,3}".parse().unwrap();
    assert_eq!(cd.series, Series::A);
    assert_eq!(cd.rank, 3);
    assert_eq!(cd.colored, NodeSubset::new([1, 3]));
    assert_eq!(cd.to_string(), "A3:c={1,3}");
    let again: ColoredDiagram = cd.to_string().parse().unwrap();
    assert_eq!(again, cd);
    assert!("A3:c={9}".parse::<ColoredDiagram>().is_err());
}
