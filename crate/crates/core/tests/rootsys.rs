use adlv_core::weyl::WeylElt;
use adlv_core::*;
use num_rational::Rational64;
use proptest::prelude::*;

fn all_types_up_to(max_rank: usize) -> Vec<(CartanType, usize)> {
    let mut out = Vec::new();
    for ty in CartanType::ALL {
        for n in 1..=max_rank {
            if ty.validate(n).is_ok() {
                out.push((ty, n));
            }
        }
    }
    out
}

fn classical_count(ty: CartanType, n: usize) -> usize {
    match ty {
        CartanType::A => n * (n + 1) / 2,
        CartanType::B | CartanType::C => n * n,
        CartanType::D => n * (n - 1),
        CartanType::E => [36, 63, 120][n - 6],
        CartanType::F => 24,
        CartanType::G => 6,
    }
}

fn simple_coroot(n: usize, i: usize) -> CorootVec {
    let mut c = vec![0; n];
    c[i] = 1;
    CorootVec(c)
}

#[test]
fn root_counts_and_cartan_shape() {
    for (ty, n) in all_types_up_to(8) {
        let rs = RootSystem::new(ty, n).unwrap();
        assert_eq!(rs.num_positive_roots(), classical_count(ty, n), "{ty}{n}");
        assert_eq!(rs.positive_coroots().len(), rs.num_positive_roots());
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    assert_eq!(rs.cartan(i, j), 2);
                } else {
                    assert!(rs.cartan(i, j) <= 0);
                }
            }
        }
    }
}

#[test]
fn invalid_pairs_are_rejected() {
    for (ty, n) in [(CartanType::B, 1), (CartanType::D, 3), (CartanType::E, 5), (CartanType::F, 3), (CartanType::G, 3), (CartanType::A, 0)] {
        assert!(matches!(RootSystem::new(ty, n), Err(Error::InvalidCartanType { .. })));
    }
}

#[test]
fn bourbaki_conventions() {
    let b2 = RootSystem::new(CartanType::B, 2).unwrap();
    assert_eq!(b2.cartan_matrix(), vec![vec![2, -1], vec![-2, 2]]);
    let g2 = RootSystem::new(CartanType::G, 2).unwrap();
    assert_eq!(g2.theta(), &RootVec(vec![3, 2]));
    let a1 = RootSystem::new(CartanType::A, 1).unwrap();
    assert_eq!(a1.theta(), &RootVec(vec![1]));
    assert_eq!(a1.num_positive_roots(), 1);
}

#[test]
fn theta_is_the_maximum() {
    for (ty, n) in all_types_up_to(8) {
        let rs = RootSystem::new(ty, n).unwrap();
        let th = rs.theta();
        for b in rs.positive_roots() {
            assert!(b.0.iter().zip(&th.0).all(|(x, y)| x <= y), "{ty}{n}");
            assert!(b.0.iter().all(|&c| c >= 0));
        }
    }
}

#[test]
fn rho_pairs_to_one_on_simple_roots() {
    for (ty, n) in all_types_up_to(8) {
        let rs = RootSystem::new(ty, n).unwrap();
        for i in 0..n {
            let a = rs.simple_root(i).clone();
            assert_eq!(rs.pair_coweight(&a, &rs.rho_check()).unwrap(), Rational64::from_integer(1));
            let c = rs.coroot_to_coweight(&simple_coroot(n, i));
            assert_eq!(rs.rho_pair(&c), Rational64::from_integer(1), "{ty}{n}");
        }
        assert_eq!(rs.depth(&rs.rho_check()), Rational64::from_integer(1));
    }
}

#[test]
fn theta_against_two_rho_check() {
    let a2 = RootSystem::new(CartanType::A, 2).unwrap();
    assert_eq!(a2.pair(a2.theta(), a2.two_rho_check()), 4);
    let e7 = RootSystem::new(CartanType::E, 7).unwrap();
    assert_eq!(e7.theta().height(), 17);
    assert_eq!(e7.pair(e7.theta(), e7.two_rho_check()), 34);
}

#[test]
fn pairing_dimension_mismatch() {
    let a2 = RootSystem::new(CartanType::A, 2).unwrap();
    let bad = Coweight::from_ints(&[1, 2, 3]);
    assert!(matches!(
        a2.pair_coweight(a2.theta(), &bad),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn quantum_roots_follow_the_classification() {
    for (ty, n) in all_types_up_to(8) {
        let rs = RootSystem::new(ty, n).unwrap();
        let short_simple: Vec<bool> = (0..n).map(|i| !rs.is_long(rs.root_index(rs.simple_root(i)).unwrap())).collect();
        for (k, b) in rs.positive_roots().iter().enumerate() {
            let expected = rs.is_long(k) || b.0.iter().enumerate().all(|(i, &c)| c == 0 || short_simple[i]);
            assert_eq!(rs.is_quantum(k), expected, "{ty}{n} {b}");
            assert!((rs.reflection_length(k) as i64) < rs.two_rho_pair(k));
        }
        for i in 0..n {
            assert!(rs.is_quantum(rs.root_index(rs.simple_root(i)).unwrap()));
        }
        assert!(rs.is_quantum(rs.theta_index()));
        if ty.is_simply_laced() {
            assert_eq!(rs.quantum_roots().len(), rs.num_positive_roots());
        }
    }
    let g2 = RootSystem::new(CartanType::G, 2).unwrap();
    let mut q = g2.quantum_roots();
    q.sort();
    let mut expected = vec![RootVec(vec![1, 0]), RootVec(vec![0, 1]), RootVec(vec![3, 1]), RootVec(vec![3, 2])];
    expected.sort();
    assert_eq!(q, expected);
}

#[test]
fn depth_examples() {
    assert_eq!(Coweight::from_ints(&[8, 3]).depth(), Rational64::from_integer(3));
    assert_eq!(Coweight::zero(3).depth(), Rational64::from_integer(0));
}

#[test]
fn dominance_examples() {
    let a2 = RootSystem::new(CartanType::A, 2).unwrap();
    let theta = a2.coroot_to_coweight(&CorootVec(vec![1, 1]));
    assert!(a2.dominance_leq(&Coweight::zero(2), &theta));
    assert!(a2.dominance_leq(&theta, &theta));
    let a1 = a2.coroot_to_coweight(&CorootVec(vec![1, 0]));
    let a2c = a2.coroot_to_coweight(&CorootVec(vec![0, 1]));
    assert!(!a2.dominance_leq(&a1, &a2c));
    assert!(!a2.dominance_leq(&a2c, &a1));
}

#[test]
fn dominant_rep_examples() {
    let a2 = RootSystem::new(CartanType::A, 2).unwrap();
    let (d, w) = a2.dominant_rep(&Coweight::zero(2));
    assert_eq!(d, Coweight::zero(2));
    assert!(w.is_identity());
    let neg = a2.coroot_to_coweight(&CorootVec(vec![-1, 0]));
    let (d, w) = a2.dominant_rep(&neg);
    assert_eq!(d, Coweight::from_ints(&[1, 1]));
    assert_eq!(w.act_coweight(&neg), d);
    let lam = Coweight::from_ints(&[2, 5]);
    let (d, w) = a2.dominant_rep(&lam);
    assert_eq!(d, lam);
    assert!(w.is_identity());
}

#[test]
fn dominant_rep_is_constant_on_orbits() {
    for (ty, n) in all_types_up_to(3) {
        let rs = RootSystem::new(ty, n).unwrap();
        let table = weyl::enumerate_group(&rs, 1000).unwrap();
        let lams = [vec![1; n], (0..n as i64).map(|i| i - 1).collect::<Vec<_>>(), vec![-2; n]];
        for lam in lams {
            let lam = Coweight::from_ints(&lam);
            let (d, _) = rs.dominant_rep(&lam);
            assert!(d.is_dominant());
            for x in table.elements() {
                let (dx, w) = rs.dominant_rep(&x.act_coweight(&lam));
                assert_eq!(dx, d);
                assert_eq!(w.act_coweight(&x.act_coweight(&lam)), d);
            }
        }
    }
}

#[test]
fn coweight_lattices() {
    let a2 = RootSystem::new(CartanType::A, 2).unwrap();
    assert_eq!(a2.lattice_of(&Coweight::from_ints(&[2, -1])), Lattice::Coroot);
    assert_eq!(a2.lattice_of(&Coweight::from_ints(&[1, 0])), Lattice::Coweight);
    let half = Coweight(vec![Rational64::new(1, 2), Rational64::from_integer(0)]);
    assert_eq!(a2.lattice_of(&half), Lattice::Rational);
    assert_eq!(a2.to_coroot(&Coweight::from_ints(&[1, 1])), Some(CorootVec(vec![1, 1])));
}

const SAMPLED: [(CartanType, usize); 4] = [(CartanType::A, 3), (CartanType::B, 4), (CartanType::G, 2), (CartanType::D, 4)];

fn rank_and_points() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>)> {
    (0usize..4).prop_flat_map(|k| {
        let n = SAMPLED[k].1;
        let v = || prop::collection::vec(-6i64..6, n);
        (Just(k), v(), v(), v())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, .. ProptestConfig::default() })]

    #[test]
    fn dominance_is_a_partial_order((k, a, b, c) in rank_and_points()) {
        let (ty, n) = SAMPLED[k];
        let rs = RootSystem::new(ty, n).unwrap();
        let (a, b, c) = (Coweight::from_ints(&a), Coweight::from_ints(&b), Coweight::from_ints(&c));
        prop_assert!(rs.dominance_leq(&a, &a));
        if rs.dominance_leq(&a, &b) && rs.dominance_leq(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if rs.dominance_leq(&a, &b) && rs.dominance_leq(&b, &c) {
            prop_assert!(rs.dominance_leq(&a, &c));
        }
        // a <= a + (positive coroot)
        let up = a.add(&rs.coroot_to_coweight(&rs.positive_coroots()[0]));
        prop_assert!(rs.dominance_leq(&a, &up));
    }

    #[test]
    fn reflections_preserve_the_orbit((k, a, _b, _c) in rank_and_points(), i in 0usize..4) {
        let (ty, n) = SAMPLED[k];
        let rs = RootSystem::new(ty, n).unwrap();
        let i = i % n;
        let lam = Coweight::from_ints(&a);
        let s = WeylElt::simple(&rs, i + 1);
        prop_assert_eq!(rs.dominant_rep(&s.act_coweight(&lam)).0, rs.dominant_rep(&lam).0);
    }
}
