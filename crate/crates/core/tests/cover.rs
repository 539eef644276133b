use adlv_core::cover::*;
use adlv_core::error::Refusal;
use adlv_core::newton::depth_grid;
use adlv_core::weyl::enumerate_group;
use adlv_core::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rs(ty: CartanType, n: usize) -> RootSystem {
    RootSystem::new(ty, n).unwrap()
}

#[test]
fn threshold_values() {
    assert_eq!(cover_depth_threshold(CartanType::A), 3);
    assert_eq!(cover_depth_threshold(CartanType::D), 3);
    assert_eq!(cover_depth_threshold(CartanType::E), 3);
    assert_eq!(cover_depth_threshold(CartanType::B), 4);
    assert_eq!(cover_depth_threshold(CartanType::C), 4);
    assert_eq!(cover_depth_threshold(CartanType::F), 4);
    assert_eq!(cover_depth_threshold(CartanType::G), 6);
}

#[test]
fn a2_translation_records() {
    let a2 = rs(CartanType::A, 2);
    let e = WeylElt::identity(2);
    let recs = predicted_cocovers(&a2, &e, &[3, 3], &e).unwrap();
    assert_eq!(recs.len(), 5);
    let case2: Vec<_> = recs.iter().filter(|r| r.cases == [2]).collect();
    let case3: Vec<_> = recs.iter().filter(|r| r.cases == [3]).collect();
    assert_eq!(case2.len(), 3);
    assert_eq!(case3.len(), 2);
    for r in &case2 {
        assert_eq!(r.m, 1);
        let k = a2.root_index(&r.root).unwrap();
        assert_eq!(r.result.finite, WeylElt::reflection(&a2, k));
    }
    for r in &case3 {
        assert_eq!(r.result.lambda, vec![3, 3]);
        assert_eq!(r.root.0.iter().sum::<i64>(), 1);
    }
    let aw = AffineWeyl::new(&a2);
    let w = AffineElt::translation(vec![3, 3]);
    for r in &recs {
        assert_eq!(r.reflection.mul(&w), r.result);
        assert_eq!(aw.length(&r.result) + 1, aw.length(&w));
        assert!(aw.bruhat_leq(&r.result, &w));
    }
    assert_eq!(aw.cocovers(&w).len(), 5);
}

#[test]
fn refusals() {
    let a2 = rs(CartanType::A, 2);
    let e = WeylElt::identity(2);
    assert!(matches!(
        predicted_cocovers(&a2, &e, &[2, 5], &e),
        Err(Refusal::BelowThreshold { threshold: 3, .. })
    ));
    assert_eq!(predicted_cocovers(&a2, &e, &[-3, 5], &e), Err(Refusal::NotDominant));
}

#[test]
fn case_one_needs_nontrivial_u() {
    let b3 = rs(CartanType::B, 3);
    let e = WeylElt::identity(3);
    for v in enumerate_group(&b3, 100).unwrap().elements() {
        let recs = predicted_cocovers(&b3, &e, &[4, 4, 5], v).unwrap();
        assert!(recs.iter().all(|r| !r.cases.contains(&1)));
    }
}

#[test]
fn g2_case_two_roots_are_quantum() {
    let g2 = rs(CartanType::G, 2);
    let e = WeylElt::identity(2);
    let recs = predicted_cocovers(&g2, &e, &[6, 6], &e).unwrap();
    let roots: Vec<usize> = recs
        .iter()
        .filter(|r| r.cases.contains(&2))
        .map(|r| g2.root_index(&r.root).unwrap())
        .collect();
    assert_eq!(roots.len(), 4);
    assert!(roots.iter().all(|&k| g2.is_quantum(k)));
    assert_eq!(verify_cover_theorem(&g2, &e, &[6, 6], &e).mismatches, 0);
}

fn sweep(ty: CartanType, n: usize, all_u: bool) -> usize {
    let r = rs(ty, n);
    let t = enumerate_group(&r, 100).unwrap();
    let c = cover_depth_threshold(ty);
    let e = WeylElt::identity(n);
    let us: Vec<&WeylElt> = if all_u { t.elements().iter().collect() } else { vec![&e] };
    let mut count = 0;
    for lam in depth_grid(n, c, c + 2) {
        for u in &us {
            for v in t.elements() {
                let rep = verify_cover_theorem(&r, u, &lam, v);
                assert!(!rep.below_threshold);
                assert_eq!(rep.mismatches, 0, "{ty}{n} {} missing {:?} extra {:?}", rep.w, rep.missing, rep.extra);
                assert_eq!(rep.non_quantum_cases, 0);
                count += 1;
            }
        }
    }
    count
}

#[test]
fn sweep_a2_all_u() {
    assert_eq!(sweep(CartanType::A, 2, true), 9 * 36);
}

#[test]
fn sweep_b2() {
    assert_eq!(sweep(CartanType::B, 2, false), 9 * 8);
}

#[test]
fn sweep_g2() {
    assert_eq!(sweep(CartanType::G, 2, false), 9 * 12);
}

#[test]
fn sampled_a3() {
    let a3 = rs(CartanType::A, 3);
    let t = enumerate_group(&a3, 100).unwrap();
    let e = WeylElt::identity(3);
    let nontrivial: Vec<&WeylElt> = t.elements().iter().filter(|u| **u != e).collect();
    let grid = depth_grid(3, 3, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..240 {
        let u = nontrivial.choose(&mut rng).unwrap();
        let v = t.elements().choose(&mut rng).unwrap();
        let lam = grid.choose(&mut rng).unwrap();
        let rep = verify_cover_theorem(&a3, u, lam, v);
        assert_eq!(rep.mismatches, 0, "{}", rep.w);
    }
}

#[test]
fn below_threshold_probe_is_flagged() {
    let a2 = rs(CartanType::A, 2);
    let t = enumerate_group(&a2, 10).unwrap();
    let e = WeylElt::identity(2);
    let mut mismatched = 0;
    for v in t.elements() {
        let rep = verify_cover_theorem(&a2, &e, &[1, 1], v);
        assert!(rep.below_threshold);
        mismatched += usize::from(rep.mismatches > 0);
    }
    eprintln!("A2 depth 1: {mismatched} of 6 elements disagree");
}
