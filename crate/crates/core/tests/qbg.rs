use adlv_core::coxeter;
use adlv_core::qbg::*;
use adlv_core::weyl::{longest_element, FiniteWeyl};
use adlv_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rs(ty: CartanType, n: usize) -> RootSystem {
    RootSystem::new(ty, n).unwrap()
}

fn cv(c: &[i64]) -> CorootVec {
    CorootVec(c.to_vec())
}

const RANK_LE_3: [(CartanType, usize); 8] = [
    (CartanType::A, 1),
    (CartanType::A, 2),
    (CartanType::A, 3),
    (CartanType::B, 2),
    (CartanType::B, 3),
    (CartanType::C, 2),
    (CartanType::C, 3),
    (CartanType::G, 2),
];

const RANK_LE_4: [(CartanType, usize); 13] = [
    (CartanType::A, 1),
    (CartanType::A, 2),
    (CartanType::A, 3),
    (CartanType::A, 4),
    (CartanType::B, 2),
    (CartanType::B, 3),
    (CartanType::B, 4),
    (CartanType::C, 3),
    (CartanType::C, 4),
    (CartanType::D, 4),
    (CartanType::F, 4),
    (CartanType::G, 2),
    (CartanType::C, 2),
];

#[test]
fn edges_follow_the_definition() {
    for (ty, n) in RANK_LE_3 {
        let r = rs(ty, n);
        let g = build_qbg(&r, 1000).unwrap();
        assert!(g.is_strongly_connected());
        let t = g.table();
        for x in 0..g.len() as u32 {
            for e in g.out_edges(x) {
                let k = e.root as usize;
                let y = t.index_of(&t.element(x).mul(&WeylElt::reflection(&r, k)));
                assert_eq!(y, e.target);
                match e.kind {
                    EdgeKind::Up => assert_eq!(t.length(y), t.length(x) + 1),
                    EdgeKind::Down => {
                        assert!(r.is_quantum(k));
                        assert_eq!(t.length(y) as i64, t.length(x) as i64 - r.two_rho_pair(k) + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn small_graphs() {
    let a1 = rs(CartanType::A, 1);
    let g = build_qbg(&a1, 10).unwrap();
    assert_eq!(g.len(), 2);
    assert_eq!(g.out_edges(0).len(), 1);
    assert_eq!(g.out_edges(0)[0].kind, EdgeKind::Up);
    assert_eq!(g.out_edges(1)[0].kind, EdgeKind::Down);
    let a2 = rs(CartanType::A, 2);
    let g = build_qbg(&a2, 10).unwrap();
    let degrees: Vec<usize> = (0..6).map(|x| g.out_edges(x).len()).collect();
    assert_eq!(degrees, vec![2, 3, 3, 2, 2, 3]);
    let g2 = rs(CartanType::G, 2);
    let g = build_qbg(&g2, 100).unwrap();
    let quantum: Vec<usize> = (0..6).filter(|&k| g2.is_quantum(k)).collect();
    assert_eq!(quantum.len(), 4);
    for x in 0..g.len() as u32 {
        for e in g.out_edges(x) {
            if e.kind == EdgeKind::Down {
                assert!(quantum.contains(&(e.root as usize)));
            }
        }
    }
    assert!(matches!(build_qbg(&rs(CartanType::B, 4), 100), Err(Error::GroupTooLarge { .. })));
}

#[test]
fn weight_examples() {
    let a2 = rs(CartanType::A, 2);
    let g = build_qbg(&a2, 10).unwrap();
    for x in 0..6 {
        assert_eq!(g.wt(x, x), (0, cv(&[0, 0])));
    }
    for i in 1..=2 {
        let s = g.index_of(&WeylElt::simple(&a2, i));
        let mut e = vec![0, 0];
        e[i - 1] = 1;
        assert_eq!(g.wt(s, 0), (1, cv(&e)));
    }
    let w0 = g.table().longest();
    assert_eq!(g.wt1_all().weight(w0), cv(&[1, 1]));
    assert_eq!(g.wt1_all().weight(0), cv(&[0, 0]));
    assert_eq!(g.ell_down_all()[0], 0);
}

#[test]
fn shortest_paths_share_one_weight() {
    for (ty, n) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::G, 2)] {
        let r = rs(ty, n);
        let g = build_qbg(&r, 100).unwrap();
        for x in 0..g.len() as u32 {
            for y in 0..g.len() as u32 {
                let ws = all_shortest_path_weights(&g, x, y);
                assert_eq!(ws, vec![g.wt(x, y).1], "{ty}{n}");
            }
        }
    }
    for (ty, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::C, 3)] {
        let r = rs(ty, n);
        let g = build_qbg(&r, 100).unwrap();
        for x in 0..g.len() as u32 {
            assert_eq!(g.paths_from(x).conflicts, 0, "{ty}{n}");
        }
    }
}

#[test]
fn random_paths_weigh_at_least_the_shortest() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for (ty, n) in RANK_LE_3 {
        let r = rs(ty, n);
        let g = build_qbg(&r, 100).unwrap();
        for _ in 0..500 {
            let x = rng.gen_range(0..g.len() as u32);
            let steps = rng.gen_range(0..12);
            let mut cur = x;
            let mut w = CorootVec::zero(n);
            for _ in 0..steps {
                let edges = g.out_edges(cur);
                let e = edges[rng.gen_range(0..edges.len())];
                if e.kind == EdgeKind::Down {
                    w = w.add(&r.positive_coroots()[e.root as usize]);
                }
                cur = e.target;
            }
            let (_, best) = g.wt(x, cur);
            assert!(best.dominated_by(&w), "{ty}{n}");
        }
    }
}

#[test]
fn weight_is_monotone_in_bruhat_order() {
    // Checking every Bruhat cover x < x s_β is enough, by transitivity.
    for (ty, n) in RANK_LE_4 {
        let r = rs(ty, n);
        let g = build_qbg(&r, 10_000).unwrap();
        let t = g.table();
        let wt = g.wt1_all();
        for x in 0..g.len() as u32 {
            for k in 0..r.num_positive_roots() {
                let y = g.refl_mul(x, k);
                if t.length(y) > t.length(x) {
                    assert!(wt.weight(x).dominated_by(&wt.weight(y)), "{ty}{n}");
                }
            }
        }
    }
}

#[test]
fn weight_of_pairs_via_left_demazure() {
    for (ty, n) in RANK_LE_3 {
        let r = rs(ty, n);
        let g = build_qbg(&r, 100).unwrap();
        let t = g.table();
        let fw = FiniteWeyl::new(&r);
        let wt = g.wt1_all();
        for x in 0..g.len() as u32 {
            let xinv = t.element(t.inverse(x));
            let from_x = g.paths_from(x);
            for y in 0..g.len() as u32 {
                let z = coxeter::demazure_ltri(&fw, xinv, t.element(y));
                assert_eq!(from_x.weight(y), wt.weight(g.index_of(&z)), "{ty}{n}");
            }
        }
    }
}

#[test]
fn rho_pairing_of_weight() {
    for (ty, n) in RANK_LE_4 {
        let r = rs(ty, n);
        let g = build_qbg(&r, 10_000).unwrap();
        let wt = g.wt1_all();
        let down = g.ell_down_all();
        for x in 0..g.len() as u32 {
            let lhs = r.rho_pair(&r.coroot_to_coweight(&wt.weight(x)));
            let rhs = num_rational::Rational64::new((g.table().length(x) + down[x as usize] as usize) as i64, 2);
            assert_eq!(lhs, rhs, "{ty}{n}");
            assert_eq!(down[x as usize], wt.dist[x as usize]);
            assert!(down[x as usize] as usize >= g.table().element(x).reflection_length());
        }
    }
}

#[test]
fn rqrd_witnesses() {
    let c3 = rs(CartanType::C, 3);
    let g = build_qbg(&c3, 100).unwrap();
    let x = WeylElt::from_word(&c3, &[2, 3, 1, 2, 3, 1, 2]);
    let b = RootVec(vec![0, 2, 1]);
    let factors = vec![b.clone(), RootVec(vec![1, 0, 0]), b];
    let rep = verify_rqrd(&c3, &x, &factors, Some(&g));
    assert!(rep.valid, "{rep:?}");
    assert_eq!(g.ell_down_all()[g.index_of(&x) as usize], 3);
    assert_eq!(x.reflection_length(), 1);
    let found = g.rqrd(g.index_of(&x));
    assert_eq!(found.len(), 3);
    assert!(verify_rqrd(&c3, &x, &found, Some(&g)).valid);

    let b3 = rs(CartanType::B, 3);
    let g = build_qbg(&b3, 100).unwrap();
    let x = WeylElt::from_word(&b3, &[1, 2, 3, 2, 1]);
    assert_eq!(g.ell_down_all()[g.index_of(&x) as usize], 5);
    assert_eq!(x.reflection_length(), 1);

    let a2 = rs(CartanType::A, 2);
    let g = build_qbg(&a2, 10).unwrap();
    let w0 = longest_element(&a2);
    let rep = verify_rqrd(&a2, &w0, &[RootVec(vec![1, 1])], Some(&g));
    assert!(rep.valid && rep.factors == 1);
    let simple = [RootVec(vec![1, 0]), RootVec(vec![0, 1]), RootVec(vec![1, 0])];
    let rep = verify_rqrd(&a2, &w0, &simple, Some(&g));
    assert!(!rep.valid);
    assert_eq!(rep.minimal, Some(false));
}

#[test]
fn closed_forms() {
    assert_eq!(wt_w0_closed_form(CartanType::A, 3), cv(&[1, 2, 1]));
    assert_eq!(wt_w0_closed_form(CartanType::C, 3), cv(&[1, 2, 3]));
    assert_eq!(wt_w0_closed_form(CartanType::G, 2), cv(&[2, 2]));
    assert_eq!(m_tilde(CartanType::A, 2), 3);
    assert_eq!(m_tilde(CartanType::F, 4), 12);
}

#[test]
fn bfs_weight_of_w0_matches_closed_forms() {
    let mut cases: Vec<(CartanType, usize)> = Vec::new();
    cases.extend((1..=5).map(|n| (CartanType::A, n)));
    cases.extend((2..=5).map(|n| (CartanType::B, n)));
    cases.extend((2..=5).map(|n| (CartanType::C, n)));
    cases.extend([(CartanType::D, 4), (CartanType::D, 5), (CartanType::F, 4), (CartanType::G, 2)]);
    for (ty, n) in cases {
        let r = rs(ty, n);
        let g = build_qbg(&r, 10_000).unwrap();
        let w0 = g.table().longest();
        let wt = g.wt1_all();
        assert_eq!(wt.weight(w0), wt_w0_closed_form(ty, n), "{ty}{n}");
        assert_eq!(wt.dist[w0 as usize] as usize, ell_r_w0_table(ty, n), "{ty}{n}");
        assert!(g.compute_m() <= m_tilde(ty, n));
    }
}

#[test]
fn e6_weight_of_w0() {
    let r = rs(CartanType::E, 6);
    let g = build_qbg(&r, 51_840).unwrap();
    let w0 = g.table().longest();
    assert_eq!(g.wt1_all().weight(w0), wt_w0_closed_form(CartanType::E, 6));
}

#[test]
fn exceptional_exhibits() {
    for (ty, n) in [(CartanType::E, 6), (CartanType::E, 7), (CartanType::E, 8), (CartanType::F, 4), (CartanType::G, 2)] {
        let r = rs(ty, n);
        let w0 = longest_element(&r);
        let factors = w0_exhibit(ty, n).unwrap();
        let rep = verify_rqrd(&r, &w0, &factors, None);
        assert!(rep.valid, "{ty}{n}: {rep:?}");
        assert_eq!(rep.factors, ell_r_w0_table(ty, n));
        assert_eq!(rep.weight, wt_w0_closed_form(ty, n));
        if matches!(ty, CartanType::E) && n > 6 {
            assert_eq!(rep.factors, n);
        }
    }
}
