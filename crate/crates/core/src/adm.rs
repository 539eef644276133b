//! Admissible sets, virtual dimensions and the dimension formula.

use num_rational::Rational64;
use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::affine::{AffineElt, AffineWeyl};
use crate::coxeter::{self, Coxeter};
use crate::cover::cover_depth_threshold;
use crate::error::{Refusal, Result};
use crate::qbg::QBGraph;
use crate::rootsys::{Coweight, RootSystem};
use crate::weyl::{longest_element, WeylElt};

/// Invariants of a σ-conjugacy class, supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BInvariants {
    pub nu: Coweight,
    pub defect: i64,
}

impl BInvariants {
    pub fn new(nu: Coweight, defect: i64) -> Self {
        BInvariants { nu, defect }
    }
}

/// `Adm(μ) = {w : w <= t^{x(μ)} for some x in W}`.
#[derive(Clone, Debug)]
pub struct AdmSet {
    pub mu: Vec<i64>,
    pub members: Vec<AffineElt>,
    set: FxHashSet<AffineElt>,
}

impl AdmSet {
    pub fn contains(&self, w: &AffineElt) -> bool {
        self.set.contains(w)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn set(&self) -> &FxHashSet<AffineElt> {
        &self.set
    }
}

/// The `W`-orbit of an integral coweight.
pub fn orbit(rs: &RootSystem, mu: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: Vec<Vec<i64>> = vec![mu.to_vec()];
    let mut k = 0;
    while k < seen.len() {
        for i in 0..rs.rank() {
            let mut c = seen[k].clone();
            rs.reflect_simple_int(i, &mut c);
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        k += 1;
    }
    seen
}

pub fn adm_set(rs: &RootSystem, mu: &[i64], budget: usize) -> Result<AdmSet> {
    let aw = AffineWeyl::new(rs);
    let mut members = Vec::new();
    let mut set = FxHashSet::default();
    for nu in orbit(rs, mu) {
        for u in coxeter::lower_interval(&aw, &AffineElt::translation(nu), budget)? {
            if set.insert(u.clone()) {
                members.push(u);
            }
        }
    }
    Ok(AdmSet {
        mu: mu.to_vec(),
        members,
        set,
    })
}

/// `{a b : a in A, b in B}`.
pub fn product_set(a: &AdmSet, b: &AdmSet) -> FxHashSet<AffineElt> {
    let mut out = FxHashSet::default();
    for x in &a.members {
        for y in &b.members {
            out.insert(x.mul(y));
        }
    }
    out
}

/// The downward closure of `{a * b}` under Bruhat order.
pub fn demazure_closure(rs: &RootSystem, a: &AdmSet, b: &AdmSet, budget: usize) -> Result<FxHashSet<AffineElt>> {
    let aw = AffineWeyl::new(rs);
    let tops: FxHashSet<AffineElt> = a
        .members
        .iter()
        .flat_map(|x| b.members.iter().map(|y| aw.demazure_star(x, y)).collect::<Vec<_>>())
        .collect();
    let mut out = FxHashSet::default();
    for t in tops {
        if out.contains(&t) {
            continue;
        }
        out.extend(coxeter::lower_interval(&aw, &t, budget)?);
    }
    Ok(out)
}

/// `x t^λ y ∈ Adm(μ)` iff `wt(x, y^{-1}) <= μ - λ`, under the depth hypotheses.
pub fn adm_membership_char(
    g: &QBGraph,
    x: &WeylElt,
    lambda: &[i64],
    y: &WeylElt,
    mu: &[i64],
) -> std::result::Result<bool, Refusal> {
    let rs = g.rs;
    let c = cover_depth_threshold(rs.cartan_type());
    let muw = Coweight::from_ints(mu);
    let lam = Coweight::from_ints(lambda);
    let depth = muw.depth();
    if depth < Rational64::from_integer(c) {
        return Err(Refusal::BelowThreshold {
            depth: depth.to_string(),
            threshold: c,
        });
    }
    if !lam.is_dominant() {
        return Err(Refusal::NotDominant);
    }
    let ceiling = ((depth - c) / 2).ceil();
    if rs.rho_pair(&muw.sub(&lam)) >= ceiling {
        return Err(Refusal::HypothesisViolated(format!(
            "<ρ, μ-λ> must be below {ceiling}"
        )));
    }
    Ok(adm_membership_unchecked(g, x, lambda, y, mu))
}

/// Dominance here is integral: `μ - λ - wt` must lie in the non-negative span of simple coroots.
pub fn adm_membership_unchecked(g: &QBGraph, x: &WeylElt, lambda: &[i64], y: &WeylElt, mu: &[i64]) -> bool {
    let rs = g.rs;
    let (_, wt) = g.wt(g.index_of(x), g.index_of(&y.inverse()));
    let diff = Coweight::from_ints(mu).sub(&Coweight::from_ints(lambda));
    rs.to_coroot(&diff).is_some_and(|d| wt.dominated_by(&d))
}

/// The decomposition `w = u t^λ v` with `t^λ v` minimal in `W t^λ v`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub u: WeylElt,
    pub lambda: Vec<i64>,
    pub v: WeylElt,
}

pub fn decompose(rs: &RootSystem, w: &AffineElt) -> Decomposition {
    let aw = AffineWeyl::new(rs);
    let mut m = w.clone();
    while let Some(i) = (1..=rs.rank()).find(|&i| aw.is_left_descent(&m, i)) {
        m = aw.lmul(i, &m);
    }
    let u = w.mul(&m.inverse());
    debug_assert!(u.lambda.iter().all(|&c| c == 0));
    Decomposition {
        u: u.finite,
        lambda: m.lambda,
        v: m.finite,
    }
}

/// `η(w) = v u`.
pub fn eta(rs: &RootSystem, w: &AffineElt) -> WeylElt {
    let d = decompose(rs, w);
    d.v.mul(&d.u)
}

/// `d_w(b) = (l(w) + l(η(w)) - def) / 2 - <ρ, ν>`.
pub fn virtual_dim(rs: &RootSystem, w: &AffineElt, b: &BInvariants) -> Rational64 {
    let aw = AffineWeyl::new(rs);
    let l = aw.length(w) as i64 + eta(rs, w).length(rs) as i64 - b.defect;
    Rational64::new(l, 2) - rs.rho_pair(&b.nu)
}

/// `<ρ, μ - ν> - def/2 + l(w_0)/2 - min_x d_Γ(x, x w_0) / 2`, for regular `μ`.
pub fn d_adm(g: &QBGraph, mu: &[i64], b: &BInvariants) -> std::result::Result<Rational64, Refusal> {
    let m = Coweight::from_ints(mu);
    if !m.is_regular_dominant() {
        return Err(Refusal::NotRegular);
    }
    Ok(d_adm_unchecked(g, mu, b))
}

pub fn d_adm_unchecked(g: &QBGraph, mu: &[i64], b: &BInvariants) -> Rational64 {
    let rs = g.rs;
    let l0 = rs.num_positive_roots() as i64;
    rs.rho_pair(&Coweight::from_ints(mu).sub(&b.nu)) - Rational64::new(b.defect, 2)
        + Rational64::new(l0, 2)
        - Rational64::new(min_dgamma(g) as i64, 2)
}

/// `max_{w ∈ Adm(μ)} d_w(b)` by enumeration.
pub fn d_adm_brute(rs: &RootSystem, mu: &[i64], b: &BInvariants, budget: usize) -> Result<Rational64> {
    let adm = adm_set(rs, mu, budget)?;
    Ok(adm
        .members
        .iter()
        .map(|w| virtual_dim(rs, w, b))
        .max()
        .expect("Adm(μ) is never empty"))
}

/// `min_x d_Γ(x, x w_0)`.
pub fn min_dgamma(g: &QBGraph) -> u32 {
    g.min_dgamma_to_w0_translate()
}

/// `<ρ, μ - ν> - def/2 + (l(w_0) - l_R(w_0))/2` for regular `μ >= ν + 2ρ^vee`.
pub fn dim_x_formula(rs: &RootSystem, mu: &[i64], b: &BInvariants) -> std::result::Result<Rational64, Refusal> {
    let m = Coweight::from_ints(mu);
    if !m.is_regular_dominant() {
        return Err(Refusal::NotRegular);
    }
    let two_rho_check = rs.coroot_to_coweight(rs.two_rho_check());
    if !rs.dominance_leq(&b.nu.add(&two_rho_check), &m) {
        return Err(Refusal::HypothesisViolated("μ is not >= ν + 2ρ^vee".into()));
    }
    let w0 = longest_element(rs);
    let l0 = rs.num_positive_roots() as i64;
    let lr = w0.reflection_length() as i64;
    Ok(rs.rho_pair(&m.sub(&b.nu)) - Rational64::new(b.defect, 2) + Rational64::new(l0 - lr, 2))
}
