//! Newton points of affine elements and the maximal Newton point of a
//! lower Bruhat interval.

use num_integer::Integer;
use num_rational::Rational64;
use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::affine::{lower_interval_indexed, AffineElt, IdxAff, IndexedAffine};
use crate::coxeter;
use crate::error::{Error, Refusal, Result};
use crate::qbg::QBGraph;
use crate::rootsys::{CartanType, Coweight, RootSystem};
use crate::weyl::{FiniteWeyl, GroupTable, WeylElt};

/// A dominant rational coweight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewtonPoint(pub Coweight);

impl NewtonPoint {
    pub fn coweight(&self) -> &Coweight {
        &self.0
    }
}

impl std::fmt::Display for NewtonPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `(Σ_{i<m} z^i μ)^+ / m` for `w = t^μ z` with `z` of order `m`.
pub fn newton_point(rs: &RootSystem, w: &AffineElt) -> NewtonPoint {
    let m = w.finite.order() as i64;
    let mut sum = vec![0i64; rs.rank()];
    let mut cur = w.lambda.clone();
    for _ in 0..m {
        for (s, c) in sum.iter_mut().zip(&cur) {
            *s += c;
        }
        cur = w.finite.act(&cur);
    }
    let dom = rs.dominant_rep_int(&sum);
    NewtonPoint(Coweight(
        dom.into_iter().map(|c| Rational64::new(c, m)).collect(),
    ))
}

/// Depth bound `Ξ` above which the maximal Newton point formula applies.
pub fn xi_bound(ty: CartanType, n: usize) -> i64 {
    let n = n as i64;
    match ty {
        CartanType::A => 3 * n + 1,
        CartanType::B | CartanType::C => 6 * n - 2,
        CartanType::D => 6 * n - 6,
        CartanType::E => match n {
            6 => 23,
            7 => 33,
            _ => 57,
        },
        CartanType::F => 23,
        CartanType::G => 9,
    }
}

/// Tabulated `S`.
pub fn s_bound(ty: CartanType, n: usize) -> i64 {
    let n = n as i64;
    match ty {
        CartanType::A => 2 * n,
        CartanType::B | CartanType::C => 4 * n - 2,
        CartanType::D => 4 * n - 6,
        CartanType::E => match n {
            6 => 11,
            7 => 17,
            _ => 29,
        },
        CartanType::F => 11,
        CartanType::G => 5,
    }
}

/// `<θ, 2ρ^vee>` computed from the root system.
pub fn theta_two_rho_check(rs: &RootSystem) -> i64 {
    2 * rs.theta().height()
}

/// Brute-force Newton point maxima over intervals, on indexed elements.
pub struct NewtonOracle<'a> {
    pub sys: IndexedAffine<'a>,
    orders: Vec<i64>,
    /// `Σ_{i<m} z^i` for each `z`, row-major.
    orbit_sums: Vec<Vec<i64>>,
}

/// A Newton point as `numerator / denominator` with dominant numerator.
type NewtonKey = (Vec<i64>, i64);

impl<'a> NewtonOracle<'a> {
    pub fn new(rs: &'a RootSystem, table: &'a GroupTable) -> Self {
        let n = rs.rank();
        let mut orders = Vec::with_capacity(table.len());
        let mut orbit_sums = Vec::with_capacity(table.len());
        for z in table.elements() {
            let m = z.order();
            let mut acc = vec![0i64; n * n];
            let mut p = WeylElt::identity(n);
            for _ in 0..m {
                for (a, b) in acc.iter_mut().zip(p.matrix()) {
                    *a += b;
                }
                p = p.mul(z);
            }
            orders.push(m as i64);
            orbit_sums.push(acc);
        }
        NewtonOracle {
            sys: IndexedAffine::new(rs, table),
            orders,
            orbit_sums,
        }
    }

    fn rs(&self) -> &RootSystem {
        self.sys.rs
    }

    fn key(&self, u: &IdxAff) -> NewtonKey {
        let n = self.sys.rank();
        let s = &self.orbit_sums[u.fin as usize];
        let v: Vec<i64> = (0..n)
            .map(|i| (0..n).map(|j| s[i * n + j] * u.lam[j] as i64).sum())
            .collect();
        let v = self.rs().dominant_rep_int(&v);
        let m = self.orders[u.fin as usize];
        let g = v.iter().fold(m, |g, &c| g.gcd(&c));
        (v.into_iter().map(|c| c / g).collect(), m / g)
    }

    fn key_to_point(k: &NewtonKey) -> NewtonPoint {
        NewtonPoint(Coweight(
            k.0.iter().map(|&c| Rational64::new(c, k.1)).collect(),
        ))
    }

    /// The unique dominance-maximal point among `keys`.
    fn unique_max(&self, keys: &FxHashSet<NewtonKey>) -> Result<NewtonPoint> {
        let rs = self.rs();
        let score = |k: &NewtonKey| Rational64::new(rs.pair_int(rs.two_rho(), &k.0), k.1);
        let best = keys
            .iter()
            .max_by(|a, b| score(a).cmp(&score(b)).then_with(|| a.cmp(b)))
            .ok_or(Error::NoUniqueMaximum(0))?;
        let top = Self::key_to_point(best);
        for k in keys {
            if !rs.dominance_leq(&Self::key_to_point(k).0, &top.0) {
                return Err(Error::NoUniqueMaximum(keys.len()));
            }
        }
        Ok(top)
    }

    pub fn interval(&self, w: &AffineElt, budget: usize) -> Result<Vec<IdxAff>> {
        lower_interval_indexed(&self.sys, &self.sys.from_affine(w), budget)
    }

    /// `max {ν(u) : u <= w}`, checking that the maximum is unique.
    pub fn max_newton_brute(&self, w: &AffineElt, budget: usize) -> Result<NewtonPoint> {
        let members = self.interval(w, budget)?;
        self.max_newton_over(&members)
    }

    pub fn max_newton_over(&self, members: &[IdxAff]) -> Result<NewtonPoint> {
        let keys: FxHashSet<NewtonKey> = members.iter().map(|u| self.key(u)).collect();
        self.unique_max(&keys)
    }

    /// `max {γ^+ : t^γ <= w}`.
    pub fn max_translation_below(&self, w: &AffineElt, budget: usize) -> Result<NewtonPoint> {
        let members = self.interval(w, budget)?;
        self.max_translation_over(&members)
    }

    pub fn max_translation_over(&self, members: &[IdxAff]) -> Result<NewtonPoint> {
        let n = self.sys.rank();
        let keys: FxHashSet<NewtonKey> = members
            .iter()
            .filter(|u| u.fin == 0)
            .map(|u| {
                let l: Vec<i64> = u.lam[..n].iter().map(|&c| c as i64).collect();
                (self.rs().dominant_rep_int(&l), 1)
            })
            .collect();
        self.unique_max(&keys)
    }

    pub fn newton_point(&self, u: &IdxAff) -> NewtonPoint {
        Self::key_to_point(&self.key(u))
    }
}

/// `ν_w = λ - wt(x)` for `w = t^λ x`, refusing unless `λ` is dominant with
/// `depth(λ) > Ξ`.
pub fn max_newton_formula(g: &QBGraph, lambda: &[i64], x: &WeylElt) -> std::result::Result<NewtonPoint, Refusal> {
    let rs = g.rs;
    let lam = Coweight::from_ints(lambda);
    if !lam.is_dominant() {
        return Err(Refusal::NotDominant);
    }
    let xi = xi_bound(rs.cartan_type(), rs.rank());
    let depth = lam.depth();
    if depth <= Rational64::from_integer(xi) {
        return Err(Refusal::BelowThreshold {
            depth: depth.to_string(),
            threshold: xi,
        });
    }
    Ok(max_newton_formula_unchecked(g, lambda, x))
}

/// `λ - wt(x)` without checking the depth hypothesis.
pub fn max_newton_formula_unchecked(g: &QBGraph, lambda: &[i64], x: &WeylElt) -> NewtonPoint {
    let rs = g.rs;
    let (_, wt) = g.wt(g.index_of(x), 0);
    NewtonPoint(Coweight::from_ints(lambda).sub(&rs.coroot_to_coweight(&wt)))
}

/// `ν_{u t^λ v}` through `t^λ (v ◁ u)`.
pub fn max_newton_formula_general(
    g: &QBGraph,
    u: &WeylElt,
    lambda: &[i64],
    v: &WeylElt,
) -> std::result::Result<NewtonPoint, Refusal> {
    let w = reduce_to_dominant(g.rs, u, lambda, v)?;
    max_newton_formula(g, lambda, &w.finite)
}

/// `t^λ (v ◁ u)` for dominant regular `λ`.
pub fn reduce_to_dominant(
    rs: &RootSystem,
    u: &WeylElt,
    lambda: &[i64],
    v: &WeylElt,
) -> std::result::Result<AffineElt, Refusal> {
    if !Coweight::from_ints(lambda).is_regular_dominant() {
        return Err(Refusal::HypothesisViolated("λ is not dominant regular".into()));
    }
    let fw = FiniteWeyl::new(rs);
    Ok(AffineElt::new(lambda.to_vec(), coxeter::demazure_ltri(&fw, v, u)))
}

/// Coweights with all pairing coordinates in `lo..=hi`.
pub fn depth_grid(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct NewtonRecord {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub x: String,
    pub nu_formula: Coweight,
    pub nu_brute: Coweight,
    #[serde(rename = "match")]
    pub matches: bool,
    pub interval_size: usize,
    /// `t^{λ - wt(x)} <= t^λ x`.
    pub easier_inequality: bool,
    /// `max {γ^+ : t^γ <= w}` equals the brute-force maximum.
    pub translations_agree: bool,
}

/// Compares the formula with the brute-force maximum for `t^λ x`, for every
/// `x` in `W` and every `λ` in `lambdas`.
pub fn theorem_sweep(
    g: &QBGraph,
    oracle: &NewtonOracle,
    lambdas: &[Vec<i64>],
    budget: usize,
) -> Result<Vec<NewtonRecord>> {
    let rs = g.rs;
    let wt1 = g.wt1_all();
    let mut out = Vec::new();
    for lambda in lambdas {
        for (k, x) in g.table().elements().iter().enumerate() {
            let wt = wt1.weight(k as u32);
            let formula = Coweight::from_ints(lambda).sub(&rs.coroot_to_coweight(&wt));
            let w = AffineElt::new(lambda.clone(), x.clone());
            let members = oracle.interval(&w, budget)?;
            let brute = oracle.max_newton_over(&members)?;
            let trans = oracle.max_translation_over(&members)?;
            let lower = oracle.sys.from_affine(&AffineElt::translation(
                formula.to_ints().expect("integral when λ is"),
            ));
            let easier = coxeter::bruhat_leq(&oracle.sys, &lower, &oracle.sys.from_affine(&w));
            out.push(NewtonRecord {
                ty: rs.cartan_type().to_string(),
                rank: rs.rank(),
                lambda: lambda.clone(),
                x: w.display(rs),
                matches: formula == brute.0,
                nu_formula: formula,
                translations_agree: trans == brute,
                nu_brute: brute.0,
                interval_size: members.len(),
                easier_inequality: easier,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ExplorationRecord {
    pub x: String,
    /// Smallest `d` such that the formula holds for `λ = d ρ^vee` at every
    /// depth from `d` up to `Ξ + 1`.
    pub min_depth: i64,
    pub xi: i64,
}

/// Walks `λ = d ρ^vee` down from `d = Ξ + 1` and records where the formula
/// first stops matching. Data only.
pub fn explore_threshold(g: &QBGraph, oracle: &NewtonOracle, budget: usize) -> Result<Vec<ExplorationRecord>> {
    let rs = g.rs;
    let n = rs.rank();
    let xi = xi_bound(rs.cartan_type(), n);
    let wt1 = g.wt1_all();
    let mut out = Vec::new();
    for (k, x) in g.table().elements().iter().enumerate() {
        let wt = rs.coroot_to_coweight(&wt1.weight(k as u32));
        let mut min_depth = xi + 1;
        for d in (0..=xi + 1).rev() {
            let lambda = vec![d; n];
            let w = AffineElt::new(lambda.clone(), x.clone());
            let brute = oracle.max_newton_brute(&w, budget)?;
            if Coweight::from_ints(&lambda).sub(&wt) != brute.0 {
                break;
            }
            min_depth = d;
        }
        out.push(ExplorationRecord {
            x: AffineElt::from_finite(x.clone()).display(rs),
            min_depth,
            xi,
        });
    }
    Ok(out)
}
