//! The extended affine Weyl group `X_*(T) ⋊ W`, elements written `t^λ x`.
//!
//! The base alcove lies in the dominant chamber, so `s_0 = t^{θ^vee} s_θ`.
//! Lengths count affine root hyperplanes between a generic point `p` of the
//! base alcove and its image `t^λ x (p) = λ + x(p)`.

use std::fmt;
use std::ops::RangeInclusive;

use num_rational::Rational64;
use num_traits::One;
use rustc_hash::FxHashSet;

use crate::coxeter::{self, Coxeter};
use crate::error::{Error, Result};
use crate::rootsys::{Coweight, RootSystem};
use crate::weyl::{GroupTable, WeylElt};

/// `t^λ x` with `λ` in integer pairing coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineElt {
    pub lambda: Vec<i64>,
    pub finite: WeylElt,
}

impl AffineElt {
    pub fn new(lambda: Vec<i64>, finite: WeylElt) -> Self {
        AffineElt { lambda, finite }
    }

    pub fn identity(n: usize) -> Self {
        AffineElt::new(vec![0; n], WeylElt::identity(n))
    }

    pub fn translation(lambda: Vec<i64>) -> Self {
        let n = lambda.len();
        AffineElt::new(lambda, WeylElt::identity(n))
    }

    pub fn from_finite(x: WeylElt) -> Self {
        AffineElt::new(vec![0; x.rank()], x)
    }

    pub fn lambda_coweight(&self) -> Coweight {
        Coweight::from_ints(&self.lambda)
    }

    pub fn is_translation(&self) -> bool {
        self.finite.is_identity()
    }

    /// `(t^λ x)(t^μ y) = t^{λ + xμ} xy`.
    pub fn mul(&self, other: &AffineElt) -> AffineElt {
        let xm = self.finite.act(&other.lambda);
        AffineElt::new(
            self.lambda.iter().zip(&xm).map(|(a, b)| a + b).collect(),
            self.finite.mul(&other.finite),
        )
    }

    /// `(t^λ x)^{-1} = t^{-x^{-1}λ} x^{-1}`.
    pub fn inverse(&self) -> AffineElt {
        let xi = self.finite.inverse();
        let l = xi.act(&self.lambda).into_iter().map(|c| -c).collect();
        AffineElt::new(l, xi)
    }

    /// The `Omega` component: coroot coordinates of `λ` modulo 1.
    pub fn omega(&self, rs: &RootSystem) -> Vec<Rational64> {
        rs.coroot_coords(&self.lambda_coweight())
            .into_iter()
            .map(|c| c - c.floor())
            .collect()
    }

    /// Word notation `t[λ] s_i...`, using a reduced word for the finite part.
    pub fn display(&self, rs: &RootSystem) -> String {
        let mut parts = Vec::new();
        if self.lambda.iter().any(|&c| c != 0) {
            let coords: Vec<String> = self.lambda.iter().map(|c| c.to_string()).collect();
            parts.push(format!("t[{}]", coords.join(",")));
        }
        let word = self.finite.reduced_word(rs);
        if !word.is_empty() {
            parts.push(word.iter().map(|i| format!("s{i}")).collect());
        }
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// `W̃` acting on matrix elements.
#[derive(Clone)]
pub struct AffineWeyl<'a> {
    pub rs: &'a RootSystem,
    theta_check: Vec<i64>,
    s_theta: WeylElt,
    simples: Vec<WeylElt>,
}

impl<'a> AffineWeyl<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let t = rs.theta_index();
        AffineWeyl {
            rs,
            theta_check: rs.coroot_to_pairing(&rs.positive_coroots()[t]),
            s_theta: WeylElt::reflection(rs, t),
            simples: (1..=rs.rank()).map(|i| WeylElt::simple(rs, i)).collect(),
        }
    }

    /// The affine simple reflection `s_i`, with `s_0 = t^{θ^vee} s_θ`.
    pub fn simple(&self, i: usize) -> AffineElt {
        if i == 0 {
            AffineElt::new(self.theta_check.clone(), self.s_theta.clone())
        } else {
            AffineElt::from_finite(self.simples[i - 1].clone())
        }
    }

    /// The affine reflection `t^{k β^vee} s_β` in `H_{β,k}`.
    pub fn reflection(&self, root: usize, k: i64) -> AffineElt {
        let p = self.rs.coroot_to_pairing(&self.rs.positive_coroots()[root]);
        AffineElt::new(
            p.into_iter().map(|c| c * k).collect(),
            WeylElt::reflection(self.rs, root),
        )
    }

    /// Length by the closed form `Σ_{α>0} |<α,λ> - [x^{-1}α < 0]|`.
    pub fn length(&self, w: &AffineElt) -> usize {
        self.rs
            .positive_roots()
            .iter()
            .map(|a| {
                let neg = (w.finite.inv_act_root(a).sign() < 0) as i64;
                (self.rs.pair_int(a, &w.lambda) - neg).unsigned_abs() as usize
            })
            .sum()
    }

    /// Length by counting hyperplanes `H_{α,k}` strictly between `p` and
    /// `w(p)`, with `p = ρ^vee / h`.
    pub fn geometric_length(&self, w: &AffineElt) -> usize {
        let h = Rational64::from_integer(self.rs.coxeter_number());
        let p = Coweight(vec![Rational64::one() / h; self.rs.rank()]);
        let wp = w.finite.act_coweight(&p).add(&w.lambda_coweight());
        let mut count = 0usize;
        for a in self.rs.positive_roots() {
            let v = self.rs.pair_coweight(a, &wp).unwrap();
            assert!(!v.is_integer(), "base point must be generic");
            count += v.floor().to_integer().unsigned_abs() as usize;
        }
        count
    }

    pub fn reduced_word(&self, w: &AffineElt) -> (Vec<usize>, AffineElt) {
        coxeter::reduced_word(self, w)
    }

    pub fn bruhat_leq(&self, x: &AffineElt, y: &AffineElt) -> bool {
        coxeter::bruhat_leq(self, x, y)
    }

    pub fn lower_interval(&self, w: &AffineElt, budget: usize) -> Result<BruhatInterval> {
        let members = coxeter::lower_interval(self, w, budget)?;
        Ok(BruhatInterval::new(w.clone(), members))
    }

    /// Affine reflections `(root index, k)` whose hyperplane separates the
    /// base alcove from `w(a)`. There are exactly `l(w)` of them.
    pub fn separating_reflections(&self, w: &AffineElt) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for (k, a) in self.rs.positive_roots().iter().enumerate() {
            let neg = (w.finite.inv_act_root(a).sign() < 0) as i64;
            let f = self.rs.pair_int(a, &w.lambda) - neg;
            if f >= 1 {
                out.extend((1..=f).map(|m| (k, m)));
            } else if f <= -1 {
                out.extend((f + 1..=0).map(|m| (k, m)));
            }
        }
        out
    }

    /// All `w' < w` with `l(w') = l(w) - 1`, with the reflection `r = t^{mβ^vee}s_β`
    /// such that `w' = r w`.
    pub fn cocovers_with_reflections(&self, w: &AffineElt) -> Vec<(usize, i64, AffineElt)> {
        let lw = self.length(w);
        self.separating_reflections(w)
            .into_iter()
            .filter_map(|(k, m)| {
                let v = self.reflection(k, m).mul(w);
                (self.length(&v) + 1 == lw).then_some((k, m, v))
            })
            .collect()
    }

    pub fn cocovers(&self, w: &AffineElt) -> Vec<AffineElt> {
        self.cocovers_with_reflections(w)
            .into_iter()
            .map(|(_, _, v)| v)
            .collect()
    }

    pub fn demazure_star(&self, x: &AffineElt, y: &AffineElt) -> AffineElt {
        coxeter::demazure_star(self, x, y)
    }

    /// `x ▷ y`.
    pub fn demazure_rtri(&self, x: &AffineElt, y: &AffineElt) -> AffineElt {
        coxeter::demazure_rtri(self, x, y)
    }

    /// `x ◁ y`.
    pub fn demazure_ltri(&self, x: &AffineElt, y: &AffineElt) -> AffineElt {
        coxeter::demazure_ltri(self, x, y)
    }
}

impl Coxeter for AffineWeyl<'_> {
    type Elt = AffineElt;

    fn generators(&self) -> RangeInclusive<usize> {
        0..=self.rs.rank()
    }

    fn identity(&self) -> AffineElt {
        AffineElt::identity(self.rs.rank())
    }

    fn length(&self, w: &AffineElt) -> usize {
        AffineWeyl::length(self, w)
    }

    fn lmul(&self, s: usize, w: &AffineElt) -> AffineElt {
        self.simple(s).mul(w)
    }

    fn rmul(&self, w: &AffineElt, s: usize) -> AffineElt {
        w.mul(&self.simple(s))
    }

    fn mul(&self, a: &AffineElt, b: &AffineElt) -> AffineElt {
        a.mul(b)
    }

    fn inverse(&self, w: &AffineElt) -> AffineElt {
        w.inverse()
    }

    fn is_left_descent(&self, w: &AffineElt, s: usize) -> bool {
        if s == 0 {
            let t = self.rs.pair_int(self.rs.theta(), &w.lambda);
            t > 1 || (t == 1 && w.finite.inv_act_root(self.rs.theta()).sign() > 0)
        } else {
            let l = w.lambda[s - 1];
            l < 0 || (l == 0 && w.finite.inverse_sends_simple_negative(s - 1))
        }
    }
}

/// A lower Bruhat interval `{u : u <= top}`.
#[derive(Clone, Debug)]
pub struct BruhatInterval {
    pub top: AffineElt,
    pub members: Vec<AffineElt>,
    set: FxHashSet<AffineElt>,
}

impl BruhatInterval {
    pub fn new(top: AffineElt, members: Vec<AffineElt>) -> Self {
        let set = members.iter().cloned().collect();
        BruhatInterval { top, members, set }
    }

    pub fn contains(&self, u: &AffineElt) -> bool {
        self.set.contains(u)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub const MAX_RANK: usize = 8;

/// `t^λ x` with `x` an index into a [`GroupTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IdxAff {
    pub fin: u32,
    pub lam: [i32; MAX_RANK],
}

/// `W̃` on indexed elements, with per-element data precomputed from a group table.
pub struct IndexedAffine<'a> {
    pub rs: &'a RootSystem,
    pub table: &'a GroupTable,
    n: usize,
    theta: [i32; MAX_RANK],
    theta_check: [i32; MAX_RANK],
    s_theta: u32,
    cartan: Vec<i32>,
    roots: Vec<[i32; MAX_RANK]>,
    /// `x θ^vee` for each `x`.
    x_theta: Vec<[i32; MAX_RANK]>,
    /// `x s_θ` for each `x`.
    x_s_theta: Vec<u32>,
    /// Bit `i`: `x^{-1} α_{i+1} < 0`.
    ldesc: Vec<u16>,
    /// `x^{-1} θ > 0`.
    theta_pos: Vec<bool>,
    /// Bit `k`: `x^{-1} β_k < 0`.
    neg: Vec<Vec<bool>>,
    mats: Vec<Vec<i32>>,
}

fn pack(v: &[i64]) -> [i32; MAX_RANK] {
    let mut a = [0; MAX_RANK];
    for (i, &c) in v.iter().enumerate() {
        a[i] = i32::try_from(c).expect("coordinate fits in i32");
    }
    a
}

impl<'a> IndexedAffine<'a> {
    pub fn new(rs: &'a RootSystem, table: &'a GroupTable) -> Self {
        let n = rs.rank();
        let t = rs.theta_index();
        let theta_check = rs.coroot_to_pairing(&rs.positive_coroots()[t]);
        let s_theta = table.index_of(&WeylElt::reflection(rs, t));
        let mut x_theta = Vec::with_capacity(table.len());
        let mut x_s_theta = Vec::with_capacity(table.len());
        let mut ldesc = Vec::with_capacity(table.len());
        let mut theta_pos = Vec::with_capacity(table.len());
        let mut neg = Vec::with_capacity(table.len());
        let mut mats = Vec::with_capacity(table.len());
        for (k, x) in table.elements().iter().enumerate() {
            x_theta.push(pack(&x.act(&theta_check)));
            x_s_theta.push(table.mul(k as u32, s_theta));
            let mut bits = 0u16;
            for i in 0..n {
                if x.inverse_sends_simple_negative(i) {
                    bits |= 1 << i;
                }
            }
            ldesc.push(bits);
            theta_pos.push(x.inv_act_root(rs.theta()).sign() > 0);
            neg.push(
                rs.positive_roots()
                    .iter()
                    .map(|a| x.inv_act_root(a).sign() < 0)
                    .collect(),
            );
            mats.push(x.matrix().iter().map(|&c| c as i32).collect());
        }
        IndexedAffine {
            rs,
            table,
            n,
            theta: pack(&rs.theta().0),
            theta_check: pack(&theta_check),
            s_theta,
            cartan: (0..n * n)
                .map(|k| rs.cartan(k / n, k % n) as i32)
                .collect(),
            roots: rs.positive_roots().iter().map(|r| pack(&r.0)).collect(),
            x_theta,
            x_s_theta,
            ldesc,
            theta_pos,
            neg,
            mats,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn from_affine(&self, w: &AffineElt) -> IdxAff {
        IdxAff {
            fin: self.table.index_of(&w.finite),
            lam: pack(&w.lambda),
        }
    }

    pub fn to_affine(&self, w: &IdxAff) -> AffineElt {
        AffineElt::new(
            w.lam[..self.n].iter().map(|&c| c as i64).collect(),
            self.table.element(w.fin).clone(),
        )
    }

    fn dot(&self, a: &[i32; MAX_RANK], b: &[i32; MAX_RANK]) -> i32 {
        (0..self.n).map(|i| a[i] * b[i]).sum()
    }

    /// `x μ` for the finite element with index `x`.
    pub fn act(&self, x: u32, mu: &[i32; MAX_RANK]) -> [i32; MAX_RANK] {
        let m = &self.mats[x as usize];
        let mut out = [0; MAX_RANK];
        for i in 0..self.n {
            out[i] = (0..self.n).map(|j| m[i * self.n + j] * mu[j]).sum();
        }
        out
    }

    /// Inversion indicators `x^{-1} β_k < 0` of the finite element `x`.
    pub fn negated_roots(&self, x: u32) -> &[bool] {
        &self.neg[x as usize]
    }

    pub fn roots(&self) -> &[[i32; MAX_RANK]] {
        &self.roots
    }
}

impl Coxeter for IndexedAffine<'_> {
    type Elt = IdxAff;

    fn generators(&self) -> RangeInclusive<usize> {
        0..=self.n
    }

    fn identity(&self) -> IdxAff {
        IdxAff {
            fin: 0,
            lam: [0; MAX_RANK],
        }
    }

    fn length(&self, w: &IdxAff) -> usize {
        let neg = &self.neg[w.fin as usize];
        self.roots
            .iter()
            .zip(neg)
            .map(|(a, &ng)| (self.dot(a, &w.lam) - ng as i32).unsigned_abs() as usize)
            .sum()
    }

    fn lmul(&self, s: usize, w: &IdxAff) -> IdxAff {
        let mut lam = w.lam;
        if s == 0 {
            let t = self.dot(&self.theta, &lam);
            for i in 0..self.n {
                lam[i] += self.theta_check[i] * (1 - t);
            }
            IdxAff {
                fin: self.table.mul(self.s_theta, w.fin),
                lam,
            }
        } else {
            let c = lam[s - 1];
            for j in 0..self.n {
                lam[j] -= c * self.cartan[(s - 1) * self.n + j];
            }
            IdxAff {
                fin: self.table.lmul(s, w.fin),
                lam,
            }
        }
    }

    fn rmul(&self, w: &IdxAff, s: usize) -> IdxAff {
        if s == 0 {
            let xt = &self.x_theta[w.fin as usize];
            let mut lam = w.lam;
            for i in 0..self.n {
                lam[i] += xt[i];
            }
            IdxAff {
                fin: self.x_s_theta[w.fin as usize],
                lam,
            }
        } else {
            IdxAff {
                fin: self.table.rmul(w.fin, s),
                lam: w.lam,
            }
        }
    }

    fn mul(&self, a: &IdxAff, b: &IdxAff) -> IdxAff {
        let xm = self.act(a.fin, &b.lam);
        let mut lam = a.lam;
        for i in 0..self.n {
            lam[i] += xm[i];
        }
        IdxAff {
            fin: self.table.mul(a.fin, b.fin),
            lam,
        }
    }

    fn inverse(&self, w: &IdxAff) -> IdxAff {
        let xi = self.table.inverse(w.fin);
        let mut lam = self.act(xi, &w.lam);
        for c in lam.iter_mut() {
            *c = -*c;
        }
        IdxAff { fin: xi, lam }
    }

    fn is_left_descent(&self, w: &IdxAff, s: usize) -> bool {
        if s == 0 {
            let t = self.dot(&self.theta, &w.lam);
            t > 1 || (t == 1 && self.theta_pos[w.fin as usize])
        } else {
            let l = w.lam[s - 1];
            l < 0 || (l == 0 && self.ldesc[w.fin as usize] & (1 << (s - 1)) != 0)
        }
    }
}

/// Largest dense grid (cells) used by [`lower_interval_indexed`] before it
/// falls back to hashing.
const DENSE_LIMIT: usize = 1 << 26;

/// `{u <= w}` on indexed elements.
///
/// Uses a dense bitmap over a box of translation parts when it is small
/// enough, and a hash set otherwise.
pub fn lower_interval_indexed(sys: &IndexedAffine, w: &IdxAff, budget: usize) -> Result<Vec<IdxAff>> {
    let (word, tau) = coxeter::reduced_word(sys, w);
    if word.len() > budget {
        return Err(Error::BudgetExceeded {
            length: word.len(),
            budget,
        });
    }
    let n = sys.n;
    let top = sys.mul(w, &sys.inverse(&tau));
    let reach = sys
        .roots
        .iter()
        .map(|a| sys.dot(a, &top.lam).abs())
        .max()
        .unwrap_or(0)
        + 2;
    let side = (2 * reach + 1) as usize;
    let order = sys.table.len();
    let cells = side.checked_pow(n as u32).and_then(|c| c.checked_mul(order));
    let list = match cells {
        Some(cells) if cells <= DENSE_LIMIT => dense_interval(sys, &word, reach, cells),
        _ => None,
    };
    let list = match list {
        Some(l) => l,
        None => coxeter::lower_interval(sys, &top, budget)?,
    };
    if tau == sys.identity() {
        Ok(list)
    } else {
        Ok(list.into_iter().map(|u| sys.mul(&u, &tau)).collect())
    }
}

fn dense_interval(sys: &IndexedAffine, word: &[usize], reach: i32, cells: usize) -> Option<Vec<IdxAff>> {
    let n = sys.n;
    let side = (2 * reach + 1) as usize;
    let order = sys.table.len();
    let key = |u: &IdxAff| -> Option<usize> {
        let mut k = 0usize;
        for i in (0..n).rev() {
            let c = u.lam[i] + reach;
            if c < 0 || c as usize >= side {
                return None;
            }
            k = k * side + c as usize;
        }
        Some(k * order + u.fin as usize)
    };
    let mut bits = vec![0u64; cells.div_ceil(64)];
    let id = sys.identity();
    let k0 = key(&id)?;
    bits[k0 / 64] |= 1 << (k0 % 64);
    let mut list = vec![id];
    for &s in word {
        let len = list.len();
        for j in 0..len {
            let v = sys.rmul(&list[j], s);
            let k = key(&v)?;
            if bits[k / 64] & (1 << (k % 64)) == 0 {
                bits[k / 64] |= 1 << (k % 64);
                list.push(v);
            }
        }
    }
    Some(list)
}

impl fmt::Display for IdxAff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{:?} x#{}", self.lam, self.fin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    #[test]
    fn a1_translation_length_and_word() {
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        let aw = AffineWeyl::new(&rs);
        let t = AffineElt::translation(vec![2]);
        assert_eq!(aw.length(&t), 2);
        assert_eq!(aw.geometric_length(&t), 2);
        let (word, tau) = aw.reduced_word(&t);
        assert_eq!(word.len(), 2);
        assert_eq!(tau, AffineElt::identity(1));
        assert_eq!(coxeter::from_word(&aw, &word), t);
        assert!(aw.bruhat_leq(&aw.simple(0), &t));
        assert_eq!(aw.lower_interval(&t, 30).unwrap().len(), 4);
    }

    #[test]
    fn a2_lengths() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let aw = AffineWeyl::new(&rs);
        let w = AffineElt::new(vec![2, 2], crate::weyl::longest_element(&rs));
        assert_eq!(aw.geometric_length(&w), 5);
        assert_eq!(aw.length(&w), 5);
        let t = AffineElt::translation(vec![1, 1]);
        assert_eq!(aw.reduced_word(&t).0.len(), 4);
    }

    #[test]
    fn display_words() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let w = AffineElt::new(vec![8, 8], WeylElt::from_word(&rs, &[1, 2]));
        assert_eq!(w.display(&rs), "t[8,8] s1s2");
        assert_eq!(AffineElt::identity(2).display(&rs), "e");
        assert_eq!(AffineElt::translation(vec![1, -1]).display(&rs), "t[1,-1]");
    }
}
