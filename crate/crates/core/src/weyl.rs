//! Finite Weyl group elements as integer matrices.
//!
//! An element acts on coweights in pairing coordinates. Since the pairing
//! coordinates of the simple coroots are the columns of `C^T`, this is the
//! coroot action written in the fundamental coweight basis.

use std::collections::VecDeque;
use std::hash::{Hash, Hasher};
use std::ops::RangeInclusive;

use num_rational::Rational64;
use rustc_hash::FxHashMap;

use crate::coxeter::{self, Coxeter};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{CorootVec, Coweight, RootSystem, RootVec};

#[derive(Clone, Debug)]
pub struct WeylElt {
    n: usize,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl WeylElt {
    pub fn identity(n: usize) -> Self {
        let id = linalg::identity(n);
        WeylElt {
            n,
            mat: id.clone(),
            inv: id,
        }
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        Self::reflection(rs, i - 1)
    }

    /// `s_beta` for the `k`-th positive root.
    pub fn reflection(rs: &RootSystem, k: usize) -> Self {
        let n = rs.rank();
        let b = &rs.positive_roots()[k].0;
        let p = rs.coroot_to_pairing(&rs.positive_coroots()[k]);
        let mut mat = linalg::identity(n);
        for i in 0..n {
            for j in 0..n {
                mat[i * n + j] -= p[i] * b[j];
            }
        }
        WeylElt {
            n,
            inv: mat.clone(),
            mat,
        }
    }

    pub fn reflection_of(rs: &RootSystem, beta: &RootVec) -> Result<Self> {
        Ok(Self::reflection(rs, rs.root_index_checked(beta)?))
    }

    /// Product `s_{w[0]} s_{w[1]} ...` of simple reflections (1-based labels).
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(rs.rank()), |acc, &i| {
            acc.mul(&Self::simple(rs, i))
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Action matrix on pairing coordinates, row-major.
    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    pub fn mul(&self, other: &WeylElt) -> WeylElt {
        WeylElt {
            n: self.n,
            mat: linalg::mat_mul(self.n, &self.mat, &other.mat),
            inv: linalg::mat_mul(self.n, &other.inv, &self.inv),
        }
    }

    pub fn inverse(&self) -> WeylElt {
        WeylElt {
            n: self.n,
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.mat == linalg::identity(self.n)
    }

    pub fn is_involution(&self) -> bool {
        self.mat == self.inv
    }

    /// Action on a coweight given by integer pairing coordinates.
    pub fn act(&self, lambda: &[i64]) -> Vec<i64> {
        linalg::mat_vec(self.n, &self.mat, lambda)
    }

    pub fn act_coweight(&self, lambda: &Coweight) -> Coweight {
        let n = self.n;
        Coweight(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| lambda.0[j] * self.mat[i * n + j])
                        .sum::<Rational64>()
                })
                .collect(),
        )
    }

    /// `x(beta)` in root coordinates.
    pub fn act_root(&self, beta: &RootVec) -> RootVec {
        RootVec(linalg::mat_t_vec(self.n, &self.inv, &beta.0))
    }

    /// `x^{-1}(beta)` in root coordinates.
    pub fn inv_act_root(&self, beta: &RootVec) -> RootVec {
        RootVec(linalg::mat_t_vec(self.n, &self.mat, &beta.0))
    }

    /// `x(gamma)` for an element of the coroot lattice.
    pub fn act_coroot(&self, rs: &RootSystem, gamma: &CorootVec) -> CorootVec {
        let img = self.act(&rs.coroot_to_pairing(gamma));
        rs.to_coroot(&Coweight::from_ints(&img))
            .expect("W preserves the coroot lattice")
    }

    /// Whether `x(alpha_i) < 0` (0-based `i`), i.e. `x s_i < x`.
    pub fn sends_simple_negative(&self, i: usize) -> bool {
        let row = &self.inv[i * self.n..(i + 1) * self.n];
        row.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
    }

    /// Whether `x^{-1}(alpha_i) < 0` (0-based `i`), i.e. `s_i x < x`.
    pub fn inverse_sends_simple_negative(&self, i: usize) -> bool {
        let row = &self.mat[i * self.n..(i + 1) * self.n];
        row.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|b| self.act_root(b).sign() < 0)
            .count()
    }

    /// Positive roots sent to negative roots.
    pub fn inv_set(&self, rs: &RootSystem) -> Vec<RootVec> {
        rs.positive_roots()
            .iter()
            .filter(|b| self.act_root(b).sign() < 0)
            .cloned()
            .collect()
    }

    /// Reduced word in 1-based simple labels.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        coxeter::reduced_word(&FiniteWeyl::new(rs), self).0
    }

    /// Minimal number of reflections whose product is `x`, as the rank of `x - 1`.
    pub fn reflection_length(&self) -> usize {
        let mut m = self.mat.clone();
        for i in 0..self.n {
            m[i * self.n + i] -= 1;
        }
        linalg::rank(self.n, self.n, &m)
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = p.mul(self);
            k += 1;
        }
        k
    }
}

/// The longest element, by greedy ascent.
pub fn longest_element(rs: &RootSystem) -> WeylElt {
    let mut x = WeylElt::identity(rs.rank());
    while let Some(i) = (0..rs.rank()).find(|&i| !x.inverse_sends_simple_negative(i)) {
        x = WeylElt::simple(rs, i + 1).mul(&x);
    }
    x
}

pub fn bruhat_leq(rs: &RootSystem, x: &WeylElt, y: &WeylElt) -> bool {
    coxeter::bruhat_leq(&FiniteWeyl::new(rs), x, y)
}

/// The finite Weyl group as a Coxeter system on matrix elements.
#[derive(Clone, Copy)]
pub struct FiniteWeyl<'a> {
    pub rs: &'a RootSystem,
}

impl<'a> FiniteWeyl<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        FiniteWeyl { rs }
    }
}

impl Coxeter for FiniteWeyl<'_> {
    type Elt = WeylElt;

    fn generators(&self) -> RangeInclusive<usize> {
        1..=self.rs.rank()
    }

    fn identity(&self) -> WeylElt {
        WeylElt::identity(self.rs.rank())
    }

    fn length(&self, w: &WeylElt) -> usize {
        w.length(self.rs)
    }

    fn lmul(&self, s: usize, w: &WeylElt) -> WeylElt {
        WeylElt::simple(self.rs, s).mul(w)
    }

    fn rmul(&self, w: &WeylElt, s: usize) -> WeylElt {
        w.mul(&WeylElt::simple(self.rs, s))
    }

    fn mul(&self, a: &WeylElt, b: &WeylElt) -> WeylElt {
        a.mul(b)
    }

    fn inverse(&self, w: &WeylElt) -> WeylElt {
        w.inverse()
    }

    fn is_left_descent(&self, w: &WeylElt, s: usize) -> bool {
        w.inverse_sends_simple_negative(s - 1)
    }

    fn is_right_descent(&self, w: &WeylElt, s: usize) -> bool {
        w.sends_simple_negative(s - 1)
    }
}

/// The whole finite Weyl group with multiplication tables.
#[derive(Clone, Debug)]
pub struct GroupTable {
    n: usize,
    elements: Vec<WeylElt>,
    index: FxHashMap<Vec<i64>, u32>,
    lengths: Vec<u32>,
    lmul: Vec<u32>,
    rmul: Vec<u32>,
    inverse: Vec<u32>,
    cap: u64,
}

/// Enumerates `W`, refusing if its order exceeds `cap`.
///
/// Elements are sorted by length, then lexicographically by matrix.
pub fn enumerate_group(rs: &RootSystem, cap: u64) -> Result<GroupTable> {
    let order = rs.cartan_type().weyl_order(rs.rank());
    if order > cap {
        return Err(Error::GroupTooLarge { order, cap });
    }
    let n = rs.rank();
    let gens: Vec<WeylElt> = (1..=n).map(|i| WeylElt::simple(rs, i)).collect();
    let mut seen: FxHashMap<Vec<i64>, usize> = FxHashMap::default();
    let mut found = vec![WeylElt::identity(n)];
    let mut lens = vec![0u32];
    seen.insert(found[0].mat.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in &gens {
            let v = found[k].mul(g);
            if !seen.contains_key(&v.mat) {
                seen.insert(v.mat.clone(), found.len());
                lens.push(lens[k] + 1);
                found.push(v);
                queue.push_back(found.len() - 1);
            }
        }
    }
    debug_assert_eq!(found.len() as u64, order);
    let mut order_idx: Vec<usize> = (0..found.len()).collect();
    order_idx.sort_by(|&a, &b| lens[a].cmp(&lens[b]).then_with(|| found[a].mat.cmp(&found[b].mat)));
    let elements: Vec<WeylElt> = order_idx.iter().map(|&k| found[k].clone()).collect();
    let lengths: Vec<u32> = order_idx.iter().map(|&k| lens[k]).collect();
    let index: FxHashMap<Vec<i64>, u32> = elements
        .iter()
        .enumerate()
        .map(|(k, e)| (e.mat.clone(), k as u32))
        .collect();
    let look = |e: &WeylElt| index[&e.mat];
    let mut lmul = Vec::with_capacity(elements.len() * n);
    let mut rmul = Vec::with_capacity(elements.len() * n);
    let mut inverse = Vec::with_capacity(elements.len());
    for e in &elements {
        for g in &gens {
            lmul.push(look(&g.mul(e)));
            rmul.push(look(&e.mul(g)));
        }
        inverse.push(look(&e.inverse()));
    }
    Ok(GroupTable {
        n,
        elements,
        index,
        lengths,
        lmul,
        rmul,
        inverse,
        cap,
    })
}

impl GroupTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.elements
    }

    pub fn element(&self, k: u32) -> &WeylElt {
        &self.elements[k as usize]
    }

    pub fn index_of(&self, x: &WeylElt) -> u32 {
        self.index[&x.mat]
    }

    pub fn length(&self, k: u32) -> usize {
        self.lengths[k as usize] as usize
    }

    /// `s_i * x`, 1-based `i`.
    pub fn lmul(&self, i: usize, k: u32) -> u32 {
        self.lmul[k as usize * self.n + i - 1]
    }

    /// `x * s_i`, 1-based `i`.
    pub fn rmul(&self, k: u32, i: usize) -> u32 {
        self.rmul[k as usize * self.n + i - 1]
    }

    pub fn inverse(&self, k: u32) -> u32 {
        self.inverse[k as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.index_of(&self.element(a).mul(self.element(b)))
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn longest(&self) -> u32 {
        (self.len() - 1) as u32
    }

    pub fn involutions(&self) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&k| self.element(k).is_involution())
            .collect()
    }
}

/// The finite Weyl group on table indices.
#[derive(Clone, Copy)]
pub struct TableWeyl<'a> {
    pub table: &'a GroupTable,
}

impl Coxeter for TableWeyl<'_> {
    type Elt = u32;

    fn generators(&self) -> RangeInclusive<usize> {
        1..=self.table.rank()
    }

    fn identity(&self) -> u32 {
        0
    }

    fn length(&self, w: &u32) -> usize {
        self.table.length(*w)
    }

    fn lmul(&self, s: usize, w: &u32) -> u32 {
        self.table.lmul(s, *w)
    }

    fn rmul(&self, w: &u32, s: usize) -> u32 {
        self.table.rmul(*w, s)
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.table.mul(*a, *b)
    }

    fn inverse(&self, w: &u32) -> u32 {
        self.table.inverse(*w)
    }

    fn is_left_descent(&self, w: &u32, s: usize) -> bool {
        self.table.length(self.table.lmul(s, *w)) < self.table.length(*w)
    }

    fn is_right_descent(&self, w: &u32, s: usize) -> bool {
        self.table.length(self.table.rmul(*w, s)) < self.table.length(*w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    #[test]
    fn a2_braid_relation() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let a = WeylElt::from_word(&rs, &[1, 2, 1]);
        let b = WeylElt::from_word(&rs, &[2, 1, 2]);
        assert_eq!(a, b);
        assert_eq!(a, WeylElt::reflection_of(&rs, rs.theta()).unwrap());
        assert_eq!(a.length(&rs), 3);
        assert_eq!(longest_element(&rs), a);
    }

    #[test]
    fn s1s2_inversions() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let x = WeylElt::from_word(&rs, &[1, 2]);
        let mut inv = x.inv_set(&rs);
        inv.sort();
        assert_eq!(inv, vec![RootVec(vec![0, 1]), RootVec(vec![1, 1])]);
    }

    #[test]
    fn e7_is_too_large() {
        let rs = RootSystem::new(CartanType::E, 7).unwrap();
        assert_eq!(
            enumerate_group(&rs, 1_000_000).unwrap_err(),
            Error::GroupTooLarge {
                order: 2_903_040,
                cap: 1_000_000
            }
        );
    }

    #[test]
    fn table_is_ordered_by_length() {
        let rs = RootSystem::new(CartanType::B, 3).unwrap();
        let t = enumerate_group(&rs, 1000).unwrap();
        assert_eq!(t.len(), 48);
        assert_eq!(t.length(t.longest()), 9);
        assert!(t.element(0).is_identity());
        for k in 0..t.len() as u32 {
            assert_eq!(t.length(k), t.element(k).length(&rs));
        }
    }
}
