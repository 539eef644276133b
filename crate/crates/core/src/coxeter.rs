//! Algorithms shared by the finite and affine Weyl groups.
//!
//! Everything here only needs lengths, descents and multiplication by
//! generators. Elements of length zero (the `Omega` part of an extended
//! affine Weyl group) are carried as a residue next to reduced words.

use std::fmt::Debug;
use std::hash::Hash;
use std::ops::RangeInclusive;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};

pub trait Coxeter {
    type Elt: Clone + Eq + Hash + Debug;

    /// Labels of the simple generators.
    fn generators(&self) -> RangeInclusive<usize>;
    fn identity(&self) -> Self::Elt;
    fn length(&self, w: &Self::Elt) -> usize;
    /// `s * w`.
    fn lmul(&self, s: usize, w: &Self::Elt) -> Self::Elt;
    /// `w * s`.
    fn rmul(&self, w: &Self::Elt, s: usize) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn inverse(&self, w: &Self::Elt) -> Self::Elt;
    /// Whether `s w < w`.
    fn is_left_descent(&self, w: &Self::Elt, s: usize) -> bool;
    /// Whether `w s < w`.
    fn is_right_descent(&self, w: &Self::Elt, s: usize) -> bool {
        self.is_left_descent(&self.inverse(w), s)
    }
}

/// Splits `w` as `s_{a_1} ... s_{a_k} * tau` with `k = l(w)` and `l(tau) = 0`.
pub fn reduced_word<C: Coxeter>(sys: &C, w: &C::Elt) -> (Vec<usize>, C::Elt) {
    let mut cur = w.clone();
    let mut word = Vec::new();
    'outer: loop {
        for s in sys.generators() {
            if sys.is_left_descent(&cur, s) {
                cur = sys.lmul(s, &cur);
                word.push(s);
                continue 'outer;
            }
        }
        return (word, cur);
    }
}

pub fn from_word<C: Coxeter>(sys: &C, word: &[usize]) -> C::Elt {
    word.iter()
        .fold(sys.identity(), |acc, &s| sys.rmul(&acc, s))
}

/// Bruhat order by the lifting property.
///
/// With `s w < w`: if `s x < x` then `x <= w` iff `s x <= s w`, otherwise
/// `x <= w` iff `x <= s w`. Elements of different `Omega` parts are
/// incomparable, which the length-zero base case detects.
pub fn bruhat_leq<C: Coxeter>(sys: &C, x: &C::Elt, w: &C::Elt) -> bool {
    let mut x = x.clone();
    let mut w = w.clone();
    let mut lx = sys.length(&x);
    let mut lw = sys.length(&w);
    loop {
        if lx > lw {
            return false;
        }
        if lw == 0 {
            return x == w;
        }
        let s = sys
            .generators()
            .find(|&s| sys.is_left_descent(&w, s))
            .expect("positive length has a descent");
        w = sys.lmul(s, &w);
        lw -= 1;
        if sys.is_left_descent(&x, s) {
            x = sys.lmul(s, &x);
            lx -= 1;
        }
    }
}

/// All `u <= w`, in discovery order, by the subword recursion over one
/// reduced word.
pub fn lower_interval<C: Coxeter>(sys: &C, w: &C::Elt, budget: usize) -> Result<Vec<C::Elt>> {
    let (word, tau) = reduced_word(sys, w);
    if word.len() > budget {
        return Err(Error::BudgetExceeded {
            length: word.len(),
            budget,
        });
    }
    let mut seen: FxHashSet<C::Elt> = FxHashSet::default();
    let mut list = vec![sys.identity()];
    seen.insert(sys.identity());
    for &s in &word {
        let len = list.len();
        for k in 0..len {
            let v = sys.rmul(&list[k], s);
            if seen.insert(v.clone()) {
                list.push(v);
            }
        }
    }
    Ok(list.into_iter().map(|u| sys.mul(&u, &tau)).collect())
}

/// Demazure product `x * y`, the maximum of `{uv : u <= x, v <= y}`.
pub fn demazure_star<C: Coxeter>(sys: &C, x: &C::Elt, y: &C::Elt) -> C::Elt {
    let (word, tau) = reduced_word(sys, y);
    let mut cur = x.clone();
    for s in word {
        if !sys.is_right_descent(&cur, s) {
            cur = sys.rmul(&cur, s);
        }
    }
    sys.mul(&cur, &tau)
}

/// `x ◁ y`, the minimum of `{xv : v <= y}`.
pub fn demazure_ltri<C: Coxeter>(sys: &C, x: &C::Elt, y: &C::Elt) -> C::Elt {
    let (word, tau) = reduced_word(sys, y);
    let mut cur = x.clone();
    for s in word {
        if sys.is_right_descent(&cur, s) {
            cur = sys.rmul(&cur, s);
        }
    }
    sys.mul(&cur, &tau)
}

/// `x ▷ y`, the minimum of `{uy : u <= x}`.
pub fn demazure_rtri<C: Coxeter>(sys: &C, x: &C::Elt, y: &C::Elt) -> C::Elt {
    let (word, tau) = reduced_word(sys, x);
    let mut cur = sys.mul(&tau, y);
    for &s in word.iter().rev() {
        if sys.is_left_descent(&cur, s) {
            cur = sys.lmul(s, &cur);
        }
    }
    cur
}
