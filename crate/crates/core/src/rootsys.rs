//! Irreducible root systems in Bourbaki labeling.
//!
//! The Cartan matrix follows `C[i][j] = <alpha_j, alpha_i^vee>`. Coweights
//! are kept in pairing coordinates `c_i = <alpha_i, lambda>`; coroot
//! coordinates are recovered through the inverse transpose of `C`.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::weyl::WeylElt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub const ALL: [CartanType; 7] = [
        CartanType::A,
        CartanType::B,
        CartanType::C,
        CartanType::D,
        CartanType::E,
        CartanType::F,
        CartanType::G,
    ];

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s.trim().to_ascii_uppercase().as_str() {
            "A" => CartanType::A,
            "B" => CartanType::B,
            "C" => CartanType::C,
            "D" => CartanType::D,
            "E" => CartanType::E,
            "F" => CartanType::F,
            "G" => CartanType::G,
            _ => return None,
        })
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, CartanType::A | CartanType::D | CartanType::E)
    }

    /// Checks the rank against the classification.
    pub fn validate(self, rank: usize) -> Result<()> {
        let reason = match self {
            CartanType::A if rank < 1 => "type A needs rank >= 1",
            CartanType::B if rank < 2 => "type B needs rank >= 2",
            CartanType::C if rank < 2 => "type C needs rank >= 2",
            CartanType::D if rank < 4 => "type D needs rank >= 4",
            CartanType::E if !(6..=8).contains(&rank) => "type E needs rank 6, 7 or 8",
            CartanType::F if rank != 4 => "type F needs rank 4",
            CartanType::G if rank != 2 => "type G needs rank 2",
            _ => return Ok(()),
        };
        Err(Error::InvalidCartanType {
            ty: self.to_string(),
            rank,
            reason,
        })
    }

    /// Order of the finite Weyl group.
    pub fn weyl_order(self, n: usize) -> u64 {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        match self {
            CartanType::A => fact(n + 1),
            CartanType::B | CartanType::C => (1u64 << n) * fact(n),
            CartanType::D => (1u64 << (n - 1)) * fact(n),
            CartanType::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            CartanType::F => 1152,
            CartanType::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Coefficients in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RootVec(pub Vec<i64>);

/// Coefficients in the simple-coroot basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CorootVec(pub Vec<i64>);

impl RootVec {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sign of the first nonzero coefficient; `0` for the zero vector.
    pub fn sign(&self) -> i64 {
        self.0.iter().find(|&&c| c != 0).map_or(0, |c| c.signum())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl CorootVec {
    pub fn zero(n: usize) -> Self {
        CorootVec(vec![0; n])
    }

    pub fn add(&self, other: &CorootVec) -> CorootVec {
        CorootVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &CorootVec) -> CorootVec {
        CorootVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Coordinatewise comparison, i.e. dominance for elements of the coroot lattice.
    pub fn dominated_by(&self, other: &CorootVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

fn fmt_combination(f: &mut fmt::Formatter<'_>, coeffs: &[i64], sym: &str) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        if c.abs() != 1 {
            write!(f, "{}", c.abs())?;
        }
        write!(f, "{sym}{}", i + 1)?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combination(f, &self.0, "a")
    }
}

impl fmt::Display for CorootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combination(f, &self.0, "a^")
    }
}

/// A rational coweight in pairing coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<Rational64>);

/// Which lattice a coweight lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Lattice {
    /// The coroot lattice `Q^vee`.
    Coroot,
    /// The coweight lattice `P^vee`.
    Coweight,
    Rational,
}

impl Coweight {
    pub fn from_ints(c: &[i64]) -> Self {
        Coweight(c.iter().map(|&x| Rational64::from_integer(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Coweight(vec![Rational64::zero(); n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Integer pairing coordinates, if all are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Minimum of the pairing coordinates.
    pub fn depth(&self) -> Rational64 {
        self.0.iter().copied().min().unwrap_or_default()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|c| c.is_positive())
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: Rational64) -> Coweight {
        Coweight(self.0.iter().map(|a| a * k).collect())
    }
}

impl Serialize for Coweight {
    /// Integral entries as numbers, others as `"p/q"` strings.
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            if c.is_integer() {
                seq.serialize_element(&c.to_integer())?;
            } else {
                seq.serialize_element(&c.to_string())?;
            }
        }
        seq.end()
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// An irreducible root system with its positive roots and coroots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    n: usize,
    cartan: Vec<i64>,
    /// Symmetrized form `(alpha_i, alpha_j)`, integral.
    form: Vec<i64>,
    roots: Vec<RootVec>,
    coroots: Vec<CorootVec>,
    index: FxHashMap<RootVec, usize>,
    two_rho: RootVec,
    two_rho_check: CorootVec,
    theta: usize,
    refl_len: Vec<usize>,
    quantum: Vec<bool>,
    /// `(C^T)^{-1}`, mapping pairing coordinates to coroot coordinates.
    ct_inv: Vec<Rational64>,
}

fn edges(ty: CartanType, n: usize) -> (Vec<i64>, Vec<(usize, usize, i64)>) {
    let mut diag = vec![2; n];
    let mut e = Vec::new();
    match ty {
        CartanType::A => e.extend((0..n - 1).map(|i| (i, i + 1, -1))),
        CartanType::B => {
            diag = vec![4; n];
            diag[n - 1] = 2;
            e.extend((0..n - 1).map(|i| (i, i + 1, -2)));
        }
        CartanType::C => {
            diag[n - 1] = 4;
            e.extend((0..n - 2).map(|i| (i, i + 1, -1)));
            e.push((n - 2, n - 1, -2));
        }
        CartanType::D => {
            e.extend((0..n - 2).map(|i| (i, i + 1, -1)));
            e.push((n - 3, n - 1, -1));
        }
        CartanType::E => {
            e.push((0, 2, -1));
            e.push((1, 3, -1));
            e.extend((2..n - 1).map(|i| (i, i + 1, -1)));
        }
        CartanType::F => {
            diag = vec![4, 4, 2, 2];
            e.extend([(0, 1, -2), (1, 2, -2), (2, 3, -1)]);
        }
        CartanType::G => {
            diag = vec![2, 6];
            e.push((0, 1, -3));
        }
    }
    (diag, e)
}

impl RootSystem {
    pub fn new(ty: CartanType, n: usize) -> Result<Self> {
        ty.validate(n)?;
        let (diag, es) = edges(ty, n);
        let mut form = vec![0; n * n];
        for i in 0..n {
            form[i * n + i] = diag[i];
        }
        for &(i, j, v) in &es {
            form[i * n + j] = v;
            form[j * n + i] = v;
        }
        let mut cartan = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                cartan[i * n + j] = 2 * form[i * n + j] / form[i * n + i];
            }
        }

        // Close the simple roots under root strings.
        let simple: Vec<RootVec> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                RootVec(v)
            })
            .collect();
        let mut index: FxHashMap<RootVec, usize> = FxHashMap::default();
        let mut roots: Vec<RootVec> = Vec::new();
        let mut layer = simple.clone();
        while !layer.is_empty() {
            for r in &layer {
                index.insert(r.clone(), roots.len());
                roots.push(r.clone());
            }
            let mut next: Vec<RootVec> = Vec::new();
            for r in &layer {
                for i in 0..n {
                    if *r == simple[i] {
                        continue;
                    }
                    let mut p = 0;
                    let mut down = r.clone();
                    loop {
                        down.0[i] -= 1;
                        if index.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pair: i64 = (0..n).map(|j| r.0[j] * cartan[i * n + j]).sum();
                    if p - pair > 0 {
                        let mut up = r.clone();
                        up.0[i] += 1;
                        if !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort_by(|a, b| b.cmp(a));
            layer = next;
        }
        // Stable order: by height, then reverse-lexicographic.
        let mut order: Vec<usize> = (0..roots.len()).collect();
        order.sort_by(|&a, &b| {
            roots[a]
                .height()
                .cmp(&roots[b].height())
                .then_with(|| roots[b].cmp(&roots[a]))
        });
        let roots: Vec<RootVec> = order.into_iter().map(|k| roots[k].clone()).collect();
        let index: FxHashMap<RootVec, usize> =
            roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();

        let norm = |b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += b[i] * b[j] * form[i * n + j];
                }
            }
            s
        };
        let coroots: Vec<CorootVec> = roots
            .iter()
            .map(|r| {
                let nb = norm(&r.0);
                CorootVec((0..n).map(|i| r.0[i] * diag[i] / nb).collect())
            })
            .collect();

        let mut two_rho = vec![0; n];
        let mut two_rho_check = vec![0; n];
        for (r, c) in roots.iter().zip(&coroots) {
            for i in 0..n {
                two_rho[i] += r.0[i];
                two_rho_check[i] += c.0[i];
            }
        }
        let theta = (0..roots.len()).max_by_key(|&k| roots[k].height()).unwrap();

        let ct: Vec<Rational64> = (0..n * n)
            .map(|k| Rational64::from_integer(cartan[(k % n) * n + k / n]))
            .collect();
        let ct_inv = linalg::inverse(n, &ct).expect("Cartan matrix is invertible");

        let mut rs = RootSystem {
            ty,
            n,
            cartan,
            form,
            roots,
            coroots,
            index,
            two_rho: RootVec(two_rho),
            two_rho_check: CorootVec(two_rho_check),
            theta,
            refl_len: Vec::new(),
            quantum: Vec::new(),
            ct_inv,
        };
        rs.refl_len = (0..rs.roots.len())
            .map(|k| {
                let bc = &rs.coroots[k];
                rs.roots
                    .iter()
                    .filter(|g| {
                        let p = rs.pair(g, bc);
                        let img: Vec<i64> =
                            (0..n).map(|i| g.0[i] - p * rs.roots[k].0[i]).collect();
                        RootVec(img).sign() < 0
                    })
                    .count()
            })
            .collect();
        rs.quantum = (0..rs.roots.len())
            .map(|k| rs.refl_len[k] as i64 == rs.two_rho_pair(k) - 1)
            .collect();
        Ok(rs)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `C[i][j] = <alpha_j, alpha_i^vee>`, 0-based indices.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.n + j]
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.cartan(i, j)).collect())
            .collect()
    }

    /// Symmetrized inner product of two vectors in root coordinates.
    pub fn form(&self, a: &RootVec, b: &RootVec) -> i64 {
        let n = self.n;
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a.0[i] * b.0[j] * self.form[i * n + j];
            }
        }
        s
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn positive_coroots(&self) -> &[CorootVec] {
        &self.coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root_index(&self, beta: &RootVec) -> Option<usize> {
        self.index.get(beta).copied()
    }

    pub fn root_index_checked(&self, beta: &RootVec) -> Result<usize> {
        self.root_index(beta)
            .ok_or_else(|| Error::NotARoot(beta.0.clone()))
    }

    pub fn simple_root(&self, i: usize) -> &RootVec {
        &self.roots[i]
    }

    pub fn theta(&self) -> &RootVec {
        &self.roots[self.theta]
    }

    pub fn theta_index(&self) -> usize {
        self.theta
    }

    /// `2 rho`, the sum of the positive roots.
    pub fn two_rho(&self) -> &RootVec {
        &self.two_rho
    }

    /// `2 rho^vee`, the sum of the positive coroots.
    pub fn two_rho_check(&self) -> &CorootVec {
        &self.two_rho_check
    }

    /// `rho^vee` in pairing coordinates.
    pub fn rho_check(&self) -> Coweight {
        Coweight::from_ints(&vec![1; self.n])
    }

    /// Coxeter number `<theta, rho^vee> + 1`.
    pub fn coxeter_number(&self) -> i64 {
        self.theta().height() + 1
    }

    pub fn is_quantum(&self, k: usize) -> bool {
        self.quantum[k]
    }

    pub fn quantum_roots(&self) -> Vec<RootVec> {
        (0..self.roots.len())
            .filter(|&k| self.quantum[k])
            .map(|k| self.roots[k].clone())
            .collect()
    }

    /// `l(s_beta)` for the `k`-th positive root.
    pub fn reflection_length(&self, k: usize) -> usize {
        self.refl_len[k]
    }

    /// `<2 rho, beta^vee>` for the `k`-th positive root.
    pub fn two_rho_pair(&self, k: usize) -> i64 {
        2 * self.coroots[k].0.iter().sum::<i64>()
    }

    pub fn is_long(&self, k: usize) -> bool {
        let max = (0..self.n).map(|i| self.form[i * self.n + i]).max().unwrap();
        self.form(&self.roots[k], &self.roots[k]) == max
    }

    /// `<beta, gamma^vee>` for `beta` in root and `gamma` in coroot coordinates.
    pub fn pair(&self, beta: &RootVec, gamma: &CorootVec) -> i64 {
        let n = self.n;
        let mut s = 0;
        for j in 0..n {
            if gamma.0[j] == 0 {
                continue;
            }
            for i in 0..n {
                s += beta.0[i] * gamma.0[j] * self.cartan[j * n + i];
            }
        }
        s
    }

    /// `<beta, lambda>` for a coweight in integer pairing coordinates.
    pub fn pair_int(&self, beta: &RootVec, lambda: &[i64]) -> i64 {
        beta.0.iter().zip(lambda).map(|(a, b)| a * b).sum()
    }

    pub fn pair_coweight(&self, beta: &RootVec, lambda: &Coweight) -> Result<Rational64> {
        if lambda.rank() != self.n || beta.0.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: lambda.rank().min(beta.0.len()),
            });
        }
        Ok(beta
            .0
            .iter()
            .zip(&lambda.0)
            .map(|(&a, b)| b * a)
            .sum())
    }

    /// `<rho, lambda>`, half of the pairing with `2 rho`.
    pub fn rho_pair(&self, lambda: &Coweight) -> Rational64 {
        self.pair_coweight(&self.two_rho, lambda).unwrap() / 2
    }

    /// Pairing coordinates `C^T g` of a coroot-lattice vector.
    pub fn coroot_to_pairing(&self, g: &CorootVec) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| g.0[j] * self.cartan[j * n + i]).sum())
            .collect()
    }

    pub fn coroot_to_coweight(&self, g: &CorootVec) -> Coweight {
        Coweight::from_ints(&self.coroot_to_pairing(g))
    }

    /// Rational coroot coordinates of a coweight.
    pub fn coroot_coords(&self, lambda: &Coweight) -> Vec<Rational64> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| self.ct_inv[i * n + j] * lambda.0[j]).sum())
            .collect()
    }

    /// Integer coroot coordinates, if `lambda` lies in `Q^vee`.
    pub fn to_coroot(&self, lambda: &Coweight) -> Option<CorootVec> {
        self.coroot_coords(lambda)
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(CorootVec)
    }

    pub fn lattice_of(&self, lambda: &Coweight) -> Lattice {
        if lambda.to_ints().is_none() {
            Lattice::Rational
        } else if self.to_coroot(lambda).is_some() {
            Lattice::Coroot
        } else {
            Lattice::Coweight
        }
    }

    /// `lambda <= mu` in dominance order.
    pub fn dominance_leq(&self, lambda: &Coweight, mu: &Coweight) -> bool {
        self.coroot_coords(&mu.sub(lambda))
            .iter()
            .all(|c| !c.is_negative())
    }

    pub fn depth(&self, lambda: &Coweight) -> Rational64 {
        lambda.depth()
    }

    /// `s_i` applied to pairing coordinates in place (0-based `i`).
    pub fn reflect_simple(&self, i: usize, c: &mut [Rational64]) {
        let ci = c[i];
        for j in 0..self.n {
            c[j] -= ci * self.cartan[i * self.n + j];
        }
    }

    pub fn reflect_simple_int(&self, i: usize, c: &mut [i64]) {
        let ci = c[i];
        for j in 0..self.n {
            c[j] -= ci * self.cartan[i * self.n + j];
        }
    }

    /// Dominant representative of the W-orbit of `lambda` and an element `w`
    /// with `w(lambda)` dominant.
    pub fn dominant_rep(&self, lambda: &Coweight) -> (Coweight, WeylElt) {
        let mut c = lambda.0.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.n).find(|&i| c[i].is_negative()) {
            self.reflect_simple(i, &mut c);
            word.push(i + 1);
        }
        word.reverse();
        (Coweight(c), WeylElt::from_word(self, &word))
    }

    /// Dominant representative of an integral coweight.
    pub fn dominant_rep_int(&self, lambda: &[i64]) -> Vec<i64> {
        let mut c = lambda.to_vec();
        while let Some(i) = (0..self.n).find(|&i| c[i] < 0) {
            self.reflect_simple_int(i, &mut c);
        }
        c
    }
}
