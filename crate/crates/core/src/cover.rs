//! Cocovers of `u t^λ v` for deep dominant `λ`, predicted case by case and
//! compared against exhaustive enumeration.

use serde::Serialize;

use crate::affine::{AffineElt, AffineWeyl};
use crate::error::Refusal;
use crate::rootsys::{CartanType, Coweight, RootSystem, RootVec};
use crate::weyl::WeylElt;

/// Depth of `λ` from which the case analysis is complete.
pub fn cover_depth_threshold(ty: CartanType) -> i64 {
    match ty {
        CartanType::G => 6,
        t if t.is_simply_laced() => 3,
        _ => 4,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocoverRecord {
    pub root: RootVec,
    pub m: i64,
    /// Case numbers 1 to 4 that produce this element.
    pub cases: Vec<u8>,
    /// The affine reflection `r` with `result = r w`.
    pub reflection: AffineElt,
    pub result: AffineElt,
}

/// The four-case prediction for the cocovers of `u t^λ v`.
pub fn predicted_cocovers(
    rs: &RootSystem,
    u: &WeylElt,
    lambda: &[i64],
    v: &WeylElt,
) -> Result<Vec<CocoverRecord>, Refusal> {
    let lam = Coweight::from_ints(lambda);
    if !lam.is_dominant() {
        return Err(Refusal::NotDominant);
    }
    let c = cover_depth_threshold(rs.cartan_type());
    if lam.depth() < num_rational::Rational64::from_integer(c) {
        return Err(Refusal::BelowThreshold {
            depth: lam.depth().to_string(),
            threshold: c,
        });
    }
    Ok(predicted_cocovers_unchecked(rs, u, lambda, v))
}

/// The case analysis evaluated without the depth hypothesis.
pub fn predicted_cocovers_unchecked(
    rs: &RootSystem,
    u: &WeylElt,
    lambda: &[i64],
    v: &WeylElt,
) -> Vec<CocoverRecord> {
    let lu = u.length(rs) as i64;
    let lv = v.length(rs) as i64;
    let aw = AffineWeyl::new(rs);
    let mut out: Vec<CocoverRecord> = Vec::new();
    for (k, alpha) in rs.positive_roots().iter().enumerate() {
        let s = WeylElt::reflection(rs, k);
        let q = rs.two_rho_pair(k);
        let a_check = rs.coroot_to_pairing(&rs.positive_coroots()[k]);
        let lowered: Vec<i64> = lambda.iter().zip(&a_check).map(|(l, a)| l - a).collect();
        let pair = rs.pair_int(alpha, lambda);
        let us = u.mul(&s);
        let sv = s.mul(v);
        let lus = us.length(rs) as i64;
        let lsv = sv.length(rs) as i64;
        let left = |x: &WeylElt, l: &[i64], y: &WeylElt| {
            AffineElt::from_finite(x.clone()).mul(&AffineElt::new(l.to_vec(), y.clone()))
        };
        let mut found: Vec<(u8, i64, AffineElt)> = Vec::new();
        if lus == lu - 1 {
            found.push((1, 0, left(&us, lambda, v)));
        }
        if lus == lu + q - 1 {
            found.push((2, 1, left(&us, &lowered, v)));
        }
        if lsv == lv + 1 {
            found.push((3, pair, left(u, lambda, &sv)));
        }
        if lsv == lv - q + 1 {
            found.push((4, pair - 1, left(u, &lowered, &sv)));
        }
        // The reflection is t^{m uα^vee} s_{uα}, written through u.
        let ua = AffineElt::from_finite(u.clone());
        for (case, m, result) in found {
            let refl = ua.mul(&aw.reflection(k, m)).mul(&ua.inverse());
            if let Some(r) = out.iter_mut().find(|r| r.result == result) {
                r.cases.push(case);
            } else {
                out.push(CocoverRecord {
                    root: alpha.clone(),
                    m,
                    cases: vec![case],
                    reflection: refl,
                    result,
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub w: String,
    pub below_threshold: bool,
    pub predicted: usize,
    pub enumerated: usize,
    /// Enumerated cocovers the prediction missed.
    pub missing: Vec<String>,
    /// Predicted elements that are not cocovers.
    pub extra: Vec<String>,
    pub mismatches: usize,
    /// Case-2 or case-4 records whose root is not quantum.
    pub non_quantum_cases: usize,
}

/// Compares the prediction for `u t^λ v` with exhaustive enumeration.
pub fn verify_cover_theorem(rs: &RootSystem, u: &WeylElt, lambda: &[i64], v: &WeylElt) -> CoverReport {
    let below = predicted_cocovers(rs, u, lambda, v).is_err();
    let predicted = predicted_cocovers_unchecked(rs, u, lambda, v);
    let aw = AffineWeyl::new(rs);
    let w = AffineElt::from_finite(u.clone()).mul(&AffineElt::new(lambda.to_vec(), v.clone()));
    let enumerated = aw.cocovers(&w);
    let missing: Vec<String> = enumerated
        .iter()
        .filter(|e| !predicted.iter().any(|p| &p.result == *e))
        .map(|e| e.display(rs))
        .collect();
    let extra: Vec<String> = predicted
        .iter()
        .filter(|p| !enumerated.contains(&p.result))
        .map(|p| p.result.display(rs))
        .collect();
    let non_quantum_cases = predicted
        .iter()
        .filter(|p| {
            p.cases.iter().any(|&c| c == 2 || c == 4)
                && !rs.is_quantum(rs.root_index(&p.root).unwrap())
        })
        .count();
    CoverReport {
        w: w.display(rs),
        below_threshold: below,
        predicted: predicted.len(),
        enumerated: enumerated.len(),
        mismatches: missing.len() + extra.len(),
        missing,
        extra,
        non_quantum_cases,
    }
}
