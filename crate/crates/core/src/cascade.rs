//! Cascades of involutions, `W`-depth and reduced reflection length.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qbg::QBGraph;
use crate::rootsys::{CorootVec, RootSystem, RootVec};
use crate::weyl::WeylElt;

#[derive(Clone, Debug, Serialize)]
pub struct CascadeResult {
    #[serde(skip)]
    pub involution: WeylElt,
    pub levels: Vec<Vec<RootVec>>,
    pub r: CorootVec,
}

/// Positive roots `β` with `x(β) = -β`.
pub fn minus_one_roots(rs: &RootSystem, x: &WeylElt) -> Result<Vec<RootVec>> {
    Ok(minus_one_indices(rs, x)?
        .into_iter()
        .map(|k| rs.positive_roots()[k].clone())
        .collect())
}

fn minus_one_indices(rs: &RootSystem, x: &WeylElt) -> Result<Vec<usize>> {
    if !x.is_involution() {
        return Err(Error::NotInvolution);
    }
    Ok(rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, b)| x.act_root(b).0.iter().zip(&b.0).all(|(p, q)| p == &-q))
        .map(|(k, _)| k)
        .collect())
}

fn dominates(a: &RootVec, b: &RootVec) -> bool {
    a.0.iter().zip(&b.0).all(|(p, q)| p >= q)
}

pub fn cascade_r(rs: &RootSystem, x: &WeylElt) -> Result<CascadeResult> {
    let mut pool = minus_one_indices(rs, x)?;
    let roots = rs.positive_roots();
    let mut levels = Vec::new();
    let mut r = CorootVec::zero(rs.rank());
    while !pool.is_empty() {
        let level: Vec<usize> = pool
            .iter()
            .copied()
            .filter(|&a| {
                !pool
                    .iter()
                    .any(|&b| b != a && dominates(&roots[b], &roots[a]))
            })
            .collect();
        for &k in &level {
            r = r.add(&rs.positive_coroots()[k]);
        }
        pool.retain(|&a| {
            level
                .iter()
                .all(|&b| rs.pair(&roots[a], &rs.positive_coroots()[b]) == 0)
        });
        levels.push(level.iter().map(|&k| roots[k].clone()).collect());
    }
    Ok(CascadeResult {
        involution: x.clone(),
        levels,
        r,
    })
}

/// `dp(s_β) = (l(s_β) + 1) / 2` for the `k`-th positive root.
pub fn dp_root(rs: &RootSystem, k: usize) -> u32 {
    (rs.reflection_length(k) as u32).div_ceil(2)
}

/// `dp(x)` for every element, by least-cost search over all reflections.
pub fn dp_all(g: &QBGraph) -> Vec<u32> {
    let rs = g.rs;
    let costs: Vec<u32> = (0..rs.num_positive_roots()).map(|k| dp_root(rs, k)).collect();
    let mut dist = vec![u32::MAX; g.len()];
    let mut heap = BinaryHeap::new();
    dist[0] = 0;
    heap.push(Reverse((0u32, 0u32)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if d > dist[x as usize] {
            continue;
        }
        for (k, &c) in costs.iter().enumerate() {
            let y = g.refl_mul(x, k);
            if d + c < dist[y as usize] {
                dist[y as usize] = d + c;
                heap.push(Reverse((d + c, y)));
            }
        }
    }
    dist
}

/// `l_red(x)` for every element: BFS from `1` along length-additive reflections.
pub fn ell_red_all(g: &QBGraph) -> Vec<u32> {
    let rs = g.rs;
    let t = g.table();
    let lens: Vec<usize> = (0..rs.num_positive_roots()).map(|k| rs.reflection_length(k)).collect();
    let mut dist = vec![u32::MAX; g.len()];
    dist[0] = 0;
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        for (k, &l) in lens.iter().enumerate() {
            let y = g.refl_mul(x, k);
            if t.length(y) == t.length(x) + l && dist[y as usize] == u32::MAX {
                dist[y as usize] = dist[x as usize] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// All sets of pairwise orthogonal positive roots whose reflections multiply to `x`,
/// as sorted root indices.
pub fn orthogonal_decompositions(rs: &RootSystem, x: &WeylElt) -> Result<Vec<Vec<usize>>> {
    let cands = minus_one_indices(rs, x)?;
    let need = x.reflection_length();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend_orthogonal(rs, &cands, 0, need, &mut cur, &mut out);
    Ok(out)
}

fn extend_orthogonal(
    rs: &RootSystem,
    cands: &[usize],
    start: usize,
    need: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == need {
        out.push(cur.clone());
        return;
    }
    let roots = rs.positive_roots();
    let coroots = rs.positive_coroots();
    for i in start..cands.len() {
        let a = cands[i];
        if cur.iter().all(|&b| rs.pair(&roots[a], &coroots[b]) == 0) {
            cur.push(a);
            extend_orthogonal(rs, cands, i + 1, need, cur, out);
            cur.pop();
        }
    }
}

/// One involution in a `wt` versus `r` comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CascadeRow {
    pub x_word: Vec<usize>,
    pub wt: CorootVec,
    pub r: CorootVec,
    pub dp: u32,
    pub ell_red: u32,
    pub ell_down: u32,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Compares `wt(x)` with `r_x` for every involution.
pub fn compare_wt_r(g: &QBGraph) -> Vec<CascadeRow> {
    let rs = g.rs;
    let t = g.table();
    let wt = g.wt1_all();
    let dp = dp_all(g);
    let red = ell_red_all(g);
    let down = g.ell_down_all();
    t.involutions()
        .into_iter()
        .map(|x| {
            let xe = t.element(x);
            let r = cascade_r(rs, xe).expect("involution").r;
            let w = wt.weight(x);
            CascadeRow {
                x_word: xe.reduced_word(rs),
                matches: w == r,
                wt: w,
                r,
                dp: dp[x as usize],
                ell_red: red[x as usize],
                ell_down: down[x as usize],
            }
        })
        .collect()
}
