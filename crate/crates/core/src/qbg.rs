//! The quantum Bruhat graph on the finite Weyl group.
//!
//! Up edges `x -> x s_α` raise the length by one and weigh nothing. Down
//! edges drop the length by `<2ρ, α^vee> - 1` and weigh `α^vee`. Weights of
//! shortest paths are computed by BFS, checking on every layer that all
//! shortest paths agree.

use std::collections::VecDeque;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::Result;
use crate::rootsys::{CartanType, CorootVec, RootSystem, RootVec};
use crate::weyl::{enumerate_group, GroupTable, WeylElt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeKind {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub target: u32,
    /// Index of the positive root.
    pub root: u32,
    pub kind: EdgeKind,
}

/// Distances and weights from one BFS.
#[derive(Clone, Debug)]
pub struct PathData {
    pub dist: Vec<u32>,
    weights: Vec<i64>,
    n: usize,
    /// Edges on shortest paths whose weight disagreed with the layer.
    pub conflicts: usize,
}

impl PathData {
    pub fn weight(&self, k: u32) -> CorootVec {
        let k = k as usize;
        CorootVec(self.weights[k * self.n..(k + 1) * self.n].to_vec())
    }
}

pub struct QBGraph<'a> {
    pub rs: &'a RootSystem,
    table: GroupTable,
    out: Vec<Vec<Edge>>,
    inc: Vec<Vec<(u32, Edge)>>,
    /// `x s_β` for every `x` and positive root `β`.
    refl: Vec<u32>,
}

/// Builds the graph on an enumerated group; fails if `|W| > cap`.
pub fn build_qbg(rs: &RootSystem, cap: u64) -> Result<QBGraph<'_>> {
    Ok(QBGraph::from_table(rs, enumerate_group(rs, cap)?))
}

impl<'a> QBGraph<'a> {
    pub fn from_table(rs: &'a RootSystem, table: GroupTable) -> Self {
        let refls: Vec<WeylElt> = (0..rs.num_positive_roots())
            .map(|k| WeylElt::reflection(rs, k))
            .collect();
        let mut out = Vec::with_capacity(table.len());
        let mut inc: Vec<Vec<(u32, Edge)>> = vec![Vec::new(); table.len()];
        let mut refl = Vec::with_capacity(table.len() * refls.len());
        for (x, xe) in table.elements().iter().enumerate() {
            let lx = table.length(x as u32) as i64;
            let mut edges = Vec::new();
            for (k, r) in refls.iter().enumerate() {
                let y = table.index_of(&xe.mul(r));
                refl.push(y);
                let ly = table.length(y) as i64;
                let kind = if ly == lx + 1 {
                    EdgeKind::Up
                } else if ly == lx - rs.two_rho_pair(k) + 1 {
                    EdgeKind::Down
                } else {
                    continue;
                };
                let e = Edge {
                    target: y,
                    root: k as u32,
                    kind,
                };
                edges.push(e);
                inc[y as usize].push((x as u32, e));
            }
            out.push(edges);
        }
        QBGraph {
            rs,
            table,
            out,
            inc,
            refl,
        }
    }

    /// `x s_β` for the `k`-th positive root.
    pub fn refl_mul(&self, x: u32, k: usize) -> u32 {
        self.refl[x as usize * self.rs.num_positive_roots() + k]
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn out_edges(&self, x: u32) -> &[Edge] {
        &self.out[x as usize]
    }

    pub fn index_of(&self, x: &WeylElt) -> u32 {
        self.table.index_of(x)
    }

    fn edge_weight(&self, e: &Edge) -> Option<&[i64]> {
        (e.kind == EdgeKind::Down).then(|| self.rs.positive_coroots()[e.root as usize].0.as_slice())
    }

    fn bfs(&self, start: u32, reverse: bool, down_only: bool) -> PathData {
        let n = self.rs.rank();
        let size = self.len();
        let mut dist = vec![u32::MAX; size];
        let mut weights = vec![0i64; size * n];
        let mut conflicts = 0;
        dist[start as usize] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            let nbrs: Vec<(u32, Edge)> = if reverse {
                self.inc[u as usize].clone()
            } else {
                self.out[u as usize].iter().map(|e| (e.target, *e)).collect()
            };
            for (v, e) in nbrs {
                if down_only && e.kind != EdgeKind::Down {
                    continue;
                }
                let mut w: Vec<i64> = weights[u as usize * n..(u as usize + 1) * n].to_vec();
                if let Some(c) = self.edge_weight(&e) {
                    for i in 0..n {
                        w[i] += c[i];
                    }
                }
                let slot = v as usize * n..(v as usize + 1) * n;
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    weights[slot].copy_from_slice(&w);
                    queue.push_back(v);
                } else if dist[v as usize] == du + 1 && weights[slot] != w[..] {
                    conflicts += 1;
                }
            }
        }
        PathData {
            dist,
            weights,
            n,
            conflicts,
        }
    }

    /// Shortest paths from `x` to every vertex.
    pub fn paths_from(&self, x: u32) -> PathData {
        self.bfs(x, false, false)
    }

    /// Shortest paths from every vertex to `y`.
    pub fn paths_to(&self, y: u32) -> PathData {
        self.bfs(y, true, false)
    }

    /// `(d_Γ(x, y), wt(x, y))`.
    pub fn wt(&self, x: u32, y: u32) -> (u32, CorootVec) {
        let p = self.paths_from(x);
        (p.dist[y as usize], p.weight(y))
    }

    /// `wt(x) = wt(x, 1)` and `d_Γ(x, 1)` for all `x`.
    pub fn wt1_all(&self) -> PathData {
        self.paths_to(0)
    }

    /// `ℓ_↓(x)` for all `x`: distances to `1` using down edges only.
    pub fn ell_down_all(&self) -> Vec<u32> {
        self.bfs(0, true, true).dist
    }

    /// A reduced quantum reflection decomposition `x = s_{β_1} ... s_{β_k}`,
    /// read off a shortest down path, taking the first edge in root order.
    pub fn rqrd(&self, x: u32) -> Vec<RootVec> {
        let ld = self.ell_down_all();
        let mut cur = x;
        let mut path = Vec::new();
        while cur != 0 {
            let e = self.out[cur as usize]
                .iter()
                .find(|e| e.kind == EdgeKind::Down && ld[e.target as usize] + 1 == ld[cur as usize])
                .expect("down path to the identity");
            path.push(self.rs.positive_roots()[e.root as usize].clone());
            cur = e.target;
        }
        path.reverse();
        path
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.paths_from(0).dist.iter().all(|&d| d != u32::MAX)
            && self.paths_to(0).dist.iter().all(|&d| d != u32::MAX)
    }

    /// `max <α_i, wt(x)>` over all `x` and simple `α_i`.
    pub fn compute_m(&self) -> i64 {
        let data = self.wt1_all();
        let n = self.rs.rank();
        (0..self.len() as u32)
            .map(|x| {
                let p = self.rs.coroot_to_pairing(&data.weight(x));
                (0..n).map(|i| p[i]).max().unwrap()
            })
            .max()
            .unwrap_or(0)
    }

    /// `min_x d_Γ(x, x w_0)`.
    pub fn min_dgamma_to_w0_translate(&self) -> u32 {
        let w0 = self.table.longest();
        (0..self.len() as u32)
            .map(|x| {
                let y = self.table.mul(x, w0);
                self.paths_from(x).dist[y as usize]
            })
            .min()
            .unwrap_or(0)
    }
}

/// Closed form for `wt(w_0)` in each type.
pub fn wt_w0_closed_form(ty: CartanType, n: usize) -> CorootVec {
    let v: Vec<i64> = match ty {
        CartanType::A => (1..=n).map(|i| i.min(n + 1 - i) as i64).collect(),
        CartanType::B => {
            let k = (n / 2) as i64;
            let mut v: Vec<i64> = (0..n - 1).map(|i| 2 * (i as i64 / 2 + 1)).collect();
            if n.is_multiple_of(2) {
                v[n - 2] = 2 * k;
                v.push(k);
            } else {
                v.push(k + 1);
            }
            v
        }
        CartanType::C => (1..=n as i64).collect(),
        CartanType::D => {
            let k = (n / 2) as i64;
            let mut v: Vec<i64> = (0..n - 2).map(|i| 2 * (i as i64 / 2 + 1)).collect();
            if n % 2 == 1 {
                v[n - 3] = 2 * k;
            }
            v.extend([k, k]);
            v
        }
        CartanType::E => match n {
            6 => vec![2, 2, 4, 6, 4, 2],
            7 => vec![2, 5, 6, 8, 7, 4, 3],
            _ => vec![4, 8, 10, 14, 12, 8, 6, 2],
        },
        CartanType::F => vec![2, 6, 4, 2],
        CartanType::G => vec![2, 2],
    };
    CorootVec(v)
}

/// Exhibited reduced quantum reflection decompositions of `w_0` for the
/// exceptional types.
pub fn w0_exhibit(ty: CartanType, n: usize) -> Option<Vec<RootVec>> {
    let rows: Vec<Vec<i64>> = match (ty, n) {
        (CartanType::E, 6) => vec![
            vec![1, 2, 2, 3, 2, 1],
            vec![1, 0, 1, 1, 1, 1],
            vec![0, 0, 1, 1, 1, 0],
            vec![0, 0, 0, 1, 0, 0],
        ],
        (CartanType::E, 7) => vec![
            vec![2, 2, 3, 4, 3, 2, 1],
            vec![0, 1, 1, 2, 2, 2, 1],
            vec![0, 1, 1, 2, 1, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1],
        ],
        (CartanType::E, 8) => vec![
            vec![2, 3, 4, 6, 5, 4, 3, 2],
            vec![2, 2, 3, 4, 3, 2, 1, 0],
            vec![0, 1, 1, 2, 2, 2, 1, 0],
            vec![0, 1, 1, 2, 1, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1, 0],
        ],
        (CartanType::F, 4) => vec![
            vec![2, 3, 4, 2],
            vec![0, 1, 2, 2],
            vec![0, 1, 2, 0],
            vec![0, 1, 0, 0],
        ],
        (CartanType::G, 2) => vec![vec![3, 2], vec![1, 0]],
        _ => return None,
    };
    Some(rows.into_iter().map(RootVec).collect())
}

/// `M̃`, an upper bound for `max <α_i, wt(x)>`.
pub fn m_tilde(ty: CartanType, n: usize) -> i64 {
    let n = n as i64;
    match ty {
        CartanType::A => n + 1,
        CartanType::B | CartanType::C | CartanType::D => 2 * n,
        CartanType::E => match n {
            6 => 12,
            7 => 16,
            _ => 28,
        },
        CartanType::F => 12,
        CartanType::G => 4,
    }
}

/// Tabulated reflection length of `w_0`.
pub fn ell_r_w0_table(ty: CartanType, n: usize) -> usize {
    match ty {
        CartanType::A => n.div_ceil(2),
        CartanType::B | CartanType::C => n,
        CartanType::D => 2 * (n / 2),
        CartanType::E => match n {
            6 => 4,
            7 => 7,
            _ => 8,
        },
        CartanType::F => 4,
        CartanType::G => 2,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RqrdReport {
    pub valid: bool,
    pub factors: usize,
    pub length_additive: bool,
    pub all_quantum: bool,
    pub product_matches: bool,
    /// `Some(true)` when minimality was established, `None` when it could not be decided.
    pub minimal: Option<bool>,
    pub weight: CorootVec,
    pub reason: Option<String>,
}

/// Checks that `factors` give a reduced quantum reflection decomposition of `x`.
///
/// Minimality comes from the graph when one is supplied, and otherwise from
/// the lower bound `ℓ_R(x) <= ℓ_↓(x)`.
pub fn verify_rqrd(rs: &RootSystem, x: &WeylElt, factors: &[RootVec], graph: Option<&QBGraph>) -> RqrdReport {
    let n = rs.rank();
    let mut reason = None;
    let mut idx = Vec::new();
    for b in factors {
        match rs.root_index(b) {
            Some(k) => idx.push(k),
            None => reason = Some(format!("{b} is not a positive root")),
        }
    }
    if reason.is_some() {
        return RqrdReport {
            valid: false,
            factors: factors.len(),
            length_additive: false,
            all_quantum: false,
            product_matches: false,
            minimal: None,
            weight: CorootVec::zero(n),
            reason,
        };
    }
    let all_quantum = idx.iter().all(|&k| rs.is_quantum(k));
    let prod = idx
        .iter()
        .fold(WeylElt::identity(n), |acc, &k| acc.mul(&WeylElt::reflection(rs, k)));
    let product_matches = &prod == x;
    let total: usize = idx.iter().map(|&k| rs.reflection_length(k)).sum();
    let length_additive = total == x.length(rs);
    let weight = idx
        .iter()
        .fold(CorootVec::zero(n), |acc, &k| acc.add(&rs.positive_coroots()[k]));
    let minimal = match graph {
        Some(g) => Some(g.ell_down_all()[g.index_of(x) as usize] as usize == factors.len()),
        None if x.reflection_length() == factors.len() => Some(true),
        None => None,
    };
    if !all_quantum {
        reason = Some("a factor is not a quantum root".into());
    } else if !product_matches {
        reason = Some("the product differs from the element".into());
    } else if !length_additive {
        reason = Some(format!("lengths sum to {total}, not {}", x.length(rs)));
    } else if minimal == Some(false) {
        reason = Some("not minimal".into());
    } else if minimal.is_none() {
        reason = Some("minimality undecided".into());
    }
    RqrdReport {
        valid: reason.is_none(),
        factors: factors.len(),
        length_additive,
        all_quantum,
        product_matches,
        minimal,
        weight,
        reason,
    }
}

/// All shortest-path weights from `x`, listed by brute-force path
/// enumeration. Meant for very small groups.
pub fn all_shortest_path_weights(g: &QBGraph, x: u32, y: u32) -> Vec<CorootVec> {
    let dist = g.paths_from(x).dist;
    let n = g.rs.rank();
    let mut out: FxHashSet<Vec<i64>> = FxHashSet::default();
    let mut stack = vec![(x, vec![0i64; n])];
    while let Some((u, w)) = stack.pop() {
        if u == y {
            out.insert(w);
            continue;
        }
        for e in g.out_edges(u) {
            if dist[e.target as usize] == dist[u as usize] + 1 && dist[e.target as usize] <= dist[y as usize] {
                let mut w2 = w.clone();
                if let Some(c) = g.edge_weight(e) {
                    for i in 0..n {
                        w2[i] += c[i];
                    }
                }
                stack.push((e.target, w2));
            }
        }
    }
    let mut v: Vec<CorootVec> = out.into_iter().map(CorootVec).collect();
    v.sort();
    v
}
