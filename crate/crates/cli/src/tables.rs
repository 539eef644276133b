//! The bound tables and the `wt(w_0)` closed forms, with recomputed values
//! alongside wherever the group is small enough.

use adlv_core::newton::{s_bound, theta_two_rho_check, xi_bound};
use adlv_core::qbg::{build_qbg, ell_r_w0_table, m_tilde, wt_w0_closed_form};
use adlv_core::weyl::longest_element;
use adlv_core::{CartanType, CorootVec, RootSystem};
use serde::Serialize;
use serde_json::json;

use crate::config::{RunConfig, TypeSel};
use crate::error::{CliError, CliResult};
use crate::render::{Document, Table};

pub const FAMILY_COLUMNS: [&str; 8] = ["A_n", "B_n/C_n", "D_n", "E_6", "E_7", "E_8", "F_4", "G_2"];

/// One quantity across the families, as printed.
pub struct Family {
    pub key: &'static str,
    pub symbol: &'static str,
    pub cells: [&'static str; 8],
    pub eval: fn(CartanType, usize) -> i64,
}

pub const FAMILIES: [Family; 4] = [
    Family {
        key: "xi",
        symbol: "Ξ",
        cells: ["3n+1", "6n-2", "6n-6", "23", "33", "57", "23", "9"],
        eval: xi_bound,
    },
    Family {
        key: "m_tilde",
        symbol: "M̃",
        cells: ["n+1", "2n", "2n", "12", "16", "28", "12", "4"],
        eval: m_tilde,
    },
    Family {
        key: "s",
        symbol: "S",
        cells: ["2n", "4n-2", "4n-6", "11", "17", "29", "11", "5"],
        eval: s_bound,
    },
    Family {
        key: "ell_r_w0",
        symbol: "ℓ_R(w₀)",
        cells: ["⌈n/2⌉", "n", "2⌊n/2⌋", "4", "7", "8", "4", "2"],
        eval: |ty, n| ell_r_w0_table(ty, n) as i64,
    },
];

/// Column of `FAMILY_COLUMNS` holding `ty` at rank `n`.
pub fn family_column(ty: CartanType, n: usize) -> usize {
    match ty {
        CartanType::A => 0,
        CartanType::B | CartanType::C => 1,
        CartanType::D => 2,
        CartanType::E => 3 + (n - 6),
        CartanType::F => 6,
        CartanType::G => 7,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeRow {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub xi: i64,
    pub m_tilde: i64,
    pub s: i64,
    pub theta_two_rho_check: i64,
    pub s_matches_pairing: bool,
    pub ell_r_w0: usize,
    pub ell_r_w0_computed: usize,
    pub wt_w0: CorootVec,
    /// Recomputed by breadth-first search when the group is within the brute-force cap.
    pub wt_w0_bfs: Option<CorootVec>,
    pub wt_w0_matches: Option<bool>,
    /// `max <α_i, wt(x)>` over the group.
    pub m_computed: Option<i64>,
}

/// Every valid rank up to 8.
pub fn ranks(ty: CartanType) -> Vec<usize> {
    (1..=8).filter(|&n| ty.validate(n).is_ok()).collect()
}

pub fn type_row(ty: CartanType, n: usize, brute_cap: u64) -> CliResult<TypeRow> {
    let rs = RootSystem::new(ty, n)?;
    let pairing = theta_two_rho_check(&rs);
    let s = s_bound(ty, n);
    let wt_w0 = wt_w0_closed_form(ty, n);
    let (bfs, m_computed) = if ty.weyl_order(n) <= brute_cap {
        let g = build_qbg(&rs, brute_cap)?;
        let w0 = g.table().longest();
        (Some(g.wt1_all().weight(w0)), Some(g.compute_m()))
    } else {
        (None, None)
    };
    Ok(TypeRow {
        ty: ty.to_string(),
        rank: n,
        xi: xi_bound(ty, n),
        m_tilde: m_tilde(ty, n),
        s,
        theta_two_rho_check: pairing,
        s_matches_pairing: s == pairing,
        ell_r_w0: ell_r_w0_table(ty, n),
        ell_r_w0_computed: longest_element(&rs).reflection_length(),
        wt_w0_matches: bfs.as_ref().map(|b| b == &wt_w0),
        wt_w0,
        wt_w0_bfs: bfs,
        m_computed,
    })
}

pub fn type_rows(cfg: &RunConfig) -> CliResult<Vec<TypeRow>> {
    let pairs: Vec<(CartanType, usize)> = match (cfg.types, cfg.rank) {
        (TypeSel::All, None) => CartanType::ALL.iter().flat_map(|&t| ranks(t).into_iter().map(move |n| (t, n))).collect(),
        (TypeSel::All, Some(_)) => return Err(CliError::Usage("--rank needs a single --type".into())),
        (TypeSel::One(t), None) => ranks(t).into_iter().map(|n| (t, n)).collect(),
        (TypeSel::One(t), Some(n)) => {
            t.validate(n).map_err(|e| CliError::Usage(e.to_string()))?;
            vec![(t, n)]
        }
    };
    pairs.into_iter().map(|(t, n)| type_row(t, n, cfg.brute_cap)).collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn cmd_tables(cfg: &RunConfig) -> CliResult<Document> {
    let rows = type_rows(cfg)?;
    let mut tables = Vec::new();
    let mut json = serde_json::Map::new();
    json.insert("schema_version".into(), json!(crate::SCHEMA_VERSION));
    if cfg.types == TypeSel::All {
        let mut headers = vec!["Type"];
        headers.extend(FAMILY_COLUMNS);
        let mut t = Table::new("Bounds by family", &headers);
        let mut fam = Vec::new();
        for f in &FAMILIES {
            let mut row = vec![f.symbol.to_string()];
            row.extend(f.cells.iter().map(|c| c.to_string()));
            t.rows.push(row);
            let cells: serde_json::Map<String, serde_json::Value> =
                FAMILY_COLUMNS.iter().zip(f.cells).map(|(c, v)| (c.to_string(), json!(v))).collect();
            fam.push(json!({"quantity": f.key, "symbol": f.symbol, "values": cells}));
        }
        tables.push(t);
        json.insert("families".into(), json!(fam));
    }
    let mut t = Table::new(
        "Values by type",
        &[
            "Type",
            "Ξ",
            "M̃",
            "S",
            "<θ,2ρ^vee>",
            "S = <θ,2ρ^vee>",
            "ℓ_R(w₀)",
            "ℓ_R(w₀) computed",
            "wt(w₀)",
            "wt(w₀) by BFS",
            "match",
            "max <α_i,wt(x)>",
        ],
    );
    for r in &rows {
        t.rows.push(vec![
            format!("{}{}", r.ty, r.rank),
            r.xi.to_string(),
            r.m_tilde.to_string(),
            r.s.to_string(),
            r.theta_two_rho_check.to_string(),
            r.s_matches_pairing.to_string(),
            r.ell_r_w0.to_string(),
            r.ell_r_w0_computed.to_string(),
            r.wt_w0.to_string(),
            opt(&r.wt_w0_bfs),
            opt(&r.wt_w0_matches),
            opt(&r.m_computed),
        ]);
    }
    tables.push(t);
    json.insert("types".into(), serde_json::to_value(&rows).map_err(|e| CliError::Format(e.to_string()))?);
    Ok(Document {
        json: serde_json::Value::Object(json),
        tables,
    })
}
