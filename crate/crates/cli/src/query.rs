//! Single computations on one element or coweight.

use adlv_core::adm::{self, BInvariants};
use adlv_core::cascade;
use adlv_core::cover::predicted_cocovers;
use adlv_core::newton::{max_newton_formula_general, newton_point, NewtonOracle};
use adlv_core::qbg::{build_qbg, QBGraph};
use adlv_core::{AffineElt, AffineWeyl, Coweight, Error, RootSystem, WeylElt};
use num_rational::Rational64;
use serde_json::{json, Map, Value};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::expr::{parse_query, Arg, ArgKind, Query};
use crate::render::Document;

pub const COMMANDS: [&str; 19] = [
    "wt", "nu", "len", "word", "cocovers", "star", "rtri", "ltri", "eta", "cascade", "dp", "lred", "ldown", "lR",
    "adm", "dadm", "dim", "newton", "inv",
];

fn arity(q: &Query, allowed: &[usize]) -> CliResult<()> {
    if allowed.contains(&q.args.len()) {
        Ok(())
    } else {
        let want: Vec<String> = allowed.iter().map(|k| k.to_string()).collect();
        Err(CliError::parse(
            &q.command,
            q.command_pos,
            format!("'{}' takes {} argument(s), found {}", q.command, want.join(" or "), q.args.len()),
        ))
    }
}

fn element(a: &Arg) -> CliResult<AffineElt> {
    match &a.kind {
        ArgKind::Element(w) => Ok(w.clone()),
        _ => Err(CliError::parse(&a.text, a.pos, "expected an element")),
    }
}

fn finite(a: &Arg) -> CliResult<WeylElt> {
    let w = element(a)?;
    if w.lambda.iter().any(|&c| c != 0) {
        return Err(CliError::parse(&a.text, a.pos, "expected a finite Weyl group element"));
    }
    Ok(w.finite)
}

fn coweight(a: &Arg) -> CliResult<Coweight> {
    match &a.kind {
        ArgKind::Coweight(c) => Ok(c.clone()),
        _ => Err(CliError::parse(&a.text, a.pos, "expected a coweight [..]")),
    }
}

fn integral(a: &Arg) -> CliResult<Vec<i64>> {
    coweight(a)?
        .to_ints()
        .ok_or_else(|| CliError::parse(&a.text, a.pos, "expected integer coordinates"))
}

fn int(a: &Arg) -> CliResult<i64> {
    match &a.kind {
        ArgKind::Int(k) => Ok(*k),
        _ => Err(CliError::parse(&a.text, a.pos, "expected an integer")),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

fn rational(r: Rational64) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(r.to_string())
    }
}

fn disp(rs: &RootSystem, x: &WeylElt) -> String {
    AffineElt::from_finite(x.clone()).display(rs)
}

/// Runs `expr` against the root system of `cfg`.
pub fn cmd_query(cfg: &RunConfig, expr: &str) -> CliResult<Document> {
    let rs = cfg.root_system()?;
    let q = parse_query(&rs, expr)?;
    let mut out = Map::new();
    out.insert("query".into(), json!(expr));
    out.insert("type".into(), json!(format!("{}{}", rs.cartan_type(), rs.rank())));
    let graph = || build_qbg(&rs, cfg.group_cap);
    let aw = AffineWeyl::new(&rs);
    match q.command.as_str() {
        "wt" => {
            arity(&q, &[1, 2])?;
            let g = graph()?;
            let (dist, wt) = if q.args.len() == 1 {
                let x = g.index_of(&finite(&q.args[0])?);
                g.wt(x, g.table().identity())
            } else {
                let x = g.index_of(&finite(&q.args[0])?);
                let y = g.index_of(&finite(&q.args[1])?);
                g.wt(x, y)
            };
            out.insert("wt".into(), to_json(&wt));
            out.insert("wt_display".into(), json!(wt.to_string()));
            out.insert("distance".into(), json!(dist));
        }
        "nu" => {
            arity(&q, &[1])?;
            let w = element(&q.args[0])?;
            let g = graph()?;
            nu(cfg, &g, &w, &mut out)?;
        }
        "newton" => {
            arity(&q, &[1])?;
            let w = element(&q.args[0])?;
            out.insert("newton_point".into(), to_json(&newton_point(&rs, &w).0));
        }
        "len" => {
            arity(&q, &[1])?;
            let w = element(&q.args[0])?;
            out.insert("element".into(), json!(w.display(&rs)));
            out.insert("length".into(), json!(aw.length(&w)));
            out.insert("geometric_length".into(), json!(aw.geometric_length(&w)));
        }
        "word" => {
            arity(&q, &[1])?;
            let w = element(&q.args[0])?;
            let (word, tau) = aw.reduced_word(&w);
            let text: Vec<String> = word.iter().map(|i| format!("s{i}")).collect();
            out.insert("word".into(), json!(word));
            out.insert("word_display".into(), json!(if text.is_empty() { "e".into() } else { text.join(" ") }));
            out.insert("length_zero_part".into(), json!(tau.display(&rs)));
        }
        "inv" => {
            arity(&q, &[1])?;
            let w = element(&q.args[0])?;
            out.insert("inverse".into(), json!(w.inverse().display(&rs)));
        }
        "cocovers" => {
            arity(&q, &[1])?;
            let w = element(&q.args[0])?;
            let cov: Vec<String> = aw.cocovers(&w).iter().map(|c| c.display(&rs)).collect();
            out.insert("element".into(), json!(w.display(&rs)));
            out.insert("count".into(), json!(cov.len()));
            out.insert("cocovers".into(), json!(cov));
            let d = adm::decompose(&rs, &w);
            let cases = match predicted_cocovers(&rs, &d.u, &d.lambda, &d.v) {
                Ok(recs) => Value::Array(
                    recs.iter()
                        .map(|r| json!({"element": r.result.display(&rs), "root": r.root.to_string(), "m": r.m, "cases": r.cases}))
                        .collect(),
                ),
                Err(refusal) => to_json(&refusal),
            };
            out.insert("classification".into(), cases);
        }
        "star" | "rtri" | "ltri" => {
            arity(&q, &[2])?;
            let x = element(&q.args[0])?;
            let y = element(&q.args[1])?;
            let r = match q.command.as_str() {
                "star" => aw.demazure_star(&x, &y),
                "rtri" => aw.demazure_rtri(&x, &y),
                _ => aw.demazure_ltri(&x, &y),
            };
            out.insert("result".into(), json!(r.display(&rs)));
            out.insert("length".into(), json!(aw.length(&r)));
        }
        "eta" => {
            arity(&q, &[1])?;
            let w = element(&q.args[0])?;
            let d = adm::decompose(&rs, &w);
            out.insert("u".into(), json!(disp(&rs, &d.u)));
            out.insert("lambda".into(), json!(d.lambda));
            out.insert("v".into(), json!(disp(&rs, &d.v)));
            out.insert("eta".into(), json!(disp(&rs, &adm::eta(&rs, &w))));
        }
        "cascade" => {
            arity(&q, &[1])?;
            let x = finite(&q.args[0])?;
            let c = cascade::cascade_r(&rs, &x)?;
            let g = graph()?;
            let wt = g.wt1_all().weight(g.index_of(&x));
            let levels: Vec<Vec<String>> = c.levels.iter().map(|l| l.iter().map(|b| b.to_string()).collect()).collect();
            out.insert("levels".into(), json!(levels));
            out.insert("r".into(), to_json(&c.r));
            out.insert("r_display".into(), json!(c.r.to_string()));
            out.insert("wt".into(), to_json(&wt));
            out.insert("match".into(), json!(wt == c.r));
        }
        "dp" | "lred" | "ldown" => {
            arity(&q, &[1])?;
            let x = finite(&q.args[0])?;
            let g = graph()?;
            let k = g.index_of(&x) as usize;
            let v = match q.command.as_str() {
                "dp" => cascade::dp_all(&g)[k],
                "lred" => cascade::ell_red_all(&g)[k],
                _ => g.ell_down_all()[k],
            };
            out.insert(q.command.clone(), json!(v));
        }
        "lR" => {
            arity(&q, &[1])?;
            let x = finite(&q.args[0])?;
            out.insert("lR".into(), json!(x.reflection_length()));
        }
        "adm" => {
            arity(&q, &[1, 2])?;
            let mu = integral(&q.args[0])?;
            let set = adm::adm_set(&rs, &mu, cfg.budget())?;
            out.insert("mu".into(), json!(mu));
            out.insert("size".into(), json!(set.len()));
            if q.args.len() == 1 {
                let mut members: Vec<(usize, String)> = set.members.iter().map(|w| (aw.length(w), w.display(&rs))).collect();
                members.sort();
                out.insert("members".into(), json!(members.into_iter().map(|m| m.1).collect::<Vec<_>>()));
            } else {
                let w = element(&q.args[1])?;
                out.insert("element".into(), json!(w.display(&rs)));
                out.insert("member".into(), json!(set.contains(&w)));
                let d = adm::decompose(&rs, &w);
                let g = graph()?;
                let ch = match adm::adm_membership_char(&g, &d.u, &d.lambda, &d.v, &mu) {
                    Ok(b) => json!(b),
                    Err(refusal) => to_json(&refusal),
                };
                out.insert("characterization".into(), ch);
            }
        }
        "dadm" | "dim" => {
            arity(&q, &[3])?;
            let mu = integral(&q.args[0])?;
            let b = BInvariants::new(coweight(&q.args[1])?, int(&q.args[2])?);
            out.insert("mu".into(), json!(mu));
            out.insert("nu".into(), to_json(&b.nu));
            out.insert("defect".into(), json!(b.defect));
            if q.command == "dim" {
                let v = adm::dim_x_formula(&rs, &mu, &b);
                out.insert("formula".into(), v.map_or_else(|r| to_json(&r), rational));
            } else {
                let g = graph()?;
                let formula = adm::d_adm(&g, &mu, &b);
                out.insert("formula".into(), formula.clone().map_or_else(|r| to_json(&r), rational));
                match adm::d_adm_brute(&rs, &mu, &b, cfg.budget()) {
                    Ok(v) => {
                        out.insert("brute".into(), rational(v));
                        out.insert("match".into(), formula.map_or(Value::Null, |f| json!(f == v)));
                    }
                    Err(Error::BudgetExceeded { .. }) if formula.is_ok() => {
                        out.insert("brute".into(), Value::Null);
                        out.insert("note".into(), json!("enumeration skipped: interval budget exceeded"));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        other => {
            return Err(CliError::parse(
                other,
                q.command_pos,
                format!("unknown command; expected one of {}", COMMANDS.join(", ")),
            ))
        }
    }
    Ok(Document::from_json("Query", Value::Object(out)))
}

fn nu(cfg: &RunConfig, g: &QBGraph, w: &AffineElt, out: &mut Map<String, Value>) -> CliResult<()> {
    let rs = g.rs;
    let d = adm::decompose(rs, w);
    let formula = max_newton_formula_general(g, &d.u, &d.lambda, &d.v);
    let oracle = NewtonOracle::new(rs, g.table());
    let brute = match oracle.max_newton_brute(w, cfg.budget()) {
        Ok(b) => Some(b),
        Err(Error::BudgetExceeded { .. }) if formula.is_ok() => None,
        Err(e) => return Err(e.into()),
    };
    out.insert("element".into(), json!(w.display(rs)));
    let method = match (&formula, &brute) {
        (Ok(_), Some(_)) => "formula+brute",
        (Ok(_), None) => "formula",
        _ => "brute",
    };
    let nu = match (&formula, &brute) {
        (_, Some(b)) => b.clone(),
        (Ok(f), None) => f.clone(),
        (Err(_), None) => unreachable!("brute force ran when the formula refused"),
    };
    out.insert("nu".into(), to_json(&nu.0));
    out.insert("method".into(), json!(method));
    out.insert(
        "match".into(),
        match (&formula, &brute) {
            (Ok(f), Some(b)) => json!(f == b),
            _ => Value::Null,
        },
    );
    if let Err(refusal) = &formula {
        out.insert("formula".into(), to_json(refusal));
    }
    if brute.is_none() {
        out.insert("note".into(), json!("enumeration skipped: interval budget exceeded"));
    }
    Ok(())
}
