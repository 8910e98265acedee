//! Command-line front end and the JSON document formats.
//!
//! Input documents:
//!
//! ```text
//! tuple: {"type":"A","rank":3,"polys":{"1":["2","1-2i"],"3":["0"]}}
//! chain: {"type":"B","rank":3,"factors":[{"node":1,"a":"3/2"}]}
//! sl2:   [{"m":1,"a":"1"},{"m":2,"a":"0"}]
//! ```
//!
//! Roots are scalar strings; a missing node means its polynomial is 1. Every
//! schema violation names the offending location as a JSON pointer.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigUint, ToPrimitive};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::criteria::{all_s_sets, cyclicity_guaranteed, irreducibility_guaranteed, s_set, s_set_oracle, Verdict};
use crate::dims::{chain_dim, g_fundamental_dim, DecompositionTable, Provenance};
use crate::drinfeld::{eigenvalue_series, order_factors, DrinfeldTuple, Factor, FactorChain};
use crate::exact::{parse_scalar, Scalar};
use crate::rootsys::{cartan_matrix, kappa, longest_word, node_involution, symmetrizers, Family, LieType};
use crate::ysl2::{
    highest_eigenvalues, is_highest_weight, is_irreducible, relation_suite, spec_roots, tensor_module, w1w1_battery,
    w2_battery, Check, FactorSpec, Sl2Error,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid argument: {0}")]
    Argument(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema { .. } => 2,
            CliError::Io { .. } | CliError::Argument(_) => 1,
        }
    }
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> CliError {
    let pointer = pointer.into();
    CliError::Schema { pointer: if pointer.is_empty() { "/".into() } else { pointer }, message: message.into() }
}

#[derive(Debug, Parser)]
#[command(name = "yangian-weyl", version, about = "Local Weyl modules and tensor-product criteria for Yangians")]
pub struct Cli {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan data, longest word, involution, κ and fundamental dimensions.
    Info {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Ordered factor chain and dimension of the local Weyl module of a Drinfeld tuple.
    Weyl {
        /// Inline JSON or a path to a JSON file.
        input: String,
    },
    /// Cyclicity or irreducibility verdict for a factor chain.
    Check {
        input: String,
        #[arg(long, value_enum, default_value_t = Mode::Cyclic)]
        mode: Mode,
    },
    /// Brute-force checks on a tensor product of Y(sl2) evaluation modules.
    Sl2 {
        input: String,
        #[arg(long, value_enum, default_value_t = Sl2Verify::Closure)]
        verify: Sl2Verify,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Every criterion set S(b_m, b_n) of a type.
    Ssets {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Cyclic,
    Irreducible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sl2Verify {
    Series,
    Closure,
    Identities,
}

/// A finished command: the JSON contract plus a table rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

fn envelope(command: &str, exact: bool, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("version".into(), json!(VERSION));
    out.insert("command".into(), json!(command));
    out.insert("exact".into(), json!(exact));
    if let Value::Object(fields) = body {
        out.extend(fields);
    }
    Value::Object(out)
}

fn big(n: &BigUint) -> Value {
    n.to_u64().map_or_else(|| json!(n.to_string()), |v| json!(v))
}

/// Inline JSON when the argument looks like a document, otherwise a file path.
pub fn read_input(arg: &str) -> Result<Value, CliError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::Io { path: arg.into(), message: e.to_string() })?
    };
    serde_json::from_str(&text).map_err(|e| schema("", format!("invalid JSON: {e}")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, at: &str) -> Result<&'a Value, CliError> {
    obj.get(key).ok_or_else(|| schema(at, format!("missing field \"{key}\"")))
}

fn as_object<'a>(v: &'a Value, at: &str) -> Result<&'a Map<String, Value>, CliError> {
    v.as_object().ok_or_else(|| schema(at, "expected an object"))
}

fn as_array<'a>(v: &'a Value, at: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| schema(at, "expected an array"))
}

fn as_scalar(v: &Value, at: &str) -> Result<Scalar, CliError> {
    let s = v.as_str().ok_or_else(|| schema(at, "expected a scalar string such as \"3/2\" or \"1-2i\""))?;
    parse_scalar(s).map_err(|e| schema(at, e.to_string()))
}

fn as_index(v: &Value, at: &str) -> Result<usize, CliError> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| schema(at, "expected a non-negative integer"))
}

/// Parses a family name and optional rank (G2 needs none).
pub fn lie_type_from(family: &str, rank: Option<usize>) -> Result<LieType, String> {
    let fam: Family = family.parse().map_err(|e: crate::rootsys::RootSysError| e.to_string())?;
    let rank = match (fam, rank) {
        (Family::G2, r) => r.unwrap_or(2),
        (_, Some(r)) => r,
        (_, None) => return Err(format!("type {fam} needs a rank")),
    };
    LieType::new(fam, rank).map_err(|e| e.to_string())
}

fn lie_type_of(obj: &Map<String, Value>) -> Result<LieType, CliError> {
    let fam = field(obj, "type", "")?.as_str().ok_or_else(|| schema("/type", "expected a string"))?;
    let rank = obj.get("rank").map(|r| as_index(r, "/rank")).transpose()?;
    lie_type_from(fam, rank).map_err(|m| {
        let at = if m.contains("rank") { "/rank" } else { "/type" };
        schema(at, m)
    })
}

fn lie_type_json(t: LieType) -> (Value, Value) {
    (json!(t.family().to_string()), json!(t.rank()))
}

pub fn tuple_from_json(v: &Value) -> Result<DrinfeldTuple, CliError> {
    let obj = as_object(v, "")?;
    let t = lie_type_of(obj)?;
    let polys = as_object(field(obj, "polys", "")?, "/polys")?;
    let mut roots = vec![Vec::new(); t.rank()];
    for (key, list) in polys {
        let at = format!("/polys/{key}");
        let node: usize = key.parse().map_err(|_| schema(&at, "node keys must be integers"))?;
        if !(1..=t.rank()).contains(&node) {
            return Err(schema(&at, format!("node {node} out of range 1..={}", t.rank())));
        }
        for (k, r) in as_array(list, &at)?.iter().enumerate() {
            roots[node - 1].push(as_scalar(r, &format!("{at}/{k}"))?);
        }
    }
    DrinfeldTuple::new(t, roots).map_err(|e| schema("/polys", e.to_string()))
}

pub fn tuple_to_json(pi: &DrinfeldTuple) -> Value {
    let t = pi.lie_type();
    let polys: Map<String, Value> = t
        .nodes()
        .filter(|&n| !pi.roots(n).is_empty())
        .map(|n| (n.to_string(), json!(pi.roots(n).iter().map(ToString::to_string).collect::<Vec<_>>())))
        .collect();
    let (ty, rank) = lie_type_json(t);
    json!({"type": ty, "rank": rank, "polys": polys})
}

pub fn chain_from_json(v: &Value) -> Result<FactorChain, CliError> {
    let obj = as_object(v, "")?;
    let t = lie_type_of(obj)?;
    let list = as_array(field(obj, "factors", "")?, "/factors")?;
    let mut factors = Vec::with_capacity(list.len());
    for (k, f) in list.iter().enumerate() {
        let at = format!("/factors/{k}");
        let fo = as_object(f, &at)?;
        let node = as_index(field(fo, "node", &at)?, &format!("{at}/node"))?;
        if !(1..=t.rank()).contains(&node) {
            return Err(schema(format!("{at}/node"), format!("node {node} out of range 1..={}", t.rank())));
        }
        let a = as_scalar(field(fo, "a", &at)?, &format!("{at}/a"))?;
        factors.push(Factor::new(node, a));
    }
    FactorChain::new(t, factors).map_err(|e| schema("/factors", e.to_string()))
}

pub fn chain_to_json(c: &FactorChain) -> Value {
    let (ty, rank) = lie_type_json(c.lie_type);
    let factors: Vec<Value> = c.factors.iter().map(|f| json!({"node": f.node, "a": f.a.to_string()})).collect();
    json!({"type": ty, "rank": rank, "factors": factors})
}

pub fn sl2_spec_from_json(v: &Value) -> Result<Vec<FactorSpec>, CliError> {
    let list = as_array(v, "")?;
    if list.is_empty() {
        return Err(schema("", "at least one factor is required"));
    }
    let mut out = Vec::with_capacity(list.len());
    for (k, f) in list.iter().enumerate() {
        let at = format!("/{k}");
        let fo = as_object(f, &at)?;
        let m = field(fo, "m", &at)?
            .as_i64()
            .filter(|&m| m >= 1)
            .ok_or_else(|| schema(format!("{at}/m"), "expected a positive integer"))?;
        let a = as_scalar(field(fo, "a", &at)?, &format!("{at}/a"))?;
        out.push((m, a));
    }
    Ok(out)
}

pub fn sl2_spec_to_json(spec: &[FactorSpec]) -> Value {
    Value::Array(spec.iter().map(|(m, a)| json!({"m": m, "a": a.to_string()})).collect())
}

fn sl2_fail(e: Sl2Error) -> CliError {
    schema("", e.to_string())
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out += &line(widths.iter().map(|w| "-".repeat(*w)).collect());
    for r in rows {
        out += &line(r.clone());
    }
    out
}

fn list<T: ToString>(xs: &[T]) -> String {
    format!("[{}]", xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

pub fn cmd_info(t: LieType) -> Report {
    let cartan = cartan_matrix(t);
    let d = symmetrizers(t);
    let w0 = longest_word(t);
    let inv = node_involution(t).expect("longest word table is consistent");
    let k = kappa(t);
    let decomposition = DecompositionTable::new(t);
    let dims: Vec<Value> = t
        .nodes()
        .map(|i| {
            let prov = match decomposition.provenance[i - 1] {
                Provenance::Tabulated => "tabulated",
                Provenance::External => "external",
            };
            json!({"node": i, "g": big(&g_fundamental_dim(t, i)), "yangian": big(&decomposition.dim(i)), "provenance": prov})
        })
        .collect();
    let body = json!({
        "type": t.to_string(),
        "cartan": cartan,
        "d": d,
        "longest_word": w0,
        "involution": inv,
        "kappa": k.to_string(),
        "fundamental_dims": dims,
        "warning": t.warning(),
    });

    let mut text = format!("{t}\n");
    if let Some(w) = t.warning() {
        let _ = writeln!(text, "warning: {w}");
    }
    text += "Cartan matrix:\n";
    for row in &cartan {
        let _ = writeln!(text, "  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>());
    }
    let _ = writeln!(text, "d = {}\nw0 = {}\nν = {}\nκ = {k}", list(&d), list(&w0), list(&inv));
    let rows: Vec<Vec<String>> = t
        .nodes()
        .map(|i| {
            let mark = if decomposition.provenance[i - 1] == Provenance::External { " (external)" } else { "" };
            vec![i.to_string(), g_fundamental_dim(t, i).to_string(), format!("{}{mark}", decomposition.dim(i))]
        })
        .collect();
    text += &table(&["node", "dim L(ω)", "dim V(ω)"], &rows);
    Report { json: envelope("info", true, body), text }
}

pub fn cmd_weyl(pi: &DrinfeldTuple) -> Result<Report, CliError> {
    let chain = order_factors(pi).map_err(|e| schema("/polys", e.to_string()))?;
    let t = chain.lie_type;
    let dim = chain_dim(&chain);
    let mut audit = Vec::new();
    let mut rows = Vec::new();
    for i in 0..chain.len() {
        for j in i + 1..chain.len() {
            let (fi, fj) = (&chain.factors[i], &chain.factors[j]);
            let diff = &fj.a - &fi.a;
            let s = s_set(t, fi.node, fj.node);
            let hit = s.contains(&diff);
            audit.push(json!({
                "i": i + 1, "j": j + 1, "nodes": [fi.node, fj.node],
                "difference": diff.to_string(), "s_set": s.to_string(), "in_s": hit,
            }));
            rows.push(vec![
                format!("{}", i + 1),
                format!("{}", j + 1),
                format!("({}, {})", fi.node, fj.node),
                diff.to_string(),
                s.to_string(),
                if hit { "yes" } else { "no" }.into(),
            ]);
        }
    }
    let verdict = cyclicity_guaranteed(&chain);
    let body = json!({
        "type": t.to_string(),
        "chain": chain_to_json(&chain)["factors"].clone(),
        "dimension": big(&dim),
        "audit": audit,
        "cyclic_guaranteed": verdict.guaranteed,
    });
    let chain_text: Vec<String> = chain.factors.iter().map(|f| format!("({}, {})", f.node, f.a)).collect();
    let mut text = format!("{t} chain: {}\ndimension: {dim}\n", chain_text.join(" ⊗ "));
    if !rows.is_empty() {
        text += &table(&["i", "j", "nodes", "a_j - a_i", "S", "in S"], &rows);
    }
    let _ = writeln!(text, "cyclicity guaranteed: {}", verdict.guaranteed);
    Ok(Report { json: envelope("weyl", true, body), text })
}

fn verdict_text(v: &Verdict, mode: Mode) -> String {
    let name = match mode {
        Mode::Cyclic => "cyclic",
        Mode::Irreducible => "irreducible",
    };
    let mut text = format!("{name} guaranteed: {}\nexact criterion: {}\n", v.guaranteed, v.exact);
    if !v.witnesses.is_empty() {
        let rows: Vec<Vec<String>> =
            v.witnesses.iter().map(|w| vec![w.i.to_string(), w.j.to_string(), w.difference.to_string()]).collect();
        text += &table(&["i", "j", "a_j - a_i"], &rows);
    }
    text
}

pub fn cmd_check(chain: &FactorChain, mode: Mode) -> Report {
    let verdict = match mode {
        Mode::Cyclic => cyclicity_guaranteed(chain),
        Mode::Irreducible => irreducibility_guaranteed(chain),
    };
    let body = json!({
        "type": chain.lie_type.to_string(),
        "mode": match mode { Mode::Cyclic => "cyclic", Mode::Irreducible => "irreducible" },
        "guaranteed": verdict.guaranteed,
        "witnesses": verdict.witnesses,
    });
    Report { json: envelope("check", verdict.exact, body), text: verdict_text(&verdict, mode) }
}

fn checks_json(checks: &[Check]) -> Vec<Value> {
    checks.iter().map(|c| json!({"name": c.name, "pass": c.pass})).collect()
}

pub fn cmd_sl2(spec: &[FactorSpec], verify: Sl2Verify, order: usize) -> Result<Report, CliError> {
    let module = tensor_module(spec).map_err(sl2_fail)?;
    let spec_text: Vec<String> = spec.iter().map(|(m, a)| format!("W{m}({a})")).collect();
    let mut text = format!("{} (dimension {})\n", spec_text.join(" ⊗ "), module.dim);
    let body = match verify {
        Sl2Verify::Closure => {
            let closure = module.spin(&module.highest_vector()).map_err(sl2_fail)?;
            let hw = is_highest_weight(spec).map_err(sl2_fail)?;
            let irreducible = match is_irreducible(spec) {
                Ok(b) => json!(b),
                Err(Sl2Error::Unsupported(_)) => Value::Null,
                Err(e) => return Err(sl2_fail(e)),
            };
            let _ = writeln!(
                text,
                "closure of highest vector: {closure}\nhighest weight: {hw}\nirreducible: {}",
                if irreducible.is_null() { "unsupported (non-W1 factor)".to_string() } else { irreducible.to_string() }
            );
            json!({"module_dimension": module.dim, "dimension": closure, "highest_weight": hw, "irreducible": irreducible})
        }
        Sl2Verify::Series => {
            let eigen = highest_eigenvalues(spec, order).map_err(sl2_fail)?;
            let roots = spec_roots(spec);
            let series = eigenvalue_series(&roots, 1, order + 1);
            let expected: Vec<Scalar> = (1..=order + 1).map(|k| series.coeff(k)).collect();
            let matches = eigen.as_ref() == Some(&expected);
            let show = |xs: &[Scalar]| xs.iter().map(ToString::to_string).collect::<Vec<_>>();
            let rows: Vec<Vec<String>> = (0..=order)
                .map(|k| {
                    let got = eigen.as_ref().map_or("-".into(), |e| e[k].to_string());
                    vec![format!("h{k}"), got, expected[k].to_string()]
                })
                .collect();
            let _ = writeln!(text, "Drinfeld roots: {}", list(&roots));
            text += &table(&["generator", "eigenvalue", "series"], &rows);
            let _ = writeln!(text, "matches: {matches}");
            json!({
                "order": order,
                "roots": show(&roots),
                "eigenvalues": eigen.as_deref().map(show),
                "expected": show(&expected),
                "matches": matches,
            })
        }
        Sl2Verify::Identities => {
            let mut checks = relation_suite(&module, order.max(1));
            match spec {
                [(2, a)] => checks.extend(w2_battery(a).map_err(sl2_fail)?),
                [(1, b), (1, a)] => checks.extend(w1w1_battery(a, b).map_err(sl2_fail)?),
                _ => {}
            }
            let all = checks.iter().all(|c| c.pass);
            let rows: Vec<Vec<String>> =
                checks.iter().map(|c| vec![c.name.clone(), if c.pass { "ok" } else { "FAIL" }.into()]).collect();
            text += &table(&["identity", "result"], &rows);
            json!({"checks": checks_json(&checks), "all_pass": all})
        }
    };
    let mut body = body;
    body["spec"] = sl2_spec_to_json(spec);
    Ok(Report { json: envelope("sl2", true, body), text })
}

pub fn cmd_ssets(t: LieType) -> Report {
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for s in all_s_sets(t) {
        let oracle = s_set_oracle(t, s.b_m, s.b_n).is_ok();
        let values: Vec<String> = s.values.iter().map(ToString::to_string).collect();
        entries.push(json!({"b_m": s.b_m, "b_n": s.b_n, "values": values, "oracle_agrees": oracle}));
        rows.push(vec![s.b_m.to_string(), s.b_n.to_string(), s.to_string(), oracle.to_string()]);
    }
    let text = format!("{t}\n") + &table(&["b_m", "b_n", "S(b_m, b_n)", "oracle"], &rows);
    Report { json: envelope("ssets", true, json!({"type": t.to_string(), "sets": entries})), text }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Info { family, rank } => Ok(cmd_info(lie_type_from(family, *rank).map_err(CliError::Argument)?)),
        Command::Ssets { family, rank } => Ok(cmd_ssets(lie_type_from(family, *rank).map_err(CliError::Argument)?)),
        Command::Weyl { input } => cmd_weyl(&tuple_from_json(&read_input(input)?)?),
        Command::Check { input, mode } => Ok(cmd_check(&chain_from_json(&read_input(input)?)?, *mode)),
        Command::Sl2 { input, verify, order } => cmd_sl2(&sl2_spec_from_json(&read_input(input)?)?, *verify, *order),
    }
}

/// Error document for `--json` mode.
pub fn error_json(e: &CliError) -> Value {
    let mut body = BTreeMap::new();
    body.insert("error", json!(e.to_string()));
    if let CliError::Schema { pointer, .. } = e {
        body.insert("pointer", json!(pointer));
    }
    envelope("error", true, json!(body))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn doc(s: &str) -> Value {
        read_input(s).unwrap()
    }

    #[test]
    fn schema_pointers() {
        let bad = [
            (r#"{"type":"A","rank":2,"polys":{"3":["0"]}}"#, "/polys/3"),
            (r#"{"type":"A","rank":2,"polys":{"1":["0", "x"]}}"#, "/polys/1/1"),
            (r#"{"type":"Q","rank":2,"polys":{}}"#, "/type"),
            (r#"{"type":"B","rank":1,"polys":{}}"#, "/rank"),
            (r#"{"type":"A","rank":2}"#, "/"),
            (r#"{"type":"A","rank":2,"polys":{"1":"0"}}"#, "/polys/1"),
        ];
        for (text, pointer) in bad {
            match tuple_from_json(&doc(text)) {
                Err(CliError::Schema { pointer: p, .. }) => assert_eq!(p, pointer, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        let chain = r#"{"type":"C","rank":3,"factors":[{"node":1,"a":"0"},{"node":2,"a":1}]}"#;
        assert!(matches!(chain_from_json(&doc(chain)), Err(CliError::Schema { pointer, .. }) if pointer == "/factors/1/a"));
        assert!(matches!(sl2_spec_from_json(&doc(r#"[{"m":0,"a":"1"}]"#)), Err(CliError::Schema { pointer, .. }) if pointer == "/0/m"));
        assert!(matches!(read_input("{oops"), Err(CliError::Schema { .. })));
        assert!(matches!(read_input("/nonexistent/file.json"), Err(CliError::Io { .. })));
    }

    #[test]
    fn info_examples() {
        let g2 = cmd_info(LieType::g2());
        assert_eq!(g2.json["kappa"], "2");
        assert_eq!(g2.json["fundamental_dims"][0]["g"], 14);
        assert_eq!(g2.json["fundamental_dims"][1]["g"], 7);
        assert_eq!(g2.json["fundamental_dims"][0]["provenance"], "external");
        assert!(g2.text.contains("(external)"));
        let a1 = cmd_info(lie_type_from("A", Some(1)).unwrap());
        assert_eq!(a1.json["longest_word"], json!([1]));
        let d4 = cmd_info(lie_type_from("D", Some(4)).unwrap());
        assert_eq!(d4.json["involution"], json!([1, 2, 3, 4]));
        assert_eq!(d4.json["version"], VERSION);
        assert!(lie_type_from("B", None).is_err());
    }

    #[test]
    fn weyl_examples() {
        let r = cmd_weyl(&tuple_from_json(&doc(r#"{"type":"A","rank":2,"polys":{"1":["2"],"2":["0"]}}"#)).unwrap())
            .unwrap();
        assert_eq!(r.json["chain"], json!([{"node":1,"a":"2"},{"node":2,"a":"0"}]));
        assert_eq!(r.json["dimension"], 9);
        assert_eq!(r.json["audit"].as_array().unwrap().len(), 1);
        let b = cmd_weyl(&tuple_from_json(&doc(r#"{"type":"B","rank":3,"polys":{"2":["0"]}}"#)).unwrap()).unwrap();
        assert_eq!(b.json["dimension"], 22);
        assert_eq!(b.json["chain"].as_array().unwrap().len(), 1);
        let trivial = tuple_from_json(&doc(r#"{"type":"A","rank":2,"polys":{}}"#)).unwrap();
        assert!(matches!(cmd_weyl(&trivial), Err(CliError::Schema { .. })));
    }

    #[test]
    fn check_examples() {
        let c = chain_from_json(&doc(r#"{"type":"A","rank":3,"factors":[{"node":1,"a":"0"},{"node":2,"a":"3/2"}]}"#))
            .unwrap();
        let r = cmd_check(&c, Mode::Cyclic);
        assert_eq!(r.json["guaranteed"], false);
        assert_eq!(r.json["witnesses"], json!([{"i":1,"j":2,"difference":"3/2"}]));
        let c = chain_from_json(&doc(r#"{"type":"B","rank":3,"factors":[{"node":1,"a":"0"},{"node":3,"a":"1+1i"}]}"#))
            .unwrap();
        assert_eq!(cmd_check(&c, Mode::Cyclic).json["guaranteed"], true);
        let g = chain_from_json(&doc(r#"{"type":"G2","factors":[{"node":2,"a":"0"},{"node":2,"a":"1"}]}"#)).unwrap();
        let r = cmd_check(&g, Mode::Irreducible);
        assert_eq!(r.json["guaranteed"], false);
        assert_eq!(r.json["exact"], false);
    }

    #[test]
    fn sl2_examples() {
        let run = |s: &str, v| cmd_sl2(&sl2_spec_from_json(&doc(s)).unwrap(), v, 3).unwrap().json;
        let hw = run(r#"[{"m":1,"a":"1"},{"m":1,"a":"0"}]"#, Sl2Verify::Closure);
        assert_eq!((hw["dimension"].clone(), hw["highest_weight"].clone()), (json!(4), json!(true)));
        let not = run(r#"[{"m":1,"a":"0"},{"m":1,"a":"1"}]"#, Sl2Verify::Closure);
        assert_eq!((not["dimension"].clone(), not["highest_weight"].clone()), (json!(3), json!(false)));
        let w2 = run(r#"[{"m":2,"a":"0"}]"#, Sl2Verify::Series);
        assert_eq!(w2["matches"], true);
        assert_eq!(w2["roots"], json!(["0", "1"]));
        let series = eigenvalue_series(&[Scalar::from_int(0), Scalar::from_int(1)], 1, 4);
        let expected: Vec<String> = (1..=4).map(|k| series.coeff(k).to_string()).collect();
        assert_eq!(w2["eigenvalues"], json!(expected));
        assert_eq!(run(r#"[{"m":2,"a":"0"}]"#, Sl2Verify::Closure)["irreducible"], Value::Null);
        let ids = run(r#"[{"m":1,"a":"2"},{"m":1,"a":"0"}]"#, Sl2Verify::Identities);
        assert_eq!(ids["all_pass"], true);
    }

    #[test]
    fn ssets_report() {
        let r = cmd_ssets(LieType::g2());
        let sets = r.json["sets"].as_array().unwrap();
        assert_eq!(sets.len(), 4);
        assert!(sets.iter().all(|s| s["oracle_agrees"] == true));
        assert_eq!(sets[3]["values"], json!(["1", "3", "4", "6"]));
    }

    fn scalar_strategy() -> impl Strategy<Value = Scalar> {
        (-20i64..=20, 1i64..=6, -3i64..=3, 1i64..=4)
            .prop_map(|(n, d, m, e)| Scalar::new(rat(n, d), if m == 0 { rat(0, 1) } else { rat(m, e) }))
    }

    fn type_strategy() -> impl Strategy<Value = LieType> {
        (0usize..5, 1usize..=7).prop_map(|(f, l)| match f {
            0 => LieType::new(Family::A, l).unwrap(),
            1 => LieType::new(Family::B, l.max(2)).unwrap(),
            2 => LieType::new(Family::C, l.max(2)).unwrap(),
            3 => LieType::new(Family::D, l.max(3)).unwrap(),
            _ => LieType::g2(),
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn tuple_round_trip(t in type_strategy(), raw in proptest::collection::vec((0usize..8, scalar_strategy()), 0..6)) {
            let mut roots = vec![Vec::new(); t.rank()];
            for (n, a) in raw {
                roots[n % t.rank()].push(a);
            }
            let pi = DrinfeldTuple::new(t, roots).unwrap();
            let text = tuple_to_json(&pi).to_string();
            let back = tuple_from_json(&read_input(&text).unwrap()).unwrap();
            prop_assert_eq!(&back, &pi);
            prop_assert_eq!(tuple_to_json(&back).to_string(), text);
        }

        #[test]
        fn chain_round_trip(t in type_strategy(), raw in proptest::collection::vec((0usize..8, scalar_strategy()), 0..6)) {
            let factors = raw.into_iter().map(|(n, a)| Factor::new(n % t.rank() + 1, a)).collect();
            let c = FactorChain::new(t, factors).unwrap();
            let text = chain_to_json(&c).to_string();
            let back = chain_from_json(&read_input(&text).unwrap()).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(chain_to_json(&back).to_string(), text);
        }

        #[test]
        fn sl2_round_trip(raw in proptest::collection::vec((1i64..=4, scalar_strategy()), 1..5)) {
            let text = sl2_spec_to_json(&raw).to_string();
            let back = sl2_spec_from_json(&read_input(&text).unwrap()).unwrap();
            prop_assert_eq!(&back, &raw);
            prop_assert_eq!(sl2_spec_to_json(&back).to_string(), text);
        }
    }
}
