//! Report rendering: JSON lines, CSV and a human-readable table.

use std::io::Write;

use anyhow::Result;
use locweight_core::turan::{Finding, SearchOutcome, TuranQuery, TuranResult};
use locweight_core::verify::{Params, Value, VerificationReport};
use locweight_core::ExactRational;
use serde_json::{json, Map, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

fn integer(text: String) -> Json {
    match text.parse::<i64>() {
        Ok(k) => json!(k),
        Err(_) => json!(text),
    }
}

pub fn rational_json(q: &ExactRational) -> Json {
    let (num, den) = q.to_parts();
    json!({ "num": integer(num), "den": integer(den) })
}

pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Exact(q) => rational_json(q),
        Value::Surd(s) => json!({ "real": s.to_f64(), "exact": s.to_string() }),
        Value::Real(r) => json!({ "real": r.value, "tolerance": r.tolerance }),
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Exact(q) => q.to_string(),
        Value::Surd(s) => s.to_string(),
        Value::Real(r) => format!("{:.12}", r.value),
    }
}

fn human_value(v: &Value) -> String {
    match v {
        Value::Exact(q) if q.is_integer() => q.to_string(),
        _ => format!("{} ({:.6})", value_text(v), v.to_f64()),
    }
}

pub fn params_json(p: &Params) -> Json {
    let mut m = Map::new();
    let mut put = |k: &str, v: Option<usize>| {
        if let Some(v) = v {
            m.insert(k.into(), json!(v));
        }
    };
    put("t", p.t);
    put("u", p.u);
    put("r", p.r);
    put("q", p.q);
    put("i", p.i);
    if let Some(h) = &p.pattern {
        m.insert("pattern".into(), json!(h.name()));
    }
    if let Some(x) = &p.x_cap {
        m.insert("x".into(), rational_json(x));
    }
    Json::Object(m)
}

fn params_text(p: &Params) -> String {
    let mut parts = Vec::new();
    for (k, v) in [("t", p.t), ("u", p.u), ("r", p.r), ("q", p.q), ("i", p.i)] {
        if let Some(v) = v {
            parts.push(format!("{k}={v}"));
        }
    }
    if let Some(h) = &p.pattern {
        parts.push(format!("pattern={}", h.name()));
    }
    if let Some(x) = &p.x_cap {
        parts.push(format!("x={x}"));
    }
    parts.join(";")
}

pub fn report_json(r: &VerificationReport) -> Json {
    json!({
        "graph6": r.graph6,
        "theorem": r.theorem.name(),
        "params": params_json(&r.params),
        "sum": value_json(&r.sum),
        "bound": value_json(&r.bound),
        "equality": r.equality,
        "characterization": r.characterization,
        "agreement": r.agreement,
        "status": r.status.name(),
    })
}

const CSV_COLUMNS: [&str; 9] =
    ["graph6", "theorem", "params", "sum", "bound", "equality", "characterization", "agreement", "status"];

fn opt_bool(b: Option<bool>) -> String {
    b.map_or_else(String::new, |b| b.to_string())
}

pub fn write_reports(out: &mut dyn Write, reports: &[VerificationReport], format: Format) -> Result<()> {
    match format {
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", report_json(r))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_COLUMNS)?;
            for r in reports {
                w.write_record([
                    r.graph6.clone(),
                    r.theorem.name().to_string(),
                    params_text(&r.params),
                    value_text(&r.sum),
                    value_text(&r.bound),
                    r.equality.to_string(),
                    opt_bool(r.characterization),
                    r.agreement.to_string(),
                    r.status.name().to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Human => {
            for r in reports {
                let ch = match r.characterization {
                    Some(true) => "holds",
                    Some(false) => "fails",
                    None => "n/a",
                };
                writeln!(
                    out,
                    "{:<14} {} [{}] sum {} bound {} equality {} characterization {} {}",
                    r.graph6,
                    r.theorem,
                    params_text(&r.params),
                    human_value(&r.sum),
                    human_value(&r.bound),
                    if r.equality { "yes" } else { "no" },
                    ch,
                    r.status.name(),
                )?;
            }
        }
    }
    Ok(())
}

pub fn turan_json(q: &TuranQuery, r: &TuranResult, runtime_ms: Option<u128>) -> Json {
    let mut obj = json!({
        "query": q.to_string(),
        "value": r.value,
        "extremal": r.extremal_graph6,
        "checked_classes": r.checked_classes,
    });
    if let Some(ms) = runtime_ms {
        obj["runtime_ms"] = json!(ms);
    }
    obj
}

pub fn write_turan(out: &mut dyn Write, q: &TuranQuery, r: &TuranResult, format: Format, runtime_ms: Option<u128>) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&turan_json(q, r, runtime_ms))?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["query", "value", "extremal", "checked_classes"])?;
            w.write_record([q.to_string(), r.value.to_string(), r.extremal_graph6.join(" "), r.checked_classes.to_string()])?;
            w.flush()?;
        }
        Format::Human => {
            writeln!(out, "{q} = {} over {} classes", r.value, r.checked_classes)?;
            for g in &r.extremal_graph6 {
                writeln!(out, "  extremal {g}")?;
            }
            if let Some(ms) = runtime_ms {
                writeln!(out, "  {ms} ms")?;
            }
        }
    }
    Ok(())
}

pub fn finding_json(f: &Finding) -> Json {
    let mut obj = json!({
        "key": f.key,
        "t": f.t,
        "sum": value_json(&f.sum),
        "bound": value_json(&f.bound),
        "characterization": f.characterization,
    });
    if let Some(i) = f.i {
        obj["i"] = json!(i);
    }
    if f.undefined > 0 {
        obj["undefined_weights"] = json!(f.undefined);
    }
    obj
}

pub fn search_json(conjecture: &str, o: &SearchOutcome) -> Json {
    let list = |fs: &[Finding]| fs.iter().map(finding_json).collect::<Vec<_>>();
    json!({
        "conjecture": conjecture,
        "checked": o.checked,
        "violations": list(&o.violations),
        "tight": list(&o.tight),
        "tight_without_characterization": o.tight_without_characterization().len(),
        "characterization_not_tight": list(&o.characterization_not_tight),
        "notes": o.notes,
    })
}

pub fn write_search(out: &mut dyn Write, conjecture: &str, o: &SearchOutcome, format: Format) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&search_json(conjecture, o))?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["kind", "key", "t", "i", "sum", "bound", "characterization"])?;
            let groups = [
                ("violation", &o.violations),
                ("tight", &o.tight),
                ("characterization-not-tight", &o.characterization_not_tight),
            ];
            for (kind, list) in groups {
                for f in list.iter() {
                    w.write_record([
                        kind.to_string(),
                        f.key.clone(),
                        f.t.to_string(),
                        f.i.map_or_else(String::new, |i| i.to_string()),
                        value_text(&f.sum),
                        value_text(&f.bound),
                        opt_bool(f.characterization),
                    ])?;
                }
            }
            w.flush()?;
        }
        Format::Human => {
            writeln!(
                out,
                "{conjecture}: {} checked, {} violations, {} tight ({} outside the conjectured equality case), {} equality cases not tight",
                o.checked,
                o.violations.len(),
                o.tight.len(),
                o.tight_without_characterization().len(),
                o.characterization_not_tight.len(),
            )?;
            for f in &o.violations {
                writeln!(out, "  VIOLATION {} t={} sum {} bound {}", f.key, f.t, human_value(&f.sum), human_value(&f.bound))?;
            }
            for f in o.tight_without_characterization() {
                writeln!(out, "  tight, characterization fails: {} t={}", f.key, f.t)?;
            }
            for n in &o.notes {
                writeln!(out, "  note: {n}")?;
            }
        }
    }
    Ok(())
}
