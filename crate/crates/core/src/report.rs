//! JSON reports and CSV data for the `loja` command line.
//!
//! Every command produces a [`Report`]: one JSON object with the command
//! name, an echo of its inputs, a command-specific payload and the crate
//! version. Exact rationals are written as `"p/q"` strings and big integers as
//! decimal strings; floats are JSON numbers.
//!
//! Findings are not errors: a curve along which no member is eventually
//! positive, or a cube on which `Φ <= 0`, is reported in `outputs` with
//! `"finding"` set.

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{critical_count_closed, critical_count_series, BoundReport};
use crate::error::{Error, Result};
use crate::estimator::{estimate_exponent, EstimateReport};
use crate::scalar::{parse_rational, rational_string};
use crate::systems::{default_ell, mixed_degree_counterexample, pemantle_lift, semialg_psi, worst_case, SemiAlgSpec};
use crate::text::{parse_poly, parse_system_file, print_system};
use crate::witness::{system_curve_order, ComponentOrder, WitnessReport};
use crate::{MonomialCurve, OptConfig, RadiusSchedule, Rational, Regime, System};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub version: String,
}

impl Report {
    pub fn new(command: &str, inputs: Value, outputs: Value) -> Self {
        Report { command: command.to_string(), inputs, outputs, version: VERSION.to_string() }
    }

    /// Report for a failed command; `outputs.error` carries the kind, the
    /// message and, for parse errors, the byte position.
    pub fn error(command: &str, inputs: Value, err: &Error) -> Self {
        let mut e = json!({ "kind": err.kind(), "message": err.to_string() });
        if let Some(pos) = err.position() {
            e["position"] = json!(pos);
        }
        if let Error::SyntaxError { expected, .. } = err {
            e["expected"] = json!(expected);
        }
        Report::new(command, inputs, json!({ "error": e }))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Comma-separated integers; the empty string is the empty list.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidConfig(format!("not an integer: {:?}", t.trim())))
        })
        .collect()
}

/// Comma-separated rationals `p` or `p/q`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| parse_rational(t).ok_or_else(|| Error::InvalidConfig(format!("not a rational: {:?}", t.trim()))))
        .collect()
}

pub fn bound(n: u64, d: u64, single: bool) -> Result<Report> {
    let r = BoundReport::new(n, d)?;
    let mut out = serde_json::to_value(&r).expect("serializes");
    out["single"] = json!(single);
    if single {
        out["applicable_bound"] = out["gwoz_bound"].clone();
    }
    Ok(Report::new("bound", json!({ "n": n, "d": d, "single": single }), out))
}

pub fn count(n: u64, degrees: &[u64], c: u64, closed: Option<(u64, u64)>) -> Result<Report> {
    let series = critical_count_series(n, degrees, c)?;
    let mut inputs = json!({ "n": n, "degrees": degrees, "c": c });
    let mut out = json!({ "series": series.to_string() });
    if let Some((k, d)) = closed {
        let value = critical_count_closed(n, k, d)?;
        inputs["closed"] = json!({ "k": k, "d": d });
        out["closed"] = json!(value.to_string());
        out["equal"] = json!(value == series);
    }
    Ok(Report::new("count", inputs, out))
}

fn witness_json(r: &WitnessReport<Rational>) -> Value {
    let components: Vec<Value> = r
        .components
        .iter()
        .map(|c| match c {
            ComponentOrder::IdenticallyZero => json!({ "identically_zero": true, "order": null, "leading": null }),
            ComponentOrder::Order { order, leading } => {
                json!({ "identically_zero": false, "order": order, "leading": rational_string(leading) })
            }
        })
        .collect();
    json!({
        "regime": r.regime,
        "phi_order": r.phi_order,
        "norm_order": r.norm_order,
        "exponent_bound": rational_string(&r.exponent_bound),
        "dominating_index": r.dominating_index,
        "components": components,
    })
}

pub struct WitnessArgs<'a> {
    pub system_text: &'a str,
    pub curve_a: &'a str,
    pub curve_s: &'a str,
    pub regime: Regime,
    pub abs: bool,
}

pub fn witness(args: &WitnessArgs<'_>, inputs: Value) -> Result<Report> {
    let mut sys = parse_system_file(args.system_text)?;
    if args.abs {
        sys = sys.absolute();
    }
    let a = parse_int_list(args.curve_a)?;
    let s = parse_rational_list(args.curve_s)?;
    let curve = MonomialCurve::new(a, s, args.regime)?;
    let out = match system_curve_order(&sys, &curve) {
        Ok(r) => witness_json(&r),
        Err(Error::NotEventuallyPositive) => json!({
            "finding": "NotEventuallyPositive",
            "message": "no member of the system is eventually positive along the curve; the positivity hypothesis fails on it",
        }),
        Err(e) => return Err(e),
    };
    Ok(Report::new("witness", inputs, out))
}

pub struct EstimateArgs<'a> {
    pub system_text: &'a str,
    pub schedule: RadiusSchedule,
    pub config: OptConfig,
    pub abs: bool,
}

/// Returns the report and, when the estimate succeeded, its records.
pub fn estimate(args: &EstimateArgs<'_>, inputs: Value) -> Result<(Report, Option<EstimateReport<f64>>)> {
    let mut sys = parse_system_file(args.system_text)?;
    if args.abs {
        sys = sys.absolute();
    }
    match estimate_exponent(&sys, &args.schedule, &args.config) {
        Ok(r) => {
            let out = serde_json::to_value(&r).expect("serializes");
            Ok((Report::new("estimate", inputs, out), Some(r)))
        }
        Err(Error::HypothesisViolated { radius, value, argmin }) => {
            let out = json!({
                "finding": "HypothesisViolated",
                "radius": radius,
                "min_value": value,
                "argmin": argmin,
                "message": "the max-system is not positive on this cube",
            });
            Ok((Report::new("estimate", inputs, out), None))
        }
        Err(e) => Err(e),
    }
}

/// CSV rows `radius,min_value,face_variable,face_sign,x1,…,xn`.
pub fn records_csv(report: &EstimateReport<f64>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let n = report.nvars;
    let mut header = vec!["radius".to_string(), "min_value".into(), "face_variable".into(), "face_sign".into()];
    header.extend((1..=n).map(|i| format!("x{i}")));
    let io = |e: csv::Error| Error::InvalidConfig(format!("csv: {e}"));
    w.write_record(&header).map_err(io)?;
    for rec in &report.records {
        let mut row = vec![
            format!("{:e}", rec.radius),
            format!("{:e}", rec.min_value),
            (rec.face.axis + 1).to_string(),
            rec.face.sign.to_string(),
        ];
        row.extend(rec.argmin.iter().map(|v| format!("{v:e}")));
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidConfig(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

pub fn generate_worst_case(n: u32, d: u32, sos: bool, abs: bool) -> Result<String> {
    let sys: System = worst_case(n, d)?;
    let sys = if sos {
        System::new(vec![sys.sum_of_squares()])?
    } else if abs {
        sys.absolute()
    } else {
        sys
    };
    Ok(print_system(&sys))
}

/// `base_text` must hold exactly one polynomial; `ell` defaults to the last
/// base variable.
pub fn generate_pemantle(base_text: &str, d: u32, ell: Option<&str>) -> Result<String> {
    let base = parse_system_file(base_text)?;
    let [f] = base.polys() else {
        return Err(Error::DomainError(format!("base file must hold one polynomial, found {}", base.len())));
    };
    let ell = match ell {
        Some(text) => parse_poly(text, Some(f.nvars()))?,
        None => default_ell(f.nvars()),
    };
    let lift = pemantle_lift(f, d, &ell)?;
    Ok(print_system(&System::new(vec![lift])?))
}

pub fn generate_mixed(n: u32, d: u32) -> Result<String> {
    Ok(print_system(&mixed_degree_counterexample(n, d)?))
}

fn optional_members(text: Option<&str>) -> Result<Vec<crate::Poly>> {
    match text {
        None => Ok(Vec::new()),
        Some(t) => match parse_system_file(t) {
            Ok(s) => Ok(s.polys().to_vec()),
            Err(Error::EmptySystem) => Ok(Vec::new()),
            Err(e) => Err(e),
        },
    }
}

pub fn generate_semialg(f_text: &str, g_text: Option<&str>, h_text: Option<&str>) -> Result<String> {
    let f = parse_system_file(f_text)?.polys().to_vec();
    let spec = SemiAlgSpec::new(f, optional_members(g_text)?, optional_members(h_text)?)?;
    Ok(print_system(&semialg_psi(&spec)))
}
