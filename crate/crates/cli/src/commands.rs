use std::fmt::Write as _;

use pfun_core::lab::{
    run_claim, solve_r_p, solve_s_p, Claim, ConvexityReport, GridSpec, Verdict, CLAIMS,
    DEFAULT_MARGIN_TOL,
};
use pfun_core::{
    b_p, c_p, forward_eval, pi_p, FunctionKind, Interval, InverseKind, PParam, RootResult, X_MAX,
};
use serde::Serialize;
use serde_json::json;

use crate::args::{Domain, Format};
use crate::number::g15;
use crate::{Output, EXIT_INCONCLUSIVE, EXIT_VIOLATED};

type CmdResult = Result<Output, String>;

fn ok(text: String) -> CmdResult {
    Ok(Output { text, status: 0 })
}

fn param(p: f64) -> Result<PParam, String> {
    PParam::new(p).map_err(|e| e.to_string())
}

fn json_text<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| e.to_string())
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| e.to_string())?;
    for row in rows {
        w.write_record(row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

/// Any of the eleven evaluable functions.
#[derive(Debug, Clone, Copy)]
enum Func {
    Forward(FunctionKind),
    Inverse(InverseKind),
}

impl Func {
    fn parse(name: &str) -> Result<Self, String> {
        if let Ok(k) = name.parse::<FunctionKind>() {
            return Ok(Func::Forward(k));
        }
        if let Ok(k) = name.parse::<InverseKind>() {
            return Ok(Func::Inverse(k));
        }
        let names: Vec<_> = FunctionKind::ALL
            .iter()
            .map(|k| k.name())
            .chain(InverseKind::ALL.iter().map(|k| k.name()))
            .collect();
        Err(format!(
            "unknown function '{name}', expected one of {}",
            names.join(", ")
        ))
    }

    fn eval(self, p: PParam, x: f64) -> Result<f64, String> {
        match self {
            Func::Forward(k) => forward_eval(k, p, x),
            Func::Inverse(k) => k.eval(p, x),
        }
        .map_err(|e| e.to_string())
    }

    fn domain(self, p: PParam) -> (f64, f64, bool) {
        match self {
            Func::Forward(k) => k.domain(p),
            Func::Inverse(k) => k.domain(),
        }
    }
}

pub fn eval(function: &str, p: f64, x: f64, format: Format) -> CmdResult {
    let f = Func::parse(function)?;
    let p = param(p)?;
    let value = f.eval(p, x)?;
    ok(match format {
        Format::Text => format!("{}\n", g15(value)),
        Format::Json => {
            json_text(&json!({ "function": function, "p": p.get(), "x": x, "value": value }))?
        }
        Format::Csv => csv_text(&["x", "value"], &[vec![g15(x), g15(value)]])?,
    })
}

pub fn constant(name: &str, p: f64, format: Format) -> CmdResult {
    let p = param(p)?;
    let (value, residual) = match name {
        "pi_p" => (pi_p(p), None),
        "b_p" => (b_p(p), None),
        "c_p" => (c_p(p), None),
        "s_p" | "r_p" => {
            let root = if name == "s_p" {
                solve_s_p(p)
            } else {
                solve_r_p(p)
            }
            .map_err(|e| e.to_string())?;
            (root.root, Some(root.residual))
        }
        other => {
            return Err(format!(
                "unknown constant '{other}', expected one of pi_p, b_p, c_p, s_p, r_p"
            ))
        }
    };
    ok(match format {
        Format::Text => match residual {
            Some(r) => format!("{}\nresidual {}\n", g15(value), g15(r)),
            None => format!("{}\n", g15(value)),
        },
        Format::Json => {
            json_text(&json!({ "name": name, "p": p.get(), "value": value, "residual": residual }))?
        }
        Format::Csv => csv_text(
            &["name", "p", "value", "residual"],
            &[vec![
                name.to_string(),
                g15(p.get()),
                g15(value),
                residual.map(g15).unwrap_or_default(),
            ]],
        )?,
    })
}

/// `PFUN_TOL` if set, else the default margin tolerance.
fn margin_tol() -> Result<f64, String> {
    match std::env::var("PFUN_TOL") {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MARGIN_TOL),
        Err(e) => Err(format!("PFUN_TOL: {e}")),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
            _ => Err(format!(
                "PFUN_TOL must be a positive real number, got '{raw}'"
            )),
        },
    }
}

pub fn check(
    claim: &str,
    ps: &[f64],
    n: usize,
    domain: Option<Domain>,
    reverse: bool,
    format: Format,
) -> CmdResult {
    let claims: Vec<_> = if claim == "all" {
        CLAIMS.iter().collect()
    } else {
        vec![claim.parse::<&Claim>().map_err(|e| e.to_string())?]
    };
    let ps = ps
        .iter()
        .map(|&p| param(p))
        .collect::<Result<Vec<_>, _>>()?;
    let domain = domain.unwrap_or(Domain { lo: 0.0, hi: X_MAX });
    let interval = Interval::new(domain.lo, domain.hi).map_err(|e| e.to_string())?;
    let grid = GridSpec::with_tolerance(interval, n, margin_tol()?).map_err(|e| e.to_string())?;

    let mut reports: Vec<ConvexityReport> = claims
        .iter()
        .flat_map(|c| {
            let direction = reverse.then(|| c.direction.reversed());
            ps.iter().map(move |&p| run_claim(c, p, &grid, direction))
        })
        .collect();
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id).then(a.p.total_cmp(&b.p)));

    let status = if reports.iter().any(|r| r.verdict == Verdict::Violated) {
        EXIT_VIOLATED
    } else if reports.iter().any(|r| r.verdict == Verdict::Inconclusive) {
        EXIT_INCONCLUSIVE
    } else {
        0
    };
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = write!(s, "{} p={} {}", r.claim_id, g15(r.p), r.verdict);
                if r.verdict != Verdict::Skipped {
                    let _ = write!(
                        s,
                        " worst_margin={} worst_point=({}, {}) pairs={}",
                        g15(r.worst_margin),
                        g15(r.worst_point.0),
                        g15(r.worst_point.1),
                        r.pairs_checked
                    );
                }
                if let Some(note) = &r.note {
                    let _ = write!(s, " [{note}]");
                }
                s.push('\n');
            }
            s
        }
        Format::Json => json_text(&reports)?,
        Format::Csv => {
            let rows: Vec<_> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.claim_id.clone(),
                        g15(r.p),
                        r.verdict.to_string(),
                        g15(r.worst_margin),
                        g15(r.worst_point.0),
                        g15(r.worst_point.1),
                        r.pairs_checked.to_string(),
                        r.note.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_text(
                &[
                    "claim",
                    "p",
                    "verdict",
                    "worst_margin",
                    "worst_x",
                    "worst_y",
                    "pairs_checked",
                    "note",
                ],
                &rows,
            )?
        }
    };
    Ok(Output { text, status })
}

#[derive(Serialize)]
struct Thresholds {
    p: f64,
    s_p: RootResult,
    r_p: RootResult,
}

pub fn roots(ps: &[f64], format: Format) -> CmdResult {
    let mut rows = Vec::new();
    for &p in ps {
        let pp = param(p)?;
        let s_p = solve_s_p(pp).map_err(|e| format!("s_p at p = {p}: {e}"))?;
        let r_p = solve_r_p(pp).map_err(|e| format!("r_p at p = {p}: {e}"))?;
        rows.push(Thresholds { p, s_p, r_p });
    }
    ok(match format {
        Format::Text => rows
            .iter()
            .map(|t| {
                format!(
                    "p={} s_p={} (residual {}) r_p={} (residual {})\n",
                    g15(t.p),
                    g15(t.s_p.root),
                    g15(t.s_p.residual),
                    g15(t.r_p.root),
                    g15(t.r_p.residual)
                )
            })
            .collect(),
        Format::Json => json_text(&rows)?,
        Format::Csv => csv_text(
            &["p", "s_p", "s_p_residual", "r_p", "r_p_residual"],
            &rows
                .iter()
                .map(|t| {
                    vec![
                        g15(t.p),
                        g15(t.s_p.root),
                        g15(t.s_p.residual),
                        g15(t.r_p.root),
                        g15(t.r_p.residual),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
    })
}

pub fn table(function: &str, p: f64, domain: Domain, n: usize, format: Format) -> CmdResult {
    let f = Func::parse(function)?;
    let p = param(p)?;
    if n < 2 {
        return Err(format!("table needs n >= 2, got {n}"));
    }
    let (lo, hi, closed) = f.domain(p);
    let inside = |x: f64| x >= lo && if closed { x <= hi } else { x < hi };
    if !inside(domain.lo) || !inside(domain.hi) {
        let close = if closed { ']' } else { ')' };
        return Err(format!(
            "{function} needs a domain within [{lo}, {hi}{close}, got {domain}"
        ));
    }
    let step = (domain.hi - domain.lo) / (n - 1) as f64;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let x = if i == n - 1 {
            domain.hi
        } else {
            domain.lo + i as f64 * step
        };
        rows.push((x, f.eval(p, x)?));
    }
    ok(match format {
        Format::Json => json_text(
            &rows
                .iter()
                .map(|&(x, value)| json!({ "x": x, "value": value }))
                .collect::<Vec<_>>(),
        )?,
        Format::Csv | Format::Text => csv_text(
            &["x", "value"],
            &rows
                .iter()
                .map(|&(x, v)| vec![g15(x), g15(v)])
                .collect::<Vec<_>>(),
        )?,
    })
}
