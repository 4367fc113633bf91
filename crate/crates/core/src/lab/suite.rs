//! The catalogue of logarithmic-mean convexity claims and the suite runner.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{
    mn_convexity_check, solve_r_p, solve_s_p, ConvexityReport, Direction, GridSpec, Verdict,
};
use crate::error::{Error, Result};
use crate::forward::{forward_eval_with, FunctionKind, X_MAX};
use crate::inverse::{arcsinh_p_with, arctan_p_with, arctanh_p_with};
use crate::means::MeanKind;
use crate::numerics::{Interval, NumericConfig};
use crate::special::{pi_p, PParam};

/// Distance kept from the threshold constants `s_p`, `r_p` and from the
/// poles of `tan_p` and `arctanh_p`.
const THRESHOLD_GAP: f64 = 1e-6;

/// The function a claim is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClaimFunction {
    SinP,
    CosP,
    RecipSinP,
    RecipCosP,
    TanP,
    TanhP,
    ArcsinhP,
    ArctanP,
    ArctanhP,
}

impl ClaimFunction {
    pub fn name(self) -> &'static str {
        match self {
            ClaimFunction::SinP => "sin_p",
            ClaimFunction::CosP => "cos_p",
            ClaimFunction::RecipSinP => "1/sin_p",
            ClaimFunction::RecipCosP => "1/cos_p",
            ClaimFunction::TanP => "tan_p",
            ClaimFunction::TanhP => "tanh_p",
            ClaimFunction::ArcsinhP => "arcsinh_p",
            ClaimFunction::ArctanP => "arctan_p",
            ClaimFunction::ArctanhP => "arctanh_p",
        }
    }

    pub fn eval(self, p: PParam, x: f64, cfg: &NumericConfig) -> Result<f64> {
        match self {
            ClaimFunction::SinP => forward_eval_with(FunctionKind::SinP, p, x, cfg),
            ClaimFunction::CosP => forward_eval_with(FunctionKind::CosP, p, x, cfg),
            ClaimFunction::RecipSinP => {
                recip(forward_eval_with(FunctionKind::SinP, p, x, cfg)?, self, x)
            }
            ClaimFunction::RecipCosP => {
                recip(forward_eval_with(FunctionKind::CosP, p, x, cfg)?, self, x)
            }
            ClaimFunction::TanP => forward_eval_with(FunctionKind::TanP, p, x, cfg),
            ClaimFunction::TanhP => forward_eval_with(FunctionKind::TanhP, p, x, cfg),
            ClaimFunction::ArcsinhP => arcsinh_p_with(p, x, cfg),
            ClaimFunction::ArctanP => arctan_p_with(p, x, cfg),
            ClaimFunction::ArctanhP => arctanh_p_with(p, x, cfg),
        }
    }
}

fn recip(v: f64, f: ClaimFunction, x: f64) -> Result<f64> {
    if v > 0.0 {
        Ok(1.0 / v)
    } else {
        Err(Error::Domain(format!("{} is undefined at {x}", f.name())))
    }
}

/// The open interval on which a claim is stated, as a function of `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClaimDomain {
    /// `(0, π_p/2)`
    HalfPeriod,
    /// `(0, 1)`
    Unit,
    /// `(0, X_MAX)`
    Positive,
    /// `(s_p, π_p/2)`, kept `1e-6` away from both ends.
    AboveSp,
    /// `(r_p, 1)`, kept `1e-6` away from both ends.
    AboveRp,
}

impl ClaimDomain {
    pub fn interval(self, p: PParam) -> Result<Interval> {
        match self {
            ClaimDomain::HalfPeriod => Interval::new(0.0, 0.5 * pi_p(p)),
            ClaimDomain::Unit => Interval::new(0.0, 1.0),
            ClaimDomain::Positive => Interval::new(0.0, X_MAX),
            ClaimDomain::AboveSp => {
                let s = solve_s_p(p)?.root;
                Interval::new(s + THRESHOLD_GAP, 0.5 * pi_p(p) - THRESHOLD_GAP)
            }
            ClaimDomain::AboveRp => {
                let r = solve_r_p(p)?.root;
                Interval::new(r + THRESHOLD_GAP, 1.0 - THRESHOLD_GAP)
            }
        }
    }
}

/// One inequality `f(M(x, y)) ≤ N(f(x), f(y))` or its reverse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub function: ClaimFunction,
    /// Mean applied to the arguments.
    pub inner: MeanKind,
    /// Mean applied to the function values.
    pub outer: MeanKind,
    pub direction: Direction,
    /// Smallest admissible `p` (inclusive); `None` means every `p > 1`.
    pub min_p: Option<f64>,
    pub domain: ClaimDomain,
}

impl Claim {
    pub fn applies_to(&self, p: PParam) -> bool {
        self.min_p.is_none_or(|m| p.get() >= m)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id, self.statement)
    }
}

impl FromStr for &'static Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CLAIMS.iter().find(|c| c.id == s).ok_or_else(|| {
            let ids: Vec<_> = CLAIMS.iter().map(|c| c.id).collect();
            Error::InvalidParameter(format!(
                "unknown claim '{s}', expected one of {}",
                ids.join(", ")
            ))
        })
    }
}

use ClaimDomain as D;
use ClaimFunction as F;
use Direction::{ConcaveGE, ConvexLE};
use MeanKind::{Arithmetic as A, Logarithmic as L};

pub const CLAIMS: [Claim; 9] = [
    Claim {
        id: "thm1.3-1",
        statement: "L(sin_p x, sin_p y) <= sin_p L(x, y) on (0, pi_p/2)",
        function: F::SinP,
        inner: L,
        outer: L,
        direction: ConcaveGE,
        min_p: None,
        domain: D::HalfPeriod,
    },
    Claim {
        id: "thm1.3-2",
        statement: "L(cos_p x, cos_p y) <= cos_p L(x, y) on (0, pi_p/2), p >= 2",
        function: F::CosP,
        inner: L,
        outer: L,
        direction: ConcaveGE,
        min_p: Some(2.0),
        domain: D::HalfPeriod,
    },
    Claim {
        id: "thm1.4-1",
        statement: "L(1/sin_p x, 1/sin_p y) >= 1/sin_p A(x, y) on (0, pi_p/2)",
        function: F::RecipSinP,
        inner: A,
        outer: L,
        direction: ConvexLE,
        min_p: None,
        domain: D::HalfPeriod,
    },
    Claim {
        id: "thm1.4-2",
        statement: "L(1/cos_p x, 1/cos_p y) >= 1/cos_p L(x, y) on (0, pi_p/2)",
        function: F::RecipCosP,
        inner: L,
        outer: L,
        direction: ConvexLE,
        min_p: None,
        domain: D::HalfPeriod,
    },
    Claim {
        id: "thm1.4-3",
        statement: "L(tanh_p x, tanh_p y) <= tanh_p A(x, y) on (0, inf)",
        function: F::TanhP,
        inner: A,
        outer: L,
        direction: ConcaveGE,
        min_p: None,
        domain: D::Positive,
    },
    Claim {
        id: "thm1.4-4",
        statement: "L(arcsinh_p x, arcsinh_p y) <= arcsinh_p A(x, y) on (0, 1)",
        function: F::ArcsinhP,
        inner: A,
        outer: L,
        direction: ConcaveGE,
        min_p: None,
        domain: D::Unit,
    },
    Claim {
        id: "thm1.4-5",
        statement: "L(arctan_p x, arctan_p y) <= arctan_p A(x, y) on (0, 1)",
        function: F::ArctanP,
        inner: A,
        outer: L,
        direction: ConcaveGE,
        min_p: None,
        domain: D::Unit,
    },
    Claim {
        id: "cor2.5-1",
        statement: "L(tan_p x, tan_p y) >= tan_p L(x, y) on (s_p, pi_p/2)",
        function: F::TanP,
        inner: L,
        outer: L,
        direction: ConvexLE,
        min_p: None,
        domain: D::AboveSp,
    },
    Claim {
        id: "cor2.5-2",
        statement: "L(arctanh_p x, arctanh_p y) >= arctanh_p L(x, y) on (r_p, 1)",
        function: F::ArctanhP,
        inner: L,
        outer: L,
        direction: ConvexLE,
        min_p: None,
        domain: D::AboveRp,
    },
];

/// Checks one claim at one `p` on `grid` intersected with the claim's
/// domain. `direction` overrides the stated direction (used for strictness
/// probes). Never fails: problems become `Skipped` or `Inconclusive`.
pub fn run_claim(
    claim: &Claim,
    p: PParam,
    grid: &GridSpec,
    direction: Option<Direction>,
) -> ConvexityReport {
    let pv = p.get();
    if !claim.applies_to(p) {
        return ConvexityReport::skipped(claim.id, pv, "p out of stated range".to_string());
    }
    let domain = match claim.domain.interval(p) {
        Ok(d) => d,
        Err(e) => {
            let mut r = ConvexityReport::skipped(claim.id, pv, String::new());
            r.verdict = Verdict::Inconclusive;
            r.note = Some(format!("could not determine the claim domain: {e}"));
            return r;
        }
    };
    let Some(domain) = domain.intersect(&grid.domain) else {
        return ConvexityReport::skipped(
            claim.id,
            pv,
            "grid domain misses the claim domain".to_string(),
        );
    };
    let function = claim.function;
    let mut report = mn_convexity_check(
        move |x: f64, cfg: &NumericConfig| function.eval(p, x, cfg),
        claim.inner,
        claim.outer,
        &grid.on(domain),
        direction.unwrap_or(claim.direction),
    )
    .labelled(claim.id, pv);
    if claim.domain == ClaimDomain::AboveRp {
        report.append_note("checked as a two-variable inequality over (r_p, 1)");
    }
    report
}

/// Runs every claim at every `p`, sorted by `(claim_id, p)`.
pub fn run_theorem_suite(p_set: &[PParam], grid: &GridSpec) -> Vec<ConvexityReport> {
    let mut reports: Vec<_> = CLAIMS
        .iter()
        .flat_map(|c| p_set.iter().map(move |&p| run_claim(c, p, grid, None)))
        .collect();
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id).then(a.p.total_cmp(&b.p)));
    reports
}
