//! Numerical verification of generalized-convexity statements.
//!
//! A claim `N(f(x), f(y)) ≤ f(M(x, y))` (or `≥`) is tested on every pair of a
//! finite grid and summarised by the worst margin found. The evidence is
//! floating-point evaluation on a grid, nothing more: a `Holds` verdict means
//! no pair violated the claim by more than the margin tolerance.

mod integral;
mod mn;
mod profile;
mod roots;
mod suite;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::Interval;

pub use integral::{chebyshev_check, jensen_check, IntegralCheck};
pub use mn::{margin_at, mn_convexity_check};
pub use profile::{monotone_profile, profile_values, Monotonicity};
pub use roots::{r_p_equation, s_p_target, solve_r_p, solve_s_p};
pub use suite::{run_claim, run_theorem_suite, Claim, ClaimDomain, ClaimFunction, CLAIMS};

/// Default absolute slack for weak inequalities.
pub const DEFAULT_MARGIN_TOL: f64 = 1e-9;

/// Tolerance used when a suspected violation is re-evaluated.
pub const CONFIRM_TOL: f64 = 1e-14;

/// A uniform grid of `n` cell midpoints on `domain`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub domain: Interval,
    pub n: usize,
    pub margin_tol: f64,
}

impl GridSpec {
    pub fn new(domain: Interval, n: usize) -> Result<Self> {
        Self::with_tolerance(domain, n, DEFAULT_MARGIN_TOL)
    }

    pub fn with_tolerance(domain: Interval, n: usize, margin_tol: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid needs n >= 2, got {n}"
            )));
        }
        if !margin_tol.is_finite() || margin_tol < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "margin_tol must be >= 0, got {margin_tol}"
            )));
        }
        Ok(Self {
            domain,
            n,
            margin_tol,
        })
    }

    /// The same grid on another domain.
    pub fn on(&self, domain: Interval) -> Self {
        Self { domain, ..*self }
    }

    /// Points `lo + (i + 1/2)·(hi - lo)/n`, strictly inside the domain.
    pub fn points(&self) -> Vec<f64> {
        let lo = self.domain.lo();
        let cell = self.domain.width() / self.n as f64;
        (0..self.n).map(|i| lo + (i as f64 + 0.5) * cell).collect()
    }
}

/// Which side of the MN-convexity inequality is asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// `f(M(x, y)) ≤ N(f(x), f(y))`; margin `N(f(x), f(y)) - f(M(x, y))`.
    ConvexLE,
    /// `f(M(x, y)) ≥ N(f(x), f(y))`; margin `f(M(x, y)) - N(f(x), f(y))`.
    ConcaveGE,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::ConvexLE => Direction::ConcaveGE,
            Direction::ConcaveGE => Direction::ConvexLE,
        }
    }

    /// Signed margin; non-negative when the inequality holds.
    pub fn margin(self, outer_of_values: f64, value_at_inner: f64) -> f64 {
        match self {
            Direction::ConvexLE => outer_of_values - value_at_inner,
            Direction::ConcaveGE => value_at_inner - outer_of_values,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Holds,
    Violated,
    Inconclusive,
    /// The claim does not apply at this `p`; nothing was evaluated.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "Holds",
            Verdict::Violated => "Violated",
            Verdict::Inconclusive => "Inconclusive",
            Verdict::Skipped => "Skipped",
        };
        f.write_str(s)
    }
}

/// Outcome of one grid check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexityReport {
    #[serde(rename = "claim")]
    pub claim_id: String,
    pub p: f64,
    pub verdict: Verdict,
    pub worst_margin: f64,
    pub worst_point: (f64, f64),
    pub pairs_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ConvexityReport {
    pub fn labelled(mut self, claim_id: impl Into<String>, p: f64) -> Self {
        self.claim_id = claim_id.into();
        self.p = p;
        self
    }

    pub(crate) fn skipped(claim_id: &str, p: f64, reason: String) -> Self {
        Self {
            claim_id: claim_id.to_string(),
            p,
            verdict: Verdict::Skipped,
            worst_margin: f64::NAN,
            worst_point: (f64::NAN, f64::NAN),
            pairs_checked: 0,
            note: Some(reason),
        }
    }

    fn append_note(&mut self, extra: &str) {
        self.note = Some(match self.note.take() {
            Some(n) => format!("{n}; {extra}"),
            None => extra.to_string(),
        });
    }
}
