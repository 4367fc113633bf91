//! Two-argument means: arithmetic, geometric, logarithmic, harmonic and the
//! power mean of order `t`.
//!
//! Arguments are put in canonical order (`x >= y`) before any arithmetic so
//! every mean is bit-exactly symmetric, and equal arguments return that
//! argument for every kind.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative gap below which the logarithmic mean switches to its series.
const LOG_MEAN_SERIES_GAP: f64 = 1e-8;

/// Power-mean orders this close to zero use the geometric limit.
const POWER_ZERO_ORDER: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Logarithmic,
    Harmonic,
    /// Power mean of order `t`; `t = 0` is the geometric mean.
    Power(f64),
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanKind::Arithmetic => write!(f, "A"),
            MeanKind::Geometric => write!(f, "G"),
            MeanKind::Logarithmic => write!(f, "L"),
            MeanKind::Harmonic => write!(f, "H"),
            MeanKind::Power(t) => write!(f, "M_{t}"),
        }
    }
}

/// Evaluates the mean of two positive numbers.
pub fn evaluate_mean(kind: MeanKind, x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite() {
        return Err(Error::Domain(format!(
            "means need positive finite arguments, got ({x}, {y})"
        )));
    }
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    if hi == lo {
        return Ok(hi);
    }
    let value = match kind {
        MeanKind::Arithmetic => arithmetic(hi, lo),
        MeanKind::Geometric => geometric(hi, lo),
        MeanKind::Logarithmic => logarithmic(hi, lo),
        MeanKind::Harmonic => {
            // 2xy/(x+y) written to stay finite when xy overflows.
            let ratio = lo / hi;
            2.0 * lo / (1.0 + ratio)
        }
        MeanKind::Power(t) => power(t, hi, lo),
    };
    // Rounding can push a mean a hair outside its arguments.
    Ok(value.clamp(lo, hi))
}

fn arithmetic(hi: f64, lo: f64) -> f64 {
    lo + 0.5 * (hi - lo)
}

fn geometric(hi: f64, lo: f64) -> f64 {
    hi.sqrt() * lo.sqrt()
}

fn logarithmic(hi: f64, lo: f64) -> f64 {
    let a = arithmetic(hi, lo);
    let diff = hi - lo;
    if diff < LOG_MEAN_SERIES_GAP * hi {
        // L = A (1 - d²/12 - d⁴/180) with d = (x - y)/(x + y) = (x - y)/(2A)
        let d = diff / (2.0 * a);
        let d2 = d * d;
        return a * (1.0 - d2 / 3.0 - 4.0 * d2 * d2 / 45.0);
    }
    diff / (diff / lo).ln_1p()
}

fn power(t: f64, hi: f64, lo: f64) -> f64 {
    if t.abs() < POWER_ZERO_ORDER {
        return geometric(hi, lo);
    }
    if t == f64::INFINITY {
        return hi;
    }
    if t == f64::NEG_INFINITY {
        return lo;
    }
    // Scale by the larger argument so (x/hi)^t stays in [0, 1] for t > 0.
    let r = (lo / hi).powf(t);
    hi * (0.5 * (1.0 + r)).powf(1.0 / t)
}
