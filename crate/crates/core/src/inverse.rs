//! Inverse p-functions, each evaluated by quadrature of its defining integral
//! on its principal domain.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{integrate_with_gaps, Interval, NumericConfig};
use crate::special::{pi_p, PParam};

/// `arcsin_p` integrates up to this point in one piece and handles the rest
/// as a separate tail, where `(1 - t)^(-1/p)` dominates.
const ARCSIN_SPLIT: f64 = 1.0 - 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum InverseKind {
    ArcsinP,
    ArccosP,
    ArctanP,
    ArcsinhP,
    ArctanhP,
}

impl InverseKind {
    pub const ALL: [InverseKind; 5] = [
        InverseKind::ArcsinP,
        InverseKind::ArccosP,
        InverseKind::ArctanP,
        InverseKind::ArcsinhP,
        InverseKind::ArctanhP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InverseKind::ArcsinP => "arcsin_p",
            InverseKind::ArccosP => "arccos_p",
            InverseKind::ArctanP => "arctan_p",
            InverseKind::ArcsinhP => "arcsinh_p",
            InverseKind::ArctanhP => "arctanh_p",
        }
    }

    /// Legal arguments as `(lo, hi, hi_included)`. `arcsinh_p` accepts the
    /// extended half-line used when inverting `sinh_p`.
    pub fn domain(self) -> (f64, f64, bool) {
        match self {
            InverseKind::ArcsinhP => (0.0, f64::INFINITY, false),
            InverseKind::ArctanhP => (0.0, 1.0, false),
            _ => (0.0, 1.0, true),
        }
    }

    pub fn eval(self, p: PParam, x: f64) -> Result<f64> {
        self.eval_with(p, x, &NumericConfig::default())
    }

    pub fn eval_with(self, p: PParam, x: f64, cfg: &NumericConfig) -> Result<f64> {
        match self {
            InverseKind::ArcsinP => arcsin_p_with(p, x, cfg),
            InverseKind::ArccosP => arccos_p_with(p, x, cfg),
            InverseKind::ArctanP => arctan_p_with(p, x, cfg),
            InverseKind::ArcsinhP => arcsinh_p_with(p, x, cfg),
            InverseKind::ArctanhP => arctanh_p_with(p, x, cfg),
        }
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InverseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InverseKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown inverse function '{s}'")))
    }
}

/// `1 - t^p` given `gap = 1 - t`, without cancellation when `t` is near 1.
#[inline]
pub(crate) fn one_minus_pow(p: f64, t: f64, gap: f64) -> f64 {
    if gap < 0.5 {
        -(p * (-gap).ln_1p()).exp_m1()
    } else {
        1.0 - t.powf(p)
    }
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::outside("x", x, 0.0, 1.0))
    }
}

fn interval(lo: f64, hi: f64) -> Interval {
    Interval::new(lo, hi).expect("caller guarantees lo < hi")
}

/// `∫₀ˣ (1 - t^p)^(-1/p) dt` for `x ∈ [0, 1]`; `arcsin_p(1) = π_p/2`.
pub fn arcsin_p(p: PParam, x: f64) -> Result<f64> {
    arcsin_p_with(p, x, &NumericConfig::default())
}

pub fn arcsin_p_with(p: PParam, x: f64, cfg: &NumericConfig) -> Result<f64> {
    check_unit(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(0.5 * pi_p(p));
    }
    let (pv, q) = (p.get(), p.recip());
    // `end_gap` is 1 - (upper limit); exact by Sterbenz for limits above 1/2.
    let piece = |lo: f64, hi: f64| {
        let end_gap = 1.0 - hi;
        integrate_with_gaps(
            |t, _, dhi| (-q * one_minus_pow(pv, t, end_gap + dhi).ln()).exp(),
            interval(lo, hi),
            cfg,
        )
    };
    if x <= ARCSIN_SPLIT {
        piece(0.0, x)
    } else {
        Ok(piece(0.0, ARCSIN_SPLIT)? + piece(ARCSIN_SPLIT, x)?)
    }
}

/// `arcsin_p((1 - x^p)^(1/p))` for `x ∈ [0, 1]`.
pub fn arccos_p(p: PParam, x: f64) -> Result<f64> {
    arccos_p_with(p, x, &NumericConfig::default())
}

pub fn arccos_p_with(p: PParam, x: f64, cfg: &NumericConfig) -> Result<f64> {
    check_unit(x)?;
    let pv = p.get();
    let upper = (1.0 - x.powf(pv)).powf(p.recip());
    arcsin_p_with(p, upper.clamp(0.0, 1.0), cfg)
}

/// `∫₀ˣ (1 + t^p)^(-1) dt` for `x ∈ [0, 1]`.
pub fn arctan_p(p: PParam, x: f64) -> Result<f64> {
    arctan_p_with(p, x, &NumericConfig::default())
}

pub fn arctan_p_with(p: PParam, x: f64, cfg: &NumericConfig) -> Result<f64> {
    check_unit(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let pv = p.get();
    integrate_with_gaps(|t, _, _| 1.0 / (1.0 + t.powf(pv)), interval(0.0, x), cfg)
}

/// `∫₀ˣ (1 + t^p)^(-1/p) dt` for `x >= 0`.
///
/// Beyond `x = 1` the remainder is integrated in `u = ln t`, where the
/// integrand `(1 + e^(-pu))^(-1/p)` is bounded and tends to 1.
pub fn arcsinh_p(p: PParam, x: f64) -> Result<f64> {
    arcsinh_p_with(p, x, &NumericConfig::default())
}

pub fn arcsinh_p_with(p: PParam, x: f64, cfg: &NumericConfig) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("x must lie in [0, inf), got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x <= 1.0 {
        return arcsinh_unit(p, x, cfg);
    }
    Ok(arcsinh_unit(p, 1.0, cfg)? + arcsinh_log_tail(p, x.ln(), cfg)?)
}

fn arcsinh_unit(p: PParam, x: f64, cfg: &NumericConfig) -> Result<f64> {
    let (pv, q) = (p.get(), p.recip());
    integrate_with_gaps(
        |t, _, _| (-q * t.powf(pv).ln_1p()).exp(),
        interval(0.0, x),
        cfg,
    )
}

/// `∫₀ʷ (1 + e^(-pu))^(-1/p) du`, i.e. `arcsinh_p(e^w) - arcsinh_p(1)`.
pub(crate) fn arcsinh_log_tail(p: PParam, w: f64, cfg: &NumericConfig) -> Result<f64> {
    if w <= 0.0 {
        return Ok(0.0);
    }
    let (pv, q) = (p.get(), p.recip());
    integrate_with_gaps(
        |u, _, _| (-q * (-pv * u).exp().ln_1p()).exp(),
        interval(0.0, w),
        cfg,
    )
}

/// `∫₀ˣ (1 - t^p)^(-1) dt` for `x ∈ [0, 1)`; grows without bound as `x → 1`.
pub fn arctanh_p(p: PParam, x: f64) -> Result<f64> {
    arctanh_p_with(p, x, &NumericConfig::default())
}

pub fn arctanh_p_with(p: PParam, x: f64, cfg: &NumericConfig) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::outside_half_open("x", x, 0.0, 1.0));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let pv = p.get();
    let end_gap = 1.0 - x;
    integrate_with_gaps(
        |t, _, dhi| 1.0 / one_minus_pow(pv, t, end_gap + dhi),
        interval(0.0, x),
        cfg,
    )
}
