use serde::Serialize;

use crate::error::Result;
use crate::numerics::{try_integrate, Interval, NumericConfig};

/// Both sides of an integral inequality `lhs ≤ rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegralCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs ≤ rhs` up to the quadrature tolerance.
    pub ok: bool,
}

impl IntegralCheck {
    fn new(lhs: f64, rhs: f64, cfg: &NumericConfig) -> Self {
        let slack = cfg.abs_tol.max(cfg.rel_tol * lhs.abs().max(rhs.abs()));
        Self {
            lhs,
            rhs,
            ok: lhs <= rhs + slack,
        }
    }
}

/// Chebyshev's integral inequality with weight `w > 0`:
/// `∫wf · ∫wg ≤ ∫w · ∫wfg` when `f` and `g` are similarly ordered, reversed
/// when they are oppositely ordered. The checker only reports; the caller
/// knows which ordering applies.
pub fn chebyshev_check<F, G, W>(f: F, g: G, w: W, iv: Interval) -> Result<IntegralCheck>
where
    F: Fn(f64) -> Result<f64>,
    G: Fn(f64) -> Result<f64>,
    W: Fn(f64) -> Result<f64>,
{
    let cfg = NumericConfig::default();
    let wf = try_integrate(|x| Ok(w(x)? * f(x)?), iv, &cfg)?;
    let wg = try_integrate(|x| Ok(w(x)? * g(x)?), iv, &cfg)?;
    let w_total = try_integrate(&w, iv, &cfg)?;
    let wfg = try_integrate(|x| Ok(w(x)? * f(x)? * g(x)?), iv, &cfg)?;
    Ok(IntegralCheck::new(wf * wg, w_total * wfg, &cfg))
}

/// Integral Jensen inequality on `[a, b]`:
/// `f(mean of φ) ≤ mean of f(φ)` for convex `f`, reversed for concave `f`.
pub fn jensen_check<F, P>(f_convex: F, phi: P, iv: Interval) -> Result<IntegralCheck>
where
    F: Fn(f64) -> Result<f64>,
    P: Fn(f64) -> Result<f64>,
{
    let cfg = NumericConfig::default();
    let width = iv.width();
    let mean_phi = try_integrate(&phi, iv, &cfg)? / width;
    let mean_f_phi = try_integrate(|x| f_convex(phi(x)?), iv, &cfg)? / width;
    Ok(IntegralCheck::new(f_convex(mean_phi)?, mean_f_phi, &cfg))
}
