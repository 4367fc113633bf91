//! The two threshold constants that bound the log-convexity domains of
//! `tan_p` and `arctanh_p`.

use crate::error::{Error, Result};
use crate::forward::{forward_eval, FunctionKind};
use crate::inverse::arctanh_p;
use crate::numerics::{Hybrid, NumericConfig, RootResult};
use crate::special::{pi_p, PParam};

/// Residual tolerance of the threshold solves.
const ROOT_F_TOL: f64 = 1e-13;

/// `(p - 1)^(-1/p)`: the value of `tan_p` at `s_p`.
pub fn s_p_target(p: PParam) -> f64 {
    (p.get() - 1.0).powf(-p.recip())
}

/// `h(x) = x^(p-1) arctanh_p(x) - 1/p`, whose zero on `(0, 1)` is `r_p`.
pub fn r_p_equation(p: PParam, x: f64) -> Result<f64> {
    Ok(x.powf(p.get() - 1.0) * arctanh_p(p, x)? - p.recip())
}

/// Moves `hi` toward the pole at `limit` until `f(hi) > 0`.
fn positive_upper_end<F>(f: &F, limit: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut gap = 1e-3 * limit;
    loop {
        let hi = limit - gap;
        if hi >= limit {
            return Err(Error::Bracket {
                lo: 0.0,
                hi: limit,
                f_lo: f64::NAN,
                f_hi: f64::NAN,
            });
        }
        if f(hi)? > 0.0 {
            return Ok(hi);
        }
        gap *= 1e-3;
    }
}

/// `s_p`: the root of `tan_p(x) = (p - 1)^(-1/p)` on `(0, π_p/2)`.
///
/// Newton steps use `tan_p' = 1 + tan_p^p`.
pub fn solve_s_p(p: PParam) -> Result<RootResult> {
    let target = s_p_target(p);
    let pv = p.get();
    let equation = |x: f64| Ok(forward_eval(FunctionKind::TanP, p, x)? - target);
    let hi = positive_upper_end(&equation, 0.5 * pi_p(p))?;
    Hybrid::new(&NumericConfig::default())
        .f_tol(ROOT_F_TOL)
        .x_tol(0.0)
        .solve(
            |x| {
                let t = forward_eval(FunctionKind::TanP, p, x)?;
                Ok((t - target, Some(1.0 + t.powf(pv))))
            },
            0.0,
            hi,
        )
}

/// `r_p`: the root of `x^(p-1) arctanh_p(x) = 1/p` on `(0, 1)`, the point
/// above which `arctanh_p` is log-convex.
pub fn solve_r_p(p: PParam) -> Result<RootResult> {
    let pv = p.get();
    let equation = |x: f64| r_p_equation(p, x);
    let hi = positive_upper_end(&equation, 1.0)?;
    Hybrid::new(&NumericConfig::default())
        .f_tol(ROOT_F_TOL)
        .x_tol(0.0)
        .solve(
            |x| {
                let at = arctanh_p(p, x)?;
                let value = x.powf(pv - 1.0) * at - p.recip();
                let slope =
                    (pv - 1.0) * x.powf(pv - 2.0) * at + x.powf(pv - 1.0) / (1.0 - x.powf(pv));
                Ok((value, Some(slope)))
            },
            0.0,
            hi,
        )
}
