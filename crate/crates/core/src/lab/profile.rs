use serde::Serialize;

use super::GridSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    NonMonotone,
}

/// `(x, g(x))` on the grid for `g(x) = x^(1-a) f'(x) / f(x)^(1-b)`.
///
/// `(a, b) = (-1, -1)` gives the HH profile `x² f'/f²`; `(1, 0)` gives the
/// log-derivative `f'/f`.
pub fn profile_values<F, D>(
    f: F,
    f_prime: D,
    a: f64,
    b: f64,
    grid: &GridSpec,
) -> Result<Vec<(f64, f64)>>
where
    F: Fn(f64) -> Result<f64>,
    D: Fn(f64) -> Result<f64>,
{
    grid.points()
        .into_iter()
        .map(|x| {
            let fx = f(x)?;
            if fx.is_nan() || fx <= 0.0 {
                return Err(Error::Domain(format!(
                    "profile needs f > 0, got f({x}) = {fx}"
                )));
            }
            let g = x.powf(1.0 - a) * f_prime(x)? / fx.powf(1.0 - b);
            if g.is_finite() {
                Ok((x, g))
            } else {
                Err(Error::Domain(format!("profile is not finite at x = {x}")))
            }
        })
        .collect()
}

/// Classifies the profile by its consecutive differences: `Increasing` when
/// none falls below `-margin_tol`, otherwise `Decreasing` when none exceeds
/// `margin_tol`. A constant profile counts as increasing.
pub fn monotone_profile<F, D>(
    f: F,
    f_prime: D,
    a: f64,
    b: f64,
    grid: &GridSpec,
) -> Result<Monotonicity>
where
    F: Fn(f64) -> Result<f64>,
    D: Fn(f64) -> Result<f64>,
{
    let values = profile_values(f, f_prime, a, b, grid)?;
    let tol = grid.margin_tol;
    let steps: Vec<f64> = values.windows(2).map(|w| w[1].1 - w[0].1).collect();
    Ok(if steps.iter().all(|&d| d >= -tol) {
        Monotonicity::Increasing
    } else if steps.iter().all(|&d| d <= tol) {
        Monotonicity::Decreasing
    } else {
        Monotonicity::NonMonotone
    })
}
