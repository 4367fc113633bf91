use super::NumericConfig;
use crate::error::{Error, Result};

/// Central difference `(f(x+h) - f(x-h)) / 2h` with `h = fd_step·max(1, |x|)`.
pub fn central_diff<F>(f: F, x: f64, cfg: &NumericConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    try_central_diff(|t| Ok(f(t)), x, cfg)
}

/// [`central_diff`] for fallible functions; a failed or non-finite stencil
/// evaluation becomes a domain error.
pub fn try_central_diff<F>(f: F, x: f64, cfg: &NumericConfig) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let h = cfg.fd_step * x.abs().max(1.0);
    let at = |t: f64| -> Result<f64> {
        match f(t) {
            Ok(v) if v.is_finite() => Ok(v),
            Ok(v) => Err(Error::Domain(format!(
                "stencil value {v} at {t} is not finite"
            ))),
            Err(e) => Err(Error::Domain(format!(
                "stencil evaluation failed at {t}: {e}"
            ))),
        }
    };
    let (up, down) = (x + h, x - h);
    Ok((at(up)? - at(down)?) / (up - down))
}
