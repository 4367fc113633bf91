//! Safeguarded root-finding on a bracketing interval.
//!
//! Each iteration proposes a Newton step (when a derivative is supplied) or
//! a secant step, and falls back to bisection whenever the proposal leaves
//! the current bracket or fails to halve the previous step. After a fixed
//! number of rejected proposals the solver bisects unconditionally, which
//! bounds the work by `log2(width / x_tol)` evaluations.

use serde::Serialize;

use super::{Interval, NumericConfig};
use crate::error::{Error, Result};

/// Rejected Newton/secant proposals tolerated before pure bisection.
const MAX_REJECTED: usize = 5;

/// Outcome of a bracketed solve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootResult {
    pub root: f64,
    /// `|f(root)|` as last evaluated.
    pub residual: f64,
    pub iterations: usize,
}

/// Hybrid Newton/secant-in-bisection solver.
#[derive(Debug, Clone, Copy)]
pub struct Hybrid {
    f_tol: f64,
    x_tol: f64,
    max_iter: usize,
    guess: Option<f64>,
}

impl Hybrid {
    /// Residual and bracket-width tolerances both set to `cfg.abs_tol`.
    pub fn new(cfg: &NumericConfig) -> Self {
        Self {
            f_tol: cfg.abs_tol,
            x_tol: cfg.abs_tol,
            max_iter: cfg.max_iter,
            guess: None,
        }
    }

    pub fn f_tol(mut self, tol: f64) -> Self {
        self.f_tol = tol;
        self
    }

    /// Bracket width at which the solve stops. Zero means "until the bracket
    /// cannot be split in floating point".
    pub fn x_tol(mut self, tol: f64) -> Self {
        self.x_tol = tol;
        self
    }

    pub fn max_iter(mut self, n: usize) -> Self {
        self.max_iter = n;
        self
    }

    pub fn guess(mut self, x: f64) -> Self {
        self.guess = Some(x);
        self
    }

    /// Solves `f(x) = 0` on `[lo, hi]`. `f` returns the value and, when
    /// available, the derivative.
    pub fn solve<F>(&self, mut f: F, lo: f64, hi: f64) -> Result<RootResult>
    where
        F: FnMut(f64) -> Result<(f64, Option<f64>)>,
    {
        let mut value = |x: f64| -> Result<(f64, Option<f64>)> {
            let (v, d) = f(x)?;
            if v.is_nan() {
                return Err(Error::Domain(format!("function is NaN at {x}")));
            }
            Ok((v, d))
        };

        let (f_lo, _) = value(lo)?;
        if f_lo == 0.0 {
            return Ok(RootResult {
                root: lo,
                residual: 0.0,
                iterations: 0,
            });
        }
        let (f_hi, _) = value(hi)?;
        if f_hi == 0.0 {
            return Ok(RootResult {
                root: hi,
                residual: 0.0,
                iterations: 0,
            });
        }
        if f_lo.signum() == f_hi.signum() {
            return Err(Error::Bracket { lo, hi, f_lo, f_hi });
        }

        // Endpoints labelled by the sign of f there.
        let (mut neg, mut f_neg, mut pos, mut f_pos) = if f_lo < 0.0 {
            (lo, f_lo, hi, f_hi)
        } else {
            (hi, f_hi, lo, f_lo)
        };

        let mut x = match self.guess {
            Some(g) if g > lo && g < hi => g,
            _ => 0.5 * (lo + hi),
        };
        let mut last_step = hi - lo;
        let mut previous: Option<(f64, f64)> = None;
        let mut rejected = 0;
        let mut best = (f64::NAN, f64::INFINITY);

        for iteration in 1..=self.max_iter {
            let (fx, dfx) = value(x)?;
            if fx.abs() < best.1 {
                best = (x, fx.abs());
            }
            if fx.abs() <= self.f_tol {
                return Ok(RootResult {
                    root: x,
                    residual: fx.abs(),
                    iterations: iteration,
                });
            }
            if fx < 0.0 {
                neg = x;
                f_neg = fx;
            } else {
                pos = x;
                f_pos = fx;
            }

            let (a, b) = if neg < pos { (neg, pos) } else { (pos, neg) };
            let mid = 0.5 * (a + b);
            if b - a <= self.x_tol || mid <= a || mid >= b {
                return Ok(RootResult {
                    root: best.0,
                    residual: best.1,
                    iterations: iteration,
                });
            }

            let proposal = if rejected >= MAX_REJECTED {
                None
            } else {
                match dfx {
                    Some(d) if d.is_finite() && d != 0.0 => Some(x - fx / d),
                    _ => Some(match previous {
                        Some((xp, fp)) if fp != fx => x - fx * (x - xp) / (fx - fp),
                        _ => neg - f_neg * (pos - neg) / (f_pos - f_neg),
                    }),
                }
            };

            let next = match proposal {
                Some(c) if c > a && c < b && (c - x).abs() <= 0.5 * last_step => c,
                Some(_) => {
                    rejected += 1;
                    mid
                }
                None => mid,
            };
            last_step = (next - x).abs();
            previous = Some((x, fx));
            x = next;
        }

        Err(Error::Convergence {
            what: "bracketed root solve",
            estimate: best.0,
            error: best.1,
        })
    }
}

/// Solves `f(x) = 0` on `iv` with secant steps safeguarded by bisection.
pub fn solve_bracketed<F>(f: F, iv: Interval, cfg: &NumericConfig) -> Result<RootResult>
where
    F: Fn(f64) -> f64,
{
    Hybrid::new(cfg).solve(|x| Ok((f(x), None)), iv.lo(), iv.hi())
}

/// Like [`solve_bracketed`] with an analytic derivative: `f_df` returns
/// `(f(x), f'(x))`.
pub fn solve_bracketed_newton<F>(f_df: F, iv: Interval, cfg: &NumericConfig) -> Result<RootResult>
where
    F: Fn(f64) -> (f64, f64),
{
    Hybrid::new(cfg).solve(
        |x| {
            let (v, d) = f_df(x);
            Ok((v, Some(d)))
        },
        iv.lo(),
        iv.hi(),
    )
}
