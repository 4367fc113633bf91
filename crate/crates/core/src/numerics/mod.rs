//! Shared numerical kernels: double-exponential quadrature, a safeguarded
//! Newton/secant-in-bisection root-finder and central differences.
//!
//! Every tolerance is carried by [`NumericConfig`]; nothing here keeps
//! mutable state, so the kernels can be called from any number of threads.

mod diff;
mod quadrature;
mod roots;

pub use diff::{central_diff, try_central_diff};
pub use quadrature::{integrate, integrate_with_gaps, try_integrate};
pub use roots::{solve_bracketed, solve_bracketed_newton, Hybrid, RootResult};

use crate::error::{Error, Result};

/// Tolerances and iteration limits shared by all kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
    pub fd_step: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_iter: 200,
            fd_step: 1e-6,
        }
    }
}

impl NumericConfig {
    pub fn new(abs_tol: f64, rel_tol: f64, max_iter: usize, fd_step: f64) -> Result<Self> {
        let cfg = Self {
            abs_tol,
            rel_tol,
            max_iter,
            fd_step,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.abs_tol) {
            return Err(Error::InvalidParameter(format!(
                "abs_tol must be > 0, got {}",
                self.abs_tol
            )));
        }
        if !positive(self.rel_tol) {
            return Err(Error::InvalidParameter(format!(
                "rel_tol must be > 0, got {}",
                self.rel_tol
            )));
        }
        if self.max_iter < 1 {
            return Err(Error::InvalidParameter("max_iter must be >= 1".into()));
        }
        if !positive(self.fd_step) {
            return Err(Error::InvalidParameter(format!(
                "fd_step must be > 0, got {}",
                self.fd_step
            )));
        }
        Ok(())
    }

    /// The same configuration with both quadrature tolerances replaced.
    pub fn with_tolerance(self, tol: f64) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: tol,
            ..self
        }
    }
}

/// A finite interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "interval bounds must be finite, got [{lo}, {hi}]"
            )));
        }
        if lo >= hi {
            return Err(Error::InvalidParameter(format!(
                "interval needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Overlap of two intervals, `None` when it is empty or a single point.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        Interval::new(self.lo.max(other.lo), self.hi.min(other.hi)).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_rejects_bad_values() {
        assert!(NumericConfig::new(0.0, 1e-12, 10, 1e-6).is_err());
        assert!(NumericConfig::new(1e-12, -1.0, 10, 1e-6).is_err());
        assert!(NumericConfig::new(1e-12, 1e-12, 0, 1e-6).is_err());
        assert!(NumericConfig::new(1e-12, 1e-12, 10, 0.0).is_err());
        assert!(NumericConfig::default().validate().is_ok());
    }

    #[test]
    fn interval_invariants() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        let a = Interval::new(0.0, 2.0).unwrap();
        let b = Interval::new(1.0, 3.0).unwrap();
        assert_eq!(a.intersect(&b), Some(Interval::new(1.0, 2.0).unwrap()));
        assert_eq!(a.intersect(&Interval::new(2.0, 3.0).unwrap()), None);
    }
}
