//! Tanh-sinh (double-exponential) quadrature.
//!
//! The substitution `x = c + h·tanh(π/2·sinh t)` maps `[lo, hi]` onto the
//! real line and makes the transformed integrand decay double-exponentially,
//! so algebraic endpoint singularities such as `(1 - t^p)^(-1/p)` at `t = 1`
//! converge at the same rate as smooth integrands. Nodes are generated once
//! per process and shared by all calls.

use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use super::{Interval, NumericConfig};
use crate::error::{Error, Result};

/// Number of step halvings after the unit-step level.
const MAX_LEVEL: usize = 12;

/// Levels evaluated before the difference test is trusted.
const MIN_LEVEL: usize = 3;

#[derive(Debug, Clone, Copy)]
struct Node {
    weight: f64,
    /// `1 - tanh(s)`, the scaled distance to the nearer endpoint.
    near: f64,
    /// `1 + tanh(s)`, the scaled distance to the farther endpoint.
    far: f64,
}

impl Node {
    fn at(t: f64) -> Node {
        let s = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * s).exp();
        let denom = 1.0 + e;
        Node {
            weight: FRAC_PI_2 * t.cosh() * 4.0 * e / (denom * denom),
            near: 2.0 * e / denom,
            far: 2.0 / denom,
        }
    }
}

/// `levels[0]` holds the positive nodes `t = 1, 2, ...`; `levels[m]` the
/// nodes at odd multiples of `2^-m`. The centre node is implicit.
fn node_table() -> &'static [Vec<Node>] {
    static TABLE: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=MAX_LEVEL)
            .map(|level| {
                let step = 0.5f64.powi(level as i32);
                let (first, stride) = if level == 0 {
                    (1.0, 1.0)
                } else {
                    (step, 2.0 * step)
                };
                let mut nodes = Vec::new();
                let mut t: f64 = first;
                loop {
                    let node = Node::at(t);
                    if node.near == 0.0 || node.weight == 0.0 {
                        break;
                    }
                    nodes.push(node);
                    t += stride;
                }
                nodes
            })
            .collect()
    })
}

/// Integrates `f` over `iv`.
///
/// Converges when successive step halvings differ by at most
/// `max(abs_tol, rel_tol·|I|)`. Non-finite values are tolerated only at nodes
/// that round onto an endpoint; anywhere else they are a domain error.
pub fn integrate<F>(f: F, iv: Interval, cfg: &NumericConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (lo, hi) = (iv.lo(), iv.hi());
    de_sum(
        |x, _, _| {
            let v = f(x);
            if !v.is_finite() && (x <= lo || x >= hi) {
                Ok(0.0)
            } else {
                Ok(v)
            }
        },
        iv,
        cfg,
    )
}

/// [`integrate`] for a fallible integrand; the first error aborts the sum.
pub fn try_integrate<F>(f: F, iv: Interval, cfg: &NumericConfig) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let (lo, hi) = (iv.lo(), iv.hi());
    de_sum(
        |x, _, _| {
            let v = f(x)?;
            if !v.is_finite() && (x <= lo || x >= hi) {
                Ok(0.0)
            } else {
                Ok(v)
            }
        },
        iv,
        cfg,
    )
}

/// Integrates `f(x, x - lo, hi - x)` over `iv`.
///
/// The two distances are computed directly from the transformation rather
/// than by subtraction, so integrands that are singular (or nearly so) at an
/// endpoint can evaluate their singular factor without cancellation.
pub fn integrate_with_gaps<F>(f: F, iv: Interval, cfg: &NumericConfig) -> Result<f64>
where
    F: Fn(f64, f64, f64) -> f64,
{
    de_sum(|x, dlo, dhi| Ok(f(x, dlo, dhi)), iv, cfg)
}

fn de_sum<F>(f: F, iv: Interval, cfg: &NumericConfig) -> Result<f64>
where
    F: Fn(f64, f64, f64) -> Result<f64>,
{
    let (lo, hi) = (iv.lo(), iv.hi());
    let half = 0.5 * (hi - lo);
    let centre = lo + half;

    let eval = |x: f64, dlo: f64, dhi: f64| -> Result<f64> {
        if dlo == 0.0 || dhi == 0.0 {
            return Ok(0.0);
        }
        let v = f(x, dlo, dhi)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Domain(format!(
                "integrand is not finite at interior point {x}"
            )))
        }
    };

    // Sum over the positive-t nodes of one level, both mirror images.
    let level_sum = |nodes: &[Node]| -> Result<f64> {
        let mut sum = 0.0;
        for node in nodes {
            let near = half * node.near;
            let far = half * node.far;
            let right = eval(hi - near, far, near)?;
            let left = eval(lo + near, near, far)?;
            sum += node.weight * (right + left);
        }
        Ok(sum)
    };

    let table = node_table();
    let mut step = 1.0;
    let mut raw = FRAC_PI_2 * eval(centre, half, half)? + level_sum(&table[0])?;
    let mut estimate = half * step * raw;
    let mut error = f64::INFINITY;

    for (level, nodes) in table.iter().enumerate().skip(1) {
        step *= 0.5;
        raw += level_sum(nodes)?;
        let next = half * step * raw;
        error = (next - estimate).abs();
        estimate = next;
        if level >= MIN_LEVEL && error <= cfg.abs_tol.max(cfg.rel_tol * estimate.abs()) {
            return Ok(estimate);
        }
    }

    Err(Error::Convergence {
        what: "tanh-sinh quadrature",
        estimate,
        error,
    })
}
