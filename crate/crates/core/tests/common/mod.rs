//! Independent reference implementations built from power series and plain
//! bisection, sharing no code with the library's quadrature or root finder.
#![allow(dead_code)]

/// `Σ c_k x^{kp+1}/(kp+1)` with `c_k` produced by `coef(k, c_{k-1})`.
fn series(p: f64, x: f64, coef: impl Fn(usize, f64) -> f64) -> f64 {
    let xp = x.powf(p);
    let mut c = 1.0;
    let mut pow = x;
    let mut sum = x;
    for k in 1..20_000 {
        c = coef(k, c);
        pow *= xp;
        let term = c * pow / (k as f64 * p + 1.0);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Binomial coefficients of `(1 ∓ u)^{-1/p}`.
fn binom(p: f64, sign: f64) -> impl Fn(usize, f64) -> f64 {
    move |k, prev| prev * sign * ((k as f64 - 1.0) + 1.0 / p) / k as f64
}

/// Valid for `0 ≤ x ≤ 0.9`.
pub fn arcsin_p(p: f64, x: f64) -> f64 {
    series(p, x, binom(p, 1.0))
}

/// Valid for `0 ≤ x ≤ 0.9`.
pub fn arcsinh_p(p: f64, x: f64) -> f64 {
    series(p, x, binom(p, -1.0))
}

/// Valid for `0 ≤ x ≤ 0.9`.
pub fn arctan_p(p: f64, x: f64) -> f64 {
    series(p, x, |_, prev| -prev)
}

/// Valid for `0 ≤ x ≤ 0.99`.
pub fn arctanh_p(p: f64, x: f64) -> f64 {
    series(p, x, |_, prev| prev)
}

/// Plain bisection for an increasing `g` with `g(lo) < target < g(hi)`.
pub fn invert(g: impl Fn(f64) -> f64, target: f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn pi_p(p: f64) -> f64 {
    2.0 * std::f64::consts::PI / (p * (std::f64::consts::PI / p).sin())
}

/// `n` cell midpoints of `[lo, hi]`.
pub fn midpoints(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (i as f64 + 0.5) * (hi - lo) / n as f64)
        .collect()
}
