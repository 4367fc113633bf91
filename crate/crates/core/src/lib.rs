//! Generalized (p-)trigonometric and hyperbolic functions, their inverses and
//! constants, plus grid-based numerical checks of logarithmic-mean
//! convexity inequalities for these functions.
//!
//! For `p > 1`, `arcsin_p(x) = ∫₀ˣ (1 - t^p)^(-1/p) dt` and `sin_p` is its
//! inverse on `[0, π_p/2]`; at `p = 2` every function reduces to its classical
//! counterpart. The forward functions are computed by safeguarded Newton
//! inversion of the defining integrals, which are evaluated with tanh-sinh
//! quadrature.
//!
//! ```
//! use pfun_core::{forward_eval, pi_p, FunctionKind, PParam};
//!
//! let p = PParam::new(3.0).unwrap();
//! let top = forward_eval(FunctionKind::SinP, p, pi_p(p) / 2.0).unwrap();
//! assert_eq!(top, 1.0);
//! ```
//!
//! The checks in [`lab`] produce floating-point evidence on finite grids; they
//! are not interval-arithmetic certificates.

pub mod error;
pub mod forward;
pub mod inverse;
pub mod lab;
pub mod means;
pub mod numerics;
pub mod special;

pub use error::{Error, Result};
pub use forward::{
    derivative_eval, derivative_eval_with, forward_eval, forward_eval_with,
    plaplacian_lambda_profile, FunctionKind, X_MAX,
};
pub use inverse::{arccos_p, arcsin_p, arcsinh_p, arctan_p, arctanh_p, InverseKind};
pub use means::{evaluate_mean, MeanKind};
pub use numerics::{Interval, NumericConfig, RootResult};
pub use special::{b_p, beta, c_p, digamma, gauss_2f1, pi_p, PParam};
