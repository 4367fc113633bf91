use rayon::prelude::*;

use super::{ConvexityReport, Direction, GridSpec, Verdict, CONFIRM_TOL};
use crate::error::Result;
use crate::means::{evaluate_mean, MeanKind};
use crate::numerics::NumericConfig;

/// Margin of one pair: `N(f(x), f(y)) - f(M(x, y))`, sign-adjusted for
/// `direction`.
pub fn margin_at<F>(
    f: &F,
    inner: MeanKind,
    outer: MeanKind,
    direction: Direction,
    x: f64,
    y: f64,
    cfg: &NumericConfig,
) -> Result<f64>
where
    F: Fn(f64, &NumericConfig) -> Result<f64>,
{
    let (fx, fy) = (f(x, cfg)?, f(y, cfg)?);
    let at_inner = f(evaluate_mean(inner, x, y)?, cfg)?;
    Ok(direction.margin(evaluate_mean(outer, fx, fy)?, at_inner))
}

/// Checks `f(M(x, y)) ≤ N(f(x), f(y))` (`ConvexLE`) or `≥` (`ConcaveGE`) on
/// all `n²` ordered grid pairs.
///
/// `f` receives the numeric configuration to use, so a suspected violation
/// can be re-evaluated at tolerance [`CONFIRM_TOL`]; only a violation that
/// survives the re-evaluation is reported as `Violated`. Pairs are evaluated
/// in parallel; the means are exactly symmetric, so each unordered pair is
/// computed once and counted twice. Ties in the worst margin go to the
/// lexicographically smallest point.
pub fn mn_convexity_check<F>(
    f: F,
    inner: MeanKind,
    outer: MeanKind,
    grid: &GridSpec,
    direction: Direction,
) -> ConvexityReport
where
    F: Fn(f64, &NumericConfig) -> Result<f64> + Sync,
{
    let cfg = NumericConfig::default();
    let points = grid.points();
    let n = points.len();
    let values: Vec<Result<f64>> = points.par_iter().map(|&x| f(x, &cfg)).collect();

    let margins: Vec<Vec<Result<f64>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i..n)
                .map(|j| {
                    let fx = values[i].clone()?;
                    let fy = values[j].clone()?;
                    let at_inner = f(evaluate_mean(inner, points[i], points[j])?, &cfg)?;
                    Ok(direction.margin(evaluate_mean(outer, fx, fy)?, at_inner))
                })
                .collect()
        })
        .collect();

    let mut worst = (f64::INFINITY, (f64::NAN, f64::NAN));
    let mut pairs_checked = 0;
    let mut failure: Option<String> = None;
    for (i, row) in margins.iter().enumerate() {
        for (offset, margin) in row.iter().enumerate() {
            let j = i + offset;
            let point = (points[i], points[j]);
            match margin {
                Ok(m) => {
                    pairs_checked += if i == j { 1 } else { 2 };
                    if *m < worst.0 {
                        worst = (*m, point);
                    }
                }
                Err(e) if failure.is_none() => {
                    failure = Some(format!(
                        "evaluation failed at ({}, {}): {e}",
                        point.0, point.1
                    ));
                }
                Err(_) => {}
            }
        }
    }

    let mut report = ConvexityReport {
        claim_id: String::from("custom"),
        p: f64::NAN,
        verdict: Verdict::Holds,
        worst_margin: worst.0,
        worst_point: worst.1,
        pairs_checked,
        note: None,
    };

    if let Some(reason) = failure {
        report.verdict = Verdict::Inconclusive;
        report.append_note(&reason);
        return report;
    }
    if worst.0 >= -grid.margin_tol {
        return report;
    }

    let tight = cfg.with_tolerance(CONFIRM_TOL);
    let (x, y) = worst.1;
    match margin_at(&f, inner, outer, direction, x, y, &tight) {
        Ok(m) if m < -grid.margin_tol => {
            report.verdict = Verdict::Violated;
            report.worst_margin = m;
        }
        Ok(m) => {
            report.verdict = Verdict::Inconclusive;
            report.append_note(&format!(
                "apparent violation {} at ({x}, {y}) re-evaluates to {m}",
                worst.0
            ));
        }
        Err(e) => {
            report.verdict = Verdict::Inconclusive;
            report.append_note(&format!("re-evaluation at ({x}, {y}) failed: {e}"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::numerics::Interval;

    fn grid(lo: f64, hi: f64, n: usize) -> GridSpec {
        GridSpec::new(Interval::new(lo, hi).unwrap(), n).unwrap()
    }

    #[test]
    fn exp_is_log_log_convex() {
        // exp is increasing and log-convex: L(e^x, e^y) ≥ e^{L(x, y)}.
        let g = grid(0.1, 2.0, 25);
        let exp = |x: f64, _: &NumericConfig| Ok(x.exp());
        let r = mn_convexity_check(
            exp,
            MeanKind::Logarithmic,
            MeanKind::Logarithmic,
            &g,
            Direction::ConvexLE,
        );
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.pairs_checked, 625);
        let r = mn_convexity_check(
            exp,
            MeanKind::Logarithmic,
            MeanKind::Logarithmic,
            &g,
            Direction::ConcaveGE,
        );
        assert_eq!(r.verdict, Verdict::Violated);
        assert!(r.worst_margin < -1e-9);
    }

    #[test]
    fn identity_has_zero_margin() {
        let g = grid(0.5, 3.0, 10);
        let id = |x: f64, _: &NumericConfig| Ok(x);
        for m in [
            MeanKind::Arithmetic,
            MeanKind::Logarithmic,
            MeanKind::Harmonic,
            MeanKind::Power(2.5),
        ] {
            for d in [Direction::ConvexLE, Direction::ConcaveGE] {
                let r = mn_convexity_check(id, m, m, &g, d);
                assert_eq!(r.verdict, Verdict::Holds);
                assert_eq!(r.worst_margin, 0.0);
            }
        }
    }

    #[test]
    fn failures_make_the_report_inconclusive() {
        let g = grid(0.0, 2.0, 8);
        let f = |x: f64, _: &NumericConfig| {
            if x > 1.5 {
                Err(Error::Domain("out of range".into()))
            } else {
                Ok(x + 1.0)
            }
        };
        let r = mn_convexity_check(
            f,
            MeanKind::Arithmetic,
            MeanKind::Arithmetic,
            &g,
            Direction::ConvexLE,
        );
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(r.note.unwrap().contains("evaluation failed"));
        assert!(r.pairs_checked < 64);
    }

    #[test]
    fn unconfirmed_violations_are_not_reported() {
        // Noise that only appears at the loose tolerance.
        let g = grid(1.0, 2.0, 6);
        let f = |x: f64, cfg: &NumericConfig| {
            let noise = if cfg.abs_tol > 1e-13 && x > 1.49 && x < 1.51 {
                1e-6
            } else {
                0.0
            };
            Ok(x + noise)
        };
        let r = mn_convexity_check(
            f,
            MeanKind::Arithmetic,
            MeanKind::Arithmetic,
            &g,
            Direction::ConvexLE,
        );
        assert_eq!(r.verdict, Verdict::Inconclusive, "{r:?}");
    }
}
