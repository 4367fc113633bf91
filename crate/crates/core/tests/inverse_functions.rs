mod common;

use pfun_core::{arccos_p, arcsin_p, arcsinh_p, arctan_p, arctanh_p, pi_p, InverseKind, PParam};
use proptest::prelude::*;

fn pp(v: f64) -> PParam {
    PParam::new(v).unwrap()
}

const PS: [f64; 6] = [1.1, 1.5, 2.0, 3.0, 5.0, 10.0];

#[test]
fn agree_with_series_oracles() {
    for v in PS {
        let p = pp(v);
        for x in common::midpoints(0.0, 0.9, 30) {
            let cases = [
                ("arcsin_p", arcsin_p(p, x).unwrap(), common::arcsin_p(v, x)),
                (
                    "arcsinh_p",
                    arcsinh_p(p, x).unwrap(),
                    common::arcsinh_p(v, x),
                ),
                ("arctan_p", arctan_p(p, x).unwrap(), common::arctan_p(v, x)),
                (
                    "arctanh_p",
                    arctanh_p(p, x).unwrap(),
                    common::arctanh_p(v, x),
                ),
            ];
            for (name, got, want) in cases {
                assert!(
                    (got - want).abs() < 1e-12,
                    "{name} p={v} x={x}: {got} vs {want}"
                );
            }
        }
        let x = 0.99;
        let got = arctanh_p(p, x).unwrap();
        assert!(
            (got - common::arctanh_p(v, x)).abs() < 1e-11,
            "arctanh_p p={v} at 0.99"
        );
    }
}

#[test]
fn reduce_to_classical_at_p_two() {
    let p = pp(2.0);
    for x in common::midpoints(0.0, 1.0, 50) {
        assert!((arcsin_p(p, x).unwrap() - x.asin()).abs() < 1e-13);
        assert!((arccos_p(p, x).unwrap() - x.acos()).abs() < 1e-12);
        assert!((arctan_p(p, x).unwrap() - x.atan()).abs() < 1e-13);
        assert!((arctanh_p(p, x).unwrap() - x.atanh()).abs() < 1e-12);
    }
    for x in [0.5, 1.0, 2.0, 10.0, 1e3, 1e8] {
        let got = arcsinh_p(p, x).unwrap();
        assert!(
            (got - x.asinh()).abs() < 1e-12 * x.asinh().max(1.0),
            "{x}: {got}"
        );
    }
}

#[test]
fn endpoint_limits() {
    for v in PS {
        let p = pp(v);
        assert_eq!(arcsin_p(p, 1.0).unwrap(), 0.5 * pi_p(p));
        assert_eq!(arccos_p(p, 1.0).unwrap(), 0.0);
        assert!((arccos_p(p, 0.0).unwrap() - 0.5 * pi_p(p)).abs() < 1e-13);
        // Slow divergence of arctanh_p toward 1.
        let near = arctanh_p(p, 1.0 - 1e-12).unwrap();
        assert!(near.is_finite() && near > arctanh_p(p, 1.0 - 1e-6).unwrap());
        assert!(arctanh_p(p, 1.0).is_err());
    }
}

#[test]
fn every_kind_rejects_negative_arguments() {
    for k in InverseKind::ALL {
        assert!(k.eval(pp(3.0), -0.1).is_err(), "{k}");
    }
}

proptest! {
    #[test]
    fn strictly_increasing(v in 1.05f64..12.0, a in 0.0f64..0.999, b in 0.0f64..0.999) {
        prop_assume!((a - b).abs() > 1e-9);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let p = pp(v);
        for k in [InverseKind::ArcsinP, InverseKind::ArctanP, InverseKind::ArcsinhP, InverseKind::ArctanhP] {
            prop_assert!(k.eval(p, lo).unwrap() < k.eval(p, hi).unwrap(), "{k}");
        }
        // arccos_p' = -x^(p-2) (1 - x^p)^((1-p)/p) is flat near 0 for large p:
        // the drop from π_p/2 is about x^(p-1)/(p-1).
        let (c_lo, c_hi) = (arccos_p(p, lo).unwrap(), arccos_p(p, hi).unwrap());
        prop_assert!(c_lo >= c_hi);
        if hi.powf(v - 1.0) > 1e-8 {
            prop_assert!(c_lo > c_hi);
        }
    }

    #[test]
    fn ordering_of_the_four_integrals(v in 1.05f64..12.0, x in 0.01f64..0.99) {
        // 1/(1+t^p) < (1+t^p)^(-1/p) < 1 < (1-t^p)^(-1/p) < 1/(1-t^p)
        // Differences are of order x^(p+1); keep them above rounding.
        prop_assume!(x.powf(v) > 1e-6);
        let p = pp(v);
        let at = arctan_p(p, x).unwrap();
        let ash = arcsinh_p(p, x).unwrap();
        let asn = arcsin_p(p, x).unwrap();
        let ath = arctanh_p(p, x).unwrap();
        prop_assert!(at < ash && ash < x && x < asn && asn < ath);
    }
}
