use gramkern::approx::{
    error_variance, function_moments, kernel_estimate, taylor_polynomial, variance_table,
    ApproxPolynomial, TargetFunction,
};
use gramkern::exactscalar::{eval_pilaurent, ratio, PiLaurent, Rational};
use gramkern::kernel::build_kernel;
use proptest::prelude::*;

fn value(p: &PiLaurent) -> Rational {
    eval_pilaurent(p, 256).unwrap().to_rational()
}

#[test]
fn kernel_variance_reduces_to_quadratic_form() {
    for t in TargetFunction::ALL {
        for n in 1..=8 {
            let f = t.natural_family();
            let m = function_moments(t, f, n).unwrap();
            let b = build_kernel(f, n).unwrap();
            let mut quad = PiLaurent::zero();
            for i in 0..n {
                for j in 0..n {
                    quad.add_assign_ref(&(&m.entries[i] * &m.entries[j]).scale(&b.entries[(i, j)]));
                }
            }
            let expected = &t.squared_integral() - &quad;
            let got = error_variance(t, &kernel_estimate(t, n).unwrap()).unwrap();
            assert_eq!(got, expected, "{t} n={n}");
        }
    }
}

#[test]
fn variances_are_positive_and_shrink() {
    for t in TargetFunction::ALL {
        let rows = variance_table(t, 8).unwrap();
        let est: Vec<Rational> = rows.iter().map(|r| value(&r.estimate)).collect();
        for r in &rows {
            assert!(value(&r.taylor) > ratio(0, 1));
        }
        assert!(est.iter().all(|v| *v > ratio(0, 1)), "{t}");
        for w in est.windows(2) {
            assert!(w[1] < w[0], "{t}");
        }
    }
}

#[test]
fn exp_variances_are_rational() {
    for row in variance_table(TargetFunction::ExpNeg, 8).unwrap() {
        assert!(row.taylor.as_rational().is_some());
        assert!(row.estimate.as_rational().is_some());
    }
    let est = kernel_estimate(TargetFunction::ExpNeg, 8).unwrap();
    assert!(est.rational_coefficients().is_some());
}

#[test]
fn taylor_comparator_is_maclaurin() {
    let p = taylor_polynomial(TargetFunction::ExpNeg, gramkern::Family::Laguerre, 8).unwrap();
    let expected = [
        ratio(1, 1),
        ratio(-1, 1),
        ratio(1, 2),
        ratio(-1, 6),
        ratio(1, 24),
        ratio(-1, 120),
        ratio(1, 720),
        ratio(-1, 5040),
    ];
    assert_eq!(p.rational_coefficients().unwrap(), expected);
}

fn perturbed(p: &ApproxPolynomial, at: usize, up: bool) -> ApproxPolynomial {
    let mut q = p.clone();
    let delta = PiLaurent::from(ratio(if up { 1 } else { -1 }, 1000));
    q.coefficients[at] = &q.coefficients[at] + &delta;
    q
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    /// The kernel estimate is the weighted least-squares optimum, so any
    /// nearby polynomial has a larger error.
    #[test]
    fn projection_is_optimal(n in 1usize..=6, at in 0usize..6, up: bool, which in 0usize..3) {
        prop_assume!(at < n);
        let t = TargetFunction::ALL[which];
        let est = kernel_estimate(t, n).unwrap();
        let base = value(&error_variance(t, &est).unwrap());
        let worse = value(&error_variance(t, &perturbed(&est, at, up)).unwrap());
        prop_assert!(worse > base);
    }
}
