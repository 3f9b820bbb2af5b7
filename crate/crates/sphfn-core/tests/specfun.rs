use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sphfn_core::specfun::*;
use sphfn_core::{Error, HalfInt};

fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// All `(m, n)` pairs for weight `l`.
fn pairs(l: HalfInt) -> Vec<(HalfInt, HalfInt)> {
    l.ladder().flat_map(|m| l.ladder().map(move |n| (m, n))).collect()
}

#[test]
fn gamma_values() {
    assert_eq!(gamma(5.0).unwrap(), 24.0);
    assert_abs_diff_eq!(gamma(0.5).unwrap(), PI.sqrt(), epsilon = 1e-15);
    let g = gamma_complex(c(0.5)).unwrap();
    assert_abs_diff_eq!(g.re, PI.sqrt(), epsilon = 1e-14);
    assert!(matches!(log_gamma(0.0), Err(Error::Pole(_))));
    assert!(matches!(gamma_complex(c(-4.0)), Err(Error::Pole(_))));
}

#[test]
fn gamma_relative_accuracy_against_factorials() {
    for n in 1..=50 {
        let exact = factorial(n - 1);
        let g = gamma_complex(c(n as f64)).unwrap();
        assert!(((g.re - exact) / exact).abs() < 1e-13, "n = {n}");
        let lg = log_gamma(n as f64).unwrap();
        assert!((lg - exact.ln()).abs() <= 1e-13 * exact.ln().abs().max(1.0), "n = {n}");
    }
    // half-integers: Γ(k + 1/2) = (2k)! √π / (4^k k!)
    for k in 0..=40 {
        let exact = factorial(2 * k) * PI.sqrt() / (4f64.powi(k as i32) * factorial(k));
        let g = gamma_complex(c(k as f64 + 0.5)).unwrap();
        assert!(((g.re - exact) / exact).abs() < 1e-13, "k = {k}");
    }
}

#[test]
fn gamma_reflection_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let z = Complex64::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let lhs = gamma_complex(z).unwrap() * gamma_complex(1.0 - z).unwrap();
        let rhs = PI / (PI * z).sin();
        assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm(), "z = {z}");
    }
}

#[test]
fn hypergeometric_oracles() {
    let z = gauss_2f1(c(0.3), c(1.7), c(2.2), 0.0).unwrap();
    assert_eq!(z.value, c(1.0));
    let (b, cc, x) = (Complex64::new(0.4, 1.1), Complex64::new(2.5, -0.3), 0.7);
    let v = gauss_2f1(c(-1.0), b, cc, x).unwrap();
    assert!((v.value - (1.0 - b * x / cc)).norm() < 1e-15);
    let v = gauss_2f1(c(1.0), c(1.0), c(2.0), 0.5).unwrap();
    assert_abs_diff_eq!(v.value.re, -(0.5f64).ln() / 0.5, epsilon = 1e-15);
    // (1 - x)^{-a}
    let v = gauss_2f1(c(0.75), c(3.0), c(3.0), 0.6).unwrap();
    assert_abs_diff_eq!(v.value.re, 0.4f64.powf(-0.75), epsilon = 1e-13);
}

#[test]
fn hypergeometric_errors_and_budget() {
    assert!(matches!(gauss_2f1(c(0.5), c(0.2), c(1.0), -1.0), Err(Error::Divergence(_))));
    assert!(matches!(gauss_2f1(c(-5.0), c(0.2), c(-2.0), 0.3), Err(Error::Pole(_))));
    let tight = SeriesBudget { rel_tol: 1e-16, max_terms: 5 };
    let v = gauss_2f1_with(c(0.5), c(0.5), c(1.0), 0.9, &tight).unwrap();
    assert!(v.truncated);
}

#[test]
fn wigner_small_weight_entries() {
    for k in 0..=12 {
        let th = PI * k as f64 / 12.0;
        let p = wigner_p(h(1), h(1), h(1), th).unwrap();
        assert_abs_diff_eq!(p.re, (th / 2.0).cos(), epsilon = 1e-15);
        assert_abs_diff_eq!(p.im, 0.0, epsilon = 1e-15);
        let p = wigner_p(h(1), h(-1), h(1), th).unwrap();
        assert_abs_diff_eq!(p.re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.im, (th / 2.0).sin(), epsilon = 1e-15);
        let p = wigner_p(h(2), h(0), h(0), th).unwrap();
        assert_abs_diff_eq!(p.re, th.cos(), epsilon = 1e-15);
    }
}

#[test]
fn wigner_identity_at_zero_angle() {
    for tl in 0..=8 {
        for (m, n) in pairs(h(tl)) {
            let p = wigner_p(h(tl), m, n, 0.0).unwrap();
            let want = if m == n { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(p.re, want, epsilon = 1e-15);
            assert_abs_diff_eq!(p.im, 0.0, epsilon = 1e-15);
        }
    }
}

#[test]
fn wigner_rows_are_unit_vectors() {
    for tl in 0..=8 {
        let l = h(tl);
        for k in 0..20 {
            let th = PI * (k as f64 + 0.5) / 20.0;
            for m in l.ladder() {
                let s: f64 = l.ladder().map(|n| wigner_p(l, m, n, th).unwrap().norm_sqr()).sum();
                assert!((s - 1.0).abs() < 1e-11, "l={l} m={m} th={th}");
            }
        }
    }
}

#[test]
fn wigner_hypergeometric_forms_agree() {
    for tl in 0..=6 {
        let l = h(tl);
        for (m, n) in pairs(l) {
            for k in 0..=10 {
                let th = PI * k as f64 / 10.0;
                let direct = wigner_p(l, m, n, th).unwrap();
                let orient = Orientation::natural(m, n);
                let hyp = wigner_p_hyp(l, m, n, th, orient).unwrap();
                assert!((direct - hyp).norm() < 1e-12, "l={l} m={m} n={n} th={th}");
                assert!(wigner_p_hyp(l, m, n, th, orient.flip()).is_err() || m == n);
            }
        }
    }
}

#[test]
fn wigner_rejects_bad_indices() {
    assert!(matches!(wigner_p(h(2), h(3), h(0), 0.1), Err(Error::Index(_))));
    assert!(matches!(wigner_p(h(2), h(1), h(0), 0.1), Err(Error::Index(_))));
    assert!(matches!(wigner_p(h(-1), h(-1), h(-1), 0.1), Err(Error::Index(_))));
}

#[test]
fn jacobi_oracles() {
    for tau in [0.0, 0.3, 1.0, 2.5] {
        let v = jacobi_p(h(1), h(1), h(1), tau).unwrap();
        assert_abs_diff_eq!(v, (tau / 2.0).cosh(), epsilon = 1e-14);
        let v = jacobi_p(h(2), h(0), h(0), tau).unwrap();
        assert_abs_diff_eq!(v, tau.cosh(), epsilon = 1e-13);
    }
    for ts in 0..=6 {
        for (m, n) in pairs(h(ts)) {
            let v = jacobi_p(h(ts), m, n, 0.0).unwrap();
            assert_abs_diff_eq!(v, if m == n { 1.0 } else { 0.0 }, epsilon = 1e-15);
        }
    }
    let v = jacobi_p_principal(1.3, h(0), h(0), 0.0).unwrap();
    assert!((v - c(1.0)).norm() < 1e-13);
}

#[test]
fn jacobi_hypergeometric_forms_agree() {
    for ts in 0..=6 {
        let s = h(ts);
        for (m, n) in pairs(s) {
            for tau in [0.0, 0.4, 1.1, 2.0] {
                let direct = jacobi_p(s, m, n, tau).unwrap();
                let hyp = jacobi_p_hyp(s, m, n, tau, Orientation::natural(m, n)).unwrap();
                assert!((direct - hyp).abs() <= 1e-12 * direct.abs().max(1.0));
            }
        }
    }
}

#[test]
fn principal_hypergeometric_forms_agree() {
    for (rho, tm, tn) in [(0.5, 0, 0), (1.3, 2, 0), (2.0, -2, 4), (0.7, 1, -1), (3.0, 3, 3), (1.0, -4, 2)] {
        let (m, n) = (h(tm), h(tn));
        for tau in [0.0, 0.5, 1.5, 3.0] {
            let direct = jacobi_p_principal(rho, m, n, tau).unwrap();
            let hyp = jacobi_p_principal_hyp(rho, m, n, tau, Orientation::natural(m, n)).unwrap();
            assert!((direct - hyp).norm() <= 1e-11 * direct.norm().max(1.0), "rho={rho} m={m} n={n} tau={tau}: {direct} vs {hyp}");
        }
    }
}

#[test]
fn complex_weight_sum_reduces_to_finite_one() {
    // integer and half-integer σ: the infinite sum terminates via 1/Γ poles
    for ts in 0..=4 {
        let s = h(ts);
        for (m, n) in pairs(s) {
            for tau in [0.2, 1.3] {
                let finite = jacobi_p(s, m, n, tau).unwrap();
                let general = jacobi_p_sigma(c(s.value()), m, n, tau, &SeriesBudget::default()).unwrap();
                assert!((general - c(finite)).norm() < 1e-12 * finite.abs().max(1.0));
            }
        }
    }
}

#[test]
fn principal_budget_exhaustion() {
    let tight = SeriesBudget { rel_tol: 1e-16, max_terms: 10 };
    let r = jacobi_p_principal_with(1.0, h(0), h(0), 5.0, &tight);
    assert!(matches!(r, Err(Error::Convergence(10))));
}

#[test]
fn jacobi_ode_annihilated_by_negative_casimir() {
    for ts in 0..=4 {
        let s = h(ts);
        let sv = s.value();
        let lambda = -sv * (sv + 1.0);
        for (m, n) in pairs(s) {
            for y in [1.3, 1.8, 2.6] {
                let r = jacobi_ode_residual(s, m, n, y, lambda, 1e-4).unwrap();
                assert!(r.abs() < 1e-5, "sigma={s} m={m} n={n} y={y}: {r}");
            }
        }
    }
    // the printed sign leaves a residual for any nonzero weight
    let r = jacobi_ode_residual(h(2), h(0), h(0), 1.5, 2.0, 1e-4).unwrap();
    assert!((r - 4.0 * 1.5).abs() < 1e-5);
}

proptest! {
    #[test]
    fn wigner_symmetric_under_index_swap(tl in 0i64..8, a in 0usize..9, b in 0usize..9, th in 0.0..PI) {
        let l = h(tl);
        let dim = l.dim();
        let (m, n) = (l.ladder().nth(a % dim).unwrap(), l.ladder().nth(b % dim).unwrap());
        let p = wigner_p(l, m, n, th).unwrap();
        let q = wigner_p(l, n, m, th).unwrap();
        prop_assert!((p - q).norm() < 1e-13);
    }

    #[test]
    fn wigner_addition_collapses(tl in 0i64..6, a in 0usize..7, b in 0usize..7, th in 0.0..1.5, ph in 0.0..1.5) {
        let l = h(tl);
        let dim = l.dim();
        let (m, n) = (l.ladder().nth(a % dim).unwrap(), l.ladder().nth(b % dim).unwrap());
        let s: Complex64 = l.ladder().map(|k| wigner_p(l, m, k, th).unwrap() * wigner_p(l, k, n, ph).unwrap()).sum();
        prop_assert!((s - wigner_p(l, m, n, th + ph).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn terminating_series_is_a_polynomial(n in 0i64..8, b in -3.0f64..3.0, cc in 0.5f64..4.0, x in -5.0f64..5.0) {
        // ₂F₁(-n, b; c; x) = Σ_k (-n)_k (b)_k / ((c)_k k!) x^k, summed directly
        let mut direct = 0.0;
        let mut t = 1.0;
        for k in 0..=n {
            direct += t;
            let kf = k as f64;
            t *= (kf - n as f64) * (b + kf) / ((cc + kf) * (kf + 1.0)) * x;
        }
        let v = gauss_2f1(c(-(n as f64)), c(b), c(cc), x).unwrap();
        prop_assert!((v.value.re - direct).abs() <= 1e-12 * direct.abs().max(1.0));
    }
}
