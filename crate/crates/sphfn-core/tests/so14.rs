use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sphfn_core::cmatrix::CMatrix;
use sphfn_core::hypercomplex::{cartan_compose, CartanFamily, QuatEuler};
use sphfn_core::so14::*;
use sphfn_core::so4::{z_so4, DoubleAngles, matrix_element_so4};
use sphfn_core::specfun::{jacobi_p, wigner_p};
use sphfn_core::{Error, HalfInt};

fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn random_angles(rng: &mut ChaCha8Rng) -> QuatEuler<f64> {
    QuatEuler {
        phi: rng.gen_range(0.0..2.0 * PI),
        eps: rng.gen_range(-1.5..1.5),
        vsig: rng.gen_range(0.0..2.0 * PI),
        theta: rng.gen_range(0.0..PI),
        tau: rng.gen_range(-1.5..1.5),
        phi2: rng.gen_range(0.0..PI),
        psi: rng.gen_range(-2.0 * PI..2.0 * PI),
        eps2: rng.gen_range(-1.5..1.5),
        omega: rng.gen_range(-1.5..1.5),
        chi: rng.gen_range(-2.0 * PI..2.0 * PI),
    }
}

fn complex_matrix(sigma: HalfInt, g: &QuatEuler<f64>) -> CMatrix {
    let idx: Vec<HalfInt> = sigma.ladder().collect();
    let d = idx.len();
    CMatrix::from_fn(d, |r, c| {
        matrix_element_so14_complex(sigma, idx[r], idx[c], g, Prefactor::Ordered).unwrap()
    })
}

#[test]
fn spinor_matrix_is_the_cartan_product() {
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_angles(&mut rng);
        let t = rep_matrix_so14(h(1), &g, Prefactor::Ordered).unwrap();
        let c = cartan_compose(&g, CartanFamily::Sp11).unwrap();
        let d = t.max_diff_2x2(&c);
        let scale = 1.0 + c.entries().iter().flatten().map(|e| e.max_abs()).fold(0.0, f64::max);
        assert!(d < 1e-12 * scale, "seed {seed}: {d}");
    }
}

#[test]
fn combined_prefactor_exponents() {
    // entry (m, n) = (-1/2, -1/2): exponent ½(ε+ε′+ω+iφ+iψ−jχ+kς)
    let g = QuatEuler { phi: 0.3, eps: 0.2, vsig: 0.7, theta: 0.9, tau: 0.4, phi2: 0.5, psi: -0.6, eps2: -0.1, omega: 0.25, chi: 1.1 };
    let e = matrix_element_so14(h(1), h(-1), h(-1), &g, Prefactor::Combined).unwrap();
    let z = z_so14(h(1), h(-1), h(-1), g.theta, g.phi2, g.tau, FactorOrder::So4First).unwrap();
    let s = sphfn_core::hypercomplex::Signature::ANTI;
    let want = sphfn_core::hypercomplex::Hyper::new(
        s,
        0.5 * (g.eps + g.eps2 + g.omega),
        0.5 * (g.phi + g.psi),
        -0.5 * g.chi,
        0.5 * g.vsig,
    )
    .exp()
        * sphfn_core::hypercomplex::Hyper::complex(s, z.re, z.im);
    let (a, b) = (e.components(), want.components());
    for i in 0..4 {
        assert!((a[i] - b[i]).abs() < 1e-14);
    }
}

#[test]
fn prefactor_conventions_agree_on_the_complex_slice() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let g = QuatEuler { vsig: 0.0, chi: 0.0, ..random_angles(&mut rng) };
        for ts in 0..=4 {
            let s = h(ts);
            for m in s.ladder() {
                for n in s.ladder() {
                    let a = matrix_element_so14(s, m, n, &g, Prefactor::Ordered).unwrap();
                    let b = matrix_element_so14(s, m, n, &g, Prefactor::Combined).unwrap();
                    let scale = 1.0 + a.max_abs();
                    assert!((a - b).max_abs() < 1e-12 * scale);
                    assert_eq!((a.y, a.z), (0.0, 0.0));
                }
            }
        }
    }
    let g = QuatEuler { chi: 0.1, ..QuatEuler::zero() };
    assert!(matches!(
        matrix_element_so14_complex(h(1), h(1), h(1), &g, Prefactor::Ordered),
        Err(Error::Domain(_))
    ));
}

#[test]
fn kernel_is_the_continued_wigner_function() {
    // Z(θ, ϕ, τ) depends on θ + ϕ − iτ only
    for ts in 0..=4 {
        let s = h(ts);
        for m in s.ladder() {
            for n in s.ladder() {
                for (th, ph, ta) in [(0.3, 0.4, 0.5), (1.0, 2.0, -0.7), (2.5, 0.1, 1.3)] {
                    let a = z_so14(s, m, n, th, ph, ta, FactorOrder::So4First).unwrap();
                    let b = z_so14(s, m, n, th + ph, 0.0, ta, FactorOrder::So4First).unwrap();
                    let c = z_so14(s, m, n, th, ph, ta, FactorOrder::LorentzFirst).unwrap();
                    let tol = 1e-11 * (1.0 + a.norm());
                    assert!((a - b).norm() < tol, "s={s} m={m} n={n}");
                    assert!((a - c).norm() < tol);
                }
            }
        }
    }
}

#[test]
fn degenerates_to_compact_and_lorentz_pieces() {
    for ts in 0..=4 {
        let s = h(ts);
        for m in s.ladder() {
            for n in s.ladder() {
                for (th, ph) in [(0.2, 0.9), (1.7, 2.4)] {
                    let z = z_so14(s, m, n, th, ph, 0.0, FactorOrder::So4First).unwrap();
                    assert!((z - z_so4(s, m, n, th, ph).unwrap()).norm() < 1e-11);
                }
                for (th, ta) in [(0.2, 0.9), (1.7, -1.4)] {
                    let z = z_so14(s, m, n, th, 0.0, ta, FactorOrder::So4First).unwrap();
                    let w = z_so13(s, m, n, th, ta).unwrap();
                    assert!((z - w).norm() < 1e-11 * (1.0 + w.norm()));
                }
                let z = z_so14(s, m, n, 0.0, 0.0, 0.8, FactorOrder::So4First).unwrap();
                assert!((z - jacobi_p(s, m, n, 0.8).unwrap()).norm() < 1e-12 * (1.0 + z.norm()));
                let z = z_so14(s, m, n, 0.6, 0.0, 0.0, FactorOrder::So4First).unwrap();
                assert!((z - wigner_p(s, m, n, 0.6).unwrap()).norm() < 1e-13);
            }
        }
    }
}

#[test]
fn matrix_elements_restrict_to_the_compact_subgroup() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let mut g = random_angles(&mut rng);
        (g.tau, g.eps, g.eps2, g.omega, g.vsig, g.chi) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        let d = DoubleAngles { phi: g.phi, vsig: 0.0, theta: g.theta, phi2: g.phi2, psi: g.psi, chi: 0.0 };
        for ts in 0..=3 {
            let s = h(ts);
            for m in s.ladder() {
                for n in s.ladder() {
                    let a = matrix_element_so14_complex(s, m, n, &g, Prefactor::Ordered).unwrap();
                    let b = matrix_element_so4(s, m, n, &d).unwrap();
                    assert!((a - b).norm() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn one_parameter_families_are_homomorphisms() {
    for ts in 0..=4 {
        let s = h(ts);
        let th = |t: f64| complex_matrix(s, &QuatEuler { theta: t, ..QuatEuler::zero() });
        assert!(th(0.4).mul(&th(1.1)).max_diff(&th(1.5)) < 1e-12);
        let ta = |t: f64| complex_matrix(s, &QuatEuler { tau: t, ..QuatEuler::zero() });
        let p = ta(0.3).mul(&ta(-0.9));
        assert!(p.max_diff(&ta(-0.6)) < 1e-11);
        let ep = |t: f64| complex_matrix(s, &QuatEuler { eps: t, ..QuatEuler::zero() });
        assert!(ep(0.3).mul(&ep(0.2)).max_diff(&ep(0.5)) < 1e-12);
    }
}

#[test]
fn hypergeometric_triple_forms_agree() {
    for ts in 0..=4 {
        let s = h(ts);
        for m in s.ladder() {
            for n in s.ladder() {
                for i in 0..5 {
                    for j in 0..5 {
                        for k in 0..5 {
                            let th = 0.1 + 0.7 * i as f64;
                            let ph = 0.05 + 0.75 * j as f64;
                            let ta = -1.0 + 0.5 * k as f64;
                            let z = z_so14(s, m, n, th, ph, ta, FactorOrder::So4First).unwrap();
                            for form in 1..=8 {
                                let zf = z_so14_hyp(s, m, n, th, ph, ta, form).unwrap();
                                assert!(
                                    (z - zf).norm() < 1e-10 * (1.0 + z.norm()),
                                    "s={s} m={m} n={n} form={form}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn form_selection() {
    assert_eq!(so14_form_for(h(0), h(0), h(0), h(0)), 1);
    assert_eq!(so14_form_for(h(2), h(0), h(2), h(0)), 2);
    assert_eq!(so14_form_for(h(-2), h(0), h(2), h(4)), 3);
    assert!(matches!(z_so14_hyp(h(2), h(0), h(0), 0.1, 0.1, 0.1, 9), Err(Error::Index(_))));
}

#[test]
fn addition_sum_satisfies_the_ode() {
    for ts in 0..=4 {
        let s = h(ts);
        let lambda = s.value() * (s.value() + 1.0);
        for m in s.ladder() {
            for n in s.ladder() {
                for (th, ph, ta) in [(0.4, 0.3, 0.5), (1.2, 0.9, -0.4), (0.7, 1.8, 0.9)] {
                    let r = ode_residual_so14(s, m, n, th, ph, ta, lambda).unwrap();
                    let z = z_so14(s, m, n, th, ph, ta, FactorOrder::So4First).unwrap().norm();
                    assert!(r < 1e-4 * (1.0 + z), "s={s} m={m} n={n}: {r}");
                }
            }
        }
    }
    assert!(matches!(
        ode_residual_so14(h(2), h(0), h(0), 0.01, 0.0, 0.0, 2.0),
        Err(Error::Singularity(_))
    ));
}

#[test]
fn particular_solution_closed_form() {
    let one = Complex64::new(1.0, 0.0);
    for z in [-0.5, 0.1, 0.7] {
        let w = fuchs_solution(h(2), h(0), h(0), Complex64::new(z, 0.0), one).unwrap();
        assert!((w.re - (2.0 * z - 1.0)).abs() < 1e-14);
        // the printed eigenvalue σ(σ+3) leaves residual 4z − 4 here
        let r = fuchs_residual(h(2), h(0), h(0), z, 4.0, 1e-4).unwrap();
        assert!((r - (4.0 - 4.0 * z)).abs() < 1e-5);
    }
    let c1 = Complex64::new(0.5, -2.0);
    let w = fuchs_solution(h(3), h(1), h(1), Complex64::new(1.0, 0.0), c1).unwrap();
    assert!((w - c1).norm() < 1e-15);
    assert!(matches!(fuchs_residual(h(2), h(0), h(0), 0.97, 4.0, 1e-4), Err(Error::Singularity(_))));
}

#[test]
fn associated_and_zonal() {
    let z = z_zonal_so14(h(0), 0.3, 0.2, 0.5).unwrap();
    assert_eq!(z, Complex64::new(1.0, 0.0));
    // σ = 1: cos θ^q
    let (th, ph, ta) = (0.3, 0.4, 0.6);
    let z = z_zonal_so14(h(2), th, ph, ta).unwrap();
    let want = Complex64::new(th + ph, -ta).cos();
    assert!((z - want).norm() < 1e-13);
    assert!(matches!(z_assoc_so14(h(1), h(1), 0.1, 0.1, 0.1), Err(Error::Index(_))));
}

#[test]
fn formula_tags_serialize() {
    let v = z_so14_value(h(2), h(0), h(2), 0.1, 0.2, 0.3, FactorOrder::LorentzFirst).unwrap();
    let j = serde_json::to_value(v.formula).unwrap();
    assert_eq!(j, "lorentzFactored");
    assert_eq!(Formula::hyp(3).unwrap().tag(), "hyp3");
    assert_eq!(serde_json::to_value(Formula::Hyp8).unwrap(), "hyp8");
    assert!(Formula::hyp(0).is_none());
}

proptest! {
    #[test]
    fn factor_orders_agree(ts in 0i64..5, i in 0usize..5, j in 0usize..5, th in 0.0..PI, ph in 0.0..PI, ta in -1.5..1.5f64) {
        let s = h(ts);
        let d = s.dim();
        let (m, n) = (s.ladder().nth(i % d).unwrap(), s.ladder().nth(j % d).unwrap());
        let a = z_so14(s, m, n, th, ph, ta, FactorOrder::So4First).unwrap();
        let b = z_so14(s, m, n, th, ph, ta, FactorOrder::LorentzFirst).unwrap();
        prop_assert!((a - b).norm() < 1e-10 * (1.0 + a.norm()));
    }
}
