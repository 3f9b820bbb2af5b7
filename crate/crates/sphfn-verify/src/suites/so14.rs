use std::f64::consts::PI;

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use sphfn_core::cmatrix::CMatrix;
use sphfn_core::hypercomplex::{cartan_compose, CartanFamily, QuatEuler};
use sphfn_core::so14::*;
use sphfn_core::so4::z_so4;
use sphfn_core::{HalfInt, Result};

use super::{h, random_angles, weights};
use crate::report::{worst, Recorder};
use crate::{RunConfig, Suite, SuiteReport};

/// Largest entry difference between the spin-1/2 matrix and the Cartan
/// product.
pub(crate) fn spinor_deviation(rng: &mut ChaCha8Rng, samples: usize) -> Result<f64> {
    let mut w = 0.0;
    for _ in 0..samples {
        let g = random_angles(rng, 1.5);
        let t = rep_matrix_so14(h(1), &g, Prefactor::Ordered)?;
        w = worst(w, t.max_diff_2x2(&cartan_compose(&g, CartanFamily::Sp11)?));
    }
    Ok(w)
}

/// Relative gap between the addition sum and each admissible triple form on
/// a 5×5×5 grid, weights up to `max_twice/2`.
pub(crate) fn forms_residual(max_twice: i64) -> Result<f64> {
    let mut w = 0.0;
    for (s, m, n) in weights(max_twice) {
        for i in 0..5 {
            for j in 0..5 {
                for k in 0..5 {
                    let (th, ph, ta) = (0.1 + 0.7 * i as f64, 0.05 + 0.75 * j as f64, -1.0 + 0.5 * k as f64);
                    let z = z_so14(s, m, n, th, ph, ta, FactorOrder::So4First)?;
                    for form in 1..=8 {
                        let zf = z_so14_hyp(s, m, n, th, ph, ta, form)?;
                        w = worst(w, (z - zf).norm() / (1.0 + z.norm()));
                    }
                }
            }
        }
    }
    Ok(w)
}

/// `τ = 0` against SO(4) and `ϕ = 0` against the SO0(1,3) function.
pub(crate) fn degeneration_residuals(max_twice: i64) -> Result<(f64, f64)> {
    let (mut a, mut b) = (0.0, 0.0);
    for (s, m, n) in weights(max_twice) {
        for (th, ph) in [(0.2, 0.9), (1.7, 2.4), (3.0, 0.1)] {
            let z = z_so14(s, m, n, th, ph, 0.0, FactorOrder::So4First)?;
            a = worst(a, (z - z_so4(s, m, n, th, ph)?).norm());
        }
        for (th, ta) in [(0.2, 0.9), (1.7, -1.4), (2.9, 0.3)] {
            let z = z_so14(s, m, n, th, 0.0, ta, FactorOrder::So4First)?;
            b = worst(b, (z - z_so13(s, m, n, th, ta)?).norm());
        }
    }
    Ok((a, b))
}

const ODE_POINTS: [(f64, f64, f64); 3] = [(0.4, 0.3, 0.5), (1.2, 0.9, -0.4), (0.7, 1.8, 0.9)];

/// Relative θ^q-equation residual of the addition sum for `λ(σ)`.
pub(crate) fn addition_ode_residual(max_twice: i64, lambda: impl Fn(f64) -> f64) -> Result<f64> {
    let mut w = 0.0;
    for (s, m, n) in weights(max_twice) {
        for &(th, ph, ta) in &ODE_POINTS {
            let r = ode_residual_so14(s, m, n, th, ph, ta, lambda(s.value()))?;
            let z = z_so14(s, m, n, th, ph, ta, FactorOrder::So4First)?.norm();
            w = worst(w, r / (1.0 + z));
        }
    }
    Ok(w)
}

/// Residual of the closed-form particular solution for `λ(σ)`, integer
/// weights only, at interior points of `(-1, 1)`.
pub(crate) fn fuchs_ode_residual(max_twice: i64, lambda: impl Fn(f64) -> f64) -> Result<f64> {
    let mut w = 0.0;
    for (s, m, n) in weights(max_twice) {
        if !s.is_integer() {
            continue;
        }
        for z in [-0.6, -0.2, 0.3, 0.7] {
            let r = fuchs_residual(s, m, n, z, lambda(s.value()), 1e-4)?;
            let v = fuchs_solution(s, m, n, Complex64::new(z, 0.0), Complex64::new(1.0, 0.0))?.norm();
            w = worst(w, r / (1.0 + v));
        }
    }
    Ok(w)
}

fn complex_matrix(sigma: HalfInt, g: &QuatEuler<f64>) -> Result<CMatrix> {
    let idx: Vec<HalfInt> = sigma.ladder().collect();
    let mut out = CMatrix::zeros(idx.len());
    for (r, &m) in idx.iter().enumerate() {
        for (c, &n) in idx.iter().enumerate() {
            out.data[r * idx.len() + c] = matrix_element_so14_complex(sigma, m, n, g, Prefactor::Ordered)?;
        }
    }
    Ok(out)
}

pub fn run(cfg: &RunConfig, scale: f64) -> SuiteReport {
    let mut rec = Recorder::new("so14", scale);
    let mut rng = cfg.rng(Suite::So14);
    rec.check("spin-1/2 matrix equals the cartan product", spinor_deviation(&mut rng, cfg.samples), 1e-12);
    rec.check("triple hypergeometric forms (sigma <= 2)", forms_residual(4), 1e-10);
    match degeneration_residuals(4) {
        Ok((a, b)) => {
            rec.check("tau = 0 gives the SO(4) function", Ok(a), 1e-11);
            rec.check("phi = 0 gives the SO0(1,3) function", Ok(b), 1e-11);
        }
        Err(e) => rec.check("degenerations", Err(e), 1e-11),
    }

    let orders = (|| -> Result<f64> {
        let mut w = 0.0;
        for (s, m, n) in weights(4) {
            let g = random_angles(&mut rng, 1.5);
            let a = z_so14(s, m, n, g.theta, g.phi2, g.tau, FactorOrder::So4First)?;
            let b = z_so14(s, m, n, g.theta, g.phi2, g.tau, FactorOrder::LorentzFirst)?;
            let c = z_so14(s, m, n, g.theta + g.phi2, 0.0, g.tau, FactorOrder::So4First)?;
            w = worst(w, ((a - b).norm()).max((a - c).norm()) / (1.0 + a.norm()));
        }
        Ok(w)
    })();
    rec.check("kernel depends on theta + phi - i tau only", orders, 1e-11);

    let hom = (|| -> Result<f64> {
        let mut w = 0.0;
        for t in 0..=4 {
            let s = h(t);
            let th = |x: f64| complex_matrix(s, &QuatEuler { theta: x, ..QuatEuler::zero() });
            w = worst(w, th(0.4)?.mul(&th(1.1)?).max_diff(&th(1.5)?));
            let ta = |x: f64| complex_matrix(s, &QuatEuler { tau: x, ..QuatEuler::zero() });
            w = worst(w, ta(0.3)?.mul(&ta(-0.9)?).max_diff(&ta(-0.6)?));
        }
        Ok(w)
    })();
    rec.check("one-parameter families are homomorphisms", hom, 1e-11);

    rec.check("addition sum, lambda = sigma(sigma+1)", addition_ode_residual(4, |s| s * (s + 1.0)), 1e-4);
    rec.info(
        "addition sum, lambda = sigma(sigma+3)",
        addition_ode_residual(4, |s| s * (s + 3.0)),
        "alternative eigenvalue, reported only",
    );
    rec.info(
        "closed-form solution, lambda = sigma(sigma+3)",
        fuchs_ode_residual(4, |s| s * (s + 3.0)),
        "printed eigenvalue for the closed form, reported only",
    );
    rec.info(
        "closed-form solution, lambda = sigma(sigma+1)",
        fuchs_ode_residual(4, |s| s * (s + 1.0)),
        "alternative eigenvalue, reported only",
    );

    let zonal = (|| -> Result<f64> {
        let (th, ph, ta) = (0.3, 0.4, 0.6);
        let z = z_zonal_so14(h(2), th, ph, ta)?;
        Ok((z - Complex64::new(th + ph, -ta).cos()).norm().max((z_zonal_so14(h(0), 1.0, PI / 3.0, 0.5)? - 1.0).norm()))
    })();
    rec.check("zonal functions", zonal, 1e-13);
    rec.finish()
}
