use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sphfn_core::so4::*;
use sphfn_core::specfun::wigner_p;
use sphfn_core::Result;

use super::{h, weights};
use crate::report::{worst, Recorder};
use crate::{RunConfig, Suite, SuiteReport};

fn random_double(rng: &mut ChaCha8Rng) -> DoubleAngles {
    DoubleAngles {
        phi: rng.gen_range(0.0..2.0 * PI),
        vsig: rng.gen_range(0.0..2.0 * PI),
        theta: rng.gen_range(0.0..PI),
        phi2: rng.gen_range(0.0..PI),
        psi: rng.gen_range(-2.0 * PI..2.0 * PI),
        chi: rng.gen_range(-2.0 * PI..2.0 * PI),
    }
}

/// `|z_so4(l,m,n,θ,ϕ) − P^l_{mn}(cos(θ+ϕ))|` over `pairs` random angle pairs.
pub(crate) fn addition_residual(rng: &mut ChaCha8Rng, pairs: usize, max_twice: i64) -> Result<f64> {
    let mut w = 0.0;
    for _ in 0..pairs {
        let (th, ph) = (rng.gen_range(0.0..PI), rng.gen_range(0.0..PI));
        for (l, m, n) in weights(max_twice) {
            w = worst(w, (z_so4(l, m, n, th, ph)? - wigner_p(l, m, n, th + ph)?).norm());
        }
    }
    Ok(w)
}

pub(crate) fn unitarity_defect(rng: &mut ChaCha8Rng, samples: usize, max_twice: i64) -> Result<f64> {
    let mut w = 0.0;
    for _ in 0..samples {
        let g = random_double(rng);
        for t in 0..=max_twice {
            w = worst(w, rep_matrix_so4(h(t), &g)?.unitarity_defect());
        }
    }
    Ok(w)
}

/// Legendre residual with `λ = l(l+1)` at 20 interior points of `(0, 2π)`.
pub(crate) fn ode_residual(max_twice: i64) -> Result<f64> {
    let mut w = 0.0;
    for (l, m, n) in weights(max_twice) {
        let lambda = l.value() * (l.value() + 1.0);
        for k in 0..20 {
            let x = 0.1 + (2.0 * PI - 0.2) * (k as f64 + 0.5) / 20.0;
            if (x - PI).abs() < 0.05 {
                continue;
            }
            w = worst(w, ode_residual_so4(l, m, n, x, lambda)?);
        }
    }
    Ok(w)
}

pub fn run(cfg: &RunConfig, scale: f64) -> SuiteReport {
    let mut rec = Recorder::new("so4", scale);
    let mut rng = cfg.rng(Suite::So4);
    rec.check("addition theorem (l <= 3)", addition_residual(&mut rng, cfg.samples, 6), 1e-11);

    let forms = (|| -> Result<f64> {
        let mut w = 0.0;
        for (l, m, n) in weights(5) {
            for i in 0..5 {
                for j in 0..5 {
                    let (th, ph) = (0.1 + 0.7 * i as f64, 0.05 + 0.75 * j as f64);
                    let z = z_so4(l, m, n, th, ph)?;
                    for form in 1..=4 {
                        w = worst(w, (z - z_so4_hyp_form(l, m, n, th, ph, form)?).norm());
                    }
                }
            }
        }
        Ok(w)
    })();
    rec.check("hypergeometric forms match the sum", forms, 1e-11);
    rec.check("unitarity (l <= 2)", unitarity_defect(&mut rng, cfg.samples, 4), 1e-11);

    let hom = (|| -> Result<f64> {
        let mut w = 0.0;
        for t in 0..=4 {
            let at = |x: f64| rep_matrix_so4(h(t), &DoubleAngles { theta: x, ..Default::default() });
            w = worst(w, at(0.4)?.mul(&at(1.1)?).max_diff(&at(1.5)?));
        }
        Ok(w)
    })();
    rec.check("theta family is a homomorphism", hom, 1e-12);
    rec.check("legendre equation, lambda = l(l+1)", ode_residual(6), 1e-5);

    let conj = (|| -> Result<f64> {
        let mut w = 0.0;
        for (l, m, n) in weights(4) {
            let lambda = l.value() * (l.value() + 1.0);
            for x in [0.3, 1.0, 2.0, 2.9] {
                w = worst(w, ode_residual_so4_conj(l, m, n, x, lambda)?);
            }
        }
        Ok(w)
    })();
    rec.check("conjugate family, same equation", conj, 1e-5);

    let zonal = (|| -> Result<f64> {
        let mut w = 0.0;
        for t in [0, 2, 4, 6] {
            w = worst(w, (z_zonal_so4(h(t), 0.0, 0.0)? - 1.0).norm());
        }
        Ok(w)
    })();
    rec.check("zonal functions equal 1 at the identity", zonal, 1e-14);
    rec.finish()
}
