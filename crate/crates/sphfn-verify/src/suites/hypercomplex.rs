use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sphfn_core::hypercomplex::*;
use sphfn_core::{HMatrix2, HNumber, Result};

use super::random_angles;
use crate::report::{worst, Recorder};
use crate::{RunConfig, Suite, SuiteReport};

const A: Signature = Signature::ANTI;

fn rand_h(rng: &mut ChaCha8Rng, sig: Signature) -> HNumber {
    Hyper::new(sig, rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn exp_series(x: &HNumber) -> HNumber {
    let mut term = HNumber::one(x.sig);
    let mut sum = term;
    for k in 1..40 {
        term = (term * *x).scale(1.0 / k as f64);
        sum = sum + term;
    }
    sum
}

pub fn run(cfg: &RunConfig, scale: f64) -> SuiteReport {
    let mut rec = Recorder::new("hypercomplex", scale);
    let mut rng = cfg.rng(Suite::Hypercomplex);
    let n = cfg.samples;

    let (i, j, k, one) = (HNumber::i(A), HNumber::j(A), HNumber::k(A), HNumber::one(A));
    rec.require(
        "unit table",
        Ok(i * j == k
            && j * k == -i
            && k * i == j
            && i * i == -one
            && j * j == one
            && k * k == one
            && h_mul(&i, &HNumber::i(Signature::HAMILTON)).is_err()),
    );

    let mut assoc = 0.0;
    let mut conj = 0.0;
    let mut norm = 0.0;
    for _ in 0..n {
        let (p, q, r) = (rand_h(&mut rng, A), rand_h(&mut rng, A), rand_h(&mut rng, A));
        assoc = worst(assoc, ((p * q) * r - p * (q * r)).max_abs());
        conj = worst(conj, ((p * q).conj() - q.conj() * p.conj()).max_abs());
        let nq = q * q.conj();
        norm = worst(norm, nq.x.abs().max(nq.y.abs()).max(nq.z.abs()));
    }
    rec.check("associativity", Ok(assoc), 1e-14);
    rec.check("conjugation reverses products", Ok(conj), 1e-14);
    rec.check("q conj(q) is scalar", Ok(norm), 1e-14);

    let mut series = 0.0;
    let mut inverse = 0.0;
    for _ in 0..n {
        let x = rand_h(&mut rng, A).scale(2.0);
        let e = h_exp(&x);
        series = worst(series, (e - exp_series(&x)).max_abs() / (1.0 + e.max_abs()));
        let p = x.pure();
        inverse = worst(inverse, (h_exp(&p) * h_exp(&-p) - one).max_abs());
    }
    rec.check("exp matches power series", Ok(series), 1e-12);
    rec.check("exp(x) exp(-x) = 1", Ok(inverse), 1e-12);
    rec.check("exp(i pi) = -1", Ok((h_exp(&i.scale(std::f64::consts::PI)) + one).max_abs()), 1e-15);
    rec.require("1 + j has no inverse", Ok(h_inv(&(one + j)).is_err()));

    let degen = (|| -> Result<f64> {
        let mut w = 0.0;
        for _ in 0..n {
            let g = random_angles(&mut rng, 2.0);
            let lor = QuatEuler { vsig: 0.0, phi2: 0.0, chi: 0.0, omega: 0.0, ..g };
            w = worst(w, cartan_compose(&lor, CartanFamily::Sl2c)?.max_diff(&cartan_compose(&lor, CartanFamily::Sp11)?));
            let cpt = QuatEuler { tau: 0.0, eps: 0.0, eps2: 0.0, omega: 0.0, vsig: 0.0, chi: 0.0, ..g };
            w = worst(w, cartan_compose(&cpt, CartanFamily::Spin4)?.max_diff(&cartan_compose(&cpt, CartanFamily::Sp11)?));
            let su = QuatEuler { phi2: 0.0, ..cpt };
            w = worst(w, cartan_compose(&su, CartanFamily::Su2)?.max_diff(&cartan_compose(&su, CartanFamily::Spin4)?));
        }
        Ok(w)
    })();
    rec.check("cartan families degenerate into sp11", degen, 1e-12);

    let identity = cartan_compose(&QuatEuler::zero(), CartanFamily::Sp11).map(|m| m.max_diff(&HMatrix2::identity(A)));
    rec.check("sp11 at zero angles is the identity", identity, 1e-15);

    let mobius = (|| -> Result<f64> {
        let mut w = 0.0;
        let mut done = 0;
        while done < n {
            let g1 = random_angles(&mut rng, 1.0);
            let g2 = random_angles(&mut rng, 1.0);
            let m1 = cartan_compose(&g1, CartanFamily::Sp11)?;
            let m2 = cartan_compose(&g2, CartanFamily::Sp11)?;
            let z = rand_h(&mut rng, A).scale(0.5);
            let d2 = m2.c * z + m2.d;
            if d2.norm().abs() < 0.1 {
                continue;
            }
            let w2 = fractional_linear(&m2, &z)?;
            let d1 = m1.c * w2 + m1.d;
            if d1.norm().abs() < 0.1 {
                continue;
            }
            let lhs = fractional_linear(&m1.try_mul(&m2)?, &z)?;
            let rhs = fractional_linear(&m1, &w2)?;
            w = worst(w, (lhs - rhs).max_abs() / (1.0 + rhs.max_abs()));
            done += 1;
        }
        Ok(w)
    })();
    rec.check("fractional linear action composes", mobius, 1e-8);

    rec.require("identity is in sp11", sp11_membership(&HMatrix2::identity(A), 1e-12).map(|r| r.is_member));
    for which in Subgroup::ALL {
        let r = sp11_membership(&subgroup(which, 0.7), 1e-12).map(|r| r.residuals.iter().map(|p| p.1).fold(0.0, worst));
        rec.info(format!("sp11 residual of subgroup {}", which.name()), r, "quaternion-conjugation norm");
        let s = sp11_membership(&subgroup(which, 0.7), 1e-12)
            .map(|r| r.split_residuals.iter().map(|p| p.1).fold(0.0, worst));
        rec.info(format!("split-norm residual of subgroup {}", which.name()), s, "split norm");
    }
    let g = random_angles(&mut rng, 1.0);
    let prod = cartan_compose(&g, CartanFamily::Sp11)
        .and_then(|m| sp11_membership(&m, 1e-12))
        .map(|r| r.residuals.iter().map(|p| p.1).fold(0.0, worst));
    rec.info("sp11 residual of a random cartan product", prod, "quaternion-conjugation norm");

    rec.finish()
}
