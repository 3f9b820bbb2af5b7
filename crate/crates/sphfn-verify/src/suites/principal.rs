use num_complex::Complex64;
use sphfn_core::hypercomplex::QuatEuler;
use sphfn_core::principal::*;
use sphfn_core::so14::Prefactor;
use sphfn_core::so4::z_so4;
use sphfn_core::specfun::SeriesBudget;
use sphfn_core::Result;

use super::h;
use crate::report::{worst, Recorder};
use crate::{RunConfig, SuiteReport};

pub(crate) const RHOS: [f64; 3] = [0.3, 1.1, 2.7];

/// Relative gap between the explicit sum and each triple form for `l₀ ≤ 1`
/// on a 5×5×5 grid.
pub(crate) fn forms_residual(budget: &SeriesBudget) -> Result<f64> {
    let mut w = 0.0;
    for tl in 0..=2 {
        for rho in RHOS {
            let lab = PrincipalLabel::new(rho, h(tl));
            for m in lab.l0.ladder() {
                for n in lab.l0.ladder() {
                    for i in 0..5 {
                        for j in 0..5 {
                            for k in 0..5 {
                                let (th, ph, ta) =
                                    (0.1 + 0.7 * i as f64, 0.05 + 0.75 * j as f64, -1.0 + 0.75 * k as f64);
                                let z = z_principal(&lab, m, n, th, ph, ta, budget)?;
                                for form in 1..=8 {
                                    let zf = z_principal_hyp(&lab, m, n, th, ph, ta, form, budget)?;
                                    w = worst(w, (z - zf).norm() / (1.0 + z.norm()));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(w)
}

fn bracket(a: &SparseMatrix, b: &SparseMatrix, want: &SparseMatrix, k: Complex64, cols: &[usize]) -> f64 {
    a.commutator(b).lin(Complex64::new(1.0, 0.0), want, -k).max_abs_in_columns(cols)
}

pub fn run(cfg: &RunConfig, scale: f64) -> SuiteReport {
    let mut rec = Recorder::new("principal", scale);
    let budget = cfg.budget;

    let delta = (|| -> Result<f64> {
        let mut w = 0.0;
        for tl in 0..=4 {
            let lab = PrincipalLabel::new(0.9, h(tl));
            for m in lab.l0.ladder() {
                for n in lab.l0.ladder() {
                    let v = m_principal_with(&lab, m, n, &QuatEuler::zero(), Prefactor::Ordered, &budget)?;
                    let want = if m == n { 1.0 } else { 0.0 };
                    w = worst(w, (v - sphfn_core::HNumber::scalar(v.sig, want)).max_abs());
                }
            }
        }
        Ok(w)
    })();
    rec.check("identity element gives the kronecker delta", delta, 1e-12);

    let compact = (|| -> Result<f64> {
        let mut w = 0.0;
        for tl in 0..=3 {
            let lab = PrincipalLabel::new(1.3, h(tl));
            for m in lab.l0.ladder() {
                for n in lab.l0.ladder() {
                    let z = z_principal(&lab, m, n, 0.7, 1.9, 0.0, &budget)?;
                    w = worst(w, (z - z_so4(lab.l0, m, n, 0.7, 1.9)?).norm());
                }
            }
        }
        Ok(w)
    })();
    rec.check("zero rapidity gives the SO(4) function", compact, 1e-12);
    rec.check("triple hypergeometric forms (l0 <= 1)", forms_residual(&budget), 1e-8);

    let conj = (|| -> Result<f64> {
        let lab = PrincipalLabel::new(0.8, h(2));
        let g = QuatEuler { eps: 0.3, tau: 1.2, eps2: -0.4, omega: 0.2, ..QuatEuler::zero() };
        let mut w = 0.0;
        for m in lab.l0.ladder() {
            for n in lab.l0.ladder() {
                let a = m_principal_with(&lab, m, n, &g, Prefactor::Ordered, &budget)?;
                let b = m_principal_with(&lab.conjugate(), m, n, &g, Prefactor::Ordered, &budget)?;
                w = worst(w, (a.w - b.w).abs().max((a.x + b.x).abs()));
            }
        }
        Ok(w)
    })();
    rec.check("conjugated family on the real slice", conj, 1e-10);

    let third = (|| -> Result<f64> {
        let mut w = 0.0;
        for tm in [-2, 0, 1, 3] {
            let v = third_type_principal(0.7, h(tm), h(tm), &BoostAngles::default(), ThirdTypePhase::Real)?;
            w = worst(w, (v - 1.0).norm());
        }
        Ok(w)
    })();
    rec.check("third type at the origin", third, 1e-14);

    let tail = (|| -> Result<bool> {
        for (tm, tn) in [(0, 0), (2, 0), (0, 2), (1, -1)] {
            let mut prev = f64::INFINITY;
            for k in 0..=10 {
                let b = BoostAngles { tau: 5.0 + 0.5 * k as f64, ..Default::default() };
                let v = third_type_principal(0.9, h(tm), h(tn), &b, ThirdTypePhase::Real)?.norm();
                if v.is_nan() || v >= prev {
                    return Ok(false);
                }
                prev = v;
            }
        }
        Ok(true)
    })();
    rec.require("third type decays on tau in [5, 10]", tail);

    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut m_sector = 0.0;
    let mut vector = 0.0;
    let mut pp = 0.0;
    let mut p3p = 0.0;
    let mut failure = None;
    for tl in 0..=2 {
        let lab = PrincipalLabel::new(0.7, h(tl));
        let g = match dixmier_generators(&lab, h(tl + 6)) {
            Ok(g) => g,
            Err(e) => {
                failure = Some(e);
                break;
            }
        };
        let all: Vec<usize> = (0..g.basis.len()).collect();
        let int = g.interior();
        m_sector = [
            bracket(&g.m3, &g.m_plus, &g.m_plus, one, &all),
            bracket(&g.m3, &g.m_minus, &g.m_minus, -one, &all),
            bracket(&g.m_plus, &g.m_minus, &g.m3, 2.0 * one, &all),
        ]
        .into_iter()
        .fold(m_sector, worst);
        vector = [
            bracket(&g.m3, &g.p_plus, &g.p_plus, one, &int),
            bracket(&g.m3, &g.p_minus, &g.p_minus, -one, &int),
            bracket(&g.m3, &g.p3, &g.p3, zero, &int),
            bracket(&g.m_plus, &g.p_minus, &g.p3, 2.0 * one, &int),
            bracket(&g.m_plus, &g.p3, &g.p_plus, -one, &int),
            bracket(&g.m3, &g.p0, &g.p0, zero, &all),
            bracket(&g.m_plus, &g.p0, &g.p0, zero, &all),
        ]
        .into_iter()
        .fold(vector, worst);
        pp = worst(pp, bracket(&g.p_plus, &g.p_minus, &g.m3, 2.0 * one, &int));
        p3p = worst(p3p, bracket(&g.p3, &g.p_plus, &g.m_plus, one, &int));
    }
    match failure {
        Some(e) => rec.check("ladder generators", Err(e), 1e-12),
        None => {
            rec.check("ladder: rotation brackets", Ok(m_sector), 1e-12);
            rec.check("ladder: P is a vector operator, P0 a scalar", Ok(vector), 1e-12);
            rec.info("ladder: [P+, P-] - 2 M3", Ok(pp), "reported only");
            rec.info("ladder: [P3, P+] - M+", Ok(p3p), "reported only");
        }
    }
    rec.finish()
}
