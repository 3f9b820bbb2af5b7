use sphfn_core::liealg::*;
use sphfn_core::Matrix5;

use crate::report::{worst, Recorder};
use crate::{RunConfig, SuiteReport};

pub fn run(_cfg: &RunConfig, scale: f64) -> SuiteReport {
    let mut rec = Recorder::new("liealg", scale);
    for (name, r) in structure_residuals() {
        rec.check(format!("commutator {name}"), Ok(r), 1e-12);
    }
    let c = casimir_matrices::<f64>();
    rec.check("casimir F = -4 I", Ok((c.f + Matrix5::identity().scale(4.0)).max_abs()), 1e-12);
    rec.check("casimir W = 0", Ok(c.w.max_abs()), 1e-12);
    let central = GeneratorIndex::all().into_iter().map(|i| commutator(&c.f, &generator_at(i)).max_abs()).fold(0.0, worst);
    rec.check("casimir F is central", Ok(central), 1e-12);

    let alg = GeneratorIndex::all().into_iter().map(|i| generator_at::<f64>(i).algebra_residual()).fold(0.0, worst);
    rec.check("generators preserve the form infinitesimally", Ok(alg), 1e-15);

    let mut a_form = 0.0;
    let mut a_exp = 0.0;
    for a in [-1.5f64, -0.2, 0.4, 2.0] {
        let m = iwasawa_a(a);
        a_form = worst(a_form, m.form_residual() / a.cosh().powi(2));
        a_exp = worst(a_exp, (generator::<f64>(0, 4).unwrap().scale(a).exp() - m).max_abs() / a.cosh());
    }
    rec.check("abelian factor preserves the form", Ok(a_form), 1e-12);
    rec.check("abelian factor is exp of L04", Ok(a_exp), 1e-12);

    let (r, s, t) = (0.3, -0.7, 1.1);
    let l = |a, b| generator::<f64>(a, b).unwrap();
    let gen = (l(0, 1) + l(1, 4)).scale(t) + (l(0, 2) + l(2, 4)).scale(r) + (l(0, 3) + l(3, 4)).scale(s);
    let n = iwasawa_n(r, s, t);
    rec.check("nilpotent factor preserves the form", Ok(n.form_residual()), 1e-10);
    rec.check("nilpotent factor is exp of its generator", Ok((gen.exp() - n).max_abs()), 1e-12);
    let p = iwasawa_n(-1.0, 0.3, 0.8);
    rec.check("nilpotent factor is abelian", Ok((n * p - p * n).max_abs()), 1e-13);
    rec.info(
        "printed nilpotent factor form residual",
        Ok(iwasawa_n_printed(r, s, t).form_residual()),
        "last column as printed; the corrected factor is checked above",
    );

    let phys = physical_bracket_residuals();
    let count = phys.len();
    let w = phys.into_iter().map(|p| p.1).fold(0.0, worst);
    rec.check(format!("physical generator brackets ({count})"), Ok(w), 1e-13);
    rec.finish()
}
