use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde_json::json;
use sphfn_core::hyperboloid::{
    coeffs_from_entries, entries_from_coeffs, fourier_coefficient, m_function, synthesize, Branch, CoeffEntry,
    CoeffKey, H4Point, QuadratureGrid, SpectrumConfig,
};
use sphfn_core::hypercomplex::QuatEuler;
use sphfn_core::principal::{m_principal, m_principal_hyp, PrincipalLabel};
use sphfn_core::so14::{matrix_element_so14, z_so13, z_so14, z_so14_hyp, FactorOrder, Formula, Prefactor};
use sphfn_core::so4::{z_so4, z_so4_hyp_form};
use sphfn_core::specfun::jacobi_p;
use sphfn_core::{HNumber, HalfInt};
use sphfn_verify::{RunConfig, Suite};

use crate::args::*;
use crate::output::{csv, linspace, num};
use crate::{CliError, Outcome, EXIT_NUMERIC, EXIT_OK, EXIT_SUITE};

type Res<T> = Result<T, CliError>;

pub fn dispatch(cmd: &Command) -> Res<Outcome> {
    let stdout = match cmd {
        Command::Eval { what } => eval(what)?,
        Command::Table(a) => table(a)?,
        Command::Verify(a) => return verify(a),
        Command::Spectrum(a) => spectrum(a)?,
        Command::Expand(a) => expand(a)?,
    };
    Ok(Outcome { stdout, code: EXIT_OK })
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Res<T> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", path.display())))
}

fn finite(c: Complex64, what: &str) -> Res<Complex64> {
    if c.re.is_finite() && c.im.is_finite() {
        Ok(c)
    } else {
        Err(CliError::NonFinite(what.to_string()))
    }
}

fn finite_h(q: HNumber, what: &str) -> Res<HNumber> {
    if q.is_finite() {
        Ok(q)
    } else {
        Err(CliError::NonFinite(what.to_string()))
    }
}

fn prefactor(c: Conv) -> Prefactor {
    match c {
        Conv::Ordered => Prefactor::Ordered,
        Conv::Combined => Prefactor::Combined,
    }
}

/// One kernel value and the formula that produced it.
fn kernel(group: Group, w: &Weights, theta: f64, phi2: f64, tau: f64, form: Option<usize>, order: Order) -> Res<(Complex64, Formula)> {
    let (l, m, n) = (w.l, w.m, w.n);
    let v = match (group, form) {
        (Group::So4, None) => (z_so4(l, m, n, theta, phi2)?, Formula::AdditionSum),
        (Group::So4, Some(f)) => {
            (z_so4_hyp_form(l, m, n, theta, phi2, f)?, Formula::hyp(f).ok_or_else(|| bad_form(f))?)
        }
        (Group::So13, None) => (z_so13(l, m, n, theta, tau)?, Formula::AdditionSum),
        (Group::So13, Some(_)) => return Err(CliError::Usage("so13 has no hypergeometric forms".into())),
        (Group::So14, None) => {
            let ord = match order {
                Order::So4First => FactorOrder::So4First,
                Order::LorentzFirst => FactorOrder::LorentzFirst,
            };
            let f = if ord == FactorOrder::So4First { Formula::AdditionSum } else { Formula::LorentzFactored };
            (z_so14(l, m, n, theta, phi2, tau, ord)?, f)
        }
        (Group::So14, Some(f)) => {
            (z_so14_hyp(l, m, n, theta, phi2, tau, f)?, Formula::hyp(f).ok_or_else(|| bad_form(f))?)
        }
    };
    Ok((finite(v.0, "kernel value")?, v.1))
}

fn bad_form(f: usize) -> CliError {
    CliError::Numeric(sphfn_core::Error::Index(format!("form {f}")))
}

fn eval(what: &Eval) -> Res<String> {
    let body = match what {
        Eval::Zfn(a) => {
            let (v, f) = kernel(a.group, &a.w, a.theta, a.phi2, a.tau, a.form, a.order)?;
            json!({ "re": v.re, "im": v.im, "formula": f.tag() })
        }
        Eval::Principal(a) => {
            let g: QuatEuler<f64> = read_json(&a.angles)?;
            let mut label = PrincipalLabel::new(a.rho, a.l0);
            label.conjugated = a.conjugated;
            let conv = prefactor(a.conv);
            let q = match a.form {
                None => m_principal(&label, a.m, a.n, &g, conv)?,
                Some(f) => m_principal_hyp(&label, a.m, a.n, &g, f, conv)?,
            };
            serde_json::to_value(finite_h(q, "matrix element")?).expect("hypercomplex serializes")
        }
        Eval::Element(a) => {
            let g: QuatEuler<f64> = read_json(&a.angles)?;
            let q = matrix_element_so14(a.w.l, a.w.m, a.w.n, &g, prefactor(a.conv))?;
            serde_json::to_value(finite_h(q, "matrix element")?).expect("hypercomplex serializes")
        }
    };
    Ok(format!("{body}\n"))
}

fn table(a: &TableArgs) -> Res<String> {
    if a.grid == 0 {
        return Err(CliError::Usage("--grid must be positive".into()));
    }
    HalfInt::check_triple(a.w.l, a.w.m, a.w.n)?;
    let ang = linspace(0.0, std::f64::consts::PI, a.grid);
    let taus = match a.group {
        Group::So4 => vec![0.0],
        _ => linspace(a.tau_min, a.tau_max, a.grid),
    };
    let phis = match a.group {
        Group::So13 => vec![0.0],
        _ => ang.clone(),
    };
    let mut idx = Vec::new();
    for i in 0..ang.len() {
        for j in 0..phis.len() {
            for k in 0..taus.len() {
                idx.push((i, j, k));
            }
        }
    }
    let mut rows: Vec<((usize, usize, usize), Complex64, Formula)> = idx
        .par_iter()
        .map(|&(i, j, k)| {
            kernel(a.group, &a.w, ang[i], phis[j], taus[k], a.form, Order::So4First).map(|(v, f)| ((i, j, k), v, f))
        })
        .collect::<Res<_>>()?;
    rows.sort_by_key(|r| r.0);

    let (l, m, n) = (a.w.l.to_string(), a.w.m.to_string(), a.w.n.to_string());
    if a.format == Format::Json {
        let v: Vec<_> = rows
            .iter()
            .map(|&((i, j, k), v, f)| {
                json!({ "l": a.w.l, "m": a.w.m, "n": a.w.n, "theta": ang[i], "phi2": phis[j], "tau": taus[k],
                        "re": v.re, "im": v.im, "formula": f.tag() })
            })
            .collect();
        return Ok(format!("{}\n", serde_json::Value::Array(v)));
    }
    Ok(match a.group {
        Group::So4 => csv(
            "l,m,n,theta,phi2,re,im",
            rows.iter().map(|&((i, j, _), v, _)| {
                vec![l.clone(), m.clone(), n.clone(), num(ang[i]), num(phis[j]), num(v.re), num(v.im)]
            }),
        ),
        Group::So13 => csv(
            "sigma,m,n,theta,tau,re,im,formula",
            rows.iter().map(|&((i, _, k), v, f)| {
                vec![l.clone(), m.clone(), n.clone(), num(ang[i]), num(taus[k]), num(v.re), num(v.im), f.tag().into()]
            }),
        ),
        Group::So14 => csv(
            "sigma,m,n,theta,phi2,tau,re,im,formula",
            rows.iter().map(|&((i, j, k), v, f)| {
                vec![
                    l.clone(),
                    m.clone(),
                    n.clone(),
                    num(ang[i]),
                    num(phis[j]),
                    num(taus[k]),
                    num(v.re),
                    num(v.im),
                    f.tag().into(),
                ]
            }),
        ),
    })
}

fn verify(a: &VerifyArgs) -> Res<Outcome> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse().map_err(CliError::Usage)?]
    };
    let mut cfg = match &a.config {
        Some(p) => read_json::<RunConfig>(p)?,
        None => RunConfig::default(),
    };
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Some(n) = a.samples {
        cfg.samples = n;
    }
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let report = sphfn_verify::run(&suites, &cfg)?;
    let code = if report.has_error() {
        EXIT_NUMERIC
    } else if report.passed {
        EXIT_OK
    } else {
        EXIT_SUITE
    };
    Ok(Outcome { stdout: format!("{}\n", report.to_json()), code })
}

fn spectrum(a: &SpectrumArgs) -> Res<String> {
    let cfg = SpectrumConfig { m1: a.m1, m2: a.m2, e2: a.e2 };
    let branch = match a.branch {
        BranchArg::Hydrogen => Branch::Hydrogen,
        BranchArg::Antihydrogen => Branch::Antihydrogen,
    };
    let levels = sphfn_core::hyperboloid::bohr_levels(&cfg, a.nmax, branch)?;
    if levels.iter().any(|v| !v.is_finite()) {
        return Err(CliError::NonFinite("spectrum".into()));
    }
    Ok(format!("{}\n", serde_json::to_string(&levels).expect("floats serialize")))
}

/// `name=start:stop:count` axes.
fn parse_grid(spec: &str) -> Res<[Vec<f64>; 4]> {
    let mut axes = [vec![0.0], vec![0.0], vec![0.0], vec![0.0]];
    let bad = |s: &str| CliError::Usage(format!("bad grid axis {s:?}; expected name=start:stop:count"));
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, range) = part.split_once('=').ok_or_else(|| bad(part))?;
        let slot = match name.trim() {
            "eps" => 0,
            "tau" => 1,
            "eps2" => 2,
            "omega" => 3,
            _ => return Err(bad(part)),
        };
        let f: Vec<&str> = range.split(':').collect();
        let pts = match f.as_slice() {
            [v] => vec![v.trim().parse::<f64>().map_err(|_| bad(part))?],
            [a, b, n] => {
                let a: f64 = a.trim().parse().map_err(|_| bad(part))?;
                let b: f64 = b.trim().parse().map_err(|_| bad(part))?;
                let n: usize = n.trim().parse().map_err(|_| bad(part))?;
                if n == 0 {
                    return Err(bad(part));
                }
                linspace(a, b, n)
            }
            _ => return Err(bad(part)),
        };
        axes[slot] = pts;
    }
    Ok(axes)
}

fn expand(a: &ExpandArgs) -> Res<String> {
    let entries: Vec<CoeffEntry> = read_json(&a.coeffs)?;
    let map = coeffs_from_entries(&entries);
    for &(s, m, n) in map.keys() {
        HalfInt::check_triple(s, m, n)?;
    }
    let sigma_max = a.sigma_max.or_else(|| map.keys().map(|k| k.0).max()).unwrap_or(HalfInt::ZERO);
    if a.reproject {
        return reproject(&map, sigma_max, a);
    }
    let axes = parse_grid(&a.grid)?;
    let mut pts = Vec::new();
    for (i, &eps) in axes[0].iter().enumerate() {
        for (j, &tau) in axes[1].iter().enumerate() {
            for (k, &eps2) in axes[2].iter().enumerate() {
                for (l, &omega) in axes[3].iter().enumerate() {
                    pts.push(([i, j, k, l], H4Point { eps, tau, eps2, omega }));
                }
            }
        }
    }
    let mut rows: Vec<([usize; 4], H4Point, Complex64)> = pts
        .par_iter()
        .map(|&(ix, x)| {
            x.validate()?;
            let v = synthesize(&map, &x, sigma_max)?;
            Ok((ix, x, finite(v, "synthesized value")?))
        })
        .collect::<Res<_>>()?;
    rows.sort_by_key(|r| r.0);
    Ok(csv(
        "eps,tau,eps2,omega,re,im",
        rows.iter().map(|(_, x, v)| vec![num(x.eps), num(x.tau), num(x.eps2), num(x.omega), num(v.re), num(v.im)]),
    ))
}

fn reproject(map: &BTreeMap<CoeffKey, Complex64>, sigma_max: HalfInt, a: &ExpandArgs) -> Res<String> {
    let grid = QuadratureGrid::new(a.nodes, a.t_tau, a.t_exp)?;
    let terms: Vec<(CoeffKey, Complex64)> =
        map.iter().filter(|(k, _)| k.0 <= sigma_max).map(|(&k, &c)| (k, c)).collect();
    // the τ-factor of every term on every τ node, keyed by the node's bits
    let mut jac: BTreeMap<u64, Vec<f64>> = BTreeMap::new();
    for &(tau, _) in &grid.tau_rule {
        let v = terms.iter().map(|&((s, m, n), _)| jacobi_p(s, m, n, tau)).collect::<Result<Vec<_>, _>>()?;
        jac.insert(tau.to_bits(), v);
    }
    let f = |x: &H4Point| -> Complex64 {
        match jac.get(&x.tau.to_bits()) {
            Some(js) => terms
                .iter()
                .zip(js)
                .map(|(&((_, m, n), c), &j)| c * ((-m.value() * x.eps - n.value() * (x.eps2 + x.omega)).exp() * j))
                .sum(),
            None => terms
                .iter()
                .map(|&((s, m, n), c)| c * m_function(s, m, n, x).unwrap_or(f64::NAN))
                .sum(),
        }
    };
    let mut out = BTreeMap::new();
    for &(key, _) in &terms {
        let q = fourier_coefficient(f, key.0, key.1, key.2, &grid)?;
        out.insert(key, finite(q.value, "coefficient")?);
    }
    Ok(format!("{}\n", serde_json::to_string_pretty(&entries_from_coeffs(&out)).expect("entries serialize")))
}
