use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::{gamma_complex, rgamma_complex};
use crate::error::{Error, Result};
use crate::sum::ComplexSum;

/// Stopping rule for the non-terminating series.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesBudget {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesBudget {
    fn default() -> Self {
        SeriesBudget { rel_tol: 1e-16, max_terms: 20_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Series {
    pub value: Complex64,
    pub terms: usize,
    pub truncated: bool,
}

fn nonpositive_integer(z: Complex64) -> Option<i64> {
    (z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()).then_some(z.re as i64)
}

pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, x: f64) -> Result<Series> {
    gauss_2f1_with(a, b, c, x, &SeriesBudget::default())
}

/// Gauss ₂F₁ by its power series.
///
/// Terminates exactly when `a` or `b` is a nonpositive integer; otherwise
/// needs `|x| < 1` and stops once a decreasing term is below
/// `rel_tol·|sum|`. Hitting `max_terms` returns the partial sum flagged as
/// truncated.
pub fn gauss_2f1_with(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: f64,
    budget: &SeriesBudget,
) -> Result<Series> {
    gauss_2f1_complex(a, b, c, Complex64::new(x, 0.0), budget)
}

/// Same series at a complex argument.
///
/// For real `x` in `(0.75, 1)` with `c − a − b` non-integral the value comes
/// from the two series in `1 − x` instead.
pub fn gauss_2f1_complex(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: Complex64,
    budget: &SeriesBudget,
) -> Result<Series> {
    let terminating = nonpositive_integer(a).is_some() || nonpositive_integer(b).is_some();
    let s = c - a - b;
    let integral = s.im == 0.0 && s.re == s.re.round();
    if !terminating && x.im == 0.0 && x.re > 0.75 && x.re < 1.0 && !integral {
        return near_one(a, b, c, x.re, budget);
    }
    power_series(a, b, c, x, budget)
}

fn near_one(a: Complex64, b: Complex64, c: Complex64, x: f64, budget: &SeriesBudget) -> Result<Series> {
    let one = Complex64::new(1.0, 0.0);
    let y = Complex64::new(1.0 - x, 0.0);
    let s = c - a - b;
    let gc = gamma_complex(c)?;
    let f1 = power_series(a, b, one - s, y, budget)?;
    let f2 = power_series(c - a, c - b, one + s, y, budget)?;
    let k1 = gc * gamma_complex(s)? * rgamma_complex(c - a) * rgamma_complex(c - b);
    let k2 = gc * gamma_complex(-s)? * rgamma_complex(a) * rgamma_complex(b);
    let value = k1 * f1.value + k2 * y.powc(s) * f2.value;
    Ok(Series {
        value,
        terms: f1.terms + f2.terms,
        truncated: f1.truncated || f2.truncated,
    })
}

fn power_series(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: Complex64,
    budget: &SeriesBudget,
) -> Result<Series> {
    let terminating = nonpositive_integer(a).is_some() || nonpositive_integer(b).is_some();
    if !terminating && x.norm() >= 1.0 {
        return Err(Error::Divergence(x.norm()));
    }
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    if x == zero {
        return Ok(Series { value: one, terms: 1, truncated: false });
    }
    let mut sum = ComplexSum::new();
    sum.add(one);
    let mut term = one;
    let mut n = 0usize;
    loop {
        let nf = n as f64;
        let (an, bn, cn) = (a + nf, b + nf, c + nf);
        if an == zero || bn == zero {
            return Ok(Series { value: sum.value(), terms: n + 1, truncated: false });
        }
        if nonpositive_integer(cn) == Some(0) {
            return Err(Error::Pole(format!("c + {n} = 0 in 2F1 before termination")));
        }
        let next = term * an * bn / (cn * (nf + 1.0)) * x;
        sum.add(next);
        n += 1;
        if !terminating {
            let s = sum.value().norm();
            if next.norm() <= budget.rel_tol * s && next.norm() <= term.norm() {
                return Ok(Series { value: sum.value(), terms: n + 1, truncated: false });
            }
            if n >= budget.max_terms {
                return Ok(Series { value: sum.value(), terms: n + 1, truncated: true });
            }
        }
        term = next;
    }
}
