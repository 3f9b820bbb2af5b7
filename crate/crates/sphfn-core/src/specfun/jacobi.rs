use num_complex::Complex64;

use super::gamma::{factorial, rgamma_complex, sqrt_gamma};
use super::hyper::{gauss_2f1, gauss_2f1_with, SeriesBudget};
use super::{int_diff, Orientation};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::sum::{ComplexSum, KahanSum};

/// Finite-dimensional `𝔓^σ_{mn}(cosh τ)`.
pub fn jacobi_p(sigma: HalfInt, m: HalfInt, n: HalfInt, tau: f64) -> Result<f64> {
    HalfInt::check_triple(sigma, m, n)?;
    let half = tau / 2.0;
    let (ch, sh) = (half.cosh(), half.sinh());
    let sn = int_diff(sigma, n);
    let spn = int_diff(sigma, -n);
    let sm = int_diff(sigma, m);
    let spm = int_diff(sigma, -m);
    let nm = int_diff(n, m);
    let pre = (factorial(sn) * factorial(spn) * factorial(sm) * factorial(spm)).sqrt();
    let mut acc = KahanSum::new();
    for p in 0.max(-nm)..=sn.min(spm) {
        let e = nm + 2 * p;
        let den = factorial(p) * factorial(sn - p) * factorial(spm - p) * factorial(nm + p);
        acc.add(ch.powi((sigma.twice() - e) as i32) * sh.powi(e as i32) / den);
    }
    Ok(pre * acc.value())
}

/// `𝔓^σ_{mn}` as a function of `y = cosh τ`, `y >= 1`.
pub fn jacobi_p_y(sigma: HalfInt, m: HalfInt, n: HalfInt, y: f64) -> Result<f64> {
    if y.is_nan() || y < 1.0 {
        return Err(Error::Domain(format!("cosh tau = {y} < 1")));
    }
    jacobi_p(sigma, m, n, y.acosh())
}

/// Residual of `[(y²-1)d²/dy² + 2y d/dy - (m²+n²-2mny)/(y²-1) + λ]𝔓`
/// by central differences with step `h`.
pub fn jacobi_ode_residual(
    sigma: HalfInt,
    m: HalfInt,
    n: HalfInt,
    y: f64,
    lambda: f64,
    h: f64,
) -> Result<f64> {
    if y - h < 1.0 {
        return Err(Error::Domain(format!("y = {y} too close to 1 for step {h}")));
    }
    let f = |y| jacobi_p_y(sigma, m, n, y);
    let (fm, f0, fp) = (f(y - h)?, f(y)?, f(y + h)?);
    let d1 = (fp - fm) / (2.0 * h);
    let d2 = (fp - 2.0 * f0 + fm) / (h * h);
    let (mv, nv) = (m.value(), n.value());
    let q = y * y - 1.0;
    Ok(q * d2 + 2.0 * y * d1 - (mv * mv + nv * nv - 2.0 * mv * nv * y) / q * f0 + lambda * f0)
}

/// Single-factor hypergeometric form of the finite-dimensional `𝔓^σ_{mn}`.
pub fn jacobi_p_hyp(
    sigma: HalfInt,
    m: HalfInt,
    n: HalfInt,
    tau: f64,
    orient: Orientation,
) -> Result<f64> {
    HalfInt::check_triple(sigma, m, n)?;
    let (a, b) = oriented(m, n, orient)?;
    let d = int_diff(a, b);
    let ratio = factorial(int_diff(sigma, -a)) * factorial(int_diff(sigma, b))
        / (factorial(int_diff(sigma, a)) * factorial(int_diff(sigma, -b)));
    let half = tau / 2.0;
    let t = half.tanh();
    let f = gauss_2f1(
        Complex64::new((a - sigma).value(), 0.0),
        Complex64::new((-b - sigma).value(), 0.0),
        Complex64::new((d + 1) as f64, 0.0),
        t * t,
    )?;
    let power = half.cosh().powi(sigma.twice() as i32) * t.powi(d as i32);
    Ok(ratio.sqrt() / factorial(d) * power * f.value.re)
}

fn oriented(m: HalfInt, n: HalfInt, orient: Orientation) -> Result<(HalfInt, HalfInt)> {
    let (a, b) = match orient {
        Orientation::FirstGe => (m, n),
        Orientation::SecondGe => (n, m),
    };
    if a < b {
        return Err(Error::Index(format!("orientation {orient:?} needs {a} >= {b}")));
    }
    Ok((a, b))
}

fn check_pair(m: HalfInt, n: HalfInt) -> Result<()> {
    if (m.twice() - n.twice()) % 2 != 0 {
        return Err(Error::Index(format!("m = {m} and n = {n} differ by a half-integer")));
    }
    Ok(())
}

/// The principal-series weight `-3/2 + iρ`.
pub fn principal_sigma(rho: f64) -> Complex64 {
    Complex64::new(-1.5, rho)
}

pub fn jacobi_p_principal(rho: f64, m: HalfInt, n: HalfInt, tau: f64) -> Result<Complex64> {
    jacobi_p_sigma(principal_sigma(rho), m, n, tau, &SeriesBudget::default())
}

pub fn jacobi_p_principal_with(
    rho: f64,
    m: HalfInt,
    n: HalfInt,
    tau: f64,
    budget: &SeriesBudget,
) -> Result<Complex64> {
    jacobi_p_sigma(principal_sigma(rho), m, n, tau, budget)
}

/// `𝔓^σ_{mn}(cosh τ)` for complex weight by the infinite p-sum.
///
/// The first term is built from reciprocal gammas, later ones by the term
/// ratio so that no gamma overflows.
pub fn jacobi_p_sigma(
    sigma: Complex64,
    m: HalfInt,
    n: HalfInt,
    tau: f64,
    budget: &SeriesBudget,
) -> Result<Complex64> {
    check_pair(m, n)?;
    let (mv, nv) = (m.value(), n.value());
    let one = Complex64::new(1.0, 0.0);
    let pre = sqrt_gamma(sigma + 1.0 - nv)?
        * sqrt_gamma(sigma + 1.0 + nv)?
        * sqrt_gamma(sigma + 1.0 - mv)?
        * sqrt_gamma(sigma + 1.0 + mv)?;
    let half = tau / 2.0;
    let t = half.tanh();
    let x = t * t;
    let cosh_pow = (2.0 * sigma * half.cosh().ln()).exp();
    let nm = int_diff(n, m);
    let p0 = 0.max(-nm);
    let mut term = rgamma_complex(sigma - nv - p0 as f64 + one)
        * rgamma_complex(sigma + mv - p0 as f64 + one)
        * (t.powi((nm + 2 * p0) as i32) / (factorial(p0) * factorial(nm + p0)));
    let mut acc = ComplexSum::new();
    for (count, p) in (p0..).enumerate() {
        acc.add(term);
        if count + 1 >= budget.max_terms {
            return Err(Error::Convergence(budget.max_terms));
        }
        let pf = p as f64;
        let ratio = (sigma - nv - pf) * (sigma + mv - pf) * x / ((pf + 1.0) * ((nm + p) as f64 + 1.0));
        let next = term * ratio;
        if next.norm() == 0.0
            || (next.norm() < budget.rel_tol * acc.value().norm() && ratio.norm() < 1.0)
        {
            break;
        }
        term = next;
    }
    Ok(pre * cosh_pow * acc.value())
}

/// Single-factor hypergeometric form of `𝔓^σ_{mn}` for complex weight.
///
/// For `m >= n`:
/// `√Γ(σ+1-n)√Γ(σ+1+m) / (√Γ(σ+1-m)√Γ(σ+1+n)) / (m-n)!
///  · cosh^{2σ} tanh^{m-n} ₂F₁(m-σ, -n-σ; m-n+1; tanh²)`,
/// and the mirror image for `n >= m`.
pub fn jacobi_p_sigma_hyp(
    sigma: Complex64,
    m: HalfInt,
    n: HalfInt,
    tau: f64,
    orient: Orientation,
    budget: &SeriesBudget,
) -> Result<Complex64> {
    check_pair(m, n)?;
    let (a, b) = oriented(m, n, orient)?;
    let (av, bv) = (a.value(), b.value());
    let d = int_diff(a, b);
    let ratio = sqrt_gamma(sigma + 1.0 - bv)? * sqrt_gamma(sigma + 1.0 + av)?
        / (sqrt_gamma(sigma + 1.0 - av)? * sqrt_gamma(sigma + 1.0 + bv)?);
    let half = tau / 2.0;
    let t = half.tanh();
    let f = gauss_2f1_with(av - sigma, -bv - sigma, Complex64::new((d + 1) as f64, 0.0), t * t, budget)?;
    if f.truncated {
        return Err(Error::Convergence(budget.max_terms));
    }
    let cosh_pow = (2.0 * sigma * half.cosh().ln()).exp();
    Ok(ratio / factorial(d) * cosh_pow * t.powi(d as i32) * f.value)
}

pub fn jacobi_p_principal_hyp(
    rho: f64,
    m: HalfInt,
    n: HalfInt,
    tau: f64,
    orient: Orientation,
) -> Result<Complex64> {
    jacobi_p_sigma_hyp(principal_sigma(rho), m, n, tau, orient, &SeriesBudget::default())
}
