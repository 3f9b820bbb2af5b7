//! Harmonic analysis on the upper sheet H⁴₊: quadrature, Fourier-type
//! coefficients and synthesis, Fock projection and the mass spectrum.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::specfun::jacobi_p;
use crate::sum::ComplexSum;

/// Coordinates `(ε, τ, ε′, ω)` on the upper sheet.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct H4Point {
    pub eps: f64,
    pub tau: f64,
    pub eps2: f64,
    pub omega: f64,
}

impl H4Point {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("eps", self.eps), ("tau", self.tau), ("eps2", self.eps2), ("omega", self.omega)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Range { name, value: v, range: "[0, inf)" });
            }
        }
        Ok(())
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pm = if n == 0 { 0.0 } else { p0 };
            dp = n as f64 * (x * pn - pm) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out.reverse();
    out
}

fn mapped(rule: &[(f64, f64)], lo: f64, hi: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
    let (mid, half) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
    rule.iter().map(move |&(x, w)| (mid + half * x, half * w))
}

/// Product rule for `∫ f sinh τ dτ dε dε′ dω` over `[0,T_tau]×[0,T_exp]³`.
///
/// The τ axis is split into unit panels; on each panel the nodes are
/// Gauss–Legendre in `y = cosh τ`, which absorbs the `sinh τ` weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureGrid {
    pub nodes: usize,
    pub t_tau: f64,
    pub t_exp: f64,
    /// `(τ, weight)` with the `sinh τ` factor included.
    pub tau_rule: Vec<(f64, f64)>,
    pub exp_rule: Vec<(f64, f64)>,
}

impl Default for QuadratureGrid {
    fn default() -> Self {
        QuadratureGrid::new(64, 12.0, 30.0).expect("default caps are valid")
    }
}

impl QuadratureGrid {
    pub fn new(nodes: usize, t_tau: f64, t_exp: f64) -> Result<Self> {
        if nodes == 0 {
            return Err(Error::Domain("quadrature needs at least one node".into()));
        }
        for (name, v) in [("t_tau", t_tau), ("t_exp", t_exp)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Range { name, value: v, range: "(0, inf)" });
            }
        }
        let gl = gauss_legendre(nodes);
        let mut tau_rule = Vec::new();
        let panels = t_tau.ceil() as usize;
        for k in 0..panels {
            let (a, b) = (k as f64, ((k + 1) as f64).min(t_tau));
            for (y, w) in mapped(&gl, a.cosh(), b.cosh()) {
                tau_rule.push((y.acosh(), w));
            }
        }
        let exp_rule = mapped(&gl, 0.0, t_exp).collect();
        Ok(QuadratureGrid { nodes, t_tau, t_exp, tau_rule, exp_rule })
    }

    pub fn node_count(&self) -> usize {
        self.tau_rule.len() * self.exp_rule.len().pow(3)
    }

    /// `∫ f(x) sinh τ dτ dε dε′ dω`, each τ slice summed with compensation
    /// and the slices reduced in order.
    pub fn integrate<F>(&self, f: F) -> Complex64
    where
        F: Fn(&H4Point) -> Complex64 + Sync,
    {
        self.integrate_indexed(|_, x| f(x))
    }

    /// As [`integrate`](Self::integrate), also passing the node indices
    /// `[τ, ε, ε′, ω]` so callers can reuse per-axis tables.
    pub fn integrate_indexed<F>(&self, f: F) -> Complex64
    where
        F: Fn([usize; 4], &H4Point) -> Complex64 + Sync,
    {
        let slices: Vec<Complex64> = self
            .tau_rule
            .par_iter()
            .enumerate()
            .map(|(it, &(tau, wt))| {
                let mut acc = ComplexSum::new();
                for (ie, &(eps, we)) in self.exp_rule.iter().enumerate() {
                    for (ie2, &(eps2, we2)) in self.exp_rule.iter().enumerate() {
                        for (io, &(omega, wo)) in self.exp_rule.iter().enumerate() {
                            let x = H4Point { eps, tau, eps2, omega };
                            acc.add(f([it, ie, ie2, io], &x) * (we * we2 * wo));
                        }
                    }
                }
                acc.value() * wt
            })
            .collect();
        slices.into_iter().collect::<ComplexSum>().value()
    }
}

/// `e^{−mε} 𝔓^σ_{mn}(cosh τ) e^{−n(ε′+ω)}`.
pub fn m_function(sigma: HalfInt, m: HalfInt, n: HalfInt, x: &H4Point) -> Result<f64> {
    let p = jacobi_p(sigma, m, n, x.tau)?;
    Ok((-m.value() * x.eps - n.value() * (x.eps2 + x.omega)).exp() * p)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quadrature {
    pub value: Complex64,
    /// Difference from the same caps at half the node count.
    pub error_estimate: f64,
}

/// `(−1)^n(2σ+3)/16π²`.
pub fn coefficient_normalization(sigma: HalfInt, n: HalfInt) -> Result<f64> {
    if !n.is_integer() {
        return Err(Error::Index(format!("sign (-1)^n needs integral n, got {n}")));
    }
    let sign = if n.to_int().rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    Ok(sign * (2.0 * sigma.value() + 3.0) / (16.0 * PI * PI))
}

fn coefficient_on<F>(f: &F, sigma: HalfInt, m: HalfInt, n: HalfInt, grid: &QuadratureGrid) -> Result<Complex64>
where
    F: Fn(&H4Point) -> Complex64 + Sync,
{
    let norm = coefficient_normalization(sigma, n)?;
    let jac: Vec<f64> =
        grid.tau_rule.iter().map(|&(tau, _)| jacobi_p(sigma, m, n, tau)).collect::<Result<_>>()?;
    let (mv, nv) = (m.value(), n.value());
    let em: Vec<f64> = grid.exp_rule.iter().map(|&(e, _)| (-mv * e).exp()).collect();
    let en: Vec<f64> = grid.exp_rule.iter().map(|&(e, _)| (-nv * e).exp()).collect();
    let integral = grid.integrate_indexed(|[it, ie, ie2, io], x| f(x) * (em[ie] * jac[it] * en[ie2] * en[io]));
    Ok(integral * norm)
}

/// `α^m_{σn} = (−1)^n(2σ+3)/16π² ∫ F 𝔐^σ_{mn} sinh τ dτ dε dε′ dω`.
pub fn fourier_coefficient<F>(f: F, sigma: HalfInt, m: HalfInt, n: HalfInt, grid: &QuadratureGrid) -> Result<Quadrature>
where
    F: Fn(&H4Point) -> Complex64 + Sync,
{
    HalfInt::check_triple(sigma, m, n)?;
    let value = coefficient_on(&f, sigma, m, n, grid)?;
    let coarse = QuadratureGrid::new((grid.nodes / 2).max(1), grid.t_tau, grid.t_exp)?;
    let rough = coefficient_on(&f, sigma, m, n, &coarse)?;
    Ok(Quadrature { value, error_estimate: (value - rough).norm() })
}

/// Key `(σ, m, n)` of a coefficient map.
pub type CoeffKey = (HalfInt, HalfInt, HalfInt);

/// One entry of a coefficient file.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub sigma: HalfInt,
    pub m: HalfInt,
    pub n: HalfInt,
    pub re: f64,
    pub im: f64,
}

pub fn coeffs_from_entries(entries: &[CoeffEntry]) -> BTreeMap<CoeffKey, Complex64> {
    let mut out = BTreeMap::new();
    for e in entries {
        *out.entry((e.sigma, e.m, e.n)).or_insert(Complex64::new(0.0, 0.0)) += Complex64::new(e.re, e.im);
    }
    out
}

pub fn entries_from_coeffs(map: &BTreeMap<CoeffKey, Complex64>) -> Vec<CoeffEntry> {
    map.iter().map(|(&(sigma, m, n), c)| CoeffEntry { sigma, m, n, re: c.re, im: c.im }).collect()
}

/// `Σ_{σ ≤ σ_max} Σ_{m,n} α^m_{σn} 𝔐^σ_{mn}(x)`.
pub fn synthesize(coeffs: &BTreeMap<CoeffKey, Complex64>, x: &H4Point, sigma_max: HalfInt) -> Result<Complex64> {
    let mut acc = ComplexSum::new();
    for (&(sigma, m, n), &c) in coeffs.range(..) {
        if sigma > sigma_max {
            continue;
        }
        acc.add(c * m_function(sigma, m, n, x)?);
    }
    Ok(acc.value())
}

/// Coefficient recovered from the single term `𝔐^σ_{mn}` itself.
pub fn roundtrip_factor(sigma: HalfInt, m: HalfInt, n: HalfInt, grid: &QuadratureGrid) -> Result<Quadrature> {
    fourier_coefficient(
        |x| Complex64::new(m_function(sigma, m, n, x).unwrap_or(f64::NAN), 0.0),
        sigma,
        m,
        n,
        grid,
    )
}

/// How `p²` is formed from the four components of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum FockMetric {
    /// `p² = Σ p_μ²`; the image lies on `ξ₄² − Σ ξ_μ² = 1`.
    #[default]
    Euclidean,
    /// `p² = p₀² − p₁² − p₂² − p₃²`; the image lies on
    /// `ξ₄² − ξ₀² + ξ₁² + ξ₂² + ξ₃² = 1`.
    Minkowski,
}

impl FockMetric {
    fn signs(self) -> [f64; 4] {
        match self {
            FockMetric::Euclidean => [1.0; 4],
            FockMetric::Minkowski => [1.0, -1.0, -1.0, -1.0],
        }
    }

    pub fn square(self, p: &[f64; 4]) -> f64 {
        self.signs().iter().zip(p).map(|(s, v)| s * v * v).sum()
    }
}

/// `ξ_μ = 2a p_μ/(a²−p²)`, `ξ₄ = (a²+p²)/(a²−p²)`.
pub fn fock_projection(p: &[f64; 4], a: f64, metric: FockMetric) -> Result<[f64; 5]> {
    let p2 = metric.square(p);
    let den = a * a - p2;
    if den == 0.0 || !den.is_finite() {
        return Err(Error::Pole(format!("p^2 = a^2 = {}", a * a)));
    }
    Ok([
        2.0 * a * p[0] / den,
        2.0 * a * p[1] / den,
        2.0 * a * p[2] / den,
        2.0 * a * p[3] / den,
        (a * a + p2) / den,
    ])
}

/// `p_μ = a ξ_μ/(ξ₄ + 1)`.
pub fn fock_inverse(xi: &[f64; 5], a: f64) -> Result<[f64; 4]> {
    let den = xi[4] + 1.0;
    if den == 0.0 {
        return Err(Error::Pole("xi_4 = -1".into()));
    }
    Ok([a * xi[0] / den, a * xi[1] / den, a * xi[2] / den, a * xi[3] / den])
}

/// `ξ₄² − metric(ξ₀..ξ₃) − 1`.
pub fn fock_membership_residual(xi: &[f64; 5], metric: FockMetric) -> f64 {
    let v = [xi[0], xi[1], xi[2], xi[3]];
    xi[4] * xi[4] - metric.square(&v) - 1.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumConfig {
    pub m1: f64,
    pub m2: f64,
    /// Coupling `e²`.
    pub e2: f64,
}

impl SpectrumConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("m1", self.m1), ("m2", self.m2)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Range { name, value: v, range: "(0, inf)" });
            }
        }
        if !self.e2.is_finite() {
            return Err(Error::Range { name: "e2", value: self.e2, range: "(-inf, inf)" });
        }
        Ok(())
    }

    /// Reduced mass `m₁m₂/(m₁+m₂)`.
    pub fn mu(&self) -> f64 {
        self.m1 * self.m2 / (self.m1 + self.m2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Branch {
    #[default]
    Hydrogen,
    Antihydrogen,
}

/// `𝒦(ν) = m₁ + m₂ − μ e⁴/(2ν)`, negated on the antihydrogen branch.
pub fn majorana_spectrum(config: &SpectrumConfig, nu: f64, branch: Branch) -> Result<f64> {
    config.validate()?;
    if nu.is_nan() || nu <= 0.0 {
        return Err(Error::Domain(format!("nu = {nu} must be positive")));
    }
    let k = if nu.is_infinite() {
        config.m1 + config.m2
    } else {
        config.m1 + config.m2 - config.mu() * config.e2 * config.e2 / (2.0 * nu)
    };
    Ok(match branch {
        Branch::Hydrogen => k,
        Branch::Antihydrogen => -k,
    })
}

/// `𝒦(n²)` for `n = 1..=n_max`.
pub fn bohr_levels(config: &SpectrumConfig, n_max: u32, branch: Branch) -> Result<Vec<f64>> {
    (1..=n_max).map(|n| majorana_spectrum(config, (n as f64).powi(2), branch)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_is_exact_on_polynomials() {
        let r = gauss_legendre(8);
        let s: f64 = r.iter().map(|&(x, w)| w * x.powi(14)).sum();
        assert!((s - 2.0 / 15.0).abs() < 1e-14);
        assert!((r.iter().map(|p| p.1).sum::<f64>() - 2.0).abs() < 1e-14);
        assert!(r.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn sinh_weight_absorbed() {
        let g = QuadratureGrid::new(16, 3.5, 1.0).unwrap();
        let s: f64 = g.tau_rule.iter().map(|&(t, w)| w * t.cosh().powi(3)).sum();
        let want = (3.5f64.cosh().powi(4) - 1.0) / 4.0;
        assert!((s - want).abs() < 1e-11 * want);
        assert!(g.tau_rule.iter().all(|&(_, w)| w > 0.0));
    }
}
