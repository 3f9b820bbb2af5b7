//! Finite-dimensional hyperspherical functions and matrix elements of SO0(1,4).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::hypercomplex::{Hyper, HyperMatrix, QuatEuler, Signature};
use crate::specfun::{
    gauss_2f1_complex, jacobi_p, jacobi_p_hyp, wigner_p, wigner_p_hyp, Orientation, SeriesBudget,
};
use crate::sum::ComplexSum;

/// Which of the two subgroup factorizations a double sum follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum FactorOrder {
    /// `Σ P_{mt}(cos θ) P_{tk}(cos ϕ) 𝔓_{kn}(cosh τ)`
    #[default]
    So4First,
    /// `Σ P_{mk}(cos ϕ) P_{kt}(cos θ) 𝔓_{tn}(cosh τ)`
    LorentzFirst,
}

/// How an evaluated value was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Formula {
    AdditionSum,
    LorentzFactored,
    Hyp1,
    Hyp2,
    Hyp3,
    Hyp4,
    Hyp5,
    Hyp6,
    Hyp7,
    Hyp8,
    ClosedForm,
}

impl Formula {
    pub fn hyp(form: usize) -> Option<Formula> {
        use Formula::*;
        [Hyp1, Hyp2, Hyp3, Hyp4, Hyp5, Hyp6, Hyp7, Hyp8].get(form.checked_sub(1)?).copied()
    }

    pub fn tag(self) -> &'static str {
        match self {
            Formula::AdditionSum => "additionSum",
            Formula::LorentzFactored => "lorentzFactored",
            Formula::Hyp1 => "hyp1",
            Formula::Hyp2 => "hyp2",
            Formula::Hyp3 => "hyp3",
            Formula::Hyp4 => "hyp4",
            Formula::Hyp5 => "hyp5",
            Formula::Hyp6 => "hyp6",
            Formula::Hyp7 => "hyp7",
            Formula::Hyp8 => "hyp8",
            Formula::ClosedForm => "closedForm",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphFnValue {
    pub value: Complex64,
    pub formula: Formula,
    pub truncated: bool,
}

fn check_weight(sigma: HalfInt, m: HalfInt, n: HalfInt) -> Result<()> {
    HalfInt::check_triple(sigma, m, n)
}

/// `Z^σ_{mn}` at `θ^q = θ + ϕ − iτ` by the double addition sum.
pub fn z_so14(
    sigma: HalfInt,
    m: HalfInt,
    n: HalfInt,
    theta: f64,
    phi2: f64,
    tau: f64,
    order: FactorOrder,
) -> Result<Complex64> {
    check_weight(sigma, m, n)?;
    let mut acc = ComplexSum::new();
    for k in sigma.ladder() {
        for t in sigma.ladder() {
            let term = match order {
                FactorOrder::So4First => {
                    wigner_p(sigma, m, t, theta)?
                        * wigner_p(sigma, t, k, phi2)?
                        * jacobi_p(sigma, k, n, tau)?
                }
                FactorOrder::LorentzFirst => {
                    wigner_p(sigma, m, k, phi2)?
                        * wigner_p(sigma, k, t, theta)?
                        * jacobi_p(sigma, t, n, tau)?
                }
            };
            acc.add(term);
        }
    }
    Ok(acc.value())
}

pub fn z_so14_value(
    sigma: HalfInt,
    m: HalfInt,
    n: HalfInt,
    theta: f64,
    phi2: f64,
    tau: f64,
    order: FactorOrder,
) -> Result<SphFnValue> {
    let formula = match order {
        FactorOrder::So4First => Formula::AdditionSum,
        FactorOrder::LorentzFirst => Formula::LorentzFactored,
    };
    Ok(SphFnValue { value: z_so14(sigma, m, n, theta, phi2, tau, order)?, formula, truncated: false })
}

/// `Σ_t P^σ_{mt}(cos θ) 𝔓^σ_{tn}(cosh τ)`, the SO0(1,3) hyperspherical function.
pub fn z_so13(sigma: HalfInt, m: HalfInt, n: HalfInt, theta: f64, tau: f64) -> Result<Complex64> {
    check_weight(sigma, m, n)?;
    let mut acc = ComplexSum::new();
    for t in sigma.ladder() {
        acc.add(wigner_p(sigma, m, t, theta)? * jacobi_p(sigma, t, n, tau)?);
    }
    Ok(acc.value())
}

use Orientation::{FirstGe as F, SecondGe as S};

/// Orientations of the `(θ: m,t)`, `(ϕ: t,k)` and `(τ: k,n)` factors in the
/// eight printed triple forms.
pub const SO14_FORMS: [[Orientation; 3]; 8] = [
    [F, F, F],
    [F, S, F],
    [S, S, S],
    [S, F, S],
    [S, S, F],
    [S, F, F],
    [F, F, S],
    [F, S, S],
];

/// First form (1..=8) whose three ordering constraints hold.
pub fn so14_form_for(m: HalfInt, t: HalfInt, k: HalfInt, n: HalfInt) -> usize {
    SO14_FORMS
        .iter()
        .position(|[a, b, c]| a.admits(m, t) && b.admits(t, k) && c.admits(k, n))
        .expect("the eight forms cover every ordering")
        + 1
}

/// Orientations for `form`, each factor flipped where the term violates it.
pub fn form_orientations(form: usize, m: HalfInt, t: HalfInt, k: HalfInt, n: HalfInt) -> [Orientation; 3] {
    let [mut a, mut b, mut c] = SO14_FORMS[form - 1];
    if !a.admits(m, t) {
        a = a.flip();
    }
    if !b.admits(t, k) {
        b = b.flip();
    }
    if !c.admits(k, n) {
        c = c.flip();
    }
    [a, b, c]
}

pub(crate) fn check_form(form: usize) -> Result<()> {
    if !(1..=8).contains(&form) {
        return Err(Error::Index(format!("form {form} not in 1..=8")));
    }
    Ok(())
}

/// Double sum of triple products of hypergeometric factor forms, every term
/// in form `form` where admissible.
pub fn z_so14_hyp(
    sigma: HalfInt,
    m: HalfInt,
    n: HalfInt,
    theta: f64,
    phi2: f64,
    tau: f64,
    form: usize,
) -> Result<Complex64> {
    check_weight(sigma, m, n)?;
    check_form(form)?;
    let mut acc = ComplexSum::new();
    for k in sigma.ladder() {
        for t in sigma.ladder() {
            let [a, b, c] = form_orientations(form, m, t, k, n);
            let term = wigner_p_hyp(sigma, m, t, theta, a)?
                * wigner_p_hyp(sigma, t, k, phi2, b)?
                * jacobi_p_hyp(sigma, k, n, tau, c)?;
            acc.add(term);
        }
    }
    Ok(acc.value())
}

/// Left/right exponential prefactors of a matrix element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Prefactor {
    /// `e^{−imφ} e^{−mε} e^{−mkς} · Z · e^{−inψ} e^{−nε′} e^{−nω} e^{−njχ}`,
    /// the factor order of the group element
    #[default]
    Ordered,
    /// `e^{−m(ε+iφ+kς) − n(ε′+ω+iψ−jχ)} · Z` as one exponential
    Combined,
}

fn hx(w: f64, x: f64, y: f64, z: f64) -> Hyper<f64> {
    Hyper::new(Signature::ANTI, w, x, y, z).exp()
}

fn ordered_left(m: f64, g: &QuatEuler<f64>) -> Hyper<f64> {
    hx(0.0, -m * g.phi, 0.0, 0.0) * hx(-m * g.eps, 0.0, 0.0, 0.0) * hx(0.0, 0.0, 0.0, -m * g.vsig)
}

fn ordered_right(n: f64, g: &QuatEuler<f64>) -> Hyper<f64> {
    hx(0.0, -n * g.psi, 0.0, 0.0)
        * hx(-n * g.eps2, 0.0, 0.0, 0.0)
        * hx(-n * g.omega, 0.0, 0.0, 0.0)
        * hx(0.0, 0.0, -n * g.chi, 0.0)
}

fn combined(m: f64, n: f64, g: &QuatEuler<f64>) -> Hyper<f64> {
    hx(-m * g.eps - n * (g.eps2 + g.omega), -m * g.phi - n * g.psi, n * g.chi, -m * g.vsig)
}

/// Attach prefactors to a complex kernel value.
pub fn dress(z: Complex64, m: HalfInt, n: HalfInt, g: &QuatEuler<f64>, conv: Prefactor) -> Hyper<f64> {
    let zq = Hyper::complex(Signature::ANTI, z.re, z.im);
    let (mv, nv) = (m.value(), n.value());
    match conv {
        Prefactor::Ordered => ordered_left(mv, g) * zq * ordered_right(nv, g),
        Prefactor::Combined => combined(mv, nv, g) * zq,
    }
}

pub fn matrix_element_so14(
    sigma: HalfInt,
    m: HalfInt,
    n: HalfInt,
    g: &QuatEuler<f64>,
    conv: Prefactor,
) -> Result<Hyper<f64>> {
    let z = z_so14(sigma, m, n, g.theta, g.phi2, g.tau, FactorOrder::So4First)?;
    Ok(dress(z, m, n, g, conv))
}

/// Complex-valued element; only defined when `ς = χ = 0`.
pub fn matrix_element_so14_complex(
    sigma: HalfInt,
    m: HalfInt,
    n: HalfInt,
    g: &QuatEuler<f64>,
    conv: Prefactor,
) -> Result<Complex64> {
    if g.vsig != 0.0 || g.chi != 0.0 {
        return Err(Error::Domain("complex matrix elements need vsig = chi = 0".into()));
    }
    let h = matrix_element_so14(sigma, m, n, g, conv)?;
    debug_assert!(h.y == 0.0 && h.z == 0.0);
    Ok(Complex64::new(h.w, h.x))
}

/// Square matrix of hypercomplex entries, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HRepMatrix {
    pub dim: usize,
    pub data: Vec<Hyper<f64>>,
}

impl HRepMatrix {
    pub fn get(&self, r: usize, c: usize) -> Hyper<f64> {
        self.data[r * self.dim + c]
    }

    /// Largest component deviation from a 2×2 hypercomplex matrix.
    pub fn max_diff_2x2(&self, o: &HyperMatrix<f64>) -> f64 {
        assert_eq!(self.dim, 2);
        let mut d: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let (a, b) = (self.get(r, c).components(), o.entry(r, c).components());
                for i in 0..4 {
                    d = d.max((a[i] - b[i]).abs());
                }
            }
        }
        d
    }
}

/// Row `r` is `m = −σ + r`, column `c` is `n = −σ + c`.
pub fn rep_matrix_so14(sigma: HalfInt, g: &QuatEuler<f64>, conv: Prefactor) -> Result<HRepMatrix> {
    if sigma.twice() < 0 {
        return Err(Error::Index(format!("negative weight {sigma}")));
    }
    let idx: Vec<HalfInt> = sigma.ladder().collect();
    let mut data = Vec::with_capacity(idx.len() * idx.len());
    for &m in &idx {
        for &n in &idx {
            data.push(matrix_element_so14(sigma, m, n, g, conv)?);
        }
    }
    Ok(HRepMatrix { dim: idx.len(), data })
}

pub fn z_assoc_so14(sigma: HalfInt, m: HalfInt, theta: f64, phi2: f64, tau: f64) -> Result<Complex64> {
    if !sigma.is_integer() {
        return Err(Error::Index(format!("associated function needs integral weight, got {sigma}")));
    }
    z_so14(sigma, m, HalfInt::ZERO, theta, phi2, tau, FactorOrder::So4First)
}

pub fn z_zonal_so14(sigma: HalfInt, theta: f64, phi2: f64, tau: f64) -> Result<Complex64> {
    z_assoc_so14(sigma, HalfInt::ZERO, theta, phi2, tau)
}

/// The printed particular solution
/// `C₁ sin^{|m−n|}(θ^q/2) cos^{|m+n|}(θ^q/2) ₂F₁(σ+3+μ, −σ+μ; |m−n|+1; sin²(θ^q/2))`
/// with `μ = (|m−n|+|m+n|)/2` and `sin²(θ^q/2) = (1−z)/2`.
pub fn fuchs_solution(sigma: HalfInt, m: HalfInt, n: HalfInt, z: Complex64, c1: Complex64) -> Result<Complex64> {
    check_weight(sigma, m, n)?;
    let d = (m.twice() - n.twice()).abs() / 2;
    let s = (m.twice() + n.twice()).abs() / 2;
    let mu = (d + s) as f64 / 2.0;
    let sv = sigma.value();
    let t = (1.0 - z) / 2.0;
    let f = gauss_2f1_complex(
        Complex64::new(sv + 3.0 + mu, 0.0),
        Complex64::new(-sv + mu, 0.0),
        Complex64::new(d as f64 + 1.0, 0.0),
        t,
        &SeriesBudget::default(),
    )?;
    if f.truncated {
        return Err(Error::Convergence(SeriesBudget::default().max_terms));
    }
    let sin_half = t.sqrt();
    let cos_half = (1.0 - t).sqrt();
    Ok(c1 * sin_half.powi(d as i32) * cos_half.powi(s as i32) * f.value)
}

/// `|(1−z²)w″ − 2zw′ − (m²+n²−2mnz)/(1−z²) w + λw|` for `w = fuchs_solution`,
/// central differences in real `z` with step `h`.
pub fn fuchs_residual(sigma: HalfInt, m: HalfInt, n: HalfInt, z: f64, lambda: f64, h: f64) -> Result<f64> {
    if (1.0 - z.abs()) < 0.05 {
        return Err(Error::Singularity(format!("z = {z} within 0.05 of ±1")));
    }
    let one = Complex64::new(1.0, 0.0);
    let w = |x: f64| fuchs_solution(sigma, m, n, Complex64::new(x, 0.0), one);
    let (wm, w0, wp) = (w(z - h)?, w(z)?, w(z + h)?);
    let d1 = (wp - wm) / (2.0 * h);
    let d2 = (wp - 2.0 * w0 + wm) / (h * h);
    let (mv, nv) = (m.value(), n.value());
    let q = 1.0 - z * z;
    let r = d2 * q - d1 * (2.0 * z) - w0 * ((mv * mv + nv * nv - 2.0 * mv * nv * z) / q) + w0 * lambda;
    Ok(r.norm())
}

/// Residual of the θ^q-form equation
/// `Z″ + cot θ^q Z′ − (m²+n²−2mn cos θ^q)/sin²θ^q Z + λZ` for the addition
/// sum, differentiating along τ: `d/dθ^q = i d/dτ` at fixed `θ + ϕ`.
#[allow(clippy::too_many_arguments)]
pub fn ode_residual_so14(
    sigma: HalfInt,
    m: HalfInt,
    n: HalfInt,
    theta: f64,
    phi2: f64,
    tau: f64,
    lambda: f64,
) -> Result<f64> {
    check_weight(sigma, m, n)?;
    let q = Complex64::new(theta + phi2, -tau);
    let sq = q.sin();
    if sq.norm() <= 0.05 {
        return Err(Error::Singularity(format!("|sin theta^q| = {} <= 0.05", sq.norm())));
    }
    let h = 1e-4;
    let f = |x: f64| z_so14(sigma, m, n, theta, phi2, x, FactorOrder::So4First);
    let (fm, f0, fp) = (f(tau - h)?, f(tau)?, f(tau + h)?);
    let i = Complex64::new(0.0, 1.0);
    let d1 = i * (fp - fm) / (2.0 * h);
    let d2 = -(fp - 2.0 * f0 + fm) / (h * h);
    let (mv, nv) = (m.value(), n.value());
    let r = d2 + d1 * q.cos() / sq - f0 * (mv * mv + nv * nv - 2.0 * mv * nv * q.cos()) / (sq * sq)
        + f0 * lambda;
    Ok(r.norm())
}
