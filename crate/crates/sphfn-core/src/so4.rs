//! Hyperspherical functions and matrix elements of SO(4) in double Euler angles.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::specfun::{wigner_p, wigner_p_hyp, Orientation};

/// The six SO(4) parameters `(φ, ς, θ, ϕ, ψ, χ)`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct DoubleAngles {
    pub phi: f64,
    pub vsig: f64,
    pub theta: f64,
    pub phi2: f64,
    pub psi: f64,
    pub chi: f64,
}

impl DoubleAngles {
    pub fn validate(&self) -> Result<()> {
        let check = |name: &'static str, v: f64, lo: f64, hi: f64, open: bool, range: &'static str| {
            if !v.is_finite() || v < lo || v > hi || (open && v == hi) {
                Err(Error::Range { name, value: v, range })
            } else {
                Ok(())
            }
        };
        check("theta", self.theta, 0.0, PI, false, "[0, pi]")?;
        check("phi2", self.phi2, 0.0, PI, false, "[0, pi]")?;
        check("phi", self.phi, 0.0, 2.0 * PI, true, "[0, 2pi)")?;
        check("vsig", self.vsig, 0.0, 2.0 * PI, true, "[0, 2pi)")?;
        check("psi", self.psi, -2.0 * PI, 2.0 * PI, true, "[-2pi, 2pi)")?;
        check("chi", self.chi, -2.0 * PI, 2.0 * PI, true, "[-2pi, 2pi)")
    }

    /// `(φ^e, θ^e, ψ^e) = (φ+ς, θ+ϕ, ψ+χ)`.
    pub fn double(&self) -> (f64, f64, f64) {
        (self.phi + self.vsig, self.theta + self.phi2, self.psi + self.chi)
    }

    /// `(φ−ς, θ−ϕ, ψ−χ)`.
    pub fn conjugate_double(&self) -> (f64, f64, f64) {
        self.conjugate().double()
    }

    /// Negates the second angle of every pair; an involution.
    pub fn conjugate(&self) -> DoubleAngles {
        DoubleAngles { vsig: -self.vsig, phi2: -self.phi2, chi: -self.chi, ..*self }
    }
}

/// `Σ_k P^l_{mk}(cos θ) P^l_{kn}(cos ϕ)`.
pub fn z_so4(l: HalfInt, m: HalfInt, n: HalfInt, theta: f64, phi2: f64) -> Result<Complex64> {
    HalfInt::check_triple(l, m, n)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in l.ladder() {
        acc += wigner_p(l, m, k, theta)? * wigner_p(l, k, n, phi2)?;
    }
    Ok(acc)
}

/// The four printed hypergeometric double forms, as factor orientations of
/// `(P_{mk}, P_{kn})`.
pub const SO4_FORMS: [(Orientation, Orientation); 4] = [
    (Orientation::FirstGe, Orientation::FirstGe),
    (Orientation::FirstGe, Orientation::SecondGe),
    (Orientation::SecondGe, Orientation::SecondGe),
    (Orientation::SecondGe, Orientation::FirstGe),
];

/// Index `1..=4` of the first form whose constraints hold for term `k`.
pub fn so4_form_for(m: HalfInt, k: HalfInt, n: HalfInt) -> usize {
    SO4_FORMS
        .iter()
        .position(|(a, b)| a.admits(m, k) && b.admits(k, n))
        .expect("one of the four orderings always holds")
        + 1
}

/// k-sum of products of terminating ₂F₁ forms, each term in the first
/// admissible printed form.
pub fn z_so4_hyp(l: HalfInt, m: HalfInt, n: HalfInt, theta: f64, phi2: f64) -> Result<Complex64> {
    HalfInt::check_triple(l, m, n)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in l.ladder() {
        acc += so4_hyp_term(l, m, k, n, theta, phi2, so4_form_for(m, k, n))?;
    }
    Ok(acc)
}

/// Same sum with form `form` requested for every term; a factor whose
/// ordering fails for a term falls back to its other orientation.
pub fn z_so4_hyp_form(
    l: HalfInt,
    m: HalfInt,
    n: HalfInt,
    theta: f64,
    phi2: f64,
    form: usize,
) -> Result<Complex64> {
    HalfInt::check_triple(l, m, n)?;
    if !(1..=4).contains(&form) {
        return Err(Error::Index(format!("form {form} not in 1..=4")));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for k in l.ladder() {
        acc += so4_hyp_term(l, m, k, n, theta, phi2, form)?;
    }
    Ok(acc)
}

fn so4_hyp_term(
    l: HalfInt,
    m: HalfInt,
    k: HalfInt,
    n: HalfInt,
    theta: f64,
    phi2: f64,
    form: usize,
) -> Result<Complex64> {
    let (mut a, mut b) = SO4_FORMS[form - 1];
    if !a.admits(m, k) {
        a = a.flip();
    }
    if !b.admits(k, n) {
        b = b.flip();
    }
    Ok(wigner_p_hyp(l, m, k, theta, a)? * wigner_p_hyp(l, k, n, phi2, b)?)
}

/// `e^{−i(mφ^e + nψ^e)} Z^l_{mn}`.
pub fn matrix_element_so4(l: HalfInt, m: HalfInt, n: HalfInt, g: &DoubleAngles) -> Result<Complex64> {
    let (phi_e, _, psi_e) = g.double();
    let phase = Complex64::new(0.0, -(m.value() * phi_e + n.value() * psi_e)).exp();
    Ok(phase * z_so4(l, m, n, g.theta, g.phi2)?)
}

/// Conjugate element `e^{+i(mφ̇^e + nψ̇^e)} Z^l_{mn}(cos θ̇^e)`, sign as printed.
pub fn matrix_element_so4_conj(
    l: HalfInt,
    m: HalfInt,
    n: HalfInt,
    g: &DoubleAngles,
) -> Result<Complex64> {
    let c = g.conjugate();
    let (phi_d, _, psi_d) = c.double();
    let phase = Complex64::new(0.0, m.value() * phi_d + n.value() * psi_d).exp();
    Ok(phase * z_so4(l, m, n, c.theta, c.phi2)?)
}

/// Row `r` is `m = −l + r`, column `c` is `n = −l + c`.
pub fn rep_matrix_so4(l: HalfInt, g: &DoubleAngles) -> Result<CMatrix> {
    if l.twice() < 0 {
        return Err(Error::Index(format!("negative weight {l}")));
    }
    let idx: Vec<HalfInt> = l.ladder().collect();
    let mut out = CMatrix::zeros(idx.len());
    for (r, &m) in idx.iter().enumerate() {
        for (c, &n) in idx.iter().enumerate() {
            out.data[r * idx.len() + c] = matrix_element_so4(l, m, n, g)?;
        }
    }
    Ok(out)
}

/// `Z^l_{m0}`; needs integral `l`.
pub fn z_assoc_so4(l: HalfInt, m: HalfInt, theta: f64, phi2: f64) -> Result<Complex64> {
    if !l.is_integer() {
        return Err(Error::Index(format!("associated function needs integral weight, got {l}")));
    }
    z_so4(l, m, HalfInt::ZERO, theta, phi2)
}

pub fn z_zonal_so4(l: HalfInt, theta: f64, phi2: f64) -> Result<Complex64> {
    if !l.is_integer() {
        return Err(Error::Index(format!("zonal function needs integral weight, got {l}")));
    }
    z_so4(l, HalfInt::ZERO, HalfInt::ZERO, theta, phi2)
}

const EDGE: f64 = 0.05;
const STEP: f64 = 1e-4;

fn check_interior(x: f64) -> Result<()> {
    let dist = [0.0, PI, 2.0 * PI].iter().map(|s| (x - s).abs()).fold(f64::INFINITY, f64::min);
    if dist < EDGE {
        return Err(Error::Singularity(format!("cos({x}) within {EDGE} of ±1")));
    }
    Ok(())
}

/// `|Z'' + cot x Z' − (m²+n²−2mn cos x)/sin²x Z + λZ|`, the Legendre-type
/// operator in `z = cos x` rewritten in `x`, with central differences.
pub fn legendre_residual(
    m: HalfInt,
    n: HalfInt,
    x: f64,
    lambda: f64,
    f: impl Fn(f64) -> Result<Complex64>,
) -> Result<f64> {
    check_interior(x)?;
    let h = STEP;
    let (fm, f0, fp) = (f(x - h)?, f(x)?, f(x + h)?);
    let d1 = (fp - fm) / (2.0 * h);
    let d2 = (fp - 2.0 * f0 + fm) / (h * h);
    let (mv, nv) = (m.value(), n.value());
    let s = x.sin();
    let r = d2 + d1 * (x.cos() / s) - f0 * ((mv * mv + nv * nv - 2.0 * mv * nv * x.cos()) / (s * s))
        + f0 * lambda;
    Ok(r.norm())
}

/// ODE residual of `Z^l_{mn}` at `θ^e`, with the double angle split evenly.
pub fn ode_residual_so4(l: HalfInt, m: HalfInt, n: HalfInt, theta_e: f64, lambda: f64) -> Result<f64> {
    HalfInt::check_triple(l, m, n)?;
    legendre_residual(m, n, theta_e, lambda, |x| z_so4(l, m, n, x / 2.0, x / 2.0))
}

/// Residual of the conjugate function over `θ̇^e = θ − ϕ`, at fixed
/// `ϕ = (π − θ̇^e)/2`.
pub fn ode_residual_so4_conj(
    l: HalfInt,
    m: HalfInt,
    n: HalfInt,
    theta_dot: f64,
    lambda: f64,
) -> Result<f64> {
    HalfInt::check_triple(l, m, n)?;
    let phi0 = (PI - theta_dot) / 2.0;
    legendre_residual(m, n, theta_dot, lambda, |x| z_so4(l, m, n, x + phi0, -phi0))
}

/// Labels and dimensions of the SO(3) blocks `Q^m`, `m` stepping by one from
/// 0 (or 1/2) to `l`.
pub fn restriction_blocks(l: HalfInt) -> Vec<(HalfInt, usize)> {
    let start = if l.is_integer() { 0 } else { 1 };
    (start..=l.twice()).step_by(2).map(|t| (HalfInt::from_twice(t), t as usize + 1)).collect()
}
