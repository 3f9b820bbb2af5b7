//! Principal-series matrix elements of SO0(1,4), their hypergeometric forms,
//! and the ladder operators of the Dixmier–Ström basis.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::hypercomplex::{Hyper, QuatEuler};
use crate::so14::{check_form, dress, form_orientations, Prefactor};
use crate::specfun::{
    gauss_2f1_with, jacobi_p_sigma, jacobi_p_sigma_hyp, sqrt_gamma, wigner_p, wigner_p_hyp,
    SeriesBudget,
};
use crate::sum::ComplexSum;

/// A principal-series representation: `l₁ = −3/2 + iρ` and compact label `l₀`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrincipalLabel {
    pub rho: f64,
    pub l0: HalfInt,
    /// Selects the `−3/2 − iρ` family.
    #[serde(default)]
    pub conjugated: bool,
}

impl PrincipalLabel {
    pub fn new(rho: f64, l0: HalfInt) -> Self {
        PrincipalLabel { rho, l0, conjugated: false }
    }

    pub fn conjugate(self) -> Self {
        PrincipalLabel { conjugated: !self.conjugated, ..self }
    }

    fn signed_rho(&self) -> f64 {
        if self.conjugated {
            -self.rho
        } else {
            self.rho
        }
    }

    pub fn l1(&self) -> Complex64 {
        Complex64::new(-1.5, self.signed_rho())
    }

    /// `(l₀ + l₁ − 1)/2`
    pub fn sigma(&self) -> Complex64 {
        (self.l1() + self.l0.value() - 1.0) / 2.0
    }

    /// `(l₀ − l₁ + 1)/2`
    pub fn sigma_dot(&self) -> Complex64 {
        (self.l0.value() - self.l1() + 1.0) / 2.0
    }

    /// Weight of the Jacobi factor, equal to `l₁`.
    pub fn weight(&self) -> Complex64 {
        self.l1()
    }

    fn validate(&self, m: HalfInt, n: HalfInt) -> Result<()> {
        if !self.rho.is_finite() {
            return Err(Error::Range { name: "rho", value: self.rho, range: "(-inf, inf)" });
        }
        HalfInt::check_triple(self.l0, m, n)
    }
}

/// `Σ_k Σ_t P^{l₀}_{mt}(cos θ) P^{l₀}_{tk}(cos ϕ) 𝔓^{l₁}_{kn}(cosh τ)`.
pub fn z_principal(
    label: &PrincipalLabel,
    m: HalfInt,
    n: HalfInt,
    theta: f64,
    phi2: f64,
    tau: f64,
    budget: &SeriesBudget,
) -> Result<Complex64> {
    label.validate(m, n)?;
    let l0 = label.l0;
    let w = label.weight();
    let mut acc = ComplexSum::new();
    for k in l0.ladder() {
        let jk = jacobi_p_sigma(w, k, n, tau, budget)?;
        for t in l0.ladder() {
            acc.add(wigner_p(l0, m, t, theta)? * wigner_p(l0, t, k, phi2)? * jk);
        }
    }
    Ok(acc.value())
}

pub fn m_principal(
    label: &PrincipalLabel,
    m: HalfInt,
    n: HalfInt,
    g: &QuatEuler<f64>,
    conv: Prefactor,
) -> Result<Hyper<f64>> {
    m_principal_with(label, m, n, g, conv, &SeriesBudget::default())
}

pub fn m_principal_with(
    label: &PrincipalLabel,
    m: HalfInt,
    n: HalfInt,
    g: &QuatEuler<f64>,
    conv: Prefactor,
    budget: &SeriesBudget,
) -> Result<Hyper<f64>> {
    let z = z_principal(label, m, n, g.theta, g.phi2, g.tau, budget)?;
    Ok(dress(z, m, n, g, conv))
}

/// Kernel of form `form` (1..=8); factors whose ordering fails for a term
/// use their other orientation.
#[allow(clippy::too_many_arguments)]
pub fn z_principal_hyp(
    label: &PrincipalLabel,
    m: HalfInt,
    n: HalfInt,
    theta: f64,
    phi2: f64,
    tau: f64,
    form: usize,
    budget: &SeriesBudget,
) -> Result<Complex64> {
    label.validate(m, n)?;
    check_form(form)?;
    let l0 = label.l0;
    let w = label.weight();
    let mut acc = ComplexSum::new();
    for k in l0.ladder() {
        for t in l0.ladder() {
            let [a, b, c] = form_orientations(form, m, t, k, n);
            acc.add(
                wigner_p_hyp(l0, m, t, theta, a)?
                    * wigner_p_hyp(l0, t, k, phi2, b)?
                    * jacobi_p_sigma_hyp(w, k, n, tau, c, budget)?,
            );
        }
    }
    Ok(acc.value())
}

pub fn m_principal_hyp(
    label: &PrincipalLabel,
    m: HalfInt,
    n: HalfInt,
    g: &QuatEuler<f64>,
    form: usize,
    conv: Prefactor,
) -> Result<Hyper<f64>> {
    let z = z_principal_hyp(label, m, n, g.theta, g.phi2, g.tau, form, &SeriesBudget::default())?;
    Ok(dress(z, m, n, g, conv))
}

/// `n = 0` with the ψ-sector angles `(ψ, ε′, ω, χ)` set to zero.
pub fn second_type_principal(
    label: &PrincipalLabel,
    m: HalfInt,
    g: &QuatEuler<f64>,
    conv: Prefactor,
) -> Result<Hyper<f64>> {
    let g = QuatEuler { psi: 0.0, eps2: 0.0, omega: 0.0, chi: 0.0, ..*g };
    m_principal(label, m, HalfInt::ZERO, &g, conv)
}

/// Exponential prefactor of the third-type function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ThirdTypePhase {
    /// `e^{−mε − n(ε′+ω)}`
    #[default]
    Real,
    /// `e^{+imε + in(ε′+ω)}`
    Imaginary,
}

/// Rapidity arguments of the third-type function.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct BoostAngles {
    pub eps: f64,
    pub tau: f64,
    pub eps2: f64,
    pub omega: f64,
}

/// The printed hypergeometric closed form
/// `√(Γ(iρ+a−½)Γ(iρ−b−½)/(Γ(iρ−a−½)Γ(iρ+b−½))) cosh^{−3+2iρ}(τ/2) tanh^{a−b}(τ/2)
///  ₂F₁(a−iρ−½, −b−iρ−½; a−b+1; tanh²(τ/2))` with `(a, b) = (m, n)` for
/// `m ≥ n` and `(n, m)` otherwise, times the exponential prefactor.
pub fn third_type_principal(
    rho: f64,
    m: HalfInt,
    n: HalfInt,
    b: &BoostAngles,
    phase: ThirdTypePhase,
) -> Result<Complex64> {
    if (m.twice() - n.twice()) % 2 != 0 {
        return Err(Error::Index(format!("m = {m} and n = {n} differ by a half-integer")));
    }
    if !b.tau.is_finite() {
        return Err(Error::Range { name: "tau", value: b.tau, range: "(-inf, inf)" });
    }
    let (hi, lo) = if m >= n { (m, n) } else { (n, m) };
    let (a, bb) = (hi.value(), lo.value());
    let d = (hi.twice() - lo.twice()) / 2;
    let ir = Complex64::new(0.0, rho);
    let ratio = sqrt_gamma(ir + a - 0.5)? * sqrt_gamma(ir - bb - 0.5)?
        / (sqrt_gamma(ir - a - 0.5)? * sqrt_gamma(ir + bb - 0.5)?);
    let half = b.tau / 2.0;
    let t = half.tanh();
    let budget = SeriesBudget::default();
    let f = gauss_2f1_with(a - ir - 0.5, -bb - ir - 0.5, Complex64::new(d as f64 + 1.0, 0.0), t * t, &budget)?;
    if f.truncated {
        return Err(Error::Convergence(budget.max_terms));
    }
    let cosh_pow = (Complex64::new(-3.0, 2.0 * rho) * half.cosh().ln()).exp();
    let (mv, nv) = (m.value(), n.value());
    let pre = match phase {
        ThirdTypePhase::Real => Complex64::new(-mv * b.eps - nv * (b.eps2 + b.omega), 0.0).exp(),
        ThirdTypePhase::Imaginary => Complex64::new(0.0, mv * b.eps + nv * (b.eps2 + b.omega)).exp(),
    };
    Ok(pre * ratio * cosh_pow * t.powi(d as i32) * f.value)
}

/// `α(j′; q, q) = (1/j′)√((j′²−q²)((q+1)²−j′²)/((2j′+1)(2j′−1)))`, complex root.
pub fn alpha(jp: HalfInt, q: HalfInt) -> Result<Complex64> {
    if jp.twice() == 0 || jp.twice() == 1 {
        return Err(Error::DivisionByZero("alpha at j' = 0 or 1/2"));
    }
    let (j, q) = (jp.value(), q.value());
    let r = (j * j - q * q) * ((q + 1.0) * (q + 1.0) - j * j) / ((2.0 * j + 1.0) * (2.0 * j - 1.0));
    Ok(Complex64::new(r, 0.0).sqrt() / j)
}

/// `a(q, ·; l₀, l₁) = √((q−l₀+1)(q+l₀+2)((q+3/2)²+l₁²)/(4(2q+1)(q+1)))`.
pub fn coeff_a(q: HalfInt, l0: HalfInt, l1: Complex64) -> Complex64 {
    let (q, l0) = (q.value(), l0.value());
    let f = (q - l0 + 1.0) * (q + l0 + 2.0);
    if f == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    (f * ((q + 1.5) * (q + 1.5) + l1 * l1) / (4.0 * (2.0 * q + 1.0) * (q + 1.0))).sqrt()
}

/// `b(·, q; l₀, l₁) = √((l₀−q)(l₀+q+1)((q+½)²+l₁²)/(4(2q+1)(q+1)))`.
pub fn coeff_b(q: HalfInt, l0: HalfInt, l1: Complex64) -> Complex64 {
    let (q, l0) = (q.value(), l0.value());
    let f = (l0 - q) * (l0 + q + 1.0);
    if f == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    (f * ((q + 0.5) * (q + 0.5) + l1 * l1) / (4.0 * (2.0 * q + 1.0) * (q + 1.0))).sqrt()
}

/// Basis ket `|j′, m′, q⟩` of the truncated ladder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DixmierState {
    pub q: HalfInt,
    pub jp: HalfInt,
    pub mp: HalfInt,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct SparseMatrix {
    pub dim: usize,
    pub entries: BTreeMap<(usize, usize), Complex64>,
}

impl SparseMatrix {
    pub fn new(dim: usize) -> Self {
        SparseMatrix { dim, entries: BTreeMap::new() }
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries.get(&(r, c)).copied().unwrap_or_default()
    }

    fn add_at(&mut self, r: usize, c: usize, v: Complex64) {
        if v != Complex64::new(0.0, 0.0) {
            *self.entries.entry((r, c)).or_default() += v;
        }
    }

    pub fn mul(&self, o: &SparseMatrix) -> SparseMatrix {
        let mut rows: BTreeMap<usize, Vec<(usize, Complex64)>> = BTreeMap::new();
        for (&(r, c), &v) in &o.entries {
            rows.entry(r).or_default().push((c, v));
        }
        let mut out = SparseMatrix::new(self.dim);
        for (&(r, k), &a) in &self.entries {
            if let Some(row) = rows.get(&k) {
                for &(c, b) in row {
                    out.add_at(r, c, a * b);
                }
            }
        }
        out
    }

    pub fn lin(&self, a: Complex64, o: &SparseMatrix, b: Complex64) -> SparseMatrix {
        let mut out = SparseMatrix::new(self.dim);
        for (&(r, c), &v) in &self.entries {
            out.add_at(r, c, a * v);
        }
        for (&(r, c), &v) in &o.entries {
            out.add_at(r, c, b * v);
        }
        out
    }

    pub fn commutator(&self, o: &SparseMatrix) -> SparseMatrix {
        let one = Complex64::new(1.0, 0.0);
        self.mul(o).lin(one, &o.mul(self), -one)
    }

    /// Largest entry magnitude in the given columns.
    pub fn max_abs_in_columns(&self, cols: &[usize]) -> f64 {
        self.entries
            .iter()
            .filter(|((_, c), _)| cols.binary_search(c).is_ok())
            .map(|(_, v)| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.values().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DixmierGenerators {
    /// Basis in lexicographic `(q, j′, m′)` order.
    pub basis: Vec<DixmierState>,
    pub m3: SparseMatrix,
    pub m_plus: SparseMatrix,
    pub m_minus: SparseMatrix,
    pub p3: SparseMatrix,
    pub p_plus: SparseMatrix,
    pub p_minus: SparseMatrix,
    pub p0: SparseMatrix,
}

impl DixmierGenerators {
    pub fn index_of(&self, s: &DixmierState) -> Option<usize> {
        self.basis.binary_search(s).ok()
    }

    /// States below the top `q` layer, whose images stay inside the truncation.
    pub fn interior(&self) -> Vec<usize> {
        let top = self.basis.iter().map(|s| s.q).max();
        (0..self.basis.len()).filter(|&i| Some(self.basis[i].q) != top).collect()
    }
}

fn sqrt_c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0).sqrt()
}

/// Matrices of the ladder actions on `|j′, m′, q⟩` with `l₀ ≤ q ≤ j_max`,
/// `j′` stepping by one up to `q` from 0 or ½, `|m′| ≤ j′`.
///
/// The `(q±1, q)` and `(q, q±1)` kets of the `P₀` action both land on the
/// `q±1` layer.
pub fn dixmier_generators(label: &PrincipalLabel, j_max: HalfInt) -> Result<DixmierGenerators> {
    let l0 = label.l0;
    if l0.twice() < 0 {
        return Err(Error::Index(format!("negative l0 = {l0}")));
    }
    if j_max < l0 || (j_max.twice() - l0.twice()) % 2 != 0 {
        return Err(Error::Truncation { j_max: j_max.to_string(), l0: l0.to_string() });
    }
    let j_lo = if l0.is_integer() { 0 } else { 1 };
    let mut basis = Vec::new();
    for q2 in (l0.twice()..=j_max.twice()).step_by(2) {
        for j2 in (j_lo..=q2).step_by(2) {
            let jp = HalfInt::from_twice(j2);
            for mp in jp.ladder() {
                basis.push(DixmierState { q: HalfInt::from_twice(q2), jp, mp });
            }
        }
    }
    basis.sort();
    let dim = basis.len();
    let idx = |s: DixmierState| basis.binary_search(&s).ok();
    let one = HalfInt::ONE;
    let l1 = label.l1();

    let mut m3 = SparseMatrix::new(dim);
    let mut m_plus = SparseMatrix::new(dim);
    let mut m_minus = SparseMatrix::new(dim);
    let mut p3 = SparseMatrix::new(dim);
    let mut p_plus = SparseMatrix::new(dim);
    let mut p_minus = SparseMatrix::new(dim);
    let mut p0 = SparseMatrix::new(dim);

    for (c, s) in basis.iter().enumerate() {
        let (j, mv, qv) = (s.jp.value(), s.mp.value(), s.q.value());
        let at = |jp: HalfInt, mp: HalfInt, q: HalfInt| idx(DixmierState { q, jp, mp });
        m3.add_at(c, c, Complex64::new(mv, 0.0));
        if let Some(r) = at(s.jp, s.mp + one, s.q) {
            m_plus.add_at(r, c, sqrt_c((j - mv) * (j + mv + 1.0)));
        }
        if let Some(r) = at(s.jp, s.mp - one, s.q) {
            m_minus.add_at(r, c, sqrt_c((j + mv) * (j - mv + 1.0)));
        }

        let diag = if s.jp.twice() == 0 { 0.0 } else { (qv + 1.0) * qv / (j * (j + 1.0)) };
        let up = s.jp + one;
        let down = s.jp - one;
        if let Some(r) = at(up, s.mp, s.q) {
            p3.add_at(r, c, -alpha(up, s.q)? * sqrt_c((j + 1.0) * (j + 1.0) - mv * mv));
        }
        p3.add_at(c, c, Complex64::new(mv * diag, 0.0));
        if let Some(r) = at(down, s.mp, s.q) {
            p3.add_at(r, c, -alpha(s.jp, s.q)? * sqrt_c(j * j - mv * mv));
        }

        for (sign, target) in [(1.0, &mut p_plus), (-1.0, &mut p_minus)] {
            let mp = if sign > 0.0 { s.mp + one } else { s.mp - one };
            if let Some(r) = at(up, mp, s.q) {
                let v = sqrt_c((j + sign * mv + 1.0) * (j + sign * mv + 2.0));
                target.add_at(r, c, sign * alpha(up, s.q)? * v);
            }
            if let Some(r) = at(s.jp, mp, s.q) {
                let v = sqrt_c((j - sign * mv) * (j + sign * mv + 1.0));
                target.add_at(r, c, diag * v);
            }
            if let Some(r) = at(down, mp, s.q) {
                let v = sqrt_c((j - sign * mv) * (j - sign * mv - 1.0));
                target.add_at(r, c, -sign * alpha(s.jp, s.q)? * v);
            }
        }

        if let Some(r) = at(s.jp, s.mp, s.q + one) {
            p0.add_at(r, c, coeff_a(s.q, l0, l1) * sqrt_c((qv + j + 2.0) * (qv - j + 1.0)));
            p0.add_at(r, c, coeff_b(s.q, l0, l1) * sqrt_c((j - qv) * (j + qv + 1.0)));
        }
        if let Some(r) = at(s.jp, s.mp, s.q - one) {
            let qm = s.q - one;
            p0.add_at(r, c, coeff_a(qm, l0, l1) * sqrt_c((qv + j + 1.0) * (qv - j)));
            p0.add_at(r, c, coeff_b(qm, l0, l1) * sqrt_c((j + qv) * (j - qv + 1.0)));
        }
    }
    Ok(DixmierGenerators { basis, m3, m_plus, m_minus, p3, p_plus, p_minus, p0 })
}
