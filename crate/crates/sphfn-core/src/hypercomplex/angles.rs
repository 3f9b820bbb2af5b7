use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Hyper, Signature};
use crate::error::{Error, Result};
use crate::Real;

/// The ten de Sitter parameters `(φ, ε, ς, θ, τ, ϕ, ψ, ε′, ω, χ)`.
///
/// `phi2` is ϕ, `eps2` is ε′ and `vsig` is ς.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct QuatEuler<T> {
    pub phi: T,
    pub eps: T,
    pub vsig: T,
    pub theta: T,
    pub tau: T,
    pub phi2: T,
    pub psi: T,
    pub eps2: T,
    pub omega: T,
    pub chi: T,
}

impl<T: Real> QuatEuler<T> {
    pub fn zero() -> Self {
        QuatEuler {
            phi: T::zero(),
            eps: T::zero(),
            vsig: T::zero(),
            theta: T::zero(),
            tau: T::zero(),
            phi2: T::zero(),
            psi: T::zero(),
            eps2: T::zero(),
            omega: T::zero(),
            chi: T::zero(),
        }
    }

    /// Compact ranges are strict; rapidities only need to be finite.
    pub fn validate(&self) -> Result<()> {
        let pi = T::PI();
        let two_pi = pi + pi;
        let check = |name: &'static str, v: T, lo: T, hi: T, hi_open: bool, range: &'static str| {
            let above = if hi_open { v >= hi } else { v > hi };
            if !v.is_finite() || v < lo || above {
                Err(Error::Range { name, value: v.to_f64().unwrap_or(f64::NAN), range })
            } else {
                Ok(())
            }
        };
        check("theta", self.theta, T::zero(), pi, false, "[0, pi]")?;
        check("phi", self.phi, T::zero(), two_pi, true, "[0, 2pi)")?;
        check("psi", self.psi, -two_pi, two_pi, true, "[-2pi, 2pi)")?;
        check("phi2", self.phi2, T::zero(), pi, false, "[0, pi]")?;
        check("vsig", self.vsig, T::zero(), two_pi, true, "[0, 2pi)")?;
        check("chi", self.chi, -two_pi, two_pi, true, "[-2pi, 2pi)")?;
        for (name, v) in [
            ("tau", self.tau),
            ("eps", self.eps),
            ("eps2", self.eps2),
            ("omega", self.omega),
        ] {
            if !v.is_finite() {
                return Err(Error::Range {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                    range: "(-inf, inf)",
                });
            }
        }
        Ok(())
    }

    pub fn validated(self) -> Result<Self> {
        self.validate().map(|_| self)
    }

    pub fn composite(&self) -> CompositeAngles<T> {
        CompositeAngles::from_angles(self)
    }
}

/// Quaternion, double and complex Euler angles built from [`QuatEuler`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompositeAngles<T> {
    /// `θ + ϕ - iτ`
    pub theta_q: Hyper<T>,
    /// `φ - iε + jς`
    pub phi_q: Hyper<T>,
    /// `ψ - iε′ - iω + kχ`
    pub psi_q: Hyper<T>,
    /// `(θ + ϕ, φ + ς, ψ + χ)`
    pub double: [T; 3],
    /// `(θ - iτ, φ - iε, ψ - iε′)` as (re, im) pairs.
    pub complex: [(T, T); 3],
}

impl<T: Real> CompositeAngles<T> {
    pub fn from_angles(g: &QuatEuler<T>) -> Self {
        let s = Signature::ANTI;
        let z = T::zero();
        CompositeAngles {
            theta_q: Hyper::new(s, g.theta + g.phi2, -g.tau, z, z),
            phi_q: Hyper::new(s, g.phi, -g.eps, g.vsig, z),
            psi_q: Hyper::new(s, g.psi, -g.eps2 - g.omega, z, g.chi),
            double: [g.theta + g.phi2, g.phi + g.vsig, g.psi + g.chi],
            complex: [(g.theta, -g.tau), (g.phi, -g.eps), (g.psi, -g.eps2)],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompositeTrig {
    pub cos_q: Complex64,
    pub sin_q: Complex64,
    pub cos_half_sq: Complex64,
    pub sin_half_sq: Complex64,
}

/// Trigonometric functions of `θ^q = θ + ϕ - iτ` with `i` read as the complex unit.
pub fn composite_trig(theta: f64, phi2: f64, tau: f64) -> CompositeTrig {
    let q = Complex64::new(theta + phi2, -tau);
    let half = q / 2.0;
    CompositeTrig {
        cos_q: q.cos(),
        sin_q: q.sin(),
        cos_half_sq: half.cos() * half.cos(),
        sin_half_sq: half.sin() * half.sin(),
    }
}
