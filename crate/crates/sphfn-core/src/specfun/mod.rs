//! Scalar kernel: gamma, Gauss ₂F₁, `P^l_{mn}` and `𝔓^σ_{mn}`.

mod gamma;
mod hyper;
mod jacobi;
mod wigner;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::half::HalfInt;

pub use gamma::{factorial, gamma, gamma_complex, log_gamma, rgamma_complex, sqrt_gamma};
pub use hyper::{gauss_2f1, gauss_2f1_complex, gauss_2f1_with, Series, SeriesBudget};
pub use jacobi::{
    jacobi_ode_residual, jacobi_p, jacobi_p_hyp, jacobi_p_principal, jacobi_p_principal_hyp,
    jacobi_p_principal_with, jacobi_p_sigma, jacobi_p_sigma_hyp, jacobi_p_y, principal_sigma,
};
pub use wigner::{wigner_p, wigner_p_complex, wigner_p_hyp};

/// Which index of a single factor is the larger one in a hypergeometric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// first index >= second
    FirstGe,
    /// second index >= first
    SecondGe,
}

impl Orientation {
    /// The orientation admissible for `(a, b)`, preferring `FirstGe` on ties.
    pub fn natural(a: HalfInt, b: HalfInt) -> Orientation {
        if a >= b {
            Orientation::FirstGe
        } else {
            Orientation::SecondGe
        }
    }

    pub fn admits(self, a: HalfInt, b: HalfInt) -> bool {
        match self {
            Orientation::FirstGe => a >= b,
            Orientation::SecondGe => b >= a,
        }
    }

    pub fn flip(self) -> Orientation {
        match self {
            Orientation::FirstGe => Orientation::SecondGe,
            Orientation::SecondGe => Orientation::FirstGe,
        }
    }
}

/// `a - b` for indices whose difference is integral.
pub(crate) fn int_diff(a: HalfInt, b: HalfInt) -> i64 {
    let d = a.twice() - b.twice();
    debug_assert!(d % 2 == 0, "{a} - {b} is not integral");
    d / 2
}

/// `i^k` for integer k.
pub(crate) fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}
