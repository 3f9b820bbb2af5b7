//! Matrix elements and hyperspherical functions of SO(4), SO0(1,4) and its
//! principal series, in quaternion Euler-angle coordinates.
//!
//! The algebraic layer ([`hypercomplex`], [`liealg`]) is generic over the
//! float type through [`Real`]; the special-function layer works in `f64`.
//! The aliases below pin the generic types to `f64`.

pub mod cmatrix;
pub mod error;
pub mod half;
pub mod hyperboloid;
pub mod hypercomplex;
pub mod liealg;
pub mod principal;
pub mod so14;
pub mod so4;
pub mod specfun;
pub mod sum;

pub use error::{Error, Result};
pub use half::HalfInt;
pub use num_complex::Complex64;

use std::fmt::{Debug, Display};

/// Float types the algebraic layer can be instantiated with.
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossless-enough conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal fits the float type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub type HNumber = hypercomplex::Hyper<f64>;
pub type HNumber32 = hypercomplex::Hyper<f32>;
pub type HMatrix2 = hypercomplex::HyperMatrix<f64>;
pub type QEulerAngles = hypercomplex::QuatEuler<f64>;
pub type Matrix5 = liealg::Mat5<f64>;
pub type Matrix5f32 = liealg::Mat5<f32>;
