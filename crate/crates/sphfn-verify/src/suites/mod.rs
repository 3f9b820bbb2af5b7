pub mod hyperboloid;
pub mod hypercomplex;
pub mod liealg;
pub mod principal;
pub mod so14;
pub mod so4;

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sphfn_core::hypercomplex::QuatEuler;
use sphfn_core::HalfInt;

pub(crate) fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

/// Angles in their ranges with rapidities in `[-r, r]`.
pub(crate) fn random_angles(rng: &mut ChaCha8Rng, r: f64) -> QuatEuler<f64> {
    QuatEuler {
        phi: rng.gen_range(0.0..2.0 * PI),
        eps: rng.gen_range(-r..r),
        vsig: rng.gen_range(0.0..2.0 * PI),
        theta: rng.gen_range(0.0..PI),
        tau: rng.gen_range(-r..r),
        phi2: rng.gen_range(0.0..PI),
        psi: rng.gen_range(-2.0 * PI..2.0 * PI),
        eps2: rng.gen_range(-r..r),
        omega: rng.gen_range(-r..r),
        chi: rng.gen_range(-2.0 * PI..2.0 * PI),
    }
}

/// Every `(m, n)` pair for weights `0, 1/2, ..., max_twice/2`.
pub(crate) fn weights(max_twice: i64) -> Vec<(HalfInt, HalfInt, HalfInt)> {
    let mut v = Vec::new();
    for t in 0..=max_twice {
        let l = h(t);
        for m in l.ladder() {
            for n in l.ladder() {
                v.push((l, m, n));
            }
        }
    }
    v
}
