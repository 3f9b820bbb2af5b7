use num_complex::Complex64;

use super::gamma::factorial;
use super::hyper::gauss_2f1;
use super::{i_pow, int_diff, Orientation};
use crate::error::{Error, Result};
use crate::half::HalfInt;

/// `P^l_{mn}(cos θ)` for real θ.
pub fn wigner_p(l: HalfInt, m: HalfInt, n: HalfInt, theta: f64) -> Result<Complex64> {
    wigner_p_complex(l, m, n, Complex64::new(theta, 0.0))
}

/// `P^l_{mn}` at a complex angle, by the finite j-sum.
///
/// With `e = m - n + 2j` the powers are combined into
/// `cos^{2l-e}(θ/2) sin^e(θ/2)`, both exponents nonnegative on the sum range.
pub fn wigner_p_complex(l: HalfInt, m: HalfInt, n: HalfInt, theta: Complex64) -> Result<Complex64> {
    HalfInt::check_triple(l, m, n)?;
    let half = theta / 2.0;
    let (c, s) = (half.cos(), half.sin());
    let lm = int_diff(l, m);
    let lpm = int_diff(l, -m);
    let ln = int_diff(l, n);
    let lpn = int_diff(l, -n);
    let mn = int_diff(m, n);
    let two_l = l.twice();
    let pre = (factorial(lm) * factorial(lpm) * factorial(ln) * factorial(lpn)).sqrt();
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0.max(-mn)..=lm.min(lpn) {
        let e = mn + 2 * j;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let den = factorial(j) * factorial(lm - j) * factorial(lpn - j) * factorial(mn + j);
        acc += c.powi((two_l - e) as i32) * s.powi(e as i32) * (sign / den);
    }
    Ok(i_pow(mn) * pre * acc)
}

/// Single-factor hypergeometric form of `P^l_{mn}(cos θ)`.
///
/// `FirstGe` needs `m >= n` and uses `₂F₁(m-l, -n-l; m-n+1; -tan²)`,
/// `SecondGe` needs `n >= m` and uses `₂F₁(n-l, -m-l; n-m+1; -tan²)`.
pub fn wigner_p_hyp(
    l: HalfInt,
    m: HalfInt,
    n: HalfInt,
    theta: f64,
    orient: Orientation,
) -> Result<Complex64> {
    HalfInt::check_triple(l, m, n)?;
    let (a, b) = match orient {
        Orientation::FirstGe => (m, n),
        Orientation::SecondGe => (n, m),
    };
    if a < b {
        return Err(Error::Index(format!("orientation {orient:?} needs {a} >= {b}")));
    }
    // the two orientations differ only by swapping the roles of m and n
    let d = int_diff(a, b);
    let ratio = factorial(int_diff(l, -a)) * factorial(int_diff(l, b))
        / (factorial(int_diff(l, a)) * factorial(int_diff(l, -b)));
    let half = theta / 2.0;
    let (c, s) = (half.cos(), half.sin());
    let t = s / c;
    let f = gauss_2f1(
        Complex64::new((a - l).value(), 0.0),
        Complex64::new((-b - l).value(), 0.0),
        Complex64::new((d + 1) as f64, 0.0),
        -t * t,
    )?;
    let power = c.powi(l.twice() as i32) * t.powi(d as i32);
    Ok(i_pow(d) * (ratio.sqrt() / factorial(d) * power) * f.value)
}
