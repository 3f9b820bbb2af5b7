use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `n!` for `0 <= n <= 170`, by direct product so small values are exact.
pub fn factorial(n: i64) -> f64 {
    assert!((0..=170).contains(&n), "factorial argument {n} out of range");
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// `ln Γ(z)` for `Re z >= 0.5` (principal branch of the Lanczos sum).
fn ln_gamma_lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// Complex Γ with the reflection formula for `Re z < 0.5`.
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("{z}")));
    }
    if z.re < 0.5 {
        let s = (PI * z).sin();
        return Ok(PI / (s * gamma_complex(1.0 - z)?));
    }
    Ok(ln_gamma_lanczos(z).exp())
}

/// `1/Γ(z)`, exactly zero at the poles.
pub fn rgamma_complex(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        return Complex64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        // 1/Γ(z) = sin(πz) Γ(1-z) / π
        return (PI * z).sin() * ln_gamma_lanczos(1.0 - z).exp() / PI;
    }
    (-ln_gamma_lanczos(z)).exp()
}

/// Principal square root of Γ(z).
pub fn sqrt_gamma(z: Complex64) -> Result<Complex64> {
    Ok(gamma_complex(z)?.sqrt())
}

pub fn gamma(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.round() {
        return Err(Error::Pole(format!("{x}")));
    }
    if x == x.round() && x <= 171.0 {
        return Ok(factorial(x as i64 - 1));
    }
    if x < 0.5 {
        return Ok(PI / ((PI * x).sin() * gamma(1.0 - x)?));
    }
    Ok(ln_gamma_lanczos(Complex64::new(x, 0.0)).re.exp())
}

/// `ln |Γ(x)|`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.round() {
        return Err(Error::Pole(format!("{x}")));
    }
    if x < 0.5 {
        return Ok((PI / (PI * x).sin().abs()).ln() - log_gamma(1.0 - x)?);
    }
    Ok(ln_gamma_lanczos(Complex64::new(x, 0.0)).re)
}
