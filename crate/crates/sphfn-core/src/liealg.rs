//! The 5×5 fundamental representation of so(1,4).

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Real;

/// Real 5×5 matrix indexed by the coordinates `x0..x4`; serializes row-major.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mat5<T>(pub [[T; 5]; 5]);

impl<T: Real> Mat5<T> {
    pub fn zero() -> Self {
        Mat5([[T::zero(); 5]; 5])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..5 {
            m.0[i][i] = T::one();
        }
        m
    }

    /// `e_ab` with a single unit entry.
    pub fn elementary(a: usize, b: usize) -> Self {
        let mut m = Self::zero();
        m.0[a][b] = T::one();
        m
    }

    pub fn diag(d: [T; 5]) -> Self {
        let mut m = Self::zero();
        for (i, v) in d.into_iter().enumerate() {
            m.0[i][i] = v;
        }
        m
    }

    /// `diag(1, -1, -1, -1, -1)`.
    pub fn metric() -> Self {
        let one = T::one();
        Self::diag([one, -one, -one, -one, -one])
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.0[i][j]
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..5 {
            for j in 0..5 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn scale(&self, k: T) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|x| *x = *x * k);
        m
    }

    pub fn max_abs(&self) -> T {
        self.0.iter().flatten().fold(T::zero(), |a, &x| a.max(x.abs()))
    }

    pub fn trace(&self) -> T {
        (0..5).fold(T::zero(), |a, i| a + self.0[i][i])
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    #[allow(clippy::needless_range_loop)]
    pub fn det(&self) -> T {
        let mut a = self.0;
        let mut det = T::one();
        for col in 0..5 {
            let pivot = (col..5)
                .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
                .unwrap();
            if a[pivot][col] == T::zero() {
                return T::zero();
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det = det * a[col][col];
            for row in col + 1..5 {
                let f = a[row][col] / a[col][col];
                for k in col..5 {
                    a[row][k] = a[row][k] - f * a[col][k];
                }
            }
        }
        det
    }

    /// Matrix exponential: scaling and squaring around an 18-term Taylor sum.
    pub fn exp(&self) -> Self {
        let norm = self.max_abs() * T::lit(5.0);
        let mut squarings = 0;
        let mut scaled = *self;
        if norm > T::lit(0.5) {
            let s = (norm / T::lit(0.5)).log2().ceil().to_i32().unwrap_or(0).max(0);
            squarings = s;
            scaled = self.scale(T::lit(0.5).powi(s));
        }
        let mut term = Self::identity();
        let mut sum = Self::identity();
        for k in 1..=18 {
            term = (term * scaled).scale(T::one() / T::from_i32(k).unwrap());
            sum = sum + term;
        }
        for _ in 0..squarings {
            sum = sum * sum;
        }
        sum
    }

    /// `‖Mᵀ η M − η‖∞`: zero when `M` preserves `x0² − x1² − … − x4²`.
    pub fn form_residual(&self) -> T {
        let g = Self::metric();
        (self.transpose() * g * *self - g).max_abs()
    }

    /// `‖Lᵀ η + η L‖∞`: zero when `L` lies in so(1,4).
    pub fn algebra_residual(&self) -> T {
        let g = Self::metric();
        (self.transpose() * g + g * *self).max_abs()
    }
}

impl<T: Real> Add for Mat5<T> {
    type Output = Mat5<T>;
    fn add(self, o: Mat5<T>) -> Mat5<T> {
        let mut m = self;
        for i in 0..5 {
            for j in 0..5 {
                m.0[i][j] = m.0[i][j] + o.0[i][j];
            }
        }
        m
    }
}

impl<T: Real> Sub for Mat5<T> {
    type Output = Mat5<T>;
    fn sub(self, o: Mat5<T>) -> Mat5<T> {
        self + (-o)
    }
}

impl<T: Real> Neg for Mat5<T> {
    type Output = Mat5<T>;
    fn neg(self) -> Mat5<T> {
        self.scale(-T::one())
    }
}

impl<T: Real> Mul for Mat5<T> {
    type Output = Mat5<T>;
    fn mul(self, o: Mat5<T>) -> Mat5<T> {
        let mut m = Mat5::zero();
        for i in 0..5 {
            for j in 0..5 {
                let mut acc = T::zero();
                for k in 0..5 {
                    acc = acc + self.0[i][k] * o.0[k][j];
                }
                m.0[i][j] = acc;
            }
        }
        m
    }
}

/// `(μ, ν)` label of a basis element `L_{μν}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorIndex {
    pub mu: usize,
    pub nu: usize,
}

impl GeneratorIndex {
    pub fn new(mu: usize, nu: usize) -> Result<Self> {
        if mu > 4 || nu > 4 || mu == nu {
            return Err(Error::Index(format!("generator ({mu},{nu})")));
        }
        Ok(GeneratorIndex { mu, nu })
    }

    /// The ten pairs with `μ < ν`, in lexicographic order.
    pub fn all() -> Vec<GeneratorIndex> {
        let mut v = Vec::with_capacity(10);
        for mu in 0..5 {
            for nu in mu + 1..5 {
                v.push(GeneratorIndex { mu, nu });
            }
        }
        v
    }

    pub fn label(&self) -> String {
        format!("L{}{}", self.mu, self.nu)
    }
}

/// `L_{0r} = e_{0r} + e_{r0}` and `L_{rs} = -e_{rs} + e_{sr}`,
/// extended by `L_{νμ} = -L_{μν}`.
pub fn generator<T: Real>(mu: usize, nu: usize) -> Result<Mat5<T>> {
    let idx = GeneratorIndex::new(mu, nu)?;
    Ok(generator_at(idx))
}

pub fn generator_at<T: Real>(idx: GeneratorIndex) -> Mat5<T> {
    let (a, b) = (idx.mu, idx.nu);
    if a > b {
        return -generator_at(GeneratorIndex { mu: b, nu: a });
    }
    if a == 0 {
        Mat5::elementary(0, b) + Mat5::elementary(b, 0)
    } else {
        Mat5::elementary(b, a) - Mat5::elementary(a, b)
    }
}

pub fn commutator<T: Real>(a: &Mat5<T>, b: &Mat5<T>) -> Mat5<T> {
    *a * *b - *b * *a
}

fn g_entry<T: Real>(a: usize, b: usize) -> T {
    match (a, b) {
        (0, 0) => T::one(),
        (x, y) if x == y => -T::one(),
        _ => T::zero(),
    }
}

fn gen_or_zero<T: Real>(a: usize, b: usize) -> Mat5<T> {
    if a == b {
        Mat5::zero()
    } else {
        generator_at(GeneratorIndex { mu: a, nu: b })
    }
}

/// Right side of the structure relations for `[L_{μν}, L_{ρσ}]`.
pub fn structure_rhs<T: Real>(x: GeneratorIndex, y: GeneratorIndex) -> Mat5<T> {
    let (m, n, r, s) = (x.mu, x.nu, y.mu, y.nu);
    gen_or_zero::<T>(m, s).scale(g_entry(n, r)) + gen_or_zero::<T>(n, r).scale(g_entry(m, s))
        - gen_or_zero::<T>(n, s).scale(g_entry(m, r))
        - gen_or_zero::<T>(m, r).scale(g_entry(n, s))
}

/// `‖[L_x, L_y] − rhs‖∞` for all 45 unordered generator pairs.
pub fn structure_residuals() -> Vec<(String, f64)> {
    let all = GeneratorIndex::all();
    let mut out = Vec::with_capacity(45);
    for (i, &x) in all.iter().enumerate() {
        for &y in &all[i + 1..] {
            let lhs = commutator(&generator_at::<f64>(x), &generator_at(y));
            let r = (lhs - structure_rhs(x, y)).max_abs();
            out.push((format!("[{},{}]", x.label(), y.label()), r));
        }
    }
    out
}

pub struct Casimirs<T> {
    pub f: Mat5<T>,
    pub w: Mat5<T>,
}

/// `F` and `W` assembled term by term from the generators exactly as written,
/// including the index pattern of the first two squared combinations in `W`.
pub fn casimir_matrices<T: Real>() -> Casimirs<T> {
    let l = |a: usize, b: usize| generator_at::<T>(GeneratorIndex { mu: a, nu: b });
    let sq = |m: Mat5<T>| m * m;
    let mut f = Mat5::zero();
    for (a, b) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
        f = f + sq(l(a, b));
    }
    for r in 1..5 {
        f = f - sq(l(0, r));
    }
    let w = sq(l(1, 2) * l(2, 4) - l(1, 3) * l(2, 4) + l(1, 4) * l(2, 3))
        - sq(l(1, 2) * l(3, 4) - l(0, 3) * l(2, 4) + l(0, 4) * l(2, 3))
        - sq(l(0, 1) * l(3, 4) - l(0, 3) * l(1, 4) + l(0, 4) * l(1, 3))
        - sq(l(0, 1) * l(2, 4) - l(0, 2) * l(1, 4) + l(0, 4) * l(1, 2))
        - sq(l(0, 1) * l(2, 3) - l(0, 2) * l(1, 3) + l(0, 3) * l(1, 2));
    Casimirs { f, w }
}

/// Element of the one-parameter subgroup generated by `L_{04}`.
pub fn iwasawa_a<T: Real>(alpha: T) -> Mat5<T> {
    let mut m = Mat5::identity();
    m.0[0][0] = alpha.cosh();
    m.0[4][4] = alpha.cosh();
    m.0[0][4] = alpha.sinh();
    m.0[4][0] = alpha.sinh();
    m
}

/// `exp(t(L01+L14) + r(L02+L24) + s(L03+L34))` in closed form.
pub fn iwasawa_n<T: Real>(r: T, s: T, t: T) -> Mat5<T> {
    let h = (r * r + s * s + t * t) / T::lit(2.0);
    let mut m = nilpotent_frame(r, s, t);
    m.0[0][0] = T::one() + h;
    m.0[0][4] = -h;
    m.0[4][0] = h;
    m.0[4][4] = T::one() - h;
    m
}

/// The nilpotent matrix with the printed last column `-(r²+s²+t²)` and
/// `1 - (r²+s²+t²)`; kept for reporting, it does not preserve the form.
pub fn iwasawa_n_printed<T: Real>(r: T, s: T, t: T) -> Mat5<T> {
    let q = r * r + s * s + t * t;
    let mut m = nilpotent_frame(r, s, t);
    m.0[0][0] = T::one() + q / T::lit(2.0);
    m.0[0][4] = -q;
    m.0[4][0] = q / T::lit(2.0);
    m.0[4][4] = T::one() - q;
    m
}

fn nilpotent_frame<T: Real>(r: T, s: T, t: T) -> Mat5<T> {
    let mut m = Mat5::identity();
    for (k, v) in [(1, t), (2, r), (3, s)] {
        m.0[0][k] = v;
        m.0[k][0] = v;
        m.0[4][k] = v;
        m.0[k][4] = -v;
    }
    m
}

/// Complex 5×5 matrix held as a pair of real parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMat5 {
    pub re: Mat5<f64>,
    pub im: Mat5<f64>,
}

impl CMat5 {
    pub fn zero() -> Self {
        CMat5 { re: Mat5::zero(), im: Mat5::zero() }
    }

    /// `i·L`.
    pub fn times_i(l: Mat5<f64>) -> Self {
        CMat5 { re: Mat5::zero(), im: l }
    }

    pub fn mul(&self, o: &CMat5) -> CMat5 {
        CMat5 {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    pub fn add(&self, o: &CMat5) -> CMat5 {
        CMat5 { re: self.re + o.re, im: self.im + o.im }
    }

    pub fn sub(&self, o: &CMat5) -> CMat5 {
        CMat5 { re: self.re - o.re, im: self.im - o.im }
    }

    /// Multiply by the complex scalar `a + ib`.
    pub fn scale(&self, a: f64, b: f64) -> CMat5 {
        CMat5 {
            re: self.re.scale(a) - self.im.scale(b),
            im: self.re.scale(b) + self.im.scale(a),
        }
    }

    pub fn commutator(&self, o: &CMat5) -> CMat5 {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn max_abs(&self) -> f64 {
        self.re.max_abs().max(self.im.max_abs())
    }
}

/// The physical generators `J = iL` grouped as rotations `M`, the vector `P`,
/// boosts `N` and `P0`.
pub struct PhysicalGenerators {
    pub m: [CMat5; 3],
    pub p: [CMat5; 3],
    pub n: [CMat5; 3],
    pub p0: CMat5,
}

impl PhysicalGenerators {
    pub fn new() -> Self {
        let j = |a, b| CMat5::times_i(generator_at(GeneratorIndex { mu: a, nu: b }));
        PhysicalGenerators {
            m: [j(2, 3), j(3, 1), j(1, 2)],
            p: [j(1, 4), j(2, 4), j(3, 4)],
            n: [j(0, 1), j(0, 2), j(0, 3)],
            p0: j(0, 4),
        }
    }
}

impl Default for PhysicalGenerators {
    fn default() -> Self {
        Self::new()
    }
}

fn levi_civita(k: usize, l: usize, m: usize) -> f64 {
    match (k, l, m) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Residuals of every bracket relation among `M, N, P, P0`.
pub fn physical_bracket_residuals() -> Vec<(String, f64)> {
    let g = PhysicalGenerators::new();
    let mut out = Vec::new();
    // i·Σ_m ε_{klm} X_m scaled by `sign`
    let eps_sum = |k: usize, l: usize, x: &[CMat5; 3], sign: f64| {
        (0..3).fold(CMat5::zero(), |acc, m| acc.add(&x[m].scale(0.0, sign * levi_civita(k, l, m))))
    };
    let mut push = |name: String, lhs: CMat5, rhs: CMat5| out.push((name, lhs.sub(&rhs).max_abs()));
    for k in 0..3 {
        for l in 0..3 {
            let (a, b) = (k + 1, l + 1);
            push(format!("[M{a},M{b}]"), g.m[k].commutator(&g.m[l]), eps_sum(k, l, &g.m, 1.0));
            push(format!("[N{a},N{b}]"), g.n[k].commutator(&g.n[l]), eps_sum(k, l, &g.m, -1.0));
            push(format!("[P{a},P{b}]"), g.p[k].commutator(&g.p[l]), eps_sum(k, l, &g.m, 1.0));
            push(format!("[M{a},N{b}]"), g.m[k].commutator(&g.n[l]), eps_sum(k, l, &g.n, 1.0));
            push(format!("[M{a},P{b}]"), g.m[k].commutator(&g.p[l]), eps_sum(k, l, &g.p, 1.0));
            let delta = if k == l { 1.0 } else { 0.0 };
            push(format!("[P{a},N{b}]"), g.p[k].commutator(&g.n[l]), g.p0.scale(0.0, delta));
        }
        let a = k + 1;
        push(format!("[M{a},P0]"), g.m[k].commutator(&g.p0), CMat5::zero());
        push(format!("[P0,N{a}]"), g.p0.commutator(&g.n[k]), g.p[k].scale(0.0, 1.0));
        push(format!("[P0,P{a}]"), g.p0.commutator(&g.p[k]), g.n[k].scale(0.0, 1.0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_diag() {
        let m = Mat5::<f64>::diag([1.0, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!(m.det(), 120.0);
        let mut p = Mat5::<f64>::zero();
        for (i, j) in [(0, 1), (1, 0), (2, 2), (3, 3), (4, 4)] {
            p.0[i][j] = 1.0;
        }
        assert_eq!(p.det(), -1.0);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(Mat5::<f64>::zero().exp(), Mat5::identity());
    }
}
