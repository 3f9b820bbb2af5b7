use serde::{Deserialize, Serialize};

use super::{Hyper, QuatEuler, Signature};
use crate::error::{Error, Result};
use crate::Real;

/// Row-major 2x2 matrix over [`Hyper`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HyperMatrix<T> {
    pub a: Hyper<T>,
    pub b: Hyper<T>,
    pub c: Hyper<T>,
    pub d: Hyper<T>,
}

impl<T: Real> HyperMatrix<T> {
    pub fn new(a: Hyper<T>, b: Hyper<T>, c: Hyper<T>, d: Hyper<T>) -> Self {
        HyperMatrix { a, b, c, d }
    }

    pub fn identity(sig: Signature) -> Self {
        let (o, z) = (Hyper::one(sig), Hyper::zero(sig));
        HyperMatrix::new(o, z, z, o)
    }

    pub fn diag(p: Hyper<T>, q: Hyper<T>) -> Self {
        let z = Hyper::zero(p.sig);
        HyperMatrix::new(p, z, z, q)
    }

    pub fn sig(&self) -> Signature {
        self.a.sig
    }

    pub fn entries(&self) -> [[Hyper<T>; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn entry(&self, row: usize, col: usize) -> Hyper<T> {
        self.entries()[row][col]
    }

    fn same_sig(&self) -> bool {
        let s = self.a.sig;
        self.b.sig == s && self.c.sig == s && self.d.sig == s
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if !self.same_sig() || !o.same_sig() || self.sig() != o.sig() {
            return Err(Error::SignatureMismatch);
        }
        Ok(HyperMatrix::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        ))
    }

    /// Largest component difference over all four entries.
    pub fn max_diff(&self, o: &Self) -> T {
        let mut m = T::zero();
        for (p, q) in [(self.a, o.a), (self.b, o.b), (self.c, o.c), (self.d, o.d)] {
            for (u, v) in p.components().iter().zip(q.components()) {
                m = m.max((*u - v).abs());
            }
        }
        m
    }
}

impl Serialize for HyperMatrix<f64> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

impl<'de> Deserialize<'de> for HyperMatrix<f64> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [[a, b], [c, d]] = <[[Hyper<f64>; 2]; 2]>::deserialize(d)?;
        Ok(HyperMatrix::new(a, b, c, d))
    }
}

/// `diag(exp(u α/2), exp(-u α/2))`.
fn half_exp_diag<T: Real>(unit: Hyper<T>, angle: T) -> HyperMatrix<T> {
    let half = unit.scale(angle / T::lit(2.0));
    HyperMatrix::diag(half.exp(), (-half).exp())
}

/// `[[cos α/2, i sin α/2], [i sin α/2, cos α/2]]`.
fn rotation<T: Real>(sig: Signature, angle: T) -> HyperMatrix<T> {
    let h = angle / T::lit(2.0);
    let c = Hyper::scalar(sig, h.cos());
    let s = Hyper::i(sig).scale(h.sin());
    HyperMatrix::new(c, s, s, c)
}

/// `[[cosh α/2, sinh α/2], [sinh α/2, cosh α/2]]`.
fn boost<T: Real>(sig: Signature, rapidity: T) -> HyperMatrix<T> {
    let h = rapidity / T::lit(2.0);
    let c = Hyper::scalar(sig, h.cosh());
    let s = Hyper::scalar(sig, h.sinh());
    HyperMatrix::new(c, s, s, c)
}

/// The ten one-parameter subgroups of Sp(1,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subgroup {
    M12,
    M13,
    M23,
    P14,
    P24,
    P34,
    N01,
    N02,
    N03,
    P04,
}

impl Subgroup {
    pub const ALL: [Subgroup; 10] = [
        Subgroup::M12,
        Subgroup::M13,
        Subgroup::M23,
        Subgroup::P14,
        Subgroup::P24,
        Subgroup::P34,
        Subgroup::N01,
        Subgroup::N02,
        Subgroup::N03,
        Subgroup::P04,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Subgroup::M12 => "m12",
            Subgroup::M13 => "m13",
            Subgroup::M23 => "m23",
            Subgroup::P14 => "p14",
            Subgroup::P24 => "p24",
            Subgroup::P34 => "p34",
            Subgroup::N01 => "n01",
            Subgroup::N02 => "n02",
            Subgroup::N03 => "n03",
            Subgroup::P04 => "p04",
        }
    }
}

/// One-parameter subgroup matrix over the anti-quaternions.
pub fn subgroup<T: Real>(which: Subgroup, t: T) -> HyperMatrix<T> {
    let s = Signature::ANTI;
    let h = t / T::lit(2.0);
    match which {
        Subgroup::M12 => half_exp_diag(Hyper::i(s), t),
        Subgroup::M13 => {
            let (c, sn) = (Hyper::scalar(s, h.cos()), Hyper::scalar(s, h.sin()));
            HyperMatrix::new(c, -sn, sn, c)
        }
        Subgroup::M23 | Subgroup::P14 => rotation(s, t),
        Subgroup::P24 => {
            let c = Hyper::scalar(s, h.cos());
            let js = Hyper::j(s).scale(h.sin());
            HyperMatrix::new(c, -js, js, c)
        }
        Subgroup::P34 => half_exp_diag(Hyper::k(s), t),
        Subgroup::N01 => boost(s, t),
        Subgroup::N02 => {
            let c = Hyper::scalar(s, h.cosh());
            let is = Hyper::i(s).scale(h.sinh());
            HyperMatrix::new(c, is, -is, c)
        }
        Subgroup::N03 | Subgroup::P04 => half_exp_diag(Hyper::one(s), t),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CartanFamily {
    Su2,
    Sl2c,
    Spin4,
    Sp11,
}

/// Ordered product of the factor matrices of the selected family.
///
/// Factors are multiplied left to right in the printed order; `spin4` carries
/// ς and χ on the unit `i` (the double-number embedding), `sp11` on `k` and `j`.
pub fn cartan_compose<T: Real>(
    angles: &QuatEuler<T>,
    family: CartanFamily,
) -> Result<HyperMatrix<T>> {
    angles.validate()?;
    Ok(cartan_compose_unchecked(angles, family))
}

/// As [`cartan_compose`] without range validation (periodic extension).
pub fn cartan_compose_unchecked<T: Real>(g: &QuatEuler<T>, family: CartanFamily) -> HyperMatrix<T> {
    let s = Signature::ANTI;
    let (one, i, j, k) = (Hyper::one(s), Hyper::i(s), Hyper::j(s), Hyper::k(s));
    let factors: Vec<HyperMatrix<T>> = match family {
        CartanFamily::Su2 => vec![
            half_exp_diag(i, g.phi),
            rotation(s, g.theta),
            half_exp_diag(i, g.psi),
        ],
        CartanFamily::Sl2c => vec![
            half_exp_diag(i, g.phi),
            half_exp_diag(one, g.eps),
            rotation(s, g.theta),
            boost(s, g.tau),
            half_exp_diag(i, g.psi),
            half_exp_diag(one, g.eps2),
        ],
        CartanFamily::Spin4 => vec![
            half_exp_diag(i, g.phi),
            half_exp_diag(i, g.vsig),
            rotation(s, g.theta),
            rotation(s, g.phi2),
            half_exp_diag(i, g.psi),
            half_exp_diag(i, g.chi),
        ],
        CartanFamily::Sp11 => vec![
            half_exp_diag(i, g.phi),
            half_exp_diag(one, g.eps),
            half_exp_diag(k, g.vsig),
            rotation(s, g.theta),
            boost(s, g.tau),
            rotation(s, g.phi2),
            half_exp_diag(i, g.psi),
            half_exp_diag(one, g.eps2),
            half_exp_diag(one, g.omega),
            half_exp_diag(j, g.chi),
        ],
    };
    factors
        .iter()
        .fold(HyperMatrix::identity(s), |acc, f| acc.try_mul(f).expect("one signature throughout"))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MembershipReport {
    pub is_member: bool,
    /// Residuals with `|q|²` the Euclidean (Hamilton) norm.
    pub residuals: Vec<(String, f64)>,
    /// The same conditions with `|q|² = q q̄` in the entries' own signature.
    pub split_is_member: bool,
    pub split_residuals: Vec<(String, f64)>,
}

/// Both blocks of the `det = 1` conditions:
/// `āb = c̄d, |a|²-|c|² = 1, |d|²-|b|² = 1` and
/// `ac̄ = bd̄, |a|²-|b|² = 1, |d|²-|c|² = 1`.
pub fn sp11_membership<T: Real>(m: &HyperMatrix<T>, tol: T) -> Result<MembershipReport> {
    if !m.same_sig() {
        return Err(Error::SignatureMismatch);
    }
    let f = |x: T| x.to_f64().unwrap();
    let (a, b, c, d) = (m.a, m.b, m.c, m.d);
    let p1 = f((a.conj() * b - c.conj() * d).max_abs());
    let p2 = f((a * c.conj() - b * d.conj()).max_abs());
    let eval = |norm: &dyn Fn(&Hyper<T>) -> T| -> Vec<(String, f64)> {
        let one = T::one();
        vec![
            ("conj(a)b - conj(c)d".to_string(), p1),
            ("|a|^2 - |c|^2 - 1".to_string(), f((norm(&a) - norm(&c) - one).abs())),
            ("|d|^2 - |b|^2 - 1".to_string(), f((norm(&d) - norm(&b) - one).abs())),
            ("a conj(c) - b conj(d)".to_string(), p2),
            ("|a|^2 - |b|^2 - 1".to_string(), f((norm(&a) - norm(&b) - one).abs())),
            ("|d|^2 - |c|^2 - 1".to_string(), f((norm(&d) - norm(&c) - one).abs())),
        ]
    };
    let residuals = eval(&|q| q.euclid_sq());
    let split_residuals = eval(&|q| q.norm());
    let ok = |r: &[(String, f64)]| r.iter().all(|(_, v)| *v < f(tol));
    Ok(MembershipReport {
        is_member: ok(&residuals),
        split_is_member: ok(&split_residuals),
        residuals,
        split_residuals,
    })
}

/// `w = (az + b)(cz + d)⁻¹`.
pub fn fractional_linear<T: Real>(m: &HyperMatrix<T>, z: &Hyper<T>) -> Result<Hyper<T>> {
    if !m.same_sig() || m.sig() != z.sig {
        return Err(Error::SignatureMismatch);
    }
    let num = m.a * *z + m.b;
    let den = m.c * *z + m.d;
    Ok(num * den.inv()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_rotation_entries() {
        let g = QuatEuler { theta: 0.8, ..QuatEuler::zero() };
        let m = cartan_compose(&g, CartanFamily::Su2).unwrap();
        assert!((m.a.w - 0.4f64.cos()).abs() < 1e-15);
        assert!((m.b.x - 0.4f64.sin()).abs() < 1e-15);
        assert!((m.c.x - 0.4f64.sin()).abs() < 1e-15);
    }

    #[test]
    fn translation_moves_point() {
        let s = Signature::ANTI;
        let b = Hyper::new(s, 0.3, -0.2, 0.5, 0.1);
        let m = HyperMatrix::new(Hyper::one(s), b, Hyper::zero(s), Hyper::one(s));
        let z = Hyper::new(s, 1.0, 2.0, 0.0, -1.0);
        let w = fractional_linear(&m, &z).unwrap();
        assert!((w - (z + b)).max_abs() < 1e-15);
    }
}
