//! Four-component hypercomplex numbers with a runtime unit signature.
//!
//! With `i² = s_i`, `j² = s_j` and `k = ij`, associativity and
//! anticommutation of distinct units fix the rest of the table:
//! `k² = -s_i s_j`, `jk = -s_j i`, `kj = s_j i`, `ki = -s_i j`, `ik = s_i j`.
//! Hamilton quaternions are `(-1, -1)`; the anti-quaternions used for the
//! Sp(1,1) matrix entries are `(-1, +1)`.

mod angles;
mod matrix;

pub use angles::{composite_trig, CompositeAngles, CompositeTrig, QuatEuler};
pub use matrix::{
    cartan_compose, cartan_compose_unchecked, fractional_linear, sp11_membership, subgroup,
    CartanFamily, HyperMatrix,
    MembershipReport, Subgroup,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    s_i: i8,
    s_j: i8,
}

impl Signature {
    pub const HAMILTON: Signature = Signature { s_i: -1, s_j: -1 };
    pub const ANTI: Signature = Signature { s_i: -1, s_j: 1 };

    pub fn new(s_i: i8, s_j: i8) -> Result<Self> {
        if s_i.abs() != 1 || s_j.abs() != 1 {
            return Err(Error::Domain(format!("unit squares must be +-1, got ({s_i}, {s_j})")));
        }
        Ok(Signature { s_i, s_j })
    }

    pub fn s_i(self) -> i8 {
        self.s_i
    }

    pub fn s_j(self) -> i8 {
        self.s_j
    }

    pub fn s_k(self) -> i8 {
        -self.s_i * self.s_j
    }

    fn tag(self) -> String {
        match self {
            Signature::HAMILTON => "hamilton".into(),
            Signature::ANTI => "anti".into(),
            Signature { s_i, s_j } => format!("split({s_i},{s_j})"),
        }
    }

    fn from_tag(s: &str) -> Result<Self> {
        match s {
            "hamilton" => Ok(Signature::HAMILTON),
            "anti" => Ok(Signature::ANTI),
            other => {
                let inner = other
                    .strip_prefix("split(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Domain(format!("unknown signature {other:?}")))?;
                let (a, b) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Domain(format!("unknown signature {other:?}")))?;
                let parse = |t: &str| {
                    t.trim()
                        .parse::<i8>()
                        .map_err(|_| Error::Domain(format!("unknown signature {other:?}")))
                };
                Signature::new(parse(a)?, parse(b)?)
            }
        }
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.tag())
    }
}

impl<'de> Deserialize<'de> for Signature {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Signature::from_tag(&s).map_err(serde::de::Error::custom)
    }
}

/// `w + x i + y j + z k` under `sig`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hyper<T> {
    pub sig: Signature,
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Hyper<T> {
    pub fn new(sig: Signature, w: T, x: T, y: T, z: T) -> Self {
        Hyper { sig, w, x, y, z }
    }

    pub fn scalar(sig: Signature, w: T) -> Self {
        Hyper::new(sig, w, T::zero(), T::zero(), T::zero())
    }

    pub fn zero(sig: Signature) -> Self {
        Hyper::scalar(sig, T::zero())
    }

    pub fn one(sig: Signature) -> Self {
        Hyper::scalar(sig, T::one())
    }

    pub fn i(sig: Signature) -> Self {
        Hyper::new(sig, T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j(sig: Signature) -> Self {
        Hyper::new(sig, T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k(sig: Signature) -> Self {
        Hyper::new(sig, T::zero(), T::zero(), T::zero(), T::one())
    }

    /// Embeds `re + im·i`.
    pub fn complex(sig: Signature, re: T, im: T) -> Self {
        Hyper::new(sig, re, im, T::zero(), T::zero())
    }

    pub fn components(&self) -> [T; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn pure(&self) -> Self {
        Hyper::new(self.sig, T::zero(), self.x, self.y, self.z)
    }

    pub fn conj(&self) -> Self {
        Hyper::new(self.sig, self.w, -self.x, -self.y, -self.z)
    }

    pub fn scale(&self, s: T) -> Self {
        Hyper::new(self.sig, self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// Scalar value of `p²` for the pure part `p`.
    pub fn pure_square(&self) -> T {
        let sk = T::from_i8(self.sig.s_k()).unwrap();
        let si = T::from_i8(self.sig.s_i).unwrap();
        let sj = T::from_i8(self.sig.s_j).unwrap();
        si * self.x * self.x + sj * self.y * self.y + sk * self.z * self.z
    }

    /// `q q̄`, a scalar in every signature; indefinite unless Hamilton.
    pub fn norm(&self) -> T {
        self.w * self.w - self.pure_square()
    }

    /// Euclidean sum of squares of the components.
    pub fn euclid_sq(&self) -> T {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn max_abs(&self) -> T {
        self.components().iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|c| c.is_finite())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.sig != o.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(self.mul_unchecked(o))
    }

    fn mul_unchecked(&self, o: &Self) -> Self {
        let si = T::from_i8(self.sig.s_i).unwrap();
        let sj = T::from_i8(self.sig.s_j).unwrap();
        let sk = T::from_i8(self.sig.s_k()).unwrap();
        let (a, b) = (self, o);
        Hyper::new(
            self.sig,
            a.w * b.w + si * a.x * b.x + sj * a.y * b.y + sk * a.z * b.z,
            a.w * b.x + a.x * b.w - sj * a.y * b.z + sj * a.z * b.y,
            a.w * b.y + a.y * b.w + si * a.x * b.z - si * a.z * b.x,
            a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x,
        )
    }

    /// `exp(w + p) = e^w (C(s) + p S(s))` with `s = p²`.
    pub fn exp(&self) -> Self {
        let s = self.pure_square();
        let (c, sc) = if s < T::zero() {
            let r = (-s).sqrt();
            (r.cos(), sinc(r, false))
        } else if s > T::zero() {
            let r = s.sqrt();
            (r.cosh(), sinc(r, true))
        } else {
            (T::one(), T::one())
        };
        let ew = self.w.exp();
        Hyper::new(self.sig, ew * c, ew * sc * self.x, ew * sc * self.y, ew * sc * self.z)
    }

    /// `q̄ / (q q̄)`.
    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        let floor = T::epsilon() * T::lit(8.0) * self.euclid_sq();
        if n.abs() <= floor || n == T::zero() {
            return Err(Error::NullNorm);
        }
        Ok(self.conj().scale(T::one() / n))
    }

    pub fn cast<U: Real>(&self) -> Hyper<U> {
        let c = |v: T| U::from_f64(v.to_f64().unwrap()).unwrap();
        Hyper::new(self.sig, c(self.w), c(self.x), c(self.y), c(self.z))
    }
}

/// `sin r / r` or `sinh r / r` with a series near zero.
fn sinc<T: Real>(r: T, hyperbolic: bool) -> T {
    if r < T::lit(1e-4) {
        let r2 = r * r;
        let sign = if hyperbolic { T::one() } else { -T::one() };
        T::one() + sign * r2 / T::lit(6.0) + r2 * r2 / T::lit(120.0)
    } else if hyperbolic {
        r.sinh() / r
    } else {
        r.sin() / r
    }
}

/// Fallible product; errors when signatures differ.
pub fn h_mul<T: Real>(a: &Hyper<T>, b: &Hyper<T>) -> Result<Hyper<T>> {
    a.try_mul(b)
}

pub fn h_exp<T: Real>(x: &Hyper<T>) -> Hyper<T> {
    x.exp()
}

pub fn h_inv<T: Real>(q: &Hyper<T>) -> Result<Hyper<T>> {
    q.inv()
}

impl<T: Real> Add for Hyper<T> {
    type Output = Hyper<T>;
    fn add(self, o: Self) -> Self {
        assert_eq!(self.sig, o.sig, "adding hypercomplex numbers of different signatures");
        Hyper::new(self.sig, self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Real> Sub for Hyper<T> {
    type Output = Hyper<T>;
    fn sub(self, o: Self) -> Self {
        assert_eq!(self.sig, o.sig, "subtracting hypercomplex numbers of different signatures");
        Hyper::new(self.sig, self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Real> Neg for Hyper<T> {
    type Output = Hyper<T>;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

/// Panics on a signature mismatch; use [`Hyper::mul`] for the fallible form.
impl<T: Real> Mul for Hyper<T> {
    type Output = Hyper<T>;
    fn mul(self, o: Self) -> Self {
        assert_eq!(self.sig, o.sig, "multiplying hypercomplex numbers of different signatures");
        self.mul_unchecked(&o)
    }
}

impl<T: Real> fmt::Display for Hyper<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i {:+}j {:+}k", self.w, self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = Hyper<f64>;

    #[test]
    fn anti_table() {
        let s = Signature::ANTI;
        let (i, j, k) = (H::i(s), H::j(s), H::k(s));
        assert_eq!(i * i, -H::one(s));
        assert_eq!(j * j, H::one(s));
        assert_eq!(k * k, H::one(s));
        assert_eq!(i * j, k);
        assert_eq!(j * i, -k);
        assert_eq!(k * i, j);
        assert_eq!(i * k, -j);
        assert_eq!(k * j, i);
        assert_eq!(j * k, -i);
    }

    #[test]
    fn hamilton_table() {
        let s = Signature::HAMILTON;
        let (i, j, k) = (H::i(s), H::j(s), H::k(s));
        assert_eq!(i * i, -H::one(s));
        assert_eq!(k * k, -H::one(s));
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = H::i(Signature::ANTI);
        let b = H::i(Signature::HAMILTON);
        assert_eq!(a.try_mul(&b), Err(Error::SignatureMismatch));
    }

    #[test]
    fn null_norm_in_split_plane() {
        let s = Signature::ANTI;
        let q = H::one(s) + H::j(s);
        assert_eq!(q.inv(), Err(Error::NullNorm));
        let i_inv = H::i(s).inv().unwrap();
        assert_eq!(i_inv, -H::i(s));
        assert_eq!(H::scalar(s, 2.0).inv().unwrap().w, 0.5);
    }

    #[test]
    fn signature_tags_round_trip() {
        for sig in [Signature::HAMILTON, Signature::ANTI, Signature::new(1, 1).unwrap()] {
            assert_eq!(Signature::from_tag(&sig.tag()).unwrap(), sig);
        }
    }
}
