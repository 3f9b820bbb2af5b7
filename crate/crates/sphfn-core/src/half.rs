//! Exact half-integers, stored doubled.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// Accepts values whose double is integral.
    pub fn from_f64(x: f64) -> Result<Self> {
        let t = 2.0 * x;
        if !t.is_finite() || t.fract() != 0.0 || t.abs() > 1e15 {
            return Err(Error::Index(format!("{x} is not a half-integer")));
        }
        Ok(HalfInt { twice: t as i64 })
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    /// The integer value; only meaningful when `is_integer`.
    pub fn to_int(self) -> i64 {
        debug_assert!(self.is_integer());
        self.twice / 2
    }

    /// `-self, -self+1, ..., self`.
    /// Empty for negative `self`.
    pub fn ladder(self) -> impl DoubleEndedIterator<Item = HalfInt> + Clone {
        let l = self.twice;
        let count = if l < 0 { 0 } else { l as usize + 1 };
        (0..count).map(move |r| HalfInt { twice: 2 * r as i64 - l })
    }

    /// Dimension `2l + 1` of the ladder.
    pub fn dim(self) -> usize {
        if self.twice < 0 {
            0
        } else {
            self.twice as usize + 1
        }
    }

    /// Checks `l >= 0`, `|m|, |n| <= l` and `l - m`, `l - n` integral.
    pub fn check_triple(l: HalfInt, m: HalfInt, n: HalfInt) -> Result<()> {
        if l.twice < 0 {
            return Err(Error::Index(format!("negative weight {l}")));
        }
        for (name, x) in [("m", m), ("n", n)] {
            if x.twice.abs() > l.twice || (l.twice - x.twice) % 2 != 0 {
                return Err(Error::Index(format!("{name} = {x} not admissible for l = {l}")));
            }
        }
        Ok(())
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + o.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - o.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl PartialOrd for HalfInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.twice.cmp(&other.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `3`, `-1/2`, `1.5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Index(format!("cannot parse half-integer from {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            match den.trim() {
                "1" => Ok(HalfInt::int(num)),
                "2" => Ok(HalfInt::from_twice(num)),
                _ => Err(bad()),
            }
        } else {
            let x: f64 = s.parse().map_err(|_| bad())?;
            HalfInt::from_f64(x)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_integer() {
            s.serialize_i64(self.twice / 2)
        } else {
            s.serialize_f64(self.value())
        }
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        let parsed = match Raw::deserialize(d)? {
            Raw::Num(x) => HalfInt::from_f64(x),
            Raw::Text(s) => s.parse(),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_runs_from_minus_l_to_l() {
        let l = HalfInt::from_twice(3);
        let v: Vec<i64> = l.ladder().map(|h| h.twice()).collect();
        assert_eq!(v, vec![-3, -1, 1, 3]);
        assert_eq!(HalfInt::ZERO.ladder().count(), 1);
        assert_eq!(HalfInt::from_twice(-2).ladder().count(), 0);
    }

    #[test]
    fn parse_forms() {
        assert_eq!("-1/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-1));
        assert_eq!("1.5".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::int(2));
        assert!("0.3".parse::<HalfInt>().is_err());
        assert!("1/3".parse::<HalfInt>().is_err());
    }

    #[test]
    fn triple_check() {
        let h = HalfInt::from_twice;
        assert!(HalfInt::check_triple(h(1), h(-1), h(1)).is_ok());
        assert!(HalfInt::check_triple(h(1), h(0), h(1)).is_err());
        assert!(HalfInt::check_triple(h(2), h(4), h(0)).is_err());
    }
}
