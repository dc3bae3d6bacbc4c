use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::octonion::Octonion;

/// A finite value or the point at infinity.
///
/// Serializes as the finite value itself or as the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Extended<T> {
    Finite(T),
    Infinity,
}

pub type ExtendedOctonion = Extended<Octonion>;
pub type ExtendedComplex = Extended<Complex64>;

impl<T> Extended<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }

    pub fn finite(&self) -> Option<&T> {
        match self {
            Extended::Finite(x) => Some(x),
            Extended::Infinity => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Extended<U> {
        match self {
            Extended::Finite(x) => Extended::Finite(f(x)),
            Extended::Infinity => Extended::Infinity,
        }
    }
}

impl<T> From<T> for Extended<T> {
    fn from(x: T) -> Self {
        Extended::Finite(x)
    }
}

impl ExtendedOctonion {
    /// Both infinite, or both finite and within `tol·max(1, |x|, |y|)`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (Extended::Infinity, Extended::Infinity) => true,
            (Extended::Finite(x), Extended::Finite(y)) => {
                (*x - *y).norm() <= tol * x.norm().max(y.norm()).max(1.0)
            }
            _ => false,
        }
    }

    /// Distance on the one-point compactification: finite distance between
    /// finite points, infinite between a finite point and ∞.
    pub fn distance(&self, other: &Self) -> f64 {
        match (self, other) {
            (Extended::Infinity, Extended::Infinity) => 0.0,
            (Extended::Finite(x), Extended::Finite(y)) => (*x - *y).norm(),
            _ => f64::INFINITY,
        }
    }
}

impl ExtendedComplex {
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (Extended::Infinity, Extended::Infinity) => true,
            (Extended::Finite(x), Extended::Finite(y)) => {
                (x - y).norm() <= tol * x.norm().max(y.norm()).max(1.0)
            }
            _ => false,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(x) => x.fmt(f),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

/// Serialization shim: finite complex numbers as `[re, im]`.
pub trait ExtendedRepr: Sized {
    type Repr: Serialize + for<'de> Deserialize<'de>;
    fn to_repr(&self) -> Self::Repr;
    fn from_repr(r: Self::Repr) -> Result<Self, String>;
}

impl ExtendedRepr for Octonion {
    type Repr = Octonion;
    fn to_repr(&self) -> Octonion {
        *self
    }
    fn from_repr(r: Octonion) -> Result<Self, String> {
        Ok(r)
    }
}

impl ExtendedRepr for Complex64 {
    type Repr = [f64; 2];
    fn to_repr(&self) -> [f64; 2] {
        [self.re, self.im]
    }
    fn from_repr(r: [f64; 2]) -> Result<Self, String> {
        Ok(Complex64::new(r[0], r[1]))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Wire<R> {
    Marker(String),
    Value(R),
}

impl<T: ExtendedRepr> Serialize for Extended<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(x) => x.to_repr().serialize(s),
            Extended::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de, T: ExtendedRepr> Deserialize<'de> for Extended<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Wire::<T::Repr>::deserialize(d)? {
            Wire::Marker(m) if m == "inf" => Ok(Extended::Infinity),
            Wire::Marker(m) => Err(serde::de::Error::custom(format!(
                "expected \"inf\" or a finite value, got {m:?}"
            ))),
            Wire::Value(r) => T::from_repr(r)
                .map(Extended::Finite)
                .map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_encoding() {
        let inf: ExtendedOctonion = Extended::Infinity;
        assert_eq!(serde_json::to_string(&inf).unwrap(), "\"inf\"");
        let w: ExtendedOctonion = Extended::Finite(Octonion::I);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, "[0.0,1.0,0.0,0.0,0.0,0.0,0.0,0.0]");
        assert_eq!(serde_json::from_str::<ExtendedOctonion>(&s).unwrap(), w);
        assert_eq!(serde_json::from_str::<ExtendedOctonion>("\"inf\"").unwrap(), inf);
        assert!(serde_json::from_str::<ExtendedOctonion>("\"nan\"").is_err());
        let z: ExtendedComplex = Extended::Finite(Complex64::new(1.0, -2.0));
        assert_eq!(serde_json::to_string(&z).unwrap(), "[1.0,-2.0]");
    }
}
