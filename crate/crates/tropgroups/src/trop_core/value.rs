use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::rat::{self, Rational};

/// An element of 𝕋. `Infinity` is the tropical zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TropValue {
    Finite(Rational),
    Infinity,
}

impl TropValue {
    /// Neutral element for ⊙.
    pub fn one() -> Self {
        TropValue::Finite(Rational::from_integer(0))
    }

    /// Neutral element for ⊕.
    pub fn zero() -> Self {
        TropValue::Infinity
    }

    pub fn finite(q: Rational) -> Self {
        TropValue::Finite(q)
    }

    pub fn int(n: i64) -> Self {
        TropValue::Finite(rat::int(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            TropValue::Finite(q) => Some(q),
            TropValue::Infinity => None,
        }
    }

    /// x ⊕ y = min(x, y).
    pub fn oplus(&self, other: &Self) -> Self {
        if self <= other {
            *self
        } else {
            *other
        }
    }

    /// x ⊙ y = x + y.
    pub fn otimes(&self, other: &Self) -> Self {
        match (self, other) {
            (TropValue::Finite(a), TropValue::Finite(b)) => TropValue::Finite(a + b),
            _ => TropValue::Infinity,
        }
    }
}

impl Ord for TropValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TropValue::Finite(a), TropValue::Finite(b)) => a.cmp(b),
            (TropValue::Finite(_), TropValue::Infinity) => Ordering::Less,
            (TropValue::Infinity, TropValue::Finite(_)) => Ordering::Greater,
            (TropValue::Infinity, TropValue::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for TropValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for TropValue {
    fn from(q: Rational) -> Self {
        TropValue::Finite(q)
    }
}

impl fmt::Display for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropValue::Finite(q) => f.write_str(&rat::format(q)),
            TropValue::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for TropValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim() == "inf" {
            Ok(TropValue::Infinity)
        } else {
            rat::parse(s).map(TropValue::Finite)
        }
    }
}

impl serde::Serialize for TropValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for TropValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
