use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::Rational;

/// Non-negative half-integer spin, stored as `2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: u32,
}

impl HalfInt {
    pub const fn from_twice(twice: u32) -> Self {
        HalfInt { twice }
    }

    pub const fn twice(self) -> u32 {
        self.twice
    }

    /// `2j + 1`
    pub const fn dim(self) -> usize {
        self.twice as usize + 1
    }

    pub fn as_rational(self) -> Rational {
        Rational::new(self.twice as i64, 2)
    }

    /// `j(j+1)`
    pub fn casimir_value(self) -> Rational {
        let t = self.twice as i64;
        Rational::new(t * (t + 2), 4)
    }

    /// All spins `0, 1/2, ..., self`.
    pub fn up_to(self) -> impl Iterator<Item = HalfInt> {
        (0..=self.twice).map(HalfInt::from_twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Accepts `"3/2"`, `"1"`, `"2/2"`. Decimals are rejected.
impl FromStr for HalfInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidHalfInt(s.to_string());
        let t = s.trim();
        let twice: i64 = match t.split_once('/') {
            Some((n, "2")) => n.trim().parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => 2 * t.parse::<i64>().map_err(|_| bad())?,
        };
        u32::try_from(twice).map(HalfInt::from_twice).map_err(|_| bad())
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Sign of `T` on the highest-weight vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub const BOTH: [Epsilon; 2] = [Epsilon::Plus, Epsilon::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }

    pub fn as_rational(self) -> Rational {
        Rational::from_integer(self.sign())
    }

    pub fn flip(self) -> Epsilon {
        match self {
            Epsilon::Plus => Epsilon::Minus,
            Epsilon::Minus => Epsilon::Plus,
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Plus => "+1",
            Epsilon::Minus => "-1",
        })
    }
}

impl FromStr for Epsilon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Epsilon::Plus),
            "-1" | "-" => Ok(Epsilon::Minus),
            other => Err(Error::InvalidSign(other.to_string())),
        }
    }
}

impl Serialize for Epsilon {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.sign())
    }
}

impl<'de> Deserialize<'de> for Epsilon {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match i64::deserialize(d)? {
            1 => Ok(Epsilon::Plus),
            -1 => Ok(Epsilon::Minus),
            other => Err(serde::de::Error::custom(format!("invalid epsilon {other}"))),
        }
    }
}
