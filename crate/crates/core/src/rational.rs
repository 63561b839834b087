//! Exact rational scores.
//!
//! Every criterion value is carried as a reduced fraction so that optimal
//! alignments under normalized criteria can be compared without rounding.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced fraction with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<i128>);

/// How [`Rational::to_decimal`] drops digits past the requested precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rounding {
    /// Round to nearest, ties to the even digit.
    #[default]
    HalfEven,
    /// Drop the extra digits (round toward zero).
    Truncate,
}

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));

    pub fn new(numer: i128, denom: i128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Overflow("building a fraction with zero denominator"));
        }
        Ok(Rational(Ratio::new(numer, denom)))
    }

    pub fn from_integer(n: i128) -> Self {
        Rational(Ratio::from_integer(n))
    }

    /// `numer / denom`, or zero when `denom == 0`.
    ///
    /// This is the normalization convention every length-normalized criterion
    /// uses for the empty alignment.
    pub fn ratio_or_zero(numer: i128, denom: i128) -> Self {
        if denom == 0 {
            Self::ZERO
        } else {
            Rational(Ratio::new(numer, denom))
        }
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// Decimal rendering with exactly `decimals` fractional digits.
    pub fn to_decimal(&self, decimals: u32, rounding: Rounding) -> String {
        let scale = 10i128.pow(decimals);
        let negative = self.numer() < 0;
        let numer = self.numer().abs() * scale;
        let (mut q, r) = numer.div_rem(&self.denom());
        if rounding == Rounding::HalfEven {
            let twice = 2 * r;
            if twice > self.denom() || (twice == self.denom() && q.is_odd()) {
                q += 1;
            }
        }
        let int_part = q / scale;
        let frac_part = q % scale;
        let sign = if negative && q != 0 { "-" } else { "" };
        if decimals == 0 {
            format!("{sign}{int_part}")
        } else {
            format!(
                "{sign}{int_part}.{frac_part:0width$}",
                width = decimals as usize
            )
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n` or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(0, format!("not a rational number: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i128 = p.trim().parse().map_err(|_| bad())?;
                let q: i128 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Rational::new(p, q)
            }
            None => s
                .parse::<i128>()
                .map(Rational::from_integer)
                .map_err(|_| bad()),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n as i128)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

/// Panics on division by zero, like integer division.
impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |a, b| a + b)
    }
}

/// Serialized as `{"num": .., "den": ..}`.
#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: i128,
    den: i128,
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRepr {
            num: self.numer(),
            den: self.denom(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(d)?;
        Rational::new(repr.num, repr.den).map_err(serde::de::Error::custom)
    }
}
