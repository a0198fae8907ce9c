//! Exact rational weight vectors.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{EngineError, Result};

/// Arbitrary-precision rational scalar used throughout the engine.
pub type Rat = num_rational::BigRational;

/// Rational from an integer pair, for literals in code and tests.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from(BigInt::from(num))
}

/// A weight in the standard coordinate realization of a root system.
///
/// Coordinates are exact rationals; equality and ordering are coordinate-wise
/// exact. The `Ord` impl is lexicographic, which for the realizations used
/// here refines the dominance order (every simple root is lex-positive).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    /// Weight from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight::new(coords.iter().map(|&c| rat_int(c)).collect())
    }

    /// Weight with all coordinates `num/den`.
    pub fn constant(len: usize, num: i64, den: i64) -> Self {
        Weight::new((0..len).map(|_| rat(num, den)).collect())
    }

    pub fn zero(len: usize) -> Self {
        Weight::constant(len, 0, 1)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Standard Euclidean dot product; the invariant form in every
    /// realization supported here.
    pub fn dot(&self, other: &Weight) -> Rat {
        debug_assert_eq!(self.len(), other.len());
        let mut acc = Rat::zero();
        for (a, b) in self.coords.iter().zip(other.coords.iter()) {
            acc += a * b;
        }
        acc
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    /// Reflection in the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &Weight) -> Weight {
        let coeff = rat_int(2) * self.dot(alpha) / alpha.norm_sq();
        let mut coords = self.coords.clone();
        for (c, a) in coords.iter_mut().zip(alpha.coords.iter()) {
            *c -= &coeff * a;
        }
        Weight::new(coords)
    }

    /// True if every coordinate is an integer.
    pub fn is_integral_vector(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// True if every coordinate is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.coords
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn scale(&self, s: &Rat) -> Weight {
        Weight::new(self.coords.iter().map(|c| c * s).collect())
    }

    /// Parses the CLI text syntax: comma-separated rationals,
    /// e.g. `11/2,5/2,3/2,1/2`.
    pub fn parse(text: &str) -> Result<Weight> {
        let coords = text
            .split(',')
            .map(|part| {
                Rat::from_str(part.trim())
                    .map_err(|_| EngineError::InvalidArgument(format_parse_error(text, part)))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(EngineError::InvalidArgument(
                "empty weight string".to_string(),
            ));
        }
        Ok(Weight::new(coords))
    }
}

fn format_parse_error(text: &str, part: &str) -> String {
    let mut s = String::from("cannot parse rational \"");
    s.push_str(part.trim());
    s.push_str("\" in weight \"");
    s.push_str(text);
    s.push('"');
    s
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.len(), rhs.len());
        Weight::new(
            self.coords
                .iter()
                .zip(rhs.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.len(), rhs.len());
        Weight::new(
            self.coords
                .iter()
                .zip(rhs.coords.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, rhs: i64) -> Weight {
        self.scale(&rat_int(rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w = Weight::parse("11/2,5/2,3/2,1/2").unwrap();
        assert_eq!(w.to_string(), "11/2,5/2,3/2,1/2");
        let v = Weight::parse("1, 0, -2 , 3/1").unwrap();
        assert_eq!(v.to_string(), "1,0,-2,3");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Weight::parse("1,x,3").is_err());
        assert!(Weight::parse("").is_err());
        assert!(Weight::parse("1/0,2").is_err());
    }

    #[test]
    fn reflection_is_involutive_and_isometric() {
        let alpha = Weight::from_ints(&[1, -1, 0, 0]);
        let w = Weight::parse("7/2,1/2,-3,5").unwrap();
        let r = w.reflect(&alpha);
        assert_eq!(r.reflect(&alpha), w);
        assert_eq!(r.norm_sq(), w.norm_sq());
    }

    #[test]
    fn dot_is_exact() {
        let a = Weight::parse("1/2,1/2,1/2,1/2").unwrap();
        assert_eq!(a.dot(&a), rat_int(1));
    }
}
