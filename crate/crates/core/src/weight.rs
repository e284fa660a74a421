//! Tropical numbers: exact rationals extended by `-inf`.

use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Exact rational used for every weight and coordinate.
pub type Rational = num_rational::BigRational;

/// Shorthand for the integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An element of `R ∪ {-inf}` under max-plus arithmetic.
///
/// The derived order puts `NegInf` below every finite value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropicalWeight {
    NegInf,
    Finite(Rational),
}

impl TropicalWeight {
    pub fn zero() -> Self {
        TropicalWeight::Finite(Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        TropicalWeight::Finite(int(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropicalWeight::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropicalWeight::Finite(r) => Some(r),
            TropicalWeight::NegInf => None,
        }
    }

    /// Tropical sum, i.e. the maximum.
    pub fn max_plus(self, other: Self) -> Self {
        core::cmp::max(self, other)
    }

    /// `self - other` when both are finite.
    pub fn checked_sub(&self, other: &Self) -> Option<Rational> {
        Some(self.finite()? - other.finite()?)
    }
}

impl From<Rational> for TropicalWeight {
    fn from(r: Rational) -> Self {
        TropicalWeight::Finite(r)
    }
}

impl From<i64> for TropicalWeight {
    fn from(n: i64) -> Self {
        TropicalWeight::from_int(n)
    }
}

impl Add for TropicalWeight {
    type Output = TropicalWeight;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (TropicalWeight::Finite(a), TropicalWeight::Finite(b)) => TropicalWeight::Finite(a + b),
            _ => TropicalWeight::NegInf,
        }
    }
}

impl<'a> Add<&'a TropicalWeight> for &'a TropicalWeight {
    type Output = TropicalWeight;

    fn add(self, rhs: &'a TropicalWeight) -> TropicalWeight {
        match (self, rhs) {
            (TropicalWeight::Finite(a), TropicalWeight::Finite(b)) => TropicalWeight::Finite(a + b),
            _ => TropicalWeight::NegInf,
        }
    }
}

impl AddAssign<&TropicalWeight> for TropicalWeight {
    fn add_assign(&mut self, rhs: &TropicalWeight) {
        match (&mut *self, rhs) {
            (TropicalWeight::Finite(a), TropicalWeight::Finite(b)) => *a += b,
            _ => *self = TropicalWeight::NegInf,
        }
    }
}

impl Sum for TropicalWeight {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(TropicalWeight::zero(), |acc, w| acc + w)
    }
}

impl<'a> Sum<&'a TropicalWeight> for TropicalWeight {
    fn sum<I: Iterator<Item = &'a TropicalWeight>>(iter: I) -> Self {
        let mut acc = TropicalWeight::zero();
        for w in iter {
            acc += w;
        }
        acc
    }
}

impl fmt::Display for TropicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalWeight::NegInf => f.write_str("-inf"),
            TropicalWeight::Finite(r) => write!(f, "{r}"),
        }
    }
}

/// Rounds `x` to the nearest multiple of `1/den`.
pub fn rational_from_f64(x: f64, den: i64) -> Rational {
    let scaled = libm::round(x * den as f64);
    Rational::new(BigInt::from(scaled as i64), BigInt::from(den))
}

/// Lossy conversion used for rendering and spectral comparisons.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(if r.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}
