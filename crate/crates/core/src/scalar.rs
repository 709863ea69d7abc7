//! Exact scalar abstraction.
//!
//! Every computation in the crate is generic over [`Scalar`], an exact field
//! of characteristic zero. The blanket implementation covers
//! `num_rational::Ratio<T>` for any signed machine or big integer, so the
//! engine runs unchanged over `BigRational` (the default) or the fixed-width
//! `Ratio<i64>` / `Ratio<i128>`. Floating-point types are intentionally not
//! implementors: weight conditions are exact equalities and integrality tests.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}` (expected [-]<digits>[/<digits>])")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("rational literal `{0}` does not fit the scalar type")]
    Overflow(String),
}

/// An exact field element.
pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    /// `numer / denom`; panics on a zero denominator.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// The value as an `i64` when it is an integer that fits.
    fn to_i64(&self) -> Option<i64>;

    /// Canonical `num/den` text: lowest terms, positive denominator, always
    /// with an explicit denominator (`3/1`, `-1/4`).
    fn to_fraction_string(&self) -> String;

    /// Parses `[-]<digits>[/<digits>]`.
    fn parse_fraction(text: &str) -> Result<Self, ParseRationalError>;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn is_integer(&self) -> bool {
        self.to_i64().is_some()
    }

    /// The value as a positive integer, if it is one.
    fn positive_integer(&self) -> Option<u32> {
        self.to_i64()
            .filter(|&n| n > 0)
            .and_then(|n| u32::try_from(n).ok())
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Hash
        + fmt::Debug
        + fmt::Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static,
{
    fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        let n = T::from_i64(numer).expect("numerator fits scalar");
        let d = T::from_i64(denom).expect("denominator fits scalar");
        Ratio::new(n, d)
    }

    fn to_i64(&self) -> Option<i64> {
        if self.denom().is_one() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_fraction(text: &str) -> Result<Self, ParseRationalError> {
        if text.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let malformed = || ParseRationalError::Malformed(text.to_string());
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let (num_txt, den_txt) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(num_txt) || !den_txt.is_none_or(all_digits) {
            return Err(malformed());
        }
        let overflow = || ParseRationalError::Overflow(text.to_string());
        let mut numer = T::from_str(num_txt).map_err(|_| overflow())?;
        if negative {
            numer = -numer;
        }
        let denom = match den_txt {
            Some(d) => T::from_str(d).map_err(|_| overflow())?,
            None => T::one(),
        };
        if denom.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(text.to_string()));
        }
        Ok(Ratio::new(numer, denom))
    }
}

/// Shorthand used throughout the formulas.
pub(crate) fn q<S: Scalar>(numer: i64, denom: i64) -> S {
    S::from_ratio(numer, denom)
}

pub(crate) fn int<S: Scalar>(n: i64) -> S {
    S::from_i64(n)
}

pub(crate) fn half<S: Scalar>() -> S {
    S::from_ratio(1, 2)
}
