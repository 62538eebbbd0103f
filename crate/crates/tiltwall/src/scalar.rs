//! Exact rational scalars.
//!
//! Everything in the core is computed over an exact rational type; there is
//! no floating point anywhere in the math paths. The trait below abstracts
//! over the two concrete choices: arbitrary-precision [`Rat`] for the public
//! API and machine-word [`Rat128`] for enumeration hot loops.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{BigRational, One, Signed, Zero};

/// Arbitrary-precision rational, the default scalar of the crate.
pub type Rat = BigRational;

/// Fixed-width rational used internally where inputs are known small.
pub type Rat128 = Ratio<i128>;

/// An exact rational scalar.
///
/// Implementors must keep values in lowest terms with positive denominator
/// (both `num` backends do) and support exact field arithmetic.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Eq + PartialOrd + Ord + Hash + Zero + One + Signed
{
    fn from_int(n: i64) -> Self;
    fn from_frac(numer: i64, denom: i64) -> Self;
    /// True iff the value is an integer (denominator one).
    fn is_integer(&self) -> bool;
    /// Parse "a" or "a/b". Returns `None` on malformed input or zero denominator.
    fn parse(text: &str) -> Option<Self>;
    /// Lossless conversion into the arbitrary-precision scalar.
    fn to_rat(&self) -> Rat;
}

impl Scalar for Rat {
    fn from_int(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        Rat::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn is_integer(&self) -> bool {
        self.denom().is_one()
    }

    fn parse(text: &str) -> Option<Self> {
        parse_ratio(text).map(|(n, d)| Rat::new(n, d))
    }

    fn to_rat(&self) -> Rat {
        self.clone()
    }
}

impl Scalar for Rat128 {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n as i128)
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        Ratio::new(numer as i128, denom as i128)
    }

    fn is_integer(&self) -> bool {
        *self.denom() == 1
    }

    fn parse(text: &str) -> Option<Self> {
        let (n, d) = parse_ratio(text)?;
        Some(Ratio::new(i128::try_from(n).ok()?, i128::try_from(d).ok()?))
    }

    fn to_rat(&self) -> Rat {
        Rat::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

fn parse_ratio(text: &str) -> Option<(BigInt, BigInt)> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse().ok()?, d.trim().parse().ok()?),
        None => (text.parse().ok()?, BigInt::one()),
    };
    if d == BigInt::zero() {
        return None;
    }
    Some((n, d))
}

/// Render a rational as "a" or "a/b", never as a decimal.
pub fn format_rat<R: Scalar>(value: &R) -> String {
    let r = value.to_rat();
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
