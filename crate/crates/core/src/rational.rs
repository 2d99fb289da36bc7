//! Exact rational scalars.
//!
//! Every sign decision in this crate is made on exact values. Rationals are
//! arbitrary precision; the hot enumeration loops work on an integer image
//! obtained by clearing denominators (see [`IntegerHyperplane`]).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rational = BigRational;

/// Builds a rational from an integer.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Builds the rational `num / den`. Panics when `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, an integer, or a plain decimal such as `"-0.125"`.
///
/// Scientific notation, `inf`, `nan` and empty strings are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational literal `{text}`"));
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let num = parse_integer(p.trim()).ok_or_else(bad)?;
        let den = parse_integer(q.trim()).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{text}`")));
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (whole, fraction) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && fraction.is_empty() {
        return Err(bad());
    }
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(whole) || !all_digits(fraction) {
        return Err(bad());
    }
    let digits = format!("{whole}{fraction}");
    let mut num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
    if negative {
        num = -num;
    }
    let den = num_traits::pow(BigInt::from(10), fraction.len());
    Ok(Rational::new(num, den))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

/// Canonical text form: `"p"` for integers, `"p/q"` in lowest terms otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Lossy conversion for display only.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Infinity norm of a rational vector.
pub fn max_abs(values: &[Rational]) -> Rational {
    values.iter().map(|v| v.abs()).max().unwrap_or_else(Rational::zero)
}

/// A nonnegative rational extended with `+∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Extended {
    Finite(Rational),
    Infinity,
}

impl Extended {
    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extended {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Extended::Finite(a), Extended::Finite(b)) => a.cmp(b),
            (Extended::Finite(_), Extended::Infinity) => Ordering::Less,
            (Extended::Infinity, Extended::Finite(_)) => Ordering::Greater,
            (Extended::Infinity, Extended::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => f.write_str(&format_rational(v)),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

/// Integer image of a hyperplane `y·v = μ`: `weights = L·v`, `offset = L·μ`
/// for the least positive `L` clearing every denominator.
///
/// Positive scaling preserves every sign and every ratio
/// `|y·v − μ| / ‖v‖∞`, so enumeration loops can stay in `i128`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerHyperplane {
    pub weights: Vec<i128>,
    pub offset: i128,
    pub scale: BigInt,
}

impl IntegerHyperplane {
    pub fn new(v: &[Rational], mu: &Rational) -> Result<Self> {
        let scale = v.iter().chain(std::iter::once(mu)).fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let lift = |r: &Rational| -> Result<i128> {
            (r.numer() * (&scale / r.denom()))
                .to_i128()
                .filter(|x| x.unsigned_abs() < (1u128 << 100))
                .ok_or_else(|| Error::Overflow("coefficient too large for the integer fast path".into()))
        };
        let weights = v.iter().map(lift).collect::<Result<Vec<_>>>()?;
        let offset = lift(mu)?;
        Ok(Self { weights, offset, scale })
    }

    pub fn max_abs_weight(&self) -> i128 {
        self.weights.iter().map(|w| w.abs()).max().unwrap_or(0)
    }

    /// Maps an integer in the scaled domain back to a rational.
    pub fn unscale(&self, value: i128) -> Rational {
        Rational::new(BigInt::from(value), self.scale.clone())
    }
}
