use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Decimal digits of pi after the point, truncated.
const PI_DIGITS: &str = "14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808651";

pub const DEFAULT_PRECISION: usize = 30;
/// Largest precision the built-in pi supports once guard digits are added.
pub const MAX_PRECISION: usize = 90;
const GUARD_DIGITS: usize = 12;

/// Working digits for a requested output precision.
pub fn working_places(precision: usize) -> Result<u32> {
    if precision == 0 || precision > MAX_PRECISION {
        return Err(Error::Precision { requested: precision, max: MAX_PRECISION });
    }
    Ok((precision + GUARD_DIGITS) as u32)
}

fn pow10(places: u32) -> BigInt {
    BigInt::from(10u32).pow(places)
}

/// Closed interval `[lo, hi] / 10^places` known to contain a real number.
/// Every operation rounds outward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    places: u32,
}

impl Interval {
    pub fn exact(q: &Rational, places: u32) -> Self {
        let n = q.numer() * pow10(places);
        Interval {
            lo: n.div_floor(q.denom()),
            hi: n.div_ceil(q.denom()),
            places,
        }
    }

    pub fn pi(places: u32) -> Self {
        assert!(places as usize <= PI_DIGITS.len(), "pi is tabulated to {} digits", PI_DIGITS.len());
        let lo = BigInt::from_str(&format!("3{}", &PI_DIGITS[..places as usize])).expect("digits");
        let hi = &lo + 1;
        Interval { lo, hi, places }
    }

    pub fn places(&self) -> u32 {
        self.places
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.places, rhs.places);
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi, places: self.places }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.places, rhs.places);
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo, places: self.places }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.places, rhs.places);
        let s = pow10(self.places);
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let min = products.iter().min().expect("four products");
        let max = products.iter().max().expect("four products");
        Interval { lo: min.div_floor(&s), hi: max.div_ceil(&s), places: self.places }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let a = &self.lo * q.numer();
        let b = &self.hi * q.numer();
        let (lo, hi) = if q.is_negative() { (b, a) } else { (a, b) };
        Interval { lo: lo.div_floor(q.denom()), hi: hi.div_ceil(q.denom()), places: self.places }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Interval::exact(&Rational::from_integer(BigInt::from(1)), self.places);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Square root of an interval of nonnegative numbers; a negative lower
    /// bound is clamped to zero.
    pub fn sqrt(&self) -> Self {
        let s = pow10(self.places);
        let lo = if self.lo.is_negative() { BigInt::zero() } else { (&self.lo * &s).sqrt() };
        let x = &self.hi * &s;
        let r = x.sqrt();
        let hi = if &r * &r == x { r } else { r + 1 };
        Interval { lo, hi, places: self.places }
    }

    /// Width `hi - lo` as an exact rational.
    pub fn width(&self) -> Rational {
        Rational::new(&self.hi - &self.lo, pow10(self.places))
    }

    /// Upper bound on the absolute value.
    pub fn magnitude(&self) -> Rational {
        Rational::new(self.lo.abs().max(self.hi.abs()), pow10(self.places))
    }

    /// Midpoint rounded half away from zero to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let num = (&self.lo + &self.hi) * pow10(digits as u32);
        let den = BigInt::from(2) * pow10(self.places);
        let q = Rational::new(num, den).round().to_integer();
        format_scaled(&q, digits)
    }
}

fn format_scaled(v: &BigInt, digits: usize) -> String {
    let sign = if v.sign() == Sign::Minus { "-" } else { "" };
    let s = v.abs().to_string();
    if digits == 0 {
        return format!("{sign}{s}");
    }
    let padded = format!("{s:0>width$}", width = digits + 1);
    let (int, frac) = padded.split_at(padded.len() - digits);
    format!("{sign}{int}.{frac}")
}

/// The Gaussian range parameter alpha: either a rational multiple of pi or a
/// plain positive rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alpha {
    PiMultiple(Rational),
    Value(Rational),
}

impl Default for Alpha {
    fn default() -> Self {
        Alpha::PiMultiple(Rational::from_integer(BigInt::from(1)))
    }
}

impl Alpha {
    /// `(pi / alpha)^(3/2)` enclosed at `places` digits.
    pub fn volume_factor(&self, places: u32) -> Interval {
        let t = match self {
            Alpha::PiMultiple(q) => Interval::exact(&q.recip(), places),
            Alpha::Value(a) => Interval::pi(places).scale(&a.recip()),
        };
        t.mul(&t.sqrt())
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    if let Some((a, b)) = s.split_once('/') {
        let a = BigInt::from_str(a.trim()).ok()?;
        let b = BigInt::from_str(b.trim()).ok()?;
        return (!b.is_zero()).then(|| Rational::new(a, b));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let int = if int.is_empty() { "0" } else { int };
    let whole = BigInt::from_str(&format!("{int}{frac}")).ok()?;
    Some(Rational::new(whole, pow10(frac.len() as u32)))
}

impl FromStr for Alpha {
    type Err = Error;

    /// Accepts `pi`, `4pi`, `4*pi`, `1/2pi`, `π`, `2.5`, `3/7`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::domain(format!("cannot parse alpha `{s}`: expected a positive number, optionally times pi"));
        let stripped = t.strip_suffix("pi").or_else(|| t.strip_suffix('π'));
        let alpha = match stripped {
            Some(head) => {
                let head = head.trim().trim_end_matches('*').trim();
                let q = if head.is_empty() { Rational::from_integer(BigInt::from(1)) } else { parse_rational(head).ok_or_else(bad)? };
                Alpha::PiMultiple(q)
            }
            None => Alpha::Value(parse_rational(t).ok_or_else(bad)?),
        };
        let (Alpha::PiMultiple(q) | Alpha::Value(q)) = &alpha;
        if !q.is_positive() {
            return Err(Error::domain(format!("alpha must be positive, got `{s}`")));
        }
        Ok(alpha)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::PiMultiple(q) if q == &Rational::from_integer(BigInt::from(1)) => f.write_str("pi"),
            Alpha::PiMultiple(q) => write!(f, "{q}pi"),
            Alpha::Value(q) => write!(f, "{q}"),
        }
    }
}
