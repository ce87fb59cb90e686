//! Canonical arbitrary-precision rationals.
//!
//! [`Rat`] wraps a [`BigRational`], which is always stored in lowest terms
//! with a positive denominator. The text form is `[-]n[/d]`, e.g. `-35/9`
//! or `6`; parsing accepts non-canonical input (`4/6`, `+2`, `−3`) and
//! canonicalizes it.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Domain("zero denominator"));
        }
        Ok(Rat(BigRational::new(numer.into(), denom)))
    }

    /// Construct from small integers; panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(numer.into(), denom.into()))
    }

    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rat(&self.0 * &self.0)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero"));
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero"));
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    /// Decimal digits in the larger of numerator and denominator.
    pub fn digits(&self) -> usize {
        fn count(n: &BigInt) -> usize {
            n.magnitude().to_str_radix(10).len()
        }
        count(self.numer()).max(count(self.denom()))
    }

    /// Lossy conversion, for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn to_text(&self) -> String {
        use alloc::string::ToString;
        self.to_string()
    }
}

/// Nonnegative rational square root, present iff numerator and denominator
/// are both perfect squares.
pub fn rat_sqrt(q: &Rat) -> Result<Option<Rat>> {
    if q.is_negative() {
        return Err(Error::Domain("square root of a negative rational"));
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    if &(&rn * &rn) != n {
        return Ok(None);
    }
    let rd = d.sqrt();
    if &(&rd * &rd) != d {
        return Ok(None);
    }
    Ok(Some(Rat(BigRational::new(rn, rd))))
}

/// Integer square root if `n` is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&(&r * &r) == n).then_some(r)
}

/// Clears denominators of `values` and divides by the content, returning
/// coprime integers with the sign unchanged.
pub fn primitive_integers(values: &[Rat]) -> alloc::vec::Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    let ints: alloc::vec::Vec<BigInt> = values.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let mut g = BigInt::zero();
    for i in &ints {
        g = g.gcd(i);
    }
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|i| i / &g).collect()
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let (neg, digits) = if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('\u{2212}') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('+') {
        (false, rest)
    } else {
        (false, s)
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n = BigInt::parse_bytes(digits.as_bytes(), 10)?;
    Some(if neg { -n } else { n })
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let numer = parse_int(n).ok_or(Error::Parse)?;
        let denom = match d {
            Some(d) => {
                let d = d.trim();
                if !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse);
                }
                parse_int(d).ok_or(Error::Parse)?
            }
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(Error::Parse);
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_bigint(n)
    }
}

impl From<BigRational> for Rat {
    fn from(q: BigRational) -> Self {
        Rat(q)
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && self.0.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer((*other).into())))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(&self.0 $op rhs.0)
            }
        }
        impl $trait<i64> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: i64) -> Rat {
                Rat(&self.0 $op BigRational::from_integer(rhs.into()))
            }
        }
        impl $trait<i64> for Rat {
            type Output = Rat;
            fn $method(self, rhs: i64) -> Rat {
                Rat(self.0 $op BigRational::from_integer(rhs.into()))
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
// Panics on division by zero, like the primitive types; use `checked_div`
// where zero is reachable from input.
binop!(Div, div, /);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl core::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl<'a> core::iter::Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

#[macro_export]
macro_rules! rat {
    ($n:expr) => {
        $crate::Rat::int($n)
    };
    ($n:expr, $d:expr) => {
        $crate::Rat::frac($n, $d)
    };
}
