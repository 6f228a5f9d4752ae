//! Exact rational scalars.
//!
//! [`Rational`] wraps an arbitrary-precision fraction that is always kept in
//! canonical form (positive denominator, reduced). It serializes as the
//! string `"p/q"`, or `"p"` when the denominator is one.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    /// Panicking constructor for literals in code and tests.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn int(v: i64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }

    /// `numer / denom`, reduced. Panics on a zero denominator.
    pub fn from_parts(numer: BigInt, denom: BigInt) -> Self {
        Rational(BigRational::new(numer, denom))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Rational> {
        if exp >= 0 {
            Ok(self.powu(exp as u64))
        } else {
            Ok(self.recip()?.powu(exp.unsigned_abs()))
        }
    }

    /// Nonnegative integer power, with `0^0 = 1`.
    pub fn powu(&self, exp: u64) -> Rational {
        let mut acc = Rational::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// `1 - self`, which shows up everywhere in Bernstein weights.
    pub fn complement(&self) -> Rational {
        Rational::one() - self
    }

    /// Decimal-free textual form: `p/q` or `p`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: `{s}`"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::int(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_bigint(v)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

// Division panics on a zero divisor, matching integer division. Fallible
// call sites use `checked_div`.
forward_binop!(Div, div, /);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign<Rational> for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Running fraction left unreduced until `finish`.
#[derive(Clone, Debug)]
pub(crate) struct Accumulator {
    numer: BigInt,
    denom: BigInt,
}

impl Accumulator {
    pub(crate) fn new() -> Self {
        Accumulator {
            numer: BigInt::zero(),
            denom: BigInt::one(),
        }
    }

    pub(crate) fn add(&mut self, x: &Rational) {
        let (n, d) = (x.0.numer(), x.0.denom());
        if d == &self.denom {
            self.numer += n;
        } else if d.is_one() {
            self.numer += n * &self.denom;
        } else {
            self.numer = &self.numer * d + n * &self.denom;
            self.denom *= d;
        }
    }

    /// `self * t + c`.
    pub(crate) fn mul_add(&mut self, t: &Rational, c: &Rational) {
        self.numer *= t.0.numer();
        self.denom *= t.0.denom();
        self.add(c);
    }

    /// `self + x * c` for an integer `c`.
    pub(crate) fn add_scaled(&mut self, x: &Rational, c: &BigInt) {
        let (n, d) = (x.0.numer() * c, x.0.denom());
        if d == &self.denom {
            self.numer += n;
        } else if d.is_one() {
            self.numer += n * &self.denom;
        } else {
            self.numer = &self.numer * d + n * &self.denom;
            self.denom *= d;
        }
    }

    /// The total divided by a nonzero integer.
    pub(crate) fn finish_over(mut self, d: &BigInt) -> Rational {
        self.denom *= d;
        self.finish()
    }

    pub(crate) fn finish(self) -> Rational {
        Rational(BigRational::new(self.numer, self.denom))
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        let mut acc = Accumulator::new();
        iter.for_each(|x| acc.add(&x));
        acc.finish()
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        let mut acc = Accumulator::new();
        iter.for_each(|x| acc.add(x));
        acc.finish()
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Integer binomial coefficient `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    Rational::from_bigint(acc)
}

/// `k!` as a rational.
pub fn factorial(k: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    Rational::from_bigint(acc)
}

/// Rational sample points given as `"p/q"` literals. Panics on bad input.
pub fn rats(items: &[&str]) -> Vec<Rational> {
    items
        .iter()
        .map(|s| s.parse().expect("valid rational literal"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_is_exact() {
        assert_eq!(
            Rational::frac(1, 2) + Rational::frac(1, 3),
            Rational::frac(5, 6)
        );
    }

    #[test]
    fn canonical_form() {
        let r = Rational::frac(2, 4);
        assert_eq!(r.to_string(), "1/2");
        assert_eq!(Rational::frac(3, -6).to_string(), "-1/2");
        assert_eq!(Rational::frac(0, 5).to_string(), "0");
        assert_eq!(Rational::frac(0, 5).denom(), &BigInt::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = Rational::frac(3, 7)
            .checked_div(&Rational::zero())
            .unwrap_err();
        assert_eq!(err, Error::DivisionByZero);
        assert!(Rational::new(1, 0).is_err());
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn parse_and_print() {
        for s in ["7/8", "-3/2", "5", "0", "-12"] {
            assert_eq!(s.parse::<Rational>().unwrap().to_string(), s);
        }
        assert_eq!("6/4".parse::<Rational>().unwrap().to_string(), "3/2");
        assert!("x".parse::<Rational>().is_err());
        assert!("1/2/3".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_uses_strings() {
        let v = vec![Rational::frac(1, 2), Rational::int(3)];
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"["1/2","3"]"#);
        let back: Vec<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn powers() {
        assert_eq!(Rational::frac(2, 3).powu(3), Rational::frac(8, 27));
        assert_eq!(Rational::zero().powu(0), Rational::one());
        assert_eq!(Rational::frac(2, 3).pow(-2).unwrap(), Rational::frac(9, 4));
        assert!(Rational::zero().pow(-1).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(7, 2), Rational::int(21));
        assert_eq!(binom(4, 5), Rational::zero());
        assert_eq!(binom(4, -1), Rational::zero());
        assert_eq!(binom(0, 0), Rational::one());
        assert_eq!(factorial(5), Rational::int(120));
    }
}
