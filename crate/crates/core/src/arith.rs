//! Exact integer and rational arithmetic.
//!
//! [`Int`] is an arbitrary-precision signed integer and [`Rat`] an
//! arbitrary-precision fraction kept in canonical form: positive denominator,
//! `gcd(|num|, den) = 1`, and a unique representation of zero (`0/1`). Because
//! every constructor and every operation canonicalizes, structural equality
//! *is* mathematical equality, and the identity checks elsewhere in the crate
//! reduce to `==`. No floating point appears anywhere.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Int(BigInt);

impl Int {
    pub fn zero() -> Int {
        Int(BigInt::zero())
    }

    pub fn one() -> Int {
        Int(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// `self^exp`, with the convention `0^0 = 1`.
    pub fn pow(&self, exp: u32) -> Int {
        Int(self.0.pow(exp))
    }

    /// Quotient and remainder of truncated division. Panics if `other` is zero.
    pub fn div_rem(&self, other: &Int) -> (Int, Int) {
        use num_integer::Integer;
        let (q, r) = self.0.div_rem(&other.0);
        (Int(q), Int(r))
    }

}

macro_rules! int_from_prim {
    ($($t:ty)+) => {$(
        impl From<$t> for Int {
            fn from(value: $t) -> Int {
                Int(BigInt::from(value))
            }
        }
    )+};
}
int_from_prim!(i32 i64 u32 u64 usize);

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Int {
    type Err = Error;

    /// Plain decimal with an optional leading sign; nothing else.
    fn from_str(s: &str) -> Result<Int> {
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseInt(s.to_owned()));
        }
        Ok(Int(BigInt::from_str(s).expect("validated decimal literal")))
    }
}

macro_rules! int_binop {
    ($Op:ident $op:ident) => {
        impl $Op for Int {
            type Output = Int;
            fn $op(self, rhs: Int) -> Int {
                Int((self.0).$op(rhs.0))
            }
        }
        impl $Op<&Int> for Int {
            type Output = Int;
            fn $op(self, rhs: &Int) -> Int {
                Int((self.0).$op(&rhs.0))
            }
        }
        impl $Op<Int> for &Int {
            type Output = Int;
            fn $op(self, rhs: Int) -> Int {
                Int((&self.0).$op(rhs.0))
            }
        }
        impl $Op<&Int> for &Int {
            type Output = Int;
            fn $op(self, rhs: &Int) -> Int {
                Int((&self.0).$op(&rhs.0))
            }
        }
    };
}
int_binop!(Add add);
int_binop!(Sub sub);
int_binop!(Mul mul);

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Int> for Int {
    fn mul_assign(&mut self, rhs: &Int) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        Int(-self.0)
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        Int(-&self.0)
    }
}

/// Arbitrary-precision rational in canonical form.
///
/// The denominator is always positive and coprime to the numerator; the sign
/// lives on the numerator. Canonicalization happens eagerly in every
/// constructor and arithmetic operation, never lazily.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Canonical fraction `num/den`. Fails on a zero denominator.
    pub fn new(num: Int, den: Int) -> Result<Rat> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(num.0, den.0)))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn from_int(value: Int) -> Rat {
        Rat(BigRational::from_integer(value.0))
    }

    /// Signed numerator of the canonical form.
    pub fn numer(&self) -> Int {
        Int(self.0.numer().clone())
    }

    /// Denominator of the canonical form; always positive.
    pub fn denom(&self) -> Int {
        Int(self.0.denom().clone())
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

    /// Multiplicative inverse. Fails on zero.
    pub fn inv(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }
}

impl From<i64> for Rat {
    fn from(value: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(value)))
    }
}

impl From<Int> for Rat {
    fn from(value: Int) -> Rat {
        Rat::from_int(value)
    }
}

impl fmt::Display for Rat {
    /// `p/q` with positive `q`, or just `p` when the value is an integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Grammar: optional sign, decimal integer, then optionally `/` and a
    /// positive unsigned decimal integer. Locale-free; no whitespace.
    fn from_str(s: &str) -> Result<Rat> {
        let bad = || Error::ParseRational(s.to_owned());
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num: Int = num_str.parse().map_err(|_| bad())?;
        let den = match den_str {
            None => Int::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                d.parse().map_err(|_| bad())?
            }
        };
        Rat::new(num, den).map_err(|_| bad())
    }
}

macro_rules! rat_binop {
    ($Op:ident $op:ident) => {
        impl $Op for Rat {
            type Output = Rat;
            fn $op(self, rhs: Rat) -> Rat {
                Rat((self.0).$op(rhs.0))
            }
        }
        impl $Op<&Rat> for Rat {
            type Output = Rat;
            fn $op(self, rhs: &Rat) -> Rat {
                Rat((self.0).$op(&rhs.0))
            }
        }
        impl $Op<Rat> for &Rat {
            type Output = Rat;
            fn $op(self, rhs: Rat) -> Rat {
                Rat((&self.0).$op(rhs.0))
            }
        }
        impl $Op<&Rat> for &Rat {
            type Output = Rat;
            fn $op(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$op(&rhs.0))
            }
        }
    };
}
rat_binop!(Add add);
rat_binop!(Sub sub);
rat_binop!(Mul mul);

impl Div<&Rat> for &Rat {
    type Output = Rat;
    /// Panics on a zero divisor; use [`Rat::inv`] for the checked form.
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat((&self.0).div(&rhs.0))
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

/// Binomial coefficient `C(n, k)`, with the summation-friendly convention
/// that out-of-range `k` (negative or above `n`) yields zero.
pub fn binomial(n: usize, k: isize) -> Int {
    if k < 0 || k as usize > n {
        return Int::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Int(acc)
}

/// Exact `n!`.
pub fn factorial(n: usize) -> Int {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Int(acc)
}
