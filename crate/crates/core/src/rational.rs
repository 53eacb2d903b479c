//! Reduced quotients of Laurent polynomials in `A`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{gcd, LaurentPoly};

/// `num / den` in canonical form:
///
/// * `num` and `den` share no nonconstant factor over the rationals;
/// * `den.min_exp() == 0` (monomial factors live in `num`);
/// * the lowest coefficient of `den` is positive;
/// * the integer contents of `num` and `den` are jointly coprime;
/// * zero is `0 / 1`.
///
/// Two canonical forms are equal exactly when the rational functions are.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RationalFnJson", into = "RationalFnJson")]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: LaurentPoly::one() }
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_monomial() {
            return Ok(Self::finish(num, den));
        }
        if let Ok(q) = num.divide_exact(&den) {
            return Ok(Self::from_poly(q));
        }
        let g = gcd(&num, &den);
        let num = num.divide_exact(&g).expect("gcd divides numerator");
        let den = den.divide_exact(&g).expect("gcd divides denominator");
        Ok(Self::finish(num, den))
    }

    /// Normalizes monomial placement, sign and integer content of an already
    /// coprime pair.
    fn finish(num: LaurentPoly, den: LaurentPoly) -> Self {
        let s = den.min_exp();
        let (mut num, mut den) = (num.shift(-s), den.shift(-s));
        if den.lowest_coeff().is_negative() {
            num = -num;
            den = -den;
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.divide_exact(&LaurentPoly::constant(c.clone())).unwrap();
            den = den.divide_exact(&LaurentPoly::constant(c)).unwrap();
        }
        RationalFn { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The polynomial value when the denominator has cleared.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_poly(self) -> Result<LaurentPoly> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// `Some((sign, s))` when the value is `sign * A^s` with `sign = ±1`.
    pub fn as_unit_monomial(&self) -> Option<(i8, i64)> {
        if !self.den.is_one() || !self.num.is_monomial() {
            return None;
        }
        let c = &self.num.coeffs()[0];
        let sign = if c.is_one() {
            1
        } else if *c == -BigInt::one() {
            -1
        } else {
            return None;
        };
        Some((sign, self.num.min_exp()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::finish(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RationalFn) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFn { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Multiplies by `A^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        RationalFn { num: self.num.shift(exp), den: self.den.clone() }
    }

    /// `x(A^-1)`.
    pub fn substitute_invert(&self) -> Self {
        Self::finish(self.num.substitute_invert(), self.den.substitute_invert())
    }
}

impl Default for RationalFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFn::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let g = gcd(&self.den, &rhs.den);
        let bg = self.den.divide_exact(&g).unwrap();
        let dg = rhs.den.divide_exact(&g).unwrap();
        let num = &self.num * &dg + &rhs.num * &bg;
        RationalFn::new(num, &self.den * &dg).unwrap()
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        // Cross-cancel: both operands are already reduced.
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let num = self.num.divide_exact(&g1).unwrap() * rhs.num.divide_exact(&g2).unwrap();
        let den = self.den.divide_exact(&g2).unwrap() * rhs.den.divide_exact(&g1).unwrap();
        RationalFn::finish(num, den)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

/// Panics on division by zero; use [`RationalFn::checked_div`] otherwise.
impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $f(self, rhs: RationalFn) -> RationalFn {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $f(self, rhs: &RationalFn) -> RationalFn {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl std::iter::Sum for RationalFn {
    fn sum<I: Iterator<Item = RationalFn>>(iter: I) -> Self {
        iter.fold(RationalFn::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for RationalFn {
    fn product<I: Iterator<Item = RationalFn>>(iter: I) -> Self {
        iter.fold(RationalFn::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.terms().count() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFnJson {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl From<RationalFn> for RationalFnJson {
    fn from(r: RationalFn) -> Self {
        RationalFnJson { num: r.num, den: r.den }
    }
}

impl TryFrom<RationalFnJson> for RationalFn {
    type Error = String;
    fn try_from(j: RationalFnJson) -> std::result::Result<Self, String> {
        RationalFn::new(j.num, j.den).map_err(|e| e.to_string())
    }
}
