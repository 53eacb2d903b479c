//! Dense Laurent polynomials in the formal variable `A` with arbitrary-precision
//! integer coefficients.
//!
//! The other variables that show up in skein computations, `a = A^2` and
//! `q = A^4`, are never separate symbols here. They are exponent conventions
//! and are checked only where a polynomial crosses into the q-series layer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `sum_j coeffs[j] * A^(min_exp + j)`.
///
/// Canonical: the zero polynomial is `(0, [])`, otherwise both the first and
/// last stored coefficients are nonzero. Every constructor canonicalizes, so
/// derived equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LaurentPolyJson", into = "LaurentPolyJson")]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * A^exp`.
    pub fn monomial<T: Into<BigInt>>(c: T, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// Builds `sum_j coeffs[j] * A^(min_exp + j)` and canonicalizes.
    pub fn from_coeffs(min_exp: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly { min_exp: min_exp + lead as i64, coeffs }
    }

    /// Builds from `(coefficient, exponent)` pairs; repeated exponents are summed.
    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (T, i64)>,
        T: Into<BigInt>,
    {
        let terms: Vec<(BigInt, i64)> = terms.into_iter().map(|(c, e)| (c.into(), e)).collect();
        let Some(lo) = terms.iter().map(|t| t.1).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.1).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (c, e) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent present (`min_exp - 1` for the zero polynomial).
    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Coefficient of the lowest term (0 for the zero polynomial).
    pub fn lowest_coeff(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Nonzero `(coefficient, exponent)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (c, self.min_exp + j as i64))
    }

    /// Multiplies by `A^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_exp: self.min_exp + exp, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of the integer coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `f(A^-1)`: the coefficient sequence reversed and the exponents negated.
    pub fn substitute_invert(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { min_exp: -self.max_exp(), coeffs }
    }

    /// Fixed by `A -> A^-1`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.substitute_invert()
    }

    /// Exact quotient `q` with `q * g == self`.
    pub fn divide_exact(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        if g.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let quot = poly_div_exact(&self.coeffs, &g.coeffs).ok_or(Error::NotDivisible)?;
        Ok(Self::from_coeffs(self.min_exp - g.min_exp, quot))
    }

    /// Evaluates at an integer point (negative exponents require `x = ±1`).
    pub fn eval_unit(&self, x: i64) -> BigInt {
        assert!(x == 1 || x == -1, "Laurent evaluation only at units");
        self.terms()
            .map(|(c, e)| if x == -1 && e.rem_euclid(2) == 1 { -c } else { c.clone() })
            .sum()
    }

    /// Gcd of every exponent offset from `min_exp` (0 for monomials and zero).
    pub(crate) fn exponent_stride(&self) -> u64 {
        self.terms().fold(0u64, |g, (_, e)| g.gcd(&((e - self.min_exp) as u64)))
    }
}

/// Gcd over the rationals, returned primitive with `min_exp == 0` and a
/// positive lowest coefficient. `gcd(0, 0)` is 0.
pub fn gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return LaurentPoly::zero(),
        (true, false) => return normalize_gcd(primitive(g.coeffs.clone())),
        (false, true) => return normalize_gcd(primitive(f.coeffs.clone())),
        _ => {}
    }
    // Both sides are polynomials in A^stride once their lowest exponents are
    // moved to 0; the gcd is computed there and inflated afterwards.
    let stride = f.exponent_stride().gcd(&g.exponent_stride()).max(1) as usize;
    let a = compress(&f.coeffs, stride);
    let b = compress(&g.coeffs, stride);
    let h = poly_gcd(a, b);
    normalize_gcd(expand(&h, stride))
}

fn normalize_gcd(mut coeffs: Vec<BigInt>) -> LaurentPoly {
    if coeffs.first().is_some_and(|c| c.is_negative()) {
        for c in coeffs.iter_mut() {
            *c = -&*c;
        }
    }
    LaurentPoly::from_coeffs(0, coeffs)
}

fn compress(c: &[BigInt], stride: usize) -> Vec<BigInt> {
    c.iter().step_by(stride).cloned().collect()
}

fn expand(c: &[BigInt], stride: usize) -> Vec<BigInt> {
    if c.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); (c.len() - 1) * stride + 1];
    for (j, x) in c.iter().enumerate() {
        out[j * stride] = x.clone();
    }
    out
}

fn primitive(mut c: Vec<BigInt>) -> Vec<BigInt> {
    let g = c.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in c.iter_mut() {
            *x = &*x / &g;
        }
    }
    c
}

fn trim(c: &mut Vec<BigInt>) {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

/// Primitive polynomial remainder sequence on ascending coefficient vectors
/// with nonzero constant terms.
fn poly_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = pseudo_rem(a, &b);
        a = b;
        b = primitive(r);
    }
    a
}

fn pseudo_rem(mut r: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let off = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[off + j] -= &lr * y;
        }
        trim(&mut r);
        let g = r.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g > BigInt::one() {
            for x in r.iter_mut() {
                *x = &*x / &g;
            }
        }
    }
    r
}

/// Exact long division from the top; `None` if any step is non-integral or a
/// remainder survives.
fn poly_div_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    if f.len() < g.len() {
        return None;
    }
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - dg];
    for k in (0..q.len()).rev() {
        let top = &r[k + dg];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        for (j, y) in g.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
    }
    if r.iter().all(Zero::is_zero) {
        Some(q)
    } else {
        None
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.max_exp().max(rhs.max_exp());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for p in [self, rhs] {
            let off = (p.min_exp - lo) as usize;
            for (j, c) in p.coeffs.iter().enumerate() {
                coeffs[off + j] += c;
            }
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        LaurentPoly::from_coeffs(self.min_exp + rhs.min_exp, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| acc * x)
    }
}

/// Highest power first: `-A^2 - A^-2`, `A^4 + 2 + A^-4`, `3A - 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (idx, (c, e)) in terms.into_iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("A")?;
            } else {
                write!(f, "A^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Wire form: `{"variable":"A","min_exp":<int>,"coeffs":[<decimal strings>]}`.
#[derive(Serialize, Deserialize)]
struct LaurentPolyJson {
    variable: String,
    min_exp: i64,
    coeffs: Vec<String>,
}

impl From<LaurentPoly> for LaurentPolyJson {
    fn from(p: LaurentPoly) -> Self {
        LaurentPolyJson {
            variable: "A".into(),
            min_exp: p.min_exp,
            coeffs: p.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<LaurentPolyJson> for LaurentPoly {
    type Error = String;
    fn try_from(j: LaurentPolyJson) -> std::result::Result<Self, String> {
        if j.variable != "A" {
            return Err(format!("expected variable \"A\", got {:?}", j.variable));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| format!("bad coefficient {s:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_coeffs(j.min_exp, coeffs))
    }
}
