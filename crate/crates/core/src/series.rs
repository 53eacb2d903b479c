//! Truncated power/Laurent series in `q` with explicit validity windows.
//!
//! A [`TruncatedSeries`] with `shift = s` and `order = N` stands for
//!
//! ```text
//! c_0 q^s + c_1 q^(s+1) + ... + c_(N-1) q^(s+N-1) + O(q^(s+N))
//! ```
//!
//! with every coefficient below `q^s` known to be zero. Operations never
//! report a coefficient outside the window they can prove.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::rational::RationalFn;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesJson", into = "SeriesJson")]
pub struct TruncatedSeries {
    shift: i64,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// `coeffs[j]` is the coefficient of `q^(shift + j)`; the window length is
    /// `coeffs.len()`, which must be positive.
    pub fn new(shift: i64, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyWindow);
        }
        Ok(TruncatedSeries { shift, coeffs })
    }

    /// An exact q-polynomial (`poly[j]` multiplies `q^(shift+j)`) cut to `order` terms.
    pub fn from_poly(shift: i64, poly: &[BigInt], order: usize) -> Self {
        assert!(order > 0, "series order must be positive");
        let mut coeffs: Vec<BigInt> = poly.iter().take(order).cloned().collect();
        coeffs.resize(order, BigInt::zero());
        TruncatedSeries { shift, coeffs }
    }

    pub fn from_i64s(shift: i64, coeffs: &[i64]) -> Result<Self> {
        Self::new(shift, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(0, &[BigInt::one()], order)
    }

    pub fn zero(order: usize) -> Self {
        Self::from_poly(0, &[], order)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// First exponent not covered by the window.
    pub fn window_end(&self) -> i64 {
        self.shift + self.coeffs.len() as i64
    }

    /// `Some(c)` for any exponent below the window end (zero below `shift`).
    pub fn coeff(&self, exp: i64) -> Option<BigInt> {
        if exp < self.shift {
            Some(BigInt::zero())
        } else if exp < self.window_end() {
            Some(self.coeffs[(exp - self.shift) as usize].clone())
        } else {
            None
        }
    }

    /// Multiplies by the exact monomial `q^exp`; the window moves with it.
    pub fn mul_monomial(&self, exp: i64) -> Self {
        TruncatedSeries { shift: self.shift + exp, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TruncatedSeries { shift: self.shift, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    /// Keeps at most `order` tracked coefficients.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order > 0, "series order must be positive");
        let mut s = self.clone();
        s.coeffs.truncate(order);
        s
    }

    /// Sum over the joint window: it starts at the lower shift and ends where
    /// the shorter-reaching operand stops being known.
    pub fn add(&self, g: &TruncatedSeries) -> Result<Self> {
        let lo = self.shift.min(g.shift);
        let end = self.window_end().min(g.window_end());
        if end <= lo {
            return Err(Error::EmptyWindow);
        }
        let mut coeffs = vec![BigInt::zero(); (end - lo) as usize];
        for s in [self, g] {
            for (j, c) in s.coeffs.iter().enumerate() {
                let e = s.shift + j as i64;
                if e >= end {
                    break;
                }
                coeffs[(e - lo) as usize] += c;
            }
        }
        Ok(TruncatedSeries { shift: lo, coeffs })
    }

    pub fn sub(&self, g: &TruncatedSeries) -> Result<Self> {
        self.add(&g.neg())
    }

    /// Product. With `f = F + O(q^(sf+Nf))` and `g = G + O(q^(sg+Ng))`, the
    /// error of `FG` is `O(q^(sf+sg+min(Nf,Ng)))`, so the result has shift
    /// `sf+sg` and order `min(Nf, Ng)`.
    pub fn mul(&self, g: &TruncatedSeries) -> Self {
        let order = self.order().min(g.order());
        let mut coeffs = vec![BigInt::zero(); order];
        for (i, x) in self.coeffs.iter().take(order).enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in g.coeffs.iter().take(order - i).enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        TruncatedSeries { shift: self.shift + g.shift, coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse through the same window length. The lowest
    /// tracked coefficient must be `±1` so the inverse stays integral.
    pub fn invert(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if !f0.abs().is_one() {
            return Err(Error::NonUnitLeading(f0.to_string()));
        }
        let n = self.order();
        let mut g: Vec<BigInt> = Vec::with_capacity(n);
        g.push(f0.clone());
        for j in 1..n {
            let s: BigInt = (1..=j).map(|t| &self.coeffs[t] * &g[j - t]).sum();
            g.push(-(f0 * s));
        }
        Ok(TruncatedSeries { shift: -self.shift, coeffs: g })
    }

    /// Moves the lowest nonzero term to `q^0`; the window shrinks by the
    /// number of leading zeros dropped.
    pub fn normalize(&self) -> Result<Self> {
        let z = self.coeffs.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroSeries)?;
        Ok(TruncatedSeries { shift: 0, coeffs: self.coeffs[z..].to_vec() })
    }

    /// `f ≐_n g`: after normalization both agree on `q^0 .. q^(n-1)`.
    pub fn doteq(&self, g: &TruncatedSeries, n: usize) -> Result<bool> {
        let (f, g) = (self.normalize()?, g.normalize()?);
        let available = f.order().min(g.order());
        if available < n {
            return Err(Error::InsufficientOrder { needed: n, available });
        }
        Ok(f.coeffs[..n] == g.coeffs[..n])
    }
}

/// `(q;q)_n = prod_{j=1}^{n} (1 - q^j)` modulo `q^order`.
pub fn qpoch_finite(n: usize, order: usize) -> TruncatedSeries {
    assert!(order > 0, "series order must be positive");
    let mut c = vec![BigInt::zero(); order];
    c[0] = BigInt::one();
    for j in 1..=n.min(order - 1) {
        for e in (j..order).rev() {
            let t = c[e - j].clone();
            c[e] -= t;
        }
    }
    TruncatedSeries { shift: 0, coeffs: c }
}

/// `(q;q)_inf` modulo `q^order` by the pentagonal number theorem:
/// `sum_k (-1)^k q^(k(3k-1)/2)` over all integers `k`.
pub fn qpoch_infinite(order: usize) -> TruncatedSeries {
    assert!(order > 0, "series order must be positive");
    let mut c = vec![BigInt::zero(); order];
    c[0] = BigInt::one();
    for k in 1i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let e1 = (k * (3 * k - 1) / 2) as usize;
        if e1 >= order {
            break;
        }
        c[e1] += sign;
        let e2 = (k * (3 * k + 1) / 2) as usize;
        if e2 < order {
            c[e2] += sign;
        }
    }
    TruncatedSeries { shift: 0, coeffs: c }
}

/// Reads an A-polynomial as a q-series (`q = A^4`) after moving its lowest
/// term to exponent 0. The monomial factor dropped here is exactly the
/// `q^(±s)` freedom of the `≐` relation.
pub fn lp_to_series(f: &LaurentPoly, order: usize) -> Result<TruncatedSeries> {
    Ok(TruncatedSeries::from_poly(0, &q_coeffs(f)?, order))
}

fn q_coeffs(f: &LaurentPoly) -> Result<Vec<BigInt>> {
    let base = f.min_exp();
    let mut out = Vec::new();
    for (c, e) in f.terms() {
        let off = e - base;
        if off % 4 != 0 {
            return Err(Error::ExponentNotMultipleOf4(off));
        }
        let idx = (off / 4) as usize;
        out.resize(idx + 1, BigInt::zero());
        out[idx] = c.clone();
    }
    Ok(out)
}

/// Expands `num / den` as a q-series, dropping the overall monomial as
/// [`lp_to_series`] does. The denominator's lowest coefficient must be `±1`.
pub fn rf_to_series(r: &RationalFn, order: usize) -> Result<TruncatedSeries> {
    let num = lp_to_series(r.num(), order)?;
    let den = lp_to_series(r.den(), order)?;
    Ok(num.mul(&den.invert()?))
}

/// Ascending: `1 - 2q + q^2 - 2q^4 + 3q^5`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.shift + j as i64;
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self} + O(q^{}))", self.window_end())
    }
}

/// Wire form: `{"variable":"q","shift":<int>,"order":<int>,"coeffs":[<decimal strings>]}`.
#[derive(Serialize, Deserialize)]
struct SeriesJson {
    variable: String,
    shift: i64,
    order: usize,
    coeffs: Vec<String>,
}

impl From<TruncatedSeries> for SeriesJson {
    fn from(s: TruncatedSeries) -> Self {
        SeriesJson {
            variable: "q".into(),
            shift: s.shift,
            order: s.coeffs.len(),
            coeffs: s.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<SeriesJson> for TruncatedSeries {
    type Error = String;
    fn try_from(j: SeriesJson) -> std::result::Result<Self, String> {
        if j.variable != "q" {
            return Err(format!("expected variable \"q\", got {:?}", j.variable));
        }
        if j.coeffs.len() != j.order {
            return Err(format!("order {} but {} coefficients", j.order, j.coeffs.len()));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| format!("bad coefficient {s:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        TruncatedSeries::new(j.shift, coeffs).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(shift: i64, c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(shift, c).unwrap()
    }

    fn ints(t: &TruncatedSeries) -> Vec<i64> {
        t.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn add_and_windows() {
        let f = s(0, &[1, 2, 3]);
        assert_eq!(f.add(&TruncatedSeries::zero(3)).unwrap(), f);
        // q^-1 + ... known through q^0, plus 1 + O(q^3): known through q^0
        let g = s(-1, &[1, 1]).add(&f).unwrap();
        assert_eq!((g.shift(), ints(&g)), (-1, vec![1, 2]));
        // q^5 lies beyond the shorter window and is dropped
        assert_eq!(s(5, &[1]).add(&s(0, &[1, 1])).unwrap(), s(0, &[1, 1]));
        assert_eq!(TruncatedSeries::new(0, vec![]), Err(Error::EmptyWindow));
    }

    #[test]
    fn mul_examples() {
        let geo = s(0, &[1; 8]);
        let one_minus_q = s(0, &[1, -1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(ints(&one_minus_q.mul(&geo)), vec![1, 0, 0, 0, 0, 0, 0, 0]);
        let p = s(-2, &[1, 0, 0, 0]).mul(&s(3, &[1, 0, 0, 0]));
        assert_eq!((p.shift(), p.coeff(1)), (1, Some(BigInt::one())));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(ints(&s(0, &[1, -1, 0, 0, 0]).invert().unwrap()), vec![1; 5]);
        let inv_q = s(1, &[1, 0, 0]).invert().unwrap();
        assert_eq!((inv_q.shift(), ints(&inv_q)), (-1, vec![1, 0, 0]));
        // long division of 1 by 1 - q - q^2 + q^3
        assert_eq!(ints(&qpoch_finite(2, 6).invert().unwrap()), vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(s(0, &[2, 1]).invert(), Err(Error::NonUnitLeading("2".into())));
        assert!(s(0, &[-1, 1]).invert().is_ok());
    }

    #[test]
    fn finite_pochhammer() {
        assert_eq!(ints(&qpoch_finite(0, 4)), vec![1, 0, 0, 0]);
        assert_eq!(ints(&qpoch_finite(2, 10)), vec![1, -1, -1, 1, 0, 0, 0, 0, 0, 0]);
        // 1 - q - q^2 + q^4 + q^5 - q^6, cut at q^4
        assert_eq!(ints(&qpoch_finite(3, 4)), vec![1, -1, -1, 0]);
        assert_eq!(ints(&qpoch_finite(3, 7)), vec![1, -1, -1, 0, 1, 1, -1]);
    }

    #[test]
    fn infinite_pochhammer() {
        assert_eq!(ints(&qpoch_infinite(6)), vec![1, -1, -1, 0, 0, 1]);
        assert_eq!(ints(&qpoch_infinite(13)), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        assert_eq!(ints(&qpoch_infinite(1)), vec![1]);
    }

    #[test]
    fn normalize_and_doteq() {
        let f = s(3, &[1, -2]);
        assert_eq!(f.normalize().unwrap(), s(0, &[1, -2]));
        assert_eq!(s(0, &[1, -2]).normalize().unwrap(), s(0, &[1, -2]));
        assert_eq!(s(-2, &[1, 1]).normalize().unwrap(), s(0, &[1, 1]));
        assert_eq!(s(0, &[0, 0, 5, 1]).normalize().unwrap(), s(0, &[5, 1]));
        assert_eq!(s(0, &[0, 0]).normalize(), Err(Error::ZeroSeries));

        let a = s(0, &[1, -2, 1]);
        let b = s(0, &[1, -2, 7]);
        assert!(a.doteq(&a, 3).unwrap());
        assert!(a.mul_monomial(5).doteq(&a, 3).unwrap());
        assert!(a.doteq(&b, 2).unwrap());
        assert!(!a.doteq(&b, 3).unwrap());
        assert_eq!(a.doteq(&b, 4), Err(Error::InsufficientOrder { needed: 4, available: 3 }));
    }

    #[test]
    fn from_laurent() {
        let f = LaurentPoly::from_terms([(1, -4), (2, 0), (1, 4)]);
        assert_eq!(ints(&lp_to_series(&f, 4).unwrap()), vec![1, 2, 1, 0]);
        let g = LaurentPoly::from_terms([(1, 0), (1, 2)]);
        assert_eq!(lp_to_series(&g, 3), Err(Error::ExponentNotMultipleOf4(2)));
        let d1 = LaurentPoly::from_terms([(-1, 2), (-1, -2)]);
        assert_eq!(ints(&lp_to_series(&(&d1 * &d1), 3).unwrap()), vec![1, 2, 1]);
    }

    #[test]
    fn rational_expansion() {
        // 1 / (1 - q) in A
        let r = RationalFn::new(LaurentPoly::one(), LaurentPoly::from_terms([(1, 0), (-1, 4)])).unwrap();
        assert_eq!(ints(&rf_to_series(&r, 5).unwrap()), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(s(0, &[1, -2, 1, 0, -2, 3]).to_string(), "1 - 2q + q^2 - 2q^4 + 3q^5");
        assert_eq!(s(-1, &[1]).to_string(), "q^-1");
        assert_eq!(TruncatedSeries::zero(3).to_string(), "0");
    }

    #[test]
    fn json_form() {
        let f = s(-1, &[1, 0, -3]);
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"{"variable":"q","shift":-1,"order":3,"coeffs":["1","0","-3"]}"#);
        assert_eq!(serde_json::from_str::<TruncatedSeries>(&j).unwrap(), f);
        assert!(serde_json::from_str::<TruncatedSeries>(
            r#"{"variable":"q","shift":0,"order":2,"coeffs":["1"]}"#
        )
        .is_err());
    }
}
