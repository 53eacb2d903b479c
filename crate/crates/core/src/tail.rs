//! Tail of the colored Jones polynomial for the `8_5` family.
//!
//! Two independent pipelines meet here:
//!
//! * the exact state sum for the all-B skein element `S_B^(n)`, a double sum
//!   of products of five bubble coefficients and three loop ratios. The
//!   projectors leave genuine denominators, so the value is a rational
//!   function of `A`;
//! * the closed q-series
//!   `T(q) = (q;q)_inf^2 sum_k q^(k+k^2)/(q;q)_k sum_i q^(-2i(k-i)) [k, i]_q^2`.
//!
//! [`stabilization_check`] confirms that `S_B^(n) / Δ_n`, read as a q-series
//! up to a monomial, reproduces the first `n + 1` tail coefficients.
//!
//! The intermediate q-Pochhammer forms of the individual coefficients are
//! checked by the `identity_*` functions. Those compare two exact rational
//! functions in `A` and report the monomial `±A^s` separating them, since the
//! derivation mixes exact steps with steps that only hold up to a monomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bubble::{bubble_coeff_closed, theta};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::quantum::{delta, qint, GaussTable};
use crate::rational::RationalFn;
use crate::series::{qpoch_finite, qpoch_infinite, rf_to_series, TruncatedSeries};

const GOLDEN_TEXT: &str = include_str!("../data/tail_8_5.txt");

/// The 121 published tail coefficients of `8_5`, `q^0` first.
pub fn golden_tail_85() -> Vec<BigInt> {
    GOLDEN_TEXT
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.parse().expect("golden fixture holds integers"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateSumValue {
    pub n: i64,
    pub value: RationalFn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Direct,
    DoubleSum,
}

/// A normalized tail: shift 0 with constant term 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailSeries {
    pub terms: TruncatedSeries,
    pub provenance: Provenance,
}

impl fmt::Display for TailSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.terms.fmt(f)
    }
}

fn loop_ratio(num: i64, den: i64) -> RationalFn {
    RationalFn::new(delta(num), delta(den)).expect("Δ with nonnegative index is nonzero")
}

/// `S_B^(n)` for the `8_5` family:
///
/// ```text
/// sum_{i,j=0}^{n} ⌈n n; n n⌉_i ⌈n n; n n⌉_j ⌈i n; n n-j⌉_0 ⌈j n; n n-i⌉_0 ⌈j i; n n⌉_0
///                 * Δ_2n/Δ_(n+i) * Δ_2n/Δ_(n+j) * Δ_(i+j)
/// ```
///
/// Every `⌈n n; n n⌉_i` carries `(q;q)_2n` denominators that survive the
/// sum, so the result is kept as a reduced rational function.
pub fn sb_state_sum(n: i64) -> Result<StateSumValue> {
    if n < 0 {
        return Err(Error::InvalidParams(format!("color n = {n} must be nonnegative")));
    }
    let outer: Vec<RationalFn> =
        (0..=n).map(|i| bubble_coeff_closed(n, n, n, n, i)).collect::<Result<_>>()?;
    let ratios: Vec<RationalFn> = (0..=n).map(|i| loop_ratio(2 * n, n + i)).collect();
    let mut total = RationalFn::zero();
    for i in 0..=n {
        for j in 0..=n {
            let term = [
                outer[i as usize].clone(),
                outer[j as usize].clone(),
                bubble_coeff_closed(i, n, n, n - j, 0)?,
                bubble_coeff_closed(j, n, n, n - i, 0)?,
                bubble_coeff_closed(j, i, n, n, 0)?,
                ratios[i as usize].clone(),
                ratios[j as usize].clone(),
                RationalFn::from_poly(delta(i + j)),
            ]
            .into_iter()
            .product::<RationalFn>();
            total = &total + &term;
        }
    }
    Ok(StateSumValue { n, value: total })
}

/// Outcome of comparing two exact expressions up to a unit monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialCheck {
    /// The two sides differ by at most a factor `±A^s`.
    pub holds: bool,
    /// `(sign, s)` with `lhs = sign * A^s * rhs`, when `holds`.
    pub discrepancy: Option<(i8, i64)>,
}

impl MonomialCheck {
    fn compare(lhs: &RationalFn, rhs: &RationalFn) -> Self {
        if rhs.is_zero() || lhs.is_zero() {
            let holds = lhs.is_zero() && rhs.is_zero();
            return MonomialCheck { holds, discrepancy: holds.then_some((1, 0)) };
        }
        let d = (lhs / rhs).as_unit_monomial();
        MonomialCheck { holds: d.is_some(), discrepancy: d }
    }

    /// Equal on the nose.
    pub fn is_exact(&self) -> bool {
        self.discrepancy == Some((1, 0))
    }
}

impl fmt::Display for MonomialCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.discrepancy {
            Some((1, 0)) => f.write_str("exact"),
            Some((s, e)) => write!(f, "{}A^{e}", if s < 0 { "-" } else { "" }),
            None => f.write_str("not a unit monomial"),
        }
    }
}

/// `(q;q)_n` with `q = A^4`.
fn poch_a(n: i64) -> LaurentPoly {
    (1..=n).map(|j| LaurentPoly::from_terms([(1, 0), (-1, 4 * j)])).product()
}

fn poch_ratio(num: &[(i64, u32)], den: &[(i64, u32)], extra_den: LaurentPoly) -> RationalFn {
    let top: LaurentPoly = num.iter().map(|&(n, e)| poch_a(n).pow(e)).product();
    let bottom: LaurentPoly = den.iter().map(|&(n, e)| poch_a(n).pow(e)).product::<LaurentPoly>() * extra_den;
    RationalFn::new(top, bottom).expect("Pochhammer symbols are nonzero")
}

fn signed_monomial(sign_exp: i64, a_exp: i64) -> RationalFn {
    let s = if sign_exp.rem_euclid(2) == 0 { 1 } else { -1 };
    RationalFn::from_poly(LaurentPoly::monomial(s, a_exp))
}

fn one_minus_q() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 0), (-1, 4)])
}

/// `prod_{i=0}^{j} [n-i] = q^((2+3j+j^2-2n-2jn)/4) (1-q)^(-1-j) (q;q)_n / (q;q)_(n-j-1)`,
/// with `q^(1/4) = A`.
pub fn identity_fact(n: i64, j: i64) -> Result<MonomialCheck> {
    if j < 0 || j + 1 > n {
        return Err(Error::InvalidParams(format!("need 0 <= j and j + 1 <= n, got n = {n}, j = {j}")));
    }
    let lhs = RationalFn::from_poly((0..=j).map(|i| qint(n - i)).product());
    let rhs = signed_monomial(0, 2 + 3 * j + j * j - 2 * n - 2 * j * n)
        * poch_ratio(&[(n, 1)], &[(n - j - 1, 1)], one_minus_q().pow((j + 1) as u32));
    Ok(MonomialCheck::compare(&lhs, &rhs))
}

/// `⌈n n; n n⌉_i` against
/// `(-1)^(i+n) q^((2i+4i^2-2n)/4) (q;q)_n^6 (q;q)_(3n-i+1) / ((q;q)_2n^2 (q;q)_(2n+1) (q;q)_i^2 (q;q)_(n-i)^3)`.
pub fn identity_mn(n: i64, i: i64) -> Result<MonomialCheck> {
    if n < 0 || i < 0 || i > n {
        return Err(Error::InvalidParams(format!("need 0 <= i <= n, got n = {n}, i = {i}")));
    }
    let lhs = bubble_coeff_closed(n, n, n, n, i)?;
    let rhs = signed_monomial(i + n, 2 * i + 4 * i * i - 2 * n)
        * poch_ratio(
            &[(n, 6), (3 * n - i + 1, 1)],
            &[(2 * n, 2), (2 * n + 1, 1), (i, 2), (n - i, 3)],
            LaurentPoly::one(),
        );
    Ok(MonomialCheck::compare(&lhs, &rhs))
}

/// `⌈j n; n n-i⌉_0` against
/// `(-1)^(n-i) q^((i-n)/2) (q;q)_(i+j) (q;q)_n (q;q)_(n+i) (q;q)_(2n+j+1) / ((q;q)_i (q;q)_2n (q;q)_(j+n) (q;q)_(n+j+i+1))`.
pub fn identity_mn1(n: i64, i: i64, j: i64) -> Result<MonomialCheck> {
    if n < 0 || i < 0 || j < 0 || i > n {
        return Err(Error::InvalidParams(format!("need 0 <= i <= n and j >= 0, got n = {n}, i = {i}, j = {j}")));
    }
    let lhs = bubble_coeff_closed(j, n, n, n - i, 0)?;
    let rhs = signed_monomial(n - i, 2 * (i - n))
        * poch_ratio(
            &[(i + j, 1), (n, 1), (n + i, 1), (2 * n + j + 1, 1)],
            &[(i, 1), (2 * n, 1), (j + n, 1), (n + j + i + 1, 1)],
            LaurentPoly::one(),
        );
    Ok(MonomialCheck::compare(&lhs, &rhs))
}

/// Result of [`identity_mn3`]: the Pochhammer comparison plus whether
/// `⌈i j; n n⌉_0 Δ_(i+j)` equals the theta evaluation `Λ(n, i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaIdentityCheck {
    pub pochhammer: MonomialCheck,
    pub theta_matches: bool,
}

impl ThetaIdentityCheck {
    pub fn holds(&self) -> bool {
        self.pochhammer.holds && self.theta_matches
    }
}

/// `⌈i j; n n⌉_0 Δ_(i+j)` against
/// `(-1)^(i+j+n) q^(-(i+j+n)/2) (q;q)_n (q;q)_j (q;q)_i (q;q)_(n+j+i+1) / ((1-q) (q;q)_(i+n) (q;q)_(j+n) (q;q)_(j+i))`.
///
/// `Λ(n, i, j)` is evaluated by [`theta`], which expands the bubble on the
/// `j`-colored edge, so the theta comparison exercises the three-fold
/// symmetry of the theta graph rather than restating the left side.
pub fn identity_mn3(n: i64, i: i64, j: i64) -> Result<ThetaIdentityCheck> {
    if n < 0 || i < 0 || j < 0 {
        return Err(Error::InvalidParams(format!("colors must be nonnegative: n = {n}, i = {i}, j = {j}")));
    }
    let lhs = bubble_coeff_closed(i, j, n, n, 0)? * RationalFn::from_poly(delta(i + j));
    let rhs = signed_monomial(i + j + n, -2 * (i + j + n))
        * poch_ratio(
            &[(n, 1), (j, 1), (i, 1), (n + j + i + 1, 1)],
            &[(i + n, 1), (j + n, 1), (j + i, 1)],
            one_minus_q(),
        );
    Ok(ThetaIdentityCheck {
        pochhammer: MonomialCheck::compare(&lhs, &rhs),
        theta_matches: lhs == theta(n, i, j)?,
    })
}

/// The summand `P(n, i, j)` of the Pochhammer form of the state sum,
/// evaluated exactly in `A` (`q^(1/2) = A^2`).
pub fn p_term(n: i64, i: i64, j: i64) -> Result<RationalFn> {
    if n < 0 || i < 0 || j < 0 || i > n || j > n {
        return Err(Error::InvalidParams(format!("need 0 <= i, j <= n, got n = {n}, i = {i}, j = {j}")));
    }
    let mono = signed_monomial(i + j + n, 2 * i + 4 * i * i + 2 * j + 4 * j * j - 10 * n);
    let body = poch_ratio(
        &[
            (i + j, 1),
            (n, 15),
            (1 + i + 2 * n, 1),
            (1 + j + 2 * n, 1),
            (1 - i + 3 * n, 1),
            (1 - j + 3 * n, 1),
        ],
        &[
            (i, 2),
            (j, 2),
            (2 * n, 6),
            (n - i, 3),
            (i + n, 1),
            (n - j, 3),
            (j + n, 1),
            (1 + i + j + n, 1),
            (1 + 2 * n, 2),
        ],
        one_minus_q(),
    );
    Ok(mono * body * loop_ratio(2 * n, n + i) * loop_ratio(2 * n, n + j))
}

/// `sum_{i,j<=n} P(n,i,j)`.
pub fn p_sum(n: i64) -> Result<RationalFn> {
    let mut total = RationalFn::zero();
    for i in 0..=n {
        for j in 0..=n {
            total = &total + &p_term(n, i, j)?;
        }
    }
    Ok(total)
}

/// [`p_sum`] as a q-series, normalized.
pub fn p_sum_series(n: i64, order: usize) -> Result<TruncatedSeries> {
    rf_to_series(&p_sum(n)?, order)?.normalize()
}

/// Lowest q-exponent of the `k`-th summand of the tail formula:
/// `k + k^2 - 2 floor(k/2) ceil(k/2)`.
pub fn tail_term_min_exponent(k: i64) -> i64 {
    k + k * k - 2 * (k / 2) * ((k + 1) / 2)
}

fn square(c: &[BigInt]) -> Vec<BigInt> {
    if c.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); 2 * c.len() - 1];
    for (a, x) in c.iter().enumerate() {
        for (b, y) in c.iter().enumerate() {
            out[a + b] += x * y;
        }
    }
    out
}

fn finish_tail(sum: TruncatedSeries, order: usize, provenance: Provenance) -> TailSeries {
    let pinf = qpoch_infinite(order);
    let terms = pinf.mul(&pinf).mul(&sum).truncate(order);
    debug_assert_eq!(terms.shift(), 0);
    debug_assert!(terms.coeffs()[0].is_one());
    TailSeries { terms, provenance }
}

/// `T(q) = (q;q)_inf^2 sum_k q^(k+k^2)/(q;q)_k sum_{i<=k} q^(-2i(k-i)) [k, i]_q^2`
/// modulo `q^order`.
///
/// Summand `k` is dropped once its lowest exponent reaches `order`; that
/// exponent grows with `k`, so the first such `k` ends the sum.
pub fn tail_85(order: usize) -> TailSeries {
    assert!(order > 0, "series order must be positive");
    let n = order as i64;
    let mut k_max = 0;
    while tail_term_min_exponent(k_max + 1) < n {
        k_max += 1;
    }
    let table = GaussTable::new(k_max as usize);
    let mut total = TruncatedSeries::zero(order);
    for k in 0..=k_max {
        let outer = k + k * k;
        // The inner sum has negative shifts down to -2 floor(k/2) ceil(k/2);
        // each piece is tracked far enough that, after the q^(k+k^2) shift,
        // its window reaches q^(order-1).
        let reach = n - outer;
        let mut inner: Option<TruncatedSeries> = None;
        for i in 0..=k {
            let shift = -2 * i * (k - i);
            if reach <= shift {
                continue;
            }
            let window = (reach - shift) as usize;
            let piece = TruncatedSeries::from_poly(shift, &square(table.get(k as usize, i)), window);
            inner = Some(match inner {
                None => piece,
                Some(acc) => acc.add(&piece).expect("inner windows overlap"),
            });
        }
        let inner = inner.unwrap().mul_monomial(outer);
        let term = inner.mul(&qpoch_finite(k as usize, order).invert().expect("(q;q)_k has unit constant term"));
        total = total.add(&term).expect("summand window covers the target");
    }
    finish_tail(total, order, Provenance::Direct)
}

/// The same tail with the summation reorganized as an outer sum over `i`
/// and an inner sum over `k >= i`,
///
/// ```text
/// (q;q)_inf^2 sum_i sum_{k>=i} q^(k+k^2-2i(k-i)) (q;q)_k / ((q;q)_i^2 (q;q)_(k-i)^2)
/// ```
///
/// where `[k, i]^2 / (q;q)_k` has been written in Pochhammer symbols, so no
/// Gaussian binomial is formed on this path.
pub fn tail_85_double_sum(order: usize) -> TailSeries {
    assert!(order > 0, "series order must be positive");
    let n = order as i64;
    let mut inverse_poch: Vec<TruncatedSeries> = Vec::new();
    let mut inv = |j: usize| -> TruncatedSeries {
        while inverse_poch.len() <= j {
            let idx = inverse_poch.len();
            inverse_poch.push(qpoch_finite(idx, order).invert().expect("unit constant term"));
        }
        inverse_poch[j].clone()
    };
    let mut total = TruncatedSeries::zero(order);
    let mut i = 0i64;
    while i + i * i < n {
        let mut k = i;
        loop {
            let e = k + k * k - 2 * i * (k - i);
            if e >= n {
                break;
            }
            let a = inv(i as usize);
            let b = inv((k - i) as usize);
            let term = qpoch_finite(k as usize, order)
                .mul(&a)
                .mul(&a)
                .mul(&b)
                .mul(&b)
                .mul_monomial(e);
            total = total.add(&term).expect("summand window covers the target");
            k += 1;
        }
        i += 1;
    }
    finish_tail(total, order, Provenance::DoubleSum)
}

/// `S_B^(n) / Δ_n` read as a q-series reproduces the tail through `q^n`.
/// The division by `Δ_n` is exact in the field of rational functions.
pub fn stabilization_check(n: i64) -> Result<bool> {
    if n < 1 {
        return Err(Error::InvalidParams(format!("stabilization needs n >= 1, got {n}")));
    }
    let window = (n + 1) as usize;
    state_sum_series(n, window)?.doteq(&tail_85(window).terms, window)
}

/// `S_B^(n) / Δ_n` expanded as a normalized q-series through `order` terms.
pub fn state_sum_series(n: i64, order: usize) -> Result<TruncatedSeries> {
    let reduced = sb_state_sum(n)?.value.checked_div(&RationalFn::from_poly(delta(n)))?;
    rf_to_series(&reduced, order)?.normalize()
}
