//! Bubble expansion coefficients `⌈m n; k l⌉_i`.
//!
//! A bubble `B^{m,n}_{m',n'}(k, l)` has projectors of colors `m + k` and
//! `n + k` on top, `k` strands crossing above and `l` below. It expands as a
//! sum over fused basis diagrams, and the coefficient of the `i`-th basis
//! diagram is a rational function in `A`. Three independent routes compute
//! it:
//!
//! * [`bubble_coeff_closed`]: the product formula in `Δ`'s with the factor
//!   `(-A^2)^(i(i-l))` and a Gaussian binomial in `A^4`;
//! * [`bubble_coeff_recursive`]: the two-term recursion in `α`/`β`, the
//!   coefficients of the one-strand bubble;
//! * [`bubble_coeff_quantum`]: the same product rewritten in quantum
//!   integers with overall sign `(-1)^(i+l)`.
//!
//! All three require `k >= l`. A bubble with `l > k` is the `k >= l` bubble
//! turned upside down; [`bubble_expand`] handles that case.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::quantum::{alpha, beta, delta, delta_product, gauss_binom, qint};
use crate::rational::RationalFn;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Closed,
    Recursive,
    Quantum,
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "closed" => Ok(Method::Closed),
            "recursive" => Ok(Method::Recursive),
            "quantum" => Ok(Method::Quantum),
            _ => Err(format!("unknown method {s:?} (expected closed, recursive or quantum)")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Closed => "closed",
            Method::Recursive => "recursive",
            Method::Quantum => "quantum",
        })
    }
}

/// Common argument checks. `Ok(false)` means the coefficient is zero.
fn check_args(m: i64, n: i64, k: i64, l: i64, i: i64) -> Result<bool> {
    if k < 0 || l < 0 {
        return Err(Error::InvalidParams(format!("k = {k}, l = {l} must be nonnegative")));
    }
    if k < l {
        return Err(Error::InvalidParams(format!(
            "coefficient formula needs k >= l, got k = {k}, l = {l}"
        )));
    }
    Ok(i >= 0 && i <= m.min(n).min(l))
}

/// `⌈m n; k l⌉_i` by the closed product formula.
pub fn bubble_coeff_closed(m: i64, n: i64, k: i64, l: i64, i: i64) -> Result<RationalFn> {
    if !check_args(m, n, k, l, i)? {
        return Ok(RationalFn::zero());
    }
    let r = l - i;
    let mut num = delta_product((0..r).map(|j| k - j - 1));
    num = num * delta_product((0..i).flat_map(|s| [n - s - 1, m - s - 1]));
    num = num * delta_product((0..r).map(|j| m + n + k - i - j));
    num = num * gauss_binom(l as usize, i);
    // (-A^2)^(i(i-l))
    let e = i * (i - l);
    let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
    num = num * LaurentPoly::monomial(sign, 2 * e);
    let den = delta_product((0..l).flat_map(|t| [n + k - t - 1, m + k - t - 1]));
    RationalFn::new(num, den)
}

/// Memoized evaluation of the coefficient recursion
///
/// ```text
/// ⌈m n; k l⌉_i = α^k_(m,n) ⌈m n; k-1 l-1⌉_i + β^k_(m,n) ⌈m-1 n-1; k l-1⌉_(i-1)
/// ```
///
/// with bases `l = 0` (the bare basis diagram) and `l = 1` (`α` or `β`).
/// Keep one evaluator alive across a parameter grid to share the memo.
#[derive(Default)]
pub struct RecursiveCoeffs {
    memo: HashMap<(i64, i64, i64, i64, i64), RationalFn>,
}

impl RecursiveCoeffs {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, m: i64, n: i64, k: i64, l: i64, i: i64) -> Result<RationalFn> {
        check_args(m, n, k, l, i)?;
        Ok(self.eval(m, n, k, l, i))
    }

    fn eval(&mut self, m: i64, n: i64, k: i64, l: i64, i: i64) -> RationalFn {
        if i < 0 || i > l || m < 0 || n < 0 {
            return RationalFn::zero();
        }
        if l == 0 {
            return if i == 0 { RationalFn::one() } else { RationalFn::zero() };
        }
        let key = (m, n, k, l, i);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = if l == 1 {
            if i == 0 {
                alpha(m, n, k).expect("α denominator nonzero for k >= 1")
            } else {
                beta(m, n, k).expect("β denominator nonzero for k >= 1")
            }
        } else {
            let a = alpha(m, n, k).expect("α denominator nonzero for k >= 1");
            let mut v = &a * &self.eval(m, n, k - 1, l - 1, i);
            let b = beta(m, n, k).expect("β denominator nonzero for k >= 1");
            if !b.is_zero() {
                v = &v + &(&b * &self.eval(m - 1, n - 1, k, l - 1, i - 1));
            }
            v
        };
        self.memo.insert(key, v.clone());
        v
    }
}

/// `⌈m n; k l⌉_i` by the `α`/`β` recursion.
pub fn bubble_coeff_recursive(m: i64, n: i64, k: i64, l: i64, i: i64) -> Result<RationalFn> {
    RecursiveCoeffs::new().get(m, n, k, l, i)
}

fn qint_product(args: impl IntoIterator<Item = i64>) -> LaurentPoly {
    args.into_iter().map(qint).product()
}

/// `⌈m n; k l⌉_i` in quantum integers:
///
/// ```text
/// (-1)^(i+l) a^(i(i-l)) prod[k-j] prod[n-s][m-s] / prod[n+k-t][m+k-t]
///     * [l choose i]_(a^2) * prod[m+n+k-i-j+1]
/// ```
///
/// The Gaussian binomial is taken from its balanced quantum-integer form
/// `[l choose i]_(a^2) = a^(i(l-i)) prod_(s<i) [l-s]/[s+1]`, so this route
/// shares nothing with the other two beyond `[n]` itself.
pub fn bubble_coeff_quantum(m: i64, n: i64, k: i64, l: i64, i: i64) -> Result<RationalFn> {
    if !check_args(m, n, k, l, i)? {
        return Ok(RationalFn::zero());
    }
    let r = l - i;
    let balanced = qint_product((0..i).map(|s| l - s))
        .divide_exact(&qint_product(1..=i))
        .expect("balanced Gaussian binomial is a Laurent polynomial");
    // a^(i(i-l)) * a^(i(l-i)) = 1
    let sign = if (i + l).rem_euclid(2) == 0 { 1 } else { -1 };
    let num = qint_product((0..r).map(|j| k - j))
        * qint_product((0..i).flat_map(|s| [n - s, m - s]))
        * qint_product((0..r).map(|j| m + n + k - i - j + 1))
        * balanced
        * LaurentPoly::constant(sign);
    let den = qint_product((0..l).flat_map(|t| [n + k - t, m + k - t]));
    RationalFn::new(num, den)
}

pub fn bubble_coeff(method: Method, m: i64, n: i64, k: i64, l: i64, i: i64) -> Result<RationalFn> {
    match method {
        Method::Closed => bubble_coeff_closed(m, n, k, l, i),
        Method::Recursive => bubble_coeff_recursive(m, n, k, l, i),
        Method::Quantum => bubble_coeff_quantum(m, n, k, l, i),
    }
}

/// Boundary colors of a bubble: `m, n` on top, `m', n'` on the bottom, `k`
/// strands across the top of the bubble and `l` across the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BubbleParams {
    pub m: i64,
    pub n: i64,
    pub m_prime: i64,
    pub n_prime: i64,
    pub k: i64,
    pub l: i64,
}

impl BubbleParams {
    pub fn new(m: i64, n: i64, m_prime: i64, n_prime: i64, k: i64, l: i64) -> Result<Self> {
        let p = BubbleParams { m, n, m_prime, n_prime, k, l };
        p.validate()?;
        Ok(p)
    }

    /// Fills in `m'` and `n'` from strand conservation.
    pub fn from_top(m: i64, n: i64, k: i64, l: i64) -> Result<Self> {
        Self::new(m, n, m + k - l, n + k - l, k, l)
    }

    pub fn validate(&self) -> Result<()> {
        let BubbleParams { m, n, m_prime, n_prime, k, l } = *self;
        for (name, v) in [("m", m), ("n", n), ("m'", m_prime), ("n'", n_prime), ("k", k), ("l", l)] {
            if v < 0 {
                return Err(Error::ConstraintViolation(format!("{name} = {v} must be nonnegative")));
            }
        }
        if m + k != m_prime + l {
            return Err(Error::ConstraintViolation(format!(
                "m+k = m'+l fails: {m}+{k} != {m_prime}+{l}"
            )));
        }
        if n + k != n_prime + l {
            return Err(Error::ConstraintViolation(format!(
                "n+k = n'+l fails: {n}+{k} != {n_prime}+{l}"
            )));
        }
        Ok(())
    }

    /// The same bubble turned upside down: top and bottom swap, and the left
    /// to right order reverses.
    pub fn rotated(&self) -> Self {
        BubbleParams {
            m: self.n_prime,
            n: self.m_prime,
            m_prime: self.n,
            n_prime: self.m,
            k: self.l,
            l: self.k,
        }
    }
}

/// One summand of a bubble expansion. The basis diagram has `top_label`
/// strands joining the two top clusters and `bottom_label` joining the two
/// bottom clusters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub i: i64,
    pub coeff: RationalFn,
    pub top_label: i64,
    pub bottom_label: i64,
}

/// Full expansion of a bubble.
///
/// For `k >= l` the terms are `⌈m n; k l⌉_i` with labels `(i, k-l+i)` for
/// `0 <= i <= min(m, n, l)`. For `l > k` the bubble is rotated by a half turn,
/// which turns it into a `k >= l` bubble with top colors `(n', m')`; the
/// coefficients are `⌈n' m'; l k⌉_i` and the labels `(l-k+i, i)` for
/// `0 <= i <= min(m', n', k)`.
pub fn bubble_expand(p: &BubbleParams, method: Method) -> Result<Vec<ExpansionTerm>> {
    p.validate()?;
    let upright = p.k >= p.l;
    let q = if upright { *p } else { p.rotated() };
    let top = q.m.min(q.n).min(q.l);
    let mut eval = RecursiveCoeffs::new();
    let mut terms = Vec::new();
    for i in 0..=top {
        let coeff = match method {
            Method::Recursive => eval.get(q.m, q.n, q.k, q.l, i)?,
            _ => bubble_coeff(method, q.m, q.n, q.k, q.l, i)?,
        };
        let (top_label, bottom_label) = if upright { (i, q.k - q.l + i) } else { (i + q.k - q.l, i) };
        if top_label < 0 || bottom_label < 0 {
            continue;
        }
        terms.push(ExpansionTerm { i, coeff, top_label, bottom_label });
    }
    Ok(terms)
}

/// Evaluation of the theta graph `Λ(m, n, k)` (edges colored `m`, `n`, `k`)
/// as `⌈m n; k k⌉_0 Δ_(m+n)`: expand the bubble formed by the `k` edge and
/// keep the only surviving term, a loop of color `m + n`.
pub fn theta(m: i64, n: i64, k: i64) -> Result<RationalFn> {
    if m < 0 || n < 0 || k < 0 {
        return Err(Error::InvalidParams(format!("theta colors must be nonnegative: ({m}, {n}, {k})")));
    }
    Ok(bubble_coeff_closed(m, n, k, k, 0)? * RationalFn::from_poly(delta(m + n)))
}
