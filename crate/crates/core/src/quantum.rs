//! Quantum integers, loop values `Δ_n`, Gaussian binomials and the two
//! one-step bubble coefficients `α` and `β`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::poly::LaurentPoly;
use crate::rational::RationalFn;

/// The quantum integer `[n] = (a^n - a^-n) / (a - a^-1)` with `a = A^2`,
/// i.e. `a^(n-1) + a^(n-3) + ... + a^(1-n)`. `[0] = 0` and `[-n] = -[n]`.
pub fn qint(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let m = n.abs();
    let sign = n.signum();
    LaurentPoly::from_terms((0..m).map(|t| (sign, 2 * (m - 1 - 2 * t))))
}

/// Value of the `n`-colored unknot, `Δ_n = (-1)^n [n+1]`. The defining
/// formula is used for every integer, so `Δ_-1 = 0` and `Δ_(-n-2) = -Δ_n`.
pub fn delta(n: i64) -> LaurentPoly {
    let q = qint(n + 1);
    if n.rem_euclid(2) == 1 {
        -q
    } else {
        q
    }
}

/// `prod_{j in range} Δ_j` as a polynomial.
pub(crate) fn delta_product(indices: impl IntoIterator<Item = i64>) -> LaurentPoly {
    indices.into_iter().map(delta).product()
}

/// Rows of Gaussian binomials in `q`, built by the q-Pascal rule
/// `[l, i] = [l-1, i] + q^(l-i) [l-1, i-1]`. Row `l` holds `l + 1`
/// coefficient vectors (ascending powers of `q`).
pub struct GaussTable {
    rows: Vec<Vec<Vec<BigInt>>>,
}

impl GaussTable {
    pub fn new(max_l: usize) -> Self {
        let mut rows: Vec<Vec<Vec<BigInt>>> = vec![vec![vec![BigInt::one()]]];
        for l in 1..=max_l {
            let prev = &rows[l - 1];
            let row = (0..=l)
                .map(|i| {
                    let mut c: Vec<BigInt> = if i < l { prev[i].clone() } else { Vec::new() };
                    if i > 0 {
                        let shift = l - i;
                        let upper = &prev[i - 1];
                        if c.len() < upper.len() + shift {
                            c.resize(upper.len() + shift, BigInt::zero());
                        }
                        for (t, x) in upper.iter().enumerate() {
                            c[t + shift] += x;
                        }
                    }
                    c
                })
                .collect();
            rows.push(row);
        }
        GaussTable { rows }
    }

    /// Coefficients of `[l choose i]_q`, empty (zero) for `i` outside `0..=l`.
    pub fn get(&self, l: usize, i: i64) -> &[BigInt] {
        if i < 0 || i as usize > l {
            return &[];
        }
        &self.rows[l][i as usize]
    }
}

/// `[l choose i]_q` as q-coefficients.
pub fn gauss_binom_q(l: usize, i: i64) -> Vec<BigInt> {
    if i < 0 || i as usize > l {
        return Vec::new();
    }
    GaussTable::new(l).get(l, i).to_vec()
}

/// `[l choose i]_q` as a Laurent polynomial in `A` (`q = A^4`); zero for
/// `i < 0` or `i > l`.
pub fn gauss_binom(l: usize, i: i64) -> LaurentPoly {
    q_poly_to_a(&gauss_binom_q(l, i))
}

/// Reads ascending q-coefficients as a polynomial in `A^4`.
pub(crate) fn q_poly_to_a(c: &[BigInt]) -> LaurentPoly {
    LaurentPoly::from_terms(c.iter().enumerate().map(|(j, x)| (x.clone(), 4 * j as i64)))
}

/// `Δ_(m+k) Δ_(n+k-1) - Δ_m Δ_(n-1) == Δ_(m+n+k) Δ_(k-1)`, checked exactly.
pub fn delta_product_identity(m: i64, n: i64, k: i64) -> bool {
    let lhs = delta(m + k) * delta(n + k - 1) - delta(m) * delta(n - 1);
    let rhs = delta(m + n + k) * delta(k - 1);
    lhs == rhs
}

/// `α^k_(m,n) = (Δ_(n+k) Δ_(m+k-1) - Δ_n Δ_(m-1)) / (Δ_(n+k-1) Δ_(m+k-1))`,
/// the coefficient of the strand-removal term in the one-strand bubble.
pub fn alpha(m: i64, n: i64, k: i64) -> Result<RationalFn> {
    let num = delta(n + k) * delta(m + k - 1) - delta(n) * delta(m - 1);
    RationalFn::new(num, delta(n + k - 1) * delta(m + k - 1))
}

/// `α` through the delta product identity:
/// `Δ_(m+n+k) Δ_(k-1) / (Δ_(n+k-1) Δ_(m+k-1))`.
pub fn alpha_product_form(m: i64, n: i64, k: i64) -> Result<RationalFn> {
    RationalFn::new(delta(m + n + k) * delta(k - 1), delta(n + k - 1) * delta(m + k - 1))
}

/// `β^k_(m,n) = Δ_(m-1) Δ_(n-1) / (Δ_(n+k-1) Δ_(m+k-1))`.
pub fn beta(m: i64, n: i64, k: i64) -> Result<RationalFn> {
    RationalFn::new(delta(m - 1) * delta(n - 1), delta(n + k - 1) * delta(m + k - 1))
}
