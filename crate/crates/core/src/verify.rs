//! Property grids shared by the command line and the test suites.
//!
//! Each suite runs a handful of named properties over finite grids and
//! reports, per property, how many cases ran and the first failing case.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bubble::{bubble_coeff_closed, bubble_coeff_quantum, RecursiveCoeffs};
use crate::bubble::theta;
use crate::error::Result;
use crate::poly::LaurentPoly;
use crate::quantum::{alpha, alpha_product_form, delta, delta_product_identity};
use crate::rational::RationalFn;
use crate::tail::{
    golden_tail_85, identity_fact, identity_mn, identity_mn1, identity_mn3, p_sum, sb_state_sum,
    stabilization_check, tail_85, tail_85_double_sum, MonomialCheck,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Bubble,
    Theta,
    Identities,
    Tail,
    Stabilization,
}

impl Suite {
    const NAMES: [(&'static str, Suite); 6] = [
        ("all", Suite::All),
        ("bubble", Suite::Bubble),
        ("theta", Suite::Theta),
        ("identities", Suite::Identities),
        ("tail", Suite::Tail),
        ("stabilization", Suite::Stabilization),
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES.iter().find(|(_, s)| *s == self).map(|(n, _)| *n).unwrap_or("all")
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::NAMES.iter().find(|(n, _)| *n == s).map(|(_, v)| *v).ok_or_else(|| {
            let names: Vec<&str> = Self::NAMES.iter().map(|(n, _)| *n).collect();
            format!("unknown suite {s:?} (expected one of {})", names.join(", "))
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub suite: Suite,
    pub property: String,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub notes: Vec<String>,
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} [{}] {} ({} cases)", self.suite, self.property, self.cases)?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n    counterexample: {c}")?;
        }
        for n in &self.notes {
            write!(f, "\n    {n}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub properties: Vec<PropertyReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            writeln!(f, "{p}")?;
        }
        let failed = self.properties.iter().filter(|p| !p.passed).count();
        write!(f, "{} properties, {} failed", self.properties.len(), failed)
    }
}

/// Runs `test` on every case until the first failure. An `Err` counts as a
/// failure and its message is attached to the counterexample.
fn property<T: fmt::Debug>(
    suite: Suite,
    name: &str,
    cases: impl IntoIterator<Item = T>,
    mut test: impl FnMut(&T) -> Result<bool>,
) -> PropertyReport {
    let mut count = 0;
    let mut counterexample = None;
    for case in cases {
        count += 1;
        match test(&case) {
            Ok(true) => {}
            Ok(false) => counterexample = Some(format!("{case:?}")),
            Err(e) => counterexample = Some(format!("{case:?}: {e}")),
        }
        if counterexample.is_some() {
            break;
        }
    }
    PropertyReport {
        suite,
        property: name.to_string(),
        cases: count,
        passed: counterexample.is_none(),
        counterexample,
        notes: Vec::new(),
    }
}

/// `(m, n, k, l, i)` with `0 <= m, n <= max`, `1 <= l <= k <= max`,
/// `0 <= i <= min(m, n, l)`.
pub fn coefficient_grid(max: i64) -> Vec<(i64, i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            for k in 1..=max {
                for l in 1..=k {
                    for i in 0..=m.min(n).min(l) {
                        out.push((m, n, k, l, i));
                    }
                }
            }
        }
    }
    out
}

fn cube(lo: i64, max: i64) -> impl Iterator<Item = (i64, i64, i64)> {
    (lo..=max).flat_map(move |a| (lo..=max).flat_map(move |b| (lo..=max).map(move |c| (a, b, c))))
}

pub fn bubble_suite(max: Option<i64>) -> Vec<PropertyReport> {
    let s = Suite::Bubble;
    let max_c = max.unwrap_or(5);
    let max_d = max.unwrap_or(8);
    let grid = coefficient_grid(max_c);
    let mut rec = RecursiveCoeffs::new();
    vec![
        property(s, "closed, recursive and quantum coefficients agree", grid.iter().copied(), |&(m, n, k, l, i)| {
            let c = bubble_coeff_closed(m, n, k, l, i)?;
            Ok(c == rec.get(m, n, k, l, i)? && c == bubble_coeff_quantum(m, n, k, l, i)?)
        }),
        property(s, "coefficient symmetric in m and n", grid.iter().copied(), |&(m, n, k, l, i)| {
            Ok(bubble_coeff_closed(m, n, k, l, i)? == bubble_coeff_closed(n, m, k, l, i)?)
        }),
        property(
            s,
            "coefficient vanishes for i < 0 and i > l",
            coefficient_grid(max_c).into_iter().filter(|t| t.4 == 0),
            |&(m, n, k, l, _)| {
                for i in [-2, -1, l + 1, l + 2] {
                    if !bubble_coeff_closed(m, n, k, l, i)?.is_zero() || !rec.get(m, n, k, l, i)?.is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ),
        property(s, "alpha symmetric in m and n", cube(0, max_c).filter(|t| t.2 >= 1), |&(m, n, k)| {
            Ok(alpha(m, n, k)? == alpha(n, m, k)?)
        }),
        property(s, "alpha equals its product form", cube(0, max_c).filter(|t| t.2 >= 1), |&(m, n, k)| {
            Ok(alpha(m, n, k)? == alpha_product_form(m, n, k)?)
        }),
        property(s, "delta product identity", cube(0, max_d), |&(m, n, k)| Ok(delta_product_identity(m, n, k))),
    ]
}

pub fn theta_suite(max: Option<i64>) -> Vec<PropertyReport> {
    let s = Suite::Theta;
    let max = max.unwrap_or(5);
    vec![
        property(s, "theta symmetric under all edge permutations", cube(0, max), |&(m, n, k)| {
            let t = theta(m, n, k)?;
            for (a, b, c) in [(n, m, k), (m, k, n), (k, n, m), (n, k, m), (k, m, n)] {
                if theta(a, b, c)? != t {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        property(s, "theta(0, 0, k) = Δ_k", 0..=max, |&k| Ok(theta(0, 0, k)? == RationalFn::from_poly(delta(k)))),
        property(s, "theta(m, n, 0) = Δ_(m+n)", cube(0, max).filter(|t| t.2 == 0), |&(m, n, _)| {
            Ok(theta(m, n, 0)? == RationalFn::from_poly(delta(m + n)))
        }),
    ]
}

/// Tally of discrepancy monomials, rendered as a single note.
fn discrepancy_note(tally: &BTreeMap<String, usize>) -> String {
    let parts: Vec<String> = tally.iter().map(|(k, v)| format!("{k} x{v}")).collect();
    format!("discrepancy monomials: {}", parts.join(", "))
}

fn identity_property<T: fmt::Debug>(
    name: &str,
    cases: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> Result<(MonomialCheck, bool)>,
) -> PropertyReport {
    let mut tally = BTreeMap::new();
    let mut report = property(Suite::Identities, name, cases, |case| {
        let (c, extra) = check(case)?;
        *tally.entry(c.to_string()).or_insert(0) += 1;
        Ok(c.holds && extra)
    });
    report.notes.push(discrepancy_note(&tally));
    report
}

pub fn identities_suite(max: Option<i64>) -> Vec<PropertyReport> {
    let max = max.unwrap_or(5);
    let fact_cases = (1..=max).flat_map(|n| (0..n).map(move |j| (n, j)));
    let mn_cases = (0..=max).flat_map(|n| (0..=n).map(move |i| (n, i)));
    let mn1_cases = cube(0, max).filter(|&(n, i, _)| i <= n);
    vec![
        identity_property("factorial product in Pochhammer form", fact_cases, |&(n, j)| {
            Ok((identity_fact(n, j)?, true))
        }),
        identity_property("⌈n n; n n⌉_i in Pochhammer form", mn_cases, |&(n, i)| Ok((identity_mn(n, i)?, true))),
        identity_property("⌈j n; n n-i⌉_0 in Pochhammer form", mn1_cases, |&(n, i, j)| {
            Ok((identity_mn1(n, i, j)?, true))
        }),
        identity_property("⌈i j; n n⌉_0 Δ_(i+j) in Pochhammer form and as a theta", cube(0, max), |&(n, i, j)| {
            let c = identity_mn3(n, i, j)?;
            Ok((c.pochhammer, c.theta_matches))
        }),
    ]
}

pub fn tail_suite(max: Option<i64>) -> Vec<PropertyReport> {
    let s = Suite::Tail;
    let order = max.unwrap_or(121).max(1) as usize;
    let golden = golden_tail_85();
    let direct = tail_85(order);
    let compared = order.min(golden.len());
    let mut golden_report = property(s, "tail matches the published coefficients", 0..compared, |&j| {
        Ok(direct.terms.coeffs()[j] == golden[j])
    });
    if let Some(c) = &mut golden_report.counterexample {
        let j: usize = c.parse().unwrap_or(0);
        *c = format!("q^{j}: computed {}, published {}", direct.terms.coeffs()[j], golden[j]);
    }
    let double = tail_85_double_sum(order);
    let mut rearranged = property(s, "double-sum rearrangement matches the direct sum", 0..order, |&j| {
        Ok(direct.terms.coeffs()[j] == double.terms.coeffs()[j])
    });
    if let Some(c) = &mut rearranged.counterexample {
        let j: usize = c.parse().unwrap_or(0);
        *c = format!("q^{j}: direct {}, double sum {}", direct.terms.coeffs()[j], double.terms.coeffs()[j]);
    }
    vec![golden_report, rearranged]
}

pub fn stabilization_suite(max: Option<i64>) -> Vec<PropertyReport> {
    let s = Suite::Stabilization;
    let max = max.unwrap_or(4);
    let gaps = |f: &LaurentPoly| f.terms().all(|(_, e)| (e - f.min_exp()) % 4 == 0);
    vec![
        property(s, "state sum over Δ_n reproduces the tail through q^n", 1..=max, |&n| stabilization_check(n)),
        property(s, "state sum over Δ_n has A-exponent gaps divisible by 4", 0..=max, |&n| {
            let r = sb_state_sum(n)?.value.checked_div(&RationalFn::from_poly(delta(n)))?;
            Ok(gaps(r.num()) && gaps(r.den()))
        }),
        property(s, "sum of P(n, i, j) equals the state sum", 0..=max.min(3), |&n| {
            Ok(p_sum(n)? == sb_state_sum(n)?.value)
        }),
    ]
}

/// Runs one suite (or all of them). `max` overrides each grid's default bound;
/// for the tail suite it is the number of coefficients.
pub fn run(suite: Suite, max: Option<i64>) -> Report {
    let properties = match suite {
        Suite::All => [
            bubble_suite(max),
            theta_suite(max),
            identities_suite(max),
            tail_suite(None),
            stabilization_suite(max.map(|m| m.min(4))),
        ]
        .concat(),
        Suite::Bubble => bubble_suite(max),
        Suite::Theta => theta_suite(max),
        Suite::Identities => identities_suite(max),
        Suite::Tail => tail_suite(max),
        Suite::Stabilization => stabilization_suite(max),
    };
    Report { properties }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for (name, s) in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap(), s);
            assert_eq!(s.to_string(), name);
        }
        assert!("unknown".parse::<Suite>().is_err());
    }

    #[test]
    fn grid_size() {
        // l <= k <= 1, i <= min(m, n, 1)
        let g = coefficient_grid(1);
        assert_eq!(g.len(), 5);
    }

    #[test]
    fn small_suites_pass() {
        let r = run(Suite::Bubble, Some(2));
        assert!(r.passed(), "{r}");
        let r = run(Suite::Theta, Some(2));
        assert!(r.passed(), "{r}");
        let r = run(Suite::Tail, Some(10));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn failure_carries_counterexample() {
        let r = property(Suite::Bubble, "odd", 0..5, |&x| Ok(x < 3));
        assert!(!r.passed);
        assert_eq!(r.cases, 4);
        assert_eq!(r.counterexample.as_deref(), Some("3"));
    }
}
