//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the
//! process exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qskein::bubble::{bubble_coeff_closed, bubble_coeff_quantum, RecursiveCoeffs};
use qskein::quantum::{alpha, delta, delta_product_identity};
use qskein::series::{qpoch_finite, qpoch_infinite};
use qskein::tail::{
    golden_tail_85, identity_fact, identity_mn, identity_mn1, identity_mn3, stabilization_check, tail_85,
    tail_85_double_sum,
};
use qskein::verify::coefficient_grid;
use qskein::{theta, RationalFn, Result, TruncatedSeries};

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { passed: true, detail: detail.into() })
}

fn fail(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { passed: false, detail: detail.into() })
}

fn golden_tail() -> Result<Outcome> {
    let golden = golden_tail_85();
    let t = tail_85(121);
    let c = t.terms.coeffs();
    let head: Vec<BigInt> = [1, -2, 1, 0, -2, 3].into_iter().map(BigInt::from).collect();
    if golden.len() != 121 || c.len() != 121 {
        return fail(format!("lengths: golden {}, computed {}", golden.len(), c.len()));
    }
    if c[..6] != head[..] || c[120] != BigInt::from(-324) {
        return fail(format!("head {:?}, q^120 {}", &c[..6], c[120]));
    }
    match (0..121).find(|&j| c[j] != golden[j]) {
        Some(j) => fail(format!("q^{j}: computed {}, published {}", c[j], golden[j])),
        None => pass("121 coefficients identical"),
    }
}

fn triple_oracle() -> Result<Outcome> {
    let grid = coefficient_grid(5);
    let mut rec = RecursiveCoeffs::new();
    for &(m, n, k, l, i) in &grid {
        let c = bubble_coeff_closed(m, n, k, l, i)?;
        if c != rec.get(m, n, k, l, i)? || c != bubble_coeff_quantum(m, n, k, l, i)? {
            return fail(format!("(m, n, k, l, i) = ({m}, {n}, {k}, {l}, {i})"));
        }
    }
    pass(format!("{} coefficients agree", grid.len()))
}

fn symmetry_and_vanishing() -> Result<Outcome> {
    let grid = coefficient_grid(5);
    for &(m, n, k, l, i) in &grid {
        if bubble_coeff_closed(m, n, k, l, i)? != bubble_coeff_closed(n, m, k, l, i)? {
            return fail(format!("m/n symmetry at ({m}, {n}, {k}, {l}, {i})"));
        }
        if i == 0 {
            for out in [-2, -1, l + 1, l + 2] {
                if !bubble_coeff_closed(m, n, k, l, out)?.is_zero() {
                    return fail(format!("nonzero at ({m}, {n}, {k}, {l}, {out})"));
                }
            }
        }
    }
    for m in 0..=5 {
        for n in 0..=5 {
            for k in 1..=5 {
                if alpha(m, n, k)? != alpha(n, m, k)? {
                    return fail(format!("alpha symmetry at ({m}, {n}, {k})"));
                }
            }
        }
    }
    pass(format!("{} grid points, alpha on 6x6x5", grid.len()))
}

fn delta_identity() -> Result<Outcome> {
    for m in 0..=8 {
        for n in 0..=8 {
            for k in 0..=8 {
                if !delta_product_identity(m, n, k) {
                    return fail(format!("(m, n, k) = ({m}, {n}, {k})"));
                }
            }
        }
    }
    pass("729 triples")
}

fn theta_symmetry() -> Result<Outcome> {
    let lam = |a: i64, b: i64, c: i64| -> Result<RationalFn> {
        Ok(bubble_coeff_closed(a, b, c, c, 0)? * RationalFn::from_poly(delta(a + b)))
    };
    for m in 0..=5 {
        for n in 0..=5 {
            for k in 0..=5 {
                let t = lam(m, n, k)?;
                if t != lam(m, k, n)? || t != lam(n, k, m)? || t != theta(m, n, k)? {
                    return fail(format!("Λ({m}, {n}, {k})"));
                }
            }
        }
    }
    for k in 0..=5 {
        if theta(0, 0, k)? != RationalFn::from_poly(delta(k)) {
            return fail(format!("Λ(0, 0, {k}) != Δ_{k}"));
        }
    }
    for m in 0..=5 {
        for n in 0..=5 {
            if theta(m, n, 0)? != RationalFn::from_poly(delta(m + n)) {
                return fail(format!("Λ({m}, {n}, 0) != Δ_{}", m + n));
            }
        }
    }
    pass("216 triples plus boundary values")
}

fn identity_checks() -> Result<Outcome> {
    let mut tallies: BTreeMap<&str, BTreeMap<String, usize>> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut record = |name: &'static str, case: String, holds: bool, mono: String| {
        *tallies.entry(name).or_default().entry(mono).or_insert(0) += 1;
        if !holds {
            failures.push(format!("{name}{case}"));
        }
    };
    for n in 0..=5i64 {
        for j in 0..n {
            let c = identity_fact(n, j)?;
            record("fact", format!("({n}, {j})"), c.holds, c.to_string());
        }
        for i in 0..=n {
            let c = identity_mn(n, i)?;
            record("mn", format!("({n}, {i})"), c.holds, c.to_string());
            for j in 0..=5 {
                let c = identity_mn1(n, i, j)?;
                record("mn1", format!("({n}, {i}, {j})"), c.holds, c.to_string());
            }
        }
        for i in 0..=5 {
            for j in 0..=5 {
                let c = identity_mn3(n, i, j)?;
                record("mn3", format!("({n}, {i}, {j})"), c.holds(), c.pochhammer.to_string());
            }
        }
    }
    let summary: Vec<String> = tallies
        .iter()
        .map(|(name, t)| {
            let monos: Vec<String> = t.iter().map(|(m, c)| format!("{m} x{c}")).collect();
            format!("{name}: {}", monos.join(", "))
        })
        .collect();
    if failures.is_empty() {
        pass(format!("discrepancy monomials: {}", summary.join("; ")))
    } else {
        fail(format!("failed at {}", failures.join(", ")))
    }
}

fn stabilization() -> Result<Outcome> {
    let mut times = Vec::new();
    for n in 1..=4 {
        let start = Instant::now();
        if !stabilization_check(n)? {
            return fail(format!("n = {n}"));
        }
        times.push(format!("n={n} {:.2?}", start.elapsed()));
    }
    pass(times.join(", "))
}

fn random_unit_series(rng: &mut StdRng, order: usize) -> TruncatedSeries {
    let mut c: Vec<BigInt> = (0..order).map(|_| BigInt::from(rng.random_range(-50i64..=50))).collect();
    c[0] = BigInt::from(if rng.random_bool(0.5) { 1 } else { -1 });
    TruncatedSeries::new(rng.random_range(-8i64..=8), c).expect("nonempty")
}

fn series_kernel() -> Result<Outcome> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0085);
    let one = TruncatedSeries::one(64);
    for trial in 0..100 {
        let f = random_unit_series(&mut rng, 64);
        let prod = f.mul(&f.invert()?);
        if !prod.doteq(&one, 64)? || prod.shift() != 0 {
            return fail(format!("trial {trial}: f = {f}"));
        }
    }
    let pentagonal = qpoch_infinite(200);
    let direct = qpoch_finite(199, 200);
    if pentagonal != direct {
        return fail("pentagonal series differs from the finite product mod q^200");
    }
    pass("100 random inverses at order 64, (q;q)_inf mod q^200")
}

fn rearrangement() -> Result<Outcome> {
    let a = tail_85(121);
    let b = tail_85_double_sum(121);
    match (0..121).find(|&j| a.terms.coeffs()[j] != b.terms.coeffs()[j]) {
        Some(j) => fail(format!("q^{j}: direct {}, double sum {}", a.terms.coeffs()[j], b.terms.coeffs()[j])),
        None => pass("121 coefficients identical"),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden tail of 8_5 through q^120", golden_tail),
        ("closed, recursive and quantum coefficients agree", triple_oracle),
        ("coefficient symmetry and vanishing", symmetry_and_vanishing),
        ("delta product identity for 0 <= m, n, k <= 8", delta_identity),
        ("theta three-way symmetry and boundary values", theta_symmetry),
        ("Pochhammer identities up to a unit monomial", identity_checks),
        ("state sum stabilizes to the tail for n = 1..4", stabilization),
        ("series inversion and pentagonal product", series_kernel),
        ("double-sum rearrangement equals the direct tail", rearrangement),
    ];
    let mut failed = 0;
    let total = Instant::now();
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome { passed: false, detail: format!("error: {e}") });
        let elapsed: Duration = start.elapsed();
        let mark = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {mark} {name} [{elapsed:.2?}] {}", idx + 1, outcome.detail);
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.2?}", criteria.len() - failed, total.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
