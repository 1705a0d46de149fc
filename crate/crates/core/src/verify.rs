//! The cross-verification suite behind the `verify` subcommand.
//!
//! Every identity the crate relies on is checked here along at least two
//! independent computation routes, with exact equality as the only accepted
//! outcome. Checks collect into a deterministic report sorted by identity
//! name; a failure carries the indices and both values of the first mismatch
//! encountered in iteration order.

use std::fmt::Display;

use crate::arith::{binomial, factorial, Int, Rat};
use crate::bernoulli::{
    bernoulli_at_integer, bernoulli_at_integer_from_triangle, bernoulli_numbers_recurrence,
    bernoulli_numbers_stirling, bernoulli_polynomial,
};
use crate::fubini::{fubini_antiderivative, fubini_poly, ordered_bell};
use crate::series::{
    bernoulli_poly_egf, exp_rt, fubini_egf, integrated_identity_check, integrated_identity_sides,
    Series,
};
use crate::stirling::{r_stirling, r_stirling_shifted, stirling2, StirlingTriangle};

/// Bounds for one run of the suite.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Largest polynomial/series index exercised by the cross checks.
    pub max_n: usize,
    /// Largest `r` exercised.
    pub max_r: usize,
    /// Truncation order for the generating-function checks.
    pub egf_order: usize,
    /// Evaluation points for the integrated log identity.
    pub s_values: Vec<Rat>,
    /// Test-harness hook: corrupt one triangle entry so the suite must fail.
    pub corrupt_triangle: bool,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            max_n: 40,
            max_r: 8,
            egf_order: 32,
            s_values: vec![
                Rat::from(-1),
                Rat::new(Int::one(), Int::from(2)).expect("2 != 0"),
                Rat::from(2),
            ],
            corrupt_triangle: false,
        }
    }
}

/// First mismatch of a failed check: where, and the two disagreeing values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub indices: String,
    pub lhs: String,
    pub rhs: String,
}

/// Result of a single named identity check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<Mismatch>,
}

impl CheckOutcome {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

struct Check {
    name: &'static str,
    cases: usize,
    failure: Option<Mismatch>,
}

impl Check {
    fn new(name: &'static str) -> Check {
        Check {
            name,
            cases: 0,
            failure: None,
        }
    }

    /// Record one comparison; keep only the first mismatch.
    fn case<T: PartialEq + Display>(&mut self, indices: impl Display, lhs: T, rhs: T) {
        self.cases += 1;
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(Mismatch {
                indices: indices.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

/// Run every check and return the outcomes sorted by identity name.
pub fn run_suite(config: &VerifyConfig) -> Vec<CheckOutcome> {
    // B_n(r) along the alternating-sum route, shared by several checks;
    // index [r][n], with r up to max_r + 1 for the forward difference.
    let sum_route: Vec<Vec<Rat>> = (0..=config.max_r + 1)
        .map(|r| {
            (0..=config.max_n)
                .map(|n| bernoulli_at_integer(n, r))
                .collect()
        })
        .collect();

    let mut outcomes = vec![
        check_stirling_path_equivalence(config),
        check_stirling_classical_reduction(config),
        check_stirling_partition_enumeration(config),
        check_stirling_support(config),
        check_stirling_bell_row_sums(config),
        check_bernoulli_table_agreement(config),
        check_bernoulli_summand_match(config),
        check_bernoulli_three_paths(config, &sum_route),
        check_bernoulli_triangle_route(config, &sum_route),
        check_bernoulli_forward_difference(config, &sum_route),
        check_fubini_derivative_roundtrip(config),
        check_fubini_antiderivative_collapse(config, &sum_route),
        check_fubini_egf_agreement(config),
        check_ordered_bell(config),
        check_integrated_log_identity(config),
        check_log_collapse(config),
        check_r_stirling_generating_function(config),
        check_exp_log_roundtrip(config),
        check_mul_inverse(config),
        check_ring_ops(config),
    ];
    outcomes.sort_by(|a, b| a.name.cmp(b.name));
    outcomes
}

/// Render one line per check plus a summary; returns whether all passed.
pub fn render_report(outcomes: &[CheckOutcome], out: &mut impl std::io::Write) -> std::io::Result<bool> {
    let mut failed = 0;
    for outcome in outcomes {
        match &outcome.failure {
            None => writeln!(out, "ok   {} ({} cases)", outcome.name, outcome.cases)?,
            Some(m) => {
                failed += 1;
                writeln!(
                    out,
                    "FAIL {} at {}: left={} right={}",
                    outcome.name, m.indices, m.lhs, m.rhs
                )?;
            }
        }
    }
    writeln!(
        out,
        "verify: {} checks, {} failed",
        outcomes.len(),
        failed
    )?;
    Ok(failed == 0)
}

fn check_stirling_path_equivalence(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("stirling/path-equivalence");
    for r in 0..=config.max_r {
        let n_max = r + config.max_n;
        let mut triangle = StirlingTriangle::build(r, n_max).expect("n_max >= r");
        if config.corrupt_triangle && r == 0 {
            let last = triangle.rows.last_mut().expect("at least one row");
            let mid = last.len() / 2;
            last[mid] += &Int::one();
        }
        for n in r..=n_max {
            for k in 0..=n {
                let recurrence = triangle.get(n, k);
                if k >= r {
                    check.case(
                        format!("n={n} k={k} r={r}"),
                        recurrence.clone(),
                        r_stirling_shifted(n - r, k - r, r),
                    );
                }
                // spot-check the standalone recurrence against the triangle
                if k == n || k == n / 2 {
                    check.case(
                        format!("n={n} k={k} r={r} (standalone)"),
                        recurrence,
                        r_stirling(n, k, r).expect("n >= r"),
                    );
                }
                if check.failed() {
                    return check.finish();
                }
            }
        }
    }
    check.finish()
}

fn check_stirling_classical_reduction(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("stirling/classical-reduction");
    let t0 = StirlingTriangle::build(0, config.max_n).expect("n_max >= 0");
    let t1 = StirlingTriangle::build(1, config.max_n.max(1)).expect("n_max >= 1");
    for n in 0..=config.max_n {
        for k in 0..=n {
            check.case(format!("n={n} k={k} r=0"), t0.get(n, k), stirling2(n, k));
            if n >= 1 {
                check.case(format!("n={n} k={k} r=1"), t1.get(n, k), stirling2(n, k));
            }
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

/// Count partitions of `{1..n}` into `k` non-empty blocks with `1..=r` in
/// pairwise distinct blocks, by exhaustive recursive placement.
fn count_restricted_partitions(n: usize, k: usize, r: usize) -> u64 {
    fn place(element: usize, n: usize, k: usize, r: usize, blocks: &mut Vec<Vec<usize>>) -> u64 {
        if element > n {
            return u64::from(blocks.len() == k);
        }
        let mut total = 0;
        for i in 0..blocks.len() {
            // elements <= r must not share a block
            if element <= r && blocks[i].iter().any(|&e| e <= r) {
                continue;
            }
            blocks[i].push(element);
            total += place(element + 1, n, k, r, blocks);
            blocks[i].pop();
        }
        if blocks.len() < k {
            blocks.push(vec![element]);
            total += place(element + 1, n, k, r, blocks);
            blocks.pop();
        }
        total
    }
    if n == 0 {
        return u64::from(k == 0);
    }
    place(1, n, k, r, &mut Vec::new())
}

fn check_stirling_partition_enumeration(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("stirling/partition-enumeration");
    for r in 0..=config.max_r.min(3) {
        let triangle = StirlingTriangle::build(r, 8).expect("8 >= r");
        for n in r..=8 {
            for k in 0..=n {
                check.case(
                    format!("n={n} k={k} r={r}"),
                    triangle.get(n, k),
                    Int::from(count_restricted_partitions(n, k, r)),
                );
            }
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_stirling_support(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("stirling/support");
    for r in 0..=config.max_r {
        let n_max = r + config.max_n.min(20);
        let triangle = StirlingTriangle::build(r, n_max).expect("n_max >= r");
        for n in r..=n_max {
            for k in 0..=n + 2 {
                let value = triangle.get(n, k);
                let outside = k > n
                    || (k < r && r >= 1)
                    || (r == 0 && k == 0 && n >= 1);
                check.case(
                    format!("n={n} k={k} r={r}"),
                    value.is_zero(),
                    outside,
                );
            }
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_stirling_bell_row_sums(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("stirling/bell-row-sums");
    let n_max = config.max_n.min(25);
    let triangle = StirlingTriangle::build(0, n_max).expect("n_max >= 0");
    // Bell numbers by the Aitken-array recurrence, an independent route
    let mut bell = vec![Int::one()];
    let mut row = vec![Int::one()];
    for _ in 1..=n_max {
        let mut next = vec![row.last().expect("non-empty").clone()];
        for value in &row {
            let previous = next.last().expect("non-empty").clone();
            next.push(previous + value);
        }
        bell.push(next[0].clone());
        row = next;
    }
    for n in 0..=n_max {
        let row_sum = triangle
            .row(n)
            .iter()
            .fold(Int::zero(), |acc, v| acc + v);
        check.case(format!("n={n}"), row_sum, bell[n].clone());
    }
    check.finish()
}

fn check_bernoulli_table_agreement(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("bernoulli/table-agreement");
    let by_stirling = bernoulli_numbers_stirling(config.max_n);
    let by_recurrence = bernoulli_numbers_recurrence(config.max_n);
    for n in 0..=config.max_n {
        check.case(
            format!("n={n}"),
            by_stirling.get(n).clone(),
            by_recurrence.get(n).clone(),
        );
    }
    check.finish()
}

/// At `r = 0` the shifted sum must reproduce the classical Stirling-sum
/// formula summand by summand, not merely in total.
fn check_bernoulli_summand_match(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("bernoulli/summand-match-at-r0");
    for n in 0..=config.max_n {
        for k in 0..=n {
            check.case(
                format!("n={n} k={k} (stirling factor)"),
                r_stirling_shifted(n, k, 0),
                stirling2(n, k),
            );
            let weight = Rat::new(factorial(k), Int::from(k + 1)).expect("k+1 > 0");
            let sign = if k % 2 == 0 { Rat::one() } else { Rat::from(-1) };
            let shifted = &sign * &(&weight * &Rat::from_int(r_stirling_shifted(n, k, 0)));
            let classical = &sign * &(&weight * &Rat::from_int(stirling2(n, k)));
            check.case(format!("n={n} k={k} (summand)"), shifted, classical);
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_bernoulli_three_paths(config: &VerifyConfig, sum_route: &[Vec<Rat>]) -> CheckOutcome {
    let mut check = Check::new("bernoulli/three-path-agreement");
    let polynomials: Vec<_> = (0..=config.max_n).map(bernoulli_polynomial).collect();
    for r in 0..=config.max_r {
        let egf = bernoulli_poly_egf(r, config.max_n);
        for n in 0..=config.max_n {
            let by_sum = &sum_route[r][n];
            let by_poly = polynomials[n].eval(&Rat::from(r as i64));
            let by_egf = egf.egf_coeff(n);
            check.case(
                format!("n={n} r={r} (sum vs polynomial)"),
                by_sum.clone(),
                by_poly,
            );
            check.case(format!("n={n} r={r} (sum vs series)"), by_sum.clone(), by_egf);
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_bernoulli_triangle_route(config: &VerifyConfig, sum_route: &[Vec<Rat>]) -> CheckOutcome {
    let mut check = Check::new("bernoulli/triangle-route-agreement");
    for r in 0..=config.max_r {
        let triangle = StirlingTriangle::build(r, config.max_n + r).expect("n_max >= r");
        for n in 0..=config.max_n {
            check.case(
                format!("n={n} r={r}"),
                bernoulli_at_integer_from_triangle(&triangle, n),
                sum_route[r][n].clone(),
            );
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_bernoulli_forward_difference(
    config: &VerifyConfig,
    sum_route: &[Vec<Rat>],
) -> CheckOutcome {
    let mut check = Check::new("bernoulli/forward-difference");
    for n in 1..=config.max_n {
        for r in 0..=config.max_r {
            let difference = &sum_route[r + 1][n] - &sum_route[r][n];
            // n * r^(n-1), with 0^0 = 1 at n = 1, r = 0
            let expected =
                Rat::from_int(Int::from(n) * Int::from(r).pow(n as u32 - 1));
            check.case(format!("n={n} r={r}"), difference, expected);
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_fubini_derivative_roundtrip(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("fubini/derivative-roundtrip");
    for n in 0..=config.max_n.min(25) {
        for r in 0..=config.max_r {
            check.case(
                format!("n={n} r={r}"),
                fubini_antiderivative(n, r).derivative(),
                fubini_poly(n, r).poly().clone(),
            );
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_fubini_antiderivative_collapse(
    config: &VerifyConfig,
    sum_route: &[Vec<Rat>],
) -> CheckOutcome {
    let mut check = Check::new("fubini/antiderivative-at-minus-one");
    let minus_one = Rat::from(-1);
    for n in 0..=config.max_n {
        for r in 0..=config.max_r {
            let negated = -fubini_antiderivative(n, r).eval(&minus_one);
            check.case(format!("n={n} r={r}"), negated, sum_route[r][n].clone());
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_fubini_egf_agreement(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("fubini/egf-agreement");
    let half = Rat::new(Int::one(), Int::from(2)).expect("2 != 0");
    let points = [Rat::one(), Rat::from(-1), half, Rat::from(2)];
    let order = config.max_n.min(config.egf_order);
    for r in 0..=config.max_r {
        for x in &points {
            let series = fubini_egf(x, r, order);
            for n in 0..=order {
                check.case(
                    format!("n={n} r={r} x={x}"),
                    series.egf_coeff(n),
                    fubini_poly(n, r).eval(x),
                );
            }
            if check.failed() {
                return check.finish();
            }
        }
    }
    check.finish()
}

/// Count surjections `{1..n} -> {1..k}` summed over `k`; each surjection is
/// an ordered set partition, so the total is the ordered Bell number.
fn count_ordered_partitions(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for k in 1..=n {
        let mut assignment = vec![0usize; n];
        loop {
            let mut seen = vec![false; k];
            for &a in &assignment {
                seen[a] = true;
            }
            if seen.iter().all(|&s| s) {
                total += 1;
            }
            // odometer step
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                assignment[i] += 1;
                if assignment[i] < k {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    total
}

fn check_ordered_bell(_config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("fubini/ordered-bell");
    for n in 0..=5 {
        check.case(
            format!("n={n} (enumeration)"),
            ordered_bell(n),
            Int::from(count_ordered_partitions(n)),
        );
    }
    // binomial recurrence a(n) = sum_{k=1}^{n} C(n,k) a(n-k)
    let mut by_recurrence = vec![Int::one()];
    for n in 1..=12 {
        let mut acc = Int::zero();
        for k in 1..=n {
            acc += &(binomial(n, k as isize) * &by_recurrence[n - k]);
        }
        by_recurrence.push(acc);
    }
    for (n, expected) in by_recurrence.iter().enumerate() {
        check.case(
            format!("n={n} (recurrence)"),
            ordered_bell(n),
            expected.clone(),
        );
    }
    check.finish()
}

fn check_integrated_log_identity(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("egf/integrated-log-identity");
    for s in &config.s_values {
        for r in 0..=config.max_r {
            check.cases += 1;
            if check.failure.is_none() {
                if let Err(mismatch) = integrated_identity_check(s, r, config.egf_order) {
                    check.failure = Some(Mismatch {
                        indices: format!("n={} r={r} s={s}", mismatch.index),
                        lhs: mismatch.lhs.to_string(),
                        rhs: mismatch.rhs.to_string(),
                    });
                }
            }
        }
    }
    check.finish()
}

/// At `s = -1` the log side of the integrated identity must coincide with
/// the negated Bernoulli generating series coefficient by coefficient.
fn check_log_collapse(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("egf/log-collapse-at-minus-one");
    let minus_one = Rat::from(-1);
    for r in 0..=config.max_r {
        let (_, rhs) = integrated_identity_sides(&minus_one, r, config.egf_order);
        let negated_bernoulli = -&bernoulli_poly_egf(r, config.egf_order);
        for n in 0..=config.egf_order {
            check.case(
                format!("n={n} r={r}"),
                rhs.egf_coeff(n),
                negated_bernoulli.egf_coeff(n),
            );
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_r_stirling_generating_function(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("egf/r-stirling-generating-function");
    let order = config.egf_order;
    let exp_minus_one = Series::from_fn(order, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            Rat::new(Int::one(), factorial(n)).expect("n! > 0")
        }
    });
    for r in 0..=config.max_r {
        let base = exp_rt(r, order);
        let mut power = Series::one(order);
        for k in 0..=8.min(order) {
            let scaled = (&base * &power).scale(
                &Rat::new(Int::one(), factorial(k)).expect("k! > 0"),
            );
            for n in 0..=order {
                check.case(
                    format!("n={n} k={k} r={r}"),
                    scaled.egf_coeff(n),
                    Rat::from_int(r_stirling_shifted(n, k, r)),
                );
            }
            if check.failed() {
                return check.finish();
            }
            power = &power * &exp_minus_one;
        }
    }
    check.finish()
}

/// Deterministic pseudo-random series for the algebraic smoke checks.
fn sample_series(order: usize, seed: u64) -> Series {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    Series::from_fn(order, |_| {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let num = ((state >> 33) % 101) as i64 - 50;
        let den = ((state >> 12) % 19) as i64 + 1;
        Rat::new(Int::from(num), Int::from(den)).expect("den > 0")
    })
}

fn check_exp_log_roundtrip(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("egf/exp-log-roundtrip");
    let order = config.egf_order;
    for seed in 1..=3u64 {
        let mut coeffs = sample_series(order, seed).coeffs().to_vec();
        coeffs[0] = Rat::zero();
        let a = Series::from_coeffs(coeffs);
        let round_trip = a
            .exp()
            .expect("zero constant term")
            .log()
            .expect("exp has constant term 1");
        for n in 0..=order {
            check.case(
                format!("n={n} seed={seed}"),
                round_trip.coeff(n).clone(),
                a.coeff(n).clone(),
            );
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_mul_inverse(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("egf/mul-inverse");
    let order = config.egf_order;
    for seed in 4..=6u64 {
        let mut coeffs = sample_series(order, seed).coeffs().to_vec();
        coeffs[0] = Rat::one();
        let a = Series::from_coeffs(coeffs);
        let product = &a * &a.inverse().expect("constant term 1");
        let one = Series::one(order);
        for n in 0..=order {
            check.case(
                format!("n={n} seed={seed}"),
                product.coeff(n).clone(),
                one.coeff(n).clone(),
            );
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

fn check_ring_ops(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("egf/ring-ops");
    let order = config.egf_order;
    let a = sample_series(order, 7);
    let b = sample_series(order, 8);
    let c = sample_series(order, 9);
    let lambda = Rat::new(Int::from(-3), Int::from(7)).expect("7 != 0");

    let distributed = &(&a + &b) * &c;
    let expanded = &(&a * &c) + &(&b * &c);
    for n in 0..=order {
        check.case(
            format!("n={n} (distributivity)"),
            distributed.coeff(n).clone(),
            expanded.coeff(n).clone(),
        );
    }
    let scaled_product = (&a * &b).scale(&lambda);
    let product_of_scaled = &a.scale(&lambda) * &b;
    for n in 0..=order {
        check.case(
            format!("n={n} (scale)"),
            scaled_product.coeff(n).clone(),
            product_of_scaled.coeff(n).clone(),
        );
    }
    let cancelled = &(&a - &b) + &b;
    for n in 0..=order {
        check.case(
            format!("n={n} (add-sub)"),
            cancelled.coeff(n).clone(),
            a.coeff(n).clone(),
        );
    }
    check.finish()
}
