//! Acceptance gate: every exactness claim the crate makes, checked at its
//! full stated index range with zero tolerance. One test per criterion.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use rstirling::{
    bernoulli_at_integer, bernoulli_numbers_recurrence, bernoulli_numbers_stirling,
    bernoulli_poly_egf, bernoulli_polynomial, binomial, exp_rt, factorial,
    integrated_identity_check, integrated_identity_sides, ordered_bell, r_stirling_shifted,
    stirling2, Int, Poly, Rat, Series, StirlingTriangle,
};

/// Stirling-sum route = polynomial-expansion route = series-extraction
/// route for all 0 <= n <= 60, 0 <= r <= 12, exactly.
#[test]
fn three_route_agreement_to_n60_r12() {
    let start = Instant::now();
    let polynomials: Vec<Poly> = (0..=60).map(bernoulli_polynomial).collect();
    for r in 0..=12usize {
        let egf = bernoulli_poly_egf(r, 60);
        for (n, polynomial) in polynomials.iter().enumerate() {
            let by_sum = bernoulli_at_integer(n, r);
            let by_polynomial = polynomial.eval(&Rat::from(r as i64));
            let by_series = egf.egf_coeff(n);
            assert_eq!(by_sum, by_polynomial, "sum vs polynomial at n={n} r={r}");
            assert_eq!(by_sum, by_series, "sum vs series at n={n} r={r}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
}

/// At r = 0 the shifted sum reproduces the classical Stirling-sum formula
/// summand by summand for n <= 40, and the two Bernoulli tables agree
/// entry-wise through B_60, including B_12 and B_30.
#[test]
fn r_zero_degenerates_to_classical_formula() {
    for n in 0..=40usize {
        for k in 0..=n {
            let shifted_factor = r_stirling_shifted(n, k, 0);
            let classical_factor = stirling2(n, k);
            assert_eq!(shifted_factor, classical_factor, "factor at n={n} k={k}");
            let weight = Rat::new(factorial(k), Int::from(k + 1)).unwrap();
            let sign = if k % 2 == 0 { Rat::one() } else { Rat::from(-1) };
            let shifted_summand = &sign * &(&weight * &Rat::from_int(shifted_factor));
            let classical_summand = &sign * &(&weight * &Rat::from_int(classical_factor));
            assert_eq!(shifted_summand, classical_summand, "summand at n={n} k={k}");
        }
    }

    let by_sum = bernoulli_numbers_stirling(60);
    let by_recurrence = bernoulli_numbers_recurrence(60);
    assert_eq!(by_sum.values(), by_recurrence.values());
    assert_eq!(by_sum.get(12).to_string(), "-691/2730");
    assert_eq!(by_sum.get(30).to_string(), "8615841276005/14322");
}

/// Recurrence triangle = explicit alternating sum for r <= 8, n <= r + 25,
/// all k; both equal brute-force set-partition counts for n <= 8, r <= 3.
#[test]
fn stirling_path_equivalence() {
    let start = Instant::now();
    for r in 0..=8usize {
        let triangle = StirlingTriangle::build(r, r + 25).unwrap();
        for n in r..=r + 25 {
            for k in 0..=n {
                let by_recurrence = triangle.get(n, k);
                if k >= r {
                    assert_eq!(
                        by_recurrence,
                        r_stirling_shifted(n - r, k - r, r),
                        "n={n} k={k} r={r}"
                    );
                } else {
                    assert!(by_recurrence.is_zero(), "support at n={n} k={k} r={r}");
                }
            }
        }
    }
    for r in 0..=3usize {
        let triangle = StirlingTriangle::build(r, 8).unwrap();
        for n in r..=8 {
            for k in 0..=n {
                assert_eq!(
                    triangle.get(n, k),
                    Int::from(common::count_partitions(n, k, r)),
                    "enumeration at n={n} k={k} r={r}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
}

/// The integrated log identity holds at order 40 for every configured
/// (s, r) pair, and at s = -1 its right side is the negated Bernoulli
/// generating series coefficient for coefficient.
#[test]
fn integrated_log_identity_at_order_40() {
    let start = Instant::now();
    let s_values: Vec<Rat> = ["-1", "1/2", "2", "-3/7"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for s in &s_values {
        for r in [0usize, 1, 2, 5] {
            assert_eq!(integrated_identity_check(s, r, 40), Ok(()), "s={s} r={r}");
        }
    }
    let minus_one = Rat::from(-1);
    for r in [0usize, 1, 2, 5] {
        let (_, rhs) = integrated_identity_sides(&minus_one, r, 40);
        assert_eq!(rhs, -&bernoulli_poly_egf(r, 40), "collapse at r={r}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(20), "took {elapsed:?}");
}

/// EGF coefficients of (1/k!) e^(rt) (e^t - 1)^k equal the explicit-sum
/// r-Stirling values for k <= 8, r <= 4, n <= 20.
#[test]
fn r_stirling_generating_function() {
    let order = 20usize;
    let exp_minus_one = Series::from_fn(order, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            Rat::new(Int::one(), factorial(n)).unwrap()
        }
    });
    for r in 0..=4usize {
        let base = exp_rt(r, order);
        let mut power = Series::one(order);
        for k in 0..=8usize {
            let series = (&base * &power).scale(&Rat::new(Int::one(), factorial(k)).unwrap());
            for n in 0..=order {
                assert_eq!(
                    series.egf_coeff(n),
                    Rat::from_int(r_stirling_shifted(n, k, r)),
                    "n={n} k={k} r={r}"
                );
            }
            power = &power * &exp_minus_one;
        }
    }
}

/// Ordered Bell numbers: direct enumeration for n <= 5, binomial
/// recurrence for n <= 12.
#[test]
fn ordered_bell_numbers() {
    let expected = [1u64, 1, 3, 13, 75, 541];
    for (n, want) in expected.iter().enumerate() {
        assert_eq!(ordered_bell(n), Int::from(*want), "frozen value at n={n}");
        assert_eq!(
            ordered_bell(n),
            Int::from(common::count_ordered_partitions(n)),
            "enumeration at n={n}"
        );
    }
    let mut recurrence = vec![Int::one()];
    for n in 1..=12usize {
        let mut acc = Int::zero();
        for k in 1..=n {
            acc += &(binomial(n, k as isize) * &recurrence[n - k]);
        }
        recurrence.push(acc);
    }
    for (n, want) in recurrence.iter().enumerate() {
        assert_eq!(&ordered_bell(n), want, "recurrence at n={n}");
    }
}

/// B_n(r+1) - B_n(r) = n * r^(n-1) for 1 <= n <= 30, 0 <= r <= 10, with
/// 0^0 = 1 at n = 1, r = 0.
#[test]
fn forward_difference() {
    for n in 1..=30usize {
        for r in 0..=10usize {
            let difference = bernoulli_at_integer(n, r + 1) - bernoulli_at_integer(n, r);
            let expected = Rat::from_int(Int::from(n) * Int::from(r).pow(n as u32 - 1));
            assert_eq!(difference, expected, "n={n} r={r}");
        }
    }
}

/// The verify subcommand passes with default bounds, fails with a named
/// first mismatch under fault injection, and both output formats
/// round-trip through the exact value grammar byte for byte.
#[test]
fn cli_verify_and_round_trip() {
    let exe = env!("CARGO_BIN_EXE_rstirling");

    let ok_run = Command::new(exe).arg("verify").output().unwrap();
    let report = String::from_utf8(ok_run.stdout).unwrap();
    assert_eq!(ok_run.status.code(), Some(0), "report:\n{report}");
    assert!(report.ends_with("0 failed\n"), "report:\n{report}");

    let fault_run = Command::new(exe)
        .args(["verify", "--inject-fault"])
        .output()
        .unwrap();
    let report = String::from_utf8(fault_run.stdout).unwrap();
    assert_eq!(fault_run.status.code(), Some(1), "report:\n{report}");
    assert!(
        report.contains("FAIL stirling/path-equivalence at "),
        "report:\n{report}"
    );
    assert!(report.contains("left=") && report.contains("right="));

    // JSON: every value string parses back to a Rat that prints identically
    let json_run = Command::new(exe)
        .args(["bernoulli", "--n-max", "25", "--r", "3"])
        .output()
        .unwrap();
    let stdout = String::from_utf8(json_run.stdout).unwrap();
    let mut parsed = 0;
    for line in stdout.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        let value = record["value"].as_str().unwrap();
        let round_trip: Rat = value.parse().unwrap();
        assert_eq!(round_trip.to_string(), value, "line: {line}");
        parsed += 1;
    }
    assert_eq!(parsed, 26);

    // CSV: same for the integer grammar
    let csv_run = Command::new(exe)
        .args(["stirling", "--n-max", "12", "--r", "2", "--format", "csv"])
        .output()
        .unwrap();
    let stdout = String::from_utf8(csv_run.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("kind,n,k,r,x,value"));
    for line in lines {
        let value = line.rsplit(',').next().unwrap();
        let round_trip: Int = value.parse().unwrap();
        assert_eq!(round_trip.to_string(), value, "line: {line}");
    }

    // identical invocations produce byte-identical output
    let again = Command::new(exe)
        .args(["stirling", "--n-max", "12", "--r", "2", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(stdout.as_bytes(), again.stdout.as_slice());
}
