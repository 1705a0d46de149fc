//! Bernoulli numbers and Bernoulli polynomial values at non-negative integer
//! points.
//!
//! Three structurally different routes to the same values live here and in
//! [`crate::series`]:
//!
//! 1. [`bernoulli_at_integer`] — the alternating sum over shifted r-Stirling
//!    numbers, `B_n(r) = sum_k (-1)^k k!/(k+1) S_r(n+r, k+r)`; at `r = 0`
//!    this degenerates to the classical Stirling-sum formula for `B_n`.
//! 2. [`bernoulli_polynomial`] — the binomial expansion
//!    `B_n(x) = sum_k C(n,k) B_k x^(n-k)` with `B_k` from the recurrence
//!    table, entirely free of Stirling numbers.
//! 3. EGF extraction from `t e^(rt) / (e^t - 1)` in the series engine.
//!
//! Any transcription slip breaks the three-way agreement, which the `verify`
//! suite and the acceptance tests check over a wide index range.

use std::fmt;

use crate::arith::{binomial, factorial, Int, Rat};
use crate::poly::Poly;
use crate::stirling::{r_stirling_shifted, StirlingTriangle};

/// Which algorithm produced a [`BernoulliTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Alternating sum over Stirling numbers of the second kind.
    StirlingSum,
    /// Classical recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
    Recurrence,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::StirlingSum => write!(f, "stirling-sum"),
            Provenance::Recurrence => write!(f, "recurrence"),
        }
    }
}

/// `B_0..=B_n_max` with a tag naming the producing algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rat>,
    provenance: Provenance,
}

impl BernoulliTable {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &Rat {
        &self.values[n]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

/// `B_n = sum_{k=0}^{n} (-1)^k k!/(k+1) S(n,k)` for `n = 0..=n_max`.
pub fn bernoulli_numbers_stirling(n_max: usize) -> BernoulliTable {
    let values = (0..=n_max).map(|n| bernoulli_at_integer(n, 0)).collect();
    BernoulliTable {
        values,
        provenance: Provenance::StirlingSum,
    }
}

/// `B_0 = 1`, then each `B_n` solved from `sum_{k=0}^{n} C(n+1,k) B_k = 0`.
pub fn bernoulli_numbers_recurrence(n_max: usize) -> BernoulliTable {
    let mut values = vec![Rat::one()];
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for (k, b) in values.iter().enumerate() {
            acc += &(Rat::from_int(binomial(n + 1, k as isize)) * b);
        }
        let divisor = Rat::from((n as i64) + 1);
        values.push(&(-acc) / &divisor);
    }
    BernoulliTable {
        values,
        provenance: Provenance::Recurrence,
    }
}

/// `B_n(r)` by the alternating sum over shifted r-Stirling numbers, each
/// term `(-1)^k * k!/(k+1) * S_r(n+r, k+r)` with the Stirling factor from
/// the explicit-sum path.
pub fn bernoulli_at_integer(n: usize, r: usize) -> Rat {
    let mut acc = Rat::zero();
    for k in 0..=n {
        let weight = Rat::new(factorial(k), Int::from(k + 1)).expect("k+1 > 0");
        let term = weight * Rat::from_int(r_stirling_shifted(n, k, r));
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Same sum as [`bernoulli_at_integer`] but with the Stirling factors read
/// from a recurrence-built triangle; the independent re-computation used in
/// verify mode. The triangle must satisfy `triangle.r() == r` and cover row
/// `n + r`.
pub fn bernoulli_at_integer_from_triangle(triangle: &StirlingTriangle, n: usize) -> Rat {
    let r = triangle.r();
    let mut acc = Rat::zero();
    for k in 0..=n {
        let weight = Rat::new(factorial(k), Int::from(k + 1)).expect("k+1 > 0");
        let term = weight * Rat::from_int(triangle.get(n + r, k + r));
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Coefficients of `B_n(x)` by the binomial expansion over the recurrence
/// table. Degree `n`, leading coefficient 1, constant coefficient `B_n`.
/// This route never touches Stirling numbers, which makes it an independent
/// witness for the sums above.
pub fn bernoulli_polynomial(n: usize) -> Poly {
    let table = bernoulli_numbers_recurrence(n);
    let mut coeffs = vec![Rat::zero(); n + 1];
    for k in 0..=n {
        // C(n,k) B_k contributes at degree n-k
        coeffs[n - k] = Rat::from_int(binomial(n, k as isize)) * table.get(k);
    }
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> Rat {
        Rat::new(num.into(), den.into()).unwrap()
    }

    #[test]
    fn stirling_sum_small_values() {
        let t = bernoulli_numbers_stirling(4);
        assert_eq!(t.get(0), &Rat::one());
        assert_eq!(t.get(1), &rat(-1, 2));
        assert_eq!(t.get(2), &rat(1, 6));
        assert_eq!(t.get(3), &Rat::zero());
        assert_eq!(t.get(4), &rat(-1, 30));
        assert_eq!(t.provenance(), Provenance::StirlingSum);
    }

    #[test]
    fn recurrence_small_values() {
        let t = bernoulli_numbers_recurrence(7);
        assert_eq!(t.get(0), &Rat::one());
        assert_eq!(t.get(4), &rat(-1, 30));
        assert_eq!(t.get(7), &Rat::zero());
        assert_eq!(t.provenance(), Provenance::Recurrence);
        assert_eq!(t.n_max(), 7);
    }

    #[test]
    fn odd_values_vanish() {
        let t = bernoulli_numbers_recurrence(31);
        for n in (3..=31).step_by(2) {
            assert_eq!(t.get(n), &Rat::zero(), "B_{n}");
        }
    }

    #[test]
    fn tables_agree() {
        let a = bernoulli_numbers_stirling(30);
        let b = bernoulli_numbers_recurrence(30);
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn value_at_integer_points() {
        // only the k = 0 term survives at n = 0
        for r in 0..6 {
            assert_eq!(bernoulli_at_integer(0, r), Rat::one());
        }
        // B_2(x) = x^2 - x + 1/6 at 3
        assert_eq!(bernoulli_at_integer(2, 3), rat(37, 6));
        // r = 0 column reproduces the plain Bernoulli numbers
        let t = bernoulli_numbers_stirling(30);
        for n in 0..=30 {
            assert_eq!(&bernoulli_at_integer(n, 0), t.get(n));
        }
    }

    #[test]
    fn triangle_route_agrees() {
        for r in 0..=4 {
            let triangle = StirlingTriangle::build(r, 12 + r).unwrap();
            for n in 0..=12 {
                assert_eq!(
                    bernoulli_at_integer_from_triangle(&triangle, n),
                    bernoulli_at_integer(n, r)
                );
            }
        }
    }

    #[test]
    fn polynomial_coefficients() {
        assert_eq!(bernoulli_polynomial(0), Poly::new(vec![Rat::one()]));
        assert_eq!(
            bernoulli_polynomial(1),
            Poly::new(vec![rat(-1, 2), Rat::one()])
        );
        assert_eq!(
            bernoulli_polynomial(2),
            Poly::new(vec![rat(1, 6), rat(-1, 1), Rat::one()])
        );
    }

    #[test]
    fn polynomial_shape() {
        let t = bernoulli_numbers_recurrence(9);
        for n in 0..=9 {
            let p = bernoulli_polynomial(n);
            assert_eq!(p.degree(), n);
            assert_eq!(p.coeff(n), Rat::one());
            assert_eq!(&p.coeff(0), t.get(n));
        }
    }

    #[test]
    fn polynomial_evaluates_the_sum() {
        for n in 0..=12 {
            let p = bernoulli_polynomial(n);
            for r in 0..=6i64 {
                assert_eq!(
                    p.eval(&Rat::from(r)),
                    bernoulli_at_integer(n, r as usize),
                    "n={n} r={r}"
                );
            }
        }
    }
}
