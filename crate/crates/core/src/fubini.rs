//! Fubini-type polynomials and ordered Bell numbers.
//!
//! `F_{n,r}(x) = sum_{k=0}^{n} k! S_r(n+r, k+r) x^k` packages the shifted
//! r-Stirling column of index `n` into a polynomial. Integrating it from 0
//! and evaluating the antiderivative at `-1` turns the positive coefficients
//! into the alternating sum that defines `B_n(r)` — that algebra is carried
//! out polynomially here so the step is an exact evaluation, not a limit.

use crate::arith::{factorial, Int, Rat};
use crate::poly::Poly;
use crate::stirling::r_stirling_shifted;

/// `F_{n,r}` with its defining indices attached.
///
/// The coefficients are non-negative integers stored in the shared
/// rational-coefficient polynomial type: degree exactly `n` with leading
/// coefficient `n!` and constant coefficient `r^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FubiniPolynomial {
    n: usize,
    r: usize,
    poly: Poly,
}

impl FubiniPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.poly.eval(x)
    }
}

/// Build `F_{n,r}` with coefficient of `x^k` equal to `k! S_r(n+r, k+r)`.
pub fn fubini_poly(n: usize, r: usize) -> FubiniPolynomial {
    let coeffs = (0..=n)
        .map(|k| Rat::from_int(factorial(k) * r_stirling_shifted(n, k, r)))
        .collect();
    FubiniPolynomial {
        n,
        r,
        poly: Poly::new(coeffs),
    }
}

/// Term-by-term antiderivative of `F_{n,r}` with zero constant term:
/// `s -> sum_{k=0}^{n} k!/(k+1) S_r(n+r, k+r) s^(k+1)`.
pub fn fubini_antiderivative(n: usize, r: usize) -> Poly {
    let mut coeffs = vec![Rat::zero(); n + 2];
    for k in 0..=n {
        let weight = Rat::new(factorial(k), Int::from(k + 1)).expect("k+1 > 0");
        coeffs[k + 1] = weight * Rat::from_int(r_stirling_shifted(n, k, r));
    }
    Poly::new(coeffs)
}

/// Ordered Bell number `F_{n,0}(1) = sum_k k! S(n,k)`: the number of ordered
/// set partitions (weak orderings) of an `n`-set.
pub fn ordered_bell(n: usize) -> Int {
    let value = fubini_poly(n, 0).eval(&Rat::one());
    debug_assert!(value.is_integer());
    value.numer()
}
