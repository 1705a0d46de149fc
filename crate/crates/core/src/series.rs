//! Truncated formal power series over exact rationals.
//!
//! A [`Series`] of order `N` stores the ordinary coefficients `c_0..c_N` of
//! `sum c_n t^n`; the exponential-generating-function coefficient
//! `a_n = n! * c_n` is recovered at the boundary by [`Series::egf_coeff`].
//! Keeping ordinary coefficients internally means products are plain Cauchy
//! convolutions and the factorials appear exactly once, on extraction.
//!
//! Every binary operation truncates to the minimum operand order, and a
//! series always carries exactly `order + 1` coefficients. `exp`, `log` and
//! `inverse` use the classical O(N^2) coefficient recurrences; at desk-scale
//! orders exact arithmetic needs nothing faster.

use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{factorial, Int, Rat};
use crate::error::{Error, Result};
use crate::fubini::fubini_antiderivative;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Wrap explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Series {
        assert!(!coeffs.is_empty(), "a series has at least its constant term");
        Series { coeffs }
    }

    /// Coefficients `c_n = f(n)` for `n = 0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Series {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Series {
        Series::from_fn(order, |_| Rat::zero())
    }

    pub fn one(order: usize) -> Series {
        Series::from_fn(order, |n| if n == 0 { Rat::one() } else { Rat::zero() })
    }

    pub fn constant(value: Rat, order: usize) -> Series {
        Series::from_fn(order, |n| if n == 0 { value.clone() } else { Rat::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ordinary coefficient `c_n`. Panics beyond the order.
    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// EGF coefficient `a_n = n! * c_n`. Panics beyond the order.
    pub fn egf_coeff(&self, n: usize) -> Rat {
        Rat::from_int(factorial(n)) * &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Copy truncated to `min(order, self.order())`.
    pub fn truncated(&self, order: usize) -> Series {
        let keep = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn scale(&self, factor: &Rat) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| factor * c).collect(),
        }
    }

    /// Multiplicative inverse up to the truncation order; requires a nonzero
    /// constant term.
    pub fn inverse(&self) -> Result<Series> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let order = self.order();
        let inv0 = self.coeffs[0].inv().expect("nonzero constant term");
        let mut out = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = Rat::zero();
            for k in 1..=n {
                acc += &(&self.coeffs[k] * &out[n - k]);
            }
            out.push(-(inv0.clone() * acc));
        }
        Ok(Series { coeffs: out })
    }

    /// Series exponential; requires a zero constant term.
    ///
    /// Uses the derivative recurrence `m b_m = sum_{i=1}^{m} i a_i b_{m-i}`.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm);
        }
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        out.push(Rat::one());
        for m in 1..=order {
            let mut acc = Rat::zero();
            for i in 1..=m {
                acc += &(Rat::from(i as i64) * &self.coeffs[i] * &out[m - i]);
            }
            out.push(&acc / &Rat::from(m as i64));
        }
        Ok(Series { coeffs: out })
    }

    /// Series logarithm; requires constant term exactly one.
    ///
    /// Solves `m a_m = sum_{i=1}^{m} i c_i a_{m-i}` for the log coefficients.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm);
        }
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        out.push(Rat::zero());
        for m in 1..=order {
            let mut acc = Rat::zero();
            for i in 1..m {
                acc += &(Rat::from(i as i64) * &out[i] * &self.coeffs[m - i]);
            }
            out.push(&self.coeffs[m] - &(&acc / &Rat::from(m as i64)));
        }
        Ok(Series { coeffs: out })
    }

    /// Divide by `t`: shift all coefficients down one degree. Requires a zero
    /// constant term and order at least 1; the result's order drops by one.
    pub fn div_by_t(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::DivideByT);
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

impl Mul for &Series {
    type Output = Series;
    /// Cauchy product truncated to the common order.
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += &(a * b);
            }
        }
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `e^(rt)`: coefficients `r^n / n!`.
pub fn exp_rt(r: usize, order: usize) -> Series {
    Series::from_fn(order, |n| {
        Rat::new(Int::from(r).pow(n as u32), factorial(n)).expect("n! > 0")
    })
}

/// `(e^t - 1) / t`: coefficients `1 / (n+1)!`. Its inverse is the Bernoulli
/// generating kernel `t / (e^t - 1)`.
pub fn exp_minus_one_over_t(order: usize) -> Series {
    Series::from_fn(order, |n| {
        Rat::new(Int::one(), factorial(n + 1)).expect("(n+1)! > 0")
    })
}

/// `t e^(rt) / (e^t - 1)`; the EGF coefficient at `n` is `B_n(r)`.
pub fn bernoulli_poly_egf(r: usize, order: usize) -> Series {
    let kernel = exp_minus_one_over_t(order)
        .inverse()
        .expect("constant term 1");
    &exp_rt(r, order) * &kernel
}

/// `e^(rt) / (1 - x (e^t - 1))`; the EGF coefficient at `n` is `F_{n,r}(x)`.
///
/// The denominator has constant term 1 for every rational `x`, so the
/// inverse always exists formally.
pub fn fubini_egf(x: &Rat, r: usize, order: usize) -> Series {
    let denom = Series::from_fn(order, |n| {
        if n == 0 {
            Rat::one()
        } else {
            -&(x / &Rat::from_int(factorial(n)))
        }
    });
    &exp_rt(r, order) * &denom.inverse().expect("constant term 1")
}

/// First disagreeing EGF coefficient of two series compared index-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffMismatch {
    pub index: usize,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Both sides of the integrated identity
/// `sum_n [sum_k k!/(k+1) S_r(n+r,k+r) s^(k+1)] t^n/n!
///      = -e^(rt) ln(1 + s - s e^t) / (e^t - 1)`
/// as order-`N` series, built along fully independent routes.
///
/// The left side evaluates the antiderivative polynomials term by term; the
/// right side is assembled in the series ring, with the implicit `t`
/// cancellation made explicit: `ln(..)/(e^t-1) = (ln(..)/t) * (t/(e^t-1))`,
/// so both factors exist as ordinary series inverses.
pub fn integrated_identity_sides(s: &Rat, r: usize, order: usize) -> (Series, Series) {
    let lhs = Series::from_fn(order, |n| {
        let value = fubini_antiderivative(n, r).eval(s);
        &value / &Rat::from_int(factorial(n))
    });

    // internals one order higher so div_by_t lands back on `order`
    let inner = order + 1;
    let log_arg = Series::from_fn(inner, |n| {
        if n == 0 {
            Rat::one()
        } else {
            -&(s / &Rat::from_int(factorial(n)))
        }
    });
    let log_over_t = log_arg
        .log()
        .expect("constant term 1")
        .div_by_t()
        .expect("log has zero constant term");
    let kernel = exp_minus_one_over_t(inner)
        .inverse()
        .expect("constant term 1");
    let rhs = -&(&exp_rt(r, inner) * &(&log_over_t * &kernel));
    (lhs, rhs.truncated(order))
}

/// Check the integrated identity coefficient-wise up to `order`, reporting
/// the first EGF coefficient that disagrees.
pub fn integrated_identity_check(
    s: &Rat,
    r: usize,
    order: usize,
) -> std::result::Result<(), CoeffMismatch> {
    let (lhs, rhs) = integrated_identity_sides(s, r, order);
    for n in 0..=order {
        let (a, b) = (lhs.egf_coeff(n), rhs.egf_coeff(n));
        if a != b {
            return Err(CoeffMismatch {
                index: n,
                lhs: a,
                rhs: b,
            });
        }
    }
    Ok(())
}
