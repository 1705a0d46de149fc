//! Stirling numbers of the second kind and their r-generalization.
//!
//! `S_r(n, k)` counts partitions of `{1, .., n}` into `k` non-empty blocks
//! with the elements `1, .., r` in pairwise distinct blocks. Two independent
//! computation paths are provided on purpose: a triangle recurrence and an
//! explicit alternating binomial sum. Cross-checking them against each other
//! (and against brute-force partition enumeration) is the backbone of the
//! `verify` suite.

use crate::arith::{binomial, factorial, Int};
use crate::error::{Error, Result};

/// Classical `S(n, k)` by the explicit alternating sum
/// `(1/k!) * sum_{l=0}^{k} (-1)^(k-l) C(k,l) l^n`.
///
/// Zero for `k > n` (with `S(0,0) = 1`). The division by `k!` is always
/// exact; a nonzero remainder would be an implementation bug and panics.
pub fn stirling2(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut sum = Int::zero();
    for l in 0..=k {
        let term = binomial(k, l as isize) * Int::from(l).pow(n as u32);
        if (k - l) % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    exact_div(sum, k)
}

/// `S_r(n + r, k + r)` by the explicit sum
/// `(1/k!) * sum_{j=0}^{k} (-1)^(k-j) C(k,j) (j + r)^n`.
///
/// The arguments are the shifted indices: the caller passes the offsets above
/// the base `r`, which is how every downstream sum is phrased. Zero for
/// `k > n`; `0^0 = 1` inside the sum.
pub fn r_stirling_shifted(n: usize, k: usize, r: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut sum = Int::zero();
    for j in 0..=k {
        let term = binomial(k, j as isize) * Int::from(j + r).pow(n as u32);
        if (k - j) % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    exact_div(sum, k)
}

fn exact_div(sum: Int, k: usize) -> Int {
    let (q, rem) = sum.div_rem(&factorial(k));
    assert!(
        rem.is_zero(),
        "alternating Stirling sum not divisible by {k}!"
    );
    q
}

/// `S_r(n, k)` at raw indices by the triangle recurrence
/// `S_r(n, k) = k * S_r(n-1, k) + S_r(n-1, k-1)`, base row `S_r(r, k) = [k = r]`.
///
/// `n < r` is a domain error rather than a silent zero: nothing in this crate
/// ever evaluates there, so reaching it means an index bug upstream.
pub fn r_stirling(n: usize, k: usize, r: usize) -> Result<Int> {
    if n < r {
        return Err(Error::IndexBelowBase { n, r });
    }
    if k > n {
        return Ok(Int::zero());
    }
    let mut row: Vec<Int> = (0..=r)
        .map(|i| if i == r { Int::one() } else { Int::zero() })
        .collect();
    for m in r + 1..=n {
        let mut next = vec![Int::zero(); m + 1];
        for j in 0..m {
            if row[j].is_zero() {
                continue;
            }
            next[j] += &(Int::from(j) * &row[j]);
            next[j + 1] += &row[j];
        }
        row = next;
    }
    Ok(row.get(k).cloned().unwrap_or_else(Int::zero))
}

/// Cached triangle of `S_r(n, k)` for a fixed `r`, rows `r..=n_max`.
#[derive(Debug, Clone)]
pub struct StirlingTriangle {
    r: usize,
    n_max: usize,
    /// `rows[i][k] = S_r(r + i, k)`, each row holding `k = 0..=n`.
    pub(crate) rows: Vec<Vec<Int>>,
}

impl StirlingTriangle {
    /// Fill rows `r..=n_max` by the recurrence.
    pub fn build(r: usize, n_max: usize) -> Result<StirlingTriangle> {
        if n_max < r {
            return Err(Error::TriangleBound { n_max, r });
        }
        let base: Vec<Int> = (0..=r)
            .map(|i| if i == r { Int::one() } else { Int::zero() })
            .collect();
        let mut rows = vec![base];
        for m in r + 1..=n_max {
            let prev = rows.last().expect("at least the base row");
            let mut next = vec![Int::zero(); m + 1];
            for j in 0..m.min(prev.len()) {
                if prev[j].is_zero() {
                    continue;
                }
                next[j] += &(Int::from(j) * &prev[j]);
                next[j + 1] += &prev[j];
            }
            rows.push(next);
        }
        Ok(StirlingTriangle { r, n_max, rows })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `S_r(n, k)`; zero for `k > n`. Panics if `n` is outside `r..=n_max`.
    pub fn get(&self, n: usize, k: usize) -> Int {
        assert!(
            (self.r..=self.n_max).contains(&n),
            "row {n} outside triangle range {}..={}",
            self.r,
            self.n_max
        );
        self.rows[n - self.r].get(k).cloned().unwrap_or_else(Int::zero)
    }

    /// Row `n` as the slice of values for `k = 0..=n`.
    pub fn row(&self, n: usize) -> &[Int] {
        assert!(
            (self.r..=self.n_max).contains(&n),
            "row {n} outside triangle range {}..={}",
            self.r,
            self.n_max
        );
        &self.rows[n - self.r]
    }
}
