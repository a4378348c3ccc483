//! Bounds on the number of vertices of the stochastic polytope.
//!
//! Upper: `C(p(n), n^3 - 1) / n^3` with `p(n) = n^3 + 6n^2 - 6n + 2`.
//! Lower: `(n!)^(2n) / n^(n^2)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Number of half-spaces cutting out the polytope: `n^3 + 6n^2 - 6n + 2`.
pub fn p_n(n: u64) -> u64 {
    n.pow(3) + 6 * n * n - 6 * n + 2
}

/// Number of independent line equalities: `3n^2 - 3n + 1`.
pub fn independent_lines(n: u64) -> u64 {
    3 * n * n - 3 * n + 1
}

/// `C(n, k)` by the multiplicative formula; each partial product is itself a
/// binomial coefficient, so every division is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, t| acc * BigUint::from(t))
}

pub fn upper_bound(n: u64) -> Rational {
    assert!(n > 0, "side length must be positive");
    let m = n.pow(3);
    Rational::new(BigInt::from(binomial(p_n(n), m - 1)), BigInt::from(m))
}

pub fn lower_bound(n: u64) -> Rational {
    assert!(n > 0, "side length must be positive");
    let num = factorial(n).pow(u32::try_from(2 * n).expect("n too large"));
    let den = BigUint::from(n).pow(u32::try_from(n * n).expect("n too large"));
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: u64,
    pub p_n: u64,
    pub independent_lines: u64,
    pub lower: Rational,
    pub upper: Rational,
    pub enumerated_count: Option<u64>,
}

impl BoundsReport {
    pub fn lower_floor(&self) -> BigInt {
        floor(&self.lower)
    }

    pub fn upper_floor(&self) -> BigInt {
        floor(&self.upper)
    }

    /// Lower bound as a float, for display only.
    pub fn lower_approx(&self) -> f64 {
        self.lower.to_f64().unwrap_or(f64::INFINITY)
    }
}

/// Assembles all bound values; with a count, checks `lower <= count <= upper`.
pub fn bounds_report(n: u64, enumerated_count: Option<u64>) -> Result<BoundsReport> {
    if n == 0 {
        return Err(Error::OutOfRange("side length must be positive".into()));
    }
    let report = BoundsReport {
        n,
        p_n: p_n(n),
        independent_lines: independent_lines(n),
        lower: lower_bound(n),
        upper: upper_bound(n),
        enumerated_count,
    };
    if let Some(count) = enumerated_count {
        let c = Rational::from_integer(count.into());
        if c < report.lower || c > report.upper {
            return Err(Error::Integrity(format!(
                "vertex count {count} outside [{}, {}] for n = {n}",
                report.lower, report.upper
            )));
        }
    }
    Ok(report)
}
