//! Exact binomial and multinomial coefficients, and the rational-to-integer
//! conversion used to evaluate weighted closed forms without rounding.

use crate::error::Error;
use crate::{ExactInt, ExactRatio};
use num_traits::{One, Zero};

/// Binomial coefficient C(n, k), exactly.
///
/// Returns 0 whenever `k < 0` or `k > n`, so that boundary terms of
/// summation formulas need no special-casing at the call site.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || (k as u64) > n {
        return ExactInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // Running product with an exact division at every step: after the i-th
    // step the accumulator equals C(n-k+i, i), always an integer.
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc = acc * ExactInt::from(n - k + i) / ExactInt::from(i);
    }
    acc
}

/// Multinomial coefficient total! / (parts[0]! * parts[1]! * ...).
///
/// The parts must sum to `total`; anything else is a domain error.
pub fn multinomial(total: u64, parts: &[u64]) -> Result<ExactInt, Error> {
    let sum: u64 = parts.iter().sum();
    if sum != total {
        return Err(Error::domain(format!(
            "multinomial parts sum to {sum}, expected {total}"
        )));
    }
    // Product of binomials: C(total, p0) * C(total-p0, p1) * ...
    // Each factor is exact, so no factorial ever materializes.
    let mut remaining = total;
    let mut acc = ExactInt::one();
    for &part in parts {
        acc *= binomial(remaining, part as i64);
        remaining -= part;
    }
    Ok(acc)
}

/// Extracts the integer from a reduced rational, or reports the value as
/// evidence when the denominator is not 1.
pub fn ratio_to_int(r: &ExactRatio) -> Result<ExactInt, Error> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral(r.clone()))
    }
}

/// Rational i/j from machine integers; j must be nonzero.
pub fn ratio(numer: i64, denom: i64) -> ExactRatio {
    ExactRatio::new(ExactInt::from(numer), ExactInt::from(denom))
}

/// 2^k as an exact integer.
pub fn pow2(k: u64) -> ExactInt {
    ExactInt::one() << k as usize
}
