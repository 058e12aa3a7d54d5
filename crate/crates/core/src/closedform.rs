//! Closed-form and single-parameter formulas for all four families.
//!
//! Every formula is transcribed literally, including the two printed forms
//! (the power-weighted Schroder sum and the as-printed three-term
//! recurrence) that exact evaluation refutes; those return their literal
//! value or a [`Error::NonIntegral`] and the identity registry classifies
//! the mismatch. Rational prefactors are accumulated in exact rational
//! arithmetic and converted to an integer once at the end, since single
//! terms need not be integral even when the sum is.

use crate::arith::{binomial, multinomial, pow2, ratio_to_int};
use crate::error::Error;
use crate::{ExactInt, ExactRatio};
use num_traits::Zero;

fn rat(n: ExactInt, d: ExactInt) -> ExactRatio {
    ExactRatio::new(n, d)
}

fn int_rat(v: ExactInt) -> ExactRatio {
    ExactRatio::from_integer(v)
}

/// Rectangular path count b(k, r) = C(k+r, r).
pub fn b_closed(k: u64, r: u64) -> ExactInt {
    binomial(k + r, r as i64)
}

/// Subdiagonal rectangular path count C(p, q) = ((p-q+1)/(p+1)) C(p+q, q),
/// evaluated exactly and asserted integral.
pub fn c_closed(p: u64, q: u64) -> Result<ExactInt, Error> {
    if q > p {
        return Err(Error::domain(format!(
            "subdiagonal cell requires q <= p, got ({p},{q})"
        )));
    }
    let weight = rat(ExactInt::from(p - q + 1), ExactInt::from(p + 1));
    ratio_to_int(&(weight * int_rat(binomial(p + q, q as i64))))
}

/// The reflection difference C(p, q) = b(p, q) - b(p+1, q-1), stated for
/// `1 <= q <= p`.
pub fn c_reflect(p: u64, q: u64) -> Result<ExactInt, Error> {
    if q == 0 || q > p {
        return Err(Error::domain(format!(
            "reflection difference requires 1 <= q <= p, got ({p},{q})"
        )));
    }
    Ok(b_closed(p, q) - b_closed(p + 1, q - 1))
}

/// Evaluation routes for the Catalan number C_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalanMethod {
    /// (1/(n+1)) C(2n, n); accepts n = 0.
    Closed,
    /// sum_{k=0..n-1} ((n-k)/n) C(n+k-1, k); needs n >= 1.
    WeightedSum,
    /// (1/n) C(2n-2, n-1) + (3/(n+1)) C(2n-2, n-2); needs n >= 1.
    Split,
    /// (2/(n+1)) C(2n-1, n-1); needs n >= 1.
    HalfBinomial,
    /// C_n = (2(2n-1)/(n+1)) C_{n-1} from C_0 = 1; accepts n = 0.
    Recurrence,
}

pub fn catalan_number(n: u64, method: CatalanMethod) -> Result<ExactInt, Error> {
    use CatalanMethod::*;
    if n == 0 && matches!(method, WeightedSum | Split | HalfBinomial) {
        return Err(Error::domain(format!("{method:?} requires n >= 1")));
    }
    let value = match method {
        Closed => {
            rat(ExactInt::from(1), ExactInt::from(n + 1))
                * int_rat(binomial(2 * n, n as i64))
        }
        WeightedSum => {
            let mut sum = ExactRatio::zero();
            for k in 0..n {
                sum += rat(ExactInt::from(n - k), ExactInt::from(n))
                    * int_rat(binomial(n + k - 1, k as i64));
            }
            sum
        }
        Split => {
            rat(ExactInt::from(1), ExactInt::from(n))
                * int_rat(binomial(2 * n - 2, n as i64 - 1))
                + rat(ExactInt::from(3), ExactInt::from(n + 1))
                    * int_rat(binomial(2 * n - 2, n as i64 - 2))
        }
        HalfBinomial => {
            rat(ExactInt::from(2), ExactInt::from(n + 1))
                * int_rat(binomial(2 * n - 1, n as i64 - 1))
        }
        Recurrence => {
            let mut cur = ExactRatio::from_integer(ExactInt::from(1));
            for m in 1..=n {
                cur *= rat(ExactInt::from(2 * (2 * m - 1)), ExactInt::from(m + 1));
            }
            cur
        }
    };
    ratio_to_int(&value)
}

/// Evaluation routes for the Delannoy number g(p, q). All three are total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DelannoyMethod {
    /// sum_{r=0..min(p,q)} (p+q-r)! / ((p-r)! (q-r)! r!)
    MultinomialSum,
    /// sum_{a=0..p} C(p,a) C(q+a, p)
    BinomialProductSum,
    /// sum_{a=0..min(p,q)} C(p,a) C(q,a) 2^a
    TwoPowerSum,
}

pub fn g_closed(p: u64, q: u64, method: DelannoyMethod) -> ExactInt {
    use DelannoyMethod::*;
    match method {
        MultinomialSum => (0..=p.min(q))
            .map(|r| {
                multinomial(p + q - r, &[p - r, q - r, r])
                    .expect("parts sum to total")
            })
            .sum(),
        BinomialProductSum => (0..=p)
            .map(|a| binomial(p, a as i64) * binomial(q + a, p as i64))
            .sum(),
        TwoPowerSum => (0..=p.min(q))
            .map(|a| binomial(p, a as i64) * binomial(q, a as i64) * pow2(a))
            .sum(),
    }
}

/// Evaluation routes for the subdiagonal HVD count R(p, q).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchroderCellMethod {
    /// g(p,q) - g(p+1,q-1), both sides by the multinomial sum; needs q >= 1.
    DiffMultinomial,
    /// Same difference by the binomial-product sums; needs q >= 1.
    DiffBinomialProduct,
    /// Same difference by the two-power sums; needs q >= 1.
    DiffTwoPower,
    /// sum_{r=0..q} ((p-q+1)/(p-r+1)) (p+q-r)!/((p-r)!(q-r)!r!);
    /// accepts q = 0.
    WeightedMultinomial,
}

pub fn r_closed(p: u64, q: u64, method: SchroderCellMethod) -> Result<ExactInt, Error> {
    use SchroderCellMethod::*;
    if q > p {
        return Err(Error::domain(format!(
            "subdiagonal cell requires q <= p, got ({p},{q})"
        )));
    }
    if q == 0 && !matches!(method, WeightedMultinomial) {
        return Err(Error::domain(format!("{method:?} requires q >= 1")));
    }
    match method {
        DiffMultinomial => Ok(g_closed(p, q, DelannoyMethod::MultinomialSum)
            - g_closed(p + 1, q - 1, DelannoyMethod::MultinomialSum)),
        DiffBinomialProduct => {
            Ok(g_closed(p, q, DelannoyMethod::BinomialProductSum)
                - g_closed(p + 1, q - 1, DelannoyMethod::BinomialProductSum))
        }
        DiffTwoPower => Ok(g_closed(p, q, DelannoyMethod::TwoPowerSum)
            - g_closed(p + 1, q - 1, DelannoyMethod::TwoPowerSum)),
        WeightedMultinomial => {
            let mut sum = ExactRatio::zero();
            for r in 0..=q {
                let weight =
                    rat(ExactInt::from(p - q + 1), ExactInt::from(p - r + 1));
                let m = multinomial(p + q - r, &[p - r, q - r, r])
                    .expect("parts sum to total");
                sum += weight * int_rat(m);
            }
            ratio_to_int(&sum)
        }
    }
}

/// Evaluation routes for the large Schroder number S_n. All accept n >= 0;
/// the recurrence methods seed from S_0 = 1 and S_1 = 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchroderMethod {
    /// sum_{r=0..n} (1/(n-r+1)) (2n-r)!/((n-r)!(n-r)!r!)
    WeightedMultinomialSum,
    /// 2^n + sum_{r=0..n-1} (r 2^r/(n-r+1)) C(n,r) C(n-1,r), as printed.
    /// Disagrees with the other routes from n = 3 on; returning the
    /// literal value is correct behavior here.
    PowerWeightedSum,
    /// S_n = S_{n-1} + sum_{k=0..n-1} S_k S_{n-1-k}
    Convolution,
    /// (n+2) S_{n+2} = 3(2n+1) S_{n+1} - (n-1) S_n solved for S_{n+2},
    /// as printed. Produces the non-integral S_2 = 7/2.
    ThreeTermAsPrinted,
    /// The same recurrence with all three indices shifted down by one:
    /// (n+2) S_{n+1} = 3(2n+1) S_n - (n-1) S_{n-1}.
    ThreeTermShifted,
}

pub fn schroder_number(n: u64, method: SchroderMethod) -> Result<ExactInt, Error> {
    use SchroderMethod::*;
    match method {
        WeightedMultinomialSum => {
            let mut sum = ExactRatio::zero();
            for r in 0..=n {
                let weight = rat(ExactInt::from(1), ExactInt::from(n - r + 1));
                let m = multinomial(2 * n - r, &[n - r, n - r, r])
                    .expect("parts sum to total");
                sum += weight * int_rat(m);
            }
            ratio_to_int(&sum)
        }
        PowerWeightedSum => {
            let mut sum = int_rat(pow2(n));
            for r in 0..n {
                let weight = rat(
                    ExactInt::from(r) * pow2(r),
                    ExactInt::from(n - r + 1),
                );
                sum += weight
                    * int_rat(binomial(n, r as i64) * binomial(n - 1, r as i64));
            }
            ratio_to_int(&sum)
        }
        Convolution => {
            let mut s = vec![ExactInt::from(1)];
            for m in 1..=n as usize {
                let conv: ExactInt =
                    (0..m).map(|k| &s[k] * &s[m - 1 - k]).sum();
                let next = &s[m - 1] + conv;
                s.push(next);
            }
            Ok(s.pop().unwrap())
        }
        ThreeTermAsPrinted | ThreeTermShifted => {
            let mut prev = int_rat(ExactInt::from(1));
            let mut cur = int_rat(ExactInt::from(2));
            if n == 0 {
                return ratio_to_int(&prev);
            }
            for m in 2..=n as i64 {
                // As printed, solving for the top index m = n+2 gives
                // S_m = (3(2m-3) S_{m-1} - (m-3) S_{m-2}) / m; the shifted
                // variant gives S_m = (3(2m-1) S_{m-1} - (m-2) S_{m-2}) / (m+1).
                let next = match method {
                    ThreeTermAsPrinted => {
                        (int_rat(ExactInt::from(3 * (2 * m - 3))) * &cur
                            - int_rat(ExactInt::from(m - 3)) * &prev)
                            / int_rat(ExactInt::from(m))
                    }
                    _ => {
                        (int_rat(ExactInt::from(3 * (2 * m - 1))) * &cur
                            - int_rat(ExactInt::from(m - 2)) * &prev)
                            / int_rat(ExactInt::from(m + 1))
                    }
                };
                prev = cur;
                cur = next;
            }
            ratio_to_int(&cur)
        }
    }
}
