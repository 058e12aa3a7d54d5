//! Registry of the published identities between the four families, each
//! verified over a finite parameter domain with exact arithmetic.
//!
//! Two entries (`GF2`, `S32_PRINTED`) are errata-expected: exact
//! evaluation refutes them as printed, and the suite passes exactly when
//! they fail reproducibly while everything else verifies. A bound `N`
//! caps every free parameter of an identity's domain.

use crate::arith::{binomial, pow2};
use crate::closedform::{
    c_closed, c_reflect, catalan_number, g_closed, r_closed, schroder_number,
    CatalanMethod, DelannoyMethod, SchroderCellMethod, SchroderMethod,
};
use crate::error::Error;
use crate::matrix::{diag_pow2, pascal_matrix, CountMatrix};
use crate::tables::{catalan_triangle, delannoy_table, rect_table, schroder_triangle};
use crate::{ExactInt, ExactRatio};
use std::fmt;

/// Outcome of one evaluator on one parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(ExactInt),
    /// A rational that failed to reduce to an integer; kept as evidence.
    NonIntegral(ExactRatio),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::NonIntegral(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: Vec<i64>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity_id: &'static str,
    pub cases_checked: u64,
    pub status: Status,
    /// Smallest-first (by parameter sum, then lexicographic), capped at
    /// [`COUNTEREXAMPLE_CAP`].
    pub counterexamples: Vec<Counterexample>,
}

/// At most this many counterexamples are kept per report; the minimal
/// ones carry the information.
pub const COUNTEREXAMPLE_CAP: usize = 10;

/// One registry entry: a verifiable relation with its parameter domain
/// and two independent evaluators.
pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    /// The relation itself, as plain text.
    pub anchor: &'static str,
    /// True for entries whose printed form is refuted by exact
    /// evaluation; the suite expects these to fail.
    pub errata_expected: bool,
    domain: fn(u32) -> Vec<Vec<i64>>,
    eval: fn(&[i64]) -> (Value, Value),
}

impl Identity {
    /// Evaluates both sides on one parameter tuple.
    pub fn eval(&self, params: &[i64]) -> (Value, Value) {
        (self.eval)(params)
    }

    /// The full case list for a bound, smallest-first.
    pub fn cases(&self, bound: u32) -> Vec<Vec<i64>> {
        let mut cases = (self.domain)(bound);
        cases.sort_by_key(|t| (t.iter().sum::<i64>(), t.clone()));
        cases
    }
}

fn int(v: impl Into<ExactInt>) -> Value {
    Value::Int(v.into())
}

/// Folds an evaluator result into a [`Value`]; only non-integrality is a
/// reportable outcome, anything else is a registry bug.
fn outcome(r: Result<ExactInt, Error>) -> Value {
    match r {
        Ok(v) => Value::Int(v),
        Err(Error::NonIntegral(q)) => Value::NonIntegral(q),
        Err(e) => panic!("identity evaluator failed outside its domain: {e}"),
    }
}

// Domain builders. Bounds are inclusive.

fn singles(lo: i64, bound: u32) -> Vec<Vec<i64>> {
    (lo..=bound as i64).map(|n| vec![n]).collect()
}

fn grid(lo: i64, bound: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in lo..=bound as i64 {
        for b in lo..=bound as i64 {
            out.push(vec![a, b]);
        }
    }
    out
}

/// (p, q) with qlo <= q <= p - strict <= bound - strict.
fn triangle_cells(qlo: i64, strict: bool, bound: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for p in qlo.max(if strict { 1 } else { 0 })..=bound as i64 {
        let qhi = if strict { p - 1 } else { p };
        for q in qlo..=qhi {
            out.push(vec![p, q]);
        }
    }
    out
}

// Ground-truth cell readers, each building the smallest table that
// contains the requested cell.

fn rect_cell(p: u64, q: u64) -> ExactInt {
    rect_table(p as usize + 1, q as usize + 1).unwrap()[(p as usize, q as usize)]
        .clone()
}

fn delannoy_cell(p: u64, q: u64) -> ExactInt {
    delannoy_table(p as usize + 1, q as usize + 1).unwrap()
        [(p as usize, q as usize)]
    .clone()
}

fn schroder_diag(n: u64) -> ExactInt {
    schroder_triangle(n as usize + 1)
        .unwrap()
        .entry(n as usize, n as usize)
        .clone()
}

fn eval_rect_recurrence(t: &[i64]) -> (Value, Value) {
    let (p, q) = (t[0] as usize, t[1] as usize);
    let m = rect_table(p + 1, q + 1).unwrap();
    (
        int(m[(p, q)].clone()),
        int(&m[(p - 1, q)] + &m[(p, q - 1)]),
    )
}

fn eval_rect_row_sum(t: &[i64]) -> (Value, Value) {
    let (p, q) = (t[0] as usize, t[1] as usize);
    let m = rect_table(p + 1, q + 1).unwrap();
    let sum: ExactInt = (0..=q).map(|i| m[(p - 1, i)].clone()).sum();
    (int(m[(p, q)].clone()), int(sum))
}

fn eval_q_decomposition_cell(t: &[i64]) -> (Value, Value) {
    let (i, j) = (t[0] as u64, t[1] as u64);
    let sum: ExactInt = (0..=i.min(j))
        .map(|k| binomial(i, k as i64) * binomial(j, k as i64))
        .sum();
    (int(rect_cell(i, j)), int(sum))
}

fn eval_binomial_product_sum(t: &[i64]) -> (Value, Value) {
    let (i, j) = (t[0] as u64, t[1] as u64);
    let sum: ExactInt = (0..i.min(j))
        .map(|k| binomial(i - 1, k as i64) * binomial(j - 1, k as i64))
        .sum();
    (int(sum), int(binomial(i + j - 2, i as i64 - 1)))
}

fn eval_binomial_square_sum(t: &[i64]) -> (Value, Value) {
    let i = t[0] as u64;
    let sum: ExactInt = (0..i)
        .map(|k| {
            let b = binomial(i - 1, k as i64);
            &b * &b
        })
        .sum();
    (int(sum), int(binomial(2 * i - 2, i as i64 - 1)))
}

fn eval_closed_vs_reflect(t: &[i64]) -> (Value, Value) {
    let (p, q) = (t[0] as u64, t[1] as u64);
    (outcome(c_closed(p, q)), outcome(c_reflect(p, q)))
}

fn eval_catalan_recurrence(t: &[i64]) -> (Value, Value) {
    let (p, q) = (t[0] as usize, t[1] as usize);
    let tri = catalan_triangle(p + 1).unwrap();
    (
        int(tri.entry(p, q).clone()),
        int(tri.entry(p - 1, q) + tri.entry(p, q - 1)),
    )
}

fn eval_catalan_column_sum(t: &[i64]) -> (Value, Value) {
    let (p, q) = (t[0] as usize, t[1] as usize);
    let tri = catalan_triangle(p + 2).unwrap();
    let sum: ExactInt = (0..=q).map(|k| tri.entry(p, k).clone()).sum();
    (int(tri.entry(p + 1, q).clone()), int(sum))
}

fn catalan_pair(n: u64, method: CatalanMethod) -> (Value, Value) {
    (
        outcome(catalan_number(n, method)),
        outcome(catalan_number(n, CatalanMethod::Closed)),
    )
}

fn eval_catalan_split(t: &[i64]) -> (Value, Value) {
    catalan_pair(t[0] as u64, CatalanMethod::Split)
}

fn eval_catalan_weighted_sum(t: &[i64]) -> (Value, Value) {
    catalan_pair(t[0] as u64, CatalanMethod::WeightedSum)
}

fn eval_catalan_half_binomial(t: &[i64]) -> (Value, Value) {
    catalan_pair(t[0] as u64, CatalanMethod::HalfBinomial)
}

fn eval_catalan_recur_step(t: &[i64]) -> (Value, Value) {
    catalan_pair(t[0] as u64, CatalanMethod::Recurrence)
}

fn eval_delannoy_recurrence(t: &[i64]) -> (Value, Value) {
    let (k, r) = (t[0] as usize, t[1] as usize);
    let m = delannoy_table(k + 1, r + 1).unwrap();
    (
        int(m[(k, r)].clone()),
        int(&m[(k, r - 1)] + &m[(k - 1, r)] + &m[(k - 1, r - 1)]),
    )
}

fn delannoy_pair(t: &[i64], rhs: DelannoyMethod) -> (Value, Value) {
    let (p, q) = (t[0] as u64, t[1] as u64);
    (
        int(g_closed(p, q, DelannoyMethod::MultinomialSum)),
        int(g_closed(p, q, rhs)),
    )
}

fn eval_delannoy_r66(t: &[i64]) -> (Value, Value) {
    delannoy_pair(t, DelannoyMethod::BinomialProductSum)
}

fn eval_delannoy_r666(t: &[i64]) -> (Value, Value) {
    delannoy_pair(t, DelannoyMethod::TwoPowerSum)
}

fn eval_k_decomposition_cell(t: &[i64]) -> (Value, Value) {
    let (i, j) = (t[0] as u64, t[1] as u64);
    let sum: ExactInt = (0..=i.min(j))
        .map(|k| binomial(i, k as i64) * binomial(j, k as i64) * pow2(k))
        .sum();
    (int(delannoy_cell(i, j)), int(sum))
}

fn schroder_cell_pair(t: &[i64], rhs: SchroderCellMethod) -> (Value, Value) {
    let (p, q) = (t[0] as u64, t[1] as u64);
    (
        outcome(r_closed(p, q, SchroderCellMethod::DiffMultinomial)),
        outcome(r_closed(p, q, rhs)),
    )
}

fn eval_schroder_cell_h2(t: &[i64]) -> (Value, Value) {
    schroder_cell_pair(t, SchroderCellMethod::DiffBinomialProduct)
}

fn eval_schroder_cell_h3(t: &[i64]) -> (Value, Value) {
    schroder_cell_pair(t, SchroderCellMethod::DiffTwoPower)
}

fn eval_schroder_cell_h4(t: &[i64]) -> (Value, Value) {
    schroder_cell_pair(t, SchroderCellMethod::WeightedMultinomial)
}

fn eval_schroder_weighted_sum(t: &[i64]) -> (Value, Value) {
    let n = t[0] as u64;
    (
        outcome(schroder_number(n, SchroderMethod::WeightedMultinomialSum)),
        int(schroder_diag(n)),
    )
}

fn eval_schroder_power_weighted(t: &[i64]) -> (Value, Value) {
    let n = t[0] as u64;
    (
        outcome(schroder_number(n, SchroderMethod::PowerWeightedSum)),
        int(schroder_diag(n)),
    )
}

fn eval_schroder_recurrence(t: &[i64]) -> (Value, Value) {
    let (p, q) = (t[0] as usize, t[1] as usize);
    let tri = schroder_triangle(p + 1).unwrap();
    (
        int(tri.entry(p, q).clone()),
        int(tri.entry(p - 1, q - 1) + tri.entry(p - 1, q) + tri.entry(p, q - 1)),
    )
}

fn eval_schroder_diagonal_rule(t: &[i64]) -> (Value, Value) {
    let n = t[0] as usize;
    let tri = schroder_triangle(n + 1).unwrap();
    (
        int(tri.entry(n, n).clone()),
        int(tri.entry(n - 1, n - 1) + tri.entry(n, n - 1)),
    )
}

fn eval_schroder_doubling(t: &[i64]) -> (Value, Value) {
    let (p, q) = (t[0] as usize, t[1] as usize);
    let tri = schroder_triangle(p + 1).unwrap();
    let prefix: ExactInt = (0..q).map(|k| tri.entry(p - 1, k).clone()).sum();
    (
        int(tri.entry(p, q).clone()),
        int(&prefix + &prefix + tri.entry(p - 1, q)),
    )
}

fn eval_schroder_diag_doubling(t: &[i64]) -> (Value, Value) {
    let n = t[0] as usize;
    let tri = schroder_triangle(n + 1).unwrap();
    let prefix: ExactInt = (0..n).map(|k| tri.entry(n - 1, k).clone()).sum();
    (int(tri.entry(n, n).clone()), int(&prefix + &prefix))
}

fn eval_schroder_convolution(t: &[i64]) -> (Value, Value) {
    let n = t[0] as usize;
    let tri = schroder_triangle(n + 1).unwrap();
    let s: Vec<&ExactInt> = tri.diagonal().collect();
    let conv: ExactInt = (0..n).map(|k| s[k] * s[n - 1 - k]).sum();
    (int(s[n].clone()), int(s[n - 1] + conv))
}

fn eval_three_term_as_printed(t: &[i64]) -> (Value, Value) {
    let n = t[0] as u64;
    let tri = schroder_triangle(n as usize + 3).unwrap();
    let s: Vec<&ExactInt> = tri.diagonal().collect();
    let (n, i) = (ExactInt::from(n), n as usize);
    (
        int((&n + 2) * s[i + 2]),
        int((&n * 2 + 1) * 3 * s[i + 1] - (&n - 1) * s[i]),
    )
}

fn eval_three_term_shifted(t: &[i64]) -> (Value, Value) {
    let n = t[0] as u64;
    let tri = schroder_triangle(n as usize + 2).unwrap();
    let s: Vec<&ExactInt> = tri.diagonal().collect();
    let (n, i) = (ExactInt::from(n), n as usize);
    (
        int((&n + 2) * s[i + 1]),
        int((&n * 2 + 1) * 3 * s[i] - (&n - 1) * s[i - 1]),
    )
}

fn dom_grid1(bound: u32) -> Vec<Vec<i64>> {
    grid(1, bound)
}

fn dom_grid0(bound: u32) -> Vec<Vec<i64>> {
    grid(0, bound)
}

fn dom_row_sum(bound: u32) -> Vec<Vec<i64>> {
    // p >= 1, q >= 0
    let mut out = Vec::new();
    for p in 1..=bound as i64 {
        for q in 0..=bound as i64 {
            out.push(vec![p, q]);
        }
    }
    out
}

fn dom_singles0(bound: u32) -> Vec<Vec<i64>> {
    singles(0, bound)
}

fn dom_singles1(bound: u32) -> Vec<Vec<i64>> {
    singles(1, bound)
}

fn dom_triangle_q1(bound: u32) -> Vec<Vec<i64>> {
    triangle_cells(1, false, bound)
}

fn dom_triangle_q1_strict(bound: u32) -> Vec<Vec<i64>> {
    triangle_cells(1, true, bound)
}

fn dom_triangle_q0(bound: u32) -> Vec<Vec<i64>> {
    triangle_cells(0, false, bound)
}

fn dom_triangle_q0_strict(bound: u32) -> Vec<Vec<i64>> {
    triangle_cells(0, true, bound)
}

static REGISTRY: &[Identity] = &[
    Identity {
        id: "B1",
        description: "rectangular table cell equals its left plus its upper neighbor",
        anchor: "b(k,r) = b(k,r-1) + b(k-1,r)",
        errata_expected: false,
        domain: dom_grid1,
        eval: eval_rect_recurrence,
    },
    Identity {
        id: "B2",
        description: "rectangular table cell equals a prefix sum of the previous row",
        anchor: "Q(p,q) = sum_{i=0..q} Q(p-1,i)",
        errata_expected: false,
        domain: dom_row_sum,
        eval: eval_rect_row_sum,
    },
    Identity {
        id: "B3_DECOMP_Q",
        description: "rectangular table cell equals the Pascal-times-transpose product cell",
        anchor: "Q_n = P_n P_n^T",
        errata_expected: false,
        domain: dom_grid0,
        eval: eval_q_decomposition_cell,
    },
    Identity {
        id: "A1",
        description: "binomial product sum collapses to one binomial",
        anchor: "sum_{k=0..min(i,j)-1} C(i-1,k) C(j-1,k) = C(i+j-2, i-1)",
        errata_expected: false,
        domain: dom_grid1,
        eval: eval_binomial_product_sum,
    },
    Identity {
        id: "A2",
        description: "sum of squared binomials collapses to a central binomial",
        anchor: "sum_{k=0..i-1} C(i-1,k)^2 = C(2i-2, i-1)",
        errata_expected: false,
        domain: dom_singles1,
        eval: eval_binomial_square_sum,
    },
    Identity {
        id: "R3_VS_REFLECT",
        description: "weighted-binomial closed form equals the reflection difference",
        anchor: "((p-q+1)/(p+1)) C(p+q,q) = b(p,q) - b(p+1,q-1)",
        errata_expected: false,
        domain: dom_triangle_q1,
        eval: eval_closed_vs_reflect,
    },
    Identity {
        id: "S3",
        description: "Catalan triangle interior cell equals its upper plus its left neighbor",
        anchor: "C(p,q) = C(p-1,q) + C(p,q-1)",
        errata_expected: false,
        domain: dom_triangle_q1_strict,
        eval: eval_catalan_recurrence,
    },
    Identity {
        id: "S4",
        description: "next Catalan row entry equals a prefix sum of the current row",
        anchor: "C(p+1,q) = sum_{k=0..q} C(p,k)",
        errata_expected: false,
        domain: dom_triangle_q0,
        eval: eval_catalan_column_sum,
    },
    Identity {
        id: "S5",
        description: "Catalan number as a two-term weighted binomial split",
        anchor: "C_n = (1/n) C(2n-2,n-1) + (3/(n+1)) C(2n-2,n-2)",
        errata_expected: false,
        domain: dom_singles1,
        eval: eval_catalan_split,
    },
    Identity {
        id: "S6",
        description: "Catalan number as a weighted binomial sum",
        anchor: "C_n = sum_{k=0..n-1} ((n-k)/n) C(n+k-1,k)",
        errata_expected: false,
        domain: dom_singles1,
        eval: eval_catalan_weighted_sum,
    },
    Identity {
        id: "S66_HALF",
        description: "Catalan number as a halved binomial",
        anchor: "C_n = (2/(n+1)) C(2n-1,n-1)",
        errata_expected: false,
        domain: dom_singles1,
        eval: eval_catalan_half_binomial,
    },
    Identity {
        id: "S66_RECUR",
        description: "Catalan one-step recurrence",
        anchor: "C_n = (2(2n-1)/(n+1)) C_{n-1}",
        errata_expected: false,
        domain: dom_singles1,
        eval: eval_catalan_recur_step,
    },
    Identity {
        id: "GG1",
        description: "Delannoy table cell equals the sum of its three predecessors",
        anchor: "g(k,r) = g(k,r-1) + g(k-1,r) + g(k-1,r-1)",
        errata_expected: false,
        domain: dom_grid1,
        eval: eval_delannoy_recurrence,
    },
    Identity {
        id: "R6_EQ_R66",
        description: "Delannoy multinomial sum equals the binomial-product sum",
        anchor: "sum_r (p+q-r)!/((p-r)!(q-r)!r!) = sum_a C(p,a) C(q+a,p)",
        errata_expected: false,
        domain: dom_grid0,
        eval: eval_delannoy_r66,
    },
    Identity {
        id: "R6_EQ_R666",
        description: "Delannoy multinomial sum equals the two-power sum",
        anchor: "sum_r (p+q-r)!/((p-r)!(q-r)!r!) = sum_a C(p,a) C(q,a) 2^a",
        errata_expected: false,
        domain: dom_grid0,
        eval: eval_delannoy_r666,
    },
    Identity {
        id: "C1_DECOMP_K",
        description: "Delannoy table cell equals the Pascal-diagonal-transpose product cell",
        anchor: "K_n = P_n D_n P_n^T, D_n = diag(1,2,4,...,2^(n-1))",
        errata_expected: false,
        domain: dom_grid0,
        eval: eval_k_decomposition_cell,
    },
    Identity {
        id: "H11_EQ_H2",
        description: "subdiagonal HVD difference routes agree (multinomial vs binomial-product)",
        anchor: "g(p,q)-g(p+1,q-1) via multinomial sums = via binomial-product sums",
        errata_expected: false,
        domain: dom_triangle_q1,
        eval: eval_schroder_cell_h2,
    },
    Identity {
        id: "H11_EQ_H3",
        description: "subdiagonal HVD difference routes agree (multinomial vs two-power)",
        anchor: "g(p,q)-g(p+1,q-1) via multinomial sums = via two-power sums",
        errata_expected: false,
        domain: dom_triangle_q1,
        eval: eval_schroder_cell_h3,
    },
    Identity {
        id: "H11_EQ_H4",
        description: "subdiagonal HVD difference equals the weighted multinomial sum",
        anchor: "g(p,q)-g(p+1,q-1) = sum_{r=0..q} ((p-q+1)/(p-r+1)) (p+q-r)!/((p-r)!(q-r)!r!)",
        errata_expected: false,
        domain: dom_triangle_q1,
        eval: eval_schroder_cell_h4,
    },
    Identity {
        id: "GF1",
        description: "Schroder number as a weighted multinomial sum",
        anchor: "S_n = sum_{r=0..n} (1/(n-r+1)) (2n-r)!/((n-r)!(n-r)!r!)",
        errata_expected: false,
        domain: dom_singles0,
        eval: eval_schroder_weighted_sum,
    },
    Identity {
        id: "GF2",
        description: "Schroder number as the printed power-weighted sum; exact evaluation refutes it from n = 3",
        anchor: "S_n = 2^n + sum_{r=0..n-1} (r 2^r/(n-r+1)) C(n,r) C(n-1,r)",
        errata_expected: true,
        domain: dom_singles0,
        eval: eval_schroder_power_weighted,
    },
    Identity {
        id: "S1",
        description: "Schroder triangle interior cell equals the sum of its three predecessors",
        anchor: "R(p,q) = R(p-1,q-1) + R(p-1,q) + R(p,q-1)",
        errata_expected: false,
        domain: dom_triangle_q1_strict,
        eval: eval_schroder_recurrence,
    },
    Identity {
        id: "S11",
        description: "Schroder diagonal cell equals its left neighbor plus the previous diagonal cell",
        anchor: "S_n = R(n,n) = R(n-1,n-1) + R(n,n-1)",
        errata_expected: false,
        domain: dom_singles1,
        eval: eval_schroder_diagonal_rule,
    },
    Identity {
        id: "S2",
        description: "off-diagonal Schroder cell from a doubled prefix of the previous row",
        anchor: "R(p,q) = 2[R(p-1,0)+...+R(p-1,q-1)] + R(p-1,q), q < p",
        errata_expected: false,
        domain: dom_triangle_q0_strict,
        eval: eval_schroder_doubling,
    },
    Identity {
        id: "S31",
        description: "Schroder diagonal cell from a doubled full prefix of the previous row",
        anchor: "R(n,n) = 2[R(n-1,0)+...+R(n-1,n-1)]",
        errata_expected: false,
        domain: dom_singles1,
        eval: eval_schroder_diag_doubling,
    },
    Identity {
        id: "S311",
        description: "Schroder convolution recurrence",
        anchor: "S_n = S_{n-1} + S_0 S_{n-1} + S_1 S_{n-2} + ... + S_{n-1} S_0",
        errata_expected: false,
        domain: dom_singles1,
        eval: eval_schroder_convolution,
    },
    Identity {
        id: "S32_PRINTED",
        description: "three-term Schroder recurrence as printed; exact evaluation refutes it at every index",
        anchor: "(n+2) S_{n+2} = 3(2n+1) S_{n+1} - (n-1) S_n",
        errata_expected: true,
        domain: dom_singles0,
        eval: eval_three_term_as_printed,
    },
    Identity {
        id: "S32_SHIFTED",
        description: "three-term Schroder recurrence with all indices shifted down by one (hypothesized variant)",
        anchor: "(n+2) S_{n+1} = 3(2n+1) S_n - (n-1) S_{n-1}",
        errata_expected: false,
        domain: dom_singles1,
        eval: eval_three_term_shifted,
    },
];

/// All registered identities, in registry order.
pub fn registry() -> &'static [Identity] {
    REGISTRY
}

/// Looks up one identity by key.
pub fn identity(id: &str) -> Option<&'static Identity> {
    REGISTRY.iter().find(|ident| ident.id == id)
}

/// Verifies one identity over its domain capped by `bound`.
pub fn verify(id: &str, bound: u32) -> Result<VerificationReport, Error> {
    let ident = identity(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    Ok(run(ident, bound))
}

fn run(ident: &'static Identity, bound: u32) -> VerificationReport {
    let cases = ident.cases(bound);
    let mut counterexamples = Vec::new();
    let mut failures = 0u64;
    for params in &cases {
        let (lhs, rhs) = ident.eval(params);
        let holds = match (&lhs, &rhs) {
            (Value::Int(a), Value::Int(b)) => a == b,
            // Non-integrality on either side refutes the case outright.
            _ => false,
        };
        if !holds {
            failures += 1;
            if counterexamples.len() < COUNTEREXAMPLE_CAP {
                counterexamples.push(Counterexample {
                    params: params.clone(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    VerificationReport {
        identity_id: ident.id,
        cases_checked: cases.len() as u64,
        status: if failures == 0 {
            Status::Verified
        } else {
            Status::Refuted
        },
        counterexamples,
    }
}

/// Verifies every registered identity, in registry order.
pub fn verify_all(bound: u32) -> Vec<VerificationReport> {
    REGISTRY.iter().map(|ident| run(ident, bound)).collect()
}

/// True when every report matches its registry expectation:
/// errata-expected entries Refuted, everything else Verified.
pub fn expectation_met(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| {
        let expected = identity(r.identity_id)
            .map(|i| i.errata_expected)
            .unwrap_or(false);
        match r.status {
            Status::Refuted => expected,
            Status::Verified => !expected,
        }
    })
}

/// The two matrix factorizations, checked by carrying out the actual
/// matrix products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decomposition {
    /// Rectangular array vs P P^T.
    Q,
    /// Delannoy array vs P D P^T.
    K,
}

/// Rebuilds the named matrix from its factors and compares it cell by
/// cell against the recurrence table of the same size.
pub fn verify_decomposition(
    which: Decomposition,
    n: usize,
) -> Result<VerificationReport, Error> {
    let (id, table, product) = decomposition_sides(which, n)?;
    let mut counterexamples = Vec::new();
    let mut failures = 0u64;
    for i in 0..n {
        for j in 0..n {
            if table[(i, j)] != product[(i, j)] {
                failures += 1;
                if counterexamples.len() < COUNTEREXAMPLE_CAP {
                    counterexamples.push(Counterexample {
                        params: vec![i as i64, j as i64],
                        lhs: Value::Int(table[(i, j)].clone()),
                        rhs: Value::Int(product[(i, j)].clone()),
                    });
                }
            }
        }
    }
    counterexamples.sort_by_key(|c| (c.params.iter().sum::<i64>(), c.params.clone()));
    Ok(VerificationReport {
        identity_id: id,
        cases_checked: (n * n) as u64,
        status: if failures == 0 {
            Status::Verified
        } else {
            Status::Refuted
        },
        counterexamples,
    })
}

/// The table and the reconstructed factor product for one decomposition.
pub fn decomposition_sides(
    which: Decomposition,
    n: usize,
) -> Result<(&'static str, CountMatrix, CountMatrix), Error> {
    let pascal = pascal_matrix(n)?;
    match which {
        Decomposition::Q => {
            let table = rect_table(n, n)?;
            let product = pascal.mul(&pascal.transpose())?;
            Ok(("B3_DECOMP_Q", table, product))
        }
        Decomposition::K => {
            let table = delannoy_table(n, n)?;
            let product = pascal
                .mul(&diag_pow2(n)?)?
                .mul(&pascal.transpose())?;
            Ok(("C1_DECOMP_K", table, product))
        }
    }
}
