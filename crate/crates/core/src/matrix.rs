//! Dense exact-integer matrices and ragged triangles.

use crate::arith::{binomial, pow2};
use crate::error::Error;
use crate::ExactInt;
use num_traits::Zero;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Rectangular matrix of exact integers, row-major, 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactInt>,
}

impl CountMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CountMatrix {
            rows,
            cols,
            data: vec![ExactInt::zero(); rows * cols],
        }
    }

    /// Builds from explicit rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<ExactInt>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged input to CountMatrix::from_rows"
        );
        CountMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CountMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ExactInt::from(1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Exact matrix product; the operand shapes must agree.
    pub fn mul(&self, other: &CountMatrix) -> Result<CountMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = CountMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = ExactInt::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &other[(k, j)];
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> CountMatrix {
        let mut out = CountMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn row(&self, i: usize) -> &[ExactInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl Index<(usize, usize)> for CountMatrix {
    type Output = ExactInt;
    fn index(&self, (i, j): (usize, usize)) -> &ExactInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CountMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactInt {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for CountMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> =
                self.row(i).iter().map(ExactInt::to_string).collect();
            writeln!(f, "[ {} ]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Lower-triangular ragged table: row `p` holds exactly `p + 1` entries,
/// indexed by `0 <= q <= p`. Cells with `q > p` do not exist; asking for
/// one is a caller bug, not a zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTriangle {
    rows: Vec<Vec<ExactInt>>,
}

impl CountTriangle {
    pub fn from_rows(rows: Vec<Vec<ExactInt>>) -> Self {
        for (p, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), p + 1, "triangle row {p} has wrong length");
        }
        CountTriangle { rows }
    }

    /// Number of rows.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, p: usize, q: usize) -> &ExactInt {
        assert!(q <= p, "triangle has no cell ({p},{q})");
        &self.rows[p][q]
    }

    pub fn get(&self, p: usize, q: usize) -> Option<&ExactInt> {
        self.rows.get(p).and_then(|row| row.get(q))
    }

    pub fn row(&self, p: usize) -> &[ExactInt] {
        &self.rows[p]
    }

    /// Diagonal entries (p, p), the single-parameter number sequence the
    /// triangle carries.
    pub fn diagonal(&self) -> impl Iterator<Item = &ExactInt> {
        self.rows.iter().map(|row| row.last().unwrap())
    }
}

impl fmt::Display for CountTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> =
                row.iter().map(ExactInt::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The n x n lower-triangular Pascal matrix: entry (i, j) = C(i, j).
pub fn pascal_matrix(n: usize) -> Result<CountMatrix, Error> {
    if n == 0 {
        return Err(Error::domain("pascal_matrix requires n >= 1"));
    }
    let mut m = CountMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            m[(i, j)] = binomial(i as u64, j as i64);
        }
    }
    Ok(m)
}

/// diag(1, 2, 4, ..., 2^(n-1)).
pub fn diag_pow2(n: usize) -> Result<CountMatrix, Error> {
    if n == 0 {
        return Err(Error::domain("diag_pow2 requires n >= 1"));
    }
    let mut m = CountMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = pow2(i as u64);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    fn mat(rows: &[&[i64]]) -> CountMatrix {
        CountMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().copied().map(ExactInt::from).collect())
                .collect(),
        )
    }

    #[test]
    fn pascal_matrix_small() {
        assert_eq!(pascal_matrix(1).unwrap(), mat(&[&[1]]));
        assert_eq!(
            pascal_matrix(3).unwrap(),
            mat(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]])
        );
        assert!(matches!(pascal_matrix(0), Err(Error::Domain(_))));
    }

    #[test]
    fn pascal_last_row_sums_to_power_of_two() {
        // Independent oracle: repeated doubling.
        for n in 1..=12usize {
            let m = pascal_matrix(n).unwrap();
            let sum: ExactInt = m.row(n - 1).iter().sum();
            let mut expected = int(1);
            for _ in 0..n - 1 {
                expected = &expected + &expected;
            }
            assert_eq!(sum, expected);
        }
    }

    #[test]
    fn diag_pow2_small() {
        assert_eq!(diag_pow2(1).unwrap(), mat(&[&[1]]));
        assert_eq!(
            diag_pow2(3).unwrap(),
            mat(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 4]])
        );
        assert!(matches!(diag_pow2(0), Err(Error::Domain(_))));
    }

    #[test]
    fn diag_pow2_trace_is_geometric_sum() {
        // trace = 1 + 2 + ... + 2^(n-1) = 2^n - 1, via the doubling oracle.
        for n in 1..=16usize {
            let m = diag_pow2(n).unwrap();
            let trace: ExactInt = (0..n).map(|i| m[(i, i)].clone()).sum();
            let mut p = int(1);
            for _ in 0..n {
                p = &p + &p;
            }
            assert_eq!(trace, p - int(1));
        }
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let m = mat(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        let id = CountMatrix::identity(3);
        assert_eq!(id.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&id).unwrap(), m);
    }

    #[test]
    fn pascal_times_transpose_matches_known_block() {
        let p = pascal_matrix(3).unwrap();
        let product = p.mul(&p.transpose()).unwrap();
        assert_eq!(product, mat(&[&[1, 1, 1], &[1, 2, 3], &[1, 3, 6]]));
    }

    #[test]
    fn mul_rejects_shape_mismatch() {
        let a = CountMatrix::zeros(2, 3);
        let b = CountMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&b), Err(Error::Shape { .. })));
    }

    #[test]
    fn transpose_involution_and_swap() {
        let m = mat(&[&[1, 2, 3], &[4, 5, 6]]);
        let t = m.transpose();
        assert_eq!(t, mat(&[&[1, 4], &[2, 5], &[3, 6]]));
        assert_eq!(t.transpose(), m);
        assert_eq!(
            pascal_matrix(2).unwrap().transpose(),
            mat(&[&[1, 1], &[0, 1]])
        );
    }

    #[test]
    fn triangle_shape_and_access() {
        let t = CountTriangle::from_rows(vec![
            vec![int(1)],
            vec![int(1), int(2)],
            vec![int(1), int(4), int(6)],
        ]);
        assert_eq!(t.size(), 3);
        assert_eq!(t.entry(2, 1), &int(4));
        assert_eq!(t.get(1, 2), None);
        assert_eq!(
            t.diagonal().cloned().collect::<Vec<_>>(),
            vec![int(1), int(2), int(6)]
        );
    }

    #[test]
    #[should_panic(expected = "no cell")]
    fn triangle_rejects_upper_access() {
        let t = CountTriangle::from_rows(vec![vec![int(1)], vec![int(1), int(1)]]);
        let _ = t.entry(0, 1);
    }
}
