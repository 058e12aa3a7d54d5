//! Recurrence-built number tables for the four path families.
//!
//! Each generator fills row-major in one pass; every cell depends only on
//! neighbors that are already computed (left, up, up-left).

use crate::error::Error;
use crate::matrix::{CountMatrix, CountTriangle};
use crate::ExactInt;

/// Rectangular-path counts b(k, r): first row and column are all 1, every
/// other cell is the sum of the cell above and the cell to the left.
pub fn rect_table(rows: usize, cols: usize) -> Result<CountMatrix, Error> {
    if rows == 0 || cols == 0 {
        return Err(Error::domain("rect_table requires positive dimensions"));
    }
    let mut m = CountMatrix::zeros(rows, cols);
    for k in 0..rows {
        for r in 0..cols {
            m[(k, r)] = if k == 0 || r == 0 {
                ExactInt::from(1)
            } else {
                &m[(k - 1, r)] + &m[(k, r - 1)]
            };
        }
    }
    Ok(m)
}

/// Subdiagonal rectangular-path counts C(p, q), a triangle with `n` rows.
///
/// First column is all 1; interior cells follow the two-neighbor sum; the
/// diagonal repeats its left neighbor, since the cell above the diagonal
/// would lie outside the allowed region.
pub fn catalan_triangle(n: usize) -> Result<CountTriangle, Error> {
    if n == 0 {
        return Err(Error::domain("catalan_triangle requires n >= 1"));
    }
    let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(n);
    for p in 0..n {
        let mut row: Vec<ExactInt> = Vec::with_capacity(p + 1);
        for q in 0..=p {
            let cell = if q == 0 {
                ExactInt::from(1)
            } else if q < p {
                &rows[p - 1][q] + &row[q - 1]
            } else {
                row[q - 1].clone()
            };
            row.push(cell);
        }
        rows.push(row);
    }
    Ok(CountTriangle::from_rows(rows))
}

/// HVD-path counts g(k, r): like the rectangular table but with a third
/// predecessor, the up-left diagonal neighbor.
pub fn delannoy_table(rows: usize, cols: usize) -> Result<CountMatrix, Error> {
    if rows == 0 || cols == 0 {
        return Err(Error::domain(
            "delannoy_table requires positive dimensions",
        ));
    }
    let mut m = CountMatrix::zeros(rows, cols);
    for k in 0..rows {
        for r in 0..cols {
            m[(k, r)] = if k == 0 || r == 0 {
                ExactInt::from(1)
            } else {
                &m[(k - 1, r)] + &m[(k, r - 1)] + &m[(k - 1, r - 1)]
            };
        }
    }
    Ok(m)
}

/// Subdiagonal HVD-path counts R(p, q), a triangle with `n` rows.
///
/// Interior cells sum all three predecessors. On the diagonal the neighbor
/// above is forbidden, leaving R(p, p) = R(p, p-1) + R(p-1, p-1).
pub fn schroder_triangle(n: usize) -> Result<CountTriangle, Error> {
    if n == 0 {
        return Err(Error::domain("schroder_triangle requires n >= 1"));
    }
    let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(n);
    for p in 0..n {
        let mut row: Vec<ExactInt> = Vec::with_capacity(p + 1);
        for q in 0..=p {
            let cell = if q == 0 {
                ExactInt::from(1)
            } else if q < p {
                &rows[p - 1][q] + &row[q - 1] + &rows[p - 1][q - 1]
            } else {
                &row[q - 1] + &rows[p - 1][q - 1]
            };
            row.push(cell);
        }
        rows.push(row);
    }
    Ok(CountTriangle::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn rect_axis_paths_are_unique() {
        let m = rect_table(1, 5).unwrap();
        assert_eq!(m.row(0), &[int(1), int(1), int(1), int(1), int(1)][..]);
    }

    #[test]
    fn rect_known_entries() {
        let m = rect_table(7, 7).unwrap();
        assert_eq!(m[(2, 3)], int(10));
        assert_eq!(m[(6, 6)], int(924));
    }

    #[test]
    fn rect_rejects_zero_dimension() {
        assert!(matches!(rect_table(0, 3), Err(Error::Domain(_))));
        assert!(matches!(rect_table(3, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn catalan_known_entries() {
        assert_eq!(catalan_triangle(1).unwrap().row(0), &[int(1)][..]);
        let t = catalan_triangle(8).unwrap();
        assert_eq!(t.entry(4, 2), &int(9));
        assert_eq!(t.entry(7, 6), &int(429));
        assert!(matches!(catalan_triangle(0), Err(Error::Domain(_))));
    }

    #[test]
    fn catalan_diagonal_sequence() {
        let t = catalan_triangle(8).unwrap();
        let diag: Vec<ExactInt> = t.diagonal().cloned().collect();
        let expected = [1, 1, 2, 5, 14, 42, 132, 429].map(int);
        assert_eq!(diag, expected);
    }

    #[test]
    fn delannoy_known_entries() {
        let m = delannoy_table(1, 4).unwrap();
        assert_eq!(m.row(0), &[int(1), int(1), int(1), int(1)][..]);
        let m = delannoy_table(7, 7).unwrap();
        assert_eq!(m[(2, 2)], int(13));
        assert_eq!(m[(6, 6)], int(8989));
        assert!(matches!(delannoy_table(0, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn schroder_known_entries() {
        let t = schroder_triangle(2).unwrap();
        assert_eq!(t.row(0), &[int(1)][..]);
        assert_eq!(t.row(1), &[int(1), int(2)][..]);
        let t = schroder_triangle(8).unwrap();
        assert_eq!(t.entry(4, 3), &int(68));
        assert_eq!(t.entry(7, 7), &int(8558));
        assert!(matches!(schroder_triangle(0), Err(Error::Domain(_))));
    }

    #[test]
    fn square_tables_are_symmetric() {
        let b = rect_table(10, 10).unwrap();
        let g = delannoy_table(10, 10).unwrap();
        assert_eq!(b, b.transpose());
        assert_eq!(g, g.transpose());
    }

    #[test]
    fn reflection_difference_links_tables() {
        // Triangle cell (p,q) = square cell (p,q) - square cell (p+1,q-1),
        // for both the plain and the diagonal-step families.
        let b = rect_table(12, 12).unwrap();
        let c = catalan_triangle(11).unwrap();
        let g = delannoy_table(12, 12).unwrap();
        let r = schroder_triangle(11).unwrap();
        for p in 1..11 {
            for q in 1..=p {
                assert_eq!(
                    c.entry(p, q),
                    &(&b[(p, q)] - &b[(p + 1, q - 1)]),
                    "catalan ({p},{q})"
                );
                assert_eq!(
                    r.entry(p, q),
                    &(&g[(p, q)] - &g[(p + 1, q - 1)]),
                    "schroder ({p},{q})"
                );
            }
        }
    }
}
