//! The enumeration oracle against the recurrence tables: every cell of
//! every family, with the diagonal-step families on a slightly smaller
//! grid because their path counts grow faster.

use lattice_core::oracle::{count_paths, Constraint, LatticePoint, StepSet, DEFAULT_BUDGET};
use lattice_core::tables::{catalan_triangle, delannoy_table, rect_table, schroder_triangle};
use lattice_core::ExactInt;

fn oracle(p: u32, q: u32, steps: StepSet, constraint: Constraint) -> ExactInt {
    count_paths(LatticePoint::new(p, q), steps, constraint, DEFAULT_BUDGET)
        .unwrap()
        .count
}

#[test]
fn rect_table_matches_enumeration() {
    let table = rect_table(10, 10).unwrap();
    for p in 0..=9u32 {
        for q in 0..=9u32 {
            assert_eq!(
                oracle(p, q, StepSet::RightDown, Constraint::Unrestricted),
                table[(p as usize, q as usize)],
                "rect ({p},{q})"
            );
        }
    }
}

#[test]
fn catalan_triangle_matches_enumeration() {
    let table = catalan_triangle(10).unwrap();
    for p in 0..=9u32 {
        for q in 0..=9u32 {
            let counted = oracle(p, q, StepSet::RightDown, Constraint::Subdiagonal);
            if q <= p {
                assert_eq!(
                    &counted,
                    table.entry(p as usize, q as usize),
                    "catalan ({p},{q})"
                );
            } else {
                assert_eq!(counted, ExactInt::from(0), "catalan ({p},{q})");
            }
        }
    }
}

#[test]
fn delannoy_table_matches_enumeration() {
    let table = delannoy_table(9, 9).unwrap();
    for p in 0..=8u32 {
        for q in 0..=8u32 {
            assert_eq!(
                oracle(p, q, StepSet::RightDownDiagonal, Constraint::Unrestricted),
                table[(p as usize, q as usize)],
                "delannoy ({p},{q})"
            );
        }
    }
}

#[test]
fn schroder_triangle_matches_enumeration() {
    let table = schroder_triangle(9).unwrap();
    for p in 0..=8u32 {
        for q in 0..=8u32 {
            let counted =
                oracle(p, q, StepSet::RightDownDiagonal, Constraint::Subdiagonal);
            if q <= p {
                assert_eq!(
                    &counted,
                    table.entry(p as usize, q as usize),
                    "schroder ({p},{q})"
                );
            } else {
                assert_eq!(counted, ExactInt::from(0), "schroder ({p},{q})");
            }
        }
    }
}
