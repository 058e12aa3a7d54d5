//! The four path families as one dispatchable surface: build a family's
//! table, or compute a single value by recurrence, closed form, or the
//! enumeration oracle.

use crate::closedform::{b_closed, c_closed, g_closed, r_closed, DelannoyMethod, SchroderCellMethod};
use crate::error::Error;
use crate::matrix::{CountMatrix, CountTriangle};
use crate::oracle::{count_paths, Constraint, LatticePoint, StepSet};
use crate::tables::{catalan_triangle, delannoy_table, rect_table, schroder_triangle};
use crate::ExactInt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Rect,
    Catalan,
    Delannoy,
    Schroder,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::Rect, Family::Catalan, Family::Delannoy, Family::Schroder];

    pub fn name(self) -> &'static str {
        match self {
            Family::Rect => "rect",
            Family::Catalan => "catalan",
            Family::Delannoy => "delannoy",
            Family::Schroder => "schroder",
        }
    }

    /// Triangular families exist only on q <= p.
    pub fn is_triangular(self) -> bool {
        matches!(self, Family::Catalan | Family::Schroder)
    }

    pub fn step_set(self) -> StepSet {
        match self {
            Family::Rect | Family::Catalan => StepSet::RightDown,
            Family::Delannoy | Family::Schroder => StepSet::RightDownDiagonal,
        }
    }

    pub fn constraint(self) -> Constraint {
        if self.is_triangular() {
            Constraint::Subdiagonal
        } else {
            Constraint::Unrestricted
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "rect" => Ok(Family::Rect),
            "catalan" => Ok(Family::Catalan),
            "delannoy" => Ok(Family::Delannoy),
            "schroder" => Ok(Family::Schroder),
            other => Err(Error::domain(format!(
                "unknown family {other:?}; expected rect, catalan, delannoy or schroder"
            ))),
        }
    }
}

/// A family's table: square matrix for the unrestricted families,
/// triangle for the subdiagonal ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyTable {
    Square(CountMatrix),
    Triangle(CountTriangle),
}

pub fn family_table(family: Family, size: usize) -> Result<FamilyTable, Error> {
    Ok(match family {
        Family::Rect => FamilyTable::Square(rect_table(size, size)?),
        Family::Catalan => FamilyTable::Triangle(catalan_triangle(size)?),
        Family::Delannoy => FamilyTable::Square(delannoy_table(size, size)?),
        Family::Schroder => FamilyTable::Triangle(schroder_triangle(size)?),
    })
}

/// How to compute a single cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueMethod {
    Recurrence,
    Closed,
    /// Brute-force enumeration with the given node-expansion budget.
    Oracle { budget: u64 },
}

/// One cell value of a family. Triangular families reject q > p.
pub fn family_value(
    family: Family,
    p: u32,
    q: u32,
    method: ValueMethod,
) -> Result<ExactInt, Error> {
    if family.is_triangular() && q > p {
        return Err(Error::domain(format!(
            "family {} requires q <= p, got ({p},{q})",
            family.name()
        )));
    }
    match method {
        ValueMethod::Recurrence => Ok(match family_table(
            family,
            (p.max(q) + 1) as usize,
        )? {
            FamilyTable::Square(m) => m[(p as usize, q as usize)].clone(),
            FamilyTable::Triangle(t) => t.entry(p as usize, q as usize).clone(),
        }),
        ValueMethod::Closed => match family {
            Family::Rect => Ok(b_closed(p as u64, q as u64)),
            Family::Catalan => c_closed(p as u64, q as u64),
            Family::Delannoy => {
                Ok(g_closed(p as u64, q as u64, DelannoyMethod::TwoPowerSum))
            }
            Family::Schroder => {
                r_closed(p as u64, q as u64, SchroderCellMethod::WeightedMultinomial)
            }
        },
        ValueMethod::Oracle { budget } => Ok(count_paths(
            LatticePoint::new(p, q),
            family.step_set(),
            family.constraint(),
            budget,
        )?
        .count),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_BUDGET;

    #[test]
    fn family_parsing() {
        assert_eq!("rect".parse::<Family>().unwrap(), Family::Rect);
        assert_eq!("schroder".parse::<Family>().unwrap(), Family::Schroder);
        assert!("pascal".parse::<Family>().is_err());
    }

    #[test]
    fn triangular_rejects_upper_cells() {
        for family in [Family::Catalan, Family::Schroder] {
            assert!(matches!(
                family_value(family, 2, 3, ValueMethod::Recurrence),
                Err(Error::Domain(_))
            ));
        }
    }

    #[test]
    fn methods_agree_on_known_cells() {
        assert_eq!(
            family_value(Family::Delannoy, 4, 4, ValueMethod::Closed).unwrap(),
            ExactInt::from(321)
        );
        assert_eq!(
            family_value(Family::Rect, 0, 9, ValueMethod::Recurrence).unwrap(),
            ExactInt::from(1)
        );
        assert_eq!(
            family_value(
                Family::Schroder,
                5,
                5,
                ValueMethod::Oracle { budget: DEFAULT_BUDGET }
            )
            .unwrap(),
            ExactInt::from(394)
        );
    }

    #[test]
    fn all_methods_agree_small() {
        for family in Family::ALL {
            for p in 0..=6u32 {
                for q in 0..=6u32 {
                    if family.is_triangular() && q > p {
                        continue;
                    }
                    let rec =
                        family_value(family, p, q, ValueMethod::Recurrence).unwrap();
                    let closed =
                        family_value(family, p, q, ValueMethod::Closed).unwrap();
                    let oracle = family_value(
                        family,
                        p,
                        q,
                        ValueMethod::Oracle { budget: DEFAULT_BUDGET },
                    )
                    .unwrap();
                    assert_eq!(rec, closed, "{} ({p},{q})", family.name());
                    assert_eq!(rec, oracle, "{} ({p},{q})", family.name());
                }
            }
        }
    }
}
