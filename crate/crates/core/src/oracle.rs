//! Ground truth by literal enumeration.
//!
//! The oracle walks every step sequence by depth-first search and counts
//! complete paths one by one. It deliberately uses no dynamic programming
//! and no memoization, so its correctness does not depend on the
//! recurrences it is used to validate.

use crate::error::Error;
use crate::ExactInt;
use std::fmt;

/// A single lattice step. The declaration order is the lexicographic
/// order used for path listings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Step {
    /// (0, +1)
    Right,
    /// (+1, 0)
    Down,
    /// (+1, +1)
    Diagonal,
}

impl Step {
    pub fn delta(self) -> (u32, u32) {
        match self {
            Step::Right => (0, 1),
            Step::Down => (1, 0),
            Step::Diagonal => (1, 1),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::Right => 'R',
            Step::Down => 'D',
            Step::Diagonal => 'X',
        }
    }
}

/// The two permitted step alphabets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepSet {
    /// Right and down steps only.
    RightDown,
    /// Right, down and diagonal steps.
    RightDownDiagonal,
}

impl StepSet {
    pub fn steps(self) -> &'static [Step] {
        match self {
            StepSet::RightDown => &[Step::Right, Step::Down],
            StepSet::RightDownDiagonal => {
                &[Step::Right, Step::Down, Step::Diagonal]
            }
        }
    }
}

/// Where paths may go.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Unrestricted,
    /// Every visited point, endpoints included, satisfies q <= p.
    Subdiagonal,
}

impl Constraint {
    fn allows(self, p: u32, q: u32) -> bool {
        match self {
            Constraint::Unrestricted => true,
            Constraint::Subdiagonal => q <= p,
        }
    }
}

/// Grid point: `p` is the row coordinate (growing downward), `q` the
/// column coordinate (growing to the right).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticePoint {
    pub p: u32,
    pub q: u32,
}

impl LatticePoint {
    pub fn new(p: u32, q: u32) -> Self {
        LatticePoint { p, q }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// An exact count together with the query that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCount {
    pub target: LatticePoint,
    pub steps: StepSet,
    pub constraint: Constraint,
    pub count: ExactInt,
}

/// A path listing, possibly cut short at the caller's limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathList {
    pub paths: Vec<Vec<Step>>,
    pub truncated: bool,
}

/// Default cap on DFS node expansions; enough for every 9x9 query.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

struct Dfs {
    target: LatticePoint,
    steps: &'static [Step],
    constraint: Constraint,
    expansions: u64,
    budget: u64,
    count: u64,
}

impl Dfs {
    fn walk(&mut self, p: u32, q: u32) -> Result<(), Error> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        if p == self.target.p && q == self.target.q {
            self.count += 1;
            return Ok(());
        }
        for &step in self.steps {
            let (dp, dq) = step.delta();
            let (np, nq) = (p + dp, q + dq);
            if np > self.target.p || nq > self.target.q {
                continue;
            }
            if !self.constraint.allows(np, nq) {
                continue;
            }
            self.walk(np, nq)?;
        }
        Ok(())
    }
}

/// Counts every step sequence from (0,0) to `target` that stays inside
/// `constraint`, by visiting each complete path once. Fails with
/// [`Error::BudgetExceeded`] instead of returning a partial count.
pub fn count_paths(
    target: LatticePoint,
    steps: StepSet,
    constraint: Constraint,
    budget: u64,
) -> Result<PathCount, Error> {
    let mut dfs = Dfs {
        target,
        steps: steps.steps(),
        constraint,
        expansions: 0,
        budget,
        count: 0,
    };
    if constraint.allows(0, 0) {
        dfs.walk(0, 0)?;
    }
    Ok(PathCount {
        target,
        steps,
        constraint,
        count: ExactInt::from(dfs.count),
    })
}

/// Lists paths in lexicographic step order (Right < Down < Diagonal),
/// stopping after `max_paths`; `truncated` reports whether more exist.
pub fn list_paths(
    target: LatticePoint,
    steps: StepSet,
    constraint: Constraint,
    max_paths: usize,
) -> PathList {
    fn walk(
        p: u32,
        q: u32,
        target: LatticePoint,
        steps: &[Step],
        constraint: Constraint,
        prefix: &mut Vec<Step>,
        out: &mut Vec<Vec<Step>>,
        limit: usize,
    ) -> bool {
        // Returns true once the limit has been passed.
        if p == target.p && q == target.q {
            if out.len() == limit {
                return true;
            }
            out.push(prefix.clone());
            return false;
        }
        for &step in steps {
            let (dp, dq) = step.delta();
            let (np, nq) = (p + dp, q + dq);
            if np > target.p || nq > target.q || !constraint.allows(np, nq) {
                continue;
            }
            prefix.push(step);
            let full = walk(np, nq, target, steps, constraint, prefix, out, limit);
            prefix.pop();
            if full {
                return true;
            }
        }
        false
    }

    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let truncated = constraint.allows(0, 0)
        && walk(
            0,
            0,
            target,
            steps.steps(),
            constraint,
            &mut prefix,
            &mut out,
            max_paths,
        );
    PathList {
        paths: out,
        truncated,
    }
}

/// Renders a path as its step letters, e.g. "DDRR".
pub fn path_string(path: &[Step]) -> String {
    path.iter().map(|s| s.letter()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Constraint::*;
    use StepSet::*;

    fn count(p: u32, q: u32, steps: StepSet, constraint: Constraint) -> ExactInt {
        count_paths(LatticePoint::new(p, q), steps, constraint, DEFAULT_BUDGET)
            .unwrap()
            .count
    }

    #[test]
    fn empty_path_counts_once() {
        for steps in [RightDown, RightDownDiagonal] {
            for constraint in [Unrestricted, Subdiagonal] {
                assert_eq!(count(0, 0, steps, constraint), ExactInt::from(1));
            }
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(count(3, 3, RightDown, Subdiagonal), ExactInt::from(5));
        assert_eq!(
            count(4, 4, RightDownDiagonal, Subdiagonal),
            ExactInt::from(90)
        );
        assert_eq!(count(1, 1, RightDownDiagonal, Unrestricted), ExactInt::from(3));
    }

    #[test]
    fn subdiagonal_excludes_upper_targets() {
        assert_eq!(count(1, 2, RightDown, Subdiagonal), ExactInt::from(0));
        assert_eq!(count(0, 3, RightDownDiagonal, Subdiagonal), ExactInt::from(0));
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let result = count_paths(
            LatticePoint::new(6, 6),
            RightDownDiagonal,
            Unrestricted,
            100,
        );
        assert!(matches!(result, Err(Error::BudgetExceeded { budget: 100 })));
    }

    #[test]
    fn listing_order_and_content() {
        use Step::*;
        let l = list_paths(LatticePoint::new(1, 1), RightDown, Unrestricted, 10);
        assert_eq!(l.paths, vec![vec![Right, Down], vec![Down, Right]]);
        assert!(!l.truncated);

        let l = list_paths(LatticePoint::new(1, 1), RightDown, Subdiagonal, 10);
        assert_eq!(l.paths, vec![vec![Down, Right]]);

        let l = list_paths(LatticePoint::new(1, 1), RightDownDiagonal, Unrestricted, 10);
        assert_eq!(l.paths.len(), 3);
        assert_eq!(
            l.paths,
            vec![vec![Right, Down], vec![Down, Right], vec![Diagonal]]
        );
    }

    #[test]
    fn listing_truncation_flag() {
        let l = list_paths(LatticePoint::new(2, 2), RightDown, Unrestricted, 3);
        assert_eq!(l.paths.len(), 3);
        assert!(l.truncated);
        let l = list_paths(LatticePoint::new(2, 2), RightDown, Unrestricted, 6);
        assert_eq!(l.paths.len(), 6);
        assert!(!l.truncated);
    }

    #[test]
    fn listed_paths_replay_within_constraint() {
        let target = LatticePoint::new(4, 3);
        for steps in [RightDown, RightDownDiagonal] {
            for constraint in [Unrestricted, Subdiagonal] {
                let l = list_paths(target, steps, constraint, 1000);
                for path in &l.paths {
                    assert!(path.len() <= (target.p + target.q) as usize);
                    let (mut p, mut q) = (0, 0);
                    assert!(constraint.allows(p, q));
                    for step in path {
                        let (dp, dq) = step.delta();
                        p += dp;
                        q += dq;
                        assert!(constraint.allows(p, q));
                    }
                    assert_eq!((p, q), (target.p, target.q));
                }
            }
        }
    }

    #[test]
    fn listing_matches_count() {
        for p in 0..=4u32 {
            for q in 0..=4u32 {
                for steps in [RightDown, RightDownDiagonal] {
                    for constraint in [Unrestricted, Subdiagonal] {
                        let n = count(p, q, steps, constraint);
                        let l = list_paths(
                            LatticePoint::new(p, q),
                            steps,
                            constraint,
                            100_000,
                        );
                        assert_eq!(ExactInt::from(l.paths.len() as u64), n);
                        assert!(!l.truncated);
                    }
                }
            }
        }
    }

    #[test]
    fn path_string_rendering() {
        use Step::*;
        assert_eq!(path_string(&[Down, Down, Right, Right]), "DDRR");
        assert_eq!(path_string(&[Diagonal]), "X");
    }
}
