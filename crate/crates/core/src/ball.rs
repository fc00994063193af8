//! Breadth-first enumeration of the ball of bounded Coxeter length.
//!
//! Right multiplication by each generator takes the frontier at length L to
//! candidates at length L - 1 or L + 1; the unseen ones are exactly the
//! ones at L + 1, so the frontier depth equals the Coxeter length.

use std::collections::HashSet;

use crate::error::Error;
use crate::perm::AffinePermutation;

/// Budget applied when the caller does not supply one.
pub const DEFAULT_BALL_BUDGET: usize = 1_000_000;

/// All elements of length at most L, grouped by length; each level is
/// sorted by window for deterministic output.
pub struct Ball {
    n: usize,
    levels: Vec<Vec<AffinePermutation>>,
}

impl Ball {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[Vec<AffinePermutation>] {
        &self.levels
    }

    pub fn max_length(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &AffinePermutation> {
        self.levels.iter().flatten()
    }
}

/// Enumerates the ball of radius `max_length`. Errors once more than
/// `budget` elements would be retained; partial results are never returned.
pub fn enumerate_ball(n: usize, max_length: usize, budget: usize) -> Result<Ball, Error> {
    let identity = AffinePermutation::identity(n)?;
    let mut seen: HashSet<AffinePermutation> = HashSet::new();
    seen.insert(identity.clone());
    if budget < 1 {
        return Err(Error::BudgetExceeded(budget));
    }
    let mut levels = vec![vec![identity]];
    for _ in 0..max_length {
        let mut next = Vec::new();
        for w in levels.last().unwrap() {
            for i in 1..=n {
                let candidate = w.right_multiply(i);
                if seen.insert(candidate.clone()) {
                    if seen.len() > budget {
                        return Err(Error::BudgetExceeded(budget));
                    }
                    next.push(candidate);
                }
            }
        }
        next.sort();
        levels.push(next);
    }
    Ok(Ball { n, levels })
}
