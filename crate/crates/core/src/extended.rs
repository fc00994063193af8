//! The extended affine symmetric group: all bijections u of the integers
//! with u(t + n) = u(t) + n, dropping the window-sum normalization.
//!
//! Every such u factors uniquely as rho^z * w where rho is the shift
//! t -> t + 1 and w lies in the affine symmetric group; z is determined by
//! the window sum. Conjugation by rho rotates the generators:
//! rho s_i rho^{-1} = s_{i+1}, indices mod n.

use std::fmt;

use crate::error::Error;
use crate::pattern;
use crate::perm::AffinePermutation;
use crate::word;

/// Element rho^shift * body of the extended group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedAffinePermutation {
    shift: i64,
    body: AffinePermutation,
}

impl ExtendedAffinePermutation {
    pub fn new(shift: i64, body: AffinePermutation) -> Self {
        Self { shift, body }
    }

    pub fn identity(n: usize) -> Result<Self, Error> {
        Ok(Self::new(0, AffinePermutation::identity(n)?))
    }

    /// The rotation rho: t -> t + 1, window [2, 3, ..., n+1].
    pub fn rho(n: usize) -> Result<Self, Error> {
        Ok(Self::new(1, AffinePermutation::identity(n)?))
    }

    pub fn from_body(body: AffinePermutation) -> Self {
        Self::new(0, body)
    }

    /// Builds an element from its window. The entries must be pairwise
    /// non-congruent mod n; the sum determines the power of rho, since
    /// distinct residues force sum = n(n+1)/2 mod n.
    pub fn from_window(values: Vec<i64>) -> Result<Self, Error> {
        let n = values.len();
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        let sum: i64 = values.iter().sum();
        let base = (n as i64) * (n as i64 + 1) / 2;
        // Distinct residues force sum = base mod n, so the body below
        // validates cleanly; for invalid input the rounded shift leaves a
        // residue collision for the body constructor to report.
        let shift = (sum - base).div_euclid(n as i64);
        let body_window = values.iter().map(|v| v - shift).collect();
        Ok(Self::new(shift, AffinePermutation::from_window(body_window)?))
    }

    pub fn rank(&self) -> usize {
        self.body.rank()
    }

    pub fn shift_power(&self) -> i64 {
        self.shift
    }

    pub fn body(&self) -> &AffinePermutation {
        &self.body
    }

    pub fn window(&self) -> Vec<i64> {
        self.body.window().iter().map(|v| v + self.shift).collect()
    }

    pub fn apply(&self, t: i64) -> i64 {
        self.body.apply(t) + self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.body.is_identity()
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in compose");
        let window = (1..=self.rank() as i64)
            .map(|t| self.apply(other.apply(t)))
            .collect();
        Self::from_window(window).expect("composite of valid windows is valid")
    }

    pub fn inverse(&self) -> Self {
        let inv_body = self.body.inverse();
        let window = (1..=self.rank() as i64)
            .map(|t| inv_body.apply(t - self.shift))
            .collect();
        Self::from_window(window).expect("inverse of a valid window is valid")
    }

    /// Length of the body; rho itself has length 0.
    pub fn length(&self) -> usize {
        self.body.length()
    }

    /// 321-avoidance is invariant under shifting all values, so it delegates
    /// to the body.
    pub fn is_321_avoiding(&self) -> bool {
        pattern::is_321_avoiding(&self.body)
    }

    /// Full commutativity of an extended element is defined through its
    /// body.
    pub fn is_fully_commutative(&self) -> Result<bool, Error> {
        word::is_fully_commutative(&self.body)
    }
}

impl fmt::Display for ExtendedAffinePermutation {
    /// Renders the decomposition, e.g. `rho^2 * [1,2,3]`; pure body elements
    /// render as their window.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.body)
        } else {
            write!(f, "rho^{} * {}", self.shift, self.body)
        }
    }
}

impl fmt::Debug for ExtendedAffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
