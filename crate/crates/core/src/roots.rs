//! Roots of the affine type A system, as integer vectors over the simple
//! roots alpha_1, ..., alpha_n.
//!
//! The pairing is the affine Cartan form of the n-cycle: <alpha_i, alpha_i>
//! is 2, adjacent simple roots pair to -1, all other pairs to 0. The null
//! root delta = alpha_1 + ... + alpha_n pairs to 0 with everything; a root
//! v is real iff <v, v> = 2.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::perm::AffinePermutation;
use crate::word::CoxeterWord;

/// Integer combination of the simple roots of rank n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Result<Self, Error> {
        if coeffs.len() < 3 {
            return Err(Error::RankTooSmall(coeffs.len()));
        }
        Ok(Self { coeffs })
    }

    /// Simple root alpha_i, i in 1..=n.
    pub fn simple(n: usize, i: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut coeffs = vec![0; n];
        coeffs[i - 1] = 1;
        Ok(Self { coeffs })
    }

    /// The null root delta, all coefficients 1.
    pub fn delta(n: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        Ok(Self { coeffs: vec![1; n] })
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Positive means nonzero with all coefficients >= 0.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|&c| c <= 0)
    }

    /// Affine Cartan pairing on the n-cycle, symmetric and bilinear.
    pub fn pairing(&self, other: &Root) -> i64 {
        let n = self.rank();
        assert_eq!(n, other.rank(), "rank mismatch in pairing");
        let mut total = 0;
        for i in 0..n {
            let prev = other.coeffs[(i + n - 1) % n];
            let next = other.coeffs[(i + 1) % n];
            total += self.coeffs[i] * (2 * other.coeffs[i] - prev - next);
        }
        total
    }

    /// True for real roots: <v, v> = 2.
    pub fn is_real(&self) -> bool {
        self.pairing(self) == 2
    }

    /// Simple reflection s_i on root space: v - <v, alpha_i> alpha_i, which
    /// only changes coefficient i.
    pub fn reflected(&self, i: usize) -> Root {
        let n = self.rank();
        assert!(i >= 1 && i <= n, "reflection index out of range");
        let prev = self.coeffs[(i - 1 + n - 1) % n];
        let next = self.coeffs[i % n];
        let pair_with_alpha = 2 * self.coeffs[i - 1] - prev - next;
        let mut coeffs = self.coeffs.clone();
        coeffs[i - 1] -= pair_with_alpha;
        Root { coeffs }
    }

    /// Rotation by the diagram automorphism: coefficient of alpha_i moves to
    /// alpha_{i+1}, cyclically.
    pub fn rotated(&self) -> Root {
        let n = self.rank();
        let mut coeffs = vec![0; n];
        for i in 0..n {
            coeffs[(i + 1) % n] = self.coeffs[i];
        }
        Root { coeffs }
    }
}

impl fmt::Display for Root {
    /// Renders as a sum of simple roots, e.g. `a1+a2` or `2a1-a3`; zero is
    /// `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c > 0 && !first {
                write!(f, "+")?;
            }
            match c {
                1 => {}
                -1 => write!(f, "-")?,
                _ => write!(f, "{c}")?,
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Applies the word to a root as a function: the last letter acts first, so
/// act(u.v, r) = act(u, act(v, r)).
pub fn act(word: &CoxeterWord, root: &Root) -> Root {
    assert_eq!(word.n(), root.rank(), "rank mismatch in act");
    let mut r = root.clone();
    for &l in word.letters().iter().rev() {
        r = r.reflected(l);
    }
    r
}

/// Inversion set N(w): positive roots sent negative by w. Computed from the
/// canonical reduced word s_{i_1} ... s_{i_r} as the roots
/// s_{i_r} ... s_{i_{j+1}} (alpha_{i_j}) for j = r, ..., 1. Its size is the
/// length of w, and it depends only on w, not on the chosen reduced word.
pub fn inversion_set(w: &AffinePermutation) -> BTreeSet<Root> {
    inversion_set_of_word(&w.canonical_reduced_word())
}

/// Inversion set computed by peeling the given word; input must be reduced
/// for the result to have one root per letter.
pub fn inversion_set_of_word(word: &CoxeterWord) -> BTreeSet<Root> {
    let n = word.n();
    let letters = word.letters();
    let mut set = BTreeSet::new();
    for j in 0..letters.len() {
        let mut root = Root::simple(n, letters[j]).expect("letters validated");
        for &l in &letters[j + 1..] {
            root = root.reflected(l);
        }
        set.insert(root);
    }
    set
}

/// Root criterion for full commutativity: no two roots in N(w) pair to -1.
/// Two real roots pairing to -1 have a real root as their sum.
pub fn root_criterion_holds(w: &AffinePermutation) -> bool {
    let inv: Vec<Root> = inversion_set(w).into_iter().collect();
    for p in 0..inv.len() {
        for q in p + 1..inv.len() {
            if inv[p].pairing(&inv[q]) == -1 {
                return false;
            }
        }
    }
    true
}
