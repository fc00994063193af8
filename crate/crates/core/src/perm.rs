//! Affine permutations of type A in window notation.
//!
//! An element w of the affine symmetric group on n strands is a bijection
//! of the integers with w(t + n) = w(t) + n and w(1) + ... + w(n) equal to
//! n(n+1)/2. The window `[w(1), ..., w(n)]` determines w, and a vector of
//! n integers is a valid window iff its entries are pairwise non-congruent
//! mod n and sum to n(n+1)/2.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::word::CoxeterWord;

/// Element of the affine symmetric group of rank n (type A, n - 1 tilde),
/// stored as its window `[w(1), ..., w(n)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

/// Representative of t mod n in 1..=n.
fn residue(t: i64, n: usize) -> usize {
    let n = n as i64;
    let r = t.rem_euclid(n);
    (if r == 0 { n } else { r }) as usize
}

impl AffinePermutation {
    /// The identity, window `[1, 2, ..., n]`. Rank must be at least 3.
    pub fn identity(n: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        Ok(Self {
            window: (1..=n as i64).collect(),
        })
    }

    /// Coxeter generator s_i for i in 1..=n: sends t to t+1 when t = i mod n,
    /// to t-1 when t = i+1 mod n, and fixes t otherwise.
    pub fn generator(n: usize, i: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let up = i;
        let down = if i == n { 1 } else { i + 1 };
        let window = (1..=n)
            .map(|t| {
                if t == up {
                    t as i64 + 1
                } else if t == down {
                    t as i64 - 1
                } else {
                    t as i64
                }
            })
            .collect();
        Ok(Self { window })
    }

    /// Builds an element from its window, validating both window invariants.
    pub fn from_window(values: Vec<i64>) -> Result<Self, Error> {
        let n = values.len();
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        for p in 0..n {
            for q in p + 1..n {
                if residue(values[p], n) == residue(values[q], n) {
                    return Err(Error::ResidueCollision {
                        a: values[p],
                        b: values[q],
                        n,
                    });
                }
            }
        }
        let sum: i64 = values.iter().sum();
        let expected = (n as i64) * (n as i64 + 1) / 2;
        if sum != expected {
            return Err(Error::WindowSum { sum, expected, n });
        }
        Ok(Self { window: values })
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(p, &v)| v == p as i64 + 1)
    }

    /// Image of any integer, by periodicity from the window.
    pub fn apply(&self, t: i64) -> i64 {
        let n = self.rank();
        let r = residue(t, n);
        let k = (t - r as i64) / n as i64;
        self.window[r - 1] + k * n as i64
    }

    /// Left-action composition: (self * other)(t) = self(other(t)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in compose");
        let window = (1..=self.rank() as i64)
            .map(|t| self.apply(other.apply(t)))
            .collect();
        Self { window }
    }

    /// Inverse permutation, computed windowwise: if w(r) = q + kn with q in
    /// 1..=n, then w^{-1}(q) = r - kn. Each window entry lands in a distinct
    /// residue class, so this fills every slot exactly once.
    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut window = vec![0i64; n];
        for (p, &v) in self.window.iter().enumerate() {
            let r = p as i64 + 1;
            let q = residue(v, n);
            let k = (v - q as i64) / n as i64;
            window[q - 1] = r - k * n as i64;
        }
        Self { window }
    }

    /// True iff multiplying by s_i on the right shortens the element,
    /// i.e. w(i) > w(i+1). Index i must lie in 1..=n.
    pub fn is_right_descent(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.rank(), "descent index out of range");
        self.apply(i as i64) > self.apply(i as i64 + 1)
    }

    pub fn smallest_right_descent(&self) -> Option<usize> {
        (1..=self.rank()).find(|&i| self.is_right_descent(i))
    }

    /// w * s_i: for i < n swaps window entries i and i+1; for i = n the new
    /// first entry is w(n) - n and the new last entry is w(1) + n.
    pub fn right_multiply(&self, i: usize) -> Self {
        let n = self.rank();
        assert!(i >= 1 && i <= n, "generator index out of range");
        let mut window = self.window.clone();
        if i < n {
            window.swap(i - 1, i);
        } else {
            window[0] = self.window[n - 1] - n as i64;
            window[n - 1] = self.window[0] + n as i64;
        }
        Self { window }
    }

    /// s_i * w: applies s_i to every window value.
    pub fn left_multiply(&self, i: usize) -> Self {
        let n = self.rank();
        assert!(i >= 1 && i <= n, "generator index out of range");
        let down = if i == n { 1 } else { i + 1 };
        let window = self
            .window
            .iter()
            .map(|&v| {
                let r = residue(v, n);
                if r == i {
                    v + 1
                } else if r == down {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        Self { window }
    }

    /// Coxeter length, via greedy descent stripping. Each strip shortens the
    /// element by exactly one, so the number of strips is the length.
    pub fn length(&self) -> usize {
        let mut w = self.clone();
        let mut len = 0;
        while let Some(i) = w.smallest_right_descent() {
            w = w.right_multiply(i);
            len += 1;
        }
        debug_assert!(w.is_identity(), "descent-free affine permutation must be the identity");
        len
    }

    /// Number of inversion classes: pairs (i, j) with 1 <= i <= n, i < j and
    /// w(i) > w(j). Agrees with `length`. The scan over j stops at
    /// i + spread + 2n, beyond which w(j) > w(i) always.
    pub fn inversion_count(&self) -> usize {
        let n = self.rank() as i64;
        let spread = self.window.iter().max().unwrap() - self.window.iter().min().unwrap();
        let mut count = 0;
        for i in 1..=n {
            let wi = self.apply(i);
            for j in i + 1..=i + spread + 2 * n {
                if wi > self.apply(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Deterministic reduced word: reverse of the smallest-descent strip
    /// sequence, so w = s_{i_1} ... s_{i_r} with letters in recorded order.
    pub fn canonical_reduced_word(&self) -> CoxeterWord {
        let mut w = self.clone();
        let mut strips = Vec::new();
        while let Some(i) = w.smallest_right_descent() {
            w = w.right_multiply(i);
            strips.push(i);
        }
        strips.reverse();
        CoxeterWord::new(self.rank(), strips).expect("strip letters are valid generators")
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (p, v) in self.window.iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for AffinePermutation {
    type Err = Error;

    /// Parses window notation: `[2,1,3]`, optional spaces after commas.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("window must be bracketed, got {t:?}")))?;
        let values = inner
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad window entry {:?}", piece.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_window(values)
    }
}
