//! Words in the Coxeter generators s_1, ..., s_n.
//!
//! Generators s_i and s_j commute iff i and j are not adjacent on the cycle
//! of residues mod n; adjacent pairs satisfy a braid relation of order 3.
//! For n = 3 every pair of distinct generators is adjacent, so commutation
//! classes are singletons there.
//!
//! An element is fully commutative when no reduced word for it contains a
//! factor s_i s_j s_i with i, j adjacent. It suffices to scan one
//! commutation class: braid factors either appear somewhere in the class or
//! nowhere at all.

use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt;

use crate::error::Error;
use crate::perm::AffinePermutation;

/// Cap on commutation class size; exceeding it is a hard error, never a
/// silent truncation.
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

/// Word in the generators of the rank-n affine symmetric group.
/// Letters lie in 1..=n; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterWord {
    n: usize,
    letters: Vec<usize>,
}

/// True iff s_i and s_j do not commute, i.e. i - j = +-1 mod n.
pub fn generators_adjacent(n: usize, i: usize, j: usize) -> bool {
    debug_assert!(i >= 1 && i <= n && j >= 1 && j <= n);
    let d = (i + n - j) % n;
    d == 1 || d == n - 1
}

impl CoxeterWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::RankTooSmall(n));
        }
        for &l in &letters {
            if l < 1 || l > n {
                return Err(Error::IndexOutOfRange { index: l, n });
            }
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Result<Self, Error> {
        Self::new(n, Vec::new())
    }

    /// Parses dot-separated letters, e.g. `1.2.1`; empty input is the
    /// identity word.
    pub fn parse(n: usize, s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t.is_empty() {
            return Self::empty(n);
        }
        let letters = t
            .split('.')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad word letter {:?}", piece.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Product s_{i_1} ... s_{i_r}, evaluated left to right.
    pub fn evaluate(&self) -> AffinePermutation {
        let mut w = AffinePermutation::identity(self.n).expect("rank checked at construction");
        for &l in &self.letters {
            w = w.right_multiply(l);
        }
        w
    }

    /// A word is reduced iff its length equals the Coxeter length of its
    /// product.
    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.letters.len()
    }

    /// True iff some factor s_i s_j s_i with i, j adjacent occurs.
    pub fn has_braid_factor(&self) -> bool {
        self.letters.windows(3).any(|t| {
            t[0] == t[2] && t[0] != t[1] && generators_adjacent(self.n, t[0], t[1])
        })
    }

    /// All words reachable by swapping adjacent commuting letters. Requires a
    /// reduced word; errors if the class would exceed `cap`.
    pub fn commutation_class(&self, cap: usize) -> Result<BTreeSet<CoxeterWord>, Error> {
        if !self.is_reduced() {
            return Err(Error::NotReduced);
        }
        let mut class = BTreeSet::new();
        let mut queue = VecDeque::new();
        class.insert(self.clone());
        queue.push_back(self.clone());
        while let Some(word) = queue.pop_front() {
            for p in 0..word.letters.len().saturating_sub(1) {
                let (a, b) = (word.letters[p], word.letters[p + 1]);
                if a == b || generators_adjacent(self.n, a, b) {
                    continue;
                }
                let mut swapped = word.clone();
                swapped.letters.swap(p, p + 1);
                if class.insert(swapped.clone()) {
                    if class.len() > cap {
                        return Err(Error::ClassCapExceeded(cap));
                    }
                    queue.push_back(swapped);
                }
            }
        }
        Ok(class)
    }
}

impl fmt::Display for CoxeterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, l) in self.letters.iter().enumerate() {
            if p > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CoxeterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Full commutativity by the word route: walk the commutation class of the
/// canonical reduced word, returning false as soon as any member exhibits a
/// braid factor.
pub fn is_fully_commutative(w: &AffinePermutation) -> Result<bool, Error> {
    is_fully_commutative_capped(w, DEFAULT_CLASS_CAP)
}

pub fn is_fully_commutative_capped(w: &AffinePermutation, cap: usize) -> Result<bool, Error> {
    let seed = w.canonical_reduced_word();
    if seed.has_braid_factor() {
        return Ok(false);
    }
    let mut class = BTreeSet::new();
    let mut queue = VecDeque::new();
    class.insert(seed.clone());
    queue.push_back(seed);
    while let Some(word) = queue.pop_front() {
        for p in 0..word.letters.len().saturating_sub(1) {
            let (a, b) = (word.letters[p], word.letters[p + 1]);
            if a == b || generators_adjacent(word.n, a, b) {
                continue;
            }
            let mut swapped = word.clone();
            swapped.letters.swap(p, p + 1);
            if !class.contains(&swapped) {
                if swapped.has_braid_factor() {
                    return Ok(false);
                }
                if class.len() + 1 > cap {
                    return Err(Error::ClassCapExceeded(cap));
                }
                class.insert(swapped.clone());
                queue.push_back(swapped);
            }
        }
    }
    Ok(true)
}

/// For a reduced word of a fully commutative element: between any two
/// consecutive occurrences of a letter s, both neighbors of s on the residue
/// cycle must occur. Errors on non-reduced input or a non-FC product.
pub fn neighbors_between_repeats(word: &CoxeterWord) -> Result<bool, Error> {
    if !word.is_reduced() {
        return Err(Error::NotReduced);
    }
    if !is_fully_commutative(&word.evaluate())? {
        return Err(Error::NotFullyCommutative);
    }
    let n = word.n;
    for s in 1..=n {
        let positions: Vec<usize> = word
            .letters
            .iter()
            .enumerate()
            .filter_map(|(p, &l)| (l == s).then_some(p))
            .collect();
        let before = if s == 1 { n } else { s - 1 };
        let after = if s == n { 1 } else { s + 1 };
        for pair in positions.windows(2) {
            let between = &word.letters[pair[0] + 1..pair[1]];
            if !between.contains(&before) || !between.contains(&after) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_cyclic() {
        assert!(generators_adjacent(4, 1, 2));
        assert!(generators_adjacent(4, 4, 1));
        assert!(!generators_adjacent(4, 1, 3));
        assert!(!generators_adjacent(4, 2, 4));
        // All distinct pairs are adjacent on the triangle.
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(generators_adjacent(3, i, j), i != j);
            }
        }
    }

    #[test]
    fn word_validation_and_parse() {
        assert!(CoxeterWord::new(3, vec![1, 2, 4]).is_err());
        assert!(CoxeterWord::new(3, vec![0]).is_err());
        assert_eq!(CoxeterWord::parse(3, "1.2.1").unwrap().letters(), &[1, 2, 1]);
        assert_eq!(CoxeterWord::parse(3, "").unwrap().letters(), &[] as &[usize]);
        assert!(matches!(CoxeterWord::parse(3, "1.x"), Err(Error::Parse(_))));
        assert_eq!(CoxeterWord::parse(3, "1.2.1").unwrap().to_string(), "1.2.1");
        assert_eq!(CoxeterWord::empty(5).unwrap().to_string(), "");
    }

    #[test]
    fn evaluate_golden() {
        assert_eq!(
            CoxeterWord::parse(3, "1.2").unwrap().evaluate().window(),
            &[2, 3, 1]
        );
        assert_eq!(
            CoxeterWord::parse(3, "1.2.1").unwrap().evaluate().window(),
            &[3, 2, 1]
        );
        // The two sides of the braid relation agree.
        assert_eq!(
            CoxeterWord::parse(3, "1.2.1").unwrap().evaluate(),
            CoxeterWord::parse(3, "2.1.2").unwrap().evaluate()
        );
    }

    #[test]
    fn reduced_detection() {
        assert!(CoxeterWord::parse(3, "1.2.1").unwrap().is_reduced());
        assert!(!CoxeterWord::parse(3, "1.1").unwrap().is_reduced());
        assert!(!CoxeterWord::parse(3, "1.2.1.2").unwrap().is_reduced());
        assert!(CoxeterWord::empty(3).unwrap().is_reduced());
    }

    #[test]
    fn commutation_classes() {
        // n = 3: no two generators commute, classes are singletons.
        let w = CoxeterWord::parse(3, "1.2.1").unwrap();
        assert_eq!(w.commutation_class(100).unwrap().len(), 1);
        // n = 4: s_1 and s_3 commute.
        let w = CoxeterWord::parse(4, "1.3").unwrap();
        let class = w.commutation_class(100).unwrap();
        assert_eq!(class.len(), 2);
        assert!(class.contains(&CoxeterWord::parse(4, "3.1").unwrap()));
        // Cap is a hard error.
        assert_eq!(w.commutation_class(1), Err(Error::ClassCapExceeded(1)));
        // Non-reduced input is rejected.
        assert_eq!(
            CoxeterWord::parse(3, "1.1").unwrap().commutation_class(10),
            Err(Error::NotReduced)
        );
    }

    #[test]
    fn braid_factor_detection() {
        assert!(CoxeterWord::parse(3, "1.2.1").unwrap().has_braid_factor());
        assert!(!CoxeterWord::parse(3, "1.2").unwrap().has_braid_factor());
        // s_1 s_3 s_1 is not a braid factor for n = 4: the letters commute.
        assert!(!CoxeterWord::parse(4, "1.3.1").unwrap().has_braid_factor());
        assert!(CoxeterWord::parse(4, "4.1.4").unwrap().has_braid_factor());
    }

    #[test]
    fn fully_commutative_golden() {
        let fc = |win: &[i64]| {
            is_fully_commutative(&AffinePermutation::from_window(win.to_vec()).unwrap()).unwrap()
        };
        assert!(fc(&[1, 2, 3]));
        assert!(fc(&[2, 3, 1]));
        assert!(!fc(&[3, 2, 1]));
        assert!(fc(&[0, 2, 4]));
        let s2s4 = CoxeterWord::parse(5, "2.4").unwrap().evaluate();
        assert!(is_fully_commutative(&s2s4).unwrap());
    }

    #[test]
    fn braid_hidden_behind_commuting_swap() {
        // 1.3.2.1.3 has no braid factor, but swapping the commuting prefix
        // gives 3.1.2.1.3, which does. The element is therefore not FC.
        let w = CoxeterWord::parse(4, "1.3.2.1.3").unwrap();
        assert!(w.is_reduced());
        assert!(!w.has_braid_factor());
        let class = w.commutation_class(1000).unwrap();
        assert!(class.iter().any(CoxeterWord::has_braid_factor));
        assert!(!is_fully_commutative(&w.evaluate()).unwrap());
    }

    #[test]
    fn neighbor_rule_golden() {
        // 2.1.3.2 for n = 4: between the two 2s both neighbors 1 and 3 occur.
        let w = CoxeterWord::parse(4, "2.1.3.2").unwrap();
        assert!(w.is_reduced());
        assert_eq!(neighbors_between_repeats(&w), Ok(true));
        // Non-reduced input errors.
        assert_eq!(
            neighbors_between_repeats(&CoxeterWord::parse(4, "1.1").unwrap()),
            Err(Error::NotReduced)
        );
        // Non-FC product errors.
        assert_eq!(
            neighbors_between_repeats(&CoxeterWord::parse(3, "1.2.1").unwrap()),
            Err(Error::NotFullyCommutative)
        );
    }
}
