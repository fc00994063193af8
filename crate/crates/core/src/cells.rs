//! Chain statistic, partitions, and two-sided cell classification.
//!
//! For an affine permutation w, d_k is the largest size of a union of k
//! disjoint sets X_1, ..., X_k of integers such that all members of the
//! union are pairwise non-congruent mod n and w decreases along each X_i.
//! The successive differences of d_1 <= d_2 <= ... form a partition of n
//! (Greene and Kleitman); that partition classifies the two-sided cell
//! of w, orders cells by dominance, and detects full commutativity by
//! whether its first part is at most 2.
//!
//! Since the union takes at most one member per residue class, each X_i
//! projects to a set of residues, and a decreasing pair of integers exists
//! for residues r, q iff some multiple of n lies strictly between r - q and
//! w(r) - w(q). That relation is a strict partial order on the n residues,
//! chains of the order are exactly the residue sets realizable as decreasing
//! chains, and realizability is translation-invariant, so d_k is the maximum
//! k-chain cover in an n-element poset. Dilworth's theorem turns that into
//! a scan over residue subsets by antichain width.

use std::fmt;

use crate::error::Error;
use crate::perm::AffinePermutation;
use crate::word::CoxeterWord;

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {} before {}",
                    pair[0], pair[1]
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Largest part; 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Dominance: every prefix sum of self is >= the matching prefix sum of
    /// other. Only defined between partitions of the same total (panics
    /// otherwise).
    pub fn dominates(&self, other: &Partition) -> bool {
        assert_eq!(
            self.total(),
            other.total(),
            "dominance compares partitions of the same integer"
        );
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Comma form without parentheses, e.g. `2,2,1`.
    pub fn compact(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.compact())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Strict order on window positions 1..=n: r precedes q iff some decreasing
/// pair (x, y) of w has x = r, y = q mod n, iff a multiple of n lies in the
/// open interval (r - q, w(r) - w(q)). Returned as an n x n adjacency
/// matrix, row-major, precedes[r][q].
fn residue_order(w: &AffinePermutation) -> Vec<Vec<bool>> {
    let n = w.rank();
    let mut precedes = vec![vec![false; n]; n];
    for r in 1..=n as i64 {
        for q in 1..=n as i64 {
            if r == q {
                continue;
            }
            let lo = r - q;
            let hi = w.apply(r) - w.apply(q);
            let first_multiple = (lo.div_euclid(n as i64) + 1) * n as i64;
            precedes[(r - 1) as usize][(q - 1) as usize] = first_multiple < hi;
        }
    }
    precedes
}

/// Maximum independent set size (antichain width) for every subset of the
/// poset, by subset dynamic programming over the comparability masks.
fn antichain_widths(precedes: &[Vec<bool>]) -> Vec<u8> {
    let n = precedes.len();
    let mut comparable = vec![0u32; n];
    for v in 0..n {
        for u in 0..n {
            if u != v && (precedes[v][u] || precedes[u][v]) {
                comparable[v] |= 1 << u;
            }
        }
    }
    let mut width = vec![0u8; 1 << n];
    for s in 1usize..1 << n {
        let v = s.trailing_zeros() as usize;
        let without = s & !(1 << v);
        let skip = width[without];
        let take = 1 + width[without & !(comparable[v] as usize)];
        width[s] = skip.max(take);
    }
    width
}

/// d_k: the exact maximum, via Dilworth. A residue subset is coverable by k
/// chains iff its antichain width is at most k.
pub fn max_union_of_chains(w: &AffinePermutation, k: usize) -> usize {
    assert!(k >= 1, "chain count must be positive");
    let profile = chain_profile(w);
    profile[k.min(profile.len()) - 1]
}

/// d_1, d_2, ..., d_t for the first t with d_t = n.
fn chain_profile(w: &AffinePermutation) -> Vec<usize> {
    let n = w.rank();
    let width = antichain_widths(&residue_order(w));
    // best[v] = largest subset whose width is exactly v.
    let mut best = vec![0usize; n + 1];
    for (s, &v) in width.iter().enumerate() {
        let size = s.count_ones() as usize;
        if size > best[v as usize] {
            best[v as usize] = size;
        }
    }
    let mut profile = Vec::new();
    let mut cover = 0usize;
    for k in 1..=n {
        cover = cover.max(best[k]);
        profile.push(cover);
        if cover == n {
            break;
        }
    }
    debug_assert_eq!(*profile.last().unwrap(), n);
    profile
}

/// Shi's sigma: successive differences of the chain statistic, a partition
/// of n by the Greene-Kleitman theorem.
pub fn shi_partition(w: &AffinePermutation) -> Partition {
    let profile = chain_profile(w);
    let mut parts = Vec::with_capacity(profile.len());
    let mut prev = 0usize;
    for &d in &profile {
        parts.push((d - prev) as u32);
        prev = d;
    }
    Partition::new(parts).expect("chain statistic differences must weakly decrease")
}

/// Windowed reference evaluation of d_k: chains are realized greedily inside
/// the positive window [1, n + scale * n * (spread + 2n)] and assembled by a
/// disjoint-subset dynamic program. At scale 1 this already contains a
/// minimal realization of every chain, so enlarging the scale must never
/// change the answer; the verification harness checks that stability.
pub fn max_union_of_chains_windowed(w: &AffinePermutation, k: usize, scale: u32) -> usize {
    assert!(k >= 1, "chain count must be positive");
    assert!(scale >= 1, "window scale must be positive");
    let n = w.rank();
    let spread = w.window().iter().max().unwrap() - w.window().iter().min().unwrap();
    let hi = n as i64 + scale as i64 * n as i64 * (spread + 2 * n as i64);
    let precedes = residue_order(w);

    // A subset is a chain iff pairwise comparable; realize it greedily from
    // its minimal residue and keep it only if the realization stays in the
    // window.
    let mut allowed = vec![false; 1 << n];
    let mut size_of = vec![0u32; 1 << n];
    'subsets: for s in 0usize..1 << n {
        size_of[s] = s.count_ones();
        let members: Vec<usize> = (0..n).filter(|&v| s & (1 << v) != 0).collect();
        for &a in &members {
            for &b in &members {
                if a != b && !precedes[a][b] && !precedes[b][a] {
                    continue 'subsets;
                }
            }
        }
        let mut order = members.clone();
        order.sort_by_key(|&v| members.iter().filter(|&&u| precedes[u][v]).count());
        let mut fits = true;
        if let Some((&head, rest)) = order.split_first() {
            let mut pos = head as i64 + 1;
            let mut val = w.apply(pos);
            for &v in rest {
                let r = v as i64 + 1;
                let shift = (pos - r).div_euclid(n as i64) + 1;
                let next_pos = r + shift * n as i64;
                let next_val = w.apply(r) + shift * n as i64;
                debug_assert!(next_pos > pos && next_val < val, "greedy step must extend the chain");
                pos = next_pos;
                val = next_val;
            }
            fits = pos <= hi;
        }
        allowed[s] = fits;
    }

    // cover[s] after round j: most elements of s coverable by j allowed
    // disjoint chains inside s.
    let mut cover = vec![0u32; 1 << n];
    for _ in 0..k {
        let mut next = cover.clone();
        for s in 0usize..1 << n {
            let mut c = s;
            loop {
                if allowed[c] {
                    let candidate = size_of[c] + cover[s & !c];
                    if candidate > next[s] {
                        next[s] = candidate;
                    }
                }
                if c == 0 {
                    break;
                }
                c = (c - 1) & s;
            }
        }
        cover = next;
    }
    cover[(1 << n) - 1] as usize
}

pub fn two_sided_leq(y: &AffinePermutation, w: &AffinePermutation) -> bool {
    assert_eq!(y.rank(), w.rank(), "rank mismatch in cell order");
    shi_partition(y).dominates(&shi_partition(w))
}

pub fn same_two_sided_cell(y: &AffinePermutation, w: &AffinePermutation) -> bool {
    assert_eq!(y.rank(), w.rank(), "rank mismatch in cell comparison");
    shi_partition(y) == shi_partition(w)
}

/// Full commutativity read off the cell: first part of sigma at most 2.
pub fn is_fc_by_partition(w: &AffinePermutation) -> bool {
    shi_partition(w).first() <= 2
}

/// Number of two-sided cells containing fully commutative elements.
pub fn fc_cell_count(n: usize) -> Result<usize, Error> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    Ok(n / 2 + 1)
}

/// One representative per FC cell: s_2 s_4 ... s_{2k} for 0 <= k <= n/2,
/// paired with its partition (2^k, 1^(n-2k)). The generators involved
/// pairwise commute, so each product is reduced and fully commutative.
pub fn fc_cell_representatives(
    n: usize,
) -> Result<Vec<(AffinePermutation, Partition)>, Error> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    let mut reps = Vec::new();
    for k in 0..=n / 2 {
        let letters: Vec<usize> = (1..=k).map(|j| 2 * j).collect();
        let element = CoxeterWord::new(n, letters)?.evaluate();
        let mut parts = vec![2u32; k];
        parts.extend(std::iter::repeat(1u32).take(n - 2 * k));
        reps.push((element, Partition::new(parts)?));
    }
    Ok(reps)
}
