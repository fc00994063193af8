//! 321-pattern detection and the inversion pair criterion.
//!
//! A 321 instance is a triple of positions a < b < c with
//! w(a) > w(b) > w(c). By periodicity any instance can be translated and
//! normalized so that 1 <= b <= n, b - n < a < b and b < c < b + n, so the
//! scan over that box is exhaustive.

use crate::error::Error;
use crate::perm::AffinePermutation;

/// Least 321 instance under the lexicographic order on (b, c - b, b - a),
/// or None when w is 321-avoiding.
pub fn find_321_instance(w: &AffinePermutation) -> Option<(i64, i64, i64)> {
    let n = w.rank() as i64;
    for b in 1..=n {
        let wb = w.apply(b);
        for cb in 1..n {
            let c = b + cb;
            if wb <= w.apply(c) {
                continue;
            }
            for ba in 1..n {
                let a = b - ba;
                if w.apply(a) > wb {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn is_321_avoiding(w: &AffinePermutation) -> bool {
    find_321_instance(w).is_none()
}

/// Translates a 321 instance into the normal box: b stays fixed, a shifts up
/// and c shifts down by multiples of n until b - a and c - b lie in 1..n.
/// The translated triple is still a 321 instance. Errors unless the input
/// satisfies a < b < c and w(a) > w(b) > w(c).
pub fn normalize_triple(
    w: &AffinePermutation,
    a: i64,
    b: i64,
    c: i64,
) -> Result<(i64, i64, i64), Error> {
    if !(a < b && b < c && w.apply(a) > w.apply(b) && w.apply(b) > w.apply(c)) {
        return Err(Error::InvalidTriple { a, b, c });
    }
    let n = w.rank() as i64;
    // b - a and c - b are never divisible by n: congruent positions have
    // images in the same residue class, which would force the wrong order.
    let ka = (b - a).div_euclid(n);
    let kc = (c - b).div_euclid(n);
    let (na, nc) = (a + ka * n, c - kc * n);
    debug_assert!(b - n < na && na < b && b < nc && nc < b + n);
    debug_assert!(w.apply(na) > w.apply(b) && w.apply(b) > w.apply(nc));
    Ok((na, b, nc))
}

/// Inversion pair criterion: for every a < b with w(a) > w(b), both
/// w(a) > a and w(b) < b. Any violation translates into the box
/// 1 <= b <= n, b - n < a < b, so the bounded scan is exhaustive.
pub fn pair_criterion_holds(w: &AffinePermutation) -> bool {
    let n = w.rank() as i64;
    for b in 1..=n {
        let wb = w.apply(b);
        for ba in 1..n {
            let a = b - ba;
            let wa = w.apply(a);
            if wa > wb && !(wa > a && wb < b) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(values: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(values.to_vec()).unwrap()
    }

    /// Reference scan over all triples within the given radius of windows.
    fn brute_force_321(w: &AffinePermutation, radius: i64) -> bool {
        let n = w.rank() as i64;
        let lo = 1 - radius * n;
        let hi = (radius + 1) * n;
        for a in lo..=hi {
            for b in a + 1..=hi {
                if w.apply(a) <= w.apply(b) {
                    continue;
                }
                for c in b + 1..=hi {
                    if w.apply(b) > w.apply(c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn avoidance_golden() {
        assert!(is_321_avoiding(&w(&[1, 2, 3])));
        assert!(is_321_avoiding(&w(&[2, 3, 1])));
        assert!(!is_321_avoiding(&w(&[3, 2, 1])));
        assert!(is_321_avoiding(&w(&[0, 2, 4])));
    }

    #[test]
    fn witness_for_descending_window() {
        let u = w(&[3, 2, 1]);
        let (a, b, c) = find_321_instance(&u).unwrap();
        assert!(a < b && b < c);
        assert!(u.apply(a) > u.apply(b) && u.apply(b) > u.apply(c));
        let n = u.rank() as i64;
        assert!(1 <= b && b <= n && b - n < a && c < b + n);
    }

    #[test]
    fn scan_matches_brute_force() {
        for values in [
            vec![1, 2, 3],
            vec![2, 3, 1],
            vec![3, 2, 1],
            vec![0, 2, 4],
            vec![-2, 3, 5],
            vec![7, 0, -1],
            vec![4, 1, 2, 3],
            vec![2, 4, 1, 3],
            vec![5, 2, 0, 3],
        ] {
            let u = AffinePermutation::from_window(values).unwrap();
            assert_eq!(is_321_avoiding(&u), brute_force_321(&u, 3), "element {u}");
        }
    }

    #[test]
    fn normalization() {
        let u = w(&[3, 2, 1]);
        // Shift the minimal instance far out of the box, then normalize back.
        let (a, b, c) = find_321_instance(&u).unwrap();
        let got = normalize_triple(&u, a - 6, b - 6, c - 6).unwrap();
        let n = u.rank() as i64;
        let (na, nb, nc) = got;
        assert!(u.apply(na) > u.apply(nb) && u.apply(nb) > u.apply(nc));
        assert!(nb - n < na && na < nb && nb < nc && nc < nb + n);
        // [5,1,0] has the out-of-box instance (-2, 2, 3): w(-2) = 2 > 1 > 0.
        let v = w(&[5, 1, 0]);
        assert_eq!(normalize_triple(&v, -2, 2, 3), Ok((1, 2, 3)));
        // Non-instances are rejected.
        assert!(matches!(
            normalize_triple(&u, 1, 2, 2),
            Err(Error::InvalidTriple { .. })
        ));
        let id = w(&[1, 2, 3]);
        assert!(matches!(
            normalize_triple(&id, 1, 2, 3),
            Err(Error::InvalidTriple { .. })
        ));
    }

    #[test]
    fn pair_criterion_golden() {
        assert!(pair_criterion_holds(&w(&[1, 2, 3])));
        assert!(pair_criterion_holds(&w(&[2, 3, 1])));
        // [3,2,1]: the inversion (2,3) has w(2) = 2, not > 2.
        assert!(!pair_criterion_holds(&w(&[3, 2, 1])));
        assert!(pair_criterion_holds(&w(&[0, 2, 4])));
    }
}
