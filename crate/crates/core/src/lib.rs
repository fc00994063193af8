//! The affine symmetric group on n strands, realized as periodic
//! permutations of the integers in window notation, together with four
//! independent characterizations of its fully commutative elements and the
//! partition statistic classifying its two-sided cells.
//!
//! The characterizations:
//! - word: no member of the commutation class of a reduced word contains a
//!   braid factor s_i s_j s_i with i, j adjacent on the residue cycle;
//! - pair: every inversion (a, b) has w(a) > a and w(b) < b;
//! - pattern: no positions a < b < c with w(a) > w(b) > w(c);
//! - root: no two inversion roots pair to -1.
//!
//! All four agree; the verification harness in [`verify`] checks them, the
//! cell classification, the length and descent identities, and the extended
//! group against each other over exhaustively enumerated balls.

pub mod ball;
pub mod cells;
pub mod error;
pub mod extended;
pub mod pattern;
pub mod perm;
pub mod records;
pub mod roots;
pub mod verify;
pub mod word;

pub use ball::{enumerate_ball, Ball, DEFAULT_BALL_BUDGET};
pub use cells::{shi_partition, Partition};
pub use error::Error;
pub use extended::ExtendedAffinePermutation;
pub use perm::AffinePermutation;
pub use roots::Root;
pub use word::CoxeterWord;
