//! Integer partitions viewed through the binary digits of their multiplicities.
//!
//! Every part of a partition is written uniquely as `x * 2^j` with `x` odd.
//! For a fixed odd `x`, the multiplicities of `x, 2x, 4x, ...` are laid out as
//! the columns of a 0/1 matrix whose cell `(i, j)` holds bit `i` of the
//! multiplicity of `x * 2^j`. A cell contributes `x * 2^(i + j)` to the weight,
//! so any rearrangement that keeps each cell on its anti-diagonal `i + j = k`
//! maps partitions of `n` to partitions of `n`.
//!
//! The crate is organised as
//!
//! - [`partition`]: the canonical [`Partition`] type and streaming enumeration,
//! - [`bitmatrix`]: the matrix encoding and weight-preserving cell permutations,
//! - [`bijections`]: Glaisher's map for any modulus `d`, the even-parts /
//!   repeated-parts map, the 2-adic valuation family and a verification harness,
//! - [`identities`]: counters and theorem checkers built on exhaustive enumeration.

pub mod bijections;
pub mod bitmatrix;
pub mod error;
pub mod identities;
pub mod partition;

pub use bijections::{
    glaisher_forward, glaisher_inverse, thm3_inverse, thm3_map, thm5_inverse, thm5_map,
    verify_bijection, BijectionReport, FamilySelector,
};
pub use bitmatrix::{decode, encode, split_part, BitMatrix, Cell, MatrixFamily, PartKey};
pub use error::{Error, Result};
pub use identities::{TheoremCheck, TheoremId};
pub use partition::{class_part_stats, gen_partitions, ClassPredicate, PartStats, Partition};
