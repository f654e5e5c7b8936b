//! Partition counters and the identities that relate them.
//!
//! Every counter streams the partitions of `n` through a class predicate. The
//! `*_decomposed` / `*_split_count` functions recompute the same quantities
//! along a different route: they sum a local contribution per odd base (or per
//! multiplicity) instead of counting members of a class.

use std::fmt;

use crate::bitmatrix::encode;
use crate::error::{Error, Result};
use crate::partition::{class_part_stats, gen_partitions, ClassPredicate, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Exactly one even part value vs. parts(odd) - parts(distinct).
    T1,
    /// One part three times vs. parts(distinct) - distinct parts(odd).
    T2,
    /// `k` distinct even part values vs. `k` repeated part values.
    T3,
    /// No part divisible by `d` vs. all multiplicities below `d`.
    T4,
    /// `k` part values divisible by `2^p` vs. `k` values repeated `2^p` times.
    T5,
    /// One part five times vs. parts(G) - distinct parts(H).
    T6,
    /// Per-multiplicity sum of `(2^i - 1) * bit_i` vs. the T1 count.
    C1Decomp,
    /// Sum of `floor(m / 2^j)` splits vs. the per-bit decomposition.
    C1Split,
    /// Per-matrix `(d_x - 1)` sum over distinct partitions vs. the T2 count.
    C2Decomp,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::T1 => "T1",
            Self::T2 => "T2",
            Self::T3 => "T3",
            Self::T4 => "T4",
            Self::T5 => "T5",
            Self::T6 => "T6",
            Self::C1Decomp => "C1Decomp",
            Self::C1Split => "C1Split",
            Self::C2Decomp => "C2Decomp",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct CheckParams {
    pub k: Option<u64>,
    pub p: Option<u32>,
    pub d: Option<u64>,
}

impl fmt::Display for CheckParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for (name, value) in [("k", self.k), ("p", self.p.map(u64::from)), ("d", self.d)] {
            if let Some(v) = value {
                write!(f, "{sep}{name}={v}")?;
                sep = " ";
            }
        }
        Ok(())
    }
}

/// One evaluated identity: passes iff both sides agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    pub n: u64,
    pub lhs: i64,
    pub rhs: i64,
    pub params: CheckParams,
}

impl TheoremCheck {
    fn new(theorem: TheoremId, n: u64, lhs: u64, rhs: i64) -> Self {
        Self { theorem, n, lhs: lhs as i64, rhs, params: CheckParams::default() }
    }

    fn with(mut self, params: CheckParams) -> Self {
        self.params = params;
        self
    }

    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.theorem, self.n)?;
        if self.params != CheckParams::default() {
            write!(f, " {}", self.params)?;
        }
        let verdict = if self.passed() { "pass" } else { "fail" };
        write!(f, " lhs={} rhs={} {verdict}", self.lhs, self.rhs)
    }
}

fn count(n: u64, pred: ClassPredicate) -> u64 {
    gen_partitions(n, pred).count() as u64
}

fn diff(a: u64, b: u64) -> i64 {
    a as i64 - b as i64
}

fn check_exponent(p: u32) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidExponent(p));
    }
    Ok(())
}

fn check_modulus(d: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidModulus(d));
    }
    Ok(())
}

// Class predicates ----------------------------------------------------------

pub fn exactly_k_distinct_even(k: u64) -> ClassPredicate {
    ClassPredicate::custom(move |l| l.iter().filter(|(v, _)| v % 2 == 0).count() as u64 == k)
}

pub fn exactly_k_repeated(k: u64) -> ClassPredicate {
    ClassPredicate::custom(move |l| l.iter().filter(|&(_, c)| c >= 2).count() as u64 == k)
}

/// Exactly `k` distinct part values with 2-adic valuation at least `p`.
pub fn exactly_k_high_valuation(k: u64, p: u32) -> ClassPredicate {
    ClassPredicate::custom(move |l| l.iter().filter(|(v, _)| v.trailing_zeros() >= p).count() as u64 == k)
}

/// Exactly `k` part values with multiplicity at least `2^p`.
pub fn exactly_k_high_multiplicity(k: u64, p: u32) -> ClassPredicate {
    ClassPredicate::custom(move |l| l.iter().filter(|&(_, c)| c >> p != 0).count() as u64 == k)
}

pub fn no_part_divisible_by(d: u64) -> ClassPredicate {
    ClassPredicate::custom(move |l| l.iter().all(|(v, _)| v % d != 0))
}

pub fn multiplicities_below(d: u64) -> ClassPredicate {
    ClassPredicate::custom(move |l| l.iter().all(|(_, c)| c < d))
}

/// One part value with multiplicity exactly `times`, every other value once.
pub fn one_part_repeated_exactly(times: u64) -> ClassPredicate {
    ClassPredicate::custom(move |l| {
        let special = l.iter().filter(|&(_, c)| c == times).count();
        special == 1 && l.iter().all(|(_, c)| c == times || c == 1)
    })
}

pub fn is_g_member(partition: &Partition) -> bool {
    partition.is_distinct() && partition.iter().all(|(v, _)| partition.multiplicity(2 * v) == 0)
}

/// No two adjacent set bits in the binary expansion.
pub fn is_fibbinary(m: u64) -> bool {
    m & (m >> 1) == 0
}

pub fn is_h_member(partition: &Partition) -> bool {
    partition.is_odd() && partition.iter().all(|(_, c)| is_fibbinary(c))
}

// Theorem 1 -----------------------------------------------------------------

/// Partitions of `n` with exactly one even part value, repeated any number of times.
pub fn a_exactly_one_even(n: u64) -> u64 {
    count(n, exactly_k_distinct_even(1))
}

pub fn thm1_check(n: u64) -> TheoremCheck {
    let odd = class_part_stats(n, ClassPredicate::OddParts);
    let distinct = class_part_stats(n, ClassPredicate::DistinctParts);
    TheoremCheck::new(TheoremId::T1, n, a_exactly_one_even(n), diff(odd.total_parts, distinct.total_parts))
}

/// Binary digits of `m`, least significant first.
pub fn binary_digits(m: u64) -> Vec<bool> {
    (0..64 - m.leading_zeros()).map(|i| m >> i & 1 == 1).collect()
}

/// `sum (2^i - 1) * gamma_i` for the binary digits `gamma` of a multiplicity.
pub fn conj1_local(gamma: &[bool]) -> u64 {
    gamma
        .iter()
        .enumerate()
        .filter(|&(_, &bit)| bit)
        .map(|(i, _)| (1u64 << i) - 1)
        .sum()
}

/// Sums [`conj1_local`] over every odd base of every odd partition of `n`.
pub fn conj1_decomposed(n: u64) -> u64 {
    gen_partitions(n, ClassPredicate::OddParts)
        .flat_map(|l| l.iter().map(|(_, m)| conj1_local(&binary_digits(m))).collect::<Vec<_>>())
        .sum()
}

/// Ways to split `m` copies of `x` into some copies of `x` plus some copies of
/// `2^j x` for a fixed `j >= 1`, summed over `j`: `sum_{j>=1} floor(m / 2^j)`.
pub fn split_choices(m: u64) -> u64 {
    (1..64).map(|j| m >> j).take_while(|&q| q > 0).sum()
}

pub fn conj1_split_count(n: u64) -> u64 {
    gen_partitions(n, ClassPredicate::OddParts)
        .map(|l| l.iter().map(|(_, m)| split_choices(m)).sum::<u64>())
        .sum()
}

pub fn conj1_decomposed_check(n: u64) -> TheoremCheck {
    TheoremCheck::new(TheoremId::C1Decomp, n, conj1_decomposed(n), a_exactly_one_even(n) as i64)
}

pub fn conj1_split_check(n: u64) -> TheoremCheck {
    TheoremCheck::new(TheoremId::C1Split, n, conj1_split_count(n), conj1_decomposed(n) as i64)
}

// Theorem 2 -----------------------------------------------------------------

pub fn a1_one_triple(n: u64) -> u64 {
    count(n, one_part_repeated_exactly(3))
}

pub fn thm2_check(n: u64) -> TheoremCheck {
    let distinct = class_part_stats(n, ClassPredicate::DistinctParts);
    let odd = class_part_stats(n, ClassPredicate::OddParts);
    TheoremCheck::new(TheoremId::T2, n, a1_one_triple(n), diff(distinct.total_parts, odd.total_distinct_parts))
}

/// For each distinct partition and each odd base `x` in it, the matrix of `x`
/// is a single row with `d_x` cells; sums `d_x - 1`.
pub fn conj2_decomposed(n: u64) -> u64 {
    gen_partitions(n, ClassPredicate::DistinctParts)
        .map(|l| encode(&l).iter().map(|(_, m)| m.len() as u64 - 1).sum::<u64>())
        .sum()
}

pub fn conj2_decomposed_check(n: u64) -> TheoremCheck {
    TheoremCheck::new(TheoremId::C2Decomp, n, conj2_decomposed(n), a1_one_triple(n) as i64)
}

// Theorem 3 -----------------------------------------------------------------

pub fn count_exactly_k_distinct_even(n: u64, k: u64) -> u64 {
    count(n, exactly_k_distinct_even(k))
}

pub fn count_exactly_k_repeated(n: u64, k: u64) -> u64 {
    count(n, exactly_k_repeated(k))
}

pub fn thm3_check(n: u64, k: u64) -> TheoremCheck {
    let lhs = count_exactly_k_distinct_even(n, k);
    let rhs = count_exactly_k_repeated(n, k) as i64;
    TheoremCheck::new(TheoremId::T3, n, lhs, rhs).with(CheckParams { k: Some(k), ..Default::default() })
}

/// Largest `k` for which either side of the `k`-indexed identity with step
/// `s` can be nonzero: `k` distinct values, each a multiple of `s` (or each
/// repeated `s` times), weigh at least `s * k(k+1)/2`.
pub fn max_k(n: u64, step: u64) -> u64 {
    let mut k = 0;
    while step * (k + 1) * (k + 2) / 2 <= n {
        k += 1;
    }
    k
}

// Theorem 4 -----------------------------------------------------------------

/// `(c, e)`: partitions of `n` with no part divisible by `d`, and with every
/// multiplicity at most `d - 1`.
pub fn glaisher_counts(n: u64, d: u64) -> Result<(u64, u64)> {
    check_modulus(d)?;
    Ok((count(n, no_part_divisible_by(d)), count(n, multiplicities_below(d))))
}

pub fn thm4_check(n: u64, d: u64) -> Result<TheoremCheck> {
    let (c, e) = glaisher_counts(n, d)?;
    Ok(TheoremCheck::new(TheoremId::T4, n, c, e as i64).with(CheckParams { d: Some(d), ..Default::default() }))
}

// Theorem 5 -----------------------------------------------------------------

pub fn count_ak_valuation(n: u64, k: u64, p: u32) -> Result<u64> {
    check_exponent(p)?;
    Ok(count(n, exactly_k_high_valuation(k, p)))
}

pub fn count_bk_multiplicity(n: u64, k: u64, p: u32) -> Result<u64> {
    check_exponent(p)?;
    Ok(count(n, exactly_k_high_multiplicity(k, p)))
}

pub fn thm5_check(n: u64, k: u64, p: u32) -> Result<TheoremCheck> {
    let lhs = count_ak_valuation(n, k, p)?;
    let rhs = count_bk_multiplicity(n, k, p)? as i64;
    Ok(TheoremCheck::new(TheoremId::T5, n, lhs, rhs).with(CheckParams { k: Some(k), p: Some(p), d: None }))
}

// Theorem 6 -----------------------------------------------------------------

pub fn f_one_quintuple(n: u64) -> u64 {
    count(n, one_part_repeated_exactly(5))
}

/// Total parts over `G(n)`, and total distinct parts over `H(n)`.
pub fn g_h_part_totals(n: u64) -> (u64, u64) {
    (
        class_part_stats(n, ClassPredicate::GClass).total_parts,
        class_part_stats(n, ClassPredicate::HClass).total_distinct_parts,
    )
}

pub fn thm6_check(n: u64) -> TheoremCheck {
    let (g, h) = g_h_part_totals(n);
    TheoremCheck::new(TheoremId::T6, n, f_one_quintuple(n), diff(g, h))
}
