//! Canonical partition values and lazy enumeration of the partitions of `n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A partition stored as a map from part value to multiplicity.
///
/// Zero multiplicities are never stored, so two partitions compare equal
/// exactly when they have the same multiset of parts. The weight is cached
/// and always equals `sum(part * count)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    multiplicities: BTreeMap<u64, u64>,
    weight: u64,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from a list of parts in any order.
    pub fn from_parts<I: IntoIterator<Item = u64>>(parts: I) -> Result<Self> {
        Self::from_multiplicities(parts.into_iter().map(|p| (p, 1)))
    }

    /// Builds a partition from `(part, count)` pairs. Repeated parts are merged
    /// and pairs with a zero count are ignored.
    pub fn from_multiplicities<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<Self> {
        let mut multiplicities = BTreeMap::new();
        let mut weight: u64 = 0;
        for (part, count) in pairs {
            if count == 0 {
                continue;
            }
            if part == 0 {
                return Err(Error::ZeroPart);
            }
            weight = part
                .checked_mul(count)
                .and_then(|w| weight.checked_add(w))
                .ok_or(Error::WeightOverflow)?;
            let slot: &mut u64 = multiplicities.entry(part).or_default();
            *slot = slot.checked_add(count).ok_or(Error::WeightOverflow)?;
        }
        Ok(Self { multiplicities, weight })
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Total number of parts, counted with multiplicity.
    pub fn num_parts(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn num_distinct_parts(&self) -> u64 {
        self.multiplicities.len() as u64
    }

    /// Number of times `part` occurs (0 when absent).
    pub fn multiplicity(&self, part: u64) -> u64 {
        self.multiplicities.get(&part).copied().unwrap_or(0)
    }

    /// `(part, count)` pairs in increasing part order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, u64)> + ExactSizeIterator + '_ {
        self.multiplicities.iter().map(|(&p, &c)| (p, c))
    }

    /// All parts with repetition, largest first.
    pub fn parts_desc(&self) -> Vec<u64> {
        self.iter()
            .rev()
            .flat_map(|(p, c)| std::iter::repeat(p).take(c as usize))
            .collect()
    }

    pub fn is_odd(&self) -> bool {
        self.multiplicities.keys().all(|p| p % 2 == 1)
    }

    pub fn is_distinct(&self) -> bool {
        self.multiplicities.values().all(|&c| c == 1)
    }
}

impl fmt::Display for Partition {
    /// Canonical text form: parts in decreasing order separated by commas.
    /// The empty partition renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (part, count) in self.iter().rev() {
            for _ in 0..count {
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "{part}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({{{self}}})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated positive decimal integers, in any order and with
    /// surrounding whitespace. A blank string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(s.to_string()));
                }
                match tok.parse::<u64>() {
                    Ok(0) => Err(Error::ZeroPart),
                    Ok(v) => Ok(v),
                    Err(_) => Err(Error::Parse(s.to_string())),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(parts)
    }
}

/// A restricted class of partitions.
#[derive(Clone)]
pub enum ClassPredicate {
    All,
    OddParts,
    DistinctParts,
    /// Distinct parts with no value `v` appearing together with `2v`.
    GClass,
    /// Odd parts whose every multiplicity has no two adjacent set bits.
    HClass,
    Custom(Arc<dyn Fn(&Partition) -> bool + Send + Sync>),
}

impl ClassPredicate {
    pub fn custom<F>(test: F) -> Self
    where
        F: Fn(&Partition) -> bool + Send + Sync + 'static,
    {
        Self::Custom(Arc::new(test))
    }

    pub fn admits(&self, partition: &Partition) -> bool {
        match self {
            Self::All => true,
            Self::OddParts => partition.is_odd(),
            Self::DistinctParts => partition.is_distinct(),
            Self::GClass => crate::identities::is_g_member(partition),
            Self::HClass => crate::identities::is_h_member(partition),
            Self::Custom(test) => test(partition),
        }
    }
}

impl fmt::Debug for ClassPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::All => f.write_str("All"),
            Self::OddParts => f.write_str("OddParts"),
            Self::DistinctParts => f.write_str("DistinctParts"),
            Self::GClass => f.write_str("GClass"),
            Self::HClass => f.write_str("HClass"),
            Self::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Every partition of `n`, in decreasing-lexicographic order of the
/// descending part lists: `[n]`, `[n-1, 1]`, ..., `[1; n]`.
///
/// Only the current part list is held, so memory stays `O(n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Vec<u64>,
    state: IterState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl Partitions {
    pub fn new(n: u64) -> Self {
        let current = if n == 0 { Vec::new() } else { vec![n] };
        Self { current, state: IterState::Fresh }
    }

    /// Steps `current` to its successor; returns false once `[1; n]` is passed.
    fn advance(&mut self) -> bool {
        // Trailing ones sit after the last part greater than 1.
        let Some(k) = self.current.iter().rposition(|&p| p > 1) else {
            return false;
        };
        let ones = (self.current.len() - k - 1) as u64;
        let cap = self.current[k] - 1;
        self.current.truncate(k);
        self.current.push(cap);
        let mut remaining = ones + 1;
        while remaining > 0 {
            let next = remaining.min(cap);
            self.current.push(next);
            remaining -= next;
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => self.state = IterState::Running,
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        Some(run_length(&self.current))
    }
}

// `parts` is sorted descending and sums to at most the enumerated n.
fn run_length(parts: &[u64]) -> Partition {
    let mut multiplicities = BTreeMap::new();
    let mut weight = 0;
    for &p in parts {
        *multiplicities.entry(p).or_insert(0) += 1;
        weight += p;
    }
    Partition { multiplicities, weight }
}

/// Lazily yields the partitions of `n` admitted by `pred`, each exactly once,
/// in decreasing-lexicographic order.
pub fn gen_partitions(n: u64, pred: ClassPredicate) -> impl Iterator<Item = Partition> {
    Partitions::new(n).filter(move |p| pred.admits(p))
}

/// Totals over one class of partitions of `n`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PartStats {
    pub members: u64,
    pub total_parts: u64,
    pub total_distinct_parts: u64,
}

pub fn class_part_stats(n: u64, pred: ClassPredicate) -> PartStats {
    gen_partitions(n, pred).fold(PartStats::default(), |acc, p| PartStats {
        members: acc.members + 1,
        total_parts: acc.total_parts + p.num_parts(),
        total_distinct_parts: acc.total_distinct_parts + p.num_distinct_parts(),
    })
}
