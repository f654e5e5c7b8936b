//! Weight-preserving maps between partition classes.
//!
//! Glaisher's map works directly on base-`d` digits of multiplicities. The
//! even-parts/repeated-parts map and the 2-adic valuation family are cell
//! permutations of the binary matrices from [`crate::bitmatrix`] that keep every
//! cell on its anti-diagonal, so they preserve weight automatically.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::bitmatrix::{decode, encode, Cell};
use crate::error::{Error, Result};
use crate::partition::{gen_partitions, ClassPredicate, Partition};

fn check_modulus(d: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidModulus(d));
    }
    Ok(())
}

/// Glaisher's map: each multiplicity `m = sum c_i d^i` of a part `v` becomes
/// `c_i` copies of `v * d^i`. Requires that no part is divisible by `d`; the
/// image has every multiplicity at most `d - 1`.
pub fn glaisher_forward(partition: &Partition, d: u64) -> Result<Partition> {
    check_modulus(d)?;
    let mut pairs = Vec::new();
    for (part, count) in partition.iter() {
        if part % d == 0 {
            return Err(Error::PartDivisible { part, d });
        }
        let mut scaled = part;
        let mut rest = count;
        while rest > 0 {
            pairs.push((scaled, rest % d));
            rest /= d;
            if rest > 0 {
                // scaled * d <= part * count <= weight, so this cannot overflow.
                scaled *= d;
            }
        }
    }
    Partition::from_multiplicities(pairs)
}

/// Inverse of [`glaisher_forward`]: `c` copies of `u * d^i` (with `d` not
/// dividing `u`) merge into `c * d^i` copies of `u`. Requires every
/// multiplicity to be at most `d - 1`.
pub fn glaisher_inverse(partition: &Partition, d: u64) -> Result<Partition> {
    check_modulus(d)?;
    let mut merged: BTreeMap<u64, u64> = BTreeMap::new();
    for (part, count) in partition.iter() {
        if count >= d {
            return Err(Error::MultiplicityTooLarge { part, count, max: d - 1 });
        }
        let mut base = part;
        let mut scale = 1u64;
        while base % d == 0 {
            base /= d;
            scale *= d;
        }
        *merged.entry(base).or_default() += count * scale;
    }
    Partition::from_multiplicities(merged)
}

fn transport<F: Fn(Cell) -> Cell>(partition: &Partition, perm: F) -> Partition {
    let family = encode(partition)
        .permute_cells(perm)
        .expect("diagonal-preserving bijection of cell positions");
    decode(&family)
}

fn thm3_cell(c: Cell) -> Cell {
    match (c.row, c.col) {
        (0, 0) => c,
        (i, 0) => Cell::new(0, i),
        (i, j) => Cell::new(i + 1, j - 1),
    }
}

fn thm3_cell_inverse(c: Cell) -> Cell {
    match (c.row, c.col) {
        (0, 0) => c,
        (0, j) => Cell::new(j, 0),
        (i, j) => Cell::new(i - 1, j + 1),
    }
}

/// Sends partitions with exactly `k` distinct even part values to partitions
/// with exactly `k` part values repeated at least twice.
///
/// In every matrix, columns `j >= 1` slide one step down-left along their
/// diagonals, column 0 below the corner folds onto row 0, and `(0, 0)` stays.
/// The position map is a bijection of all of `N x N`, so the map is total.
pub fn thm3_map(partition: &Partition) -> Partition {
    transport(partition, thm3_cell)
}

pub fn thm3_inverse(partition: &Partition) -> Partition {
    transport(partition, thm3_cell_inverse)
}

/// A diagonal-preserving permutation of the top-left `p x p` block, the free
/// choice in the valuation family of bijections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySelector {
    p: u32,
    forward: BTreeMap<Cell, Cell>,
    backward: BTreeMap<Cell, Cell>,
}

impl FamilySelector {
    pub fn identity(p: u32) -> Result<Self> {
        Self::from_fn(p, |c| c)
    }

    /// Mirrors the block across its main diagonal, i.e. reverses every
    /// anti-diagonal inside the block.
    pub fn transpose(p: u32) -> Result<Self> {
        Self::from_fn(p, |c| Cell::new(c.col, c.row))
    }

    /// Builds the selector from its action on each block cell. `perm` must
    /// permute the block and keep `row + col` fixed.
    pub fn from_fn<F: Fn(Cell) -> Cell>(p: u32, perm: F) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidExponent(p));
        }
        let mut forward = BTreeMap::new();
        let mut backward = BTreeMap::new();
        for row in 0..p {
            for col in 0..p {
                let src = Cell::new(row, col);
                let dst = perm(src);
                if dst.row >= p || dst.col >= p {
                    return Err(Error::InvalidSelector(format!(
                        "({row}, {col}) is sent outside the {p}x{p} block"
                    )));
                }
                if dst.diagonal() != src.diagonal() {
                    return Err(Error::InvalidSelector(format!(
                        "({row}, {col}) is sent off its diagonal to ({}, {})",
                        dst.row, dst.col
                    )));
                }
                if backward.insert(dst, src).is_some() {
                    return Err(Error::InvalidSelector(format!(
                        "two block cells are sent to ({}, {})",
                        dst.row, dst.col
                    )));
                }
                forward.insert(src, dst);
            }
        }
        Ok(Self { p, forward, backward })
    }

    /// Builds the selector from the cells it moves; unlisted block cells stay.
    pub fn from_pairs<I, C>(p: u32, moves: I) -> Result<Self>
    where
        I: IntoIterator<Item = (C, C)>,
        C: Into<Cell>,
    {
        let mut table = BTreeMap::new();
        for (src, dst) in moves {
            let src = src.into();
            if table.insert(src, dst.into()).is_some() {
                return Err(Error::InvalidSelector(format!(
                    "({}, {}) is listed twice",
                    src.row, src.col
                )));
            }
        }
        let outside: BTreeSet<_> = table.keys().filter(|c| c.row >= p || c.col >= p).collect();
        if let Some(c) = outside.first() {
            return Err(Error::InvalidSelector(format!(
                "({}, {}) is outside the {p}x{p} block",
                c.row, c.col
            )));
        }
        Self::from_fn(p, |c| table.get(&c).copied().unwrap_or(c))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().all(|(a, b)| a == b)
    }

    /// The selector undoing this one.
    pub fn inverse(&self) -> Self {
        Self { p: self.p, forward: self.backward.clone(), backward: self.forward.clone() }
    }

    pub fn apply(&self, c: Cell) -> Cell {
        self.forward.get(&c).copied().unwrap_or(c)
    }

    pub fn apply_inverse(&self, c: Cell) -> Cell {
        self.backward.get(&c).copied().unwrap_or(c)
    }

    fn check_for(&self, p: u32) -> Result<()> {
        if p < 2 {
            return Err(Error::InvalidExponent(p));
        }
        if self.p != p {
            return Err(Error::SelectorMismatch { selector: self.p, requested: p });
        }
        Ok(())
    }
}

/// Sends partitions with exactly `k` distinct part values divisible by `2^p`
/// to partitions with exactly `k` part values of multiplicity at least `2^p`.
///
/// Per matrix: columns `j >= p` move `p` steps down-left, the strip below the
/// `p x p` block (`i >= p`, `j < p`) is transposed onto the strip to its right,
/// and the block itself is rearranged by `selector`.
pub fn thm5_map(partition: &Partition, p: u32, selector: &FamilySelector) -> Result<Partition> {
    selector.check_for(p)?;
    Ok(transport(partition, |c| {
        if c.col >= p {
            Cell::new(c.row + p, c.col - p)
        } else if c.row >= p {
            Cell::new(c.col, c.row)
        } else {
            selector.apply(c)
        }
    }))
}

/// Exact inverse of [`thm5_map`] for the same `p` and selector.
pub fn thm5_inverse(partition: &Partition, p: u32, selector: &FamilySelector) -> Result<Partition> {
    selector.check_for(p)?;
    Ok(transport(partition, |c| {
        if c.row >= p {
            Cell::new(c.row - p, c.col + p)
        } else if c.col >= p {
            Cell::new(c.col, c.row)
        } else {
            selector.apply_inverse(c)
        }
    }))
}

/// Outcome of checking a map over one finite source class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: u64,
    pub domain_size: u64,
    /// Images with weight `n` that satisfy the target predicate.
    pub image_in_target: u64,
    /// Sources whose round trip failed or errored.
    pub roundtrip_failures: u64,
    /// Images already produced by an earlier source.
    pub collisions: u64,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.image_in_target == self.domain_size && self.roundtrip_failures == 0 && self.collisions == 0
    }

    /// Combines reports for disjoint slices of the same domain. Collisions
    /// across slices are not detected by merging.
    pub fn merge(self, other: Self) -> Self {
        Self {
            n: self.n,
            domain_size: self.domain_size + other.domain_size,
            image_in_target: self.image_in_target + other.image_in_target,
            roundtrip_failures: self.roundtrip_failures + other.roundtrip_failures,
            collisions: self.collisions + other.collisions,
        }
    }
}

/// Runs `forward` over every partition of `n` in `source`, checking that each
/// image has weight `n` and lies in `target`, that images are pairwise
/// distinct, and that `inverse` undoes `forward`. Failures are counted.
pub fn verify_bijection<F, G>(
    n: u64,
    forward: F,
    inverse: G,
    source: ClassPredicate,
    target: ClassPredicate,
) -> BijectionReport
where
    F: Fn(&Partition) -> Result<Partition>,
    G: Fn(&Partition) -> Result<Partition>,
{
    let mut report = BijectionReport { n, ..Default::default() };
    let mut seen = HashSet::new();
    for lambda in gen_partitions(n, source) {
        report.domain_size += 1;
        let image = match forward(&lambda) {
            Ok(image) => image,
            Err(_) => {
                report.roundtrip_failures += 1;
                continue;
            }
        };
        if image.weight() == n && target.admits(&image) {
            report.image_in_target += 1;
        }
        if inverse(&image).ok().as_ref() != Some(&lambda) {
            report.roundtrip_failures += 1;
        }
        if !seen.insert(image) {
            report.collisions += 1;
        }
    }
    report
}
