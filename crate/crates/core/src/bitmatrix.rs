//! Per-odd-number 0/1 matrices holding the binary digits of multiplicities.
//!
//! For odd `x`, column `j` of the matrix of `x` is the multiplicity of the part
//! `x * 2^j` written in binary, least significant bit in row 0. A present cell
//! `(i, j)` therefore stands for `2^i` copies of `x * 2^j`, i.e. weight
//! `x * 2^(i + j)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest representable anti-diagonal `i + j`. Any cell past it would carry
/// a weight of at least `2^64`.
pub const MAX_DIAGONAL: u32 = 63;

/// A part value written as `odd * 2^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartKey {
    pub odd: u64,
    pub exponent: u32,
}

impl PartKey {
    pub fn part(self) -> u64 {
        self.odd << self.exponent
    }
}

/// Splits `v` into its odd base and 2-adic valuation.
pub fn split_part(v: u64) -> Result<PartKey> {
    if v == 0 {
        return Err(Error::ZeroPart);
    }
    let exponent = v.trailing_zeros();
    Ok(PartKey { odd: v >> exponent, exponent })
}

/// Matrix position: `row` is the bit index, `col` the dyadic exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }

    /// Index `k` of the anti-diagonal `D_k` holding this cell.
    pub const fn diagonal(self) -> u32 {
        self.row + self.col
    }

    fn check(self) -> Result<Self> {
        if self.row as u64 + self.col as u64 > MAX_DIAGONAL as u64 {
            return Err(Error::CellOutOfRange { row: self.row, col: self.col, max: MAX_DIAGONAL });
        }
        Ok(self)
    }
}

impl From<(u32, u32)> for Cell {
    fn from((row, col): (u32, u32)) -> Self {
        Self::new(row, col)
    }
}

/// A finite set of occupied cells.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cells: BTreeSet<Cell>,
}

impl BitMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cells<I, C>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Cell>,
    {
        let cells = cells
            .into_iter()
            .map(|c| c.into().check())
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(Self { cells })
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Occupied cells in (row, col) order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    /// The number whose binary digits are column `col`.
    pub fn column_value(&self, col: u32) -> u64 {
        self.cells
            .iter()
            .filter(|c| c.col == col)
            .fold(0, |acc, c| acc | 1u64 << c.row)
    }

    /// Columns with at least one cell, with their values, left to right.
    pub fn columns(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for c in &self.cells {
            *out.entry(c.col).or_insert(0) |= 1u64 << c.row;
        }
        out
    }

    /// Rows with at least one cell, top to bottom.
    pub fn rows(&self) -> BTreeSet<u32> {
        self.cells.iter().map(|c| c.row).collect()
    }
}

/// Sum of `x * 2^(i + j)` over the cells of `matrix`.
pub fn matrix_weight(x: u64, matrix: &BitMatrix) -> u128 {
    matrix.cells().map(|c| (x as u128) << c.diagonal()).sum()
}

/// Cells of `matrix` lying on `D_k = {(i, j) : i + j = k}`.
pub fn diagonal(matrix: &BitMatrix, k: u32) -> BTreeSet<Cell> {
    matrix.cells().filter(|c| c.diagonal() == k).collect()
}

/// Moves every cell `c` to `perm(c)`, reading all sources before writing any
/// target. Two cells landing on the same position is an error.
pub fn apply_cell_permutation<F>(matrix: &BitMatrix, perm: F) -> Result<BitMatrix>
where
    F: Fn(Cell) -> Cell,
{
    let mut out = BTreeSet::new();
    for target in matrix.cells().map(perm) {
        let target = target.check()?;
        if !out.insert(target) {
            return Err(Error::Collision { row: target.row, col: target.col });
        }
    }
    Ok(BitMatrix { cells: out })
}

/// The matrices of all odd bases that occur in a partition. Empty matrices are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MatrixFamily {
    matrices: BTreeMap<u64, BitMatrix>,
}

impl MatrixFamily {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds (or replaces) the matrix of the odd base `x`. An empty matrix
    /// removes `x` from the family.
    pub fn insert(&mut self, x: u64, matrix: BitMatrix) -> Result<()> {
        if x % 2 == 0 {
            return Err(Error::EvenBase(x));
        }
        let previous = self.matrices.remove(&x);
        if matrix.is_empty() {
            return Ok(());
        }
        let total = self.weight_u128() + matrix_weight(x, &matrix);
        if total > u64::MAX as u128 {
            if let Some(prev) = previous {
                self.matrices.insert(x, prev);
            }
            return Err(Error::WeightOverflow);
        }
        self.matrices.insert(x, matrix);
        Ok(())
    }

    pub fn from_matrices<I: IntoIterator<Item = (u64, BitMatrix)>>(matrices: I) -> Result<Self> {
        let mut family = Self::new();
        for (x, m) in matrices {
            family.insert(x, m)?;
        }
        Ok(family)
    }

    pub fn get(&self, x: u64) -> Option<&BitMatrix> {
        self.matrices.get(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BitMatrix)> + '_ {
        self.matrices.iter().map(|(&x, m)| (x, m))
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.weight_u128() as u64
    }

    fn weight_u128(&self) -> u128 {
        self.iter().map(|(x, m)| matrix_weight(x, m)).sum()
    }

    /// Applies a position map to every matrix with gather semantics.
    pub fn permute_cells<F>(&self, perm: F) -> Result<Self>
    where
        F: Fn(Cell) -> Cell,
    {
        let mut matrices = BTreeMap::new();
        for (x, m) in self.iter() {
            matrices.insert(x, apply_cell_permutation(m, &perm)?);
        }
        // Same cell count per matrix and non-empty inputs give non-empty outputs;
        // the weight may still change if `perm` leaves its diagonal.
        Self::from_matrices(matrices)
    }
}

pub fn encode(partition: &Partition) -> MatrixFamily {
    let mut matrices: BTreeMap<u64, BTreeSet<Cell>> = BTreeMap::new();
    for (part, count) in partition.iter() {
        let key = split_part(part).expect("partitions hold positive parts");
        let cells = matrices.entry(key.odd).or_default();
        let mut bits = count;
        while bits != 0 {
            let row = bits.trailing_zeros();
            cells.insert(Cell::new(row, key.exponent));
            bits &= bits - 1;
        }
    }
    MatrixFamily {
        matrices: matrices.into_iter().map(|(x, cells)| (x, BitMatrix { cells })).collect(),
    }
}

pub fn decode(family: &MatrixFamily) -> Partition {
    let pairs = family.iter().flat_map(|(x, m)| {
        m.columns().into_iter().map(move |(col, count)| (x << col, count))
    });
    Partition::from_multiplicities(pairs).expect("family weight is bounded on insertion")
}

/// Human-readable grid for the matrix of odd base `x`: a header of column
/// indices, then one line per occupied row with `1` for a present cell and
/// `.` for an absent one.
pub fn render(x: u64, matrix: &BitMatrix) -> String {
    let mut out = format!("x = {x}\n");
    let Some(last_col) = matrix.cells().map(|c| c.col).max() else {
        return out;
    };
    let rows = matrix.rows();
    let row_w = rows.iter().next_back().map_or(1, |r| r.to_string().len());
    let col_w = last_col.to_string().len();

    let _ = write!(out, "{:row_w$}  ", "");
    let header: Vec<String> = (0..=last_col).map(|j| format!("{j:>col_w$}")).collect();
    out.push_str(&header.join(" "));
    out.push('\n');

    for row in rows {
        let _ = write!(out, "{row:>row_w$}: ");
        let line: Vec<String> = (0..=last_col)
            .map(|col| {
                let mark = if matrix.contains(Cell::new(row, col)) { "1" } else { "." };
                format!("{mark:>col_w$}")
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
