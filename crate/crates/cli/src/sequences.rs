//! Per-n tables of the counted quantities, emitted as CSV or JSON.

use std::io::Write;

use clap::ValueEnum;
use partmatrix::identities::{a1_one_triple, a_exactly_one_even, f_one_quintuple, g_h_part_totals};
use partmatrix::{class_part_stats, ClassPredicate};
use rayon::prelude::*;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Column {
    /// Partitions with exactly one even part value.
    #[value(name = "a")]
    A,
    /// Partitions with one part thrice, the rest once.
    #[value(name = "a1")]
    A1,
    /// Partitions with one part five times, the rest once.
    #[value(name = "f")]
    F,
    #[value(name = "total_parts_odd")]
    TotalPartsOdd,
    #[value(name = "total_parts_distinct")]
    TotalPartsDistinct,
    #[value(name = "total_distinct_parts_odd")]
    TotalDistinctPartsOdd,
    #[value(name = "parts_G")]
    PartsG,
    #[value(name = "distinct_parts_H")]
    DistinctPartsH,
}

impl Column {
    pub const ALL: [Column; 8] = [
        Column::A,
        Column::A1,
        Column::F,
        Column::TotalPartsOdd,
        Column::TotalPartsDistinct,
        Column::TotalDistinctPartsOdd,
        Column::PartsG,
        Column::DistinctPartsH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Column::A => "a",
            Column::A1 => "a1",
            Column::F => "f",
            Column::TotalPartsOdd => "total_parts_odd",
            Column::TotalPartsDistinct => "total_parts_distinct",
            Column::TotalDistinctPartsOdd => "total_distinct_parts_odd",
            Column::PartsG => "parts_G",
            Column::DistinctPartsH => "distinct_parts_H",
        }
    }

    pub fn evaluate(self, n: u64) -> u64 {
        match self {
            Column::A => a_exactly_one_even(n),
            Column::A1 => a1_one_triple(n),
            Column::F => f_one_quintuple(n),
            Column::TotalPartsOdd => class_part_stats(n, ClassPredicate::OddParts).total_parts,
            Column::TotalPartsDistinct => class_part_stats(n, ClassPredicate::DistinctParts).total_parts,
            Column::TotalDistinctPartsOdd => class_part_stats(n, ClassPredicate::OddParts).total_distinct_parts,
            Column::PartsG => g_h_part_totals(n).0,
            Column::DistinctPartsH => g_h_part_totals(n).1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Rows `0..=max_n`, each holding `n` followed by the requested columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub columns: Vec<Column>,
    pub rows: Vec<(u64, Vec<u64>)>,
}

impl SequenceTable {
    pub fn compute(max_n: u64, columns: &[Column]) -> Self {
        let rows = (0..=max_n)
            .into_par_iter()
            .map(|n| (n, columns.iter().map(|c| c.evaluate(n)).collect()))
            .collect();
        Self { columns: columns.to_vec(), rows }
    }

    fn header(&self) -> Vec<&'static str> {
        std::iter::once("n").chain(self.columns.iter().map(|c| c.name())).collect()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> anyhow::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.header())?;
        for (n, values) in &self.rows {
            w.write_record(std::iter::once(n).chain(values).map(u64::to_string))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> anyhow::Result<()> {
        let header = self.header();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(n, values)| {
                let obj: Map<String, Value> = header
                    .iter()
                    .zip(std::iter::once(n).chain(values))
                    .map(|(name, v)| (name.to_string(), Value::from(*v)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        serde_json::to_writer_pretty(&mut out, &rows)?;
        writeln!(out)?;
        Ok(())
    }
}
