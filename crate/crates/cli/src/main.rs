mod check;
mod sequences;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use partmatrix::bitmatrix::{encode, render};
use partmatrix::identities::{exactly_k_distinct_even, one_part_repeated_exactly};
use partmatrix::{
    gen_partitions, glaisher_forward, glaisher_inverse, thm3_inverse, thm3_map, thm5_inverse, thm5_map,
    ClassPredicate, FamilySelector, Partition,
};

use crate::check::{default_max_n, run_check, CheckOptions};
use crate::sequences::{Column, Format, SequenceTable};

#[derive(Debug, Parser)]
#[command(name = "partmatrix", version, about = "Partition bit-matrices, bijections and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print per-n counts as a CSV or JSON table.
    Sequences {
        #[arg(long)]
        max_n: u64,
        /// Columns after `n`; all columns when omitted.
        #[arg(long, value_enum, value_delimiter = ',')]
        columns: Option<Vec<Column>>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Check one theorem for every 1 <= n <= max-n.
    Check {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        theorem: u8,
        #[arg(long)]
        max_n: Option<u64>,
        /// Restrict theorems 3 and 5 to these k.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<u64>>,
        /// Exponents for theorem 5 (default 2,3).
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<u32>>,
        /// Moduli for theorem 4 (default 2,3,5).
        #[arg(long, value_delimiter = ',')]
        d: Option<Vec<u64>>,
    },
    /// Apply one bijection to a single partition.
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        d: u64,
        /// Block permutation for thm5.
        #[arg(long, value_enum, default_value = "identity")]
        selector: Selector,
    },
    /// Render the bit matrix of every odd base in a partition.
    Matrix {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
    /// List the partitions of n in a class, one per line.
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        class: Class,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Bijection {
    Glaisher,
    Thm3,
    Thm5,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Selector {
    Identity,
    Transpose,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Class {
    All,
    Odd,
    Distinct,
    #[value(name = "G")]
    G,
    #[value(name = "H")]
    H,
    OneEven,
    OneTriple,
    OneQuintuple,
}

impl Class {
    fn predicate(self) -> ClassPredicate {
        match self {
            Class::All => ClassPredicate::All,
            Class::Odd => ClassPredicate::OddParts,
            Class::Distinct => ClassPredicate::DistinctParts,
            Class::G => ClassPredicate::GClass,
            Class::H => ClassPredicate::HClass,
            Class::OneEven => exactly_k_distinct_even(1),
            Class::OneTriple => one_part_repeated_exactly(3),
            Class::OneQuintuple => one_part_repeated_exactly(5),
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition> {
    text.parse().with_context(|| format!("cannot parse partition {text:?}"))
}

/// Returns `Ok(false)` when a check ran but some identity failed.
fn run(command: Command, out: &mut impl Write) -> Result<bool> {
    match command {
        Command::Sequences { max_n, columns, format } => {
            let columns = columns.unwrap_or_else(|| Column::ALL.to_vec());
            let table = SequenceTable::compute(max_n, &columns);
            match format {
                Format::Csv => table.write_csv(out)?,
                Format::Json => table.write_json(out)?,
            }
        }
        Command::Check { theorem, max_n, k, p, d } => {
            let opts = CheckOptions { ks: k, ps: p, ds: d };
            let max_n = max_n.unwrap_or_else(|| default_max_n(theorem));
            let lines = run_check(theorem, max_n, &opts)?;
            let all_passed = lines.iter().all(|l| l.passed);
            for line in &lines {
                writeln!(out, "{}", line.text)?;
            }
            writeln!(out, "RESULT {}", if all_passed { "pass" } else { "fail" })?;
            return Ok(all_passed);
        }
        Command::Map { bijection, partition, inverse, p, d, selector } => {
            let lambda = parse_partition(&partition)?;
            let image = match bijection {
                Bijection::Glaisher if inverse => glaisher_inverse(&lambda, d)?,
                Bijection::Glaisher => glaisher_forward(&lambda, d)?,
                Bijection::Thm3 if inverse => thm3_inverse(&lambda),
                Bijection::Thm3 => thm3_map(&lambda),
                Bijection::Thm5 => {
                    let sel = match selector {
                        Selector::Identity => FamilySelector::identity(p)?,
                        Selector::Transpose => FamilySelector::transpose(p)?,
                    };
                    if inverse {
                        thm5_inverse(&lambda, p, &sel)?
                    } else {
                        thm5_map(&lambda, p, &sel)?
                    }
                }
            };
            writeln!(out, "{image}")?;
        }
        Command::Matrix { partition } => {
            let lambda = parse_partition(&partition)?;
            let family = encode(&lambda);
            for (i, (x, m)) in family.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", render(x, m))?;
            }
        }
        Command::Enumerate { n, class } => {
            let mut count = 0u64;
            for lambda in gen_partitions(n, class.predicate()) {
                writeln!(out, "{lambda}")?;
                count += 1;
            }
            writeln!(out, "count: {count}")?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(err), _) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
        (_, Err(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
