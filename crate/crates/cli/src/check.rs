//! Theorem checks over a range of n, including bijection verification where
//! the identity comes with an explicit map.

use anyhow::{bail, Result};
use partmatrix::identities::{
    self, conj1_decomposed_check, conj1_split_check, conj2_decomposed_check, max_k, thm1_check,
    thm2_check, thm3_check, thm4_check, thm5_check, thm6_check, TheoremCheck,
};
use partmatrix::{
    glaisher_forward, glaisher_inverse, thm3_inverse, thm3_map, thm5_inverse, thm5_map, verify_bijection,
    BijectionReport, ClassPredicate, FamilySelector,
};
use rayon::prelude::*;

/// Largest n checked when `--max-n` is omitted.
pub fn default_max_n(theorem: u8) -> u64 {
    match theorem {
        1 | 2 | 6 => 45,
        3 | 5 => 35,
        _ => 40,
    }
}

#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    pub ks: Option<Vec<u64>>,
    pub ps: Option<Vec<u32>>,
    pub ds: Option<Vec<u64>>,
}

impl CheckOptions {
    fn validate(&self, theorem: u8) -> Result<()> {
        if self.ks.is_some() && !matches!(theorem, 3 | 5) {
            bail!("--k only applies to theorems 3 and 5");
        }
        if self.ps.is_some() && theorem != 5 {
            bail!("--p only applies to theorem 5");
        }
        if self.ds.is_some() && theorem != 4 {
            bail!("--d only applies to theorem 4");
        }
        if let Some(p) = self.ps.iter().flatten().find(|&&p| p < 2) {
            bail!("p must be at least 2, got {p}");
        }
        if let Some(d) = self.ds.iter().flatten().find(|&&d| d < 2) {
            bail!("d must be at least 2, got {d}");
        }
        Ok(())
    }
}

/// One printed verdict.
#[derive(Debug, Clone)]
pub struct Line {
    pub text: String,
    pub passed: bool,
}

impl From<TheoremCheck> for Line {
    fn from(c: TheoremCheck) -> Self {
        Line { text: c.to_string(), passed: c.passed() }
    }
}

fn bijection_line(label: &str, params: &str, report: BijectionReport) -> Line {
    let verdict = if report.passed() { "pass" } else { "fail" };
    let sep = if params.is_empty() { "" } else { " " };
    Line {
        text: format!(
            "{label} n={}{sep}{params} domain={} in_target={} roundtrip_failures={} collisions={} {verdict}",
            report.n, report.domain_size, report.image_in_target, report.roundtrip_failures, report.collisions
        ),
        passed: report.passed(),
    }
}

fn ks_for(opts: &CheckOptions, n: u64, step: u64) -> Vec<u64> {
    match &opts.ks {
        Some(ks) => ks.clone(),
        None => (0..=max_k(n, step)).collect(),
    }
}

fn lines_for(theorem: u8, n: u64, opts: &CheckOptions) -> Result<Vec<Line>> {
    let mut out: Vec<Line> = Vec::new();
    match theorem {
        1 => {
            out.push(thm1_check(n).into());
            out.push(conj1_decomposed_check(n).into());
            out.push(conj1_split_check(n).into());
        }
        2 => {
            out.push(thm2_check(n).into());
            out.push(conj2_decomposed_check(n).into());
        }
        3 => {
            for k in ks_for(opts, n, 2) {
                out.push(thm3_check(n, k).into());
                let report = verify_bijection(
                    n,
                    |l| Ok(thm3_map(l)),
                    |l| Ok(thm3_inverse(l)),
                    identities::exactly_k_distinct_even(k),
                    identities::exactly_k_repeated(k),
                );
                out.push(bijection_line("T3-map", &format!("k={k}"), report));
            }
        }
        4 => {
            for &d in opts.ds.as_deref().unwrap_or(&[2, 3, 5]) {
                out.push(thm4_check(n, d)?.into());
                let report = verify_bijection(
                    n,
                    |l| glaisher_forward(l, d),
                    |l| glaisher_inverse(l, d),
                    identities::no_part_divisible_by(d),
                    identities::multiplicities_below(d),
                );
                out.push(bijection_line("T4-map", &format!("d={d}"), report));
            }
        }
        5 => {
            for &p in opts.ps.as_deref().unwrap_or(&[2, 3]) {
                let selectors = [
                    ("identity", FamilySelector::identity(p)?),
                    ("transpose", FamilySelector::transpose(p)?),
                ];
                for k in ks_for(opts, n, 1 << p) {
                    out.push(thm5_check(n, k, p)?.into());
                    for (name, sel) in &selectors {
                        let report = verify_bijection(
                            n,
                            |l| thm5_map(l, p, sel),
                            |l| thm5_inverse(l, p, sel),
                            identities::exactly_k_high_valuation(k, p),
                            identities::exactly_k_high_multiplicity(k, p),
                        );
                        out.push(bijection_line("T5-map", &format!("k={k} p={p} selector={name}"), report));
                    }
                }
            }
        }
        6 => {
            out.push(thm6_check(n).into());
            let report = verify_bijection(
                n,
                |l| glaisher_forward(l, 2),
                |l| glaisher_inverse(l, 2),
                ClassPredicate::HClass,
                ClassPredicate::GClass,
            );
            out.push(bijection_line("T6-HG", "", report));
        }
        other => bail!("unknown theorem {other}; expected 1 to 6"),
    }
    Ok(out)
}

/// Evaluates `1..=max_n` in parallel and returns the lines in ascending n.
pub fn run_check(theorem: u8, max_n: u64, opts: &CheckOptions) -> Result<Vec<Line>> {
    opts.validate(theorem)?;
    if !(1..=6).contains(&theorem) {
        bail!("unknown theorem {theorem}; expected 1 to 6");
    }
    let per_n: Vec<Vec<Line>> = (1..=max_n)
        .into_par_iter()
        .map(|n| lines_for(theorem, n, opts))
        .collect::<Result<_>>()?;
    Ok(per_n.into_iter().flatten().collect())
}
