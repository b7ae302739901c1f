//! The `bench` subcommand: run the epsilon-closeness decision end to end on
//! parametric instance families and record how many orientation predicates
//! each run evaluates, plus wall time, as CSV.

use super::rng::SplitMix64;
use super::CliError;
use crate::numeric::Rational;
use crate::reductions::{decide_eps_closeness_traced, Instance};
use clap::ValueEnum;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

/// Instance family shapes with qualitatively different decision paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Random dyadic rationals spread over `[0, n/2]` with unit eps; close
    /// pairs abound, so round one answers yes.
    Uniform,
    /// `a_i = i` with unit eps: every gap exactly eps, all points land on
    /// the hull, both rounds answer no.
    EpsSpaced,
    /// All values identical: round one says no and the perturbed round says
    /// yes.
    AllEqual,
    /// Tight pairs spaced far apart: about half the consecutive gaps close.
    HalfClose,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Uniform => "uniform",
            Family::EpsSpaced => "eps-spaced",
            Family::AllEqual => "all-equal",
            Family::HalfClose => "half-close",
        }
    }

    pub fn build_instance(self, n: usize, rng: &mut SplitMix64) -> Instance {
        let eps = Rational::one();
        let values: Vec<Rational> = match self {
            Family::Uniform => {
                // Numerators over a fixed power-of-two denominator keep the
                // big-integer arithmetic shallow at large n.
                let denominator = 4096;
                let bound = n as u64 * (denominator as u64 / 2) + 1;
                (0..n)
                    .map(|_| Rational::from_ratio(rng.below(bound) as i64, denominator))
                    .collect()
            }
            Family::EpsSpaced => (1..=n as i64).map(Rational::from_int).collect(),
            Family::AllEqual => {
                let value = Rational::from_ratio(7, 3);
                vec![value; n]
            }
            Family::HalfClose => (0..n)
                .map(|i| {
                    let base = Rational::from_int(2 * (i as i64 / 2));
                    if i % 2 == 1 {
                        &base + &Rational::from_ratio(1, 4)
                    } else {
                        base
                    }
                })
                .collect(),
        };
        Instance::new(values, eps).expect("families keep the invariants")
    }
}

/// One benchmark measurement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub family: String,
    pub n: usize,
    pub orient_calls: u64,
    pub wall_ns: u128,
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub sizes: Vec<usize>,
    pub families: Vec<Family>,
    pub seed: u64,
}

/// Builds the instance and runs the full epsilon-closeness decision
/// (including the perturbed round when round one says no), timed.
pub fn bench_one(family: Family, n: usize, seed: u64) -> BenchRecord {
    let mut rng = SplitMix64::new(seed ^ (n as u64).wrapping_mul(0x9e37_79b9));
    let inst = family.build_instance(n, &mut rng);
    let started = Instant::now();
    let trace = decide_eps_closeness_traced(&inst);
    let wall_ns = started.elapsed().as_nanos();
    BenchRecord {
        family: family.name().to_string(),
        n,
        orient_calls: trace.orient_calls,
        wall_ns,
    }
}

pub fn run_bench(opts: &BenchOptions) -> Result<Vec<BenchRecord>, CliError> {
    if opts.sizes.is_empty() || opts.families.is_empty() {
        return Err(CliError::Invalid(
            "bench needs at least one size and one family".to_string(),
        ));
    }
    if let Some(bad) = opts.sizes.iter().find(|n| **n < 2) {
        return Err(CliError::Invalid(format!(
            "bench sizes must be at least 2, got {bad}"
        )));
    }
    let mut records = Vec::new();
    for family in &opts.families {
        for &n in &opts.sizes {
            records.push(bench_one(*family, n, opts.seed));
        }
    }
    Ok(records)
}

pub fn render_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("family,n,orient_calls,wall_ns\n");
    for r in records {
        writeln!(out, "{},{},{},{}", r.family, r.n, r.orient_calls, r.wall_ns).unwrap();
    }
    out
}

/// Re-parses CSV produced by [`render_csv`]; counts survive exactly.
pub fn parse_csv(text: &str) -> Result<Vec<BenchRecord>, CliError> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != "family,n,orient_calls,wall_ns" {
        return Err(CliError::Invalid(format!("unexpected CSV header `{header}`")));
    }
    let mut records = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let parsed = (|| -> Option<BenchRecord> {
            let [family, n, orient_calls, wall_ns] = fields.as_slice() else {
                return None;
            };
            Some(BenchRecord {
                family: family.to_string(),
                n: n.parse().ok()?,
                orient_calls: orient_calls.parse().ok()?,
                wall_ns: wall_ns.parse().ok()?,
            })
        })();
        match parsed {
            Some(record) => records.push(record),
            None => {
                return Err(CliError::Invalid(format!(
                    "malformed CSV record on data line {}: `{line}`",
                    idx + 1
                )))
            }
        }
    }
    Ok(records)
}

pub fn write_csv(records: &[BenchRecord], path: &Path) -> Result<(), CliError> {
    std::fs::write(path, render_csv(records)).map_err(|err| CliError::Io {
        path: path.display().to_string(),
        message: err.to_string(),
    })
}
