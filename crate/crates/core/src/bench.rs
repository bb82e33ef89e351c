//! Seeded Monte-Carlo benchmarks and Merge iteration histograms.
//!
//! Trial `t` of a run with seed `s` draws its message, error positions and
//! error values from a ChaCha8 stream seeded with `s ^ t`, so every
//! algorithm and multiplicity sees the same received words.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decoder::{list_decode, Algorithm, CodeSpec};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::UniPoly;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub code: CodeSpec,
    pub r_list: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    pub trials: usize,
    pub seed: u64,
    /// Number of symbol errors added to each codeword.
    pub errors: usize,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameters("trials must be at least 1".into()));
        }
        if self.errors > self.code.n() {
            return Err(Error::InvalidParameters(format!(
                "{} errors exceed code length {}",
                self.errors,
                self.code.n()
            )));
        }
        if self.r_list.is_empty() || self.r_list.contains(&0) {
            return Err(Error::InvalidParameters("multiplicities must be at least 1".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidParameters("no algorithm selected".into()));
        }
        Ok(())
    }
}

/// One random transmission.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub message: UniPoly,
    pub codeword: Vec<FieldElement>,
    pub received: Vec<FieldElement>,
    pub error_positions: Vec<usize>,
}

/// Per-trial seed for both the instance and the decoder's random stream.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed ^ trial as u64
}

/// Random message with exactly `errors` corrupted symbols.
pub fn make_instance(code: &CodeSpec, errors: usize, seed: u64, trial: usize) -> Instance {
    let f = code.field();
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, trial));
    let message = UniPoly::from_coeffs(
        (0..code.k())
            .map(|_| FieldElement(rng.random_range(0..f.size()) as u16))
            .collect(),
    );
    let codeword = code.encode(&message).expect("message degree is below k");
    let mut received = codeword.clone();
    let mut error_positions = sample(&mut rng, code.n(), errors).into_vec();
    error_positions.sort_unstable();
    for &i in &error_positions {
        let e = FieldElement(rng.random_range(1..f.size()) as u16);
        received[i] = received[i].add(e);
    }
    Instance {
        message,
        codeword,
        received,
        error_positions,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub trial: usize,
    pub seed: u64,
    /// Seconds spent in interpolation and root finding.
    pub wall_time: f64,
    pub merge_random_iterations: usize,
    pub reduce_steps: usize,
    pub list_size: usize,
    pub success: bool,
}

impl BenchRecord {
    pub const CSV_HEADER: &'static str =
        "algorithm,n,k,r,trial,seed,wall_time,merge_random_iterations,reduce_steps,list_size,success";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.9},{},{},{},{}",
            self.algorithm,
            self.n,
            self.k,
            self.r,
            self.trial,
            self.seed,
            self.wall_time,
            self.merge_random_iterations,
            self.reduce_steps,
            self.list_size,
            self.success
        )
    }
}

/// Decodes one trial and times it.
pub fn run_trial(code: &CodeSpec, inst: &Instance, r: usize, algorithm: Algorithm, seed: u64) -> Result<BenchRecord> {
    let start = Instant::now();
    let res = list_decode(&inst.received, code, r, algorithm, seed)?;
    let wall_time = start.elapsed().as_secs_f64();
    Ok(BenchRecord {
        algorithm,
        n: code.n(),
        k: code.k(),
        r,
        trial: 0,
        seed,
        wall_time,
        merge_random_iterations: res.stats.random_iterations(),
        reduce_steps: res.stats.reduce_steps(),
        list_size: res.candidates.len(),
        success: res.contains(&inst.message),
    })
}

/// Runs every (algorithm, r, trial) combination, writing and flushing one
/// CSV row per decode.
pub fn run_bench<W: Write>(config: &BenchConfig, out: &mut W) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    let code = &config.code;
    let instances: Vec<Instance> = (0..config.trials)
        .map(|t| make_instance(code, config.errors, config.seed, t))
        .collect();
    writeln!(out, "{}", BenchRecord::CSV_HEADER)?;
    out.flush()?;
    let mut records = Vec::new();
    for &algorithm in &config.algorithms {
        for &r in &config.r_list {
            for (trial, inst) in instances.iter().enumerate() {
                let seed = trial_seed(config.seed, trial);
                let mut rec = run_trial(code, inst, r, algorithm, seed)?;
                rec.trial = trial;
                writeln!(out, "{}", rec.csv_row())?;
                out.flush()?;
                records.push(rec);
            }
        }
    }
    Ok(records)
}

/// Counts of merge calls keyed by (r, extra random iterations).
pub type IterHist = BTreeMap<(usize, usize), usize>;

pub const ITERHIST_HEADER: &str = "r,extra_iterations,count";

/// Merge iteration histogram over all trials, one entry per merge call.
pub fn run_iterhist(config: &BenchConfig) -> Result<IterHist> {
    config.validate()?;
    if let Some(a) = config.algorithms.iter().find(|a| !a.is_binary()) {
        return Err(Error::InvalidParameters(format!(
            "iteration histograms need a binary algorithm, got {a}"
        )));
    }
    let code = &config.code;
    let mut hist = IterHist::new();
    for &algorithm in &config.algorithms {
        for &r in &config.r_list {
            for trial in 0..config.trials {
                let inst = make_instance(code, config.errors, config.seed, trial);
                let seed = trial_seed(config.seed, trial);
                let res = list_decode(&inst.received, code, r, algorithm, seed)?;
                for m in &res.stats.merges {
                    *hist.entry((r, m.random_iterations)).or_default() += 1;
                }
            }
        }
    }
    Ok(hist)
}

pub fn write_iterhist<W: Write>(hist: &IterHist, out: &mut W) -> Result<()> {
    writeln!(out, "{ITERHIST_HEADER}")?;
    for (&(r, extra), &count) in hist {
        writeln!(out, "{r},{extra},{count}")?;
    }
    out.flush()?;
    Ok(())
}
