use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gsinterp::bench::{run_bench, run_iterhist, write_iterhist, BenchConfig};
use gsinterp::decoder::{list_decode_with, Algorithm, CodeSpec, DecodeOptions};
use gsinterp::field::default_primitive_poly;
use gsinterp::{Error, Field, FieldElement};

const EXIT_EMPTY_LIST: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_FIELD: u8 = 65;
const EXIT_SOFTWARE: u8 = 70;
const EXIT_IO: u8 = 74;

/// Guruswami-Sudan list decoder and interpolation benchmarks for
/// Reed-Solomon codes over GF(2^m).
#[derive(Parser, Debug)]
#[command(name = "gsinterp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decode one received word and print the candidate list.
    Decode(DecodeArgs),
    /// Time decoders on random transmissions and write a CSV of records.
    Bench(BenchArgs),
    /// Histogram of random iterations per Merge call.
    Iterhist(BenchArgs),
}

#[derive(Args, Debug)]
struct CodeArgs {
    /// Code length.
    #[arg(long)]
    n: usize,
    /// Code dimension.
    #[arg(long)]
    k: usize,
    /// Field extension degree; defaults to the smallest field holding n locators.
    #[arg(long)]
    m: Option<u32>,
    /// Primitive polynomial as hex, e.g. 25 for x^5+x^2+1.
    #[arg(long = "prim-poly")]
    prim_poly: Option<String>,
}

impl CodeArgs {
    fn code(&self) -> Result<CodeSpec, CliError> {
        let m = self.m.unwrap_or_else(|| {
            (2..=16)
                .find(|&m| (1usize << m) > self.n)
                .unwrap_or(16)
        });
        let poly = match &self.prim_poly {
            Some(s) => {
                let t = s.trim_start_matches("0x");
                u32::from_str_radix(t, 16)
                    .map_err(|e| CliError::usage(format!("bad --prim-poly {s:?}: {e}")))?
            }
            None => default_primitive_poly(m).ok_or_else(|| CliError::field(Error::DegreeOutOfRange(m)))?,
        };
        let field = Field::new(m, poly).map_err(CliError::field)?;
        CodeSpec::new(field, self.n, self.k).map_err(CliError::from)
    }
}

#[derive(Args, Debug)]
struct DecodeArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Root multiplicity.
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// One of iia, lee_osullivan, binary, binary_reencoded.
    #[arg(long, default_value = "binary")]
    algorithm: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Received word as comma-separated hex symbols.
    #[arg(long)]
    received: String,
    /// Stop after the multiplicity-1 stage when it finds a codeword within
    /// half the minimum distance.
    #[arg(long)]
    gao_early_exit: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Single root multiplicity.
    #[arg(long, conflicts_with = "r_list")]
    r: Option<usize>,
    /// Multiplicities as a comma list (1,2,4) or an inclusive range (1..4).
    #[arg(long = "r-list")]
    r_list: Option<String>,
    /// Comma-separated algorithm names; bench defaults to all four,
    /// iterhist to binary.
    #[arg(long)]
    algorithm: Option<String>,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Symbol errors per transmission.
    #[arg(long, default_value_t = 0)]
    errors: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl BenchArgs {
    fn config(&self, default_algorithms: &str) -> Result<BenchConfig, CliError> {
        let r_list = match (&self.r, &self.r_list) {
            (Some(r), _) => vec![*r],
            (None, Some(s)) => parse_r_list(s)?,
            (None, None) => vec![1],
        };
        let config = BenchConfig {
            code: self.code.code()?,
            r_list,
            algorithms: parse_algorithms(self.algorithm.as_deref().unwrap_or(default_algorithms))?,
            trials: self.trials,
            seed: self.seed,
            errors: self.errors,
        };
        config.validate()?;
        Ok(config)
    }

    fn writer(&self) -> Result<Box<dyn Write>, CliError> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| CliError {
                code: EXIT_IO,
                msg: format!("cannot create {}: {e}", p.display()),
            })?)),
            None => Box::new(io::stdout().lock()),
        })
    }
}

#[derive(Debug)]
struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    fn usage(msg: String) -> CliError {
        CliError { code: EXIT_USAGE, msg }
    }

    fn field(e: Error) -> CliError {
        CliError {
            code: EXIT_FIELD,
            msg: e.to_string(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::DegreeOutOfRange(_) | Error::NotPrimitive { .. } => EXIT_FIELD,
            Error::InvalidParameters(_) | Error::Parse(_) | Error::DegreeTooHigh { .. } => EXIT_USAGE,
            Error::Io(_) => EXIT_IO,
            _ => EXIT_SOFTWARE,
        };
        CliError {
            code,
            msg: e.to_string(),
        }
    }
}

fn parse_r_list(s: &str) -> Result<Vec<usize>, CliError> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| CliError::usage(format!("bad multiplicity {t:?}: {e}")))
    };
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(CliError::usage(format!("empty range {s:?}")));
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

fn parse_algorithms(s: &str) -> Result<Vec<Algorithm>, CliError> {
    s.split(',').map(|t| t.parse().map_err(CliError::from)).collect()
}

fn parse_received(s: &str) -> Result<Vec<FieldElement>, CliError> {
    s.split(',')
        .map(|t| FieldElement::from_hex(t.trim()).map_err(|e| CliError::usage(e.to_string())))
        .collect()
}

fn hex_list(xs: &[FieldElement]) -> String {
    xs.iter().map(|x| x.to_hex()).collect::<Vec<_>>().join(",")
}

fn cmd_decode(args: &DecodeArgs) -> Result<u8, CliError> {
    let code = args.code.code()?;
    let algorithm: Algorithm = args.algorithm.parse()?;
    let received = parse_received(&args.received)?;
    let opts = DecodeOptions {
        gao_early_exit: args.gao_early_exit,
    };
    let res = list_decode_with(&received, &code, args.r, algorithm, args.seed, &opts)?;
    let p = res.params;
    println!("field: {}", code.field());
    println!("code: n={} k={}", code.n(), code.k());
    println!("params: r={} rho={} l={} tau={}", p.r, p.rho, p.l, p.tau);
    println!("algorithm: {algorithm}");
    println!(
        "stats: merge_calls={} random_iterations={} reduce_steps={} fallback_used={} gao_exit={}",
        res.stats.merge_calls(),
        res.stats.random_iterations(),
        res.stats.reduce_steps(),
        res.stats.fallback_used(),
        res.gao_exit
    );
    println!("candidates: {}", res.candidates.len());
    for c in &res.candidates {
        let msg = c.message.coeffs();
        let text = if msg.is_empty() { "0".to_string() } else { hex_list(msg) };
        println!("message: {text} agreement={}", c.agreement);
    }
    Ok(if res.candidates.is_empty() { EXIT_EMPTY_LIST } else { 0 })
}

fn cmd_bench(args: &BenchArgs) -> Result<u8, CliError> {
    let config = args.config("iia,lee_osullivan,binary,binary_reencoded")?;
    let mut out = args.writer()?;
    run_bench(&config, &mut out)?;
    Ok(0)
}

fn cmd_iterhist(args: &BenchArgs) -> Result<u8, CliError> {
    let hist = run_iterhist(&args.config("binary")?)?;
    let mut out = args.writer()?;
    write_iterhist(&hist, &mut out)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Decode(a) => cmd_decode(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Iterhist(a) => cmd_iterhist(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
