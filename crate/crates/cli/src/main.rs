//! Command-line front end: construct codes and designs, report their
//! invariants, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 resource limit.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use perfcode::bitcode::{hamming_code, vasilev, BinaryCode, Lambda};
use perfcode::design::TripleSystem;
use perfcode::error::Error;
use perfcode::fundpart::fundamental_partition;
use perfcode::io;
use perfcode::linearity::mu_profile;
use perfcode::mollard::{mollard, mollard_sts};
use perfcode::verify::{verify_lemmas, verify_theorem2, verify_theorem3, VerificationReport};

#[derive(Parser)]
#[command(name = "perfcode", version, about = "Mollard perfect codes and designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code or triple system and write it to a file.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Print the invariant report of a .code or .sts file.
    Invariants {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a verification suite and report each claim.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// The linear perfect code of length 2^m - 1.
    Hamming {
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// A Vasil'ev code over a base perfect code.
    Vasilev {
        #[arg(long)]
        base: PathBuf,
        /// "zero" or "nonlinear:seed=<int>"
        #[arg(long, default_value = "zero")]
        lambda: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The Mollard code M(C, D); writes a JSON descriptor when the code
    /// is too large to enumerate.
    Mollard {
        #[arg(long)]
        c: PathBuf,
        #[arg(long)]
        d: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The Mollard triple system of two .sts inputs.
    MollardSts {
        #[arg(long)]
        s1: PathBuf,
        #[arg(long)]
        s2: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct CommonVerify {
    /// Node budget for backtracking searches.
    #[arg(long, default_value_t = 1 << 26)]
    budget: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Seed for any randomized construction inside the suite.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Accepted for interface stability; verification is single-threaded.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Structural lemma suite on M(C, D).
    Lemmas {
        #[command(flatten)]
        instance: CodePair,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// The stabilizer factorization of Sym(M(C, D)).
    Theorem2 {
        #[command(flatten)]
        instance: CodePair,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// The stabilizer factorization for composed triple systems.
    Theorem3 {
        #[arg(long)]
        s1: PathBuf,
        #[arg(long)]
        s2: PathBuf,
        #[command(flatten)]
        common: CommonVerify,
    },
    /// The lemmas and theorem2 suites on one code pair.
    All {
        #[command(flatten)]
        instance: CodePair,
        #[command(flatten)]
        common: CommonVerify,
    },
}

/// A pair of component codes, from files or as Hamming codes of the given
/// lengths.
#[derive(Args)]
struct CodePair {
    #[arg(long, conflicts_with = "t")]
    c: Option<PathBuf>,
    #[arg(long, conflicts_with = "m")]
    d: Option<PathBuf>,
    /// Length of a Hamming code to use as C.
    #[arg(long)]
    t: Option<usize>,
    /// Length of a Hamming code to use as D.
    #[arg(long)]
    m: Option<usize>,
}

impl CodePair {
    fn load(&self) -> Result<(BinaryCode, BinaryCode), Error> {
        let c = match (&self.c, self.t) {
            (Some(path), _) => io::read_code(path)?,
            (None, Some(t)) => hamming_of_length(t)?,
            (None, None) => {
                return Err(Error::InvalidParameter("provide --c or --t".into()));
            }
        };
        let d = match (&self.d, self.m) {
            (Some(path), _) => io::read_code(path)?,
            (None, Some(m)) => hamming_of_length(m)?,
            (None, None) => {
                return Err(Error::InvalidParameter("provide --d or --m".into()));
            }
        };
        Ok((c, d))
    }
}

fn hamming_of_length(n: usize) -> Result<BinaryCode, Error> {
    if !(n + 1).is_power_of_two() || n < 3 {
        return Err(Error::InvalidParameter(format!(
            "{n} is not a Hamming code length"
        )));
    }
    hamming_code((n + 1).trailing_zeros() as usize)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::ResourceLimit(msg)) => {
            eprintln!("resource limit: {msg}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Construct { kind } => {
            construct(kind)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { input, format } => {
            let report = invariants(&input)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => {
                    for (k, v) in report.as_object().unwrap() {
                        println!("{k}: {v}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => verify(suite),
    }
}

fn construct(kind: ConstructKind) -> Result<(), Error> {
    match kind {
        ConstructKind::Hamming { m, output } => {
            io::write_code(&hamming_code(m)?, &output)
        }
        ConstructKind::Vasilev {
            base,
            lambda,
            output,
        } => {
            let base_code = io::read_code(&base)?;
            let lam = parse_lambda(&lambda, &base_code)?;
            io::write_code(&vasilev(&base_code, &lam)?, &output)
        }
        ConstructKind::Mollard { c, d, output } => {
            let mc = mollard(&io::read_code(&c)?, &io::read_code(&d)?)?;
            match mc.enumerate(1 << 20) {
                Ok(code) => io::write_code(&code, &output),
                Err(Error::ResourceLimit(_)) => {
                    let desc = io::MollardDescriptor::new(
                        mc.t(),
                        mc.m(),
                        &c.display().to_string(),
                        &d.display().to_string(),
                    );
                    io::write_mollard_descriptor(&desc, &output)
                }
                Err(e) => Err(e),
            }
        }
        ConstructKind::MollardSts { s1, s2, output } => {
            let m = mollard_sts(&io::read_sts(&s1)?, &io::read_sts(&s2)?)?;
            io::write_sts(&m, &output)
        }
    }
}

fn parse_lambda(spec: &str, base: &BinaryCode) -> Result<Lambda, Error> {
    if spec == "zero" {
        return Ok(Lambda::zero(base));
    }
    if let Some(rest) = spec.strip_prefix("nonlinear:seed=") {
        let seed: u64 = rest
            .parse()
            .map_err(|e| Error::Parse(format!("bad seed: {e}")))?;
        return Lambda::nonlinear(base, seed);
    }
    Err(Error::InvalidParameter(format!(
        "lambda must be \"zero\" or \"nonlinear:seed=<int>\", got {spec:?}"
    )))
}

fn invariants(input: &PathBuf) -> Result<serde_json::Value, Error> {
    let text = std::fs::read_to_string(input)?;
    if input.extension().is_some_and(|e| e == "sts") {
        return sts_invariants(&io::parse_sts(&text)?);
    }
    match io::parse_code(&text) {
        Ok(code) => code_invariants(&code),
        Err(code_err) => io::parse_sts(&text)
            .map_err(|_| code_err)
            .and_then(|ts| sts_invariants(&ts)),
    }
}

fn code_invariants(code: &BinaryCode) -> Result<serde_json::Value, Error> {
    let profile = mu_profile(code)?;
    let partition = fundamental_partition(code)?;
    Ok(json!({
        "n": code.len(),
        "size": code.size(),
        "perfect": code.is_perfect(),
        "rank": code.rank(),
        "kernel_dim": code.kernel().rank(),
        "dual_dim": code.dual()?.rank(),
        "mu": profile.values(),
        "lin_mu": profile.lin_mu(),
        "mu_threshold": profile.threshold(),
        "partition_corank": partition.corank(),
    }))
}

fn sts_invariants(ts: &TripleSystem) -> Result<serde_json::Value, Error> {
    let nu: Vec<usize> = (1..=ts.order()).map(|i| ts.pasch_count_at(i)).collect();
    Ok(json!({
        "n": ts.order(),
        "triples": ts.triples().len(),
        "pasch_total": ts.pasch_total(),
        "nu": nu,
        "lin_nu": ts.lin_nu(),
        "nu_threshold": ts.nu_threshold(),
        "projective": ts.is_projective(),
    }))
}

fn verify(suite: VerifySuite) -> Result<ExitCode, Error> {
    let (reports, common) = match suite {
        VerifySuite::Lemmas { instance, common } => {
            let (c, d) = instance.load()?;
            (vec![verify_lemmas(&c, &d, common.budget)?], common)
        }
        VerifySuite::Theorem2 { instance, common } => {
            let (c, d) = instance.load()?;
            (vec![verify_theorem2(&c, &d, common.budget)?], common)
        }
        VerifySuite::Theorem3 { s1, s2, common } => {
            let report = verify_theorem3(
                &io::read_sts(&s1)?,
                &io::read_sts(&s2)?,
                common.budget,
            )?;
            (vec![report], common)
        }
        VerifySuite::All { instance, common } => {
            let (c, d) = instance.load()?;
            let reports = vec![
                verify_lemmas(&c, &d, common.budget)?,
                verify_theorem2(&c, &d, common.budget)?,
            ];
            (reports, common)
        }
    };

    let mut all_passed = true;
    for report in &reports {
        all_passed &= report.all_passed();
        print_report(report, common.format);
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).unwrap()),
        Format::Text => print!("{}", report.to_text()),
    }
}
