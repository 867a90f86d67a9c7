//! `uturn`: enumerate, map, inspect and verify U-turn tableaux, matrices
//! and ice configurations from the command line. All output is JSON.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use uturn_core::{
    asm_count, big_psi, big_psi_inv, brute_force_uasms_par, chi, chi_inv, for_each_shifted, for_each_uasm,
    generate_shifted_par, phi, phi_inv, psi, psi_inv, sp_dimension, uasm_count_product, uasm_count_recurrence,
    verify_identity, ConfigMatrix, Error, MuUasm, OrdinaryTableau, Partition, Poly, ShiftedTableau,
    SignatureMatrix, StrictPartition,
};

#[derive(Parser)]
#[command(name = "uturn", version, about = "U-turn ASMs, shifted symplectic tableaux and square ice")]
struct Cli {
    /// Worker threads; enumerations with more than one thread are computed in
    /// parallel and emitted in the same order.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every object of a kind as JSON Lines, or just count them.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumKind,
        /// Strict partition, e.g. 9,7,6,2,1.
        #[arg(long)]
        mu: String,
        /// Rank; the alphabet is 1̄ < 1 < ... < n̄ < n.
        #[arg(long)]
        n: usize,
        /// Print only the number of objects.
        #[arg(long)]
        count_only: bool,
    },
    /// Apply one of the maps between representations to a JSON payload.
    Map {
        #[arg(long, value_enum)]
        from: MapKind,
        #[arg(long, value_enum)]
        to: MapKind,
        /// Payload file; standard input when absent or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Statistics of a JSON payload.
    Stats {
        #[arg(long, value_enum)]
        kind: ObjectKind,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// x- and t-weights of a JSON payload.
    Weights {
        #[arg(long, value_enum)]
        kind: ObjectKind,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check the deformed character identity for one highest weight.
    Verify {
        /// Partition, e.g. 2,1; empty string for the zero weight.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Closed-form counts.
    Count {
        #[arg(long, value_enum)]
        formula: Formula,
        #[arg(long)]
        n: usize,
        /// Required for `dimension`.
        #[arg(long)]
        lambda: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    St,
    Uasm,
    Cm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    St,
    Uasm,
    Cm,
    Signature,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectKind {
    St,
    Uasm,
    Cm,
    Ordinary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    Asm,
    UasmProduct,
    UasmRecurrence,
    Dimension,
}

/// Failure of a command, carrying its exit code.
enum Failure {
    Core(Error),
    Input(String),
    Io(io::Error),
    /// The identity check ran but did not hold; the report is already written.
    Refuted,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Infeasible { .. }) => 2,
            Failure::Core(Error::Invariant(_)) | Failure::Refuted => 3,
            _ => 1,
        }
    }

    fn to_json(&self) -> Value {
        let (kind, message, violations) = match self {
            Failure::Core(e) => {
                let kind = match e {
                    Error::Partition(_) => "partition",
                    Error::Rank(_) => "rank",
                    Error::Malformed(_) => "malformed",
                    Error::Invalid(_) => "invalid",
                    Error::Infeasible { .. } => "infeasible",
                    Error::NotInvertible(_) => "not-invertible",
                    Error::Invariant(_) => "invariant",
                };
                let violations = match e {
                    Error::Invalid(v) => serde_json::to_value(v).unwrap_or(Value::Null),
                    _ => json!([]),
                };
                (kind, e.to_string(), violations)
            }
            Failure::Input(m) => ("input", m.clone(), json!([])),
            Failure::Io(e) => ("io", e.to_string(), json!([])),
            Failure::Refuted => ("identity", "identity check failed".to_string(), json!([])),
        };
        json!({ "error": { "kind": kind, "message": message, "violations": violations } })
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let err = json!({ "error": { "kind": "usage", "message": e.to_string().trim(), "violations": [] } });
            println!("{err}");
            return ExitCode::from(1);
        }
    };
    let sink: Box<dyn Write + Send> = match &cli.output {
        Some(path) => match fs::File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => return fail(&Failure::Io(e)),
        },
        None => Box::new(io::stdout()),
    };
    let mut out = BufWriter::new(sink);
    let result = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| run(cli.command, threads > 1, &mut out)),
            Err(e) => Err(Failure::Input(format!("--threads: {e}"))),
        },
        None => run(cli.command, false, &mut out),
    };
    let flushed = out.flush();
    match result {
        Ok(()) => match flushed {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => fail(&Failure::Io(e)),
            _ => ExitCode::SUCCESS,
        },
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Refuted) => ExitCode::from(3),
        Err(f) => fail(&f),
    }
}

fn fail(f: &Failure) -> ExitCode {
    println!("{}", f.to_json());
    ExitCode::from(f.exit_code())
}

/// `parallel` buffers enumerations so they can fan out; otherwise they stream.
fn run(command: Command, parallel: bool, out: &mut impl Write) -> Outcome {
    match command {
        Command::Enumerate { kind, mu, n, count_only } => enumerate(kind, &parse_strict(&mu, "--mu")?, n, count_only, parallel, out),
        Command::Map { from, to, input } => map(from, to, &read_input(input)?, out),
        Command::Stats { kind, input } => stats(kind, &read_input(input)?, out),
        Command::Weights { kind, input } => weights(kind, &read_input(input)?, out),
        Command::Verify { lambda, n } => {
            let report = verify_identity(&parse_partition(&lambda, "--lambda")?, n)?;
            emit(out, &report)?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Refuted)
            }
        }
        Command::Count { formula, n, lambda } => {
            let value = match formula {
                Formula::Asm => asm_count(n)?,
                Formula::UasmProduct => uasm_count_product(n)?,
                Formula::UasmRecurrence => uasm_count_recurrence(n)?,
                Formula::Dimension => {
                    let lambda = lambda.ok_or_else(|| Failure::Input("--lambda is required for dimension".into()))?;
                    sp_dimension(&parse_partition(&lambda, "--lambda")?, n)?
                }
            };
            writeln!(out, "{value}")?;
            Ok(())
        }
    }
}

fn parse_parts(s: &str, arg: &str) -> Result<Vec<usize>, Failure> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| Failure::Input(format!("{arg}: {p:?} is not a non-negative integer"))))
        .collect()
}

fn parse_partition(s: &str, arg: &str) -> Result<Partition, Failure> {
    Partition::new(parse_parts(s, arg)?).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn parse_strict(s: &str, arg: &str) -> Result<StrictPartition, Failure> {
    StrictPartition::new(parse_parts(s, arg)?).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn read_input(path: Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Core(Error::Malformed(e.to_string())))
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> Outcome {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn enumerate(
    kind: EnumKind,
    mu: &StrictPartition,
    n: usize,
    count_only: bool,
    parallel: bool,
    out: &mut impl Write,
) -> Outcome {
    let mut count = 0u64;
    let mut status: Outcome = Ok(());
    let mut sink = |value: &dyn erased::Emit| {
        count += 1;
        if !count_only && status.is_ok() {
            status = value.emit(out);
        }
    };
    match kind {
        EnumKind::St if parallel && !count_only => {
            for st in generate_shifted_par(mu, n)? {
                sink(&st);
            }
        }
        EnumKind::St => for_each_shifted(mu, n, |st| sink(&st))?,
        EnumKind::Uasm | EnumKind::Cm if parallel && !count_only => {
            for ua in brute_force_uasms_par(mu, n)? {
                match kind {
                    EnumKind::Cm => sink(&chi_inv(&ua)),
                    _ => sink(&ua),
                }
            }
        }
        EnumKind::Uasm => for_each_uasm(mu, n, |ua| sink(&ua))?,
        EnumKind::Cm => for_each_uasm(mu, n, |ua| sink(&chi_inv(&ua)))?,
    }
    status?;
    if count_only {
        writeln!(out, "{count}")?;
    }
    Ok(())
}

/// Object-safe JSON Lines emission for the enumeration sink.
mod erased {
    use super::*;

    pub trait Emit {
        fn emit(&self, out: &mut dyn Write) -> Outcome;
    }

    impl<T: Serialize> Emit for T {
        fn emit(&self, out: &mut dyn Write) -> Outcome {
            serde_json::to_writer(&mut *out, self).map_err(io::Error::from)?;
            writeln!(out)?;
            Ok(())
        }
    }
}

fn load_st(text: &str) -> Result<ShiftedTableau, Failure> {
    let st: ShiftedTableau = parse_json(text)?;
    st.validate().into_result()?;
    Ok(st)
}

fn load_uasm(text: &str) -> Result<MuUasm, Failure> {
    let ua: MuUasm = parse_json(text)?;
    ua.validate().into_result()?;
    Ok(ua)
}

fn load_cm(text: &str) -> Result<ConfigMatrix, Failure> {
    let cm: ConfigMatrix = parse_json(text)?;
    cm.validate().into_result()?;
    Ok(cm)
}

/// A sign matrix is decoded to a μ-UASM whose μ is read from the column sums.
fn uasm_from_signature(sm: &SignatureMatrix) -> Result<MuUasm, Failure> {
    if !sm.rows().is_multiple_of(2) {
        return Err(Error::Malformed(format!("{} rows; a sign matrix has an even number of rows", sm.rows())).into());
    }
    let cells = phi_inv(sm);
    let mut parts: Vec<usize> = (0..sm.cols())
        .filter(|&q| cells.iter().map(|r| i32::from(r[q])).sum::<i32>() == 1)
        .map(|q| q + 1)
        .collect();
    parts.reverse();
    let mu = StrictPartition::new(parts)?;
    Ok(MuUasm::new(mu, sm.rows() / 2, cells)?)
}

fn checked_chi_inv(ua: &MuUasm) -> Result<ConfigMatrix, Failure> {
    let cm = chi_inv(ua);
    if !cm.validate().is_valid() {
        return Err(Error::Invariant(format!("configuration of a valid mu-UASM fails validation: {}", cm.validate())).into());
    }
    Ok(cm)
}

fn map(from: MapKind, to: MapKind, text: &str, out: &mut impl Write) -> Outcome {
    // every source is first brought to a validated μ-UASM, except where a
    // direct map exists
    match (from, to) {
        (MapKind::St, MapKind::St) => emit(out, &load_st(text)?),
        (MapKind::St, MapKind::Signature) => emit(out, &psi(&load_st(text)?)),
        (MapKind::Signature, MapKind::St) => {
            let sm: SignatureMatrix = parse_json(text)?;
            if !sm.rows().is_multiple_of(2) {
                return Err(Error::Malformed(format!("{} rows; a sign matrix has an even number of rows", sm.rows())).into());
            }
            emit(out, &psi_inv(&sm, sm.rows() / 2)?)
        }
        (MapKind::Signature, MapKind::Signature) => {
            let sm: SignatureMatrix = parse_json(text)?;
            uasm_from_signature(&sm)?;
            emit(out, &sm)
        }
        _ => {
            let ua = match from {
                MapKind::St => big_psi(&load_st(text)?)?,
                MapKind::Uasm => load_uasm(text)?,
                MapKind::Cm => chi(&load_cm(text)?)?,
                MapKind::Signature => uasm_from_signature(&parse_json(text)?)?,
            };
            match to {
                MapKind::St => emit(out, &big_psi_inv(&ua)?),
                MapKind::Uasm => emit(out, &ua),
                MapKind::Cm => emit(out, &checked_chi_inv(&ua)?),
                MapKind::Signature => emit(out, &phi(&ua)),
            }
        }
    }
}

fn stats(kind: ObjectKind, text: &str, out: &mut impl Write) -> Outcome {
    match kind {
        ObjectKind::St => emit(out, &load_st(text)?.stats()),
        ObjectKind::Uasm => emit(out, &load_uasm(text)?.stats()),
        ObjectKind::Cm => emit(out, &load_cm(text)?.stats()),
        ObjectKind::Ordinary => {
            let t: OrdinaryTableau = parse_json(text)?;
            t.validate().into_result()?;
            emit(out, &t.stats())
        }
    }
}

#[derive(Serialize)]
struct Weights {
    x_weight: Poly,
    t_weight: Poly,
    x_weight_text: String,
    t_weight_text: String,
}

impl Weights {
    fn new(x_weight: Poly, t_weight: Poly) -> Self {
        Self { x_weight_text: x_weight.to_string(), t_weight_text: t_weight.to_string(), x_weight, t_weight }
    }
}

fn weights(kind: ObjectKind, text: &str, out: &mut impl Write) -> Outcome {
    let w = match kind {
        ObjectKind::St => {
            let st = load_st(text)?;
            Weights::new(st.x_weight(), st.t_weight())
        }
        ObjectKind::Uasm => {
            let ua = load_uasm(text)?;
            Weights::new(ua.x_weight(), ua.t_weight())
        }
        ObjectKind::Cm => {
            let cm = load_cm(text)?;
            Weights::new(cm.x_weight(), cm.t_weight())
        }
        ObjectKind::Ordinary => {
            let t: OrdinaryTableau = parse_json(text)?;
            t.validate().into_result()?;
            Weights::new(t.x_weight(), Poly::t_pow(t.n(), 2 * t.stats().bar as u32))
        }
    };
    emit(out, &w)
}
