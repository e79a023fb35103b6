//! Command-line entry point: runs verification suites over builtin or
//! file-based inputs and prints a deterministic report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use ydcheck::io;
use ydcheck::kernel::Field;
use ydcheck::suite::{
    default_corpus, run_suite, sha256_hex, AutSource, NamedAlgebra, Selection, SuiteConfig,
    SuiteName,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "ydcheck",
    version,
    about = "Exact verification of twisted Yetter-Drinfeld structures over finite-dimensional Hopf algebras",
    after_help = "Suites: hopf, yd, tcategory, double, dt, pii, all.\n\
                  With no --builtin/--input the default corpus is used:\n\
                  c2, c3, s3, sweedler4, dual:sweedler4.\n\
                  Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input."
)]
struct Cli {
    /// Suite to run: hopf | yd | tcategory | double | dt | pii | all
    suite: String,

    /// Built-in algebra by name (repeatable): c2, c3, c4, s3, sweedler4,
    /// dual:<name>
    #[arg(long = "builtin")]
    builtins: Vec<String>,

    /// Hopf algebra file (repeatable)
    #[arg(long = "input")]
    inputs: Vec<PathBuf>,

    /// Module file, verified over the first algebra (repeatable)
    #[arg(long = "module")]
    modules: Vec<PathBuf>,

    /// Automorphism test set: "std:<lmax>" for antipode powers plus group
    /// automorphisms, or a JSON file with an automorphism list
    #[arg(long, default_value = "std:1")]
    auts: String,

    /// Ground field: "Q" or "Fp:<prime>"
    #[arg(long, default_value = "Q")]
    field: String,

    /// Report format
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,

    /// Worker threads (0 = one per core)
    #[arg(long, default_value_t = 0)]
    parallel: usize,

    /// Refuse instances whose constructed algebras exceed this dimension
    /// (intermediate tensors stay within max_dim^3 entries)
    #[arg(long = "max-dim", default_value_t = 40)]
    max_dim: usize,

    /// Opt into checking a seeded random subset of instance combinations
    /// instead of all of them (inner basis loops stay exhaustive)
    #[arg(long)]
    sample: Option<usize>,

    /// Seed for --sample
    #[arg(long, default_value_t = 17)]
    seed: u64,

    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Q);
    }
    if let Some(p) = s
        .strip_prefix("Fp:")
        .or_else(|| s.strip_prefix("fp:"))
        .or_else(|| s.strip_prefix("FP:"))
    {
        let p: u64 = p.parse().map_err(|_| format!("bad prime in {s:?}"))?;
        return Field::fp(p).map_err(|e| e.to_string());
    }
    Err(format!("unknown field {s:?} (use Q or Fp:<prime>)"))
}

fn parse_auts(s: &str) -> Result<AutSource, String> {
    if let Some(l) = s.strip_prefix("std:") {
        let l_max: usize = l.parse().map_err(|_| format!("bad l_max in {s:?}"))?;
        return Ok(AutSource::Std { l_max });
    }
    let path = PathBuf::from(s);
    let bytes = std::fs::read(&path).map_err(|e| format!("cannot read {s:?}: {e}"))?;
    let file: io::AutFile =
        serde_json::from_slice(&bytes).map_err(|e| format!("malformed automorphism file: {e}"))?;
    Ok(AutSource::Refs(file.list))
}

fn run(cli: &Cli) -> Result<bool, String> {
    let suite: SuiteName = cli.suite.parse()?;
    let field = parse_field(&cli.field)?;
    let auts = parse_auts(&cli.auts)?;

    if cli.parallel > 0 {
        // ignore the error when a pool already exists (tests, repeat calls)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.parallel)
            .build_global();
    }

    let mut algebras = Vec::new();
    for name in &cli.builtins {
        algebras.push(NamedAlgebra::builtin(name, field).map_err(|e| e.to_string())?);
    }
    for path in &cli.inputs {
        // the hopf suite reports axiom failures; other suites require
        // valid algebras and reject bad files up front
        let loaded = if suite == SuiteName::Hopf {
            NamedAlgebra::from_path_shape_only(path)
        } else {
            NamedAlgebra::from_path(path)
        };
        algebras.push(loaded.map_err(|e| e.to_string())?);
    }
    if algebras.is_empty() {
        algebras = default_corpus(field).map_err(|e| e.to_string())?;
    }

    let mut modules = Vec::new();
    let mut module_records = Vec::new();
    for path in &cli.modules {
        let bytes = std::fs::read(path).map_err(|e| format!("cannot read {path:?}: {e}"))?;
        let file: io::ModuleFile =
            serde_json::from_slice(&bytes).map_err(|e| format!("malformed module file: {e}"))?;
        let name = path.display().to_string();
        module_records.push((name.clone(), sha256_hex(&bytes)));
        modules.push((name, file));
    }

    let cfg = SuiteConfig {
        field,
        auts,
        max_dim: cli.max_dim,
        selection: match cli.sample {
            None => Selection::Exhaustive,
            Some(count) => Selection::Sample {
                count,
                seed: cli.seed,
            },
        },
    };

    let mut report = run_suite(suite, &algebras, &modules, &cfg).map_err(|e| e.to_string())?;
    for (name, sha256) in module_records {
        report
            .inputs
            .push(ydcheck::report::InputRecord { name, sha256 });
    }

    let rendered = match cli.report {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => report.to_json(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, rendered).map_err(|e| format!("cannot write: {e}"))?,
        None => print!("{rendered}"),
    }
    Ok(report.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
