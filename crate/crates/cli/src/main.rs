//! `hrnorm`: normalize Croatian text, score it against a gold corpus, and
//! validate data files.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hrnorm_core::eval::{render_report, Corpus, ReportFormat};
use hrnorm_core::fixtures::{validate_all, validate_files, FixtureManifest};
use hrnorm_core::{Error, Normalizer, RunConfig, RunReport, Violation};
use rayon::prelude::*;

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_STRICT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "hrnorm", version, about = "Croatian text normalization for speech synthesis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rewrite non-standard words (numbers, dates, abbreviations, ...) as spoken words.
    Normalize(NormalizeArgs),
    /// Score the normalizer against an annotated gold corpus.
    Evaluate(EvaluateArgs),
    /// Validate data files, or a fixture manifest and everything it lists.
    LexiconCheck(CheckArgs),
}

#[derive(Debug, Args)]
struct ResourceArgs {
    /// Genre profile selecting dictionary overlays (e.g. news, formal, educational).
    #[arg(long)]
    profile: Option<String>,
    /// Dictionary file replacing the bundled dictionaries; repeatable.
    #[arg(long = "lexicon", value_name = "FILE")]
    lexicons: Vec<PathBuf>,
    /// TOML file with the same keys as the flags; flags win.
    #[arg(long, value_name = "TOML")]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct NormalizeArgs {
    #[command(flatten)]
    resources: ResourceArgs,
    /// Fail with exit status 3 when any span cannot be expanded.
    #[arg(long)]
    strict: bool,
    /// Keep the original case of sentence-initial expansions.
    #[arg(long)]
    no_capitalize: bool,
    /// Write one JSON record per non-standard span to FILE.
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Input files, processed in parallel and printed in order; stdin when absent.
    #[arg(value_name = "INPUT")]
    inputs: Vec<PathBuf>,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[command(flatten)]
    resources: ResourceArgs,
    /// Gold annotation file.
    #[arg(long, value_name = "FILE")]
    gold: PathBuf,
    /// Directory of annotated texts; defaults to `texts/` next to the gold file.
    #[arg(long, value_name = "DIR")]
    texts: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Data files (.tsv, .txt) or a manifest (.toml).
    #[arg(value_name = "FILE", required_unless_present = "write_manifest")]
    files: Vec<PathBuf>,
    /// Regenerate DIR/manifest.toml from the files under DIR.
    #[arg(long, value_name = "DIR")]
    write_manifest: Option<PathBuf>,
}

/// A failure with its exit status; the message goes to stderr.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let error = e.into();
        let code = match error.downcast_ref::<Error>() {
            Some(Error::StrictMiss(_)) => EXIT_STRICT,
            _ => EXIT_INPUT,
        };
        Failure { code, error }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.command {
        Command::Normalize(args) => normalize(args),
        Command::Evaluate(args) => evaluate(args),
        Command::LexiconCheck(args) => lexicon_check(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, error }) => {
            eprintln!("hrnorm: {error:#}");
            ExitCode::from(code)
        }
    }
}

fn run_config(args: &ResourceArgs) -> Result<RunConfig> {
    let mut config = match &args.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    if args.profile.is_some() {
        config.profile.clone_from(&args.profile);
    }
    if !args.lexicons.is_empty() {
        config.lexicons.clone_from(&args.lexicons);
    }
    Ok(config)
}

fn normalize(args: NormalizeArgs) -> Result<(), Failure> {
    if args.report.is_some() && args.inputs.len() > 1 {
        return Err(Failure {
            code: EXIT_USAGE,
            error: anyhow::anyhow!("--report takes a single input; offsets would be ambiguous across files"),
        });
    }
    let mut config = run_config(&args.resources)?;
    config.strict |= args.strict;
    if args.no_capitalize {
        config.capitalize_sentence_start = false;
    }
    let normalizer = Normalizer::new(&config)?;

    let inputs: Vec<(String, Vec<u8>)> = if args.inputs.is_empty() {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).context("reading stdin")?;
        vec![("<stdin>".into(), buf)]
    } else {
        args.inputs
            .iter()
            .map(|p| {
                Ok((p.display().to_string(), std::fs::read(p).with_context(|| format!("reading {}", p.display()))?))
            })
            .collect::<Result<_>>()?
    };
    let results: Vec<_> = inputs.par_iter().map(|(_, bytes)| normalizer.normalize_bytes(bytes)).collect();

    let mut stdout = std::io::stdout().lock();
    for ((name, _), result) in inputs.iter().zip(results) {
        match result {
            Ok(out) => {
                stdout.write_all(out.text.as_bytes()).context("writing output")?;
                if let Some(path) = &args.report {
                    write_report(path, &out.report)?;
                }
            }
            Err(Error::StrictMiss(report)) => {
                if let Some(path) = &args.report {
                    write_report(path, &report)?;
                }
                for miss in report.misses() {
                    eprintln!("{name}:{}: unresolved {} `{}`", miss.offset, miss.class, miss.surface);
                }
                return Err(anyhow::Error::new(Error::StrictMiss(report)).context(name.clone()).into());
            }
            Err(e) => return Err(anyhow::Error::new(e).context(name.clone()).into()),
        }
    }
    stdout.flush().context("writing output")?;
    Ok(())
}

fn write_report(path: &Path, report: &RunReport) -> Result<()> {
    std::fs::write(path, report.to_jsonl()).with_context(|| format!("writing report {}", path.display()))
}

fn evaluate(args: EvaluateArgs) -> Result<(), Failure> {
    let config = run_config(&args.resources)?;
    let texts = match args.texts {
        Some(dir) => dir,
        None => args.gold.parent().unwrap_or(Path::new(".")).join("texts"),
    };
    let corpus = Corpus::load(&args.gold, &texts)?;
    let (report, _) = corpus.run(&config)?;
    let format = match args.format {
        Format::Text => ReportFormat::Text,
        Format::Json => ReportFormat::Json,
    };
    print!("{}", render_report(&report, format));
    Ok(())
}

fn lexicon_check(args: CheckArgs) -> Result<(), Failure> {
    if let Some(dir) = &args.write_manifest {
        let manifest = FixtureManifest::generate(dir)?;
        let path = dir.join("manifest.toml");
        std::fs::write(&path, manifest.to_toml()).with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {} ({} files)", path.display(), manifest.files.len());
        if args.files.is_empty() {
            return Ok(());
        }
    }
    let (manifests, data): (Vec<PathBuf>, Vec<PathBuf>) =
        args.files.into_iter().partition(|p| p.extension().is_some_and(|e| e == "toml"));
    let mut violations: Vec<Violation> = Vec::new();
    let mut checked = data.len();
    for manifest in &manifests {
        let report = validate_all(manifest)?;
        checked += report.files_checked;
        violations.extend(report.violations);
    }
    violations.extend(validate_files(&data));
    for v in &violations {
        eprintln!("{v}");
    }
    if violations.is_empty() {
        println!("ok: {checked} file(s) checked");
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_INPUT,
            error: anyhow::anyhow!("{} violation(s) in {checked} file(s)", violations.len()),
        })
    }
}
