use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand as ClapSubcommand, ValueEnum};
use monres::complex::ComplexKind;
use monres::io::{
    emit_json, parse_ideal, render_text, run_corpus, run_subcommand, threads_from_env, CorpusCheck, Options,
    ReportDocument, RunOutcome, Subcommand,
};
use monres::Error;

#[derive(Parser)]
#[command(name = "monres", version, about = "Integral closedness of Artinian monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ClapSubcommand)]
enum Command {
    /// Integral closure and compact facets of the Newton polyhedron
    Closure(IdealArgs),
    /// Rees valuations
    Rees(IdealArgs),
    /// Cellular resolution checks and rank profile
    Resolve(IdealArgs),
    /// Residue components and the annihilator
    Residue(IdealArgs),
    /// Smallness certificates and the closedness decision
    Certify(IdealArgs),
    /// Normal fan, regular refinement and divisor table
    Fan(IdealArgs),
    /// Briançon-Skoda inclusion
    Bs(IdealArgs),
    /// Sweep a generated corpus of planar ideals
    Corpus(CorpusArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Taylor,
    Scarf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Equivalence,
    Duality,
    Bs,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Append a non-canonical timing section
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct IdealArgs {
    #[arg(long, conflicts_with = "inline", required_unless_present = "inline")]
    ideal: Option<PathBuf>,
    #[arg(long)]
    inline: Option<String>,
    #[arg(long, value_enum, default_value = "taylor")]
    complex: Kind,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 4)]
    bound: u64,
    #[arg(long, value_enum, default_value = "equivalence")]
    check: Check,
    #[command(flatten)]
    common: Common,
}

fn print(report: &ReportDocument, common: &Common, started: Instant) {
    let micros = started.elapsed().as_micros();
    match common.format {
        Format::Json => {
            let text = emit_json(report);
            if common.timing {
                let mut value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
                value["timing"] = serde_json::json!({ "elapsed_micros": micros as u64 });
                println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
            } else {
                println!("{text}");
            }
        }
        Format::Text => {
            print!("{}", render_text(report));
            if common.timing {
                println!("elapsed: {micros} us");
            }
        }
    }
}

fn run_ideal(sub: Subcommand, args: &IdealArgs) -> Result<RunOutcome, Error> {
    let text = match (&args.ideal, &args.inline) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(inline)) => inline.clone(),
        (None, None) => return Err(Error::Input("pass --ideal FILE or --inline JSON".into())),
    };
    let parsed = parse_ideal(&text)?;
    if let Some(notice) = &parsed.notice {
        eprintln!("note: {notice}");
    }
    let options = Options {
        complex: match args.complex {
            Kind::Taylor => ComplexKind::Taylor,
            Kind::Scarf => ComplexKind::Scarf,
        },
    };
    run_subcommand(sub, &parsed.ideal, &options)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let (result, common) = match &cli.command {
        Command::Corpus(args) => {
            let check = match args.check {
                Check::Equivalence => CorpusCheck::Equivalence,
                Check::Duality => CorpusCheck::Duality,
                Check::Bs => CorpusCheck::Bs,
            };
            let result = run_corpus(args.bound, check, threads_from_env()).map(|r| {
                let ok = r.failures.is_empty();
                RunOutcome {
                    report: ReportDocument::Corpus(r),
                    exit_code: if ok { 0 } else { 1 },
                }
            });
            (result, &args.common)
        }
        Command::Closure(a) => (run_ideal(Subcommand::Closure, a), &a.common),
        Command::Rees(a) => (run_ideal(Subcommand::Rees, a), &a.common),
        Command::Resolve(a) => (run_ideal(Subcommand::Resolve, a), &a.common),
        Command::Residue(a) => (run_ideal(Subcommand::Residue, a), &a.common),
        Command::Certify(a) => (run_ideal(Subcommand::Certify, a), &a.common),
        Command::Fan(a) => (run_ideal(Subcommand::Fan, a), &a.common),
        Command::Bs(a) => (run_ideal(Subcommand::Bs, a), &a.common),
    };
    match result {
        Ok(outcome) => {
            print(&outcome.report, common, started);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
