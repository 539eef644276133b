use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use adlv_cli::config::{Format, RunConfig, TypeSel};
use adlv_cli::error::{CliError, CliResult};
use adlv_cli::render::Document;
use adlv_cli::verify::Suite;
use adlv_cli::{query, tables, verify};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "adlv", version, about = "Affine Weyl group combinatorics: tables, queries and verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cartan type A-G, or "all" for tables.
    #[arg(long = "type", global = true, default_value = "all")]
    ty: String,
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Largest finite Weyl group to enumerate.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap: u64,
    /// Length budget for Bruhat interval enumeration.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest group for which tables are recomputed by graph search.
    #[arg(long, global = true, default_value_t = 4000)]
    brute_cap: u64,
    /// Leave wall_time out of verification reports.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bound tables and the wt(w0) closed forms.
    Tables,
    /// Evaluate one expression, for example "nu t[8,8] w0".
    Query { expression: String },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

fn run(cli: &Cli) -> CliResult<(Document, bool)> {
    let cap_positive = |v: u64, flag: &str| {
        if v == 0 {
            Err(CliError::Usage(format!("{flag} must be positive")))
        } else {
            Ok(v)
        }
    };
    let cfg = RunConfig {
        types: TypeSel::parse(&cli.ty)?,
        rank: cli.rank,
        group_cap: cap_positive(cli.cap, "--cap")?,
        interval_budget: cli.budget,
        seed: cli.seed,
        format: cli.format,
        brute_cap: cap_positive(cli.brute_cap, "--brute-cap")?,
        timing: !cli.no_timing,
    };
    match &cli.command {
        Command::Tables => Ok((tables::cmd_tables(&cfg)?, true)),
        Command::Query { expression } => Ok((query::cmd_query(&cfg, expression)?, true)),
        Command::Verify { suite } => verify::cmd_verify(&cfg, *suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(doc, ok)| {
        let text = doc.render(cli.format)?;
        match &cli.out {
            Some(path) => std::fs::write(path, text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("adlv: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
