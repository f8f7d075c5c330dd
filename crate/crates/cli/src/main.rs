use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hankel_cli::commands::{self, ClosedArgs, ClosedTarget, GenKind, TransformOp};
use hankel_cli::{
    default_grid, emit, exit_code, parse_bfile, parse_grid, parse_rat, reports_json, run_table,
    run_verify, CliError, CommandKind, Format, RunConfig, Target,
};
use hankel_core::{Params, Rat, Seq};

/// Exact Hankel determinants, sequence transforms and closed-form checks.
#[derive(Parser)]
#[command(name = "hankel", version)]
struct Cli {
    /// Output format for sequences and tables.
    #[arg(long, global = true, value_enum, env = "HANKEL_FORMAT", default_value_t = Format::Bfile)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    /// Rational `p` or `p/q`.
    #[arg(long, value_parser = rat, allow_hyphen_values = true)]
    alpha: Rat,
    #[arg(long, value_parser = rat, allow_hyphen_values = true)]
    beta: Rat,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a sequence.
    Gen {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        len: usize,
        #[arg(long, value_enum, default_value_t = GenKind::U)]
        kind: GenKind,
    },
    /// Apply a transform to a b-file.
    Transform {
        #[arg(long, value_enum)]
        op: TransformOp,
        #[arg(long, value_parser = rat, allow_hyphen_values = true)]
        alpha: Option<Rat>,
        #[arg(long, value_parser = rat, allow_hyphen_values = true)]
        r: Option<Rat>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Hankel transform of a b-file.
    Hankel {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Evaluate a closed form.
    Closed {
        #[arg(long, value_enum)]
        target: ClosedTarget,
        #[arg(long, value_parser = rat, allow_hyphen_values = true)]
        alpha: Option<Rat>,
        #[arg(long, value_parser = rat, allow_hyphen_values = true)]
        beta: Option<Rat>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Comma-separated row offsets for `krattenthaler`.
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<usize>>,
        /// Dimension for `lem72` and `lem73`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check every identity over a parameter grid.
    Verify {
        /// File of `alpha beta` lines.
        #[arg(
            long,
            conflicts_with = "default_grid",
            required_unless_present = "default_grid"
        )]
        grid: Option<PathBuf>,
        #[arg(long)]
        default_grid: bool,
        #[arg(long, default_value_t = hankel_cli::config::DEFAULT_N_MAX)]
        nmax: usize,
        /// Comma-separated identity ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Allow `--nmax` above the cost guard.
        #[arg(long)]
        force: bool,
        /// Seed for the random sequence corpus.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the full JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Check `thm22` against the doubled printed constant (expected to fail).
        #[arg(long)]
        thm22_printed_constant: bool,
    },
    /// Brute-force determinants beside closed forms.
    Table {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        nmax: usize,
    },
}

fn rat(s: &str) -> Result<Rat, String> {
    parse_rat(s)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_seq(path: &Path) -> Result<Seq, CliError> {
    parse_bfile(&read(path)?)
}

fn print_seq(s: &Seq, fmt: Format) {
    let out = emit(s, fmt);
    if fmt == Format::Json {
        println!("{out}");
    } else {
        print!("{out}");
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let fmt = cli.format;
    match cli.command {
        Command::Gen { params, len, kind } => {
            let p = Params::new(params.alpha, params.beta);
            print_seq(&commands::generate(kind, &p, len)?, fmt);
        }
        Command::Transform {
            op,
            alpha,
            r,
            k,
            input,
        } => {
            let s = read_seq(&input)?;
            let out = commands::transform(&s, op, alpha.as_ref(), r.as_ref(), k)?;
            print_seq(&out, fmt);
        }
        Command::Hankel { input } => print_seq(&commands::hankel(&read_seq(&input)?), fmt),
        Command::Closed {
            target,
            alpha,
            beta,
            nmax,
            rows,
            k,
        } => {
            let params = match (&alpha, &beta) {
                (Some(a), Some(b)) => Some(Params::new(a.clone(), b.clone())),
                _ => None,
            };
            let args = ClosedArgs {
                params,
                n_max: nmax,
                rows,
                beta,
                k,
            };
            print_seq(&commands::closed(target, &args)?, fmt);
        }
        Command::Verify {
            grid,
            default_grid: use_default,
            nmax,
            only,
            force,
            seed,
            report,
            thm22_printed_constant,
        } => {
            let mut cfg = RunConfig::new(CommandKind::Verify);
            cfg.grid = match grid {
                Some(path) => parse_grid(&read(&path)?)?,
                None if use_default => default_grid(),
                None => Vec::new(),
            };
            cfg.n_max = nmax;
            cfg.only = only;
            cfg.force = force;
            cfg.seed = seed;
            cfg.output_format = fmt;
            cfg.thm22_printed_constant = thm22_printed_constant;
            let reports = run_verify(&cfg)?;
            for r in &reports {
                print!("{}", r.summary());
            }
            if let Some(path) = report {
                fs::write(&path, reports_json(&reports))
                    .map_err(|source| CliError::Io { path, source })?;
            }
            return Ok(exit_code(&reports));
        }
        Command::Table {
            params,
            target,
            nmax,
        } => {
            let mut cfg = RunConfig::new(CommandKind::Table);
            cfg.params = Some(Params::new(params.alpha, params.beta));
            cfg.n_max = nmax;
            cfg.output_format = fmt;
            let out = run_table(&cfg, target)?;
            if fmt == Format::Json {
                println!("{out}");
            } else {
                print!("{out}");
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
