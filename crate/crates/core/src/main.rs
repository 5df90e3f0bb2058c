use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gridfloer::corpus;
use gridfloer::grid::Limits;
use gridfloer::io::commands;
use gridfloer::io::{GridFile, Report};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "gridfloer", version, about = "Grid homology of knots, singular knots and their symmetries over F2")]
struct Cli {
    #[arg(long, value_enum, default_value = "human", global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest grid size to enumerate.
    #[arg(long, default_value_t = 10, global = true)]
    max_n: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Bigraded ranks of the tilde homology, full and stripped.
    Homology { grid: String },
    /// Alexander polynomial from the graded Euler characteristic.
    Alexpoly { grid: String },
    /// Detected rotations and the equivariance check.
    Symmetry { grid: String },
    /// s_tau of a strongly invertible knot.
    Sstau {
        grid: String,
        /// Read s_tau off the stripped homology instead of the spectral sequence.
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        max_r: Option<usize>,
    },
    /// Every page of the equivariant spectral sequence.
    Spectral {
        grid: String,
        #[arg(long)]
        max_r: Option<usize>,
    },
    /// Build the singular grid and both resolutions and check the exact triangle.
    Skein { grid: String },
    /// Compare the singular E_inf with the quotient knot's homology.
    Thm2 {
        grid: String,
        /// Quotient knot grid (defaults to the `quotient` field of the grid file).
        #[arg(long)]
        quotient: Option<String>,
        /// Defaults to the `lambda` field of the grid file.
        #[arg(long)]
        lambda: Option<i32>,
        #[arg(long)]
        max_r: Option<usize>,
    },
}

/// A path on disk, or the name of a bundled grid.
fn load(arg: &str, base: Option<&Path>) -> Result<(GridFile, Option<PathBuf>)> {
    let mut candidates = vec![PathBuf::from(arg)];
    if let Some(dir) = base {
        candidates.push(dir.join(arg));
    }
    for p in candidates {
        if p.is_file() {
            let f = GridFile::read(&p)?;
            return Ok((f, p.parent().map(Path::to_path_buf)));
        }
    }
    match corpus::load(Path::new(arg).file_name().and_then(|s| s.to_str()).unwrap_or(arg)) {
        Some(f) => Ok((f?, None)),
        None => bail!("no grid file or bundled grid named `{arg}`"),
    }
}

fn run(cli: Cli) -> Result<Report> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().context("configuring the thread pool")?;
    }
    let limits = Limits { max_n: cli.max_n };
    let grid_arg = match &cli.cmd {
        Cmd::Homology { grid }
        | Cmd::Alexpoly { grid }
        | Cmd::Symmetry { grid }
        | Cmd::Sstau { grid, .. }
        | Cmd::Spectral { grid, .. }
        | Cmd::Skein { grid }
        | Cmd::Thm2 { grid, .. } => grid.clone(),
    };
    let (f, dir) = load(&grid_arg, None)?;
    let label = f.name.clone().unwrap_or(grid_arg);
    let body = match cli.cmd {
        Cmd::Homology { .. } => commands::homology(&f, &limits)?,
        Cmd::Alexpoly { .. } => commands::alexpoly(&f, &limits)?,
        Cmd::Symmetry { .. } => commands::symmetry(&f, &limits)?,
        Cmd::Sstau { reduced: true, .. } => commands::sstau(&f, &limits, true, None)?,
        Cmd::Sstau { max_r, .. } => commands::sstau(&f, &limits, false, max_r).context(
            "the full spectral sequence did not isolate s_tau (--reduced reads it from the stripped homology)",
        )?,
        Cmd::Spectral { max_r, .. } => commands::spectral(&f, &limits, max_r)?,
        Cmd::Skein { .. } => commands::skein(&f, &limits)?,
        Cmd::Thm2 { quotient, lambda, max_r, .. } => {
            let q =
                quotient.or(f.quotient.clone()).context("no quotient grid given and none named in the grid file")?;
            let lambda = lambda.or(f.lambda).context("no lambda given and none set in the grid file")?;
            let (qf, _) = load(&q, dir.as_deref())?;
            commands::thm2(&f, &qf, lambda, &limits, max_r)?
        }
    };
    Ok(Report::new(label, body))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            match format {
                Format::Human => print!("{}", report.human()),
                Format::Json => print!("{}", report.json()),
            }
            if report.ok() {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification failed");
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
