//! Command-line surface for the eqspec toolkit: reproduce the closed-form
//! spectral tables, run the solvers and sweeps, and serialize JSON/CSV
//! reports. Exit code 0 when every embedded check passes, 1 when any
//! fails, 2 on argument errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "eqspec", version, about = "Equivariant eigenvalue optimization toolkit")]
struct Cli {
    /// Output directory (overrides the EQSPEC_OUT environment variable).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Flat key=value config file supplying default flag values;
    /// command-line flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the symmetry groups and report orders and orbit sizes.
    Groups {
        /// One family (e.g. T, Td, Th, O, Oh, I, Ih, Z5, D4, Z6-disk,
        /// D6-disk); all named families when omitted.
        #[arg(long)]
        group: Option<String>,
    },
    /// Members of the orbit semigroup of a group.
    Semigroup {
        #[arg(long)]
        group: String,
        /// Largest member to list.
        #[arg(long, default_value_t = 120)]
        max: u64,
    },
    /// Equivariant maxima on the sphere for every level up to k-max.
    LambdaTable {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 70)]
        k_max: u64,
    },
    /// Equivariant Steklov maxima on the disk for every level up to k-max.
    SteklovTable {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 30)]
        k_max: u64,
    },
    /// Maximizing bubble configurations at one level.
    Configurations {
        /// Sphere family (mutually exclusive with --disk-n).
        #[arg(long)]
        group: Option<String>,
        /// Disk symmetry order.
        #[arg(long)]
        disk_n: Option<u64>,
        #[arg(long)]
        k: u64,
    },
    /// Sharpness of the 2πk bound under n-fold symmetry.
    Hps {
        #[arg(long, default_value_t = 12)]
        n_max: u64,
        #[arg(long, default_value_t = 200)]
        k_max: u64,
    },
    /// Steklov spectrum of a boundary density.
    DiskSolve {
        /// uniform[:c] | poisson:re,im[,w] | glue:n,bumps,t
        #[arg(long, default_value = "uniform")]
        density: String,
        #[arg(long, default_value_t = 64)]
        n_basis: usize,
        #[arg(long, default_value_t = 20)]
        k_max: usize,
    },
    /// Boundary density, index and sharpness data of a Blaschke product.
    Blaschke {
        /// z^d shortcut.
        #[arg(long)]
        power: Option<u32>,
        /// Factor "re,im,multiplicity"; repeatable.
        #[arg(long)]
        zero: Vec<String>,
        #[arg(long, default_value_t = 320)]
        n_basis: usize,
        /// Unit-eigenvalue classification threshold.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Laplace spectrum of a sphere density.
    SphereSolve {
        /// round | sh:m | map:power:d | map:oct4 | map:ico7 | bumps:tetra:eps
        #[arg(long, default_value = "round")]
        density: String,
        #[arg(long, default_value_t = 25)]
        l_max: usize,
        #[arg(long, default_value_t = 35)]
        k_max: usize,
    },
    /// Spectral index/nullity of a map density, with the algebraic
    /// kernel cross-check where available.
    Index {
        /// oct4 | ico7 | power:d | sh:m
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 30)]
        l_max: usize,
        #[arg(long, default_value_t = 0.02)]
        tol: f64,
    },
    /// Symmetric-power decompositions over a McKay graph.
    Mckay {
        /// 2T | 2O | 2I
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 12)]
        k_max: u32,
    },
    /// Admissible (m, d) pairs for equivariant harmonic maps.
    Admissible {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 11)]
        k_max: u64,
    },
    /// Sweep the concentrating boundary family and record the normalized
    /// eigenvalue.
    GlueSweep {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        bumps: u32,
        #[arg(long, default_value_t = 0.995)]
        t_max: f64,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, default_value_t = 512)]
        n_basis: usize,
    },
    /// Projected-subgradient ascent over symmetric densities.
    Maximize {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        n_sym: usize,
        #[arg(long, default_value_t = 10.0)]
        cap: f64,
        #[arg(long, default_value_t = 300)]
        iterations: usize,
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
    },
    /// Run the full acceptance battery.
    VerifyAll,
}

fn output_dir(cli_out: &Option<PathBuf>) -> PathBuf {
    if let Some(p) = cli_out {
        return p.clone();
    }
    if let Ok(p) = std::env::var("EQSPEC_OUT") {
        if !p.is_empty() {
            return PathBuf::from(p);
        }
    }
    PathBuf::from("eqspec-out")
}

/// Inject `key=value` lines from the config file as `--key value` pairs
/// for flags not already present on the command line.
fn args_with_config() -> Vec<String> {
    let mut args: Vec<String> = std::env::args().collect();
    let Some(pos) = args.iter().position(|a| a == "--config") else {
        return args;
    };
    let Some(path) = args.get(pos + 1).cloned() else {
        return args;
    };
    let Ok(body) = std::fs::read_to_string(&path) else {
        eprintln!("error: cannot read config file {path}");
        std::process::exit(2);
    };
    for line in body.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            eprintln!("error: malformed config line: {line}");
            std::process::exit(2);
        };
        let flag = format!("--{}", key.trim());
        if !args.iter().any(|a| *a == flag) {
            args.push(flag);
            args.push(value.trim().to_string());
        }
    }
    args
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(args_with_config());
    let out = output_dir(&cli.out);

    let result = match &cli.command {
        Command::Groups { group } => commands::groups(group.as_deref()),
        Command::Semigroup { group, max } => commands::semigroup(group, *max),
        Command::LambdaTable { group, k_max } => commands::lambda_table(group, *k_max),
        Command::SteklovTable { n, k_max } => commands::steklov_table(*n, *k_max),
        Command::Configurations { group, disk_n, k } => {
            commands::configurations(group.as_deref(), *disk_n, *k)
        }
        Command::Hps { n_max, k_max } => commands::hps(*n_max, *k_max),
        Command::DiskSolve { density, n_basis, k_max } => {
            commands::disk_solve(density, *n_basis, *k_max)
        }
        Command::Blaschke { power, zero, n_basis, tol } => {
            commands::blaschke(*power, zero, *n_basis, *tol)
        }
        Command::SphereSolve { density, l_max, k_max } => {
            commands::sphere_solve(density, *l_max, *k_max)
        }
        Command::Index { map, l_max, tol } => commands::index(map, *l_max, *tol),
        Command::Mckay { graph, k_max } => commands::mckay(graph, *k_max),
        Command::Admissible { group, k_max } => commands::admissible(group, *k_max),
        Command::GlueSweep { n, k, bumps, t_max, steps, n_basis } => {
            commands::glue_sweep_cmd(*n, *k, *bumps, *t_max, *steps, *n_basis, &out)
        }
        Command::Maximize { k, n_sym, cap, iterations, seed } => {
            commands::maximize(*k, *n_sym, *cap, *iterations, *seed, &out)
        }
        Command::VerifyAll => commands::verify_all(),
    };

    let mut bundle = match result {
        Ok(b) => b,
        Err(commands::CommandError::Argument(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(commands::CommandError::Runtime(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    match bundle.write(&out) {
        Ok(paths) => {
            bundle.print_summary();
            for p in paths {
                eprintln!("wrote {}", p.display());
            }
        }
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(1);
        }
    }

    if bundle.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
