use std::path::PathBuf;
use std::process::ExitCode;

use auslander_cli::commands::{self, Common, IndecMethod, OrthoMode, Outcome, TripleArgs};
use auslander_cli::report::EXIT_INPUT;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "auslander",
    version,
    about = "Exact homological invariants and higher Auslander correspondence checks"
)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Degree cap for resolutions.
    #[arg(long, global = true, default_value_t = auslander::homology::DEFAULT_CAP)]
    cap: usize,
    /// Largest number of indecomposables the knitting may produce.
    #[arg(long, global = true, default_value_t = 200)]
    max_indecs: usize,
    /// Largest dimension of a knitted indecomposable.
    #[arg(long, global = true, default_value_t = 64)]
    max_dim: usize,
    /// Write the RunReport JSON here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Write DOT output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Knit,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Enumerate,
    Verify,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension, Cartan matrix, global and dominant dimensions, (m,n)-table, Gorenstein profile.
    Invariants {
        algebra: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
    /// Indecomposable modules up to isomorphism.
    Indecs {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Knit)]
        method: Method,
        /// Total dimension bound for the brute-force search.
        #[arg(long, default_value_t = 4)]
        dim_cap: usize,
    },
    /// Maximal (n-1)-orthogonal subcategories of B = ^⊥T.
    Orthogonal {
        algebra: PathBuf,
        #[arg(long)]
        n: usize,
        /// Cotilting module T (shorthand, JSON or file); defaults to DA.
        #[arg(long)]
        cotilting: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Enumerate)]
        mode: Mode,
        /// Module list to certify in verify mode.
        #[arg(long)]
        modules: Option<PathBuf>,
    },
    /// Auslander triples and the bijection with algebras.
    Auslander {
        #[command(subcommand)]
        action: AuslanderCmd,
    },
    /// rep.dim_n by exhaustive search.
    Repdim {
        algebra: PathBuf,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Largest 1-orthogonal subcategory (maximum clique).
    Obound { algebra: PathBuf },
    /// McKay quiver of a character table.
    Mckay {
        table: PathBuf,
        /// Comma-separated values of chi_V, overriding the table file.
        #[arg(long)]
        character: Option<String>,
        #[arg(long)]
        d: Option<usize>,
        /// Comma-separated determinant character.
        #[arg(long)]
        determinant: Option<String>,
    },
    /// Auslander-Reiten quiver of add M.
    Arquiver {
        algebra: PathBuf,
        /// Generators of the subcategory; defaults to all indecomposables.
        #[arg(long)]
        modules: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum AuslanderCmd {
    /// Check a triple (Λ, M, T) and optionally the round trip through End(M).
    Verify {
        algebra: PathBuf,
        #[arg(long)]
        modules: PathBuf,
        #[arg(long)]
        cotilting: Option<String>,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        quasi: bool,
        #[arg(long)]
        roundtrip: bool,
    },
    /// Rebuild a triple from (Γ, P, I).
    Reconstruct {
        gamma: PathBuf,
        #[arg(long)]
        p: String,
        #[arg(long)]
        i: String,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

fn dispatch(cmd: &Cmd, c: &Common) -> Outcome {
    match cmd {
        Cmd::Invariants {
            algebra,
            max_m,
            max_n,
        } => commands::invariants(algebra, *max_m, *max_n, c),
        Cmd::Indecs {
            algebra,
            method,
            dim_cap,
        } => {
            let m = match method {
                Method::Knit => IndecMethod::Knit,
                Method::Brute => IndecMethod::Brute,
            };
            commands::indecs(algebra, m, *dim_cap, c)
        }
        Cmd::Orthogonal {
            algebra,
            n,
            cotilting,
            mode,
            modules,
        } => {
            let m = match mode {
                Mode::Enumerate => OrthoMode::Enumerate,
                Mode::Verify => OrthoMode::Verify,
            };
            commands::orthogonal(algebra, *n, cotilting.as_deref(), m, modules.as_deref(), c)
        }
        Cmd::Auslander { action } => match action {
            AuslanderCmd::Verify {
                algebra,
                modules,
                cotilting,
                m,
                n,
                quasi,
                roundtrip,
            } => {
                let t = TripleArgs {
                    modules: modules.clone(),
                    cotilting: cotilting.clone(),
                    m: *m,
                    n: *n,
                    quasi: *quasi,
                    roundtrip: *roundtrip,
                };
                commands::auslander_verify(algebra, &t, c)
            }
            AuslanderCmd::Reconstruct { gamma, p, i, m, n } => {
                commands::auslander_reconstruct(gamma, p, i, *m, *n, c)
            }
        },
        Cmd::Repdim { algebra, n } => commands::repdim(algebra, *n, c),
        Cmd::Obound { algebra } => commands::obound(algebra, c),
        Cmd::Mckay {
            table,
            character,
            d,
            determinant,
        } => commands::mckay(table, character.as_deref(), *d, determinant.as_deref(), c),
        Cmd::Arquiver {
            algebra,
            modules,
            n,
        } => commands::arquiver(algebra, modules.as_deref(), *n, c),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let c = Common {
        seed: cli.seed,
        cap: cli.cap,
        max_indecs: cli.max_indecs,
        max_dim: cli.max_dim,
    };
    let outcome = dispatch(&cli.cmd, &c);
    let report = &outcome.report;
    let summary = report.summary();
    match (&outcome.dot, &cli.out) {
        (Some(dot), Some(path)) => {
            if let Err(e) = std::fs::write(path, dot) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
            print!("{summary}");
        }
        (Some(dot), None) => {
            print!("{dot}");
            eprint!("{summary}");
        }
        (None, _) => print!("{summary}"),
    }
    if let Some(path) = &cli.report {
        let json = serde_json::to_string_pretty(report).expect("report serializes");
        if let Err(e) = std::fs::write(path, json + "\n") {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT as u8);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
