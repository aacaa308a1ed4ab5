use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pathalg::FieldSpec;
use sl3tensor::{Prime, Weight};
use sl3tensor_cli::{cache, exit, finish, AppendixArgs, CharKind, CliResult, Which};

/// Tensor products of simple SL3 modules in characteristics 2 and 3.
#[derive(Parser)]
#[command(name = "sl3tensor", version)]
struct Cli {
    /// Print the JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Neither read nor write the tilting-character cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose L(λ) ⊗ L(μ) into indecomposable summands.
    Decompose {
        /// The characteristic, 2 or 3
        #[arg(short = 'p', value_parser = parse_prime)]
        p: Prime,
        /// Highest weight a,b of the first factor
        #[arg(value_parser = parse_weight)]
        lambda: Weight,
        /// Highest weight a,b of the second factor
        #[arg(value_parser = parse_weight)]
        mu: Weight,
        /// Keep resplit factors instead of merging into tilting modules.
        #[arg(long)]
        no_canonicalize: bool,
        /// Check the result against the product of simple characters.
        #[arg(long)]
        verify: bool,
    },
    /// Dimension and Weyl-basis expansion of a character.
    Char {
        /// The characteristic, 2 or 3
        #[arg(short = 'p', value_parser = parse_prime)]
        p: Prime,
        #[arg(value_enum)]
        kind: CharKind,
        /// A weight a,b; for `atom`, a label such as T(2,2), L(1,1) or M.
        target: String,
        /// Also print every weight multiplicity.
        #[arg(long)]
        full: bool,
    },
    /// Recompute every restricted table line and character identity.
    VerifyTables {
        /// The characteristic, 2 or 3
        #[arg(short = 'p', value_parser = parse_prime)]
        p: Prime,
        /// Damage the first table line (negative control).
        #[arg(long, hide = true)]
        corrupt_first_line: bool,
    },
    /// Partition weights into linkage classes under the dot action.
    Linkage {
        /// The characteristic, 2 or 3
        #[arg(short = 'p', value_parser = parse_prime)]
        p: Prime,
        /// Dominant weights a,b
        #[arg(required = true, value_parser = parse_weight)]
        weights: Vec<Weight>,
    },
    /// Path-algebra workbench.
    Appendix {
        #[arg(value_enum)]
        which: Which,
        /// Built-in presentation name or JSON file.
        #[arg(long)]
        presentation: Option<String>,
        /// Q or Fq with q in {2,3,5,7}; overrides the presentation.
        #[arg(long, value_parser = parse_field)]
        field: Option<FieldSpec>,
        /// Vertex whose tilting module `dot` draws.
        #[arg(long)]
        vertex: Option<String>,
        /// Output file for `dot`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let p: u32 = s.parse().map_err(|e| format!("{e}"))?;
    Prime::new(p).map_err(|e| e.to_string())
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.parse::<Weight>()?
        .check_dominant()
        .map_err(|e| e.to_string())
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: pathalg::Error| e.to_string())
}

fn dispatch(cmd: Command) -> CliResult {
    match cmd {
        Command::Decompose {
            p,
            lambda,
            mu,
            no_canonicalize,
            verify,
        } => sl3tensor_cli::decompose(p, lambda, mu, !no_canonicalize, verify),
        Command::Char {
            p,
            kind,
            target,
            full,
        } => sl3tensor_cli::char_query(p, kind, &target, full),
        Command::VerifyTables {
            p,
            corrupt_first_line,
        } => sl3tensor_cli::verify_tables(p, corrupt_first_line),
        Command::Linkage { p, weights } => sl3tensor_cli::linkage(p, &weights),
        Command::Appendix {
            which,
            presentation,
            field,
            vertex,
            out,
        } => sl3tensor_cli::appendix(&AppendixArgs {
            which,
            presentation,
            field,
            vertex,
            out,
        }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            });
        }
    };
    let cache_path = (!cli.no_cache).then(cache::cache_path);
    if let Some(path) = &cache_path {
        if let Err(e) = cache::load_checked(path) {
            eprintln!("warning: ignoring tilting cache: {e}");
        }
    }
    let report = finish(dispatch(cli.command));
    if let Some(path) = &cache_path {
        if let Err(e) = cache::store(path) {
            eprintln!(
                "warning: could not update tilting cache {}: {e}",
                path.display()
            );
        }
    }
    let out = report.render(cli.json);
    if cli.json || report.code == exit::OK || report.code == exit::VERIFICATION {
        let _ = std::io::stdout().write_all(out.as_bytes());
    } else {
        eprint!("{out}");
    }
    ExitCode::from(report.code)
}
