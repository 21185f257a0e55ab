use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rsinv::algebra::AlgebraKind;
use rsinv_cli::{run, Command, CommandConfig, OutputFormat, Source, DEFAULT_DEGREE};
use rsinv::invariants::DEFAULT_CAP;

#[derive(Parser, Debug)]
#[command(name = "rsinv", version, about = "Invariants of relatively free algebras under linear group actions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algebra {
    Poly,
    Metabelian,
    #[value(name = "L", alias = "l")]
    L,
}

impl From<Algebra> for AlgebraKind {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::Poly => AlgebraKind::Poly,
            Algebra::Metabelian => AlgebraKind::Metabelian,
            Algebra::L => AlgebraKind::L,
        }
    }
}

#[derive(clap::Args, Debug)]
struct GroupArgs {
    /// JSON file `{"d": .., "generators": [[["1","0"],["0","1"]], ..]}`.
    #[arg(long)]
    group: PathBuf,
    /// Largest group order accepted by the closure.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Dimensions of the graded components.
    Hilbert {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Irreducible GL_d-module multiplicities per degree.
    Decompose {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Hilbert series of the invariants, from characters.
    Molien {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Explicit bases of the invariants per degree.
    Invariants {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// New generators per degree of the invariants of L as a module.
    Modgen {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        /// Also report generators of the invariants as an algebra.
        #[arg(long)]
        algebra_report: bool,
    },
    /// Decide finite generation of the invariants of L.
    Check {
        #[command(flatten)]
        group: GroupArgs,
        /// Collect evidence in the metabelian algebra instead.
        #[arg(long)]
        metabelian: bool,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Constants of a Weitzenböck derivation given by Jordan block sizes.
    Weitzenbock {
        /// Block sizes, e.g. `2,1`.
        #[arg(long, value_delimiter = ',', required_unless_present = "derivation", conflicts_with = "derivation")]
        blocks: Option<Vec<usize>>,
        /// JSON file `{"blocks": [..]}`.
        #[arg(long)]
        derivation: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Algebra::L)]
        algebra: Algebra,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Close the generators to a finite group.
    Closure {
        #[command(flatten)]
        group: GroupArgs,
    },
}

fn config(cli: Cli) -> CommandConfig {
    let format = match cli.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    let group_source = |g: GroupArgs| (Source::GroupFile(g.group), g.cap);
    let (command, degree, source, cap) = match cli.command {
        Sub::Hilbert { algebra, d, degree } => {
            (Command::Hilbert { algebra: algebra.into(), d }, degree, Source::None, DEFAULT_CAP)
        }
        Sub::Decompose { algebra, d, degree } => {
            (Command::Decompose { algebra: algebra.into(), d }, degree, Source::None, DEFAULT_CAP)
        }
        Sub::Molien { algebra, group, degree } => {
            let (source, cap) = group_source(group);
            (Command::Molien { algebra: algebra.into() }, degree, source, cap)
        }
        Sub::Invariants { algebra, group, degree } => {
            let (source, cap) = group_source(group);
            (Command::Invariants { algebra: algebra.into() }, degree, source, cap)
        }
        Sub::Modgen { group, degree, algebra_report } => {
            let (source, cap) = group_source(group);
            (Command::Modgen { algebra_report }, degree, source, cap)
        }
        Sub::Check { group, metabelian, degree } => {
            let (source, cap) = group_source(group);
            (Command::Check { metabelian }, degree, source, cap)
        }
        Sub::Weitzenbock { blocks, derivation, algebra, degree } => {
            let source = match (blocks, derivation) {
                (Some(b), _) => Source::Blocks(b),
                (None, Some(p)) => Source::DerivationFile(p),
                (None, None) => Source::None,
            };
            (Command::Weitzenbock { algebra: algebra.into() }, degree, source, DEFAULT_CAP)
        }
        Sub::Closure { group } => {
            let (source, cap) = group_source(group);
            (Command::Closure, DEFAULT_DEGREE, source, cap)
        }
    };
    CommandConfig { command, degree, source, format, cap }
}

fn main() -> ExitCode {
    let config = config(Cli::parse());
    let stdout = std::io::stdout();
    match run(&config, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
