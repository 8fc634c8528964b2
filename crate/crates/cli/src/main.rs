mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dotbinom::closed::{LineFlavor, Variant};
use dotbinom::oracle::{OracleConfig, PosetKind, DEFAULT_BUDGET};
use dotbinom::{FormKind, QClass};

use render::Format;

#[derive(Parser, Debug)]
#[command(name = "dotbinom", version, about = "Dot-analogues of Gaussian binomial coefficients over GF(q)")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Plain, global = true)]
    format: FormatArg,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Cap on the number of objects one enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of lines of one kind; the default kind is [n]_d.
    Bracket {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::SpacelikeInDot)]
        flavor: FlavorArg,
        /// Also evaluate the printed line-count expression and the oracle.
        #[arg(long)]
        compare_paper: bool,
    },
    /// Rows 0..=rows of the dot-binomial triangle.
    Triangle {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        rows: usize,
    },
    /// One dot-binomial coefficient.
    Binom {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Dd)]
        variant: VariantArg,
    },
    /// The polynomial p_{n,k}(q) of a congruence class, with its shape checks.
    Poly {
        /// q mod 4.
        #[arg(long, value_parser = ["1", "3"])]
        class: String,
        #[arg(long)]
        n: usize,
        /// A single k; all 0..=n when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// |O(n, q)| from 2^n·[n]_d!, optionally by enumeration.
    GroupOrder {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        enumerate: bool,
    },
    /// The sequences b_k and μ(0, dot_k) for k ≤ n.
    Mobius {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
    },
    /// Values at q = ±1 next to symmetric k-set counts.
    Limits {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Brute-force enumeration.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Maximal chains of the enumerated poset.
    Flags {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Euclidean)]
        kind: KindArg,
    },
    /// Run every cross-check.
    Verify {
        /// Comma-separated field orders.
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
        #[arg(long)]
        max_n: usize,
        /// Compare the printed formulas too (the default).
        #[arg(long, conflicts_with = "no_paper")]
        compare_paper: bool,
        /// Skip comparisons against the printed formulas.
        #[arg(long)]
        no_paper: bool,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Subspace tallies, line counts, flags and μ for one ambient space.
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = AmbientArg::Dot)]
        ambient: AmbientArg,
    },
    /// Build a poset; optionally write its Hasse diagram.
    Poset {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Euclidean)]
        kind: KindArg,
        #[arg(long, value_name = "FILE")]
        emit_graph: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FormatArg {
    Plain,
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FlavorArg {
    SpacelikeInDot,
    TimelikeInDot,
    SpacelikeInLambdaDot,
    TimelikeInLambdaDot,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum VariantArg {
    Dd,
    Ld,
    Dl,
    Ll,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum AmbientArg {
    Dot,
    LambdaDot,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum KindArg {
    Euclidean,
    Lorentzian,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => Format::Plain,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

impl From<FlavorArg> for LineFlavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::SpacelikeInDot => LineFlavor::SpacelikeInDot,
            FlavorArg::TimelikeInDot => LineFlavor::TimelikeInDot,
            FlavorArg::SpacelikeInLambdaDot => LineFlavor::SpacelikeInLambdaDot,
            FlavorArg::TimelikeInLambdaDot => LineFlavor::TimelikeInLambdaDot,
        }
    }
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Dd => Variant::DD,
            VariantArg::Ld => Variant::LD,
            VariantArg::Dl => Variant::DL,
            VariantArg::Ll => Variant::LL,
        }
    }
}

impl From<AmbientArg> for FormKind {
    fn from(a: AmbientArg) -> Self {
        match a {
            AmbientArg::Dot => FormKind::Dot,
            AmbientArg::LambdaDot => FormKind::LambdaDot,
        }
    }
}

impl From<KindArg> for PosetKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Euclidean => PosetKind::Euclidean,
            KindArg::Lorentzian => PosetKind::Lorentzian,
        }
    }
}

fn run(cli: Cli) -> Result<commands::Outcome, commands::CliError> {
    let format = Format::from(cli.global.format);
    let cfg = OracleConfig {
        budget: cli.global.budget,
        jobs: cli.global.jobs,
    };
    match cli.command {
        Command::Bracket {
            q,
            n,
            flavor,
            compare_paper,
        } => commands::bracket(q, n, flavor.into(), compare_paper, &cfg, format),
        Command::Triangle { q, rows } => commands::triangle(q, rows, format),
        Command::Binom { q, n, k, variant } => commands::binom(q, n, k, variant.into(), format),
        Command::Poly { class, n, k } => {
            let class = if class == "1" {
                QClass::OneMod4
            } else {
                QClass::ThreeMod4
            };
            commands::poly(class, n, k, format)
        }
        Command::GroupOrder { q, n, enumerate } => commands::group_order(q, n, enumerate, &cfg, format),
        Command::Mobius { q, n } => commands::mobius(q, n, format),
        Command::Limits { n, k } => commands::limits(n, k, format),
        Command::Oracle { command } => match command {
            OracleCommand::Count { q, n, ambient } => commands::oracle_count(q, n, ambient.into(), &cfg, format),
            OracleCommand::Poset {
                q,
                n,
                kind,
                emit_graph,
            } => commands::oracle_poset(q, n, kind.into(), emit_graph.as_deref(), &cfg, format),
        },
        Command::Flags { q, n, kind } => commands::flags(q, n, kind.into(), &cfg, format),
        Command::Verify {
            q,
            max_n,
            compare_paper: _,
            no_paper,
        } => commands::verify(q, max_n, !no_paper, &cfg, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(note) = out.stderr {
                eprintln!("{note}");
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
