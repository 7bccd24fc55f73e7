use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use homcert::commands::{self, CheckArgs};
use homcert::derive::DeriveParams;
use homcert::render::Style;
use homcert::suite::CorpusConfig;
use homcert_core::search::DEFAULT_SEARCH_BUDGET;

/// Exact certification of Hom-algebra structures.
///
/// Exit status: 0 pass, 1 axiom or precondition failure, 2 input error,
/// 3 search budget exceeded.
#[derive(Parser)]
#[command(name = "homcert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify an algebra or module document against its kind's axioms.
    Check {
        path: PathBuf,
        /// left-commutative, multiplicative, lie-admissible or rota-baxter.
        #[arg(long)]
        predicate: Option<String>,
        /// Rota-Baxter weight.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Matrix file with the Rota-Baxter operator.
        #[arg(long)]
        operator: Option<PathBuf>,
    },
    /// Apply a construction and certify its output.
    Derive {
        functor: String,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long)]
        mode: Option<String>,
        /// Matrix file for T, R or g.
        #[arg(long)]
        operator: Option<PathBuf>,
        /// Matrix file for the algebra map of twist-beta.
        #[arg(long)]
        b: Option<PathBuf>,
        /// Matrix file for the module map of twist-beta.
        #[arg(long)]
        bm: Option<PathBuf>,
    },
    /// Enumerate Hom-post-Lie products on a Hom-Lie algebra.
    SearchPostlie {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        bound: u32,
        #[arg(long)]
        out: PathBuf,
        /// Largest number of candidates to enumerate.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u128,
    },
    /// Run the theorem suite over seeded random corpora.
    CertifyCorpus {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Directory for counterexample documents and the summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style::detect();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let exit = match cli.command {
        Command::Check {
            path,
            predicate,
            weight,
            operator,
        } => commands::check(
            &CheckArgs {
                path,
                predicate,
                weight,
                operator,
            },
            style,
            &mut out,
            &mut err,
        ),
        Command::Derive {
            functor,
            inputs,
            out: out_path,
            k,
            n,
            weight,
            mode,
            operator,
            b,
            bm,
        } => {
            let params = DeriveParams {
                k,
                n,
                weight,
                mode,
                operator,
                b,
                bm,
            };
            commands::derive_cmd(&functor, &inputs, &params, &out_path, style, &mut out, &mut err)
        }
        Command::SearchPostlie {
            path,
            bound,
            out: dir,
            budget,
        } => commands::search_postlie(&path, bound, budget, &dir, style, &mut out, &mut err),
        Command::CertifyCorpus {
            trials,
            max_dim,
            seed,
            jobs,
            out: dir,
        } => commands::certify_corpus(
            &CorpusConfig { trials, max_dim, seed },
            jobs,
            dir.as_deref(),
            style,
            &mut out,
            &mut err,
        ),
    };
    ExitCode::from(exit.code())
}
