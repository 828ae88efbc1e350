use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use morava_core::group::{build_source, commuting_tuple_class_count, find_isomorphism, GroupConfig};
use morava_core::poly::{buchberger, GroebnerConfig, MonomialOrder};
use morava_core::verifier::{classify_family, g36_presentation, verify_rank, RingPresentation, VerifyOptions};

use crate::error::{CliError, ExitCode};
use crate::formats::{read_json, GroupJson, IdealJson, MatrixJson, PresentationJson};
use crate::report;

#[derive(Debug, Parser)]
#[command(name = "morava", version, about = "Check ring presentations of Morava K-theory of classifying spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub report: Option<PathBuf>,
    /// Leave the `timings` field out, making reports byte-reproducible.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite group utilities.
    #[command(subcommand)]
    Group(GroupCommand),
    /// The semidirect products (C_2^n x C_2^n) x| C_2.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Reduced Gröbner basis of an ideal file.
    Gb(GbArgs),
    /// Compare the quotient dimension of a presentation with chi_s of its group.
    Verify(VerifyArgs),
    /// C_p-module utilities.
    #[command(subcommand)]
    Module(ModuleCommand),
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Order, classes, centre and invariants.
    Info {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Number of conjugacy classes of commuting s-tuples.
    Chi {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        /// Tuple budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Search for an isomorphism between two groups.
    Iso {
        #[arg(long)]
        spec1: PathBuf,
        #[arg(long)]
        spec2: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// Sort all involutive actions into isomorphism classes.
    Classify {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModuleCommand {
    /// Jordan blocks, permutation-module test and Tate cohomology.
    Decompose {
        #[arg(long)]
        matrix: PathBuf,
        /// Highest cohomological degree reported.
        #[arg(long, default_value_t = 4)]
        degrees: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Cap on reduction steps in Buchberger's algorithm.
    #[arg(long)]
    pub max_steps: Option<u64>,
    /// Cap on the size of the Gröbner basis.
    #[arg(long)]
    pub max_basis: Option<usize>,
}

impl BudgetArgs {
    fn groebner(&self) -> GroebnerConfig {
        let mut c = GroebnerConfig::default();
        if let Some(n) = self.max_steps {
            c.max_reduction_steps = n;
        }
        if let Some(n) = self.max_basis {
            c.max_basis_size = n;
        }
        c
    }
}

#[derive(Debug, Args)]
pub struct GbArgs {
    #[arg(long)]
    pub ideal: PathBuf,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// List standard monomials when there are at most this many.
    #[arg(long, default_value_t = 4096)]
    pub list_limit: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `g36` or a presentation file.
    pub target: String,
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub s: u32,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// Relation indices to leave out, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub exclude: Vec<usize>,
    /// Reducer indices overriding the presentation's, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub reducers: Option<Vec<usize>>,
    /// Tuple budget for chi_s.
    #[arg(long)]
    pub tuple_budget: Option<u64>,
    /// Fixed-point iteration cap.
    #[arg(long)]
    pub max_iter: Option<usize>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

/// The result of a command: its name, resolved configuration, result, and
/// whether every mathematical check passed.
pub struct Outcome {
    pub command: &'static str,
    pub config: Value,
    pub result: Value,
    pub verified: bool,
}

impl Outcome {
    fn ok(command: &'static str, config: Value, result: Value) -> Self {
        Outcome {
            command,
            config,
            result,
            verified: true,
        }
    }
}

fn load_group(path: &Path) -> Result<(GroupJson, morava_core::group::GroupSource), CliError> {
    let spec: GroupJson = read_json(path)?;
    let src = spec.to_source()?;
    Ok((spec, src))
}

fn load_presentation(target: &str) -> Result<RingPresentation, CliError> {
    if target == "g36" {
        return Ok(g36_presentation());
    }
    let path = Path::new(target);
    let file: PresentationJson = read_json(path)?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(target);
    file.to_presentation(stem)
}

pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Group(GroupCommand::Info { spec }) => {
            let config = GroupConfig::default();
            let (json, src) = load_group(spec)?;
            let g = build_source(&src, &config)?;
            Ok(Outcome::ok(
                "group info",
                json!({ "spec": json, "group": report::group_config(&config) }),
                report::group_info(&g, &config)?,
            ))
        }
        Command::Group(GroupCommand::Chi { spec, s, budget }) => {
            let mut config = GroupConfig::default();
            if let Some(b) = budget {
                config.tuple_budget = *b;
            }
            let (json, src) = load_group(spec)?;
            let g = build_source(&src, &config)?;
            let (chi, how) = commuting_tuple_class_count(&g, *s, &config)?;
            Ok(Outcome::ok(
                "group chi",
                json!({ "spec": json, "s": s, "group": report::group_config(&config) }),
                json!({ "chi": chi, "strategy": report::strategy(how), "order": g.order() }),
            ))
        }
        Command::Group(GroupCommand::Iso { spec1, spec2 }) => {
            let config = GroupConfig::default();
            let (j1, s1) = load_group(spec1)?;
            let (j2, s2) = load_group(spec2)?;
            let g1 = build_source(&s1, &config)?;
            let g2 = build_source(&s2, &config)?;
            let iso = find_isomorphism(&g1, &g2, &config)?;
            let images = iso.map(|map| {
                g1.generator_names()
                    .iter()
                    .zip(g1.generators())
                    .map(|(n, &x)| json!({ "generator": n, "image": g2.element_word(map[x as usize]) }))
                    .collect::<Vec<_>>()
            });
            Ok(Outcome::ok(
                "group iso",
                json!({ "spec1": j1, "spec2": j2, "group": report::group_config(&config) }),
                json!({ "isomorphic": images.is_some(), "generator_images": images }),
            ))
        }
        Command::Family(FamilyCommand::Classify { n }) => {
            let config = GroupConfig::default();
            let c = classify_family(*n, &config)?;
            Ok(Outcome::ok(
                "family classify",
                json!({ "n": n, "group": report::group_config(&config) }),
                report::family(&c),
            ))
        }
        Command::Gb(args) => {
            let file: IdealJson = read_json(&args.ideal)?;
            let (ring, gens) = file.to_polynomials(args.order.into())?;
            let config = args.budget.groebner();
            let (gb, stats) = buchberger(&ring, &gens, &config)?;
            Ok(Outcome::ok(
                "gb",
                json!({
                    "ideal": file,
                    "order": report::order_name(args.order.into()),
                    "groebner": report::groebner_config(&config),
                }),
                report::groebner(&gb, &stats, args.list_limit),
            ))
        }
        Command::Verify(args) => {
            let pres = load_presentation(&args.target)?;
            let mut options = VerifyOptions {
                order: args.order.into(),
                exclude: args.exclude.clone(),
                groebner: args.budget.groebner(),
                max_iter: args.max_iter,
                reducers: args.reducers.clone(),
                ..VerifyOptions::default()
            };
            if let Some(b) = args.tuple_budget {
                options.group.tuple_budget = b;
            }
            let r = verify_rank(&pres, args.s, &options)?;
            Ok(Outcome {
                command: "verify",
                config: json!({
                    "target": args.target,
                    "presentation": PresentationJson::from_presentation(&pres),
                    "s": args.s,
                    "options": report::verify_options(&options),
                }),
                verified: report::verification_passed(&r),
                result: report::verification(&r),
            })
        }
        Command::Module(ModuleCommand::Decompose { matrix, degrees }) => {
            let file: MatrixJson = read_json(matrix)?;
            let m = file.to_module()?;
            Ok(Outcome::ok(
                "module decompose",
                json!({ "matrix": file, "degrees": degrees }),
                report::module(&m, *degrees),
            ))
        }
    }
}

/// Runs a parsed command line, writes the report, and returns the exit code.
pub fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let start = Instant::now();
    let outcome = execute(&cli.command)?;
    let ms = (!cli.no_timings).then(|| start.elapsed().as_secs_f64() * 1000.0);
    let doc = report::envelope(outcome.command, outcome.config, outcome.result, outcome.verified, ms);
    let mut text = serde_json::to_string_pretty(&doc).expect("reports serialize");
    text.push('\n');
    match &cli.report {
        Some(path) => std::fs::write(path, text).map_err(CliError::Write)?,
        None => print!("{text}"),
    }
    Ok(if outcome.verified {
        ExitCode::Success
    } else {
        ExitCode::Mismatch
    })
}
