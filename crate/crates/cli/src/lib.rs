//! Command-line front end: argument model, command dispatch and the mapping
//! from outcomes to exit codes. Rendering lives in [`output`].

use std::fmt;

use acm_core::bott::{self, acm_oracle};
use acm_core::classify::{
    self, classify_acm, ClassifyOptions, DEFAULT_MAX_CANDIDATES, DEFAULT_PAD,
};
use acm_core::parabolic::{BundleSpec, ParabolicData};
use acm_core::rootsys::{DynkinType, RootSystem, WeightCoeffs};
use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

pub mod output;

use output::{
    ClassifyPayload, CohomologyPayload, FixturesPayload, InfoPayload, IsAcmPayload, OutputDocument,
    TProfilePayload,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_ACM: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "acm",
    version,
    about = "ACM criterion for irreducible homogeneous bundles on G/P"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "table")]
    pub format: Format,
    /// Cross-check with the Borel-Weil-Bott oracle (classify: force it on).
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Extra twists scanned by the oracle on each side of [1, M].
    #[arg(long, global = true, default_value_t = DEFAULT_PAD, value_name = "N")]
    pub pad: u32,
    /// Refuse classifications with more candidates than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CANDIDATES, value_name = "N")]
    pub max_candidates: u64,
    /// Run a classification even when the candidate guard would refuse it.
    #[arg(long, global = true)]
    pub force: bool,
    /// Worker threads for classification (does not affect the output).
    #[arg(long, global = true, value_name = "N")]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root data and the shape of M for G/P_k.
    Info {
        /// Dynkin type, e.g. E6, F4, A5.
        dynkin: String,
        /// Node k (also accepted as --k).
        k: Option<usize>,
        #[arg(long = "k", value_name = "K", conflicts_with = "k")]
        k_flag: Option<usize>,
    },
    /// The multiset T with root provenance, M and the counts n_l.
    Tprofile(BundleArgs),
    /// Decide whether E_lambda is ACM (exit 0 if so, 1 if not).
    IsAcm(BundleArgs),
    /// Borel-Weil-Bott cohomology of E_lambda(-t) over a range of twists.
    Cohomology {
        #[command(flatten)]
        bundle: BundleArgs,
        /// Inclusive twist range, e.g. 0..10 or -2..6.
        #[arg(long, allow_hyphen_values = true, value_name = "A..B")]
        twists: String,
    },
    /// Every initialized ACM bundle on G/P_k.
    Classify { dynkin: String, k: usize },
    /// Check the built-in reference fixtures.
    VerifyFixtures,
}

#[derive(Debug, clap::Args)]
pub struct BundleArgs {
    /// Dynkin type, e.g. E6, F4, A5.
    pub dynkin: String,
    /// Node k of the maximal parabolic.
    pub k: usize,
    /// Highest weight as comma-separated coefficients a_1,...,a_n.
    #[arg(allow_hyphen_values = true)]
    pub weight: String,
}

/// A malformed argument that clap could not catch (exit code 2).
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

/// A rendered command result.
#[derive(Debug)]
pub struct Outcome {
    pub document: OutputDocument,
    pub rendered: String,
    pub exit_code: i32,
}

/// Exit code for a failed command.
pub fn exit_code_for(err: &anyhow::Error) -> i32 {
    if err.downcast_ref::<UsageError>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<acm_core::Error>() {
        Some(acm_core::Error::CandidateGuard { .. }) => EXIT_GUARD,
        Some(acm_core::Error::Disagreement { .. } | acm_core::Error::Inconsistent { .. }) => {
            EXIT_DISAGREEMENT
        }
        _ => EXIT_USAGE,
    }
}

fn parse_dynkin(token: &str) -> anyhow::Result<DynkinType> {
    token
        .parse::<DynkinType>()
        .map_err(|e| usage(e.to_string()))
}

fn parabolic(dynkin: DynkinType, k: usize) -> anyhow::Result<ParabolicData> {
    ParabolicData::new(RootSystem::new(dynkin), k).map_err(|e| usage(e.to_string()))
}

fn parse_weight(dynkin: DynkinType, csv: &str) -> anyhow::Result<WeightCoeffs> {
    let a = csv
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| usage(format!("weight `{csv}`: {e}")))?;
    WeightCoeffs::new(dynkin, a).map_err(|e| usage(e.to_string()))
}

/// Parses an inclusive range `a..b` with `a <= b`.
pub fn parse_twists(range: &str) -> anyhow::Result<(i64, i64)> {
    let (lo, hi) = range
        .split_once("..")
        .ok_or_else(|| usage(format!("twist range `{range}` is not of the form A..B")))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|e| usage(format!("twist range `{range}`: {e}")))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|e| usage(format!("twist range `{range}`: {e}")))?;
    if lo > hi {
        return Err(usage(format!("twist range `{range}` is empty")));
    }
    Ok((lo, hi))
}

struct Bundle {
    pd: ParabolicData,
    lambda: WeightCoeffs,
}

fn load_bundle(args: &BundleArgs) -> anyhow::Result<Bundle> {
    let dynkin = parse_dynkin(&args.dynkin)?;
    let pd = parabolic(dynkin, args.k)?;
    let lambda = parse_weight(dynkin, &args.weight)?;
    BundleSpec::new(&pd, lambda.clone()).map_err(|e| usage(e.to_string()))?;
    Ok(Bundle { pd, lambda })
}

fn bundle_inputs(cli: &Cli, b: &Bundle) -> serde_json::Value {
    json!({
        "type": b.pd.root_system().dynkin().to_string(),
        "k": b.pd.k(),
        "weight": b.lambda.coeffs(),
        "oracle": cli.oracle,
        "pad": cli.pad,
    })
}

/// Runs one command. The worker count never appears in the output, so
/// documents are byte-identical for any `--workers`.
pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let (command, inputs, payload, exit_code) = match &cli.command {
        Command::Info { dynkin, k, k_flag } => {
            let k = k
                .or(*k_flag)
                .ok_or_else(|| usage("info needs a node k (positional or --k)"))?;
            let dynkin = parse_dynkin(dynkin)?;
            let pd = parabolic(dynkin, k)?;
            let inputs = json!({ "type": dynkin.to_string(), "k": k });
            (
                "info",
                inputs,
                serde_json::to_value(InfoPayload::new(&pd))?,
                EXIT_OK,
            )
        }
        Command::Tprofile(args) => {
            let b = load_bundle(args)?;
            let payload = TProfilePayload::new(&b.pd, &b.lambda)?;
            (
                "tprofile",
                bundle_inputs(cli, &b),
                serde_json::to_value(payload)?,
                EXIT_OK,
            )
        }
        Command::IsAcm(args) => {
            let b = load_bundle(args)?;
            let spec = BundleSpec::new(&b.pd, b.lambda.clone())?;
            let verdict = spec.is_acm();
            let oracle = if cli.oracle {
                let (init, _) = spec.normalize();
                let report = acm_oracle(&b.pd, init.lambda(), cli.pad)?;
                if report.acm != verdict.acm {
                    return Err(acm_core::Error::Disagreement {
                        weight: init.lambda().coeffs().to_vec(),
                        criterion: verdict.acm,
                        oracle: report.acm,
                    }
                    .into());
                }
                Some(report)
            } else {
                None
            };
            let exit = if verdict.acm { EXIT_OK } else { EXIT_NOT_ACM };
            let payload = IsAcmPayload::new(&b.pd, &b.lambda, &verdict, oracle.as_ref());
            (
                "is-acm",
                bundle_inputs(cli, &b),
                serde_json::to_value(payload)?,
                exit,
            )
        }
        Command::Cohomology { bundle, twists } => {
            let (lo, hi) = parse_twists(twists)?;
            let b = load_bundle(bundle)?;
            if b.lambda.at(b.pd.k()) != 0 {
                return Err(usage(format!(
                    "cohomology needs an initialized weight (a_{} = 0); twist with --twists instead",
                    b.pd.k()
                )));
            }
            let rows = (lo..=hi)
                .map(|t| bott::cohomology(&b.pd, &b.lambda, t))
                .collect::<Result<Vec<_>, _>>()?;
            let mut inputs = bundle_inputs(cli, &b);
            inputs["twists"] = json!([lo, hi]);
            let payload = CohomologyPayload::new(&b.pd, &b.lambda, &rows);
            (
                "cohomology",
                inputs,
                serde_json::to_value(payload)?,
                EXIT_OK,
            )
        }
        Command::Classify { dynkin, k } => {
            let dynkin = parse_dynkin(dynkin)?;
            let pd = parabolic(dynkin, *k)?;
            let opts = ClassifyOptions {
                use_oracle: cli.oracle.then_some(true),
                pad: cli.pad,
                max_candidates: cli.max_candidates,
                force: cli.force,
                workers: cli.workers,
            };
            let result = classify_acm(&pd, &opts)?;
            let inputs = json!({
                "type": dynkin.to_string(),
                "k": k,
                "oracle": cli.oracle,
                "pad": cli.pad,
                "max_candidates": cli.max_candidates,
                "force": cli.force,
            });
            (
                "classify",
                inputs,
                serde_json::to_value(ClassifyPayload::new(&result))?,
                EXIT_OK,
            )
        }
        Command::VerifyFixtures => {
            let report = classify::verify_fixtures();
            let exit = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_DISAGREEMENT
            };
            let payload = FixturesPayload::new(&report);
            (
                "verify-fixtures",
                json!({}),
                serde_json::to_value(payload)?,
                exit,
            )
        }
    };
    let document = OutputDocument::new(command, inputs, payload);
    let rendered = output::render(&document, cli.format).context("rendering output")?;
    Ok(Outcome {
        document,
        rendered,
        exit_code,
    })
}

/// Parses `argv` and runs it, returning what a process would print and its
/// exit code. Used by `main` and by in-process tests.
pub fn run_args<I, T>(argv: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                (String::new(), text, code)
            } else {
                (text, String::new(), code)
            };
        }
    };
    match run(&cli) {
        Ok(outcome) => (outcome.rendered, String::new(), outcome.exit_code),
        Err(err) => (
            String::new(),
            format!("error: {err:#}\n"),
            exit_code_for(&err),
        ),
    }
}
