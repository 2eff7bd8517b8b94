//! Command-line surface: orbit classification, standard boosts, Wigner
//! rotations, chart sampling, and the randomized verification suites.
//!
//! Output is JSON by default (all complex numbers as [re, im] pairs) with a
//! text fallback. Runs are deterministic: the same command, seed, and sample
//! count produce byte-identical output.

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use cspin_core::boosts::{boost, BoostMethod, MassOrbitPoint};
use cspin_core::clifford::{minkowski, FourVector};
use cspin_core::error::Error;
use cspin_core::induced::wigner_cocycle;
use cspin_core::linalg::{principal_sqrt, Complex, Mat2, DEFAULT_TOL};
use cspin_core::measure::{default_sample_box, sample_chart, BoxDomain, OrbitChartPoint};
use cspin_core::orbits::{classify, transporter, OrbitClass, CLASSIFY_EPS};
use cspin_core::spin::{sigma_map, SpinElement};
use cspin_core::verify::{run_many, Suite, SuiteReport, VerifyConfig};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CHART_SINGULAR: u8 = 3;
const EXIT_OFF_ORBIT: u8 = 4;
const EXIT_COCYCLE: u8 = 5;

#[derive(Parser)]
#[command(
    name = "cspin",
    about = "Orbits, boosts, Wigner rotations, and invariant-measure checks \
             for the complexified inhomogeneous spin group",
    version
)]
struct Cli {
    /// Random seed. Defaults to the CSPIN_SEED environment variable when
    /// set, otherwise 0. An explicit flag always wins.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Tolerance for self-checks and generic-tolerance properties.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Sample count for randomized commands (the measure suite uses a tenth
    /// of this because of its finite-difference cost).
    #[arg(long, global = true, default_value_t = 10_000)]
    samples: usize,

    /// Output format: json or text.
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a point of C^4 (or a 2x2 matrix) into its orbit and, when
    /// one exists, emit a transporter from the standard representative.
    #[command(group(ArgGroup::new("input").required(true).args(["vector", "matrix"])))]
    Classify(ClassifyArgs),

    /// Compute a standard boost beta(v) for the given method, with a
    /// self-check record of its action on the standard vector.
    Boost(BoostArgs),

    /// Compute the Wigner rotation beta(v)^{-1} s beta(s^{-1} v).
    WignerRotation(WignerArgs),

    /// Draw deterministic sample points in the orbit chart.
    Sample(SampleArgs),

    /// Run a property suite and report per-property residuals.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Four-vector as JSON `[[re,im],[re,im],[re,im],[re,im]]`.
    #[arg(long)]
    vector: Option<String>,

    /// 2x2 matrix as JSON rows of `[re,im]` pairs.
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Args)]
struct BoostArgs {
    /// One of beta1, beta2, beta3, beta3p, wigner.
    #[arg(long)]
    method: BoostMethod,

    /// Orbit point as JSON four-vector.
    #[arg(long)]
    vector: String,

    /// Complex mass as JSON `[re,im]` or a plain number.
    #[arg(long)]
    zm: String,
}

#[derive(Args)]
struct WignerArgs {
    /// One of beta1, beta2, beta3, beta3p, wigner.
    #[arg(long)]
    method: BoostMethod,

    /// Group element as JSON {"a": Mat2, "b": Mat2}.
    #[arg(long)]
    spin: String,

    /// Orbit point as JSON four-vector.
    #[arg(long)]
    vector: String,

    /// Complex mass; defaults to the principal square root of eta(v, v).
    #[arg(long)]
    zm: Option<String>,
}

#[derive(Args)]
struct SampleArgs {
    /// Box domain as JSON `{"lo": [6 reals], "hi": [6 reals]}`. Defaults to
    /// the library's standard sampling box.
    #[arg(long)]
    domain: Option<String>,

    /// Complex mass carried by the sampled chart points.
    #[arg(long, default_value = "1")]
    zm: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// clifford | spin | orbit | boost | cocycle | measure | induced | all
    #[arg(long)]
    suite: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = resolve_seed(cli.seed);
    match dispatch(&cli, seed) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.exit)
        }
    }
}

struct Failure {
    exit: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            exit: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match &e {
            Error::ChartSingular { .. } => EXIT_CHART_SINGULAR,
            Error::OffOrbit { .. } | Error::OffShell { .. } => EXIT_OFF_ORBIT,
            Error::CocycleNotDiagonal { .. } => EXIT_COCYCLE,
            Error::IndexOutOfRange { .. } | Error::InvalidDomain { .. } => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure {
            exit,
            message: e.to_string(),
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    if let Some(seed) = flag {
        return seed;
    }
    std::env::var("CSPIN_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn dispatch(cli: &Cli, seed: u64) -> Result<ExitCode, Failure> {
    // NaN tolerances must fail this check too.
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(Failure::usage("--tol must be a positive finite number"));
    }
    if cli.samples == 0 {
        return Err(Failure::usage("--samples must be at least 1"));
    }
    match &cli.command {
        Command::Classify(args) => cmd_classify(cli, args),
        Command::Boost(args) => cmd_boost(cli, args),
        Command::WignerRotation(args) => cmd_wigner_rotation(cli, args),
        Command::Sample(args) => cmd_sample(cli, args, seed),
        Command::Verify(args) => cmd_verify(cli, args, seed),
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::usage(format!("cannot parse {what}: {e}")))
}

fn parse_zm(text: &str) -> Result<Complex, Failure> {
    if let Ok(re) = serde_json::from_str::<f64>(text) {
        return Ok(Complex::new(re, 0.0));
    }
    let pair: [f64; 2] = parse_json("complex mass", text)?;
    Ok(Complex::new(pair[0], pair[1]))
}

fn emit<T: Serialize>(cli: &Cli, value: &T, text: String) -> Result<ExitCode, Failure> {
    let body = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string(value).map_err(|e| Failure {
                exit: EXIT_FAILURE,
                message: format!("serialization failed: {e}"),
            })?;
            s.push('\n');
            s
        }
        Format::Text => text,
    };
    match &cli.output {
        None => {
            print!("{body}");
            Ok(ExitCode::SUCCESS)
        }
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|e| Failure {
                exit: EXIT_FAILURE,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            file.write_all(body.as_bytes()).map_err(|e| Failure {
                exit: EXIT_FAILURE,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    class: OrbitClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    transporter: Option<SpinElement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    transporter_error: Option<String>,
}

fn cmd_classify(cli: &Cli, args: &ClassifyArgs) -> Result<ExitCode, Failure> {
    let matrix = match (&args.vector, &args.matrix) {
        (Some(text), None) => {
            let v: FourVector = parse_json("four-vector", text)?;
            sigma_map(&v)
        }
        (None, Some(text)) => parse_json::<Mat2>("matrix", text)?,
        _ => return Err(Failure::usage("provide exactly one of --vector/--matrix")),
    };
    let class = classify(&matrix, CLASSIFY_EPS);
    let (transport, transport_err) = match class {
        OrbitClass::ZeroPoint => (None, None),
        _ => match transporter(&matrix) {
            Ok(g) => (Some(g), None),
            Err(e) => (None, Some(e.to_string())),
        },
    };
    let text = match &class {
        OrbitClass::ZeroPoint => "class: zero\n".to_string(),
        OrbitClass::NullCone => "class: null\n".to_string(),
        OrbitClass::Mass(z2) => format!("class: mass z2 = [{}, {}]\n", z2.re, z2.im),
    };
    emit(
        cli,
        &ClassifyOutput {
            class,
            transporter: transport,
            transporter_error: transport_err,
        },
        text,
    )
}

#[derive(Serialize)]
struct SelfCheck {
    acted: FourVector,
    abs_err: f64,
}

#[derive(Serialize)]
struct BoostOutput {
    method: String,
    zm: [f64; 2],
    vector: FourVector,
    element: SpinElement,
    self_check: SelfCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn cmd_boost(cli: &Cli, args: &BoostArgs) -> Result<ExitCode, Failure> {
    let v: FourVector = parse_json("four-vector", args.vector.as_str())?;
    let zm = parse_zm(&args.zm)?;
    if args.method == BoostMethod::Wigner && !v.is_real(DEFAULT_TOL) {
        return Err(Failure::usage(
            "the wigner method needs a real four-vector and a real positive mass",
        ));
    }
    let point = MassOrbitPoint::new_with_tol(v, zm, cli.tol)?;
    let element = boost(args.method, &point)?;
    let vring = FourVector::basis(0).expect("index in range").scale(zm);
    let acted = element.act_vector(&vring);
    let abs_err = acted.dist(&v);
    if abs_err > cli.tol * v.norm().max(1.0) {
        return Err(Failure::from(Error::OffOrbit { residual: abs_err }));
    }
    let note = (args.method == BoostMethod::Beta3 && v.dist(&-vring) <= DEFAULT_TOL * vring.norm())
        .then(|| "antipodal point: the volume-form pair is used".to_string());
    let text = format!(
        "method: {}\nelement a: {:?}\nelement b: {:?}\nself-check abs_err: {:e}\n{}",
        args.method,
        element.a().entries,
        element.b().entries,
        abs_err,
        note.as_deref()
            .map(|n| format!("note: {n}\n"))
            .unwrap_or_default()
    );
    emit(
        cli,
        &BoostOutput {
            method: args.method.to_string(),
            zm: [zm.re, zm.im],
            vector: v,
            element,
            self_check: SelfCheck { acted, abs_err },
            note,
        },
        text,
    )
}

#[derive(Serialize)]
struct WignerOutput {
    method: String,
    h: Mat2,
    residual: f64,
}

fn cmd_wigner_rotation(cli: &Cli, args: &WignerArgs) -> Result<ExitCode, Failure> {
    let s: SpinElement = parse_json("spin element", args.spin.as_str())?;
    let v: FourVector = parse_json("four-vector", args.vector.as_str())?;
    let zm = match &args.zm {
        Some(text) => parse_zm(text)?,
        None => principal_sqrt(minkowski(&v, &v)),
    };
    let point = MassOrbitPoint::new_with_tol(v, zm, cli.tol)?;
    let h = wigner_cocycle(args.method, &s, &point, cli.tol)?;
    let residual = cspin_core::induced::cocycle_residual(args.method, &s, &point)?;
    let text = format!(
        "method: {}\nh: {:?}\nresidual: {:e}\n",
        args.method, h.entries, residual
    );
    emit(
        cli,
        &WignerOutput {
            method: args.method.to_string(),
            h,
            residual,
        },
        text,
    )
}

#[derive(Serialize)]
struct SampleOutput {
    zm: [f64; 2],
    domain: BoxDomain,
    points: Vec<OrbitChartPoint>,
}

fn cmd_sample(cli: &Cli, args: &SampleArgs, seed: u64) -> Result<ExitCode, Failure> {
    let domain = match &args.domain {
        Some(text) => {
            let raw: BoxDomain = parse_json("box domain", text)?;
            BoxDomain::new(raw.lo, raw.hi)?
        }
        None => default_sample_box(),
    };
    let zm = parse_zm(&args.zm)?;
    if zm.norm() == 0.0 {
        return Err(Failure::usage("the mass must be nonzero"));
    }
    let points = sample_chart(&domain, zm, cli.samples, seed);
    let mut text = String::new();
    for p in &points {
        text.push_str(&format!("{:?}\n", p.coords_real()));
    }
    emit(
        cli,
        &SampleOutput {
            zm: [zm.re, zm.im],
            domain,
            points,
        },
        text,
    )
}

#[derive(Serialize)]
struct VerifyOutput {
    seed: u64,
    samples: usize,
    tol: f64,
    suites: Vec<SuiteReport>,
    pass: bool,
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs, seed: u64) -> Result<ExitCode, Failure> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse::<Suite>().map_err(Failure::usage)?]
    };
    let cfg = VerifyConfig {
        seed,
        samples: cli.samples,
        tol: cli.tol,
    };
    let reports = run_many(&suites, &cfg);
    let pass = reports.iter().all(|r| r.pass);

    let mut text = String::new();
    for suite in &reports {
        text.push_str(&format!(
            "suite {}: {}\n",
            suite.suite,
            if suite.pass { "PASS" } else { "FAIL" }
        ));
        for p in &suite.properties {
            text.push_str(&format!(
                "  {} [n={}]: residual {:e} tol {:e} {}\n",
                p.name,
                p.samples,
                p.max_residual,
                p.tol,
                if p.pass { "PASS" } else { "FAIL" }
            ));
        }
    }

    let out = VerifyOutput {
        seed,
        samples: cli.samples,
        tol: cli.tol,
        suites: reports,
        pass,
    };
    let code = emit(cli, &out, text)?;
    if pass {
        Ok(code)
    } else {
        Ok(ExitCode::from(EXIT_FAILURE))
    }
}
