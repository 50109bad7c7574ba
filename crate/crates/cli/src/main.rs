//! covosc command line: every capability as a reproducible subcommand.
//!
//! Exit codes are stable: 0 success, 2 argument/config parse errors, 3 I/O
//! failures, 4 domain errors (out-of-range rapidity, degenerate coupling,
//! cutoff too small, ...), 5 quadrature convergence failures. No results are
//! printed on a nonzero exit. Identical invocations produce byte-identical
//! output; every JSON report embeds the effective configuration, defaults
//! included.

mod config;

use clap::{Args, Parser, Subcommand, ValueEnum};
use covosc::report::{fmt_f64, Json};
use covosc::{
    boost_lightcone, boost_point, density_grid, residual_eq13, residual_eq13_4d, squeeze_expansion,
    to_lightcone, verify_algebra, CoupledOscillatorSystem, GridSpec, MetricSignature,
    QuadratureRule, Rapidity, SpaceTimePoint, TruncatedFockSpace,
};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use config::{pick, pick_opt, FileConfig};

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
    fn io(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<covosc::Error> for CliError {
    fn from(err: covosc::Error) -> Self {
        let code = match err {
            covosc::Error::QuadratureUnderResolved(_) => 5,
            _ => 4,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "covosc",
    version,
    about = "Boost kinematics, squeezed oscillator wavefunctions, and two-mode algebra checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Boost (z, t) points and print the light-cone invariant before/after.
    Boost(BoostArgs),
    /// Rasterize |psi_eta|^2 to CSV or JSON and summarize its shape.
    Density(DensityArgs),
    /// Finite-difference check of the oscillator eigenvalue equation.
    Residual(ResidualArgs),
    /// Expand psi_eta over oscillator product states.
    Expand(ExpandArgs),
    /// Normal-mode data of two coupled oscillators.
    Modes(ModesArgs),
    /// Verify commutator closure of the ten two-mode generators.
    AlgebraCheck(AlgebraArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Write the primary output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format where the subcommand supports both.
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// JSON configuration file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SignatureArg {
    /// x^2+y^2+z^2-t^2 (eigenvalue +1 for the 4-D ground Gaussian)
    SpacePositive,
    /// the overall-sign twin; every eigenvalue flips sign
    TimePositive,
}

impl SignatureArg {
    fn to_core(self) -> MetricSignature {
        match self {
            SignatureArg::SpacePositive => MetricSignature::SpacePositive,
            SignatureArg::TimePositive => MetricSignature::TimePositive,
        }
    }
    fn label(self) -> &'static str {
        match self {
            SignatureArg::SpacePositive => "space-positive",
            SignatureArg::TimePositive => "time-positive",
        }
    }
    fn from_label(s: &str) -> Result<Self, CliError> {
        match s {
            "space-positive" => Ok(SignatureArg::SpacePositive),
            "time-positive" => Ok(SignatureArg::TimePositive),
            other => Err(CliError::parse(format!(
                "unknown signature `{other}` (expected space-positive or time-positive)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct PointArg {
    z: f64,
    t: f64,
}

fn parse_point(s: &str) -> Result<PointArg, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected `z,t`, got `{s}`"));
    }
    let z: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|e| format!("bad z in `{s}`: {e}"))?;
    let t: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|e| format!("bad t in `{s}`: {e}"))?;
    Ok(PointArg { z, t })
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct BoostArgs {
    /// Boost rapidity.
    #[arg(long)]
    eta: Option<f64>,
    /// Point `z,t`; may be repeated.
    #[arg(long = "point", value_parser = parse_point)]
    points: Vec<PointArg>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct DensityArgs {
    #[arg(long)]
    eta: Option<f64>,
    #[arg(long)]
    z_min: Option<f64>,
    #[arg(long)]
    z_max: Option<f64>,
    #[arg(long)]
    t_min: Option<f64>,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long)]
    n_z: Option<usize>,
    #[arg(long)]
    n_t: Option<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ResidualArgs {
    #[arg(long)]
    eta: Option<f64>,
    /// Finite-difference step, in [1e-4, 1e-2].
    #[arg(long)]
    h: Option<f64>,
    #[arg(long, value_enum)]
    signature: Option<SignatureArg>,
    /// Check the full 4-D operator on the rest-frame Gaussian instead.
    #[arg(long, default_value_t = false)]
    four_d: bool,
    /// Sample point `z,t`; may be repeated (2-D check only).
    #[arg(long = "point", value_parser = parse_point)]
    points: Vec<PointArg>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ExpandArgs {
    #[arg(long)]
    eta: Option<f64>,
    /// Highest product-state order retained.
    #[arg(long)]
    nmax: Option<usize>,
    /// Gauss-Hermite order (doubled internally for the convergence check).
    #[arg(long)]
    order: Option<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ModesArgs {
    /// Spring constant A.
    #[arg(long = "A")]
    a: Option<f64>,
    /// Coupling constant C.
    #[arg(long = "C")]
    c: Option<f64>,
    /// Oscillator mass (affects the mode frequencies only).
    #[arg(long)]
    mass: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct AlgebraArgs {
    /// Per-mode Fock cutoff.
    #[arg(long)]
    nmax: Option<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Boost(args) => run_boost(args),
        Command::Density(args) => run_density(args),
        Command::Residual(args) => run_residual(args),
        Command::Expand(args) => run_expand(args),
        Command::Modes(args) => run_modes(args),
        Command::AlgebraCheck(args) => run_algebra_check(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn require_eta(value: Option<f64>) -> Result<Rapidity, CliError> {
    let eta = value.ok_or_else(|| CliError::parse("missing required value for --eta"))?;
    Ok(Rapidity::new(eta)?)
}

/// The --out flag wins over the config file's `out` key.
fn merged_out(common: &CommonArgs, file: &FileConfig) -> Option<PathBuf> {
    pick_opt(common.out.clone(), file.out.as_ref().map(PathBuf::from))
}

/// Primary output goes to --out when given, stdout otherwise.
fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn json_only(format: Option<OutputFormat>, command: &str) -> Result<(), CliError> {
    if format == Some(OutputFormat::Csv) {
        return Err(CliError::parse(format!("{command} emits JSON only")));
    }
    Ok(())
}

fn report(command: &str, config: Json, results: Json) -> String {
    let mut root = Json::obj();
    root.push("command", Json::Str(command.into()))
        .push("config", config)
        .push("results", results);
    root.to_pretty_string()
}

fn points_json(points: &[SpaceTimePoint]) -> Json {
    Json::Arr(
        points
            .iter()
            .map(|p| Json::Arr(vec![Json::Num(p.z), Json::Num(p.t)]))
            .collect(),
    )
}

fn run_boost(args: BoostArgs) -> Result<(), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    if args.common.format.is_some() {
        return Err(CliError::parse(
            "boost emits a fixed text table; --format is not supported",
        ));
    }
    let eta = require_eta(pick_opt(args.eta, file.eta))?;
    let points: Vec<SpaceTimePoint> = if !args.points.is_empty() {
        args.points
            .iter()
            .map(|p| SpaceTimePoint::new(p.z, p.t))
            .collect()
    } else if let Some(pts) = &file.points {
        pts.iter()
            .map(|p| SpaceTimePoint::new(p[0], p[1]))
            .collect()
    } else {
        return Err(CliError::parse("boost needs at least one --point z,t"));
    };
    if let Some(bad) = points.iter().find(|p| !p.is_finite()) {
        return Err(CliError::from(covosc::Error::InvalidParameter {
            name: "point",
            value: bad.z,
            reason: "points must be finite",
        }));
    }

    let mut table = String::new();
    let _ = writeln!(table, "eta = {}", fmt_f64(eta.value()));
    for p in &points {
        let boosted = boost_point(eta, *p);
        let lc = to_lightcone(*p);
        let lc_boosted = boost_lightcone(eta, lc);
        let _ = writeln!(table, "point (z, t) = ({}, {})", fmt_f64(p.z), fmt_f64(p.t));
        let _ = writeln!(
            table,
            "  boosted (z', t') = ({}, {})",
            fmt_f64(boosted.z),
            fmt_f64(boosted.t)
        );
        let _ = writeln!(
            table,
            "  lightcone (u, v) = ({}, {}) -> (u', v') = ({}, {})",
            fmt_f64(lc.u),
            fmt_f64(lc.v),
            fmt_f64(lc_boosted.u),
            fmt_f64(lc_boosted.v)
        );
        let _ = writeln!(
            table,
            "  invariant u*v: before = {} after = {}",
            fmt_f64(lc.invariant_product()),
            fmt_f64(lc_boosted.invariant_product())
        );
    }
    emit(merged_out(&args.common, &file).as_deref(), &table)
}

fn run_density(args: DensityArgs) -> Result<(), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    let eta = require_eta(pick_opt(args.eta, file.eta))?;
    let spec = GridSpec {
        z_min: pick(args.z_min, file.z_min, -8.0),
        z_max: pick(args.z_max, file.z_max, 8.0),
        t_min: pick(args.t_min, file.t_min, -8.0),
        t_max: pick(args.t_max, file.t_max, 8.0),
        n_z: pick(args.n_z, file.n_z, 161),
        n_t: pick(args.n_t, file.n_t, 161),
    };
    let format = match (args.common.format, file.format.as_deref()) {
        (Some(f), _) => f,
        (None, Some("csv")) => OutputFormat::Csv,
        (None, Some("json")) => OutputFormat::Json,
        (None, Some(other)) => {
            return Err(CliError::parse(format!(
                "unknown format `{other}` in config"
            )))
        }
        (None, None) => OutputFormat::Csv,
    };
    let out = match pick_opt(
        args.common.out.clone(),
        file.out.as_ref().map(PathBuf::from),
    ) {
        Some(path) => path,
        None => return Err(CliError::parse("density requires --out <path>")),
    };

    let grid = density_grid(eta, &spec)?;
    let mut buf: Vec<u8> = Vec::new();
    match format {
        OutputFormat::Csv => grid.write_csv(&mut buf),
        OutputFormat::Json => grid.write_json(&mut buf),
    }
    .map_err(|e| CliError::io(format!("serialization failed: {e}")))?;
    std::fs::write(&out, &buf)
        .map_err(|e| CliError::io(format!("cannot write {}: {e}", out.display())))?;

    let cov = grid.covariance();
    let mut summary = String::new();
    let _ = writeln!(summary, "peak = {}", fmt_f64(grid.peak()));
    let _ = writeln!(summary, "axis_ratio = {}", fmt_f64(cov.axis_ratio));
    let _ = writeln!(
        summary,
        "major_axis = ({}, {})",
        fmt_f64(cov.major_axis.0),
        fmt_f64(cov.major_axis.1)
    );
    let _ = writeln!(summary, "sigma_major = {}", fmt_f64(cov.sigma_major));
    let _ = writeln!(summary, "sigma_minor = {}", fmt_f64(cov.sigma_minor));
    let _ = writeln!(summary, "riemann_mass = {}", fmt_f64(grid.riemann_mass()));
    print!("{summary}");
    Ok(())
}

fn run_residual(args: ResidualArgs) -> Result<(), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    json_only(args.common.format, "residual")?;
    let h = pick(args.h, file.h, 1e-3);
    let signature = match (args.signature, file.signature.as_deref()) {
        (Some(s), _) => s,
        (None, Some(label)) => SignatureArg::from_label(label)?,
        (None, None) => SignatureArg::SpacePositive,
    };
    let four_d = args.four_d || file.four_d.unwrap_or(false);

    let mut config = Json::obj();
    config
        .push("h", Json::Num(h))
        .push("signature", Json::Str(signature.label().into()))
        .push("four_d", Json::Bool(four_d));

    let result = if four_d {
        let points = covosc::wavefn::residual_sample_points_4d();
        let mut lattice = Json::obj();
        lattice
            .push("kind", Json::Str("lattice-4d".into()))
            .push("extent", Json::Num(1.0))
            .push("per_axis", Json::Int(5));
        config.push("points", lattice);
        residual_eq13_4d(&points, h, signature.to_core())?
    } else {
        let eta = require_eta(pick_opt(args.eta, file.eta))?;
        let points: Vec<SpaceTimePoint> = if !args.points.is_empty() {
            args.points
                .iter()
                .map(|p| SpaceTimePoint::new(p.z, p.t))
                .collect()
        } else if let Some(pts) = &file.points {
            pts.iter()
                .map(|p| SpaceTimePoint::new(p[0], p[1]))
                .collect()
        } else {
            covosc::wavefn::residual_sample_points()
        };
        config.push("eta", Json::Num(eta.value()));
        config.push("points", points_json(&points));
        residual_eq13(eta, &points, h, signature.to_core())?
    };

    let mut results = Json::obj();
    results
        .push("lambda", Json::Num(result.lambda))
        .push("max_residual", Json::Num(result.max_residual));
    emit(
        merged_out(&args.common, &file).as_deref(),
        &report("residual", config, results),
    )
}

fn run_expand(args: ExpandArgs) -> Result<(), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    json_only(args.common.format, "expand")?;
    let eta = require_eta(pick_opt(args.eta, file.eta))?;
    let n_max = pick(args.nmax, file.n_max, 16);
    let order = pick(args.order, file.order, 128);

    let quad = QuadratureRule::gauss_hermite(order)?;
    let expansion = squeeze_expansion(eta, n_max, &quad)?;

    let mut config = Json::obj();
    config
        .push("eta", Json::Num(eta.value()))
        .push("n_max", Json::Int(n_max as i64))
        .push("order", Json::Int(order as i64));

    let ratios = expansion.ratios();
    let ratio_spread = if ratios.len() > 1 {
        let max = ratios.iter().copied().fold(f64::MIN, f64::max);
        let min = ratios.iter().copied().fold(f64::MAX, f64::min);
        max - min
    } else {
        0.0
    };
    let mut results = Json::obj();
    results
        .push(
            "coefficients",
            Json::from_f64_slice(expansion.coefficients()),
        )
        .push("sum_of_squares", Json::Num(expansion.sum_of_squares()))
        .push("max_off_diagonal", Json::Num(expansion.max_off_diagonal()))
        .push(
            "quad_disagreement",
            Json::Num(expansion.quad_disagreement()),
        )
        .push("ratios", Json::from_f64_slice(&ratios))
        .push("ratio_spread", Json::Num(ratio_spread))
        .push("tanh_half_eta", Json::Num((0.5 * eta.value()).tanh()));
    emit(
        merged_out(&args.common, &file).as_deref(),
        &report("expand", config, results),
    )
}

fn run_modes(args: ModesArgs) -> Result<(), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    json_only(args.common.format, "modes")?;
    let a = pick_opt(args.a, file.a)
        .ok_or_else(|| CliError::parse("missing required value for --A"))?;
    let c = pick_opt(args.c, file.c)
        .ok_or_else(|| CliError::parse("missing required value for --C"))?;
    let mass = pick(args.mass, file.mass, 1.0);

    let sys = CoupledOscillatorSystem::new(mass, a, c)?;
    let nm = sys.normal_modes();
    let eta = nm.eta.value();

    let mut config = Json::obj();
    config
        .push("A", Json::Num(a))
        .push("C", Json::Num(c))
        .push("mass", Json::Num(mass));

    let mut identities = Json::obj();
    identities
        .push(
            "k_exp_minus_2eta_minus_a_plus_c",
            Json::Num(nm.k * (-2.0 * eta).exp() - (a + c)),
        )
        .push(
            "k_exp_plus_2eta_minus_a_minus_c",
            Json::Num(nm.k * (2.0 * eta).exp() - (a - c)),
        );
    let mut results = Json::obj();
    results
        .push("k", Json::Num(nm.k))
        .push("eta", Json::Num(eta))
        .push("omega_plus", Json::Num(nm.omega_plus))
        .push("omega_minus", Json::Num(nm.omega_minus))
        .push("identity_residuals", identities);
    emit(
        merged_out(&args.common, &file).as_deref(),
        &report("modes", config, results),
    )
}

fn run_algebra_check(args: AlgebraArgs) -> Result<(), CliError> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    json_only(args.common.format, "algebra-check")?;
    let n_max = pick(args.nmax, file.n_max, 10);

    let space = TruncatedFockSpace::new(n_max)?;
    let gens = covosc::build_generators(&space)?;
    let closure = verify_algebra(&gens)?;

    let mut config = Json::obj();
    config.push("n_max", Json::Int(n_max as i64));
    emit(
        merged_out(&args.common, &file).as_deref(),
        &report("algebra-check", config, closure.to_json()),
    )
}
