//! Command-line surface for the exact flag-variety invariants.
//!
//! One subcommand per computation; every invocation produces a single
//! report, rendered as `key = value` lines on standard output, or as one
//! JSON document when `--json` is given. Exact rationals are serialized
//! losslessly as `p/q` strings; floats are advisory duplicates.
//!
//! Exit codes: 0 success, 1 usage error, 2 assertion failure,
//! 3 internal numerical failure.

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use dhym::bigcell;
use dhym::bundle::{
    classify, contraction_level_set, h0_end, phase_level_set, total_phase_ray, SumBundle,
};
use dhym::charge::CentralCharge;
use dhym::checks;
use dhym::error::Error;
use dhym::flag::{Bundle, FlagVariety, KahlerClass, LineBundle};
use dhym::phase::{ExactPhase, GaussRational, Ray};
use dhym::rational::{format_rational, parse_rational, Rational};
use dhym::root_system::{LieFamily, LieType, RootSystem, Weight};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "dhym",
    version,
    about = "Exact HYM/dHYM invariants of invariant connections on flag varieties",
    long_about = None,
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit one machine-readable JSON document instead of the table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

/// Simple-root indices follow the Bourbaki numbering, 1-based.
#[derive(Args, Clone)]
struct FlagArgs {
    /// Lie family letter (A-G).
    #[arg(long = "type", value_name = "FAMILY", default_value = "A")]
    family: String,

    /// Rank of the Lie type.
    #[arg(long, default_value_t = 2)]
    rank: usize,

    /// Comma-separated parabolic simple-root indices; empty for the
    /// full flag.
    #[arg(long, value_name = "INDICES", default_value = "")]
    parabolic: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print Cartan matrix, symmetrizer and positive roots.
    Roots {
        #[arg(long = "type", value_name = "FAMILY", default_value = "A")]
        family: String,
        #[arg(long, default_value_t = 2)]
        rank: usize,
    },
    /// Print the invariants of a flag variety.
    Flag {
        #[command(flatten)]
        flag: FlagArgs,
    },
    /// Exact Lagrangian phase of a class against a Kähler class.
    Phase {
        #[command(flatten)]
        flag: FlagArgs,
        /// Kähler coefficients over the Picard indices, e.g. "2,2".
        #[arg(long, value_name = "COEFFS")]
        omega: String,
        /// Class coefficients (rationals allowed), e.g. "3,4" or "1/2,-3".
        #[arg(long, value_name = "COEFFS")]
        xi: String,
    },
    /// Exact central charge of a line bundle.
    Charge {
        #[command(flatten)]
        flag: FlagArgs,
        #[arg(long, value_name = "COEFFS")]
        omega: String,
        /// Integer line-bundle coefficients, e.g. "2,6".
        #[arg(long, value_name = "COEFFS")]
        line: String,
    },
    /// Classify the diagonal connection on a Whitney sum.
    Classify {
        #[command(flatten)]
        flag: FlagArgs,
        #[arg(long, value_name = "COEFFS")]
        omega: String,
        /// Semicolon-separated summands, e.g. "2,6;3,4".
        #[arg(long, value_name = "SUMMANDS")]
        sum: String,
    },
    /// Enumerate contraction or phase level sets over the Picard lattice.
    Enumerate {
        #[command(flatten)]
        flag: FlagArgs,
        #[arg(long, value_name = "COEFFS")]
        omega: String,
        /// Contraction level, an exact rational such as "3/4".
        #[arg(long, value_name = "RATIONAL")]
        dm: Option<String>,
        /// Lifted phase target: "0", "pi", or "winding:re:im".
        #[arg(long, value_name = "TARGET")]
        ltarget: Option<String>,
        /// Coefficient box half-width.
        #[arg(long, default_value_t = 100)]
        bound: u32,
    },
    /// Finite-difference eigenvalue check of the big-cell potentials.
    BigcellCheck {
        /// Exponent pair, e.g. "2,6".
        #[arg(long, value_name = "S1,S2")]
        s: String,
    },
    /// Run every built-in reference computation and assert its value.
    ReproducePaper,
}

/// Report document: ordered key-value entries plus free-form lines for
/// the human rendering.
struct Report {
    command: &'static str,
    input: Vec<(&'static str, Value)>,
    lines: Vec<String>,
    results: Vec<(String, Value)>,
    pass: Option<bool>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            input: Vec::new(),
            lines: Vec::new(),
            results: Vec::new(),
            pass: None,
        }
    }

    fn echo(&mut self, key: &'static str, value: Value) {
        self.input.push((key, value));
    }

    fn entry(&mut self, key: impl Into<String>, value: Value) {
        self.results.push((key.into(), value));
    }

    fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    fn print_human(&self) {
        let mut out = String::new();
        let _ = writeln!(out, "tool = dhym {VERSION}");
        let _ = writeln!(out, "command = {}", self.command);
        for (key, value) in &self.input {
            let _ = writeln!(out, "input.{key} = {}", human_value(value));
        }
        for line in &self.lines {
            let _ = writeln!(out, "{line}");
        }
        for (key, value) in &self.results {
            let _ = writeln!(out, "{key} = {}", human_value(value));
        }
        if let Some(pass) = self.pass {
            let _ = writeln!(out, "pass = {pass}");
        }
        emit(&out);
    }

    fn print_json(&self) {
        let mut doc = Map::new();
        doc.insert("tool_version".into(), json!(VERSION));
        doc.insert("command".into(), json!(self.command));
        let mut input = Map::new();
        for (key, value) in &self.input {
            input.insert((*key).into(), value.clone());
        }
        doc.insert("input".into(), Value::Object(input));
        let mut results = Map::new();
        for (key, value) in &self.results {
            results.insert(key.clone(), value.clone());
        }
        doc.insert("results".into(), Value::Object(results));
        if let Some(pass) = self.pass {
            doc.insert("pass".into(), json!(pass));
        }
        emit(&format!("{}\n", Value::Object(doc)));
    }
}

/// Writes to stdout, swallowing broken-pipe errors so that piping into
/// `head` does not panic.
fn emit(text: &str) {
    let _ = io::stdout().write_all(text.as_bytes());
}

fn human_value(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Numerical(msg) => Failure::Numerical(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes; everything else is
            // a usage error (exit 1, not clap's default 2).
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    let json = cli.json;
    match run(cli.command) {
        Ok(report) => {
            if json {
                report.print_json();
            } else {
                report.print_human();
            }
            if report.pass == Some(false) {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Roots { family, rank } => run_roots(&family, rank),
        Command::Flag { flag } => run_flag(&flag),
        Command::Phase { flag, omega, xi } => run_phase(&flag, &omega, &xi),
        Command::Charge { flag, omega, line } => run_charge(&flag, &omega, &line),
        Command::Classify { flag, omega, sum } => run_classify(&flag, &omega, &sum),
        Command::Enumerate {
            flag,
            omega,
            dm,
            ltarget,
            bound,
        } => run_enumerate(&flag, &omega, dm.as_deref(), ltarget.as_deref(), bound),
        Command::BigcellCheck { s } => run_bigcell(&s),
        Command::ReproducePaper => Ok(run_reproduce()),
    }
}

// ---------------------------------------------------------------------
// Parsing helpers
// ---------------------------------------------------------------------

fn parse_lie_type(family: &str, rank: usize) -> Result<LieType, Failure> {
    let letter = family
        .trim()
        .chars()
        .next()
        .filter(|_| family.trim().len() == 1)
        .and_then(LieFamily::from_char)
        .ok_or_else(|| Failure::Usage(format!("unknown Lie family {family:?}")))?;
    Ok(LieType::new(letter, rank)?)
}

fn parse_parabolic(spec: &str, rank: usize) -> Result<Vec<usize>, Failure> {
    let mut indices = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let index: usize = part
            .parse()
            .map_err(|_| Failure::Usage(format!("malformed parabolic index {part:?}")))?;
        if index == 0 || index > rank {
            return Err(Failure::Usage(format!(
                "parabolic index {index} out of range 1..={rank}"
            )));
        }
        indices.push(index - 1);
    }
    Ok(indices)
}

fn parse_rational_list(spec: &str, what: &str) -> Result<Vec<Rational>, Failure> {
    spec.split(',')
        .map(str::trim)
        .map(|part| {
            parse_rational(part)
                .map_err(|_| Failure::Usage(format!("malformed {what} coefficient {part:?}")))
        })
        .collect()
}

fn parse_int_list(spec: &str, what: &str) -> Result<Vec<i64>, Failure> {
    spec.split(',')
        .map(str::trim)
        .map(|part| {
            part.parse::<i64>()
                .map_err(|_| Failure::Usage(format!("malformed {what} coefficient {part:?}")))
        })
        .collect()
}

fn parse_target(spec: &str) -> Result<ExactPhase, Failure> {
    match spec.trim() {
        "0" => Ok(ExactPhase::zero()),
        "pi" => Ok(ExactPhase::pi()),
        other => {
            let parts: Vec<&str> = other.split(':').collect();
            if parts.len() != 3 {
                return Err(Failure::Usage(format!(
                    "phase target must be \"0\", \"pi\" or \"winding:re:im\", got {other:?}"
                )));
            }
            let winding: i64 = parts[0]
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("malformed winding {:?}", parts[0])))?;
            let re = parse_rational(parts[1])
                .map_err(|_| Failure::Usage(format!("malformed ray component {:?}", parts[1])))?;
            let im = parse_rational(parts[2])
                .map_err(|_| Failure::Usage(format!("malformed ray component {:?}", parts[2])))?;
            let ray = Ray::from_gauss(&GaussRational::new(re, im))
                .ok_or_else(|| Failure::Usage("phase target ray must be nonzero".into()))?;
            Ok(ExactPhase::new(winding, ray))
        }
    }
}

struct Scene {
    fv: Arc<FlagVariety>,
    kc: KahlerClass,
}

fn build_flag(args: &FlagArgs) -> Result<Arc<FlagVariety>, Failure> {
    let lie_type = parse_lie_type(&args.family, args.rank)?;
    let rs = Arc::new(RootSystem::new(lie_type));
    let parabolic = parse_parabolic(&args.parabolic, args.rank)?;
    Ok(Arc::new(FlagVariety::new(rs, &parabolic)?))
}

fn build_scene(args: &FlagArgs, omega: &str) -> Result<Scene, Failure> {
    let fv = build_flag(args)?;
    let coeffs = parse_rational_list(omega, "Kähler")?;
    let kc = KahlerClass::new(&fv, coeffs)?;
    Ok(Scene { fv, kc })
}

fn echo_flag(report: &mut Report, args: &FlagArgs) {
    report.echo("type", json!(args.family.trim().to_ascii_uppercase()));
    report.echo("rank", json!(args.rank));
    report.echo("parabolic", json!(args.parabolic));
}

// ---------------------------------------------------------------------
// Value rendering
// ---------------------------------------------------------------------

fn val_rat(r: &Rational) -> Value {
    json!(format_rational(r))
}

fn val_weight(w: &Weight) -> Value {
    Value::Array(w.coords().iter().map(val_rat).collect())
}

fn val_phase(p: &ExactPhase) -> Value {
    json!({
        "winding": p.winding(),
        "ray_re": p.ray().re().to_string(),
        "ray_im": p.ray().im().to_string(),
        "float": p.to_f64(),
    })
}

fn val_ray(ray: &Ray) -> Value {
    json!({
        "ray_re": ray.re().to_string(),
        "ray_im": ray.im().to_string(),
        "float": ray.arg_f64(),
    })
}

fn val_charge(z: &CentralCharge) -> Value {
    json!({
        "re": format_rational(&z.value().re),
        "im": format_rational(&z.value().im),
    })
}

fn val_coeffs(line: &LineBundle) -> Value {
    Value::Array(line.coeffs().iter().map(|&s| json!(s)).collect())
}

// ---------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------

fn run_roots(family: &str, rank: usize) -> Result<Report, Failure> {
    let lie_type = parse_lie_type(family, rank)?;
    let rs = RootSystem::new(lie_type);
    let mut report = Report::new("roots");
    report.echo("type", json!(family.trim().to_ascii_uppercase()));
    report.echo("rank", json!(rank));
    report.entry("lie_type", json!(lie_type.to_string()));
    report.entry(
        "cartan",
        Value::Array(
            rs.cartan()
                .iter()
                .map(|row| Value::Array(row.iter().map(|&c| json!(c)).collect()))
                .collect(),
        ),
    );
    report.entry(
        "symmetrizer",
        Value::Array(rs.symmetrizer().iter().map(|&d| json!(d)).collect()),
    );
    report.entry("positive_root_count", json!(rs.positive_roots().len()));
    report.entry(
        "positive_roots",
        Value::Array(
            rs.positive_roots()
                .iter()
                .map(|r| Value::Array(r.coeffs().iter().map(|&m| json!(m)).collect()))
                .collect(),
        ),
    );
    Ok(report)
}

fn run_flag(args: &FlagArgs) -> Result<Report, Failure> {
    let fv = build_flag(args)?;
    let mut report = Report::new("flag");
    echo_flag(&mut report, args);
    report.entry("dim", json!(fv.dim()));
    report.entry(
        "picard_indices",
        Value::Array(fv.picard_indices().iter().map(|&i| json!(i + 1)).collect()),
    );
    report.entry(
        "phi_i_plus",
        Value::Array(
            fv.phi_i_plus()
                .iter()
                .map(|r| Value::Array(r.coeffs().iter().map(|&m| json!(m)).collect()))
                .collect(),
        ),
    );
    report.entry("delta_p", val_weight(fv.anticanonical_weight()));
    report.entry(
        "anticanonical_coeffs",
        Value::Array(
            fv.anticanonical_coeffs()
                .iter()
                .map(|&l| json!(l))
                .collect(),
        ),
    );
    report.entry("is_point", json!(fv.is_point()));
    Ok(report)
}

fn run_phase(args: &FlagArgs, omega: &str, xi: &str) -> Result<Report, Failure> {
    let scene = build_scene(args, omega)?;
    let coeffs = parse_rational_list(xi, "class")?;
    let weight = scene.fv.weight_from_coeffs(&coeffs)?;
    let phase = scene.kc.lagrangian_phase(&weight)?;
    let mut report = Report::new("phase");
    echo_flag(&mut report, args);
    report.echo("omega", json!(omega));
    report.echo("xi", json!(xi));
    report.entry("winding", json!(phase.winding()));
    report.entry("ray_re", json!(phase.ray().re().to_string()));
    report.entry("ray_im", json!(phase.ray().im().to_string()));
    report.entry("float", json!(phase.to_f64()));
    Ok(report)
}

fn run_charge(args: &FlagArgs, omega: &str, line_spec: &str) -> Result<Report, Failure> {
    let scene = build_scene(args, omega)?;
    let coeffs = parse_int_list(line_spec, "line-bundle")?;
    let line = LineBundle::new(&scene.fv, coeffs)?;
    let charge = scene.kc.central_charge(&line)?;
    let mut report = Report::new("charge");
    echo_flag(&mut report, args);
    report.echo("omega", json!(omega));
    report.echo("line", json!(line_spec));
    report.entry("dim", json!(charge.dim()));
    report.entry("value", val_charge(&charge));
    report.entry("arg_float", json!(charge.arg_f64()));
    Ok(report)
}

fn run_classify(args: &FlagArgs, omega: &str, sum_spec: &str) -> Result<Report, Failure> {
    let scene = build_scene(args, omega)?;
    let mut summands = Vec::new();
    for part in sum_spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let coeffs = parse_int_list(part, "summand")?;
        summands.push(LineBundle::new(&scene.fv, coeffs)?);
    }
    let sum = SumBundle::new(summands)?;
    let cls = classify(&scene.kc, &sum)?;
    let mut report = Report::new("classify");
    echo_flag(&mut report, args);
    report.echo("omega", json!(omega));
    report.echo("sum", json!(sum_spec));
    report.entry("rank", json!(sum.rank()));
    report.entry("hym", json!(cls.hym));
    report.entry("dhym", json!(cls.dhym));
    report.entry("type", json!(cls.instanton_type.to_string()));
    report.entry("stability", json!(cls.stability.to_string()));
    let slopes: Result<Vec<Value>, Error> = sum
        .summands()
        .iter()
        .map(|l| Ok(val_rat(&scene.kc.slope(l)?)))
        .collect();
    report.entry("summand_slopes", Value::Array(slopes?));
    report.entry("slope", val_rat(&scene.kc.slope(&sum)?));
    let contractions: Result<Vec<Value>, Error> = sum
        .summands()
        .iter()
        .map(|l| Ok(val_rat(&scene.kc.contraction(l.weight())?)))
        .collect();
    report.entry("summand_contractions", Value::Array(contractions?));
    let phases: Result<Vec<Value>, Error> = sum
        .summands()
        .iter()
        .map(|l| Ok(val_phase(&scene.kc.line_phase(l)?)))
        .collect();
    report.entry("summand_phases", Value::Array(phases?));
    match total_phase_ray(&scene.kc, &sum)? {
        Some(ray) => report.entry("theta_hat", val_ray(&ray)),
        None => report.entry("theta_hat", Value::Null),
    }
    if scene.fv.parabolic_set().is_empty() {
        report.entry("h0_end", json!(h0_end(&sum)?.to_string()));
    }
    Ok(report)
}

fn run_enumerate(
    args: &FlagArgs,
    omega: &str,
    dm: Option<&str>,
    ltarget: Option<&str>,
    bound: u32,
) -> Result<Report, Failure> {
    let scene = build_scene(args, omega)?;
    let mut report = Report::new("enumerate");
    echo_flag(&mut report, args);
    report.echo("omega", json!(omega));
    report.echo("bound", json!(bound));
    let hits = match (dm, ltarget) {
        (Some(level), None) => {
            let m = parse_rational(level)
                .map_err(|_| Failure::Usage(format!("malformed contraction level {level:?}")))?;
            report.echo("dm", json!(level));
            contraction_level_set(&scene.kc, &m, bound)?
        }
        (None, Some(target)) => {
            let target = parse_target(target)?;
            report.echo("ltarget", val_phase(&target));
            phase_level_set(&scene.kc, &target, bound)?
        }
        _ => {
            return Err(Failure::Usage(
                "enumerate needs exactly one of --dm or --ltarget".into(),
            ))
        }
    };
    report.entry("count", json!(hits.len()));
    report.entry(
        "bundles",
        Value::Array(hits.iter().map(val_coeffs).collect()),
    );
    Ok(report)
}

fn run_bigcell(spec: &str) -> Result<Report, Failure> {
    let coeffs = parse_int_list(spec, "exponent")?;
    if coeffs.len() != 2 {
        return Err(Failure::Usage(format!(
            "expected two exponents, got {}",
            coeffs.len()
        )));
    }
    let result = bigcell::eigen_ratio_check(coeffs[0], coeffs[1]);
    let outcome = match result {
        Ok(outcome) => outcome,
        Err(Error::Numerical(msg)) => return Err(Failure::Numerical(msg)),
        Err(other) => return Err(Failure::Usage(other.to_string())),
    };
    let mut report = Report::new("bigcell-check");
    report.echo("s", json!(spec));
    report.entry(
        "computed",
        Value::Array(outcome.computed.iter().map(|&v| json!(v)).collect()),
    );
    report.entry(
        "expected",
        Value::Array(outcome.expected.iter().map(|&v| json!(v)).collect()),
    );
    report.entry("max_error", json!(outcome.max_error));
    report.entry("trace_error", json!(outcome.trace_error));
    report.entry(
        "hermitian_defects",
        json!([outcome.hermitian_defects.0, outcome.hermitian_defects.1]),
    );
    report.entry("tolerance", json!(bigcell::EIGEN_TOLERANCE));
    report.pass = Some(outcome.pass);
    Ok(report)
}

fn run_reproduce() -> Report {
    let results = checks::run_all();
    let mut report = Report::new("reproduce-paper");
    let mut passed = 0usize;
    for check in &results {
        report.line(check.summary());
        for detail in &check.details {
            report.line(format!("    {detail}"));
        }
        passed += usize::from(check.passed);
    }
    report.entry(
        "checks",
        Value::Array(
            results
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "label": c.label,
                        "passed": c.passed,
                        "details": c.details,
                    })
                })
                .collect(),
        ),
    );
    report.entry("passed", json!(passed));
    report.entry("total", json!(results.len()));
    report.pass = Some(passed == results.len());
    report
}
