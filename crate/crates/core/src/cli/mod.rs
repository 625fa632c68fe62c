//! Command-line frontend. [`run`] is the testable entry point; the binary
//! only forwards process arguments and standard streams.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error, 3 invalid
//! Seifert matrix, 4 bad argument, 5 unmet precondition.

mod descriptor;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::Path;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};
use serde_json::{json, Value};

pub use descriptor::{parse_assignments, parse_descriptor, parse_json, KnotDescriptor};

use crate::family::{jm_seifert, params_from_primes, FamilyError};
use crate::genus1::{self, is_algebraically_slice_g1, metabolizer_classes, Genus1Error};
use crate::independence::{
    exhaustive_independence, galois_degree_check, root_of_unity_check, units_for, IndependenceError,
};
use crate::rat::{fmt_significant, to_f64};
use crate::signature::{rho, signature_profile, theta_over_pi, RhoValue, SignatureError};

#[derive(Debug)]
pub enum Failure {
    Parse(String),
    InvalidMatrix(String),
    BadArgument(String),
    Semantic(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse(_) | Failure::Io(_) => 2,
            Failure::InvalidMatrix(_) => 3,
            Failure::BadArgument(_) => 4,
            Failure::Semantic(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m)
            | Failure::InvalidMatrix(m)
            | Failure::BadArgument(m)
            | Failure::Semantic(m)
            | Failure::Io(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<SignatureError> for Failure {
    fn from(e: SignatureError) -> Self {
        match e {
            SignatureError::NonPositiveTolerance => Failure::BadArgument(e.to_string()),
            other => Failure::Semantic(other.to_string()),
        }
    }
}

const DEFAULT_TOL: &str = "1e-9";

#[derive(Parser, Debug)]
#[command(name = "knotrho", version, about = "Abelian concordance invariants from Seifert matrices")]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Knot descriptor file, or "-" for stdin
    input: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander polynomial, determinant, Arf invariant, signature
    Invariants(Input),
    /// Levine-Tristram signature profile over theta in [0, pi]
    Profile {
        #[command(flatten)]
        input: Input,
        /// Write the profile as CSV to this file ("-" for stdout)
        #[arg(long, value_name = "OUT")]
        csv: Option<String>,
    },
    /// Integrated signature with a validated enclosure
    Rho {
        #[command(flatten)]
        input: Input,
        /// Maximum enclosure width (decimal, scientific or p/q)
        #[arg(long, default_value = DEFAULT_TOL)]
        tol: String,
    },
    /// Emit the J_m knots
    Jm {
        #[arg(long, conflicts_with = "primes", required_unless_present = "primes")]
        m: Option<u64>,
        /// Use m_j = (p_j - 1)^2 / 8 for the first n admissible primes
        #[arg(long, value_name = "N")]
        primes: Option<usize>,
    },
    /// Exhaustive small-coefficient independence check
    Indep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: u32,
    },
    /// Genus-one metabolizers and the curve-knot obstruction
    Genus1 {
        #[command(flatten)]
        input: Input,
        /// Curve assignment file
        #[arg(long, value_name = "FILE")]
        curves: Option<String>,
        #[arg(long, default_value = DEFAULT_TOL)]
        tol: String,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                4
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match dispatch(&cli, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}

/// Process entry point for the binary.
pub fn main_entry() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let code = run(std::env::args_os(), &mut stdin.lock(), &mut out, &mut stderr.lock());
    let _ = out.flush();
    code
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Invariants(input) => cmd_invariants(&read_knot(&input.input, stdin)?, cli.json, out),
        Command::Profile { input, csv } => {
            cmd_profile(&read_knot(&input.input, stdin)?, csv.as_deref(), cli.json, out)
        }
        Command::Rho { input, tol } => {
            let tol = parse_tolerance(tol)?;
            cmd_rho(&read_knot(&input.input, stdin)?, &tol, cli.json, out)
        }
        Command::Jm { m, primes } => cmd_jm(*m, *primes, cli.json, out),
        Command::Indep { n, bound } => cmd_indep(*n, *bound, cli.json, out),
        Command::Genus1 { input, curves, tol } => {
            let tol = parse_tolerance(tol)?;
            let knot = read_knot(&input.input, stdin)?;
            let curves = match curves {
                Some(path) => Some(parse_assignments(&parse_json(&read_text(path, stdin)?)?)?),
                None => None,
            };
            cmd_genus1(&knot, curves, &tol, cli.json, out)
        }
    }
}

fn read_text(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(Path::new(path)).map_err(|e| Failure::Io(format!("{path}: {e}")))
    }
}

fn read_knot(path: &str, stdin: &mut dyn Read) -> Result<KnotDescriptor, Failure> {
    parse_descriptor(&parse_json(&read_text(path, stdin)?)?)
}

/// Parses `p/q`, a decimal, or a decimal with exponent into an exact
/// positive rational.
pub fn parse_tolerance(s: &str) -> Result<BigRational, Failure> {
    let bad = || Failure::BadArgument(format!("invalid tolerance {s:?}"));
    let s = s.trim();
    let q = if s.contains('/') {
        BigRational::from_str(s).map_err(|_| bad())?
    } else {
        let (mantissa, exp) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (int_part, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        if int_part.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac}");
        if !digits.chars().enumerate().all(|(i, c)| c.is_ascii_digit() || (i == 0 && (c == '+' || c == '-'))) {
            return Err(bad());
        }
        let n = BigInt::from_str(&digits).map_err(|_| bad())?;
        let shift = exp - frac.len() as i32;
        let ten = BigRational::from_integer(BigInt::from(10));
        BigRational::from_integer(n) * Pow::pow(&ten, shift)
    };
    if !q.is_positive() {
        return Err(Failure::BadArgument(format!("tolerance must be positive, got {s}")));
    }
    Ok(q)
}

/// Fractional digits that keep decimal rounding well inside `tol`.
fn digits_for(tol: &BigRational) -> u32 {
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut k = 0u32;
    let mut scale = BigRational::one();
    while &scale * &ten > *tol {
        scale /= &ten;
        k += 1;
    }
    k + 2
}

fn name_line(knot: &KnotDescriptor, out: &mut dyn Write) -> io::Result<()> {
    if let Some(name) = &knot.name {
        writeln!(out, "name: {name}")?;
    }
    Ok(())
}

fn emit_json(v: &Value, out: &mut dyn Write) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))?;
    Ok(())
}

fn decimal_number(s: &str) -> Value {
    Value::Number(serde_json::Number::from_str(s).expect("decimal strings are JSON numbers"))
}

fn cmd_invariants(knot: &KnotDescriptor, as_json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let s = &knot.seifert;
    let delta = s.alexander();
    if as_json {
        emit_json(
            &json!({
                "name": knot.name,
                "genus": s.genus(),
                "alexander": delta.to_string(),
                "determinant": descriptor::big_number(&s.determinant()),
                "arf": s.arf(),
                "signature": s.ordinary_signature(),
            }),
            out,
        )?;
    } else {
        name_line(knot, out)?;
        writeln!(out, "genus: {}", s.genus())?;
        writeln!(out, "alexander: {delta}")?;
        writeln!(out, "determinant: {}", s.determinant())?;
        writeln!(out, "arf: {}", s.arf())?;
        writeln!(out, "signature: {}", s.ordinary_signature())?;
    }
    Ok(0)
}

const PLOT_BITS: u32 = 64;

fn cmd_profile(knot: &KnotDescriptor, csv: Option<&str>, as_json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let profile = signature_profile(&knot.seifert)?;
    let sizes = profile.jump_sizes();
    let positions: Vec<String> = profile
        .jumps()
        .iter()
        .map(|j| fmt_significant(to_f64(&theta_over_pi(j, PLOT_BITS).midpoint()), 12))
        .collect();
    if let Some(target) = csv {
        let mut text = String::from("theta_over_pi,sigma\n");
        let mut starts = vec!["0".to_owned()];
        starts.extend(positions.iter().cloned());
        let mut ends = positions.clone();
        ends.push("1".to_owned());
        for ((a, b), v) in starts.iter().zip(&ends).zip(profile.arc_values()) {
            text.push_str(&format!("{a},{v}\n{b},{v}\n"));
        }
        if !profile.jumps().is_empty() {
            text.push_str("# jumps: cos(theta), theta/pi, size\n");
        }
        for ((j, pos), d) in profile.jumps().iter().zip(&positions).zip(&sizes) {
            text.push_str(&format!("# {j}, {pos}, {d:+}\n"));
        }
        if target == "-" {
            out.write_all(text.as_bytes())?;
            return Ok(0);
        }
        std::fs::write(target, text).map_err(|e| Failure::Io(format!("{target}: {e}")))?;
    }
    if as_json {
        let jumps: Vec<Value> = profile
            .jumps()
            .iter()
            .zip(&positions)
            .zip(&sizes)
            .map(|((j, pos), d)| json!({"cos_theta": j.to_string(), "theta_over_pi": decimal_number(pos), "size": d}))
            .collect();
        emit_json(
            &json!({
                "name": knot.name,
                "arc_values": profile.arc_values(),
                "endpoint_value": profile.endpoint_value(),
                "jumps": jumps,
            }),
            out,
        )?;
    } else if csv.is_none() {
        name_line(knot, out)?;
        writeln!(out, "arcs: {}", profile.arc_values().len())?;
        writeln!(out, "arc values: {:?}", profile.arc_values())?;
        writeln!(out, "sigma at theta = pi: {}", profile.endpoint_value())?;
        for ((j, pos), d) in profile.jumps().iter().zip(&positions).zip(&sizes) {
            writeln!(out, "jump {d:+} at theta/pi = {pos} (cos theta = {j})")?;
        }
    }
    Ok(0)
}

fn rho_json(r: &RhoValue, digits: u32) -> Value {
    let (lo, hi) = r.enclosure().to_decimal(digits);
    let terms: Vec<Value> =
        r.terms().iter().map(|t| json!({"coeff": t.coeff, "cos_theta": t.abscissa.to_string()})).collect();
    json!({"symbolic": r.symbolic(), "enclosure": [decimal_number(&lo), decimal_number(&hi)], "terms": terms})
}

fn cmd_rho(knot: &KnotDescriptor, tol: &BigRational, as_json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let r = rho(&knot.seifert, tol)?;
    let digits = digits_for(tol);
    if as_json {
        let mut v = rho_json(&r, digits);
        v["name"] = json!(knot.name);
        emit_json(&v, out)?;
    } else {
        let (lo, hi) = r.enclosure().to_decimal(digits);
        name_line(knot, out)?;
        writeln!(out, "rho: {}", r.symbolic())?;
        writeln!(out, "enclosure: [{lo}, {hi}]")?;
    }
    Ok(0)
}

fn jm_descriptor(m: u64) -> Result<KnotDescriptor, Failure> {
    let seifert = jm_seifert(m).map_err(|e| match e {
        FamilyError::NonPositive => Failure::BadArgument(e.to_string()),
        other => Failure::Semantic(other.to_string()),
    })?;
    Ok(KnotDescriptor { name: Some(format!("J_{m}")), seifert })
}

fn cmd_jm(m: Option<u64>, primes: Option<usize>, as_json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    if let Some(m) = m {
        let d = jm_descriptor(m)?;
        writeln!(out, "{}", d.to_json())?;
        return Ok(0);
    }
    let n = primes.expect("clap requires --m or --primes");
    if n == 0 {
        return Err(Failure::BadArgument("--primes must be positive".into()));
    }
    let params = params_from_primes(n);
    if as_json {
        let rows: Vec<Value> = params
            .iter()
            .map(|p| {
                Ok(json!({
                    "j": p.index,
                    "p": p.prime,
                    "m": p.m,
                    "cos_theta": p.theta_cos.to_string(),
                    "knot": jm_descriptor(p.m)?.to_json(),
                }))
            })
            .collect::<Result<_, Failure>>()?;
        emit_json(&json!({ "params": rows }), out)?;
    } else {
        writeln!(out, "{:>3} {:>6} {:>10}  cos_theta", "j", "p", "m")?;
        for p in &params {
            writeln!(out, "{:>3} {:>6} {:>10}  {}", p.index, p.prime, p.m, p.theta_cos)?;
        }
        for p in &params {
            writeln!(out, "{}", jm_descriptor(p.m)?.to_json())?;
        }
    }
    Ok(0)
}

fn cmd_indep(n: usize, bound: u32, as_json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    if n == 0 || bound == 0 {
        return Err(Failure::BadArgument("--n and --bound must be positive".into()));
    }
    if n > 16 {
        return Err(Failure::BadArgument("--n is limited to 16".into()));
    }
    let params = params_from_primes(n);
    let degree_ok = galois_degree_check(&params);
    let roots_ok = units_for(&params)
        .map_err(|e| Failure::Semantic(e.to_string()))?
        .iter()
        .all(root_of_unity_check);
    let violations = exhaustive_independence(n, bound).map_err(|e| match e {
        IndependenceError::SearchTooLarge { .. } => Failure::BadArgument(e.to_string()),
        other => Failure::Semantic(other.to_string()),
    })?;
    let pass = degree_ok && violations.is_empty();
    let candidates = BigInt::from(2 * bound as u64 + 1).pow(n as u32) - 1;
    if as_json {
        emit_json(
            &json!({
                "primes": params.iter().map(|p| p.prime).collect::<Vec<_>>(),
                "m": params.iter().map(|p| p.m).collect::<Vec<_>>(),
                "degree_check": degree_ok,
                "root_of_unity_check": roots_ok,
                "bound": bound,
                "candidates": descriptor::big_number(&candidates),
                "violations": violations.iter().map(|c| c.0.clone()).collect::<Vec<_>>(),
                "result": if pass { "PASS" } else { "FAIL" },
            }),
            out,
        )?;
    } else {
        let join = |v: Vec<String>| v.join(" ");
        writeln!(out, "primes: {}", join(params.iter().map(|p| p.prime.to_string()).collect()))?;
        writeln!(out, "m: {}", join(params.iter().map(|p| p.m.to_string()).collect()))?;
        writeln!(out, "degree check [Q(xi):Q] = 2^{n}: {}", if degree_ok { "pass" } else { "fail" })?;
        writeln!(out, "no z_j of order 3, 4 or 6: {}", if roots_ok { "pass" } else { "fail" })?;
        writeln!(out, "bound: {bound} ({candidates} nonzero exponent vectors)")?;
        writeln!(out, "violations: {}", violations.len())?;
        for c in &violations {
            writeln!(out, "  {:?}", c.0)?;
        }
        writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
    }
    Ok(if pass { 0 } else { 1 })
}

fn genus1_failure(e: Genus1Error) -> Failure {
    match e {
        Genus1Error::Signature(s) => s.into(),
        other => Failure::Semantic(other.to_string()),
    }
}

fn cmd_genus1(
    knot: &KnotDescriptor,
    curves: Option<BTreeMap<genus1::MetabolizerClass, KnotDescriptor>>,
    tol: &BigRational,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let s = &knot.seifert;
    let slice = is_algebraically_slice_g1(s).map_err(genus1_failure)?;
    let classes = metabolizer_classes(s).map_err(genus1_failure)?;
    let class_strings: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
    let report = match curves {
        Some(curves) => {
            let by_class = curves.into_iter().map(|(k, d)| (k, d.seifert)).collect();
            Some(genus1::obstruction_report(s, &by_class, tol).map_err(genus1_failure)?)
        }
        None => None,
    };
    let digits = digits_for(tol);
    if as_json {
        let mut v = json!({
            "name": knot.name,
            "algebraically_slice": slice,
            "classes": class_strings,
        });
        if let Some(r) = &report {
            let per: Vec<Value> = r
                .classes
                .iter()
                .map(|c| json!({"class": c.class.to_string(), "rho": rho_json(&c.rho, digits)}))
                .collect();
            v["curves"] = Value::Array(per);
            v["verdict"] = json!(r.verdict.to_string());
        }
        emit_json(&v, out)?;
    } else {
        name_line(knot, out)?;
        writeln!(out, "algebraically slice: {}", if slice { "yes" } else { "no" })?;
        writeln!(out, "metabolizer classes: {}", if classes.is_empty() { "none".into() } else { class_strings.join(" ") })?;
        if let Some(r) = &report {
            for c in &r.classes {
                let (lo, hi) = c.rho.enclosure().to_decimal(digits);
                writeln!(out, "class {}: rho = {} in [{lo}, {hi}]", c.class, c.rho.symbolic())?;
            }
            writeln!(out, "verdict: {}", r.verdict)?;
        }
    }
    Ok(0)
}
