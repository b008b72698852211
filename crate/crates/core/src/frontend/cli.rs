//! Command-line driver.
//!
//! Exit status: 0 on success, 1 for domain errors (non-unit axis, bad
//! mirror, ...), 2 for syntax and usage errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use super::cube::{render_cube, CubeFormat};
use super::parser::{constant_name, parse_and_evaluate, EvalError};
use super::report::decompose_report;
use crate::algebra::{Blade, Multivector};
use crate::clusters::{blade_to_byte_signature, ByteSignature, DiagDecomposition, DIAGONALS};
use crate::error::Error;
use crate::hilbert::{hadamard_regroup, not_gate, project, HadamardTerms, Ideal, Side, Spinor};
use crate::transforms::{
    cayley_klein, euler_rodrigues, quaternion_from_axis_angle, rotate, AxisAngle, Reflection,
};

#[derive(Debug, Parser)]
#[command(
    name = "geobyte",
    version,
    about = "Geometric byte calculator for G(3,0)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BasisArg {
    Blade,
    Structure,
    Vdiag,
    Qdiag,
    /// Every basis at once.
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum IdealArg {
    Pos,
    Neg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GateArg {
    Not,
    Hadamard,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CubeFormatArg {
    Ascii,
    Svg,
}

#[derive(Debug, Args)]
pub struct FormatOpt {
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression and print it in a chosen basis.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "blade")]
        basis: BasisArg,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Build the rotor for an axis and angle, optionally applying it.
    Rotate {
        /// Unit axis as `x,y,z`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list::<3>)]
        axis: [f64; 3],
        /// Angle in radians.
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Reflect in the origin (`point`), a basis line or a basis plane.
    Reflect {
        #[arg(long = "in")]
        mirror: String,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Project into the positive or negative spinor ideal.
    Project {
        #[arg(long, value_enum)]
        ideal: IdealArg,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Apply a gate to the qubit alpha P3 + beta e1 P3.
    Gate {
        #[arg(long, value_enum)]
        name: GateArg,
        /// Complex amplitude as `re,im`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list::<2>)]
        alpha: [f64; 2],
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list::<2>)]
        beta: [f64; 2],
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Draw structure coordinates on the cube.
    Cube {
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: CubeFormatArg,
    },
    /// Convert between blade names and byte signatures.
    Signature {
        #[arg(long, conflicts_with = "code", required_unless_present = "code")]
        blade: Option<String>,
        /// A signature such as `+--`.
        #[arg(long, allow_hyphen_values = true)]
        code: Option<String>,
    },
}

/// Parses exactly `N` comma-separated numbers.
fn parse_list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!(
            "expected {N} comma-separated numbers, got {}",
            parts.len()
        ));
    }
    let mut out = [0.0f64; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("`{p}` is not a number"))?;
        if !slot.is_finite() {
            return Err(format!("`{p}` is not finite"));
        }
    }
    Ok(out)
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Syntax(p) => Failure::Usage(p.to_string()),
            EvalError::Domain(d) => Failure::Domain(d.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

/// Library constant name when there is one, expression syntax otherwise.
fn describe(m: &Multivector) -> String {
    constant_name(m).unwrap_or_else(|| m.to_string())
}

/// Drops the sign of negative zero.
fn clean(x: f64) -> f64 {
    x + 0.0
}

fn complex_text(z: Complex64) -> String {
    let z = Complex64::new(clean(z.re), clean(z.im));
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn pretty<T: serde::Serialize>(v: T) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(&v).expect("values serialize")
    )
}

fn diag_text(d: &DiagDecomposition, joiner: &str) -> String {
    let mut s = String::new();
    for (l, c) in DIAGONALS.iter().zip(d.coefficients) {
        s.push_str(&format!(
            "{}{}{} = {}\n",
            l.name(),
            joiner,
            l.bar().name(),
            c
        ));
    }
    s.push_str(&format!("residual = {}\n", d.residual));
    s
}

fn spinor_text(s: &Spinor) -> String {
    format!(
        "{}\nideal = {}\nvariance = {}\n",
        describe(&s.value()),
        s.ideal().name(),
        s.variance().name()
    )
}

fn execute(cmd: &Command) -> Result<String, Failure> {
    match cmd {
        Command::Eval {
            expr,
            basis,
            format,
        } => {
            let m = parse_and_evaluate(expr)?;
            let r = decompose_report(&m);
            Ok(match (format.format, basis) {
                (OutputFormat::Text, BasisArg::Blade) => format!("{m}\n"),
                (OutputFormat::Text, BasisArg::Structure) => r
                    .structure
                    .iter()
                    .map(|(l, v)| format!("{} = {}\n", l.name(), v))
                    .collect(),
                (OutputFormat::Text, BasisArg::Vdiag) => diag_text(&r.vector_diag, "-"),
                (OutputFormat::Text, BasisArg::Qdiag) => diag_text(&r.quaternion_diag, "+"),
                (OutputFormat::Text, BasisArg::All) => {
                    let mut s = format!("blade: {m}\nstructure:\n");
                    for (l, v) in r.structure.iter() {
                        s.push_str(&format!("  {} = {}\n", l.name(), v));
                    }
                    s.push_str("vector diagonals:\n");
                    for line in diag_text(&r.vector_diag, "-").lines() {
                        s.push_str(&format!("  {line}\n"));
                    }
                    s.push_str("quaternion diagonals:\n");
                    for line in diag_text(&r.quaternion_diag, "+").lines() {
                        s.push_str(&format!("  {line}\n"));
                    }
                    s
                }
                (OutputFormat::Json, BasisArg::Blade) => pretty(m),
                (OutputFormat::Json, BasisArg::Structure) => pretty(r.structure),
                (OutputFormat::Json, BasisArg::Vdiag) => pretty(r.vector_diag),
                (OutputFormat::Json, BasisArg::Qdiag) => pretty(r.quaternion_diag),
                (OutputFormat::Json, BasisArg::All) => pretty(r),
            })
        }
        Command::Rotate {
            axis,
            theta,
            target,
            format,
        } => {
            let aa = AxisAngle::new(*axis, *theta);
            let q = quaternion_from_axis_angle(&aa)?;
            if let Some(t) = target {
                let m = parse_and_evaluate(t)?;
                let r = rotate(&m, &q)?;
                return Ok(match format.format {
                    OutputFormat::Text => format!("{}\n", describe(&r)),
                    OutputFormat::Json => pretty(r),
                });
            }
            let ck = cayley_klein(&q)?;
            let er = euler_rodrigues(&q)?;
            Ok(match format.format {
                OutputFormat::Text => format!(
                    "q = {}\nalpha = {}\nbeta = {}\nrho = {}\nnu = {}\nmu = {}\nlambda = {}\n",
                    q.value(),
                    complex_text(ck.alpha),
                    complex_text(ck.beta),
                    clean(er.rho),
                    clean(er.nu),
                    clean(er.mu),
                    clean(er.lambda)
                ),
                OutputFormat::Json => pretty(json!({
                    "quaternion": q.value(),
                    "alpha": [ck.alpha.re, ck.alpha.im],
                    "beta": [ck.beta.re, ck.beta.im],
                    "rho": er.rho,
                    "nu": er.nu,
                    "mu": er.mu,
                    "lambda": er.lambda,
                })),
            })
        }
        Command::Reflect {
            mirror,
            target,
            format,
        } => {
            let op: Reflection = mirror
                .parse()
                .map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let m = parse_and_evaluate(target)?;
            let r = op.apply(&m)?;
            Ok(match format.format {
                OutputFormat::Text => format!("{}\n", describe(&r)),
                OutputFormat::Json => pretty(r),
            })
        }
        Command::Project {
            ideal,
            side,
            target,
            format,
        } => {
            let m = parse_and_evaluate(target)?;
            let ideal = match ideal {
                IdealArg::Pos => Ideal::Positive,
                IdealArg::Neg => Ideal::Negative,
            };
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let s = project(&m, ideal, side);
            Ok(match format.format {
                OutputFormat::Text => spinor_text(&s),
                OutputFormat::Json => pretty(s),
            })
        }
        Command::Gate {
            name,
            alpha,
            beta,
            format,
        } => {
            let alpha = Complex64::new(alpha[0], alpha[1]);
            let beta = Complex64::new(beta[0], beta[1]);
            let s = Spinor::qubit(alpha, beta);
            match name {
                GateArg::Not => {
                    let t = not_gate(&s)?;
                    Ok(match format.format {
                        OutputFormat::Text => spinor_text(&t),
                        OutputFormat::Json => pretty(t),
                    })
                }
                GateArg::Hadamard => {
                    let h = hadamard_regroup(&s)?;
                    let names = |ls: [crate::clusters::Label; 2]| {
                        format!("{} + {}", ls[0].name(), ls[1].name())
                    };
                    Ok(match format.format {
                        OutputFormat::Text => format!(
                            "P1*P3 ({}): {}\nN1*P3 ({}): {}\n",
                            names(HadamardTerms::PLUS_LABELS),
                            complex_text(h.plus),
                            names(HadamardTerms::MINUS_LABELS),
                            complex_text(h.minus)
                        ),
                        OutputFormat::Json => pretty(json!({
                            "plus": [h.plus.re, h.plus.im],
                            "minus": [h.minus.re, h.minus.im],
                        })),
                    })
                }
            }
        }
        Command::Cube { target, format } => {
            let m = parse_and_evaluate(target)?;
            let f = match format {
                CubeFormatArg::Ascii => CubeFormat::Ascii,
                CubeFormatArg::Svg => CubeFormat::Svg,
            };
            Ok(render_cube(&m, f))
        }
        Command::Signature { blade, code } => {
            if let Some(name) = blade {
                let b: Blade = name
                    .parse()
                    .map_err(|e: Error| Failure::Usage(e.to_string()))?;
                return Ok(format!("{}\n", blade_to_byte_signature(b)));
            }
            let code = code.as_deref().unwrap_or_default();
            let sig: ByteSignature = code
                .parse()
                .map_err(|e: Error| Failure::Usage(e.to_string()))?;
            Ok(format!("{}\n", sig.blade()))
        }
    }
}
