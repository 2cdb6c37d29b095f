//! The `qcsp` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 evaluation budget or implementation search exhausted, 4 reduction not
//! applicable to a Schaefer set.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::classify_set;
use crate::error::Error;
use crate::eval::{eval, EvalBudget};
use crate::gadgets::{complement_expression, eliminate_unary, remove_constants, substitute_implementation, Reduced};
use crate::implement::{find_implementation, SearchOptions};
use crate::model::{Constraint, PrefixShape, QuantifiedExpression};
use crate::parser::{parse_document, render_standalone, Document};
use crate::solvers::{solve_auto, SolvePath};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_NOT_APPLICABLE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "qcsp", version, about = "Classify, solve and rewrite quantified Boolean constraint expressions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    RemoveConstants,
    Complement,
    EliminateUnary,
    Substitute,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the properties and complexity verdicts of a constraint set
    Classify {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Extra constraints (document or preset names) to add to the set
        #[arg(long, value_delimiter = ',')]
        with: Vec<String>,
    },
    /// Decide the truth of an expression
    Solve {
        input: PathBuf,
        /// Expression name; optional when the document has exactly one
        #[arg(long)]
        expr: Option<String>,
        /// Always use the brute-force evaluator
        #[arg(long)]
        oracle: bool,
        /// Variable budget of the brute-force evaluator
        #[arg(long)]
        max_vars: Option<usize>,
        /// Also report QSAT_i membership at this level
        #[arg(long)]
        level: Option<usize>,
    },
    /// Rewrite an expression and print the result as a document
    Reduce {
        input: PathBuf,
        #[arg(long)]
        expr: Option<String>,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Level the expression is read at (remove-constants)
        #[arg(long)]
        level: Option<usize>,
        /// Accepted for harness symmetry; every rewrite is deterministic
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Constraint set (remove-constants adds it to the document's
        /// constraints; substitute implements the target with it)
        #[arg(long, value_delimiter = ',')]
        using: Vec<String>,
        /// Constraint to replace (substitute)
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_aux: usize,
        #[arg(long, default_value_t = 8)]
        max_apps: usize,
    },
    /// Search for perfect implementations
    Implement {
        /// Document with constraint definitions; presets need none
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', required = true)]
        targets: Vec<String>,
        /// Implementing set; defaults to the document's constraints
        #[arg(long, value_delimiter = ',')]
        using: Vec<String>,
        #[arg(long, default_value_t = 6)]
        max_aux: usize,
        #[arg(long, default_value_t = 8)]
        max_apps: usize,
        /// Allow the constants 0 and 1 as arguments
        #[arg(long)]
        allow_constants: bool,
    },
    /// Run the differential checks against the brute-force evaluator
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per randomized check
        #[arg(long, default_value_t = 100)]
        instances: usize,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) | Error::ImplementationNotFound { .. } => EXIT_BUDGET,
            Error::NotApplicable => EXIT_NOT_APPLICABLE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn load(path: &Path) -> std::result::Result<Document, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn resolve(doc: &Document, names: &[String]) -> std::result::Result<Vec<Arc<Constraint>>, Failure> {
    names
        .iter()
        .map(|n| doc.constraint(n).ok_or_else(|| usage(format!("unknown constraint {n}"))))
        .collect()
}

fn select<'d>(
    doc: &'d Document,
    name: Option<&str>,
) -> std::result::Result<(&'d str, &'d QuantifiedExpression), Failure> {
    match name {
        Some(n) => doc
            .expressions
            .iter()
            .find(|(m, _)| m == n)
            .map(|(m, e)| (m.as_str(), e))
            .ok_or_else(|| usage(format!("no expression named {n}"))),
        None => match doc.expressions.as_slice() {
            [(m, e)] => Ok((m.as_str(), e)),
            [] => Err(usage("the document defines no expression")),
            _ => Err(usage("the document defines several expressions; pick one with --expr")),
        },
    }
}

fn push_unique(set: &mut Vec<Arc<Constraint>>, more: impl IntoIterator<Item = Arc<Constraint>>) {
    for c in more {
        if !set.iter().any(|d| **d == *c) {
            set.push(c);
        }
    }
}

/// Smallest level whose `Σ`/`Π` form the shape fits.
fn default_level(shape: PrefixShape) -> usize {
    if shape.level == 0 {
        1
    } else if shape.fits_level(shape.level) {
        shape.level
    } else {
        shape.level + 1
    }
}

fn classify(out: &mut dyn Write, input: &Path, format: Format, with: &[String]) -> Outcome {
    let doc = load(input)?;
    let mut cs = doc.constraints.clone();
    push_unique(&mut cs, resolve(&doc, with)?);
    if cs.is_empty() {
        for (_, e) in &doc.expressions {
            push_unique(&mut cs, e.constraints());
        }
    }
    let report = classify_set(&cs)?;
    let names: Vec<&str> = cs.iter().map(|c| c.name()).collect();
    match format {
        Format::Text => {
            let _ = writeln!(out, "set={}", names.join(","));
            let _ = write!(out, "{}", report.to_text());
        }
        Format::Json => {
            let mut v = report.to_json();
            v["set"] = serde_json::json!(names);
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"));
        }
    }
    Ok(EXIT_OK)
}

fn solve(
    out: &mut dyn Write,
    input: &Path,
    expr: Option<&str>,
    oracle: bool,
    max_vars: Option<usize>,
    level: Option<usize>,
) -> Outcome {
    let doc = load(input)?;
    let (_, e) = select(&doc, expr)?;
    let budget = max_vars.map_or_else(EvalBudget::from_env, EvalBudget::with_max_variables);
    if let Some(i) = level {
        let shape = e.prefix_shape();
        if !shape.fits_level(i) {
            return Err(Error::ShapeMismatch {
                shape: shape.to_string(),
                level: i,
            }
            .into());
        }
    }
    let (value, path) = if oracle {
        (eval(e, &budget)?, SolvePath::Oracle)
    } else {
        solve_auto(e, &budget)?
    };
    let _ = writeln!(out, "{value}");
    let _ = writeln!(out, "path={path}");
    if let Some(i) = level {
        let (member, polarity) = if i % 2 == 1 { (value, "truth") } else { (!value, "falsity") };
        let _ = writeln!(out, "qsat_{i}={}", member as u8);
        let _ = writeln!(out, "polarity={polarity}");
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn reduce(
    out: &mut dyn Write,
    input: &Path,
    expr: Option<&str>,
    mode: Mode,
    level: Option<usize>,
    using: &[String],
    target: Option<&str>,
    options: SearchOptions,
) -> Outcome {
    let doc = load(input)?;
    let (name, e) = select(&doc, expr)?;
    let print = |out: &mut dyn Write, reduced: &Reduced| match reduced {
        Reduced::Expression(x) => {
            let _ = write!(out, "{}", render_standalone(name, x));
        }
        Reduced::TriviallyFalse => {
            let _ = writeln!(out, "TRIVIALLY_FALSE");
        }
    };
    match mode {
        Mode::Complement => print(out, &Reduced::Expression(complement_expression(e))),
        Mode::EliminateUnary => print(out, &eliminate_unary(e)?),
        Mode::RemoveConstants => {
            let mut cs = doc.constraints.clone();
            push_unique(&mut cs, e.constraints());
            push_unique(&mut cs, resolve(&doc, using)?);
            let level = level.unwrap_or_else(|| default_level(e.prefix_shape()));
            let result = remove_constants(e, &cs, level, &options)?;
            let _ = writeln!(out, "# case={} level={level}", result.case_used);
            for imp in &result.implementations_used {
                let _ = writeln!(out, "# using {imp}");
            }
            print(out, &result.outcome);
        }
        Mode::Substitute => {
            let target = target.ok_or_else(|| usage("substitute needs --target"))?;
            let target = resolve(&doc, &[target.to_string()])?.remove(0);
            if using.is_empty() {
                return Err(usage("substitute needs --using"));
            }
            let ds = resolve(&doc, using)?;
            let imp = find_implementation(&ds, &target, &options).ok_or(Error::ImplementationNotFound {
                target: target.name().to_string(),
            })?;
            let _ = writeln!(out, "# using {imp}");
            print(out, &Reduced::Expression(substitute_implementation(e, &imp)?));
        }
    }
    Ok(EXIT_OK)
}

fn implement(
    out: &mut dyn Write,
    input: Option<&Path>,
    targets: &[String],
    using: &[String],
    options: SearchOptions,
) -> Outcome {
    let doc = match input {
        Some(p) => load(p)?,
        None => Document::default(),
    };
    let ds = if using.is_empty() {
        doc.constraints.clone()
    } else {
        resolve(&doc, using)?
    };
    if ds.is_empty() {
        return Err(usage("no implementing constraints; pass --using or define some"));
    }
    let mut code = EXIT_OK;
    for target in resolve(&doc, targets)? {
        match find_implementation(&ds, &target, &options) {
            Some(imp) => {
                let _ = writeln!(
                    out,
                    "{}: FOUND apps={} aux={}",
                    target.name(),
                    imp.apps.len(),
                    imp.aux_vars.len()
                );
                let _ = writeln!(out, "  {imp}");
            }
            None => {
                let _ = writeln!(out, "{}: NOT_FOUND", target.name());
                code = EXIT_BUDGET;
            }
        }
    }
    Ok(code)
}

fn verify(out: &mut dyn Write, suite: Suite, seed: u64, instances: usize) -> Outcome {
    let mut ok = true;
    for report in run_suite(suite, seed, instances) {
        ok &= report.passed();
        let _ = writeln!(out, "{report}");
        for f in &report.failures {
            let _ = writeln!(out, "  failure: {f}");
        }
        for s in &report.skip_reasons {
            let _ = writeln!(out, "  skipped: {s}");
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

/// Runs the command line on `args` (program name first) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Classify { input, format, with } => classify(out, &input, format, &with),
        Command::Solve {
            input,
            expr,
            oracle,
            max_vars,
            level,
        } => solve(out, &input, expr.as_deref(), oracle, max_vars, level),
        Command::Reduce {
            input,
            expr,
            mode,
            level,
            seed: _,
            using,
            target,
            max_aux,
            max_apps,
        } => reduce(
            out,
            &input,
            expr.as_deref(),
            mode,
            level,
            &using,
            target.as_deref(),
            SearchOptions::bounded(max_aux, max_apps),
        ),
        Command::Implement {
            input,
            targets,
            using,
            max_aux,
            max_apps,
            allow_constants,
        } => implement(
            out,
            input.as_deref(),
            &targets,
            &using,
            SearchOptions {
                allow_constants,
                ..SearchOptions::bounded(max_aux, max_apps)
            },
        ),
        Command::Verify {
            suite,
            seed,
            instances,
        } => verify(out, suite, seed, instances),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
