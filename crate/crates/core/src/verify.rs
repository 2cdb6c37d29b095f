//! Differential checks of the classifier, solvers and rewrites against the
//! brute-force oracle. Each check returns a [`SuiteReport`]; randomized
//! checks are reproducible from their seed.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;

use crate::classify::{has_property, Property};
use crate::error::{Error, Result};
use crate::eval::{eval, EvalBudget};
use crate::gadgets::{
    complement_expression, remove_constants, substitute_implementation, Reduced, ReductionCase,
};
use crate::implement::{check_implementation, find_implementation, SearchOptions};
use crate::model::{Constraint, QuantifiedExpression, Quantifier};
use crate::presets;
use crate::random::{random_class_constraint, random_constraint, random_expression, rng, ExprParams};
use crate::solvers::{solve_tractable, synthesize_normal_form, TractableClass};

/// Outcome counts of one check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub skipped: usize,
    /// First few failures, described.
    pub failures: Vec<String>,
    /// Reasons for skipped instances.
    pub skip_reasons: Vec<String>,
}

const MAX_RECORDED: usize = 10;

impl SuiteReport {
    fn new(name: impl Into<String>) -> Self {
        SuiteReport {
            name: name.into(),
            ..Self::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn pass(&mut self) {
        self.checked += 1;
    }

    fn fail(&mut self, what: impl FnOnce() -> String) {
        self.checked += 1;
        self.failed += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(what());
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(what)
        }
    }

    fn skip(&mut self, why: String) {
        self.skipped += 1;
        if self.skip_reasons.len() < MAX_RECORDED {
            self.skip_reasons.push(why);
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={} checked={} failed={} skipped={} {}",
            self.name,
            self.checked,
            self.failed,
            self.skipped,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Closure-based flags against normal-form synthesis, and the three direct
/// flags against table reads, for every constraint of arity 1 to 3.
pub fn classifier_agreement() -> SuiteReport {
    let mut report = SuiteReport::new("classifier");
    let pairs = [
        (Property::Horn, TractableClass::Horn),
        (Property::AntiHorn, TractableClass::AntiHorn),
        (Property::Bijunctive, TractableClass::Bijunctive),
        (Property::Affine, TractableClass::Affine),
    ];
    for arity in 1..=3usize {
        let rows = 1usize << arity;
        for t in 0u32..1 << rows {
            let c = Constraint::from_rows("C", arity, (0..rows).map(|r| (t >> r) & 1 == 1))
                .expect("valid arity");
            for (p, class) in pairs {
                let synthesized = synthesize_normal_form(&c, class.form_kind())
                    .expect("arity within limit")
                    .is_some();
                report.check(has_property(&c, p) == synthesized, || {
                    format!("{c:?}: {p} closure disagrees with synthesis")
                });
            }
            let full = rows - 1;
            let direct = [
                (Property::ZeroValid, c.holds(0)),
                (Property::OneValid, c.holds(full)),
                (
                    Property::Complementive,
                    (0..rows).all(|r| c.holds(r) == c.holds(full - r)),
                ),
            ];
            for (p, value) in direct {
                report.check(has_property(&c, p) == value, || {
                    format!("{c:?}: {p} disagrees with the table")
                });
            }
        }
    }
    report
}

fn oracle(e: &QuantifiedExpression, budget: &EvalBudget) -> Result<bool> {
    eval(e, budget)
}

/// `solve_tractable` against `eval` on random expressions over random
/// constraints of `class`, at most 14 variables and 20 applications.
pub fn solver_agreement(class: TractableClass, seed: u64, instances: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("solvers/{class}"));
    let mut r = rng(seed);
    let budget = EvalBudget::default();
    let params = ExprParams {
        vars: 1..=14,
        apps: 0..=20,
        blocks: 1..=5,
        first: None,
        constant_prob: 0.1,
    };
    for _ in 0..instances {
        let k = r.gen_range(1..=3);
        let cs: Vec<Arc<Constraint>> = (0..k)
            .map(|i| {
                let arity = r.gen_range(1..=3);
                Arc::new(random_class_constraint(&mut r, &format!("R{i}"), arity, class))
            })
            .collect();
        let e = random_expression(&mut r, &cs, &params);
        match (solve_tractable(&e, class), oracle(&e, &budget)) {
            (Ok(fast), Ok(slow)) => report.check(fast == slow, || {
                format!("{class}: solver {fast}, oracle {slow} on {}", crate::parser::render_expression(&e))
            }),
            (Err(err), _) | (_, Err(err)) => report.fail(|| format!("{class}: {err}")),
        }
    }
    report
}

/// `eval(e) = eval(complement_expression(e))` on random expressions over
/// random constraints, at most 12 variables and 15 applications.
pub fn complement_agreement(seed: u64, instances: usize) -> SuiteReport {
    let mut report = SuiteReport::new("complement");
    let mut r = rng(seed);
    let budget = EvalBudget::default();
    let params = ExprParams {
        vars: 1..=12,
        apps: 0..=15,
        blocks: 1..=4,
        first: None,
        constant_prob: 0.2,
    };
    for _ in 0..instances {
        let k = r.gen_range(1..=3);
        let cs: Vec<Arc<Constraint>> = (0..k)
            .map(|i| {
                let arity = r.gen_range(1..=3);
                Arc::new(random_constraint(&mut r, &format!("R{i}"), arity))
            })
            .collect();
        let e = random_expression(&mut r, &cs, &params);
        let c = complement_expression(&e);
        match (oracle(&e, &budget), oracle(&c, &budget)) {
            (Ok(a), Ok(b)) => report.check(a == b && c.prefix() == e.prefix(), || {
                format!("{} -> {}", crate::parser::render_expression(&e), crate::parser::render_expression(&c))
            }),
            (Err(err), _) | (_, Err(err)) => report.skip(err.to_string()),
        }
    }
    report
}

/// A fixed non-Schaefer constraint set whose gadget case is `case`.
pub fn case_constraint_set(case: ReductionCase) -> Vec<Arc<Constraint>> {
    let c = |name: &str, arity: usize, table: &str| {
        Arc::new(Constraint::new(name, arity, table).expect("valid table"))
    };
    match case {
        // x | y | !z and !(x & y & z)
        ReductionCase::ZeroValidNotComp => vec![presets::or3_1n(), presets::or3_3n()],
        // x | y | z and !x | !y | z
        ReductionCase::OneValidNotComp => vec![presets::or3(), c("OR3_12n", 3, "11111101")],
        ReductionCase::ZeroValidComp => vec![presets::sym_or1()],
        ReductionCase::NeitherValidComp => vec![c("NAE3", 3, "01111110")],
        ReductionCase::NeitherValidNotComp => presets::three_cnf_set(),
    }
}

/// Prefix kinds exercised by [`reduction_agreement`]: `(name, first
/// quantifier, blocks, level)`.
pub const REDUCTION_SHAPES: [(&str, Quantifier, usize, usize); 3] = [
    ("Sigma_2", Quantifier::Exists, 2, 3),
    ("Pi_2", Quantifier::Forall, 2, 2),
    ("Sigma_3", Quantifier::Exists, 3, 3),
];

/// Checks one constant-removal result: constant-free, same level shape,
/// same truth value.
pub fn check_reduction(
    input: &QuantifiedExpression,
    level: usize,
    result: &Reduced,
    budget: &EvalBudget,
) -> Result<std::result::Result<(), String>> {
    let before = oracle(input, budget)?;
    let out = match result {
        Reduced::TriviallyFalse => {
            return Ok(if before {
                Err("trivially false but the input is true".into())
            } else {
                Ok(())
            })
        }
        Reduced::Expression(e) => e,
    };
    if out.has_constants() {
        return Ok(Err("output has constants".into()));
    }
    let (si, so) = (input.prefix_shape(), out.prefix_shape());
    let shape_ok = so.fits_level(level) && (si.level != level || so == si);
    if !shape_ok {
        return Ok(Err(format!("shape {si} became {so}")));
    }
    let after = oracle(out, budget)?;
    if before != after {
        return Ok(Err(format!("truth {before} became {after}")));
    }
    Ok(Ok(()))
}

/// `remove_constants` on random `Σ_2`, `Π_2` and `Σ_3` expressions over
/// [`case_constraint_set`]. Budget and search exhaustion count as skips.
pub fn reduction_agreement(case: ReductionCase, seed: u64, instances: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("reductions/{}", case.letter()));
    let cs = case_constraint_set(case);
    let mut r = rng(seed);
    let budget = EvalBudget::with_max_variables(26);
    let options = SearchOptions::default();
    for n in 0..instances {
        let (shape, first, blocks, level) = REDUCTION_SHAPES[n % REDUCTION_SHAPES.len()];
        let params = ExprParams {
            vars: blocks..=7,
            apps: 1..=8,
            blocks: blocks..=blocks,
            first: Some(first),
            constant_prob: 0.25,
        };
        let e = random_expression(&mut r, &cs, &params);
        let result = match remove_constants(&e, &cs, level, &options) {
            Ok(res) => res,
            Err(err @ Error::ImplementationNotFound { .. }) => {
                report.skip(err.to_string());
                continue;
            }
            Err(err) => {
                report.fail(|| format!("{shape}: {err}"));
                continue;
            }
        };
        if result.case_used != case {
            report.fail(|| format!("{shape}: dispatched to {}", result.case_used));
            continue;
        }
        match check_reduction(&e, level, &result.outcome, &budget) {
            Ok(Ok(())) => report.pass(),
            Ok(Err(why)) => report.fail(|| {
                format!("{shape}: {why} on {}", crate::parser::render_expression(&e))
            }),
            Err(err) => report.skip(err.to_string()),
        }
    }
    report
}

/// Substitutes `{OIT}` implementations of binary targets into random
/// expressions and compares truth values.
pub fn substitution_agreement(seed: u64, instances: usize) -> SuiteReport {
    let mut report = SuiteReport::new("substitution");
    let oit = vec![presets::one_in_three()];
    let options = SearchOptions::default();
    let mut imps = Vec::new();
    for target in [presets::xor2(), presets::or2(), presets::eq2(), presets::nand2(), presets::and2()] {
        match find_implementation(&oit, &target, &options) {
            Some(imp) if check_implementation(&imp) => imps.push(imp),
            _ => report.fail(|| format!("no checked implementation of {}", target.name())),
        }
    }
    if imps.is_empty() {
        return report;
    }
    let mut library: Vec<Arc<Constraint>> = imps.iter().map(|i| i.target.clone()).collect();
    library.push(presets::one_in_three());
    let mut r = rng(seed);
    // each substituted application brings up to five auxiliary variables
    let budget = EvalBudget::with_max_variables(32);
    let params = ExprParams {
        vars: 1..=8,
        apps: 1..=6,
        blocks: 1..=4,
        first: None,
        constant_prob: 0.15,
    };
    let mut done = 0;
    while done < instances {
        let e = random_expression(&mut r, &library, &params);
        if e.prefix().last().map(|b| b.quantifier) != Some(Quantifier::Exists) {
            continue;
        }
        done += 1;
        let mut out = e.clone();
        let mut error = None;
        for imp in &imps {
            match substitute_implementation(&out, imp) {
                Ok(next) => out = next,
                Err(err) => {
                    error = Some(err);
                    break;
                }
            }
        }
        if let Some(err) = error {
            report.fail(|| err.to_string());
            continue;
        }
        let uses_target = out
            .constraints()
            .iter()
            .any(|c| imps.iter().any(|i| **c == *i.target));
        if uses_target {
            report.fail(|| "a target application survived substitution".into());
            continue;
        }
        match (oracle(&e, &budget), oracle(&out, &budget)) {
            (Ok(a), Ok(b)) => report.check(a == b && out.prefix_shape() == e.prefix_shape(), || {
                format!("{} -> {}", crate::parser::render_expression(&e), crate::parser::render_expression(&out))
            }),
            (Err(err), _) | (_, Err(err)) => report.skip(err.to_string()),
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Classifier,
    Reductions,
    Solvers,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "classifier" => Ok(Suite::Classifier),
            "reductions" => Ok(Suite::Reductions),
            "solvers" => Ok(Suite::Solvers),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite {other:?}, expected classifier, reductions, solvers or all"
            )),
        }
    }
}

/// Runs a suite. `instances` is per randomized check.
pub fn run_suite(suite: Suite, seed: u64, instances: usize) -> Vec<SuiteReport> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Classifier | Suite::All) {
        out.push(classifier_agreement());
    }
    if matches!(suite, Suite::Solvers | Suite::All) {
        for class in TractableClass::ALL {
            out.push(solver_agreement(class, seed, instances));
        }
    }
    if matches!(suite, Suite::Reductions | Suite::All) {
        out.push(complement_agreement(seed, instances));
        for case in ReductionCase::ALL {
            out.push(reduction_agreement(case, seed, instances));
        }
        out.push(substitution_agreement(seed, instances));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::reduction_case;

    #[test]
    fn case_sets_match_their_case() {
        for case in ReductionCase::ALL {
            assert_eq!(reduction_case(&case_constraint_set(case)), Ok(case));
        }
    }

    #[test]
    fn small_runs_pass() {
        for report in run_suite(Suite::All, 3, 20) {
            assert!(report.passed(), "{report}: {:?}", report.failures);
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("all".parse::<Suite>(), Ok(Suite::All));
        assert!("nope".parse::<Suite>().is_err());
    }
}
