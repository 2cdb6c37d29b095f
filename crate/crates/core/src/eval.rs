//! Exact brute-force evaluation of quantified expressions.
//!
//! This is the trusted oracle every other module is checked against. It
//! branches on variables in prefix order and prunes a branch as soon as an
//! application whose variables are all assigned is violated.

use std::collections::HashMap;
use std::env;

use crate::error::{Error, Result};
use crate::model::{Arg, Constraint, PrefixShape, QuantifiedExpression, Quantifier};

/// Default number of variables the oracle accepts.
pub const DEFAULT_MAX_VARIABLES: usize = 24;

/// Environment variable overriding [`DEFAULT_MAX_VARIABLES`].
pub const MAX_VARS_ENV: &str = "QCSP_MAX_VARS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalBudget {
    pub max_variables: usize,
    pub node_limit: Option<u64>,
}

impl Default for EvalBudget {
    fn default() -> Self {
        EvalBudget {
            max_variables: DEFAULT_MAX_VARIABLES,
            node_limit: None,
        }
    }
}

impl EvalBudget {
    pub fn with_max_variables(max_variables: usize) -> Self {
        EvalBudget {
            max_variables: max_variables.max(1),
            node_limit: None,
        }
    }

    /// Default budget, with `QCSP_MAX_VARS` applied when it parses.
    pub fn from_env() -> Self {
        env::var(MAX_VARS_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .map(Self::with_max_variables)
            .unwrap_or_default()
    }
}

enum Slot {
    Var(usize),
    Const(bool),
}

struct CompiledApp<'a> {
    constraint: &'a Constraint,
    slots: Vec<Slot>,
}

impl CompiledApp<'_> {
    #[inline]
    fn holds(&self, values: &[bool]) -> bool {
        let row = self.slots.iter().fold(0usize, |acc, s| {
            let b = match *s {
                Slot::Var(i) => values[i],
                Slot::Const(b) => b,
            };
            (acc << 1) | b as usize
        });
        self.constraint.holds(row)
    }
}

struct Search<'a> {
    quantifiers: Vec<Quantifier>,
    apps: Vec<CompiledApp<'a>>,
    /// apps whose last variable (in prefix order) sits at each depth
    closing: Vec<Vec<usize>>,
    values: Vec<bool>,
    nodes: u64,
    node_limit: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Result<bool> {
        if depth == self.quantifiers.len() {
            return Ok(true);
        }
        let exists = self.quantifiers[depth] == Quantifier::Exists;
        for value in [false, true] {
            let branch = self.branch(depth, value)?;
            if branch == exists {
                return Ok(exists);
            }
        }
        Ok(!exists)
    }

    fn branch(&mut self, depth: usize, value: bool) -> Result<bool> {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return Err(Error::BudgetExceeded(format!("node limit {limit}")));
            }
        }
        self.values[depth] = value;
        let violated = self.closing[depth]
            .iter()
            .any(|&a| !self.apps[a].holds(&self.values));
        if violated {
            return Ok(false);
        }
        self.run(depth + 1)
    }
}

/// Truth value of `expr` under standard quantifier semantics.
pub fn eval(expr: &QuantifiedExpression, budget: &EvalBudget) -> Result<bool> {
    let n = expr.variable_count();
    if n > budget.max_variables {
        return Err(Error::BudgetExceeded(format!(
            "{n} variables, limit {}",
            budget.max_variables
        )));
    }
    let position: HashMap<_, _> = expr.variables().enumerate().map(|(i, v)| (v, i)).collect();
    let quantifiers = expr
        .prefix()
        .iter()
        .flat_map(|b| b.vars.iter().map(move |_| b.quantifier))
        .collect();

    let mut apps = Vec::with_capacity(expr.matrix().len());
    let mut closing = vec![Vec::new(); n];
    for app in expr.matrix() {
        let slots: Vec<Slot> = app
            .args()
            .iter()
            .map(|a| match a {
                Arg::Var(v) => Slot::Var(position[v]),
                Arg::Const(b) => Slot::Const(*b),
            })
            .collect();
        let last = slots
            .iter()
            .filter_map(|s| match s {
                Slot::Var(i) => Some(*i),
                Slot::Const(_) => None,
            })
            .max();
        let compiled = CompiledApp {
            constraint: app.constraint(),
            slots,
        };
        match last {
            Some(d) => closing[d].push(apps.len()),
            // constant-only application decides the whole expression
            None if !compiled.holds(&[]) => return Ok(false),
            None => {}
        }
        apps.push(compiled);
    }

    let mut search = Search {
        quantifiers,
        apps,
        closing,
        values: vec![false; n],
        nodes: 0,
        node_limit: budget.node_limit,
    };
    search.run(0)
}

/// Membership of `expr` in `QSAT_i`: for odd `i` the `Σ_i` expression must be
/// true, for even `i` the `Π_i` expression must be false.
///
/// Expressions with fewer than `i` blocks are accepted when padding with empty
/// trailing blocks gives the level-`i` form.
pub fn qsat_i_member(expr: &QuantifiedExpression, level: usize, budget: &EvalBudget) -> Result<bool> {
    let shape = expr.prefix_shape();
    if !shape.fits_level(level) {
        return Err(Error::ShapeMismatch {
            shape: shape.to_string(),
            level,
        });
    }
    let truth = eval(expr, budget)?;
    Ok(match PrefixShape::polarity_for_level(level) {
        crate::model::Polarity::Sigma => truth,
        crate::model::Polarity::Pi => !truth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Application, QuantifierBlock};
    use crate::presets::*;
    use std::sync::Arc;

    fn app(c: &Arc<Constraint>, args: &[&str]) -> Application {
        Application::new(c.clone(), args.iter().map(|&a| a.into()).collect()).unwrap()
    }

    fn budget() -> EvalBudget {
        EvalBudget::default()
    }

    #[test]
    fn eval_examples() {
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::exists(["x"]), QuantifierBlock::forall(["y"])],
            vec![app(&or2(), &["x", "y"])],
        )
        .unwrap();
        assert!(eval(&e, &budget()).unwrap());

        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::forall(["x"])],
            vec![app(&eq2(), &["x", "0"])],
        )
        .unwrap();
        assert!(!eval(&e, &budget()).unwrap());

        let e = QuantifiedExpression::new(
            vec![
                QuantifierBlock::forall(["x"]),
                QuantifierBlock::exists(["f", "t"]),
            ],
            vec![app(&eq2(), &["x", "f"]), app(&xor2(), &["f", "t"])],
        )
        .unwrap();
        assert!(eval(&e, &budget()).unwrap());
    }

    #[test]
    fn constant_only_matrix() {
        let t = QuantifiedExpression::new(vec![], vec![app(&or2(), &["0", "1"])]).unwrap();
        assert!(eval(&t, &budget()).unwrap());
        let f = QuantifiedExpression::new(vec![], vec![app(&or2(), &["0", "0"])]).unwrap();
        assert!(!eval(&f, &budget()).unwrap());
        let empty = QuantifiedExpression::new(vec![], vec![]).unwrap();
        assert!(eval(&empty, &budget()).unwrap());
    }

    #[test]
    fn budget_exceeded_is_an_error() {
        let vars: Vec<String> = (0..30).map(|i| format!("x{i}")).collect();
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::exists(vars.iter().map(String::as_str))],
            vec![],
        )
        .unwrap();
        assert!(matches!(eval(&e, &budget()), Err(Error::BudgetExceeded(_))));
        assert!(eval(&e, &EvalBudget::with_max_variables(30)).unwrap());
    }

    #[test]
    fn node_limit_is_enforced() {
        let vars: Vec<String> = (0..10).map(|i| format!("x{i}")).collect();
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::forall(vars.iter().map(String::as_str))],
            vec![],
        )
        .unwrap();
        let tight = EvalBudget {
            max_variables: 24,
            node_limit: Some(100),
        };
        assert!(matches!(eval(&e, &tight), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn qsat_i_member_examples() {
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::exists(["x"])],
            vec![app(&id1(), &["x"])],
        )
        .unwrap();
        assert!(qsat_i_member(&e, 1, &budget()).unwrap());

        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::forall(["x"]), QuantifierBlock::exists(["y"])],
            vec![app(&xor2(), &["x", "y"])],
        )
        .unwrap();
        assert!(!qsat_i_member(&e, 2, &budget()).unwrap());

        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::forall(["x"])],
            vec![app(&not1(), &["x"])],
        )
        .unwrap();
        assert!(qsat_i_member(&e, 2, &budget()).unwrap());
    }

    #[test]
    fn qsat_i_member_shape_mismatch() {
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::forall(["x"]), QuantifierBlock::exists(["y"])],
            vec![app(&xor2(), &["x", "y"])],
        )
        .unwrap();
        assert!(matches!(
            qsat_i_member(&e, 1, &budget()),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(matches!(
            qsat_i_member(&e, 3, &budget()),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(qsat_i_member(&e, 4, &budget()).is_ok());
    }
}
