//! Polynomial-time decision procedures for expressions over tractable
//! constraint sets, and the normal-form synthesis they compile through.
//!
//! Each application is compiled to the clause form of its class with the
//! application's variables and constants substituted in, then handed to the
//! class solver:
//!
//! * affine: quantifier elimination by Gaussian elimination over GF(2);
//! * bijunctive: quantified 2-SAT on the implication graph;
//! * Horn: Horn satisfiability by unit propagation, once per universal
//!   variable with that variable's two values copied side by side;
//! * anti-Horn: Horn on the complemented expression.

mod affine;
mod horn;
mod normal_form;
mod twosat;

use std::collections::HashMap;
use std::fmt;

pub use normal_form::{
    synthesize_normal_form, Clause, ClauseForm, FormKind, Lit, SYNTHESIS_LIMIT,
};

use crate::classify::{Property, PropertyFlags};
use crate::error::{Error, Result};
use crate::eval::{eval, EvalBudget};
use crate::gadgets::complement_expression;
use crate::model::{Arg, Constraint, QuantifiedExpression, Quantifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TractableClass {
    Horn,
    AntiHorn,
    Bijunctive,
    Affine,
}

impl TractableClass {
    pub const ALL: [TractableClass; 4] = [
        TractableClass::Horn,
        TractableClass::AntiHorn,
        TractableClass::Bijunctive,
        TractableClass::Affine,
    ];

    pub fn property(self) -> Property {
        match self {
            TractableClass::Horn => Property::Horn,
            TractableClass::AntiHorn => Property::AntiHorn,
            TractableClass::Bijunctive => Property::Bijunctive,
            TractableClass::Affine => Property::Affine,
        }
    }

    pub fn form_kind(self) -> FormKind {
        match self {
            TractableClass::Horn => FormKind::HornCnf,
            TractableClass::AntiHorn => FormKind::AntiHornCnf,
            TractableClass::Bijunctive => FormKind::TwoCnf,
            TractableClass::Affine => FormKind::XorCnf,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TractableClass::Horn => "horn",
            TractableClass::AntiHorn => "anti-horn",
            TractableClass::Bijunctive => "bijunctive",
            TractableClass::Affine => "affine",
        }
    }
}

impl fmt::Display for TractableClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Prefix information indexed by variable position.
pub(crate) struct PrefixInfo {
    pub quantifier: Vec<Quantifier>,
    pub block: Vec<usize>,
}

impl PrefixInfo {
    fn of(expr: &QuantifiedExpression) -> Self {
        let mut quantifier = Vec::new();
        let mut block = Vec::new();
        for (i, b) in expr.prefix().iter().enumerate() {
            for _ in &b.vars {
                quantifier.push(b.quantifier);
                block.push(i);
            }
        }
        PrefixInfo { quantifier, block }
    }

    pub fn len(&self) -> usize {
        self.quantifier.len()
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.quantifier[v] == Quantifier::Forall
    }
}

/// A literal over expression variable positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct VarLit {
    pub var: usize,
    pub positive: bool,
}

/// Matrix compiled to clauses over expression variables.
pub(crate) enum Compiled {
    /// Some substituted clause became empty.
    False,
    Cnf(Vec<Vec<VarLit>>),
    Xor(Vec<(Vec<usize>, bool)>),
}

fn compile(
    expr: &QuantifiedExpression,
    class: TractableClass,
    forms: &mut HashMap<Constraint, ClauseForm>,
) -> Result<Compiled> {
    let position: HashMap<_, _> = expr.variables().enumerate().map(|(i, v)| (v, i)).collect();
    let kind = class.form_kind();
    let mut cnf = Vec::new();
    let mut xor = Vec::new();
    for app in expr.matrix() {
        let c = app.constraint();
        if !forms.contains_key(&**c) {
            let form = synthesize_normal_form(c, kind)?.ok_or_else(|| Error::ClassViolated {
                constraint: c.name().to_string(),
                class: class.name().to_string(),
            })?;
            forms.insert((**c).clone(), form);
        }
        let args: Vec<std::result::Result<usize, bool>> = app
            .args()
            .iter()
            .map(|a| match a {
                Arg::Var(v) => Ok(position[v]),
                Arg::Const(b) => Err(*b),
            })
            .collect();
        for clause in &forms[&**c].clauses {
            match clause {
                Clause::Or(lits) => match substitute_or(lits, &args) {
                    Some(lits) if lits.is_empty() => return Ok(Compiled::False),
                    Some(lits) => cnf.push(lits),
                    None => {}
                },
                Clause::Xor { vars, parity } => {
                    let mut p = *parity;
                    let mut set: Vec<usize> = Vec::new();
                    for &v in vars {
                        match args[v] {
                            Ok(x) => match set.iter().position(|&y| y == x) {
                                Some(i) => {
                                    set.swap_remove(i);
                                }
                                None => set.push(x),
                            },
                            Err(b) => p ^= b,
                        }
                    }
                    if set.is_empty() {
                        if p {
                            return Ok(Compiled::False);
                        }
                    } else {
                        set.sort_unstable();
                        xor.push((set, p));
                    }
                }
            }
        }
    }
    Ok(if class == TractableClass::Affine {
        Compiled::Xor(xor)
    } else {
        Compiled::Cnf(cnf)
    })
}

/// Substitutes arguments into a disjunction. `None` when the clause becomes
/// true (a true constant literal, or `x ∨ ¬x`).
fn substitute_or(lits: &[Lit], args: &[std::result::Result<usize, bool>]) -> Option<Vec<VarLit>> {
    let mut out: Vec<VarLit> = Vec::with_capacity(lits.len());
    for l in lits {
        match args[l.var] {
            Err(b) if b == l.positive => return None,
            Err(_) => {}
            Ok(var) => {
                let lit = VarLit {
                    var,
                    positive: l.positive,
                };
                if out.iter().any(|o| o.var == var && o.positive != l.positive) {
                    return None;
                }
                if !out.contains(&lit) {
                    out.push(lit);
                }
            }
        }
    }
    Some(out)
}

/// Exact truth value of `expr`, computed in polynomial time. Every
/// constraint of the expression must belong to `class`.
pub fn solve_tractable(expr: &QuantifiedExpression, class: TractableClass) -> Result<bool> {
    for c in expr.constraints() {
        if !crate::classify::has_property(&c, class.property()) {
            return Err(Error::ClassViolated {
                constraint: c.name().to_string(),
                class: class.name().to_string(),
            });
        }
    }
    if class == TractableClass::AntiHorn {
        return solve_tractable(&complement_expression(expr), TractableClass::Horn);
    }
    let info = PrefixInfo::of(expr);
    let mut forms = HashMap::new();
    let compiled = compile(expr, class, &mut forms)?;
    Ok(match compiled {
        Compiled::False => false,
        Compiled::Xor(eqs) => affine::solve(&info, &eqs),
        Compiled::Cnf(clauses) => match class {
            TractableClass::Bijunctive => twosat::solve(&info, &clauses),
            _ => horn::solve(&info, &clauses),
        },
    })
}

/// Which procedure answered a [`solve_auto`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolvePath {
    Tractable(TractableClass),
    Oracle,
}

impl fmt::Display for SolvePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolvePath::Tractable(c) => write!(f, "{c}"),
            SolvePath::Oracle => f.write_str("oracle"),
        }
    }
}

/// The tractable class used for a constraint set, if any.
pub fn tractable_class_of(flags: &PropertyFlags) -> Option<TractableClass> {
    [
        TractableClass::Affine,
        TractableClass::Bijunctive,
        TractableClass::Horn,
        TractableClass::AntiHorn,
    ]
    .into_iter()
    .find(|c| flags.get(c.property()))
}

/// Solves through a tractable class when the expression's constraints share
/// one, otherwise through the brute-force oracle under `budget`.
pub fn solve_auto(expr: &QuantifiedExpression, budget: &EvalBudget) -> Result<(bool, SolvePath)> {
    let cs = expr.constraints();
    let flags = PropertyFlags::of_set(cs.iter().map(|c| &**c));
    match tractable_class_of(&flags) {
        Some(class) => Ok((solve_tractable(expr, class)?, SolvePath::Tractable(class))),
        None => Ok((eval(expr, budget)?, SolvePath::Oracle)),
    }
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

    #[test]
    fn affine_examples() {
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::forall(["x"]), QuantifierBlock::exists(["y"])],
            vec![app(&xor2(), &["x", "y"])],
        )
        .unwrap();
        assert!(solve_tractable(&e, TractableClass::Affine).unwrap());

        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::forall(["x", "y"])],
            vec![app(&xor2(), &["x", "y"])],
        )
        .unwrap();
        assert!(!solve_tractable(&e, TractableClass::Affine).unwrap());
    }

    #[test]
    fn class_violation() {
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::exists(["x", "y", "z"])],
            vec![app(&one_in_three(), &["x", "y", "z"])],
        )
        .unwrap();
        for class in TractableClass::ALL {
            assert!(matches!(
                solve_tractable(&e, class),
                Err(Error::ClassViolated { .. })
            ));
        }
    }

    #[test]
    fn constants_substituted() {
        // OR2(x, 0) forces x; OR2(1, x) vanishes; NAND2(1, 1) is false
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::forall(["x"])],
            vec![app(&or2(), &["x", "0"])],
        )
        .unwrap();
        assert!(!solve_tractable(&e, TractableClass::Bijunctive).unwrap());
        assert!(!solve_tractable(&e, TractableClass::AntiHorn).unwrap());
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::forall(["x"])],
            vec![app(&or2(), &["1", "x"])],
        )
        .unwrap();
        assert!(solve_tractable(&e, TractableClass::Bijunctive).unwrap());
        let e = QuantifiedExpression::new(vec![], vec![app(&nand2(), &["1", "1"])]).unwrap();
        assert!(!solve_tractable(&e, TractableClass::Horn).unwrap());
    }

    #[test]
    fn auto_dispatch() {
        let budget = EvalBudget::default();
        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::exists(["x", "y"])],
            vec![app(&nand2(), &["x", "y"]), app(&eq2(), &["x", "y"])],
        )
        .unwrap();
        let (v, path) = solve_auto(&e, &budget).unwrap();
        assert!(v);
        assert!(matches!(path, SolvePath::Tractable(_)));

        let e = QuantifiedExpression::new(
            vec![QuantifierBlock::exists(["x", "y", "z"])],
            vec![app(&one_in_three(), &["x", "y", "z"])],
        )
        .unwrap();
        assert_eq!(solve_auto(&e, &budget).unwrap(), (true, SolvePath::Oracle));
    }
}
