//! Classification, tractable solving and gadget reductions for quantified
//! Boolean constraint satisfaction.
//!
//! A [`Constraint`] is a Boolean function given by its truth table. A
//! [`QuantifiedExpression`] quantifies a conjunction of constraint
//! applications. The crate
//!
//! * decides the seven closure properties of constraint sets and the
//!   complexity verdicts they imply ([`classify_set`]);
//! * evaluates expressions exactly by brute force ([`eval`]) and in
//!   polynomial time for Horn, anti-Horn, bijunctive and affine sets
//!   ([`solve_tractable`]);
//! * searches for perfect implementations ([`find_implementation`]) and
//!   applies the complement, substitution, unary-elimination and
//!   constant-removal rewrites ([`gadgets`]);
//! * reads and writes a small text format ([`parser`]).

pub mod classify;
pub mod cli;
pub mod error;
pub mod eval;
pub mod gadgets;
pub mod implement;
pub mod model;
pub mod parser;
pub mod presets;
pub mod random;
pub mod solvers;
pub mod verify;

pub use classify::{classify_set, ClassificationReport, Property, PropertyFlags, Verdict};
pub use error::{Error, ParseError, Result};
pub use eval::{eval, qsat_i_member, EvalBudget};
pub use gadgets::{
    build_hat, complement_constraint, complement_expression, eliminate_unary, remove_constants,
    substitute_implementation, Reduced, ReductionCase, ReductionResult,
};
pub use implement::{check_implementation, find_implementation, Implementation, SearchOptions};
pub use model::{
    Application, Arg, Constraint, Polarity, PrefixShape, QuantifiedExpression, Quantifier,
    QuantifierBlock, Var,
};
pub use parser::{parse_document, parse_expression, render_document, render_expression, Document};
pub use solvers::{solve_auto, solve_tractable, synthesize_normal_form, SolvePath, TractableClass};
