//! Seeded generators for constraints and expressions used by the test
//! harnesses. All randomness flows through a caller-supplied RNG.

use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
pub use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use crate::model::{Application, Arg, Constraint, QuantifiedExpression, Quantifier, Var};
use crate::solvers::TractableClass;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random table.
pub fn random_constraint(rng: &mut impl Rng, name: &str, arity: usize) -> Constraint {
    Constraint::from_rows(name, arity, (0..1usize << arity).map(|_| rng.gen::<bool>()))
        .expect("valid arity")
}

fn close_under(rows: &mut Vec<usize>, op: impl Fn(usize, usize, usize) -> usize) {
    loop {
        let n = rows.len();
        let mut added = false;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let r = op(rows[a], rows[b], rows[c]);
                    if !rows.contains(&r) {
                        rows.push(r);
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
}

/// Random nonempty constraint in `class`: random satisfying rows closed
/// under the class's polymorphism.
pub fn random_class_constraint(
    rng: &mut impl Rng,
    name: &str,
    arity: usize,
    class: TractableClass,
) -> Constraint {
    let rows_total = 1usize << arity;
    let seeds = rng.gen_range(1..=3.min(rows_total));
    let mut rows: Vec<usize> = (0..seeds).map(|_| rng.gen_range(0..rows_total)).collect();
    rows.sort_unstable();
    rows.dedup();
    match class {
        TractableClass::Horn => close_under(&mut rows, |a, b, _| a & b),
        TractableClass::AntiHorn => close_under(&mut rows, |a, b, _| a | b),
        TractableClass::Bijunctive => close_under(&mut rows, |a, b, c| (a & b) | (a & c) | (b & c)),
        TractableClass::Affine => close_under(&mut rows, |a, b, c| a ^ b ^ c),
    }
    Constraint::from_rows(name, arity, (0..rows_total).map(|r| rows.contains(&r))).expect("valid arity")
}

/// Shape and size of generated expressions.
#[derive(Debug, Clone)]
pub struct ExprParams {
    pub vars: RangeInclusive<usize>,
    pub apps: RangeInclusive<usize>,
    pub blocks: RangeInclusive<usize>,
    /// Quantifier of the first block; random when `None`.
    pub first: Option<Quantifier>,
    /// Probability that an argument is a constant.
    pub constant_prob: f64,
}

impl Default for ExprParams {
    fn default() -> Self {
        ExprParams {
            vars: 1..=12,
            apps: 0..=15,
            blocks: 1..=4,
            first: None,
            constant_prob: 0.1,
        }
    }
}

/// Random expression over `constraints` with variables `v1, v2, ...`.
/// The block count is clamped to the variable count.
pub fn random_expression(
    rng: &mut impl Rng,
    constraints: &[Arc<Constraint>],
    params: &ExprParams,
) -> QuantifiedExpression {
    let n = rng.gen_range(params.vars.clone());
    let vars: Vec<Var> = (1..=n).map(|i| Var::new(format!("v{i}"))).collect();
    let want_blocks = rng.gen_range(params.blocks.clone()).min(n);
    let mut blocks = Vec::new();
    if want_blocks > 0 {
        // cut points between blocks
        let mut cuts: Vec<usize> = (1..n).collect();
        cuts.shuffle(rng);
        let mut cuts: Vec<usize> = cuts.into_iter().take(want_blocks - 1).collect();
        cuts.sort_unstable();
        cuts.push(n);
        let mut q = params
            .first
            .unwrap_or(if rng.gen() { Quantifier::Exists } else { Quantifier::Forall });
        let mut start = 0;
        for end in cuts {
            blocks.push((q, vars[start..end].to_vec()));
            q = q.flip();
            start = end;
        }
    }
    let m = if constraints.is_empty() {
        0
    } else {
        rng.gen_range(params.apps.clone())
    };
    let matrix = (0..m)
        .map(|_| {
            let c = constraints.choose(rng).expect("nonempty").clone();
            let args = (0..c.arity())
                .map(|_| {
                    if n == 0 || rng.gen_bool(params.constant_prob) {
                        Arg::Const(rng.gen())
                    } else {
                        Arg::Var(vars.choose(rng).expect("nonempty").clone())
                    }
                })
                .collect();
            Application::new(c, args).expect("arity matches")
        })
        .collect();
    QuantifiedExpression::from_blocks(blocks, matrix).expect("well formed")
}
