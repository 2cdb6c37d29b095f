//! Removes constants from expressions, one example per reduction case, and
//! checks that the truth value survives.
//!
//! `cargo run --example remove_constants`

use qcsp::verify::case_constraint_set;
use qcsp::{eval, parse_expression, remove_constants, render_expression, EvalBudget, ReductionCase, SearchOptions};

pub fn run() {
    let budget = EvalBudget::default();
    let inputs = [
        (ReductionCase::ZeroValidNotComp, "A u ; E v, w : OR3_1n(u, v, 1), OR3_3n(v, w, 0);", 2),
        (ReductionCase::OneValidNotComp, "A u ; E v : OR3(u, v, 0), OR3_12n(u, 1, v);", 2),
        (ReductionCase::ZeroValidComp, "E a ; A b ; E c : SYMOR1(b, 1, a), SYMOR1(c, a, 0);", 3),
        (ReductionCase::NeitherValidComp, "A x ; E y : NAE3(x, y, 0), NAE3(y, 1, 1);", 2),
        (ReductionCase::NeitherValidNotComp, "E x ; A y ; E z : OR3(x, y, z), OR3_3n(z, 1, x);", 3),
    ];
    for (case, text, level) in inputs {
        let set = case_constraint_set(case);
        let expr = parse_expression(text, &set).expect("parses");
        let result = remove_constants(&expr, &set, level, &SearchOptions::default()).expect("reducible");
        assert_eq!(result.case_used, case);
        let before = eval(&expr, &budget).unwrap();
        let out = result.outcome.expression().expect("no constant-false member");
        assert!(!out.has_constants());
        assert_eq!(eval(out, &budget).unwrap(), before);
        println!("{case}: {before}");
        println!("  in:  {text}");
        println!("  out: {}", render_expression(out));
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
