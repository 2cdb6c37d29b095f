//! The complement transform and unary elimination.
//!
//! `cargo run --example complement_and_unary`

use qcsp::presets::all_presets;
use qcsp::{complement_expression, eliminate_unary, eval, parse_expression, render_expression, EvalBudget, Reduced};

pub fn run() {
    let budget = EvalBudget::default();
    let library = all_presets();

    // Complementing every constraint and swapping 0 and 1 keeps the value.
    let e = parse_expression("A x ; E y, z : OR3_1n(x, y, 1), OIT(y, z, 0);", &library).unwrap();
    let c = complement_expression(&e);
    println!("{}\n{}", render_expression(&e), render_expression(&c));
    assert_eq!(eval(&e, &budget).unwrap(), eval(&c, &budget).unwrap());
    assert_eq!(complement_expression(&c), e);

    // ID1 and NOT1 fix existentials; on a universal they make the
    // expression false.
    let u = parse_expression("E x, y ; A z : ID1(x), NOT1(y), OR3(x, y, z);", &library).unwrap();
    match eliminate_unary(&u).unwrap() {
        Reduced::Expression(out) => {
            println!("{}", render_expression(&out));
            assert_eq!(eval(&out, &budget).unwrap(), eval(&u, &budget).unwrap());
        }
        Reduced::TriviallyFalse => unreachable!("x and y are existential"),
    }
    let f = parse_expression("A z : ID1(z);", &library).unwrap();
    assert_eq!(eliminate_unary(&f).unwrap(), Reduced::TriviallyFalse);
    println!("A z : ID1(z);  ->  TRIVIALLY_FALSE");
}

#[allow(dead_code)]
fn main() {
    run();
}
