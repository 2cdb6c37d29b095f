//! Decides quantified expressions with the polynomial-time solvers and
//! cross-checks each against the brute-force evaluator.
//!
//! `cargo run --example solve_tractable`

use std::time::Instant;

use qcsp::presets::{all_presets, xor2};
use qcsp::{eval, parse_expression, solve_auto, solve_tractable, EvalBudget, SolvePath, TractableClass};

pub fn run() {
    let library = all_presets();
    let budget = EvalBudget::default();
    let cases = [
        // Horn: every clause has at most one positive literal.
        "A x ; E y : NAND2(x, y), OR3_3n(x, y, y);",
        // Equality and XOR are affine: y copies x, z negates it.
        "A x ; E y, z : EQ2(x, y), XOR2(y, z);",
        // Two universals cannot be forced equal.
        "A x, y : EQ2(x, y);",
        // c is fixed by a, so it cannot track b.
        "E a ; A b ; E c : XOR2(a, c), XOR2(c, b), EQ2(a, 1);",
        // OR2 is anti-Horn and bijunctive; the 2-SAT solver takes it.
        "A x ; E y : OR2(x, y), OR2(y, 0);",
    ];
    for text in cases {
        let expr = parse_expression(text, &library).expect("parses");
        let (value, path) = solve_auto(&expr, &budget).expect("within budget");
        let oracle = eval(&expr, &budget).unwrap();
        println!("{value:5} via {:10} {text}", path.to_string());
        assert_eq!(value, oracle);
    }

    // 40 variables is past the oracle's default budget; Gaussian
    // elimination does not care.
    let n = 40;
    let prefix: Vec<String> = (0..n)
        .map(|i| format!("{} v{i}", if i % 2 == 0 { "E" } else { "A" }))
        .collect();
    let apps: Vec<String> = (0..n - 1).map(|i| format!("XOR2(v{i}, v{})", i + 1)).collect();
    let text = format!("{} : {};", prefix.join(" "), apps.join(", "));
    let chain = parse_expression(&text, &[xor2()]).unwrap();
    let start = Instant::now();
    let value = solve_tractable(&chain, TractableClass::Affine).unwrap();
    println!("40-variable XOR chain: {value} in {:?}", start.elapsed());
    assert!(!value);
    assert!(eval(&chain, &budget).is_err());
    assert_eq!(solve_auto(&chain, &budget).unwrap(), (false, SolvePath::Tractable(TractableClass::Affine)));
}

#[allow(dead_code)]
fn main() {
    run();
}
