//! Searches for perfect implementations of small targets over One-in-Three.
//!
//! `cargo run --release --example implement_search`

use std::sync::Arc;

use qcsp::presets::{and2, eq2, nand2, one_in_three, or2, xor2};
use qcsp::{check_implementation, find_implementation, Constraint, SearchOptions};

pub fn run() {
    let oit = vec![one_in_three()];
    let options = SearchOptions::default();
    for target in [xor2(), eq2(), or2(), nand2(), and2()] {
        let imp = find_implementation(&oit, &target, &options).expect("OIT implements every binary function");
        assert!(check_implementation(&imp));
        println!("{imp}");
    }

    // Ternary targets are given by a table like any other constraint.
    let maj = Arc::new(Constraint::new("MAJ3", 3, "00010111").unwrap());
    match find_implementation(&oit, &maj, &SearchOptions::bounded(8, 8)) {
        Some(imp) => {
            assert!(check_implementation(&imp));
            println!("{imp}");
        }
        None => println!("MAJ3: not found within 8 aux / 8 applications"),
    }

    // An affine set only implements affine targets.
    assert!(find_implementation(&[xor2()], &and2(), &options).is_none());
    println!("AND2 over {{XOR2}}: not found, as expected");
}

#[allow(dead_code)]
fn main() {
    run();
}
