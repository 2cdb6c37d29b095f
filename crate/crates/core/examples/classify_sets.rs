//! Classifies the preset families and prints the properties and verdicts.
//!
//! `cargo run --example classify_sets`

use std::sync::Arc;

use qcsp::presets::{nand2, one_in_three, or2, or3, or3_3n, three_cnf_set, xor2};
use qcsp::{classify_set, Constraint, Verdict};

pub fn run() {
    let families: Vec<(&str, Vec<Arc<Constraint>>)> = vec![
        ("{OIT}", vec![one_in_three()]),
        ("3CNF", three_cnf_set()),
        ("{XOR2}", vec![xor2()]),
        ("{NAND2}", vec![nand2()]),
        ("{OR2}", vec![or2()]),
    ];
    for (name, set) in &families {
        let report = classify_set(set).expect("nonempty set");
        let f = &report.flags;
        println!(
            "{name:8} horn={} anti_horn={} bijunctive={} affine={} -> qsat_i={} qsat={}",
            f.horn, f.anti_horn, f.bijunctive, f.affine, report.qsat_i, report.qsat
        );
        let hard = matches!(report.qsat_i, Verdict::SigmaComplete(_));
        assert_eq!(hard, !f.is_schaefer());
    }

    // Each member is tractable on its own; the set is not, because no
    // single property covers both.
    assert!(classify_set(&[or3()]).unwrap().flags.anti_horn);
    assert!(classify_set(&[or3_3n()]).unwrap().flags.horn);
    let mixed = classify_set(&[or3(), or3_3n()]).unwrap();
    println!("{{OR3, OR3_3n}} -> qsat_3 = {}", mixed.qsat_level(3));
    assert_eq!(mixed.qsat_level(3), Verdict::SigmaComplete(Some(3)));
}

#[allow(dead_code)]
fn main() {
    run();
}
