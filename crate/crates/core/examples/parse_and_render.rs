//! Reads a document, prints it back, and shows a parse diagnostic.
//!
//! `cargo run --example parse_and_render`

use qcsp::{parse_document, render_document, Error};

const DOCUMENT: &str = "
# a 2-SAT style constraint given as a formula
constraint IMP arity 2 := formula (v1 -> v2);
constraint MAJ arity 3 := table 00010111;
expr chain := A a ; E b, c : IMP(a, b), IMP(b, c), MAJ(a, b, 0);
";

pub fn run() {
    let doc = parse_document(DOCUMENT).expect("valid document");
    let text = render_document(&doc);
    print!("{text}");
    let again = parse_document(&text).unwrap();
    assert_eq!(again.constraints, doc.constraints);
    assert_eq!(again.expressions, doc.expressions);

    let bad = "constraint IMP arity 2 := table 1101;\nexpr e := E x : IMP(x, y);";
    match parse_document(bad) {
        Err(Error::Parse(p)) => {
            println!("{bad}\n  line {} column {}: {}", p.line, p.column, p.message);
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
