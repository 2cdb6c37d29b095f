use std::sync::Arc;

use qcsp::implement::SEARCH_VARIABLE_LIMIT;
use qcsp::presets::{and2, one_in_three, or2, or3, xor2};
use qcsp::{check_implementation, find_implementation, Constraint, SearchOptions};

fn table(arity: usize, mask: u32) -> Arc<Constraint> {
    Arc::new(
        Constraint::from_rows(format!("T{mask:02x}"), arity, (0..1usize << arity).map(|r| (mask >> r) & 1 == 1))
            .unwrap(),
    )
}

/// OR3 needs eight auxiliary variables over One-in-Three: two negated
/// copies of x1 and x2 through a variable forced to 0, and a one-in-three
/// choice for x3.
#[test]
fn oit_implements_or3_with_eight_aux() {
    let oit = vec![one_in_three()];
    assert!(find_implementation(&oit, &or3(), &SearchOptions::bounded(7, 10)).is_none());
    let imp = find_implementation(&oit, &or3(), &SearchOptions::bounded(8, 8)).unwrap();
    assert!(check_implementation(&imp));
    assert_eq!(imp.aux_vars.len(), 8);
    assert_eq!(imp.apps.len(), 6);
}

#[test]
fn identity_with_no_aux() {
    let imp = find_implementation(&[or2()], &or2(), &SearchOptions::bounded(0, 1)).unwrap();
    assert_eq!(imp.to_string(), "OR2(x1, x2) == : OR2(x1, x2)");
}

#[test]
fn xor_does_not_implement_and() {
    assert!(find_implementation(&[xor2()], &and2(), &SearchOptions::bounded(2, 4)).is_none());
}

#[test]
fn every_ternary_function_from_oit_with_eight_aux() {
    let oit = vec![one_in_three()];
    let options = SearchOptions::bounded(8, 8);
    assert!(3 + options.max_aux <= SEARCH_VARIABLE_LIMIT);
    let missing: Vec<u32> = (0..256u32)
        .filter(|&m| {
            let t = table(3, m);
            !find_implementation(&oit, &t, &options).is_some_and(|imp| check_implementation(&imp))
        })
        .collect();
    assert!(missing.is_empty(), "{missing:x?}");
}

/// With six auxiliary variables the search exhausts its space for these
/// tables (bit `r` of the mask is row `r`, first argument most significant).
#[test]
fn six_aux_is_not_enough_for_some_ternary_functions() {
    let oit = vec![one_in_three()];
    let options = SearchOptions::bounded(6, 8);
    let missing: Vec<u32> = (0..256u32)
        .filter(|&m| find_implementation(&oit, &table(3, m), &options).is_none())
        .collect();
    println!("not found with 6 aux / 8 applications: {} tables: {missing:02x?}", missing.len());
    assert!(missing.contains(&0xfe), "OR3 should need more than six aux");
    assert!(missing.contains(&0x7e), "NAE3 should need more than six aux");
}

#[test]
fn canonical_pruning_loses_nothing_on_binary_targets() {
    let oit = vec![one_in_three()];
    for m in 0..16u32 {
        let t = table(2, m);
        let canonical = find_implementation(&oit, &t, &SearchOptions::bounded(6, 8));
        let plain = find_implementation(
            &oit,
            &t,
            &SearchOptions {
                canonical: false,
                ..SearchOptions::bounded(6, 8)
            },
        );
        assert_eq!(canonical.is_some(), plain.is_some(), "target {m:04b}");
        for imp in canonical.iter().chain(plain.iter()) {
            assert!(check_implementation(imp));
        }
        if let (Some(a), Some(b)) = (&canonical, &plain) {
            assert_eq!(a.apps.len(), b.apps.len(), "both searches deepen one application at a time");
        }
    }
}

#[test]
fn search_is_deterministic() {
    let oit = vec![one_in_three()];
    let t = table(3, 0x96);
    let a = find_implementation(&oit, &t, &SearchOptions::default());
    let b = find_implementation(&oit, &t, &SearchOptions::default());
    assert_eq!(a, b);
}
