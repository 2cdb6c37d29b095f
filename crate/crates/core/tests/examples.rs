//! Every example runs to completion with its own assertions.

#[path = "../examples/classify_sets.rs"]
mod classify_sets;
#[path = "../examples/complement_and_unary.rs"]
mod complement_and_unary;
#[path = "../examples/differential_verify.rs"]
mod differential_verify;
#[path = "../examples/implement_search.rs"]
mod implement_search;
#[path = "../examples/parse_and_render.rs"]
mod parse_and_render;
#[path = "../examples/remove_constants.rs"]
mod remove_constants;
#[path = "../examples/solve_tractable.rs"]
mod solve_tractable;

#[test]
fn classify_sets() {
    classify_sets::run();
}

#[test]
fn complement_and_unary() {
    complement_and_unary::run();
}

#[test]
fn differential_verify() {
    differential_verify::run();
}

#[test]
fn implement_search() {
    implement_search::run();
}

#[test]
fn parse_and_render() {
    parse_and_render::run();
}

#[test]
fn remove_constants() {
    remove_constants::run();
}

#[test]
fn solve_tractable() {
    solve_tractable::run();
}
