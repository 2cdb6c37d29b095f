//! Built-in constraints available to every document.

use std::sync::Arc;

use crate::model::Constraint;

/// `(name, arity, table)` for every preset, table row 0 first.
const PRESETS: &[(&str, usize, &str)] = &[
    // the four clause shapes of 3CNF
    ("OR3", 3, "01111111"),
    ("OR3_1n", 3, "10111111"),
    ("OR3_2n", 3, "11101111"),
    ("OR3_3n", 3, "11111110"),
    ("OIT", 3, "01101000"),
    ("SYMOR1", 3, "11011011"),
    ("XOR2", 2, "0110"),
    ("EQ2", 2, "1001"),
    ("ID1", 1, "01"),
    ("NOT1", 1, "10"),
    ("OR2", 2, "0111"),
    ("AND2", 2, "0001"),
    ("NAND2", 2, "1110"),
];

pub fn preset(name: &str) -> Option<Arc<Constraint>> {
    PRESETS
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(n, a, t)| Arc::new(Constraint::new(*n, *a, t).expect("preset table is valid")))
}

pub fn preset_names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|(n, _, _)| *n)
}

pub fn all_presets() -> Vec<Arc<Constraint>> {
    preset_names().filter_map(preset).collect()
}

/// True when `c` is exactly the preset of the same name.
pub fn is_preset(c: &Constraint) -> bool {
    preset(c.name()).is_some_and(|p| *p == *c)
}

macro_rules! preset_fn {
    ($($fn_name:ident => $name:literal),* $(,)?) => {
        $(
            pub fn $fn_name() -> Arc<Constraint> {
                preset($name).expect("preset exists")
            }
        )*
    };
}

preset_fn! {
    or3 => "OR3",
    or3_1n => "OR3_1n",
    or3_2n => "OR3_2n",
    or3_3n => "OR3_3n",
    one_in_three => "OIT",
    sym_or1 => "SYMOR1",
    xor2 => "XOR2",
    eq2 => "EQ2",
    id1 => "ID1",
    not1 => "NOT1",
    or2 => "OR2",
    and2 => "AND2",
    nand2 => "NAND2",
}

/// The 3CNF clause set `{x∨y∨z, x∨y∨z̄, x∨ȳ∨z̄, x̄∨ȳ∨z̄}`.
pub fn three_cnf_set() -> Vec<Arc<Constraint>> {
    vec![or3(), or3_1n(), or3_2n(), or3_3n()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(c: &Constraint, f: impl Fn(bool, bool, bool) -> bool) {
        for r in 0..8 {
            let b = crate::model::row_bits(r, 3);
            assert_eq!(c.holds(r), f(b[0], b[1], b[2]), "{} row {r:03b}", c.name());
        }
    }

    #[test]
    fn ternary_presets_match_formulas() {
        check(&or3(), |x, y, z| x || y || z);
        check(&or3_1n(), |x, y, z| x || y || !z);
        check(&or3_2n(), |x, y, z| x || !y || !z);
        check(&or3_3n(), |x, y, z| !x || !y || !z);
        check(&one_in_three(), |x, y, z| (x as u8 + y as u8 + z as u8) == 1);
        check(&sym_or1(), |x, y, z| (!x && (!y || z)) || (x && (!z || y)));
    }

    #[test]
    fn every_preset_resolves() {
        for name in preset_names() {
            let c = preset(name).unwrap();
            assert!(is_preset(&c));
        }
        assert!(preset("NOPE").is_none());
    }
}
