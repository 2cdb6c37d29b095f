//! The seven constraint properties and the complexity verdicts they imply.
//!
//! 0-valid, 1-valid and complementive are read straight off the table.
//! Horn, anti-Horn, bijunctive and affine are decided by closure of the
//! satisfying rows under coordinatewise AND, OR, majority and ternary XOR
//! respectively; [`crate::solvers::synthesize_normal_form`] is the
//! independent check of that choice.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::model::Constraint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    ZeroValid,
    OneValid,
    Horn,
    AntiHorn,
    Bijunctive,
    Affine,
    Complementive,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::ZeroValid,
        Property::OneValid,
        Property::Horn,
        Property::AntiHorn,
        Property::Bijunctive,
        Property::Affine,
        Property::Complementive,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Property::ZeroValid => "zero_valid",
            Property::OneValid => "one_valid",
            Property::Horn => "horn",
            Property::AntiHorn => "anti_horn",
            Property::Bijunctive => "bijunctive",
            Property::Affine => "affine",
            Property::Complementive => "complementive",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

pub fn is_zero_valid(c: &Constraint) -> bool {
    c.holds(0)
}

pub fn is_one_valid(c: &Constraint) -> bool {
    c.holds(c.row_count() - 1)
}

pub fn is_complementive(c: &Constraint) -> bool {
    complementive_witness(c).is_none()
}

pub fn is_horn(c: &Constraint) -> bool {
    horn_witness(c).is_none()
}

pub fn is_anti_horn(c: &Constraint) -> bool {
    anti_horn_witness(c).is_none()
}

pub fn is_bijunctive(c: &Constraint) -> bool {
    bijunctive_witness(c).is_none()
}

pub fn is_affine(c: &Constraint) -> bool {
    affine_witness(c).is_none()
}

/// Rows demonstrating that a constraint lacks a property: the input rows and,
/// for closure properties, the unsatisfying row they combine into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowWitness {
    pub rows: Vec<usize>,
    pub produced: Option<usize>,
}

fn mask(c: &Constraint) -> usize {
    c.row_count() - 1
}

fn complementive_witness(c: &Constraint) -> Option<RowWitness> {
    let m = mask(c);
    (0..c.row_count())
        .find(|&r| c.holds(r) != c.holds(r ^ m))
        .map(|r| RowWitness {
            rows: vec![r, r ^ m],
            produced: None,
        })
}

fn pair_closure(c: &Constraint, op: impl Fn(usize, usize) -> usize) -> Option<RowWitness> {
    let sat: Vec<usize> = c.satisfying_rows().collect();
    for (i, &a) in sat.iter().enumerate() {
        for &b in &sat[i + 1..] {
            let r = op(a, b);
            if !c.holds(r) {
                return Some(RowWitness {
                    rows: vec![a, b],
                    produced: Some(r),
                });
            }
        }
    }
    None
}

fn horn_witness(c: &Constraint) -> Option<RowWitness> {
    pair_closure(c, |a, b| a & b)
}

fn anti_horn_witness(c: &Constraint) -> Option<RowWitness> {
    pair_closure(c, |a, b| a | b)
}

fn bijunctive_witness(c: &Constraint) -> Option<RowWitness> {
    let sat: Vec<usize> = c.satisfying_rows().collect();
    // majority is symmetric and idempotent: distinct triples suffice
    for (i, &a) in sat.iter().enumerate() {
        for (j, &b) in sat.iter().enumerate().skip(i + 1) {
            for &d in &sat[j + 1..] {
                let r = (a & b) | (a & d) | (b & d);
                if !c.holds(r) {
                    return Some(RowWitness {
                        rows: vec![a, b, d],
                        produced: Some(r),
                    });
                }
            }
        }
    }
    None
}

fn affine_witness(c: &Constraint) -> Option<RowWitness> {
    let sat: Vec<usize> = c.satisfying_rows().collect();
    // closure under a^b^d is closure of {s ^ s0} under pairwise xor, for any s0
    let &base = sat.first()?;
    for (i, &a) in sat.iter().enumerate() {
        for &b in &sat[i + 1..] {
            let r = a ^ b ^ base;
            if !c.holds(r) {
                return Some(RowWitness {
                    rows: vec![a, b, base],
                    produced: Some(r),
                });
            }
        }
    }
    None
}

fn witness_for(c: &Constraint, p: Property) -> Option<RowWitness> {
    match p {
        Property::ZeroValid => (!is_zero_valid(c)).then(|| RowWitness {
            rows: vec![0],
            produced: None,
        }),
        Property::OneValid => (!is_one_valid(c)).then(|| RowWitness {
            rows: vec![mask(c)],
            produced: None,
        }),
        Property::Horn => horn_witness(c),
        Property::AntiHorn => anti_horn_witness(c),
        Property::Bijunctive => bijunctive_witness(c),
        Property::Affine => affine_witness(c),
        Property::Complementive => complementive_witness(c),
    }
}

pub fn has_property(c: &Constraint, p: Property) -> bool {
    match p {
        Property::ZeroValid => is_zero_valid(c),
        Property::OneValid => is_one_valid(c),
        _ => witness_for(c, p).is_none(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PropertyFlags {
    pub zero_valid: bool,
    pub one_valid: bool,
    pub horn: bool,
    pub anti_horn: bool,
    pub bijunctive: bool,
    pub affine: bool,
    pub complementive: bool,
}

impl PropertyFlags {
    /// Every flag set; the identity of [`PropertyFlags::and`].
    pub const ALL: PropertyFlags = PropertyFlags {
        zero_valid: true,
        one_valid: true,
        horn: true,
        anti_horn: true,
        bijunctive: true,
        affine: true,
        complementive: true,
    };

    pub fn of(c: &Constraint) -> Self {
        PropertyFlags {
            zero_valid: is_zero_valid(c),
            one_valid: is_one_valid(c),
            horn: is_horn(c),
            anti_horn: is_anti_horn(c),
            bijunctive: is_bijunctive(c),
            affine: is_affine(c),
            complementive: is_complementive(c),
        }
    }

    /// Conjunctive flags of a set; vacuously all true for the empty set.
    pub fn of_set<'a>(cs: impl IntoIterator<Item = &'a Constraint>) -> Self {
        cs.into_iter()
            .fold(Self::ALL, |acc, c| acc.and(&Self::of(c)))
    }

    pub fn and(&self, o: &Self) -> Self {
        PropertyFlags {
            zero_valid: self.zero_valid && o.zero_valid,
            one_valid: self.one_valid && o.one_valid,
            horn: self.horn && o.horn,
            anti_horn: self.anti_horn && o.anti_horn,
            bijunctive: self.bijunctive && o.bijunctive,
            affine: self.affine && o.affine,
            complementive: self.complementive && o.complementive,
        }
    }

    pub fn get(&self, p: Property) -> bool {
        match p {
            Property::ZeroValid => self.zero_valid,
            Property::OneValid => self.one_valid,
            Property::Horn => self.horn,
            Property::AntiHorn => self.anti_horn,
            Property::Bijunctive => self.bijunctive,
            Property::Affine => self.affine,
            Property::Complementive => self.complementive,
        }
    }

    /// Horn, anti-Horn, affine or bijunctive.
    pub fn is_schaefer(&self) -> bool {
        self.horn || self.anti_horn || self.affine || self.bijunctive
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    P,
    NpComplete,
    PspaceComplete,
    /// Complete for `Σ_i^p`; `None` stands for "every level `i ≥ 2`".
    SigmaComplete(Option<usize>),
}

impl Verdict {
    pub fn is_p(self) -> bool {
        self == Verdict::P
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::P => f.write_str("P"),
            Verdict::NpComplete => f.write_str("NP-complete"),
            Verdict::PspaceComplete => f.write_str("PSPACE-complete"),
            Verdict::SigmaComplete(None) => f.write_str("Sigma_i-complete"),
            Verdict::SigmaComplete(Some(i)) => write!(f, "Sigma_{i}-complete"),
        }
    }
}

/// A constraint and rows showing it breaks one property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub property: Property,
    pub constraint: String,
    pub rows: Vec<usize>,
    pub produced: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub flags: PropertyFlags,
    pub sat: Verdict,
    pub sat_c: Verdict,
    pub qsat: Verdict,
    pub qsat_c: Verdict,
    /// Verdict for `QSAT_i`, uniform over `i ≥ 2`.
    pub qsat_i: Verdict,
    /// Verdict for `QSAT_{i,c}`, uniform over `i ≥ 2`.
    pub qsat_ic: Verdict,
    /// One witness per property the set lacks.
    pub witnesses: Vec<Witness>,
    /// Names of members whose table is constant.
    pub constant_members: Vec<String>,
}

impl ClassificationReport {
    /// `QSAT_i` verdict at a specific level; level 1 is plain satisfiability.
    pub fn qsat_level(&self, level: usize) -> Verdict {
        match (level, self.qsat_i) {
            (1, _) => self.sat,
            (i, Verdict::SigmaComplete(_)) => Verdict::SigmaComplete(Some(i)),
            (_, v) => v,
        }
    }

    /// `QSAT_{i,c}` verdict at a specific level.
    pub fn qsat_c_level(&self, level: usize) -> Verdict {
        match (level, self.qsat_ic) {
            (1, _) => self.sat_c,
            (i, Verdict::SigmaComplete(_)) => Verdict::SigmaComplete(Some(i)),
            (_, v) => v,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.entries() {
            out.push_str(&k);
            out.push('=');
            out.push_str(&v);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut flags = Map::new();
        for p in Property::ALL {
            flags.insert(p.key().into(), Value::Bool(self.flags.get(p)));
        }
        let mut witnesses = Map::new();
        for w in &self.witnesses {
            witnesses.insert(
                w.property.key().into(),
                json!({
                    "constraint": w.constraint,
                    "rows": w.rows,
                    "produced": w.produced,
                }),
            );
        }
        json!({
            "flags": flags,
            "verdicts": {
                "sat": self.sat.to_string(),
                "sat_c": self.sat_c.to_string(),
                "qsat": self.qsat.to_string(),
                "qsat_c": self.qsat_c.to_string(),
                "qsat_1": self.qsat_level(1).to_string(),
                "qsat_1c": self.qsat_c_level(1).to_string(),
                "qsat_i": self.qsat_i.to_string(),
                "qsat_ic": self.qsat_ic.to_string(),
            },
            "witnesses": witnesses,
            "constants": self.constant_members,
        })
    }

    fn entries(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for p in Property::ALL {
            out.push((format!("flags.{}", p.key()), self.flags.get(p).to_string()));
        }
        let verdicts = [
            ("sat", self.sat),
            ("sat_c", self.sat_c),
            ("qsat", self.qsat),
            ("qsat_c", self.qsat_c),
            ("qsat_1", self.qsat_level(1)),
            ("qsat_1c", self.qsat_c_level(1)),
            ("qsat_i", self.qsat_i),
            ("qsat_ic", self.qsat_ic),
        ];
        for (k, v) in verdicts {
            out.push((format!("verdicts.{k}"), v.to_string()));
        }
        for w in &self.witnesses {
            let rows: Vec<String> = w.rows.iter().map(usize::to_string).collect();
            let mut v = format!("{} rows={}", w.constraint, rows.join(","));
            if let Some(p) = w.produced {
                v.push_str(&format!(" produced={p}"));
            }
            out.push((format!("witnesses.{}", w.property.key()), v));
        }
        if !self.constant_members.is_empty() {
            out.push(("constants".into(), self.constant_members.join(",")));
        }
        out
    }
}

/// Classifies a nonempty constraint set.
pub fn classify_set(cs: &[Arc<Constraint>]) -> Result<ClassificationReport> {
    if cs.is_empty() {
        return Err(Error::EmptyConstraintSet);
    }
    let flags = PropertyFlags::of_set(cs.iter().map(|c| &**c));
    let mut witnesses = Vec::new();
    for p in Property::ALL {
        if flags.get(p) {
            continue;
        }
        let found = cs
            .iter()
            .find_map(|c| witness_for(c, p).map(|w| (c.name().to_string(), w)));
        if let Some((constraint, w)) = found {
            witnesses.push(Witness {
                property: p,
                constraint,
                rows: w.rows,
                produced: w.produced,
            });
        }
    }
    let schaefer = flags.is_schaefer();
    let sat_easy = schaefer || flags.zero_valid || flags.one_valid;
    let pick = |easy: bool, hard: Verdict| if easy { Verdict::P } else { hard };
    Ok(ClassificationReport {
        flags,
        sat: pick(sat_easy, Verdict::NpComplete),
        sat_c: pick(schaefer, Verdict::NpComplete),
        qsat: pick(schaefer, Verdict::PspaceComplete),
        qsat_c: pick(schaefer, Verdict::PspaceComplete),
        qsat_i: pick(schaefer, Verdict::SigmaComplete(None)),
        qsat_ic: pick(schaefer, Verdict::SigmaComplete(None)),
        witnesses,
        constant_members: cs
            .iter()
            .filter(|c| c.constant_value().is_some())
            .map(|c| c.name().to_string())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::*;

    #[test]
    fn validity_examples() {
        assert!(!is_zero_valid(&or2()));
        assert!(is_zero_valid(&nand2()));
        assert!(is_zero_valid(&not1()));
        assert!(is_one_valid(&or2()));
        assert!(!is_one_valid(&one_in_three()));
        assert!(is_one_valid(&id1()));
    }

    #[test]
    fn complementive_examples() {
        assert!(is_complementive(&xor2()));
        assert!(!is_complementive(&or2()));
        // OIT(001) = 1 but OIT(110) = 0
        let w = complementive_witness(&one_in_three()).unwrap();
        assert!(one_in_three().holds(w.rows[0]) != one_in_three().holds(w.rows[1]));
        assert!(!is_complementive(&one_in_three()));
    }

    #[test]
    fn closure_examples() {
        assert!(is_horn(&nand2()));
        let w = horn_witness(&or2()).unwrap();
        assert_eq!(w.produced, Some(0b00));
        assert!(!is_bijunctive(&one_in_three()));
        assert!(!is_affine(&one_in_three()));
        let w = bijunctive_witness(&one_in_three()).unwrap();
        assert_eq!(w.produced, Some(0b000));
        let w = affine_witness(&one_in_three()).unwrap();
        assert_eq!(w.produced, Some(0b111));
    }

    #[test]
    fn constants_are_bijunctive_and_affine() {
        let t = Constraint::new("T", 2, "1111").unwrap();
        let f = Constraint::new("F", 2, "0000").unwrap();
        for c in [&t, &f] {
            assert!(is_bijunctive(c) && is_affine(c) && is_horn(c) && is_anti_horn(c));
        }
        let r = classify_set(&[Arc::new(t), Arc::new(f), one_in_three()]).unwrap();
        assert_eq!(r.constant_members, vec!["T", "F"]);
    }

    #[test]
    fn classify_oit() {
        let r = classify_set(&[one_in_three()]).unwrap();
        for p in Property::ALL {
            assert!(!r.flags.get(p), "{p}");
        }
        assert_eq!(r.sat, Verdict::NpComplete);
        assert_eq!(r.qsat, Verdict::PspaceComplete);
        assert_eq!(r.qsat_i, Verdict::SigmaComplete(None));
        assert_eq!(r.qsat_level(3), Verdict::SigmaComplete(Some(3)));
        assert_eq!(r.qsat_level(1), Verdict::NpComplete);
        assert_eq!(r.witnesses.len(), 7);
    }

    #[test]
    fn classify_xor2() {
        let r = classify_set(&[xor2()]).unwrap();
        assert!(r.flags.affine && r.flags.complementive);
        assert!(!r.flags.horn && !r.flags.anti_horn);
        assert!(r.flags.bijunctive);
        for v in [r.sat, r.sat_c, r.qsat, r.qsat_c, r.qsat_i, r.qsat_ic] {
            assert_eq!(v, Verdict::P);
        }
    }

    #[test]
    fn classify_three_cnf() {
        let r = classify_set(&three_cnf_set()).unwrap();
        assert!(!r.flags.is_schaefer());
        assert_eq!(r.qsat_i, Verdict::SigmaComplete(None));
        assert_eq!(r.sat, Verdict::NpComplete);
    }

    #[test]
    fn zero_valid_set_is_sat_easy_only() {
        // SymOR1 is 0-valid but not Schaefer
        let r = classify_set(&[sym_or1()]).unwrap();
        assert_eq!(r.sat, Verdict::P);
        assert_eq!(r.sat_c, Verdict::NpComplete);
        assert_eq!(r.qsat_level(1), Verdict::P);
        assert_eq!(r.qsat_level(2), Verdict::SigmaComplete(Some(2)));
    }

    #[test]
    fn empty_set_rejected() {
        assert_eq!(classify_set(&[]), Err(Error::EmptyConstraintSet));
    }

    #[test]
    fn report_serializations() {
        let r = classify_set(&[one_in_three()]).unwrap();
        let text = r.to_text();
        assert!(text.contains("verdicts.qsat_i=Sigma_i-complete\n"));
        assert!(text.contains("flags.horn=false\n"));
        assert!(text.contains("witnesses.horn=OIT rows="));
        let j = r.to_json();
        assert_eq!(j["verdicts"]["qsat_i"], "Sigma_i-complete");
        assert_eq!(j["flags"]["affine"], false);
        assert_eq!(j["witnesses"]["bijunctive"]["produced"], 0);

        let r = classify_set(&[xor2()]).unwrap();
        assert!(r.to_text().contains("verdicts.qsat=P\n"));
    }
}
