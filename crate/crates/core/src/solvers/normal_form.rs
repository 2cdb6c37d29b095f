//! Brute-force normal-form synthesis.
//!
//! Every candidate clause of the requested kind over `v1..vk` is tested
//! against the satisfying rows; the implied ones are kept and the
//! constraint is representable iff their conjunction has exactly the
//! constraint's models.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::Constraint;

/// Largest arity accepted by [`synthesize_normal_form`].
pub const SYNTHESIS_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    HornCnf,
    AntiHornCnf,
    TwoCnf,
    XorCnf,
}

impl FormKind {
    pub const ALL: [FormKind; 4] = [
        FormKind::HornCnf,
        FormKind::AntiHornCnf,
        FormKind::TwoCnf,
        FormKind::XorCnf,
    ];
}

/// A literal over argument positions `0..k` (`v1` is position 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Clause {
    /// Disjunction of literals; empty means false.
    Or(Vec<Lit>),
    /// `⊕ vars = parity`; no vars with parity 1 means false.
    Xor { vars: Vec<usize>, parity: bool },
}

impl Clause {
    pub fn holds_on(&self, args: &[bool]) -> bool {
        match self {
            Clause::Or(lits) => lits.iter().any(|l| args[l.var] == l.positive),
            Clause::Xor { vars, parity } => {
                vars.iter().fold(false, |acc, &v| acc ^ args[v]) == *parity
            }
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::Or(lits) if lits.is_empty() => f.write_str("()"),
            Clause::Or(lits) => {
                let parts: Vec<String> = lits
                    .iter()
                    .map(|l| format!("{}v{}", if l.positive { "" } else { "!" }, l.var + 1))
                    .collect();
                write!(f, "({})", parts.join(" | "))
            }
            Clause::Xor { vars, parity } => {
                let parts: Vec<String> = vars.iter().map(|v| format!("v{}", v + 1)).collect();
                let lhs = if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join(" ^ ")
                };
                write!(f, "{lhs} = {}", *parity as u8)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseForm {
    pub kind: FormKind,
    pub arity: usize,
    pub clauses: Vec<Clause>,
}

impl ClauseForm {
    pub fn holds_on(&self, args: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.holds_on(args))
    }

    /// Whether every clause respects the kind's shape restriction.
    pub fn well_shaped(&self) -> bool {
        self.clauses.iter().all(|c| match (self.kind, c) {
            (FormKind::XorCnf, Clause::Xor { .. }) => true,
            (FormKind::HornCnf, Clause::Or(l)) => l.iter().filter(|l| l.positive).count() <= 1,
            (FormKind::AntiHornCnf, Clause::Or(l)) => {
                l.iter().filter(|l| !l.positive).count() <= 1
            }
            (FormKind::TwoCnf, Clause::Or(l)) => l.len() <= 2,
            _ => false,
        })
    }
}

/// Clause over row bits: argument `i` is bit `k-1-i` of a row index.
#[derive(Clone, Copy)]
struct MaskClause {
    pos: usize,
    neg: usize,
}

impl MaskClause {
    fn holds(self, row: usize, full: usize) -> bool {
        row & self.pos != 0 || !row & full & self.neg != 0
    }

    fn subsumes(self, o: MaskClause) -> bool {
        self.pos & !o.pos == 0 && self.neg & !o.neg == 0
    }

    fn size(self) -> u32 {
        self.pos.count_ones() + self.neg.count_ones()
    }
}

fn cnf_candidates(kind: FormKind, k: usize) -> Vec<MaskClause> {
    let full = (1usize << k) - 1;
    let mut out = Vec::new();
    match kind {
        FormKind::HornCnf | FormKind::AntiHornCnf => {
            for many in 0..=full {
                out.push(MaskClause { pos: 0, neg: many });
                for i in 0..k {
                    let one = 1 << i;
                    if many & one == 0 {
                        out.push(MaskClause { pos: one, neg: many });
                    }
                }
            }
            if kind == FormKind::AntiHornCnf {
                for c in &mut out {
                    std::mem::swap(&mut c.pos, &mut c.neg);
                }
            }
        }
        FormKind::TwoCnf => {
            out.push(MaskClause { pos: 0, neg: 0 });
            let lits: Vec<(usize, bool)> =
                (0..k).flat_map(|i| [(1 << i, true), (1 << i, false)]).collect();
            let single = |(m, p): (usize, bool)| {
                if p {
                    MaskClause { pos: m, neg: 0 }
                } else {
                    MaskClause { pos: 0, neg: m }
                }
            };
            for (a, &la) in lits.iter().enumerate() {
                out.push(single(la));
                for &lb in &lits[a + 1..] {
                    if la.0 == lb.0 {
                        continue;
                    }
                    let (x, y) = (single(la), single(lb));
                    out.push(MaskClause {
                        pos: x.pos | y.pos,
                        neg: x.neg | y.neg,
                    });
                }
            }
        }
        FormKind::XorCnf => unreachable!("xor candidates are built separately"),
    }
    out.sort_by_key(|c| c.size());
    out
}

fn mask_to_clause(c: MaskClause, k: usize) -> Clause {
    let mut lits = Vec::new();
    for var in 0..k {
        let bit = 1 << (k - 1 - var);
        if c.pos & bit != 0 {
            lits.push(Lit {
                var,
                positive: true,
            });
        }
        if c.neg & bit != 0 {
            lits.push(Lit {
                var,
                positive: false,
            });
        }
    }
    Clause::Or(lits)
}

fn synthesize_cnf(c: &Constraint, kind: FormKind) -> Option<ClauseForm> {
    let k = c.arity();
    let full = (1usize << k) - 1;
    let sat: Vec<usize> = c.satisfying_rows().collect();
    let mut kept: Vec<MaskClause> = Vec::new();
    for cand in cnf_candidates(kind, k) {
        if kept.iter().any(|q| q.subsumes(cand)) {
            continue;
        }
        if sat.iter().all(|&r| cand.holds(r, full)) {
            kept.push(cand);
        }
    }
    let tight = (0..=full).all(|r| kept.iter().all(|q| q.holds(r, full)) == c.holds(r));
    tight.then(|| ClauseForm {
        kind,
        arity: k,
        clauses: kept.into_iter().map(|q| mask_to_clause(q, k)).collect(),
    })
}

fn synthesize_xor(c: &Constraint) -> Option<ClauseForm> {
    let k = c.arity();
    let full = (1usize << k) - 1;
    let sat: Vec<usize> = c.satisfying_rows().collect();
    if sat.is_empty() {
        return Some(ClauseForm {
            kind: FormKind::XorCnf,
            arity: k,
            clauses: vec![Clause::Xor {
                vars: vec![],
                parity: true,
            }],
        });
    }
    let parity = |r: usize, s: usize| (r & s).count_ones() % 2 == 1;
    let mut implied: Vec<(usize, bool)> = Vec::new();
    for s in 1..=full {
        let p = parity(sat[0], s);
        if sat.iter().all(|&r| parity(r, s) == p) {
            implied.push((s, p));
        }
    }
    // reduced row echelon form, pivots on the highest bit (first argument)
    let mut basis: Vec<(usize, bool)> = Vec::new();
    for (mut s, mut p) in implied {
        for &(b, bp) in &basis {
            let pivot = 1usize << (usize::BITS - 1 - b.leading_zeros());
            if s & pivot != 0 {
                s ^= b;
                p ^= bp;
            }
        }
        if s != 0 {
            let pivot = 1usize << (usize::BITS - 1 - s.leading_zeros());
            for (b, bp) in &mut basis {
                if *b & pivot != 0 {
                    *b ^= s;
                    *bp ^= p;
                }
            }
            basis.push((s, p));
            basis.sort_by_key(|b| std::cmp::Reverse(b.0));
        }
    }
    let tight = (0..=full)
        .all(|r| basis.iter().all(|&(s, p)| parity(r, s) == p) == c.holds(r));
    tight.then(|| ClauseForm {
        kind: FormKind::XorCnf,
        arity: k,
        clauses: basis
            .into_iter()
            .map(|(s, p)| Clause::Xor {
                vars: (0..k).filter(|&v| s & (1 << (k - 1 - v)) != 0).collect(),
                parity: p,
            })
            .collect(),
    })
}

/// A clause set of the given kind over `v1..vk` with exactly the constraint's
/// models, or `Ok(None)` when no such set exists.
pub fn synthesize_normal_form(c: &Constraint, kind: FormKind) -> Result<Option<ClauseForm>> {
    if c.arity() > SYNTHESIS_LIMIT {
        return Err(Error::SynthesisLimit {
            arity: c.arity(),
            limit: SYNTHESIS_LIMIT,
        });
    }
    Ok(match kind {
        FormKind::XorCnf => synthesize_xor(c),
        _ => synthesize_cnf(c, kind),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::row_bits;
    use crate::presets::*;

    fn agrees(c: &Constraint, form: &ClauseForm) -> bool {
        (0..c.row_count()).all(|r| form.holds_on(&row_bits(r, c.arity())) == c.holds(r))
    }

    #[test]
    fn or2_two_cnf() {
        let f = synthesize_normal_form(&or2(), FormKind::TwoCnf).unwrap().unwrap();
        assert_eq!(
            f.clauses,
            vec![Clause::Or(vec![
                Lit { var: 0, positive: true },
                Lit { var: 1, positive: true }
            ])]
        );
    }

    #[test]
    fn xor2_xor_cnf() {
        let f = synthesize_normal_form(&xor2(), FormKind::XorCnf).unwrap().unwrap();
        assert_eq!(
            f.clauses,
            vec![Clause::Xor {
                vars: vec![0, 1],
                parity: true
            }]
        );
        assert_eq!(f.clauses[0].to_string(), "v1 ^ v2 = 1");
    }

    #[test]
    fn oit_not_horn() {
        assert_eq!(synthesize_normal_form(&one_in_three(), FormKind::HornCnf).unwrap(), None);
    }

    #[test]
    fn constants() {
        let f = Constraint::new("F", 2, "0000").unwrap();
        let t = Constraint::new("T", 2, "1111").unwrap();
        for kind in FormKind::ALL {
            let ff = synthesize_normal_form(&f, kind).unwrap().unwrap();
            assert!(agrees(&f, &ff));
            let tf = synthesize_normal_form(&t, kind).unwrap().unwrap();
            assert!(tf.clauses.is_empty());
        }
    }

    #[test]
    fn forms_are_shaped_and_exact() {
        for c in all_presets() {
            for kind in FormKind::ALL {
                if let Some(f) = synthesize_normal_form(&c, kind).unwrap() {
                    assert!(f.well_shaped(), "{c:?} {kind:?}");
                    assert!(agrees(&c, &f), "{c:?} {kind:?}");
                }
            }
        }
    }

    #[test]
    fn synthesis_limit() {
        let big = Constraint::from_fn("B", 11, |_| true).unwrap();
        assert!(matches!(
            synthesize_normal_form(&big, FormKind::TwoCnf),
            Err(Error::SynthesisLimit { .. })
        ));
    }
}
