//! Quantified Horn evaluation.
//!
//! In a Horn clause a universal variable either occurs negatively, where the
//! universal player wants it at 1, or as the single positive literal, where
//! setting it to 0 turns the clause into a goal clause. A Horn refutation
//! needs a single goal clause, so the universal player never gains from more
//! than one variable at 0. The expression is true iff the existential player
//! survives "all universals 1" and, for each universal `y`, "all others 1,
//! `y` free". The latter is one Horn instance: existentials bound before `y`
//! are shared, those bound after `y` are copied once per value of `y`.

use super::{PrefixInfo, VarLit};

struct HornClause {
    head: Option<usize>,
    body: Vec<usize>,
}

/// Satisfiability of a Horn clause set by forward chaining.
fn horn_sat(atoms: usize, clauses: &[HornClause]) -> bool {
    let mut watch: Vec<Vec<usize>> = vec![Vec::new(); atoms];
    let mut missing: Vec<usize> = Vec::with_capacity(clauses.len());
    let mut truth = vec![false; atoms];
    let mut queue = Vec::new();
    for (i, c) in clauses.iter().enumerate() {
        for &b in &c.body {
            watch[b].push(i);
        }
        missing.push(c.body.len());
        if c.body.is_empty() {
            match c.head {
                None => return false,
                Some(h) if !truth[h] => {
                    truth[h] = true;
                    queue.push(h);
                }
                Some(_) => {}
            }
        }
    }
    while let Some(a) = queue.pop() {
        for &i in &watch[a] {
            missing[i] -= 1;
            if missing[i] == 0 {
                match clauses[i].head {
                    None => return false,
                    Some(h) if !truth[h] => {
                        truth[h] = true;
                        queue.push(h);
                    }
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Instantiates the universals and maps existentials to atoms. Returns
/// `None` for a clause that the universal values satisfy.
fn instantiate(
    clause: &[VarLit],
    info: &PrefixInfo,
    universal: impl Fn(usize) -> bool,
    atom: impl Fn(usize) -> usize,
) -> Option<HornClause> {
    let mut head = None;
    let mut body = Vec::new();
    for l in clause {
        if info.is_universal(l.var) {
            if universal(l.var) == l.positive {
                return None;
            }
        } else if l.positive {
            head = Some(atom(l.var));
        } else {
            body.push(atom(l.var));
        }
    }
    Some(HornClause { head, body })
}

pub(crate) fn solve(info: &PrefixInfo, clauses: &[Vec<VarLit>]) -> bool {
    let n = info.len();

    let all_ones: Vec<HornClause> = clauses
        .iter()
        .filter_map(|c| instantiate(c, info, |_| true, |v| v))
        .collect();
    if !horn_sat(n, &all_ones) {
        return false;
    }

    for y in (0..n).filter(|&v| info.is_universal(v)) {
        let inner = |v: usize| info.block[v] > info.block[y];
        let mut both = Vec::new();
        for value in [false, true] {
            let copy = if value { n } else { 0 };
            let atom = |v: usize| if inner(v) { v + copy } else { v };
            let universal = |u: usize| if u == y { value } else { true };
            both.extend(
                clauses
                    .iter()
                    .filter_map(|c| instantiate(c, info, universal, atom)),
            );
        }
        if !horn_sat(2 * n, &both) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Quantifier::{Exists, Forall};

    fn lit(var: usize, positive: bool) -> VarLit {
        VarLit { var, positive }
    }

    fn info(q: &[(crate::model::Quantifier, usize)]) -> PrefixInfo {
        PrefixInfo {
            quantifier: q.iter().map(|p| p.0).collect(),
            block: q.iter().map(|p| p.1).collect(),
        }
    }

    #[test]
    fn horn_sat_basics() {
        let c = |head: Option<usize>, body: &[usize]| HornClause {
            head,
            body: body.to_vec(),
        };
        assert!(horn_sat(2, &[c(Some(0), &[]), c(Some(1), &[0])]));
        assert!(!horn_sat(2, &[c(Some(0), &[]), c(Some(1), &[0]), c(None, &[1])]));
        assert!(!horn_sat(1, &[c(None, &[])]));
        assert!(horn_sat(1, &[]));
    }

    #[test]
    fn two_universals_need_one_zero() {
        // A u1 A u2 E e: (u1 | !e) & (!u2 | e) is false at u1=0, u2=1
        let i = info(&[(Forall, 0), (Forall, 0), (Exists, 1)]);
        let clauses = vec![vec![lit(0, true), lit(2, false)], vec![lit(1, false), lit(2, true)]];
        assert!(!solve(&i, &clauses));
    }

    #[test]
    fn existential_cannot_see_later_universal() {
        // E e A u: (!u | e) & (u | !e) needs e = u
        let i = info(&[(Exists, 0), (Forall, 1)]);
        let clauses = vec![vec![lit(1, false), lit(0, true)], vec![lit(1, true), lit(0, false)]];
        assert!(!solve(&i, &clauses));
        // A u E e: same clauses, e := u
        let i = info(&[(Forall, 0), (Exists, 1)]);
        let clauses = vec![vec![lit(0, false), lit(1, true)], vec![lit(0, true), lit(1, false)]];
        assert!(solve(&i, &clauses));
    }
}
