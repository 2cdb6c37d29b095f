//! Quantified 2-SAT on the implication graph.
//!
//! The expression is false exactly when one of the following holds:
//! an existential variable shares a strongly connected component with its
//! negation; a universal literal shares a component with an existential
//! literal bound in an earlier block; or some universal literal reaches a
//! different universal literal (including its own negation).

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::{PrefixInfo, VarLit};

fn node(l: VarLit) -> usize {
    2 * l.var + (!l.positive) as usize
}

fn negate(n: usize) -> usize {
    n ^ 1
}

pub(crate) fn solve(info: &PrefixInfo, clauses: &[Vec<VarLit>]) -> bool {
    let n = info.len();
    let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(2 * n, 2 * clauses.len());
    for _ in 0..2 * n {
        graph.add_node(());
    }
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let mut edge = |a: usize, b: usize| {
        graph.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
        adjacency[a].push(b);
    };
    for c in clauses {
        match c.as_slice() {
            [] => return false,
            [a] => edge(negate(node(*a)), node(*a)),
            [a, b] => {
                edge(negate(node(*a)), node(*b));
                edge(negate(node(*b)), node(*a));
            }
            _ => unreachable!("bijunctive forms have clauses of width at most 2"),
        }
    }

    let mut component = vec![0usize; 2 * n];
    for (i, scc) in tarjan_scc(&graph).iter().enumerate() {
        for v in scc {
            component[v.index()] = i;
        }
    }
    let var_of = |node: usize| node / 2;

    for v in 0..n {
        if !info.is_universal(v) && component[2 * v] == component[2 * v + 1] {
            return false;
        }
    }

    // earliest existential block per component
    let mut first_exist: Vec<Option<usize>> = vec![None; 2 * n];
    for x in 0..2 * n {
        let v = var_of(x);
        if !info.is_universal(v) {
            let slot = &mut first_exist[component[x]];
            *slot = Some(slot.map_or(info.block[v], |b: usize| b.min(info.block[v])));
        }
    }
    for x in 0..2 * n {
        let v = var_of(x);
        if info.is_universal(v) {
            if let Some(b) = first_exist[component[x]] {
                if b < info.block[v] {
                    return false;
                }
            }
        }
    }

    let mut seen = vec![usize::MAX; 2 * n];
    for start in (0..2 * n).filter(|&x| info.is_universal(var_of(x))) {
        let mut stack = vec![start];
        seen[start] = start;
        while let Some(x) = stack.pop() {
            for &y in &adjacency[x] {
                if seen[y] == start {
                    continue;
                }
                if y != start && info.is_universal(var_of(y)) {
                    return false;
                }
                seen[y] = start;
                stack.push(y);
            }
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
    fn equality_depends_on_order() {
        let eq = |a: usize, b: usize| {
            vec![vec![lit(a, false), lit(b, true)], vec![lit(a, true), lit(b, false)]]
        };
        // A u E e: e = u is fine
        assert!(solve(&info(&[(Forall, 0), (Exists, 1)]), &eq(0, 1)));
        // E e A u: e = u is not
        assert!(!solve(&info(&[(Exists, 0), (Forall, 1)]), &eq(0, 1)));
    }

    #[test]
    fn universal_unit_clause() {
        assert!(!solve(&info(&[(Forall, 0)]), &[vec![lit(0, true)]]));
    }

    #[test]
    fn universal_to_universal_path() {
        // A u A w E e: (!u | e) & (!e | w) gives u -> w
        let i = info(&[(Forall, 0), (Forall, 0), (Exists, 1)]);
        let clauses = vec![vec![lit(0, false), lit(2, true)], vec![lit(2, false), lit(1, true)]];
        assert!(!solve(&i, &clauses));
    }

    #[test]
    fn existential_contradiction() {
        let i = info(&[(Exists, 0)]);
        assert!(!solve(&i, &[vec![lit(0, true)], vec![lit(0, false)]]));
        assert!(solve(&i, &[vec![lit(0, true)]]));
    }
}
