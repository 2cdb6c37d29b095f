//! Perfect implementations: checking them and searching for them.
//!
//! An implementation of a target `C` of arity `m` is a set of applications
//! `S(X, Y)` over primary variables `X` and auxiliary variables `Y` such that
//! `C(X) = 1` exactly when some assignment to `Y` satisfies all of `S`.
//!
//! The search works on solution sets encoded as bitsets over all
//! `2^(m + aux)` assignments. An assignment index keeps the primary variables
//! in its low bits, so projecting onto `X` is `index mod 2^m`.

use std::fmt;
use std::sync::Arc;

use crate::model::{Application, Arg, Constraint, Var};

/// Largest `m + max_aux` the search accepts.
pub const SEARCH_VARIABLE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Implementation {
    pub target: Arc<Constraint>,
    pub primary_vars: Vec<Var>,
    pub aux_vars: Vec<Var>,
    pub apps: Vec<Application>,
}

impl fmt::Display for Implementation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |vs: &[Var]| vs.iter().map(Var::to_string).collect::<Vec<_>>().join(", ");
        write!(f, "{}({}) == ", self.target.name(), list(&self.primary_vars))?;
        if !self.aux_vars.is_empty() {
            write!(f, "E {} ", list(&self.aux_vars))?;
        }
        f.write_str(": ")?;
        let apps: Vec<String> = self.apps.iter().map(Application::to_string).collect();
        f.write_str(&apps.join(", "))
    }
}

impl Implementation {
    /// The target implemented by itself with no auxiliary variables.
    pub fn identity(target: Arc<Constraint>) -> Self {
        let primary_vars: Vec<Var> = (1..=target.arity()).map(|i| Var::new(format!("x{i}"))).collect();
        let app = Application::new(
            target.clone(),
            primary_vars.iter().cloned().map(Arg::Var).collect(),
        )
        .expect("arity matches");
        Implementation {
            target,
            primary_vars,
            aux_vars: Vec::new(),
            apps: vec![app],
        }
    }

    /// Constraints used by the applications, distinct, in first-use order.
    pub fn constraints(&self) -> Vec<Arc<Constraint>> {
        let mut out: Vec<Arc<Constraint>> = Vec::new();
        for app in &self.apps {
            if !out.iter().any(|c| **c == **app.constraint()) {
                out.push(app.constraint().clone());
            }
        }
        out
    }
}

/// Exhaustive check of `C(X) == ∃Y S(X, Y)` over every assignment.
///
/// Fails when variables repeat, when an application mentions a variable
/// outside `X ∪ Y`, or when there are more variables than
/// [`SEARCH_VARIABLE_LIMIT`] allows.
pub fn check_implementation(imp: &Implementation) -> bool {
    let m = imp.primary_vars.len();
    let n = m + imp.aux_vars.len();
    if m != imp.target.arity() || n > SEARCH_VARIABLE_LIMIT + 4 {
        return false;
    }
    let all: Vec<&Var> = imp.primary_vars.iter().chain(&imp.aux_vars).collect();
    for (i, v) in all.iter().enumerate() {
        if all[..i].contains(v) {
            return false;
        }
    }
    let mut compiled: Vec<(&Constraint, Vec<Result<usize, bool>>)> = Vec::new();
    for app in &imp.apps {
        let mut slots = Vec::new();
        for a in app.args() {
            match a {
                Arg::Const(b) => slots.push(Err(*b)),
                Arg::Var(v) => match all.iter().position(|w| *w == v) {
                    Some(i) => slots.push(Ok(i)),
                    None => return false,
                },
            }
        }
        compiled.push((app.constraint(), slots));
    }
    let mut projected = vec![false; 1 << m];
    let mut args = Vec::new();
    for r in 0usize..1 << n {
        let ok = compiled.iter().all(|(c, slots)| {
            args.clear();
            args.extend(slots.iter().map(|s| match *s {
                Ok(i) => (r >> i) & 1 == 1,
                Err(b) => b,
            }));
            c.holds_on(&args)
        });
        if ok {
            projected[r & ((1 << m) - 1)] = true;
        }
    }
    (0usize..1 << m).all(|p| {
        let xs: Vec<bool> = (0..m).map(|i| (p >> i) & 1 == 1).collect();
        projected[p] == imp.target.holds_on(&xs)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchOptions {
    pub max_aux: usize,
    pub max_apps: usize,
    /// Only introduce auxiliary variables in index order. Sound and much
    /// faster; turn off to cross-check.
    pub canonical: bool,
    /// Let applications take the constants 0 and 1 as arguments.
    pub allow_constants: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_aux: 6,
            max_apps: 8,
            canonical: true,
            allow_constants: false,
        }
    }
}

impl SearchOptions {
    pub fn bounded(max_aux: usize, max_apps: usize) -> Self {
        SearchOptions {
            max_aux,
            max_apps,
            ..Self::default()
        }
    }
}

type Bits = Vec<u64>;

struct Candidate {
    constraint: usize,
    /// Slots `0..n` are variables, `n` and `n + 1` the constants 0 and 1.
    args: Vec<usize>,
    bits: Bits,
    /// Auxiliary variables used, bit `j` for aux `j`.
    aux_mask: u32,
}

struct Search<'a> {
    m: usize,
    candidates: &'a [Candidate],
    target: u64,
    canonical: bool,
    chosen: Vec<usize>,
}

fn project(bits: &Bits, m: usize) -> u64 {
    let low = (1usize << m) - 1;
    let mut p = 0u64;
    for (w, &word) in bits.iter().enumerate() {
        let mut x = word;
        while x != 0 {
            let t = x.trailing_zeros() as usize;
            x &= x - 1;
            p |= 1 << ((w * 64 + t) & low);
        }
    }
    p
}

impl Search<'_> {
    fn dfs(&mut self, current: &Bits, start: usize, aux_used: usize, depth: usize) -> bool {
        if project(current, self.m) == self.target {
            return true;
        }
        if depth == 0 {
            return false;
        }
        for i in start..self.candidates.len() {
            let cand = &self.candidates[i];
            let mut next_used = aux_used;
            if self.canonical {
                let fresh = cand.aux_mask >> aux_used;
                if fresh & fresh.wrapping_add(1) != 0 {
                    continue;
                }
                next_used += fresh.count_ones() as usize;
            }
            let next: Bits = current.iter().zip(&cand.bits).map(|(a, b)| a & b).collect();
            if next == *current {
                continue;
            }
            if project(&next, self.m) & self.target != self.target {
                continue;
            }
            self.chosen.push(i);
            if self.dfs(&next, i + 1, next_used, depth - 1) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

fn build_candidates(ds: &[Arc<Constraint>], n: usize, m: usize, constants: bool) -> Vec<Candidate> {
    let slots = n + if constants { 2 } else { 0 };
    let rows = 1usize << n;
    let words = rows.div_ceil(64);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (ci, c) in ds.iter().enumerate() {
        let k = c.arity();
        let mut values = vec![false; k];
        // tuples of very wide constraints are not enumerable; skip them
        let tuples = slots.checked_pow(k as u32).filter(|&t| t <= 1 << 22).unwrap_or(0);
        for code in 0..tuples {
            // lexicographic, first argument most significant
            let args: Vec<usize> = (0..k)
                .map(|j| code / slots.pow((k - 1 - j) as u32) % slots)
                .collect();
            let mut bits = vec![0u64; words];
            for r in 0..rows {
                for (v, &a) in values.iter_mut().zip(&args) {
                    *v = if a < n { (r >> a) & 1 == 1 } else { a == n + 1 };
                }
                if c.holds_on(&values) {
                    bits[r / 64] |= 1 << (r % 64);
                }
            }
            if seen.insert(bits.clone()) {
                let aux_mask = args
                    .iter()
                    .filter(|&&a| a >= m && a < n)
                    .fold(0u32, |acc, &a| acc | 1 << (a - m));
                out.push(Candidate {
                    constraint: ci,
                    args,
                    bits,
                    aux_mask,
                });
            }
        }
    }
    out
}

/// Searches for an implementation of `target` by applications of `ds`.
///
/// Tries application counts `0, 1, ..., max_apps` in turn and, within one
/// count, application lists in lexicographic order of
/// `(constraint index, argument tuple)`, so the witness returned is minimal
/// in size and the same on every run. Candidates with identical solution
/// sets are tried once. `None` only means nothing exists within the bounds.
///
/// Targets of arity above 6 are not searched.
pub fn find_implementation(
    ds: &[Arc<Constraint>],
    target: &Arc<Constraint>,
    options: &SearchOptions,
) -> Option<Implementation> {
    let m = target.arity();
    let max_aux = options.max_aux.min(SEARCH_VARIABLE_LIMIT.saturating_sub(m));
    let n = m + max_aux;
    if m > 6 || n > SEARCH_VARIABLE_LIMIT {
        return None;
    }
    let mut target_bits = 0u64;
    for p in 0usize..1 << m {
        let xs: Vec<bool> = (0..m).map(|i| (p >> i) & 1 == 1).collect();
        if target.holds_on(&xs) {
            target_bits |= 1 << p;
        }
    }
    let candidates = build_candidates(ds, n, m, options.allow_constants);
    let rows = 1usize << n;
    let mut full = vec![u64::MAX; rows.div_ceil(64)];
    if !rows.is_multiple_of(64) {
        *full.last_mut().expect("nonempty") = (1u64 << (rows % 64)) - 1;
    }
    let mut search = Search {
        m,
        candidates: &candidates,
        target: target_bits,
        canonical: options.canonical,
        chosen: Vec::new(),
    };
    for depth in 0..=options.max_apps {
        search.chosen.clear();
        if search.dfs(&full, 0, 0, depth) {
            let imp = materialize(ds, target, &candidates, &search.chosen, m, n);
            debug_assert!(check_implementation(&imp));
            return Some(imp);
        }
    }
    None
}

fn materialize(
    ds: &[Arc<Constraint>],
    target: &Arc<Constraint>,
    candidates: &[Candidate],
    chosen: &[usize],
    m: usize,
    n: usize,
) -> Implementation {
    let primary_vars: Vec<Var> = (1..=m).map(|i| Var::new(format!("x{i}"))).collect();
    let mut aux_index: Vec<Option<usize>> = vec![None; n - m];
    let mut aux_vars = Vec::new();
    let mut apps = Vec::new();
    for &i in chosen {
        let cand = &candidates[i];
        let args = cand
            .args
            .iter()
            .map(|&a| {
                if a < m {
                    Arg::Var(primary_vars[a].clone())
                } else if a < n {
                    let j = *aux_index[a - m].get_or_insert_with(|| {
                        aux_vars.push(Var::new(format!("y{}", aux_vars.len() + 1)));
                        aux_vars.len() - 1
                    });
                    Arg::Var(aux_vars[j].clone())
                } else {
                    Arg::Const(a == n + 1)
                }
            })
            .collect();
        apps.push(Application::new(ds[cand.constraint].clone(), args).expect("arity matches"));
    }
    Implementation {
        target: target.clone(),
        primary_vars,
        aux_vars,
        apps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::*;

    #[test]
    fn check_examples() {
        let t = Arc::new(Constraint::new("T", 2, "1111").unwrap());
        let empty = Implementation {
            target: t,
            primary_vars: vec!["x".into(), "y".into()],
            aux_vars: vec![],
            apps: vec![],
        };
        assert!(check_implementation(&empty));

        let wrong = Implementation {
            target: and2(),
            primary_vars: vec!["x".into(), "y".into()],
            aux_vars: vec![],
            apps: vec![Application::new(or2(), vec!["x".into(), "y".into()]).unwrap()],
        };
        assert!(!check_implementation(&wrong));
        assert!(check_implementation(&Implementation::identity(or3())));
    }

    #[test]
    fn unknown_variable_rejected() {
        let imp = Implementation {
            target: or2(),
            primary_vars: vec!["x".into(), "y".into()],
            aux_vars: vec![],
            apps: vec![Application::new(or2(), vec!["x".into(), "z".into()]).unwrap()],
        };
        assert!(!check_implementation(&imp));
    }

    #[test]
    fn identity_found() {
        let imp = find_implementation(&[or2()], &or2(), &SearchOptions::bounded(0, 1)).unwrap();
        assert_eq!(imp.apps.len(), 1);
        assert!(imp.aux_vars.is_empty());
        assert_eq!(imp.apps[0].to_string(), "OR2(x1, x2)");
    }

    #[test]
    fn xor_cannot_make_and() {
        assert!(find_implementation(&[xor2()], &and2(), &SearchOptions::bounded(2, 4)).is_none());
    }

    #[test]
    fn oit_implements_xor_and_is_deterministic() {
        let opts = SearchOptions::bounded(6, 8);
        let a = find_implementation(&[one_in_three()], &xor2(), &opts).unwrap();
        let b = find_implementation(&[one_in_three()], &xor2(), &opts).unwrap();
        assert!(check_implementation(&a));
        assert_eq!(a, b);
    }

    #[test]
    fn constants_variant() {
        // ID1 from OR2 needs a constant or an aux
        let opts = SearchOptions {
            allow_constants: true,
            ..SearchOptions::bounded(0, 1)
        };
        let imp = find_implementation(&[or2()], &id1(), &opts).unwrap();
        assert!(check_implementation(&imp));
        assert!(imp.apps[0].has_constants() || imp.apps[0].args()[0] == imp.apps[0].args()[1]);
    }
}
