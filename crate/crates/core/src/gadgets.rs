//! Truth-preserving rewrites of quantified expressions: complementation,
//! substitution of perfect implementations, elimination of unary
//! constraints, and the removal of constant arguments.
//!
//! Constant removal replaces every `0` by a variable `f` and every `1` by a
//! variable `t`, then adds a small gadget, placed in the prefix so that the
//! gadget behaves like `f = 0, t = 1` for the purpose of the expression's
//! truth value. Which gadget applies depends on the constraint set:
//!
//! | case | set is | gadget |
//! |------|--------|--------|
//! | a | 0-valid, not complementive | `∀y z ∃f t : ¬f ∨ y, ¬z ∨ t` |
//! | b | 1-valid, not complementive | complement, case a, complement back |
//! | c | 0-valid, complementive | `∀x y z ∃f t : SymOR1(x,f,y), SymOR1(x,z,t)` |
//! | d | neither, complementive | `∃f t : f ⊕ t` (odd level) or `∀b … ∃b' : b ⊕ b'` (even level) |
//! | e | neither, not complementive | `∃f t : Â(f,t), B̂(f,t), Ĉ(f,t)` |
//!
//! Gadget constraints that are not members of the set are replaced by an
//! implementation found with [`find_implementation`].

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::classify::{is_complementive, PropertyFlags};
use crate::error::{Error, Result};
use crate::implement::{check_implementation, find_implementation, Implementation, SearchOptions};
use crate::model::{
    row_bits, Application, Arg, Constraint, QuantifiedExpression, Quantifier, Var,
};

/// `C^c(s) = C(s̄)`. A complementive constraint is returned unchanged;
/// otherwise the name gains a `_c` suffix, or loses one it already has.
pub fn complement_constraint(c: &Constraint) -> Constraint {
    if is_complementive(c) {
        return c.clone();
    }
    let full = c.row_count() - 1;
    let name = match c.name().strip_suffix("_c") {
        Some(base) if !base.is_empty() => base.to_string(),
        _ => format!("{}_c", c.name()),
    };
    Constraint::from_rows(name, c.arity(), (0..=full).map(|r| c.holds(full ^ r)))
        .expect("same arity")
}

fn flip_constant(a: &Arg) -> Arg {
    match a {
        Arg::Const(b) => Arg::Const(!b),
        v => v.clone(),
    }
}

fn complement_apps(apps: &[Application]) -> Vec<Application> {
    let mut memo: HashMap<Constraint, Arc<Constraint>> = HashMap::new();
    apps.iter()
        .map(|app| {
            let c = memo
                .entry((**app.constraint()).clone())
                .or_insert_with(|| Arc::new(complement_constraint(app.constraint())))
                .clone();
            app.map_args(flip_constant).with_constraint(c)
        })
        .collect()
}

/// Complements every constraint and swaps the constants 0 and 1. The prefix
/// and the truth value are unchanged.
pub fn complement_expression(expr: &QuantifiedExpression) -> QuantifiedExpression {
    QuantifiedExpression::new(expr.prefix().to_vec(), complement_apps(expr.matrix()))
        .expect("same variables")
}

/// Swaps the constants 0 and 1 without touching the constraints.
pub fn swap_constants(expr: &QuantifiedExpression) -> QuantifiedExpression {
    let matrix = expr.matrix().iter().map(|a| a.map_args(flip_constant)).collect();
    QuantifiedExpression::new(expr.prefix().to_vec(), matrix).expect("same variables")
}

/// Implementation of `C^c` by the complements of the original applications.
pub fn complement_implementation(imp: &Implementation) -> Implementation {
    Implementation {
        target: Arc::new(complement_constraint(&imp.target)),
        primary_vars: imp.primary_vars.clone(),
        aux_vars: imp.aux_vars.clone(),
        apps: complement_apps(&imp.apps),
    }
}

/// Hands out variable names not yet used in an expression.
struct FreshNames {
    used: HashSet<String>,
}

impl FreshNames {
    fn of(expr: &QuantifiedExpression) -> Self {
        FreshNames {
            used: expr.variables().map(|v| v.name().to_string()).collect(),
        }
    }

    fn take(&mut self, base: &str) -> Var {
        let mut name = base.to_string();
        let mut k = 1;
        while self.used.contains(&name) {
            name = format!("{base}{k}");
            k += 1;
        }
        self.used.insert(name.clone());
        Var::new(name)
    }
}

/// Replaces each application of `imp.target` by a copy of `imp.apps` with
/// fresh auxiliary variables, which are pushed onto `aux_block`.
fn substitute_apps(
    matrix: Vec<Application>,
    imp: &Implementation,
    fresh: &mut FreshNames,
    aux_block: &mut Vec<Var>,
) -> Vec<Application> {
    let mut out = Vec::with_capacity(matrix.len());
    for app in matrix {
        if **app.constraint() != *imp.target {
            out.push(app);
            continue;
        }
        let mut rename: HashMap<&Var, Arg> = imp
            .primary_vars
            .iter()
            .zip(app.args())
            .map(|(p, a)| (p, a.clone()))
            .collect();
        for y in &imp.aux_vars {
            let v = fresh.take("w");
            aux_block.push(v.clone());
            rename.insert(y, Arg::Var(v));
        }
        for piece in &imp.apps {
            out.push(piece.map_args(|a| match a {
                Arg::Var(v) => rename[v].clone(),
                c => c.clone(),
            }));
        }
    }
    out
}

/// Replaces every application of the implemented constraint by the
/// implementation, with its own fresh auxiliary variables appended to the
/// innermost block, which must be existential.
pub fn substitute_implementation(
    expr: &QuantifiedExpression,
    imp: &Implementation,
) -> Result<QuantifiedExpression> {
    if !check_implementation(imp) {
        return Err(Error::InvalidImplementation(imp.target.name().to_string()));
    }
    let mut blocks = expr.blocks();
    match blocks.last() {
        Some((Quantifier::Exists, _)) => {}
        _ => return Err(Error::InnermostNotExistential),
    }
    let mut fresh = FreshNames::of(expr);
    let last = &mut blocks.last_mut().expect("checked").1;
    let matrix = substitute_apps(expr.matrix().to_vec(), imp, &mut fresh, last);
    QuantifiedExpression::from_blocks(blocks, matrix)
}

/// Either an expression or the marker for an expression known to be false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduced {
    Expression(QuantifiedExpression),
    TriviallyFalse,
}

impl Reduced {
    pub fn expression(&self) -> Option<&QuantifiedExpression> {
        match self {
            Reduced::Expression(e) => Some(e),
            Reduced::TriviallyFalse => None,
        }
    }
}

/// Removes applications of the identity and negation constraints by fixing
/// the variables they force. The result may contain constants.
///
/// Any other unary constraint is an error. A variable forced both ways, or a
/// universal variable forced at all, makes the expression trivially false.
pub fn eliminate_unary(expr: &QuantifiedExpression) -> Result<Reduced> {
    let mut forced: HashMap<Var, bool> = HashMap::new();
    let mut rest = Vec::new();
    for app in expr.matrix() {
        let c = app.constraint();
        if c.arity() != 1 {
            rest.push(app.clone());
            continue;
        }
        let value = match c.table_string().as_str() {
            "01" => true,
            "10" => false,
            _ => return Err(Error::ForeignUnary(c.name().to_string())),
        };
        match &app.args()[0] {
            Arg::Const(b) if *b == value => {}
            Arg::Const(_) => return Ok(Reduced::TriviallyFalse),
            Arg::Var(v) => {
                if expr.quantifier_of(v) == Some(Quantifier::Forall) {
                    return Ok(Reduced::TriviallyFalse);
                }
                if *forced.entry(v.clone()).or_insert(value) != value {
                    return Ok(Reduced::TriviallyFalse);
                }
            }
        }
    }
    let matrix = rest
        .iter()
        .map(|app| {
            app.map_args(|a| match a {
                Arg::Var(v) => forced.get(v).map_or_else(|| a.clone(), |&b| Arg::Const(b)),
                c => c.clone(),
            })
        })
        .collect();
    let blocks = expr.blocks().into_iter().map(|(q, vars)| {
        (q, vars.into_iter().filter(|v| !forced.contains_key(v)).collect())
    });
    Ok(Reduced::Expression(QuantifiedExpression::from_blocks(
        blocks, matrix,
    )?))
}

/// A constraint applied to two variables: argument `i` is the first
/// variable where the pattern has 0 and the second where it has 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatTemplate {
    pub constraint: Arc<Constraint>,
    pub pattern: Vec<bool>,
}

impl HatTemplate {
    pub fn apply(&self, x: &Var, y: &Var) -> Application {
        let args = self
            .pattern
            .iter()
            .map(|&p| Arg::Var(if p { y.clone() } else { x.clone() }))
            .collect();
        Application::new(self.constraint.clone(), args).expect("pattern has the arity")
    }

    pub fn value(&self, x: bool, y: bool) -> bool {
        let args: Vec<bool> = self.pattern.iter().map(|&p| if p { y } else { x }).collect();
        self.constraint.holds_on(&args)
    }
}

/// Binary template of `c` from its satisfying row `s`.
pub fn build_hat(c: &Arc<Constraint>, s: usize) -> Result<HatTemplate> {
    if s >= c.row_count() || !c.holds(s) {
        return Err(Error::NotSatisfying {
            constraint: c.name().to_string(),
            row: s,
        });
    }
    Ok(HatTemplate {
        constraint: c.clone(),
        pattern: row_bits(s, c.arity()),
    })
}

/// Which constant-removal gadget a constraint set calls for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionCase {
    /// (a) 0-valid, not complementive.
    ZeroValidNotComp,
    /// (b) 1-valid, not complementive.
    OneValidNotComp,
    /// (c) complementive and 0-valid (hence also 1-valid).
    ZeroValidComp,
    /// (d) complementive, neither 0- nor 1-valid.
    NeitherValidComp,
    /// (e) not complementive, neither 0- nor 1-valid.
    NeitherValidNotComp,
}

impl ReductionCase {
    pub const ALL: [ReductionCase; 5] = [
        ReductionCase::ZeroValidNotComp,
        ReductionCase::OneValidNotComp,
        ReductionCase::ZeroValidComp,
        ReductionCase::NeitherValidComp,
        ReductionCase::NeitherValidNotComp,
    ];

    /// Checked in the order e, d, c, a, b.
    pub fn for_flags(flags: &PropertyFlags) -> ReductionCase {
        let (zero, one, comp) = (flags.zero_valid, flags.one_valid, flags.complementive);
        if !zero && !one && !comp {
            ReductionCase::NeitherValidNotComp
        } else if !zero && !one {
            ReductionCase::NeitherValidComp
        } else if comp {
            ReductionCase::ZeroValidComp
        } else if zero {
            ReductionCase::ZeroValidNotComp
        } else {
            ReductionCase::OneValidNotComp
        }
    }

    pub fn letter(self) -> char {
        match self {
            ReductionCase::ZeroValidNotComp => 'a',
            ReductionCase::OneValidNotComp => 'b',
            ReductionCase::ZeroValidComp => 'c',
            ReductionCase::NeitherValidComp => 'd',
            ReductionCase::NeitherValidNotComp => 'e',
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            ReductionCase::ZeroValidNotComp => "ZeroValidNotComp",
            ReductionCase::OneValidNotComp => "OneValidNotComp",
            ReductionCase::ZeroValidComp => "ZeroValidComp",
            ReductionCase::NeitherValidComp => "NeitherValidComp",
            ReductionCase::NeitherValidNotComp => "NeitherValidNotComp",
        }
    }

    /// Cases d and e also work with a single existential block.
    pub fn supports_level(self, level: usize) -> bool {
        level >= 2
            || (level == 1
                && matches!(
                    self,
                    ReductionCase::NeitherValidComp | ReductionCase::NeitherValidNotComp
                ))
    }
}

impl fmt::Display for ReductionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.letter(), self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub outcome: Reduced,
    pub case_used: ReductionCase,
    pub implementations_used: Vec<Implementation>,
}

/// Members of `cs` whose table is not constant, without duplicates.
fn non_constant_members(cs: &[Arc<Constraint>]) -> Vec<Arc<Constraint>> {
    let mut out: Vec<Arc<Constraint>> = Vec::new();
    for c in cs {
        if c.constant_value().is_none() && !out.iter().any(|d| **d == **c) {
            out.push(c.clone());
        }
    }
    out
}

/// The gadget case for a constraint set, after dropping constant members.
/// Sets that are Schaefer (including sets of constants only) are not
/// applicable.
pub fn reduction_case(cs: &[Arc<Constraint>]) -> Result<ReductionCase> {
    let members = non_constant_members(cs);
    let flags = PropertyFlags::of_set(members.iter().map(|c| &**c));
    if members.is_empty() || flags.is_schaefer() {
        return Err(Error::NotApplicable);
    }
    Ok(ReductionCase::for_flags(&flags))
}

fn gadget_imp() -> Arc<Constraint> {
    Arc::new(Constraint::new("gadget_imp", 2, "1101").expect("valid table"))
}

fn gadget_symor() -> Arc<Constraint> {
    Arc::new(Constraint::new("gadget_symor", 3, "11011011").expect("valid table"))
}

fn gadget_xor() -> Arc<Constraint> {
    Arc::new(Constraint::new("gadget_xor", 2, "0110").expect("valid table"))
}

type ImplementationKey = (Vec<Constraint>, Constraint, SearchOptions);

fn implementation_cache() -> &'static Mutex<HashMap<ImplementationKey, Option<Implementation>>> {
    static CACHE: OnceLock<Mutex<HashMap<ImplementationKey, Option<Implementation>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A checked implementation of a gadget constraint by `members`.
fn helper_implementation(
    members: &[Arc<Constraint>],
    target: &Arc<Constraint>,
    options: &SearchOptions,
) -> Result<Implementation> {
    let key = (
        members.iter().map(|c| (**c).clone()).collect(),
        (**target).clone(),
        *options,
    );
    let cached = implementation_cache()
        .lock()
        .expect("cache lock")
        .get(&key)
        .cloned();
    let found = match cached {
        Some(found) => found,
        None => {
            let found = find_implementation(members, target, options);
            implementation_cache()
                .lock()
                .expect("cache lock")
                .insert(key, found.clone());
            found
        }
    };
    let imp = found.ok_or_else(|| Error::ImplementationNotFound {
        target: target.name().to_string(),
    })?;
    if !check_implementation(&imp) {
        return Err(Error::InvalidImplementation(target.name().to_string()));
    }
    Ok(imp)
}

fn replace_constants(matrix: &[Application], zero: &Var, one: &Var) -> Vec<Application> {
    matrix
        .iter()
        .map(|app| {
            app.map_args(|a| match a {
                Arg::Const(false) => Arg::Var(zero.clone()),
                Arg::Const(true) => Arg::Var(one.clone()),
                v => v.clone(),
            })
        })
        .collect()
}

fn app2(c: &Arc<Constraint>, a: &Var, b: &Var) -> Application {
    Application::new(c.clone(), vec![Arg::Var(a.clone()), Arg::Var(b.clone())]).expect("binary")
}

type Blocks = Vec<(Quantifier, Vec<Var>)>;

/// The level-`level` blocks and matrix a gadget is built on.
struct Work<'a> {
    blocks: Blocks,
    matrix: Vec<Application>,
    level: usize,
    fresh: FreshNames,
    members: &'a [Arc<Constraint>],
    options: &'a SearchOptions,
    used: Vec<Implementation>,
}

impl Work<'_> {
    fn innermost(&mut self) -> &mut Vec<Var> {
        &mut self.blocks[self.level - 1].1
    }

    fn before_innermost(&mut self) -> &mut Vec<Var> {
        &mut self.blocks[self.level - 2].1
    }

    /// Adds gadget applications and replaces the gadget constraint by an
    /// implementation over the members.
    fn add_helper(&mut self, helper: &Arc<Constraint>, apps: Vec<Application>) -> Result<()> {
        let imp = helper_implementation(self.members, helper, self.options)?;
        let mut matrix = std::mem::take(&mut self.matrix);
        matrix.extend(apps);
        let mut aux = Vec::new();
        self.matrix = substitute_apps(matrix, &imp, &mut self.fresh, &mut aux);
        self.innermost().extend(aux);
        self.used.push(imp);
        Ok(())
    }

    fn case_a(&mut self) -> Result<()> {
        let (y, z) = (self.fresh.take("y"), self.fresh.take("z"));
        let (f, t) = (self.fresh.take("f"), self.fresh.take("t"));
        self.before_innermost().extend([y.clone(), z.clone()]);
        self.innermost().extend([f.clone(), t.clone()]);
        self.matrix = replace_constants(&self.matrix, &f, &t);
        let imp = gadget_imp();
        self.add_helper(&imp, vec![app2(&imp, &f, &y), app2(&imp, &z, &t)])
    }

    /// Even levels: `∀x∀y∀z` join the outermost block and `∃f∃t` the
    /// innermost one, with `SymOR1(x, f, y), SymOR1(x, z, t)`; `x = 0` gives
    /// `(f, t) = (0, 1)` and `x = 1` the complemented constants. Odd levels:
    /// `∃f∃t` join the outermost block and `∀y` the first universal block,
    /// with `SymOR1(f, y, t)`, which holds for every `y` iff `f ≠ t`.
    fn case_c(&mut self) -> Result<()> {
        let sym = gadget_symor();
        let app3 = |a: &Var, b: &Var, c: &Var| {
            Application::new(
                sym.clone(),
                vec![Arg::Var(a.clone()), Arg::Var(b.clone()), Arg::Var(c.clone())],
            )
            .expect("ternary")
        };
        if self.level.is_multiple_of(2) {
            let (x, y, z) = (self.fresh.take("x"), self.fresh.take("y"), self.fresh.take("z"));
            let (f, t) = (self.fresh.take("f"), self.fresh.take("t"));
            self.blocks[0].1.splice(0..0, [x.clone(), y.clone(), z.clone()]);
            self.innermost().extend([f.clone(), t.clone()]);
            self.matrix = replace_constants(&self.matrix, &f, &t);
            let apps = vec![app3(&x, &f, &y), app3(&x, &z, &t)];
            self.add_helper(&sym, apps)
        } else {
            let (f, t, y) = (self.fresh.take("f"), self.fresh.take("t"), self.fresh.take("y"));
            self.blocks[0].1.splice(0..0, [f.clone(), t.clone()]);
            self.blocks[1].1.insert(0, y.clone());
            self.matrix = replace_constants(&self.matrix, &f, &t);
            let apps = vec![app3(&f, &y, &t)];
            self.add_helper(&sym, apps)
        }
    }

    fn case_d(&mut self) -> Result<()> {
        let xor = gadget_xor();
        if self.level % 2 == 1 {
            let (f, t) = (self.fresh.take("f"), self.fresh.take("t"));
            self.blocks[0].1.splice(0..0, [f.clone(), t.clone()]);
            self.matrix = replace_constants(&self.matrix, &f, &t);
            self.add_helper(&xor, vec![app2(&xor, &f, &t)])
        } else {
            let (b, b2) = (self.fresh.take("b"), self.fresh.take("b'"));
            self.blocks[0].1.insert(0, b.clone());
            self.innermost().push(b2.clone());
            self.matrix = replace_constants(&self.matrix, &b, &b2);
            self.add_helper(&xor, vec![app2(&xor, &b, &b2)])
        }
    }

    fn case_e(&mut self) -> Result<()> {
        let members = self.members;
        let a = members
            .iter()
            .find(|c| !c.holds(0))
            .expect("set is not 0-valid");
        let b = members
            .iter()
            .find(|c| !c.holds(c.row_count() - 1))
            .expect("set is not 1-valid");
        let c = members
            .iter()
            .find(|c| !is_complementive(c))
            .expect("set is not complementive");
        let full = c.row_count() - 1;
        let s_c = (0..=full)
            .find(|&s| c.holds(s) && !c.holds(full ^ s))
            .expect("not complementive");
        let first_sat = |k: &Arc<Constraint>| k.satisfying_rows().next().expect("not constant");
        let hats = [
            build_hat(a, first_sat(a))?,
            build_hat(b, first_sat(b))?,
            build_hat(c, s_c)?,
        ];
        let (f, t) = (self.fresh.take("f"), self.fresh.take("t"));
        self.innermost().extend([f.clone(), t.clone()]);
        self.matrix = replace_constants(&self.matrix, &f, &t);
        self.matrix.extend(hats.iter().map(|h| h.apply(&f, &t)));
        Ok(())
    }
}

/// Rewrites an expression over `cs` into a constant-free expression over
/// `cs` with the same truth value, read at level `level`.
///
/// The expression is read as a level-`level` prefix (`Σ` for odd, `Π` for
/// even levels, missing trailing blocks empty); the output has exactly the
/// blocks of that prefix, so an input with all `level` blocks keeps its
/// shape. Applications of constant constraints are dropped, and a constant
/// false one makes the result trivially false.
pub fn remove_constants(
    expr: &QuantifiedExpression,
    cs: &[Arc<Constraint>],
    level: usize,
    options: &SearchOptions,
) -> Result<ReductionResult> {
    for c in expr.constraints() {
        if !cs.iter().any(|d| **d == *c) {
            return Err(Error::ForeignConstraint(c.name().to_string()));
        }
    }
    let case = reduction_case(cs)?;
    if !case.supports_level(level) {
        return Err(Error::LevelUnsupported {
            level,
            case: case.letter().to_string(),
        });
    }
    let blocks = expr.padded_blocks(level)?;
    let mut matrix = Vec::new();
    for app in expr.matrix() {
        match app.constraint().constant_value() {
            Some(false) => {
                return Ok(ReductionResult {
                    outcome: Reduced::TriviallyFalse,
                    case_used: case,
                    implementations_used: Vec::new(),
                })
            }
            Some(true) => {}
            None => matrix.push(app.clone()),
        }
    }
    let members = non_constant_members(cs);

    if case == ReductionCase::OneValidNotComp {
        let members_c: Vec<Arc<Constraint>> = members
            .iter()
            .map(|c| Arc::new(complement_constraint(c)))
            .collect();
        let mut work = Work {
            blocks,
            matrix: complement_apps(&matrix),
            level,
            fresh: FreshNames::of(expr),
            members: &members_c,
            options,
            used: Vec::new(),
        };
        work.case_a()?;
        let out = QuantifiedExpression::from_blocks(work.blocks, complement_apps(&work.matrix))?;
        return Ok(ReductionResult {
            outcome: Reduced::Expression(out),
            case_used: case,
            implementations_used: work.used.iter().map(complement_implementation).collect(),
        });
    }

    let mut work = Work {
        blocks,
        matrix,
        level,
        fresh: FreshNames::of(expr),
        members: &members,
        options,
        used: Vec::new(),
    };
    match case {
        ReductionCase::ZeroValidNotComp => work.case_a()?,
        ReductionCase::ZeroValidComp => work.case_c()?,
        ReductionCase::NeitherValidComp => work.case_d()?,
        ReductionCase::NeitherValidNotComp => work.case_e()?,
        ReductionCase::OneValidNotComp => unreachable!("handled above"),
    }
    Ok(ReductionResult {
        outcome: Reduced::Expression(QuantifiedExpression::from_blocks(work.blocks, work.matrix)?),
        case_used: case,
        implementations_used: work.used,
    })
}
