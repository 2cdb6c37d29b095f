//! Constraints, constraint applications and fully quantified expressions.
//!
//! A constraint of arity `k` is stored extensionally as a truth table with
//! `2^k` rows. Row `r` holds the value on the assignment whose bits encode
//! `r` with the **first argument as the most significant bit**, so for a
//! ternary constraint row `0b100 = 4` is the assignment `(1, 0, 0)`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest arity a [`Constraint`] may have.
pub const MAX_ARITY: usize = 16;

/// A Boolean function given by its truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    name: String,
    arity: usize,
    table: Vec<u64>,
}

impl Constraint {
    /// Builds a constraint from a bit string with row 0 first.
    pub fn new(name: impl Into<String>, arity: usize, table: &str) -> Result<Self> {
        let name = name.into();
        check_arity(&name, arity)?;
        let rows = 1usize << arity;
        let found = table.chars().count();
        if found != rows {
            return Err(Error::TableLength {
                name,
                arity,
                expected: rows,
                found,
            });
        }
        let mut bits = Vec::with_capacity(rows);
        for c in table.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::TableLength {
                        name,
                        arity,
                        expected: rows,
                        found,
                    })
                }
            }
        }
        Self::from_rows(name, arity, bits)
    }

    /// Builds a constraint from row values in row order.
    pub fn from_rows(
        name: impl Into<String>,
        arity: usize,
        rows: impl IntoIterator<Item = bool>,
    ) -> Result<Self> {
        let name = name.into();
        check_arity(&name, arity)?;
        let expected = 1usize << arity;
        let mut table = vec![0u64; expected.div_ceil(64)];
        let mut found = 0;
        for (r, v) in rows.into_iter().enumerate() {
            if r < expected && v {
                table[r / 64] |= 1 << (r % 64);
            }
            found = r + 1;
        }
        if found != expected {
            return Err(Error::TableLength {
                name,
                arity,
                expected,
                found,
            });
        }
        Ok(Constraint { name, arity, table })
    }

    /// Builds a constraint by evaluating `f` on every argument tuple.
    pub fn from_fn(
        name: impl Into<String>,
        arity: usize,
        f: impl Fn(&[bool]) -> bool,
    ) -> Result<Self> {
        let name = name.into();
        check_arity(&name, arity)?;
        let rows = (0..1usize << arity).map(|r| f(&row_bits(r, arity)));
        Self::from_rows(name, arity, rows)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn row_count(&self) -> usize {
        1 << self.arity
    }

    /// Value of the table at `row`.
    #[inline]
    pub fn holds(&self, row: usize) -> bool {
        (self.table[row / 64] >> (row % 64)) & 1 == 1
    }

    /// Value on an explicit argument tuple.
    pub fn holds_on(&self, args: &[bool]) -> bool {
        debug_assert_eq!(args.len(), self.arity);
        self.holds(row_index(args))
    }

    pub fn satisfying_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.row_count()).filter(move |&r| self.holds(r))
    }

    /// `Some(v)` when the table is constantly `v`.
    pub fn constant_value(&self) -> Option<bool> {
        let first = self.holds(0);
        (1..self.row_count())
            .all(|r| self.holds(r) == first)
            .then_some(first)
    }

    /// The table as a bit string, row 0 first.
    pub fn table_string(&self) -> String {
        (0..self.row_count())
            .map(|r| if self.holds(r) { '1' } else { '0' })
            .collect()
    }

    /// Same table under another name.
    pub fn renamed(&self, name: impl Into<String>) -> Constraint {
        Constraint {
            name: name.into(),
            arity: self.arity,
            table: self.table.clone(),
        }
    }

    /// True when both constraints have identical truth tables.
    pub fn same_table(&self, other: &Constraint) -> bool {
        self.arity == other.arity && self.table == other.table
    }
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}[{}]", self.name, self.arity, self.table_string())
    }
}

fn check_arity(name: &str, arity: usize) -> Result<()> {
    if arity == 0 {
        return Err(Error::ZeroArity(name.to_string()));
    }
    if arity > MAX_ARITY {
        return Err(Error::ArityTooLarge {
            name: name.to_string(),
            arity,
            max: MAX_ARITY,
        });
    }
    Ok(())
}

/// Value of argument `i` (0-based) in row `row` of an `arity`-ary table.
#[inline]
pub fn row_bit(row: usize, arity: usize, i: usize) -> bool {
    (row >> (arity - 1 - i)) & 1 == 1
}

/// Argument tuple encoded by `row`.
pub fn row_bits(row: usize, arity: usize) -> Vec<bool> {
    (0..arity).map(|i| row_bit(row, arity, i)).collect()
}

/// Row encoding an argument tuple.
#[inline]
pub fn row_index(args: &[bool]) -> usize {
    args.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(String);

impl Var {
    pub fn new(name: impl Into<String>) -> Self {
        Var(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

/// An argument of a constraint application: a variable or a constant bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Arg {
    Var(Var),
    Const(bool),
}

impl Arg {
    pub fn var(name: &str) -> Arg {
        Arg::Var(Var::new(name))
    }

    pub fn as_var(&self) -> Option<&Var> {
        match self {
            Arg::Var(v) => Some(v),
            Arg::Const(_) => None,
        }
    }
}

impl fmt::Debug for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Var(v) => write!(f, "{v}"),
            Arg::Const(b) => write!(f, "{}", *b as u8),
        }
    }
}

impl From<&str> for Arg {
    fn from(s: &str) -> Self {
        match s {
            "0" => Arg::Const(false),
            "1" => Arg::Const(true),
            _ => Arg::var(s),
        }
    }
}

impl From<bool> for Arg {
    fn from(b: bool) -> Self {
        Arg::Const(b)
    }
}

pub type Assignment = HashMap<Var, bool>;

/// A constraint applied to variables and constants, e.g. `OIT(x, x, y)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Application {
    constraint: Arc<Constraint>,
    args: Vec<Arg>,
}

impl Application {
    pub fn new(constraint: Arc<Constraint>, args: Vec<Arg>) -> Result<Self> {
        if args.len() != constraint.arity() {
            return Err(Error::ArgumentCount {
                constraint: constraint.name().to_string(),
                expected: constraint.arity(),
                found: args.len(),
            });
        }
        Ok(Application { constraint, args })
    }

    pub fn constraint(&self) -> &Arc<Constraint> {
        &self.constraint
    }

    pub fn args(&self) -> &[Arg] {
        &self.args
    }

    pub fn vars(&self) -> impl Iterator<Item = &Var> {
        self.args.iter().filter_map(Arg::as_var)
    }

    pub fn has_constants(&self) -> bool {
        self.args.iter().any(|a| matches!(a, Arg::Const(_)))
    }

    /// Resolves every argument through `lookup` and reads the table.
    pub fn evaluate_with(&self, mut lookup: impl FnMut(&Var) -> Option<bool>) -> Result<bool> {
        let mut row = 0usize;
        for arg in &self.args {
            let bit = match arg {
                Arg::Const(b) => *b,
                Arg::Var(v) => lookup(v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?,
            };
            row = (row << 1) | bit as usize;
        }
        Ok(self.constraint.holds(row))
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Result<bool> {
        self.evaluate_with(|v| assignment.get(v).copied())
    }

    /// Same constraint with every argument rewritten by `f`.
    pub fn map_args(&self, mut f: impl FnMut(&Arg) -> Arg) -> Application {
        Application {
            constraint: self.constraint.clone(),
            args: self.args.iter().map(&mut f).collect(),
        }
    }

    /// Same arguments applied to another constraint of equal arity.
    pub fn with_constraint(&self, constraint: Arc<Constraint>) -> Application {
        assert_eq!(constraint.arity(), self.constraint.arity());
        Application {
            constraint,
            args: self.args.clone(),
        }
    }
}

impl fmt::Debug for Application {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Application {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.constraint.name())?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Exists,
    Forall,
}

impl Quantifier {
    pub fn flip(self) -> Quantifier {
        match self {
            Quantifier::Exists => Quantifier::Forall,
            Quantifier::Forall => Quantifier::Exists,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Quantifier::Exists => "E",
            Quantifier::Forall => "A",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantifierBlock {
    pub quantifier: Quantifier,
    pub vars: Vec<Var>,
}

impl QuantifierBlock {
    pub fn new(quantifier: Quantifier, vars: impl IntoIterator<Item = impl Into<Var>>) -> Self {
        QuantifierBlock {
            quantifier,
            vars: vars.into_iter().map(Into::into).collect(),
        }
    }

    pub fn exists(vars: impl IntoIterator<Item = impl Into<Var>>) -> Self {
        Self::new(Quantifier::Exists, vars)
    }

    pub fn forall(vars: impl IntoIterator<Item = impl Into<Var>>) -> Self {
        Self::new(Quantifier::Forall, vars)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Sigma,
    Pi,
}

/// Polarity and number of maximal quantifier blocks of an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrefixShape {
    pub polarity: Polarity,
    pub level: usize,
}

impl PrefixShape {
    pub fn new(polarity: Polarity, level: usize) -> Self {
        PrefixShape { polarity, level }
    }

    /// Polarity of the `Σ_i`/`Π_i` form used at level `i`: `Σ` for odd `i`,
    /// `Π` for even `i`.
    pub fn polarity_for_level(level: usize) -> Polarity {
        if level % 2 == 1 {
            Polarity::Sigma
        } else {
            Polarity::Pi
        }
    }

    /// Whether an expression of this shape is a level-`level` instance once
    /// missing trailing blocks are read as empty.
    pub fn fits_level(&self, level: usize) -> bool {
        level >= 1
            && (self.level == 0
                || (self.level <= level && self.polarity == Self::polarity_for_level(level)))
    }
}

impl fmt::Display for PrefixShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.polarity {
            Polarity::Sigma => "Sigma",
            Polarity::Pi => "Pi",
        };
        write!(f, "{p}_{}", self.level)
    }
}

/// A closed expression `Q_1 X_1 ... Q_n X_n S` where `S` is a conjunction of
/// constraint applications, possibly with constants.
///
/// Construction checks that blocks are nonempty and alternate, that no
/// variable is quantified twice, and that every matrix variable is bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantifiedExpression {
    prefix: Vec<QuantifierBlock>,
    matrix: Vec<Application>,
}

impl QuantifiedExpression {
    pub fn new(prefix: Vec<QuantifierBlock>, matrix: Vec<Application>) -> Result<Self> {
        for (i, block) in prefix.iter().enumerate() {
            if block.vars.is_empty() {
                return Err(Error::EmptyBlock(i));
            }
            if i > 0 && prefix[i - 1].quantifier == block.quantifier {
                return Err(Error::NonAlternatingBlocks(i - 1));
            }
        }
        let mut bound = HashSet::new();
        for v in prefix.iter().flat_map(|b| &b.vars) {
            if !bound.insert(v) {
                return Err(Error::DuplicateVariable(v.to_string()));
            }
        }
        for app in &matrix {
            for v in app.vars() {
                if !bound.contains(v) {
                    return Err(Error::FreeVariable(v.to_string()));
                }
            }
        }
        Ok(QuantifiedExpression { prefix, matrix })
    }

    /// Builds an expression from possibly empty or repeated blocks: empty
    /// blocks are dropped and adjacent blocks with the same quantifier merged.
    pub fn from_blocks(
        blocks: impl IntoIterator<Item = (Quantifier, Vec<Var>)>,
        matrix: Vec<Application>,
    ) -> Result<Self> {
        let mut prefix: Vec<QuantifierBlock> = Vec::new();
        for (q, vars) in blocks {
            if vars.is_empty() {
                continue;
            }
            match prefix.last_mut() {
                Some(last) if last.quantifier == q => last.vars.extend(vars),
                _ => prefix.push(QuantifierBlock { quantifier: q, vars }),
            }
        }
        Self::new(prefix, matrix)
    }

    pub fn prefix(&self) -> &[QuantifierBlock] {
        &self.prefix
    }

    pub fn matrix(&self) -> &[Application] {
        &self.matrix
    }

    /// All variables in prefix order.
    pub fn variables(&self) -> impl Iterator<Item = &Var> {
        self.prefix.iter().flat_map(|b| &b.vars)
    }

    pub fn variable_count(&self) -> usize {
        self.prefix.iter().map(|b| b.vars.len()).sum()
    }

    /// Index of the block binding `v`.
    pub fn block_of(&self, v: &Var) -> Option<usize> {
        self.prefix.iter().position(|b| b.vars.contains(v))
    }

    pub fn quantifier_of(&self, v: &Var) -> Option<Quantifier> {
        self.block_of(v).map(|i| self.prefix[i].quantifier)
    }

    pub fn prefix_shape(&self) -> PrefixShape {
        match self.prefix.first() {
            None => PrefixShape::new(Polarity::Sigma, 0),
            Some(b) => PrefixShape::new(
                match b.quantifier {
                    Quantifier::Exists => Polarity::Sigma,
                    Quantifier::Forall => Polarity::Pi,
                },
                self.prefix.len(),
            ),
        }
    }

    /// Distinct constraints of the matrix in order of first use.
    pub fn constraints(&self) -> Vec<Arc<Constraint>> {
        let mut out: Vec<Arc<Constraint>> = Vec::new();
        for app in &self.matrix {
            if !out.iter().any(|c| **c == **app.constraint()) {
                out.push(app.constraint().clone());
            }
        }
        out
    }

    pub fn has_constants(&self) -> bool {
        self.matrix.iter().any(Application::has_constants)
    }

    /// Blocks as `(quantifier, vars)` pairs, for rebuilding.
    pub fn blocks(&self) -> Vec<(Quantifier, Vec<Var>)> {
        self.prefix
            .iter()
            .map(|b| (b.quantifier, b.vars.clone()))
            .collect()
    }

    /// The blocks of this expression read as a level-`level` prefix: exactly
    /// `level` alternating slots starting with the level's polarity, missing
    /// trailing slots empty.
    pub fn padded_blocks(&self, level: usize) -> Result<Vec<(Quantifier, Vec<Var>)>> {
        let shape = self.prefix_shape();
        if !shape.fits_level(level) {
            return Err(Error::ShapeMismatch {
                shape: shape.to_string(),
                level,
            });
        }
        let first = match PrefixShape::polarity_for_level(level) {
            Polarity::Sigma => Quantifier::Exists,
            Polarity::Pi => Quantifier::Forall,
        };
        let mut q = first;
        let mut out = Vec::with_capacity(level);
        for j in 0..level {
            let vars = self.prefix.get(j).map(|b| b.vars.clone()).unwrap_or_default();
            out.push((q, vars));
            q = q.flip();
        }
        Ok(out)
    }
}
