//! The text format for constraint and expression definitions.
//!
//! ```text
//! # comments run to the end of the line
//! constraint OR2 arity 2 := formula (v1 | v2);
//! constraint OIT arity 3 := table 01101000;
//! expr E1 := E x, y ; A z : OR2(x, z), OIT(x, y, 1);
//! ```
//!
//! A table lists `2^arity` bits, row 0 (all arguments 0) first, with the
//! first argument as the most significant bit of the row index. Formulas use
//! `v1..vk` for the arguments, the constants `0` and `1`, and the operators
//! `!`, `&`, `^`, `|`, `->` and `<->`, binding in that order from tightest
//! to loosest; `->` associates to the right.
//!
//! A prefix is a sequence of blocks `E vars` or `A vars`, optionally
//! separated by `;`. Blocks must alternate. `E` and `A` cannot be used as
//! names. Expressions may use constraints defined earlier in the document
//! and the built-in presets; a document definition shadows a preset of the
//! same name.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, ParseError, Result};
use crate::model::{
    Application, Arg, Constraint, QuantifiedExpression, Quantifier, QuantifierBlock, Var,
};
use crate::presets::{is_preset, preset};

const MAX_FORMULA_DEPTH: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Assign,
    Colon,
    Semi,
    Comma,
    LParen,
    RParen,
    Not,
    And,
    Or,
    Xor,
    Implies,
    Iff,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Number(s) => format!("'{s}'"),
            Tok::Assign => "':='".into(),
            Tok::Colon => "':'".into(),
            Tok::Semi => "';'".into(),
            Tok::Comma => "','".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Not => "'!'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Xor => "'^'".into(),
            Tok::Implies => "'->'".into(),
            Tok::Iff => "'<->'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn error_at(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError {
        line,
        column,
        message: message.into(),
    })
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        let mut push = |tok: Tok, len: usize, i: &mut usize, column: &mut usize| {
            out.push(Token {
                tok,
                line: start_line,
                column: start_col,
            });
            *i += len;
            *column += len;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                column += 1;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                let mut j = i;
                while j < chars.len()
                    && (chars[j].is_ascii_alphanumeric() || chars[j] == '_' || chars[j] == '\'')
                {
                    j += 1;
                }
                let word: String = chars[start..j].iter().collect();
                push(Tok::Ident(word), j - start, &mut i, &mut column);
            }
            c if c.is_ascii_digit() => {
                let start = i;
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let word: String = chars[start..j].iter().collect();
                push(Tok::Number(word), j - start, &mut i, &mut column);
            }
            ':' if chars.get(i + 1) == Some(&'=') => push(Tok::Assign, 2, &mut i, &mut column),
            ':' => push(Tok::Colon, 1, &mut i, &mut column),
            ';' => push(Tok::Semi, 1, &mut i, &mut column),
            ',' => push(Tok::Comma, 1, &mut i, &mut column),
            '(' => push(Tok::LParen, 1, &mut i, &mut column),
            ')' => push(Tok::RParen, 1, &mut i, &mut column),
            '!' => push(Tok::Not, 1, &mut i, &mut column),
            '&' => push(Tok::And, 1, &mut i, &mut column),
            '|' => push(Tok::Or, 1, &mut i, &mut column),
            '^' => push(Tok::Xor, 1, &mut i, &mut column),
            '-' if chars.get(i + 1) == Some(&'>') => push(Tok::Implies, 2, &mut i, &mut column),
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                push(Tok::Iff, 3, &mut i, &mut column)
            }
            other => {
                return Err(error_at(line, column, format!("unexpected character {other:?}")));
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

enum Formula {
    Arg(usize),
    Const(bool),
    Not(Box<Formula>),
    Binary(Tok, Box<Formula>, Box<Formula>),
}

impl Formula {
    fn eval(&self, args: &[bool]) -> bool {
        match self {
            Formula::Arg(i) => args[*i],
            Formula::Const(b) => *b,
            Formula::Not(f) => !f.eval(args),
            Formula::Binary(op, a, b) => {
                let (a, b) = (a.eval(args), b.eval(args));
                match op {
                    Tok::And => a && b,
                    Tok::Or => a || b,
                    Tok::Xor => a != b,
                    Tok::Implies => !a || b,
                    Tok::Iff => a == b,
                    _ => unreachable!("binary operators only"),
                }
            }
        }
    }
}

/// A parsed document: constraint and expression definitions in source order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub constraints: Vec<Arc<Constraint>>,
    pub expressions: Vec<(String, QuantifiedExpression)>,
    /// `(line, column)` of each constraint definition.
    pub constraint_positions: Vec<(usize, usize)>,
    /// `(line, column)` of each expression definition.
    pub expression_positions: Vec<(usize, usize)>,
}

impl Document {
    /// A constraint defined in the document, or else a preset.
    pub fn constraint(&self, name: &str) -> Option<Arc<Constraint>> {
        self.constraints
            .iter()
            .find(|c| c.name() == name)
            .cloned()
            .or_else(|| preset(name))
    }

    pub fn expression(&self, name: &str) -> Option<&QuantifiedExpression> {
        self.expressions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e)
    }
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    library: &'a [Arc<Constraint>],
    defined: Vec<Arc<Constraint>>,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, t: &Token, message: impl Into<String>) -> Result<T> {
        Err(error_at(t.line, t.column, message))
    }

    fn expect(&mut self, want: Tok) -> Result<Token> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            self.fail(&t, format!("expected {}, found {}", want.describe(), t.tok.describe()))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            other => self.fail(&t, format!("expected {what}, found {}", other.describe())),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == word => Ok(()),
            other => self.fail(&t, format!("expected '{word}', found {}", other.describe())),
        }
    }

    fn lookup(&self, name: &str) -> Option<Arc<Constraint>> {
        self.defined
            .iter()
            .rev()
            .chain(self.library)
            .find(|c| c.name() == name)
            .cloned()
            .or_else(|| preset(name))
    }

    fn document(&mut self) -> Result<Document> {
        let mut doc = Document::default();
        loop {
            let t = self.peek().clone();
            match &t.tok {
                Tok::Eof => return Ok(doc),
                Tok::Ident(s) if s == "constraint" => {
                    self.next();
                    let c = self.constraint_def()?;
                    if self.defined.iter().any(|d| d.name() == c.name()) {
                        return self.fail(&t, format!("constraint {} is defined twice", c.name()));
                    }
                    let c = Arc::new(c);
                    self.defined.push(c.clone());
                    doc.constraints.push(c);
                    doc.constraint_positions.push((t.line, t.column));
                }
                Tok::Ident(s) if s == "expr" => {
                    self.next();
                    let (name, name_tok) = self.ident("an expression name")?;
                    if doc.expressions.iter().any(|(n, _)| *n == name) {
                        return self.fail(&name_tok, format!("expression {name} is defined twice"));
                    }
                    self.expect(Tok::Assign)?;
                    let e = self.expression_body()?;
                    self.expect(Tok::Semi)?;
                    doc.expressions.push((name, e));
                    doc.expression_positions.push((t.line, t.column));
                }
                other => {
                    return self.fail(
                        &t,
                        format!("expected 'constraint' or 'expr', found {}", other.describe()),
                    )
                }
            }
        }
    }

    fn constraint_def(&mut self) -> Result<Constraint> {
        let (name, name_tok) = self.ident("a constraint name")?;
        if name == "E" || name == "A" {
            return self.fail(&name_tok, format!("{name} is reserved for quantifiers"));
        }
        self.keyword("arity")?;
        let t = self.next();
        let arity = match &t.tok {
            Tok::Number(s) => match s.parse::<usize>() {
                Ok(k) => k,
                Err(_) => return self.fail(&t, format!("arity {s} is too large")),
            },
            other => return self.fail(&t, format!("expected an arity, found {}", other.describe())),
        };
        // validates the arity before any table work
        Constraint::from_fn(&name, arity, |_| false).map_err(|e| error_at(t.line, t.column, e.to_string()))?;
        self.expect(Tok::Assign)?;
        let (kind, kind_tok) = self.ident("'table' or 'formula'")?;
        let c = match kind.as_str() {
            "table" => {
                let mut bits = String::new();
                let first = self.peek().clone();
                while let Tok::Number(s) = &self.peek().tok {
                    bits.push_str(s);
                    self.next();
                }
                if bits.is_empty() {
                    return self.fail(&first, format!("expected a table, found {}", first.tok.describe()));
                }
                if let Some(bad) = bits.chars().find(|&ch| ch != '0' && ch != '1') {
                    return self.fail(&first, format!("table digit {bad:?} is not 0 or 1"));
                }
                Constraint::new(&name, arity, &bits).map_err(|e| error_at(first.line, first.column, e.to_string()))?
            }
            "formula" => {
                let f = self.formula(arity, 0)?;
                Constraint::from_fn(&name, arity, |args| f.eval(args)).expect("arity checked")
            }
            _ => {
                return self.fail(&kind_tok, format!("expected 'table' or 'formula', found '{kind}'"))
            }
        };
        self.expect(Tok::Semi)?;
        Ok(c)
    }

    fn formula(&mut self, arity: usize, depth: usize) -> Result<Formula> {
        let mut left = self.implication(arity, depth)?;
        while self.peek().tok == Tok::Iff {
            self.next();
            let right = self.implication(arity, depth)?;
            left = Formula::Binary(Tok::Iff, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn implication(&mut self, arity: usize, depth: usize) -> Result<Formula> {
        let left = self.binary_level(arity, depth, 0)?;
        if self.peek().tok == Tok::Implies {
            let t = self.next();
            if depth > MAX_FORMULA_DEPTH {
                return self.fail(&t, "formula is nested too deeply");
            }
            let right = self.implication(arity, depth + 1)?;
            return Ok(Formula::Binary(Tok::Implies, Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    /// `|` at level 0, `^` at level 1, `&` at level 2.
    fn binary_level(&mut self, arity: usize, depth: usize, level: usize) -> Result<Formula> {
        const OPS: [Tok; 3] = [Tok::Or, Tok::Xor, Tok::And];
        if level == OPS.len() {
            return self.unary(arity, depth);
        }
        let mut left = self.binary_level(arity, depth, level + 1)?;
        while self.peek().tok == OPS[level] {
            self.next();
            let right = self.binary_level(arity, depth, level + 1)?;
            left = Formula::Binary(OPS[level].clone(), Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self, arity: usize, depth: usize) -> Result<Formula> {
        let t = self.next();
        if depth > MAX_FORMULA_DEPTH {
            return self.fail(&t, "formula is nested too deeply");
        }
        match &t.tok {
            Tok::Not => Ok(Formula::Not(Box::new(self.unary(arity, depth + 1)?))),
            Tok::LParen => {
                let f = self.formula(arity, depth + 1)?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Number(s) if s == "0" || s == "1" => Ok(Formula::Const(s == "1")),
            Tok::Ident(s) => {
                let index = s
                    .strip_prefix('v')
                    .filter(|d| !d.starts_with('0'))
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| (1..=arity).contains(&i));
                match index {
                    Some(i) => Ok(Formula::Arg(i - 1)),
                    None => self.fail(&t, format!("unknown formula variable '{s}', expected v1..v{arity}")),
                }
            }
            other => self.fail(&t, format!("expected a formula, found {}", other.describe())),
        }
    }

    fn expression_body(&mut self) -> Result<QuantifiedExpression> {
        let mut prefix: Vec<QuantifierBlock> = Vec::new();
        let mut bound: HashSet<String> = HashSet::new();
        loop {
            let t = self.peek().clone();
            let q = match &t.tok {
                Tok::Ident(s) if s == "E" => Quantifier::Exists,
                Tok::Ident(s) if s == "A" => Quantifier::Forall,
                _ => break,
            };
            self.next();
            if prefix.last().is_some_and(|b| b.quantifier == q) {
                return self.fail(&t, format!("blocks must alternate, found two '{}' blocks in a row", q.symbol()));
            }
            let mut vars = Vec::new();
            loop {
                let (name, vt) = self.ident("a variable")?;
                if name == "E" || name == "A" {
                    return self.fail(&vt, format!("{name} is reserved for quantifiers"));
                }
                if !bound.insert(name.clone()) {
                    return self.fail(&vt, format!("variable {name} is quantified more than once"));
                }
                vars.push(Var::new(name));
                if self.peek().tok != Tok::Comma {
                    break;
                }
                self.next();
            }
            prefix.push(QuantifierBlock::new(q, vars));
            if self.peek().tok == Tok::Semi
                && matches!(&self.tokens[(self.pos + 1).min(self.tokens.len() - 1)].tok, Tok::Ident(s) if s == "E" || s == "A")
            {
                self.next();
            }
        }
        self.expect(Tok::Colon)?;
        let mut matrix = Vec::new();
        if matches!(self.peek().tok, Tok::Ident(_)) {
            loop {
                matrix.push(self.application(&bound)?);
                if self.peek().tok != Tok::Comma {
                    break;
                }
                self.next();
            }
        }
        Ok(QuantifiedExpression::new(prefix, matrix).expect("checked while parsing"))
    }

    fn application(&mut self, bound: &HashSet<String>) -> Result<Application> {
        let (name, t) = self.ident("a constraint name")?;
        let c = match self.lookup(&name) {
            Some(c) => c,
            None => return self.fail(&t, format!("unknown constraint {name}")),
        };
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        loop {
            let a = self.next();
            match &a.tok {
                Tok::Number(s) if s == "0" || s == "1" => args.push(Arg::Const(s == "1")),
                Tok::Ident(s) if bound.contains(s) => args.push(Arg::var(s)),
                Tok::Ident(s) => {
                    return self.fail(&a, format!("variable {s} occurs in the matrix but not in the prefix"))
                }
                other => {
                    return self.fail(&a, format!("expected a variable, 0 or 1, found {}", other.describe()))
                }
            }
            if self.peek().tok != Tok::Comma {
                break;
            }
            self.next();
        }
        self.expect(Tok::RParen)?;
        if args.len() != c.arity() {
            return self.fail(
                &t,
                format!("{name} expects {} arguments, got {}", c.arity(), args.len()),
            );
        }
        Ok(Application::new(c, args).expect("arity checked"))
    }
}

/// Parses a whole document.
pub fn parse_document(text: &str) -> Result<Document> {
    let mut p = Parser {
        tokens: lex(text)?,
        pos: 0,
        library: &[],
        defined: Vec::new(),
    };
    p.document()
}

/// Parses a bare expression `prefix : matrix`, with an optional trailing
/// `;`. Constraint names resolve in `library` first, then among the presets.
pub fn parse_expression(text: &str, library: &[Arc<Constraint>]) -> Result<QuantifiedExpression> {
    let mut p = Parser {
        tokens: lex(text)?,
        pos: 0,
        library,
        defined: Vec::new(),
    };
    let e = p.expression_body()?;
    if p.peek().tok == Tok::Semi {
        p.next();
    }
    p.expect(Tok::Eof)?;
    Ok(e)
}

/// `E x, y ; A z : OR2(x, z);`
pub fn render_expression(expr: &QuantifiedExpression) -> String {
    let mut out = String::new();
    for (i, b) in expr.prefix().iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        let vars: Vec<&str> = b.vars.iter().map(Var::name).collect();
        let _ = write!(out, "{} {} ", b.quantifier.symbol(), vars.join(", "));
    }
    let apps: Vec<String> = expr.matrix().iter().map(Application::to_string).collect();
    let _ = write!(out, ": {};", apps.join(", "));
    out
}

pub fn render_constraint(c: &Constraint) -> String {
    format!(
        "constraint {} arity {} := table {};",
        c.name(),
        c.arity(),
        c.table_string()
    )
}

pub fn render_document(doc: &Document) -> String {
    let mut out = String::new();
    for c in &doc.constraints {
        out.push_str(&render_constraint(c));
        out.push('\n');
    }
    for (name, e) in &doc.expressions {
        let _ = writeln!(out, "expr {name} := {}", render_expression(e));
    }
    out
}

/// A document holding one expression and the definitions of every
/// constraint it uses that is not a preset.
pub fn render_standalone(name: &str, expr: &QuantifiedExpression) -> String {
    let doc = Document {
        constraints: expr
            .constraints()
            .into_iter()
            .filter(|c| !is_preset(c))
            .collect(),
        expressions: vec![(name.to_string(), expr.clone())],
        ..Document::default()
    };
    render_document(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PrefixShape;
    use crate::presets::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn parse_err(text: &str) -> ParseError {
        match parse_document(text) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn constraint_definitions() {
        let doc = parse_document(
            "constraint OR2 arity 2 := formula (v1 | v2);\nconstraint OIT arity 3 := table 01101000;",
        )
        .unwrap();
        assert_eq!(doc.constraints[0].table_string(), "0111");
        assert_eq!(*doc.constraints[1], *one_in_three());
        assert_eq!(doc.constraint_positions, vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn formula_precedence() {
        let doc = parse_document(
            "constraint F arity 3 := formula v1 | v2 & !v3;\n\
             constraint G arity 3 := formula v1 -> v2 -> v3;\n\
             constraint H arity 2 := formula v1 ^ v2 <-> 1;",
        )
        .unwrap();
        let f = &doc.constraints[0];
        let g = &doc.constraints[1];
        for r in 0..8 {
            let [a, b, c] = [r >> 2 & 1 == 1, r >> 1 & 1 == 1, r & 1 == 1];
            assert_eq!(f.holds(r), a || (b && !c));
            assert_eq!(g.holds(r), !a || (!b || c));
        }
        assert_eq!(doc.constraints[2].table_string(), "0110");
    }

    #[test]
    fn expression_definition() {
        let doc = parse_document(
            "constraint OR2 arity 2 := formula (v1 | v2);\nexpr E1 := E x ; A y : OR2(x, y), OR2(y, 1);",
        )
        .unwrap();
        let e = doc.expression("E1").unwrap();
        assert_eq!(e.prefix_shape(), PrefixShape::new(crate::model::Polarity::Sigma, 2));
        assert_eq!(e.matrix().len(), 2);
        assert_eq!(e.matrix()[1].to_string(), "OR2(y, 1)");
    }

    #[test]
    fn render_examples() {
        let e = parse_expression("A x : EQ2(x, 0)", &[]).unwrap();
        assert_eq!(render_expression(&e), "A x : EQ2(x, 0);");
        let e = parse_expression("A x : ;", &[]).unwrap();
        assert!(e.matrix().is_empty());
        assert_eq!(render_expression(&e), "A x : ;");
        assert_eq!(parse_expression(&render_expression(&e), &[]).unwrap(), e);
        let e = parse_expression(": OR2(0, 1)", &[]).unwrap();
        assert_eq!(render_expression(&e), ": OR2(0, 1);");
    }

    #[test]
    fn diagnostics() {
        let e = parse_err("expr X := E x : NOPE(x);");
        assert_eq!((e.line, e.column), (1, 17));
        assert!(e.message.contains("unknown constraint"));

        let e = parse_err("expr X := E x : OR2(x);");
        assert!(e.message.contains("expects 2 arguments"));

        let e = parse_err("expr X := E x, x : OR2(x, x);");
        assert!(e.message.contains("more than once"));

        let e = parse_err("expr X := E x : OR2(x, y);");
        assert!(e.message.contains("not in the prefix"));
        assert_eq!(e.column, 24);

        let e = parse_err("expr X := E x ; E y : OR2(x, y);");
        assert!(e.message.contains("alternate"));

        let e = parse_err("expr X := E A : ID1(A);");
        assert!(e.message.contains("reserved"));

        let e = parse_err("constraint T arity 2 := table 011;");
        assert!(e.message.contains("rows"));

        let e = parse_err("constraint T arity 0 := table 1;");
        assert!(e.message.contains("at least 1"));

        let e = parse_err("\n  constraint T arity 1 := formula v2;");
        assert_eq!((e.line, e.column), (2, 35));

        let e = parse_err("constraint T arity 1 := table 01;\nconstraint T arity 1 := table 10;");
        assert!(e.message.contains("twice"));

        let e = parse_err("expr X := E x : OR2(x, x) $");
        assert!(e.message.contains("unexpected character"));
    }

    #[test]
    fn shadowing_presets() {
        let doc = parse_document("constraint OR2 arity 2 := table 0001;\nexpr X := E x : OR2(x, x);")
            .unwrap();
        assert_eq!(doc.expression("X").unwrap().matrix()[0].constraint().table_string(), "0001");
    }

    #[test]
    fn deep_nesting_is_an_error() {
        let text = format!("constraint T arity 1 := formula {}v1;", "!".repeat(10_000));
        assert!(parse_document(&text).is_err());
        let text = format!("constraint T arity 1 := formula {}v1;", "(".repeat(10_000));
        assert!(parse_document(&text).is_err());
    }

    #[test]
    fn fuzz_never_panics() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let alphabet = b"constraint expr arity table formula := : ; , ( ) ! & | ^ -> <-> E A x y v1 v2 0 1 01101000 OR2 OIT\n";
        for i in 0..100_000 {
            let len = rng.gen_range(0..48);
            let bytes: Vec<u8> = if i % 2 == 0 {
                (0..len).map(|_| rng.gen()).collect()
            } else {
                (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect()
            };
            let text = String::from_utf8_lossy(&bytes);
            let _ = parse_document(&text);
        }
    }
}
