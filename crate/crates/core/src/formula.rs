//! Boolean formulas: parsing, printing, evaluation, and the positive DNF of
//! a positive function.
//!
//! Grammar, loosest to tightest:
//!
//! ```text
//! expr   := term ('|' term)*
//! term   := factor ('&'? factor)*      juxtaposition is conjunction
//! factor := '!' factor | '(' expr ')' | 'x' DIGITS | '0' | '1'
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::monotone;
use crate::table::{TruthTable, MAX_ARITY};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(bool),
    /// Zero-based variable index.
    Var(usize),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

impl Formula {
    pub fn var(i: usize) -> Self {
        Formula::Var(i)
    }

    pub fn literal(i: usize, positive: bool) -> Self {
        if positive {
            Formula::Var(i)
        } else {
            Formula::Not(Box::new(Formula::Var(i)))
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(child: Formula) -> Self {
        Formula::Not(Box::new(child))
    }

    /// Flattening conjunction; a single child is returned as is.
    pub fn and(children: impl IntoIterator<Item = Formula>) -> Self {
        Self::nary(children, true)
    }

    /// Flattening disjunction; a single child is returned as is.
    pub fn or(children: impl IntoIterator<Item = Formula>) -> Self {
        Self::nary(children, false)
    }

    fn nary(children: impl IntoIterator<Item = Formula>, is_and: bool) -> Self {
        let mut flat = Vec::new();
        for c in children {
            match c {
                Formula::And(cs) if is_and => flat.extend(cs),
                Formula::Or(cs) if !is_and => flat.extend(cs),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Formula::Const(is_and),
            1 => flat.pop().unwrap(),
            _ if is_and => Formula::And(flat),
            _ => Formula::Or(flat),
        }
    }

    /// Re-applies flattening bottom-up.
    pub fn flattened(&self) -> Self {
        match self {
            Formula::Const(_) | Formula::Var(_) => self.clone(),
            Formula::Not(c) => Formula::not(c.flattened()),
            Formula::And(cs) => Formula::and(cs.iter().map(Formula::flattened)),
            Formula::Or(cs) => Formula::or(cs.iter().map(Formula::flattened)),
        }
    }

    pub fn is_flat(&self) -> bool {
        match self {
            Formula::Const(_) | Formula::Var(_) => true,
            Formula::Not(c) => c.is_flat(),
            Formula::And(cs) => {
                cs.len() >= 2
                    && cs
                        .iter()
                        .all(|c| !matches!(c, Formula::And(_)) && c.is_flat())
            }
            Formula::Or(cs) => {
                cs.len() >= 2
                    && cs
                        .iter()
                        .all(|c| !matches!(c, Formula::Or(_)) && c.is_flat())
            }
        }
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Formula::Const(_) => None,
            Formula::Var(i) => Some(*i),
            Formula::Not(c) => c.max_var(),
            Formula::And(cs) | Formula::Or(cs) => cs.iter().filter_map(Formula::max_var).max(),
        }
    }

    /// Variable occurrences in left-to-right order.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            Formula::Const(_) => {}
            Formula::Var(i) => out.push(*i),
            Formula::Not(c) => c.collect_vars(out),
            Formula::And(cs) | Formula::Or(cs) => cs.iter().for_each(|c| c.collect_vars(out)),
        }
    }

    /// Every variable occurs at most once.
    pub fn is_read_once(&self) -> bool {
        let mut occ = self.occurrences();
        let before = occ.len();
        occ.sort_unstable();
        occ.dedup();
        occ.len() == before
    }

    /// Nested (linear read-once) shape: a literal, or a binary connective between
    /// a literal and a nested formula. Flattened chains such as `x1 & x2 & t`
    /// count, since they re-associate to the binary form.
    pub fn is_nested(&self) -> bool {
        fn is_literal(f: &Formula) -> bool {
            match f {
                Formula::Var(_) => true,
                Formula::Not(c) => matches!(**c, Formula::Var(_)),
                _ => false,
            }
        }
        fn nested(f: &Formula) -> bool {
            match f {
                Formula::And(cs) | Formula::Or(cs) => {
                    let compound = cs.iter().filter(|c| !is_literal(c)).count();
                    compound == 0
                        || (compound == 1 && cs.iter().filter(|c| !is_literal(c)).all(nested))
                }
                other => is_literal(other),
            }
        }
        matches!(self, Formula::Const(_)) || (self.is_read_once() && nested(self))
    }

    pub fn eval(&self, point: usize) -> bool {
        match self {
            Formula::Const(b) => *b,
            Formula::Var(i) => point >> i & 1 == 1,
            Formula::Not(c) => !c.eval(point),
            Formula::And(cs) => cs.iter().all(|c| c.eval(point)),
            Formula::Or(cs) => cs.iter().any(|c| c.eval(point)),
        }
    }

    /// Truth table at the given arity. Bitwise over whole tables.
    pub(crate) fn table(&self, arity: usize) -> TruthTable {
        match self {
            Formula::Const(b) => TruthTable::constant_unchecked(arity, *b),
            Formula::Var(i) => TruthTable::variable(arity, *i).expect("variable within arity"),
            Formula::Not(c) => c.table(arity).not(),
            Formula::And(cs) => cs
                .iter()
                .fold(TruthTable::constant_unchecked(arity, true), |acc, c| {
                    acc.and(&c.table(arity))
                }),
            Formula::Or(cs) => cs
                .iter()
                .fold(TruthTable::constant_unchecked(arity, false), |acc, c| {
                    acc.or(&c.table(arity))
                }),
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, parent_and: bool) -> fmt::Result {
        match self {
            Formula::Const(b) => write!(f, "{}", *b as u8),
            Formula::Var(i) => write!(f, "x{}", i + 1),
            Formula::Not(c) => {
                f.write_str("!")?;
                match **c {
                    Formula::Const(_) | Formula::Var(_) | Formula::Not(_) => c.write(f, false),
                    _ => {
                        f.write_str("(")?;
                        c.write(f, false)?;
                        f.write_str(")")
                    }
                }
            }
            Formula::And(cs) => {
                let sep = if cs.iter().all(is_atomic) { " " } else { " & " };
                for (k, c) in cs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(sep)?;
                    }
                    c.write(f, true)?;
                }
                Ok(())
            }
            Formula::Or(cs) => {
                if parent_and {
                    f.write_str("(")?;
                }
                for (k, c) in cs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" | ")?;
                    }
                    c.write(f, false)?;
                }
                if parent_and {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

fn is_atomic(f: &Formula) -> bool {
    match f {
        Formula::Const(_) | Formula::Var(_) => true,
        Formula::Not(c) => is_atomic(c),
        _ => false,
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, false)
    }
}

/// A formula together with the number of variables it ranges over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormulaAst {
    arity: usize,
    root: Formula,
}

impl FormulaAst {
    pub fn new(arity: usize, root: Formula) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::ArityTooLarge(arity));
        }
        if let Some(v) = root.max_var() {
            if v >= arity {
                return Err(Error::VariableOutOfRange { var: v, arity });
            }
        }
        Ok(Self {
            arity,
            root: root.flattened(),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn root(&self) -> &Formula {
        &self.root
    }

    pub fn into_root(self) -> Formula {
        self.root
    }

    pub fn eval_to_table(&self) -> TruthTable {
        self.root.table(self.arity)
    }

    pub fn render(&self) -> String {
        self.root.to_string()
    }
}

impl fmt::Display for FormulaAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.root, f)
    }
}

pub fn parse(text: &str, arity: usize) -> Result<FormulaAst> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        arity,
    };
    let root = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    FormulaAst::new(arity, root)
}

pub fn render(ast: &FormulaAst) -> String {
    ast.render()
}

pub fn eval_to_table(ast: &FormulaAst) -> TruthTable {
    ast.eval_to_table()
}

/// DNF whose terms are exactly the minimal ones of a positive function,
/// ordered by ascending point index.
pub fn positive_dnf(f: &TruthTable) -> Result<FormulaAst> {
    let ext = monotone::extremal_sets(f)?;
    let terms = ext
        .minimal_ones
        .iter()
        .map(|u| Formula::and((0..f.arity()).filter(|&j| u.bit(j)).map(Formula::Var)));
    FormulaAst::new(f.arity(), Formula::or(terms))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: usize,
}

impl Parser<'_> {
    fn error(&self, message: String) -> Error {
        Error::Syntax {
            pos: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Formula> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'|') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(Formula::or(terms))
    }

    fn term(&mut self) -> Result<Formula> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'&') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                Some(b'!' | b'(' | b'x' | b'X' | b'0' | b'1') => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(Formula::and(factors))
    }

    fn factor(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(b'!') => {
                self.pos += 1;
                Ok(Formula::not(self.factor()?))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Formula::Const(false))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Formula::Const(true))
            }
            Some(b'x' | b'X') => {
                let start = self.pos;
                self.pos += 1;
                let digits_start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[digits_start..self.pos]).unwrap();
                let index: usize = digits.parse().map_err(|_| Error::Syntax {
                    pos: start,
                    message: "expected a variable index after `x`".into(),
                })?;
                if index == 0 || index > self.arity {
                    return Err(Error::Syntax {
                        pos: start,
                        message: format!("variable x{index} outside 1..={}", self.arity),
                    });
                }
                Ok(Formula::Var(index - 1))
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let a = parse("x1 & (x2 | x3)", 3).unwrap();
        assert_eq!(
            a.root(),
            &Formula::And(vec![
                Formula::Var(0),
                Formula::Or(vec![Formula::Var(1), Formula::Var(2)])
            ])
        );
        let f4 = parse("x1 x2 | x1 x3 | x2 x3 x4", 4).unwrap();
        assert_eq!(
            f4.root(),
            &Formula::Or(vec![
                Formula::And(vec![Formula::Var(0), Formula::Var(1)]),
                Formula::And(vec![Formula::Var(0), Formula::Var(2)]),
                Formula::And(vec![Formula::Var(1), Formula::Var(2), Formula::Var(3)]),
            ])
        );
        let h = parse("!x1 & !x2 | x1 & x2", 2).unwrap();
        assert_eq!(
            h.root(),
            &Formula::Or(vec![
                Formula::And(vec![Formula::literal(0, false), Formula::literal(1, false)]),
                Formula::And(vec![Formula::Var(0), Formula::Var(1)]),
            ])
        );
    }

    #[test]
    fn parse_flattens_and_accepts_tight_juxtaposition() {
        let a = parse("x1x2(x3 & (x4x5))", 5).unwrap();
        assert_eq!(a.root(), &Formula::And((0..5).map(Formula::Var).collect()));
        assert!(a.root().is_flat());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse("x1 & x4", 3),
            Err(Error::Syntax { pos: 5, .. })
        ));
        assert!(matches!(
            parse("x1 & (x2", 3),
            Err(Error::Syntax { pos: 8, .. })
        ));
        assert!(matches!(
            parse("x1 + x2", 3),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(parse("", 3), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("x0", 3), Err(Error::Syntax { .. })));
    }

    #[test]
    fn render_examples() {
        let a = parse("x1 & (x2 | x3)", 3).unwrap();
        assert_eq!(a.render(), "x1 & (x2 | x3)");
        assert_eq!(
            FormulaAst::new(2, Formula::Const(true)).unwrap().render(),
            "1"
        );
        let dnf = parse("x1x2 | x1x3 | x2x3", 3).unwrap();
        assert_eq!(dnf.render(), "x1 x2 | x1 x3 | x2 x3");
        let neg = parse("!(x1 | x2) x3", 3).unwrap();
        assert_eq!(neg.render(), "!(x1 | x2) & x3");
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            parse("x1x2 | x1x3 | x2x3", 3)
                .unwrap()
                .eval_to_table()
                .to_string(),
            "3:E8"
        );
        assert_eq!(
            parse("x1x2 | x1x3 | x2x3x4", 4)
                .unwrap()
                .eval_to_table()
                .to_string(),
            "4:E8A8"
        );
        assert_eq!(
            parse("(x1|x2)&(x3|x4)", 4)
                .unwrap()
                .eval_to_table()
                .to_string(),
            "4:EEE0"
        );
        // unused declared variables are irrelevant
        assert_eq!(parse("x1", 3).unwrap().eval_to_table().to_string(), "3:AA");
    }

    #[test]
    fn positive_dnf_examples() {
        let g3: TruthTable = "3:E8".parse().unwrap();
        assert_eq!(positive_dnf(&g3).unwrap().render(), "x1 x2 | x1 x3 | x2 x3");
        let one = TruthTable::constant(2, true).unwrap();
        assert_eq!(positive_dnf(&one).unwrap().render(), "1");
        let f4: TruthTable = "4:E8A8".parse().unwrap();
        assert_eq!(
            positive_dnf(&f4).unwrap().render(),
            "x1 x2 | x1 x3 | x2 x3 x4"
        );
        let xor: TruthTable = "2:6".parse().unwrap();
        assert_eq!(positive_dnf(&xor), Err(Error::NotPositive));
    }

    #[test]
    fn nested_shape() {
        assert!(parse("x1 & (x2 | !x3)", 3).unwrap().root().is_nested());
        assert!(parse("x1 x2 (x3 | x4)", 4).unwrap().root().is_nested());
        assert!(!parse("(x1 | x2) & (x3 | x4)", 4)
            .unwrap()
            .root()
            .is_nested());
        assert!(!parse("x1 & (x1 | x2)", 2).unwrap().root().is_nested());
    }
}
