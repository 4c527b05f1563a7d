use std::fmt;

use crate::rational::Rat;

/// Half-open byte range `[start, end)` in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    Literal(Rat),
    Neg(Box<ExprNode>),
    Add(Box<ExprNode>, Box<ExprNode>),
    Sub(Box<ExprNode>, Box<ExprNode>),
    Mul(Box<ExprNode>, Box<ExprNode>),
    Div(Box<ExprNode>, Box<ExprNode>),
    Pow(Box<ExprNode>, Box<ExprNode>),
    Sqrt(Box<ExprNode>),
    Root(Box<ExprNode>, u64),
    Log(Box<ExprNode>, Box<ExprNode>),
}

/// A node of the expression tree together with the source span it came from.
///
/// Equality is structural and ignores spans.
#[derive(Debug, Clone)]
pub struct ExprNode {
    pub kind: ExprKind,
    pub span: Span,
}

impl ExprNode {
    pub fn new(kind: ExprKind, span: Span) -> ExprNode {
        ExprNode { kind, span }
    }

    /// Builds a node with an empty span, for trees constructed in code.
    pub fn synthetic(kind: ExprKind) -> ExprNode {
        ExprNode::new(kind, Span::new(0, 0))
    }

    pub fn literal(q: Rat) -> ExprNode {
        ExprNode::synthetic(ExprKind::Literal(q))
    }

    /// Exact value of a subtree built only from literals and `+ - * /`, and
    /// `^` with a small integer exponent.
    pub fn const_value(&self) -> Option<Rat> {
        use ExprKind::*;
        match &self.kind {
            Literal(q) => Some(q.clone()),
            Neg(a) => Some(-a.const_value()?),
            Add(a, b) => Some(a.const_value()? + b.const_value()?),
            Sub(a, b) => Some(a.const_value()? - b.const_value()?),
            Mul(a, b) => Some(a.const_value()? * b.const_value()?),
            Div(a, b) => {
                let d = b.const_value()?;
                Some(a.const_value()? / d.recip().map(|_| d)?)
            }
            Pow(a, b) => {
                let base = a.const_value()?;
                let e = b.const_value()?;
                if !e.is_integer() {
                    return None;
                }
                let n: i64 = e.numer().try_into().ok()?;
                if n.unsigned_abs() > 4096 {
                    return None;
                }
                let p = crate::rational::pow_unchecked(&base, n.unsigned_abs());
                if n < 0 {
                    p.recip()
                } else {
                    Some(p)
                }
            }
            Sqrt(_) | Root(..) | Log(..) => None,
        }
    }
}

impl PartialEq for ExprNode {
    fn eq(&self, other: &ExprNode) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Literal(a), Literal(b)) => a == b,
            (Neg(a), Neg(b)) | (Sqrt(a), Sqrt(b)) => a == b,
            (Add(a, b), Add(c, d))
            | (Sub(a, b), Sub(c, d))
            | (Mul(a, b), Mul(c, d))
            | (Div(a, b), Div(c, d))
            | (Pow(a, b), Pow(c, d))
            | (Log(a, b), Log(c, d)) => a == c && b == d,
            (Root(a, n), Root(b, m)) => n == m && a == b,
            _ => false,
        }
    }
}

impl Eq for ExprNode {}

/// Fully parenthesized form; reparsing it yields a structurally equal tree
/// whenever every literal has a terminating decimal expansion.
impl fmt::Display for ExprNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExprKind::*;
        match &self.kind {
            Literal(q) => write_literal(f, q),
            Neg(a) => write!(f, "(-{a})"),
            Add(a, b) => write!(f, "({a} + {b})"),
            Sub(a, b) => write!(f, "({a} - {b})"),
            Mul(a, b) => write!(f, "({a} * {b})"),
            Div(a, b) => write!(f, "({a} / {b})"),
            Pow(a, b) => write!(f, "({a} ^ {b})"),
            Sqrt(a) => write!(f, "sqrt({a})"),
            Root(a, n) => write!(f, "root({a}, {n})"),
            Log(b, a) => write!(f, "log({b}, {a})"),
        }
    }
}

fn write_literal(f: &mut fmt::Formatter<'_>, q: &Rat) -> fmt::Result {
    if q.is_integer() {
        return write!(f, "{q}");
    }
    // denominators of the form 2^i 5^j print as exact decimals
    let mut d = q.denom().clone();
    let mut digits = 0usize;
    let two = num_bigint::BigInt::from(2);
    let five = num_bigint::BigInt::from(5);
    let zero = num_bigint::BigInt::from(0);
    let (mut twos, mut fives) = (0usize, 0usize);
    while &d % &two == zero {
        d /= &two;
        twos += 1;
    }
    while &d % &five == zero {
        d /= &five;
        fives += 1;
    }
    if d != num_bigint::BigInt::from(1) || q.is_negative() {
        return write!(f, "({q})");
    }
    digits += twos.max(fives);
    let scaled = q * &Rat::from_integer(num_traits::pow(num_bigint::BigInt::from(10), digits));
    let s = scaled.numer().to_string();
    let s = format!("{s:0>width$}", width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    write!(f, "{int}.{frac}")
}
