use num_traits::ToPrimitive;

use super::ast::{ExprKind, ExprNode, Span};
use super::lexer::{tokenize, Tok, Token};
use super::SyntaxError;

// binding powers
const ADD: (u8, u8) = (10, 11);
const MUL: (u8, u8) = (20, 21);
const NEG: u8 = 25;
const POW: (u8, u8) = (30, 29);

/// Parses an expression over rational literals with `+ - * / ^`, unary minus,
/// parentheses and the functions `sqrt(e)`, `root(e, n)`, `log(b, e)` and
/// `pow(b, e)`.
pub fn parse(src: &str) -> Result<ExprNode, SyntaxError> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0 };
    let e = p.expr(0)?;
    match p.peek().tok {
        Tok::End => Ok(e),
        _ => Err(p.error("operator or end of input")),
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> SyntaxError {
        SyntaxError::new(self.peek().span.start, expected)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Span, SyntaxError> {
        if self.peek().tok == tok {
            Ok(self.next().span)
        } else {
            Err(self.error(what))
        }
    }

    fn expr(&mut self, min_bp: u8) -> Result<ExprNode, SyntaxError> {
        let mut lhs = self.prefix()?;
        loop {
            let (bp, make): ((u8, u8), fn(Box<ExprNode>, Box<ExprNode>) -> ExprKind) = match self.peek().tok {
                Tok::Plus => (ADD, ExprKind::Add),
                Tok::Minus => (ADD, ExprKind::Sub),
                Tok::Star => (MUL, ExprKind::Mul),
                Tok::Slash => (MUL, ExprKind::Div),
                Tok::Caret => (POW, ExprKind::Pow),
                _ => break,
            };
            if bp.0 < min_bp {
                break;
            }
            self.next();
            let rhs = self.expr(bp.1)?;
            let span = lhs.span.join(rhs.span);
            lhs = ExprNode::new(make(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<ExprNode, SyntaxError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Num(q) => {
                self.next();
                Ok(ExprNode::new(ExprKind::Literal(q), t.span))
            }
            Tok::Minus => {
                self.next();
                let e = self.expr(NEG)?;
                let span = t.span.join(e.span);
                Ok(ExprNode::new(ExprKind::Neg(Box::new(e)), span))
            }
            Tok::LParen => {
                self.next();
                let mut e = self.expr(0)?;
                let close = self.expect(Tok::RParen, "')'")?;
                e.span = t.span.join(close);
                Ok(e)
            }
            Tok::Ident(name) => {
                self.next();
                self.call(&name, t.span)
            }
            _ => Err(self.error("expression")),
        }
    }

    fn call(&mut self, name: &str, start: Span) -> Result<ExprNode, SyntaxError> {
        if !matches!(name, "sqrt" | "root" | "log" | "pow") {
            return Err(SyntaxError::new(start.start, "function name (sqrt, root, log, pow)"));
        }
        self.expect(Tok::LParen, "'('")?;
        let first = self.expr(0)?;
        let kind = match name {
            "sqrt" => ExprKind::Sqrt(Box::new(first)),
            "root" => {
                self.expect(Tok::Comma, "','")?;
                let t = self.peek().clone();
                let n = match &t.tok {
                    Tok::Num(q) if q.is_integer() && q.is_positive() => q.numer().to_u32().map(u64::from),
                    _ => None,
                };
                let n = n.ok_or_else(|| self.error("positive integer root degree"))?;
                self.next();
                ExprKind::Root(Box::new(first), n)
            }
            _ => {
                self.expect(Tok::Comma, "','")?;
                let second = self.expr(0)?;
                if name == "log" {
                    ExprKind::Log(Box::new(first), Box::new(second))
                } else {
                    ExprKind::Pow(Box::new(first), Box::new(second))
                }
            }
        };
        let close = self.expect(Tok::RParen, "')'")?;
        Ok(ExprNode::new(kind, start.join(close)))
    }
}
