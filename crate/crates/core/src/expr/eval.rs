use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::ToPrimitive;
use thiserror::Error;

use super::ast::{ExprKind, ExprNode, Span};
use crate::exponentiation::{pow_rat, pow_real, root};
use crate::logarithm::{log, log_small_base};
use crate::rational::Rat;
use crate::real::{
    add, cmp_apart, from_rat, inv_pos, mul, neg, render_decimal, sub, witness_nonneg, Apart, Budget,
    DReal, RInterval, RealError,
};

/// A failure of a real-number operation, located at the subexpression that
/// raised it.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct DomainError {
    pub span: Span,
    pub error: RealError,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "domain error at {}: {}", self.span, self.error)
    }
}

/// Replaces every subtree with an exact rational value by a literal.
pub fn const_fold(node: &ExprNode) -> ExprNode {
    use ExprKind::*;
    if let Some(q) = node.const_value() {
        return ExprNode::new(Literal(q), node.span);
    }
    let f = |e: &ExprNode| Box::new(const_fold(e));
    let kind = match &node.kind {
        Literal(q) => Literal(q.clone()),
        Neg(a) => Neg(f(a)),
        Add(a, b) => Add(f(a), f(b)),
        Sub(a, b) => Sub(f(a), f(b)),
        Mul(a, b) => Mul(f(a), f(b)),
        Div(a, b) => Div(f(a), f(b)),
        Pow(a, b) => Pow(f(a), f(b)),
        Sqrt(a) => Sqrt(f(a)),
        Root(a, n) => Root(f(a), *n),
        Log(a, b) => Log(f(a), f(b)),
    };
    ExprNode::new(kind, node.span)
}

/// A compiled expression. Errors raised while refining are attributed to the
/// innermost node that produced them.
pub struct Compiled {
    value: DReal,
    span: Span,
    failed_at: Arc<Mutex<Option<Span>>>,
}

impl Compiled {
    pub fn value(&self) -> &DReal {
        &self.value
    }

    pub fn approximate(&self, eps: &Rat) -> Result<RInterval, DomainError> {
        self.failed_at.lock().unwrap().take();
        self.value.approximate(eps).map_err(|e| self.locate(e))
    }

    pub fn render(&self, digits: u32) -> Result<String, DomainError> {
        self.failed_at.lock().unwrap().take();
        render_decimal(&self.value, digits).map_err(|e| self.locate(e))
    }

    fn locate(&self, error: RealError) -> DomainError {
        let span = self.failed_at.lock().unwrap().take().unwrap_or(self.span);
        DomainError { span, error }
    }
}

pub fn compile(node: &ExprNode, budget: Budget) -> Result<Compiled, DomainError> {
    let failed_at = Arc::new(Mutex::new(None));
    let value = Compiler { budget, failed_at: failed_at.clone() }.node(node)?;
    Ok(Compiled { value, span: node.span, failed_at })
}

pub fn eval(node: &ExprNode, eps: &Rat, budget: Budget) -> Result<RInterval, DomainError> {
    compile(node, budget)?.approximate(eps)
}

struct Compiler {
    budget: Budget,
    failed_at: Arc<Mutex<Option<Span>>>,
}

impl Compiler {
    fn node(&self, node: &ExprNode) -> Result<DReal, DomainError> {
        if let Some(q) = node.const_value() {
            return Ok(from_rat(q));
        }
        let value = self.op(node)?;
        let (slot, span) = (self.failed_at.clone(), node.span);
        Ok(DReal::from_fn(move |eps| {
            value.approximate(eps).map_err(|e| {
                slot.lock().unwrap().get_or_insert(span);
                e
            })
        }))
    }

    fn op(&self, node: &ExprNode) -> Result<DReal, DomainError> {
        use ExprKind::*;
        let budget = self.budget;
        let at = |error: RealError| DomainError { span: node.span, error };
        Ok(match &node.kind {
            Literal(q) => from_rat(q.clone()),
            Neg(a) => neg(&self.node(a)?),
            Add(a, b) => add(&self.node(a)?, &self.node(b)?),
            Sub(a, b) => sub(&self.node(a)?, &self.node(b)?),
            Mul(a, b) => mul(&self.node(a)?, &self.node(b)?),
            Div(a, b) => {
                let (x, y) = (self.node(a)?, self.node(b)?);
                mul(&x, &self.reciprocal(&y).map_err(at)?)
            }
            Pow(a, b) => {
                let x = self.node(a)?;
                match b.const_value() {
                    Some(q) => self.pow_const(&x, &q).map_err(at)?,
                    None => {
                        let z = self.node(b)?;
                        pow_real(&x, &z, budget).map_err(at)?
                    }
                }
            }
            Sqrt(a) => self.radical(&self.node(a)?, 2).map_err(at)?,
            Root(a, n) => self.radical(&self.node(a)?, *n).map_err(at)?,
            Log(b, y) => {
                let (b, y) = (self.node(b)?, self.node(y)?);
                self.logarithm(&b, &y).map_err(at)?
            }
        })
    }

    fn logarithm(&self, b: &DReal, y: &DReal) -> Result<DReal, RealError> {
        match cmp_apart(b, &from_rat(Rat::one()), self.budget) {
            Apart::Greater => log(b, y, self.budget),
            Apart::Less => log_small_base(b, y, self.budget),
            Apart::Indistinguishable(_) => Err(RealError::BaseNotAboveOne(b.at_bits(self.budget.0 as u64)?)),
        }
    }

    fn reciprocal(&self, y: &DReal) -> Result<DReal, RealError> {
        match cmp_apart(y, &from_rat(Rat::zero()), self.budget) {
            Apart::Greater => inv_pos(y, self.budget),
            Apart::Less => Ok(neg(&inv_pos(&neg(y), self.budget)?)),
            Apart::Indistinguishable(_) => {
                Err(RealError::NotBoundedAwayFromZero(y.at_bits(self.budget.0 as u64)?))
            }
        }
    }

    /// `x^q` for a rational exponent. Negative bases are allowed for integer
    /// exponents, where the sign is `(-1)^q`.
    fn pow_const(&self, x: &DReal, q: &Rat) -> Result<DReal, RealError> {
        let budget = self.budget;
        if q.is_integer() {
            let odd = (q.numer() % 2u32).to_i32() != Some(0);
            return match cmp_apart(x, &from_rat(Rat::zero()), budget) {
                Apart::Less => {
                    let p = pow_rat(&neg(x), q, budget)?;
                    Ok(if odd { neg(&p) } else { p })
                }
                Apart::Greater => pow_rat(x, q, budget),
                Apart::Indistinguishable(_) if q.is_positive() && !odd => {
                    // even powers are products of the signed value with itself
                    let half = pow_rat(&mul(x, x), &(q / Rat::from_integer(2)), budget)?;
                    Ok(half)
                }
                Apart::Indistinguishable(_) if q.is_positive() => {
                    let rest = &(q - Rat::one()) / Rat::from_integer(2);
                    Ok(mul(x, &pow_rat(&mul(x, x), &rest, budget)?))
                }
                Apart::Indistinguishable(_) => {
                    Err(RealError::NotBoundedAwayFromZero(x.at_bits(budget.0 as u64)?))
                }
            };
        }
        witness_nonneg(x, budget).map_err(RealError::NegativeOperand)?;
        pow_rat(x, q, budget)
    }

    fn radical(&self, x: &DReal, n: u64) -> Result<DReal, RealError> {
        witness_nonneg(x, self.budget).map_err(RealError::NegativeOperand)?;
        Ok(root(x, n))
    }
}
