//! Dedekind reals as enclosure generators, one-sided reals as monotone bound
//! streams, and the arithmetic that acts on them.
//!
//! A Dedekind real is never stored as its pair of cut predicates. Instead a
//! [`DReal`] answers, for any rational `eps > 0`, with a rational interval of
//! width at most `eps` that contains the number. Locatedness of the cut is
//! exactly what makes such an answer available; membership `q ∈ L` is then
//! semi-decided by refining until some lower endpoint exceeds `q`.

mod dreal;
mod interval;
mod onesided;
mod render;

use thiserror::Error;

pub use dreal::{
    add, cmp_apart, from_rat, inv_pos, mul, mul_nonneg, neg, sub, witness_nonneg, witness_positive,
    witness_sign, Apart, DReal, Sign,
};
pub use interval::RInterval;
pub use onesided::{lower_of, upper_of, LowerReal, UpperReal};
pub use render::{render_decimal, render_interval};

use crate::rational::Rat;

/// Cap on the number of refinement rounds spent on a semi-decision or an
/// adaptive precision loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget(pub u32);

impl Budget {
    pub const DEFAULT: Budget = Budget(64);
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealError {
    #[error("precision must be strictly positive, got {0}")]
    NonPositivePrecision(Rat),
    #[error("operand is negative (enclosure {0})")]
    NegativeOperand(RInterval),
    #[error("value could not be bounded away from zero (best enclosure {0})")]
    NotBoundedAwayFromZero(RInterval),
    #[error("base could not be shown positive (best enclosure {0})")]
    BaseNotPositive(RInterval),
    #[error("base is below one (enclosure {0})")]
    BaseBelowOne(RInterval),
    #[error("base could not be shown to exceed one (best enclosure {0})")]
    BaseNotAboveOne(RInterval),
    #[error("base could not be shown to lie below one (best enclosure {0})")]
    BaseNotBelowOne(RInterval),
    #[error("argument could not be shown positive (best enclosure {0})")]
    ArgNotPositive(RInterval),
    #[error("exponent is negative (enclosure {0})")]
    NonNegExponentRequired(RInterval),
    #[error("one-sided value is an infinite edge marker")]
    InfiniteEdge,
    #[error("refinement budget exhausted (best enclosure {best})")]
    BudgetExhausted { best: RInterval },
}

/// Adaptive precision loop shared by the enclosure transformers.
///
/// `attempt(p)` evaluates the operation with operands refined to `2^-p`.
/// The result is rounded outward to the same grid and accepted once it is no
/// wider than `eps`; otherwise the guard bits beyond `eps` are doubled.
pub(crate) fn refine<F>(eps: &Rat, budget: Budget, mut attempt: F) -> Result<RInterval, RealError>
where
    F: FnMut(u64) -> Result<RInterval, RealError>,
{
    let target = crate::rational::precision_bits(eps) + 2;
    let mut guard = 4u64;
    let mut best: Option<RInterval> = None;
    for _ in 0..=budget.0 {
        let p = target + guard;
        let iv = attempt(p)?.round_outward(p);
        if &iv.width() <= eps {
            return Ok(iv);
        }
        best = Some(iv);
        guard = if guard < (1 << 20) { guard * 2 } else { guard + (1 << 20) };
    }
    Err(RealError::BudgetExhausted { best: best.expect("budget loop runs at least once") })
}

pub(crate) fn check_eps(eps: &Rat) -> Result<(), RealError> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(RealError::NonPositivePrecision(eps.clone()))
    }
}
