use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::{check_eps, refine, Budget, RInterval, RealError};
use crate::rational::Rat;

type ApproxFn = dyn Fn(&Rat) -> Result<RInterval, RealError> + Send + Sync;

struct Inner {
    approx: Box<ApproxFn>,
    memo: Mutex<HashMap<Rat, RInterval>>,
}

/// A Dedekind real, realized as a generator of rational enclosures.
///
/// `approximate(eps)` returns an interval of width `<= eps` containing the
/// number. Answers are memoized per `eps`, so repeated requests at the same
/// precision observe the same interval.
#[derive(Clone)]
pub struct DReal(Arc<Inner>);

impl DReal {
    /// Wraps an enclosure generator. The closure must return intervals no
    /// wider than the requested `eps`, all containing one common real.
    pub fn from_fn<F>(f: F) -> DReal
    where
        F: Fn(&Rat) -> Result<RInterval, RealError> + Send + Sync + 'static,
    {
        DReal(Arc::new(Inner { approx: Box::new(f), memo: Mutex::new(HashMap::new()) }))
    }

    pub fn approximate(&self, eps: &Rat) -> Result<RInterval, RealError> {
        check_eps(eps)?;
        if let Some(iv) = self.0.memo.lock().unwrap().get(eps) {
            return Ok(iv.clone());
        }
        let iv = (self.0.approx)(eps)?;
        debug_assert!(&iv.width() <= eps, "enclosure {iv} wider than {eps}");
        let mut memo = self.0.memo.lock().unwrap();
        Ok(memo.entry(eps.clone()).or_insert(iv).clone())
    }

    /// Enclosure of width at most `2^-bits`.
    pub fn at_bits(&self, bits: u64) -> Result<RInterval, RealError> {
        self.approximate(&Rat::pow2(-(bits as i64)))
    }
}

impl fmt::Debug for DReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.at_bits(16) {
            Ok(iv) => write!(f, "DReal({iv})"),
            Err(e) => write!(f, "DReal(<{e}>)"),
        }
    }
}

pub fn from_rat(q: Rat) -> DReal {
    let iv = RInterval::point(q);
    DReal::from_fn(move |_| Ok(iv.clone()))
}

pub fn neg(x: &DReal) -> DReal {
    let x = x.clone();
    DReal::from_fn(move |eps| Ok(x.approximate(eps)?.neg()))
}

/// Operands are refined to `eps/2` each, so the endpoint sums stay within `eps`.
pub fn add(x: &DReal, y: &DReal) -> DReal {
    let (x, y) = (x.clone(), y.clone());
    DReal::from_fn(move |eps| {
        let half = eps / Rat::from_integer(2);
        Ok(x.approximate(&half)?.add(&y.approximate(&half)?))
    })
}

pub fn sub(x: &DReal, y: &DReal) -> DReal {
    add(x, &neg(y))
}

/// Product of two reals of either sign.
pub fn mul(x: &DReal, y: &DReal) -> DReal {
    let (x, y) = (x.clone(), y.clone());
    DReal::from_fn(move |eps| refine(eps, Budget::DEFAULT, |p| Ok(x.at_bits(p)?.mul(&y.at_bits(p)?))))
}

/// Product of two non-negative reals. Negative lower endpoints are clamped to
/// zero; an operand whose enclosure lies entirely below zero is an error.
pub fn mul_nonneg(x: &DReal, y: &DReal) -> DReal {
    mul_nonneg_with(x, y, Budget::DEFAULT)
}

pub(crate) fn mul_nonneg_with(x: &DReal, y: &DReal, budget: Budget) -> DReal {
    let (x, y) = (x.clone(), y.clone());
    DReal::from_fn(move |eps| {
        refine(eps, budget, |p| {
            let a = nonneg_part(x.at_bits(p)?)?;
            let b = nonneg_part(y.at_bits(p)?)?;
            Ok(a.mul_nonneg(&b))
        })
    })
}

fn nonneg_part(iv: RInterval) -> Result<RInterval, RealError> {
    if iv.hi().is_negative() {
        return Err(RealError::NegativeOperand(iv));
    }
    Ok(iv.clamp_lo(&Rat::zero()))
}

/// Refines `x` until some enclosure has a positive lower endpoint, which is
/// returned. On failure the tightest enclosure seen is returned instead.
pub fn witness_positive(x: &DReal, budget: Budget) -> Result<Rat, RInterval> {
    let mut last = None;
    for n in 0..=budget.0 as u64 {
        let iv = match x.at_bits(n) {
            Ok(iv) => iv,
            Err(_) => break,
        };
        if iv.lo().is_positive() {
            return Ok(iv.lo().clone());
        }
        if iv.hi().is_negative() {
            return Err(iv);
        }
        last = Some(iv);
    }
    Err(last.unwrap_or_else(|| RInterval::point(Rat::zero())))
}

/// Refines `x` until an enclosure has a non-negative lower endpoint.
pub fn witness_nonneg(x: &DReal, budget: Budget) -> Result<(), RInterval> {
    match witness_sign(x, budget) {
        Ok(Sign::NonNegative) => Ok(()),
        Ok(Sign::NonPositive) => Err(x.at_bits(0).unwrap_or_else(|_| RInterval::point(Rat::zero()))),
        Err(iv) => Err(iv),
    }
}

/// Weak sign of a real, as witnessed by one enclosure lying on one side of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    NonNegative,
    NonPositive,
}

pub fn witness_sign(x: &DReal, budget: Budget) -> Result<Sign, RInterval> {
    let mut last = RInterval::point(Rat::zero());
    for n in 0..=budget.0 as u64 {
        let iv = match x.at_bits(n) {
            Ok(iv) => iv,
            Err(_) => break,
        };
        if !iv.lo().is_negative() {
            return Ok(Sign::NonNegative);
        }
        if !iv.hi().is_positive() {
            return Ok(Sign::NonPositive);
        }
        last = iv;
    }
    Err(last)
}

/// `1/x` for `x > 0`. Positivity must be witnessed within `budget`
/// refinements; inverting swaps the roles of the two endpoints.
pub fn inv_pos(x: &DReal, budget: Budget) -> Result<DReal, RealError> {
    let floor = witness_positive(x, budget).map_err(RealError::NotBoundedAwayFromZero)?;
    let x = x.clone();
    Ok(DReal::from_fn(move |eps| {
        // width(1/X) <= width(X) / floor^2
        let needed = eps * &floor * &floor / Rat::from_integer(2);
        let iv = x.approximate(&needed)?.clamp_lo(&floor);
        let (lo, hi) = iv.into_bounds();
        let inv = RInterval::new(hi.recip().unwrap(), lo.recip().unwrap());
        let bits = crate::rational::precision_bits(eps) + 2;
        Ok(inv.round_outward(bits))
    }))
}

/// Outcome of trying to separate two reals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Apart {
    Less,
    Greater,
    /// No refinement within budget separated them; carries the overlap width
    /// of the last pair of enclosures compared.
    Indistinguishable(Rat),
}

/// Semi-decides `x < y` or `x > y` by refining both until their enclosures
/// are disjoint.
pub fn cmp_apart(x: &DReal, y: &DReal, budget: Budget) -> Apart {
    let mut best_gap: Option<Rat> = None;
    for n in 0..=budget.0 as u64 {
        let (a, b) = match (x.at_bits(n), y.at_bits(n)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => break,
        };
        if a.hi() < b.lo() {
            return Apart::Less;
        }
        if a.lo() > b.hi() {
            return Apart::Greater;
        }
        let overlap = a.hi().min(b.hi()) - a.lo().max(b.lo());
        best_gap = Some(match best_gap {
            Some(g) if g < overlap => g,
            _ => overlap,
        });
    }
    Apart::Indistinguishable(best_gap.unwrap_or_else(Rat::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponentiation::root;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn sqrt2() -> DReal {
        root(&from_rat(r("2")), 2)
    }

    #[test]
    fn signed_product() {
        let m = mul(&neg(&sqrt2()), &sqrt2()).approximate(&r("1/1000000")).unwrap();
        assert!(m.contains(&r("-2")) && m.width() <= r("1/1000000"));
        let z = mul(&sub(&sqrt2(), &sqrt2()), &from_rat(r("-7"))).approximate(&r("1/1000")).unwrap();
        assert!(z.contains(&Rat::zero()));
    }

    #[test]
    fn from_rat_is_exact() {
        assert_eq!(from_rat(r("3")).approximate(&r("1/100")).unwrap(), RInterval::point(r("3")));
        assert_eq!(from_rat(r("1/3")).approximate(&r("1")).unwrap(), RInterval::point(r("1/3")));
        assert_eq!(from_rat(r("0")).at_bits(40).unwrap(), RInterval::point(r("0")));
    }

    #[test]
    fn rejects_non_positive_precision() {
        assert!(matches!(
            from_rat(r("1")).approximate(&r("0")),
            Err(RealError::NonPositivePrecision(_))
        ));
    }

    #[test]
    fn add_neg_examples() {
        let s = add(&from_rat(r("1")), &from_rat(r("2")));
        assert_eq!(s.approximate(&r("1/10")).unwrap(), RInterval::point(r("3")));
        assert_eq!(neg(&from_rat(r("5"))).at_bits(3).unwrap(), RInterval::point(r("-5")));
        let z = add(&sqrt2(), &neg(&sqrt2()));
        let iv = z.at_bits(20).unwrap();
        assert!(iv.contains(&Rat::zero()));
        assert!(iv.width() <= Rat::pow2(-20));
    }

    #[test]
    fn mul_examples() {
        let p = mul_nonneg(&from_rat(r("2")), &from_rat(r("3")));
        assert_eq!(p.approximate(&r("1")).unwrap(), RInterval::point(r("6")));
        let two = mul_nonneg(&sqrt2(), &sqrt2()).at_bits(30).unwrap();
        assert!(two.contains(&r("2")));
        assert!(two.width() <= Rat::pow2(-30));
        let z = mul_nonneg(&from_rat(r("0")), &sqrt2()).approximate(&r("1/4")).unwrap();
        assert!(z.contains(&Rat::zero()) && z.width() <= r("1/4"));
    }

    #[test]
    fn mul_rejects_negative_operand() {
        let p = mul_nonneg(&from_rat(r("-1")), &from_rat(r("3")));
        assert!(matches!(p.at_bits(4), Err(RealError::NegativeOperand(_))));
    }

    #[test]
    fn inv_examples() {
        let half = inv_pos(&from_rat(r("2")), Budget::DEFAULT).unwrap();
        assert!(half.approximate(&r("1/10")).unwrap().contains(&r("1/2")));
        let inv = inv_pos(&sqrt2(), Budget::DEFAULT).unwrap();
        let one = mul_nonneg(&inv, &sqrt2()).at_bits(20).unwrap();
        assert!(one.contains(&r("1")));
        assert!(matches!(
            inv_pos(&from_rat(r("0")), Budget::DEFAULT),
            Err(RealError::NotBoundedAwayFromZero(_))
        ));
        assert!(inv_pos(&from_rat(r("-3")), Budget::DEFAULT).is_err());
    }

    #[test]
    fn inv_is_involutive() {
        let x = sqrt2();
        let back = inv_pos(&inv_pos(&x, Budget::DEFAULT).unwrap(), Budget::DEFAULT).unwrap();
        for bits in [4, 20, 50] {
            assert!(back.at_bits(bits).unwrap().intersects(&x.at_bits(bits).unwrap()));
        }
    }

    #[test]
    fn cmp_examples() {
        let b = Budget::DEFAULT;
        assert_eq!(cmp_apart(&from_rat(r("1")), &from_rat(r("2")), b), Apart::Less);
        assert_eq!(cmp_apart(&sqrt2(), &from_rat(r("3/2")), b), Apart::Less);
        assert_eq!(cmp_apart(&from_rat(r("3/2")), &sqrt2(), b), Apart::Greater);
        assert!(matches!(cmp_apart(&sqrt2(), &sqrt2(), Budget(20)), Apart::Indistinguishable(_)));
    }

    #[test]
    fn cmp_less_orders_lower_sections() {
        // if x < y then every fine enough lower bound of x sits below a lower bound of y
        let (x, y) = (from_rat(r("1/3")), from_rat(r("1/2")));
        assert_eq!(cmp_apart(&x, &y, Budget::DEFAULT), Apart::Less);
        let lx = crate::real::lower_of(&x);
        let ly = crate::real::lower_of(&y);
        for n in 0..10 {
            assert!(lx.bound(n).unwrap() < ly.bound(n).unwrap());
        }
    }

    #[test]
    fn memo_is_observationally_pure() {
        let x = sqrt2();
        let a = x.approximate(&r("1/1000")).unwrap();
        let _ = x.at_bits(60).unwrap();
        assert_eq!(x.approximate(&r("1/1000")).unwrap(), a);
    }

    #[test]
    fn shared_across_threads() {
        let x = mul_nonneg(&sqrt2(), &sqrt2());
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let x = x.clone();
                std::thread::spawn(move || x.at_bits(20 + i).unwrap())
            })
            .collect();
        for h in handles {
            assert!(h.join().unwrap().contains(&r("2")));
        }
    }
}
