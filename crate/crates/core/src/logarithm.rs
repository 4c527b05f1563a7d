//! Logarithms as the inverse of exponentiation: `q < log_b(y)` exactly when
//! `b^q < y`.
//!
//! The search first brackets `log_b(y)` between integers using Bernoulli
//! growth of `b^t`, then narrows the bracket on a dyadic exponent grid. Each
//! narrowing step picks adjacent grid points `q < r` inside the bracket and
//! refines `y` until either `b^q < y` or `y < b^r` is witnessed; because
//! `b^q < b^r` one of the two must eventually show.

use num_bigint::BigInt;

use crate::exponentiation::PowerLadder;
use crate::rational::{bernoulli_k, precision_bits, Rat};
use crate::real::{
    from_rat, inv_pos, neg, sub, witness_positive, Budget, DReal, RInterval, RealError,
};

/// `log_b(y)` for Dedekind `b > 1` and `y > 0`, both witnessed within `budget`.
pub fn log(b: &DReal, y: &DReal, budget: Budget) -> Result<DReal, RealError> {
    let one = from_rat(Rat::one());
    let delta = witness_positive(&sub(b, &one), budget).map_err(|iv| {
        RealError::BaseNotAboveOne(RInterval::new(iv.lo() + Rat::one(), iv.hi() + Rat::one()))
    })?;
    let y_floor = witness_positive(y, budget).map_err(RealError::ArgNotPositive)?;
    let (b, y) = (b.clone(), y.clone());
    Ok(DReal::from_fn(move |eps| log_enclosure(&b, &y, &delta, &y_floor, eps, budget)))
}

/// `log_b(y)` for `0 < b < 1`, as `-log_(1/b)(y)`.
pub fn log_small_base(b: &DReal, y: &DReal, budget: Budget) -> Result<DReal, RealError> {
    let one = from_rat(Rat::one());
    witness_positive(&sub(&one, b), budget).map_err(|iv| {
        RealError::BaseNotBelowOne(RInterval::new(Rat::one() - iv.hi(), Rat::one() - iv.lo()))
    })?;
    let inv = inv_pos(b, budget).map_err(|e| match e {
        RealError::NotBoundedAwayFromZero(iv) => RealError::BaseNotPositive(iv),
        other => other,
    })?;
    Ok(neg(&log(&inv, y, budget)?))
}

fn log_enclosure(
    b: &DReal,
    y: &DReal,
    delta: &Rat,
    y_floor: &Rat,
    eps: &Rat,
    budget: Budget,
) -> Result<RInterval, RealError> {
    let one = Rat::one();
    // relative precision is lost when b is close to one or y is small
    let base_bits = precision_bits(eps) + precision_bits(delta) + precision_bits(&y_floor.min(&one).clone()) + 24;
    let mut extra = 0u64;
    let mut best = None;
    for _ in 0..=budget.0 {
        let bits = base_bits + extra;
        let bb = b.at_bits(bits)?.clamp_lo(&(&one + delta));
        let yy = y.at_bits(bits)?.clamp_lo(y_floor);
        match search(&bb, &yy, delta, eps, bits) {
            Ok(iv) => return Ok(iv),
            Err(partial) => best = Some(partial),
        }
        extra = if extra == 0 { 16 } else { extra * 2 };
    }
    Err(RealError::BudgetExhausted { best: best.unwrap() })
}

/// Runs the bracket-and-narrow search at a fixed working precision. On
/// failure returns the bracket reached so far.
fn search(b: &RInterval, y: &RInterval, delta: &Rat, eps: &Rat, bits: u64) -> Result<RInterval, RInterval> {
    let mut ladder = PowerLadder::new(b.clone(), bits);
    let (lo, hi) = integer_bracket(&ladder, y, delta);

    // bracket (lo, hi) = (m_lo, m_hi) * 2^-k
    let mut k = 0u64;
    let mut m_lo = BigInt::from(lo);
    let mut m_hi = BigInt::from(hi);
    let mut pow_lo = ladder.pow_int(&m_lo);
    let bracket = |m_lo: &BigInt, m_hi: &BigInt, k: u64| {
        let scale = Rat::pow2(-(k as i64));
        RInterval::new(Rat::from_integer(m_lo.clone()) * &scale, Rat::from_integer(m_hi.clone()) * &scale)
    };
    loop {
        let current = bracket(&m_lo, &m_hi, k);
        if &current.width() <= eps {
            return Ok(current);
        }
        let n = &m_hi - &m_lo;
        if n <= BigInt::from(3) {
            k += 1;
            m_lo <<= 1;
            m_hi <<= 1;
            continue;
        }
        let a: BigInt = (&n - 1) / 2;
        let q = &m_lo + &a;
        let r = &q + 1;
        let pow_q = pow_lo.mul_nonneg(&ladder.pow_dyadic(&a, k)).round_outward(bits);
        if pow_q.hi() < y.lo() {
            // b^q < y, so q < log_b(y)
            m_lo = q;
            pow_lo = pow_q;
            continue;
        }
        let pow_r = pow_lo.mul_nonneg(&ladder.pow_dyadic(&(&a + 1), k)).round_outward(bits);
        if y.hi() < pow_r.lo() {
            m_hi = r;
            continue;
        }
        return Err(current);
    }
}

/// Integers `s < log_b(y) < t`. Candidates are tried by doubling; the
/// Bernoulli bound `b^k >= 1 + k·delta` caps the search with a value that is
/// guaranteed to work.
fn integer_bracket(ladder: &PowerLadder, y: &RInterval, delta: &Rat) -> (i64, i64) {
    let one = Rat::one();
    let t_cap = bernoulli_k(&y.hi().max(&one).clone(), delta).expect("delta is positive") as i64;
    let inv_lo = y.lo().recip().expect("y is bounded away from zero");
    let s_cap = bernoulli_k(&inv_lo.max(one.clone()), delta).expect("delta is positive") as i64;

    let above = |t: i64| ladder.pow_int(&BigInt::from(t)).lo() > y.hi();
    let below = |s: i64| ladder.pow_int(&BigInt::from(-s)).hi() < y.lo();

    let t = doubling_search(t_cap, above);
    let s = doubling_search(s_cap, below);
    (-s, t)
}

/// First of `0, 1, 2, 4, …` accepted by `ok`, or `cap` once the candidates reach it.
fn doubling_search(cap: i64, ok: impl Fn(i64) -> bool) -> i64 {
    let mut c = 0i64;
    while c < cap {
        if ok(c) {
            return c;
        }
        c = if c == 0 { 1 } else { c * 2 };
    }
    cap
}
