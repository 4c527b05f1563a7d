//! Brute-force reference implementations for cross-checking the main paths.
//!
//! Nothing here touches the enclosure machinery or the power routines of the
//! other modules; only [`Rat`] arithmetic is shared.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::rational::{Rat, RatError};
use crate::real::RInterval;

fn power(x: &Rat, n: u64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..n {
        acc = acc * x;
    }
    acc
}

fn power_signed(x: &Rat, n: i64) -> Rat {
    let p = power(x, n.unsigned_abs());
    if n < 0 {
        p.recip().expect("zero to a negative power")
    } else {
        p
    }
}

/// Sandwich witness from the uniform grid `s_i = i·v/M` on `[0, v]`.
///
/// `v = r + 1` has `v^a > r`, and `M` is the least natural with
/// `1/M < ε/(a·v^a)` where `ε = (r - q)/2`, so consecutive grid powers differ
/// by less than `ε`. The unique `j` with `s_j^a <= q < s_(j+1)^a` is located
/// (by halving over the index range, as `s_i^a` is strictly increasing) and
/// `s_(j+1)` is returned.
pub fn grid_sandwich(q: &Rat, r: &Rat, a: u64) -> Result<Rat, RatError> {
    if q.is_negative() {
        return Err(RatError::NegativeBase(q.clone()));
    }
    if q >= r {
        return Err(RatError::EmptyGap { q: q.clone(), r: r.clone() });
    }
    assert!(a >= 1, "sandwich exponent must be positive");
    let eps = (r - q) / Rat::from_integer(2);
    let v = r + Rat::one();
    let bound = Rat::from_integer(a) * power(&v, a) / &eps;
    let m: BigInt = bound.floor() + 1;
    let grid = |i: &BigInt| Rat::from_integer(i.clone()) * &v / Rat::from_integer(m.clone());

    // invariant: s_lo^a <= q < s_hi^a
    let mut lo = BigInt::from(0);
    let mut hi = m.clone();
    while &hi - &lo > BigInt::from(1) {
        let mid: BigInt = (&lo + &hi) / 2;
        if &power(&grid(&mid), a) <= q {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(grid(&hi))
}

/// Bracket `[l, u]` of `log_b(y)` with `b^l <= y <= b^u`, by plain bisection
/// on dyadic exponents. With `b = p/q` and `y = s/t`, the test
/// `b^(m/2^k) <= y` is decided on integers as `p^m · t^(2^k) <= s^(2^k) · q^m`
/// (numerator and denominator swap roles when `m < 0`).
pub fn bisect_log(b: &Rat, y: &Rat, eps: &Rat) -> RInterval {
    assert!(b > &Rat::one(), "bisect_log needs b > 1");
    assert!(y.is_positive(), "bisect_log needs y > 0");
    assert!(eps.is_positive(), "bisect_log needs eps > 0");

    // integer bracket
    let mut lo = 0i64;
    let mut hi = 0i64;
    while &power_signed(b, hi) < y {
        hi += 1;
    }
    while &power_signed(b, lo) > y {
        lo -= 1;
    }
    // b^(hi-1) < y when hi > 0, and b^(lo+1) > y otherwise
    if hi > 0 {
        lo = hi - 1;
    } else {
        hi = lo + 1;
    }

    let (p, q) = (b.numer().clone(), b.denom().clone());
    let (mut s, mut t) = (y.numer().clone(), y.denom().clone());
    let (mut m_lo, mut m_hi, mut k) = (BigInt::from(lo), BigInt::from(hi), 0u32);
    let scaled = |m: &BigInt, k: u32| Rat::from_integer(m.clone()) / Rat::from_integer(BigInt::from(1) << k);
    loop {
        let (l, u) = (scaled(&m_lo, k), scaled(&m_hi, k));
        if &u - &l <= *eps {
            return RInterval::new(l, u);
        }
        k += 1;
        m_lo <<= 1;
        m_hi <<= 1;
        // s/t is now y^(2^k)
        s = &s * &s;
        t = &t * &t;
        let mid: BigInt = (&m_lo + &m_hi) / 2;
        let e = mid.abs().to_u64().expect("exponent numerator fits u64");
        let (bn, bd) = if mid < BigInt::from(0) { (&q, &p) } else { (&p, &q) };
        let lhs = int_pow(bn, e) * &t;
        let rhs = &s * int_pow(bd, e);
        match lhs.cmp(&rhs) {
            Ordering::Less => m_lo = mid,
            Ordering::Greater => m_hi = mid,
            Ordering::Equal => {
                let v = scaled(&mid, k);
                return RInterval::new(v.clone(), v);
            }
        }
    }
}

fn int_pow(x: &BigInt, mut e: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}
