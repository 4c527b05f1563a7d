//! Exact rational numbers and the finitary lemmas that live entirely on ℚ:
//! Archimedean search, natural powers, the sandwich lemma, the Bernoulli
//! bound and root bracketing.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::real::RInterval;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatError {
    #[error("step must be strictly positive, got {0}")]
    NonPositiveStep(Rat),
    #[error("base must be non-negative, got {0}")]
    NegativeBase(Rat),
    #[error("empty gap: need q < r, got q = {q}, r = {r}")]
    EmptyGap { q: Rat, r: Rat },
    #[error("precision must be strictly positive, got {0}")]
    NonPositivePrecision(Rat),
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}

/// An arbitrary-precision rational in canonical form: reduced, with a
/// positive denominator. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `numer / denom`. Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Rat {
        Rat(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    /// `2^exp`, for any signed exponent.
    pub fn pow2(exp: i64) -> Rat {
        let p = BigInt::one() << exp.unsigned_abs();
        if exp >= 0 {
            Rat::from_integer(p)
        } else {
            Rat(BigRational::new_raw(BigInt::one(), p))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Rat> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Largest multiple of `2^-bits` that is `<= self`.
    pub fn floor_to_bits(&self, bits: u64) -> Rat {
        let scaled = (self.numer() << bits).div_floor(self.denom());
        Rat::new(scaled, BigInt::one() << bits)
    }

    /// Smallest multiple of `2^-bits` that is `>= self`.
    pub fn ceil_to_bits(&self, bits: u64) -> Rat {
        let scaled = -((-(self.numer() << bits)).div_floor(self.denom()));
        Rat::new(scaled, BigInt::one() << bits)
    }

    pub fn midpoint(&self, other: &Rat) -> Rat {
        (self + other) / Rat::from_integer(2)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

/// Smallest `p >= 0` with `2^-p <= eps`. `eps` must be positive.
pub fn precision_bits(eps: &Rat) -> u64 {
    debug_assert!(eps.is_positive());
    if eps >= &Rat::one() {
        return 0;
    }
    // 1/eps = d/n; start from the bit-length estimate and correct by at most one.
    let n_bits = eps.numer().bits();
    let d_bits = eps.denom().bits();
    let mut p = d_bits.saturating_sub(n_bits);
    while &Rat::pow2(-(p as i64)) > eps {
        p += 1;
    }
    while p > 0 && &Rat::pow2(-(p as i64 - 1)) <= eps {
        p -= 1;
    }
    p
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_integer(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_integer(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `n`, `p/q` and exact decimals `d.ddd`, each with an optional
/// leading minus sign.
impl FromStr for Rat {
    type Err = RatError;

    fn from_str(s: &str) -> Result<Rat, RatError> {
        let err = || RatError::Parse(s.to_string());
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = parse_signed_int(p.trim()).ok_or_else(err)?;
            let q: BigInt = parse_unsigned_int(q.trim()).ok_or_else(err)?;
            if q.is_zero() {
                return Err(err());
            }
            return Ok(Rat::new(p, q));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let value = if let Some((int, frac)) = body.split_once('.') {
            if int.is_empty() || frac.is_empty() {
                return Err(err());
            }
            let i = parse_unsigned_int(int).ok_or_else(err)?;
            let f = parse_unsigned_int(frac).ok_or_else(err)?;
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            Rat::new(i * &scale + f, scale)
        } else {
            Rat::from_integer(parse_unsigned_int(body).ok_or_else(err)?)
        };
        Ok(if neg { -value } else { value })
    }
}

fn parse_unsigned_int(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_signed_int(s: &str) -> Option<BigInt> {
    match s.strip_prefix('-') {
        Some(rest) => parse_unsigned_int(rest).map(|n| -n),
        None => parse_unsigned_int(s),
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// Exact comparison. The order on ℚ is decidable, unlike the order on reals.
pub fn rat_cmp(a: &Rat, b: &Rat) -> Ordering {
    a.cmp(b)
}

/// Least natural `N` with `N·x > y`.
pub fn archimedean_bound(x: &Rat, y: &Rat) -> Result<u64, RatError> {
    if !x.is_positive() {
        return Err(RatError::NonPositiveStep(x.clone()));
    }
    if y.is_negative() {
        return Ok(0);
    }
    // floor(y/x) + 1 is the least N with N·x > y when y >= 0.
    let n: BigInt = (y / x).floor() + 1;
    Ok(n.to_u64().expect("archimedean bound exceeds u64"))
}

/// `x^a` by repeated squaring. `x^0 = 1`.
pub fn nat_pow(x: &Rat, a: u64) -> Result<Rat, RatError> {
    if x.is_negative() {
        return Err(RatError::NegativeBase(x.clone()));
    }
    Ok(pow_unchecked(x, a))
}

pub(crate) fn pow_unchecked(x: &Rat, a: u64) -> Rat {
    Rat(num_traits::pow(x.0.clone(), a as usize))
}

/// A positive rational `s` with `q < s^a < r`.
///
/// Bisects `[0, max(1, r)]` keeping `lo^a <= q` and `hi^a >= r`; the first
/// midpoint whose power lands strictly inside the gap is returned.
pub fn sandwich(q: &Rat, r: &Rat, a: u64) -> Result<Rat, RatError> {
    if q.is_negative() {
        return Err(RatError::NegativeBase(q.clone()));
    }
    if q >= r {
        return Err(RatError::EmptyGap { q: q.clone(), r: r.clone() });
    }
    assert!(a >= 1, "sandwich exponent must be positive");
    let mut lo = Rat::zero();
    let mut hi = if r > &Rat::one() { r.clone() } else { Rat::one() };
    loop {
        let mid = lo.midpoint(&hi);
        let p = pow_unchecked(&mid, a);
        if &p <= q {
            lo = mid;
        } else if &p >= r {
            hi = mid;
        } else {
            return Ok(mid);
        }
    }
}

/// Least positive `k` with `x_hi < 1 + k·delta`.
///
/// By Bernoulli's inequality `(1 + delta)^k >= 1 + k·delta > x_hi`, so every
/// `y <= x_hi` has `y^(1/k) < 1 + delta`.
pub fn bernoulli_k(x_hi: &Rat, delta: &Rat) -> Result<u64, RatError> {
    let k = archimedean_bound(delta, &(x_hi - Rat::one()))?;
    Ok(k.max(1))
}

/// Rational bracket `[l, u]` of `x^(1/b)` with `l^b <= x <= u^b` and
/// `u - l <= eps`, by bisection from `[0, max(1, x)]`.
pub fn rat_root_bracket(x: &Rat, b: u64, eps: &Rat) -> Result<RInterval, RatError> {
    if x.is_negative() {
        return Err(RatError::NegativeBase(x.clone()));
    }
    if !eps.is_positive() {
        return Err(RatError::NonPositivePrecision(eps.clone()));
    }
    assert!(b >= 1, "root degree must be positive");
    if b == 1 || x.is_zero() || x == &Rat::one() {
        return Ok(RInterval::point(x.clone()));
    }
    let mut lo = Rat::zero();
    let mut hi = if x > &Rat::one() { x.clone() } else { Rat::one() };
    while &(&hi - &lo) > eps {
        let mid = lo.midpoint(&hi);
        match pow_unchecked(&mid, b).cmp(x) {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return Ok(RInterval::point(mid)),
        }
    }
    Ok(RInterval::new(lo, hi))
}
