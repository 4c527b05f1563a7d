//! The exponentiation ladder: natural powers, radicals, signed rational
//! powers and real powers of positive Dedekind bases, plus the one-sided
//! variants where either the exponent or the base is only known from one
//! side.
//!
//! Every operation is an enclosure transformer. The interval kernels below
//! work on outward-rounded dyadic grids; the `DReal` wrappers choose the grid
//! adaptively until the requested width is met.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{precision_bits, Rat};
use crate::real::{
    cmp_apart, from_rat, inv_pos, refine, witness_positive, Apart, Budget, DReal, LowerReal,
    RInterval, RealError, UpperReal,
};

// ---------------------------------------------------------------------------
// interval kernels

/// Largest `l` on the grid `2^-bits` with `l^b <= x`, for `x >= 0`.
fn root_floor(x: &Rat, b: u64, bits: u64) -> Rat {
    if b == 1 {
        return x.floor_to_bits(bits);
    }
    let scaled = (x.numer() << (b * bits)).div_floor(x.denom());
    let r = scaled.nth_root(b as u32);
    Rat::new(r, BigInt::one() << bits)
}

/// Smallest `u` on the grid `2^-bits` with `u^b >= x`, for `x >= 0`.
fn root_ceil(x: &Rat, b: u64, bits: u64) -> Rat {
    if b == 1 {
        return x.ceil_to_bits(bits);
    }
    let n = x.numer() << (b * bits);
    let (q, rem) = n.div_rem(x.denom());
    let scaled = if rem.is_zero() { q } else { q + 1 };
    let mut r = scaled.nth_root(b as u32);
    if num_traits::pow(r.clone(), b as usize) < scaled {
        r += 1;
    }
    Rat::new(r, BigInt::one() << bits)
}

fn nonneg(iv: RInterval) -> Result<RInterval, RealError> {
    if iv.hi().is_negative() {
        return Err(RealError::NegativeOperand(iv));
    }
    Ok(iv.clamp_lo(&Rat::zero()))
}

/// Non-negative interval `[lo, hi]·2^-bits` with integer endpoints. The
/// kernels below round on this grid directly, which keeps big-rational
/// normalization out of the inner loops.
struct Fixed {
    lo: BigInt,
    hi: BigInt,
    bits: u64,
}

impl Fixed {
    fn from_iv(iv: &RInterval, bits: u64) -> Fixed {
        let scale = Rat::pow2(bits as i64);
        Fixed { lo: (iv.lo() * &scale).floor(), hi: (iv.hi() * &scale).ceil(), bits }
    }

    fn one(bits: u64) -> Fixed {
        let one = BigInt::one() << bits;
        Fixed { lo: one.clone(), hi: one, bits }
    }

    fn into_iv(self) -> RInterval {
        let den = BigInt::one() << self.bits;
        RInterval::new(Rat::new(self.lo, den.clone()), Rat::new(self.hi, den))
    }

    fn mul(&self, other: &Fixed) -> Fixed {
        let mask = (BigInt::one() << self.bits) - 1;
        Fixed {
            lo: (&self.lo * &other.lo) >> self.bits,
            hi: (&self.hi * &other.hi + mask) >> self.bits,
            bits: self.bits,
        }
    }

    /// Degree-`b` root, rounded outward on the same grid.
    fn root(&self, b: u64) -> Fixed {
        let shift = self.bits * (b - 1);
        let lo = (&self.lo << shift).nth_root(b as u32);
        let n = &self.hi << shift;
        let mut hi = n.nth_root(b as u32);
        if num_traits::pow(hi.clone(), b as usize) < n {
            hi += 1;
        }
        Fixed { lo, hi, bits: self.bits }
    }

    fn pow(&self, a: &BigInt) -> Fixed {
        let mut acc = Fixed::one(self.bits);
        let mut base = Fixed { lo: self.lo.clone(), hi: self.hi.clone(), bits: self.bits };
        let n = a.bits();
        for i in 0..n {
            if a.bit(i) {
                acc = acc.mul(&base);
            }
            if i + 1 < n {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Powers of two in `b` are taken as repeated square roots so that no
    /// intermediate power explodes.
    fn root_big(&self, b: &BigInt) -> Fixed {
        let twos = b.trailing_zeros().expect("root degree must be positive");
        let odd = (b >> twos).to_u64().filter(|&o| o <= u32::MAX as u64).expect("odd part of root degree exceeds u32");
        let mut r = Fixed { lo: self.lo.clone(), hi: self.hi.clone(), bits: self.bits };
        for _ in 0..twos {
            r = r.root(2);
        }
        if odd > 1 {
            r = r.root(odd);
        }
        r
    }
}

/// `[lo^a, hi^a]` by square-and-multiply, rounding outward after each product.
pub(crate) fn pow_nat_iv(iv: &RInterval, a: &BigInt, bits: u64) -> RInterval {
    Fixed::from_iv(iv, bits).pow(a).into_iv()
}

/// Degree-`b` root of a non-negative interval.
pub(crate) fn root_iv(iv: &RInterval, b: &BigInt, bits: u64) -> RInterval {
    Fixed::from_iv(iv, bits).root_big(b).into_iv()
}

fn invert_iv(iv: &RInterval, bits: u64) -> RInterval {
    let lo = iv.hi().recip().expect("inverting an interval touching zero");
    let hi = iv.lo().recip().expect("inverting an interval touching zero");
    RInterval::new(lo, hi).round_outward(bits)
}

/// `x^q` on a non-negative interval (strictly positive when `q < 0`), with
/// `q = a/b` in lowest terms evaluated as `(x^(1/b))^a`. For `q < 0` the base
/// is inverted first, so rounding can never push a divisor down to zero.
pub(crate) fn pow_rat_iv(iv: &RInterval, q: &Rat, bits: u64) -> RInterval {
    if q.is_zero() {
        return RInterval::point(Rat::one());
    }
    let iv = if q.is_negative() { invert_iv(iv, bits) } else { iv.clone() };
    let mut x = Fixed::from_iv(&iv, bits);
    if !q.is_integer() {
        x = x.root_big(q.denom());
    }
    x.pow(&q.numer().abs()).into_iv()
}

// ---------------------------------------------------------------------------
// Dedekind operations

/// `x^a` for `x >= 0`. `x^0 = 1` for every `x`.
pub fn pow_nat(x: &DReal, a: u64) -> DReal {
    if a == 0 {
        return from_rat(Rat::one());
    }
    if a == 1 {
        return x.clone();
    }
    let x = x.clone();
    DReal::from_fn(move |eps| {
        refine(eps, Budget::DEFAULT, |p| Ok(pow_nat_iv(&nonneg(x.at_bits(p)?)?, &BigInt::from(a), p)))
    })
}

/// `x^(1/b)` for `x >= 0`.
pub fn root(x: &DReal, b: u64) -> DReal {
    assert!(b >= 1 && b <= u32::MAX as u64, "root degree must lie in 1..=u32::MAX");
    if b == 1 {
        return x.clone();
    }
    let x = x.clone();
    DReal::from_fn(move |eps| {
        refine(eps, Budget::DEFAULT, |p| Ok(root_iv(&nonneg(x.at_bits(p)?)?, &BigInt::from(b), p)))
    })
}

const MAX_ODD_ROOT: u64 = 64;

/// `x^q` for rational `q`. Negative exponents go through the inverse,
/// `x^-q = (x^q)^-1`, which needs `x > 0` witnessed within `budget`.
pub fn pow_rat(x: &DReal, q: &Rat, budget: Budget) -> Result<DReal, RealError> {
    if q.is_zero() {
        return Ok(from_rat(Rat::one()));
    }
    if q.is_negative() {
        let pos = pow_rat(x, &-q, budget)?;
        return inv_pos(&pos, budget);
    }
    if let Some(a) = q.numer().to_u64().filter(|_| q.is_integer()) {
        return Ok(pow_nat(x, a));
    }
    // a large odd root degree is far costlier than bracketing the exponent
    // between dyadics, which needs only square roots
    let odd = q.denom() >> q.denom().trailing_zeros().unwrap_or(0);
    if odd > BigInt::from(MAX_ODD_ROOT) && witness_positive(x, budget).is_ok() {
        return pow_real(x, &from_rat(q.clone()), budget);
    }
    let (x, q) = (x.clone(), q.clone());
    Ok(DReal::from_fn(move |eps| {
        refine(eps, budget, |p| Ok(pow_rat_iv(&nonneg(x.at_bits(p)?)?, &q, p)))
    }))
}

/// `x^ζ` for a positive Dedekind base and any Dedekind exponent.
///
/// Each round encloses `x` in `[l, u]` with `l > 0` and `ζ` in a dyadic
/// bracket `[a, b]`, then takes the hull of the four corner powers. Since
/// `s ↦ s^q` and `q ↦ s^q` are monotone in each argument on either side of
/// one, the corners bound the whole box, whether `[l, u]` lies below one,
/// above one, or straddles it.
pub fn pow_real(x: &DReal, zeta: &DReal, budget: Budget) -> Result<DReal, RealError> {
    let floor = witness_positive(x, budget).map_err(RealError::BaseNotPositive)?;
    let (x, zeta) = (x.clone(), zeta.clone());
    let attempt = move |p: u64| {
        let base = x.at_bits(p)?.clamp_lo(&floor);
        // exponent error is amplified by the 2^zbits-fold power inside pow_rat_iv
        let zbits = p / 2;
        let exp = zeta.at_bits(zbits)?.round_outward(zbits);
        Ok(corner_hull(&base, &exp, p))
    };
    Ok(DReal::from_fn(move |eps| {
        let target = precision_bits(eps) + 2;
        // absolute precision on a large result costs its magnitude in bits, twice over
        // since the exponent only gets half of the working bits
        let magnitude = attempt(16)?.hi().ceil().bits();
        refine_from(eps, budget, target + 8 + 2 * magnitude, &attempt)
    }))
}

fn corner_hull(base: &RInterval, exp: &RInterval, bits: u64) -> RInterval {
    let bases: &[&Rat] = if base.lo() == base.hi() { &[base.lo()] } else { &[base.lo(), base.hi()] };
    let exps: &[&Rat] = if exp.lo() == exp.hi() { &[exp.lo()] } else { &[exp.lo(), exp.hi()] };
    let mut hull: Option<RInterval> = None;
    for s in bases {
        for q in exps {
            let v = pow_rat_iv(&RInterval::point((*s).clone()), q, bits);
            hull = Some(match hull {
                None => v,
                Some(h) => h.hull(&v),
            });
        }
    }
    hull.expect("at least one corner")
}

/// Like [`refine`], but starting with `guard` extra bits.
fn refine_from<F>(eps: &Rat, budget: Budget, guard: u64, mut attempt: F) -> Result<RInterval, RealError>
where
    F: FnMut(u64) -> Result<RInterval, RealError>,
{
    refine(eps, budget, |p| attempt(p + guard))
}

// ---------------------------------------------------------------------------
// one-sided variants

fn base_below_one(x: &DReal, budget: Budget) -> Result<(), RealError> {
    if cmp_apart(x, &from_rat(Rat::one()), budget) == Apart::Less {
        return Err(RealError::BaseBelowOne(x.at_bits(budget.0 as u64)?));
    }
    Ok(())
}

/// `x^ζ` for Dedekind `x >= 1` and a lower exponent `ζ`: the lower real whose
/// bounds are lower endpoints of `x^(q_n)` for the bounds `q_n` of `ζ`.
pub fn pow_onesided_exp_lower(x: &DReal, zeta: &LowerReal, budget: Budget) -> Result<LowerReal, RealError> {
    base_below_one(x, budget)?;
    let x = x.clone();
    Ok(match zeta {
        // the empty section lifts to the bottom of [0, ∞]
        LowerReal::NegInfinity => LowerReal::constant(Rat::zero()),
        LowerReal::PosInfinity => LowerReal::from_fn(move |n| {
            Ok(pow_nat(&x, n).at_bits(n)?.lo().clone())
        }),
        LowerReal::Stream(_) => {
            let zeta = zeta.clone();
            LowerReal::from_fn(move |n| {
                let q = zeta.bound(n)?;
                Ok(pow_rat(&x, &q, budget)?.at_bits(n)?.lo().clone())
            })
        }
    })
}

/// Upper-exponent counterpart of [`pow_onesided_exp_lower`].
pub fn pow_onesided_exp_upper(x: &DReal, zeta: &UpperReal, budget: Budget) -> Result<UpperReal, RealError> {
    base_below_one(x, budget)?;
    let x = x.clone();
    Ok(match zeta {
        UpperReal::PosInfinity => UpperReal::PosInfinity,
        UpperReal::NegInfinity => UpperReal::from_fn(move |n| {
            let q = Rat::from_integer(-(n as i64) - 1);
            Ok(pow_rat(&x, &q, budget)?.at_bits(n)?.hi().clone())
        }),
        UpperReal::Stream(_) => {
            let zeta = zeta.clone();
            UpperReal::from_fn(move |n| {
                let q = zeta.bound(n)?;
                Ok(pow_rat(&x, &q, budget)?.at_bits(n)?.hi().clone())
            })
        }
    })
}

fn exponent_negative(zeta: &DReal, budget: Budget) -> Result<(), RealError> {
    if cmp_apart(zeta, &from_rat(Rat::zero()), budget) == Apart::Less {
        return Err(RealError::NonNegExponentRequired(zeta.at_bits(budget.0 as u64)?));
    }
    Ok(())
}

/// `s^ζ` for a positive rational `s`; bases below one go through the inverse
/// as `((1/s)^ζ)^-1`.
fn rational_base_power(s: &Rat, zeta: &DReal, budget: Budget) -> Result<DReal, RealError> {
    if s >= &Rat::one() {
        pow_real(&from_rat(s.clone()), zeta, budget)
    } else {
        let inv = pow_real(&from_rat(s.recip().unwrap()), zeta, budget)?;
        inv_pos(&inv, budget)
    }
}

/// `x^ζ` for a lower base `x > 0` and Dedekind `ζ >= 0`: bounds are lower
/// endpoints of `s_n^ζ` over the rational bounds `s_n` of `x`.
pub fn pow_onesided_base_lower(x: &LowerReal, zeta: &DReal, budget: Budget) -> Result<LowerReal, RealError> {
    exponent_negative(zeta, budget)?;
    let zeta = zeta.clone();
    let raw: Box<dyn Fn(u64) -> Result<Rat, RealError> + Send + Sync> = match x {
        LowerReal::NegInfinity => return Err(RealError::InfiniteEdge),
        LowerReal::PosInfinity => Box::new(|n| Ok(Rat::from_integer(n + 1))),
        LowerReal::Stream(_) => {
            let x = x.clone();
            Box::new(move |n| x.bound(n))
        }
    };
    Ok(LowerReal::from_fn(move |n| {
        let s = raw(n)?;
        if !s.is_positive() {
            return Ok(Rat::zero());
        }
        Ok(rational_base_power(&s, &zeta, budget)?.at_bits(n)?.lo().clone())
    }))
}

/// Upper-base counterpart of [`pow_onesided_base_lower`].
pub fn pow_onesided_base_upper(x: &UpperReal, zeta: &DReal, budget: Budget) -> Result<UpperReal, RealError> {
    exponent_negative(zeta, budget)?;
    let zeta = zeta.clone();
    match x {
        UpperReal::NegInfinity => Err(RealError::InfiniteEdge),
        UpperReal::PosInfinity => Ok(UpperReal::PosInfinity),
        UpperReal::Stream(_) => {
            let x = x.clone();
            Ok(UpperReal::from_fn(move |n| {
                let s = x.bound(n)?;
                if !s.is_positive() {
                    return Err(RealError::BaseNotPositive(RInterval::point(s)));
                }
                Ok(rational_base_power(&s, &zeta, budget)?.at_bits(n)?.hi().clone())
            }))
        }
    }
}

// ---------------------------------------------------------------------------
// dyadic powers for the logarithm search

/// Enclosures of `b^(m/2^k)` for a fixed base enclosure, built from the
/// exponent laws: the integer part is a natural power (inverted when
/// negative) and each set fractional bit `2^-j` contributes a factor
/// `b^(2^-j)`, the `j`-fold square root of `b`.
pub struct PowerLadder {
    base: RInterval,
    bits: u64,
    roots: Vec<RInterval>,
}

impl PowerLadder {
    /// `base` must be bounded below by a positive rational.
    pub fn new(base: RInterval, bits: u64) -> PowerLadder {
        assert!(base.lo().is_positive(), "ladder base must be positive");
        PowerLadder { roots: vec![base.clone()], base, bits }
    }

    fn root(&mut self, j: usize) -> &RInterval {
        while self.roots.len() <= j {
            let prev = self.roots.last().unwrap();
            let next = RInterval::new(root_floor(prev.lo(), 2, self.bits), root_ceil(prev.hi(), 2, self.bits));
            self.roots.push(next);
        }
        &self.roots[j]
    }

    /// `b^n` for an integer `n`.
    pub fn pow_int(&self, n: &BigInt) -> RInterval {
        let p = pow_nat_iv(&self.base, &n.abs(), self.bits);
        if n.is_negative() {
            invert_iv(&p, self.bits)
        } else {
            p
        }
    }

    /// `b^(m / 2^k)`.
    pub fn pow_dyadic(&mut self, m: &BigInt, k: u64) -> RInterval {
        let (int, frac) = m.div_mod_floor(&(BigInt::one() << k));
        let mut acc = self.pow_int(&int);
        for j in 1..=k {
            if frac.bit(k - j) {
                let f = self.root(j as usize).clone();
                acc = acc.mul_nonneg(&f).round_outward(self.bits);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::nat_pow;
    use crate::real::{lower_of, mul_nonneg, upper_of};

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn q(s: &str) -> DReal {
        from_rat(r(s))
    }

    const B: Budget = Budget::DEFAULT;

    #[test]
    fn integer_roots_bracket_exactly() {
        for (x, b) in [("2", 2u64), ("10", 3), ("1/7", 5), ("0", 2), ("81", 4)] {
            let x = r(x);
            for bits in [0u64, 3, 17, 60] {
                let lo = root_floor(&x, b, bits);
                let hi = root_ceil(&x, b, bits);
                assert!(nat_pow(&lo, b).unwrap() <= x);
                assert!(nat_pow(&hi, b).unwrap() >= x);
                assert!(&hi - &lo <= Rat::pow2(-(bits as i64)));
                let step = Rat::pow2(-(bits as i64));
                assert!(nat_pow(&(&lo + &step), b).unwrap() > x, "floor root not maximal");
            }
        }
    }

    #[test]
    fn pow_nat_examples() {
        assert_eq!(pow_nat(&q("2"), 3).approximate(&r("1")).unwrap(), RInterval::point(r("8")));
        let s2 = root(&q("2"), 2);
        let two = pow_nat(&s2, 2).at_bits(30).unwrap();
        assert!(two.contains(&r("2")) && two.width() <= Rat::pow2(-30));
        assert_eq!(pow_nat(&q("-7"), 0).at_bits(5).unwrap(), RInterval::point(r("1")));
        assert_eq!(pow_nat(&s2, 0).at_bits(5).unwrap(), RInterval::point(r("1")));
    }

    #[test]
    fn root_examples() {
        assert!(root(&q("4"), 2).at_bits(20).unwrap().contains(&r("2")));
        let iv = root(&q("2"), 2).at_bits(50).unwrap();
        assert!(nat_pow(iv.lo(), 2).unwrap() <= r("2") && nat_pow(iv.hi(), 2).unwrap() >= r("2"));
        assert!(iv.width() <= Rat::pow2(-50));
        assert!(root(&q("0"), 7).at_bits(10).unwrap().contains(&Rat::zero()));
    }

    #[test]
    fn root_inverts_power() {
        let x = q("5/3");
        for b in [2u64, 3, 8] {
            let back = pow_nat(&root(&x, b), b).at_bits(40).unwrap();
            assert!(back.contains(&r("5/3")));
            let back = root(&pow_nat(&x, b), b).at_bits(40).unwrap();
            assert!(back.contains(&r("5/3")));
        }
    }

    #[test]
    fn pow_rat_examples() {
        let v = pow_rat(&q("4"), &r("3/2"), B).unwrap().at_bits(20).unwrap();
        assert!(v.contains(&r("8")));
        let v = pow_rat(&q("2"), &r("-1"), B).unwrap().at_bits(10).unwrap();
        assert!(v.contains(&r("1/2")));
        let v = pow_rat(&q("9"), &r("1/2"), B).unwrap().at_bits(10).unwrap();
        assert!(v.contains(&r("3")));
        assert!(matches!(
            pow_rat(&q("0"), &r("-1/2"), B),
            Err(RealError::NotBoundedAwayFromZero(_))
        ));
    }

    #[test]
    fn pow_rat_with_large_odd_denominator() {
        // 3^(499999/1000000) without a root of degree 5^6
        let v = pow_rat(&q("3"), &r("499999/1000000"), B).unwrap().at_bits(40).unwrap();
        let below = pow_rat(&q("3"), &r("1/2"), B).unwrap().at_bits(40).unwrap();
        assert!(v.hi() <= below.hi());
        assert!(v.width() <= Rat::pow2(-40));
        assert!(v.lo() > &r("1.7320"));
    }

    #[test]
    fn pow_rat_is_representative_independent() {
        // a/b and ak/bk name the same power
        let x = q("7/5");
        let a = pow_rat(&x, &r("2/3"), B).unwrap().at_bits(40).unwrap();
        let b = pow_rat_iv(&RInterval::point(r("7/5")), &r("2/3"), 60);
        assert!(a.intersects(&b));
        let via_nat = root(&pow_nat(&x, 2), 3).at_bits(40).unwrap();
        assert!(a.intersects(&via_nat));
    }

    #[test]
    fn pow_real_examples() {
        let v = pow_real(&q("2"), &q("3"), B).unwrap().at_bits(10).unwrap();
        assert!(v.contains(&r("8")));
        for z in ["0", "-3/7", "5", "-100"] {
            let v = pow_real(&q("1"), &q(z), B).unwrap().at_bits(20).unwrap();
            assert!(v.contains(&r("1")), "1^{z}");
        }
    }

    #[test]
    fn pow_real_with_irrational_exponent() {
        // 2^1.414 < 2^sqrt2 < 2^1.415, checked as mid^1000 vs 2^1414 and 2^1415
        let s2 = root(&q("2"), 2);
        let v = pow_real(&q("2"), &s2, B).unwrap().at_bits(20).unwrap();
        assert!(v.width() <= Rat::pow2(-20));
        let mid = v.midpoint();
        let m1000 = nat_pow(&mid, 1000).unwrap();
        assert!(m1000 > nat_pow(&r("2"), 1414).unwrap());
        assert!(m1000 < nat_pow(&r("2"), 1415).unwrap());
    }

    #[test]
    fn pow_real_base_straddling_one() {
        // x = 1 + sqrt2 - sqrt2 never separates from 1
        let s2 = root(&q("2"), 2);
        let x = crate::real::add(&q("1"), &crate::real::sub(&s2, &s2));
        let v = pow_real(&x, &q("-5/2"), B).unwrap().at_bits(30).unwrap();
        assert!(v.contains(&r("1")));
    }

    #[test]
    fn pow_real_rejects_non_positive_base() {
        assert!(matches!(pow_real(&q("0"), &q("1/2"), Budget(10)), Err(RealError::BaseNotPositive(_))));
        assert!(matches!(pow_real(&q("-2"), &q("1/2"), B), Err(RealError::BaseNotPositive(_))));
    }

    #[test]
    fn exponent_and_base_monotonicity() {
        let s = q("3/2");
        let lo = pow_rat(&s, &r("1/3"), B).unwrap();
        let hi = pow_rat(&s, &r("1/2"), B).unwrap();
        assert_eq!(cmp_apart(&lo, &hi, B), Apart::Less);
        let s = q("2/3");
        let lo = pow_rat(&s, &r("1/3"), B).unwrap();
        let hi = pow_rat(&s, &r("1/2"), B).unwrap();
        assert_eq!(cmp_apart(&lo, &hi, B), Apart::Greater);
        let a = pow_real(&q("2"), &q("7/3"), B).unwrap();
        let b = pow_real(&q("201/100"), &q("7/3"), B).unwrap();
        assert_eq!(cmp_apart(&a, &b, B), Apart::Less);
    }

    #[test]
    fn base_product_law_on_irrational_exponent() {
        let z = root(&q("3"), 2);
        let lhs = pow_real(&q("6"), &z, B).unwrap();
        let rhs = mul_nonneg(&pow_real(&q("2"), &z, B).unwrap(), &pow_real(&q("3"), &z, B).unwrap());
        for bits in [10, 30] {
            assert!(lhs.at_bits(bits).unwrap().intersects(&rhs.at_bits(bits).unwrap()));
        }
    }

    #[test]
    fn onesided_exponent_examples() {
        let z = LowerReal::from_prefix(vec![r("0"), r("1")]);
        let v = pow_onesided_exp_lower(&q("2"), &z, B).unwrap();
        assert_eq!(v.bound(10).unwrap(), r("2"));

        let v = pow_onesided_exp_lower(&q("1"), &lower_of(&q("-3/2")), B).unwrap();
        assert_eq!(v.bound(6).unwrap(), r("1"));

        let v = pow_onesided_exp_lower(&q("4"), &lower_of(&q("1/2")), B).unwrap();
        let top = v.bound(20).unwrap();
        assert!(top <= r("2") && &r("2") - &top <= Rat::pow2(-15));

        let u = pow_onesided_exp_upper(&q("4"), &upper_of(&q("1/2")), B).unwrap();
        let bottom = u.bound(20).unwrap();
        assert!(bottom >= r("2") && &bottom - &r("2") <= Rat::pow2(-15));

        assert!(matches!(
            pow_onesided_exp_lower(&q("1/2"), &z, B),
            Err(RealError::BaseBelowOne(_))
        ));
    }

    #[test]
    fn onesided_exponent_stream_is_monotone() {
        let s2 = root(&q("2"), 2);
        let v = pow_onesided_exp_lower(&q("3"), &lower_of(&s2), B).unwrap();
        let bounds: Vec<Rat> = v.bounds().take(12).map(Result::unwrap).collect();
        for w in bounds.windows(2) {
            assert!(w[0] <= w[1]);
        }
        // sup approaches 3^sqrt2 = 4.7288...
        assert!(bounds[11] > r("4.72") && bounds[11] < r("4.73"));
    }

    #[test]
    fn onesided_exponent_edges() {
        let v = pow_onesided_exp_lower(&q("2"), &LowerReal::NegInfinity, B).unwrap();
        assert_eq!(v.bound(3).unwrap(), Rat::zero());
        let v = pow_onesided_exp_lower(&q("2"), &LowerReal::PosInfinity, B).unwrap();
        assert!(v.bound(10).unwrap() >= r("1024"));
        let u = pow_onesided_exp_upper(&q("2"), &UpperReal::NegInfinity, B).unwrap();
        assert!(u.bound(10).unwrap() <= r("1/1000"));
        assert!(matches!(
            pow_onesided_exp_upper(&q("2"), &UpperReal::PosInfinity, B).unwrap(),
            UpperReal::PosInfinity
        ));
    }

    #[test]
    fn onesided_base_examples() {
        let v = pow_onesided_base_lower(&lower_of(&q("2")), &q("3"), B).unwrap();
        assert_eq!(v.bound(5).unwrap(), r("8"));
        let v = pow_onesided_base_lower(&lower_of(&q("9")), &q("1/2"), B).unwrap();
        let top = v.bound(5).unwrap();
        assert!(top <= r("3") && &r("3") - &top <= Rat::pow2(-4));
        let v = pow_onesided_base_lower(&lower_of(&root(&q("2"), 2)), &q("0"), B).unwrap();
        assert_eq!(v.bound(5).unwrap(), r("1"));
        assert!(matches!(
            pow_onesided_base_lower(&lower_of(&q("2")), &q("-1"), B),
            Err(RealError::NonNegExponentRequired(_))
        ));
    }

    #[test]
    fn onesided_base_matches_sections_of_pow_real() {
        // lower bounds of (L_x)^ζ stay below x^ζ, upper bounds of (R_x)^ζ above
        let x = root(&q("3"), 2);
        let z = q("5/4");
        let full = pow_real(&x, &z, B).unwrap().at_bits(30).unwrap();
        let lower = pow_onesided_base_lower(&lower_of(&x), &z, B).unwrap();
        let upper = pow_onesided_base_upper(&upper_of(&x), &z, B).unwrap();
        let l = lower.bound(25).unwrap();
        let u = upper.bound(25).unwrap();
        assert!(&l <= full.hi() && &u >= full.lo());
        assert!(&u - &l <= Rat::pow2(-18));
        // base below one takes the inverse branch
        let small = pow_onesided_base_lower(&lower_of(&q("1/4")), &q("1/2"), B).unwrap();
        let top = small.bound(20).unwrap();
        assert!(top <= r("1/2") && &r("1/2") - &top <= Rat::pow2(-15));
    }

    #[test]
    fn ladder_agrees_with_pow_rat() {
        let mut ladder = PowerLadder::new(RInterval::point(r("10")), 80);
        for (m, k) in [(3i64, 0u64), (-2, 0), (5, 2), (-7, 3), (30103, 17)] {
            let ladder_v = ladder.pow_dyadic(&BigInt::from(m), k);
            let e = Rat::new(m, 1i64 << k);
            let direct = pow_rat(&q("10"), &e, B).unwrap().at_bits(50).unwrap();
            assert!(ladder_v.intersects(&direct), "10^({m}/2^{k})");
            assert!(ladder_v.width() <= Rat::pow2(-40));
        }
    }
}
