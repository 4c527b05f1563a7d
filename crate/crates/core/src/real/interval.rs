use std::fmt;

use crate::rational::Rat;

/// A closed rational interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RInterval {
    lo: Rat,
    hi: Rat,
}

impl RInterval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rat, hi: Rat) -> RInterval {
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        RInterval { lo, hi }
    }

    pub fn try_new(lo: Rat, hi: Rat) -> Option<RInterval> {
        (lo <= hi).then_some(RInterval { lo, hi })
    }

    pub fn point(q: Rat) -> RInterval {
        RInterval { lo: q.clone(), hi: q }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn into_bounds(self) -> (Rat, Rat) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        self.lo.midpoint(&self.hi)
    }

    pub fn contains(&self, q: &Rat) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_interval(&self, other: &RInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersection(&self, other: &RInterval) -> Option<RInterval> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        RInterval::try_new(lo, hi)
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &RInterval) -> RInterval {
        RInterval {
            lo: (&self.lo).min(&other.lo).clone(),
            hi: (&self.hi).max(&other.hi).clone(),
        }
    }

    /// Widens both endpoints to the dyadic grid `2^-bits`.
    pub fn round_outward(&self, bits: u64) -> RInterval {
        RInterval {
            lo: self.lo.floor_to_bits(bits),
            hi: self.hi.ceil_to_bits(bits),
        }
    }

    pub fn neg(&self) -> RInterval {
        RInterval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add(&self, other: &RInterval) -> RInterval {
        RInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    /// Product of two intervals known to be non-negative.
    pub(crate) fn mul_nonneg(&self, other: &RInterval) -> RInterval {
        RInterval { lo: &self.lo * &other.lo, hi: &self.hi * &other.hi }
    }

    /// Product of arbitrary intervals: the hull of the four endpoint products.
    pub fn mul(&self, other: &RInterval) -> RInterval {
        let c = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RInterval { lo, hi }
    }

    /// Raises `lo` to at least `floor` (when the enclosed value is known to be `>= floor`).
    pub(crate) fn clamp_lo(self, floor: &Rat) -> RInterval {
        if &self.lo >= floor {
            self
        } else {
            let hi = if &self.hi < floor { floor.clone() } else { self.hi };
            RInterval { lo: floor.clone(), hi }
        }
    }
}

impl fmt::Display for RInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for RInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
