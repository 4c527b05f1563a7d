use std::fmt;
use std::sync::Arc;

use super::{DReal, RealError};
use crate::rational::Rat;

type BoundFn = dyn Fn(u64) -> Result<Rat, RealError> + Send + Sync;

/// A real known only from below: the supremum of a stream of rational lower
/// bounds. The edge values of `[-∞, ∞]` are explicit markers.
#[derive(Clone)]
pub enum LowerReal {
    /// The empty lower section.
    NegInfinity,
    /// The lower section containing every rational.
    PosInfinity,
    Stream(Arc<BoundFn>),
}

/// A real known only from above: the infimum of a stream of rational upper
/// bounds.
#[derive(Clone)]
pub enum UpperReal {
    /// The upper section containing every rational.
    NegInfinity,
    /// The empty upper section.
    PosInfinity,
    Stream(Arc<BoundFn>),
}

impl LowerReal {
    /// Bounds need not be monotone; [`LowerReal::bound`] takes running maxima.
    pub fn from_fn<F>(f: F) -> LowerReal
    where
        F: Fn(u64) -> Result<Rat, RealError> + Send + Sync + 'static,
    {
        LowerReal::Stream(Arc::new(f))
    }

    /// A stream that lists `prefix` and then repeats its last element.
    pub fn from_prefix(prefix: Vec<Rat>) -> LowerReal {
        assert!(!prefix.is_empty(), "empty bound prefix");
        LowerReal::from_fn(move |n| Ok(prefix[(n as usize).min(prefix.len() - 1)].clone()))
    }

    pub fn constant(q: Rat) -> LowerReal {
        LowerReal::from_fn(move |_| Ok(q.clone()))
    }

    /// The `n`-th monotonized bound: the maximum of raw bounds `0..=n`.
    pub fn bound(&self, n: u64) -> Result<Rat, RealError> {
        self.bounds().nth(n as usize).unwrap_or(Err(RealError::InfiniteEdge))
    }

    /// Non-decreasing stream of lower bounds. Edge markers yield a single
    /// `InfiniteEdge` error.
    pub fn bounds(&self) -> Bounds<'_> {
        match self {
            LowerReal::Stream(f) => Bounds { f: Some(f.as_ref()), n: 0, acc: None, upward: true },
            _ => Bounds { f: None, n: 0, acc: None, upward: true },
        }
    }
}

impl UpperReal {
    pub fn from_fn<F>(f: F) -> UpperReal
    where
        F: Fn(u64) -> Result<Rat, RealError> + Send + Sync + 'static,
    {
        UpperReal::Stream(Arc::new(f))
    }

    pub fn from_prefix(prefix: Vec<Rat>) -> UpperReal {
        assert!(!prefix.is_empty(), "empty bound prefix");
        UpperReal::from_fn(move |n| Ok(prefix[(n as usize).min(prefix.len() - 1)].clone()))
    }

    pub fn constant(q: Rat) -> UpperReal {
        UpperReal::from_fn(move |_| Ok(q.clone()))
    }

    /// The `n`-th monotonized bound: the minimum of raw bounds `0..=n`.
    pub fn bound(&self, n: u64) -> Result<Rat, RealError> {
        self.bounds().nth(n as usize).unwrap_or(Err(RealError::InfiniteEdge))
    }

    pub fn bounds(&self) -> Bounds<'_> {
        match self {
            UpperReal::Stream(f) => Bounds { f: Some(f.as_ref()), n: 0, acc: None, upward: false },
            _ => Bounds { f: None, n: 0, acc: None, upward: false },
        }
    }
}

/// Running-extremum iterator over a one-sided bound stream.
pub struct Bounds<'a> {
    f: Option<&'a BoundFn>,
    n: u64,
    acc: Option<Rat>,
    upward: bool,
}

impl Iterator for Bounds<'_> {
    type Item = Result<Rat, RealError>;

    fn next(&mut self) -> Option<Self::Item> {
        let Some(f) = self.f else {
            if self.n == 0 {
                self.n = 1;
                return Some(Err(RealError::InfiniteEdge));
            }
            return None;
        };
        let raw = match f(self.n) {
            Ok(q) => q,
            Err(e) => {
                self.f = None;
                self.n = 1;
                return Some(Err(e));
            }
        };
        self.n += 1;
        let next = match self.acc.take() {
            None => raw,
            Some(a) if self.upward => a.max(raw),
            Some(a) => a.min(raw),
        };
        self.acc = Some(next.clone());
        Some(Ok(next))
    }
}

/// Lower section of a Dedekind real: lower endpoints of its `2^-n` enclosures.
pub fn lower_of(x: &DReal) -> LowerReal {
    let x = x.clone();
    LowerReal::from_fn(move |n| Ok(x.at_bits(n)?.lo().clone()))
}

/// Upper section of a Dedekind real: upper endpoints of its `2^-n` enclosures.
pub fn upper_of(x: &DReal) -> UpperReal {
    let x = x.clone();
    UpperReal::from_fn(move |n| Ok(x.at_bits(n)?.hi().clone()))
}

impl fmt::Debug for LowerReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerReal::NegInfinity => write!(f, "LowerReal(-inf)"),
            LowerReal::PosInfinity => write!(f, "LowerReal(+inf)"),
            LowerReal::Stream(_) => match self.bound(8) {
                Ok(q) => write!(f, "LowerReal(>= {q})"),
                Err(e) => write!(f, "LowerReal(<{e}>)"),
            },
        }
    }
}

impl fmt::Debug for UpperReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperReal::NegInfinity => write!(f, "UpperReal(-inf)"),
            UpperReal::PosInfinity => write!(f, "UpperReal(+inf)"),
            UpperReal::Stream(_) => match self.bound(8) {
                Ok(q) => write!(f, "UpperReal(<= {q})"),
                Err(e) => write!(f, "UpperReal(<{e}>)"),
            },
        }
    }
}
