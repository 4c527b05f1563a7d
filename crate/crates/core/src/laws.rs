//! Randomized checks of the exponent and logarithm laws.
//!
//! Every case draws its inputs from a ChaCha stream keyed by the seed, the law
//! and the case index, so a report depends only on those and never on thread
//! scheduling. A case passes when the enclosures of both sides intersect.

use std::fmt;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exponentiation::{pow_nat, pow_rat, pow_real, root};
use crate::logarithm::log;
use crate::rational::Rat;
use crate::real::{from_rat, mul_nonneg, Budget, DReal, RInterval, RealError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    /// `x^(q+r) = x^q · x^r`
    ExponentSum,
    /// `(x^q)^r = x^(q·r)`
    ExponentProduct,
    /// `(x·y)^ζ = x^ζ · y^ζ`
    BaseProduct,
    /// `(x^(1/b))^b = x`
    RootInversion,
    /// `b^(log_b y) = y`
    LogExp,
    /// `log_b(b^t) = t`
    ExpLog,
}

impl Law {
    pub const ALL: [Law; 6] =
        [Law::ExponentSum, Law::ExponentProduct, Law::BaseProduct, Law::RootInversion, Law::LogExp, Law::ExpLog];

    pub fn name(self) -> &'static str {
        match self {
            Law::ExponentSum => "exponent-sum",
            Law::ExponentProduct => "exponent-product",
            Law::BaseProduct => "base-product",
            Law::RootInversion => "root-inversion",
            Law::LogExp => "log-exp",
            Law::ExpLog => "exp-log",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct LawConfig {
    pub cases: u64,
    pub seed: u64,
    pub eps: Rat,
    pub budget: Budget,
}

impl Default for LawConfig {
    fn default() -> LawConfig {
        LawConfig { cases: 100, seed: 0, eps: Rat::pow2(-40), budget: Budget::DEFAULT }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Agree,
    Disjoint { lhs: RInterval, rhs: RInterval },
    Error(RealError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseResult {
    pub index: u64,
    /// Inputs as `name=value` pairs.
    pub inputs: Vec<(&'static str, Rat)>,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub law: Law,
    pub cases: u64,
    pub failures: Vec<CaseResult>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks one law on `config.cases` random cases, in parallel.
pub fn check_law(law: Law, config: &LawConfig) -> LawReport {
    let results: Vec<CaseResult> =
        (0..config.cases).into_par_iter().map(|i| check_case(law, config, i)).collect();
    let failures = results.into_iter().filter(|c| c.outcome != Outcome::Agree).collect();
    LawReport { law, cases: config.cases, failures }
}

pub fn check_all(config: &LawConfig) -> Vec<LawReport> {
    Law::ALL.iter().map(|&law| check_law(law, config)).collect()
}

/// Human-readable report; identical inputs give byte-identical output.
pub fn render_reports(reports: &[LawReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let ok = r.cases - r.failures.len() as u64;
        let status = if r.passed() { "ok" } else { "FAILED" };
        writeln!(out, "{:<18} {}/{} {}", r.law.name(), ok, r.cases, status).unwrap();
        for c in &r.failures {
            let inputs: Vec<String> = c.inputs.iter().map(|(n, v)| format!("{n}={v}")).collect();
            let what = match &c.outcome {
                Outcome::Agree => unreachable!(),
                Outcome::Disjoint { lhs, rhs } => format!("lhs {lhs} and rhs {rhs} are disjoint"),
                Outcome::Error(e) => format!("error: {e}"),
            };
            writeln!(out, "  case {}: {}: {}", c.index, inputs.join(", "), what).unwrap();
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        writeln!(out, "all {} laws hold", reports.len()).unwrap();
    } else {
        writeln!(out, "{failed} of {} laws failed", reports.len()).unwrap();
    }
    out
}

pub fn case_rng(seed: u64, law: Law, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tag = Law::ALL.iter().position(|&l| l == law).unwrap() as u64;
    rng.set_stream((tag << 48) ^ index);
    rng
}

/// Uniform rational in the open interval `(lo, hi)` with denominator at most 12.
pub fn sample_open(rng: &mut impl Rng, lo: &Rat, hi: &Rat) -> Rat {
    loop {
        let den: i64 = rng.gen_range(1..=12);
        let d = Rat::from_integer(den);
        let first: num_bigint::BigInt = (lo * &d).floor() + 1;
        let last: num_bigint::BigInt = (hi * &d).ceil() - 1;
        if first > last {
            continue;
        }
        let span: i64 = (&last - &first).try_into().expect("sample range fits i64");
        let n = &first + rng.gen_range(0..=span);
        return Rat::new(n, den);
    }
}

fn sample_base(rng: &mut impl Rng) -> Rat {
    sample_open(rng, &Rat::new(1, 10), &Rat::from_integer(10))
}

fn sample_exponent(rng: &mut impl Rng) -> Rat {
    sample_open(rng, &Rat::from_integer(-5), &Rat::from_integer(5))
}

pub fn check_case(law: Law, config: &LawConfig, index: u64) -> CaseResult {
    let mut rng = case_rng(config.seed, law, index);
    let b = config.budget;
    let (inputs, sides): (Vec<(&'static str, Rat)>, Result<(DReal, DReal), RealError>) = match law {
        Law::ExponentSum => {
            let (x, q, r) = (sample_base(&mut rng), sample_exponent(&mut rng), sample_exponent(&mut rng));
            let xd = from_rat(x.clone());
            let sides = (|| {
                let lhs = pow_rat(&xd, &(&q + &r), b)?;
                let rhs = mul_nonneg(&pow_rat(&xd, &q, b)?, &pow_rat(&xd, &r, b)?);
                Ok((lhs, rhs))
            })();
            (vec![("x", x), ("q", q), ("r", r)], sides)
        }
        Law::ExponentProduct => {
            let (x, q, r) = (sample_base(&mut rng), sample_exponent(&mut rng), sample_exponent(&mut rng));
            let xd = from_rat(x.clone());
            let sides = (|| {
                let lhs = pow_rat(&pow_rat(&xd, &q, b)?, &r, b)?;
                let rhs = pow_rat(&xd, &(&q * &r), b)?;
                Ok((lhs, rhs))
            })();
            (vec![("x", x), ("q", q), ("r", r)], sides)
        }
        Law::BaseProduct => {
            let (x, y, z) = (sample_base(&mut rng), sample_base(&mut rng), sample_exponent(&mut rng));
            let (xd, yd, zd) = (from_rat(x.clone()), from_rat(y.clone()), from_rat(z.clone()));
            let sides = (|| {
                let lhs = pow_real(&mul_nonneg(&xd, &yd), &zd, b)?;
                let rhs = mul_nonneg(&pow_real(&xd, &zd, b)?, &pow_real(&yd, &zd, b)?);
                Ok((lhs, rhs))
            })();
            (vec![("x", x), ("y", y), ("zeta", z)], sides)
        }
        Law::RootInversion => {
            let x = sample_base(&mut rng);
            let deg: u64 = rng.gen_range(2..=7);
            let xd = from_rat(x.clone());
            let sides = Ok((pow_nat(&root(&xd, deg), deg), xd));
            (vec![("x", x), ("b", Rat::from_integer(deg))], sides)
        }
        Law::LogExp => {
            let base = sample_open(&mut rng, &Rat::one(), &Rat::from_integer(10));
            let y = sample_open(&mut rng, &Rat::zero(), &Rat::from_integer(100));
            let (bd, yd) = (from_rat(base.clone()), from_rat(y.clone()));
            let sides = (|| Ok((pow_real(&bd, &log(&bd, &yd, b)?, b)?, yd.clone())))();
            (vec![("b", base), ("y", y)], sides)
        }
        Law::ExpLog => {
            let base = sample_open(&mut rng, &Rat::one(), &Rat::from_integer(10));
            let t = sample_exponent(&mut rng);
            let (bd, td) = (from_rat(base.clone()), from_rat(t.clone()));
            let sides = (|| Ok((log(&bd, &pow_rat(&bd, &t, b)?, b)?, td.clone())))();
            (vec![("b", base), ("t", t)], sides)
        }
    };
    let outcome = match sides.and_then(|(l, r)| Ok((l.approximate(&config.eps)?, r.approximate(&config.eps)?))) {
        Ok((lhs, rhs)) if lhs.intersects(&rhs) => Outcome::Agree,
        Ok((lhs, rhs)) => Outcome::Disjoint { lhs, rhs },
        Err(e) => Outcome::Error(e),
    };
    CaseResult { index, inputs, outcome }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> LawConfig {
        LawConfig { cases: 12, seed: 7, eps: Rat::pow2(-30), budget: Budget::DEFAULT }
    }

    #[test]
    fn every_law_holds_on_a_few_cases() {
        let reports = check_all(&small());
        let text = render_reports(&reports);
        assert!(reports.iter().all(LawReport::passed), "{text}");
        assert!(text.ends_with("all 6 laws hold\n"));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = render_reports(&check_all(&small()));
        let b = render_reports(&check_all(&small()));
        assert_eq!(a, b);
        let c1 = check_case(Law::BaseProduct, &small(), 3);
        let c2 = check_case(Law::BaseProduct, &small(), 3);
        assert_eq!(c1, c2);
    }

    #[test]
    fn samples_stay_in_range() {
        let mut rng = case_rng(1, Law::ExponentSum, 0);
        let (lo, hi) = (Rat::new(1, 10), Rat::from_integer(10));
        for _ in 0..500 {
            let s = sample_open(&mut rng, &lo, &hi);
            assert!(s > lo && s < hi && s.denom() <= &12.into());
        }
    }

    #[test]
    fn failures_are_rendered() {
        let report = LawReport {
            law: Law::ExpLog,
            cases: 1,
            failures: vec![CaseResult {
                index: 0,
                inputs: vec![("b", Rat::from_integer(2)), ("t", Rat::new(1, 3))],
                outcome: Outcome::Disjoint {
                    lhs: RInterval::point(Rat::zero()),
                    rhs: RInterval::point(Rat::one()),
                },
            }],
        };
        let text = render_reports(&[report]);
        assert_eq!(
            text,
            "exp-log            0/1 FAILED\n  case 0: b=2, t=1/3: lhs [0, 0] and rhs [1, 1] are disjoint\n1 of 1 laws failed\n"
        );
    }
}
