use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::{DReal, RInterval, RealError};
use crate::rational::Rat;

/// Decimal rendering of an enclosure to `digits` significant digits.
///
/// The lower endpoint is rounded toward −∞ and the upper toward +∞. When the
/// two rounded strings coincide the value is printed once; when they share a
/// prefix that reaches past the decimal point, that prefix is printed (every
/// number in the interval begins with it); otherwise the bracket
/// `[lo, hi]` is printed.
pub fn render_interval(iv: &RInterval, digits: u32) -> String {
    let digits = digits.max(1) as i64;
    let magnitude = iv.lo().abs().max(iv.hi().abs());
    let frac = if magnitude.is_zero() {
        digits - 1
    } else {
        (digits - 1 - decimal_exponent(&magnitude)).max(0)
    };
    let scale = Rat::from_integer(num_traits::pow(BigInt::from(10), frac as usize));
    let lo = (iv.lo() * &scale).floor();
    let hi = (iv.hi() * &scale).ceil();
    let lo_s = format_scaled(&lo, frac as usize);
    let hi_s = format_scaled(&hi, frac as usize);
    if lo_s == hi_s {
        return lo_s;
    }
    if lo_s.len() == hi_s.len() && lo.is_negative() == hi.is_negative() {
        let common = lo_s.bytes().zip(hi_s.bytes()).take_while(|(a, b)| a == b).count();
        if let Some(dot) = lo_s.find('.') {
            if common > dot + 1 {
                return lo_s[..common].to_string();
            }
        }
    }
    format!("[{lo_s}, {hi_s}]")
}

/// Renders `x` to `digits` significant digits, refining far enough that the
/// outward-rounded endpoints agree on almost every digit.
pub fn render_decimal(x: &DReal, digits: u32) -> Result<String, RealError> {
    let d = digits.max(1) as i64;
    let mut guard = 3i64;
    let mut iv = x.approximate(&pow10(-(d + guard)))?;
    // small magnitudes need correspondingly finer absolute precision
    for _ in 0..8 {
        let m = iv.lo().abs().max(iv.hi().abs());
        if m.is_zero() || iv.contains(&Rat::zero()) {
            break;
        }
        let e = decimal_exponent(&m);
        if e >= 0 {
            break;
        }
        let want = pow10(e - d - 3);
        if &iv.width() <= &want {
            break;
        }
        guard = 3 - e;
        iv = x.approximate(&pow10(-(d + guard)))?;
    }
    Ok(render_interval(&iv, digits))
}

fn pow10(e: i64) -> Rat {
    let p = Rat::from_integer(num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize));
    if e >= 0 {
        p
    } else {
        p.recip().unwrap()
    }
}

/// `e` with `10^e <= m < 10^(e+1)`, for `m > 0`.
fn decimal_exponent(m: &Rat) -> i64 {
    let ten = BigInt::from(10);
    if m >= &Rat::one() {
        m.floor().to_string().len() as i64 - 1
    } else {
        let mut e = 0i64;
        let mut v = m.clone();
        while v < Rat::one() {
            v = v * Rat::from_integer(ten.clone());
            e -= 1;
        }
        e
    }
}

fn format_scaled(n: &BigInt, frac: usize) -> String {
    let sign = if n.is_negative() { "-" } else { "" };
    let (int, rem) = n.abs().div_rem(&num_traits::pow(BigInt::from(10), frac));
    if frac == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", rem.to_string(), width = frac)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::from_rat;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn iv(lo: &str, hi: &str) -> RInterval {
        RInterval::new(r(lo), r(hi))
    }

    #[test]
    fn exact_points() {
        assert_eq!(render_interval(&RInterval::point(r("3")), 5), "3.0000");
        assert_eq!(render_interval(&RInterval::point(r("1/4")), 3), "0.250");
        assert_eq!(render_interval(&RInterval::point(r("0")), 3), "0.00");
        assert_eq!(render_interval(&RInterval::point(r("-5/2")), 2), "-2.5");
        assert_eq!(render_interval(&RInterval::point(r("12345")), 3), "12345");
    }

    #[test]
    fn outward_rounding() {
        // lo rounds down, hi rounds up at 4 fractional digits
        assert_eq!(render_interval(&iv("1.41421", "1.41422"), 5), "1.414");
        assert_eq!(render_interval(&iv("2.99999", "3.00001"), 5), "[2.9999, 3.0001]");
        assert_eq!(render_interval(&iv("-0.30103", "-0.30102"), 3), "-0.30");
        assert_eq!(render_interval(&iv("1/3", "1/3"), 4), "0.333");
        assert_eq!(render_interval(&iv("-1/100", "1/100"), 2), "[-0.010, 0.010]");
    }

    #[test]
    fn decimal_of_dreal() {
        let s = render_decimal(&from_rat(r("1/8")), 3).unwrap();
        assert_eq!(s, "0.125");
        let s = render_decimal(&from_rat(r("22/7")), 6).unwrap();
        assert!(s.starts_with("3.1428"), "{s}");
    }

    #[test]
    fn exponent_of_magnitude() {
        assert_eq!(decimal_exponent(&r("1")), 0);
        assert_eq!(decimal_exponent(&r("9.99")), 0);
        assert_eq!(decimal_exponent(&r("10")), 1);
        assert_eq!(decimal_exponent(&r("0.3")), -1);
        assert_eq!(decimal_exponent(&r("0.001")), -3);
    }
}
