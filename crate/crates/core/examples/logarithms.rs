//! Logarithms as inverses of exponentiation, including bases below one.

use dedekind::exponentiation::pow_real;
use dedekind::logarithm::{log, log_small_base};
use dedekind::oracle::bisect_log;
use dedekind::rational::Rat;
use dedekind::real::{from_rat, render_decimal, Budget};

fn main() {
    let r = |s: &str| s.parse::<Rat>().unwrap();
    let b = Budget::DEFAULT;

    let l = log(&from_rat(r("10")), &from_rat(r("2")), b).unwrap();
    println!("log10(2)      = {}", render_decimal(&l, 50).unwrap());
    println!("by bisection    {}", bisect_log(&r("10"), &r("2"), &Rat::pow2(-20)));

    let l = log(&from_rat(r("2")), &from_rat(r("8")), b).unwrap();
    println!("log2(8)  in {}", l.at_bits(40).unwrap());

    let l = log_small_base(&from_rat(r("1/2")), &from_rat(r("3")), b).unwrap();
    println!("log_1/2(3)    = {}", render_decimal(&l, 30).unwrap());

    // b^(log_b y) = y
    let base = from_rat(r("7/3"));
    let y = from_rat(r("50"));
    let back = pow_real(&base, &log(&base, &y, b).unwrap(), b).unwrap();
    println!("(7/3)^log_7/3(50) = {}", render_decimal(&back, 25).unwrap());

    match log(&from_rat(r("1")), &y, Budget(16)) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("log base 1: {e}"),
    }
}
