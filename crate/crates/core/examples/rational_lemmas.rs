//! The rational toolkit underneath everything else: Archimedean bounds,
//! Bernoulli's inequality, sandwich witnesses and root brackets.

use dedekind::oracle::grid_sandwich;
use dedekind::rational::{archimedean_bound, bernoulli_k, nat_pow, rat_root_bracket, sandwich, Rat};

fn main() {
    let r = |s: &str| s.parse::<Rat>().unwrap();

    let n = archimedean_bound(&r("3/7"), &r("10")).unwrap();
    println!("least N with N * 3/7 > 10: {n}");

    // (1 + x)^k >= 1 + k x
    let x = r("1/5");
    for k in [1, 5, 20] {
        let lhs = nat_pow(&(&x + Rat::one()), k).unwrap();
        let rhs = Rat::one() + Rat::from_integer(k) * &x;
        println!("(6/5)^{k} = {:.4} >= {}", lhs.to_f64(), rhs);
    }
    let k = bernoulli_k(&r("1000"), &r("1/100")).unwrap();
    println!("k with (1 + 1/100)^k > 1000 guaranteed: {k}");

    let (q, rr) = (r("2"), r("201/100"));
    let s = sandwich(&q, &rr, 2).unwrap();
    let g = grid_sandwich(&q, &rr, 2).unwrap();
    println!("2 < s^2 < 2.01: bisection s = {s}, grid s = {g}");

    let iv = rat_root_bracket(&r("10"), 3, &Rat::pow2(-20)).unwrap();
    println!("cube root of 10 in {iv}");
}
