//! Powers where the exponent or the base is only known from one side.

use dedekind::exponentiation::{pow_onesided_base_lower, pow_onesided_exp_lower, pow_onesided_exp_upper, root};
use dedekind::rational::Rat;
use dedekind::real::{from_rat, lower_of, upper_of, Budget, LowerReal, UpperReal};

fn main() {
    let r = |s: &str| s.parse::<Rat>().unwrap();
    let b = Budget::DEFAULT;
    let three = from_rat(r("3"));

    // the exponent approaches 1/2 from below through 0.4, 0.49, 0.499, ...
    let zeta = LowerReal::from_fn(|n| Ok(Rat::new(1, 2) - Rat::new(1, 10i64.pow((n.min(17) + 1) as u32))));
    let v = pow_onesided_exp_lower(&three, &zeta, b).unwrap();
    for n in [0, 2, 8] {
        println!("3^zeta lower bound {n}: {:.12}", v.bound(n).unwrap().to_f64());
    }

    let up = pow_onesided_exp_upper(&three, &upper_of(&from_rat(r("1/2"))), b).unwrap();
    println!("3^(1/2) upper bound: {:.12}", up.bound(30).unwrap().to_f64());

    // infinite edges
    let low = pow_onesided_exp_lower(&three, &LowerReal::NegInfinity, b).unwrap();
    println!("3^(-inf) lower bound: {}", low.bound(0).unwrap());
    let high = pow_onesided_exp_upper(&three, &UpperReal::PosInfinity, b).unwrap();
    println!("3^(+inf) upper: {:?}", high.bound(0));

    let base = lower_of(&root(&from_rat(r("2")), 2));
    let v = pow_onesided_base_lower(&base, &from_rat(r("4")), b).unwrap();
    println!("(lower sqrt2)^4 bound 20: {:.12}", v.bound(20).unwrap().to_f64());
}
