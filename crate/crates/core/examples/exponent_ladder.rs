//! Natural powers, radicals, rational powers and real powers.

use dedekind::exponentiation::{pow_nat, pow_rat, pow_real, root};
use dedekind::rational::Rat;
use dedekind::real::{from_rat, render_decimal, Budget};

fn main() {
    let r = |s: &str| s.parse::<Rat>().unwrap();
    let b = Budget::DEFAULT;
    let two = from_rat(r("2"));

    println!("2^10      = {}", render_decimal(&pow_nat(&two, 10), 6).unwrap());
    println!("2^(1/3)   = {}", render_decimal(&root(&two, 3), 30).unwrap());
    println!("2^(-5/4)  = {}", render_decimal(&pow_rat(&two, &r("-5/4"), b).unwrap(), 30).unwrap());

    let sqrt2 = root(&two, 2);
    let gelfond = pow_real(&two, &sqrt2, b).unwrap();
    println!("2^sqrt2   = {}", render_decimal(&gelfond, 40).unwrap());

    // (2^sqrt2)^sqrt2 = 2^2
    let back = pow_real(&gelfond, &sqrt2, b).unwrap();
    println!("(2^sqrt2)^sqrt2 = {}", render_decimal(&back, 20).unwrap());

    // bases straddling one are fine
    let near_one = pow_real(&from_rat(r("1")), &sqrt2, b).unwrap();
    println!("1^sqrt2   = {}", render_decimal(&near_one, 10).unwrap());
}
