//! Dedekind reals as enclosure generators: ask for any width, get a rational
//! interval that contains the number.

use dedekind::exponentiation::root;
use dedekind::rational::Rat;
use dedekind::real::{add, cmp_apart, from_rat, inv_pos, mul, neg, render_decimal, Budget, DReal};

fn main() {
    let sqrt2 = root(&from_rat(Rat::from_integer(2)), 2);
    for bits in [4, 16, 64] {
        let iv = sqrt2.at_bits(bits).unwrap();
        println!("sqrt 2 to 2^-{bits}: {iv}");
    }

    // x = sqrt2 + 1/sqrt2 = 3/sqrt2
    let x = add(&sqrt2, &inv_pos(&sqrt2, Budget::DEFAULT).unwrap());
    println!("sqrt2 + 1/sqrt2 = {}", render_decimal(&x, 40).unwrap());

    let y = mul(&neg(&sqrt2), &x);
    println!("-sqrt2 * x = {}", render_decimal(&y, 20).unwrap());

    let third = from_rat("1/3".parse().unwrap());
    println!("sqrt2 vs 1/3: {:?}", cmp_apart(&sqrt2, &third, Budget::DEFAULT));

    // a custom real: the partial sums of sum 1/k! bracket e
    let e = DReal::from_fn(|eps| {
        let (mut term, mut sum, mut k) = (Rat::one(), Rat::one(), 1i64);
        while &(&term * &Rat::from_integer(2)) > eps {
            term = term / Rat::from_integer(k);
            sum = sum + &term;
            k += 1;
        }
        // the tail after `term` is below `term`
        Ok(dedekind::real::RInterval::new(sum.clone(), sum + term))
    });
    println!("e = {}", render_decimal(&e, 30).unwrap());
}
