//! Parse and evaluate expressions; domain errors point at the failing piece.

use dedekind::expr::{compile, parse};
use dedekind::rational::Rat;
use dedekind::real::Budget;

fn main() {
    let exprs = [
        "2^(1/2)",
        "(1 + sqrt(5)) / 2",
        "log(10, 2) * 3",
        "2^sqrt(2)",
        "root(-27 + 54, 3) - 1.5",
        "-2^2",
        "1 + sqrt(1 - 2)",
        "log(2, 0)",
        "2^^2",
    ];
    for src in exprs {
        let node = match parse(src) {
            Ok(n) => n,
            Err(e) => {
                println!("{src:28} {e}");
                continue;
            }
        };
        let value = compile(&node, Budget::DEFAULT).and_then(|c| c.render(25));
        match value {
            Ok(s) => println!("{src:28} = {s}"),
            Err(e) => println!("{src:28} {e} `{}`", &src[e.span.start..e.span.end]),
        }
    }

    let node = parse("sqrt(2) * sqrt(3) - sqrt(6)").unwrap();
    println!("printed back: {node}");
    let iv = dedekind::expr::eval(&node, &Rat::pow2(-60), Budget::DEFAULT).unwrap();
    println!("enclosure: {iv}");
}
