//! Randomized checks of the exponent and logarithm laws.

use dedekind::laws::{check_all, render_reports, LawConfig};
use dedekind::rational::Rat;
use dedekind::real::Budget;

fn main() {
    let cases = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    let config = LawConfig { cases, seed: 2024, eps: Rat::pow2(-40), budget: Budget::DEFAULT };
    print!("{}", render_reports(&check_all(&config)));
}
