use dedekind::logarithm::log;
use dedekind::oracle::{bisect_log, grid_sandwich};
use dedekind::rational::{nat_pow, sandwich, Rat};
use dedekind::real::{from_rat, Budget};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn both_sandwiches_meet_the_postcondition(qn in 0i64..400, qd in 1i64..20, gn in 1i64..100, gd in 1i64..40, a in 1u64..7) {
        let q = rat(qn, qd);
        let r = &q + rat(gn, gd);
        for s in [sandwich(&q, &r, a).unwrap(), grid_sandwich(&q, &r, a).unwrap()] {
            let p = nat_pow(&s, a).unwrap();
            prop_assert!(s.is_positive() && q < p && p < r);
        }
    }

    #[test]
    fn bisect_log_meets_logarithm(bn in 2i64..60, bd in 1i64..6, yn in 1i64..500, yd in 1i64..30, k in 4i64..14) {
        let b = rat(bn, bd);
        prop_assume!(b > Rat::one());
        let y = rat(yn, yd);
        let eps = Rat::pow2(-k);
        let slow = bisect_log(&b, &y, &eps);
        let fast = log(&from_rat(b), &from_rat(y), Budget::DEFAULT).unwrap().approximate(&eps).unwrap();
        prop_assert!(slow.intersects(&fast), "{} vs {}", slow, fast);
    }
}

#[test]
fn bisect_log_examples() {
    assert!(bisect_log(&rat(2, 1), &rat(8, 1), &rat(1, 100)).contains(&rat(3, 1)));
    assert!(bisect_log(&rat(2, 1), &rat(1, 1), &rat(1, 10)).contains(&Rat::zero()));
}
