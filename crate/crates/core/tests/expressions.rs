use dedekind::expr::{eval, eval_str, parse, ExprError, ExprKind, ExprNode};
use dedekind::rational::Rat;
use dedekind::real::{Budget, RInterval, RealError};
use proptest::prelude::*;

fn r(s: &str) -> Rat {
    s.parse().unwrap()
}

#[test]
fn worked_examples() {
    assert_eq!(eval(&parse("2^3").unwrap(), &Rat::one(), Budget::DEFAULT).unwrap(), RInterval::point(r("8")));
    let iv = eval(&parse("sqrt(2)*sqrt(2)").unwrap(), &Rat::pow2(-30), Budget::DEFAULT).unwrap();
    assert!(iv.contains(&r("2")));
    match eval_str("log(1, 5)", &Rat::pow2(-10), Budget::DEFAULT) {
        Err(ExprError::Domain(d)) => assert!(matches!(d.error, RealError::BaseNotAboveOne(_))),
        other => panic!("{other:?}"),
    }
}

#[test]
fn decimals_are_exact() {
    let iv = eval_str("0.1 + 0.2", &Rat::one(), Budget::DEFAULT).unwrap();
    assert_eq!(iv, RInterval::point(r("3/10")));
}

#[test]
fn mixed_expressions() {
    let cases = [
        ("pow(2, 10)", "1024"),
        ("root(27, 3) + log(3, 81)", "7"),
        ("(2^sqrt(2))^sqrt(2)", "4"),
        ("log(1/2, 1/8)", "3"),
        ("-(-8)^(1/1) / 2", "4"),
        ("2^-3^2", "1/512"),
    ];
    for (src, want) in cases {
        let iv = eval_str(src, &Rat::pow2(-30), Budget::DEFAULT).unwrap();
        assert!(iv.contains(&r(want)), "{src} gave {iv}");
    }
}

#[test]
fn unknown_identifier_is_located() {
    match eval_str("1 + cos(2)", &Rat::one(), Budget::DEFAULT) {
        Err(ExprError::Syntax(e)) => assert_eq!(e.position, 4),
        other => panic!("{other:?}"),
    }
}

fn arb_expr() -> impl Strategy<Value = ExprNode> {
    arb_tree(true)
}

/// Trees whose exponents are small literals, so every value stays desk-sized.
fn arb_tame_expr() -> impl Strategy<Value = ExprNode> {
    arb_tree(false)
}

fn arb_tree(free_exponents: bool) -> impl Strategy<Value = ExprNode> {
    // denominators 2^i 5^j so every literal prints as an exact decimal
    let leaf = (1i64..50, prop::sample::select(vec![1i64, 2, 4, 5, 8, 10, 20, 25])).prop_map(|(n, d)| ExprNode::literal(Rat::new(n, d)));
    leaf.prop_recursive(4, 24, 2, move |inner| {
        let b = |e: ExprNode| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |a| ExprNode::synthetic(ExprKind::Neg(b(a)))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| ExprNode::synthetic(ExprKind::Add(b(x), b(y)))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| ExprNode::synthetic(ExprKind::Sub(b(x), b(y)))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| ExprNode::synthetic(ExprKind::Mul(b(x), b(y)))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| ExprNode::synthetic(ExprKind::Div(b(x), b(y)))),
            (inner.clone(), inner.clone(), -12i64..12).prop_map(move |(x, y, k)| {
                let e = if free_exponents { y } else { ExprNode::literal(Rat::new(k, 4)) };
                ExprNode::synthetic(ExprKind::Pow(b(x), b(e)))
            }),
            inner.clone().prop_map(move |a| ExprNode::synthetic(ExprKind::Sqrt(b(a)))),
            (inner.clone(), 1u64..6).prop_map(move |(a, n)| ExprNode::synthetic(ExprKind::Root(b(a), n))),
            (inner.clone(), inner).prop_map(move |(x, y)| ExprNode::synthetic(ExprKind::Log(b(x), b(y)))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printing_round_trips(e in arb_expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e, "{}", printed);
    }

    #[test]
    fn evaluation_is_consistent_across_precisions(e in arb_tame_expr(), a in 2i64..30, b in 2i64..30) {
        let budget = Budget(24);
        let (ea, eb) = (Rat::pow2(-a), Rat::pow2(-b));
        if let (Ok(x), Ok(y)) = (eval(&e, &ea, budget), eval(&e, &eb, budget)) {
            prop_assert!(x.width() <= ea && y.width() <= eb);
            prop_assert!(x.intersects(&y), "{} vs {} for {}", x, y, e);
        }
    }
}
