mod common;

use common::{poly, ring};
use germlab_core::{parse_polynomial, Monomial, Poly, Rational, RingSpec};
use proptest::prelude::*;

fn arb_poly(nvars: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), -5i64..=5, 1i64..=3), 0..5).prop_map(move |terms| {
        Poly::from_terms(
            nvars,
            terms.into_iter().map(|(e, n, d)| (Monomial::from_exponents(&e), Rational::new(n.into(), d.into()))),
        )
    })
}

fn xyz() -> RingSpec {
    ring(&["x", "y", "z"])
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Poly::one(3)), a.clone());
    }

    #[test]
    fn leibniz_rule(a in arb_poly(3), b in arb_poly(3), i in 0usize..3) {
        let lhs = a.mul(&b).partial_derivative(i);
        let rhs = a.partial_derivative(i).mul(&b).add(&a.mul(&b.partial_derivative(i)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_parse_round_trip(a in arb_poly(3)) {
        let r = xyz();
        let text = a.display(&r).to_string();
        let back: Poly = parse_polynomial(&text, &r).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn terms_sorted_by_local_order(a in arb_poly(3)) {
        let order = germlab_core::LocalOrder;
        for w in a.terms().windows(2) {
            prop_assert_eq!(order.compare(&w[0].0, &w[1].0), std::cmp::Ordering::Greater);
        }
    }
}

#[test]
fn parse_examples() {
    let r = xyz();
    let p = poly(&r, "x^2+y^2+z^2");
    assert_eq!(p.len(), 3);
    let r2 = ring(&["x", "y"]);
    let p = poly(&r2, "2/3*x*y - y^3");
    assert_eq!(p.display(&r2).to_string(), "2/3*x*y - y^3");
    assert!(parse_polynomial::<Rational>("x + w", &r).is_err());
    assert!(parse_polynomial::<Rational>("2x", &r).is_err());
    assert!(parse_polynomial::<Rational>("", &r).is_err());
    assert!(parse_polynomial::<Rational>("x/2", &r).is_err());
    assert!(parse_polynomial::<Rational>("x^-1", &r).is_err());
}

#[test]
fn derivative_examples() {
    let r = xyz();
    assert_eq!(poly(&r, "x^3*y + z").partial_derivative(0), poly(&r, "3*x^2*y"));
    assert!(poly(&r, "y").partial_derivative(0).is_zero());
}
