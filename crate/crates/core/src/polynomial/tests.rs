use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn a(i: usize) -> Polynomial {
    Polynomial::var(Basis::A, i)
}

fn w(i: usize) -> Polynomial {
    Polynomial::var(Basis::W, i)
}

fn c(basis: Basis, n: i64, d: i64) -> Polynomial {
    Polynomial::constant(basis, q(n, d))
}

#[test]
fn addition() {
    let p = &a(1) * &a(2);
    assert_eq!(&p + &Polynomial::zero(Basis::A), p);

    let half_sq = &c(Basis::A, 1, 2) * &a(1).pow(2);
    assert_eq!(&half_sq + &half_sq, a(1).pow(2));

    let cancelled = &p + &-&p;
    assert!(cancelled.is_zero());
    assert_eq!(cancelled.num_terms(), 0);
}

#[test]
fn multiplication() {
    let p = &a(1) + &c(Basis::A, 3, 4);
    assert_eq!(&p * &Polynomial::one(Basis::A), p);
    assert_eq!(&a(1) * &a(1), a(1).pow(2));
    let diff = &(&a(1) + &a(2)) * &(&a(1) - &a(2));
    assert_eq!(diff, &a(1).pow(2) - &a(2).pow(2));
}

#[test]
fn basis_mismatch_is_an_error() {
    assert_eq!(
        a(1).try_add(&w(1)),
        Err(Error::BasisMismatch {
            left: Basis::A,
            right: Basis::W
        })
    );
    assert!(a(1).try_mul(&w(1)).is_err());
    assert!(w(1).substitute_a_to_w().is_err());
}

#[test]
fn substitution_examples() {
    let half = |b| c(b, 1, 2);
    let p = &half(Basis::A) * &a(1).pow(2);
    assert_eq!(
        p.substitute_a_to_w().unwrap(),
        &half(Basis::W) * &w(1).pow(2)
    );

    let vol21 = &p + &(&a(1) * &a(2));
    let want = &(&w(1) * &w(2)) - &(&half(Basis::W) * &w(1).pow(2));
    assert_eq!(vol21.substitute_a_to_w().unwrap(), want);

    let telescoping = &(&a(1) + &a(2)) + &a(3);
    assert_eq!(telescoping.substitute_a_to_w().unwrap(), w(3));
}

#[test]
fn evaluation() {
    let p = &c(Basis::A, 1, 2) * &a(1).pow(2);
    assert_eq!(p.eval(&[q(1, 1), q(9, 1)]).unwrap(), q(1, 2));
    assert_eq!(Polynomial::zero(Basis::W).eval(&[]).unwrap(), q(0, 1));
    assert_eq!(a(3).eval(&[q(1, 1)]), Err(Error::MissingVariable(3)));
}

#[test]
fn text_rendering() {
    let p = &(&c(Basis::A, 1, 2) * &a(1).pow(2)) + &(&a(1) * &a(2));
    assert_eq!(p.to_string(), "1/2*a1^2 + a1*a2");
    let pw = p.substitute_a_to_w().unwrap();
    assert_eq!(pw.to_string(), "-1/2*W1^2 + W1*W2");
    assert_eq!(Polynomial::zero(Basis::A).to_string(), "0");
    assert_eq!(
        (&c(Basis::W, -3, 1) + &(&w(1) * &c(Basis::W, -1, 1))).to_string(),
        "-W1 - 3"
    );
}

#[test]
fn json_form() {
    let p = &(&c(Basis::A, 1, 2) * &a(1).pow(2)) + &(&a(1) * &a(2));
    let text = serde_json::to_string(&p).unwrap();
    assert_eq!(
        text,
        r#"{"basis":"A","num_vars":2,"terms":[{"exponents":[2,0],"numerator":"1","denominator":"2"},{"exponents":[1,1],"numerator":"1","denominator":"1"}]}"#
    );
    let back: Polynomial = serde_json::from_str(&text).unwrap();
    assert_eq!(back, p);

    let bad = r#"{"basis":"A","num_vars":2,"terms":[{"exponents":[2],"numerator":"1","denominator":"2"}]}"#;
    assert!(serde_json::from_str::<Polynomial>(bad).is_err());
}

fn arb_poly(basis: Basis) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0u32..3, 0..=4), -5i64..=5, 1i64..=4);
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut p = Polynomial::zero(basis);
        for (exps, n, d) in terms {
            p.add_term(Monomial::from_exponents(&exps), q(n, d));
        }
        p
    })
}

proptest! {
    #[test]
    fn ring_axioms(x in arb_poly(Basis::A), y in arb_poly(Basis::A), z in arb_poly(Basis::A)) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x + &-&x).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(x in arb_poly(Basis::A), y in arb_poly(Basis::A)) {
        let s = |p: &Polynomial| p.substitute_a_to_w().unwrap();
        prop_assert_eq!(s(&(&x + &y)), &s(&x) + &s(&y));
        prop_assert_eq!(s(&(&x * &y)), &s(&x) * &s(&y));
    }

    #[test]
    fn evaluation_commutes_with_substitution(
        x in arb_poly(Basis::A),
        increments in prop::collection::vec((1i64..20, 1i64..5), 4),
    ) {
        let a_vals: Vec<Rational> = increments.iter().map(|&(n, d)| q(n, d)).collect();
        let w_vals: Vec<Rational> = a_vals
            .iter()
            .scan(q(0, 1), |acc, v| { *acc += v; Some(acc.clone()) })
            .collect();
        prop_assert_eq!(x.substitute_a_to_w().unwrap().eval(&w_vals).unwrap(), x.eval(&a_vals).unwrap());
    }

    #[test]
    fn json_round_trip(x in arb_poly(Basis::W)) {
        let text = serde_json::to_string(&x).unwrap();
        let back: Polynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn big_coefficients_survive_json(k in 60u32..120) {
        let big = Rational::new(num_traits::pow(BigInt::from(3), k as usize), BigInt::from(7));
        let p = Polynomial::constant(Basis::A, big);
        let back: Polynomial = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}
