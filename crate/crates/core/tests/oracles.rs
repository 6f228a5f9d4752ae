//! Hand-derived values and an independent expansion of the transform.

use bt_core::appell::{operator_identity, scaled_transform_identity, umbral_identity, Umbral};
use bt_core::probability::{
    binomial_pmf, composed_law, expect, verify_expectation_identity, ExpectationIdentity,
};
use bt_core::rational::binom;
use bt_core::sequences::catalog;
use bt_core::transform::{
    basis_representation, compose_transform, direct_transform, gf_transform, shifted_transform,
    special_composition, Composition, GfMode,
};
use bt_core::{AppellSpec, Poly, Rational, SequenceSpec};

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn coeffs(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(Rational::to_string).collect()
}

/// `Σ a_k C(n,k) (1-q)^k q^(n-k)` expanded with polynomial arithmetic.
fn expand(a: &[Rational], n: usize) -> Poly {
    let one_minus_q = Poly::linear(Rational::one(), -Rational::one());
    let q = Poly::monomial(1);
    let pow = |p: &Poly, e: usize| (0..e).fold(Poly::constant(Rational::one()), |acc, _| &acc * p);
    (0..=n).fold(Poly::zero(), |acc, k| {
        let term =
            (&pow(&one_minus_q, k) * &pow(&q, n - k)).scale(&(&a[k] * binom(n as i64, k as i64)));
        &acc + &term
    })
}

#[test]
fn harmonic_values() {
    let h = SequenceSpec::Harmonic;
    assert_eq!(h.term(2).unwrap(), r("3/2"));
    let p = basis_representation(&h, 2, false).unwrap();
    assert_eq!(coeffs(&p), ["3/2", "-1", "-1/2"]);
    assert_eq!(direct_transform(&h, 2, &r("1/2"), false).unwrap(), r("7/8"));
    assert_eq!(r("3/2") - r("5/8"), r("7/8"));
    for mode in [GfMode::Product, GfMode::Composed] {
        assert_eq!(gf_transform(&h, 2, &r("1/2"), mode, 2).unwrap(), r("7/8"));
    }
}

#[test]
fn basis_form_matches_brute_expansion() {
    for spec in catalog() {
        for n in 0..=10 {
            let a = spec.terms(n).unwrap();
            assert_eq!(
                basis_representation(&spec, n, false).unwrap(),
                expand(&a, n),
                "{spec} n={n}"
            );
        }
    }
}

#[test]
fn sequence_terms() {
    let fc = SequenceSpec::FussCatalan { m: 1, s: 1 };
    assert_eq!(fc.term(1).unwrap(), r("1"));
    let qi = SequenceSpec::QInt { p: r("2"), r: 0 };
    assert_eq!(qi.term(2).unwrap(), r("3"));
    assert_eq!(SequenceSpec::fibonacci(0).term_at(-1).unwrap(), r("1"));
    let fib2 = SequenceSpec::fibonacci(2);
    assert_eq!(fib2.diff_table(2).unwrap().values, [r("3"), r("1"), r("0")]);
    let bell = SequenceSpec::BellAlt { x: r("1") };
    assert_eq!(bell.dual_diff(2).unwrap(), r("5"));
    let ba = SequenceSpec::BinomAlt {
        alpha: r("5"),
        r: 0,
    };
    assert_eq!(ba.dual_diff(2).unwrap(), r("21"));
    // q-integer row at p = 2: (2 - q)^2 - 1
    assert_eq!(
        coeffs(&basis_representation(&qi, 2, false).unwrap()),
        ["3", "-4", "1"]
    );
}

#[test]
fn squared_binomial_example() {
    let t = SequenceSpec::UserTable(vec![r("1"), r("-1"), r("1")]);
    let weighted: Rational = (0..=2)
        .map(|k| {
            let a = t.term(k).unwrap();
            let c = binom(2, k as i64);
            a * &c * &c * r("1/2").powu(2)
        })
        .sum();
    assert_eq!(weighted, r("-1/2"));
}

#[test]
fn composition_examples() {
    let h = SequenceSpec::Harmonic;
    // S_2(3/4) = H_2 - 3/4 - 9/32
    let c = compose_transform(&h, 2, &r("1/2"), &r("1/2")).unwrap();
    assert_eq!(c.lhs, r("15/32"));
    assert_eq!(c.rhs, r("15/32"));
    // inverse relation at n = 0, x = 0, m = 2
    let inv = shifted_transform(&h, 0, 2, &r("0"), &r("1/2")).unwrap();
    assert_eq!(inv.lhs, r("3/8"));
    assert_eq!(inv.rhs, r("3/8"));
    let pw = special_composition(&h, 2, &r("1/2"), &Composition::PowerLeft { m: 2 }).unwrap();
    assert_eq!(pw.lhs, r("39/32"));
    assert_eq!(pw.lhs, pw.rhs);
    let sc =
        special_composition(&h, 1, &r("1/3"), &Composition::ScaledLeft { alpha: r("1") }).unwrap();
    assert_eq!(sc.lhs, sc.rhs);
}

#[test]
fn appell_examples() {
    let b1 = AppellSpec::bernoulli(r("1"));
    assert_eq!(coeffs(&b1.poly(2).unwrap()), ["1/6", "-1", "1"]);
    let e1 = AppellSpec::euler(r("1"));
    assert_eq!(coeffs(&e1.poly(1).unwrap()), ["-1/2", "1"]);
    let op = operator_identity(&b1, 3, &r("1/2"), &r("1/3")).unwrap();
    assert_eq!(op.lhs, op.rhs);
    let mono = AppellSpec::monomial();
    let k1 = scaled_transform_identity(&mono, 2, &r("2"), &r("1"), &r("1/3")).unwrap();
    assert_eq!(k1.lhs, k1.rhs);
    let b2 = AppellSpec::bernoulli(r("2"));
    let k1 = scaled_transform_identity(&b2, 3, &r("-3/2"), &r("1/4"), &r("2/5")).unwrap();
    assert_eq!(k1.lhs, k1.rhs);
    // o1 with f_k(y) = y^k at x = 1, y = 0: only k = 0 survives on the left
    let o1 = umbral_identity(&mono, &Umbral::O1, 2, &r("1"), &r("0")).unwrap();
    assert_eq!(o1.lhs, r("1"));
    let f = |k: i64| bt_core::sequences::fibo_standard(k);
    let by_hand: Rational = (0..=2)
        .map(|j| binom(2, j) * f(2 * j) * bt_core::rational::sign(2 - j))
        .sum();
    assert_eq!(o1.rhs, by_hand);
    assert_eq!(o1.lhs, o1.rhs);
}

#[test]
fn probability_examples() {
    let b = binomial_pmf(2, &r("1/3")).unwrap();
    assert_eq!(b.probs(), [r("4/9"), r("4/9"), r("1/9")]);
    let w = composed_law(2, &r("1/2"), &r("1/3")).unwrap();
    assert_eq!(w.prob(0), r("4/9"));
    assert_eq!(w.probs(), b.probs());
    let h = SequenceSpec::Harmonic;
    assert_eq!(
        expect(&h, &binomial_pmf(2, &r("1/2")).unwrap()).unwrap(),
        r("7/8")
    );
    let p2 =
        verify_expectation_identity(&h, 2, 0, &r("1/2"), &r("0"), ExpectationIdentity::Inverse)
            .unwrap();
    assert_eq!(p2.lhs, r("3/8"));
    assert_eq!(p2.rhs, r("3/8"));
    // f(k) = k: E T(1 + Z(1)) = (1 + (1-x)) (1-y)
    let id = SequenceSpec::UserTable((0..=4).map(Rational::int).collect());
    let (x, y) = (r("1/3"), r("1/4"));
    let m2 = verify_expectation_identity(&id, 1, 1, &x, &y, ExpectationIdentity::Composed).unwrap();
    let mean = (Rational::one() + x.complement()) * y.complement();
    assert_eq!(m2.lhs, x.complement() * mean);
    assert_eq!(m2.lhs, m2.rhs);
}
