use bt_core::appell::AppellFamily;
use bt_core::grid::Point;
use bt_core::probability::{binomial_pmf, compose_pmf};
use bt_core::rational::sign;
use bt_core::special::{bell, geometric};
use bt_core::transform::{
    all_routes, basis_representation, direct_transform, dual_diffs, forward_diffs,
};
use bt_core::{
    check_identity_on_grid, AppellSpec, CheckOutcome, ExecMode, GridConfig, Poly, Rational,
    SequenceSpec, Series, VarReq,
};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(p, q)| Rational::frac(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn unit() -> impl Strategy<Value = Rational> {
    (0i64..=12, 1i64..=12)
        .prop_filter("p <= q", |(p, q)| p <= q)
        .prop_map(|(p, q)| Rational::frac(p, q))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..=max_len).prop_map(Poly::new)
}

fn table(min: usize, max: usize) -> impl Strategy<Value = SequenceSpec> {
    prop::collection::vec(rat(), min..=max).prop_map(SequenceSpec::UserTable)
}

fn binom(n: usize, k: usize) -> Rational {
    bt_core::rational::binom(n as i64, k as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_ring_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &(-&a), Rational::zero());
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn division_undoes_multiplication(a in rat(), b in nonzero()) {
        prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a.clone());
        prop_assert!(a.checked_div(&Rational::zero()).is_err());
    }

    #[test]
    fn rationals_stay_canonical(a in rat(), b in nonzero()) {
        let v = a.checked_div(&b).unwrap();
        prop_assert!(v.denom() > &num_bigint::BigInt::from(0));
        let g = num_integer::Integer::gcd(v.numer(), v.denom());
        prop_assert_eq!(g, num_bigint::BigInt::from(1));
        prop_assert_eq!(v.to_string().parse::<Rational>().unwrap(), v);
    }

    #[test]
    fn sums_match_pairwise_addition(v in prop::collection::vec(rat(), 0..20)) {
        let folded = v.iter().fold(Rational::zero(), |acc, x| acc + x);
        prop_assert_eq!(v.iter().sum::<Rational>(), folded);
    }

    #[test]
    fn poly_eval_is_a_ring_map(p in poly(6), r in poly(6), t in rat()) {
        prop_assert_eq!((&p + &r).eval(&t), p.eval(&t) + r.eval(&t));
        prop_assert_eq!((&p * &r).eval(&t), p.eval(&t) * r.eval(&t));
        prop_assert_eq!((&p - &r).eval(&t), p.eval(&t) - r.eval(&t));
    }

    #[test]
    fn poly_has_no_trailing_zero(p in poly(6)) {
        prop_assert!(p.is_zero() || !p.coeffs().last().unwrap().is_zero());
        let naive: Rational = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rational::frac(2, 3).powu(k as u64))
            .sum();
        prop_assert_eq!(p.eval(&Rational::frac(2, 3)), naive);
    }

    #[test]
    fn exp_and_log_are_inverse(tail in prop::collection::vec(rat(), 1..6)) {
        let order = tail.len();
        // s has constant term 1, u has constant term 0
        let mut s = vec![Rational::one()];
        s.extend(tail.iter().cloned());
        let s = Series::new(order, s);
        prop_assert_eq!(s.log().unwrap().exp().unwrap(), s);
        let mut u = vec![Rational::zero()];
        u.extend(tail.iter().cloned());
        let u = Series::new(order, u);
        prop_assert_eq!(u.exp().unwrap().log().unwrap(), u);
    }

    #[test]
    fn series_powers_add_exponents(
        tail in prop::collection::vec(rat(), 1..5),
        e1 in rat(),
        e2 in rat(),
    ) {
        let order = tail.len();
        let mut c = vec![Rational::one()];
        c.extend(tail);
        let s = Series::new(order, c);
        let lhs = s.pow(&(&e1 + &e2)).unwrap();
        let rhs = s.pow(&e1).unwrap().mul(&s.pow(&e2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn grid_never_certifies_a_nonzero_polynomial(
        roots in prop::collection::vec(0usize..10, 0..6),
        lead in nonzero(),
    ) {
        // zeros placed on the default sample points themselves
        let d = roots.len();
        let grid = GridConfig::default().build(&[VarReq::new("t", d)]).unwrap();
        let pts = grid.vars()[0].points.clone();
        prop_assert!(pts.len() > d);
        let mut p = Poly::constant(lead);
        for &i in &roots {
            p = &p * &Poly::linear(-&pts[i % pts.len()], Rational::one());
        }
        let lhs = move |pt: &Point| Ok(p.eval(&pt["t"]));
        let rhs = |_: &Point| Ok(Rational::zero());
        let out = check_identity_on_grid(&lhs, &rhs, &grid, ExecMode::Sequential).unwrap();
        prop_assert!(matches!(out, CheckOutcome::Fail(_)));
    }

    #[test]
    fn grid_points_are_distinct_and_avoid_exclusions(d in 0usize..14, skip in rat()) {
        let grid = GridConfig::default()
            .build(&[VarReq::new("t", d).excluding(std::slice::from_ref(&skip))])
            .unwrap();
        let pts = &grid.vars()[0].points;
        prop_assert!(pts.len() > d);
        prop_assert!(!pts.contains(&skip));
        let mut sorted = pts.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), pts.len());
    }

    #[test]
    fn difference_table_recurrence(seq in table(2, 11)) {
        let SequenceSpec::UserTable(a) = &seq else { unreachable!() };
        let top = a.len() - 1;
        let rows: Vec<Vec<Rational>> = (0..=top).map(|n| forward_diffs(a, n)).collect();
        for n in 0..=top {
            prop_assert_eq!(&rows[n][0], &a[n]);
            for j in 1..=n {
                prop_assert_eq!(&rows[n][j], &(&rows[n][j - 1] - &rows[n - 1][j - 1]));
            }
        }
    }

    #[test]
    fn shifted_differences_collapse_to_dual(seq in table(7, 7)) {
        // Σ_j (-1)^(k-j) C(n,j) M(n+k, j+k) = M̄(k) for every n
        let SequenceSpec::UserTable(a) = &seq else { unreachable!() };
        let mbar = dual_diffs(a, 6);
        for k in 0..=6usize {
            for n in 0..=(6 - k) {
                let row = forward_diffs(a, n + k);
                let lhs: Rational = (0..=n)
                    .map(|j| sign(k as i64 - j as i64) * binom(n, j) * &row[j + k])
                    .sum();
                prop_assert_eq!(&lhs, &mbar[k]);
            }
        }
    }

    #[test]
    fn conjugate_is_reflection(seq in table(1, 11), q in rat(), n in 0usize..=10) {
        let n = n.min(match &seq { SequenceSpec::UserTable(a) => a.len() - 1, _ => 0 });
        prop_assert_eq!(
            direct_transform(&seq, n, &q, true).unwrap(),
            direct_transform(&seq, n, &q.complement(), false).unwrap()
        );
        prop_assert_eq!(
            basis_representation(&seq, n, true).unwrap().eval(&q),
            direct_transform(&seq, n, &q, true).unwrap()
        );
    }

    #[test]
    fn four_routes_agree_on_random_tables(seq in table(1, 11), q in rat(), n in 0usize..=10) {
        let n = n.min(match &seq { SequenceSpec::UserTable(a) => a.len() - 1, _ => 0 });
        let routes = all_routes(&seq, n, &q).unwrap();
        prop_assert_eq!(routes.len(), 4);
        for r in &routes[1..] {
            prop_assert_eq!(&r.value, &routes[0].value);
        }
    }

    #[test]
    fn transform_is_linear(
        a in prop::collection::vec(rat(), 9),
        b in prop::collection::vec(rat(), 9),
        c in rat(),
        q in rat(),
    ) {
        let mix: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x * &c + y).collect();
        let s = |v: &Vec<Rational>| direct_transform(&SequenceSpec::UserTable(v.clone()), 8, &q, false).unwrap();
        prop_assert_eq!(s(&mix), s(&a) * &c + s(&b));
    }

    #[test]
    fn pmfs_are_normalized(n in 0usize..=12, s1 in unit(), s2 in unit()) {
        let inner = binomial_pmf(n, &s1).unwrap();
        prop_assert_eq!(inner.probs().iter().sum::<Rational>(), Rational::one());
        prop_assert!(inner.probs().iter().all(|p| !p.is_negative()));
        let composed = compose_pmf(&s2, &inner).unwrap();
        prop_assert_eq!(composed.probs().iter().sum::<Rational>(), Rational::one());
        let direct = binomial_pmf(n, &(&s1 * &s2)).unwrap();
        prop_assert_eq!(composed.probs(), direct.probs());
    }

    #[test]
    fn generic_families_are_appell(moments in prop::collection::vec(rat(), 0..10)) {
        let mut c = vec![Rational::one()];
        c.extend(moments);
        let spec = AppellSpec::with_order(AppellFamily::Generic(c.clone()), 10).unwrap();
        prop_assert_eq!(spec.poly(0).unwrap(), Poly::constant(Rational::one()));
        for n in 1..=10 {
            let d = spec.poly(n).unwrap().derivative();
            prop_assert_eq!(d, spec.poly(n - 1).unwrap().scale(&Rational::int(n as i64)));
            let at_zero = c.get(n).cloned().unwrap_or_else(Rational::zero);
            prop_assert_eq!(spec.eval(n, &Rational::zero()).unwrap(), at_zero);
        }
    }

    #[test]
    fn appell_orders_add(a1 in rat(), a2 in rat(), y1 in rat(), y2 in rat(), n in 0usize..=6) {
        for make in [AppellSpec::bernoulli, AppellSpec::euler] {
            let lhs = bt_core::appell::convolve(&make(a1.clone()), &make(a2.clone()), n, &y1, &y2).unwrap();
            let rhs = make(&a1 + &a2).eval(n, &(&y1 + &y2)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bell_and_geometric_recurrences(x in rat(), n in 1usize..=8) {
        let next: Rational = (0..=n).map(|l| binom(n, l) * bell(l, &x)).sum::<Rational>() * &x;
        prop_assert_eq!(bell(n + 1, &x), next);
        let lhs = (&x + Rational::one()) * geometric(n, &x);
        let rhs: Rational = (0..=n).map(|k| binom(n, k) * geometric(k, &x)).sum::<Rational>() * &x;
        prop_assert_eq!(lhs, rhs);
    }
}
