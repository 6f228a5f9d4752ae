use super::*;
use crate::grid::VarReq;
use crate::probability::{
    binomial_pmf, composed_law, expect, expectation_via_transform, monte_carlo,
    verify_expectation_identity, ExpectationIdentity,
};
use crate::registry::Case;
use crate::transform::{direct_transform, Comparison};

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry {
            note: Some(monte_carlo_note),
            ..entry(
                "PR.k2",
                "k2",
                Module::Probability,
                "T(Z(n)) is binomial with success (1-x)(1-y); E f(Z(n)) = S_n(x)",
                composed_binomial,
            )
        },
        entry(
            "PR.m2",
            "m2",
            Module::Probability,
            "(1-x)^m E f(T(m+Z(n))) = Σ C(m,j) (-x)^{m-j} E f(T(Z(j+n)))",
            composed_expectation,
        ),
        entry(
            "PR.o2",
            "o2",
            Module::Probability,
            "the y = 0 case: (1-x)^m E f(m+Z(n))",
            plain_expectation,
        ),
        entry(
            "PR.p2",
            "p2",
            Module::Probability,
            "the n = y = 0 case: (1-x)^m f(m)",
            inverse_expectation,
        ),
    ]
}

fn unit(name: &str, degree: usize) -> VarReq {
    VarReq::unit(name, degree)
}

fn composed_binomial(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in 0..=12 {
        for k in 0..=n {
            cases.push(Case::sides(
                format!("n={n} k={k}"),
                vec![unit("x", n), unit("y", n)],
                move |p| Ok(composed_law(n, &p["x"], &p["y"])?.prob(k)),
                move |p| {
                    let s = p["x"].complement() * p["y"].complement();
                    Ok(binomial_pmf(n, &s)?.prob(k))
                },
            ));
        }
    }
    for seq in shared_catalog() {
        for n in 0..=ctx.bounds.n_max.max(10) {
            let (s, t) = (Arc::clone(&seq), Arc::clone(&seq));
            cases.push(Case::sides(
                format!("{} n={n} expectation", seq.name()),
                vec![unit("x", n)],
                move |p| expect(&s, &binomial_pmf(n, &p["x"].complement())?),
                move |p| direct_transform(&t, n, &p["x"], false),
            ));
        }
    }
    Ok(cases)
}

fn monte_carlo_note(ctx: Ctx) -> Result<Option<String>> {
    let (x, y) = (r("1/2"), r("1/3"));
    let rep = monte_carlo(2, &x, &y, ctx.mc_trials, ctx.seed, ctx.mode)?;
    let worst = rep.z_scores.iter().fold(0.0f64, |m, z| m.max(z.abs()));
    let verdict = if rep.flagged.is_empty() {
        "all bins within 5 standard errors".to_string()
    } else {
        format!("flagged bins {:?}", rep.flagged)
    };
    Ok(Some(format!(
        "Monte Carlo n=2 x={x} y={y} trials={} seed={}: {verdict} (max |z| = {worst:.3})",
        rep.trials, rep.seed
    )))
}

fn composed_expectation(_ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for m in 0..=3 {
            for n in 0..=6 {
                let s = Arc::clone(&seq);
                cases.push(Case::new(
                    format!("{} m={m} n={n}", seq.name()),
                    vec![unit("x", n + m), unit("y", n + m)],
                    move |p| {
                        verify_expectation_identity(
                            &s,
                            m,
                            n,
                            &p["x"],
                            &p["y"],
                            ExpectationIdentity::Composed,
                        )
                    },
                ));
            }
        }
    }
    // the same numbers from the transform side
    for seq in sample_sequences() {
        for m in 0..=3 {
            for n in 0..=6 {
                let s = Arc::clone(&seq);
                cases.push(Case::new(
                    format!("{} m={m} n={n} transform lhs", seq.name()),
                    vec![unit("x", n + m), unit("y", n + m)],
                    move |p| {
                        let (x, y) = (&p["x"], &p["y"]);
                        let prob = verify_expectation_identity(
                            &s,
                            m,
                            n,
                            x,
                            y,
                            ExpectationIdentity::Composed,
                        )?;
                        let tr = expectation_via_transform(&s, m, n, x, y)?;
                        Ok(Comparison::new(prob.lhs, tr.lhs))
                    },
                ));
                let s = Arc::clone(&seq);
                cases.push(Case::new(
                    format!("{} m={m} n={n} transform rhs", seq.name()),
                    vec![unit("x", n + m), unit("y", n + m)],
                    move |p| {
                        let (x, y) = (&p["x"], &p["y"]);
                        let prob = verify_expectation_identity(
                            &s,
                            m,
                            n,
                            x,
                            y,
                            ExpectationIdentity::Composed,
                        )?;
                        let tr = expectation_via_transform(&s, m, n, x, y)?;
                        Ok(Comparison::new(prob.rhs, tr.rhs))
                    },
                ));
            }
        }
    }
    Ok(cases)
}

fn plain_expectation(_ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for m in 0..=3 {
            for n in 0..=6 {
                let s = Arc::clone(&seq);
                cases.push(Case::new(
                    format!("{} m={m} n={n}", seq.name()),
                    vec![unit("x", n + m)],
                    move |p| {
                        verify_expectation_identity(
                            &s,
                            m,
                            n,
                            &p["x"],
                            &Rational::zero(),
                            ExpectationIdentity::Plain,
                        )
                    },
                ));
            }
        }
    }
    Ok(cases)
}

fn inverse_expectation(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for m in 0..=ctx.bounds.n_max {
            let s = Arc::clone(&seq);
            cases.push(Case::new(
                format!("{} m={m}", seq.name()),
                vec![unit("x", m)],
                move |p| {
                    verify_expectation_identity(
                        &s,
                        m,
                        0,
                        &p["x"],
                        &Rational::zero(),
                        ExpectationIdentity::Inverse,
                    )
                },
            ));
        }
    }
    Ok(cases)
}
