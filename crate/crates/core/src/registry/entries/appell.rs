use super::*;
use crate::appell::{
    convolve, operator_identity, scaled_transform_identity, umbral_identity, Umbral,
};
use crate::registry::Case;

pub(super) fn entries() -> Vec<Entry> {
    vec![
        entry(
            "AP.e2",
            "e2",
            Module::Appell,
            "Appell polynomials from F(t)e^{yt}: table, f_0 = 1, f_n' = n f_{n-1}",
            definition,
        ),
        entry(
            "AP.f2",
            "f2",
            Module::Appell,
            "Σ C(n,k) (n!/k!) f_k(y) (1-q)^k q^{n-k} = (1-q+qD)^n f_n(y)",
            operator,
        ),
        entry(
            "AP.g2",
            "g2",
            Module::Appell,
            "Bernoulli and Euler polynomials of rational order",
            high_order,
        ),
        entry(
            "AP.k1",
            "k1",
            Module::Appell,
            "λ-scaled transform of f_{n-k}(x)",
            |ctx| scaled(ctx, appell_families()),
        ),
        entry(
            "AP.m1",
            "m1",
            Module::Appell,
            "λ-scaled transform for Bernoulli polynomials of order α",
            |ctx| scaled(ctx, order_family(AppellSpec::bernoulli)),
        ),
        entry(
            "AP.n1",
            "n1",
            Module::Appell,
            "λ-scaled transform for Euler polynomials of order α",
            |ctx| scaled(ctx, order_family(AppellSpec::euler)),
        ),
        entry(
            "AP.f",
            "f",
            Module::Appell,
            "homogeneous form of the difference representation",
            |ctx| homogeneous(ctx, false),
        ),
        entry(
            "AP.fbis",
            "fbis",
            Module::Appell,
            "homogeneous form of the dual difference representation",
            |ctx| homogeneous(ctx, true),
        ),
        entry(
            "AP.h2",
            "h2",
            Module::Appell,
            "umbra C^n = c_n: f_n(0) = c_n and the addition law",
            umbra,
        ),
        entry(
            "AP.t",
            "t",
            Module::Appell,
            "f_n(y) = (C + y)^n = Σ C(n,k) c_k y^{n-k}",
            umbral_expansion,
        ),
        entry(
            "AP.u",
            "u",
            Module::Appell,
            "Σ a_k C(n,k) f_k(y) x^{n-k} through M(n,j)",
            |ctx| per_sequence(ctx, false),
        ),
        entry(
            "AP.ubis",
            "ubis",
            Module::Appell,
            "Σ a_k C(n,k) f_{n-k}(y) x^k through dual differences",
            |ctx| per_sequence(ctx, true),
        ),
        entry(
            "AP.s2",
            "s2",
            Module::Appell,
            "Σ a_k C(n,k) (bx)^k f_{n-k}(y+(1-b)x) = Σ S_k(1-b) C(n,k) x^k f_{n-k}(y)",
            rescaled,
        ),
        entry(
            "AP.v",
            "v",
            Module::Appell,
            "Fibonacci instance F_{n+r} of the Appell identity",
            fibonacci,
        ),
        entry(
            "AP.o1",
            "o1",
            Module::Appell,
            "Fibonacci instance with r = n",
            fibonacci_diagonal,
        ),
        entry(
            "AP.w",
            "w",
            Module::Appell,
            "(-1)^n C(α, n+r) instance, difference form",
            |ctx| binomial(ctx, false),
        ),
        entry(
            "AP.wbis",
            "wbis",
            Module::Appell,
            "(-1)^n C(α, n+r) instance, dual difference form",
            |ctx| binomial(ctx, true),
        ),
    ]
}

fn order_family(make: fn(Rational) -> AppellSpec) -> Vec<Arc<AppellSpec>> {
    rl(&["1", "2", "1/2"])
        .into_iter()
        .map(|a| Arc::new(make(a)))
        .collect()
}

fn definition(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max.max(10);
    let mut cases = Vec::new();
    for (i, fam) in appell_families().into_iter().enumerate() {
        let tag = format!("family{i}");
        let f = Arc::clone(&fam);
        cases.push(Case::sides(
            format!("{tag} f_0"),
            vec![var("y", 0)],
            move |p| f.eval(0, &p["y"]),
            |_| Ok(Rational::one()),
        ));
        for n in 0..=top {
            let (f, g) = (Arc::clone(&fam), Arc::clone(&fam));
            cases.push(Case::sides(
                format!("{tag} n={n} series"),
                vec![var("y", n)],
                move |p| f.eval(n, &p["y"]),
                move |p| g.eval_by_series(n, &p["y"]),
            ));
            if n == 0 {
                continue;
            }
            let deriv = fam.poly(n)?.derivative();
            let lower = fam.poly(n - 1)?.scale(&int(n));
            for j in 0..n {
                let (d, l) = (deriv.coeff(j), lower.coeff(j));
                cases.push(Case::point(
                    format!("{tag} n={n} derivative y^{j}"),
                    move || Ok((d.clone(), l.clone())),
                ));
            }
        }
    }
    Ok(cases)
}

fn operator(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (i, fam) in appell_families().into_iter().enumerate() {
        for n in 0..=ctx.bounds.n_max {
            let f = Arc::clone(&fam);
            cases.push(Case::new(
                format!("family{i} n={n}"),
                vec![var("q", n), var("y", n)],
                move |p| operator_identity(&f, n, &p["q"], &p["y"]),
            ));
        }
    }
    Ok(cases)
}

fn high_order(_ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    let pairs = [("1", "1"), ("1/2", "1/2"), ("1", "2"), ("1/3", "-1/2")];
    for (name, make) in [
        (
            "bernoulli",
            AppellSpec::bernoulli as fn(Rational) -> AppellSpec,
        ),
        ("euler", AppellSpec::euler),
    ] {
        for (a1, a2) in pairs {
            let (f, g) = (Arc::new(make(r(a1))), Arc::new(make(r(a2))));
            let sum = Arc::new(make(r(a1) + r(a2)));
            for n in 0..=6 {
                let (f, g, s) = (Arc::clone(&f), Arc::clone(&g), Arc::clone(&sum));
                cases.push(Case::sides(
                    format!("{name} orders {a1}+{a2} n={n}"),
                    vec![var("y1", n), var("y2", n)],
                    move |p| convolve(&f, &g, n, &p["y1"], &p["y2"]),
                    move |p| s.eval(n, &(&p["y1"] + &p["y2"])),
                ));
            }
        }
    }
    // order one against the reciprocal of its generating function
    let top = 12;
    let b = AppellSpec::bernoulli(Rational::one()).moments()?;
    let e = AppellSpec::euler(Rational::one()).moments()?;
    for n in 0..=top.min(b.len() - 1) {
        if n >= 1 {
            let b = b.clone();
            cases.push(Case::point(
                format!("bernoulli order 1 recurrence n={n}"),
                move || {
                    let s = (0..=n).map(|k| c(n + 1, k) * &b[k]).sum();
                    Ok((s, Rational::zero()))
                },
            ));
        }
        let e = e.clone();
        cases.push(Case::point(
            format!("euler order 1 recurrence n={n}"),
            move || {
                let s: Rational = (0..=n).map(|k| c(n, k) * &e[k]).sum::<Rational>() + &e[n];
                let target = if n == 0 {
                    Rational::int(2)
                } else {
                    Rational::zero()
                };
                Ok((s, target))
            },
        ));
    }
    Ok(cases)
}

fn scaled(ctx: Ctx, families: Vec<Arc<AppellSpec>>) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (i, fam) in families.into_iter().enumerate() {
        for lambda in rl(&["1", "2", "-3/2"]) {
            for n in 0..=ctx.bounds.n_max {
                let f = Arc::clone(&fam);
                let l = lambda.clone();
                cases.push(Case::new(
                    format!("family{i} lambda={lambda} n={n}"),
                    vec![var("x", n), var("q", 2 * n).excluding(&[Rational::zero()])],
                    move |p| scaled_transform_identity(&f, n, &l, &p["x"], &p["q"]),
                ));
            }
        }
    }
    Ok(cases)
}

fn homogeneous(ctx: Ctx, dual: bool) -> Result<Vec<Case>> {
    let mono = Arc::new(AppellSpec::monomial());
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        let which = Arc::new(if dual {
            Umbral::Fbis((*seq).clone())
        } else {
            Umbral::F((*seq).clone())
        });
        for n in 0..=ctx.bounds.n_max {
            let (m, w) = (Arc::clone(&mono), Arc::clone(&which));
            cases.push(Case::new(
                format!("{} n={n}", seq.name()),
                vec![var("x", n), var("y", n)],
                move |p| umbral_identity(&m, &w, n, &p["x"], &p["y"]),
            ));
        }
    }
    Ok(cases)
}

fn umbra(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (i, fam) in appell_families().into_iter().enumerate() {
        let moments = Arc::new(fam.moments()?);
        for n in 0..=ctx.bounds.n_max {
            let (f, mo) = (Arc::clone(&fam), Arc::clone(&moments));
            cases.push(Case::point(format!("family{i} n={n} at zero"), move || {
                Ok((f.eval(n, &Rational::zero())?, mo[n].clone()))
            }));
            let (f, g) = (Arc::clone(&fam), Arc::clone(&fam));
            cases.push(Case::sides(
                format!("family{i} n={n} addition"),
                vec![var("x", n), var("y", n)],
                move |p| f.eval(n, &(&p["x"] + &p["y"])),
                move |p| {
                    let fx = g.evals(n, &p["x"])?;
                    let y = &p["y"];
                    Ok((0..=n)
                        .map(|k| c(n, k) * &fx[k] * y.powu((n - k) as u64))
                        .sum())
                },
            ));
        }
    }
    Ok(cases)
}

fn umbral_expansion(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (i, fam) in appell_families().into_iter().enumerate() {
        let moments = Arc::new(fam.moments()?);
        for n in 0..=ctx.bounds.n_max.max(10) {
            let (f, mo) = (Arc::clone(&fam), Arc::clone(&moments));
            cases.push(Case::sides(
                format!("family{i} n={n}"),
                vec![var("y", n)],
                move |p| f.eval(n, &p["y"]),
                move |p| poly_sum(n, &p["y"], |j| Ok(c(n, j) * &mo[n - j])),
            ));
        }
    }
    Ok(cases)
}

fn umbral_cases(ctx: Ctx, tag: &str, which: Umbral, families: &[Arc<AppellSpec>]) -> Vec<Case> {
    let which = Arc::new(which);
    let mut cases = Vec::new();
    for (i, fam) in families.iter().enumerate() {
        for n in 0..=ctx.bounds.n_max {
            let (f, w) = (Arc::clone(fam), Arc::clone(&which));
            cases.push(Case::new(
                format!("{tag} family{i} n={n}"),
                vec![var("x", n), var("y", n)],
                move |p| umbral_identity(&f, &w, n, &p["x"], &p["y"]),
            ));
        }
    }
    cases
}

fn per_sequence(ctx: Ctx, dual: bool) -> Result<Vec<Case>> {
    let families = appell_families();
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        let which = if dual {
            Umbral::Ubis((*seq).clone())
        } else {
            Umbral::U((*seq).clone())
        };
        cases.extend(umbral_cases(ctx, seq.name(), which, &families));
    }
    Ok(cases)
}

fn fibonacci(ctx: Ctx) -> Result<Vec<Case>> {
    let families = appell_families();
    Ok((0..=ctx.bounds.r_max as i64)
        .flat_map(|rr| umbral_cases(ctx, &format!("r={rr}"), Umbral::V { r: rr }, &families))
        .collect())
}

fn fibonacci_diagonal(ctx: Ctx) -> Result<Vec<Case>> {
    Ok(umbral_cases(
        ctx,
        "diagonal",
        Umbral::O1,
        &appell_families(),
    ))
}

fn binomial(ctx: Ctx, dual: bool) -> Result<Vec<Case>> {
    let families = appell_families();
    let mut cases = Vec::new();
    for alpha in rl(&["5/2", "-1/3", "3"]) {
        for rr in 0..=ctx.bounds.r_max as i64 {
            let which = if dual {
                Umbral::Wbis {
                    alpha: alpha.clone(),
                    r: rr,
                }
            } else {
                Umbral::W {
                    alpha: alpha.clone(),
                    r: rr,
                }
            };
            cases.extend(umbral_cases(
                ctx,
                &format!("alpha={alpha} r={rr}"),
                which,
                &families,
            ));
        }
    }
    Ok(cases)
}

fn rescaled(ctx: Ctx) -> Result<Vec<Case>> {
    let families = appell_families();
    let mut cases = Vec::new();
    for seq in sample_sequences() {
        for (i, fam) in families.iter().enumerate() {
            for n in 0..=ctx.bounds.n_max {
                let (f, s) = (Arc::clone(fam), Arc::clone(&seq));
                cases.push(Case::new(
                    format!("{} family{i} n={n}", seq.name()),
                    vec![var("b", n), var("x", n), var("y", n)],
                    move |p| {
                        let which = Umbral::S2 {
                            seq: (*s).clone(),
                            b: p["b"].clone(),
                        };
                        umbral_identity(&f, &which, n, &p["x"], &p["y"])
                    },
                ));
            }
        }
    }
    Ok(cases)
}
