use super::*;
use crate::registry::Case;
use crate::transform::{
    bernstein_sum, chain_shifted, chain_transform, compose_transform, compose_transform_bis,
    compose_transform_swapped, direct_transform, gf_transform, shifted_transform,
    special_composition, transform_row, Composition, GfMode,
};

pub(super) fn entries() -> Vec<Entry> {
    vec![
        entry(
            "P1.s",
            "s",
            Module::Composition,
            "S_n(q) from the generating function, product and composed forms",
            generating_function,
        ),
        entry(
            "P2.d1",
            "d1",
            Module::Composition,
            "S_n(x+q-xq) is the transform of S_n(x)",
            composition_law,
        ),
        entry(
            "P2.d1bis",
            "d1bis",
            Module::Composition,
            "S_n(1-xq) through the conjugate transform of S_k(1-x)",
            composition_law_bis,
        ),
        entry(
            "C1.e1",
            "e1",
            Module::Composition,
            "S_n(q^m) through S_k(1-[q]_m)",
            |ctx| power_substitution(ctx, true),
        ),
        entry(
            "C1.f1",
            "f1",
            Module::Composition,
            "S_n(q^m) through S_k(q) and [q]_m",
            |ctx| power_substitution(ctx, false),
        ),
        entry(
            "C1.q2",
            "q2",
            Module::Composition,
            "a_n recovered from S_k(-q/(1-q)) and from S_k(q)",
            inverse_relations,
        ),
        entry(
            "C1.g1",
            "g1",
            Module::Composition,
            "S_n((α+1)q) through S_k(αq/(1-q))",
            |ctx| scaled_substitution(ctx, true),
        ),
        entry(
            "C1.h1",
            "h1",
            Module::Composition,
            "S_n((α+1)q) through S_k(q)",
            |ctx| scaled_substitution(ctx, false),
        ),
        entry(
            "P3.q1",
            "q1",
            Module::Composition,
            "transform of (1-q)^m S_{n+m}(x)",
            shifted_law,
        ),
        entry(
            "P3.r1",
            "r1",
            Module::Composition,
            "shifted composition law at m = 0",
            |ctx| shifted_small(ctx, 0),
        ),
        entry(
            "P3.s1",
            "s1",
            Module::Composition,
            "shifted composition law at m = 1",
            |ctx| shifted_small(ctx, 1),
        ),
        entry(
            "P3.t1",
            "t1",
            Module::Composition,
            "shifted composition law at m = 2",
            |ctx| shifted_small(ctx, 2),
        ),
        entry(
            "P3.i2",
            "i2",
            Module::Composition,
            "inverse of the composition law: (1-q)^m S_m(x)",
            composition_inverse,
        ),
        entry(
            "C2.u1",
            "u1",
            Module::Composition,
            "transform of (1-q)^m a_{n+m}",
            shifted_terms,
        ),
        entry(
            "C2.v1",
            "v1",
            Module::Composition,
            "shifted-term law at m = 0",
            |ctx| shifted_terms_small(ctx, 0),
        ),
        entry(
            "C2.w1",
            "w1",
            Module::Composition,
            "shifted-term law at m = 1",
            |ctx| shifted_terms_small(ctx, 1),
        ),
        entry(
            "C2.x1",
            "x1",
            Module::Composition,
            "shifted-term law at m = 2",
            |ctx| shifted_terms_small(ctx, 2),
        ),
        entry(
            "C2.j2",
            "j2",
            Module::Composition,
            "(1-q)^m a_m = Σ C(m,j) (-q)^{m-j} S_j(q)",
            terms_inverse,
        ),
        entry(
            "R.u2",
            "u2",
            Module::Composition,
            "composition law along a product x_0 x_1 ... x_r",
            chains,
        ),
        entry(
            "R.t2",
            "t2",
            Module::Composition,
            "shifted composition law along a product x_0 x_1 ... x_r",
            shifted_chains,
        ),
        entry(
            "R.a3",
            "a3",
            Module::Composition,
            "alternating transforms from q -> 1/q",
            alternating,
        ),
    ]
}

fn generating_function(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max.max(10);
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for n in 0..=top {
            let order = ctx.series_order(n);
            for (mode, tag) in [(GfMode::Product, "product"), (GfMode::Composed, "composed")] {
                let s = Arc::clone(&seq);
                let g = Arc::clone(&seq);
                cases.push(Case::sides(
                    format!("{} n={n} {tag}", seq.name()),
                    vec![var("q", n.max(4))],
                    move |p| direct_transform(&s, n, &p["q"], false),
                    move |p| gf_transform(&g, n, &p["q"], mode, order),
                ));
            }
        }
    }
    Ok(cases)
}

fn composition_law(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max.max(10);
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for n in 0..=top {
            let s = Arc::clone(&seq);
            cases.push(Case::new(
                format!("{} n={n}", seq.name()),
                vec![var("x", n), var("q", n)],
                move |p| compose_transform(&s, n, &p["x"], &p["q"]),
            ));
            let s = Arc::clone(&seq);
            cases.push(Case::new(
                format!("{} n={n} swapped", seq.name()),
                vec![var("x", n), var("q", n)],
                move |p| compose_transform_swapped(&s, n, &p["x"], &p["q"]),
            ));
        }
    }
    Ok(cases)
}

fn composition_law_bis(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max.max(10);
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for n in 0..=top {
            let s = Arc::clone(&seq);
            cases.push(Case::new(
                format!("{} n={n}", seq.name()),
                vec![var("x", n), var("q", n)],
                move |p| compose_transform_bis(&s, n, &p["x"], &p["q"]),
            ));
        }
    }
    Ok(cases)
}

fn special_cases(
    ctx: Ctx,
    tag: &str,
    which: Composition,
    vars: impl Fn(usize) -> Vec<crate::grid::VarReq>,
) -> Vec<Case> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for n in 0..=ctx.bounds.n_max {
            let s = Arc::clone(&seq);
            let w = which.clone();
            cases.push(Case::new(
                format!("{} {tag} n={n}", seq.name()),
                vars(n),
                move |p| special_composition(&s, n, &p["q"], &w),
            ));
        }
    }
    cases
}

fn power_substitution(ctx: Ctx, left: bool) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for m in 1..=ctx.bounds.m_max as u32 {
        let which = if left {
            Composition::PowerLeft { m }
        } else {
            Composition::PowerRight { m }
        };
        let mu = m as usize;
        cases.extend(special_cases(ctx, &format!("m={m}"), which, |n| {
            vec![var("q", n * mu + n).excluding(&[Rational::one()])]
        }));
    }
    Ok(cases)
}

fn inverse_relations(ctx: Ctx) -> Result<Vec<Case>> {
    let q = |n: usize| vec![var("q", 2 * n).excluding(&[Rational::one()])];
    let mut cases = special_cases(ctx, "left", Composition::InverseLeft, q);
    cases.extend(special_cases(ctx, "right", Composition::InverseRight, q));
    Ok(cases)
}

fn scaled_substitution(ctx: Ctx, left: bool) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for n in 0..=ctx.bounds.n_max {
            let s = Arc::clone(&seq);
            cases.push(Case::new(
                format!("{} n={n}", seq.name()),
                vec![
                    var("alpha", n),
                    var("q", 2 * n).excluding(&[Rational::one()]),
                ],
                move |p| {
                    let alpha = p["alpha"].clone();
                    let which = if left {
                        Composition::ScaledLeft { alpha }
                    } else {
                        Composition::ScaledRight { alpha }
                    };
                    special_composition(&s, n, &p["q"], &which)
                },
            ));
        }
    }
    Ok(cases)
}

fn shifted_law(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for m in 0..=ctx.bounds.m_max {
            for n in 0..=6 {
                let s = Arc::clone(&seq);
                cases.push(Case::new(
                    format!("{} m={m} n={n}", seq.name()),
                    vec![var("x", n + m), var("q", n + m)],
                    move |p| shifted_transform(&s, n, m, &p["x"], &p["q"]),
                ));
            }
        }
    }
    Ok(cases)
}

/// `Σ_j C(m,j) (-q)^{m-j} v[j + n]`.
fn binomial_shift(v: &[Rational], n: usize, m: usize, q: &Rational) -> Rational {
    let mq = -q;
    (0..=m)
        .map(|j| c(m, j) * mq.powu((m - j) as u64) * &v[j + n])
        .sum()
}

fn shifted_small(ctx: Ctx, m: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for n in 0..=ctx.bounds.n_max {
            let a = Arc::new(seq.terms(n + m)?);
            cases.push(Case::sides(
                format!("{} n={n}", seq.name()),
                vec![var("x", n + m), var("q", n + m)],
                {
                    let a = Arc::clone(&a);
                    move |p| {
                        let q = &p["q"];
                        let sx = transform_row(&a, n + m, &p["x"]);
                        Ok(q.complement().powu(m as u64) * bernstein_sum(&sx[m..], n, q))
                    }
                },
                move |p| {
                    let (x, q) = (&p["x"], &p["q"]);
                    let st = transform_row(&a, n + m, &(x + q - x * q));
                    Ok(match m {
                        0 => st[n].clone(),
                        1 => &st[n + 1] - q * &st[n],
                        _ => &st[n + 2] - Rational::int(2) * q * &st[n + 1] + q * q * &st[n],
                    })
                },
            ));
        }
    }
    Ok(cases)
}

fn composition_inverse(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for m in 0..=ctx.bounds.n_max {
            let a = Arc::new(seq.terms(m)?);
            cases.push(Case::sides(
                format!("{} m={m}", seq.name()),
                vec![var("x", m), var("q", m)],
                {
                    let a = Arc::clone(&a);
                    move |p| Ok(p["q"].complement().powu(m as u64) * bernstein_sum(&a, m, &p["x"]))
                },
                move |p| {
                    let (x, q) = (&p["x"], &p["q"]);
                    let st = transform_row(&a, m, &(x + q - x * q));
                    Ok(binomial_shift(&st, 0, m, q))
                },
            ));
        }
    }
    Ok(cases)
}

fn shifted_terms_case(seq: &SequenceSpec, n: usize, m: usize) -> Result<Case> {
    let a = Arc::new(seq.terms(n + m)?);
    let b = Arc::clone(&a);
    Ok(Case::sides(
        format!("{} m={m} n={n}", seq.name()),
        vec![var("q", n + m)],
        move |p| {
            let q = &p["q"];
            Ok(q.complement().powu(m as u64) * bernstein_sum(&a[m..], n, q))
        },
        move |p| {
            let q = &p["q"];
            Ok(binomial_shift(&transform_row(&b, n + m, q), n, m, q))
        },
    ))
}

fn shifted_terms(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for m in 0..=ctx.bounds.m_max {
            for n in 0..=ctx.bounds.n_max {
                cases.push(shifted_terms_case(&seq, n, m)?);
            }
        }
    }
    Ok(cases)
}

fn shifted_terms_small(ctx: Ctx, m: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for n in 0..=ctx.bounds.n_max {
            let a = Arc::new(seq.terms(n + m)?);
            let b = Arc::clone(&a);
            cases.push(Case::sides(
                format!("{} n={n}", seq.name()),
                vec![var("q", n + m)],
                move |p| {
                    let q = &p["q"];
                    Ok(q.complement().powu(m as u64) * bernstein_sum(&a[m..], n, q))
                },
                move |p| {
                    let q = &p["q"];
                    let s = transform_row(&b, n + m, q);
                    Ok(match m {
                        0 => s[n].clone(),
                        1 => &s[n + 1] - q * &s[n],
                        _ => &s[n + 2] - Rational::int(2) * q * &s[n + 1] + q * q * &s[n],
                    })
                },
            ));
        }
    }
    Ok(cases)
}

fn terms_inverse(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for m in 0..=ctx.bounds.n_max {
            let a = Arc::new(seq.terms(m)?);
            cases.push(Case::sides(
                format!("{} m={m}", seq.name()),
                vec![var("q", m)],
                {
                    let a = Arc::clone(&a);
                    move |p| Ok(p["q"].complement().powu(m as u64) * &a[m])
                },
                move |p| {
                    let q = &p["q"];
                    Ok(binomial_shift(&transform_row(&a, m, q), 0, m, q))
                },
            ));
        }
    }
    Ok(cases)
}

const CHAIN_N_LIMITS: [usize; 4] = [8, 6, 4, 3];

fn chain_vars(r: usize, degree: usize) -> Vec<crate::grid::VarReq> {
    (0..=r).map(|i| var(&format!("x{i}"), degree)).collect()
}

fn chain_point(p: &crate::grid::Point, r: usize) -> Vec<Rational> {
    (0..=r)
        .map(|i| p[format!("x{i}").as_str()].clone())
        .collect()
}

fn chains(_ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in sample_sequences() {
        for (r, &limit) in CHAIN_N_LIMITS.iter().enumerate() {
            for n in 0..=limit {
                let s = Arc::clone(&seq);
                cases.push(Case::new(
                    format!("{} r={r} n={n}", seq.name()),
                    chain_vars(r, n),
                    move |p| chain_transform(&s, n, &chain_point(p, r)),
                ));
            }
        }
    }
    Ok(cases)
}

fn shifted_chains(_ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in sample_sequences() {
        for r in 0..=3 {
            for m in 0..=2 {
                for n in 0..=3 {
                    let s = Arc::clone(&seq);
                    cases.push(Case::new(
                        format!("{} r={r} m={m} n={n}", seq.name()),
                        chain_vars(r, n + m),
                        move |p| chain_shifted(&s, n, m, &chain_point(p, r)),
                    ));
                }
            }
        }
    }
    Ok(cases)
}

fn alternating(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = special_cases(ctx, "plain", Composition::Alternating, |n| {
        vec![var("q", 2 * n).excluding(&[Rational::zero()])]
    });
    for seq in shared_catalog() {
        for n in 0..=ctx.bounds.n_max {
            let s = Arc::clone(&seq);
            cases.push(Case::new(
                format!("{} composed n={n}", seq.name()),
                vec![var("x", n), var("q", 2 * n).excluding(&[Rational::zero()])],
                move |p| {
                    let which = Composition::AlternatingComposed { x: p["x"].clone() };
                    special_composition(&s, n, &p["q"], &which)
                },
            ));
        }
    }
    Ok(cases)
}
