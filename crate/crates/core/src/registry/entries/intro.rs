use super::*;
use crate::registry::Case;
use crate::special::komatsu_d;
use crate::transform::direct_transform;

pub(super) fn entries() -> Vec<Entry> {
    vec![
        entry(
            "BT.a",
            "a",
            Module::Intro,
            "harmonic transform: S_n(q) = H_n - Σ_j q^j/j",
            harmonic_expansion,
        ),
        entry(
            "BT.b",
            "b",
            Module::Intro,
            "homogeneous harmonic sum in x, y",
            harmonic_homogeneous,
        ),
        entry(
            "BT.kom",
            "komatsu",
            Module::Intro,
            "order-r harmonic transform with coefficients D_n(r,j)",
            generalized_harmonic,
        ),
    ]
}

fn harmonic_expansion(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max.max(20);
    Ok((0..=top)
        .map(|n| {
            Case::sides(
                format!("n={n}"),
                vec![var("q", n.max(10))],
                move |p| direct_transform(&SequenceSpec::Harmonic, n, &p["q"], false),
                move |p| {
                    let q = &p["q"];
                    let tail: Rational = (1..=n).map(|j| q.powu(j as u64) / int(j)).sum();
                    Ok(harmonic_number(n, 1) - tail)
                },
            )
        })
        .collect())
}

fn harmonic_homogeneous(ctx: Ctx) -> Result<Vec<Case>> {
    Ok((0..=ctx.bounds.n_max)
        .map(|n| {
            Case::sides(
                format!("n={n}"),
                vec![var("x", n), var("y", n)],
                move |p| {
                    let (x, y) = (&p["x"], &p["y"]);
                    Ok((0..=n)
                        .map(|k| {
                            harmonic_number(k, 1)
                                * c(n, k)
                                * x.powu(k as u64)
                                * y.powu((n - k) as u64)
                        })
                        .sum())
                },
                move |p| {
                    let (x, y) = (&p["x"], &p["y"]);
                    let s = x + y;
                    let tail: Rational = (1..=n)
                        .map(|j| y.powu(j as u64) / int(j) * s.powu((n - j) as u64))
                        .sum();
                    Ok(s.powu(n as u64) * harmonic_number(n, 1) - tail)
                },
            )
        })
        .collect())
}

fn generalized_harmonic(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max.max(10);
    let mut cases = Vec::new();
    for r in 1..=ctx.bounds.r_max as u32 {
        let seq = Arc::new(SequenceSpec::GenHarmonic {
            r,
            x: Rational::zero(),
        });
        for n in 0..=top {
            let seq = Arc::clone(&seq);
            cases.push(Case::sides(
                format!("r={r} n={n}"),
                vec![var("q", n)],
                move |p| direct_transform(&seq, n, &p["q"], false),
                move |p| {
                    let q = &p["q"];
                    let tail: Rational = (1..=n)
                        .map(|j| komatsu_d(n as i64, r, j as i64) * q.powu(j as u64) / int(j))
                        .sum();
                    Ok(harmonic_number(n, r) - tail)
                },
            ));
        }
    }
    Ok(cases)
}
