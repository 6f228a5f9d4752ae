use super::*;
use crate::registry::Case;
use crate::special::gen_harmonic;
use crate::transform::{direct_transform, dual_diffs, forward_diffs, operator_transform};

pub(super) fn entries() -> Vec<Entry> {
    vec![
        entry(
            "P1.g",
            "g",
            Module::Basis,
            "transform definition: reversed sum and boundary values",
            definition,
        ),
        entry(
            "P1.n2",
            "n2",
            Module::Basis,
            "conjugate transform equals S_n(1-q)",
            conjugate,
        ),
        entry(
            "P1.c",
            "c",
            Module::Basis,
            "S_n(q) = Σ (-1)^j C(n,j) M(n,j) q^j = (1-q∇)^n a_n",
            basis_form,
        ),
        entry(
            "P1.cbis",
            "cbis",
            Module::Basis,
            "conjugate transform in the basis q^j with dual differences",
            dual_basis_form,
        ),
        entry(
            "P1.h",
            "h",
            Module::Basis,
            "iterated differences equal their alternating sums",
            difference_sums,
        ),
        entry(
            "R.i",
            "i",
            Module::Basis,
            "∇ in n maps M(n,k) to M(n,k+1)",
            difference_step,
        ),
        entry(
            "R.j",
            "j",
            Module::Basis,
            "j-fold ∇ in n maps M(n,k) to M(n,k+j)",
            difference_steps,
        ),
        entry(
            "C.k",
            "k",
            Module::Basis,
            "shifted order-r harmonic numbers in the basis q^j",
            shifted_harmonic,
        ),
        entry(
            "R.i1",
            "i1",
            Module::Basis,
            "coefficient matching between M(n,j) and dual differences",
            coefficient_matching,
        ),
    ]
}

fn definition(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        let name = seq.name();
        let a = Arc::new(seq.terms(ctx.bounds.n_max)?);
        for n in 0..=ctx.bounds.n_max {
            let s = Arc::clone(&seq);
            let t = Arc::clone(&a);
            cases.push(Case::sides(
                format!("{name} n={n} reversed"),
                vec![var("q", n)],
                move |p| direct_transform(&s, n, &p["q"], false),
                move |p| {
                    let q = &p["q"];
                    Ok((0..=n)
                        .map(|k| {
                            &t[n - k]
                                * c(n, k)
                                * q.powu(k as u64)
                                * q.complement().powu((n - k) as u64)
                        })
                        .sum())
                },
            ));
            let s = Arc::clone(&seq);
            let t = Arc::clone(&a);
            cases.push(Case::point(format!("{name} n={n} at q=0"), move || {
                Ok((
                    direct_transform(&s, n, &Rational::zero(), false)?,
                    t[n].clone(),
                ))
            }));
            let s = Arc::clone(&seq);
            let t = Arc::clone(&a);
            cases.push(Case::point(format!("{name} n={n} at q=1"), move || {
                Ok((
                    direct_transform(&s, n, &Rational::one(), false)?,
                    t[0].clone(),
                ))
            }));
        }
    }
    Ok(cases)
}

fn conjugate(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max.max(10);
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        let a = Arc::new(seq.terms(top)?);
        for n in 0..=top {
            let s = Arc::clone(&seq);
            let t = Arc::clone(&a);
            cases.push(Case::sides(
                format!("{} n={n}", seq.name()),
                vec![var("q", n)],
                move |p| {
                    let q = &p["q"];
                    Ok((0..=n)
                        .map(|k| {
                            &t[k] * c(n, k) * q.complement().powu((n - k) as u64) * q.powu(k as u64)
                        })
                        .sum())
                },
                move |p| direct_transform(&s, n, &p["q"].complement(), false),
            ));
        }
    }
    Ok(cases)
}

fn basis_form(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        for n in 0..=ctx.bounds.n_max {
            let row = ctx.diff_row(&seq, n)?;
            let s = Arc::clone(&seq);
            cases.push(Case::sides(
                format!("{} n={n} differences", seq.name()),
                vec![var("q", n)],
                move |p| direct_transform(&s, n, &p["q"], false),
                move |p| poly_sum(n, &p["q"], |j| Ok(sg(j) * c(n, j) * &row[j])),
            ));
            let s = Arc::clone(&seq);
            cases.push(Case::sides(
                format!("{} n={n} operator", seq.name()),
                vec![var("q", n)],
                {
                    let s = Arc::clone(&s);
                    move |p| direct_transform(&s, n, &p["q"], false)
                },
                move |p| operator_transform(&s, n, &p["q"]),
            ));
        }
    }
    Ok(cases)
}

fn dual_basis_form(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        let a = seq.terms(ctx.bounds.n_max)?;
        let dual = Arc::new(dual_diffs(&a, ctx.bounds.n_max));
        for n in 0..=ctx.bounds.n_max {
            let s = Arc::clone(&seq);
            let d = Arc::clone(&dual);
            cases.push(Case::sides(
                format!("{} n={n}", seq.name()),
                vec![var("q", n)],
                move |p| direct_transform(&s, n, &p["q"], true),
                move |p| poly_sum(n, &p["q"], |j| Ok(sg(j) * c(n, j) * &d[j])),
            ));
        }
    }
    Ok(cases)
}

/// `∇ b` of a slice, one shorter.
fn backward(b: &[Rational]) -> Vec<Rational> {
    b.windows(2).map(|w| &w[1] - &w[0]).collect()
}

fn difference_sums(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max;
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        let a = Arc::new(seq.terms(top)?);
        for n in 0..=top {
            for j in 0..=n {
                let t = Arc::clone(&a);
                cases.push(Case::point(
                    format!("{} M({n},{j})", seq.name()),
                    move || {
                        // ∇^j applied j times to a_0..a_n; the last entry is ∇^j a_n
                        let mut b = t[..=n].to_vec();
                        for _ in 0..j {
                            b = backward(&b);
                        }
                        let iterated = b.pop().expect("n - j + 1 entries remain");
                        Ok((iterated, forward_diffs(&t, n)[j].clone()))
                    },
                ));
            }
        }
        for j in 0..=top {
            let t = Arc::clone(&a);
            cases.push(Case::point(
                format!("{} dual({j})", seq.name()),
                move || {
                    let mut b = t[..=j].to_vec();
                    for _ in 0..j {
                        b = backward(&b);
                    }
                    Ok((sg(j) * &b[0], dual_diffs(&t, j)[j].clone()))
                },
            ));
        }
    }
    Ok(cases)
}

fn diff_rows(seq: &SequenceSpec, top: usize) -> Result<Arc<Vec<Vec<Rational>>>> {
    let a = seq.terms(top)?;
    Ok(Arc::new((0..=top).map(|n| forward_diffs(&a, n)).collect()))
}

fn difference_step(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max.max(10);
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        let m = diff_rows(&seq, top)?;
        for n in 1..=top {
            for k in 0..n {
                let m = Arc::clone(&m);
                cases.push(Case::point(
                    format!("{} n={n} k={k}", seq.name()),
                    move || Ok((&m[n][k] - &m[n - 1][k], m[n][k + 1].clone())),
                ));
            }
        }
    }
    Ok(cases)
}

fn difference_steps(ctx: Ctx) -> Result<Vec<Case>> {
    let top = ctx.bounds.n_max.max(10);
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        let m = diff_rows(&seq, top)?;
        for n in 0..=top {
            for k in 0..=n {
                for j in 0..=n - k {
                    let m = Arc::clone(&m);
                    cases.push(Case::point(
                        format!("{} n={n} k={k} j={j}", seq.name()),
                        move || {
                            let lhs = (0..=j).map(|l| sg(l) * c(j, l) * &m[n - l][k]).sum();
                            Ok((lhs, m[n][k + j].clone()))
                        },
                    ));
                }
            }
        }
    }
    Ok(cases)
}

/// `M(n, j)` for `a_n = H_n^{(r)}(x)`: `M(n,0) = a_n` and
/// `M(n,j) = Σ_{l<j} (-1)^l C(j-1,l) / (n-l+x)^r` for `j >= 1`.
fn shifted_harmonic_diff(n: usize, j: usize, r: u32, x: &Rational) -> Result<Rational> {
    if j == 0 {
        return gen_harmonic(n as u64, r, x);
    }
    (0..j)
        .map(|l| Ok(sg(l) * c(j - 1, l) * (int(n - l) + x).powu(r as u64).recip()?))
        .sum()
}

fn shifted_harmonic(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for x in rl(&["0", "1/2", "3/2", "-1/3", "2"]) {
        for r in 1..=ctx.bounds.r_max as u32 {
            let seq = Arc::new(SequenceSpec::GenHarmonic { r, x: x.clone() });
            for n in 0..=ctx.bounds.n_max {
                let s = Arc::clone(&seq);
                let x = x.clone();
                cases.push(Case::sides(
                    format!("r={r} x={x} n={n}"),
                    vec![var("q", n)],
                    move |p| direct_transform(&s, n, &p["q"], false),
                    move |p| {
                        poly_sum(n, &p["q"], |j| {
                            Ok(sg(j) * c(n, j) * shifted_harmonic_diff(n, j, r, &x)?)
                        })
                    },
                ));
            }
        }
    }
    Ok(cases)
}

fn coefficient_matching(_ctx: Ctx) -> Result<Vec<Case>> {
    let top = 6;
    let mut cases = Vec::new();
    for seq in shared_catalog() {
        let m = diff_rows(&seq, 2 * top)?;
        let a = seq.terms(2 * top)?;
        let dual = Arc::new(dual_diffs(&a, 2 * top));
        for n in 0..=top {
            for k in 0..=top {
                let (mm, d) = (Arc::clone(&m), Arc::clone(&dual));
                cases.push(Case::point(
                    format!("{} n={n} k={k} dual", seq.name()),
                    move || {
                        let lhs = (0..=n)
                            .map(|j| sign(k as i64 - j as i64) * c(n, j) * &mm[n + k][j + k])
                            .sum();
                        Ok((lhs, d[k].clone()))
                    },
                ));
                let (mm, d) = (Arc::clone(&m), Arc::clone(&dual));
                cases.push(Case::point(
                    format!("{} n={n} k={k} direct", seq.name()),
                    move || {
                        let lhs = (0..=n)
                            .map(|j| sign(k as i64 - j as i64) * c(n, j) * &d[j + k])
                            .sum();
                        Ok((lhs, mm[n + k][k].clone()))
                    },
                ));
            }
        }
    }
    Ok(cases)
}
