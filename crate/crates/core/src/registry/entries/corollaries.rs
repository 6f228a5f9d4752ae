use super::*;
use crate::registry::{run_cases, Case};
use crate::sequences::{fibo_like, LaguerreShift};
use crate::special::{bell, binom_rat, fuss_catalan, geometric, laguerre, meixner, rising};
use crate::transform::{basis_representation, direct_transform};

pub(super) fn entries() -> Vec<Entry> {
    vec![
        entry(
            "C.e",
            "e",
            Module::Corollaries,
            "Fibonacci-like transform: M(n,j) = c^j F_{n+r-2j}",
            fibo_general,
        ),
        entry(
            "C.d",
            "d",
            Module::Corollaries,
            "Fibonacci transform",
            fibonacci,
        ),
        entry(
            "C.dbis",
            "dbis",
            Module::Corollaries,
            "Lucas transform",
            lucas,
        ),
        entry(
            "C.l",
            "l",
            Module::Corollaries,
            "Laguerre in the degree: M(n,j) = L_{n+r}^{(α-j)}(x)",
            laguerre_degree,
        ),
        entry(
            "C.m",
            "m",
            Module::Corollaries,
            "Laguerre in the order: M(n,j) = L_{r-j}^{(α+n)}(x)",
            laguerre_order,
        ),
        Entry {
            gate: Some(meixner_gate),
            ..entry(
                "C.n",
                "n",
                Module::Corollaries,
                "Meixner transform through the ∇-relation",
                meixner_transform,
            )
        },
        entry(
            "C.p",
            "p",
            Module::Corollaries,
            "transform of (-1)^n C(α, n+r)",
            binom_alt,
        ),
        entry(
            "C.pbis",
            "pbis",
            Module::Corollaries,
            "conjugate transform of (-1)^n C(α, n+r)",
            binom_alt_conj,
        ),
        entry(
            "C.q",
            "q",
            Module::Corollaries,
            "transform of (-1)^k C(n,k)^2",
            squared_binom,
        ),
        entry(
            "C.qbis",
            "qbis",
            Module::Corollaries,
            "conjugate transform of (-1)^k C(n,k)^2",
            squared_binom_conj,
        ),
        entry(
            "C.j1",
            "j1",
            Module::Corollaries,
            "alternating sums of C(j+k+α, ·)",
            binom_sums,
        ),
        entry(
            "C.b3",
            "b3",
            Module::Corollaries,
            "Fuss-Catalan transform: M(n,j) = A_{m-j}(s, j(s-1)+n)",
            fuss_catalan_transform,
        ),
        entry(
            "C.r",
            "r",
            Module::Corollaries,
            "q-integer transform (1 - p^r (p + q(1-p))^n)/(1-p)",
            q_integers,
        ),
        entry(
            "C.l1",
            "l1",
            Module::Corollaries,
            "conjugate transform of (-1)^k x B_k(x)",
            bell_conj,
        ),
        entry(
            "C.p1",
            "p1",
            Module::Corollaries,
            "conjugate transform of (-1)^k x w_k(x)",
            geometric_conj,
        ),
        Entry {
            note: Some(limits_note),
            ..entry(
                "R.qto1",
                "qto1",
                Module::Corollaries,
                "q -> 1 limits of the corollaries",
                limits,
            )
        },
    ]
}

const FIBO_PARAMS: [(&str, &str, &str); 5] = [
    ("0", "1", "1"),
    ("2", "1", "1"),
    ("1", "1/2", "2"),
    ("-1", "3", "-1/3"),
    ("1/2", "2", "3/2"),
];

fn fibo_cases(ctx: Ctx, tag: &str, a: Rational, b: Rational, cc: Rational) -> Vec<Case> {
    let mut cases = Vec::new();
    for rr in 0..=ctx.bounds.r_max as i64 {
        let seq = Arc::new(SequenceSpec::FiboLike {
            a: a.clone(),
            b: b.clone(),
            c: cc.clone(),
            r: rr,
        });
        for n in 0..=ctx.bounds.n_max {
            let s = Arc::clone(&seq);
            let (a, b, cc) = (a.clone(), b.clone(), cc.clone());
            cases.push(Case::sides(
                format!("{tag} r={rr} n={n}"),
                vec![var("q", n)],
                move |p| direct_transform(&s, n, &p["q"], false),
                move |p| {
                    let cq = &cc * &p["q"];
                    poly_sum(n, &cq, |j| {
                        Ok(sg(j)
                            * c(n, j)
                            * fibo_like(&a, &b, &cc, (n + rr as usize) as i64 - 2 * j as i64)?)
                    })
                },
            ));
        }
    }
    cases
}

fn fibo_general(ctx: Ctx) -> Result<Vec<Case>> {
    Ok(FIBO_PARAMS
        .iter()
        .flat_map(|(a, b, cc)| fibo_cases(ctx, &format!("a={a} b={b} c={cc}"), r(a), r(b), r(cc)))
        .collect())
}

fn fibonacci(ctx: Ctx) -> Result<Vec<Case>> {
    Ok(fibo_cases(ctx, "fibonacci", r("0"), r("1"), r("1")))
}

fn lucas(ctx: Ctx) -> Result<Vec<Case>> {
    Ok(fibo_cases(ctx, "lucas", r("2"), r("1"), r("1")))
}

const LAGUERRE_ALPHAS: [&str; 4] = ["0", "1/3", "2", "-1/2"];

fn laguerre_degree(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for alpha in rl(&LAGUERRE_ALPHAS) {
        for rr in 0..=ctx.bounds.r_max {
            for n in 0..=ctx.bounds.n_max {
                let (al, ar) = (alpha.clone(), alpha.clone());
                cases.push(Case::sides(
                    format!("alpha={alpha} r={rr} n={n}"),
                    vec![var("x", n + rr), var("q", n)],
                    move |p| {
                        let seq = SequenceSpec::Laguerre {
                            alpha: al.clone(),
                            x: p["x"].clone(),
                            shift: LaguerreShift::Degree(rr as i64),
                        };
                        direct_transform(&seq, n, &p["q"], false)
                    },
                    move |p| {
                        poly_sum(n, &p["q"], |j| {
                            Ok(sg(j)
                                * c(n, j)
                                * laguerre((n + rr) as i64, &(&ar - int(j)), &p["x"]))
                        })
                    },
                ));
            }
        }
    }
    Ok(cases)
}

fn laguerre_order(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for alpha in rl(&LAGUERRE_ALPHAS) {
        for rr in 0..=5usize {
            for n in 0..=ctx.bounds.n_max {
                let (al, ar) = (alpha.clone(), alpha.clone());
                cases.push(Case::sides(
                    format!("alpha={alpha} r={rr} n={n}"),
                    vec![var("x", rr), var("q", n)],
                    move |p| {
                        let seq = SequenceSpec::Laguerre {
                            alpha: al.clone(),
                            x: p["x"].clone(),
                            shift: LaguerreShift::Order(rr as i64),
                        };
                        direct_transform(&seq, n, &p["q"], false)
                    },
                    move |p| {
                        poly_sum(n, &p["q"], |j| {
                            Ok(sg(j)
                                * c(n, j)
                                * laguerre(rr as i64 - j as i64, &(&ar + int(n)), &p["x"]))
                        })
                    },
                ));
            }
        }
    }
    Ok(cases)
}

const MEIXNER_ALPHAS: [&str; 2] = ["5/2", "7/3"];
const MEIXNER_BETAS: [&str; 2] = ["1/3", "2"];

/// `(β-1)^j (x+1)_j / ((α-j-1)_j β^j)`.
fn meixner_factor(j: usize, x: &Rational, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let num = (beta - Rational::one()).powu(j as u64) * rising(&(x + Rational::one()), j as u64);
    let den = rising(&(alpha - int(j) - Rational::one()), j as u64) * beta.powu(j as u64);
    num.checked_div(&den)
}

/// The j = 1 relation `∇ M_n(x; α, β) = (β-1)(x+1)/((α-2)β) M_{n-1}(x; α+1, β)`.
fn meixner_gate(ctx: Ctx) -> Result<Vec<Case>> {
    let def = ctx.meixner;
    let mut cases = Vec::new();
    for alpha in rl(&MEIXNER_ALPHAS) {
        for beta in rl(&MEIXNER_BETAS) {
            for n in 1..=4i64 {
                let (al, bl, ar, br) = (alpha.clone(), beta.clone(), alpha.clone(), beta.clone());
                cases.push(Case::sides(
                    format!("gate alpha={alpha} beta={beta} n={n}"),
                    vec![var("x", n as usize + 1)],
                    move |p| {
                        let x = &p["x"];
                        Ok(meixner(def, n, x, &al, &bl)? - meixner(def, n - 1, x, &al, &bl)?)
                    },
                    move |p| {
                        let x = &p["x"];
                        Ok(meixner_factor(1, x, &ar, &br)?
                            * meixner(def, n - 1, x, &(&ar + Rational::one()), &br)?)
                    },
                ));
            }
        }
    }
    Ok(cases)
}

fn meixner_transform(ctx: Ctx) -> Result<Vec<Case>> {
    let def = ctx.meixner;
    let mut cases = Vec::new();
    for alpha in rl(&MEIXNER_ALPHAS) {
        for beta in rl(&MEIXNER_BETAS) {
            for rr in 0..=ctx.bounds.r_max {
                for n in 0..=ctx.bounds.n_max {
                    let (al, bl, ar, br) =
                        (alpha.clone(), beta.clone(), alpha.clone(), beta.clone());
                    cases.push(Case::sides(
                        format!("alpha={alpha} beta={beta} r={rr} n={n}"),
                        vec![var("x", n + rr), var("q", n)],
                        move |p| {
                            let seq = SequenceSpec::Meixner {
                                x: p["x"].clone(),
                                alpha: al.clone(),
                                beta: bl.clone(),
                                r: rr as i64,
                                def,
                            };
                            direct_transform(&seq, n, &p["q"], false)
                        },
                        move |p| {
                            let x = &p["x"];
                            poly_sum(n, &p["q"], |j| {
                                let m = meixner(def, (n + rr - j) as i64, x, &(&ar + int(j)), &br)?;
                                Ok(sg(j) * c(n, j) * meixner_factor(j, x, &ar, &br)? * m)
                            })
                        },
                    ));
                }
            }
        }
    }
    Ok(cases)
}

fn binom_alt(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for rr in 0..=ctx.bounds.r_max {
        for n in 0..=ctx.bounds.n_max {
            cases.push(Case::sides(
                format!("r={rr} n={n}"),
                vec![var("alpha", n + rr), var("q", n)],
                move |p| {
                    let seq = SequenceSpec::BinomAlt {
                        alpha: p["alpha"].clone(),
                        r: rr as i64,
                    };
                    direct_transform(&seq, n, &p["q"], false)
                },
                move |p| {
                    let alpha = &p["alpha"];
                    poly_sum(n, &p["q"], |j| {
                        Ok(sg(n - j) * c(n, j) * binom_rat(&(alpha + int(j)), (n + rr) as i64))
                    })
                },
            ));
        }
    }
    Ok(cases)
}

fn binom_alt_conj(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for rr in 0..=ctx.bounds.r_max {
        for n in 0..=ctx.bounds.n_max {
            cases.push(Case::sides(
                format!("r={rr} n={n}"),
                vec![var("alpha", n + rr), var("q", n)],
                move |p| {
                    let seq = SequenceSpec::BinomAlt {
                        alpha: p["alpha"].clone(),
                        r: rr as i64,
                    };
                    direct_transform(&seq, n, &p["q"], true)
                },
                move |p| {
                    let alpha = &p["alpha"];
                    poly_sum(n, &p["q"], |j| {
                        Ok(sg(j) * c(n, j) * binom_rat(&(alpha + int(j)), (j + rr) as i64))
                    })
                },
            ));
        }
    }
    Ok(cases)
}

fn squared_binom_side(n: usize, q: &Rational, conj: bool) -> Rational {
    (0..=n)
        .map(|k| {
            let (a, b) = if conj { (n - k, k) } else { (k, n - k) };
            sg(k) * c(n, k) * c(n, k) * q.complement().powu(a as u64) * q.powu(b as u64)
        })
        .sum()
}

fn squared_binom(ctx: Ctx) -> Result<Vec<Case>> {
    Ok((0..=ctx.bounds.n_max)
        .map(|n| {
            Case::sides(
                format!("n={n}"),
                vec![var("q", n)],
                move |p| Ok(squared_binom_side(n, &p["q"], false)),
                move |p| poly_sum(n, &p["q"], |j| Ok(sg(n - j) * c(n, j) * c(j + n, n))),
            )
        })
        .collect())
}

fn squared_binom_conj(ctx: Ctx) -> Result<Vec<Case>> {
    Ok((0..=ctx.bounds.n_max)
        .map(|n| {
            Case::sides(
                format!("n={n}"),
                vec![var("q", n)],
                move |p| Ok(squared_binom_side(n, &p["q"], true)),
                move |p| poly_sum(n, &p["q"], |j| Ok(sg(j) * c(n, j) * c(j + n, n))),
            )
        })
        .collect())
}

fn binom_sums(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in 0..=ctx.bounds.n_max {
        for k in 0..=4usize {
            for rr in 0..=ctx.bounds.r_max {
                let top = (n + k + rr) as i64;
                cases.push(Case::sides(
                    format!("n={n} k={k} r={rr} first"),
                    vec![var("alpha", n + k + rr)],
                    move |p| {
                        let alpha = &p["alpha"];
                        Ok((0..=n)
                            .map(|j| sg(n - j) * c(n, j) * binom_rat(&(alpha + int(j + k)), top))
                            .sum())
                    },
                    move |p| Ok(binom_rat(&(&p["alpha"] + int(k)), (k + rr) as i64)),
                ));
                cases.push(Case::sides(
                    format!("n={n} k={k} r={rr} second"),
                    vec![var("alpha", n + k + rr)],
                    move |p| {
                        let alpha = &p["alpha"];
                        Ok((0..=n)
                            .map(|j| {
                                sg(n - j)
                                    * c(n, j)
                                    * binom_rat(&(alpha + int(j + k)), (j + k + rr) as i64)
                            })
                            .sum())
                    },
                    move |p| Ok(binom_rat(&(&p["alpha"] + int(k)), top)),
                ));
            }
        }
    }
    Ok(cases)
}

fn fuss_catalan_transform(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for m in 0..=8i64 {
        for s in 0..=3i64 {
            let seq = Arc::new(SequenceSpec::FussCatalan { m, s });
            for n in 0..=(m as usize).min(ctx.bounds.n_max) {
                let sq = Arc::clone(&seq);
                cases.push(Case::sides(
                    format!("m={m} s={s} n={n}"),
                    vec![var("q", n)],
                    move |p| direct_transform(&sq, n, &p["q"], false),
                    move |p| {
                        poly_sum(n, &p["q"], |j| {
                            let ji = j as i64;
                            Ok(sg(j) * c(n, j) * fuss_catalan(m - ji, s, ji * (s - 1) + n as i64))
                        })
                    },
                ));
            }
        }
    }
    Ok(cases)
}

fn q_integers(ctx: Ctx) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for rr in 0..=ctx.bounds.r_max {
        for n in 0..=ctx.bounds.n_max {
            cases.push(Case::sides(
                format!("r={rr} n={n}"),
                vec![
                    var("p", n + rr + 1).excluding(&[Rational::one()]),
                    var("q", n),
                ],
                move |pt| {
                    let seq = SequenceSpec::QInt {
                        p: pt["p"].clone(),
                        r: rr as i64,
                    };
                    direct_transform(&seq, n, &pt["q"], false)
                },
                move |pt| {
                    let (p, q) = (&pt["p"], &pt["q"]);
                    let inner = p + q * p.complement();
                    (Rational::one() - p.powu(rr as u64) * inner.powu(n as u64))
                        .checked_div(&p.complement())
                },
            ));
        }
    }
    Ok(cases)
}

fn bell_conj(ctx: Ctx) -> Result<Vec<Case>> {
    Ok((0..=ctx.bounds.n_max)
        .map(|n| {
            Case::sides(
                format!("n={n}"),
                vec![var("x", n + 1), var("q", n)],
                move |p| {
                    direct_transform(
                        &SequenceSpec::BellAlt { x: p["x"].clone() },
                        n,
                        &p["q"],
                        true,
                    )
                },
                move |p| poly_sum(n, &p["q"], |j| Ok(sg(j) * c(n, j) * bell(j + 1, &p["x"]))),
            )
        })
        .collect())
}

fn geometric_conj(ctx: Ctx) -> Result<Vec<Case>> {
    Ok((0..=ctx.bounds.n_max)
        .map(|n| {
            Case::sides(
                format!("n={n}"),
                vec![var("x", n + 1), var("q", n)],
                move |p| {
                    direct_transform(
                        &SequenceSpec::GeomAlt { x: p["x"].clone() },
                        n,
                        &p["q"],
                        true,
                    )
                },
                move |p| {
                    let x = &p["x"];
                    let minus_q = -&p["q"];
                    let s = poly_sum(n, &minus_q, |j| Ok(c(n, j) * geometric(j, x)))?;
                    Ok((x + Rational::one()) * s - Rational::one())
                },
            )
        })
        .collect())
}

/// `S_n(1)` read off the basis representation, or `S̄_n(1)` for the
/// conjugate forms.
fn basis_at_one(seq: &SequenceSpec, n: usize, conj: bool) -> Result<Rational> {
    Ok(basis_representation(seq, n, conj)?.eval(&Rational::one()))
}

fn meixner_gate_passes(ctx: Ctx) -> Result<bool> {
    let run = run_cases(ctx, &meixner_gate(ctx)?)?;
    Ok(run.failure.is_none())
}

fn limits(ctx: Ctx) -> Result<Vec<Case>> {
    let n_max = ctx.bounds.n_max;
    let def = ctx.meixner;
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for rr in 0..=ctx.bounds.r_max {
            let ri = rr as i64;
            for (a, b, cc) in FIBO_PARAMS {
                let (a, b, cc) = (r(a), r(b), r(cc));
                let seq = SequenceSpec::FiboLike {
                    a: a.clone(),
                    b: b.clone(),
                    c: cc.clone(),
                    r: ri,
                };
                let tag = format!("fibolike a={a} b={b} c={cc} r={rr} n={n}");
                let (a2, b2, c2) = (a.clone(), b.clone(), cc.clone());
                cases.push(Case::point(format!("{tag} basis"), move || {
                    Ok((basis_at_one(&seq, n, false)?, fibo_like(&a2, &b2, &c2, ri)?))
                }));
                cases.push(Case::point(format!("{tag} closed"), move || {
                    let lhs = (0..=n)
                        .map(|j| {
                            Ok(sg(j)
                                * c(n, j)
                                * fibo_like(&a, &b, &cc, (n + rr) as i64 - 2 * j as i64)?
                                * cc.powu(j as u64))
                        })
                        .sum::<Result<Rational>>()?;
                    Ok((lhs, fibo_like(&a, &b, &cc, ri)?))
                }));
            }
            for alpha in rl(&["7/2", "-2/3", "5"]) {
                let tag = format!("binomalt alpha={alpha} r={rr} n={n}");
                let seq = SequenceSpec::BinomAlt {
                    alpha: alpha.clone(),
                    r: ri,
                };
                let al = alpha.clone();
                cases.push(Case::point(format!("{tag} basis"), move || {
                    Ok((basis_at_one(&seq, n, false)?, binom_rat(&al, ri)))
                }));
                cases.push(Case::point(format!("{tag} closed"), move || {
                    let lhs = (0..=n)
                        .map(|j| {
                            sg(n - j) * c(n, j) * binom_rat(&(&alpha + int(j)), (rr + n) as i64)
                        })
                        .sum();
                    Ok((lhs, binom_rat(&alpha, ri)))
                }));
            }
            for alpha in rl(&LAGUERRE_ALPHAS) {
                let x = r("3/2");
                let tag = format!("laguerre alpha={alpha} x={x} r={rr} n={n}");
                let degree = SequenceSpec::Laguerre {
                    alpha: alpha.clone(),
                    x: x.clone(),
                    shift: LaguerreShift::Degree(ri),
                };
                let order = SequenceSpec::Laguerre {
                    alpha: alpha.clone(),
                    x: x.clone(),
                    shift: LaguerreShift::Order(ri),
                };
                let target = laguerre(ri, &alpha, &x);
                let t = target.clone();
                cases.push(Case::point(format!("{tag} degree basis"), move || {
                    Ok((basis_at_one(&degree, n, false)?, t.clone()))
                }));
                let t = target.clone();
                cases.push(Case::point(format!("{tag} order basis"), move || {
                    Ok((basis_at_one(&order, n, false)?, t.clone()))
                }));
                let (t, al, xl) = (target.clone(), alpha.clone(), x.clone());
                cases.push(Case::point(format!("{tag} degree closed"), move || {
                    let lhs = (0..=n)
                        .map(|j| sg(j) * c(n, j) * laguerre((n + rr) as i64, &(&al - int(j)), &xl))
                        .sum();
                    Ok((lhs, t.clone()))
                }));
                let (t, al, xl) = (target, alpha.clone(), x);
                cases.push(Case::point(format!("{tag} order closed"), move || {
                    let lhs = (0..=n)
                        .map(|j| sg(j) * c(n, j) * laguerre(ri - j as i64, &(&al + int(n)), &xl))
                        .sum();
                    Ok((lhs, t.clone()))
                }));
            }
            for alpha in rl(&MEIXNER_ALPHAS) {
                for beta in rl(&MEIXNER_BETAS) {
                    let x = r("2");
                    let seq = SequenceSpec::Meixner {
                        x: x.clone(),
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        r: ri,
                        def,
                    };
                    let (al, bl, xl) = (alpha.clone(), beta.clone(), x.clone());
                    cases.push(Case::point(
                        format!("meixner alpha={alpha} beta={beta} x={x} r={rr} n={n} basis"),
                        move || {
                            Ok((
                                basis_at_one(&seq, n, false)?,
                                meixner(def, ri, &xl, &al, &bl)?,
                            ))
                        },
                    ));
                }
            }
        }
        for m in 1..=8i64 {
            if (n as i64) > m {
                continue;
            }
            for s in 0..=3i64 {
                let seq = SequenceSpec::FussCatalan { m, s };
                let tag = format!("fusscatalan m={m} s={s} n={n}");
                cases.push(Case::point(format!("{tag} basis"), move || {
                    Ok((basis_at_one(&seq, n, false)?, Rational::zero()))
                }));
                cases.push(Case::point(format!("{tag} closed"), move || {
                    let lhs = (0..=n)
                        .map(|j| {
                            let ji = j as i64;
                            sg(j) * c(n, j) * fuss_catalan(m - ji, s, ji * (s - 1) + n as i64)
                        })
                        .sum();
                    Ok((lhs, Rational::zero()))
                }));
            }
        }
        for x in rl(&["-1/2", "2/3", "3"]) {
            let tag = format!("x={x} n={n}");
            let (xb, xg) = (x.clone(), x.clone());
            cases.push(Case::point(format!("bell {tag} basis"), move || {
                let lhs = sg(n) * basis_at_one(&SequenceSpec::BellAlt { x: xb.clone() }, n, true)?;
                Ok((lhs, &xb * bell(n, &xb)))
            }));
            cases.push(Case::point(format!("geometric {tag} basis"), move || {
                let lhs = sg(n) * basis_at_one(&SequenceSpec::GeomAlt { x: xg.clone() }, n, true)?;
                Ok((lhs, &xg * geometric(n, &xg)))
            }));
            let (xb, xg) = (x.clone(), x);
            cases.push(Case::point(format!("bell {tag} closed"), move || {
                let lhs = (0..=n)
                    .map(|j| sg(n - j) * c(n, j) * bell(j + 1, &xb))
                    .sum();
                Ok((lhs, &xb * bell(n, &xb)))
            }));
            cases.push(Case::point(format!("geometric {tag} closed"), move || {
                let s: Rational = (0..=n)
                    .map(|j| sg(n - j) * c(n, j) * geometric(j, &xg))
                    .sum();
                Ok(((&xg + Rational::one()) * s, &xg * geometric(n, &xg) + sg(n)))
            }));
        }
    }
    if meixner_gate_passes(ctx)? {
        cases.extend(meixner_closed_limits(ctx));
    }
    Ok(cases)
}

fn meixner_closed_limits(ctx: Ctx) -> Vec<Case> {
    let def = ctx.meixner;
    let x = r("2");
    let mut cases = Vec::new();
    for alpha in rl(&MEIXNER_ALPHAS) {
        for beta in rl(&MEIXNER_BETAS) {
            for rr in 0..=ctx.bounds.r_max {
                for n in 0..=ctx.bounds.n_max {
                    let (al, bl, xl) = (alpha.clone(), beta.clone(), x.clone());
                    cases.push(Case::point(
                        format!("meixner alpha={alpha} beta={beta} x={x} r={rr} n={n} closed"),
                        move || {
                            let lhs = (0..=n)
                                .map(|j| {
                                    let m = meixner(
                                        def,
                                        (n + rr - j) as i64,
                                        &xl,
                                        &(&al + int(j)),
                                        &bl,
                                    )?;
                                    Ok(sg(j) * c(n, j) * meixner_factor(j, &xl, &al, &bl)? * m)
                                })
                                .sum::<Result<Rational>>()?;
                            Ok((lhs, meixner(def, rr as i64, &xl, &al, &bl)?))
                        },
                    ));
                }
            }
        }
    }
    cases
}

fn limits_note(ctx: Ctx) -> Result<Option<String>> {
    Ok((!meixner_gate_passes(ctx)?).then(|| {
        format!(
            "Meixner closed-form limit not checked: the ∇-relation gate fails for the `{}` definition",
            ctx.meixner.name()
        )
    }))
}
