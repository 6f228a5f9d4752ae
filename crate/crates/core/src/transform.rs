//! The transform engine: direct Bernstein sums, the power-basis form,
//! generating-function extraction and the composition laws.
//!
//! Every identity-shaped function returns a [`Comparison`] holding both sides
//! as computed; no side is ever derived from the other.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::poly::QPoly;
use crate::rational::{binom, sign, Accumulator, Rational};
use crate::sequences::SequenceSpec;
use crate::series::Series;
use crate::special::q_integer_ratio;

/// Both sides of an identity and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

impl Comparison {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        Comparison { lhs, rhs, equal }
    }
}

/// `Σ_{k<=n} a_k C(n,k) (1-q)^k q^(n-k)`; `a` must hold at least `n+1` terms.
pub fn bernstein_sum(a: &[Rational], n: usize, q: &Rational) -> Rational {
    BernsteinWeights::new(q, n).sum(a, n)
}

/// `S_0(q), ..., S_n(q)` for the terms `a`.
pub fn transform_row(a: &[Rational], n: usize, q: &Rational) -> Vec<Rational> {
    let w = BernsteinWeights::new(q, n);
    (0..=n).map(|m| w.sum(a, m)).collect()
}

/// With `q = u/v`: `C(m,k) (1-q)^k q^(m-k) = C(m,k) (v-u)^k u^(m-k) / v^m`,
/// so each sum is an integer combination over one denominator.
struct BernsteinWeights {
    up: Vec<BigInt>,
    wp: Vec<BigInt>,
    vp: Vec<BigInt>,
}

impl BernsteinWeights {
    fn new(q: &Rational, n: usize) -> Self {
        let (u, v) = (q.numer().clone(), q.denom().clone());
        let w = &v - &u;
        let pw = |b: &BigInt| {
            let mut out = vec![BigInt::one()];
            for _ in 0..n {
                let next = out.last().expect("nonempty") * b;
                out.push(next);
            }
            out
        };
        BernsteinWeights {
            up: pw(&u),
            wp: pw(&w),
            vp: pw(&v),
        }
    }

    fn sum(&self, a: &[Rational], m: usize) -> Rational {
        let mut acc = Accumulator::new();
        let mut c = BigInt::one();
        for (k, ak) in a[..=m].iter().enumerate() {
            acc.add_scaled(ak, &(&c * &self.wp[k] * &self.up[m - k]));
            c = c * BigInt::from(m - k) / BigInt::from(k + 1);
        }
        acc.finish_over(&self.vp[m])
    }
}

/// `M(n, j)` for `j = 0..=n` by the alternating sum over `a_{n-l}`.
pub fn forward_diffs(a: &[Rational], n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|j| {
            (0..=j)
                .map(|l| sign(l as i64) * binom(j as i64, l as i64) * &a[n - l])
                .sum()
        })
        .collect()
}

/// `M̄(0), ..., M̄(j)`.
pub fn dual_diffs(a: &[Rational], j: usize) -> Vec<Rational> {
    (0..=j)
        .map(|i| {
            (0..=i)
                .map(|l| sign(l as i64) * binom(i as i64, l as i64) * &a[l])
                .sum()
        })
        .collect()
}

/// `S_n(q)`, or the conjugate `S̄_n(q) = Σ a_k C(n,k) (1-q)^(n-k) q^k`.
pub fn direct_transform(
    spec: &SequenceSpec,
    n: usize,
    q: &Rational,
    conjugate: bool,
) -> Result<Rational> {
    let a = spec.terms(n)?;
    if conjugate {
        Ok(bernstein_sum(&a, n, &q.complement()))
    } else {
        Ok(bernstein_sum(&a, n, q))
    }
}

/// `Σ_j (-1)^j C(n,j) d_j q^j` for a row of differences `d`.
pub fn basis_from_diffs(diffs: &[Rational], n: usize) -> QPoly {
    QPoly::new(
        (0..=n)
            .map(|j| sign(j as i64) * binom(n as i64, j as i64) * &diffs[j])
            .collect(),
    )
}

/// `S_n` (or `S̄_n`) in the power basis of `q`.
pub fn basis_representation(spec: &SequenceSpec, n: usize, conjugate: bool) -> Result<QPoly> {
    let a = spec.terms(n)?;
    let d = if conjugate {
        dual_diffs(&a, n)
    } else {
        forward_diffs(&a, n)
    };
    Ok(basis_from_diffs(&d, n))
}

/// `(1 - q∇)^n a_n`, applying the operator to the term vector `n` times.
pub fn operator_transform(spec: &SequenceSpec, n: usize, q: &Rational) -> Result<Rational> {
    let mut b = spec.terms(n)?;
    for i in 0..n {
        // after step i only indices > i are still needed
        for k in (i + 1..=n).rev() {
            let nabla = &b[k] - &b[k - 1];
            b[k] -= q * nabla;
        }
    }
    Ok(b.pop().expect("n+1 terms"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GfMode {
    /// `[z^n] (1-q+qz)^n A(z)`.
    Product,
    /// `[z^n] A((1-q)z/(1-qz)) / (1-qz)`.
    Composed,
}

/// Extracts `S_n(q)` from the ordinary generating function truncated at `order`.
pub fn gf_transform(
    spec: &SequenceSpec,
    n: usize,
    q: &Rational,
    mode: GfMode,
    order: usize,
) -> Result<Rational> {
    if order < n {
        return Err(Error::OrderTooSmall { order, needed: n });
    }
    let a = Series::new(order, spec.terms(order)?);
    match mode {
        GfMode::Product => {
            let factor = Series::new(order, vec![q.complement(), q.clone()]).powi(n as u32);
            Ok(factor.mul(&a)?.coeff(n)?.clone())
        }
        GfMode::Composed => {
            let geo = Series::new(order, vec![Rational::one(), -q]).reciprocal()?;
            let inner = Series::variable(order).scale(&q.complement()).mul(&geo)?;
            Ok(a.compose(&inner)?.mul(&geo)?.coeff(n)?.clone())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    DirectSum,
    BasisRep,
    GfProduct,
    GfComposed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformResult {
    pub n: usize,
    pub value: Rational,
    pub provenance: Provenance,
}

/// `S_n(q)` by all four routes, in a fixed order.
pub fn all_routes(spec: &SequenceSpec, n: usize, q: &Rational) -> Result<Vec<TransformResult>> {
    let mk = |value, provenance| TransformResult {
        n,
        value,
        provenance,
    };
    Ok(vec![
        mk(direct_transform(spec, n, q, false)?, Provenance::DirectSum),
        mk(
            basis_representation(spec, n, false)?.eval(q),
            Provenance::BasisRep,
        ),
        mk(
            gf_transform(spec, n, q, GfMode::Product, n)?,
            Provenance::GfProduct,
        ),
        mk(
            gf_transform(spec, n, q, GfMode::Composed, n)?,
            Provenance::GfComposed,
        ),
    ])
}

fn nested(spec: &SequenceSpec, at: &Rational) -> SequenceSpec {
    SequenceSpec::TransformOf {
        inner: Box::new(spec.clone()),
        at: at.clone(),
    }
}

/// `Σ_k S_k(x) C(n,k) (1-q)^k q^(n-k)` against `S_n(x+q-xq)`.
pub fn compose_transform(
    spec: &SequenceSpec,
    n: usize,
    x: &Rational,
    q: &Rational,
) -> Result<Comparison> {
    let lhs = direct_transform(&nested(spec, x), n, q, false)?;
    let rhs = direct_transform(spec, n, &(x + q - x * q), false)?;
    Ok(Comparison::new(lhs, rhs))
}

/// `Σ_k S_k(q) C(n,k) (1-x)^k x^(n-k)` against `S_n(x+q-xq)`.
pub fn compose_transform_swapped(
    spec: &SequenceSpec,
    n: usize,
    x: &Rational,
    q: &Rational,
) -> Result<Comparison> {
    let lhs = direct_transform(&nested(spec, q), n, x, false)?;
    let rhs = direct_transform(spec, n, &(x + q - x * q), false)?;
    Ok(Comparison::new(lhs, rhs))
}

/// `S_n(1-xq)` against `Σ_k S_k(1-x) C(n,k) (1-q)^(n-k) q^k`.
pub fn compose_transform_bis(
    spec: &SequenceSpec,
    n: usize,
    x: &Rational,
    q: &Rational,
) -> Result<Comparison> {
    let lhs = direct_transform(spec, n, &(Rational::one() - x * q), false)?;
    let rhs = direct_transform(&nested(spec, &x.complement()), n, q, true)?;
    Ok(Comparison::new(lhs, rhs))
}

/// `(1-q)^m Σ_k S_{k+m}(x) C(n,k) (1-q)^k q^(n-k)` against
/// `Σ_j C(m,j) (-q)^(m-j) S_{j+n}(x+q-xq)`.
pub fn shifted_transform(
    spec: &SequenceSpec,
    n: usize,
    m: usize,
    x: &Rational,
    q: &Rational,
) -> Result<Comparison> {
    let a = spec.terms(n + m)?;
    let sx = transform_row(&a, n + m, x);
    let shifted: Vec<Rational> = sx[m..].to_vec();
    let lhs = q.complement().powu(m as u64) * bernstein_sum(&shifted, n, q);
    let t = x + q - x * q;
    let mq = -q;
    let rhs = (0..=m)
        .map(|j| binom(m as i64, j as i64) * mq.powu((m - j) as u64) * bernstein_sum(&a, j + n, &t))
        .sum();
    Ok(Comparison::new(lhs, rhs))
}

/// `S_n(1 - x_0 x_1 ... x_r)` against
/// `Σ_k S_k(1 - x_1 ... x_r) C(n,k) (1-x_0)^(n-k) x_0^k`.
pub fn chain_transform(spec: &SequenceSpec, n: usize, xs: &[Rational]) -> Result<Comparison> {
    let (x0, rest) = xs
        .split_first()
        .ok_or_else(|| domain("a chain needs at least one factor"))?;
    let tail: Rational = rest.iter().cloned().product();
    let a = spec.terms(n)?;
    let lhs = bernstein_sum(&a, n, &(Rational::one() - x0 * &tail));
    let s = transform_row(&a, n, &tail.complement());
    let rhs = bernstein_sum(&s, n, &x0.complement());
    Ok(Comparison::new(lhs, rhs))
}

/// `x_0^m Σ_k S_{k+m}(1 - x_1...x_r) C(n,k) (1-x_0)^(n-k) x_0^k` against
/// `Σ_j (-1)^(m-j) C(m,j) (1-x_0)^(m-j) S_{j+n}(1 - x_0 x_1...x_r)`.
pub fn chain_shifted(
    spec: &SequenceSpec,
    n: usize,
    m: usize,
    xs: &[Rational],
) -> Result<Comparison> {
    let (x0, rest) = xs
        .split_first()
        .ok_or_else(|| domain("a chain needs at least one factor"))?;
    let tail: Rational = rest.iter().cloned().product();
    let a = spec.terms(n + m)?;
    let s = transform_row(&a, n + m, &tail.complement());
    let shifted: Vec<Rational> = s[m..].to_vec();
    let lhs = x0.powu(m as u64) * bernstein_sum(&shifted, n, &x0.complement());
    let full = Rational::one() - x0 * &tail;
    let rhs = (0..=m)
        .map(|j| {
            sign((m - j) as i64)
                * binom(m as i64, j as i64)
                * x0.complement().powu((m - j) as u64)
                * bernstein_sum(&a, j + n, &full)
        })
        .sum();
    Ok(Comparison::new(lhs, rhs))
}

/// Special substitutions in the composition law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Composition {
    /// `S_n(q^m) = Σ S_k(1-[q]_m) C(n,k) (1-q)^k q^(n-k)`.
    PowerLeft { m: u32 },
    /// `S_n(q^m) = Σ S_k(q) C(n,k) [q]_m^k (1-[q]_m)^(n-k)`.
    PowerRight { m: u32 },
    /// `a_n = Σ S_k(-q/(1-q)) C(n,k) (1-q)^k q^(n-k)`.
    InverseLeft,
    /// `a_n = (1-q)^-n Σ S_k(q) C(n,k) (-q)^(n-k)`.
    InverseRight,
    /// `S_n((α+1)q) = Σ S_k(αq/(1-q)) C(n,k) (1-q)^k q^(n-k)`.
    ScaledLeft { alpha: Rational },
    /// `S_n((α+1)q) = (1-q)^-n Σ S_k(q) C(n,k) (1-(α+1)q)^k (αq)^(n-k)`.
    ScaledRight { alpha: Rational },
    /// `Σ (-1)^k a_k C(n,k) (1-q)^k = q^n S_n(1/q)`.
    Alternating,
    /// `Σ (-1)^(n-k) S_k(1-x) C(n,k) (1-q)^(n-k) = q^n S_n(1 - x/q)`.
    AlternatingComposed { x: Rational },
}

pub fn special_composition(
    spec: &SequenceSpec,
    n: usize,
    q: &Rational,
    which: &Composition,
) -> Result<Comparison> {
    let ni = n as i64;
    let a = spec.terms(n)?;
    let p = q.complement();
    match which {
        Composition::PowerLeft { m } | Composition::PowerRight { m } => {
            if *m == 0 {
                return Err(domain("power substitution needs m >= 1"));
            }
            let qm = q_integer_ratio(*m as u64, q)?;
            let lhs = bernstein_sum(&a, n, &q.powu(*m as u64));
            let rhs = if matches!(which, Composition::PowerLeft { .. }) {
                let s = transform_row(&a, n, &qm.complement());
                bernstein_sum(&s, n, q)
            } else {
                let s = transform_row(&a, n, q);
                // weights [q]_m^k (1-[q]_m)^(n-k) are Bernstein weights at 1-[q]_m
                bernstein_sum(&s, n, &qm.complement())
            };
            Ok(Comparison::new(lhs, rhs))
        }
        Composition::InverseLeft => {
            let at = (-q).checked_div(&p)?;
            let s = transform_row(&a, n, &at);
            Ok(Comparison::new(a[n].clone(), bernstein_sum(&s, n, q)))
        }
        Composition::InverseRight => {
            let s = transform_row(&a, n, q);
            let mq = -q;
            let sum: Rational = (0..=n)
                .map(|k| &s[k] * binom(ni, k as i64) * mq.powu((n - k) as u64))
                .sum();
            Ok(Comparison::new(a[n].clone(), sum * p.pow(-ni)?))
        }
        Composition::ScaledLeft { alpha } => {
            let lhs = bernstein_sum(&a, n, &((alpha + Rational::one()) * q));
            let at = (alpha * q).checked_div(&p)?;
            let s = transform_row(&a, n, &at);
            Ok(Comparison::new(lhs, bernstein_sum(&s, n, q)))
        }
        Composition::ScaledRight { alpha } => {
            let a1q = (alpha + Rational::one()) * q;
            let lhs = bernstein_sum(&a, n, &a1q);
            let s = transform_row(&a, n, q);
            let aq = alpha * q;
            let base = a1q.complement();
            let sum: Rational = (0..=n)
                .map(|k| {
                    &s[k] * binom(ni, k as i64) * base.powu(k as u64) * aq.powu((n - k) as u64)
                })
                .sum();
            Ok(Comparison::new(lhs, sum * p.pow(-ni)?))
        }
        Composition::Alternating => {
            let lhs = (0..=n)
                .map(|k| sign(k as i64) * &a[k] * binom(ni, k as i64) * p.powu(k as u64))
                .sum();
            let rhs = q.powu(n as u64) * bernstein_sum(&a, n, &q.recip()?);
            Ok(Comparison::new(lhs, rhs))
        }
        Composition::AlternatingComposed { x } => {
            let s = transform_row(&a, n, &x.complement());
            let lhs = (0..=n)
                .map(|k| {
                    sign((n - k) as i64) * &s[k] * binom(ni, k as i64) * p.powu((n - k) as u64)
                })
                .sum();
            let at = Rational::one() - x.checked_div(q)?;
            let rhs = q.powu(n as u64) * bernstein_sum(&a, n, &at);
            Ok(Comparison::new(lhs, rhs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rats;

    fn half() -> Rational {
        Rational::frac(1, 2)
    }

    #[test]
    fn direct_examples() {
        let h = SequenceSpec::Harmonic;
        assert_eq!(
            direct_transform(&h, 2, &half(), false).unwrap(),
            Rational::frac(7, 8)
        );
        let t = SequenceSpec::UserTable(rats(&["1", "-2", "1"]));
        assert_eq!(
            direct_transform(&t, 2, &half(), false).unwrap(),
            Rational::frac(-1, 2)
        );
        for s in crate::sequences::catalog() {
            let a = s.terms(4).unwrap();
            assert_eq!(
                direct_transform(&s, 4, &Rational::zero(), false).unwrap(),
                a[4]
            );
            assert_eq!(
                direct_transform(&s, 4, &Rational::one(), false).unwrap(),
                a[0]
            );
        }
    }

    #[test]
    fn basis_examples() {
        let h = SequenceSpec::Harmonic;
        assert_eq!(
            basis_representation(&h, 2, false).unwrap(),
            QPoly::new(rats(&["3/2", "-1", "-1/2"]))
        );
        let c = SequenceSpec::UserTable(rats(&["5", "5", "5", "5"]));
        assert_eq!(
            basis_representation(&c, 3, false).unwrap(),
            QPoly::new(rats(&["5"]))
        );
        let qi: SequenceSpec = "qint:p=2,r=0".parse().unwrap();
        assert_eq!(
            basis_representation(&qi, 2, false).unwrap(),
            QPoly::new(rats(&["3", "-4", "1"]))
        );
    }

    #[test]
    fn gf_examples() {
        let ones = SequenceSpec::UserTable(vec![Rational::one(); 8]);
        for mode in [GfMode::Product, GfMode::Composed] {
            for n in 0..6 {
                assert_eq!(
                    gf_transform(&ones, n, &Rational::frac(2, 7), mode, 7).unwrap(),
                    Rational::one()
                );
            }
            assert_eq!(
                gf_transform(&SequenceSpec::Harmonic, 2, &half(), mode, 2).unwrap(),
                Rational::frac(7, 8)
            );
        }
        assert!(matches!(
            gf_transform(&SequenceSpec::Harmonic, 3, &half(), GfMode::Product, 2),
            Err(Error::OrderTooSmall { .. })
        ));
    }

    #[test]
    fn operator_route_matches_direct() {
        for s in crate::sequences::catalog() {
            for n in 0..6 {
                let q = Rational::frac(2, 5);
                assert_eq!(
                    operator_transform(&s, n, &q).unwrap(),
                    direct_transform(&s, n, &q, false).unwrap(),
                    "{s} n={n}"
                );
            }
        }
    }

    #[test]
    fn composition_examples() {
        let h = SequenceSpec::Harmonic;
        let c = compose_transform(&h, 2, &half(), &half()).unwrap();
        assert!(c.equal);
        assert_eq!(c.rhs, Rational::frac(15, 32));
        // x = 0 gives S_n(q); q = 0 gives S_n(x)
        let q = Rational::frac(1, 3);
        assert_eq!(
            compose_transform(&h, 3, &Rational::zero(), &q).unwrap().lhs,
            direct_transform(&h, 3, &q, false).unwrap()
        );
        assert_eq!(
            compose_transform(&h, 3, &q, &Rational::zero()).unwrap().lhs,
            direct_transform(&h, 3, &q, false).unwrap()
        );
        assert!(compose_transform_bis(&h, 3, &q, &half()).unwrap().equal);
    }

    #[test]
    fn shifted_examples() {
        let h = SequenceSpec::Harmonic;
        let c = shifted_transform(&h, 0, 2, &Rational::zero(), &half()).unwrap();
        assert_eq!(c.lhs, Rational::frac(3, 8));
        assert_eq!(c.rhs, Rational::frac(3, 8));
        for m in 0..3 {
            assert!(
                shifted_transform(&h, 3, m, &Rational::frac(1, 5), &Rational::frac(2, 3))
                    .unwrap()
                    .equal
            );
        }
    }

    #[test]
    fn special_examples() {
        let h = SequenceSpec::Harmonic;
        let c = special_composition(&h, 2, &half(), &Composition::PowerLeft { m: 2 }).unwrap();
        assert_eq!(c.lhs, Rational::frac(39, 32));
        assert!(c.equal);
        assert!(
            special_composition(&h, 2, &Rational::one(), &Composition::PowerRight { m: 2 })
                .is_err()
        );
        let g = special_composition(
            &h,
            1,
            &Rational::frac(1, 3),
            &Composition::ScaledLeft {
                alpha: Rational::one(),
            },
        )
        .unwrap();
        assert_eq!(
            g.lhs,
            direct_transform(&h, 1, &Rational::frac(2, 3), false).unwrap()
        );
        assert!(g.equal);
        let t = SequenceSpec::UserTable(rats(&["2", "5"]));
        let alt =
            special_composition(&t, 1, &Rational::frac(1, 3), &Composition::Alternating).unwrap();
        assert_eq!(
            alt.lhs,
            Rational::int(2) - Rational::int(5) * Rational::frac(2, 3)
        );
        assert!(alt.equal);
        assert!(special_composition(&t, 1, &Rational::zero(), &Composition::Alternating).is_err());
    }

    #[test]
    fn chains() {
        let f = SequenceSpec::fibonacci(1);
        let xs = rats(&["1/2", "2/3", "3/4"]);
        assert!(chain_transform(&f, 4, &xs).unwrap().equal);
        assert!(chain_shifted(&f, 3, 2, &xs).unwrap().equal);
        assert!(chain_transform(&f, 4, &[]).is_err());
    }
}
