//! Appell polynomial families and the transform identities built on them.
//!
//! A family is fixed by `F(t) = 1 + Σ c_n t^n / n!`; its members are
//! `f_n(y) = Σ_k C(n,k) c_{n-k} y^k`, i.e. `Σ f_n(y) t^n/n! = F(t) e^{yt}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::poly::{Poly, YPoly};
use crate::rational::{binom, factorial, sign, Rational};
use crate::sequences::{fibo_standard, SequenceSpec};
use crate::series::Series;
use crate::special::binom_rat;
use crate::transform::{bernstein_sum, dual_diffs, forward_diffs, transform_row, Comparison};

/// Default largest index a family is prepared for.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AppellFamily {
    /// Explicit moments `c_0 = 1, c_1, ...`; missing ones are zero.
    Generic(Vec<Rational>),
    /// `F(t) = (t/(e^t - 1))^alpha`.
    BernoulliOrder(Rational),
    /// `F(t) = (2/(e^t + 1))^alpha`.
    EulerOrder(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AppellSpec {
    pub family: AppellFamily,
    /// Largest `n` for which `f_n` may be requested.
    pub order: usize,
}

impl AppellSpec {
    pub fn new(family: AppellFamily) -> Result<Self> {
        AppellSpec::with_order(family, DEFAULT_ORDER)
    }

    pub fn with_order(family: AppellFamily, order: usize) -> Result<Self> {
        if let AppellFamily::Generic(c) = &family {
            if c.first().is_none_or(|c0| !c0.is_one()) {
                return Err(domain("generic Appell moments must start with c_0 = 1"));
            }
        }
        Ok(AppellSpec { family, order })
    }

    pub fn bernoulli(alpha: Rational) -> Self {
        AppellSpec {
            family: AppellFamily::BernoulliOrder(alpha),
            order: DEFAULT_ORDER,
        }
    }

    pub fn euler(alpha: Rational) -> Self {
        AppellSpec {
            family: AppellFamily::EulerOrder(alpha),
            order: DEFAULT_ORDER,
        }
    }

    /// `F(t) = 1`, so `f_n(y) = y^n`.
    pub fn monomial() -> Self {
        AppellSpec {
            family: AppellFamily::Generic(vec![Rational::one()]),
            order: DEFAULT_ORDER,
        }
    }

    /// The series `F(t)` to the spec's order.
    pub fn generating_series(&self) -> Result<Series> {
        let n = self.order;
        match &self.family {
            AppellFamily::Generic(c) => Ok(Series::from_egf(n, c)),
            AppellFamily::BernoulliOrder(alpha) => {
                // (e^t - 1)/t = Σ t^k/(k+1)!
                let base = Series::from_fn(n, |k| factorial(k as u64 + 1).recip().unwrap());
                base.pow(&-alpha)
            }
            AppellFamily::EulerOrder(alpha) => {
                // (e^t + 1)/2 = 1 + Σ_{k>=1} t^k/(2 k!)
                let base = Series::from_fn(n, |k| {
                    if k == 0 {
                        Rational::one()
                    } else {
                        Rational::frac(1, 2) / factorial(k as u64)
                    }
                });
                base.pow(&-alpha)
            }
        }
    }

    /// The moments `c_0..=c_order`.
    pub fn moments(&self) -> Result<Vec<Rational>> {
        let f = self.generating_series()?;
        (0..=self.order).map(|k| f.egf_coeff(k)).collect()
    }

    fn table(&self) -> Result<Arc<Vec<YPoly>>> {
        static CACHE: OnceLock<Mutex<HashMap<AppellSpec, Arc<Vec<YPoly>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("appell cache poisoned").get(self) {
            return Ok(Arc::clone(t));
        }
        let c = self.moments()?;
        let polys: Vec<YPoly> = (0..=self.order)
            .map(|n| {
                Poly::new(
                    (0..=n)
                        .map(|k| binom(n as i64, k as i64) * &c[n - k])
                        .collect(),
                )
            })
            .collect();
        let table = Arc::new(polys);
        cache
            .lock()
            .expect("appell cache poisoned")
            .insert(self.clone(), Arc::clone(&table));
        Ok(table)
    }

    /// `f_n` as a polynomial in `y`.
    pub fn poly(&self, n: usize) -> Result<YPoly> {
        if n > self.order {
            return Err(Error::OrderTooSmall {
                order: self.order,
                needed: n,
            });
        }
        Ok(self.table()?[n].clone())
    }

    /// `f_n(y)`.
    pub fn eval(&self, n: usize, y: &Rational) -> Result<Rational> {
        if n > self.order {
            return Err(Error::OrderTooSmall {
                order: self.order,
                needed: n,
            });
        }
        Ok(self.table()?[n].eval(y))
    }

    /// `f_0(y), ..., f_n(y)`.
    pub fn evals(&self, n: usize, y: &Rational) -> Result<Vec<Rational>> {
        if n > self.order {
            return Err(Error::OrderTooSmall {
                order: self.order,
                needed: n,
            });
        }
        let t = self.table()?;
        Ok(t[..=n].iter().map(|p| p.eval(y)).collect())
    }

    /// `n! [t^n] F(t) e^{yt}`, straight from the generating function.
    pub fn eval_by_series(&self, n: usize, y: &Rational) -> Result<Rational> {
        let f = self.generating_series()?;
        let e = Series::exp_linear(self.order, y);
        f.mul(&e)?.egf_coeff(n)
    }
}

impl fmt::Display for AppellSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            AppellFamily::Generic(c) => {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "generic:{}", parts.join(","))?;
                if self.order != DEFAULT_ORDER {
                    write!(f, ";order={}", self.order)?;
                }
                Ok(())
            }
            AppellFamily::BernoulliOrder(a) => {
                write!(f, "bernoulli:a={a}")?;
                if self.order != DEFAULT_ORDER {
                    write!(f, ",order={}", self.order)?;
                }
                Ok(())
            }
            AppellFamily::EulerOrder(a) => {
                write!(f, "euler:a={a}")?;
                if self.order != DEFAULT_ORDER {
                    write!(f, ",order={}", self.order)?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for AppellSpec {
    type Err = Error;

    /// `bernoulli:a=2`, `euler:a=1/2,order=12`, `generic:1,0,1/2[;order=N]`,
    /// `monomial`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let parse_rat = |v: &str| {
            v.trim()
                .parse::<Rational>()
                .map_err(|_| Error::Parse(format!("bad rational `{v}` in Appell family")))
        };
        let parse_order = |v: &str| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad order `{v}`")))
        };
        match name.trim() {
            "monomial" => Ok(AppellSpec::monomial()),
            "generic" => {
                let (list, order) = match rest.split_once(';') {
                    Some((l, o)) => {
                        let o = o
                            .trim()
                            .strip_prefix("order=")
                            .ok_or_else(|| Error::Parse(format!("expected order=N, got `{o}`")))?;
                        (l, parse_order(o)?)
                    }
                    None => (rest, DEFAULT_ORDER),
                };
                let c = list
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(parse_rat)
                    .collect::<Result<Vec<_>>>()?;
                AppellSpec::with_order(AppellFamily::Generic(c), order)
            }
            "bernoulli" | "euler" => {
                let mut alpha = None;
                let mut order = DEFAULT_ORDER;
                for kv in rest.split(',').filter(|t| !t.trim().is_empty()) {
                    let (k, v) = kv
                        .split_once('=')
                        .ok_or_else(|| Error::Parse(format!("expected key=value, got `{kv}`")))?;
                    match k.trim() {
                        "a" | "alpha" => alpha = Some(parse_rat(v)?),
                        "order" => order = parse_order(v)?,
                        other => return Err(Error::Parse(format!("unknown key `{other}`"))),
                    }
                }
                let alpha = alpha.unwrap_or_else(Rational::one);
                let family = if name.trim() == "bernoulli" {
                    AppellFamily::BernoulliOrder(alpha)
                } else {
                    AppellFamily::EulerOrder(alpha)
                };
                AppellSpec::with_order(family, order)
            }
            other => Err(Error::Parse(format!(
                "unknown Appell family `{other}` (monomial|generic|bernoulli|euler)"
            ))),
        }
    }
}

/// `(1-q+qD)^n f_n(y)` against its expanded form
/// `Σ_k C(n,k) (n!/k!) f_k(y) (1-q)^k q^(n-k)`.
pub fn operator_identity(
    spec: &AppellSpec,
    n: usize,
    q: &Rational,
    y: &Rational,
) -> Result<Comparison> {
    let fk = spec.evals(n, y)?;
    let p = q.complement();
    let nf = factorial(n as u64);
    let lhs: Rational = (0..=n)
        .map(|k| {
            binom(n as i64, k as i64)
                * (&nf / factorial(k as u64))
                * &fk[k]
                * p.powu(k as u64)
                * q.powu((n - k) as u64)
        })
        .sum();
    let mut poly = spec.poly(n)?;
    for _ in 0..n {
        poly = &poly.scale(&p) + &poly.derivative().scale(q);
    }
    Ok(Comparison::new(lhs, poly.eval(y)))
}

/// `Σ_k f_{n-k}(x) C(n,k) (1-q)^k (λq)^(n-k) = (λq)^n f_n(x - 1/λ + 1/(λq))`.
pub fn scaled_transform_identity(
    spec: &AppellSpec,
    n: usize,
    lambda: &Rational,
    x: &Rational,
    q: &Rational,
) -> Result<Comparison> {
    if lambda.is_zero() {
        return Err(domain("scaled transform needs lambda != 0"));
    }
    if q.is_zero() {
        return Err(domain("scaled transform needs q != 0"));
    }
    let fx = spec.evals(n, x)?;
    let lq = lambda * q;
    let lhs: Rational = (0..=n)
        .map(|k| {
            &fx[n - k]
                * binom(n as i64, k as i64)
                * q.complement().powu(k as u64)
                * lq.powu((n - k) as u64)
        })
        .sum();
    let shifted = x - lambda.recip()? + lq.recip()?;
    let rhs = lq.powu(n as u64) * spec.eval(n, &shifted)?;
    Ok(Comparison::new(lhs, rhs))
}

/// The expanded umbral identities. Sequence-generic forms carry their
/// sequence; the Fibonacci and binomial forms carry their parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Umbral {
    /// `Σ a_k C(n,k) y^k x^(n-k) = Σ (-1)^j C(n,j) M(n,j) (x+y)^(n-j) x^j`.
    F(SequenceSpec),
    /// `Σ a_k C(n,k) y^(n-k) x^k = Σ (-1)^j C(n,j) M̄(j) (x+y)^(n-j) x^j`.
    Fbis(SequenceSpec),
    /// `Σ a_k C(n,k) f_k(y) x^(n-k) = Σ (-1)^j C(n,j) M(n,j) f_{n-j}(x+y) x^j`.
    U(SequenceSpec),
    /// `Σ a_k C(n,k) f_{n-k}(y) x^k = Σ (-1)^j C(n,j) M̄(j) f_{n-j}(x+y) x^j`.
    Ubis(SequenceSpec),
    /// Fibonacci `a_n = F_{n+r}` with closed-form differences `F_{n+r-2j}`.
    V { r: i64 },
    /// Fibonacci with `r = n`:
    /// `Σ C(n,k) F_{n+k} f_k(y) x^(n-k) = Σ (-1)^(n-j) C(n,j) F_{2j} f_j(x+y) x^(n-j)`.
    O1,
    /// `a_n = (-1)^n C(alpha, n+r)` in the `U` shape.
    W { alpha: Rational, r: i64 },
    /// `a_n = (-1)^n C(alpha, n+r)` in the `Ubis` shape.
    Wbis { alpha: Rational, r: i64 },
    /// `Σ a_k C(n,k) (bx)^k f_{n-k}(y+(1-b)x) = Σ S_k(1-b) C(n,k) x^k f_{n-k}(y)`.
    S2 { seq: SequenceSpec, b: Rational },
}

impl Umbral {
    pub fn name(&self) -> &'static str {
        match self {
            Umbral::F(_) => "f",
            Umbral::Fbis(_) => "fbis",
            Umbral::U(_) => "u",
            Umbral::Ubis(_) => "ubis",
            Umbral::V { .. } => "v",
            Umbral::O1 => "o1",
            Umbral::W { .. } => "w",
            Umbral::Wbis { .. } => "wbis",
            Umbral::S2 { .. } => "s2",
        }
    }
}

/// Evaluates both sides of an umbral identity. The left side uses the raw
/// terms; the right side uses difference tables or closed forms.
pub fn umbral_identity(
    spec: &AppellSpec,
    which: &Umbral,
    n: usize,
    x: &Rational,
    y: &Rational,
) -> Result<Comparison> {
    let ni = n as i64;
    let c = |k: usize| binom(ni, k as i64);
    let xp = |e: usize| x.powu(e as u64);
    let xy = x + y;
    match which {
        Umbral::F(seq) => {
            let a = seq.terms(n)?;
            let lhs = (0..=n)
                .map(|k| &a[k] * c(k) * y.powu(k as u64) * xp(n - k))
                .sum();
            let m = forward_diffs(&a, n);
            let rhs = (0..=n)
                .map(|j| sign(j as i64) * c(j) * &m[j] * xy.powu((n - j) as u64) * xp(j))
                .sum();
            Ok(Comparison::new(lhs, rhs))
        }
        Umbral::Fbis(seq) => {
            let a = seq.terms(n)?;
            let lhs = (0..=n)
                .map(|k| &a[k] * c(k) * y.powu((n - k) as u64) * xp(k))
                .sum();
            let mb = dual_diffs(&a, n);
            let rhs = (0..=n)
                .map(|j| sign(j as i64) * c(j) * &mb[j] * xy.powu((n - j) as u64) * xp(j))
                .sum();
            Ok(Comparison::new(lhs, rhs))
        }
        Umbral::U(seq) => {
            let a = seq.terms(n)?;
            let fy = spec.evals(n, y)?;
            let fxy = spec.evals(n, &xy)?;
            let lhs = (0..=n).map(|k| &a[k] * c(k) * &fy[k] * xp(n - k)).sum();
            let m = forward_diffs(&a, n);
            let rhs = (0..=n)
                .map(|j| sign(j as i64) * c(j) * &m[j] * &fxy[n - j] * xp(j))
                .sum();
            Ok(Comparison::new(lhs, rhs))
        }
        Umbral::Ubis(seq) => {
            let a = seq.terms(n)?;
            let fy = spec.evals(n, y)?;
            let fxy = spec.evals(n, &xy)?;
            let lhs = (0..=n).map(|k| &a[k] * c(k) * &fy[n - k] * xp(k)).sum();
            let mb = dual_diffs(&a, n);
            let rhs = (0..=n)
                .map(|j| sign(j as i64) * c(j) * &mb[j] * &fxy[n - j] * xp(j))
                .sum();
            Ok(Comparison::new(lhs, rhs))
        }
        Umbral::V { r } => {
            let fy = spec.evals(n, y)?;
            let fxy = spec.evals(n, &xy)?;
            let lhs = (0..=n)
                .map(|k| c(k) * fibo_standard(k as i64 + r) * &fy[k] * xp(n - k))
                .sum();
            let rhs = (0..=n)
                .map(|j| {
                    sign(j as i64)
                        * c(j)
                        * fibo_standard(ni + r - 2 * j as i64)
                        * &fxy[n - j]
                        * xp(j)
                })
                .sum();
            Ok(Comparison::new(lhs, rhs))
        }
        Umbral::O1 => {
            let fy = spec.evals(n, y)?;
            let fxy = spec.evals(n, &xy)?;
            let lhs = (0..=n)
                .map(|k| c(k) * fibo_standard(ni + k as i64) * &fy[k] * xp(n - k))
                .sum();
            let rhs = (0..=n)
                .map(|j| {
                    sign((n - j) as i64) * c(j) * fibo_standard(2 * j as i64) * &fxy[j] * xp(n - j)
                })
                .sum();
            Ok(Comparison::new(lhs, rhs))
        }
        Umbral::W { alpha, r } => {
            let fy = spec.evals(n, y)?;
            let fxy = spec.evals(n, &xy)?;
            let lhs = (0..=n)
                .map(|k| {
                    sign(k as i64) * binom_rat(alpha, r + k as i64) * c(k) * &fy[k] * xp(n - k)
                })
                .sum();
            let rhs = (0..=n)
                .map(|j| {
                    sign((n - j) as i64)
                        * c(j)
                        * binom_rat(&(alpha + Rational::int(j as i64)), ni + r)
                        * &fxy[n - j]
                        * xp(j)
                })
                .sum();
            Ok(Comparison::new(lhs, rhs))
        }
        Umbral::Wbis { alpha, r } => {
            let fy = spec.evals(n, y)?;
            let fxy = spec.evals(n, &xy)?;
            let lhs = (0..=n)
                .map(|k| {
                    sign(k as i64) * binom_rat(alpha, r + k as i64) * c(k) * &fy[n - k] * xp(k)
                })
                .sum();
            let rhs = (0..=n)
                .map(|j| {
                    sign(j as i64)
                        * c(j)
                        * binom_rat(&(alpha + Rational::int(j as i64)), j as i64 + r)
                        * &fxy[n - j]
                        * xp(j)
                })
                .sum();
            Ok(Comparison::new(lhs, rhs))
        }
        Umbral::S2 { seq, b } => {
            let a = seq.terms(n)?;
            let shifted = y + b.complement() * x;
            let fs = spec.evals(n, &shifted)?;
            let fy = spec.evals(n, y)?;
            let bx = b * x;
            let lhs = (0..=n)
                .map(|k| &a[k] * c(k) * bx.powu(k as u64) * &fs[n - k])
                .sum();
            let s = transform_row(&a, n, &b.complement());
            let rhs = (0..=n).map(|k| &s[k] * c(k) * xp(k) * &fy[n - k]).sum();
            Ok(Comparison::new(lhs, rhs))
        }
    }
}

/// `Σ_k C(n,k) B_k^{(a1)}(y1) B_{n-k}^{(a2)}(y2)`, which should equal
/// `B_n^{(a1+a2)}(y1+y2)` for any two members of one exponential family.
pub fn convolve(
    first: &AppellSpec,
    second: &AppellSpec,
    n: usize,
    y1: &Rational,
    y2: &Rational,
) -> Result<Rational> {
    let f = first.evals(n, y1)?;
    let g = second.evals(n, y2)?;
    Ok((0..=n)
        .map(|k| binom(n as i64, k as i64) * &f[k] * &g[n - k])
        .sum())
}

/// Bernstein form of the family's transform at `q`, for `a_n = λ^n f_n(x)`.
pub fn scaled_sequence_transform(
    spec: &AppellSpec,
    n: usize,
    lambda: &Rational,
    x: &Rational,
    q: &Rational,
) -> Result<Rational> {
    let fx = spec.evals(n, x)?;
    let a: Vec<Rational> = fx
        .iter()
        .enumerate()
        .map(|(k, f)| lambda.powu(k as u64) * f)
        .collect();
    Ok(bernstein_sum(&a, n, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rats;

    #[test]
    fn bernoulli_order_one_degree_two() {
        let b = AppellSpec::bernoulli(Rational::one());
        assert_eq!(b.poly(2).unwrap(), Poly::new(rats(&["1/6", "-1", "1"])));
    }

    #[test]
    fn euler_order_one_degree_one() {
        let e = AppellSpec::euler(Rational::one());
        assert_eq!(e.poly(1).unwrap(), Poly::new(rats(&["-1/2", "1"])));
    }

    #[test]
    fn monomial_family() {
        let m = AppellSpec::monomial();
        for n in 0..6 {
            assert_eq!(m.poly(n).unwrap(), Poly::monomial(n));
        }
    }

    #[test]
    fn order_bound_is_enforced() {
        let b = AppellSpec::with_order(AppellFamily::BernoulliOrder(Rational::int(2)), 4).unwrap();
        assert!(matches!(b.poly(5), Err(Error::OrderTooSmall { .. })));
        assert!(AppellSpec::with_order(AppellFamily::Generic(rats(&["2"])), 4).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "bernoulli:a=2",
            "euler:a=1/2",
            "generic:1,0,1/2",
            "bernoulli:a=-3/2,order=10",
        ] {
            let spec: AppellSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(
            "monomial".parse::<AppellSpec>().unwrap(),
            AppellSpec::monomial()
        );
        assert!("hermite".parse::<AppellSpec>().is_err());
    }

    #[test]
    fn operator_identity_small_cases() {
        let b = AppellSpec::bernoulli(Rational::one());
        let q = Rational::frac(1, 2);
        let y = Rational::frac(1, 3);
        for n in 0..5 {
            assert!(operator_identity(&b, n, &q, &y).unwrap().equal);
        }
        // n = 1: both sides are (1-q) f_1(y) + q
        let c = operator_identity(&b, 1, &q, &y).unwrap();
        assert_eq!(c.lhs, q.complement() * b.eval(1, &y).unwrap() + &q);
    }

    #[test]
    fn scaled_identity_reduces_to_binomial_theorem() {
        let m = AppellSpec::monomial();
        let (lambda, q, x) = (Rational::int(2), Rational::frac(1, 3), Rational::one());
        let c = scaled_transform_identity(&m, 2, &lambda, &x, &q).unwrap();
        // (x λq + 1 - q)^2 = (2/3 + 2/3)^2
        assert_eq!(c.lhs, Rational::frac(16, 9));
        assert!(c.equal);
        let b2 = AppellSpec::bernoulli(Rational::int(2));
        let c = scaled_transform_identity(
            &b2,
            3,
            &Rational::frac(-3, 2),
            &Rational::frac(1, 4),
            &Rational::frac(2, 5),
        )
        .unwrap();
        assert!(c.equal);
        assert!(scaled_transform_identity(&b2, 3, &Rational::zero(), &x, &q).is_err());
    }
}
