//! Truncated formal power series over the rationals.
//!
//! A [`Series`] of order `N` stores the coefficients of `z^0 ..= z^N`; every
//! operation truncates its result to the same order, and binary operations
//! refuse operands of different orders.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Series {
    #[serde(skip)]
    order: usize,
    coeffs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnalyticOp {
    Reciprocal,
    Exp,
    Log,
    Pow(Rational),
}

impl Series {
    /// Builds a series from leading coefficients, padding with zeros or
    /// truncating to `order`.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Series::new(order, vec![Rational::one()])
    }

    /// The series `z`.
    pub fn variable(order: usize) -> Self {
        Series::new(order, vec![Rational::zero(), Rational::one()])
    }

    /// `Σ_k terms(k) z^k` for `k <= order`.
    pub fn from_fn(order: usize, mut term: impl FnMut(usize) -> Rational) -> Self {
        Series {
            order,
            coeffs: (0..=order).map(&mut term).collect(),
        }
    }

    /// `Σ_k c_k z^k / k!`, turning exponential coefficients into ordinary ones.
    pub fn from_egf(order: usize, egf: &[Rational]) -> Self {
        Series::from_fn(order, |k| {
            egf.get(k).cloned().unwrap_or_default() / factorial(k as u64)
        })
    }

    /// `e^{a z}` truncated.
    pub fn exp_linear(order: usize, a: &Rational) -> Self {
        Series::from_fn(order, |k| a.powu(k as u64) / factorial(k as u64))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&Rational> {
        self.coeffs.get(k).ok_or(Error::OrderTooSmall {
            order: self.order,
            needed: k,
        })
    }

    /// `k! [z^k]`, the exponential coefficient.
    pub fn egf_coeff(&self, k: usize) -> Result<Rational> {
        Ok(self.coeff(k)? * factorial(k as u64))
    }

    fn same_order(&self, other: &Series) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        Ok(Series::from_fn(self.order, |k| {
            &self.coeffs[k] + &other.coeffs[k]
        }))
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        Ok(Series::from_fn(self.order, |k| {
            &self.coeffs[k] - &other.coeffs[k]
        }))
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::from_fn(self.order, |k| &self.coeffs[k] * c)
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Series) -> Series {
        let n = self.order;
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Series {
            order: n,
            coeffs: out,
        }
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, e: u32) -> Series {
        let mut acc = Series::one(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `outer(inner(z))`; the inner series must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        self.same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::SeriesPrecondition(
                "inner series of a composition must have zero constant term".into(),
            ));
        }
        // Horner in the inner series.
        let mut acc = Series::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Derivative, keeping the order (the top coefficient becomes zero).
    pub fn derivative(&self) -> Series {
        Series::from_fn(self.order, |k| {
            self.coeffs
                .get(k + 1)
                .map(|c| c * Rational::int(k as i64 + 1))
                .unwrap_or_default()
        })
    }

    /// Antiderivative with zero constant term, truncated.
    pub fn integral(&self) -> Series {
        Series::from_fn(self.order, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                &self.coeffs[k - 1] / Rational::int(k as i64)
            }
        })
    }

    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::SeriesPrecondition(
                "reciprocal needs a nonzero constant term".into(),
            ));
        }
        let inv0 = c0.recip()?;
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for k in 1..=self.order {
            let s: Rational = (1..=k).map(|j| &self.coeffs[j] * &out[k - j]).sum();
            out.push(-(s * &inv0));
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }

    /// `log s` for `s(0) = 1`.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SeriesPrecondition(
                "log needs constant term 1".into(),
            ));
        }
        let quotient = self.derivative().mul_unchecked(&self.reciprocal()?);
        Ok(quotient.integral())
    }

    /// `exp u` for `u(0) = 0`.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesPrecondition(
                "exp needs constant term 0".into(),
            ));
        }
        // e' = u' e  =>  k e_k = Σ_{j=1..k} j u_j e_{k-j}
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(Rational::one());
        for k in 1..=self.order {
            let s: Rational = (1..=k)
                .map(|j| Rational::int(j as i64) * &self.coeffs[j] * &out[k - j])
                .sum();
            out.push(s / Rational::int(k as i64));
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }

    /// `s^e = exp(e log s)` for `s(0) = 1` and rational `e`.
    pub fn pow(&self, e: &Rational) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SeriesPrecondition(
                "rational power needs constant term 1".into(),
            ));
        }
        self.log()?.scale(e).exp()
    }

    pub fn analytic(&self, op: &AnalyticOp) -> Result<Series> {
        match op {
            AnalyticOp::Reciprocal => {
                if !self.coeffs[0].is_one() {
                    return Err(Error::SeriesPrecondition(
                        "reciprocal expects constant term 1".into(),
                    ));
                }
                self.reciprocal()
            }
            AnalyticOp::Exp => self.exp(),
            AnalyticOp::Log => self.log(),
            AnalyticOp::Pow(e) => self.pow(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rats;

    fn s(order: usize, c: &[&str]) -> Series {
        Series::new(order, rats(c))
    }

    #[test]
    fn compose_with_identity_is_noop() {
        let geo = s(4, &["1", "1", "1", "1", "1"]);
        assert_eq!(geo.compose(&Series::variable(4)).unwrap(), geo);
    }

    #[test]
    fn compose_geometric_scaling() {
        let geo = s(3, &["1", "1", "1", "1"]);
        let two_z = s(3, &["0", "2"]);
        assert_eq!(geo.compose(&two_z).unwrap(), s(3, &["1", "2", "4", "8"]));
    }

    #[test]
    fn compose_bernstein_substitution() {
        // Σ z^k at (1-q)z/(1-qz), q = 1/3, expanded by hand: 1 + (2/3)z + (2/9 + 4/9)z^2
        let q = Rational::frac(1, 3);
        let ones = s(2, &["1", "1", "1"]);
        let one_minus_qz = s(2, &["1"]).sub(&Series::variable(2).scale(&q)).unwrap();
        let inner = Series::variable(2)
            .scale(&q.complement())
            .mul(&one_minus_qz.reciprocal().unwrap())
            .unwrap();
        assert_eq!(inner, s(2, &["0", "2/3", "2/9"]));
        assert_eq!(ones.compose(&inner).unwrap(), s(2, &["1", "2/3", "2/3"]));
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let a = s(2, &["1", "1"]);
        let err = a.compose(&s(2, &["1", "1"])).unwrap_err();
        assert!(matches!(err, Error::SeriesPrecondition(_)));
        assert!(matches!(
            a.compose(&Series::variable(3)),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn analytic_examples() {
        let et = s(2, &["1", "1", "1/2"]);
        assert_eq!(
            et.analytic(&AnalyticOp::Reciprocal).unwrap(),
            s(2, &["1", "-1", "1/2"])
        );
        let one_plus_t = s(3, &["1", "1"]);
        assert_eq!(
            one_plus_t.analytic(&AnalyticOp::Log).unwrap(),
            s(3, &["0", "1", "-1/2", "1/3"])
        );
        // ((e^t - 1)/t)^(-1) = t/(e^t - 1): 1 - t/2 + t^2/12
        let base = s(2, &["1", "1/2", "1/6"]);
        assert_eq!(
            base.analytic(&AnalyticOp::Pow(Rational::int(-1))).unwrap(),
            s(2, &["1", "-1/2", "1/12"])
        );
    }

    #[test]
    fn analytic_preconditions() {
        let bad = s(2, &["2", "1"]);
        assert!(bad.log().is_err());
        assert!(bad.pow(&Rational::frac(1, 2)).is_err());
        assert!(bad.exp().is_err());
        assert!(bad.analytic(&AnalyticOp::Reciprocal).is_err());
        assert!(s(2, &["0", "1"]).reciprocal().is_err());
    }

    #[test]
    fn exp_of_z_matches_taylor() {
        let e = Series::variable(5).exp().unwrap();
        assert_eq!(e, Series::exp_linear(5, &Rational::one()));
    }
}
