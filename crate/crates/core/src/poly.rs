//! Dense univariate polynomials over the rationals.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::rational::{binom, Accumulator, Rational};

/// Dense polynomial; `coeffs[j]` is the coefficient of the `j`-th power.
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients
/// and `degree()` returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// Polynomial in the transform variable `q`.
pub type QPoly = Poly;
/// Polynomial in the Appell variable `y`.
pub type YPoly = Poly;

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `y^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Poly { coeffs }
    }

    /// `c0 + c1*t`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Poly::new(vec![c0, c1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^j`, zero beyond the stored range.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Accumulator::new();
        self.coeffs.iter().rev().for_each(|c| acc.mul_add(t, c));
        acc.finish()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * Rational::int(j as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `p(t + h)` by expanding every power binomially.
    pub fn shift(&self, h: &Rational) -> Poly {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        let hp: Vec<Rational> = (0..n).map(|e| h.powu(e as u64)).collect();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate().take(k + 1) {
                *slot += c * binom(k as i64, i as i64) * &hp[k - i];
            }
        }
        Poly::new(out)
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl From<Vec<Rational>> for Poly {
    fn from(v: Vec<Rational>) -> Self {
        Poly::new(v)
    }
}

impl From<Poly> for Vec<Rational> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rats;

    #[test]
    fn eval_examples() {
        let p = Poly::new(rats(&["0", "-1", "1"]));
        assert_eq!(p.eval(&Rational::frac(1, 2)), Rational::frac(-1, 4));
        let r = Poly::new(rats(&["5", "3", "-2"]));
        assert_eq!(r.eval(&Rational::zero()), Rational::int(5));
        // q + q^2/2 at 1/2
        let corr = Poly::new(rats(&["0", "1", "1/2"]));
        assert_eq!(corr.eval(&Rational::frac(1, 2)), Rational::frac(5, 8));
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Poly::new(rats(&["1", "0", "0"]));
        assert_eq!(p.degree(), Some(0));
        assert!(Poly::new(rats(&["0", "0"])).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn derivative_and_shift() {
        let p = Poly::new(rats(&["1", "2", "3"]));
        assert_eq!(p.derivative(), Poly::new(rats(&["2", "6"])));
        let h = Rational::frac(1, 3);
        let shifted = p.shift(&h);
        for t in rats(&["0", "1/2", "-2"]) {
            assert_eq!(shifted.eval(&t), p.eval(&(&t + &h)));
        }
    }

    #[test]
    fn json_is_array_of_strings() {
        let p = Poly::new(rats(&["3/2", "-1", "-1/2"]));
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["3/2","-1","-1/2"]"#);
    }
}
