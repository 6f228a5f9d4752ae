//! Helper evaluators: factorial powers, generalized binomials, Stirling
//! numbers, Bell and geometric polynomials, Laguerre and Meixner
//! polynomials, and the small closed forms the corollaries are stated in.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::poly::Poly;
use crate::rational::{binom, factorial, sign, Rational};

/// `Π_{i<j} (x + step·i) / Π_{i<j} extra(i)`, built in integers and reduced once.
fn stepped_product(x: &Rational, j: u64, step: i64, extra: impl Fn(u64) -> u64) -> Rational {
    let (p, q) = (x.numer(), x.denom());
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for i in 0..j {
        num *= p + q * (step * i as i64);
        den *= q * BigInt::from(extra(i));
    }
    Rational::from_parts(num, den)
}

/// Rising factorial `(x)_j = x (x+1) ... (x+j-1)`.
pub fn rising(x: &Rational, j: u64) -> Rational {
    stepped_product(x, j, 1, |_| 1)
}

/// Falling factorial `x (x-1) ... (x-j+1)`.
pub fn falling(x: &Rational, j: u64) -> Rational {
    stepped_product(x, j, -1, |_| 1)
}

/// `C(alpha, k)` for rational `alpha`; zero when `k < 0`.
pub fn binom_rat(alpha: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    stepped_product(alpha, k as u64, -1, |i| i + 1)
}

/// Row `n` of the Stirling triangle of the second kind: `{n k}` for `k = 0..=n`.
pub fn stirling2_row(n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::one()];
    for m in 1..=n {
        let mut next = vec![Rational::zero(); m + 1];
        for k in 1..=m {
            let stay = if k < m {
                &row[k] * Rational::int(k as i64)
            } else {
                Rational::zero()
            };
            next[k] = &row[k - 1] + stay;
        }
        row = next;
    }
    row
}

pub fn stirling2(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    stirling2_row(n)[k].clone()
}

/// Single-variable Bell polynomial `Σ_j {n j} x^j`.
pub fn bell_poly(n: usize) -> Poly {
    Poly::new(stirling2_row(n))
}

/// Geometric polynomial `Σ_j j! {n j} x^j`.
pub fn geometric_poly(n: usize) -> Poly {
    Poly::new(
        stirling2_row(n)
            .into_iter()
            .enumerate()
            .map(|(j, s)| s * factorial(j as u64))
            .collect(),
    )
}

pub fn bell(n: usize, x: &Rational) -> Rational {
    bell_poly(n).eval(x)
}

pub fn geometric(n: usize, x: &Rational) -> Rational {
    geometric_poly(n).eval(x)
}

/// Generalized Laguerre `L_n^{(alpha)}(x) = Σ_k (-1)^k C(n+alpha, n-k) x^k / k!`,
/// taken as zero for negative `n`.
pub fn laguerre(n: i64, alpha: &Rational, x: &Rational) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    let top = alpha + Rational::int(n);
    (0..=n)
        .map(|k| sign(k) * binom_rat(&top, n - k) * x.powu(k as u64) / factorial(k as u64))
        .sum()
}

/// Which normalization of the Meixner polynomials to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum MeixnerDef {
    /// `(alpha)_n 2F1(-n, -x; alpha; 1 - 1/beta)`, pole free in `alpha`.
    #[default]
    Pochhammer,
    /// `2F1(-n, -x; alpha; 1 - 1/beta)`.
    Plain,
}

impl MeixnerDef {
    pub fn name(self) -> &'static str {
        match self {
            MeixnerDef::Pochhammer => "pochhammer",
            MeixnerDef::Plain => "plain",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "pochhammer" => Ok(MeixnerDef::Pochhammer),
            "plain" => Ok(MeixnerDef::Plain),
            other => Err(crate::error::Error::Parse(format!(
                "unknown Meixner definition `{other}` (pochhammer|plain)"
            ))),
        }
    }
}

pub fn meixner(
    def: MeixnerDef,
    n: i64,
    x: &Rational,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Rational> {
    if n < 0 {
        return Ok(Rational::zero());
    }
    if beta.is_zero() {
        return Err(domain("Meixner beta must be nonzero"));
    }
    let z = Rational::one() - beta.recip()?;
    let minus_n = Rational::int(-n);
    let minus_x = -x;
    let mut acc = Rational::zero();
    for k in 0..=n as u64 {
        let base = rising(&minus_n, k) * rising(&minus_x, k) * z.powu(k) / factorial(k);
        let term = match def {
            MeixnerDef::Pochhammer => {
                base * rising(&(alpha + Rational::int(k as i64)), n as u64 - k)
            }
            MeixnerDef::Plain => {
                let den = rising(alpha, k);
                if den.is_zero() {
                    return Err(domain(format!(
                        "Meixner (alpha)_{k} vanishes at alpha={alpha}"
                    )));
                }
                base / den
            }
        };
        acc += term;
    }
    Ok(acc)
}

/// `[n]_p = 1 + p + ... + p^{n-1}`.
pub fn q_integer(n: u64, p: &Rational) -> Rational {
    (0..n).map(|i| p.powu(i)).sum()
}

/// `[m]_q` in the ratio form `(1 - q^m)/(1 - q)`, undefined at `q = 1`.
pub fn q_integer_ratio(m: u64, q: &Rational) -> Result<Rational> {
    (Rational::one() - q.powu(m)).checked_div(&q.complement())
}

/// Fuss–Catalan `A_m(s, n) = n/(sm+n) C(sm+n, m)`, evaluated as
/// `(n/m) C(sm+n-1, m-1)` so that `sm + n = 0` is not a pole. `A_0 = 1`.
pub fn fuss_catalan(m: i64, s: i64, n: i64) -> Rational {
    if m < 0 {
        return Rational::zero();
    }
    if m == 0 {
        return Rational::one();
    }
    Rational::frac(n, m) * binom_rat(&Rational::int(s * m + n - 1), m - 1)
}

/// `H_n^{(r)}(x) = Σ_{k=1..n} 1/(k+x)^r`.
pub fn gen_harmonic(n: u64, r: u32, x: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 1..=n {
        let base = x + Rational::int(k as i64);
        if base.is_zero() {
            return Err(domain(format!("generalized harmonic pole at x={x}")));
        }
        acc += base.pow(-(r as i64))?;
    }
    Ok(acc)
}

/// The coefficient `D_n(r, j)` in the generalized harmonic expansion
/// `S_n(q) = H_n^{(r)} - Σ_j D_n(r, j) q^j / j`.
///
/// Uses `C(n, l)` inside the sum; the alternative with `C(n, j)` does not
/// reproduce the expansion.
pub fn komatsu_d(n: i64, r: u32, j: i64) -> Rational {
    (0..j)
        .map(|l| {
            sign(j - l - 1) * binom(n - l - 1, n - j) * binom(n, l)
                / Rational::int(n - l).powu(r as u64 - 1)
        })
        .sum()
}
