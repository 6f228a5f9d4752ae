//! Exact binomial laws and the composed counting process.
//!
//! Conventions follow the Bernoulli variables `P(X=1) = 1-x`, `P(Y=1) = 1-y`:
//! `Z(n) ~ Bin(n, 1-x)`, `T(n) ~ Bin(n, 1-y)` and `W(n) = T(Z(n))`. Under the
//! dictionary `a_k = f(k)` the transform argument `q` is the probability `x`,
//! so `E f(Z(n)) = S_n(x)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::exec::{self, ExecMode};
use crate::rational::{binom, Rational};
use crate::sequences::SequenceSpec;
use crate::transform::{shifted_transform, Comparison};

/// Exact law on `{0, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitePmf {
    probs: Vec<Rational>,
}

fn check_unit(name: &str, v: &Rational) -> Result<()> {
    if v.is_negative() || *v > Rational::one() {
        return Err(domain(format!("{name}={v} is not a probability")));
    }
    Ok(())
}

impl FinitePmf {
    /// Validates nonnegativity and exact normalization.
    pub fn new(probs: Vec<Rational>) -> Result<Self> {
        if probs.is_empty() {
            return Err(domain("a law needs at least one atom"));
        }
        if probs.iter().any(Rational::is_negative) {
            return Err(domain("negative probability"));
        }
        let total: Rational = probs.iter().sum();
        if !total.is_one() {
            return Err(domain(format!("probabilities sum to {total}, not 1")));
        }
        Ok(FinitePmf { probs })
    }

    pub fn point_mass(k: usize) -> Self {
        let mut probs = vec![Rational::zero(); k + 1];
        probs[k] = Rational::one();
        FinitePmf { probs }
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    /// Largest value in the support range.
    pub fn max_value(&self) -> usize {
        self.probs.len() - 1
    }

    pub fn prob(&self, k: usize) -> Rational {
        self.probs.get(k).cloned().unwrap_or_default()
    }

    /// The law of `m + X`.
    pub fn shift(&self, m: usize) -> FinitePmf {
        let mut probs = vec![Rational::zero(); m];
        probs.extend(self.probs.iter().cloned());
        FinitePmf { probs }
    }
}

/// `Bin(n, success)`.
pub fn binomial_pmf(n: usize, success: &Rational) -> Result<FinitePmf> {
    check_unit("success", success)?;
    let fail = success.complement();
    let powers = |base: &Rational| {
        let mut v = vec![Rational::one()];
        for _ in 0..n {
            let next = v.last().expect("nonempty") * base;
            v.push(next);
        }
        v
    };
    let (sp, fp) = (powers(success), powers(&fail));
    Ok(FinitePmf {
        probs: (0..=n)
            .map(|k| binom(n as i64, k as i64) * &sp[k] * &fp[n - k])
            .collect(),
    })
}

/// The law of `Σ_{i <= N} Y_i` with `N` drawn from `inner` and
/// `P(Y_i = 1) = outer_success`.
pub fn compose_pmf(outer_success: &Rational, inner: &FinitePmf) -> Result<FinitePmf> {
    check_unit("outer success", outer_success)?;
    let top = inner.max_value();
    let fail = outer_success.complement();
    let mut probs = vec![Rational::zero(); top + 1];
    // row j holds Binomial(j, outer_success), built by Pascal's rule
    let mut row = vec![Rational::one()];
    for (j, pj) in inner.probs.iter().enumerate() {
        if j > 0 {
            let mut next = vec![Rational::zero(); j + 1];
            for (k, p) in row.iter().enumerate() {
                next[k] += p * &fail;
                next[k + 1] += p * outer_success;
            }
            row = next;
        }
        if pj.is_zero() {
            continue;
        }
        for (k, pk) in row.iter().enumerate() {
            probs[k] += pj * pk;
        }
    }
    Ok(FinitePmf { probs })
}

/// `E f(X)` with `f(k) = a_k`.
pub fn expect(f: &SequenceSpec, law: &FinitePmf) -> Result<Rational> {
    let a = f.terms(law.max_value())?;
    Ok(law.probs.iter().zip(&a).map(|(p, v)| p * v).sum())
}

/// The law of `W(n) = T(Z(n))`.
pub fn composed_law(n: usize, x: &Rational, y: &Rational) -> Result<FinitePmf> {
    compose_pmf(&y.complement(), &binomial_pmf(n, &x.complement())?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExpectationIdentity {
    /// `(1-x)^m E f(T(m+Z(n))) = Σ_j C(m,j) (-x)^(m-j) E f(T∘Z(j+n))`.
    Composed,
    /// The `y = 0` case, where `T(n) = n`.
    Plain,
    /// The `n = y = 0` case: `(1-x)^m f(m) = Σ_j C(m,j) (-x)^(m-j) E f(Z(j))`.
    Inverse,
}

/// Evaluates both sides from exact laws.
pub fn verify_expectation_identity(
    f: &SequenceSpec,
    m: usize,
    n: usize,
    x: &Rational,
    y: &Rational,
    which: ExpectationIdentity,
) -> Result<Comparison> {
    check_unit("x", x)?;
    check_unit("y", y)?;
    let (n, y) = match which {
        ExpectationIdentity::Composed => (n, y.clone()),
        ExpectationIdentity::Plain => (n, Rational::zero()),
        ExpectationIdentity::Inverse => (0, Rational::zero()),
    };
    let inner = binomial_pmf(n, &x.complement())?.shift(m);
    let lhs = x.complement().powu(m as u64) * expect(f, &compose_pmf(&y.complement(), &inner)?)?;
    let mx = -x;
    let mut rhs = Rational::zero();
    for j in 0..=m {
        let law = composed_law(j + n, x, &y)?;
        rhs += binom(m as i64, j as i64) * mx.powu((m - j) as u64) * expect(f, &law)?;
    }
    Ok(Comparison::new(lhs, rhs))
}

/// The same identity through the transform engine: probability `x` is the
/// transform argument `q` and probability `y` the inner argument.
pub fn expectation_via_transform(
    f: &SequenceSpec,
    m: usize,
    n: usize,
    x: &Rational,
    y: &Rational,
) -> Result<Comparison> {
    shifted_transform(f, n, m, y, x)
}

/// Result of simulating `W(n)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McReport {
    pub n: usize,
    pub x: Rational,
    pub y: Rational,
    pub trials: u64,
    pub seed: u64,
    pub shards: usize,
    pub counts: Vec<u64>,
    pub exact: Vec<Rational>,
    pub empirical: Vec<f64>,
    /// `(empirical - exact) / standard error` per bin; zero where the
    /// standard error vanishes and the bin matches.
    pub z_scores: Vec<f64>,
    /// Bins more than `threshold` standard errors away.
    pub flagged: Vec<usize>,
    pub threshold: f64,
}

/// Shards used by [`monte_carlo`]; fixed so results do not depend on the
/// thread count.
pub const MC_SHARDS: usize = 8;

/// Simulates `W(n)` by composing Bernoulli draws. Shard `i` uses a ChaCha8
/// stream seeded with `seed + i`; counts are summed.
pub fn monte_carlo(
    n: usize,
    x: &Rational,
    y: &Rational,
    trials: u64,
    seed: u64,
    mode: ExecMode,
) -> Result<McReport> {
    if trials == 0 {
        return Err(domain("Monte Carlo needs at least one trial"));
    }
    let exact = composed_law(n, x, y)?;
    let px = x.complement().to_f64();
    let py = y.complement().to_f64();
    let per = trials / MC_SHARDS as u64;
    let extra = trials % MC_SHARDS as u64;
    let shard_counts = exec::map_indexed(mode, MC_SHARDS, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let mut counts = vec![0u64; n + 1];
        let runs = per + u64::from((i as u64) < extra);
        for _ in 0..runs {
            let z = (0..n).filter(|_| rng.random::<f64>() < px).count();
            let w = (0..z).filter(|_| rng.random::<f64>() < py).count();
            counts[w] += 1;
        }
        counts
    });
    let mut counts = vec![0u64; n + 1];
    for c in shard_counts {
        for (acc, v) in counts.iter_mut().zip(c) {
            *acc += v;
        }
    }
    let threshold = 5.0;
    let t = trials as f64;
    let empirical: Vec<f64> = counts.iter().map(|&c| c as f64 / t).collect();
    let z_scores: Vec<f64> = empirical
        .iter()
        .zip(exact.probs())
        .map(|(e, p)| {
            let p = p.to_f64();
            let se = (p * (1.0 - p) / t).sqrt();
            if se > 0.0 {
                (e - p) / se
            } else if (e - p).abs() > 0.0 {
                f64::INFINITY
            } else {
                0.0
            }
        })
        .collect();
    let flagged = if trials > 1 {
        z_scores
            .iter()
            .enumerate()
            .filter(|(_, z)| z.abs() > threshold)
            .map(|(k, _)| k)
            .collect()
    } else {
        Vec::new()
    };
    Ok(McReport {
        n,
        x: x.clone(),
        y: y.clone(),
        trials,
        seed,
        shards: MC_SHARDS,
        counts,
        exact: exact.probs().to_vec(),
        empirical,
        z_scores,
        flagged,
        threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rats;

    #[test]
    fn binomial_examples() {
        let b = binomial_pmf(2, &Rational::frac(1, 3)).unwrap();
        assert_eq!(b.probs(), rats(&["4/9", "4/9", "1/9"]).as_slice());
        assert_eq!(
            binomial_pmf(0, &Rational::frac(1, 3)).unwrap().probs(),
            rats(&["1"]).as_slice()
        );
        assert_eq!(
            binomial_pmf(3, &Rational::zero()).unwrap(),
            FinitePmf::point_mass(0).shift(0).pad(3)
        );
        assert!(binomial_pmf(2, &Rational::int(2)).is_err());
    }

    impl FinitePmf {
        fn pad(mut self, top: usize) -> Self {
            self.probs.resize(top + 1, Rational::zero());
            self
        }
    }

    #[test]
    fn compose_examples() {
        let w = composed_law(2, &Rational::frac(1, 2), &Rational::frac(1, 3)).unwrap();
        assert_eq!(w.prob(0), Rational::frac(4, 9));
        assert_eq!(w, binomial_pmf(2, &Rational::frac(1, 3)).unwrap());
        let pm = compose_pmf(&Rational::frac(1, 2), &FinitePmf::point_mass(0)).unwrap();
        assert_eq!(pm, FinitePmf::point_mass(0));
        let z = binomial_pmf(3, &Rational::frac(2, 5)).unwrap();
        assert_eq!(compose_pmf(&Rational::one(), &z).unwrap(), z);
    }

    #[test]
    fn expectation_examples() {
        let id = SequenceSpec::UserTable((0..6).map(Rational::int).collect());
        let s = Rational::frac(2, 7);
        assert_eq!(
            expect(&id, &binomial_pmf(5, &s).unwrap()).unwrap(),
            Rational::int(5) * &s
        );
        let h = SequenceSpec::Harmonic;
        assert_eq!(
            expect(&h, &binomial_pmf(2, &Rational::frac(1, 2)).unwrap()).unwrap(),
            Rational::frac(7, 8)
        );
        let c = SequenceSpec::UserTable(vec![Rational::frac(3, 4); 4]);
        assert_eq!(
            expect(&c, &binomial_pmf(3, &s).unwrap()).unwrap(),
            Rational::frac(3, 4)
        );
    }

    #[test]
    fn expectation_identity_examples() {
        let h = SequenceSpec::Harmonic;
        let half = Rational::frac(1, 2);
        let p2 = verify_expectation_identity(
            &h,
            2,
            0,
            &half,
            &Rational::zero(),
            ExpectationIdentity::Inverse,
        )
        .unwrap();
        assert_eq!(p2.lhs, Rational::frac(3, 8));
        assert!(p2.equal);
        let id = SequenceSpec::UserTable((0..6).map(Rational::int).collect());
        let (x, y) = (Rational::frac(1, 3), Rational::frac(1, 4));
        let m2 =
            verify_expectation_identity(&id, 1, 1, &x, &y, ExpectationIdentity::Composed).unwrap();
        // E T(1 + Z(1)) = (1 + 2/3)(3/4)
        assert_eq!(
            m2.lhs,
            Rational::frac(2, 3) * Rational::frac(5, 3) * Rational::frac(3, 4)
        );
        assert!(m2.equal);
        let bridge = expectation_via_transform(&id, 1, 1, &x, &y).unwrap();
        assert_eq!(bridge.lhs, m2.lhs);
    }

    #[test]
    fn monte_carlo_examples() {
        let r = monte_carlo(
            2,
            &Rational::frac(1, 2),
            &Rational::frac(1, 3),
            100_000,
            42,
            ExecMode::Parallel,
        )
        .unwrap();
        assert!(r.flagged.is_empty(), "{:?}", r.z_scores);
        let seq = monte_carlo(
            2,
            &Rational::frac(1, 2),
            &Rational::frac(1, 3),
            100_000,
            42,
            ExecMode::Sequential,
        )
        .unwrap();
        assert_eq!(r.counts, seq.counts);
        let one = monte_carlo(
            2,
            &Rational::frac(1, 2),
            &Rational::frac(1, 3),
            1,
            7,
            ExecMode::Sequential,
        )
        .unwrap();
        assert_eq!(one.counts.iter().sum::<u64>(), 1);
        assert!(one.flagged.is_empty());
        let sure = monte_carlo(
            3,
            &Rational::zero(),
            &Rational::zero(),
            1000,
            1,
            ExecMode::Sequential,
        )
        .unwrap();
        assert_eq!(sure.counts, vec![0, 0, 0, 1000]);
        assert!(sure.flagged.is_empty());
    }
}
