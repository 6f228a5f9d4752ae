//! Sequence families and their backward-difference tables.
//!
//! `M(n,j) = ∇^j a_n = Σ_l (-1)^l C(j,l) a_{n-l}` and the dual
//! `M̄(j) = Σ_l (-1)^l C(j,l) a_l` are always computed from raw terms here;
//! closed forms live with the identities that state them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::appell::AppellSpec;
use crate::error::{domain, Error, Result};
use crate::rational::{binom, sign, Rational};
use crate::special::{
    bell, binom_rat, fuss_catalan, gen_harmonic, geometric, laguerre, meixner, q_integer_ratio,
    MeixnerDef,
};
use crate::transform::{bernstein_sum, dual_diffs, forward_diffs};

/// Nesting limit for [`SequenceSpec::TransformOf`].
pub const MAX_TRANSFORM_DEPTH: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LaguerreShift {
    /// `a_n = L_{n+r}^{(alpha)}(x)`.
    Degree(i64),
    /// `a_n = L_r^{(alpha+n)}(x)`.
    Order(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SequenceSpec {
    UserTable(Vec<Rational>),
    Harmonic,
    GenHarmonic {
        r: u32,
        x: Rational,
    },
    /// `F_{n+2} = c F_n + F_{n+1}`, `F_0 = a`, `F_1 = b`; `a_n = F_{n+r}`.
    FiboLike {
        a: Rational,
        b: Rational,
        c: Rational,
        r: i64,
    },
    /// `a_n = (-1)^n C(alpha, n+r)`.
    BinomAlt {
        alpha: Rational,
        r: i64,
    },
    /// `a_n = A_m(s, n)`.
    FussCatalan {
        m: i64,
        s: i64,
    },
    /// `a_n = [n+r]_p`.
    QInt {
        p: Rational,
        r: i64,
    },
    /// `a_n = (-1)^n x B_n(x)` with the Bell polynomial `B_n`.
    BellAlt {
        x: Rational,
    },
    /// `a_n = (-1)^n x w_n(x)` with the geometric polynomial `w_n`.
    GeomAlt {
        x: Rational,
    },
    Laguerre {
        alpha: Rational,
        x: Rational,
        shift: LaguerreShift,
    },
    /// `a_n = M_{n+r}(x; alpha, beta)`.
    Meixner {
        x: Rational,
        alpha: Rational,
        beta: Rational,
        r: i64,
        def: MeixnerDef,
    },
    /// `a_n = lambda^n f_n(x)`.
    AppellScaled {
        family: AppellSpec,
        lambda: Rational,
        x: Rational,
    },
    /// `a_n = S_n(at)` of the inner sequence.
    TransformOf {
        inner: Box<SequenceSpec>,
        at: Rational,
    },
}

/// A row of the difference table: `values[j] = M(n, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffTable {
    pub n: usize,
    pub values: Vec<Rational>,
}

/// Terms of the `𝓕` recurrence at any integer index, running it backwards
/// (`F_k = (F_{k+2} - F_{k+1})/c`) for negative indices.
pub fn fibo_like(a: &Rational, b: &Rational, c: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        let (mut x, mut y) = (a.clone(), b.clone());
        for _ in 0..k {
            let next = c * &x + &y;
            x = std::mem::replace(&mut y, next);
        }
        Ok(x)
    } else {
        if c.is_zero() {
            return Err(domain("negative Fibonacci-like index needs c != 0"));
        }
        // (F_{k+1}, F_{k+2}) stepping down from (F_0, F_1)
        let (mut lo, mut hi) = (a.clone(), b.clone());
        for _ in 0..(-k) {
            let prev = (&hi - &lo).checked_div(c)?;
            hi = std::mem::replace(&mut lo, prev);
        }
        Ok(lo)
    }
}

/// Standard Fibonacci numbers at any integer index.
pub fn fibo_standard(k: i64) -> Rational {
    let (mut x, mut y) = (num_bigint::BigInt::from(0), num_bigint::BigInt::from(1));
    for _ in 0..k.unsigned_abs() {
        let next = &x + &y;
        x = std::mem::replace(&mut y, next);
    }
    // F_{-k} = (-1)^{k+1} F_k
    if k < 0 && k % 2 == 0 {
        x = -x;
    }
    Rational::from_bigint(x)
}

impl SequenceSpec {
    pub fn fibonacci(r: i64) -> Self {
        SequenceSpec::FiboLike {
            a: Rational::zero(),
            b: Rational::one(),
            c: Rational::one(),
            r,
        }
    }

    pub fn lucas(r: i64) -> Self {
        SequenceSpec::FiboLike {
            a: Rational::int(2),
            b: Rational::one(),
            c: Rational::one(),
            r,
        }
    }

    /// Checks the parameter domain of the variant.
    pub fn validate(&self) -> Result<()> {
        match self {
            SequenceSpec::GenHarmonic { r, x } => {
                if *r == 0 {
                    return Err(domain("generalized harmonic needs r >= 1"));
                }
                if x.is_integer() && x.is_negative() {
                    return Err(domain(format!("generalized harmonic pole at x={x}")));
                }
            }
            SequenceSpec::FiboLike { c, r, .. } => {
                if c.is_zero() {
                    return Err(domain("Fibonacci-like recurrence needs c != 0"));
                }
                if *r < 0 {
                    return Err(domain("shift r must be >= 0"));
                }
            }
            SequenceSpec::BinomAlt { r, .. } => {
                if *r < 0 {
                    return Err(domain("shift r must be >= 0"));
                }
            }
            SequenceSpec::FussCatalan { m, s } => {
                if *m < 0 || *s < 0 {
                    return Err(domain("Fuss-Catalan needs m >= 0 and s >= 0"));
                }
            }
            SequenceSpec::QInt { p, r } => {
                if p.is_one() {
                    return Err(domain("q-integer ratio needs p != 1"));
                }
                if *r < 0 {
                    return Err(domain("shift r must be >= 0"));
                }
            }
            SequenceSpec::Laguerre { shift, .. } => {
                let (LaguerreShift::Degree(r) | LaguerreShift::Order(r)) = shift;
                if *r < 0 {
                    return Err(domain("shift r must be >= 0"));
                }
            }
            SequenceSpec::Meixner { beta, r, .. } => {
                if beta.is_zero() {
                    return Err(domain("Meixner beta must be nonzero"));
                }
                if *r < 0 {
                    return Err(domain("shift r must be >= 0"));
                }
            }
            SequenceSpec::AppellScaled { lambda, .. } => {
                if lambda.is_zero() {
                    return Err(domain("Appell scaling needs lambda != 0"));
                }
            }
            SequenceSpec::TransformOf { inner, .. } => {
                if self.depth() > MAX_TRANSFORM_DEPTH {
                    return Err(domain(format!(
                        "transform nesting deeper than {MAX_TRANSFORM_DEPTH}"
                    )));
                }
                inner.validate()?;
            }
            SequenceSpec::UserTable(_)
            | SequenceSpec::Harmonic
            | SequenceSpec::BellAlt { .. }
            | SequenceSpec::GeomAlt { .. } => {}
        }
        Ok(())
    }

    /// Number of nested transforms.
    pub fn depth(&self) -> usize {
        match self {
            SequenceSpec::TransformOf { inner, .. } => 1 + inner.depth(),
            _ => 0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SequenceSpec::UserTable(_) => "usertable",
            SequenceSpec::Harmonic => "harmonic",
            SequenceSpec::GenHarmonic { .. } => "genharmonic",
            SequenceSpec::FiboLike { .. } => "fibolike",
            SequenceSpec::BinomAlt { .. } => "binomalt",
            SequenceSpec::FussCatalan { .. } => "fusscatalan",
            SequenceSpec::QInt { .. } => "qint",
            SequenceSpec::BellAlt { .. } => "bellalt",
            SequenceSpec::GeomAlt { .. } => "geomalt",
            SequenceSpec::Laguerre { .. } => "laguerre",
            SequenceSpec::Meixner { .. } => "meixner",
            SequenceSpec::AppellScaled { .. } => "appellscaled",
            SequenceSpec::TransformOf { .. } => "transformof",
        }
    }

    /// `a_n` at a possibly negative index. Only the Fibonacci-like family is
    /// defined below zero.
    pub fn term_at(&self, n: i64) -> Result<Rational> {
        if n < 0 {
            return match self {
                SequenceSpec::FiboLike { a, b, c, r } => fibo_like(a, b, c, n + r),
                _ => Err(domain(format!("{} has no term at index {n}", self.name()))),
            };
        }
        self.term(n as usize)
    }

    pub fn term(&self, n: usize) -> Result<Rational> {
        match self {
            // These are cheaper as a batch.
            SequenceSpec::Harmonic | SequenceSpec::TransformOf { .. } => {
                Ok(self.terms(n)?.pop().expect("terms(n) has n+1 entries"))
            }
            _ => self.single(n),
        }
    }

    fn single(&self, n: usize) -> Result<Rational> {
        self.validate()?;
        let ni = n as i64;
        match self {
            SequenceSpec::UserTable(t) => t.get(n).cloned().ok_or_else(|| {
                domain(format!(
                    "user table has {} terms, index {n} requested",
                    t.len()
                ))
            }),
            SequenceSpec::Harmonic => gen_harmonic(n as u64, 1, &Rational::zero()),
            SequenceSpec::GenHarmonic { r, x } => gen_harmonic(n as u64, *r, x),
            SequenceSpec::FiboLike { a, b, c, r } => fibo_like(a, b, c, ni + r),
            SequenceSpec::BinomAlt { alpha, r } => Ok(sign(ni) * binom_rat(alpha, ni + r)),
            SequenceSpec::FussCatalan { m, s } => Ok(fuss_catalan(*m, *s, ni)),
            SequenceSpec::QInt { p, r } => q_integer_ratio((ni + r) as u64, p),
            SequenceSpec::BellAlt { x } => Ok(sign(ni) * x * bell(n, x)),
            SequenceSpec::GeomAlt { x } => Ok(sign(ni) * x * geometric(n, x)),
            SequenceSpec::Laguerre { alpha, x, shift } => Ok(match shift {
                LaguerreShift::Degree(r) => laguerre(ni + r, alpha, x),
                LaguerreShift::Order(r) => laguerre(*r, &(alpha + Rational::int(ni)), x),
            }),
            SequenceSpec::Meixner {
                x,
                alpha,
                beta,
                r,
                def,
            } => meixner(*def, ni + r, x, alpha, beta),
            SequenceSpec::AppellScaled { family, lambda, x } => {
                Ok(lambda.powu(n as u64) * family.eval(n, x)?)
            }
            SequenceSpec::TransformOf { .. } => self.term(n),
        }
    }

    /// `a_0, ..., a_n`.
    pub fn terms(&self, n: usize) -> Result<Vec<Rational>> {
        // specs built per grid point would grow this without bound
        const CAP: usize = 4096;
        static CACHE: OnceLock<Mutex<HashMap<SequenceSpec, Arc<Vec<Rational>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("terms cache poisoned").get(self) {
            if t.len() > n {
                return Ok(t[..=n].to_vec());
            }
        }
        let t = self.compute_terms(n)?;
        let mut guard = cache.lock().expect("terms cache poisoned");
        if guard.len() >= CAP {
            guard.clear();
        }
        let longer = guard.get(self).is_none_or(|old| old.len() < t.len());
        if longer {
            guard.insert(self.clone(), Arc::new(t.clone()));
        }
        Ok(t)
    }

    fn compute_terms(&self, n: usize) -> Result<Vec<Rational>> {
        self.validate()?;
        match self {
            SequenceSpec::Harmonic => {
                let mut out = Vec::with_capacity(n + 1);
                let mut h = Rational::zero();
                out.push(h.clone());
                for k in 1..=n {
                    h += Rational::frac(1, k as i64);
                    out.push(h.clone());
                }
                Ok(out)
            }
            SequenceSpec::TransformOf { inner, at } => {
                let a = inner.terms(n)?;
                Ok((0..=n).map(|k| bernstein_sum(&a, k, at)).collect())
            }
            _ => (0..=n).map(|k| self.single(k)).collect(),
        }
    }

    /// The row `M(n, 0..=n)` from the generic alternating sum.
    pub fn diff_table(&self, n: usize) -> Result<DiffTable> {
        let a = self.terms(n)?;
        Ok(DiffTable {
            n,
            values: forward_diffs(&a, n),
        })
    }

    /// `M̄(j) = Σ_l (-1)^l C(j,l) a_l`.
    pub fn dual_diff(&self, j: usize) -> Result<Rational> {
        let a = self.terms(j)?;
        Ok(dual_diffs(&a, j)
            .pop()
            .expect("dual_diffs(j) has j+1 entries"))
    }

    /// `M(n, j)` for one pair, straight from the definition.
    pub fn diff(&self, n: usize, j: usize) -> Result<Rational> {
        if j > n {
            return Err(domain(format!("M(n,j) needs j <= n, got n={n} j={j}")));
        }
        let a = self.terms(n)?;
        Ok((0..=j)
            .map(|l| sign(l as i64) * binom(j as i64, l as i64) * &a[n - l])
            .sum())
    }
}

/// The twelve families used for the quantified checks, with fixed
/// parameters. `TransformOf` is excluded.
pub fn catalog() -> Vec<SequenceSpec> {
    let r = |s: &str| s.parse::<Rational>().expect("catalog literal");
    vec![
        SequenceSpec::UserTable(
            [
                "3", "-1", "1/2", "0", "2", "-5/3", "7", "1/4", "-2", "9", "1/3", "4", "-1/7", "6",
                "0", "5/2",
            ]
            .iter()
            .map(|s| r(s))
            .collect(),
        ),
        SequenceSpec::Harmonic,
        SequenceSpec::GenHarmonic { r: 2, x: r("1/2") },
        SequenceSpec::FiboLike {
            a: r("2"),
            b: r("1"),
            c: r("3/2"),
            r: 1,
        },
        SequenceSpec::BinomAlt {
            alpha: r("7/2"),
            r: 1,
        },
        SequenceSpec::FussCatalan { m: 4, s: 2 },
        SequenceSpec::QInt { p: r("2/3"), r: 1 },
        SequenceSpec::BellAlt { x: r("-1/2") },
        SequenceSpec::GeomAlt { x: r("2/3") },
        SequenceSpec::Laguerre {
            alpha: r("1/3"),
            x: r("3/2"),
            shift: LaguerreShift::Degree(1),
        },
        SequenceSpec::Meixner {
            x: r("2"),
            alpha: r("5/2"),
            beta: r("1/3"),
            r: 0,
            def: MeixnerDef::Pochhammer,
        },
        SequenceSpec::AppellScaled {
            family: AppellSpec::bernoulli(r("1")),
            lambda: r("-2"),
            x: r("1/3"),
        },
    ]
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::UserTable(t) => {
                let parts: Vec<String> = t.iter().map(|v| v.to_string()).collect();
                write!(f, "usertable:{}", parts.join(","))
            }
            SequenceSpec::Harmonic => write!(f, "harmonic"),
            SequenceSpec::GenHarmonic { r, x } => write!(f, "genharmonic:r={r},x={x}"),
            SequenceSpec::FiboLike { a, b, c, r } => write!(f, "fibolike:a={a},b={b},c={c},r={r}"),
            SequenceSpec::BinomAlt { alpha, r } => write!(f, "binomalt:alpha={alpha},r={r}"),
            SequenceSpec::FussCatalan { m, s } => write!(f, "fusscatalan:m={m},s={s}"),
            SequenceSpec::QInt { p, r } => write!(f, "qint:p={p},r={r}"),
            SequenceSpec::BellAlt { x } => write!(f, "bellalt:x={x}"),
            SequenceSpec::GeomAlt { x } => write!(f, "geomalt:x={x}"),
            SequenceSpec::Laguerre { alpha, x, shift } => {
                let (kind, r) = match shift {
                    LaguerreShift::Degree(r) => ("degree", r),
                    LaguerreShift::Order(r) => ("order", r),
                };
                write!(f, "laguerre:alpha={alpha},x={x},shift={kind},r={r}")
            }
            SequenceSpec::Meixner {
                x,
                alpha,
                beta,
                r,
                def,
            } => {
                write!(f, "meixner:x={x},alpha={alpha},beta={beta},r={r}")?;
                if *def != MeixnerDef::default() {
                    write!(f, ",def={}", def.name())?;
                }
                Ok(())
            }
            SequenceSpec::AppellScaled { family, lambda, x } => {
                write!(f, "appellscaled:lambda={lambda},x={x},family={family}")
            }
            SequenceSpec::TransformOf { inner, at } => {
                write!(f, "transformof:at={at},inner={inner}")
            }
        }
    }
}

struct Params {
    name: String,
    map: BTreeMap<String, String>,
}

impl Params {
    fn parse(name: &str, body: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for kv in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| {
                Error::Parse(format!("expected key=value in `{name}`, got `{kv}`"))
            })?;
            if map
                .insert(k.trim().to_string(), v.trim().to_string())
                .is_some()
            {
                return Err(Error::Parse(format!("key `{k}` repeated in `{name}`")));
            }
        }
        Ok(Params {
            name: name.to_string(),
            map,
        })
    }

    fn raw(&mut self, key: &str) -> Result<String> {
        self.map
            .remove(key)
            .ok_or_else(|| Error::Parse(format!("`{}` needs `{key}=`", self.name)))
    }

    fn rat(&mut self, key: &str) -> Result<Rational> {
        let v = self.raw(key)?;
        v.parse()
            .map_err(|_| Error::Parse(format!("bad rational `{v}` for `{key}`")))
    }

    fn rat_or(&mut self, key: &str, default: Rational) -> Result<Rational> {
        if self.map.contains_key(key) {
            self.rat(key)
        } else {
            Ok(default)
        }
    }

    fn int_or(&mut self, key: &str, default: i64) -> Result<i64> {
        match self.map.remove(key) {
            Some(v) => v
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{v}` for `{key}`"))),
            None => Ok(default),
        }
    }

    fn finish(self) -> Result<()> {
        match self.map.keys().next() {
            Some(k) => Err(Error::Parse(format!(
                "unknown key `{k}` for `{}`",
                self.name
            ))),
            None => Ok(()),
        }
    }
}

/// Splits `k=v,...,<key>=<rest>` where the nested spec after `<key>=` may
/// itself contain commas.
fn split_nested<'a>(body: &'a str, key: &str) -> Result<(&'a str, &'a str)> {
    let marker = format!("{key}=");
    let pos = body
        .find(&marker)
        .ok_or_else(|| Error::Parse(format!("missing `{marker}`")))?;
    let head = body[..pos].trim_end().trim_end_matches(',');
    Ok((head, &body[pos + marker.len()..]))
}

impl FromStr for SequenceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, body) = s.split_once(':').unwrap_or((s, ""));
        let name = name.trim().to_ascii_lowercase();
        let spec = match name.as_str() {
            "usertable" => SequenceSpec::UserTable(
                body.split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse()
                            .map_err(|_| Error::Parse(format!("bad table entry `{t}`")))
                    })
                    .collect::<Result<_>>()?,
            ),
            "harmonic" => {
                Params::parse(&name, body)?.finish()?;
                SequenceSpec::Harmonic
            }
            "transformof" => {
                let (head, inner) = split_nested(body, "inner")?;
                let mut p = Params::parse(&name, head)?;
                let at = p.rat("at")?;
                p.finish()?;
                SequenceSpec::TransformOf {
                    inner: Box::new(inner.parse()?),
                    at,
                }
            }
            "appellscaled" => {
                let (head, family) = split_nested(body, "family")?;
                let mut p = Params::parse(&name, head)?;
                let lambda = p.rat("lambda")?;
                let x = p.rat("x")?;
                p.finish()?;
                SequenceSpec::AppellScaled {
                    family: family.parse()?,
                    lambda,
                    x,
                }
            }
            _ => {
                let mut p = Params::parse(&name, body)?;
                let spec = match name.as_str() {
                    "genharmonic" => SequenceSpec::GenHarmonic {
                        r: u32::try_from(p.int_or("r", 1)?)
                            .map_err(|_| Error::Parse("r must be >= 1".into()))?,
                        x: p.rat_or("x", Rational::zero())?,
                    },
                    "fibolike" => SequenceSpec::FiboLike {
                        a: p.rat("a")?,
                        b: p.rat("b")?,
                        c: p.rat("c")?,
                        r: p.int_or("r", 0)?,
                    },
                    "fibonacci" => SequenceSpec::fibonacci(p.int_or("r", 0)?),
                    "lucas" => SequenceSpec::lucas(p.int_or("r", 0)?),
                    "binomalt" => SequenceSpec::BinomAlt {
                        alpha: p.rat("alpha")?,
                        r: p.int_or("r", 0)?,
                    },
                    "fusscatalan" => SequenceSpec::FussCatalan {
                        m: p.int_or("m", 0)?,
                        s: p.int_or("s", 0)?,
                    },
                    "qint" => SequenceSpec::QInt {
                        p: p.rat("p")?,
                        r: p.int_or("r", 0)?,
                    },
                    "bellalt" => SequenceSpec::BellAlt { x: p.rat("x")? },
                    "geomalt" => SequenceSpec::GeomAlt { x: p.rat("x")? },
                    "laguerre" => {
                        let alpha = p.rat("alpha")?;
                        let x = p.rat("x")?;
                        let r = p.int_or("r", 0)?;
                        let shift = match p.map.remove("shift").as_deref() {
                            None | Some("degree") => LaguerreShift::Degree(r),
                            Some("order") => LaguerreShift::Order(r),
                            Some(other) => {
                                return Err(Error::Parse(format!(
                                    "Laguerre shift must be degree|order, got `{other}`"
                                )))
                            }
                        };
                        SequenceSpec::Laguerre { alpha, x, shift }
                    }
                    "meixner" => {
                        let def = match p.map.remove("def") {
                            Some(d) => MeixnerDef::parse(&d)?,
                            None => MeixnerDef::default(),
                        };
                        SequenceSpec::Meixner {
                            x: p.rat("x")?,
                            alpha: p.rat("alpha")?,
                            beta: p.rat("beta")?,
                            r: p.int_or("r", 0)?,
                            def,
                        }
                    }
                    other => {
                        return Err(Error::Parse(format!("unknown sequence family `{other}`")))
                    }
                };
                p.finish()?;
                spec
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rats;

    fn spec(s: &str) -> SequenceSpec {
        s.parse().unwrap()
    }

    #[test]
    fn term_examples() {
        assert_eq!(
            SequenceSpec::Harmonic.term(2).unwrap(),
            Rational::frac(3, 2)
        );
        assert_eq!(
            spec("fusscatalan:m=1,s=1").term(1).unwrap(),
            Rational::one()
        );
        assert_eq!(spec("qint:p=2,r=0").term(2).unwrap(), Rational::int(3));
        assert_eq!(
            SequenceSpec::fibonacci(0).term_at(-1).unwrap(),
            Rational::one()
        );
        assert!(SequenceSpec::Harmonic.term_at(-1).is_err());
    }

    #[test]
    fn diff_table_examples() {
        let sq = spec("usertable:0,1,4,9");
        assert_eq!(
            sq.diff_table(3).unwrap().values,
            rats(&["9", "5", "2", "0"])
        );
        let fib = spec("fibolike:a=0,b=1,c=1,r=2");
        assert_eq!(fib.diff_table(2).unwrap().values, rats(&["3", "1", "0"]));
        assert_eq!(
            SequenceSpec::Harmonic.diff(3, 1).unwrap(),
            Rational::frac(1, 3)
        );
    }

    #[test]
    fn dual_diff_examples() {
        assert_eq!(spec("bellalt:x=1").dual_diff(2).unwrap(), Rational::int(5));
        let ones = spec("usertable:1,1,1,1,1");
        for j in 1..5 {
            assert_eq!(ones.dual_diff(j).unwrap(), Rational::zero());
        }
        assert_eq!(
            spec("binomalt:alpha=5,r=0").dual_diff(2).unwrap(),
            Rational::int(21)
        );
    }

    #[test]
    fn domain_errors() {
        assert!("genharmonic:r=2,x=-3".parse::<SequenceSpec>().is_err());
        assert!("qint:p=1".parse::<SequenceSpec>().is_err());
        assert!("fibolike:a=0,b=1,c=0".parse::<SequenceSpec>().is_err());
        assert!("meixner:x=1,alpha=2,beta=0"
            .parse::<SequenceSpec>()
            .is_err());
        assert!("nosuch".parse::<SequenceSpec>().is_err());
        assert!("harmonic:x=1".parse::<SequenceSpec>().is_err());
        assert!(spec("usertable:1,2").term(2).is_err());
    }

    #[test]
    fn parse_display_round_trip() {
        for s in catalog() {
            assert_eq!(s.to_string().parse::<SequenceSpec>().unwrap(), s, "{s}");
        }
        let nested =
            spec("transformof:at=1/2,inner=transformof:at=1/3,inner=fibolike:a=0,b=1,c=1,r=2");
        assert_eq!(nested.depth(), 2);
        assert_eq!(nested.to_string().parse::<SequenceSpec>().unwrap(), nested);
        let appell = spec("appellscaled:lambda=2,x=1/3,family=generic:1,0,1/2");
        assert_eq!(appell.to_string().parse::<SequenceSpec>().unwrap(), appell);
    }

    #[test]
    fn transform_nesting_is_bounded() {
        let mut s = SequenceSpec::Harmonic;
        for _ in 0..MAX_TRANSFORM_DEPTH {
            s = SequenceSpec::TransformOf {
                inner: Box::new(s),
                at: Rational::frac(1, 2),
            };
        }
        assert!(s.validate().is_ok());
        let deeper = SequenceSpec::TransformOf {
            inner: Box::new(s),
            at: Rational::frac(1, 2),
        };
        assert!(deeper.terms(2).is_err());
    }

    #[test]
    fn catalog_has_twelve_families() {
        let c = catalog();
        assert_eq!(c.len(), 12);
        for s in &c {
            assert_eq!(s.terms(10).unwrap().len(), 11, "{s}");
        }
    }
}
