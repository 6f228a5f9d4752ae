//! The registered identities, grouped by topic.

mod appell;
mod basis;
mod composition;
mod corollaries;
mod intro;
mod probability;

use std::sync::Arc;

use super::{Builder, Entry, Module, RunContext};
use crate::appell::AppellSpec;
use crate::error::Result;
use crate::grid::VarReq;
use crate::rational::{binom, sign, Rational};
use crate::sequences::{catalog, SequenceSpec};

pub(super) fn all() -> Vec<Entry> {
    let mut v = Vec::new();
    v.extend(intro::entries());
    v.extend(basis::entries());
    v.extend(corollaries::entries());
    v.extend(composition::entries());
    v.extend(probability::entries());
    v.extend(appell::entries());
    v
}

pub(super) fn entry(
    id: &'static str,
    label: &'static str,
    module: Module,
    summary: &'static str,
    build: Builder,
) -> Entry {
    Entry {
        id,
        label,
        module,
        summary,
        gate: None,
        build,
        note: None,
    }
}

fn r(s: &str) -> Rational {
    s.parse().expect("registry literal")
}

fn rl(items: &[&str]) -> Vec<Rational> {
    items.iter().map(|s| r(s)).collect()
}

fn var(name: &str, degree: usize) -> VarReq {
    VarReq::new(name, degree)
}

fn int(k: usize) -> Rational {
    Rational::int(k as i64)
}

fn c(n: usize, k: usize) -> Rational {
    binom(n as i64, k as i64)
}

fn sg(k: usize) -> Rational {
    sign(k as i64)
}

/// Catalog entries shared by reference across many closures.
fn shared_catalog() -> Vec<Arc<SequenceSpec>> {
    catalog().into_iter().map(Arc::new).collect()
}

/// A smaller set for identities with three or more grid variables.
fn sample_sequences() -> Vec<Arc<SequenceSpec>> {
    let cat = catalog();
    [0usize, 1, 3, 4, 7]
        .iter()
        .map(|&i| Arc::new(cat[i].clone()))
        .collect()
}

/// Families used across the Appell entries: a generic family with enough
/// moments, the monomial family and Bernoulli/Euler at three orders.
fn appell_families() -> Vec<Arc<AppellSpec>> {
    let generic = AppellSpec::new(crate::appell::AppellFamily::Generic(rl(&[
        "1", "1/2", "-1/3", "2", "0", "1/5", "-1", "3/7", "1", "-2", "1/4", "5", "-1/6",
    ])))
    .expect("generic family");
    let mut v = vec![generic, AppellSpec::monomial()];
    for a in ["1", "2", "1/2"] {
        v.push(AppellSpec::bernoulli(r(a)));
    }
    for a in ["1", "2", "1/2"] {
        v.push(AppellSpec::euler(r(a)));
    }
    v.into_iter().map(Arc::new).collect()
}

/// `Σ_j coeff(j) t^j`.
fn poly_sum(n: usize, t: &Rational, coeff: impl Fn(usize) -> Result<Rational>) -> Result<Rational> {
    let mut acc = Rational::zero();
    let mut pw = Rational::one();
    for j in 0..=n {
        acc += coeff(j)? * &pw;
        pw *= t;
    }
    Ok(acc)
}

fn harmonic_number(n: usize, r: u32) -> Rational {
    (1..=n)
        .map(|k| int(k).powu(r as u64).recip().expect("k >= 1"))
        .sum()
}

type Ctx<'a> = &'a RunContext;
