//! Exact polynomial identity testing on tensor grids.
//!
//! If both sides of an identity are polynomials whose degree in each variable
//! is at most `d_v`, agreement on a product grid with at least `d_v + 1`
//! distinct points per variable proves the identity. Rational identities are
//! handled the same way once their (nonvanishing) denominators are cleared;
//! the declared bounds must then cover the cleared numerators.

use std::collections::{BTreeMap, HashSet};
use std::ops::Index;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{self, ExecMode};
use crate::rational::{rats, Rational};

/// Where a grid variable is allowed to live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VarDomain {
    /// Any rational.
    All,
    /// The closed unit interval, for probabilities.
    Unit,
}

impl VarDomain {
    fn admits(self, v: &Rational) -> bool {
        match self {
            VarDomain::All => true,
            VarDomain::Unit => !v.is_negative() && *v <= Rational::one(),
        }
    }
}

/// What an identity needs from one of its variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarReq {
    pub name: String,
    pub degree: usize,
    pub domain: VarDomain,
    pub exclude: Vec<Rational>,
}

impl VarReq {
    pub fn new(name: &str, degree: usize) -> Self {
        VarReq {
            name: name.to_string(),
            degree,
            domain: VarDomain::All,
            exclude: Vec::new(),
        }
    }

    pub fn unit(name: &str, degree: usize) -> Self {
        VarReq {
            domain: VarDomain::Unit,
            ..VarReq::new(name, degree)
        }
    }

    pub fn excluding(mut self, values: &[Rational]) -> Self {
        self.exclude.extend_from_slice(values);
        self
    }
}

/// One certified variable: its sample points and the bound they cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridVar {
    pub name: String,
    pub degree: usize,
    pub points: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    vars: Vec<GridVar>,
}

impl GridSpec {
    /// Validates distinctness and the point-count bound for every variable.
    pub fn new(vars: Vec<GridVar>) -> Result<Self> {
        let mut seen_names = HashSet::new();
        for v in &vars {
            if !seen_names.insert(v.name.as_str()) {
                return Err(Error::Config(format!(
                    "grid variable `{}` declared twice",
                    v.name
                )));
            }
            if v.points.len() < v.degree + 1 {
                return Err(Error::Config(format!(
                    "variable `{}` has {} points but degree bound {}",
                    v.name,
                    v.points.len(),
                    v.degree
                )));
            }
            let distinct: HashSet<&Rational> = v.points.iter().collect();
            if distinct.len() != v.points.len() {
                return Err(Error::Config(format!(
                    "variable `{}` has repeated points",
                    v.name
                )));
            }
        }
        Ok(GridSpec { vars })
    }

    /// The grid with a single empty point, for identities without free variables.
    pub fn empty() -> Self {
        GridSpec { vars: Vec::new() }
    }

    pub fn vars(&self) -> &[GridVar] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.iter().map(|v| v.points.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The `i`-th point in row-major order (last variable fastest).
    pub fn point(&self, names: &Arc<[String]>, mut i: usize) -> Point {
        let mut values = vec![Rational::zero(); self.vars.len()];
        for (slot, v) in values.iter_mut().zip(&self.vars).rev() {
            let n = v.points.len();
            *slot = v.points[i % n].clone();
            i /= n;
        }
        Point {
            names: Arc::clone(names),
            values,
        }
    }

    pub fn names(&self) -> Arc<[String]> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    /// Restricts the grid to one point, for witness replay.
    pub fn single(assignment: &BTreeMap<String, Rational>) -> Self {
        GridSpec {
            vars: assignment
                .iter()
                .map(|(k, v)| GridVar {
                    name: k.clone(),
                    degree: 0,
                    points: vec![v.clone()],
                })
                .collect(),
        }
    }
}

/// A grid point: variable names shared across the grid, values owned.
#[derive(Clone, Debug)]
pub struct Point {
    names: Arc<[String]>,
    values: Vec<Rational>,
}

impl Point {
    pub fn from_pairs(pairs: &[(&str, Rational)]) -> Self {
        Point {
            names: pairs.iter().map(|(k, _)| k.to_string()).collect(),
            values: pairs.iter().map(|(_, v)| v.clone()).collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.values[i])
    }

    pub fn assignment(&self) -> BTreeMap<String, Rational> {
        self.names
            .iter()
            .cloned()
            .zip(self.values.iter().cloned())
            .collect()
    }
}

impl Index<&str> for Point {
    type Output = Rational;

    fn index(&self, name: &str) -> &Rational {
        self.get(name)
            .unwrap_or_else(|| panic!("grid point has no variable `{name}`"))
    }
}

/// A failing point with both side values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub point: BTreeMap<String, Rational>,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass { points: usize },
    Fail(Witness),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass { .. })
    }
}

/// Side evaluator: a function of one grid point.
pub type Evaluator = dyn Fn(&Point) -> Result<Rational> + Send + Sync;

/// Both sides of an identity from one evaluation, `(lhs, rhs)`.
pub type PairEvaluator = dyn Fn(&Point) -> Result<(Rational, Rational)> + Send + Sync;

/// Evaluates both sides at every grid point and reports the first mismatch in
/// grid order. Evaluator errors are configuration errors, never failures.
pub fn check_identity_on_grid(
    lhs: &Evaluator,
    rhs: &Evaluator,
    grid: &GridSpec,
    mode: ExecMode,
) -> Result<CheckOutcome> {
    check_pair_on_grid(&|p: &Point| Ok((lhs(p)?, rhs(p)?)), grid, mode)
}

/// [`check_identity_on_grid`] for evaluators that produce both sides at once.
pub fn check_pair_on_grid(
    eval: &(dyn Fn(&Point) -> Result<(Rational, Rational)> + Send + Sync + '_),
    grid: &GridSpec,
    mode: ExecMode,
) -> Result<CheckOutcome> {
    let names = grid.names();
    let total = grid.len();
    let hit = exec::find_first(mode, total, |i| {
        let p = grid.point(&names, i);
        match eval(&p) {
            Ok((l, r)) => (l != r).then_some(Ok((p, l, r))),
            Err(e) => Some(Err((p, e))),
        }
    });
    match hit {
        None => Ok(CheckOutcome::Pass { points: total }),
        Some((_, Ok((p, lhs, rhs)))) => Ok(CheckOutcome::Fail(Witness {
            point: p.assignment(),
            lhs,
            rhs,
        })),
        Some((_, Err((p, e)))) => Err(Error::Config(format!(
            "evaluator failed at {}: {e}",
            fmt_assignment(&p.assignment())
        ))),
    }
}

pub fn fmt_assignment(a: &BTreeMap<String, Rational>) -> String {
    let parts: Vec<String> = a.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Default sample points for every variable unless overridden.
pub fn default_points() -> Vec<Rational> {
    rats(&[
        "0", "1/5", "1/3", "1/2", "2/3", "4/5", "1", "3/2", "-1/2", "2",
    ])
}

/// How requested variables are turned into concrete sample points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridConfig {
    pub base: Vec<Rational>,
    pub overrides: BTreeMap<String, Vec<Rational>>,
    /// Lower bound on points per variable, on top of `degree + 1`.
    pub min_points: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            base: default_points(),
            overrides: BTreeMap::new(),
            min_points: 0,
        }
    }
}

impl GridConfig {
    /// Builds a certifying grid for the requested variables.
    ///
    /// Points come from the per-variable override or the base list, filtered
    /// by domain and exclusions, then topped up from a deterministic stream of
    /// small-height rationals until the count reaches
    /// `max(degree + 1, min_points)`. Base lists are cut to that count;
    /// override lists are used whole.
    pub fn build(&self, reqs: &[VarReq]) -> Result<GridSpec> {
        let vars = reqs.iter().map(|r| self.build_var(r)).collect();
        GridSpec::new(vars)
    }

    fn build_var(&self, req: &VarReq) -> GridVar {
        let need = (req.degree + 1).max(self.min_points);
        let (source, whole) = match self.overrides.get(&req.name) {
            Some(v) => (v.as_slice(), true),
            None => (self.base.as_slice(), false),
        };
        let mut points: Vec<Rational> = Vec::new();
        let admissible = |v: &Rational, pts: &[Rational]| {
            req.domain.admits(v) && !req.exclude.contains(v) && !pts.contains(v)
        };
        for v in source {
            if admissible(v, &points) {
                points.push(v.clone());
            }
        }
        if !whole {
            points.truncate(need);
        }
        let mut stream = FillStream::new();
        while points.len() < need {
            let v = stream.next_point();
            if admissible(&v, &points) {
                points.push(v);
            }
        }
        GridVar {
            name: req.name.clone(),
            degree: req.degree,
            points,
        }
    }
}

/// Enumerates `num/den` by increasing denominator, `|num| <= 3 den`, reduced.
struct FillStream {
    den: i64,
    idx: i64,
}

impl FillStream {
    fn new() -> Self {
        FillStream { den: 1, idx: 0 }
    }

    fn next_point(&mut self) -> Rational {
        loop {
            let limit = 3 * self.den;
            if self.idx > 2 * limit {
                self.den += 1;
                self.idx = 0;
                continue;
            }
            // 0, 1, -1, 2, -2, ...
            let k = self.idx;
            self.idx += 1;
            let num = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
            if num_integer::gcd(num, self.den) == 1 || (num == 0 && self.den == 1) {
                return Rational::frac(num, self.den);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_grid(points: &[&str], degree: usize) -> GridSpec {
        GridSpec::new(vec![GridVar {
            name: "q".into(),
            degree,
            points: rats(points),
        }])
        .unwrap()
    }

    #[test]
    fn reflexive_identity_passes() {
        let sq = |p: &Point| Ok(p["q"].powu(2));
        let out =
            check_identity_on_grid(&sq, &sq, &q_grid(&["0", "1", "2"], 2), ExecMode::Sequential)
                .unwrap();
        assert_eq!(out, CheckOutcome::Pass { points: 3 });
    }

    #[test]
    fn distinct_polynomials_fail_with_witness() {
        let sq = |p: &Point| Ok(p["q"].powu(2));
        let id = |p: &Point| Ok(p["q"].clone());
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            let out = check_identity_on_grid(&sq, &id, &q_grid(&["0", "1", "2"], 2), mode).unwrap();
            match out {
                CheckOutcome::Fail(w) => {
                    assert_eq!(w.point["q"], Rational::int(2));
                    assert_eq!(w.lhs, Rational::int(4));
                    assert_eq!(w.rhs, Rational::int(2));
                }
                other => panic!("expected failure, got {other:?}"),
            }
        }
    }

    #[test]
    fn evaluator_errors_are_configuration_errors() {
        let inv = |p: &Point| p["q"].recip();
        let one = |_: &Point| Ok(Rational::one());
        let err = check_identity_on_grid(&inv, &one, &q_grid(&["0", "1"], 1), ExecMode::Sequential)
            .unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn grid_spec_invariants() {
        let short = GridSpec::new(vec![GridVar {
            name: "q".into(),
            degree: 3,
            points: rats(&["0", "1"]),
        }]);
        assert!(short.is_err());
        let dup = GridSpec::new(vec![GridVar {
            name: "q".into(),
            degree: 1,
            points: rats(&["1/2", "2/4"]),
        }]);
        assert!(dup.is_err());
    }

    #[test]
    fn config_extends_and_excludes() {
        let cfg = GridConfig::default();
        let g = cfg
            .build(&[VarReq::new("q", 14).excluding(&[Rational::one()])])
            .unwrap();
        let pts = &g.vars()[0].points;
        assert_eq!(pts.len(), 15);
        assert!(!pts.contains(&Rational::one()));
        let distinct: HashSet<_> = pts.iter().collect();
        assert_eq!(distinct.len(), 15);

        let unit = cfg.build(&[VarReq::unit("x", 12)]).unwrap();
        assert!(unit.vars()[0]
            .points
            .iter()
            .all(|v| !v.is_negative() && *v <= Rational::one()));
        assert_eq!(unit.vars()[0].points.len(), 13);
    }

    #[test]
    fn tensor_enumeration_covers_grid() {
        let cfg = GridConfig::default();
        let g = cfg
            .build(&[VarReq::new("x", 2), VarReq::new("y", 1)])
            .unwrap();
        assert_eq!(g.len(), 6);
        let names = g.names();
        let seen: HashSet<(Rational, Rational)> = (0..g.len())
            .map(|i| {
                let p = g.point(&names, i);
                (p["x"].clone(), p["y"].clone())
            })
            .collect();
        assert_eq!(seen.len(), 6);
    }

    // A nonzero polynomial of degree <= d cannot vanish on d + 1 distinct
    // points, so every perturbation of a true identity must be caught.
    #[test]
    fn soundness_against_constructed_counterexamples() {
        let cfg = GridConfig::default();
        for d in 0..6usize {
            let grid = cfg.build(&[VarReq::new("q", d)]).unwrap();
            let pts = grid.vars()[0].points.clone();
            // Π (q - p_i) over the first d points vanishes on all but one grid point.
            let vanish = move |p: &Point| -> Result<Rational> {
                Ok(pts.iter().take(d).map(|r| &p["q"] - r).product())
            };
            let zero = |_: &Point| Ok(Rational::zero());
            let out = check_identity_on_grid(&vanish, &zero, &grid, ExecMode::Parallel).unwrap();
            assert!(!out.passed(), "degree {d} counterexample slipped through");
        }
    }
}
