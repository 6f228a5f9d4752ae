//! The identity registry and the harness that certifies it.
//!
//! Each [`Entry`] expands into [`Case`]s: an evaluator producing both sides of
//! one identity instance plus the variables it depends on, with per-variable
//! degree bounds. A case passes when both sides agree on a grid with more
//! points per variable than its bound.

pub mod config;
mod entries;
pub mod report;

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{self, ExecMode};
use crate::grid::{
    check_pair_on_grid, CheckOutcome, GridConfig, GridSpec, PairEvaluator, Point, VarReq,
};
use crate::rational::Rational;
use crate::sequences::SequenceSpec;
use crate::special::MeixnerDef;
use crate::transform::{forward_diffs, Comparison};

pub use report::{EntryReport, Format, Status, VerificationReport, WitnessReport};

/// One instance of an identity.
pub struct Case {
    pub label: String,
    pub vars: Vec<VarReq>,
    pub eval: Box<PairEvaluator>,
}

impl Case {
    pub fn new<F>(label: impl Into<String>, vars: Vec<VarReq>, f: F) -> Case
    where
        F: Fn(&Point) -> Result<Comparison> + Send + Sync + 'static,
    {
        Case {
            label: label.into(),
            vars,
            eval: Box::new(move |p| f(p).map(|c| (c.lhs, c.rhs))),
        }
    }

    /// A case whose sides are separate functions.
    pub fn sides<L, R>(label: impl Into<String>, vars: Vec<VarReq>, lhs: L, rhs: R) -> Case
    where
        L: Fn(&Point) -> Result<Rational> + Send + Sync + 'static,
        R: Fn(&Point) -> Result<Rational> + Send + Sync + 'static,
    {
        Case {
            label: label.into(),
            vars,
            eval: Box::new(move |p| Ok((lhs(p)?, rhs(p)?))),
        }
    }

    /// A case without free variables.
    pub fn point<F>(label: impl Into<String>, f: F) -> Case
    where
        F: Fn() -> Result<(Rational, Rational)> + Send + Sync + 'static,
    {
        Case {
            label: label.into(),
            vars: Vec::new(),
            eval: Box::new(move |_| f()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Module {
    Intro,
    Basis,
    Corollaries,
    Composition,
    Probability,
    Appell,
}

impl Module {
    pub const ALL: [Module; 6] = [
        Module::Intro,
        Module::Basis,
        Module::Corollaries,
        Module::Composition,
        Module::Probability,
        Module::Appell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Module::Intro => "intro",
            Module::Basis => "basis",
            Module::Corollaries => "corollaries",
            Module::Composition => "composition",
            Module::Probability => "probability",
            Module::Appell => "appell",
        }
    }

    pub fn parse(s: &str) -> Option<Module> {
        Module::ALL.into_iter().find(|m| m.name() == s)
    }
}

pub type Builder = fn(&RunContext) -> Result<Vec<Case>>;

pub struct Entry {
    pub id: &'static str,
    /// Short equation label, unique across the registry.
    pub label: &'static str,
    pub module: Module,
    pub summary: &'static str,
    /// Cases that must pass before the entry itself is meaningful.
    pub gate: Option<Builder>,
    pub build: Builder,
    /// Advisory remark attached to the report.
    pub note: Option<NoteFn>,
}

pub type NoteFn = fn(&RunContext) -> Result<Option<String>>;

/// Size bounds for the quantified checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub n_max: usize,
    pub m_max: usize,
    pub r_max: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            n_max: 8,
            m_max: 4,
            r_max: 3,
        }
    }
}

/// A deliberate error in one difference-table entry, for harness tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corruption {
    pub n: usize,
    pub j: usize,
    pub delta: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunContext {
    pub bounds: Bounds,
    pub grid: GridConfig,
    pub mode: ExecMode,
    pub meixner: MeixnerDef,
    pub corruption: Option<Corruption>,
    pub seed: u64,
    pub mc_trials: u64,
    /// Entry ids reported as skipped(excluded).
    pub skip: Vec<String>,
}

impl Default for RunContext {
    fn default() -> Self {
        RunContext {
            bounds: Bounds::default(),
            grid: GridConfig::default(),
            mode: ExecMode::Parallel,
            meixner: MeixnerDef::Pochhammer,
            corruption: None,
            seed: 42,
            mc_trials: 100_000,
            skip: Vec::new(),
        }
    }
}

impl RunContext {
    pub fn validate(&self) -> Result<()> {
        if self.bounds.n_max < 8 || self.bounds.m_max < 4 {
            return Err(Error::Config(format!(
                "bounds below the minimum: n_max={} (>= 8), m_max={} (>= 4)",
                self.bounds.n_max, self.bounds.m_max
            )));
        }
        if self.bounds.r_max < 1 {
            return Err(Error::Config("r_max must be at least 1".into()));
        }
        if self.grid.base.is_empty() {
            return Err(Error::Config("grid.base is empty".into()));
        }
        for id in &self.skip {
            find(id)?;
        }
        Ok(())
    }

    /// `M(n, 0..=n)` with the configured corruption applied.
    pub fn diff_row(&self, seq: &SequenceSpec, n: usize) -> Result<Vec<Rational>> {
        let a = seq.terms(n)?;
        let mut row = forward_diffs(&a, n);
        if let Some(c) = &self.corruption {
            if c.n == n && c.j <= n {
                row[c.j] += &c.delta;
            }
        }
        Ok(row)
    }

    /// Series truncation order for generating-function routes.
    pub fn series_order(&self, n: usize) -> usize {
        (self.bounds.n_max + self.bounds.m_max + 1).max(n)
    }
}

/// All entries, sorted by id.
pub fn registry() -> &'static [Entry] {
    static ALL: OnceLock<Vec<Entry>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut v = entries::all();
        v.sort_by(|a, b| a.id.cmp(b.id));
        v
    })
}

pub fn find(id: &str) -> Result<&'static Entry> {
    registry()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Entries of one module, or all when `module` is `None`. Unknown modules
/// give an empty list.
pub fn list_identities(module: Option<&str>) -> Vec<&'static Entry> {
    registry()
        .iter()
        .filter(|e| module.is_none_or(|m| e.module.name() == m))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
    Module(String),
}

impl Selection {
    fn resolve(&self) -> Result<Vec<&'static Entry>> {
        let picked = match self {
            Selection::All => registry().iter().collect(),
            Selection::Ids(ids) => {
                let mut v = Vec::new();
                for id in ids {
                    let e = find(id)?;
                    if !v.iter().any(|x: &&Entry| x.id == e.id) {
                        v.push(e);
                    }
                }
                v.sort_by(|a, b| a.id.cmp(b.id));
                v
            }
            Selection::Module(m) => {
                if Module::parse(m).is_none() {
                    return Err(Error::Config(format!("unknown module `{m}`")));
                }
                list_identities(Some(m))
            }
        };
        if picked.is_empty() {
            return Err(Error::Config("empty selection".into()));
        }
        Ok(picked)
    }
}

/// Runs the selected entries. Identity failures are reported; configuration
/// problems (unknown ids, evaluator domain errors, bad grids) are errors.
pub fn verify(ctx: &RunContext, selection: &Selection) -> Result<VerificationReport> {
    ctx.validate()?;
    let entries = selection.resolve()?;
    let start = Instant::now();
    let results = exec::map_slice(ctx.mode, &entries, |e| run_entry(ctx, e));
    let entries = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(
        ctx,
        entries,
        start.elapsed().as_millis() as u64,
    ))
}

struct CaseRun {
    cases_run: usize,
    points: usize,
    failure: Option<WitnessReport>,
}

fn run_cases(ctx: &RunContext, cases: &[Case]) -> Result<CaseRun> {
    let mut run = CaseRun {
        cases_run: 0,
        points: 0,
        failure: None,
    };
    for case in cases {
        let grid = ctx.grid.build(&case.vars)?;
        run.cases_run += 1;
        match check_pair_on_grid(&*case.eval, &grid, ctx.mode)
            .map_err(|e| Error::Config(format!("case `{}`: {e}", case.label)))?
        {
            CheckOutcome::Pass { points } => run.points += points,
            CheckOutcome::Fail(w) => {
                run.failure = Some(WitnessReport::new(&case.label, w));
                break;
            }
        }
    }
    Ok(run)
}

fn run_entry(ctx: &RunContext, e: &Entry) -> Result<EntryReport> {
    let start = Instant::now();
    let mut rep = EntryReport::new(e);
    if ctx.skip.iter().any(|s| s == e.id) {
        rep.status = Status::Skipped;
        rep.reason = Some("excluded".into());
        return Ok(rep);
    }
    let in_entry = |err: Error| match err {
        Error::Config(m) => Error::Config(format!("{}: {m}", e.id)),
        other => Error::Config(format!("{}: {other}", e.id)),
    };
    if let Some(gate) = e.gate {
        let cases = gate(ctx).map_err(in_entry)?;
        let run = run_cases(ctx, &cases).map_err(in_entry)?;
        rep.cases_run += run.cases_run;
        rep.points += run.points;
        if let Some(w) = run.failure {
            rep.status = Status::Skipped;
            rep.reason = Some("gate-failed".into());
            rep.witness = Some(w);
            rep.millis = start.elapsed().as_millis() as u64;
            return Ok(rep);
        }
    }
    let cases = (e.build)(ctx).map_err(in_entry)?;
    let run = run_cases(ctx, &cases).map_err(in_entry)?;
    rep.cases_run += run.cases_run;
    rep.points += run.points;
    match run.failure {
        Some(w) => {
            rep.status = Status::Fail;
            rep.witness = Some(w);
        }
        None => rep.status = Status::Pass,
    }
    if let Some(note) = e.note {
        rep.note = note(ctx).map_err(in_entry)?;
    }
    rep.millis = start.elapsed().as_millis() as u64;
    Ok(rep)
}

/// Re-evaluates one case of an entry (or its gate) at a witness point.
pub fn replay(
    ctx: &RunContext,
    id: &str,
    case: &str,
    point: &BTreeMap<String, Rational>,
) -> Result<Comparison> {
    let e = find(id)?;
    let mut cases = (e.build)(ctx)?;
    if let Some(gate) = e.gate {
        cases.extend(gate(ctx)?);
    }
    let c = cases
        .iter()
        .find(|c| c.label == case)
        .ok_or_else(|| Error::Config(format!("{id} has no case `{case}`")))?;
    let grid = GridSpec::single(point);
    let p = grid.point(&grid.names(), 0);
    let (lhs, rhs) = (c.eval)(&p)?;
    Ok(Comparison::new(lhs, rhs))
}

/// Replays a reported witness.
pub fn replay_witness(ctx: &RunContext, id: &str, w: &WitnessReport) -> Result<Comparison> {
    let point = w
        .point
        .iter()
        .map(|(k, v)| Ok((k.clone(), v.parse::<Rational>()?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    replay(ctx, id, &w.case, &point)
}
