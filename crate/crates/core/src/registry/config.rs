//! Key-value configuration files.
//!
//! ```text
//! # comment
//! n_max = 10
//! grid.base = 0, 1/2, 2
//! grid.q = 0, 1/3, 1/2, 2/3, 1, 2
//! meixner = plain
//! skip = C.n, R.t2
//! ```

use std::path::Path;

use super::report::Format;
use super::RunContext;
use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::rational::Rational;
use crate::special::MeixnerDef;

/// A parsed configuration: run context plus an optional output format.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Config {
    pub ctx: RunContext,
    pub format: Option<Format>,
}

fn rational_list(key: &str, v: &str) -> Result<Vec<Rational>> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<Rational>()
                .map_err(|e| Error::Config(format!("{key}: {e}")))
        })
        .collect()
}

fn number<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::Config(format!("{key}: `{v}` is not a nonnegative integer")))
}

pub fn parse_exec(v: &str) -> Result<ExecMode> {
    match v {
        "sequential" | "seq" => Ok(ExecMode::Sequential),
        "parallel" | "par" => Ok(ExecMode::Parallel),
        other => Err(Error::Config(format!(
            "unknown exec mode `{other}` (sequential|parallel)"
        ))),
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            cfg.set(key.trim(), value.trim()).map_err(|e| match e {
                Error::Config(m) => Error::Config(format!("line {}: {m}", lineno + 1)),
                other => other,
            })?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Config::parse(&text)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let ctx = &mut self.ctx;
        match key {
            "n_max" => ctx.bounds.n_max = number(key, value)?,
            "m_max" => ctx.bounds.m_max = number(key, value)?,
            "r_max" => ctx.bounds.r_max = number(key, value)?,
            "min_points" => ctx.grid.min_points = number(key, value)?,
            "seed" => ctx.seed = number(key, value)?,
            "mc_trials" => ctx.mc_trials = number(key, value)?,
            "meixner" => {
                ctx.meixner = MeixnerDef::parse(value).map_err(|e| Error::Config(e.to_string()))?
            }
            "exec" => ctx.mode = parse_exec(value)?,
            "format" => self.format = Some(Format::parse(value)?),
            "skip" => {
                ctx.skip = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect()
            }
            "grid.base" => {
                let pts = rational_list(key, value)?;
                if pts.is_empty() {
                    return Err(Error::Config("grid.base is empty".into()));
                }
                ctx.grid.base = pts;
            }
            _ => match key.strip_prefix("grid.") {
                Some(var) if !var.is_empty() => {
                    let pts = rational_list(key, value)?;
                    if pts.is_empty() {
                        return Err(Error::Config(format!("{key} is empty")));
                    }
                    ctx.grid.overrides.insert(var.to_string(), pts);
                }
                _ => return Err(Error::Config(format!("unknown key `{key}`"))),
            },
        }
        Ok(())
    }
}
