//! `bt`: command-line front end for the Bernoulli transform toolkit.
//!
//! Exit status: 0 on success (and when every verified identity passes), 1 when
//! an identity fails, 2 on usage or configuration errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bt_core::appell::AppellSpec;
use bt_core::exec::ExecMode;
use bt_core::probability::{binomial_pmf, composed_law, monte_carlo, FinitePmf};
use bt_core::registry::config::Config;
use bt_core::registry::{self, Corruption, Format, Module, Selection, VerificationReport};
use bt_core::transform::{basis_representation, direct_transform, gf_transform, GfMode};
use bt_core::{Error, Poly, Rational, SequenceSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bt", version, about = "Exact Bernoulli transform toolkit")]
struct Cli {
    /// Output format; defaults to $BT_FORMAT, then pretty.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the transform S_n(q).
    #[command(subcommand)]
    Transform(TransformCmd),
    /// Difference tables.
    #[command(subcommand)]
    Diff(DiffCmd),
    /// Appell polynomials.
    #[command(subcommand)]
    Appell(AppellCmd),
    /// Exact binomial laws and Monte Carlo.
    #[command(subcommand)]
    Pmf(PmfCmd),
    /// Verify registered identities.
    Verify(VerifyArgs),
    /// List registered identities.
    List {
        #[arg(long)]
        module: Option<String>,
    },
}

#[derive(Subcommand)]
enum TransformCmd {
    /// S_n(q) by the direct sum.
    Eval {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// The conjugate transform S_n(1-q).
        #[arg(long)]
        conjugate: bool,
    },
    /// Coefficients of S_n as a polynomial in q.
    Coeffs {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        conjugate: bool,
    },
    /// S_n(q) from the generating function.
    Gf {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value = "product")]
        mode: GfModeArg,
        /// Truncation order; at least n.
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GfModeArg {
    Product,
    Composed,
}

#[derive(Subcommand)]
enum DiffCmd {
    /// The row M(n, 0..=n).
    Table {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum AppellCmd {
    /// f_n as a polynomial in y.
    Poly {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Verify the Appell entries with one equation label.
    Verify {
        #[arg(long)]
        which: String,
        /// `default` or a configuration file.
        #[arg(long, default_value = "default")]
        grid: String,
    },
}

#[derive(Subcommand)]
enum PmfCmd {
    /// Binomial(n, s).
    Binomial {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: String,
    },
    /// The law of T(Z(n)) with Z(n) ~ Bin(n, 1-x), T ~ Bin(., 1-y).
    Compose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Simulate T(Z(n)) and compare with the exact law.
    Mc {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "1/2")]
        x: String,
        #[arg(long, default_value = "1/3")]
        y: String,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Every registered identity (the default when nothing is selected).
    #[arg(long)]
    all: bool,
    /// Identity id, repeatable.
    #[arg(long = "id")]
    ids: Vec<String>,
    #[arg(long)]
    module: Option<String>,
    /// Key-value configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n_max: Option<String>,
    #[arg(long)]
    m_max: Option<String>,
    #[arg(long)]
    r_max: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    mc_trials: Option<String>,
    /// Meixner normalization: pochhammer or plain.
    #[arg(long)]
    meixner: Option<String>,
    /// sequential or parallel.
    #[arg(long)]
    exec: Option<String>,
    /// Add `delta` to M(n, j), as `n,j,delta` (harness self-test).
    #[arg(long)]
    corrupt: Option<String>,
}

enum Outcome {
    Ok,
    IdentityFailure,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::IdentityFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn rat(name: &str, s: &str) -> Result<Rational, Error> {
    s.parse()
        .map_err(|e| Error::Parse(format!("--{name}: {e}")))
}

fn seq(s: &str) -> Result<SequenceSpec, Error> {
    s.parse()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

fn resolve_format(flag: Option<FormatArg>, config: Option<Format>) -> Result<Format, Error> {
    match (flag, config) {
        (Some(f), _) => Ok(f.into()),
        (None, Some(f)) => Ok(f),
        (None, None) => Format::from_env(),
    }
}

/// Writes to stdout; a closed pipe (`bt list | head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn print_value(format: Format, value: &Value, csv: &str, pretty: &str) {
    match format {
        Format::Json => emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(value).expect("json")
        )),
        Format::Csv => emit(csv),
        Format::Pretty => emit(&format!("{pretty}\n")),
    }
}

fn print_poly(format: Format, p: &Poly) {
    let coeffs = strings(p.coeffs());
    let csv: String = std::iter::once("power,coeff\n".to_string())
        .chain(coeffs.iter().enumerate().map(|(k, c)| format!("{k},{c}\n")))
        .collect();
    let json = json!(coeffs);
    print_value(format, &json, &csv, &json.to_string());
}

fn print_pmf(format: Format, law: &FinitePmf) {
    let probs = strings(law.probs());
    let csv: String = std::iter::once("k,p\n".to_string())
        .chain(probs.iter().enumerate().map(|(k, p)| format!("{k},{p}\n")))
        .collect();
    let pretty: Vec<String> = probs
        .iter()
        .enumerate()
        .map(|(k, p)| format!("P(W={k}) = {p}"))
        .collect();
    print_value(
        format,
        &json!({ "probabilities": probs }),
        &csv,
        &pretty.join("\n"),
    );
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Transform(cmd) => {
            let format = resolve_format(cli.format, None)?;
            transform(cmd, format)
        }
        Command::Diff(DiffCmd::Table { seq: s, n }) => {
            let format = resolve_format(cli.format, None)?;
            let table = seq(&s)?.diff_table(n)?;
            let values = strings(&table.values);
            let csv: String = std::iter::once("j,value\n".to_string())
                .chain(values.iter().enumerate().map(|(j, v)| format!("{j},{v}\n")))
                .collect();
            let pretty: Vec<String> = values
                .iter()
                .enumerate()
                .map(|(j, v)| format!("M({n},{j}) = {v}"))
                .collect();
            print_value(
                format,
                &json!({ "n": n, "values": values }),
                &csv,
                &pretty.join("\n"),
            );
            Ok(Outcome::Ok)
        }
        Command::Appell(AppellCmd::Poly { family, n }) => {
            let format = resolve_format(cli.format, None)?;
            let spec: AppellSpec = family.parse()?;
            print_poly(format, &spec.poly(n)?);
            Ok(Outcome::Ok)
        }
        Command::Appell(AppellCmd::Verify { which, grid }) => {
            let cfg = if grid == "default" {
                Config::default()
            } else {
                Config::load(&PathBuf::from(grid))?
            };
            let format = resolve_format(cli.format, cfg.format)?;
            let ids: Vec<String> = registry::list_identities(Some(Module::Appell.name()))
                .into_iter()
                .filter(|e| e.label == which)
                .map(|e| e.id.to_string())
                .collect();
            if ids.is_empty() {
                return Err(Error::Config(format!(
                    "no Appell identity labelled `{which}`"
                )));
            }
            report(registry::verify(&cfg.ctx, &Selection::Ids(ids))?, format)
        }
        Command::Pmf(cmd) => {
            let format = resolve_format(cli.format, None)?;
            pmf(cmd, format)
        }
        Command::Verify(args) => verify(args, cli.format),
        Command::List { module } => {
            let format = resolve_format(cli.format, None)?;
            let entries = registry::list_identities(module.as_deref());
            let rows: Vec<Value> = entries
                .iter()
                .map(|e| json!({ "id": e.id, "label": e.label, "module": e.module.name(), "summary": e.summary, "gated": e.gate.is_some() }))
                .collect();
            let mut csv = String::from("id,label,module,summary\n");
            let mut pretty = Vec::new();
            for e in &entries {
                csv.push_str(&format!(
                    "{},{},{},\"{}\"\n",
                    e.id,
                    e.label,
                    e.module.name(),
                    e.summary.replace('"', "\"\"")
                ));
                pretty.push(format!(
                    "{:<10} {:<8} {:<12} {}",
                    e.id,
                    e.label,
                    e.module.name(),
                    e.summary
                ));
            }
            print_value(format, &json!(rows), &csv, &pretty.join("\n"));
            Ok(Outcome::Ok)
        }
    }
}

fn transform(cmd: TransformCmd, format: Format) -> Result<Outcome, Error> {
    match cmd {
        TransformCmd::Eval {
            seq: s,
            n,
            q,
            conjugate,
        } => {
            let q = rat("q", &q)?;
            let v = direct_transform(&seq(&s)?, n, &q, conjugate)?;
            print_value(
                format,
                &json!({ "n": n, "q": q.to_string(), "conjugate": conjugate, "value": v.to_string() }),
                &format!("n,q,conjugate,value\n{n},{q},{conjugate},{v}\n"),
                &v.to_string(),
            );
        }
        TransformCmd::Coeffs {
            seq: s,
            n,
            conjugate,
        } => {
            print_poly(format, &basis_representation(&seq(&s)?, n, conjugate)?);
        }
        TransformCmd::Gf {
            seq: s,
            n,
            q,
            mode,
            order,
        } => {
            let q = rat("q", &q)?;
            let mode = match mode {
                GfModeArg::Product => GfMode::Product,
                GfModeArg::Composed => GfMode::Composed,
            };
            let v = gf_transform(&seq(&s)?, n, &q, mode, order.unwrap_or(n))?;
            print_value(
                format,
                &json!({ "n": n, "q": q.to_string(), "value": v.to_string() }),
                &format!("n,q,value\n{n},{q},{v}\n"),
                &v.to_string(),
            );
        }
    }
    Ok(Outcome::Ok)
}

fn pmf(cmd: PmfCmd, format: Format) -> Result<Outcome, Error> {
    match cmd {
        PmfCmd::Binomial { n, s } => print_pmf(format, &binomial_pmf(n, &rat("s", &s)?)?),
        PmfCmd::Compose { n, x, y } => {
            print_pmf(format, &composed_law(n, &rat("x", &x)?, &rat("y", &y)?)?)
        }
        PmfCmd::Mc {
            n,
            x,
            y,
            trials,
            seed,
        } => {
            let rep = monte_carlo(
                n,
                &rat("x", &x)?,
                &rat("y", &y)?,
                trials,
                seed,
                ExecMode::Parallel,
            )?;
            let mut csv = String::from("k,count,empirical,exact,z\n");
            let mut pretty = vec![format!(
                "n={} x={} y={} trials={} seed={} shards={}",
                rep.n, rep.x, rep.y, rep.trials, rep.seed, rep.shards
            )];
            for k in 0..=rep.n {
                csv.push_str(&format!(
                    "{k},{},{},{},{}\n",
                    rep.counts[k], rep.empirical[k], rep.exact[k], rep.z_scores[k]
                ));
                pretty.push(format!(
                    "k={k} count={} empirical={:.5} exact={} z={:.3}",
                    rep.counts[k], rep.empirical[k], rep.exact[k], rep.z_scores[k]
                ));
            }
            pretty.push(if rep.flagged.is_empty() {
                format!("all bins within {} standard errors", rep.threshold)
            } else {
                format!("flagged bins: {:?}", rep.flagged)
            });
            let value = serde_json::to_value(&rep).expect("report serializes");
            print_value(format, &value, &csv, &pretty.join("\n"));
        }
    }
    Ok(Outcome::Ok)
}

fn parse_corruption(s: &str) -> Result<Corruption, Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::Config(format!("--corrupt expects `n,j,delta`, got `{s}`"));
    if parts.len() != 3 {
        return Err(bad());
    }
    Ok(Corruption {
        n: parts[0].parse().map_err(|_| bad())?,
        j: parts[1].parse().map_err(|_| bad())?,
        delta: parts[2].parse().map_err(|_| bad())?,
    })
}

fn verify(args: VerifyArgs, flag: Option<FormatArg>) -> Result<Outcome, Error> {
    let mut cfg = match &args.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let overrides = [
        ("n_max", &args.n_max),
        ("m_max", &args.m_max),
        ("r_max", &args.r_max),
        ("seed", &args.seed),
        ("mc_trials", &args.mc_trials),
        ("meixner", &args.meixner),
        ("exec", &args.exec),
    ];
    for (key, value) in overrides {
        if let Some(v) = value {
            cfg.set(key, v)?;
        }
    }
    if let Some(c) = &args.corrupt {
        cfg.ctx.corruption = Some(parse_corruption(c)?);
    }
    let format = resolve_format(flag, cfg.format)?;
    let selection = match (args.all, args.ids.is_empty(), &args.module) {
        (true, true, None) | (false, true, None) => Selection::All,
        (false, false, None) => Selection::Ids(args.ids.clone()),
        (false, true, Some(m)) => Selection::Module(m.clone()),
        _ => {
            return Err(Error::Config(
                "choose one of --all, --id or --module".into(),
            ))
        }
    };
    report(registry::verify(&cfg.ctx, &selection)?, format)
}

fn report(rep: VerificationReport, format: Format) -> Result<Outcome, Error> {
    let mut text = rep.render(format);
    if format == Format::Json {
        text.push('\n');
    }
    emit(&text);
    Ok(if rep.all_passed() {
        Outcome::Ok
    } else {
        Outcome::IdentityFailure
    })
}
