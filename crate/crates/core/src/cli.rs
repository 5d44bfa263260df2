//! Command-line front end. Output is NDJSON on stdout, a one-line summary on
//! stderr. Exit 0 when every check passes, 1 on a failed check, 2 on bad
//! input.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{AlgebraMap, TruncAlgebra};
use crate::campaign::{certificate_ok, run_campaign, CampaignConfig};
use crate::division::{diag_divide, disc_counterexample, reconstructs};
use crate::error::{Error, Result};
use crate::hepi::{check_strictness_condition, verify_hepi};
use crate::hochschild::{hh_bar, hh_complete_intersection, hh_koszul, FiniteAlgebra};
use crate::localization::{verify_localization, Localization, Witness};
use crate::matrix::run_matrix;
use crate::parse::{parse_algebra, parse_diagonal_series, parse_flavor, parse_ring, parse_series};
use crate::report::Report;
use crate::scalars::BanachRing;
use crate::series::{AlgebraFlavor, MultiSeries};

pub const DEFAULT_ORDER: u32 = 8;
pub const ORDER_ENV: &str = "BANALG_ORDER";

#[derive(Parser, Debug)]
#[command(name = "banalg", version, about = "Strictness certificates, homotopy epimorphisms and Hochschild homology on truncated series algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Truncation order N (default 8, or $BANALG_ORDER)
    #[arg(long)]
    order: Option<u32>,
    /// Ground ring: int, rat, padic:p, padic(p,prec), trivial:int, trivial:rat
    #[arg(long)]
    ring: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Division certificates: a random campaign, one given series, or the disc counterexample
    Certify {
        #[arg(long)]
        flavor: String,
        #[command(flatten)]
        common: Common,
        /// Largest total degree of the random samples (default N)
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coefficients are drawn from [-bound, bound]
        #[arg(long, default_value_t = 99)]
        bound: i64,
        /// Largest ψ value for formal campaigns without a weight table
        #[arg(long, default_value_t = 5)]
        weight_max: u64,
        /// Certify this series in y, z instead of random samples
        #[arg(long)]
        series: Option<String>,
        /// The disc counterexample y^n - z^n
        #[arg(long)]
        counterexample: Option<u32>,
    },
    /// Strictness of (C, x) for a one-variable flavor
    CheckStrictness {
        #[arg(long)]
        flavor: String,
        #[command(flatten)]
        common: Common,
    },
    /// Koszul criterion for the canonical map between two flavors
    VerifyHepi {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        nvars: usize,
        /// Verdict that counts as a pass
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        expect: bool,
    },
    /// Build a derived localization and run the selfproduct test
    Localize {
        #[arg(long, value_enum)]
        kind: LocKind,
        /// Base algebra, e.g. poly, tate:1, dagger(1/2)^0 for the ground ring
        #[arg(long)]
        base: String,
        /// Flavor of the adjoined variable (not used by adic)
        #[arg(long)]
        flavor: Option<String>,
        /// a for weierstrass/laurent; repeat for adic generators
        #[arg(long)]
        element: Vec<String>,
        /// g for rational
        #[arg(long)]
        g: Option<String>,
        /// f for rational
        #[arg(long)]
        f: Option<String>,
        /// Bézout witnesses a, b with a·f + b·g = 1
        #[arg(long)]
        witness_a: Option<String>,
        #[arg(long)]
        witness_b: Option<String>,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        expect: bool,
    },
    /// Hochschild homology ranks
    Hh {
        /// Algebra spec, e.g. poly^2 or poly/(x^2)
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value_t = HhModel::Koszul)]
        model: HhModel,
        /// Highest HH degree for quotients and the bar model
        #[arg(long, default_value_t = 4)]
        cutoff: usize,
        /// Also compare against this analytification (quotients only)
        #[arg(long)]
        analytic: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Acceptance criteria 1-8
    Matrix {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LocKind {
    Weierstrass,
    Laurent,
    Rational,
    Adic,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum HhModel {
    Koszul,
    Bar,
}

fn resolve_order(flag: Option<u32>) -> Result<u32> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(ORDER_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse {
            token: v.clone(),
            position: 0,
            message: format!("{ORDER_ENV} must be a non-negative integer"),
        }),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}

fn ring_or(common: &Common, default: &str) -> Result<BanachRing> {
    parse_ring(common.ring.as_deref().unwrap_or(default))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let started = Instant::now();
    match execute(cli.command) {
        Ok(mut report) => {
            report.wall_time_ms = started.elapsed().as_millis() as u64;
            if report.write(out).is_err() {
                return 1;
            }
            let _ = writeln!(
                err,
                "{}: {} result(s), {} failed, {} ms",
                report.command,
                report.results.len(),
                report.failed(),
                report.wall_time_ms
            );
            if report.pass() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn execute(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Certify { flavor, common, degree, trials, seed, bound, weight_max, series, counterexample } => {
            let order = resolve_order(common.order)?;
            let fl = parse_flavor(&flavor)?;
            let ring = ring_or(&common, "int")?;
            let inputs = json!({"flavor": flavor, "ring": ring.label(), "degree": degree, "trials": trials,
                                "bound": bound, "series": series, "counterexample": counterexample});
            let mut report = Report::new("certify", inputs, Some(seed), order);
            if let Some(n) = counterexample {
                let c = disc_counterexample(n, order.max(n))?;
                report.push(certificate_ok(&c), &c);
                return Ok(report);
            }
            let mut cfg = CampaignConfig::new(fl, ring.clone(), order);
            cfg.max_degree = degree.unwrap_or(order).min(order);
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.bound = bound;
            cfg.weight_max = weight_max;
            if let Some(s) = series {
                let f = parse_diagonal_series(&s, &ring, order)?;
                let c = crate::campaign::certify_trial(&f, &cfg, 0)?;
                let rec = reconstructs(&f, &diag_divide(&f)?)?;
                report.push(rec && certificate_ok(&c), &json!({"series": f.pretty_diagonal(), "certificate": c, "reconstructs": rec}));
                return Ok(report);
            }
            for t in run_campaign(&cfg)? {
                report.push(t.ok, &t);
            }
            Ok(report)
        }
        Command::CheckStrictness { flavor, common } => {
            let order = resolve_order(common.order)?;
            let fl = parse_flavor(&flavor)?;
            let ring = ring_or(&common, "int")?;
            let x = MultiSeries::var(&ring, 1, order, 0);
            let r = check_strictness_condition(&ring, &fl, order, &x)?;
            let mut report = Report::new("check-strictness", json!({"flavor": flavor, "ring": ring.label()}), None, order);
            report.push(r.holds, &r);
            Ok(report)
        }
        Command::VerifyHepi { source, target, common, nvars, expect } => {
            let order = resolve_order(common.order)?;
            let ring = ring_or(&common, "rat")?;
            let a = TruncAlgebra::uniform(&ring, &parse_flavor(&source)?, nvars, order)?;
            let b = TruncAlgebra::uniform(&ring, &parse_flavor(&target)?, nvars, order)?;
            let v = verify_hepi(&AlgebraMap::canonical(&a, &b)?)?;
            let inputs = json!({"source": source, "target": target, "ring": ring.label(), "nvars": nvars, "expect": expect});
            let mut report = Report::new("verify-hepi", inputs, None, order);
            report.push(v.verdict == expect, &v);
            Ok(report)
        }
        Command::Localize { kind, base, flavor, element, g, f, witness_a, witness_b, common, expect } => {
            let order = resolve_order(common.order)?;
            let ring = ring_or(&common, "rat")?;
            let spec = parse_algebra(&base, &ring, order)?;
            let a = spec.algebra;
            let n = a.nvars();
            let ser = |s: &str| parse_series(s, &ring, n, order);
            let need = |o: &Option<String>, what: &str| -> Result<MultiSeries> {
                match o {
                    Some(s) => ser(s),
                    None => Err(Error::Parse { token: format!("--{what}"), position: 0, message: format!("--{what} is required") }),
                }
            };
            let adjoined = || -> Result<AlgebraFlavor> {
                match &flavor {
                    Some(s) => parse_flavor(s),
                    None => Err(Error::Parse { token: "--flavor".into(), position: 0, message: "--flavor is required".into() }),
                }
            };
            let elements = element.iter().map(|s| ser(s)).collect::<Result<Vec<_>>>()?;
            let one = |v: &[MultiSeries]| -> Result<MultiSeries> {
                match v {
                    [e] => Ok(e.clone()),
                    _ => Err(Error::Parse { token: "--element".into(), position: 0, message: "exactly one --element expected".into() }),
                }
            };
            let start = Localization::over(&a);
            let loc = match kind {
                LocKind::Weierstrass => start.weierstrass_step(&adjoined()?, &one(&elements)?)?,
                LocKind::Laurent => start.laurent_step(&adjoined()?, &one(&elements)?)?,
                LocKind::Rational => {
                    let w = Witness { a: need(&witness_a, "witness-a")?, b: need(&witness_b, "witness-b")? };
                    start.rational_step(&adjoined()?, &need(&g, "g")?, &need(&f, "f")?, &w)?
                }
                LocKind::Adic => crate::localization::adic_completion(&a, &elements)?,
            };
            let rep = verify_localization(&loc)?;
            let inputs = json!({"kind": format!("{kind:?}").to_lowercase(), "base": base, "flavor": flavor, "element": element,
                                "g": g, "f": f, "witness_a": witness_a, "witness_b": witness_b, "ring": ring.label(), "expect": expect});
            let mut report = Report::new("localize", inputs, None, order);
            report.push(rep.verdict == expect, &rep);
            Ok(report)
        }
        Command::Hh { algebra, model, cutoff, analytic, common } => {
            let order = resolve_order(common.order)?;
            let ring = ring_or(&common, "rat")?;
            let spec = parse_algebra(&algebra, &ring, order)?;
            let inputs = json!({"algebra": algebra, "model": format!("{model:?}").to_lowercase(), "cutoff": cutoff,
                                "analytic": analytic, "ring": ring.label()});
            let mut report = Report::new("hh", inputs, None, order);
            match model {
                HhModel::Bar => {
                    let fa = FiniteAlgebra::from_spec(&spec.algebra, &spec.relations)?;
                    report.push(true, &hh_bar(&fa, cutoff)?);
                }
                HhModel::Koszul if spec.relations.is_empty() && analytic.is_none() => {
                    report.push(true, &hh_koszul(&spec.algebra)?);
                }
                HhModel::Koszul => {
                    let an = analytic.as_deref().map(parse_flavor).transpose()?;
                    let ci = hh_complete_intersection(&spec.algebra, &spec.relations, cutoff, an.as_ref())?;
                    report.push(ci.base_change != Some(false), &ci);
                }
            }
            Ok(report)
        }
        Command::Matrix { seed } => {
            let order = resolve_order(None)?;
            let mut report = Report::new("matrix", json!({"criteria": "1-8"}), Some(seed), order);
            for c in run_matrix(seed)? {
                report.push(c.pass, &c);
            }
            Ok(report)
        }
    }
}
