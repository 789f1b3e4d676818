//! Command-line surface: the exact identity ledger, numerical checks, and
//! the sampling application, each emitting a machine-readable artifact.
//!
//! Exit codes: 0 when every emitted check passes, 1 when a check fails,
//! 2 on an invalid configuration.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::certificate::Certificate;
use crate::christoffel::{check_kn_identity, check_kn_three_way};
use crate::error::{Error, Result};
use crate::factorization::{
    check_fejer_riesz, check_fn_constructions, check_fn_gn_alt, check_gn_build, check_ode, fn_roots,
    hypergeometric_check, FactorPair, ROOT_RESIDUAL_TOL, SIMPLE_ROOT_SEPARATION,
};
use crate::legendre::check_legendre_identities;
use crate::partial_fractions::{
    check_moment, check_orthogonality, check_pfd_minus, check_pfd_plus, check_support,
    leading_coefficient_checks, PartialFractionContext,
};
use crate::quadrature_verify::orthogonality_numeric;
use crate::ratpoly::{int, LaurentPoly};
use crate::sampling_ls::{
    empirical_gram, fit_least_squares, gram_deviation, predictions_csv, sample_arcsine, samples_csv,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Exact ledger of every identity, 1 <= n <= n-max.
    VerifyIdentities,
    /// Numerical Gram matrix of the weighted orthogonality.
    VerifyTheorem,
    /// Exact F_n and G_n with their certificates.
    Factor,
    /// Certified zeros of F_n.
    Roots,
    /// Exact contour moments.
    Moments,
    /// Empirical Gram matrix of the Q basis on arcsine samples.
    Gram,
    /// Arcsine samples and target values.
    Sample,
    /// Least-squares fit in the Q basis.
    Fit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Target function sampled by `sample` and fitted by `fit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// e^x
    Exp,
    /// 1 / (1 + 25 x²)
    Runge,
    /// |x|
    Abs,
}

impl Target {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            Target::Exp => x.exp(),
            Target::Runge => 1.0 / (1.0 + 25.0 * x * x),
            Target::Abs => x.abs(),
        }
    }
}

#[derive(Clone, Debug, Parser)]
#[command(name = "legortho", version, about = "Christoffel-weighted orthogonality of Legendre polynomials")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Degree.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Largest degree in the identity ledger.
    #[arg(long, default_value_t = 25)]
    pub n_max: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Number of samples.
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the artifact here instead of standard output.
    #[arg(long = "output")]
    pub output_path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = Target::Exp)]
    pub target: Target,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            n: 2,
            n_max: 25,
            tol: 1e-10,
            count: 1000,
            seed: 0,
            output_path: None,
            format: Format::Json,
            target: Target::Exp,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidArgument(format!("--tol must be positive, got {}", self.tol)));
        }
        let needs_count = matches!(self.command, Command::Gram | Command::Sample | Command::Fit);
        if needs_count && self.count == 0 {
            return Err(Error::InvalidArgument("--count must be at least 1".into()));
        }
        match self.command {
            Command::VerifyIdentities if self.n_max == 0 => {
                Err(Error::InvalidArgument("--n-max must be at least 1".into()))
            }
            Command::Roots | Command::Moments if self.n == 0 => {
                Err(Error::InvalidArgument("--n must be at least 1".into()))
            }
            Command::Fit if self.count < self.n + 1 => Err(Error::InvalidArgument(format!(
                "--count {} is below n + 1 = {}",
                self.count,
                self.n + 1
            ))),
            _ => Ok(()),
        }
    }
}

/// The emitted artifact and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub artifact: String,
}

impl RunOutcome {
    fn new(ok: bool, artifact: String) -> Self {
        RunOutcome {
            exit_code: if ok { 0 } else { 1 },
            artifact,
        }
    }
}

/// Exit code for an error raised by [`run`].
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) | Error::Domain(_) => 2,
        _ => 1,
    }
}

pub fn run(cfg: &RunConfig) -> Result<RunOutcome> {
    cfg.validate()?;
    match cfg.command {
        Command::VerifyIdentities => verify_identities(cfg),
        Command::VerifyTheorem => verify_theorem(cfg),
        Command::Factor => factor(cfg),
        Command::Roots => roots(cfg),
        Command::Moments => moments(cfg),
        Command::Gram => gram(cfg),
        Command::Sample => sample(cfg),
        Command::Fit => fit(cfg),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Every exact certificate for `1 <= n <= n_max`, grouped by identity.
pub fn identity_ledger(n_max: usize) -> Result<Vec<Certificate>> {
    let ns = 1..=n_max;
    let mut ledger = check_legendre_identities(n_max);
    let legendre_len = ledger.len();
    ledger.sort_by_key(|c| c.identity.clone());
    // keep identity order as emitted for n = 1 and n ascending within each
    let order: Vec<String> = check_legendre_identities(1).into_iter().map(|c| c.identity).collect();
    ledger.sort_by_key(|c| (order.iter().position(|o| *o == c.identity), c.n));
    debug_assert_eq!(ledger.len(), legendre_len);

    ledger.extend(ns.clone().map(check_kn_identity));
    ledger.extend(ns.clone().map(check_kn_three_way));
    ledger.extend(ns.clone().map(check_fejer_riesz));
    ledger.extend(ns.clone().map(check_fn_gn_alt));
    ledger.extend(ns.clone().map(check_ode));
    ledger.extend(ns.clone().map(check_fn_constructions));
    ledger.extend(ns.clone().map(hypergeometric_check));
    ledger.extend(ns.clone().map(check_gn_build));
    ledger.extend(ns.clone().map(|n| FactorPair::new(n).check_invariants()));

    let contexts: Vec<PartialFractionContext> = std::thread::scope(|s| {
        let handles: Vec<_> = ns.clone().map(|n| s.spawn(move || PartialFractionContext::new(n))).collect();
        handles.into_iter().map(|h| h.join().expect("context thread")).collect::<Result<_>>()
    })?;
    for ctx in &contexts {
        ledger.extend((0..=ctx.n).map(|k| check_pfd_plus(ctx, k)));
    }
    for ctx in &contexts {
        ledger.extend((0..=ctx.n).map(|k| check_pfd_minus(ctx, k)));
    }
    ledger.extend(contexts.iter().map(check_support));
    ledger.extend(contexts.iter().map(|c| leading_coefficient_checks(c).0));
    for ctx in &contexts {
        ledger.extend((0..=2 * ctx.n).map(|k| check_moment(ctx, k)));
    }
    let orth: Vec<Certificate> = std::thread::scope(|s| {
        let handles: Vec<_> = contexts.iter().map(|c| s.spawn(move || check_orthogonality(c))).collect();
        handles.into_iter().map(|h| h.join().expect("orthogonality thread")).collect()
    });
    ledger.extend(orth);
    Ok(ledger)
}

fn render_ledger(ledger: &[Certificate], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            for c in ledger {
                out.push_str(&serde_json::to_string(c)?);
                out.push('\n');
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["identity", "n", "k", "status", "residual_terms", "detail"])?;
            for c in ledger {
                w.write_record([
                    c.identity.clone(),
                    c.n.to_string(),
                    c.k.map(|k| k.to_string()).unwrap_or_default(),
                    if c.passed() { "pass".into() } else { "fail".into() },
                    c.residual_terms.to_string(),
                    c.detail.clone(),
                ])?;
            }
            out = csv_string(w)?;
        }
        Format::Text => {
            for c in ledger {
                let status = if c.passed() { "pass" } else { "FAIL" };
                let k = c.k.map(|k| format!(" k={k}")).unwrap_or_default();
                writeln!(out, "{status} {} n={}{k}: {}", c.identity, c.n, c.detail).unwrap();
            }
        }
    }
    Ok(out)
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn verify_identities(cfg: &RunConfig) -> Result<RunOutcome> {
    let ledger = identity_ledger(cfg.n_max)?;
    let ok = ledger.iter().all(Certificate::passed);
    Ok(RunOutcome::new(ok, render_ledger(&ledger, cfg.format)?))
}

fn verify_theorem(cfg: &RunConfig) -> Result<RunOutcome> {
    let report = orthogonality_numeric(cfg.n, cfg.tol)?;
    let ok = report.converged() && report.max_deviation() < cfg.tol;
    let artifact = match cfg.format {
        Format::Json => to_json(&report)?,
        Format::Csv => report.gram_csv()?,
        Format::Text => format!(
            "n = {}\npoints = {}\nmax off-diagonal = {:e}\nmax diagonal deviation = {:e}\nconverged = {}\n",
            report.n,
            report.points_used,
            report.max_offdiag,
            report.max_diag_dev,
            report.converged()
        ),
    };
    Ok(RunOutcome::new(ok, artifact))
}

#[derive(Serialize)]
struct Term {
    exponent: i64,
    coeff: String,
}

fn terms(p: &LaurentPoly) -> Vec<Term> {
    p.terms()
        .map(|(e, c)| Term {
            exponent: e,
            coeff: c.to_string(),
        })
        .collect()
}

fn factor(cfg: &RunConfig) -> Result<RunOutcome> {
    let n = cfg.n;
    let pair = FactorPair::new(n);
    let mut certs = vec![
        check_fn_constructions(n),
        check_gn_build(n),
        pair.check_invariants(),
        check_fejer_riesz(n),
    ];
    if n >= 1 {
        certs.extend([check_fn_gn_alt(n), check_ode(n), hypergeometric_check(n)]);
    }
    let ok = certs.iter().all(Certificate::passed);
    let artifact = match cfg.format {
        Format::Json => to_json(&json!({
            "n": n,
            "f": terms(&pair.f),
            "g": terms(&pair.g),
            "certificates": certs,
        }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["exponent", "f", "g"])?;
            for e in 0..=2 * n as i64 {
                w.write_record([e.to_string(), pair.f.coeff(e).to_string(), pair.g.coeff(e).to_string()])?;
            }
            csv_string(w)?
        }
        Format::Text => {
            let mut s = format!("F_{n}(z) = {}\nG_{n}(z) = {}\n", pair.f, pair.g);
            s.push_str(&render_ledger(&certs, Format::Text)?);
            s
        }
    };
    Ok(RunOutcome::new(ok, artifact))
}

fn roots(cfg: &RunConfig) -> Result<RunOutcome> {
    let report = match fn_roots(cfg.n) {
        Ok(r) => r,
        Err(Error::NonConvergence(msg)) => {
            return Ok(RunOutcome::new(false, format!("root polishing failed: {msg}\n")));
        }
        Err(e) => return Err(e),
    };
    let ok = report.certified(SIMPLE_ROOT_SEPARATION, ROOT_RESIDUAL_TOL);
    let artifact = match cfg.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["re", "im", "modulus", "residual"])?;
            for r in &report.roots {
                w.write_record([r.re, r.im, r.modulus, r.residual].map(|v| format!("{v:e}")))?;
            }
            csv_string(w)?
        }
        Format::Text => {
            let mut s = String::new();
            for r in &report.roots {
                writeln!(s, "{:+.15e} {:+.15e}i  |z| = {:.15}  residual {:.2e}", r.re, r.im, r.modulus, r.residual)
                    .unwrap();
            }
            writeln!(
                s,
                "max modulus {:.15}, margin {:.3e}, min separation {:.3e}",
                report.max_modulus(),
                report.margin(),
                report.min_separation()
            )
            .unwrap();
            s
        }
    };
    Ok(RunOutcome::new(ok, artifact))
}

fn moments(cfg: &RunConfig) -> Result<RunOutcome> {
    let ctx = PartialFractionContext::new(cfg.n)?;
    let values = ctx.moments()?;
    let ok = values[0] == int(2) && values[1..].iter().all(Zero::is_zero);
    let artifact = match cfg.format {
        Format::Json => {
            let others: Vec<String> = values[1..].iter().map(ToString::to_string).collect();
            let others = if others.iter().all(|o| *o == others[0]) {
                json!(others[0])
            } else {
                json!(others)
            };
            to_json(&json!({ "k0": values[0].to_string(), "others": others }))?
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["k", "moment"])?;
            for (k, v) in values.iter().enumerate() {
                w.write_record([k.to_string(), v.to_string()])?;
            }
            csv_string(w)?
        }
        Format::Text => values
            .iter()
            .enumerate()
            .map(|(k, v)| format!("k = {k}: {v}\n"))
            .collect(),
    };
    Ok(RunOutcome::new(ok, artifact))
}

fn gram(cfg: &RunConfig) -> Result<RunOutcome> {
    let batch = sample_arcsine(cfg.count, cfg.seed)?;
    let g = empirical_gram(cfg.n, &batch)?;
    let rows: Vec<Vec<f64>> = g.row_iter().map(|r| r.iter().copied().collect()).collect();
    let deviation = gram_deviation(&g);
    let artifact = match cfg.format {
        Format::Json => to_json(&json!({
            "n": cfg.n,
            "count": cfg.count,
            "seed": cfg.seed,
            "generator_name": batch.generator_name,
            "gram": rows,
            "deviation": deviation,
            "trace": g.trace(),
        }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.write_record(r.iter().map(|v| format!("{v:e}")))?;
            }
            csv_string(w)?
        }
        Format::Text => format!("n = {}, count = {}, seed = {}, ‖G - I‖ = {deviation:e}\n", cfg.n, cfg.count, cfg.seed),
    };
    Ok(RunOutcome::new(true, artifact))
}

fn sample(cfg: &RunConfig) -> Result<RunOutcome> {
    let batch = sample_arcsine(cfg.count, cfg.seed)?;
    let values: Vec<f64> = batch.points.iter().map(|&x| cfg.target.eval(x)).collect();
    let artifact = match cfg.format {
        Format::Json => to_json(&batch)?,
        Format::Csv => samples_csv(&batch, &values)?,
        Format::Text => batch.points.iter().map(|x| format!("{x:e}\n")).collect(),
    };
    Ok(RunOutcome::new(true, artifact))
}

fn fit(cfg: &RunConfig) -> Result<RunOutcome> {
    let batch = sample_arcsine(cfg.count, cfg.seed)?;
    let values: Vec<f64> = batch.points.iter().map(|&x| cfg.target.eval(x)).collect();
    let report = match fit_least_squares(cfg.n, &batch, &values) {
        Ok(r) => r,
        Err(Error::RankDeficient(msg)) => return Ok(RunOutcome::new(false, format!("rank-deficient fit: {msg}\n"))),
        Err(e) => return Err(e),
    };
    let artifact = match cfg.format {
        Format::Json => to_json(&report)?,
        Format::Csv => predictions_csv(&report, &batch.points)?,
        Format::Text => format!(
            "n = {}, samples = {}, residual rms = {:e}, ‖G - I‖ = {:e}, condition = {:e}\n",
            report.n, report.sample_count, report.residual_rms, report.gram_deviation, report.condition_estimate
        ),
    };
    Ok(RunOutcome::new(true, artifact))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(command: Command) -> RunConfig {
        RunConfig::new(command)
    }

    #[test]
    fn parses_long_flags() {
        let c = RunConfig::try_parse_from(["legortho", "verify-theorem", "--n", "10", "--tol", "1e-10"]).unwrap();
        assert_eq!(c.command, Command::VerifyTheorem);
        assert_eq!(c.n, 10);
        assert_eq!(c.seed, 0);
        assert_eq!(c.format, Format::Json);
        let c = RunConfig::try_parse_from(["legortho", "verify-identities", "--n-max", "3"]).unwrap();
        assert_eq!(c.n_max, 3);
        assert!(RunConfig::try_parse_from(["legortho", "bogus"]).is_err());
    }

    #[test]
    fn invalid_config_is_exit_two() {
        let mut c = cfg(Command::VerifyTheorem);
        c.tol = 0.0;
        let err = run(&c).unwrap_err();
        assert_eq!(exit_code_for(&err), 2);
        let mut c = cfg(Command::Sample);
        c.count = 0;
        assert_eq!(exit_code_for(&run(&c).unwrap_err()), 2);
        let mut c = cfg(Command::Moments);
        c.n = 0;
        assert_eq!(exit_code_for(&run(&c).unwrap_err()), 2);
    }

    #[test]
    fn moments_n1_artifact() {
        let mut c = cfg(Command::Moments);
        c.n = 1;
        let out = run(&c).unwrap();
        assert_eq!(out.exit_code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.artifact).unwrap();
        assert_eq!(v, json!({"k0": "2", "others": "0"}));
    }

    #[test]
    fn small_ledger_passes() {
        let mut c = cfg(Command::VerifyIdentities);
        c.n_max = 3;
        let out = run(&c).unwrap();
        assert_eq!(out.exit_code, 0);
        for line in out.artifact.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["status"], "pass", "{line}");
            for key in ["identity", "n", "k", "status", "detail"] {
                assert!(v.get(key).is_some());
            }
        }
        let first: serde_json::Value = serde_json::from_str(out.artifact.lines().next().unwrap()).unwrap();
        assert_eq!(first["identity"], "legendre_christoffel_darboux");
        let last: serde_json::Value = serde_json::from_str(out.artifact.lines().last().unwrap()).unwrap();
        assert_eq!(last["identity"], "exact_orthogonality");
    }

    #[test]
    fn every_command_runs() {
        for command in Command::value_variants() {
            for format in [Format::Json, Format::Csv, Format::Text] {
                let mut c = cfg(*command);
                c.n = 3;
                c.n_max = 2;
                c.count = 64;
                c.format = format;
                let out = run(&c).unwrap();
                assert_eq!(out.exit_code, 0, "{command:?} {format:?}");
                assert!(!out.artifact.is_empty());
            }
        }
    }

    #[test]
    fn sample_csv_header() {
        let mut c = cfg(Command::Sample);
        c.format = Format::Csv;
        c.count = 5;
        let out = run(&c).unwrap();
        assert!(out.artifact.starts_with("x,value\n"));
        let mut c = cfg(Command::Fit);
        c.format = Format::Csv;
        c.count = 20;
        assert!(run(&c).unwrap().artifact.starts_with("x,prediction\n"));
    }
}
