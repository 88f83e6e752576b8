use std::fmt::Write as _;
use std::fs;

use hurwitz_core::algebra::{to_canonical, Rational};
use hurwitz_core::partition::PartitionTuple;
use hurwitz_core::perm::oracle_hurwitz;
use hurwitz_core::quantum::{
    f_count, first_difference, quantum_curve_residual, wave_function_direct, wave_function_from_free_energies,
    BivariateSeries, CutJoinSource, HurwitzSource, TrSource,
};
use hurwitz_core::cutjoin::{cutjoin_hurwitz, HurwitzTable};
use hurwitz_core::spectral::{SpectralCurve, TrEngine};
use hurwitz_core::structure::{f_basis, omega_to_c};
use hurwitz_core::verify::{run_suite, stable_range, Suite, SuiteReport, VerifyConfig};
use num_traits::Zero;
use serde_json::json;

use crate::config::{Command, CurveName, Format, Pipeline, RunConfig, WavePipeline, ORACLE_BUDGET};
use crate::record::{to_sorted_json, Cache, RecordKey, ResultRecord};
use crate::{CliError, Output};

pub fn run(cfg: &RunConfig) -> Result<Output, CliError> {
    cfg.validate()?;
    let cache = cfg.cache_dir.as_deref().map(Cache::new);
    match &cfg.command {
        Command::Hurwitz { g, mu, pipeline } => hurwitz(*g, mu, *pipeline, cfg.format, cache.as_ref()),
        Command::Table { gmax, nmax, amax, out } => {
            let text = table(*gmax, *nmax, *amax, cfg.format, cache.as_ref())?;
            match out {
                Some(path) => {
                    fs::write(path, text)?;
                    Ok(Output::ok(String::new()))
                }
                None => Ok(Output::ok(text)),
            }
        }
        Command::Omega { g, n, curve } => omega(*g, *n, *curve, cfg.format, cache.as_ref()),
        Command::Wave { d, m, pipeline } => wave(*d, *m, *pipeline, cfg.format, cache.as_ref()),
        Command::Verify { suite, gmax, d, m } => verify(*suite, *gmax, *d, *m, cfg.format),
    }
}

fn engine_err(e: impl std::fmt::Display) -> CliError {
    CliError::Engine(e.to_string())
}

/// A monotone engine seeded from (and later written back to) the cache.
fn monotone_engine(cache: Option<&Cache>) -> Result<TrEngine, CliError> {
    let engine = TrEngine::new(SpectralCurve::monotone()).map_err(engine_err)?;
    if let Some(c) = cache {
        c.load_omegas(&engine);
    }
    Ok(engine)
}

fn hurwitz_value(p: Pipeline, g: u32, mu: &PartitionTuple, cache: Option<&Cache>) -> Result<Rational, CliError> {
    match p {
        Pipeline::Oracle => {
            let m = mu.transpositions(g);
            if m >= 0 {
                let sweep = f_count(mu.size(), m as u32);
                if sweep > ORACLE_BUDGET.into() {
                    return Err(CliError::CapExceeded(format!(
                        "the oracle would enumerate {sweep} factorisations (limit {ORACLE_BUDGET}); use cutjoin or tr"
                    )));
                }
            }
            Ok(oracle_hurwitz(g, mu))
        }
        Pipeline::Cutjoin => Ok(cutjoin_hurwitz(g, mu, &HurwitzTable::new())),
        Pipeline::Tr => {
            let chi = (2 * g as i64 - 2 + mu.len() as i64).max(0) as u32;
            let max_part = mu.parts().iter().copied().max().unwrap_or(1);
            let source = TrSource::from_engine(monotone_engine(cache)?, max_part, chi).map_err(engine_err)?;
            let v = source.hurwitz(g, mu).map_err(engine_err)?;
            if let Some(c) = cache {
                c.store_omegas(source.engine(), chi)?;
            }
            Ok(v)
        }
        Pipeline::All => unreachable!("expanded by the caller"),
    }
}

fn hurwitz(g: u32, mu: &[u32], pipeline: Pipeline, format: Format, cache: Option<&Cache>) -> Result<Output, CliError> {
    let mu = PartitionTuple::new(mu.to_vec()).sorted_desc();
    let mut records = Vec::new();
    for p in pipeline.expand() {
        let key = RecordKey::hurwitz(p.name(), g, mu.parts());
        let hit = cache.and_then(|c| c.get(&key));
        let rec = match hit {
            Some(r) => r.without_timestamp(),
            None => {
                let rec = ResultRecord::new(key, to_canonical(&hurwitz_value(p, g, &mu, cache)?));
                if let Some(c) = cache {
                    c.put(&rec)?;
                }
                rec
            }
        };
        records.push(rec);
    }
    let verdict = (records.len() > 1).then(|| {
        if records.windows(2).all(|w| w[0].value == w[1].value) {
            "AGREE"
        } else {
            "DISAGREE"
        }
    });
    let parts = mu.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>();
    let mut out = String::new();
    match format {
        Format::Json => {
            let mut doc = json!({ "records": records });
            if let Some(v) = verdict {
                doc["verdict"] = json!(v);
            }
            out = to_sorted_json(&doc);
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("pipeline,g,mu,value\n");
            for r in &records {
                writeln!(out, "{},{g},{},{}", r.key.pipeline, parts.join(" "), r.value).unwrap();
            }
        }
        Format::Plain => {
            for r in &records {
                writeln!(out, "{:<8} H(g={g}; {}) = {}", r.key.pipeline, parts.join(","), r.value).unwrap();
            }
            if let Some(v) = verdict {
                writeln!(out, "verdict: {v}").unwrap();
            }
        }
    }
    let failure = (verdict == Some("DISAGREE")).then(|| {
        let listing = records
            .iter()
            .map(|r| format!("{} = {}", r.key.pipeline, r.value))
            .collect::<Vec<_>>()
            .join(", ");
        CliError::PipelineDisagreement(format!("g={g} μ=({}): {listing}", parts.join(",")))
    });
    Ok(Output { stdout: out, failure })
}

fn table(gmax: u32, nmax: usize, amax: u32, format: Format, cache: Option<&Cache>) -> Result<String, CliError> {
    let max_chi = 2 * gmax + nmax as u32 - 2;
    let pairs: Vec<(u32, usize)> = stable_range(max_chi)
        .into_iter()
        .filter(|&(g, n)| g <= gmax && n <= nmax)
        .collect();
    let engine = monotone_engine(cache)?;
    engine.fill(max_chi).map_err(engine_err)?;
    if let Some(c) = cache {
        c.store_omegas(&engine, max_chi)?;
    }
    let mut tensors = Vec::new();
    for &(g, n) in &pairs {
        let w = engine.omega(g, n).map_err(engine_err)?;
        tensors.push(omega_to_c(&w).map_err(engine_err)?);
    }
    let fs: Vec<(u32, String)> = (0..=amax).map(|a| (a, f_basis(a).value().to_string())).collect();
    let mut out = String::new();
    match format {
        Format::Json => {
            let doc = json!({
                "engine": hurwitz_core::ENGINE_VERSION,
                "p": tensors.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
                "f": fs.iter().map(|(a, f)| json!({"a": a, "f": f})).collect::<Vec<_>>(),
            });
            out = to_sorted_json(&doc);
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("table,g,n,index,value\n");
            for t in &tensors {
                for (a, c) in t.symmetrized_monomials() {
                    let idx = a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                    writeln!(out, "P,{},{},{idx},{}", t.g(), t.n(), to_canonical(&c)).unwrap();
                }
            }
            for (a, f) in &fs {
                writeln!(out, "f,,,{a},\"{f}\"").unwrap();
            }
        }
        Format::Plain => {
            for t in &tensors {
                let terms = t
                    .symmetrized_monomials()
                    .into_iter()
                    .map(|(a, c)| format!("{} m{:?}", to_canonical(&c), a))
                    .collect::<Vec<_>>();
                writeln!(out, "P[{},{}] = {}", t.g(), t.n(), terms.join(" + ")).unwrap();
            }
            for (a, f) in &fs {
                writeln!(out, "f[{a}] = {f}").unwrap();
            }
        }
    }
    Ok(out)
}

fn omega(g: u32, n: usize, curve: CurveName, format: Format, cache: Option<&Cache>) -> Result<Output, CliError> {
    let engine = match curve {
        CurveName::Monotone => monotone_engine(cache)?,
        CurveName::Airy => {
            let e = TrEngine::new(SpectralCurve::airy()).map_err(engine_err)?;
            if let Some(c) = cache {
                c.load_omegas(&e);
            }
            e
        }
    };
    let w = engine.omega(g, n).map_err(engine_err)?;
    if let Some(c) = cache {
        c.store_omegas(&engine, 2 * g + n as u32 - 2)?;
    }
    let mut out = String::new();
    match format {
        Format::Json => {
            out = to_sorted_json(&w.to_json());
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("k,coefficient\n");
            for (k, c) in w.coeffs() {
                let idx = k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                writeln!(out, "{idx},{}", to_canonical(c)).unwrap();
            }
        }
        Format::Plain => {
            writeln!(out, "ω[{g},{n}] on the {} curve, in units of ∏ dzᵢ/(zᵢ - α)^kᵢ:", engine.curve().name()).unwrap();
            for (k, c) in w.coeffs() {
                writeln!(out, "  {:>12}  k = {k:?}", to_canonical(c)).unwrap();
            }
        }
    }
    Ok(Output::ok(out))
}

fn wave_grid(p: WavePipeline, d: u32, m: u32, cache: Option<&Cache>) -> Result<BivariateSeries, CliError> {
    match p {
        WavePipeline::Direct => Ok(wave_function_direct(d, m)),
        WavePipeline::Cutjoin => wave_function_from_free_energies(d, m, &CutJoinSource::new()).map_err(engine_err),
        WavePipeline::Tr => {
            let max_chi = m.saturating_sub(1);
            let source = TrSource::from_engine(monotone_engine(cache)?, d, max_chi).map_err(engine_err)?;
            if let Some(c) = cache {
                c.store_omegas(source.engine(), max_chi)?;
            }
            wave_function_from_free_energies(d, m, &source).map_err(engine_err)
        }
        WavePipeline::All => unreachable!("expanded by the caller"),
    }
}

fn wave(d: u32, m: u32, pipeline: WavePipeline, format: Format, cache: Option<&Cache>) -> Result<Output, CliError> {
    let mut grids = Vec::new();
    for p in pipeline.expand() {
        grids.push((p, wave_grid(p, d, m, cache)?));
    }
    let mut failure = None;
    for (p, z) in &grids {
        let r = quantum_curve_residual(z);
        let bad = r.cells().find(|(_, _, c)| !c.is_zero());
        if let Some((e, j, c)) = bad {
            failure = Some(CliError::CheckFailed(format!(
                "{} wave function: residual cell ({e},{j}) = {}",
                p.name(),
                to_canonical(&c)
            )));
        }
    }
    for pair in grids.windows(2) {
        if let Some((e, j, a, b)) = first_difference(&pair[0].1, &pair[1].1) {
            failure = Some(CliError::PipelineDisagreement(format!(
                "cell ({e},{j}): {} gives {a}, {} gives {b}",
                pair[0].0.name(),
                pair[1].0.name()
            )));
        }
    }
    let (p0, z) = &grids[0];
    let mut out = String::new();
    match format {
        Format::Json => {
            let cells: Vec<_> = z
                .cells()
                .map(|(dd, mm, c)| json!({"d": dd, "m": mm, "c": to_canonical(&c)}))
                .collect();
            let mut doc = json!({
                "D": d,
                "M": m,
                "pipelines": grids.iter().map(|(p, _)| p.name()).collect::<Vec<_>>(),
                "cells": cells,
                "residual_zero": failure.as_ref().map_or(true, |f| !matches!(f, CliError::CheckFailed(_))),
            });
            if grids.len() > 1 {
                doc["verdict"] = json!(if failure.is_none() { "AGREE" } else { "DISAGREE" });
            }
            out = to_sorted_json(&doc);
            out.push('\n');
        }
        Format::Csv => out = z.to_csv(),
        Format::Plain => {
            writeln!(out, "Z = Σ c(d,m) x^d ħ^(m-d), {} construction, d ≤ {d}, m ≤ {m}", p0.name()).unwrap();
            for (dd, mm, c) in z.cells().filter(|(_, _, c)| !c.is_zero()) {
                writeln!(out, "  c({dd},{mm}) = {}", to_canonical(&c)).unwrap();
            }
            match &failure {
                None if grids.len() > 1 => writeln!(out, "residual zero; constructions AGREE").unwrap(),
                None => writeln!(out, "residual zero").unwrap(),
                Some(f) => writeln!(out, "{f}").unwrap(),
            }
        }
    }
    Ok(Output { stdout: out, failure })
}

fn verify(suite: Suite, gmax: u32, d: u32, m: u32, format: Format) -> Result<Output, CliError> {
    let cfg = VerifyConfig {
        gmax,
        d,
        m,
        ..VerifyConfig::default()
    };
    let suites: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    // independent suites run side by side; reports are emitted in suite order
    let reports: Vec<SuiteReport> = std::thread::scope(|s| {
        let cfg = &cfg;
        let handles: Vec<_> = suites.iter().map(|&x| s.spawn(move || run_suite(x, cfg))).collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    let passed = reports.iter().all(SuiteReport::passed);
    let mut out = String::new();
    match format {
        Format::Json => {
            let doc = json!({
                "passed": passed,
                "suites": reports.iter().map(|r| json!({
                    "suite": r.suite.name(),
                    "checks": r.checks.iter().map(|c| json!({
                        "name": c.name,
                        "passed": c.passed,
                        "detail": c.detail,
                    })).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            out = to_sorted_json(&doc);
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("suite,check,passed,detail\n");
            for r in &reports {
                for c in &r.checks {
                    writeln!(out, "{},{},{},\"{}\"", r.suite.name(), c.name, c.passed, c.detail.replace('"', "'")).unwrap();
                }
            }
        }
        Format::Plain => {
            for r in &reports {
                out.push_str(&r.to_string());
            }
            writeln!(out, "{}", if passed { "all checks passed" } else { "some checks FAILED" }).unwrap();
        }
    }
    let failure = (!passed).then(|| {
        let first = reports
            .iter()
            .flat_map(|r| r.checks.iter().filter(|c| !c.passed).map(move |c| format!("{} {}: {}", r.suite.name(), c.name, c.detail)))
            .next()
            .unwrap_or_default();
        CliError::CheckFailed(first)
    });
    Ok(Output { stdout: out, failure })
}
