//! Subcommand implementations.

use std::time::Instant;

use chevgroup::relations::normalized_relations;
use chevgroup::{ChevError, ChevalleyGroup, GroupWord, Realization};
use decomp::{bruhat_bruteforce, DecompError};
use exactring::{RingError, RingSpec};
use prooflab::{
    builtin_catalog, builtin_families, centralizer_agreement, centralizer_check, run_catalog,
    run_entry_chain, short_root_squares, skipped_claims, ProofError, Report, Verdict,
    DEFAULT_SWEEP_CAP,
};
use rootsys::SystemType;
use serde_json::json;
use shacheck::{default_realization, sha_report, ShaError, ShaOptions, ShaVerdict, DEFAULT_CAP};
use thiserror::Error;

use crate::output::{exit_code, Emitter};
use crate::{Cli, Command};

const ALL_SYSTEMS: [SystemType; 4] = [
    SystemType::A1,
    SystemType::A2,
    SystemType::B2,
    SystemType::G2,
];
const DEFAULT_DECOMPOSE_CAP: u128 = 10_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Proof(#[from] ProofError),
    #[error(transparent)]
    Chev(#[from] ChevError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Sha(#[from] ShaError),
}

fn systems(cli: &Cli) -> Vec<SystemType> {
    cli.system.map_or_else(|| ALL_SYSTEMS.to_vec(), |s| vec![s])
}

fn require_system(cli: &Cli) -> Result<SystemType, CliError> {
    cli.system
        .ok_or_else(|| CliError::Usage("--system is required".into()))
}

fn require_prime(cli: &Cli) -> Result<u64, CliError> {
    cli.prime
        .ok_or_else(|| CliError::Usage("--prime is required".into()))
}

fn realization(cli: &Cli, system: SystemType) -> Result<Realization, CliError> {
    let r = cli
        .realization
        .unwrap_or_else(|| default_realization(system));
    if !r.supports(system) {
        return Err(CliError::Usage(format!(
            "realization {r} is not available for {system}"
        )));
    }
    Ok(r)
}

pub fn dispatch(cli: &Cli) -> Result<u8, CliError> {
    if cli.filter.is_some() && !matches!(cli.command, Command::Prooflab) {
        return Err(CliError::Usage("--filter applies to prooflab only".into()));
    }
    let out = Emitter {
        format: cli.output,
        timing: !cli.no_timing,
    };
    match &cli.command {
        Command::Relations { named } => relations(named.or(cli.system), &out),
        Command::Centralizer => centralizer(cli, &out),
        Command::Prooflab => prooflab(cli, &out),
        Command::Sha => sha(cli, &out),
        Command::Decompose { word } => decompose(cli, word, &out),
        Command::Eval { word } => eval(cli, word, &out),
    }
}

fn relations(system: Option<SystemType>, out: &Emitter) -> Result<u8, CliError> {
    let list = system.map_or_else(|| ALL_SYSTEMS.to_vec(), |s| vec![s]);
    for sys in list {
        let group = ChevalleyGroup::adjoint(sys);
        for shown in normalized_relations(sys) {
            let rel = group.commutator_relation(&shown.gamma, &shown.delta)?;
            let text = format!("{sys}  {rel}");
            let v = json!({
                "system": sys.to_string(),
                "gamma": rel.gamma.alias(),
                "delta": rel.delta.alias(),
                "relation": rel.to_string(),
            });
            out.object(v, &text, &[]);
        }
    }
    Ok(0)
}

fn centralizer(cli: &Cli, out: &Emitter) -> Result<u8, CliError> {
    let wanted = systems(cli);
    let cap = cli.cap.map_or(DEFAULT_SWEEP_CAP, u128::from);
    let mut reports = Vec::new();
    for fam in builtin_families()
        .into_iter()
        .filter(|f| wanted.contains(&f.system))
    {
        reports.push(centralizer_check(&fam)?);
        if let Some(p) = cli.prime {
            let start = Instant::now();
            let r = centralizer_agreement(&fam, p, cap).unwrap_or_else(|e| {
                Report::new(
                    &format!("{}-F{p}", fam.name),
                    Verdict::Skipped,
                    format!("not run: {e}"),
                    start,
                )
            });
            reports.push(r);
        }
    }
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports.iter().for_each(|r| out.report(r));
    Ok(exit_code(reports.iter().map(|r| r.verdict)))
}

fn prooflab(cli: &Cli, out: &Emitter) -> Result<u8, CliError> {
    let pattern = cli
        .filter
        .as_deref()
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| CliError::Usage(format!("bad --filter: {e}")))?;
    let keep = |name: &str| pattern.as_ref().map_or(true, |p| p.matches(name));
    let mut reports = Vec::new();
    for sys in systems(cli) {
        let records: Vec<_> = builtin_catalog(sys)
            .into_iter()
            .filter(|r| keep(&r.name))
            .collect();
        reports.extend(run_catalog(&records));
        if sys == SystemType::G2 {
            reports.extend(run_entry_chain()?.into_iter().filter(|r| keep(&r.name)));
        }
        if matches!(sys, SystemType::B2 | SystemType::G2) {
            let r = short_root_squares(sys)?;
            if keep(&r.name) {
                reports.push(r);
            }
        }
        reports.extend(skipped_claims(sys).into_iter().filter(|r| keep(&r.name)));
    }
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports.iter().for_each(|r| out.report(r));
    Ok(exit_code(reports.iter().map(|r| r.verdict)))
}

fn sha(cli: &Cli, out: &Emitter) -> Result<u8, CliError> {
    let system = require_system(cli)?;
    let p = require_prime(cli)?;
    let opts = ShaOptions {
        cap: cli.cap.map_or(DEFAULT_CAP, |c| c as usize),
        slow: cli.slow,
    };
    let r = sha_report(system, p, opts)?;
    let flag = r
        .flag
        .as_deref()
        .map(|f| format!("  {f}"))
        .unwrap_or_default();
    let time = if out.timing {
        format!("  [{:.2} s]", r.seconds)
    } else {
        String::new()
    };
    let text = format!(
        "{:<12} {}/F{}  order {}  classes {}  class-preserving {}  inner {}{flag}{time}",
        r.verdict.to_string(),
        r.system,
        r.p,
        r.group_order,
        r.class_count,
        r.cp_endo_count,
        r.inner_count
    );
    out.object(
        serde_json::to_value(&r).expect("serializable report"),
        &text,
        &["seconds"],
    );
    Ok(if r.verdict == ShaVerdict::Fail && r.flag.is_none() {
        1
    } else {
        0
    })
}

fn parse_word(system: SystemType, word: &str) -> Result<GroupWord, CliError> {
    Ok(GroupWord::parse(system, word)?)
}

fn decompose(cli: &Cli, word: &str, out: &Emitter) -> Result<u8, CliError> {
    let system = require_system(cli)?;
    let p = require_prime(cli)?;
    let w = parse_word(system, word)?;
    let group = ChevalleyGroup::new(system, realization(cli, system)?)?;
    let ring = RingSpec::modular(p)?;
    let m = group.evaluate_word(&w, &ring)?;
    let cap = cli.cap.map_or(DEFAULT_DECOMPOSE_CAP, u128::from);
    let f = bruhat_bruteforce(&group, &m, cap)?;
    let v = json!({
        "word": w.to_string(),
        "torus": f.torus.to_string(),
        "u": f.u.to_string(),
        "weyl": f.weyl.to_string(),
        "u_prime": f.u_prime.to_string(),
    });
    let text = format!(
        "torus: {}\nu: {}\nweyl: {}\nu': {}",
        f.torus, f.u, f.weyl, f.u_prime
    );
    out.object(v, &text, &[]);
    Ok(0)
}

fn eval(cli: &Cli, word: &str, out: &Emitter) -> Result<u8, CliError> {
    let system = require_system(cli)?;
    let w = parse_word(system, word)?;
    let group = ChevalleyGroup::new(system, realization(cli, system)?)?;
    let ring = match cli.prime {
        Some(p) => {
            if !w.variables().is_empty() {
                return Err(CliError::Usage(
                    "words evaluated mod p must not contain variables".into(),
                ));
            }
            RingSpec::modular(p)?
        }
        None => {
            let vars = w.variables();
            RingSpec::fraction(&vars.iter().map(String::as_str).collect::<Vec<_>>())?
        }
    };
    let m = group.evaluate_word(&w, &ring)?;
    let rows = m.render_rows();
    let text = rows
        .iter()
        .map(|r| format!("[{}]", r.join(", ")))
        .collect::<Vec<_>>()
        .join("\n");
    out.object(
        json!({"word": w.to_string(), "ring": ring.to_string(), "rows": rows}),
        &text,
        &[],
    );
    Ok(0)
}
